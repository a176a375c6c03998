//! Decorated planar rooted trees and forests.
//!
//! Vertices are decorated either by the grafting symbol σ or by a generator
//! name. Generators may only sit on leaves; every vertex with children is σ.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("invalid generator name {0:?}")]
    InvalidGenerator(String),
    #[error("generator label on internal vertex ({0})")]
    GeneratorOnInternalVertex(String),
    #[error("vertex {index} out of range for a forest with {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },
}

/// Vertex decoration: the grafting symbol σ or a generator from the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    Sigma,
    Gen(Arc<str>),
}

impl Decoration {
    /// A generator decoration. Names follow `[A-Za-z_][A-Za-z0-9_]*`, which
    /// keeps the reserved tokens `@` and `1` out.
    pub fn generator(name: &str) -> Result<Self, ForestError> {
        if is_identifier(name) {
            Ok(Decoration::Gen(Arc::from(name)))
        } else {
            Err(ForestError::InvalidGenerator(name.to_string()))
        }
    }

    pub fn is_sigma(&self) -> bool {
        matches!(self, Decoration::Sigma)
    }

    pub fn as_str(&self) -> &str {
        match self {
            Decoration::Sigma => "@",
            Decoration::Gen(name) => name,
        }
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    label: Decoration,
    children: Vec<Tree>,
}

impl Tree {
    /// One-vertex tree.
    pub fn leaf(label: Decoration) -> Self {
        Tree {
            label,
            children: Vec::new(),
        }
    }

    /// The single σ vertex, `B⁺(1)`.
    pub fn sigma() -> Self {
        Tree::leaf(Decoration::Sigma)
    }

    pub fn generator(name: &str) -> Result<Self, ForestError> {
        Decoration::generator(name).map(Tree::leaf)
    }

    /// Builds a tree from a root label and children, rejecting generator
    /// labels on a vertex that has children.
    pub fn new(label: Decoration, children: Vec<Tree>) -> Result<Self, ForestError> {
        if !children.is_empty() && !label.is_sigma() {
            return Err(ForestError::GeneratorOnInternalVertex(label.to_string()));
        }
        Ok(Tree { label, children })
    }

    pub fn label(&self) -> &Decoration {
        &self.label
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Tree::vertex_count).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        match self.label {
            Decoration::Gen(_) => 0,
            Decoration::Sigma => 1 + self.children.iter().map(Tree::depth).max().unwrap_or(0),
        }
    }

    /// For a σ-rooted tree, the forest `F̄` with `self = B⁺(F̄)`.
    pub fn unbplus(&self) -> Option<Forest> {
        self.label.is_sigma().then(|| Forest::from_trees(self.children.clone()))
    }

    /// Checks the leaves-only rule on every vertex.
    pub fn validate(&self) -> Result<(), ForestError> {
        if !self.children.is_empty() && !self.label.is_sigma() {
            return Err(ForestError::GeneratorOnInternalVertex(self.label.to_string()));
        }
        self.children.iter().try_for_each(Tree::validate)
    }

    fn all_sigma(&self) -> bool {
        self.label.is_sigma() && self.children.iter().all(Tree::all_sigma)
    }
}

/// An ordered sequence of trees; the empty sequence is the unit forest `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    pub fn one() -> Self {
        Forest { trees: Vec::new() }
    }

    pub fn from_trees(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    pub fn is_one(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn into_trees(self) -> Vec<Tree> {
        self.trees
    }

    /// Concatenation, the product of the algebra.
    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.trees.len() + other.trees.len());
        trees.extend_from_slice(&self.trees);
        trees.extend_from_slice(&other.trees);
        Forest { trees }
    }

    /// Grafts the forest onto a new σ root.
    pub fn bplus(&self) -> Tree {
        Tree {
            label: Decoration::Sigma,
            children: self.trees.clone(),
        }
    }

    pub fn breadth(&self) -> usize {
        self.trees.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(Tree::vertex_count).sum()
    }

    pub fn depth(&self) -> usize {
        self.trees.iter().map(Tree::depth).max().unwrap_or(0)
    }

    pub fn validate(&self) -> Result<(), ForestError> {
        self.trees.iter().try_for_each(Tree::validate)
    }

    /// True when no vertex carries a generator.
    pub fn is_undecorated(&self) -> bool {
        self.trees.iter().all(Tree::all_sigma)
    }

    /// Splits off the first tree: `T₁ · (T₂ ⋯ T_m)`.
    pub fn split_first(&self) -> Option<(&Tree, Forest)> {
        let (first, rest) = self.trees.split_first()?;
        Some((first, Forest::from_trees(rest.to_vec())))
    }

    /// The vertices in strictly increasing `≤h,l` order. The position in the
    /// returned sequence is the vertex's [`VertexRef`].
    pub fn hl_order(&self) -> Vec<Vertex> {
        Layout::new(self).vertices
    }

    /// `(Bₐ, Rₐ)`: the subforests induced by the vertices strictly above and
    /// strictly below `a` in the `≤h,l` order.
    pub fn split_at(&self, a: VertexRef) -> Result<(Forest, Forest), ForestError> {
        let layout = Layout::new(self);
        let count = layout.vertices.len();
        if a.0 >= count {
            return Err(ForestError::VertexOutOfRange { index: a.0, count });
        }
        Ok(layout.split(a.0))
    }

    /// `(Bₐ, Rₐ)` for every vertex, in `≤h,l` order.
    pub fn splits(&self) -> Vec<(Forest, Forest)> {
        let layout = Layout::new(self);
        (0..layout.vertices.len()).map(|a| layout.split(a)).collect()
    }
}

impl From<Tree> for Forest {
    fn from(tree: Tree) -> Self {
        Forest { trees: vec![tree] }
    }
}

impl FromIterator<Tree> for Forest {
    fn from_iter<I: IntoIterator<Item = Tree>>(iter: I) -> Self {
        Forest {
            trees: iter.into_iter().collect(),
        }
    }
}

/// Position of a vertex in the `≤h,l` order of its forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexRef,
    pub label: Decoration,
    pub parent: Option<VertexRef>,
    /// Left-to-right preorder position in the planar embedding.
    pub planar: usize,
}

/// Flattened forest indexed by `≤h,l` position.
struct Layout {
    vertices: Vec<Vertex>,
    /// Children of each vertex in planar (left-to-right) order.
    children: Vec<Vec<usize>>,
}

impl Layout {
    fn new(forest: &Forest) -> Self {
        let n = forest.vertex_count();
        // ≤h,l: trees right to left; within a tree the root comes first and
        // its subtrees follow right to left.
        let mut layout = Layout {
            vertices: Vec::with_capacity(n),
            children: Vec::with_capacity(n),
        };
        let mut offset = n;
        for tree in forest.trees.iter().rev() {
            offset -= tree.vertex_count();
            layout.push_tree(tree, None, offset);
        }
        layout
    }

    fn push_tree(&mut self, tree: &Tree, parent: Option<usize>, planar: usize) -> usize {
        let id = self.vertices.len();
        self.vertices.push(Vertex {
            id: VertexRef(id),
            label: tree.label.clone(),
            parent: parent.map(VertexRef),
            planar,
        });
        self.children.push(Vec::new());

        let mut starts = Vec::with_capacity(tree.children.len());
        let mut next = planar + 1;
        for child in &tree.children {
            starts.push(next);
            next += child.vertex_count();
        }
        let mut kids = Vec::with_capacity(tree.children.len());
        for (child, &start) in tree.children.iter().zip(&starts).rev() {
            kids.push(self.push_tree(child, Some(id), start));
        }
        kids.reverse();
        self.children[id] = kids;
        id
    }

    fn split(&self, a: usize) -> (Forest, Forest) {
        let n = self.vertices.len();
        let above: Vec<bool> = (0..n).map(|b| b > a).collect();
        let below: Vec<bool> = (0..n).map(|b| b < a).collect();
        (self.induced(&above), self.induced(&below))
    }

    /// Subforest induced by a vertex subset; components are ordered by the
    /// planar position of their roots.
    fn induced(&self, keep: &[bool]) -> Forest {
        let mut roots: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| keep[v] && self.vertices[v].parent.is_none_or(|p| !keep[p.0]))
            .collect();
        roots.sort_by_key(|&v| self.vertices[v].planar);
        roots.into_iter().map(|v| self.build(v, keep)).collect()
    }

    fn build(&self, v: usize, keep: &[bool]) -> Tree {
        let children = self.children[v]
            .iter()
            .filter(|&&c| keep[c])
            .map(|&c| self.build(c, keep))
            .collect();
        Tree {
            label: self.vertices[v].label.clone(),
            children,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(name: &str) -> Tree {
        Tree::generator(name).unwrap()
    }

    fn graft(trees: Vec<Tree>) -> Tree {
        Forest::from_trees(trees).bplus()
    }

    /// `@[y @[x]]`
    fn first_example() -> Forest {
        graft(vec![x("y"), graft(vec![x("x")])]).into()
    }

    /// `@[@ x] @[y @[z]] @[w]`
    fn second_example() -> Forest {
        Forest::from_trees(vec![
            graft(vec![Tree::sigma(), x("x")]),
            graft(vec![x("y"), graft(vec![x("z")])]),
            graft(vec![x("w")]),
        ])
    }

    fn labels(order: &[Vertex]) -> Vec<&str> {
        order.iter().map(|v| v.label.as_str()).collect()
    }

    #[test]
    fn reserved_tokens_rejected() {
        assert!(Decoration::generator("1").is_err());
        assert!(Decoration::generator("@").is_err());
        assert!(Decoration::generator("").is_err());
        assert!(Decoration::generator("x_1").is_ok());
    }

    #[test]
    fn internal_generator_rejected() {
        let err = Tree::new(Decoration::generator("x").unwrap(), vec![Tree::sigma()]);
        assert!(matches!(err, Err(ForestError::GeneratorOnInternalVertex(_))));
    }

    #[test]
    fn bplus_examples() {
        assert_eq!(Forest::one().bplus(), Tree::sigma());
        let t = Forest::from(x("x")).bplus();
        assert_eq!(t.children(), &[x("x")]);
        let f = Forest::from_trees(vec![t.clone(), x("x")]);
        let g = f.bplus();
        assert_eq!(g.unbplus().unwrap(), f);
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn depth_examples() {
        assert_eq!(Forest::one().depth(), 0);
        assert_eq!(Forest::from(x("x")).depth(), 0);
        assert_eq!(Forest::from(Tree::sigma()).depth(), 1);
        assert_eq!(Forest::from(graft(vec![x("x")])).depth(), 1);
        assert_eq!(Forest::from(graft(vec![Tree::sigma()])).depth(), 2);
        assert_eq!(Forest::from(graft(vec![Tree::sigma(), x("x")])).depth(), 2);
    }

    #[test]
    fn breadth_and_counts() {
        assert_eq!(Forest::one().breadth(), 0);
        assert_eq!(Forest::from_trees(vec![x("x"), Tree::sigma(), x("y")]).breadth(), 3);
        assert_eq!(Forest::one().vertex_count(), 0);
        assert_eq!(first_example().vertex_count(), 4);
        assert_eq!(second_example().vertex_count(), 9);
    }

    #[test]
    fn concat_unit_and_order() {
        let f = Forest::from(x("x"));
        assert_eq!(Forest::one().concat(&f), f);
        let xs = f.concat(&Tree::sigma().into());
        assert_eq!(xs.trees(), &[x("x"), Tree::sigma()]);
        assert_eq!(xs.concat(&x("y").into()).breadth(), 3);
    }

    #[test]
    fn hl_order_first_example() {
        let order = first_example().hl_order();
        assert_eq!(labels(&order), ["@", "@", "x", "y"]);
        assert_eq!(order[0].parent, None);
        assert_eq!(order[1].parent, Some(VertexRef(0)));
        assert_eq!(order[2].parent, Some(VertexRef(1)));
    }

    #[test]
    fn hl_order_second_example() {
        let order = second_example().hl_order();
        assert_eq!(labels(&order), ["@", "w", "@", "@", "z", "y", "@", "x", "@"]);
        // root of T₃, root of T₂, root of T₁
        assert_eq!(order[0].planar, 7);
        assert_eq!(order[2].planar, 3);
        assert_eq!(order[6].planar, 0);
        assert_eq!(order[8].parent, Some(VertexRef(6)));
    }

    #[test]
    fn split_first_example() {
        let f = first_example();
        let (b, r) = f.split_at(VertexRef(0)).unwrap();
        assert_eq!(b, Forest::from_trees(vec![x("y"), graft(vec![x("x")])]));
        assert!(r.is_one());
        let (b, r) = f.split_at(VertexRef(1)).unwrap();
        assert_eq!(b, Forest::from_trees(vec![x("y"), x("x")]));
        assert_eq!(r, Tree::sigma().into());
    }

    #[test]
    fn split_second_example() {
        let f = second_example();
        let t1 = graft(vec![Tree::sigma(), x("x")]);
        // root of T₂
        let (b, r) = f.split_at(VertexRef(2)).unwrap();
        assert_eq!(b, Forest::from_trees(vec![t1.clone(), x("y"), graft(vec![x("z")])]));
        assert_eq!(r, graft(vec![x("w")]).into());
        // root of T₁
        let (b, r) = f.split_at(VertexRef(6)).unwrap();
        assert_eq!(b, Forest::from_trees(vec![Tree::sigma(), x("x")]));
        assert_eq!(
            r,
            Forest::from_trees(vec![graft(vec![x("y"), graft(vec![x("z")])]), graft(vec![x("w")])])
        );
    }

    #[test]
    fn split_singleton_and_range() {
        let f = Forest::from(x("x"));
        assert_eq!(f.split_at(VertexRef(0)).unwrap(), (Forest::one(), Forest::one()));
        assert_eq!(
            f.split_at(VertexRef(1)),
            Err(ForestError::VertexOutOfRange { index: 1, count: 1 })
        );
        assert!(Forest::one().hl_order().is_empty());
    }
}
