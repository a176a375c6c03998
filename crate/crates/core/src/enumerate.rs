//! Exhaustive generation of decorated planar rooted forests by vertex count.
//!
//! Generation order: the first tree's size runs from `n` down to 1; a
//! one-vertex tree is `@` followed by the generators in alphabet order; a
//! larger tree is `@` grafted on each smaller forest in generation order.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::forest::{Decoration, Forest, ForestError, Tree};

/// A sorted, deduplicated set of generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Alphabet {
    labels: Arc<[Decoration]>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self, ForestError> {
        let mut labels = names
            .into_iter()
            .map(|n| Decoration::generator(n.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        labels.sort();
        labels.dedup();
        Ok(Alphabet { labels: labels.into() })
    }

    /// The empty alphabet: undecorated forests only.
    pub fn empty() -> Self {
        Alphabet::default()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(Decoration::as_str)
    }
}

type Stream = Box<dyn Iterator<Item = Forest> + Send>;

/// Lazily yields every forest with exactly `n` vertices, each once.
pub fn enumerate(n: usize, alphabet: &Alphabet) -> impl Iterator<Item = Forest> + Send {
    forests(n, alphabet.labels.clone())
}

/// All forests with at most `max` vertices, by increasing vertex count.
pub fn enumerate_up_to(max: usize, alphabet: &Alphabet) -> impl Iterator<Item = Forest> + Send {
    let labels = alphabet.labels.clone();
    (0..=max).flat_map(move |n| forests(n, labels.clone()))
}

fn forests(n: usize, labels: Arc<[Decoration]>) -> Stream {
    if n == 0 {
        return Box::new(std::iter::once(Forest::one()));
    }
    Box::new((1..=n).rev().flat_map(move |k| {
        let labels = labels.clone();
        trees(k, labels.clone()).flat_map(move |first| {
            forests(n - k, labels.clone()).map(move |rest| Forest::from(first.clone()).concat(&rest))
        })
    }))
}

fn trees(k: usize, labels: Arc<[Decoration]>) -> Box<dyn Iterator<Item = Tree> + Send> {
    if k == 1 {
        let leaves: Vec<Tree> = std::iter::once(Decoration::Sigma)
            .chain(labels.iter().cloned())
            .map(Tree::leaf)
            .collect();
        Box::new(leaves.into_iter())
    } else {
        Box::new(forests(k - 1, labels).map(|f| f.bplus()))
    }
}

/// Number of forests with `n` vertices over an alphabet of the given size:
/// `f(0) = 1`, `f(n) = Σ_{k=1}^{n} t(k) f(n−k)` with `t(1) = size + 1` and
/// `t(k) = f(k−1)` otherwise.
pub fn count(n: usize, alphabet_size: usize) -> BigUint {
    counts(n, alphabet_size).pop().expect("nonempty")
}

/// `count(0..=n, alphabet_size)`.
pub fn counts(n: usize, alphabet_size: usize) -> Vec<BigUint> {
    let mut f: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        let mut total = BigUint::zero();
        for k in 1..=m {
            let trees = if k == 1 {
                BigUint::from(alphabet_size + 1)
            } else {
                f[k - 1].clone()
            };
            total += trees * &f[m - k];
        }
        f.push(total);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn x() -> Alphabet {
        Alphabet::new(["x"]).unwrap()
    }

    fn listing(n: usize, alphabet: &Alphabet) -> Vec<String> {
        enumerate(n, alphabet).map(|f| f.to_string()).collect()
    }

    #[test]
    fn small_listings() {
        assert_eq!(listing(0, &x()), ["1"]);
        assert_eq!(listing(1, &x()), ["@", "x"]);
        assert_eq!(listing(2, &x()), ["@[@]", "@[x]", "@ @", "@ x", "x @", "x x"]);
    }

    #[test]
    fn catalan_counts() {
        let expected: Vec<BigUint> = [1u32, 1, 2, 5, 14, 42].map(BigUint::from).to_vec();
        assert_eq!(counts(5, 0), expected);
        assert_eq!(count(2, 1), BigUint::from(6u32));
        assert_eq!(count(3, 1), BigUint::from(22u32));
    }

    #[test]
    fn counts_match_enumeration() {
        for size in 0..=2 {
            let alphabet = Alphabet::new(["a", "b"].iter().take(size)).unwrap();
            for n in 0..=7 {
                let listed = enumerate(n, &alphabet).count();
                assert_eq!(BigUint::from(listed), count(n, size), "n={n} |X|={size}");
            }
        }
    }

    #[test]
    fn distinct_and_valid() {
        let alphabet = Alphabet::new(["x", "y"]).unwrap();
        let mut seen = HashSet::new();
        for forest in enumerate_up_to(5, &alphabet) {
            forest.validate().unwrap();
            assert!(seen.insert(forest.to_string()), "duplicate {forest}");
        }
    }

    #[test]
    fn alphabet_normalized() {
        let a = Alphabet::new(["y", "x", "y"]).unwrap();
        assert_eq!(a.names().collect::<Vec<_>>(), ["x", "y"]);
        assert!(Alphabet::new(["1"]).is_err());
        assert!(Alphabet::empty().is_empty());
    }
}
