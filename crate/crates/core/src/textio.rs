//! Text and JSON formats for forests, linear combinations and tensors.
//!
//! Text grammar:
//!
//! ```text
//! forest  := "1" | tree (WS tree)*
//! tree    := label [ "[" (tree (WS tree)*)? "]" ]
//! label   := "@" | IDENT
//! lincomb := "0" | ["-"] term (("+" | "-") term)*
//! term    := [coeff "*"] forest
//! tensor  := "0" | ["-"] pair (("+" | "-") pair)*
//! pair    := [coeff "*"] forest "(x)" forest
//! ```
//!
//! `@` is σ. Canonical output lists terms in descending order of
//! (vertex count, canonical string); tensor terms compare the left leg
//! first, then the right.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forest::{Decoration, Forest, ForestError, Tree};
use crate::freemodule::{Combination, LinComb, Rational, Tensor2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("bad coefficient {0:?}")]
    Coefficient(String),
    #[error(transparent)]
    Forest(#[from] ForestError),
}

pub fn parse_forest(src: &str) -> Result<Forest, ParseError> {
    let mut p = Parser::new(src);
    let forest = p.forest()?;
    p.end()?;
    Ok(forest)
}

pub fn parse_lincomb(src: &str) -> Result<LinComb, ParseError> {
    let mut p = Parser::new(src);
    let out = p.sum(|p| p.forest())?;
    p.end()?;
    Ok(out)
}

pub fn parse_tensor2(src: &str) -> Result<Tensor2, ParseError> {
    let mut p = Parser::new(src);
    let out = p.sum(|p| {
        let left = p.forest()?;
        p.expect_str("(x)")?;
        let right = p.forest()?;
        Ok((left, right))
    })?;
    p.end()?;
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            _src: src,
        }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            column: pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_nonws(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek_nonws() {
            None => Ok(()),
            Some(c) => Err(self.error_at(self.pos, format!("unexpected {c:?}"))),
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<(), ParseError> {
        self.skip_ws();
        let start = self.pos;
        for expected in s.chars() {
            if self.peek() != Some(expected) {
                return Err(self.error_at(start, format!("expected {s:?}")));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn starts_label(c: char) -> bool {
        c == '@' || c == '_' || c.is_ascii_alphabetic()
    }

    fn forest(&mut self) -> Result<Forest, ParseError> {
        match self.peek_nonws() {
            Some('1') => {
                let start = self.pos;
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(self.error_at(start, "labels cannot start with a digit"));
                }
                Ok(Forest::one())
            }
            Some(c) if Self::starts_label(c) => {
                let mut trees = vec![self.tree()?];
                while self.peek_nonws().is_some_and(Self::starts_label) {
                    trees.push(self.tree()?);
                }
                Ok(Forest::from_trees(trees))
            }
            Some(c) => Err(self.error_at(self.pos, format!("expected a forest, found {c:?}"))),
            None => Err(self.error_at(self.pos, "expected a forest, found end of input")),
        }
    }

    fn tree(&mut self) -> Result<Tree, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let label = self.label()?;
        if self.peek_nonws() != Some('[') {
            return Ok(Tree::leaf(label));
        }
        self.pos += 1;
        let mut children = Vec::new();
        loop {
            match self.peek_nonws() {
                Some(']') => {
                    self.pos += 1;
                    break;
                }
                Some(c) if Self::starts_label(c) => children.push(self.tree()?),
                Some(c) => return Err(self.error_at(self.pos, format!("expected a tree or ']', found {c:?}"))),
                None => return Err(self.error_at(self.pos, "unclosed '['")),
            }
        }
        Tree::new(label, children).map_err(|e| self.error_at(start, e.to_string()))
    }

    fn label(&mut self) -> Result<Decoration, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some('@') => {
                self.pos += 1;
                Ok(Decoration::Sigma)
            }
            Some(c) if c == '_' || c.is_ascii_alphabetic() => {
                while self.peek().is_some_and(|c| c == '_' || c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Decoration::generator(&name).map_err(|e| self.error_at(start, e.to_string()))
            }
            _ => Err(self.error_at(start, "expected a label")),
        }
    }

    /// An optional `coeff *` prefix. A bare `1` is left for the forest parser.
    fn coefficient(&mut self) -> Result<Option<Rational>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.peek().is_some_and(|c| c.is_ascii_digit()) {
                p.pos += 1;
            }
            p.chars[s..p.pos].iter().collect::<String>()
        };
        let numer = digits(self);
        if numer.is_empty() {
            return Ok(None);
        }
        let mut denom = String::from("1");
        if self.peek() == Some('/') {
            self.pos += 1;
            denom = digits(self);
            if denom.is_empty() {
                return Err(self.error_at(self.pos, "expected a denominator"));
            }
        }
        if self.peek_nonws() != Some('*') {
            // Not a coefficient; rewind so `1` can be read as the unit forest.
            self.pos = start;
            return Ok(None);
        }
        self.pos += 1;
        let n: BigInt = numer.parse().expect("digits");
        let d: BigInt = denom.parse().expect("digits");
        if d.is_zero() {
            return Err(self.error_at(start, "zero denominator"));
        }
        Ok(Some(Rational::new(n, d)))
    }

    fn sum<B, F>(&mut self, mut term: F) -> Result<Combination<B>, ParseError>
    where
        B: Ord + Clone,
        F: FnMut(&mut Self) -> Result<B, ParseError>,
    {
        let mut out = Combination::zero();
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('0') {
            self.pos += 1;
            if self.peek_nonws().is_none() {
                return Ok(out);
            }
            self.pos = start;
        }
        let mut negative = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negative = true;
        }
        loop {
            let coeff = self.coefficient()?.unwrap_or_else(Rational::one);
            let basis = term(self)?;
            out.add_term(if negative { -coeff } else { coeff }, basis);
            match self.peek_nonws() {
                Some('+') => negative = false,
                Some('-') => negative = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(out)
    }
}

pub fn serialize_tree(tree: &Tree) -> String {
    let mut out = String::new();
    write_tree(tree, &mut out);
    out
}

fn write_tree(tree: &Tree, out: &mut String) {
    out.push_str(tree.label().as_str());
    if !tree.is_leaf() {
        out.push('[');
        for (i, child) in tree.children().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write_tree(child, out);
        }
        out.push(']');
    }
}

pub fn serialize_forest(forest: &Forest) -> String {
    if forest.is_one() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (i, tree) in forest.trees().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write_tree(tree, &mut out);
    }
    out
}

/// Sort key placing larger forests first.
fn forest_key(f: &Forest) -> Reverse<(usize, String)> {
    Reverse((f.vertex_count(), serialize_forest(f)))
}

fn write_sum(terms: Vec<(&Rational, String)>, out: &mut String) {
    if terms.is_empty() {
        out.push('0');
        return;
    }
    for (i, (coeff, body)) in terms.into_iter().enumerate() {
        let negative = coeff.is_negative();
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push_str("- "),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let magnitude = coeff.abs();
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
            out.push_str(" * ");
        }
        out.push_str(&body);
    }
}

pub fn serialize_lincomb(v: &LinComb) -> String {
    let mut terms: Vec<_> = v.iter().map(|(f, c)| (forest_key(f), c)).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = String::new();
    write_sum(terms.into_iter().map(|(Reverse((_, s)), c)| (c, s)).collect(), &mut out);
    out
}

pub fn serialize_tensor2(t: &Tensor2) -> String {
    let mut terms: Vec<_> = t
        .iter()
        .map(|((l, r), c)| ((forest_key(l), forest_key(r)), c))
        .collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = String::new();
    write_sum(
        terms
            .into_iter()
            .map(|((Reverse((_, l)), Reverse((_, r))), c)| (c, format!("{l} (x) {r}")))
            .collect(),
        &mut out,
    );
    out
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_tree(self))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_forest(self))
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_lincomb(self))
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_tensor2(self))
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeJson {
    label: String,
    children: Vec<TreeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinTermJson {
    coeff: String,
    forest: Vec<TreeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinCombJson {
    terms: Vec<LinTermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorTermJson {
    coeff: String,
    left: Vec<TreeJson>,
    right: Vec<TreeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorJson {
    terms: Vec<TensorTermJson>,
}

fn tree_to_json(tree: &Tree) -> TreeJson {
    TreeJson {
        label: tree.label().as_str().to_string(),
        children: tree.children().iter().map(tree_to_json).collect(),
    }
}

fn forest_to_json(forest: &Forest) -> Vec<TreeJson> {
    forest.trees().iter().map(tree_to_json).collect()
}

fn tree_from_json(json: TreeJson) -> Result<Tree, ForestError> {
    let label = match json.label.as_str() {
        "@" => Decoration::Sigma,
        name => Decoration::generator(name)?,
    };
    let children = json
        .children
        .into_iter()
        .map(tree_from_json)
        .collect::<Result<_, _>>()?;
    Tree::new(label, children)
}

fn forest_from_json(json: Vec<TreeJson>) -> Result<Forest, ForestError> {
    json.into_iter()
        .map(tree_from_json)
        .collect::<Result<Vec<_>, _>>()
        .map(Forest::from_trees)
}

/// Coefficients are always written as `p/q`.
fn coeff_to_json(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn coeff_from_json(s: &str) -> Result<Rational, JsonError> {
    let bad = || JsonError::Coefficient(s.to_string());
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn lincomb_order(v: &LinComb) -> Vec<(&Forest, &Rational)> {
    let mut terms: Vec<_> = v.iter().collect();
    terms.sort_by_cached_key(|(f, _)| forest_key(f));
    terms
}

pub fn forest_to_json_string(forest: &Forest) -> String {
    serde_json::to_string(&forest_to_json(forest)).expect("serializable")
}

pub fn forest_from_json_str(s: &str) -> Result<Forest, JsonError> {
    Ok(forest_from_json(serde_json::from_str(s)?)?)
}

pub fn lincomb_to_json_string(v: &LinComb) -> String {
    let terms = lincomb_order(v)
        .into_iter()
        .map(|(f, c)| LinTermJson {
            coeff: coeff_to_json(c),
            forest: forest_to_json(f),
        })
        .collect();
    serde_json::to_string(&LinCombJson { terms }).expect("serializable")
}

pub fn lincomb_from_json_str(s: &str) -> Result<LinComb, JsonError> {
    let json: LinCombJson = serde_json::from_str(s)?;
    let mut out = LinComb::zero();
    for term in json.terms {
        out.add_term(coeff_from_json(&term.coeff)?, forest_from_json(term.forest)?);
    }
    Ok(out)
}

pub fn tensor2_to_json_string(t: &Tensor2) -> String {
    let mut terms: Vec<_> = t.iter().collect();
    terms.sort_by_cached_key(|((l, r), _)| (forest_key(l), forest_key(r)));
    let terms = terms
        .into_iter()
        .map(|((l, r), c)| TensorTermJson {
            coeff: coeff_to_json(c),
            left: forest_to_json(l),
            right: forest_to_json(r),
        })
        .collect();
    serde_json::to_string(&TensorJson { terms }).expect("serializable")
}

pub fn tensor2_from_json_str(s: &str) -> Result<Tensor2, JsonError> {
    let json: TensorJson = serde_json::from_str(s)?;
    let mut out = Tensor2::zero();
    for term in json.terms {
        out.add_term(
            coeff_from_json(&term.coeff)?,
            (forest_from_json(term.left)?, forest_from_json(term.right)?),
        );
    }
    Ok(out)
}
