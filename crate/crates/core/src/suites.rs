//! Exhaustive property suites over all forests up to a vertex bound.
//!
//! Each suite streams the enumerated basis in chunks, checks a chunk in
//! parallel and reports the first failure in enumeration order. Since the
//! enumeration runs by increasing vertex count, that failure is a
//! counterexample of minimal size.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coproduct::{delta_eps, delta_eps_comb, delta_foissy};
use crate::enumerate::{enumerate, enumerate_up_to, Alphabet};
use crate::forest::Forest;
use crate::freemodule::{rat, LinComb, Tensor2};
use crate::hopf::{antipode_defects, antipode_forest, conv_power, d_eps_iterate, nilpotency_witness, Endo};
use crate::poly::{kx_target, Poly};

const CHUNK: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Coassoc,
    Leibniz,
    Cocycle,
    Equiv,
    Grading,
    TermCount,
    Nilpotency,
    Antipode,
    Morphism,
    Foissy,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Coassoc,
        Suite::Leibniz,
        Suite::Cocycle,
        Suite::Equiv,
        Suite::Grading,
        Suite::TermCount,
        Suite::Nilpotency,
        Suite::Antipode,
        Suite::Morphism,
        Suite::Foissy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coassoc => "coassoc",
            Suite::Leibniz => "leibniz",
            Suite::Cocycle => "cocycle",
            Suite::Equiv => "equiv",
            Suite::Grading => "grading",
            Suite::TermCount => "termcount",
            Suite::Nilpotency => "nilpotency",
            Suite::Antipode => "antipode",
            Suite::Morphism => "morphism",
            Suite::Foissy => "foissy",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_vertices: usize,
    pub alphabet: Alphabet,
    /// Replace Δε by a deliberately broken variant, to see the harness fail.
    pub mutate: bool,
}

impl SuiteConfig {
    pub fn new(max_vertices: usize, alphabet: Alphabet) -> Self {
        SuiteConfig {
            max_vertices,
            alphabet,
            mutate: false,
        }
    }

    fn delta(&self) -> fn(&Forest) -> Tensor2 {
        if self.mutate {
            mutated_delta_eps
        } else {
            delta_eps
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.input, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: pass ({} cases)", self.suite, self.checked),
            Some(c) => write!(
                f,
                "{}: FAIL after {} cases; counterexample {}",
                self.suite, self.checked, c
            ),
        }
    }
}

/// Δε with the coefficient of every `B ⊗ 1` term doubled.
pub fn mutated_delta_eps(f: &Forest) -> Tensor2 {
    delta_eps(f).map_linear(|(l, r)| {
        let weight = if r.is_one() { 2 } else { 1 };
        Tensor2::pure(l.clone(), r.clone()).scale(&rat(weight))
    })
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let delta = cfg.delta();
    let n = cfg.max_vertices;
    let forests = || enumerate_up_to(n, &cfg.alphabet);
    match suite {
        Suite::Coassoc => check_all(suite, forests(), |f| coassociative(f, delta)),
        Suite::Leibniz => check_all(suite, pairs_up_to(n, &cfg.alphabet), |(a, b)| leibniz(a, b, delta)),
        Suite::Cocycle => check_all(suite, forests(), |f| eps_cocycle(f, delta)),
        Suite::Equiv => check_all(suite, forests(), |f| {
            let (rec, comb) = (delta(f), delta_eps_comb(f));
            expect_eq(&rec, &comb, "recursive", "combinatorial")
        }),
        Suite::Grading => check_all(suite, forests(), |f| grading(f, delta)),
        Suite::TermCount => check_all(suite, forests(), |f| term_count(f, delta)),
        Suite::Nilpotency => check_all(suite, forests(), nilpotent),
        Suite::Antipode => check_all(suite, forests(), antipode_equations),
        Suite::Morphism => check_all(suite, forests(), morphism),
        Suite::Foissy => check_all(suite, enumerate_up_to(n, &Alphabet::empty()), foissy_laws),
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteReport> {
    Suite::ALL.into_iter().map(|suite| run(suite, cfg)).collect()
}

fn check_all<T, I, F>(suite: Suite, items: I, check: F) -> SuiteReport
where
    T: Send + Sync + Describe,
    I: Iterator<Item = T>,
    F: Fn(&T) -> Result<(), String> + Sync,
{
    let mut items = items.peekable();
    let mut checked = 0;
    while items.peek().is_some() {
        let chunk: Vec<T> = items.by_ref().take(CHUNK).collect();
        let failure = chunk
            .par_iter()
            .enumerate()
            .find_map_first(|(i, item)| check(item).err().map(|detail| (i, detail)));
        if let Some((i, detail)) = failure {
            return SuiteReport {
                suite,
                checked: checked + i + 1,
                counterexample: Some(Counterexample {
                    input: chunk[i].describe(),
                    detail,
                }),
            };
        }
        checked += chunk.len();
    }
    SuiteReport {
        suite,
        checked,
        counterexample: None,
    }
}

trait Describe {
    fn describe(&self) -> String;
}

impl Describe for Forest {
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Describe for (Forest, Forest) {
    fn describe(&self) -> String {
        format!("({}, {})", self.0, self.1)
    }
}

/// Pairs `(F₁, F₂)` with `|F₁| + |F₂| ≤ max`, by increasing total size.
pub fn pairs_up_to(max: usize, alphabet: &Alphabet) -> impl Iterator<Item = (Forest, Forest)> + '_ {
    (0..=max).flat_map(move |total| {
        (0..=total).flat_map(move |a| {
            enumerate(a, alphabet)
                .flat_map(move |left| enumerate(total - a, alphabet).map(move |right| (left.clone(), right)))
        })
    })
}

fn expect_eq<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T, lname: &str, rname: &str) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{lname} = {lhs}, {rname} = {rhs}"))
    }
}

fn coassociative(f: &Forest, delta: fn(&Forest) -> Tensor2) -> Result<(), String> {
    let d = delta(f);
    if d.expand_left(delta) == d.expand_right(delta) {
        Ok(())
    } else {
        Err(format!("(Δ⊗id)Δ ≠ (id⊗Δ)Δ where Δ(F) = {d}"))
    }
}

fn leibniz(a: &Forest, b: &Forest, delta: fn(&Forest) -> Tensor2) -> Result<(), String> {
    let lhs = delta(&a.concat(b));
    let rhs = Tensor2::forest_left(a, &delta(b)) + Tensor2::forest_right(&delta(a), b);
    expect_eq(&lhs, &rhs, "Δ(F₁F₂)", "F₁·Δ(F₂) + Δ(F₁)·F₂")
}

fn eps_cocycle(f: &Forest, delta: fn(&Forest) -> Tensor2) -> Result<(), String> {
    let lhs = delta(&f.bplus().into());
    let rhs = Tensor2::pure(f.clone(), Forest::one()) + delta(f).bplus_right();
    expect_eq(&lhs, &rhs, "ΔB⁺(F)", "F⊗1 + (id⊗B⁺)Δ(F)")
}

fn grading(f: &Forest, delta: fn(&Forest) -> Tensor2) -> Result<(), String> {
    let n = f.vertex_count();
    for ((b, r), _) in &delta(f) {
        if b.vertex_count() + r.vertex_count() + 1 != n {
            return Err(format!(
                "term {b} (x) {r} has {} + {} vertices",
                b.vertex_count(),
                r.vertex_count()
            ));
        }
    }
    Ok(())
}

fn term_count(f: &Forest, delta: fn(&Forest) -> Tensor2) -> Result<(), String> {
    let d = delta(f);
    if d.len() != f.vertex_count() {
        return Err(format!("{} terms for {} vertices: {d}", d.len(), f.vertex_count()));
    }
    if d.iter().any(|(_, c)| *c != rat(1)) {
        return Err(format!("coefficient other than 1 in {d}"));
    }
    Ok(())
}

fn nilpotent(f: &Forest) -> Result<(), String> {
    let n = f.vertex_count();
    let d = Endo::d_eps();
    let power = conv_power(&d, n + 1).expect("n + 1 >= 1").on_basis(f);
    if !power.is_zero() {
        return Err(format!("D^(*{}) = {power}", n + 1));
    }
    let composed = d_eps_iterate(&LinComb::forest(f.clone()), n + 1);
    if !composed.is_zero() {
        return Err(format!("D^(o{}) = {composed}", n + 1));
    }
    let k = nilpotency_witness(f);
    if k > n + 1 {
        return Err(format!("nilpotency witness {k} exceeds {}", n + 1));
    }
    Ok(())
}

fn antipode_equations(f: &Forest) -> Result<(), String> {
    if f.is_one() && antipode_forest(f) != -LinComb::one() {
        return Err("S(1) ≠ -1".into());
    }
    let (left, right) = antipode_defects(f);
    if !left.is_zero() {
        return Err(format!("Σ S(F₁)F₂ + S(F) + F = {left}"));
    }
    if !right.is_zero() {
        return Err(format!("Σ F₁S(F₂) + S(F) + F = {right}"));
    }
    Ok(())
}

fn morphism(f: &Forest) -> Result<(), String> {
    let target = kx_target();
    let image = target.phi_bar(f).map_err(|e| e.to_string())?;
    let expected = Poly::monomial(f.vertex_count());
    if image != expected {
        return Err(format!("f̄(F) = {image}, expected {expected}"));
    }
    if target.phi_bar(&Forest::one()).map_err(|e| e.to_string())? != Poly::one() {
        return Err("f̄(1) ≠ 1".into());
    }
    let bplus = target.phi_bar(&f.bplus().into()).map_err(|e| e.to_string())?;
    if bplus != image.mul(&Poly::x()) {
        return Err(format!("f̄(B⁺F) = {bplus} ≠ P(f̄(F))"));
    }
    if !target.coproduct_compatible(f).map_err(|e| e.to_string())? {
        return Err("Δ f̄(F) ≠ (f̄⊗f̄) Δε(F)".into());
    }
    if !target.antipode_compatible(f).map_err(|e| e.to_string())? {
        return Err("f̄(S(F)) ≠ S(f̄(F))".into());
    }
    Ok(())
}

fn foissy_laws(f: &Forest) -> Result<(), String> {
    let delta = |g: &Forest| delta_foissy(g).expect("undecorated");
    let d = delta(f);
    if d.expand_left(delta) != d.expand_right(delta) {
        return Err(format!("Δ_F not coassociative at Δ_F(F) = {d}"));
    }
    let trees = f.trees();
    for i in 1..trees.len() {
        let a = Forest::from_trees(trees[..i].to_vec());
        let b = Forest::from_trees(trees[i..].to_vec());
        let mut rhs = Tensor2::forest_left(&a, &delta(&b)) + Tensor2::forest_right(&delta(&a), &b);
        rhs.add_term(rat(-1), (a.clone(), b.clone()));
        expect_eq(&d, &rhs, &format!("Δ_F({a} · {b})"), "F₁·Δ_F(F₂) + Δ_F(F₁)·F₂ − F₁⊗F₂")?;
    }
    Ok(())
}
