//! Coproducts on decorated planar rooted forests.
//!
//! * [`delta_eps`]: the infinitesimal coproduct Δε, by recursion on depth
//!   and breadth.
//! * [`delta_eps_comb`]: the same coproduct as a sum over vertices,
//!   `Σₐ Bₐ ⊗ Rₐ`.
//! * [`delta_foissy`]: Foissy's infinitesimal coproduct on undecorated forests.
//! * [`delta_rt`]: the multiplicative coproduct satisfying the ordinary
//!   1-cocycle condition `Δ B⁺ = B⁺ ⊗ 1 + (id ⊗ B⁺) Δ`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::forest::{Decoration, Forest, Tree};
use crate::freemodule::{rat, LinComb, Tensor2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoproductError {
    #[error("Foissy's coproduct is defined on undecorated forests only; found generator {0}")]
    Decorated(String),
}

/// Recursive Δε. `Δε(1) = 0`, `Δε(•x) = 1 ⊗ 1`,
/// `Δε(B⁺(G)) = G ⊗ 1 + (id ⊗ B⁺) Δε(G)` and
/// `Δε(T₁ T₂⋯T_m) = T₁ · Δε(T₂⋯T_m) + Δε(T₁) · (T₂⋯T_m)`.
pub fn delta_eps(f: &Forest) -> Tensor2 {
    match f.trees() {
        [] => Tensor2::zero(),
        [tree] => delta_eps_tree(tree),
        _ => {
            let (first, rest) = f.split_first().expect("breadth >= 2");
            let first = Forest::from(first.clone());
            let mut out = Tensor2::forest_left(&first, &delta_eps(&rest));
            out += &Tensor2::forest_right(&delta_eps(&first), &rest);
            out
        }
    }
}

fn delta_eps_tree(tree: &Tree) -> Tensor2 {
    match tree.label() {
        Decoration::Gen(_) => Tensor2::unit(),
        Decoration::Sigma => {
            let below = tree.unbplus().expect("σ root");
            let mut out = Tensor2::pure(below.clone(), Forest::one());
            out += &delta_eps(&below).bplus_right();
            out
        }
    }
}

/// Combinatorial Δε: `Σ_{a ∈ V(F)} Bₐ ⊗ Rₐ`.
pub fn delta_eps_comb(f: &Forest) -> Tensor2 {
    f.splits().into_iter().map(|pair| (rat(1), pair)).collect()
}

/// Linear extension of [`delta_eps`].
pub fn delta_eps_lin(v: &LinComb) -> Tensor2 {
    v.map_linear(delta_eps)
}

/// Foissy's coproduct: `Δ_F(1) = 1 ⊗ 1`,
/// `Δ_F(B⁺(G)) = B⁺(G) ⊗ 1 + (id ⊗ B⁺) Δ_F(G)` and
/// `Δ_F(F₁F₂) = F₁ · Δ_F(F₂) + Δ_F(F₁) · F₂ − F₁ ⊗ F₂`.
pub fn delta_foissy(f: &Forest) -> Result<Tensor2, CoproductError> {
    if let Some(label) = first_generator(f) {
        return Err(CoproductError::Decorated(label));
    }
    Ok(foissy_unchecked(f))
}

fn foissy_unchecked(f: &Forest) -> Tensor2 {
    match f.trees() {
        [] => Tensor2::unit(),
        [tree] => {
            let below = tree.unbplus().expect("undecorated");
            let mut out = Tensor2::pure(f.clone(), Forest::one());
            out += &foissy_unchecked(&below).bplus_right();
            out
        }
        _ => {
            let (first, rest) = f.split_first().expect("breadth >= 2");
            let first = Forest::from(first.clone());
            let mut out = Tensor2::forest_left(&first, &foissy_unchecked(&rest));
            out += &Tensor2::forest_right(&foissy_unchecked(&first), &rest);
            out.add_term(rat(-1), (first, rest));
            out
        }
    }
}

fn first_generator(f: &Forest) -> Option<String> {
    fn walk(t: &Tree) -> Option<String> {
        match t.label() {
            Decoration::Gen(name) => Some(name.to_string()),
            Decoration::Sigma => t.children().iter().find_map(walk),
        }
    }
    f.trees().iter().find_map(walk)
}

/// Multiplicative coproduct with `Δ_RT(1) = 1 ⊗ 1`,
/// `Δ_RT(•x) = •x ⊗ 1 + 1 ⊗ •x` and
/// `Δ_RT(B⁺(G)) = B⁺(G) ⊗ 1 + (id ⊗ B⁺) Δ_RT(G)`.
pub fn delta_rt(f: &Forest) -> Tensor2 {
    f.trees()
        .iter()
        .fold(Tensor2::unit(), |acc, tree| acc.t2_mul(&delta_rt_tree(tree)))
}

fn delta_rt_tree(tree: &Tree) -> Tensor2 {
    let whole = Forest::from(tree.clone());
    match tree.label() {
        Decoration::Gen(_) => Tensor2::pure(whole.clone(), Forest::one()) + Tensor2::pure(Forest::one(), whole),
        Decoration::Sigma => {
            let below = tree.unbplus().expect("σ root");
            let mut out = Tensor2::pure(whole, Forest::one());
            out += &delta_rt(&below).bplus_right();
            out
        }
    }
}

/// Coproduct selector used by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Eps,
    Comb,
    Foissy,
    Rt,
}

impl Method {
    pub fn apply(self, f: &Forest) -> Result<Tensor2, CoproductError> {
        match self {
            Method::Eps => Ok(delta_eps(f)),
            Method::Comb => Ok(delta_eps_comb(f)),
            Method::Foissy => delta_foissy(f),
            Method::Rt => Ok(delta_rt(f)),
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eps" => Ok(Method::Eps),
            "comb" => Ok(Method::Comb),
            "foissy" => Ok(Method::Foissy),
            "rt" => Ok(Method::Rt),
            other => Err(format!("unknown coproduct method {other:?}")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Eps => "eps",
            Method::Comb => "comb",
            Method::Foissy => "foissy",
            Method::Rt => "rt",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::{parse_forest, parse_lincomb, parse_tensor2};

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    fn t(s: &str) -> Tensor2 {
        parse_tensor2(s).unwrap()
    }

    #[test]
    fn eps_base_cases() {
        assert!(delta_eps(&Forest::one()).is_zero());
        assert_eq!(delta_eps(&f("x")), Tensor2::unit());
        assert_eq!(delta_eps(&f("@")), Tensor2::unit());
    }

    #[test]
    fn eps_generator_words() {
        assert_eq!(delta_eps(&f("x y")), t("1 (x) y + x (x) 1"));
        assert_eq!(delta_eps(&f("x y z")), t("1 (x) y z + x (x) z + x y (x) 1"));
    }

    #[test]
    fn eps_worked_examples() {
        assert_eq!(delta_eps(&f("@[x]")), t("x (x) 1 + 1 (x) @"));
        assert_eq!(delta_eps(&f("@[@ x]")), t("@ x (x) 1 + @ (x) @ + 1 (x) @[x]"));
        assert_eq!(
            delta_eps(&f("@[@[x] @]")),
            t("@[x] @ (x) 1 + @[x] (x) @ + x (x) @[@] + 1 (x) @[@ @]")
        );
    }

    #[test]
    fn comb_matches_first_vertex_example() {
        let expected = t("y @[x] (x) 1 + 1 (x) @[@[x]] + y x (x) @ + y (x) @[@]");
        assert_eq!(delta_eps_comb(&f("@[y @[x]]")), expected);
        assert_eq!(delta_eps(&f("@[y @[x]]")), expected);
        assert!(delta_eps_comb(&Forest::one()).is_zero());
    }

    #[test]
    fn linear_extension() {
        assert!(delta_eps_lin(&LinComb::zero()).is_zero());
        assert_eq!(delta_eps_lin(&parse_lincomb("2 * x").unwrap()), t("2 * 1 (x) 1"));
        assert_eq!(
            delta_eps_lin(&parse_lincomb("x + @[x]").unwrap()),
            t("1 (x) 1 + x (x) 1 + 1 (x) @")
        );
    }

    #[test]
    fn foissy_examples() {
        assert_eq!(
            delta_foissy(&f("@[@]")).unwrap(),
            t("@[@] (x) 1 + 1 (x) @[@] + @ (x) @")
        );
        assert_eq!(
            delta_foissy(&f("@[@ @]")).unwrap(),
            t("@[@ @] (x) 1 + 1 (x) @[@ @] + @ @ (x) @ + @ (x) @[@]")
        );
        assert_eq!(
            delta_foissy(&f("@[@[@] @]")).unwrap(),
            t("@[@[@] @] (x) 1 + 1 (x) @[@[@] @] + @[@] @ (x) @ + @ (x) @[@ @] + @[@] (x) @[@]")
        );
        assert_eq!(delta_foissy(&Forest::one()).unwrap(), Tensor2::unit());
    }

    #[test]
    fn foissy_rejects_generators() {
        assert_eq!(delta_foissy(&f("@[x]")), Err(CoproductError::Decorated("x".into())));
    }

    #[test]
    fn rt_examples() {
        assert_eq!(delta_rt(&Forest::one()), Tensor2::unit());
        assert_eq!(delta_rt(&f("x")), t("x (x) 1 + 1 (x) x"));
        assert_eq!(
            delta_rt(&f("@[y @[x]]")),
            t("@[y @[x]] (x) 1 + x (x) @[y @] + y (x) @[@[x]] + @[x] (x) @[y] \
               + y x (x) @[@] + y @[x] (x) @ + 1 (x) @[y @[x]]")
        );
    }

    #[test]
    fn method_parsing() {
        assert_eq!("rt".parse::<Method>(), Ok(Method::Rt));
        assert!("cut".parse::<Method>().is_err());
        assert_eq!(Method::Comb.to_string(), "comb");
    }
}
