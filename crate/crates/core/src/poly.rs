//! The polynomial model `k[x]` and the universal morphism out of the forest
//! algebra.
//!
//! `k[x]` carries `Δ(xⁿ) = Σ_{i<n} xⁱ ⊗ x^{n−1−i}` (so `Δ(1) = 0`), the
//! cocycle operator `P(p) = x·p` and the antipode `S(xⁿ) = −(x−1)ⁿ`. Any
//! structure implementing [`CocycleBialgebra`] can serve as a target; a
//! [`TargetSpec`] pairs one with generator images `f(x)` satisfying
//! `Δ(f(x)) = 1 ⊗ 1`, and [`TargetSpec::phi_bar`] is the induced morphism.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::coproduct::delta_eps;
use crate::forest::{Decoration, Forest, Tree};
use crate::freemodule::{rat, Combination, LinComb, Rational, Tensor2};
use crate::hopf::antipode_forest;

/// Dense univariate polynomial; `coeffs[i]` multiplies `xⁱ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// `Σ c xⁱ ⊗ xʲ`, keyed by exponent pairs.
pub type PolyTensor2 = Combination<(usize, usize)>;

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::monomial(0)
    }

    pub fn x() -> Self {
        Poly::monomial(1)
    }

    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `(i, cᵢ)` for the nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn pow(&self, n: usize) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// `d/dx`.
    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `p ⊗ q`.
    pub fn tensor(&self, other: &Poly) -> PolyTensor2 {
        let mut out = PolyTensor2::zero();
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out.add_term(a * b, (i, j));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let sign = match (first, c.is_negative()) {
                (true, false) => "",
                (true, true) => "- ",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            first = false;
            f.write_str(sign)?;
            let magnitude = c.abs();
            let monomial = match i {
                0 => String::new(),
                1 => "x".to_string(),
                n => format!("x^{n}"),
            };
            match (magnitude.is_one(), monomial.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&monomial)?,
                (false, true) => write!(f, "{magnitude}")?,
                (false, false) => write!(f, "{magnitude} * {monomial}")?,
            }
        }
        Ok(())
    }
}

/// `Δ(xⁿ) = Σ_{i=0}^{n−1} xⁱ ⊗ x^{n−1−i}`, extended linearly.
pub fn kx_delta(p: &Poly) -> PolyTensor2 {
    let mut out = PolyTensor2::zero();
    for (n, c) in p.terms() {
        for i in 0..n {
            out.add_term(c.clone(), (i, n - 1 - i));
        }
    }
    out
}

/// Cocycle operator `P(p) = x·p`.
pub fn kx_p(p: &Poly) -> Poly {
    p.mul(&Poly::x())
}

/// `S(xⁿ) = −(x−1)ⁿ`, extended linearly.
pub fn kx_antipode(p: &Poly) -> Poly {
    let shifted = Poly::from_coeffs(vec![rat(-1), rat(1)]);
    p.terms()
        .fold(Poly::zero(), |acc, (n, c)| acc.sub(&shifted.pow(n).scale(c)))
}

/// `−Σ_{k=0}^{deg p} ((−1)^k / k!) Dᵏ(p)` with `D = d/dx`.
pub fn kx_antipode_series(p: &Poly) -> Poly {
    let mut out = Poly::zero();
    let mut power = p.clone();
    let mut factorial = BigInt::one();
    let mut k = 0usize;
    while !power.is_zero() {
        if k > 0 {
            factorial *= BigInt::from(k);
        }
        let sign = if k.is_multiple_of(2) { -1 } else { 1 };
        out = out.add(&power.scale(&Rational::new(BigInt::from(sign), factorial.clone())));
        power = power.derivative();
        k += 1;
    }
    out
}

/// `p · (a ⊗ b) = pa ⊗ b`.
pub fn kx_act_left(p: &Poly, t: &PolyTensor2) -> PolyTensor2 {
    t.map_linear(|&(i, j)| p.mul(&Poly::monomial(i)).tensor(&Poly::monomial(j)))
}

/// `(a ⊗ b) · q = a ⊗ bq`.
pub fn kx_act_right(t: &PolyTensor2, q: &Poly) -> PolyTensor2 {
    t.map_linear(|&(i, j)| Poly::monomial(i).tensor(&Poly::monomial(j).mul(q)))
}

/// An algebra with a counit-free coproduct and a cocycle operator, the
/// shape of target the forest algebra maps into.
pub trait CocycleBialgebra {
    type Elem: Clone + PartialEq + fmt::Debug;
    type Tensor: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn operator(&self, a: &Self::Elem) -> Self::Elem;
    fn coproduct(&self, a: &Self::Elem) -> Self::Tensor;

    fn tensor_zero(&self) -> Self::Tensor;
    fn tensor(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Tensor;
    fn tensor_add(&self, s: &Self::Tensor, t: &Self::Tensor) -> Self::Tensor;
    fn tensor_scale(&self, c: &Rational, t: &Self::Tensor) -> Self::Tensor;
}

pub trait CocycleHopfAlgebra: CocycleBialgebra {
    fn antipode(&self, a: &Self::Elem) -> Self::Elem;
}

/// `k[x]` with `P = x·` and the structure above.
#[derive(Debug, Clone, Copy, Default)]
pub struct PolyAlgebra;

impl CocycleBialgebra for PolyAlgebra {
    type Elem = Poly;
    type Tensor = PolyTensor2;

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn one(&self) -> Poly {
        Poly::one()
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }

    fn scale(&self, c: &Rational, a: &Poly) -> Poly {
        a.scale(c)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }

    fn operator(&self, a: &Poly) -> Poly {
        kx_p(a)
    }

    fn coproduct(&self, a: &Poly) -> PolyTensor2 {
        kx_delta(a)
    }

    fn tensor_zero(&self) -> PolyTensor2 {
        PolyTensor2::zero()
    }

    fn tensor(&self, a: &Poly, b: &Poly) -> PolyTensor2 {
        a.tensor(b)
    }

    fn tensor_add(&self, s: &PolyTensor2, t: &PolyTensor2) -> PolyTensor2 {
        s + t
    }

    fn tensor_scale(&self, c: &Rational, t: &PolyTensor2) -> PolyTensor2 {
        t.scale(c)
    }
}

impl CocycleHopfAlgebra for PolyAlgebra {
    fn antipode(&self, a: &Poly) -> Poly {
        kx_antipode(a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TargetError {
    #[error("image of generator {0} does not satisfy Δ(f(x)) = 1 ⊗ 1")]
    NotPrimitive(String),
    #[error("no image registered for generator {0}")]
    MissingGenerator(String),
}

/// A target algebra together with images for the generators.
#[derive(Debug, Clone)]
pub struct TargetSpec<A: CocycleBialgebra> {
    algebra: A,
    images: BTreeMap<String, A::Elem>,
    default_image: Option<A::Elem>,
}

impl<A: CocycleBialgebra> TargetSpec<A> {
    /// Registers generator images. `default_image`, if given, is used for
    /// any generator without an explicit image. Every image must satisfy
    /// `Δ(f(x)) = 1 ⊗ 1`.
    pub fn new(
        algebra: A,
        images: impl IntoIterator<Item = (String, A::Elem)>,
        default_image: Option<A::Elem>,
    ) -> Result<Self, TargetError> {
        let unit = algebra.tensor(&algebra.one(), &algebra.one());
        let images: BTreeMap<_, _> = images.into_iter().collect();
        for (name, image) in &images {
            if algebra.coproduct(image) != unit {
                return Err(TargetError::NotPrimitive(name.clone()));
            }
        }
        if let Some(image) = &default_image {
            if algebra.coproduct(image) != unit {
                return Err(TargetError::NotPrimitive("<default>".into()));
            }
        }
        Ok(TargetSpec {
            algebra,
            images,
            default_image,
        })
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    pub fn image(&self, name: &str) -> Result<A::Elem, TargetError> {
        self.images
            .get(name)
            .or(self.default_image.as_ref())
            .cloned()
            .ok_or_else(|| TargetError::MissingGenerator(name.to_string()))
    }

    /// The induced morphism: `1 ↦ 1`, `•x ↦ f(x)`, `B⁺(G) ↦ P(f̄(G))` and
    /// `F₁F₂ ↦ f̄(F₁) f̄(F₂)`.
    pub fn phi_bar(&self, forest: &Forest) -> Result<A::Elem, TargetError> {
        forest.trees().iter().try_fold(self.algebra.one(), |acc, tree| {
            Ok(self.algebra.mul(&acc, &self.phi_bar_tree(tree)?))
        })
    }

    fn phi_bar_tree(&self, tree: &Tree) -> Result<A::Elem, TargetError> {
        match tree.label() {
            Decoration::Gen(name) => self.image(name),
            Decoration::Sigma => {
                let below = tree.unbplus().expect("σ root");
                Ok(self.algebra.operator(&self.phi_bar(&below)?))
            }
        }
    }

    pub fn phi_bar_lin(&self, v: &LinComb) -> Result<A::Elem, TargetError> {
        v.iter().try_fold(self.algebra.zero(), |acc, (f, c)| {
            Ok(self.algebra.add(&acc, &self.algebra.scale(c, &self.phi_bar(f)?)))
        })
    }

    /// `(f̄ ⊗ f̄)`.
    pub fn phi_bar_tensor(&self, t: &Tensor2) -> Result<A::Tensor, TargetError> {
        t.iter().try_fold(self.algebra.tensor_zero(), |acc, ((l, r), c)| {
            let pure = self.algebra.tensor(&self.phi_bar(l)?, &self.phi_bar(r)?);
            Ok(self.algebra.tensor_add(&acc, &self.algebra.tensor_scale(c, &pure)))
        })
    }

    /// `Δ f̄(F) = (f̄ ⊗ f̄) Δε(F)`.
    pub fn coproduct_compatible(&self, forest: &Forest) -> Result<bool, TargetError> {
        let lhs = self.algebra.coproduct(&self.phi_bar(forest)?);
        let rhs = self.phi_bar_tensor(&delta_eps(forest))?;
        Ok(lhs == rhs)
    }
}

impl<A: CocycleHopfAlgebra> TargetSpec<A> {
    /// `f̄(S(F)) = S(f̄(F))`.
    pub fn antipode_compatible(&self, forest: &Forest) -> Result<bool, TargetError> {
        let lhs = self.phi_bar_lin(&antipode_forest(forest))?;
        let rhs = self.algebra.antipode(&self.phi_bar(forest)?);
        Ok(lhs == rhs)
    }

    pub fn morphism_check(&self, forest: &Forest) -> Result<bool, TargetError> {
        Ok(self.coproduct_compatible(forest)? && self.antipode_compatible(forest)?)
    }
}

pub type KxTarget = TargetSpec<PolyAlgebra>;

/// `k[x]` with `f(x) = x` for every generator.
pub fn kx_target() -> KxTarget {
    TargetSpec::new(PolyAlgebra, [], Some(Poly::x())).expect("Δ(x) = 1 ⊗ 1")
}

/// [`TargetSpec::phi_bar`] into the default `k[x]` target.
pub fn phi_bar(forest: &Forest) -> Poly {
    kx_target()
        .phi_bar(forest)
        .expect("default image covers every generator")
}

/// Coproduct and antipode compatibility of `f̄` at `F` in `k[x]`.
pub fn morphism_check(forest: &Forest) -> bool {
    kx_target()
        .morphism_check(forest)
        .expect("default image covers every generator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coproduct::delta_eps_lin;
    use crate::hopf::antipode;
    use crate::textio::parse_forest;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn f(s: &str) -> Forest {
        parse_forest(s).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert!(kx_delta(&Poly::one()).is_zero());
        assert_eq!(kx_delta(&Poly::x()), Poly::one().tensor(&Poly::one()));
        let expected: PolyTensor2 = [(2, 0), (1, 1), (0, 2)].into_iter().map(|k| (rat(1), k)).collect();
        assert_eq!(kx_delta(&Poly::monomial(3)), expected);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(kx_antipode(&Poly::one()), p(&[-1]));
        assert_eq!(kx_antipode(&Poly::x()), p(&[1, -1]));
        assert_eq!(kx_antipode(&Poly::monomial(2)), p(&[-1, 2, -1]));
        assert_eq!(kx_antipode_series(&Poly::monomial(2)), p(&[-1, 2, -1]));
    }

    #[test]
    fn operator_examples() {
        assert_eq!(kx_p(&Poly::one()), Poly::x());
        assert_eq!(kx_p(&Poly::monomial(4)), Poly::monomial(5));
        // Δ(P(x²)) = x² ⊗ 1 + (id ⊗ P) Δ(x²)
        let lhs = kx_delta(&kx_p(&Poly::monomial(2)));
        let rhs = Poly::monomial(2).tensor(&Poly::one()) + kx_delta(&Poly::monomial(2)).map_basis(|&(i, j)| (i, j + 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::one().to_string(), "1");
        assert_eq!(Poly::monomial(2).to_string(), "x^2");
        assert_eq!(p(&[-1, 2, -1]).to_string(), "- x^2 + 2 * x - 1");
        assert_eq!(
            Poly::from_coeffs(vec![Rational::new(1.into(), 2.into())]).to_string(),
            "1/2"
        );
    }

    #[test]
    fn phi_bar_examples() {
        assert_eq!(phi_bar(&Forest::one()), Poly::one());
        assert_eq!(phi_bar(&f("@[x]")), Poly::monomial(2));
        assert_eq!(phi_bar(&f("x y")), Poly::monomial(2));
        assert_eq!(phi_bar(&f("@[@ x] @[y @[z]] @[w]")), Poly::monomial(9));
    }

    #[test]
    fn morphism_examples() {
        assert!(morphism_check(&f("x")));
        assert!(morphism_check(&f("@[x]")));
        assert!(morphism_check(&f("@[y @[x]] @")));
    }

    #[test]
    fn non_primitive_image_rejected() {
        let err = TargetSpec::new(PolyAlgebra, [("x".to_string(), Poly::monomial(2))], None).unwrap_err();
        assert_eq!(err, TargetError::NotPrimitive("x".into()));
        let target = TargetSpec::new(PolyAlgebra, [("x".to_string(), Poly::x())], None).unwrap();
        assert_eq!(target.phi_bar(&f("y")), Err(TargetError::MissingGenerator("y".into())));
        // Scaled images of x are still primitive only for scale 1.
        assert!(TargetSpec::new(PolyAlgebra, [], Some(p(&[0, 2]))).is_err());
    }

    /// The forest algebra as its own target, with `f(x) = •x`; the induced
    /// morphism must be the identity.
    struct Forests;

    impl CocycleBialgebra for Forests {
        type Elem = LinComb;
        type Tensor = Tensor2;

        fn zero(&self) -> LinComb {
            LinComb::zero()
        }
        fn one(&self) -> LinComb {
            LinComb::one()
        }
        fn add(&self, a: &LinComb, b: &LinComb) -> LinComb {
            a + b
        }
        fn scale(&self, c: &Rational, a: &LinComb) -> LinComb {
            a.scale(c)
        }
        fn mul(&self, a: &LinComb, b: &LinComb) -> LinComb {
            a.mul(b)
        }
        fn operator(&self, a: &LinComb) -> LinComb {
            a.bplus()
        }
        fn coproduct(&self, a: &LinComb) -> Tensor2 {
            delta_eps_lin(a)
        }
        fn tensor_zero(&self) -> Tensor2 {
            Tensor2::zero()
        }
        fn tensor(&self, a: &LinComb, b: &LinComb) -> Tensor2 {
            a.tensor(b)
        }
        fn tensor_add(&self, s: &Tensor2, t: &Tensor2) -> Tensor2 {
            s + t
        }
        fn tensor_scale(&self, c: &Rational, t: &Tensor2) -> Tensor2 {
            t.scale(c)
        }
    }

    impl CocycleHopfAlgebra for Forests {
        fn antipode(&self, a: &LinComb) -> LinComb {
            antipode(a)
        }
    }

    #[test]
    fn self_target_is_identity() {
        let images = ["x", "y"].map(|n| (n.to_string(), LinComb::forest(f(n))));
        let target = TargetSpec::new(Forests, images, None).unwrap();
        for s in ["1", "x", "@[y @[x]]", "@[@ x] y @"] {
            let forest = f(s);
            assert_eq!(target.phi_bar(&forest).unwrap(), LinComb::forest(forest.clone()));
            assert!(target.morphism_check(&forest).unwrap());
        }
    }
}
