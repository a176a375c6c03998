//! Convolution algebra on linear endomorphisms and the antipode.
//!
//! The convolution of `f` and `g` is `m (f ⊗ g) Δε`. It has no unit; the
//! circular convolution `f ⊛ g = f ∗ g + f + g` has the zero map as unit,
//! and the antipode `S` is the ⊛-inverse of the identity.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coproduct::delta_eps;
use crate::forest::Forest;
use crate::freemodule::{LinComb, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("convolution powers start at 1; the convolution algebra has no unit")]
    ZeroPower,
}

/// A linear map `LinComb → LinComb`, given by its value on basis forests.
#[derive(Clone)]
pub struct Endo {
    on_basis: Arc<dyn Fn(&Forest) -> LinComb + Send + Sync>,
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Endo(..)")
    }
}

impl Endo {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(&Forest) -> LinComb + Send + Sync + 'static,
    {
        Endo { on_basis: Arc::new(f) }
    }

    pub fn identity() -> Self {
        Endo::new(|f| LinComb::forest(f.clone()))
    }

    pub fn zero() -> Self {
        Endo::new(|_| LinComb::zero())
    }

    /// `D_ε = m ∘ Δε`.
    pub fn d_eps() -> Self {
        Endo::new(d_eps_forest)
    }

    pub fn antipode() -> Self {
        Endo::new(antipode_forest)
    }

    pub fn on_basis(&self, f: &Forest) -> LinComb {
        (self.on_basis)(f)
    }

    pub fn apply(&self, v: &LinComb) -> LinComb {
        v.map_linear(|f| self.on_basis(f))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Endo) -> Endo {
        let (outer, inner) = (self.clone(), inner.clone());
        Endo::new(move |f| outer.apply(&inner.on_basis(f)))
    }

    pub fn add(&self, other: &Endo) -> Endo {
        let (a, b) = (self.clone(), other.clone());
        Endo::new(move |f| a.on_basis(f) + b.on_basis(f))
    }

    pub fn scale(&self, c: Rational) -> Endo {
        let a = self.clone();
        Endo::new(move |f| a.on_basis(f).scale(&c))
    }

    /// Extensional equality on a finite set of basis forests.
    pub fn agrees_on<'a>(&self, other: &Endo, basis: impl IntoIterator<Item = &'a Forest>) -> bool {
        basis.into_iter().all(|f| self.on_basis(f) == other.on_basis(f))
    }
}

fn d_eps_forest(f: &Forest) -> LinComb {
    delta_eps(f).multiply_legs()
}

/// `D_ε(v)`: multiply the legs of `Δε(v)`. Lowers vertex count by one.
pub fn d_eps(v: &LinComb) -> LinComb {
    v.map_linear(d_eps_forest)
}

/// `D_ε^{∘k}(v)`, with `D_ε^{∘0} = id`.
pub fn d_eps_iterate(v: &LinComb, k: usize) -> LinComb {
    (0..k).fold(v.clone(), |acc, _| d_eps(&acc))
}

/// `(f ∗ g)(F) = Σ f(B) · g(R)` over the terms `B ⊗ R` of `Δε(F)`.
pub fn convolve(f: &Endo, g: &Endo) -> Endo {
    let (f, g) = (f.clone(), g.clone());
    Endo::new(move |forest| {
        let mut out = LinComb::zero();
        for ((b, r), c) in &delta_eps(forest) {
            let fb = f.on_basis(b);
            if fb.is_zero() {
                continue;
            }
            out.add_scaled(c, &fb.mul(&g.on_basis(r)));
        }
        out
    })
}

/// `f^{∗k}` with `f^{∗1} = f` and `f^{∗(k+1)} = f^{∗k} ∗ f`.
pub fn conv_power(f: &Endo, k: usize) -> Result<Endo, HopfError> {
    if k == 0 {
        return Err(HopfError::ZeroPower);
    }
    Ok((1..k).fold(f.clone(), |acc, _| convolve(&acc, f)))
}

/// `f ⊛ g = f ∗ g + f + g`.
pub fn circ_convolve(f: &Endo, g: &Endo) -> Endo {
    convolve(f, g).add(f).add(g)
}

/// Smallest `k ≥ 1` with `D_ε^{∗k}(F) = 0`. Local nilpotency bounds it by
/// `|F| + 1`.
pub fn nilpotency_witness(f: &Forest) -> usize {
    let d = Endo::d_eps();
    let mut power = d.clone();
    let mut k = 1;
    while !power.on_basis(f).is_zero() {
        power = convolve(&power, &d);
        k += 1;
    }
    k
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// `S(F) = −Σ_{k=0}^{|F|} ((−1)^k / k!) D_ε^{∘k}(F)`.
pub fn antipode_forest(f: &Forest) -> LinComb {
    let mut out = LinComb::zero();
    let mut power = LinComb::forest(f.clone());
    for k in 0..=f.vertex_count() {
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 0 { -1 } else { 1 };
        let coeff = Rational::new(BigInt::from(sign), factorial(k));
        out.add_scaled(&coeff, &power);
        power = d_eps(&power);
    }
    out
}

/// Linear extension of [`antipode_forest`].
pub fn antipode(v: &LinComb) -> LinComb {
    v.map_linear(antipode_forest)
}

/// Both sides of the antipode equations at `F`:
/// `Σ S(F₍₁₎) F₍₂₎ + S(F) + F` and `Σ F₍₁₎ S(F₍₂₎) + S(F) + F`.
pub fn antipode_defects(f: &Forest) -> (LinComb, LinComb) {
    let s = antipode_forest(f);
    let base = &s + &LinComb::forest(f.clone());
    let mut left = base.clone();
    let mut right = base;
    for ((b, r), c) in &delta_eps(f) {
        left.add_scaled(c, &antipode_forest(b).mul(&LinComb::forest(r.clone())));
        right.add_scaled(c, &LinComb::forest(b.clone()).mul(&antipode_forest(r)));
    }
    (left, right)
}

/// True iff both antipode equations vanish at `F`.
pub fn antipode_check(f: &Forest) -> bool {
    let (left, right) = antipode_defects(f);
    left.is_zero() && right.is_zero()
}
