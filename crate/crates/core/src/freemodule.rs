//! Finite formal linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::forest::{Forest, Tree};

pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A finite sum `Σ cᵢ bᵢ` over basis elements `B`. Zero coefficients are
/// never stored, so structural equality is coefficient-wise equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Combination<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

/// Element of the forest algebra.
pub type LinComb = Combination<Forest>;
/// Element of the tensor square, basis `F ⊗ G`.
pub type Tensor2 = Combination<(Forest, Forest)>;
/// Element of the tensor cube.
pub type Tensor3 = Combination<(Forest, Forest, Forest)>;

impl<B: Ord> Default for Combination<B> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> Combination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(rat(1), b)
    }

    pub fn term(coeff: Rational, b: B) -> Self {
        let mut out = Self::zero();
        out.add_term(coeff, b);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, coeff: Rational, b: B) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, coeff: &Rational, other: &Self) {
        if coeff.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(coeff * c, b.clone());
        }
    }

    pub fn scale(&self, coeff: &Rational) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(b, c)| (b.clone(), c * coeff)).collect();
        Combination { terms }
    }

    /// Linear extension of `f` on basis elements.
    pub fn map_linear<C, F>(&self, mut f: F) -> Combination<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> Combination<C>,
    {
        let mut out = Combination::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Linear extension of a basis-to-basis map.
    pub fn map_basis<C, F>(&self, mut f: F) -> Combination<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> C,
    {
        let mut out = Combination::zero();
        for (b, c) in &self.terms {
            out.add_term(c.clone(), f(b));
        }
        out
    }

    /// Bilinear extension of a basis-level product.
    pub fn bilinear<C, D, F>(&self, other: &Combination<C>, mut f: F) -> Combination<D>
    where
        C: Ord + Clone,
        D: Ord + Clone,
        F: FnMut(&B, &C) -> D,
    {
        let mut out = Combination::zero();
        for (b, cb) in &self.terms {
            for (c, cc) in &other.terms {
                out.add_term(cb * cc, f(b, c));
            }
        }
        out
    }
}

impl<B: Ord + Clone> FromIterator<(Rational, B)> for Combination<B> {
    fn from_iter<I: IntoIterator<Item = (Rational, B)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (c, b) in iter {
            out.add_term(c, b);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a Combination<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> AddAssign<&Combination<B>> for Combination<B> {
    fn add_assign(&mut self, rhs: &Combination<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(c.clone(), b.clone());
        }
    }
}

impl<B: Ord + Clone> Add for &Combination<B> {
    type Output = Combination<B>;

    fn add(self, rhs: Self) -> Combination<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Add for Combination<B> {
    type Output = Combination<B>;

    fn add(mut self, rhs: Self) -> Combination<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Neg for &Combination<B> {
    type Output = Combination<B>;

    fn neg(self) -> Combination<B> {
        let terms = self.terms.iter().map(|(b, c)| (b.clone(), -c)).collect();
        Combination { terms }
    }
}

impl<B: Ord + Clone> Neg for Combination<B> {
    type Output = Combination<B>;

    fn neg(self) -> Combination<B> {
        -&self
    }
}

impl<B: Ord + Clone> Sub for &Combination<B> {
    type Output = Combination<B>;

    fn sub(self, rhs: Self) -> Combination<B> {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for Combination<B> {
    type Output = Combination<B>;

    fn sub(self, rhs: Self) -> Combination<B> {
        &self - &rhs
    }
}

impl LinComb {
    /// The unit `1` (the empty forest).
    pub fn one() -> Self {
        Self::basis(Forest::one())
    }

    pub fn forest(f: Forest) -> Self {
        Self::basis(f)
    }

    pub fn tree(t: Tree) -> Self {
        Self::basis(t.into())
    }

    /// Bilinear extension of concatenation.
    pub fn mul(&self, other: &LinComb) -> LinComb {
        self.bilinear(other, |f, g| f.concat(g))
    }

    /// Linear extension of `B⁺`.
    pub fn bplus(&self) -> LinComb {
        self.map_basis(|f| Forest::from(f.bplus()))
    }

    pub fn tensor(&self, other: &LinComb) -> Tensor2 {
        self.bilinear(other, |f, g| (f.clone(), g.clone()))
    }
}

impl Mul for &LinComb {
    type Output = LinComb;

    fn mul(self, rhs: &LinComb) -> LinComb {
        LinComb::mul(self, rhs)
    }
}

impl Tensor2 {
    /// `1 ⊗ 1`.
    pub fn unit() -> Self {
        Self::basis((Forest::one(), Forest::one()))
    }

    pub fn pure(left: Forest, right: Forest) -> Self {
        Self::basis((left, right))
    }

    /// `a · (b ⊗ c) = ab ⊗ c`.
    pub fn act_left(a: &LinComb, t: &Tensor2) -> Tensor2 {
        a.bilinear(t, |f, (l, r)| (f.concat(l), r.clone()))
    }

    /// `(b ⊗ c) · a = b ⊗ ca`.
    pub fn act_right(t: &Tensor2, a: &LinComb) -> Tensor2 {
        t.bilinear(a, |(l, r), f| (l.clone(), r.concat(f)))
    }

    /// Single-forest left action, the common case in coproduct recursions.
    pub fn forest_left(f: &Forest, t: &Tensor2) -> Tensor2 {
        t.map_basis(|(l, r)| (f.concat(l), r.clone()))
    }

    pub fn forest_right(t: &Tensor2, f: &Forest) -> Tensor2 {
        t.map_basis(|(l, r)| (l.clone(), r.concat(f)))
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn t2_mul(&self, other: &Tensor2) -> Tensor2 {
        self.bilinear(other, |(a, b), (c, d)| (a.concat(c), b.concat(d)))
    }

    /// `m`: multiply the two legs.
    pub fn multiply_legs(&self) -> LinComb {
        self.map_basis(|(l, r)| l.concat(r))
    }

    /// `(id ⊗ B⁺)`.
    pub fn bplus_right(&self) -> Tensor2 {
        self.map_basis(|(l, r)| (l.clone(), Forest::from(r.bplus())))
    }

    /// `(f ⊗ g)` for linear maps given on basis forests.
    pub fn map_legs<F, G>(&self, mut f: F, mut g: G) -> Tensor2
    where
        F: FnMut(&Forest) -> LinComb,
        G: FnMut(&Forest) -> LinComb,
    {
        self.map_linear(|(l, r)| f(l).tensor(&g(r)))
    }

    /// `(id ⊗ Δ)`.
    pub fn expand_right<F>(&self, mut delta: F) -> Tensor3
    where
        F: FnMut(&Forest) -> Tensor2,
    {
        self.map_linear(|(l, r)| delta(r).map_basis(|(a, b)| (l.clone(), a.clone(), b.clone())))
    }

    /// `(Δ ⊗ id)`.
    pub fn expand_left<F>(&self, mut delta: F) -> Tensor3
    where
        F: FnMut(&Forest) -> Tensor2,
    {
        self.map_linear(|(l, r)| delta(l).map_basis(|(a, b)| (a.clone(), b.clone(), r.clone())))
    }
}
