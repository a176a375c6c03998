//! The infinitesimal unitary Hopf algebra of decorated planar rooted forests.
//!
//! Forests are decorated by σ (written `@`) and by generators that may only
//! label leaves. The algebra is concatenation; the coproduct Δε satisfies
//! the derivation law `Δ(ab) = a·Δ(b) + Δ(a)·b` and the ε-cocycle condition
//! `Δ B⁺ = id ⊗ 1 + (id ⊗ B⁺) Δ`. All coefficients are exact rationals.

pub mod coproduct;
pub mod enumerate;
pub mod forest;
pub mod freemodule;
pub mod hopf;
pub mod poly;
pub mod suites;
pub mod textio;

pub use coproduct::{delta_eps, delta_eps_comb, delta_eps_lin, delta_foissy, delta_rt, CoproductError, Method};
pub use enumerate::{count, enumerate, enumerate_up_to, Alphabet};
pub use forest::{Decoration, Forest, ForestError, Tree, Vertex, VertexRef};
pub use freemodule::{rat, Combination, LinComb, Rational, Tensor2, Tensor3};
pub use hopf::{
    antipode, antipode_check, circ_convolve, conv_power, convolve, d_eps, nilpotency_witness, Endo, HopfError,
};
pub use poly::{kx_antipode, kx_delta, kx_p, morphism_check, phi_bar, Poly, PolyTensor2, TargetSpec};
pub use textio::{parse_forest, parse_lincomb, parse_tensor2, ParseError};
