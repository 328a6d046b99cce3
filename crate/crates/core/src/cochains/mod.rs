//! Cochain complexes and graded brackets.
//!
//! * [`multilinear`]: dense multilinear maps, the storage for every cochain.
//! * [`gerstenhaber`]: composition and bracket on `⊕ Hom(V^{⊗n+1}, V)`.
//! * [`derived`]: the derived bracket on `C^•(M, A)`.
//! * [`hochschild`]: the differential `d_H` of an O-operator.
//! * [`dendriform`]: the dendriform operad, its bracket, `δ_π` and `Θ_n`.
//! * [`lie`]: alternating cochains, `d_ce`, `S_n` and `Ψ_n`.

pub mod dendriform;
pub mod derived;
pub mod gerstenhaber;
pub mod hochschild;
pub mod lie;
pub mod multilinear;

pub use dendriform::{dend_bracket, dend_differential, dend_partial_comp, theta, DendCochain};
pub use derived::{bracket, bracket_of_linear_maps, derived_bracket, derived_bracket_deg0};
pub use gerstenhaber::{gerstenhaber_bracket, gerstenhaber_circ, is_maurer_cartan, mc_element};
pub use hochschild::{d_hoch, d_hoch_matrix, d_t, d_t_matrix};
pub use lie::{d_ce, psi, skew_symmetrize, AltCochain};
pub use multilinear::{for_each_tuple, BigCochain, Cochain, Multilinear};
