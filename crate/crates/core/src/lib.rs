//! Exact computation of the fundamental group and the second homotopy group
//! of a homogeneous space `X = G/H` of a connected complex linear algebraic
//! group, starting from combinatorial data only: root data, character and
//! cocharacter lattices, and the integer matrices relating them.
//!
//! The crate is layered bottom-up:
//!
//! * [`intlat`]: exact integer matrices, Smith normal form, kernels, saturation.
//! * [`fgab`]: finitely generated abelian groups given by presentations, and
//!   homomorphisms between them.
//! * [`extcplx`]: two-term complexes `[A⁰ → A¹⟩` and `Ext⁰(−, ℤ)` computed by a
//!   fiber-product construction and, independently, by free resolutions.
//! * [`rootdata`]: root data, character groups, `π₁^alg` and Picard groups.
//! * [`homotopy`]: `π₁` and `π₂` of `G/H` with hypothesis gating.
//! * [`catalog`]: named classical groups and standard embeddings.
//! * [`cli`]: the `homotopy-calc` front end.
//!
//! All groups are reported as `π_n(X, x)(−1) = Hom(ℤ(1), π_n(X, x))`. Since the
//! outputs are abstract groups in canonical form, the Tate twist is invisible
//! in the results.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod extcplx;
pub mod fgab;
pub mod homotopy;
pub mod intlat;
pub mod rootdata;

pub use error::{Error, Result};
pub use fgab::{FgAbGroup, FgAbMap, InvariantFactors};
pub use intlat::{IntMatrix, SnfResult};
