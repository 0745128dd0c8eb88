//! Exact-arithmetic toolkit for planar line configurations and the surfaces
//! built on top of them.
//!
//! The crate is organised around a small stack of layers:
//!
//! - [`scalar`] / [`poly`] / [`matrix`]: exact scalars (rationals, cyclotomic
//!   field elements, prime fields), sparse multivariate polynomials and
//!   polynomial matrices with exact determinants, minors, kernels and ranks.
//! - [`config`]: projective line configurations, their incidence data and the
//!   combinatorial rigidity calculus (Euler characteristic formula,
//!   saturation and inductive-chain flags, extension rules, named catalog).
//! - [`kummer`]: singular Kummer covers of the plane branched on a
//!   configuration, their gradient matrices, and a linear-algebra certificate
//!   that relation-constrained first-order equisingular deformations are
//!   trivial.
//! - [`delpezzo`]: determinantal presentations of Del Pezzo surfaces in
//!   products of projective lines (degrees 8 down to 4), with exact
//!   verification of the Hilbert-Burch identities.
//! - [`hk`]: the embedding of the covering surfaces into products of Fermat
//!   curves: pullback factorization over cyclotomic fields, root-of-unity
//!   component counting and finite-field smoothness sampling.
//!
//! Everything is exact: no floating point anywhere.

pub mod config;
pub mod delpezzo;
pub mod error;
pub mod hk;
pub mod kummer;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use matrix::PolyMatrix;
pub use poly::MultiPoly;
pub use scalar::{FieldSpec, Scalar};
