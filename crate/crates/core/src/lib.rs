//! Exact computations on the linear Poisson structure of the dual of a
//! finite-dimensional Lie algebra.
//!
//! The crate classifies affine subspaces `C = λ + h°` of `g*` (coisotropic,
//! pre-Poisson, Poisson-Dirac, cosymplectic), extends pre-Poisson ones to
//! cosymplectic affine subspaces, derives the `k ⊕ p` decomposition attached
//! to such an extension, and computes the infinitesimal groupoid data
//! (algebroid fibers and coadjoint isotropy algebras).
//!
//! All scalars are exact rationals. Nothing in a verdict path touches floating
//! point.

pub mod algebroid;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod poly;
pub mod report;
pub mod submanifold;

pub use error::{Error, Result};
pub use lie::{LieAlgebra, LinearMap};
pub use linalg::{Matrix, Rational, Subspace, Vector};
pub use poly::Polynomial;
pub use submanifold::{AffineSubspace, SampleSpec};
