//! Exact-arithmetic toolkit for left invariant k-symplectic structures on
//! Lie algebras with an invariant nondegenerate metric.
//!
//! All computations are over arbitrary-precision rationals; every verdict
//! (Jacobi, invariance, cocycle, nondegeneracy, certificate validity) is
//! decided exactly.

pub mod catalog;
pub mod cert;
pub mod construct;
pub mod deriv;
pub mod doc;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod obstruct;
pub mod rat;
pub mod search;

pub use cert::{verify_certificate, CertificateFailure, KSymplecticCertificate};
pub use forms::{BilinearForm, QuadraticLieAlgebra};
pub use lie::LieAlgebra;
pub use linalg::{Mat, Subspace};
pub use rat::Rat;
