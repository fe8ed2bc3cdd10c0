//! k-symplectic certificates and their machine-checkable validity contract.

use crate::forms::{check_cocycle, BilinearForm, QuadraticLieAlgebra, Symmetry, TripleViolation};
use crate::lie::LieAlgebra;
use crate::linalg::{Mat, Subspace};
use crate::rat::{format_rat, Rat};
use std::fmt;

/// The concrete data of a k-symplectic structure: a subalgebra `h` of
/// dimension `n*k` together with `k` antisymmetric 2-cocycles that are
/// jointly nondegenerate and vanish on `h`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KSymplecticCertificate {
    pub k: usize,
    pub n: usize,
    pub h: Subspace,
    pub thetas: Vec<BilinearForm>,
}

/// The violated clause of the certificate contract, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateFailure {
    Dimensions { detail: String },
    NotSubalgebra,
    NotAntisymmetric { alpha: usize },
    CocycleViolation { alpha: usize, violation: TripleViolation },
    DegenerateFamily { witness: Vec<Rat> },
    NotIsotropic { alpha: usize, value: Rat },
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFailure::Dimensions { detail } => write!(f, "dimension clause: {detail}"),
            CertificateFailure::NotSubalgebra => write!(f, "h is not a subalgebra"),
            CertificateFailure::NotAntisymmetric { alpha } => {
                write!(f, "theta_{} is not antisymmetric", alpha + 1)
            }
            CertificateFailure::CocycleViolation { alpha, violation } => {
                write!(f, "theta_{} is not a 2-cocycle: {violation}", alpha + 1)
            }
            CertificateFailure::DegenerateFamily { witness } => {
                let w: Vec<String> = witness.iter().map(format_rat).collect();
                write!(f, "joint kernel is nonzero, witness [{}]", w.join(", "))
            }
            CertificateFailure::NotIsotropic { alpha, value } => write!(
                f,
                "h is not isotropic for theta_{}: value {}",
                alpha + 1,
                format_rat(value)
            ),
        }
    }
}

impl std::error::Error for CertificateFailure {}

/// Extra facts reported alongside a successful verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Whether `h` is degenerate with respect to the supplied metric
    /// (`None` when no metric was supplied).
    pub h_degenerate: Option<bool>,
}

/// Checks all five certificate clauses exactly.
pub fn verify_certificate(
    g: &LieAlgebra,
    cert: &KSymplecticCertificate,
    metric: Option<&QuadraticLieAlgebra>,
) -> Result<VerificationReport, CertificateFailure> {
    let (k, n) = (cert.k, cert.n);
    if g.dim() != n * (k + 1) {
        return Err(CertificateFailure::Dimensions {
            detail: format!("dim g = {} but n(k+1) = {}", g.dim(), n * (k + 1)),
        });
    }
    if cert.h.ambient_dim() != g.dim() {
        return Err(CertificateFailure::Dimensions {
            detail: "h has wrong ambient dimension".into(),
        });
    }
    if cert.h.dim() != n * k {
        return Err(CertificateFailure::Dimensions {
            detail: format!("dim h = {} but nk = {}", cert.h.dim(), n * k),
        });
    }
    if cert.thetas.len() != k {
        return Err(CertificateFailure::Dimensions {
            detail: format!("{} forms supplied but k = {k}", cert.thetas.len()),
        });
    }
    for (alpha, theta) in cert.thetas.iter().enumerate() {
        if theta.dim() != g.dim() || theta.symmetry() != Symmetry::Antisymmetric {
            return Err(CertificateFailure::NotAntisymmetric { alpha });
        }
    }
    if !g.is_subalgebra(&cert.h) {
        return Err(CertificateFailure::NotSubalgebra);
    }
    for (alpha, theta) in cert.thetas.iter().enumerate() {
        if let Err(violation) = check_cocycle(g, theta) {
            return Err(CertificateFailure::CocycleViolation { alpha, violation });
        }
    }
    // joint kernel of the family
    let mut stacked = Mat::zero(0, g.dim());
    for theta in &cert.thetas {
        stacked = stacked.vstack(theta.matrix());
    }
    let joint = stacked.nullspace();
    if joint.cols() > 0 {
        return Err(CertificateFailure::DegenerateFamily {
            witness: joint.col(0),
        });
    }
    // total isotropy of h
    let basis = cert.h.basis_vectors();
    for (alpha, theta) in cert.thetas.iter().enumerate() {
        for (a, u) in basis.iter().enumerate() {
            for v in &basis[a + 1..] {
                let value = theta.eval(u, v);
                if !num_traits::Zero::is_zero(&value) {
                    return Err(CertificateFailure::NotIsotropic { alpha, value });
                }
            }
        }
    }
    let h_degenerate = metric.map(|q| {
        assert_eq!(q.dim(), g.dim(), "metric dimension mismatch");
        q.is_degenerate_on(&cert.h)
    });
    Ok(VerificationReport { h_degenerate })
}

/// Splits `h` into the direct sum `⊕ h^α` with
/// `h^α = {x ∈ h : θ_β(x, ·) = 0 for all β ≠ α}`.
///
/// Returns one subspace per form; their dimensions sum to `dim h` and the
/// sum is direct (asserted). Only call on a verified certificate.
pub fn theta_decomposition(g: &LieAlgebra, cert: &KSymplecticCertificate) -> Vec<Subspace> {
    verify_certificate(g, cert, None).expect("theta_decomposition needs a valid certificate");
    let dim = g.dim();
    let mut parts = Vec::with_capacity(cert.k);
    for alpha in 0..cert.k {
        let mut part = cert.h.clone();
        for (beta, theta) in cert.thetas.iter().enumerate() {
            if beta != alpha {
                part = part.intersect(&theta.kernel());
            }
        }
        parts.push(part);
    }
    let total: usize = parts.iter().map(Subspace::dim).sum();
    assert_eq!(total, cert.h.dim(), "decomposition dimensions must sum to dim h");
    let mut sum = Subspace::zero(dim);
    for p in &parts {
        sum = sum.sum(p);
    }
    assert_eq!(sum, cert.h, "decomposition must span h");
    parts
}
