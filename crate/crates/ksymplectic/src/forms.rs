//! Bilinear forms on a Lie algebra: invariant metrics, 2-cocycles, and the
//! correspondence between 2-forms and skew-symmetric endomorphisms.

use crate::lie::LieAlgebra;
use crate::linalg::{Mat, Subspace};
use crate::rat::Rat;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    matrix: Mat,
    symmetry: Symmetry,
}

impl BilinearForm {
    pub fn symmetric(matrix: Mat) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "form matrix must be square");
        assert_eq!(matrix, matrix.transpose(), "matrix is not symmetric");
        BilinearForm {
            matrix,
            symmetry: Symmetry::Symmetric,
        }
    }

    pub fn antisymmetric(matrix: Mat) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "form matrix must be square");
        assert_eq!(matrix, -&matrix.transpose(), "matrix is not antisymmetric");
        BilinearForm {
            matrix,
            symmetry: Symmetry::Antisymmetric,
        }
    }

    /// Symmetric form from 0-based `(i, j, value)` entries; `(j, i)` is
    /// filled in automatically.
    pub fn symmetric_from_entries(dim: usize, entries: &[(usize, usize, Rat)]) -> Self {
        let mut m = Mat::zero(dim, dim);
        for (i, j, v) in entries {
            m[(*i, *j)] = v.clone();
            m[(*j, *i)] = v.clone();
        }
        BilinearForm::symmetric(m)
    }

    /// Zero antisymmetric form, a starting point for sums of wedges.
    pub fn zero_antisymmetric(dim: usize) -> Self {
        BilinearForm::antisymmetric(Mat::zero(dim, dim))
    }

    /// The wedge `ei* ∧ ej*` with `(α∧β)(u,v) = α(u)β(v) − α(v)β(u)`
    /// (0-based indices).
    pub fn wedge(dim: usize, i: usize, j: usize) -> Self {
        assert!(i < dim && j < dim && i != j, "bad wedge indices");
        let mut m = Mat::zero(dim, dim);
        m[(i, j)] = crate::rat::rat(1);
        m[(j, i)] = crate::rat::rat(-1);
        BilinearForm::antisymmetric(m)
    }

    /// `self + c * (ei* ∧ ej*)`.
    pub fn plus_wedge(&self, c: Rat, i: usize, j: usize) -> Self {
        let w = BilinearForm::wedge(self.dim(), i, j);
        BilinearForm::antisymmetric(&self.matrix + &w.matrix.scale(&c))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn eval(&self, u: &[Rat], v: &[Rat]) -> Rat {
        assert_eq!(u.len(), self.dim(), "eval: wrong vector length");
        assert_eq!(v.len(), self.dim(), "eval: wrong vector length");
        let mut acc = Rat::zero();
        for i in 0..self.dim() {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                let m = &self.matrix[(i, j)];
                if !m.is_zero() && !v[j].is_zero() {
                    acc += &u[i] * m * &v[j];
                }
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.det().is_zero()
    }

    /// `ker = {x : b(x, ·) = 0}`.
    pub fn kernel(&self) -> Subspace {
        Subspace::from_columns(self.dim(), &self.matrix.nullspace())
    }
}

/// Basis triple witnessing a failed trilinear identity (invariance or
/// cocycle), 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleViolation {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub residual: Rat,
}

impl fmt::Display for TripleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "fails on basis triple ({}, {}, {}) with residual {}",
            self.u + 1,
            self.v + 1,
            self.w + 1,
            crate::rat::format_rat(&self.residual)
        )
    }
}

/// `⟨[u,v],w⟩ + ⟨[u,w],v⟩ = 0` on all basis triples.
pub fn check_invariance(g: &LieAlgebra, b: &BilinearForm) -> Result<(), TripleViolation> {
    assert_eq!(b.symmetry(), Symmetry::Symmetric, "metric must be symmetric");
    assert_eq!(b.dim(), g.dim(), "metric dimension mismatch");
    for u in 0..g.dim() {
        for v in 0..g.dim() {
            for w in v..g.dim() {
                let eu = g.basis_vector(u);
                let ev = g.basis_vector(v);
                let ew = g.basis_vector(w);
                let r = b.eval(&g.bracket(&eu, &ev), &ew) + b.eval(&g.bracket(&eu, &ew), &ev);
                if !r.is_zero() {
                    return Err(TripleViolation {
                        u,
                        v,
                        w,
                        residual: r,
                    });
                }
            }
        }
    }
    Ok(())
}

/// `θ([u,v],w) + θ([v,w],u) + θ([w,u],v) = 0` on all basis triples.
pub fn check_cocycle(g: &LieAlgebra, theta: &BilinearForm) -> Result<(), TripleViolation> {
    assert_eq!(
        theta.symmetry(),
        Symmetry::Antisymmetric,
        "cocycle candidate must be antisymmetric"
    );
    assert_eq!(theta.dim(), g.dim(), "form dimension mismatch");
    for u in 0..g.dim() {
        for v in u + 1..g.dim() {
            for w in v + 1..g.dim() {
                let eu = g.basis_vector(u);
                let ev = g.basis_vector(v);
                let ew = g.basis_vector(w);
                let r = theta.eval(&g.bracket(&eu, &ev), &ew)
                    + theta.eval(&g.bracket(&ev, &ew), &eu)
                    + theta.eval(&g.bracket(&ew, &eu), &ev);
                if !r.is_zero() {
                    return Err(TripleViolation {
                        u,
                        v,
                        w,
                        residual: r,
                    });
                }
            }
        }
    }
    Ok(())
}

/// A Lie algebra with a nondegenerate invariant metric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticLieAlgebra {
    algebra: LieAlgebra,
    metric: BilinearForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadraticError {
    Jacobi(crate::lie::JacobiViolation),
    NotInvariant(TripleViolation),
    Degenerate,
}

impl fmt::Display for QuadraticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadraticError::Jacobi(v) => write!(f, "{v}"),
            QuadraticError::NotInvariant(v) => write!(f, "metric is not invariant: {v}"),
            QuadraticError::Degenerate => write!(f, "metric is degenerate"),
        }
    }
}

impl std::error::Error for QuadraticError {}

impl QuadraticLieAlgebra {
    pub fn new(algebra: LieAlgebra, metric: BilinearForm) -> Result<Self, QuadraticError> {
        algebra.check_jacobi().map_err(QuadraticError::Jacobi)?;
        check_invariance(&algebra, &metric).map_err(QuadraticError::NotInvariant)?;
        if !metric.is_nondegenerate() {
            return Err(QuadraticError::Degenerate);
        }
        Ok(QuadraticLieAlgebra { algebra, metric })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &BilinearForm {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `s^⊥` with respect to the metric.
    pub fn orthogonal_complement(&self, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient_dim(), self.dim(), "subspace ambient mismatch");
        // x with basisᵀ · M · x = 0
        let constraints = &s.basis().transpose() * self.metric.matrix();
        Subspace::from_columns(self.dim(), &constraints.nullspace())
    }

    /// True when the restricted Gram matrix is singular.
    pub fn is_degenerate_on(&self, s: &Subspace) -> bool {
        let b = s.basis();
        let gram = &(&b.transpose() * self.metric.matrix()) * b;
        gram.det().is_zero()
    }

    /// `θ(u, v) = ⟨D u, v⟩`, i.e. `θ = Dᵀ M`. Requires `D` skew-symmetric
    /// with respect to the metric for the result to be antisymmetric.
    pub fn form_from_derivation(&self, d: &Mat) -> BilinearForm {
        assert_eq!((d.rows(), d.cols()), (self.dim(), self.dim()), "map shape mismatch");
        BilinearForm::antisymmetric(&d.transpose() * self.metric.matrix())
    }

    /// Inverse of [`Self::form_from_derivation`]: `D = M⁻¹ θᵀ`.
    pub fn derivation_from_form(&self, theta: &BilinearForm) -> Mat {
        assert_eq!(theta.dim(), self.dim(), "form dimension mismatch");
        self.metric
            .matrix()
            .solve(&theta.matrix().transpose())
            .expect("metric is nondegenerate")
    }

    /// Is `d` skew-symmetric w.r.t. the metric, i.e. `dᵀM + Md = 0`.
    pub fn is_skew_map(&self, d: &Mat) -> bool {
        let m = self.metric.matrix();
        (&(&d.transpose() * m) + &(m * d)).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![(2, rat(1))]),
                (2, 0, vec![(0, rat(2))]),
                (2, 1, vec![(1, rat(-2))]),
            ],
        )
    }

    fn sl2_metric() -> BilinearForm {
        // Table metric: (1,2)=1, (3,3)=2
        BilinearForm::symmetric_from_entries(3, &[(0, 1, rat(1)), (2, 2, rat(2))])
    }

    #[test]
    fn invariance_cases() {
        assert!(check_invariance(&sl2(), &sl2_metric()).is_ok());
        // abelian: anything symmetric is invariant
        let ab = LieAlgebra::abelian(3);
        let b = BilinearForm::symmetric_from_entries(3, &[(0, 0, rat(2)), (0, 1, rat(5))]);
        assert!(check_invariance(&ab, &b).is_ok());
        // the euclidean metric is not invariant on sl2 (triple (e3,e1,e1))
        let bad = BilinearForm::symmetric(Mat::identity(3));
        assert!(check_invariance(&sl2(), &bad).is_err());
    }

    #[test]
    fn nondegeneracy_cases() {
        let killing = BilinearForm::symmetric(sl2().killing_matrix());
        assert!(killing.is_nondegenerate());
        assert!(!BilinearForm::symmetric(Mat::zero(2, 2)).is_nondegenerate());
    }

    #[test]
    fn orthogonal_complement_cases() {
        let q = QuadraticLieAlgebra::new(sl2(), sl2_metric()).unwrap();
        assert!(q.orthogonal_complement(&Subspace::full(3)).is_zero());
        // [g,g]^⊥ = Z(g) holds trivially here: both are zero for sl2
        assert_eq!(
            q.orthogonal_complement(&q.algebra().derived_subalgebra()),
            q.algebra().center()
        );
        // involution
        let s = Subspace::from_vectors(3, &[vec![rat(1), rat(2), rat(-1)]]);
        assert_eq!(
            q.orthogonal_complement(&q.orthogonal_complement(&s)),
            s
        );
    }

    #[test]
    fn degenerate_on_cases() {
        let killing = BilinearForm::symmetric(sl2().killing_matrix());
        let q = QuadraticLieAlgebra::new(sl2(), killing).unwrap();
        // Gram of span{e1,e3} under Killing is [[0,0],[0,8]]
        assert!(q.is_degenerate_on(&Subspace::coordinate(3, &[0, 2])));
        assert!(!q.is_degenerate_on(&Subspace::full(3)));
        // totally isotropic span{e1} (Killing(e1,e1)=0)
        assert!(q.is_degenerate_on(&Subspace::coordinate(3, &[0])));
    }

    #[test]
    fn cocycle_cases() {
        let g = sl2();
        // e1* ∧ e2* is a cocycle on sl2
        assert!(check_cocycle(&g, &BilinearForm::wedge(3, 0, 1)).is_ok());
        // on sl2 every antisymmetric form is a cocycle (coboundaries fill Λ²)
        assert!(check_cocycle(&g, &BilinearForm::wedge(3, 0, 2)).is_ok());
        // Heisenberg + line, [e1,e2]=e3: e3*∧e4* fails on (e1,e2,e4)
        let h = LieAlgebra::from_brackets(4, &[(0, 1, vec![(2, rat(1))])]);
        let err = check_cocycle(&h, &BilinearForm::wedge(4, 2, 3)).unwrap_err();
        assert_eq!((err.u, err.v, err.w), (0, 1, 3));
        // abelian: everything antisymmetric is a cocycle
        let ab = LieAlgebra::abelian(4);
        assert!(check_cocycle(&ab, &BilinearForm::wedge(4, 1, 3)).is_ok());
    }

    #[test]
    fn form_derivation_roundtrip() {
        let killing = BilinearForm::symmetric(sl2().killing_matrix());
        let q = QuadraticLieAlgebra::new(sl2(), killing).unwrap();
        // D = ad_{e3} is skew w.r.t. the Killing form
        let d = q.algebra().adjoint(&q.algebra().basis_vector(2));
        assert!(q.is_skew_map(&d));
        let theta = q.form_from_derivation(&d);
        // θ(e1,e2) = κ([e3,e1],e2) = 2κ(e1,e2) = 8
        assert_eq!(
            theta.eval(&q.algebra().basis_vector(0), &q.algebra().basis_vector(1)),
            rat(8)
        );
        assert_eq!(q.derivation_from_form(&theta), d);

        // D = 0 gives θ = 0
        let z = q.form_from_derivation(&Mat::zero(3, 3));
        assert!(z.matrix().is_zero());

        // round-trip on a random-ish skew map over the table metric
        let q = QuadraticLieAlgebra::new(sl2(), sl2_metric()).unwrap();
        let m = q.metric().matrix().clone();
        // pick theta arbitrary antisymmetric, D = M^{-1}θᵀ is then skew
        let theta = BilinearForm::antisymmetric(
            &Mat::from_int_rows(&[&[0, 3, -1], &[-3, 0, 2], &[1, -2, 0]]) * &Mat::identity(3),
        );
        let d = q.derivation_from_form(&theta);
        assert!(q.is_skew_map(&d));
        assert_eq!(q.form_from_derivation(&d), theta);
        let _ = m;
    }

    #[test]
    fn subalgebra_orthogonal_bracket_property() {
        // if s is a subalgebra then [s, s^⊥] ⊆ s^⊥
        let killing = BilinearForm::symmetric(sl2().killing_matrix());
        let q = QuadraticLieAlgebra::new(sl2(), killing).unwrap();
        let s = Subspace::coordinate(3, &[0, 2]);
        assert!(q.algebra().is_subalgebra(&s));
        let perp = q.orthogonal_complement(&s);
        let br = q.algebra().bracket_span(&s, &perp);
        assert!(perp.contains_subspace(&br));
        let _ = ratio(1, 2);
    }
}
