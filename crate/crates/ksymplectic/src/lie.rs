//! Lie algebras as structure-constant tensors.
//!
//! The tensor stores `[e_i, e_j] = sum_k c[i][j][k] e_k` densely; everything
//! downstream (series, center, Killing form) is exact linear algebra on it.

use crate::linalg::{Mat, Subspace};
use crate::rat::{format_rat, Rat};
use num_traits::Zero;
use std::fmt;

#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    /// Flattened rank-3 tensor, index `(i * dim + j) * dim + k`.
    c: Vec<Rat>,
}

/// First basis triple on which the Jacobi identity fails, with the residual
/// vector of `[[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Rat>,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let res: Vec<String> = self.residual.iter().map(format_rat).collect();
        write!(
            f,
            "Jacobi identity fails on basis triple ({}, {}, {}); residual [{}]",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            res.join(", ")
        )
    }
}

impl LieAlgebra {
    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            names: default_names(dim),
            c: vec![Rat::zero(); dim * dim * dim],
        }
    }

    /// Build from the nonzero brackets `[e_i, e_j] = sum coeffs_k e_k`
    /// (0-based indices, `i != j`); the antisymmetric counterparts are filled
    /// in automatically. Panics when a pair is specified twice or both ways.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<(usize, Rat)>)]) -> Self {
        let mut g = LieAlgebra::abelian(dim);
        let mut seen = std::collections::HashSet::new();
        for (i, j, coeffs) in brackets {
            assert!(*i < dim && *j < dim && i != j, "bad bracket indices");
            assert!(
                seen.insert((*i.min(j), *i.max(j))),
                "bracket ({}, {}) specified twice",
                i + 1,
                j + 1
            );
            for (k, v) in coeffs {
                assert!(*k < dim, "bad bracket target index");
                g.set_c(*i, *j, *k, v.clone());
            }
        }
        g
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim, "wrong number of basis names");
        self.names = names;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    fn set_c(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        let d = self.dim;
        // antisymmetry: c[j][i][k] = -c[i][j][k]
        self.c[(j * d + i) * d + k] = -v.clone();
        self.c[(i * d + j) * d + k] = v;
    }

    /// `[x, y]` evaluated through the structure constants.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim, "bracket: wrong vector length");
        assert_eq!(y.len(), self.dim, "bracket: wrong vector length");
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &f;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::from_integer(1.into());
        v
    }

    pub fn check_jacobi(&self) -> Result<(), JacobiViolation> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let mut res = self.bracket(&self.bracket(&ei, &ej), &ek);
                    for (a, b) in res
                        .iter_mut()
                        .zip(self.bracket(&self.bracket(&ej, &ek), &ei))
                    {
                        *a += b;
                    }
                    for (a, b) in res
                        .iter_mut()
                        .zip(self.bracket(&self.bracket(&ek, &ei), &ej))
                    {
                        *a += b;
                    }
                    if res.iter().any(|r| !r.is_zero()) {
                        return Err(JacobiViolation {
                            i,
                            j,
                            k,
                            residual: res,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `ad_x`, columns `[x, e_j]`.
    pub fn adjoint(&self, x: &[Rat]) -> Mat {
        Mat::from_fn(self.dim, self.dim, |i, j| {
            self.bracket(x, &self.basis_vector(j))[i].clone()
        })
    }

    /// Killing form `k(u, v) = tr(ad_u ad_v)` as a symmetric matrix.
    pub fn killing_matrix(&self) -> Mat {
        let ads: Vec<Mat> = (0..self.dim)
            .map(|i| self.adjoint(&self.basis_vector(i)))
            .collect();
        Mat::from_fn(self.dim, self.dim, |i, j| {
            let p = &ads[i] * &ads[j];
            (0..self.dim).fold(Rat::zero(), |acc, k| acc + &p[(k, k)])
        })
    }

    /// `{x : ad_x = 0}` as the joint kernel of all adjoint maps.
    pub fn center(&self) -> Subspace {
        let mut stacked = Mat::zero(0, self.dim);
        for j in 0..self.dim {
            // rows of the map x -> [x, e_j]
            let m = Mat::from_fn(self.dim, self.dim, |k, i| {
                self.structure_constant(i, j, k).clone()
            });
            stacked = stacked.vstack(&m);
        }
        Subspace::from_columns(self.dim, &stacked.nullspace())
    }

    /// Span of `[u, v]` over basis pairs of the two subspaces.
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in s.basis_vectors() {
            for v in t.basis_vectors() {
                vecs.push(self.bracket(&u, &v));
            }
        }
        Subspace::from_vectors(self.dim, &vecs)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_span(&full, &full)
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...`, ending at the first stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let next = self.bracket_span(&series[0], series.last().unwrap());
            if &next == series.last().unwrap() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ...`, ending at the first stabilization.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.derived_subalgebra().is_zero()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim, "subspace ambient mismatch");
        let basis = s.basis_vectors();
        basis.iter().enumerate().all(|(a, u)| {
            basis[a + 1..]
                .iter()
                .all(|v| s.contains(&self.bracket(u, v)))
        })
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim, "subspace ambient mismatch");
        s.basis_vectors().iter().all(|u| {
            (0..self.dim).all(|j| s.contains(&self.bracket(u, &self.basis_vector(j))))
        })
    }

    /// Block-diagonal product; basis order is `self` then `other`.
    pub fn direct_product(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut g = LieAlgebra::abelian(dim);
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        g.names = names;
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let v = self.structure_constant(i, j, k).clone();
                    if !v.is_zero() {
                        g.c[(i * dim + j) * dim + k] = v;
                    }
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    let v = other.structure_constant(i, j, k).clone();
                    if !v.is_zero() {
                        g.c[((self.dim + i) * dim + self.dim + j) * dim + self.dim + k] = v;
                    }
                }
            }
        }
        g
    }

    /// Structure constants in the basis whose j-th vector is column j of `p`.
    pub fn change_basis(&self, p: &Mat) -> LieAlgebra {
        assert_eq!((p.rows(), p.cols()), (self.dim, self.dim), "bad basis matrix");
        let mut g = LieAlgebra::abelian(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let b = self.bracket(&p.col(i), &p.col(j));
                let coeffs = p
                    .solve(&Mat::col_vec(&b))
                    .expect("change_basis: matrix not invertible");
                for k in 0..self.dim {
                    let v = coeffs[(k, 0)].clone();
                    if !v.is_zero() {
                        g.set_c(i, j, k, v);
                    }
                }
            }
        }
        g
    }
}

/// Equality of structure constants; basis names are labels only.
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.c == other.c
    }
}

impl Eq for LieAlgebra {}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim={})", self.dim)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let terms: Vec<String> = (0..self.dim)
                    .filter(|&k| !self.structure_constant(i, j, k).is_zero())
                    .map(|k| {
                        format!(
                            "{} {}",
                            format_rat(self.structure_constant(i, j, k)),
                            self.names[k]
                        )
                    })
                    .collect();
                if !terms.is_empty() {
                    write!(f, " [{},{}]={}", self.names[i], self.names[j], terms.join("+"))?;
                }
            }
        }
        Ok(())
    }
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}
