//! Derivation spaces, skew-symmetric derivations, inner derivations and the
//! second cohomology of a quadratic Lie algebra.
//!
//! Every space is computed as the exact nullspace of one linear system over
//! the n² matrix unknowns, then canonicalized by row reduction on the
//! flattened matrices so bases are deterministic.

use crate::forms::QuadraticLieAlgebra;
use crate::lie::LieAlgebra;
use crate::linalg::{Mat, Subspace};
use crate::rat::Rat;
use num_traits::Zero;

/// A linearly independent family of endomorphisms of Q^n, canonicalized.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapSpace {
    map_dim: usize,
    basis: Vec<Mat>,
}

impl MapSpace {
    pub fn from_maps(map_dim: usize, maps: &[Mat]) -> Self {
        let mut rows = Mat::zero(0, map_dim * map_dim);
        for m in maps {
            assert_eq!((m.rows(), m.cols()), (map_dim, map_dim), "map shape mismatch");
            rows = rows.vstack(&flatten(m));
        }
        let (r, pivots) = rows.rref();
        let basis = (0..pivots.len())
            .map(|i| unflatten(map_dim, &r, i))
            .collect();
        MapSpace { map_dim, basis }
    }

    /// Space spanned by the nullspace columns of `system`, each column read
    /// as a flattened `map_dim x map_dim` matrix.
    fn from_system_kernel(map_dim: usize, system: &Mat) -> Self {
        let ker = system.nullspace();
        let maps: Vec<Mat> = (0..ker.cols())
            .map(|j| {
                Mat::from_fn(map_dim, map_dim, |r, c| ker[(r * map_dim + c, j)].clone())
            })
            .collect();
        MapSpace::from_maps(map_dim, &maps)
    }

    pub fn map_dim(&self) -> usize {
        self.map_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn contains(&self, m: &Mat) -> bool {
        let mut cols = Mat::zero(self.map_dim * self.map_dim, self.basis.len());
        for (j, b) in self.basis.iter().enumerate() {
            let f = flatten(b);
            for i in 0..self.map_dim * self.map_dim {
                cols[(i, j)] = f[(0, i)].clone();
            }
        }
        cols.solve(&flatten(m).transpose()).is_some()
    }

    /// Joint kernel of all basis maps; the full ambient space when the
    /// family is empty.
    pub fn common_kernel(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.map_dim);
        }
        let mut stacked = Mat::zero(0, self.map_dim);
        for b in &self.basis {
            stacked = stacked.vstack(b);
        }
        Subspace::from_columns(self.map_dim, &stacked.nullspace())
    }

    /// Rational linear combination of the basis maps.
    pub fn combination(&self, coeffs: &[Rat]) -> Mat {
        assert_eq!(coeffs.len(), self.basis.len(), "wrong coefficient count");
        let mut acc = Mat::zero(self.map_dim, self.map_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            acc = &acc + &b.scale(c);
        }
        acc
    }
}

fn flatten(m: &Mat) -> Mat {
    let n = m.rows();
    Mat::from_fn(1, n * n, |_, j| m[(j / n, j % n)].clone())
}

fn unflatten(n: usize, rows: &Mat, i: usize) -> Mat {
    Mat::from_fn(n, n, |r, c| rows[(i, r * n + c)].clone())
}

/// Is `d` a derivation: `d[x,y] = [dx,y] + [x,dy]` on all basis pairs.
pub fn is_derivation(g: &LieAlgebra, d: &Mat) -> bool {
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            let ei = g.basis_vector(i);
            let ej = g.basis_vector(j);
            let lhs = mat_apply(d, &g.bracket(&ei, &ej));
            let rhs1 = g.bracket(&mat_apply(d, &ei), &ej);
            let rhs2 = g.bracket(&ei, &mat_apply(d, &ej));
            for k in 0..n {
                if lhs[k].clone() - &rhs1[k] - &rhs2[k] != Rat::zero() {
                    return false;
                }
            }
        }
    }
    true
}

pub fn mat_apply(m: &Mat, v: &[Rat]) -> Vec<Rat> {
    assert_eq!(m.cols(), v.len(), "apply: shape mismatch");
    (0..m.rows())
        .map(|i| {
            (0..m.cols()).fold(Rat::zero(), |acc, j| acc + &m[(i, j)] * &v[j])
        })
        .collect()
}

/// Rows of the linear derivation condition over the n² unknowns `D_{r,c}`
/// (unknown index `r * n + c`).
fn derivation_rows(g: &LieAlgebra) -> Mat {
    let n = g.dim();
    let mut rows = Mat::zero(0, n * n);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = Mat::zero(1, n * n);
                // D([ei,ej])_k = sum_m c_ij^m D_{k,m}
                for m in 0..n {
                    let c = g.structure_constant(i, j, m).clone();
                    if !c.is_zero() {
                        row[(0, k * n + m)] = &row[(0, k * n + m)] + &c;
                    }
                }
                // -[D ei, ej]_k = -sum_p D_{p,i} c_pj^k
                for p in 0..n {
                    let c = g.structure_constant(p, j, k).clone();
                    if !c.is_zero() {
                        row[(0, p * n + i)] = &row[(0, p * n + i)] - &c;
                    }
                }
                // -[ei, D ej]_k = -sum_p D_{p,j} c_ip^k
                for p in 0..n {
                    let c = g.structure_constant(i, p, k).clone();
                    if !c.is_zero() {
                        row[(0, p * n + j)] = &row[(0, p * n + j)] - &c;
                    }
                }
                if !row.is_zero() {
                    rows = rows.vstack(&row);
                }
            }
        }
    }
    rows
}

/// Rows of `DᵀM + MD = 0` over the same unknowns.
fn skew_rows(metric: &Mat) -> Mat {
    let n = metric.rows();
    let mut rows = Mat::zero(0, n * n);
    for a in 0..n {
        for b in a..n {
            let mut row = Mat::zero(1, n * n);
            for p in 0..n {
                // (DᵀM)_{a,b} = sum_p D_{p,a} M_{p,b}
                row[(0, p * n + a)] = &row[(0, p * n + a)] + &metric[(p, b)];
                // (MD)_{a,b} = sum_p M_{a,p} D_{p,b}
                row[(0, p * n + b)] = &row[(0, p * n + b)] + &metric[(a, p)];
            }
            if !row.is_zero() {
                rows = rows.vstack(&row);
            }
        }
    }
    rows
}

/// `Der(g)`.
pub fn derivation_space(g: &LieAlgebra) -> MapSpace {
    let n = g.dim();
    let rows = derivation_rows(g);
    if rows.rows() == 0 {
        return MapSpace::from_system_kernel(n, &Mat::zero(1, n * n));
    }
    MapSpace::from_system_kernel(n, &rows)
}

/// `Der(g) ∩ so(g, ⟨,⟩)`.
pub fn skew_derivation_space(q: &QuadraticLieAlgebra) -> MapSpace {
    let n = q.dim();
    let system = derivation_rows(q.algebra()).vstack(&skew_rows(q.metric().matrix()));
    MapSpace::from_system_kernel(n, &system)
}

/// Span of the adjoint maps.
pub fn inner_derivations(g: &LieAlgebra) -> MapSpace {
    let ads: Vec<Mat> = (0..g.dim())
        .map(|i| g.adjoint(&g.basis_vector(i)))
        .collect();
    MapSpace::from_maps(g.dim(), &ads)
}

/// `dim H²(g) = dim(Der ∩ so) − dim{ad_u}`; valid because every inner
/// derivation of a quadratic algebra is skew, which is asserted here.
pub fn h2_dimension(q: &QuadraticLieAlgebra) -> usize {
    let skew = skew_derivation_space(q);
    let inner = inner_derivations(q.algebra());
    for ad in inner.basis() {
        assert!(
            q.is_skew_map(ad),
            "inner derivation is not skew: metric is not invariant"
        );
        assert!(skew.contains(ad));
    }
    skew.dim() - inner.dim()
}

/// `{D ∈ Der ∩ so : D(h) ⊆ h^⊥}`.
pub fn admissible_derivations(q: &QuadraticLieAlgebra, h: &Subspace) -> MapSpace {
    let n = q.dim();
    let mut system = derivation_rows(q.algebra()).vstack(&skew_rows(q.metric().matrix()));
    // ⟨w, D v⟩ = 0 for all h-basis pairs (w, v): coefficient of D_{a,b}
    // is (wᵀM)_a v_b
    let m = q.metric().matrix();
    for w in h.basis_vectors() {
        let wm: Vec<Rat> = (0..n)
            .map(|a| (0..n).fold(Rat::zero(), |acc, p| acc + &w[p] * &m[(p, a)]))
            .collect();
        for v in h.basis_vectors() {
            let mut row = Mat::zero(1, n * n);
            for a in 0..n {
                for b in 0..n {
                    let coeff = &wm[a] * &v[b];
                    if !coeff.is_zero() {
                        row[(0, a * n + b)] = coeff;
                    }
                }
            }
            if !row.is_zero() {
                system = system.vstack(&row);
            }
        }
    }
    MapSpace::from_system_kernel(n, &system)
}
