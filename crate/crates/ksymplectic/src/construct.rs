//! Quadratic Lie algebra factories: T*-extension, double extension,
//! oscillator algebras, the abelian k-symplectic family and the canonical
//! n-symplectic structure on sl(n,R).

use crate::cert::KSymplecticCertificate;
use crate::deriv::is_derivation;
use crate::forms::{BilinearForm, QuadraticLieAlgebra};
use crate::lie::LieAlgebra;
use crate::linalg::{Mat, Subspace};
use crate::rat::{rat, Rat};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructError(pub String);

impl std::fmt::Display for ConstructError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConstructError {}

/// T*-extension of `g`: the quadratic algebra on `g ⊕ g*` with bracket
/// `[u+α, v+β] = [u,v] + ad*_u β − ad*_v α` and the duality pairing metric.
/// Basis order is the `g`-basis followed by its dual.
pub fn t_star_extension(g: &LieAlgebra) -> Result<QuadraticLieAlgebra, ConstructError> {
    g.check_jacobi()
        .map_err(|e| ConstructError(e.to_string()))?;
    let n = g.dim();
    let dim = 2 * n;
    let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let coeffs: Vec<(usize, Rat)> = (0..n)
                .filter(|&k| !g.structure_constant(i, j, k).is_zero())
                .map(|k| (k, g.structure_constant(i, j, k).clone()))
                .collect();
            if !coeffs.is_empty() {
                brackets.push((i, j, coeffs));
            }
        }
    }
    // [e_i, e_j*] = ad*_{e_i} e_j* = -sum_m c_im^j e_m*
    for i in 0..n {
        for j in 0..n {
            let coeffs: Vec<(usize, Rat)> = (0..n)
                .filter(|&m| !g.structure_constant(i, m, j).is_zero())
                .map(|m| (n + m, -g.structure_constant(i, m, j).clone()))
                .collect();
            if !coeffs.is_empty() {
                brackets.push((i, n + j, coeffs));
            }
        }
    }
    let mut names = g.basis_names().to_vec();
    names.extend(g.basis_names().iter().map(|s| format!("{s}*")));
    let algebra = LieAlgebra::from_brackets(dim, &brackets).with_names(names);
    let metric = BilinearForm::symmetric_from_entries(
        dim,
        &(0..n).map(|i| (i, n + i, Rat::one())).collect::<Vec<_>>(),
    );
    QuadraticLieAlgebra::new(algebra, metric).map_err(|e| ConstructError(e.to_string()))
}

/// Double extension of a quadratic algebra by a skew-symmetric derivation
/// `a`. Basis order is `(e, base basis, ē)` with `[ē, u] = A u`,
/// `[u, v] = ⟨Au, v⟩ e + [u, v]_base`, `⟨e, ē⟩ = 1` and `e, ē` isotropic and
/// orthogonal to the base.
pub fn double_extension(
    base: &QuadraticLieAlgebra,
    a: &Mat,
) -> Result<QuadraticLieAlgebra, ConstructError> {
    let n = base.dim();
    if (a.rows(), a.cols()) != (n, n) {
        return Err(ConstructError("extension map has wrong shape".into()));
    }
    if !base.is_skew_map(a) {
        return Err(ConstructError(
            "extension map is not skew-symmetric for the base metric".into(),
        ));
    }
    if !is_derivation(base.algebra(), a) {
        return Err(ConstructError(
            "extension map is not a derivation of the base".into(),
        ));
    }
    let dim = n + 2;
    let g = base.algebra();
    let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
    // [ē, u_i] = A u_i
    for i in 0..n {
        let coeffs: Vec<(usize, Rat)> = (0..n)
            .filter(|&k| !a[(k, i)].is_zero())
            .map(|k| (1 + k, a[(k, i)].clone()))
            .collect();
        if !coeffs.is_empty() {
            brackets.push((n + 1, 1 + i, coeffs));
        }
    }
    // [u_i, u_j] = ⟨A e_i, e_j⟩ e + [e_i, e_j]_base
    for i in 0..n {
        for j in i + 1..n {
            let mut coeffs: Vec<(usize, Rat)> = Vec::new();
            let pairing = base
                .metric()
                .eval(&crate::deriv::mat_apply(a, &g.basis_vector(i)), &g.basis_vector(j));
            if !pairing.is_zero() {
                coeffs.push((0, pairing));
            }
            for k in 0..n {
                let c = g.structure_constant(i, j, k);
                if !c.is_zero() {
                    coeffs.push((1 + k, c.clone()));
                }
            }
            if !coeffs.is_empty() {
                brackets.push((1 + i, 1 + j, coeffs));
            }
        }
    }
    let mut names = vec!["e".to_string()];
    names.extend(g.basis_names().iter().cloned());
    names.push("ê".to_string());
    let algebra = LieAlgebra::from_brackets(dim, &brackets).with_names(names);
    let metric = Mat::from_fn(dim, dim, |i, j| {
        if (i, j) == (0, n + 1) || (i, j) == (n + 1, 0) {
            Rat::one()
        } else if (1..=n).contains(&i) && (1..=n).contains(&j) {
            base.metric().matrix()[(i - 1, j - 1)].clone()
        } else {
            Rat::zero()
        }
    });
    QuadraticLieAlgebra::new(algebra, BilinearForm::symmetric(metric))
        .map_err(|e| ConstructError(e.to_string()))
}

/// Oscillator algebra of dimension `2n + 2` on the basis
/// `(e_-1, e_0, e_1, ě_1, ..., e_n, ě_n)` with `[e_-1, e_i] = λ_i ě_i`,
/// `[e_-1, ě_i] = -λ_i e_i`, `[e_i, ě_i] = e_0` and metric
/// `2 x_-1 x_0 + Σ (1/λ_i)(x_i² + y_i²)`.
///
/// Requires `0 < λ_1 ≤ ... ≤ λ_n`.
pub fn oscillator(lambdas: &[Rat]) -> Result<QuadraticLieAlgebra, ConstructError> {
    if lambdas.is_empty() {
        return Err(ConstructError("at least one frequency required".into()));
    }
    for l in lambdas {
        if !crate::rat::is_positive(l) {
            return Err(ConstructError("frequencies must be positive".into()));
        }
    }
    if lambdas.windows(2).any(|w| w[0] > w[1]) {
        return Err(ConstructError("frequencies must be sorted ascending".into()));
    }
    let n = lambdas.len();
    let dim = 2 * n + 2;
    let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
    let mut metric_entries = vec![(0, 1, Rat::one())];
    let mut names = vec!["e-1".to_string(), "e0".to_string()];
    for (i, l) in lambdas.iter().enumerate() {
        let (ei, fi) = (2 + 2 * i, 3 + 2 * i);
        brackets.push((0, ei, vec![(fi, l.clone())]));
        brackets.push((0, fi, vec![(ei, -l.clone())]));
        brackets.push((ei, fi, vec![(1, Rat::one())]));
        metric_entries.push((ei, ei, l.recip()));
        metric_entries.push((fi, fi, l.recip()));
        names.push(format!("e{}", i + 1));
        names.push(format!("ě{}", i + 1));
    }
    let algebra = LieAlgebra::from_brackets(dim, &brackets).with_names(names);
    let metric = BilinearForm::symmetric_from_entries(dim, &metric_entries);
    QuadraticLieAlgebra::new(algebra, metric).map_err(|e| ConstructError(e.to_string()))
}

/// The abelian algebra of dimension `n(k+1)` with its canonical k-symplectic
/// structure: basis `(e_{pi})_{p≤k, i≤n}` then `(e_i)_{i≤n}`,
/// `θ_α = Σ_i ω^{αi} ∧ ω^i` and `h = span{e_{pi}}`. The metric is euclidean.
pub fn abelian_ksymplectic(
    n: usize,
    k: usize,
) -> Result<(QuadraticLieAlgebra, KSymplecticCertificate), ConstructError> {
    if n == 0 || k == 0 {
        return Err(ConstructError("n and k must be at least 1".into()));
    }
    let dim = n * (k + 1);
    let algebra = LieAlgebra::abelian(dim);
    let metric = BilinearForm::symmetric(Mat::identity(dim));
    let q = QuadraticLieAlgebra::new(algebra, metric).expect("abelian with euclidean metric");
    let h: Vec<usize> = (0..n * k).collect();
    let thetas = (0..k)
        .map(|alpha| {
            let mut theta = BilinearForm::zero_antisymmetric(dim);
            for i in 0..n {
                theta = theta.plus_wedge(rat(1), alpha * n + i, k * n + i);
            }
            theta
        })
        .collect();
    let cert = KSymplecticCertificate {
        k,
        n,
        h: Subspace::coordinate(dim, &h),
        thetas,
    };
    Ok((q, cert))
}

/// sl(n,R) in the integral basis `{E_ij : i≠j}` (row-major order) followed
/// by `{E_ii − E_{i+1,i+1}}`, with the canonical n-symplectic structure:
/// `h = {A : A e_n ∈ R e_n}` and `θ_α(u,v) = -[u,v]_{α,n}`.
pub fn sln_certificate(n: usize) -> Result<(LieAlgebra, KSymplecticCertificate), ConstructError> {
    if n < 2 {
        return Err(ConstructError("n must be at least 2".into()));
    }
    // basis as n x n matrices
    let mut basis: Vec<Mat> = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Mat::zero(n, n);
                m[(i, j)] = Rat::one();
                basis.push(m);
                names.push(format!("E{}{}", i + 1, j + 1));
            }
        }
    }
    for i in 0..n - 1 {
        let mut m = Mat::zero(n, n);
        m[(i, i)] = Rat::one();
        m[(i + 1, i + 1)] = -Rat::one();
        basis.push(m);
        names.push(format!("H{}", i + 1));
    }
    let dim = basis.len(); // n^2 - 1

    // expand a traceless matrix in the basis: off-diagonal entries directly,
    // diagonal via partial sums
    let expand = |m: &Mat| -> Vec<Rat> {
        let mut coeffs = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    coeffs.push(m[(i, j)].clone());
                }
            }
        }
        let mut partial = Rat::zero();
        for i in 0..n - 1 {
            partial += &m[(i, i)];
            coeffs.push(partial.clone());
        }
        coeffs
    };

    let commutator = |a: &Mat, b: &Mat| -> Mat { &(a * b) - &(b * a) };

    let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let coeffs: Vec<(usize, Rat)> = expand(&commutator(&basis[a], &basis[b]))
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            if !coeffs.is_empty() {
                brackets.push((a, b, coeffs));
            }
        }
    }
    let algebra = LieAlgebra::from_brackets(dim, &brackets).with_names(names);

    // h = span{E_ij : j != n} ∪ {H_i}, dimension n(n-1)
    let mut h_indices = Vec::new();
    let mut idx = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                if j != n - 1 {
                    h_indices.push(idx);
                }
                idx += 1;
            }
        }
    }
    for i in 0..n - 1 {
        h_indices.push(idx + i);
    }
    let h = Subspace::coordinate(dim, &h_indices);

    // θ_α(u, v) = -[u, v]_{α, n}
    let thetas: Vec<BilinearForm> = (0..n)
        .map(|alpha| {
            let m = Mat::from_fn(dim, dim, |a, b| {
                -commutator(&basis[a], &basis[b])[(alpha, n - 1)].clone()
            });
            BilinearForm::antisymmetric(m)
        })
        .collect();

    let cert = KSymplecticCertificate {
        k: n,
        n: n - 1,
        h,
        thetas,
    };
    Ok((algebra, cert))
}
