//! Randomized certificate search with exact verification.
//!
//! The pipeline never claims absence on its own: `Found` is re-verified
//! exactly, `Obstructed` comes from the rule engine, and everything else is
//! `Inconclusive` with a per-candidate record.

use crate::cert::{verify_certificate, KSymplecticCertificate};
use crate::deriv::admissible_derivations;
use crate::forms::{BilinearForm, QuadraticLieAlgebra};
use crate::lie::LieAlgebra;
use crate::linalg::{Mat, Subspace};
use crate::obstruct::{obstruction_scan, ConstructionTag, ObstructionVerdict};
use crate::rat::{rat, Rat};
use num_traits::Zero;
use std::fmt;

/// SplitMix64: state advances by the 64-bit golden ratio, output is the
/// standard two-round mix. Same seed, same stream, on every platform.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Integer in `[-bound, bound]` by reduction modulo `2*bound + 1`.
    pub fn next_coeff(&mut self, bound: i64) -> i64 {
        assert!(bound >= 0, "negative bound");
        let span = 2 * bound as u64 + 1;
        (self.next_u64() % span) as i64 - bound
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub trials: usize,
    pub seed: u64,
    pub coeff_bound: i64,
    pub extra_h_candidates: Vec<Subspace>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            trials: 64,
            seed: 0,
            coeff_bound: 10,
            extra_h_candidates: Vec::new(),
        }
    }
}

/// Whether any derivation family over `h` can be jointly nondegenerate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Admissibility {
    /// Every admissible skew derivation kills the witness vector, so no
    /// family over this `h` has trivial joint kernel.
    Blocked { witness: Vec<Rat> },
    /// The admissible space `{D in Der ∩ so : D(h) ⊆ h^⊥}`.
    Open(crate::deriv::MapSpace),
}

pub fn check_h_admissibility(
    q: &QuadraticLieAlgebra,
    h: &Subspace,
    k: usize,
) -> Admissibility {
    assert!(k >= 1 && q.dim() % (k + 1) == 0, "infeasible k");
    assert_eq!(h.dim() * (k + 1), q.dim() * k, "dim h must equal nk");
    let v = admissible_derivations(q, h);
    let ker = v.common_kernel();
    if ker.is_zero() {
        Admissibility::Open(v)
    } else {
        Admissibility::Blocked {
            witness: ker.basis().col(0),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub h: Subspace,
    /// Present when the candidate was blocked outright.
    pub blocked_witness: Option<Vec<Rat>>,
    /// Trials attempted (0 for blocked candidates).
    pub trials: usize,
}

#[derive(Debug)]
pub enum SearchOutcome {
    Found(KSymplecticCertificate),
    Obstructed(Vec<ObstructionVerdict>),
    Inconclusive(Vec<CandidateReport>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfeasibleDimension {
    pub dim: usize,
    pub k: usize,
}

impl fmt::Display for InfeasibleDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dimension {} is not divisible by k+1 = {}",
            self.dim,
            self.k + 1
        )
    }
}

impl std::error::Error for InfeasibleDimension {}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    rec(0, n, m, &mut cur, &mut out);
    out
}

/// Bracket-closed coordinate spans of size `m`, then the extra candidates
/// (deduplicated, subalgebras only), in deterministic order.
pub fn candidate_subalgebras(g: &LieAlgebra, m: usize, extra: &[Subspace]) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = Vec::new();
    for idx in subsets(g.dim(), m) {
        let s = Subspace::coordinate(g.dim(), &idx);
        if g.is_subalgebra(&s) {
            out.push(s);
        }
    }
    for s in extra {
        assert_eq!(s.ambient_dim(), g.dim(), "candidate ambient mismatch");
        if s.dim() == m && g.is_subalgebra(s) && !out.contains(s) {
            out.push(s.clone());
        }
    }
    out
}

/// Metric route: enumerate candidate subalgebras, filter by admissibility,
/// and draw random rational families of admissible derivations, converting
/// each to a form family and verifying the certificate exactly.
pub fn search_ksymplectic(
    q: &QuadraticLieAlgebra,
    k: usize,
    tags: &[ConstructionTag],
    opts: &SearchOptions,
) -> Result<SearchOutcome, InfeasibleDimension> {
    let dim = q.dim();
    if k == 0 || dim % (k + 1) != 0 {
        return Err(InfeasibleDimension { dim, k });
    }
    let n = dim / (k + 1);
    let blocking: Vec<ObstructionVerdict> = obstruction_scan(q, tags)
        .into_iter()
        .filter(|v| v.rules_out(k))
        .collect();
    if !blocking.is_empty() {
        return Ok(SearchOutcome::Obstructed(blocking));
    }
    let mut rng = SplitMix64::new(opts.seed);
    let mut reports = Vec::new();
    for h in candidate_subalgebras(q.algebra(), n * k, &opts.extra_h_candidates) {
        match check_h_admissibility(q, &h, k) {
            Admissibility::Blocked { witness } => reports.push(CandidateReport {
                h,
                blocked_witness: Some(witness),
                trials: 0,
            }),
            Admissibility::Open(v) => {
                for _ in 0..opts.trials {
                    let thetas: Vec<BilinearForm> = (0..k)
                        .map(|_| {
                            let coeffs: Vec<Rat> = (0..v.dim())
                                .map(|_| rat(rng.next_coeff(opts.coeff_bound)))
                                .collect();
                            q.form_from_derivation(&v.combination(&coeffs))
                        })
                        .collect();
                    let cert = KSymplecticCertificate {
                        k,
                        n,
                        h: h.clone(),
                        thetas,
                    };
                    if verify_certificate(q.algebra(), &cert, Some(q)).is_ok() {
                        return Ok(SearchOutcome::Found(cert));
                    }
                }
                reports.push(CandidateReport {
                    h,
                    blocked_witness: None,
                    trials: opts.trials,
                });
            }
        }
    }
    Ok(SearchOutcome::Inconclusive(reports))
}

/// Basis of the antisymmetric 2-cocycles vanishing on `h × h`, used by the
/// metric-free route.
pub fn isotropic_cocycle_space(g: &LieAlgebra, h: &Subspace) -> Vec<BilinearForm> {
    let d = g.dim();
    let nvars = d * (d - 1) / 2;
    let idx = |i: usize, j: usize| -> usize {
        // index of the (i, j), i < j entry in the strict upper triangle
        debug_assert!(i < j);
        i * d - i * (i + 1) / 2 + (j - i - 1)
    };
    // signed coefficient of theta(a, b) on the unknowns
    let add_entry = |row: &mut Mat, a: usize, b: usize, c: &Rat| {
        if a < b {
            row[(0, idx(a, b))] = &row[(0, idx(a, b))] + c;
        } else if b < a {
            row[(0, idx(b, a))] = &row[(0, idx(b, a))] - c;
        }
    };
    let mut system = Mat::zero(0, nvars);
    // cocycle identity on basis triples
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let mut row = Mat::zero(1, nvars);
                for m in 0..d {
                    add_entry(&mut row, m, k, g.structure_constant(i, j, m));
                    add_entry(&mut row, m, i, g.structure_constant(j, k, m));
                    add_entry(&mut row, m, j, g.structure_constant(k, i, m));
                }
                if !row.is_zero() {
                    system = system.vstack(&row);
                }
            }
        }
    }
    // isotropy on h basis pairs
    let basis = h.basis_vectors();
    for (a, u) in basis.iter().enumerate() {
        for v in &basis[a + 1..] {
            let mut row = Mat::zero(1, nvars);
            for i in 0..d {
                for j in i + 1..d {
                    let c = &u[i] * &v[j] - &u[j] * &v[i];
                    if !c.is_zero() {
                        row[(0, idx(i, j))] = &row[(0, idx(i, j))] + &c;
                    }
                }
            }
            if !row.is_zero() {
                system = system.vstack(&row);
            }
        }
    }
    let ker = if system.rows() == 0 {
        Mat::identity(nvars)
    } else {
        system.nullspace()
    };
    (0..ker.cols())
        .map(|c| {
            let mut m = Mat::zero(d, d);
            for i in 0..d {
                for j in i + 1..d {
                    let v = ker[(idx(i, j), c)].clone();
                    m[(i, j)] = v.clone();
                    m[(j, i)] = -v;
                }
            }
            BilinearForm::antisymmetric(m)
        })
        .collect()
}

/// Metric-free route: candidate forms are drawn from the isotropic cocycle
/// space directly. No obstruction scan (the rules need the metric).
pub fn search_ksymplectic_plain(
    g: &LieAlgebra,
    k: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome, InfeasibleDimension> {
    let dim = g.dim();
    if k == 0 || dim % (k + 1) != 0 {
        return Err(InfeasibleDimension { dim, k });
    }
    let n = dim / (k + 1);
    let mut rng = SplitMix64::new(opts.seed);
    let mut reports = Vec::new();
    for h in candidate_subalgebras(g, n * k, &opts.extra_h_candidates) {
        let space = isotropic_cocycle_space(g, &h);
        // joint kernel of the whole space: nonzero means every family drawn
        // from it is degenerate
        let mut stacked = Mat::zero(0, dim);
        for b in &space {
            stacked = stacked.vstack(b.matrix());
        }
        let joint = if space.is_empty() {
            Subspace::full(dim)
        } else {
            Subspace::from_columns(dim, &stacked.nullspace())
        };
        if !joint.is_zero() {
            reports.push(CandidateReport {
                h,
                blocked_witness: Some(joint.basis().col(0)),
                trials: 0,
            });
            continue;
        }
        for _ in 0..opts.trials {
            let thetas: Vec<BilinearForm> = (0..k)
                .map(|_| {
                    let mut m = Mat::zero(dim, dim);
                    for b in &space {
                        let c = rat(rng.next_coeff(opts.coeff_bound));
                        m = &m + &b.matrix().scale(&c);
                    }
                    BilinearForm::antisymmetric(m)
                })
                .collect();
            let cert = KSymplecticCertificate {
                k,
                n,
                h: h.clone(),
                thetas,
            };
            if verify_certificate(g, &cert, None).is_ok() {
                return Ok(SearchOutcome::Found(cert));
            }
        }
        reports.push(CandidateReport {
            h,
            blocked_witness: None,
            trials: opts.trials,
        });
    }
    Ok(SearchOutcome::Inconclusive(reports))
}
