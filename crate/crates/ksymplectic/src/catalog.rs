//! Built-in catalog of low-dimensional quadratic Lie algebras, their
//! metrics, known certificates, and the classification report.
//!
//! Entries are parametrized families; `load_entry` instantiates one at its
//! default parameters or at caller-supplied rational overrides, validating
//! the declared ranges.

use crate::cert::{verify_certificate, KSymplecticCertificate};
use crate::construct::t_star_extension;
use crate::forms::{BilinearForm, QuadraticLieAlgebra};
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;
use crate::obstruct::{first_ruling_out, obstruction_scan, ConstructionTag};
use crate::rat::{format_rat, rat, Rat};
use crate::search::{check_h_admissibility, Admissibility};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Expected {
    Exists,
    None,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    /// Present for every entry except the metric-free example family.
    pub quadratic: Option<QuadraticLieAlgebra>,
    pub params: Vec<(String, Rat)>,
    pub tags: Vec<ConstructionTag>,
    pub certificates: Vec<KSymplecticCertificate>,
    /// Expected verdict per feasible k, cross-checked against the report.
    pub expected: Vec<(usize, Expected)>,
    /// Per k: a candidate-h list declared complete (up to automorphism);
    /// "none" may be concluded when every candidate is blocked.
    pub complete_candidates: Vec<(usize, Vec<Subspace>)>,
    /// Per k: non-existence known from a cited external fact.
    pub external_exclusions: Vec<(usize, String)>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// k values with dim = n(k+1) for a positive integer n.
    pub fn feasible_ks(&self) -> Vec<usize> {
        (1..self.dim())
            .filter(|k| self.dim() % (k + 1) == 0)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    UnknownEntry(String),
    UnknownParameter(String),
    OutOfRange { name: String, value: String, range: String },
    Invalid(String),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownEntry(n) => write!(f, "unknown catalog entry {n:?}"),
            CatalogError::UnknownParameter(n) => write!(f, "unknown parameter {n:?}"),
            CatalogError::OutOfRange { name, value, range } => {
                write!(f, "parameter {name} = {value} outside range ({range})")
            }
            CatalogError::Invalid(m) => write!(f, "invalid entry: {m}"),
        }
    }
}

impl std::error::Error for CatalogError {}

#[derive(Clone, Copy, Debug)]
enum Range {
    Any,
    NonZero,
    Positive,
    AtLeastOne,
    /// value² = 1
    Sign,
}

impl Range {
    fn admits(self, v: &Rat) -> bool {
        match self {
            Range::Any => true,
            Range::NonZero => !v.is_zero(),
            Range::Positive => crate::rat::is_positive(v),
            Range::AtLeastOne => *v >= rat(1),
            Range::Sign => *v == rat(1) || *v == rat(-1),
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Range::Any => "any rational",
            Range::NonZero => "nonzero",
            Range::Positive => "positive",
            Range::AtLeastOne => "at least 1",
            Range::Sign => "1 or -1",
        }
    }
}

fn resolve_params(
    decl: &[(&str, i64, Range)],
    overrides: &[(&str, Rat)],
) -> Result<Vec<(String, Rat)>, CatalogError> {
    for (name, _) in overrides {
        if !decl.iter().any(|(n, _, _)| n == name) {
            return Err(CatalogError::UnknownParameter(name.to_string()));
        }
    }
    decl.iter()
        .map(|(name, default, range)| {
            let v = overrides
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(|| rat(*default));
            if !range.admits(&v) {
                return Err(CatalogError::OutOfRange {
                    name: name.to_string(),
                    value: format_rat(&v),
                    range: range.describe().to_string(),
                });
            }
            Ok((name.to_string(), v))
        })
        .collect()
}

fn param<'a>(params: &'a [(String, Rat)], name: &str) -> &'a Rat {
    &params.iter().find(|(n, _)| n == name).unwrap().1
}

fn quadratic(
    algebra: LieAlgebra,
    metric: BilinearForm,
) -> Result<QuadraticLieAlgebra, CatalogError> {
    QuadraticLieAlgebra::new(algebra, metric).map_err(|e| CatalogError::Invalid(e.to_string()))
}

fn sl2_algebra() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        &[
            (0, 1, vec![(2, rat(1))]),
            (2, 0, vec![(0, rat(2))]),
            (2, 1, vec![(1, rat(-2))]),
        ],
    )
}

fn su2_algebra() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        &[
            (0, 1, vec![(2, rat(1))]),
            (1, 2, vec![(0, rat(1))]),
            (2, 0, vec![(1, rat(1))]),
        ],
    )
}

fn wedge_sum(dim: usize, terms: &[(i64, usize, usize)]) -> BilinearForm {
    let mut b = BilinearForm::zero_antisymmetric(dim);
    for (c, i, j) in terms {
        b = b.plus_wedge(rat(*c), *i, *j);
    }
    b
}

/// Entry names in catalog order.
pub const ENTRY_NAMES: &[&str] = &[
    "su2", "sl2R", "osc4", "g1,4", "g1,5", "osc6", "l2", "so31", "T*sl2R", "T*su2", "n1(2,2)",
    "n2(2,2)", "n3(2,2)", "n4(2,2)", "n5(2,2)", "n6(2,2)", "ex6",
];

pub fn load_entry(name: &str, overrides: &[(&str, Rat)]) -> Result<CatalogEntry, CatalogError> {
    match name {
        "su2" => {
            let params = resolve_params(&[("c", 1, Range::NonZero)], overrides)?;
            let c = param(&params, "c").clone();
            let metric = BilinearForm::symmetric(crate::linalg::Mat::identity(3).scale(&c));
            Ok(CatalogEntry {
                name: name.into(),
                algebra: su2_algebra(),
                quadratic: Some(quadratic(su2_algebra(), metric)?),
                params,
                tags: vec![],
                certificates: vec![],
                expected: vec![(2, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "sl2R" => {
            let params = resolve_params(&[("c", 1, Range::NonZero)], overrides)?;
            let c = param(&params, "c").clone();
            let metric = BilinearForm::symmetric_from_entries(
                3,
                &[(0, 1, c.clone()), (2, 2, rat(2) * &c)],
            );
            let certs = [0, 1]
                .map(|b| KSymplecticCertificate {
                    k: 2,
                    n: 1,
                    h: Subspace::coordinate(3, &[0, 2]),
                    thetas: vec![
                        wedge_sum(3, &[(1, 2, 1), (b, 0, 1)]),
                        wedge_sum(3, &[(1, 0, 1)]),
                    ],
                })
                .to_vec();
            Ok(CatalogEntry {
                name: name.into(),
                algebra: sl2_algebra(),
                quadratic: Some(quadratic(sl2_algebra(), metric)?),
                params,
                tags: vec![],
                certificates: certs,
                expected: vec![(2, Expected::Exists)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "osc4" => {
            let params = resolve_params(&[("lambda", 1, Range::Positive)], overrides)?;
            let l = param(&params, "lambda").clone();
            let algebra = LieAlgebra::from_brackets(
                4,
                &[
                    (1, 2, vec![(0, rat(1))]),
                    (3, 1, vec![(2, l.clone())]),
                    (3, 2, vec![(1, -l.clone())]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                4,
                &[(1, 1, l.recip()), (2, 2, l.recip()), (0, 3, rat(1))],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![
                    ConstructionTag::Oscillator,
                    ConstructionTag::DoubleExtensionNonNilpotent,
                ],
                certificates: vec![],
                expected: vec![(1, Expected::None), (3, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "g1,4" => {
            let params = resolve_params(&[], overrides)?;
            let algebra = LieAlgebra::from_brackets(
                4,
                &[
                    (3, 1, vec![(1, rat(1))]),
                    (3, 2, vec![(2, rat(-1))]),
                    (1, 2, vec![(0, rat(1))]),
                ],
            );
            let metric =
                BilinearForm::symmetric_from_entries(4, &[(0, 3, rat(1)), (1, 2, rat(1))]);
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNonNilpotent],
                certificates: vec![],
                expected: vec![(1, Expected::None), (3, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "g1,5" => {
            let params = resolve_params(&[], overrides)?;
            let algebra = LieAlgebra::from_brackets(
                5,
                &[
                    (1, 2, vec![(0, rat(1))]),
                    (2, 3, vec![(0, rat(-1))]),
                    (4, 1, vec![(2, rat(1))]),
                    (4, 2, vec![(1, rat(1)), (3, rat(-1))]),
                    (4, 3, vec![(2, rat(1))]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                5,
                &[(0, 4, rat(1)), (1, 1, rat(-1)), (2, 2, rat(1)), (3, 3, rat(1))],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNilpotent],
                certificates: vec![],
                expected: vec![(4, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "osc6" => {
            let params = resolve_params(
                &[
                    ("lambda1", 1, Range::Positive),
                    ("lambda2", 2, Range::Positive),
                ],
                overrides,
            )?;
            let l1 = param(&params, "lambda1").clone();
            let l2 = param(&params, "lambda2").clone();
            if l1 > l2 {
                return Err(CatalogError::OutOfRange {
                    name: "lambda1".into(),
                    value: format_rat(&l1),
                    range: "at most lambda2".into(),
                });
            }
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (1, 3, vec![(0, rat(1))]),
                    (2, 4, vec![(0, rat(1))]),
                    (5, 1, vec![(3, l1.clone())]),
                    (5, 3, vec![(1, -l1.clone())]),
                    (5, 2, vec![(4, l2.clone())]),
                    (5, 4, vec![(2, -l2.clone())]),
                ],
            );
            // the diagonal pairs with each frequency are forced by invariance
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[
                    (1, 1, l1.recip()),
                    (3, 3, l1.recip()),
                    (2, 2, l2.recip()),
                    (4, 4, l2.recip()),
                    (0, 5, rat(1)),
                ],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![
                    ConstructionTag::Oscillator,
                    ConstructionTag::DoubleExtensionNonNilpotent,
                ],
                certificates: vec![],
                expected: vec![(1, Expected::None), (2, Expected::None), (5, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "l2" => {
            let params = resolve_params(&[("lambda", 1, Range::NonZero)], overrides)?;
            let l = param(&params, "lambda").clone();
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (1, 2, vec![(0, rat(1))]),
                    (3, 4, vec![(0, l.clone())]),
                    (5, 1, vec![(2, rat(1))]),
                    (5, 2, vec![(1, rat(1))]),
                    (5, 3, vec![(4, l.clone())]),
                    (5, 4, vec![(3, -l.clone())]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[
                    (1, 1, rat(-1)),
                    (2, 2, rat(1)),
                    (3, 3, rat(1)),
                    (4, 4, rat(1)),
                    (0, 5, rat(1)),
                ],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNonNilpotent],
                certificates: vec![],
                expected: vec![(1, Expected::None), (2, Expected::None), (5, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "so31" => {
            let params = resolve_params(&[], overrides)?;
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (0, 1, vec![(2, rat(1))]),
                    (0, 2, vec![(1, rat(-1))]),
                    (0, 3, vec![(4, rat(1))]),
                    (0, 4, vec![(3, rat(-1))]),
                    (1, 2, vec![(0, rat(1))]),
                    (1, 3, vec![(5, rat(1))]),
                    (1, 5, vec![(3, rat(-1))]),
                    (2, 4, vec![(5, rat(1))]),
                    (2, 5, vec![(4, rat(-1))]),
                    (3, 4, vec![(0, rat(-1))]),
                    (3, 5, vec![(1, rat(-1))]),
                    (4, 5, vec![(2, rat(-1))]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[
                    (0, 0, rat(1)),
                    (1, 1, rat(1)),
                    (2, 2, rat(1)),
                    (3, 3, rat(-1)),
                    (4, 4, rat(-1)),
                    (5, 5, rat(-1)),
                ],
            );
            // h = span(e3, e4, e1+e5, e2+e6)
            let h = Subspace::from_vectors(
                6,
                &[
                    vec![rat(0), rat(0), rat(1), rat(0), rat(0), rat(0)],
                    vec![rat(0), rat(0), rat(0), rat(1), rat(0), rat(0)],
                    vec![rat(1), rat(0), rat(0), rat(0), rat(1), rat(0)],
                    vec![rat(0), rat(1), rat(0), rat(0), rat(0), rat(1)],
                ],
            );
            let cert = KSymplecticCertificate {
                k: 2,
                n: 2,
                h,
                thetas: vec![
                    wedge_sum(
                        6,
                        &[(-1, 0, 1), (-1, 0, 3), (1, 1, 2), (1, 2, 5), (-1, 3, 4), (1, 4, 5)],
                    ),
                    wedge_sum(
                        6,
                        &[(1, 0, 2), (-1, 0, 4), (1, 1, 3), (-1, 1, 5), (1, 2, 4), (1, 3, 5)],
                    ),
                ],
            };
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![],
                certificates: vec![cert],
                expected: vec![(1, Expected::None), (2, Expected::Exists), (5, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![(
                    5,
                    "no five-dimensional subalgebra".to_string(),
                )],
            })
        }
        "T*sl2R" => {
            let params = resolve_params(&[], overrides)?;
            let q = t_star_extension(&sl2_algebra())
                .map_err(|e| CatalogError::Invalid(e.to_string()))?;
            // 2-symplectic structure with h = span(e1, e3, e2*, e3*):
            // theta1 and theta2 come from the inner skew derivations
            // (1/2) ad_{e3} and ad_{e1}, which are admissible for h and
            // have trivial common kernel
            let cert = KSymplecticCertificate {
                k: 2,
                n: 2,
                h: Subspace::coordinate(6, &[0, 2, 4, 5]),
                thetas: vec![
                    wedge_sum(6, &[(1, 0, 3), (-1, 1, 4)]),
                    wedge_sum(6, &[(1, 1, 5), (-2, 2, 3)]),
                ],
            };
            Ok(CatalogEntry {
                name: name.into(),
                algebra: q.algebra().clone(),
                quadratic: Some(q),
                params,
                tags: vec![ConstructionTag::TStarExtension],
                certificates: vec![cert],
                expected: vec![(1, Expected::None), (2, Expected::Exists), (5, Expected::None)],
                complete_candidates: vec![
                    (
                        2,
                        vec![
                            Subspace::coordinate(6, &[0, 3, 4, 5]),
                            Subspace::coordinate(6, &[2, 3, 4, 5]),
                            Subspace::coordinate(6, &[0, 2, 3, 4]),
                            Subspace::coordinate(6, &[0, 2, 4, 5]),
                        ],
                    ),
                    (5, vec![Subspace::coordinate(6, &[0, 2, 3, 4, 5])]),
                ],
                external_exclusions: vec![],
            })
        }
        "T*su2" => {
            let params = resolve_params(&[], overrides)?;
            let q = t_star_extension(&su2_algebra())
                .map_err(|e| CatalogError::Invalid(e.to_string()))?;
            Ok(CatalogEntry {
                name: name.into(),
                algebra: q.algebra().clone(),
                quadratic: Some(q),
                params,
                tags: vec![ConstructionTag::TStarExtension],
                certificates: vec![],
                expected: vec![(1, Expected::None), (2, Expected::None), (5, Expected::None)],
                complete_candidates: vec![
                    (2, vec![Subspace::coordinate(6, &[0, 3, 4, 5])]),
                    // no 5-dimensional subalgebra exists at all
                    (5, vec![]),
                ],
                external_exclusions: vec![],
            })
        }
        "n1(2,2)" => {
            let params = resolve_params(&[], overrides)?;
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (5, 2, vec![(1, rat(1))]),
                    (5, 4, vec![(3, rat(1))]),
                    (2, 4, vec![(0, rat(1))]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[(0, 5, rat(1)), (1, 4, rat(1)), (2, 3, rat(-1))],
            );
            // h = span(e1, e2, e4, e3+e6)
            let h2 = Subspace::from_vectors(
                6,
                &[
                    vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)],
                    vec![rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)],
                    vec![rat(0), rat(0), rat(0), rat(1), rat(0), rat(0)],
                    vec![rat(0), rat(0), rat(1), rat(0), rat(0), rat(1)],
                ],
            );
            let cert2 = KSymplecticCertificate {
                k: 2,
                n: 2,
                h: h2,
                thetas: vec![
                    wedge_sum(
                        6,
                        &[(1, 0, 2), (-1, 0, 4), (-1, 0, 5), (1, 2, 3), (1, 2, 5), (1, 3, 5)],
                    ),
                    wedge_sum(
                        6,
                        &[
                            (1, 0, 2),
                            (-1, 0, 4),
                            (-1, 0, 5),
                            (2, 1, 4),
                            (-1, 2, 3),
                            (1, 2, 5),
                            (-1, 3, 5),
                        ],
                    ),
                ],
            };
            // 1-symplectic over h = Z(g) = span(e1, e2, e4)
            let cert1 = KSymplecticCertificate {
                k: 1,
                n: 3,
                h: Subspace::coordinate(6, &[0, 1, 3]),
                thetas: vec![wedge_sum(
                    6,
                    &[(1, 0, 2), (-1, 0, 5), (1, 1, 4), (1, 1, 5), (1, 3, 4)],
                )],
            };
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNilpotent],
                certificates: vec![cert1, cert2],
                expected: vec![
                    (1, Expected::Exists),
                    (2, Expected::Exists),
                    (5, Expected::None),
                ],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "n2(2,2)" => {
            let params = resolve_params(&[("t", 1, Range::Positive)], overrides)?;
            let t = param(&params, "t").clone();
            // the [e6,e5] bracket is −t e4 − e5: the −e5 component is forced
            // by the Jacobi identity (with −e3 the triple (e6,e2,e5) fails)
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (5, 1, vec![(1, rat(1)), (2, t.clone())]),
                    (5, 2, vec![(1, -t.clone()), (2, rat(1))]),
                    (5, 3, vec![(3, rat(-1)), (4, t.clone())]),
                    (5, 4, vec![(3, -t.clone()), (4, rat(-1))]),
                    (1, 3, vec![(0, -t.clone())]),
                    (1, 4, vec![(0, rat(1))]),
                    (2, 3, vec![(0, rat(-1))]),
                    (2, 4, vec![(0, -t.clone())]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[(0, 5, rat(1)), (1, 4, rat(1)), (2, 3, rat(-1))],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNonNilpotent],
                certificates: vec![],
                expected: vec![(1, Expected::None), (2, Expected::None), (5, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "n3(2,2)" => {
            let params = resolve_params(&[("eps", 1, Range::Sign)], overrides)?;
            let e = param(&params, "eps").clone();
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (5, 1, vec![(2, rat(1))]),
                    (5, 2, vec![(1, rat(-1))]),
                    (5, 3, vec![(1, e.clone()), (4, rat(1))]),
                    (5, 4, vec![(2, e.clone()), (3, rat(-1))]),
                    (1, 3, vec![(0, rat(-1))]),
                    (2, 4, vec![(0, rat(-1))]),
                    (3, 4, vec![(0, e.clone())]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[(0, 5, rat(1)), (1, 4, rat(1)), (2, 3, rat(-1))],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNonNilpotent],
                certificates: vec![],
                expected: vec![(1, Expected::None), (2, Expected::None), (5, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "n4(2,2)" => {
            let params = resolve_params(&[("t", 1, Range::Positive)], overrides)?;
            let t = param(&params, "t").clone();
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (5, 1, vec![(2, rat(1))]),
                    (5, 2, vec![(1, rat(-1))]),
                    (5, 3, vec![(4, t.clone())]),
                    (5, 4, vec![(3, -t.clone())]),
                    (1, 2, vec![(0, rat(-1))]),
                    (3, 4, vec![(0, t.clone())]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[
                    (1, 1, rat(-1)),
                    (2, 2, rat(-1)),
                    (3, 3, rat(1)),
                    (4, 4, rat(1)),
                    (0, 5, rat(1)),
                ],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNonNilpotent],
                certificates: vec![],
                expected: vec![(1, Expected::None), (2, Expected::None), (5, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "n5(2,2)" => {
            let params = resolve_params(&[], overrides)?;
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (5, 1, vec![(1, rat(1))]),
                    (5, 2, vec![(1, rat(1)), (2, rat(1))]),
                    (5, 3, vec![(3, rat(-1))]),
                    (5, 4, vec![(3, rat(1)), (4, rat(-1))]),
                    (1, 4, vec![(0, rat(1))]),
                    (2, 3, vec![(0, rat(-1))]),
                    (2, 4, vec![(0, rat(1))]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[(0, 5, rat(1)), (1, 4, rat(1)), (2, 3, rat(-1))],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNonNilpotent],
                certificates: vec![],
                expected: vec![(1, Expected::None), (2, Expected::None), (5, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "n6(2,2)" => {
            let params = resolve_params(&[("t", 1, Range::AtLeastOne)], overrides)?;
            let t = param(&params, "t").clone();
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (5, 1, vec![(1, rat(1))]),
                    (5, 2, vec![(2, rat(-1))]),
                    (5, 3, vec![(3, t.clone())]),
                    (5, 4, vec![(4, -t.clone())]),
                    (1, 2, vec![(0, rat(1))]),
                    (3, 4, vec![(0, t.clone())]),
                ],
            );
            let metric = BilinearForm::symmetric_from_entries(
                6,
                &[(0, 5, rat(1)), (1, 2, rat(1)), (3, 4, rat(1))],
            );
            Ok(CatalogEntry {
                name: name.into(),
                quadratic: Some(quadratic(algebra.clone(), metric)?),
                algebra,
                params,
                tags: vec![ConstructionTag::DoubleExtensionNonNilpotent],
                certificates: vec![],
                expected: vec![(1, Expected::None), (2, Expected::None), (5, Expected::None)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        "ex6" => {
            // 6-dim solvable family with a 2-symplectic structure for every
            // (a, b, c); no invariant metric is supplied. Basis order
            // (e1, e2, f1, f2, f3, f4).
            let params = resolve_params(
                &[("a", 1, Range::Any), ("b", 1, Range::Any), ("c", 1, Range::Any)],
                overrides,
            )?;
            let a = param(&params, "a").clone();
            let b = param(&params, "b").clone();
            let c = param(&params, "c").clone();
            let algebra = LieAlgebra::from_brackets(
                6,
                &[
                    (2, 3, vec![(2, rat(-1))]),
                    (2, 5, vec![(2, -a.clone())]),
                    (3, 4, vec![(4, rat(1))]),
                    (4, 5, vec![(4, -a.clone())]),
                    (3, 0, vec![(0, rat(-1))]),
                    (3, 1, vec![(3, -(&a * &c)), (5, c.clone())]),
                    (5, 0, vec![(0, -a.clone())]),
                    (5, 1, vec![(3, -(&a * &b)), (5, b.clone())]),
                ],
            )
            .with_names(
                ["e1", "e2", "f1", "f2", "f3", "f4"]
                    .map(str::to_string)
                    .to_vec(),
            );
            algebra
                .check_jacobi()
                .map_err(|e| CatalogError::Invalid(e.to_string()))?;
            let cert = KSymplecticCertificate {
                k: 2,
                n: 2,
                h: Subspace::coordinate(6, &[2, 3, 4, 5]),
                thetas: vec![
                    wedge_sum(6, &[(1, 2, 0), (1, 3, 1)]),
                    wedge_sum(6, &[(1, 4, 0), (1, 5, 1)]),
                ],
            };
            Ok(CatalogEntry {
                name: name.into(),
                algebra,
                quadratic: None,
                params,
                tags: vec![],
                certificates: vec![cert],
                expected: vec![(2, Expected::Exists)],
                complete_candidates: vec![],
                external_exclusions: vec![],
            })
        }
        other => Err(CatalogError::UnknownEntry(other.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryFilter {
    All,
    Dimension(usize),
    Tag(ConstructionTag),
}

pub fn list_entries(filter: &EntryFilter) -> Vec<String> {
    ENTRY_NAMES
        .iter()
        .filter_map(|name| {
            let e = load_entry(name, &[]).expect("built-in entry loads at defaults");
            let keep = match filter {
                EntryFilter::All => true,
                EntryFilter::Dimension(d) => e.dim() == *d,
                EntryFilter::Tag(t) => e.tags.contains(t),
            };
            keep.then(|| name.to_string())
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportVerdict {
    Exists,
    None { citation: String },
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub entry: String,
    pub k: usize,
    pub verdict: ReportVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub rows: Vec<ReportRow>,
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            match &row.verdict {
                ReportVerdict::Exists => {
                    writeln!(f, "{} k={}: exists", row.entry, row.k)?;
                }
                ReportVerdict::None { citation } => {
                    writeln!(f, "{} k={}: none ({citation})", row.entry, row.k)?;
                }
                ReportVerdict::Inconclusive => {
                    writeln!(f, "{} k={}: inconclusive", row.entry, row.k)?;
                }
            }
        }
        Ok(())
    }
}

/// Verdict for one entry and one k, combining stored certificates, the
/// obstruction rules, cited external facts, and declared-complete candidate
/// exhaustion. Never claims "none" without one of those justifications.
pub fn classify_entry(entry: &CatalogEntry, k: usize) -> ReportVerdict {
    let q = entry.quadratic.as_ref().expect("classification needs the metric");
    for cert in &entry.certificates {
        if cert.k == k && verify_certificate(&entry.algebra, cert, Some(q)).is_ok() {
            return ReportVerdict::Exists;
        }
    }
    let verdicts = obstruction_scan(q, &entry.tags);
    if let Some(v) = first_ruling_out(&verdicts, k) {
        return ReportVerdict::None {
            citation: v.rule.id().to_string(),
        };
    }
    if let Some((_, note)) = entry.external_exclusions.iter().find(|(kk, _)| *kk == k) {
        return ReportVerdict::None {
            citation: format!("cited: {note}"),
        };
    }
    if let Some((_, candidates)) = entry.complete_candidates.iter().find(|(kk, _)| *kk == k) {
        let all_blocked = candidates.iter().all(|h| {
            matches!(
                check_h_admissibility(q, h, k),
                Admissibility::Blocked { .. }
            )
        });
        if all_blocked {
            return ReportVerdict::None {
                citation: "candidate exhaustion".to_string(),
            };
        }
    }
    ReportVerdict::Inconclusive
}

/// Report over every catalog entry with a metric, each at its default
/// parameters, each feasible k in increasing order.
pub fn classification_report() -> ClassificationReport {
    let mut rows = Vec::new();
    for name in ENTRY_NAMES {
        let entry = load_entry(name, &[]).expect("built-in entry loads at defaults");
        if entry.quadratic.is_none() {
            continue;
        }
        for k in entry.feasible_ks() {
            rows.push(ReportRow {
                entry: entry.name.clone(),
                k,
                verdict: classify_entry(&entry, k),
            });
        }
    }
    ClassificationReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::theta_decomposition;
    use crate::construct::double_extension;
    use crate::forms::check_invariance;
    use crate::linalg::Mat;
    use crate::rat::ratio;

    #[test]
    fn all_entries_load_and_validate() {
        for name in ENTRY_NAMES {
            let e = load_entry(name, &[]).unwrap();
            assert!(e.algebra.check_jacobi().is_ok(), "{name}");
            if let Some(q) = &e.quadratic {
                assert!(check_invariance(q.algebra(), q.metric()).is_ok(), "{name}");
                assert!(q.metric().is_nondegenerate(), "{name}");
            }
        }
    }

    #[test]
    fn parameter_samples_validate() {
        let samples: &[(&str, &[&[(&str, i64, i64)]])] = &[
            ("su2", &[&[("c", -1, 1)], &[("c", 3, 1)], &[("c", 1, 2)]]),
            ("sl2R", &[&[("c", -1, 1)], &[("c", 3, 1)], &[("c", 1, 2)]]),
            ("osc4", &[&[("lambda", 2, 1)], &[("lambda", 1, 2)], &[("lambda", 5, 3)]]),
            (
                "osc6",
                &[
                    &[("lambda1", 1, 1), ("lambda2", 1, 1)],
                    &[("lambda1", 1, 2), ("lambda2", 3, 1)],
                    &[("lambda1", 2, 1), ("lambda2", 7, 2)],
                ],
            ),
            ("l2", &[&[("lambda", -1, 1)], &[("lambda", 2, 1)], &[("lambda", 1, 3)]]),
            ("n2(2,2)", &[&[("t", 2, 1)], &[("t", 1, 2)], &[("t", 7, 3)]]),
            ("n3(2,2)", &[&[("eps", 1, 1)], &[("eps", -1, 1)]]),
            ("n4(2,2)", &[&[("t", 2, 1)], &[("t", 1, 2)], &[("t", 3, 1)]]),
            ("n6(2,2)", &[&[("t", 1, 1)], &[("t", 2, 1)], &[("t", 3, 2)]]),
        ];
        for (name, sample_sets) in samples {
            for overrides in *sample_sets {
                let o: Vec<(&str, Rat)> =
                    overrides.iter().map(|(n, p, q)| (*n, ratio(*p, *q))).collect();
                let e = load_entry(name, &o).unwrap();
                assert!(e.quadratic.is_some(), "{name}");
            }
        }
    }

    #[test]
    fn out_of_range_and_unknown_rejected() {
        assert!(matches!(
            load_entry("su2", &[("c", rat(0))]),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(
            load_entry("osc4", &[("lambda", rat(-1))]),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(
            load_entry("osc6", &[("lambda1", rat(3))]),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(
            load_entry("n2(2,2)", &[("t", rat(0))]),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(
            load_entry("n3(2,2)", &[("eps", rat(2))]),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(
            load_entry("n6(2,2)", &[("t", ratio(1, 2))]),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(
            load_entry("g1,4", &[("t", rat(1))]),
            Err(CatalogError::UnknownParameter(_))
        ));
        assert!(matches!(
            load_entry("nope", &[]),
            Err(CatalogError::UnknownEntry(_))
        ));
    }

    #[test]
    fn stored_certificates_verify() {
        for name in ENTRY_NAMES {
            let e = load_entry(name, &[]).unwrap();
            for cert in &e.certificates {
                verify_certificate(&e.algebra, cert, e.quadratic.as_ref())
                    .unwrap_or_else(|err| panic!("{name}: {err}"));
                // the decomposition always splits h directly
                let parts = theta_decomposition(&e.algebra, cert);
                assert_eq!(parts.len(), cert.k, "{name}");
            }
        }
    }

    #[test]
    fn ex6_certificate_parameter_independent() {
        for (a, b, c) in [(0, 0, 0), (1, 1, 1), (2, -1, 3)] {
            let e = load_entry(
                "ex6",
                &[("a", rat(a)), ("b", rat(b)), ("c", rat(c))],
            )
            .unwrap();
            verify_certificate(&e.algebra, &e.certificates[0], None).unwrap();
        }
    }

    #[test]
    fn list_entry_filters() {
        assert_eq!(list_entries(&EntryFilter::Dimension(3)), vec!["su2", "sl2R"]);
        assert_eq!(
            list_entries(&EntryFilter::Dimension(6)).len(),
            12 // 11 with metric + the metric-free family
        );
        assert_eq!(
            list_entries(&EntryFilter::Tag(ConstructionTag::Oscillator)),
            vec!["osc4", "osc6"]
        );
        assert_eq!(
            list_entries(&EntryFilter::Tag(ConstructionTag::TStarExtension)),
            vec!["T*sl2R", "T*su2"]
        );
        assert_eq!(list_entries(&EntryFilter::All).len(), ENTRY_NAMES.len());
    }

    #[test]
    fn double_extension_entries_reconstruct() {
        // each double-extension entry must equal
        // double_extension(abelian base, A) with A read off from ad of the
        // last basis vector; an independent re-derivation of the tables
        for name in [
            "osc4", "g1,4", "g1,5", "osc6", "l2", "n1(2,2)", "n2(2,2)", "n3(2,2)", "n4(2,2)",
            "n5(2,2)", "n6(2,2)",
        ] {
            let e = load_entry(name, &[]).unwrap();
            let q = e.quadratic.as_ref().unwrap();
            let d = e.dim();
            let base_metric = Mat::from_fn(d - 2, d - 2, |i, j| {
                q.metric().matrix()[(1 + i, 1 + j)].clone()
            });
            let base = QuadraticLieAlgebra::new(
                LieAlgebra::abelian(d - 2),
                BilinearForm::symmetric(base_metric),
            )
            .unwrap();
            let ad_last = e.algebra.adjoint(&e.algebra.basis_vector(d - 1));
            let a = Mat::from_fn(d - 2, d - 2, |i, j| ad_last[(1 + i, 1 + j)].clone());
            let rebuilt = double_extension(&base, &a).unwrap_or_else(|err| panic!("{name}: {err}"));
            assert_eq!(*rebuilt.algebra(), e.algebra, "{name}");
            assert_eq!(rebuilt.metric(), q.metric(), "{name}");
        }
    }

    #[test]
    fn tstar_candidates_blocked() {
        let e = load_entry("T*su2", &[]).unwrap();
        let q = e.quadratic.as_ref().unwrap();
        match check_h_admissibility(q, &Subspace::coordinate(6, &[0, 3, 4, 5]), 2) {
            Admissibility::Blocked { witness } => {
                // the blocked witness is e1* (up to scale)
                assert_eq!(
                    Subspace::from_vectors(6, &[witness]),
                    Subspace::coordinate(6, &[3])
                );
            }
            Admissibility::Open(_) => panic!("expected Blocked"),
        }
        let e = load_entry("T*sl2R", &[]).unwrap();
        let q = e.quadratic.as_ref().unwrap();
        // three of the four 4-dimensional degenerate candidates are blocked;
        // span(e1, e3, e2*, e3*) is open and carries the stored certificate
        for idxs in [[0, 3, 4, 5], [2, 3, 4, 5], [0, 2, 3, 4]] {
            assert!(
                matches!(
                    check_h_admissibility(q, &Subspace::coordinate(6, &idxs), 2),
                    Admissibility::Blocked { .. }
                ),
                "T*sl2R k=2 {idxs:?}"
            );
        }
        match check_h_admissibility(q, &Subspace::coordinate(6, &[0, 2, 4, 5]), 2) {
            Admissibility::Open(space) => {
                assert_eq!(space.dim(), 4);
                assert!(space.common_kernel().is_zero());
            }
            Admissibility::Blocked { .. } => panic!("expected Open"),
        }
        // the 5-dimensional degenerate candidate is blocked
        assert!(matches!(
            check_h_admissibility(q, &Subspace::coordinate(6, &[0, 2, 3, 4, 5]), 5),
            Admissibility::Blocked { .. }
        ));
    }

    #[test]
    fn report_matches_expected() {
        for name in ENTRY_NAMES {
            let e = load_entry(name, &[]).unwrap();
            if e.quadratic.is_none() {
                continue;
            }
            for k in e.feasible_ks() {
                let verdict = classify_entry(&e, k);
                let expected = e
                    .expected
                    .iter()
                    .find(|(kk, _)| *kk == k)
                    .map(|(_, v)| *v)
                    .unwrap_or(Expected::Unknown);
                match expected {
                    Expected::Exists => assert_eq!(verdict, ReportVerdict::Exists, "{name} k={k}"),
                    Expected::None => assert!(
                        matches!(verdict, ReportVerdict::None { .. }),
                        "{name} k={k}: {verdict:?}"
                    ),
                    Expected::Unknown => {}
                }
            }
        }
    }

    #[test]
    fn obstruction_soundness_over_catalog() {
        // no rule may rule out a k carried by a stored verified certificate
        for name in ENTRY_NAMES {
            let e = load_entry(name, &[]).unwrap();
            let Some(q) = &e.quadratic else { continue };
            let verdicts = obstruction_scan(q, &e.tags);
            for cert in &e.certificates {
                assert!(
                    first_ruling_out(&verdicts, cert.k).is_none(),
                    "{name} k={}",
                    cert.k
                );
            }
        }
    }
}
