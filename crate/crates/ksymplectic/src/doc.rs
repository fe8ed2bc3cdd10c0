//! Versioned JSON interchange format for algebras, metrics, certificates
//! and construction tags. Indices are 1-based in the file format; rationals
//! are serialized as "p/q" strings.

use crate::cert::KSymplecticCertificate;
use crate::forms::{BilinearForm, QuadraticLieAlgebra};
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;
use crate::obstruct::ConstructionTag;
use crate::rat::{format_rat, parse_rat, Rat};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// basis index (1-based, as a string key) to coefficient "p/q"
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormEntry {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub k: usize,
    /// basis vectors of h, each of length dim, entries "p/q"
    pub h: Vec<Vec<String>>,
    /// one entry list per form, upper triangle only
    pub thetas: Vec<Vec<FormEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub format_version: u32,
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<FormEntry>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocError(pub String);

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "document error: {}", self.0)
    }
}

impl std::error::Error for DocError {}

fn err<T>(msg: impl Into<String>) -> Result<T, DocError> {
    Err(DocError(msg.into()))
}

/// Everything a document can carry, in the library's in-memory types.
#[derive(Clone, Debug)]
pub struct DocContents {
    pub name: String,
    pub algebra: LieAlgebra,
    pub quadratic: Option<QuadraticLieAlgebra>,
    pub tags: Vec<ConstructionTag>,
    pub certificates: Vec<KSymplecticCertificate>,
}

pub fn emit_document(
    name: &str,
    algebra: &LieAlgebra,
    metric: Option<&BilinearForm>,
    tags: &[ConstructionTag],
    certificates: &[KSymplecticCertificate],
) -> AlgebraDocument {
    let dim = algebra.dim();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut coeffs = BTreeMap::new();
            for k in 0..dim {
                let c = algebra.structure_constant(i, j, k);
                if !c.is_zero() {
                    coeffs.insert((k + 1).to_string(), format_rat(c));
                }
            }
            if !coeffs.is_empty() {
                brackets.push(BracketEntry { i: i + 1, j: j + 1, coeffs });
            }
        }
    }
    let metric = metric.map(|m| {
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in i..dim {
                let v = &m.matrix()[(i, j)];
                if !v.is_zero() {
                    entries.push(FormEntry {
                        i: i + 1,
                        j: j + 1,
                        value: format_rat(v),
                    });
                }
            }
        }
        entries
    });
    let certificates = certificates
        .iter()
        .map(|c| CertificateDoc {
            k: c.k,
            h: c
                .h
                .basis_vectors()
                .iter()
                .map(|v| v.iter().map(format_rat).collect())
                .collect(),
            thetas: c
                .thetas
                .iter()
                .map(|t| {
                    let mut entries = Vec::new();
                    for i in 0..dim {
                        for j in i + 1..dim {
                            let v = &t.matrix()[(i, j)];
                            if !v.is_zero() {
                                entries.push(FormEntry {
                                    i: i + 1,
                                    j: j + 1,
                                    value: format_rat(v),
                                });
                            }
                        }
                    }
                    entries
                })
                .collect(),
        })
        .collect();
    AlgebraDocument {
        format_version: FORMAT_VERSION,
        name: name.to_string(),
        dim,
        basis: algebra.basis_names().to_vec(),
        brackets,
        metric,
        tags: tags.iter().map(|t| t.label().to_string()).collect(),
        certificates,
    }
}

fn parse_value(s: &str, what: &str) -> Result<Rat, DocError> {
    parse_rat(s).map_err(|e| DocError(format!("{what}: {e}")))
}

fn check_index(i: usize, dim: usize, what: &str) -> Result<usize, DocError> {
    if i == 0 || i > dim {
        return err(format!("{what}: index {i} out of range 1..={dim}"));
    }
    Ok(i - 1)
}

impl AlgebraDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, DocError> {
        serde_json::from_str(s).map_err(|e| DocError(format!("invalid JSON: {e}")))
    }

    /// Decodes the document into library types, validating indices,
    /// rationals, duplicate pairs, Jacobi, and metric invariance.
    pub fn realize(&self) -> Result<DocContents, DocError> {
        if self.format_version != FORMAT_VERSION {
            return err(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            ));
        }
        let dim = self.dim;
        if dim == 0 {
            return err("dim must be positive");
        }
        if !self.basis.is_empty() && self.basis.len() != dim {
            return err("basis names must match dim");
        }
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut brackets = Vec::new();
        for b in &self.brackets {
            let i = check_index(b.i, dim, "bracket")?;
            let j = check_index(b.j, dim, "bracket")?;
            if i == j {
                return err(format!("bracket ({}, {}) with equal indices", b.i, b.j));
            }
            let key = (i.min(j), i.max(j));
            if seen.contains(&key) {
                return err(format!(
                    "brackets ({}, {}) and its transpose both present",
                    b.i, b.j
                ));
            }
            seen.push(key);
            let mut terms = Vec::new();
            for (ks, vs) in &b.coeffs {
                let k: usize = ks
                    .parse()
                    .map_err(|_| DocError(format!("bracket coefficient key {ks:?}")))?;
                let k = check_index(k, dim, "bracket coefficient")?;
                terms.push((k, parse_value(vs, "bracket coefficient")?));
            }
            brackets.push((i, j, terms));
        }
        let algebra = LieAlgebra::from_brackets(dim, &brackets);
        let algebra = if self.basis.is_empty() {
            algebra
        } else {
            algebra.with_names(self.basis.clone())
        };
        algebra
            .check_jacobi()
            .map_err(|e| DocError(e.to_string()))?;

        let quadratic = match &self.metric {
            None => None,
            Some(entries) => {
                let mut seen: Vec<(usize, usize)> = Vec::new();
                let mut metric_entries = Vec::new();
                for e in entries {
                    let i = check_index(e.i, dim, "metric")?;
                    let j = check_index(e.j, dim, "metric")?;
                    let key = (i.min(j), i.max(j));
                    if seen.contains(&key) {
                        return err(format!(
                            "metric entries ({}, {}) and its transpose both present",
                            e.i, e.j
                        ));
                    }
                    seen.push(key);
                    metric_entries.push((i, j, parse_value(&e.value, "metric")?));
                }
                let form = BilinearForm::symmetric_from_entries(dim, &metric_entries);
                Some(
                    QuadraticLieAlgebra::new(algebra.clone(), form)
                        .map_err(|e| DocError(e.to_string()))?,
                )
            }
        };

        let mut tags = Vec::new();
        for t in &self.tags {
            tags.push(
                ConstructionTag::from_label(t)
                    .ok_or_else(|| DocError(format!("unknown tag {t:?}")))?,
            );
        }

        let mut certificates = Vec::new();
        for c in &self.certificates {
            if c.k == 0 || dim % (c.k + 1) != 0 {
                return err(format!("certificate k = {} infeasible for dim {dim}", c.k));
            }
            let n = dim / (c.k + 1);
            let mut vectors = Vec::new();
            for v in &c.h {
                if v.len() != dim {
                    return err("certificate h vector has wrong length");
                }
                let mut vec = Vec::new();
                for s in v {
                    vec.push(parse_value(s, "certificate h")?);
                }
                vectors.push(vec);
            }
            let h = Subspace::from_vectors(dim, &vectors);
            let mut thetas = Vec::new();
            for entries in &c.thetas {
                let mut seen: Vec<(usize, usize)> = Vec::new();
                let mut theta = BilinearForm::zero_antisymmetric(dim);
                for e in entries {
                    let i = check_index(e.i, dim, "theta")?;
                    let j = check_index(e.j, dim, "theta")?;
                    if i == j {
                        return err(format!("theta entry ({}, {}) on the diagonal", e.i, e.j));
                    }
                    let key = (i.min(j), i.max(j));
                    if seen.contains(&key) {
                        return err(format!(
                            "theta entries ({}, {}) and its transpose both present",
                            e.i, e.j
                        ));
                    }
                    seen.push(key);
                    theta = theta.plus_wedge(parse_value(&e.value, "theta")?, i, j);
                }
                thetas.push(theta);
            }
            certificates.push(KSymplecticCertificate { k: c.k, n, h, thetas });
        }

        Ok(DocContents {
            name: self.name.clone(),
            algebra,
            quadratic,
            tags,
            certificates,
        })
    }
}
