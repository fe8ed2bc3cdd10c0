//! Executable non-existence rules for k-symplectic structures on quadratic
//! Lie algebras.
//!
//! Each rule is an exact structural test; a verdict either rules out a set
//! of k values or (R7) records a constraint every certificate must satisfy.

use crate::deriv::h2_dimension;
use crate::forms::QuadraticLieAlgebra;
use crate::linalg::Mat;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rule {
    /// Non-nilpotent quadratic algebra: no 1-symplectic structure.
    R1,
    /// H² = 0 with nonzero center: no k-symplectic structure for any k.
    R2,
    /// One-dimensional nondegenerate center: none for any k.
    R3,
    /// Non-abelian nilpotent of dimension m: no (m−1)-symplectic structure.
    R4,
    /// Double extension of an abelian algebra by a non-nilpotent skew map
    /// (possibly times an abelian factor): none for any k. Fires on the
    /// construction tag only; the scan does not recognize the presentation.
    R5,
    /// Negative definite Killing form: none for any k.
    R6,
    /// For k > dim H² every certificate must have degenerate h. A
    /// constraint, not a non-existence verdict.
    R7,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R6 => "R6",
            Rule::R7 => "R7",
        }
    }
}

/// Provenance tags a catalog entry (or user document) may carry; R5 keys on
/// `DoubleExtensionNonNilpotent`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstructionTag {
    /// Double extension of an abelian quadratic algebra by a non-nilpotent
    /// skew map, possibly times an abelian factor.
    DoubleExtensionNonNilpotent,
    /// Double extension of an abelian quadratic algebra by a nilpotent map.
    DoubleExtensionNilpotent,
    Oscillator,
    TStarExtension,
}

impl ConstructionTag {
    pub fn label(self) -> &'static str {
        match self {
            ConstructionTag::DoubleExtensionNonNilpotent => "double-extension-nonnilpotent",
            ConstructionTag::DoubleExtensionNilpotent => "double-extension-nilpotent",
            ConstructionTag::Oscillator => "oscillator",
            ConstructionTag::TStarExtension => "tstar-extension",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        [
            ConstructionTag::DoubleExtensionNonNilpotent,
            ConstructionTag::DoubleExtensionNilpotent,
            ConstructionTag::Oscillator,
            ConstructionTag::TStarExtension,
        ]
        .into_iter()
        .find(|t| t.label() == s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scope {
    AllK,
    Only(Vec<usize>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ObstructionVerdict {
    pub rule: Rule,
    pub scope: Scope,
    /// R7 only: records a structural constraint instead of ruling out k.
    pub constraint_only: bool,
    pub detail: String,
}

impl ObstructionVerdict {
    pub fn rules_out(&self, k: usize) -> bool {
        if self.constraint_only {
            return false;
        }
        match &self.scope {
            Scope::AllK => true,
            Scope::Only(ks) => ks.contains(&k),
        }
    }
}

impl fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scope = match &self.scope {
            Scope::AllK => "all k".to_string(),
            Scope::Only(ks) => format!(
                "k in {{{}}}",
                ks.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
            ),
        };
        if self.constraint_only {
            write!(f, "{} [constraint, {scope}]: {}", self.rule.id(), self.detail)
        } else {
            write!(f, "{} [rules out {scope}]: {}", self.rule.id(), self.detail)
        }
    }
}

/// Is the symmetric matrix negative definite (Sylvester on −m).
fn negative_definite(m: &Mat) -> bool {
    let n = m.rows();
    let neg = -m;
    (1..=n).all(|s| {
        let minor = Mat::from_fn(s, s, |i, j| neg[(i, j)].clone());
        crate::rat::is_positive(&minor.det())
    })
}

/// Runs every rule against `q`, in citation-priority order R6, R5, R4, R3,
/// R2, R1, then the R7 constraint. Verdicts are sound: none rules out a k
/// for which a valid certificate exists.
pub fn obstruction_scan(
    q: &QuadraticLieAlgebra,
    tags: &[ConstructionTag],
) -> Vec<ObstructionVerdict> {
    let g = q.algebra();
    let mut out = Vec::new();

    if negative_definite(&g.killing_matrix()) {
        out.push(ObstructionVerdict {
            rule: Rule::R6,
            scope: Scope::AllK,
            constraint_only: false,
            detail: "the Killing form is negative definite".into(),
        });
    }
    if tags.contains(&ConstructionTag::DoubleExtensionNonNilpotent) {
        out.push(ObstructionVerdict {
            rule: Rule::R5,
            scope: Scope::AllK,
            constraint_only: false,
            detail: "double extension of an abelian algebra by a non-nilpotent skew map (tagged)"
                .into(),
        });
    }
    let nilpotent = g.is_nilpotent();
    if nilpotent && !g.is_abelian() {
        out.push(ObstructionVerdict {
            rule: Rule::R4,
            scope: Scope::Only(vec![g.dim() - 1]),
            constraint_only: false,
            detail: format!(
                "non-abelian nilpotent of dimension {}: no ({})-symplectic structure",
                g.dim(),
                g.dim() - 1
            ),
        });
    }
    let center = g.center();
    if center.dim() == 1 && !q.is_degenerate_on(&center) {
        out.push(ObstructionVerdict {
            rule: Rule::R3,
            scope: Scope::AllK,
            constraint_only: false,
            detail: "one-dimensional nondegenerate center".into(),
        });
    }
    let h2 = h2_dimension(q);
    if h2 == 0 && !center.is_zero() {
        out.push(ObstructionVerdict {
            rule: Rule::R2,
            scope: Scope::AllK,
            constraint_only: false,
            detail: "H² = 0 while the center is nonzero".into(),
        });
    }
    if !nilpotent {
        out.push(ObstructionVerdict {
            rule: Rule::R1,
            scope: Scope::Only(vec![1]),
            constraint_only: false,
            detail: "not nilpotent: a quadratic algebra with a symplectic form is nilpotent"
                .into(),
        });
    }
    out.push(ObstructionVerdict {
        rule: Rule::R7,
        scope: Scope::AllK,
        constraint_only: true,
        detail: format!(
            "dim H² = {h2}: any k-symplectic structure with k > {h2} has degenerate h"
        ),
    });
    out
}

/// First verdict ruling out `k`, in the scan's priority order.
pub fn first_ruling_out(verdicts: &[ObstructionVerdict], k: usize) -> Option<&ObstructionVerdict> {
    verdicts.iter().find(|v| v.rules_out(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::verify_certificate;
    use crate::construct::oscillator;
    use crate::forms::BilinearForm;
    use crate::lie::LieAlgebra;
    use crate::rat::rat;

    fn su2_quadratic() -> QuadraticLieAlgebra {
        let g = LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![(2, rat(1))]),
                (1, 2, vec![(0, rat(1))]),
                (2, 0, vec![(1, rat(1))]),
            ],
        );
        QuadraticLieAlgebra::new(g, BilinearForm::symmetric(Mat::identity(3))).unwrap()
    }

    fn sl2_quadratic() -> QuadraticLieAlgebra {
        let g = LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![(2, rat(1))]),
                (2, 0, vec![(0, rat(2))]),
                (2, 1, vec![(1, rat(-2))]),
            ],
        );
        let m = BilinearForm::symmetric_from_entries(3, &[(0, 1, rat(1)), (2, 2, rat(2))]);
        QuadraticLieAlgebra::new(g, m).unwrap()
    }

    fn n1_22_quadratic() -> QuadraticLieAlgebra {
        let g = LieAlgebra::from_brackets(
            6,
            &[
                (5, 2, vec![(1, rat(1))]),
                (5, 4, vec![(3, rat(1))]),
                (2, 4, vec![(0, rat(1))]),
            ],
        );
        let m = BilinearForm::symmetric_from_entries(
            6,
            &[(0, 5, rat(1)), (1, 4, rat(1)), (2, 3, rat(-1))],
        );
        QuadraticLieAlgebra::new(g, m).unwrap()
    }

    #[test]
    fn negative_definite_cases() {
        assert!(negative_definite(&Mat::identity(3).scale(&rat(-2))));
        assert!(!negative_definite(&Mat::identity(3)));
        assert!(!negative_definite(&Mat::from_int_rows(&[&[-1, 0], &[0, 0]])));
        assert!(negative_definite(&su2_quadratic().algebra().killing_matrix()));
        assert!(!negative_definite(&sl2_quadratic().algebra().killing_matrix()));
    }

    #[test]
    fn su2_blocked_for_all_k() {
        let v = obstruction_scan(&su2_quadratic(), &[]);
        assert_eq!(first_ruling_out(&v, 2).unwrap().rule, Rule::R6);
        assert_eq!(first_ruling_out(&v, 1).unwrap().rule, Rule::R6);
    }

    #[test]
    fn sl2_only_k1_ruled_out() {
        let v = obstruction_scan(&sl2_quadratic(), &[]);
        assert_eq!(first_ruling_out(&v, 1).unwrap().rule, Rule::R1);
        assert!(first_ruling_out(&v, 2).is_none());
        // the H² = 0 constraint is emitted for sl2 (all derivations inner)
        let r7 = v.iter().find(|o| o.rule == Rule::R7).unwrap();
        assert!(r7.constraint_only);
        assert!(r7.detail.contains("dim H² = 0"));
    }

    #[test]
    fn n1_22_only_k5_ruled_out() {
        let v = obstruction_scan(&n1_22_quadratic(), &[]);
        assert_eq!(first_ruling_out(&v, 5).unwrap().rule, Rule::R4);
        assert!(first_ruling_out(&v, 1).is_none());
        assert!(first_ruling_out(&v, 2).is_none());
    }

    #[test]
    fn oscillator_tag_fires_r5() {
        let q = oscillator(&[rat(1)]).unwrap();
        let v = obstruction_scan(&q, &[ConstructionTag::DoubleExtensionNonNilpotent]);
        for k in [1, 3] {
            assert_eq!(first_ruling_out(&v, k).unwrap().rule, Rule::R5);
        }
        // untagged, R2 still rules out every k: H² = 0 with nonzero center
        let v = obstruction_scan(&q, &[]);
        assert_eq!(first_ruling_out(&v, 1).unwrap().rule, Rule::R2);
        assert_eq!(first_ruling_out(&v, 3).unwrap().rule, Rule::R2);
    }

    #[test]
    fn soundness_against_known_certificates() {
        // sl2 admits a 2-symplectic structure; no verdict may rule out k=2
        let q = sl2_quadratic();
        let cert = crate::cert::KSymplecticCertificate {
            k: 2,
            n: 1,
            h: crate::linalg::Subspace::coordinate(3, &[0, 2]),
            thetas: vec![
                BilinearForm::wedge(3, 2, 1),
                BilinearForm::wedge(3, 0, 1),
            ],
        };
        verify_certificate(q.algebra(), &cert, Some(&q)).unwrap();
        assert!(first_ruling_out(&obstruction_scan(&q, &[]), 2).is_none());
    }
}
