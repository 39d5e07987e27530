//! Components of the rank-one Brill-Noether loci `W^r_d(C)` on a general
//! ν-gonal curve.
//!
//! Every component is the closure of a splitting stratum whose vector is
//! maximal among those with `h⁰ ≥ r + 1`. The maximal vectors are the
//! "balanced plus balanced" vectors
//!
//! ```text
//! w_{r,ℓ} = B(ν − r − 1 + ℓ, d′ − ℓ) ⊕ B(r + 1 − ℓ, ℓ),    d′ = d + 1 − g − ν
//! ```
//!
//! for `max{0, r + 2 − ν} ≤ ℓ ≤ r` with either `ℓ = 0` or
//! `ℓ ≤ g + 2r + 1 − d − ν`. The stratum has dimension
//! `ρ′ = ρ(g, r − ℓ, d) − ℓν = g − u(w_{r,ℓ})` and is a component when
//! `ρ′ ≥ 0`.
//!
//! The `table_r1` / `table_r2` functions transcribe the printed case tables
//! for `r = 1, 2` row by row, so that they can be checked against the
//! formula above.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::{GonalCurve, HypothesisError};
use crate::splitting::SplittingVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankOneError {
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
    #[error("ell = {ell} is not admissible for r = {r} (admissible: {reason})")]
    InvalidEll { r: i64, ell: i64, reason: String },
    #[error("non-special range r <= d - g: W^r_d is all of Pic^d")]
    NonSpecial,
}

/// Classical Brill-Noether number `ρ(g, r, d) = g − (r + 1)(g + r − d)`.
pub fn classical_rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g + r - d)
}

/// `d′ = d + 1 − g − ν`, the degree of the pushforward to P¹.
pub fn pushforward_degree(g: i64, nu: i64, d: i64) -> i64 {
    d + 1 - g - nu
}

/// Whether `ℓ` indexes a maximal vector for `W^r_d` (ignoring `ρ′ ≥ 0`).
pub fn ell_admissible(g: i64, nu: i64, d: i64, r: i64, ell: i64) -> Result<(), String> {
    let low = 0.max(r + 2 - nu);
    if ell < low || ell > r {
        return Err(format!("{low} <= ell <= {r}"));
    }
    if ell != 0 && ell > g + 2 * r + 1 - d - nu {
        return Err(format!(
            "ell = 0 or ell <= g + 2r + 1 - d - nu = {}",
            g + 2 * r + 1 - d - nu
        ));
    }
    Ok(())
}

/// The maximal splitting vector `w_{r,ℓ}`.
pub fn maximal_vector(
    g: i64,
    nu: i64,
    d: i64,
    r: i64,
    ell: i64,
) -> Result<SplittingVector, RankOneError> {
    if r <= d - g {
        return Err(RankOneError::NonSpecial);
    }
    if nu < 2 {
        return Err(RankOneError::InvalidEll {
            r,
            ell,
            reason: format!("nu = {nu} < 2"),
        });
    }
    ell_admissible(g, nu, d, r, ell).map_err(|reason| RankOneError::InvalidEll {
        r,
        ell,
        reason,
    })?;
    let first_rank = nu - r - 1 + ell;
    let second_rank = r + 1 - ell;
    // both ranks are >= 1 once ell is admissible
    debug_assert!(first_rank >= 1 && second_rank >= 1);
    let dp = pushforward_degree(g, nu, d);
    let first =
        SplittingVector::balanced(first_rank as usize, dp - ell).expect("first block rank checked");
    let second =
        SplittingVector::balanced(second_rank as usize, ell).expect("second block rank checked");
    Ok(first.concat(&second))
}

/// Expected dimension `ρ′(g, w_{r,ℓ}) = ρ(g, r − ℓ, d) − ℓν`.
pub fn stratum_dimension(g: i64, nu: i64, d: i64, r: i64, ell: i64) -> i64 {
    classical_rho(g, r - ell, d) - ell * nu
}

/// What a general point of a component looks like.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GenericElement {
    /// `A + B`, `B` the effective divisor of base points (`w_{1,1}`).
    PencilPlusBase {
        base_degree: i64,
    },
    /// Base-point-free complete pencil (`w_{1,0}`).
    FreePencil,
    /// `2A + B`, `B` a divisor of base points (`w_{2,2}`).
    DoubleGonalPlusBase {
        base_degree: i64,
    },
    /// `A + M`, `M` movable; base-point-free, birationally very ample (`w_{2,1}`).
    GonalPlusMovable {
        movable_degree: i64,
    },
    /// Base-point-free, birationally very ample net (`w_{2,0}`).
    FreeNet,
    /// General point of `Pic^d`.
    GeneralLineBundle,
    Unspecified,
}

fn generic_element(nu: i64, d: i64, r: i64, ell: i64) -> GenericElement {
    match (r, ell) {
        (1, 1) => GenericElement::PencilPlusBase {
            base_degree: d - nu,
        },
        (1, 0) => GenericElement::FreePencil,
        (2, 2) => GenericElement::DoubleGonalPlusBase {
            base_degree: d - 2 * nu,
        },
        (2, 1) => GenericElement::GonalPlusMovable {
            movable_degree: d - nu,
        },
        (2, 0) => GenericElement::FreeNet,
        _ => GenericElement::Unspecified,
    }
}

/// One irreducible component `closure(W^{w_{r,ℓ}})` of `W^r_d(C)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank1Component {
    pub ell: i64,
    pub vector: SplittingVector,
    pub dimension: i64,
    pub codimension: i64,
    pub generic_element: GenericElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "components")]
pub enum Locus {
    /// `W^r_d(C) = Pic^d(C)`.
    AllOfPicard,
    /// The listed components; empty means `W^r_d(C) = ∅`.
    Components(Vec<Rank1Component>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WrdReport {
    pub g: i64,
    pub nu: i64,
    pub d: i64,
    pub r: i64,
    pub locus: Locus,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl WrdReport {
    pub fn components(&self) -> &[Rank1Component] {
        match &self.locus {
            Locus::AllOfPicard => &[],
            Locus::Components(c) => c,
        }
    }

    /// Indices `ℓ` of the components, or `None` for `Pic^d`.
    pub fn ells(&self) -> Option<BTreeSet<i64>> {
        match &self.locus {
            Locus::AllOfPicard => None,
            Locus::Components(c) => Some(c.iter().map(|c| c.ell).collect()),
        }
    }
}

/// Irreducible components of `W^r_d(C)`.
pub fn components_w(g: i64, nu: i64, d: i64, r: i64) -> Result<WrdReport, RankOneError> {
    let curve = GonalCurve::new(g, nu)?;
    if d < 0 {
        return Err(HypothesisError::NegativeDegree(d).into());
    }
    if r < 0 {
        return Err(HypothesisError::NegativeRank(r).into());
    }
    let mut report = WrdReport {
        g: curve.g,
        nu: curve.nu,
        d,
        r,
        locus: Locus::AllOfPicard,
        warnings: Vec::new(),
    };
    if r <= d - g {
        return Ok(report);
    }
    let mut comps: Vec<Rank1Component> = Vec::new();
    for ell in (0..=r).rev() {
        if ell_admissible(g, nu, d, r, ell).is_err() {
            continue;
        }
        let dimension = stratum_dimension(g, nu, d, r, ell);
        if dimension < 0 {
            continue;
        }
        let vector = maximal_vector(g, nu, d, r, ell)?;
        let codimension = vector.magnitude();
        let comp = Rank1Component {
            ell,
            vector,
            dimension,
            codimension,
            generic_element: generic_element(nu, d, r, ell),
        };
        if let Some(prev) = comps.iter_mut().find(|c| c.vector == comp.vector) {
            report.warnings.push(format!(
                "ell = {} and ell = {} give the same vector {}",
                prev.ell, comp.ell, comp.vector
            ));
            if comp.dimension > prev.dimension {
                *prev = comp;
            }
            continue;
        }
        comps.push(comp);
    }
    report.locus = Locus::Components(comps);
    Ok(report)
}

/// Rows of the printed table for `W¹_t(C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum R1Case {
    Empty,
    OnlyW11,
    Both,
    OnlyW10,
    Picard,
}

impl R1Case {
    pub fn ells(self) -> Option<BTreeSet<i64>> {
        match self {
            R1Case::Empty => Some(BTreeSet::new()),
            R1Case::OnlyW11 => Some([1].into()),
            R1Case::Both => Some([0, 1].into()),
            R1Case::OnlyW10 => Some([0].into()),
            R1Case::Picard => None,
        }
    }
}

/// Printed case table for `W¹_t(C)`; `t < ν` gives `Empty`.
pub fn table_r1(g: i64, nu: i64, t: i64) -> Result<R1Case, HypothesisError> {
    GonalCurve::new(g, nu)?;
    Ok(if t > g {
        R1Case::Picard
    } else if t < nu {
        R1Case::Empty
    } else if 2 * t < g + 2 {
        R1Case::OnlyW11
    } else if t <= g + 2 - nu {
        R1Case::Both
    } else {
        // g − ν + 2 < t < g + 1
        R1Case::OnlyW10
    })
}

/// Rows of the printed table for `W²_t(C)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum R2Case {
    Picard,
    /// Subset of `{w_{2,2}, w_{2,1}, w_{2,0}}` by `ℓ`; empty is `W²_t = ∅`.
    Components(BTreeSet<i64>),
}

impl R2Case {
    fn of(ells: &[i64]) -> Self {
        R2Case::Components(ells.iter().copied().collect())
    }

    pub fn ells(&self) -> Option<BTreeSet<i64>> {
        match self {
            R2Case::Picard => None,
            R2Case::Components(s) => Some(s.clone()),
        }
    }
}

impl std::fmt::Display for R2Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            R2Case::Picard => f.write_str("Pic"),
            R2Case::Components(s) if s.is_empty() => f.write_str("empty"),
            R2Case::Components(s) => {
                let names: Vec<String> = s.iter().rev().map(|l| format!("W2{l}")).collect();
                f.write_str(&names.join(" "))
            }
        }
    }
}

/// Printed case table for `W²_t(C)`, with the trigonal rows for small genus
/// transcribed exactly as printed (including their `w_{2,0}` entries).
pub fn table_r2(g: i64, nu: i64, t: i64) -> Result<R2Case, HypothesisError> {
    GonalCurve::new(g, nu)?;
    if t < nu {
        return Ok(R2Case::of(&[]));
    }
    if nu == 3 {
        return Ok(table_r2_trigonal(g, t));
    }
    if t >= g + 2 {
        return Ok(R2Case::Picard);
    }
    let case = if 3 * nu <= g + 2 {
        // (ii)
        if t < 2 * nu {
            R2Case::of(&[])
        } else if 2 * t < g + 2 + nu {
            R2Case::of(&[2])
        } else if 3 * t < 2 * g + 6 {
            R2Case::of(&[2, 1])
        } else if t <= g + 3 - nu {
            R2Case::of(&[2, 1, 0])
        } else if t == g + 4 - nu {
            R2Case::of(&[1, 0])
        } else {
            R2Case::of(&[0])
        }
    } else if 3 * nu == g + 3 {
        // (iii)
        if t < 2 * nu {
            R2Case::of(&[])
        } else if t == 2 * nu {
            R2Case::of(&[2, 1, 0])
        } else if t == g + 4 - nu {
            R2Case::of(&[1, 0])
        } else {
            R2Case::of(&[0])
        }
    } else if 3 * nu == g + 4 {
        // (iv)
        if t < g + 3 - nu {
            R2Case::of(&[])
        } else if t == g + 3 - nu {
            R2Case::of(&[1])
        } else if t == 2 * nu {
            R2Case::of(&[1, 0])
        } else {
            R2Case::of(&[0])
        }
    } else if 3 * nu <= g + 6 {
        // (v)
        if t <= g + 3 - nu {
            R2Case::of(&[])
        } else if t == g + 4 - nu {
            R2Case::of(&[1, 0])
        } else {
            R2Case::of(&[0])
        }
    } else if 3 * nu <= g + 9 {
        // (vi)
        if t <= g + 4 - nu {
            R2Case::of(&[])
        } else {
            R2Case::of(&[0])
        }
    } else {
        // (vii)
        if 3 * t < 2 * g + 6 {
            R2Case::of(&[])
        } else {
            R2Case::of(&[0])
        }
    };
    Ok(case)
}

fn table_r2_trigonal(g: i64, t: i64) -> R2Case {
    match g {
        4 => {
            if 2 * t < g + 5 {
                R2Case::of(&[])
            } else if t < 6 {
                R2Case::of(&[1, 0])
            } else {
                R2Case::Picard
            }
        }
        5 => {
            if 2 * t < g + 5 {
                R2Case::of(&[])
            } else if t == 5 {
                R2Case::of(&[1])
            } else if t == 6 {
                R2Case::of(&[2, 1, 0])
            } else {
                R2Case::Picard
            }
        }
        6 => {
            if 2 * t < g + 5 {
                R2Case::of(&[])
            } else if t < 8 {
                R2Case::of(&[2, 1, 0])
            } else {
                R2Case::Picard
            }
        }
        7 => {
            if t < 6 {
                R2Case::of(&[])
            } else if t == 6 {
                R2Case::of(&[2, 1])
            } else if t < 9 {
                R2Case::of(&[2, 1, 0])
            } else {
                R2Case::Picard
            }
        }
        _ => {
            if t < 6 {
                R2Case::of(&[])
            } else if 2 * t < g + 5 {
                R2Case::of(&[2])
            } else if 3 * t < 2 * g + 6 {
                R2Case::of(&[2, 1])
            } else if t < g + 2 {
                R2Case::of(&[2, 1, 0])
            } else {
                R2Case::Picard
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[i64]) -> SplittingVector {
        SplittingVector::new(e.to_vec()).unwrap()
    }

    #[test]
    fn classical_rho_examples() {
        assert_eq!(classical_rho(4, 1, 3), 0);
        assert_eq!(classical_rho(12, 2, 9), -3);
        for g in 0..20 {
            for d in 0..=g {
                assert_eq!(classical_rho(g, 0, d), d);
            }
        }
    }

    #[test]
    fn maximal_vector_examples() {
        assert_eq!(maximal_vector(10, 3, 7, 1, 1).unwrap(), v(&[-3, -3, 1]));
        assert_eq!(maximal_vector(10, 3, 7, 1, 0).unwrap(), v(&[-5, 0, 0]));
        assert!(matches!(
            maximal_vector(10, 3, 7, 1, 2),
            Err(RankOneError::InvalidEll { .. })
        ));
        // degenerate first block: nu - r - 1 + ell = 0
        assert!(matches!(
            maximal_vector(10, 3, 7, 2, 0),
            Err(RankOneError::InvalidEll { .. })
        ));
        assert_eq!(
            maximal_vector(10, 3, 11, 1, 0),
            Err(RankOneError::NonSpecial)
        );
    }

    #[test]
    fn components_examples() {
        let rep = components_w(10, 3, 7, 1).unwrap();
        let dims: Vec<_> = rep
            .components()
            .iter()
            .map(|c| (c.ell, c.dimension))
            .collect();
        assert_eq!(dims, vec![(1, 4), (0, 2)]);
        assert_eq!(
            rep.components()[0].generic_element,
            GenericElement::PencilPlusBase { base_degree: 4 }
        );
        assert_eq!(
            rep.components()[1].generic_element,
            GenericElement::FreePencil
        );

        let rep = components_w(12, 4, 9, 2).unwrap();
        let dims: Vec<_> = rep
            .components()
            .iter()
            .map(|c| (c.ell, c.dimension))
            .collect();
        assert_eq!(dims, vec![(2, 1), (1, 0)]);

        assert_eq!(
            components_w(10, 3, 11, 1).unwrap().locus,
            Locus::AllOfPicard
        );
        assert!(matches!(
            components_w(10, 9, 7, 1),
            Err(RankOneError::Hypothesis(_))
        ));
        assert!(matches!(
            components_w(10, 3, -1, 1),
            Err(RankOneError::Hypothesis(_))
        ));
    }

    #[test]
    fn printed_dimensions_r1() {
        // dim w11 = t - nu, dim w10 = 2t - g - 2
        let (g, nu, t) = (10, 3, 7);
        let rep = components_w(g, nu, t, 1).unwrap();
        assert_eq!(rep.components()[0].dimension, t - nu);
        assert_eq!(rep.components()[1].dimension, 2 * t - g - 2);
    }

    #[test]
    fn printed_dimensions_r2() {
        for g in 8..30 {
            for nu in GonalCurve::gonalities(g) {
                for t in nu..g + 2 {
                    for c in components_w(g, nu, t, 2).unwrap().components() {
                        let printed = match c.ell {
                            2 => t - 2 * nu,
                            1 => 2 * t - g - nu - 2,
                            _ => 3 * t - 2 * g - 6,
                        };
                        assert_eq!(c.dimension, printed, "g={g} nu={nu} t={t} ell={}", c.ell);
                    }
                }
            }
        }
    }

    #[test]
    fn table_examples() {
        assert_eq!(table_r1(10, 3, 5).unwrap(), R1Case::OnlyW11);
        assert_eq!(table_r1(10, 3, 7).unwrap(), R1Case::Both);
        assert_eq!(table_r1(10, 3, 11).unwrap(), R1Case::Picard);
        assert_eq!(table_r2(5, 3, 6).unwrap(), R2Case::of(&[2, 1, 0]));
        assert_eq!(table_r2(12, 4, 9).unwrap(), R2Case::of(&[2, 1]));
        assert_eq!(table_r2(12, 4, 7).unwrap(), R2Case::of(&[]));
        assert_eq!(table_r2(4, 3, 5).unwrap(), R2Case::of(&[1, 0]));
    }
}
