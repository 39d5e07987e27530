//! Components of `B^{k₃}_d ∩ U^s_C(d)` on a general ν-gonal curve.
//!
//! Each existence or emptiness statement is a clause: a conjunction of
//! integer inequalities in `(g, ν, d)`. [`classify_b3`] evaluates every
//! clause and reports what fires, what is asserted empty, and which
//! families remain undetermined (with the failing conditions of each
//! clause that could have covered them).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::GonalCurve;

/// `k_i = d − 2g + 2 + i`.
pub fn k_i(g: i64, d: i64, i: i64) -> i64 {
    d - 2 * g + 2 + i
}

/// `ρ_d^{k_i} = 4g − 3 − i·k_i`.
pub fn rho_rank2(g: i64, d: i64, i: i64) -> i64 {
    4 * g - 3 - i * k_i(g, d, i)
}

/// `ρ_M^{k₃} = 9g − 18 − 3d`, the expected dimension with fixed determinant.
pub fn rho_fixed_det(g: i64, d: i64) -> i64 {
    9 * g - 18 - 3 * d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "FirstType_1a")]
    FirstType1a,
    #[serde(rename = "ModType_2b_mod")]
    ModType2bMod,
    #[serde(rename = "Regular_Ei")]
    RegularEi,
    #[serde(rename = "Regular_Eii")]
    RegularEii,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::FirstType1a,
        Family::ModType2bMod,
        Family::RegularEi,
        Family::RegularEii,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::FirstType1a => "FirstType_1a",
            Family::ModType2bMod => "ModType_2b_mod",
            Family::RegularEi => "Regular_Ei",
            Family::RegularEii => "Regular_Eii",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regularity {
    Regular,
    Superabundant,
}

/// Sub-line bundle of the presenting extension `0 → N → F → L → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Kernel {
    /// General line bundle of its degree.
    General,
    /// `ω_C(−D_s)`, `D_s` a general effective divisor of degree `s`.
    CanonicalMinusDivisor { s: i64 },
    /// `ω_C ⊗ G_t^∨` with `|G_t| = g²_t` general in `W^{w_{2,0}}`.
    CanonicalMinusNet { t: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Quotient {
    /// `K_C − 2A`
    CanonicalMinusTwoGonal,
    /// `K_C − A`
    CanonicalMinusGonal,
    /// `ω_C`
    Canonical,
}

impl Quotient {
    pub fn degree(self, g: i64, nu: i64) -> i64 {
        match self {
            Quotient::CanonicalMinusTwoGonal => 2 * g - 2 - 2 * nu,
            Quotient::CanonicalMinusGonal => 2 * g - 2 - nu,
            Quotient::Canonical => 2 * g - 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub kernel: Kernel,
    pub kernel_degree: i64,
    pub quotient: Quotient,
    pub quotient_degree: i64,
}

/// `E-ii` metadata: the net `g²_t` with `t = 4g − 4 − d` and the window
/// `2g + 6 ≤ 3t ≤ 3g + 6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetConstraint {
    pub t: i64,
    pub three_t_min: i64,
    pub three_t_max: i64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2ComponentRecord {
    pub family: Family,
    pub dim: i64,
    pub rho: i64,
    pub regularity: Regularity,
    pub uniruled: bool,
    pub generically_smooth: bool,
    pub presentation: Presentation,
    pub clause: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub net: Option<NetConstraint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    NotApplicable,
    AssertedEmpty,
    HasComponents,
    PartiallyKnown,
}

/// Which kind of component the clauses leave undetermined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum UnknownFamily {
    /// `ρ ≥ 0` but no clause asserts a regular component.
    Regular,
    /// No clause asserts any component, nor emptiness.
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseGap {
    pub clause: String,
    pub failed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unknown {
    pub family: UnknownFamily,
    pub reason: String,
    pub gaps: Vec<ClauseGap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedType {
    pub type_label: String,
    pub clause: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialityNote {
    pub speciality: i64,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GuardError {
    #[error("speciality index must be at least 1 (got {0})")]
    InvalidArgument(i64),
}

/// Upper bound on the speciality of a general member of any component.
pub fn speciality_guard(i: i64) -> Result<SpecialityNote, GuardError> {
    if i < 1 {
        return Err(GuardError::InvalidArgument(i));
    }
    Ok(SpecialityNote {
        speciality: i,
        statement: format!(
            "2g-2 <= d <= 4g-4: h^1 = {i} at a general point of each component of \
             B^{{k_{i}}}_d ∩ U^s_C(d); h^1 > {i} does not occur generically"
        ),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifierReport {
    pub g: i64,
    pub nu: i64,
    pub d: i64,
    pub status: Status,
    pub k3: i64,
    pub rho: i64,
    pub components: Vec<Rank2ComponentRecord>,
    pub empties: Vec<String>,
    pub unknowns: Vec<Unknown>,
    pub excluded_types: Vec<ExcludedType>,
    pub speciality: SpecialityNote,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ClassifierReport {
    pub fn count(&self, regularity: Regularity) -> usize {
        self.components
            .iter()
            .filter(|c| c.regularity == regularity)
            .count()
    }

    pub fn families(&self) -> Vec<Family> {
        let mut f: Vec<_> = self.components.iter().map(|c| c.family).collect();
        f.sort();
        f
    }

    pub fn clause_ids(&self) -> Vec<&str> {
        self.components.iter().map(|c| c.clause.as_str()).collect()
    }
}

/// A single labelled inequality of a clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub label: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseEval {
    pub id: &'static str,
    pub conditions: Vec<Condition>,
}

impl ClauseEval {
    pub fn holds(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn failed(&self) -> Vec<String> {
        self.conditions
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.label.clone())
            .collect()
    }

    fn gap(&self) -> ClauseGap {
        ClauseGap {
            clause: self.id.to_string(),
            failed: self.failed(),
        }
    }
}

fn le(label: &str, lhs: i64, rhs: i64) -> Condition {
    Condition {
        label: format!("{label} ({lhs} <= {rhs})"),
        holds: lhs <= rhs,
    }
}

fn lt(label: &str, lhs: i64, rhs: i64) -> Condition {
    Condition {
        label: format!("{label} ({lhs} < {rhs})"),
        holds: lhs < rhs,
    }
}

/// All clauses evaluated at `(g, ν, d)`, in a fixed order.
pub fn evaluate_clauses(g: i64, nu: i64, d: i64) -> Vec<ClauseEval> {
    vec![
        ClauseEval {
            id: "A",
            conditions: vec![le("4g-6 <= d", 4 * g - 6, d), le("d <= 4g-4", d, 4 * g - 4)],
        },
        ClauseEval {
            id: "B",
            conditions: vec![
                le("g >= 15", 15, g),
                lt("4nu < g-2", 4 * nu, g - 2),
                le("4g-4-2nu <= d", 4 * g - 4 - 2 * nu, d),
                le("d <= 4g-7", d, 4 * g - 7),
            ],
        },
        ClauseEval {
            id: "C-ii",
            conditions: vec![
                le("g >= 9", 9, g),
                le("3nu <= g", 3 * nu, g),
                le("2g-6+2nu <= d", 2 * g - 6 + 2 * nu, d),
                le("d <= 4g-5-4nu", d, 4 * g - 5 - 4 * nu),
            ],
        },
        ClauseEval {
            id: "D-i(i1)",
            conditions: vec![
                le("g >= 6", 6, g),
                le("2nu <= g", 2 * nu, g),
                le("3g-5 <= d", 3 * g - 5, d),
                le("d <= 4g-5-2nu", d, 4 * g - 5 - 2 * nu),
            ],
        },
        ClauseEval {
            id: "D-i(i2)",
            conditions: vec![
                le("g >= 8", 8, g),
                le("4nu <= g+4", 4 * nu, g + 4),
                le("3g-3-nu <= d", 3 * g - 3 - nu, d),
                le("d <= 3g-6", d, 3 * g - 6),
            ],
        },
        ClauseEval {
            id: "D-ii(ii1)",
            conditions: vec![
                le("g >= 9", 9, g),
                le("4nu <= g+3", 4 * nu, g + 3),
                le("2g-7+3nu <= d", 2 * g - 7 + 3 * nu, d),
                le("d <= 3g-4-nu", d, 3 * g - 4 - nu),
            ],
        },
        ClauseEval {
            id: "D-ii(ii2)",
            conditions: vec![
                le("g >= 10", 10, g),
                le("5nu <= g+5", 5 * nu, g + 5),
                le("2g-7+2nu <= d", 2 * g - 7 + 2 * nu, d),
                le("d <= 2g-8+3nu", d, 2 * g - 8 + 3 * nu),
            ],
        },
        ClauseEval {
            id: "E-i",
            conditions: vec![
                le("g >= 7", 7, g),
                lt("2nu < g", 2 * nu, g),
                le("2g-2 <= d", 2 * g - 2, d),
                le("d <= 3g-7", d, 3 * g - 7),
            ],
        },
        ClauseEval {
            id: "E-ii",
            conditions: vec![
                le("g >= 9", 9, g),
                le("g+3 <= 4nu", g + 3, 4 * nu),
                lt("2nu < g", 2 * nu, g),
                le("3g-6 <= d", 3 * g - 6, d),
                le("3d <= 10g-18", 3 * d, 10 * g - 18),
            ],
        },
    ]
}

fn regularity_if(regular: bool) -> Regularity {
    if regular {
        Regularity::Regular
    } else {
        Regularity::Superabundant
    }
}

fn record_for(g: i64, nu: i64, d: i64, clause: &'static str) -> Rank2ComponentRecord {
    let rho = rho_rank2(g, d, 3);
    let (family, dim, regularity, kernel, kernel_degree, quotient, uniruled, smooth, net) =
        match clause {
            "C-ii" => (
                Family::FirstType1a,
                6 * g - 6 - 4 * nu - d,
                regularity_if(d == 2 * g - 6 + 2 * nu),
                Kernel::General,
                d - 2 * g + 2 + 2 * nu,
                Quotient::CanonicalMinusTwoGonal,
                true,
                true,
                None,
            ),
            "D-i(i1)" | "D-i(i2)" => (
                Family::ModType2bMod,
                8 * g - 11 - 2 * nu - 2 * d,
                Regularity::Superabundant,
                Kernel::CanonicalMinusDivisor {
                    s: 4 * g - 4 - nu - d,
                },
                d - 2 * g + 2 + nu,
                Quotient::CanonicalMinusGonal,
                true,
                true,
                None,
            ),
            "D-ii(ii1)" | "D-ii(ii2)" => (
                Family::ModType2bMod,
                8 * g - 11 - 2 * nu - 2 * d,
                regularity_if(d == 2 * g - 7 + 2 * nu),
                Kernel::General,
                d - 2 * g + 2 + nu,
                Quotient::CanonicalMinusGonal,
                true,
                true,
                None,
            ),
            "E-i" => (
                Family::RegularEi,
                rho,
                Regularity::Regular,
                Kernel::General,
                d - 2 * g + 2,
                Quotient::Canonical,
                true,
                true,
                None,
            ),
            "E-ii" => {
                let t = 4 * g - 4 - d;
                (
                    Family::RegularEii,
                    rho,
                    Regularity::Regular,
                    Kernel::CanonicalMinusNet { t },
                    2 * g - 2 - t,
                    Quotient::Canonical,
                    false,
                    true,
                    Some(NetConstraint {
                        t,
                        three_t_min: 2 * g + 6,
                        three_t_max: 3 * g + 6,
                        satisfied: 2 * g + 6 <= 3 * t && 3 * t <= 3 * g + 6,
                    }),
                )
            }
            other => unreachable!("no component record for clause {other}"),
        };
    Rank2ComponentRecord {
        family,
        dim,
        rho,
        regularity,
        uniruled,
        generically_smooth: smooth,
        presentation: Presentation {
            kernel,
            kernel_degree,
            quotient,
            quotient_degree: quotient.degree(g, nu),
        },
        clause: clause.to_string(),
        net,
    }
}

fn excluded_types() -> Vec<ExcludedType> {
    vec![
        ExcludedType {
            type_label: "(1-b)".into(),
            clause: "C".into(),
            note: "first-type bundles with quotient K_C - (A + M), A + M general in W^{w_{2,1}}, \
                   form a proper closed subset of some other component"
                .into(),
        },
        ExcludedType {
            type_label: "(1-c)".into(),
            clause: "C".into(),
            note: "first-type bundles with quotient K_C - E, E general in W^{w_{2,0}}, \
                   are not the general points of any component"
                .into(),
        },
    ]
}

fn empty_report(g: i64, nu: i64, d: i64) -> ClassifierReport {
    ClassifierReport {
        g,
        nu,
        d,
        status: Status::NotApplicable,
        k3: k_i(g, d, 3),
        rho: rho_rank2(g, d, 3),
        components: Vec::new(),
        empties: Vec::new(),
        unknowns: Vec::new(),
        excluded_types: excluded_types(),
        speciality: speciality_guard(3).expect("3 >= 1"),
        reason: None,
        warnings: Vec::new(),
    }
}

/// Hypothesis and degree-range check shared by the classifiers.
pub fn applicability(g: i64, nu: i64, d: i64) -> Result<(), String> {
    GonalCurve::new(g, nu).map_err(|e| e.to_string())?;
    if d < 2 * g - 2 || d > 4 * g - 4 {
        return Err(format!(
            "degree outside the range 2g-2 <= d <= 4g-4 = [{}, {}] (got d = {d})",
            2 * g - 2,
            4 * g - 4
        ));
    }
    Ok(())
}

const EMPTINESS: [&str; 2] = ["A", "B"];
const REGULAR_CAPABLE: [&str; 5] = ["C-ii", "D-ii(ii1)", "D-ii(ii2)", "E-i", "E-ii"];

/// Classify the components of `B^{k₃}_d ∩ U^s_C(d)` at `(g, ν, d)`.
pub fn classify_b3(g: i64, nu: i64, d: i64) -> ClassifierReport {
    let mut report = empty_report(g, nu, d);
    if let Err(reason) = applicability(g, nu, d) {
        report.reason = Some(reason);
        return report;
    }
    let clauses = evaluate_clauses(g, nu, d);

    report.empties = clauses
        .iter()
        .filter(|c| EMPTINESS.contains(&c.id) && c.holds())
        .map(|c| c.id.to_string())
        .collect();
    if !report.empties.is_empty() {
        report.status = Status::AssertedEmpty;
        for c in clauses
            .iter()
            .filter(|c| !EMPTINESS.contains(&c.id) && c.holds())
        {
            report.warnings.push(format!(
                "clause {} also fires inside an emptiness range",
                c.id
            ));
        }
        return report;
    }

    for c in clauses
        .iter()
        .filter(|c| !EMPTINESS.contains(&c.id) && c.holds())
    {
        let rec = record_for(g, nu, d, c.id);
        if let Some(prev) = report.components.iter().find(|r| r.family == rec.family) {
            report.warnings.push(format!(
                "clauses {} and {} both give {}; keeping {}",
                prev.clause, rec.clause, rec.family, prev.clause
            ));
            continue;
        }
        report.components.push(rec);
    }

    let rho = report.rho;
    let has_regular = report
        .components
        .iter()
        .any(|c| c.regularity == Regularity::Regular);
    if rho >= 0 && !has_regular {
        let gaps = clauses
            .iter()
            .filter(|c| REGULAR_CAPABLE.contains(&c.id))
            .map(|c| {
                let mut gap = c.gap();
                if c.holds() {
                    let target = match c.id {
                        "C-ii" => 2 * g - 6 + 2 * nu,
                        _ => 2 * g - 7 + 2 * nu,
                    };
                    gap.failed.push(format!("regular only at d = {target}"));
                }
                gap
            })
            .collect();
        report.unknowns.push(Unknown {
            family: UnknownFamily::Regular,
            reason: format!(
                "rho = {rho} >= 0 but no clause asserts a regular component at d = {d}"
            ),
            gaps,
        });
    }
    if report.components.is_empty() {
        let gaps = clauses
            .iter()
            .filter(|c| !c.holds())
            .map(ClauseEval::gap)
            .collect();
        report.unknowns.push(Unknown {
            family: UnknownFamily::Any,
            reason: format!("no clause asserts a component or emptiness at d = {d}"),
            gaps,
        });
    }
    report.status = if report.unknowns.is_empty() {
        Status::HasComponents
    } else {
        Status::PartiallyKnown
    };
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedDetRecord {
    pub family: Family,
    pub dim: i64,
    pub rho_m: i64,
    pub regularity: Regularity,
    pub clause: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedDeterminantReport {
    pub g: i64,
    pub nu: i64,
    pub d: i64,
    pub applicable: bool,
    pub rho_m: i64,
    pub components: Vec<FixedDetRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Components of `B^{k₃}_M ∩ U^s_C(M)` for `M ∈ Pic^d(C)` general.
pub fn classify_fixed_determinant(g: i64, nu: i64, d: i64) -> FixedDeterminantReport {
    let rho_m = rho_fixed_det(g, d);
    let mut out = FixedDeterminantReport {
        g,
        nu,
        d,
        applicable: true,
        rho_m,
        components: Vec::new(),
        reason: None,
    };
    if let Err(reason) = applicability(g, nu, d) {
        out.applicable = false;
        out.reason = Some(reason);
        return out;
    }
    let full = classify_b3(g, nu, d);
    for c in &full.components {
        match c.family {
            Family::FirstType1a => out.components.push(FixedDetRecord {
                family: c.family,
                dim: 5 * g - 6 - 4 * nu - d,
                rho_m,
                regularity: regularity_if(d == 2 * g - 6 + 2 * nu),
                clause: c.clause.clone(),
            }),
            Family::ModType2bMod if c.clause.starts_with("D-ii") && d <= 3 * g - 4 - nu => {
                out.components.push(FixedDetRecord {
                    family: c.family,
                    dim: 7 * g - 11 - 2 * nu - 2 * d,
                    rho_m,
                    regularity: regularity_if(d == 2 * g - 7 + 2 * nu),
                    clause: c.clause.clone(),
                })
            }
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_and_rho_examples() {
        assert_eq!(k_i(20, 38, 3), 3);
        assert_eq!(k_i(20, 38, 0), 0);
        assert_eq!(k_i(7, 12, 0), 0);
        assert_eq!(k_i(10, 25, 2), 9);
        assert_eq!(rho_rank2(20, 38, 3), 68);
        assert_eq!(rho_rank2(20, 40, 3), 62);
        for g in 0..30 {
            for d in 0..100 {
                assert_eq!(rho_rank2(g, d, 0), 4 * g - 3);
                assert_eq!(rho_rank2(g, d, 3), 10 * g - 18 - 3 * d);
                assert_eq!(rho_fixed_det(g, d), rho_rank2(g, d, 3) - g);
            }
        }
    }

    fn summary(r: &ClassifierReport) -> Vec<(Family, i64, Regularity, String)> {
        r.components
            .iter()
            .map(|c| (c.family, c.dim, c.regularity, c.clause.clone()))
            .collect()
    }

    #[test]
    fn classify_examples() {
        let r = classify_b3(20, 3, 38);
        assert_eq!(
            summary(&r),
            vec![(Family::RegularEi, 68, Regularity::Regular, "E-i".into())]
        );
        assert_eq!(r.status, Status::HasComponents);

        let r = classify_b3(20, 3, 40);
        assert_eq!(
            summary(&r),
            vec![
                (Family::FirstType1a, 62, Regularity::Regular, "C-ii".into()),
                (
                    Family::ModType2bMod,
                    63,
                    Regularity::Superabundant,
                    "D-ii(ii2)".into()
                ),
                (Family::RegularEi, 62, Regularity::Regular, "E-i".into()),
            ]
        );

        let r = classify_b3(20, 3, 39);
        assert_eq!(
            summary(&r),
            vec![
                (
                    Family::ModType2bMod,
                    65,
                    Regularity::Regular,
                    "D-ii(ii2)".into()
                ),
                (Family::RegularEi, 65, Regularity::Regular, "E-i".into()),
            ]
        );

        let r = classify_b3(16, 5, 42);
        assert_eq!(
            summary(&r),
            vec![
                (
                    Family::ModType2bMod,
                    23,
                    Regularity::Superabundant,
                    "D-i(i2)".into()
                ),
                (Family::RegularEii, 16, Regularity::Regular, "E-ii".into()),
            ]
        );
        let eii = &r.components[1];
        assert_eq!(eii.net.unwrap().t, 18);
        assert_eq!(eii.presentation.kernel, Kernel::CanonicalMinusNet { t: 18 });

        let r = classify_b3(20, 3, 74);
        assert_eq!(r.status, Status::AssertedEmpty);
        assert_eq!(r.empties, vec!["A".to_string()]);
        assert!(r.components.is_empty() && r.unknowns.is_empty());
    }

    #[test]
    fn not_applicable() {
        let r = classify_b3(20, 3, 10);
        assert_eq!(r.status, Status::NotApplicable);
        assert!(r.reason.unwrap().contains("2g-2 <= d <= 4g-4"));
        assert_eq!(classify_b3(10, 9, 20).status, Status::NotApplicable);
        assert_eq!(classify_b3(20, 3, 77).status, Status::NotApplicable);
    }

    #[test]
    fn unknown_regular_band() {
        for d in 54..=60 {
            let r = classify_b3(20, 3, d);
            assert_eq!(r.status, Status::PartiallyKnown, "d = {d}");
            assert!(r
                .unknowns
                .iter()
                .any(|u| u.family == UnknownFamily::Regular));
            let eii = r.unknowns[0]
                .gaps
                .iter()
                .find(|g| g.clause == "E-ii")
                .unwrap();
            assert_eq!(eii.failed.len(), 1);
            assert!(eii.failed[0].starts_with("g+3 <= 4nu"));
        }
        assert_eq!(classify_b3(20, 3, 61).status, Status::HasComponents);
    }

    #[test]
    fn presentations_add_up() {
        for g in 4..=40 {
            for nu in GonalCurve::gonalities(g) {
                for d in 2 * g - 2..=4 * g - 4 {
                    for c in classify_b3(g, nu, d).components {
                        let p = &c.presentation;
                        assert_eq!(
                            p.kernel_degree + p.quotient_degree,
                            d,
                            "{g} {nu} {d} {}",
                            c.clause
                        );
                        if let Kernel::CanonicalMinusDivisor { s } = p.kernel {
                            assert_eq!(2 * g - 2 - s, p.kernel_degree);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_determinant_examples() {
        let f = classify_fixed_determinant(20, 3, 40);
        assert_eq!(f.rho_m, 42);
        assert_eq!(f.components[0].family, Family::FirstType1a);
        assert_eq!(f.components[0].dim, 42);
        assert_eq!(f.components[0].regularity, Regularity::Regular);

        let f = classify_fixed_determinant(20, 3, 50);
        assert_eq!(f.rho_m, 12);
        assert_eq!(f.components[0].family, Family::FirstType1a);
        assert_eq!(f.components[0].dim, 32);
        assert_eq!(f.components[0].regularity, Regularity::Superabundant);
        // D-ii(ii1) is also alive at d = 50 <= 3g-4-nu
        assert_eq!(f.components[1].clause, "D-ii(ii1)");
        assert_eq!(f.components[1].dim, 23);

        let f = classify_fixed_determinant(20, 3, 39);
        assert_eq!(f.rho_m, 45);
        assert_eq!(f.components.len(), 1);
        assert_eq!(f.components[0].family, Family::ModType2bMod);
        assert_eq!(f.components[0].dim, 45);
        assert_eq!(f.components[0].regularity, Regularity::Regular);

        assert!(!classify_fixed_determinant(20, 3, 10).applicable);
    }

    #[test]
    fn speciality_guard_examples() {
        assert_eq!(speciality_guard(3).unwrap().speciality, 3);
        assert!(speciality_guard(1).unwrap().statement.contains("k_1"));
        assert_eq!(speciality_guard(0), Err(GuardError::InvalidArgument(0)));
    }

    #[test]
    fn excluded_types_always_listed() {
        for d in [10, 38, 75] {
            let labels: Vec<_> = classify_b3(20, 3, d)
                .excluded_types
                .into_iter()
                .map(|e| e.type_label)
                .collect();
            assert_eq!(labels, vec!["(1-b)", "(1-c)"]);
        }
    }
}
