//! Cross-module consistency checks run by `verify`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atlas::atlas;
use crate::params::GonalCurve;
use crate::rank_one::{components_w, pushforward_degree};
use crate::rank_two::{
    classify_b3, classify_fixed_determinant, evaluate_clauses, rho_fixed_det, Regularity, Status,
    UnknownFamily,
};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl InvariantSummary {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn pairs(g_max: i64, nu_max: i64) -> Vec<(i64, i64)> {
    (4..=g_max)
        .flat_map(|g| {
            GonalCurve::gonalities(g)
                .filter(move |&nu| nu <= nu_max)
                .map(move |nu| (g, nu))
        })
        .collect()
}

fn rank_one_checks(g: i64, nu: i64) -> InvariantSummary {
    let mut s = InvariantSummary::default();
    for r in 0..=3 {
        for d in 0..=2 * g + 2 {
            let rep = match components_w(g, nu, d, r) {
                Ok(rep) => rep,
                Err(e) => {
                    s.check(false, || format!("W({g},{nu},{d},{r}): {e}"));
                    continue;
                }
            };
            s.check((r <= d - g) == rep.ells().is_none(), || {
                format!("W({g},{nu},{d},{r}): Pic marker inconsistent")
            });
            let comps = rep.components();
            for c in comps {
                let v = &c.vector;
                let tag = || format!("W({g},{nu},{d},{r}) ell={} {v}", c.ell);
                s.check(v.len() as i64 == nu, || format!("{}: rank", tag()));
                s.check(v.degree() == pushforward_degree(g, nu, d), || {
                    format!("{}: degree", tag())
                });
                s.check(v.h0() > r, || format!("{}: h0 < r+1", tag()));
                s.check(c.codimension == v.magnitude(), || {
                    format!("{}: codim", tag())
                });
                s.check(c.dimension == g - c.codimension, || {
                    format!("{}: dim", tag())
                });
                s.check(c.dimension >= 0, || format!("{}: negative dim", tag()));
            }
            for (i, a) in comps.iter().enumerate() {
                for b in &comps[i + 1..] {
                    let cmp = a.vector.dominates(&b.vector).unwrap_or(true)
                        || b.vector.dominates(&a.vector).unwrap_or(true);
                    s.check(!cmp, || {
                        format!(
                            "W({g},{nu},{d},{r}): {} and {} comparable",
                            a.vector, b.vector
                        )
                    });
                }
            }
        }
    }
    s
}

fn rank_two_checks(g: i64, nu: i64) -> InvariantSummary {
    let mut s = InvariantSummary::default();
    for d in 2 * g - 4..=4 * g - 2 {
        let r = classify_b3(g, nu, d);
        let tag = format!("B({g},{nu},{d})");
        let in_range = 2 * g - 2 <= d && d <= 4 * g - 4;
        s.check(in_range == (r.status != Status::NotApplicable), || {
            format!("{tag}: applicability")
        });
        if !in_range {
            continue;
        }
        for c in &r.components {
            s.check(c.dim >= r.rho, || {
                format!("{tag}: {} dim below rho", c.family)
            });
            s.check(
                (c.regularity == Regularity::Regular) == (c.dim == r.rho),
                || format!("{tag}: {} regularity", c.family),
            );
        }
        let empty = r.status == Status::AssertedEmpty;
        s.check(empty == !r.empties.is_empty(), || {
            format!("{tag}: empty status")
        });
        s.check(
            !empty || (r.components.is_empty() && r.unknowns.is_empty()),
            || format!("{tag}: empty report carries records"),
        );
        s.check(
            (r.status == Status::PartiallyKnown) == !r.unknowns.is_empty(),
            || format!("{tag}: partial status"),
        );
        if !empty {
            let has_regular = r.count(Regularity::Regular) > 0;
            let flagged = r
                .unknowns
                .iter()
                .any(|u| u.family == UnknownFamily::Regular);
            s.check(flagged == (r.rho >= 0 && !has_regular), || {
                format!("{tag}: regular unknown flag")
            });
        }
        let fired: Vec<String> = evaluate_clauses(g, nu, d)
            .into_iter()
            .filter(|c| c.holds())
            .map(|c| c.id.to_string())
            .collect();
        for p in ["D-", "E-"] {
            s.check(
                fired.iter().filter(|id| id.starts_with(p)).count() <= 1,
                || format!("{tag}: overlapping {p} clauses {fired:?}"),
            );
        }
        let fd = classify_fixed_determinant(g, nu, d);
        s.check(fd.applicable && fd.rho_m == rho_fixed_det(g, d), || {
            format!("{tag}: fixed determinant header")
        });
        for c in &fd.components {
            s.check(c.dim >= fd.rho_m, || {
                format!("{tag}: fixed-det {} below rho_M", c.family)
            });
        }
    }
    s
}

fn atlas_checks(g: i64, nu: i64) -> InvariantSummary {
    let mut s = InvariantSummary::default();
    let a = match atlas(g, nu) {
        Ok(a) => a,
        Err(e) => {
            s.check(false, || format!("atlas({g},{nu}): {e}"));
            return s;
        }
    };
    let mut next = a.d_min();
    for r in &a.regions {
        s.check(r.d_min == next && r.d_min <= r.d_max, || {
            format!("atlas({g},{nu}): gap or overlap at {}", r.d_min)
        });
        next = r.d_max + 1;
    }
    s.check(next == a.d_max() + 1, || {
        format!("atlas({g},{nu}): does not reach 4g-4")
    });
    for w in a.regions.windows(2) {
        s.check(
            (w[0].status, &w[0].families, &w[0].unknowns, &w[0].empties)
                != (w[1].status, &w[1].families, &w[1].unknowns, &w[1].empties),
            || format!("atlas({g},{nu}): unmerged regions at {}", w[1].d_min),
        );
    }
    s
}

/// Run every consistency check for `4 ≤ g ≤ g_max`, `ν ≤ nu_max`.
pub fn run_suite(g_max: i64, nu_max: i64) -> InvariantSummary {
    pairs(g_max, nu_max)
        .into_par_iter()
        .map(|(g, nu)| {
            rank_one_checks(g, nu)
                .merge(rank_two_checks(g, nu))
                .merge(atlas_checks(g, nu))
        })
        .reduce(InvariantSummary::default, InvariantSummary::merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let s = run_suite(12, 6);
        assert!(s.checks > 1000);
        assert!(s.passed(), "{:?}", &s.failures[..s.failures.len().min(5)]);
    }

    #[test]
    fn empty_grid() {
        assert_eq!(run_suite(3, 6), InvariantSummary::default());
    }
}
