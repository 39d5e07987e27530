//! Brute-force checks of the closed forms in [`crate::rank_one`].
//!
//! Sorted integer vectors of fixed length and degree are enumerated in a
//! finite window. The maximal elements of `{h⁰ ≥ r + 1}` under dominance are
//! compared against `{w_{r,ℓ}}`. Each maximal vector carries a certificate:
//! none of its cover moves stays in the admissible set. `{h⁰ ≥ r + 1}` is
//! closed downward, so the certificate makes maximality independent of the
//! window.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::GonalCurve;
use crate::rank_one::{
    components_w, ell_admissible, maximal_vector, pushforward_degree, table_r1, table_r2,
};
use crate::splitting::{dominates_unchecked, SplittingVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("inconclusive after {attempts} windows (last pad {pad})")]
    Inconclusive { attempts: u32, pad: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumWindow {
    pub len: usize,
    pub degree: i64,
    pub entry_min: i64,
    pub entry_max: i64,
}

impl EnumWindow {
    pub fn new(
        len: usize,
        degree: i64,
        entry_min: i64,
        entry_max: i64,
    ) -> Result<Self, OracleError> {
        if len == 0 {
            return Err(OracleError::InvalidArgument(
                "window length must be >= 1".into(),
            ));
        }
        if entry_min > entry_max {
            return Err(OracleError::InvalidArgument(format!(
                "entry_min {entry_min} > entry_max {entry_max}"
            )));
        }
        Ok(Self {
            len,
            degree,
            entry_min,
            entry_max,
        })
    }

    /// Symmetric window `[−half, half]`.
    pub fn symmetric(len: usize, degree: i64, half: i64) -> Result<Self, OracleError> {
        Self::new(len, degree, -half, half)
    }

    /// Whether any vector fits at all.
    pub fn is_feasible(&self) -> bool {
        let n = self.len as i64;
        n * self.entry_min <= self.degree && self.degree <= n * self.entry_max
    }
}

/// Lazy lexicographic stream of the sorted vectors in a window.
#[derive(Debug, Clone)]
pub struct VectorStream {
    window: EnumWindow,
    current: Option<Vec<i64>>,
    started: bool,
}

/// Smallest sorted completion of `entries[from..]` with entries `>= lower`
/// and total `rest`, written in place.
fn fill_smallest(entries: &mut [i64], from: usize, lower: i64, mut rest: i64, hi: i64) -> bool {
    let n = entries.len();
    let mut lb = lower;
    for (k, slot) in entries.iter_mut().enumerate().skip(from) {
        let m = (n - k) as i64;
        let x = lb.max(rest - (m - 1) * hi);
        if x > hi || m * x > rest {
            return false;
        }
        *slot = x;
        rest -= x;
        lb = x;
    }
    rest == 0
}

impl VectorStream {
    fn first(&self) -> Option<Vec<i64>> {
        let w = &self.window;
        if !w.is_feasible() {
            return None;
        }
        let mut e = vec![0; w.len];
        fill_smallest(&mut e, 0, w.entry_min, w.degree, w.entry_max).then_some(e)
    }

    fn advance(&self, cur: &[i64]) -> Option<Vec<i64>> {
        let w = &self.window;
        let n = cur.len();
        let mut prefix: Vec<i64> = Vec::with_capacity(n + 1);
        prefix.push(0);
        for &x in cur {
            prefix.push(prefix.last().unwrap() + x);
        }
        for k in (0..n.saturating_sub(1)).rev() {
            let v = cur[k] + 1;
            let rest = w.degree - prefix[k];
            if v > w.entry_max || (n - k) as i64 * v > rest {
                continue;
            }
            let mut next = cur.to_vec();
            next[k] = v;
            if fill_smallest(&mut next, k + 1, v, rest - v, w.entry_max) {
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for VectorStream {
    type Item = SplittingVector;

    fn next(&mut self) -> Option<SplittingVector> {
        let next = if !self.started {
            self.started = true;
            self.first()
        } else {
            self.current.as_deref().and_then(|c| self.advance(c))
        };
        self.current = next;
        self.current
            .clone()
            .map(|e| SplittingVector::new(e).expect("window length >= 1"))
    }
}

/// Every sorted vector in the window, once each, in lexicographic order.
pub fn enumerate_vectors(window: &EnumWindow) -> VectorStream {
    VectorStream {
        window: *window,
        current: None,
        started: false,
    }
}

/// Coefficient of `q^n` in the Gaussian binomial `[width + len choose len]_q`,
/// the number of partitions of `n` into at most `len` parts of size at most
/// `width`.
pub fn gaussian_binomial_coeff(width: usize, len: usize, n: i64) -> u128 {
    if n < 0 {
        return 0;
    }
    // table[j][k] = polynomial of [j choose k]_q
    let total = width + len;
    let mut rows: Vec<Vec<Vec<u128>>> = vec![vec![vec![1]]];
    for j in 1..=total {
        let prev = &rows[j - 1];
        let mut row: Vec<Vec<u128>> = Vec::with_capacity(j + 1);
        for k in 0..=j {
            let mut poly: Vec<u128> = Vec::new();
            let mut add = |src: &Vec<u128>, shift: usize| {
                if poly.len() < src.len() + shift {
                    poly.resize(src.len() + shift, 0);
                }
                for (i, c) in src.iter().enumerate() {
                    poly[i + shift] += c;
                }
            };
            if k >= 1 {
                add(&prev[k - 1], 0);
            }
            if k < j {
                add(&prev[k], k);
            }
            row.push(poly);
        }
        rows.push(row);
    }
    rows[total][len].get(n as usize).copied().unwrap_or(0)
}

/// Closed-form count of the vectors in a window.
pub fn window_count(window: &EnumWindow) -> u128 {
    let width = (window.entry_max - window.entry_min) as usize;
    gaussian_binomial_coeff(
        width,
        window.len,
        window.degree - window.len as i64 * window.entry_min,
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalSet {
    pub nu: i64,
    pub dprime: i64,
    pub r: i64,
    pub vectors: BTreeSet<SplittingVector>,
    pub window: EnumWindow,
    pub pad: i64,
    pub attempts: u32,
    pub enumerated: u64,
}

fn partial_sum_weight(e: &[i64]) -> i64 {
    let mut s = 0;
    let mut total = 0;
    for x in e {
        s += x;
        total += s;
    }
    total
}

/// Maximal elements of `{h⁰ ≥ r + 1}` among sorted `ν`-vectors of degree
/// `d′` within `±(|d′| + ν + r + pad)`; no certificate or retry.
pub fn maximal_in_window(
    nu: i64,
    dprime: i64,
    r: i64,
    pad: i64,
) -> Result<(EnumWindow, BTreeSet<SplittingVector>, u64), OracleError> {
    if nu < 1 {
        return Err(OracleError::InvalidArgument(format!("nu = {nu} < 1")));
    }
    let half = dprime.abs() + nu + r + pad;
    let window = EnumWindow::symmetric(nu as usize, dprime, half)?;
    let mut admissible: Vec<(i64, SplittingVector)> = Vec::new();
    let mut count = 0u64;
    for v in enumerate_vectors(&window) {
        count += 1;
        if v.h0() > r {
            admissible.push((partial_sum_weight(v.entries()), v));
        }
    }
    // strict dominance raises the weight, so every dominator comes first
    admissible.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let mut maxima: Vec<SplittingVector> = Vec::new();
    for (_, v) in admissible {
        if !maxima
            .iter()
            .any(|m| dominates_unchecked(m.entries(), v.entries()))
        {
            maxima.push(v);
        }
    }
    Ok((window, maxima.into_iter().collect(), count))
}

/// Every cover move of `v` leaves `{h⁰ ≥ r + 1}`.
pub fn certify(v: &SplittingVector, r: i64) -> bool {
    v.cover_moves_up().iter().all(|u| u.h0() < r + 1)
}

const MAX_RETRIES: u32 = 3;

/// Certified maximal set for `(ν, d′, r)`, doubling the pad when a maximal
/// vector touches the window edge or fails its certificate.
pub fn maximal_by_degree(
    nu: i64,
    dprime: i64,
    r: i64,
    pad: i64,
) -> Result<MaximalSet, OracleError> {
    if pad < 0 || r < 0 {
        return Err(OracleError::InvalidArgument(format!(
            "pad = {pad}, r = {r}"
        )));
    }
    let mut pad = pad;
    for attempt in 0..=MAX_RETRIES {
        let (window, vectors, enumerated) = maximal_in_window(nu, dprime, r, pad)?;
        let touches = vectors.iter().any(|v| {
            v.entries().first() == Some(&window.entry_min)
                || v.entries().last() == Some(&window.entry_max)
        });
        let certified = vectors.iter().all(|v| certify(v, r));
        if certified && !touches {
            return Ok(MaximalSet {
                nu,
                dprime,
                r,
                vectors,
                window,
                pad,
                attempts: attempt + 1,
                enumerated,
            });
        }
        pad = (pad * 2).max(1);
    }
    Err(OracleError::Inconclusive {
        attempts: MAX_RETRIES + 1,
        pad,
    })
}

/// [`maximal_by_degree`] for the pushforward of degree-`d` line bundles on a
/// genus-`g` curve; `r ≤ d − g` is rejected.
pub fn maximal_with_sections(
    g: i64,
    nu: i64,
    d: i64,
    r: i64,
    pad: i64,
) -> Result<MaximalSet, OracleError> {
    if r <= d - g {
        return Err(OracleError::InvalidArgument(format!(
            "non-special range: r = {r} <= d - g = {}",
            d - g
        )));
    }
    maximal_by_degree(nu, pushforward_degree(g, nu, d), r, pad)
}

/// `{w_{r,ℓ}}` for all admissible `ℓ`, ignoring `ρ′ ≥ 0`. Depends on
/// `(ν, d′, r)` only.
pub fn closed_form_set(nu: i64, dprime: i64, r: i64) -> BTreeSet<SplittingVector> {
    // any genus works; d is chosen so that d + 1 - g - nu = dprime
    let (g, d) = (0, dprime + nu - 1);
    (0..=r)
        .filter(|&ell| ell_admissible(g, nu, d, r, ell).is_ok())
        .filter_map(|ell| maximal_vector(g, nu, d, r, ell).ok())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub g: Option<i64>,
    pub nu: i64,
    pub t: Option<i64>,
    pub dprime: i64,
    pub r: i64,
    pub expected: String,
    pub found: String,
}

impl Counterexample {
    fn describe(&self) -> String {
        let mut s = format!(
            "[{}] nu={} r={} d'={}",
            self.check, self.nu, self.r, self.dprime
        );
        if let Some(g) = self.g {
            let _ = write!(s, " g={g}");
        }
        if let Some(t) = self.t {
            let _ = write!(s, " t={t}");
        }
        let _ = write!(s, ": expected {}, found {}", self.expected, self.found);
        s
    }
}

/// Maximal vectors the closed form does not produce (or vice versa).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetDifference {
    pub nu: i64,
    pub dprime: i64,
    pub r: i64,
    pub oracle_only: Vec<SplittingVector>,
    pub formula_only: Vec<SplittingVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCell {
    pub nu: i64,
    pub dprime: i64,
    pub r: i64,
    pub maximal: Vec<SplittingVector>,
    pub certified: bool,
    pub exact_sections: bool,
    pub pad: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub g_max: i64,
    pub nu_max: i64,
    pub pad: i64,
    pub table_cells: usize,
    pub oracle_cells: usize,
    pub passed: bool,
    pub failures: Vec<Counterexample>,
    pub set_differences: Vec<SetDifference>,
    pub inconclusive: Vec<String>,
    #[serde(default)]
    pub invariant_checks: usize,
    #[serde(default)]
    pub invariant_failures: Vec<String>,
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "verification g <= {}, nu <= {}, pad {}: {}",
            self.g_max,
            self.nu_max,
            self.pad,
            if self.passed { "PASS" } else { "FAIL" }
        );
        let _ = writeln!(s, "  table cells: {}", self.table_cells);
        let _ = writeln!(s, "  oracle cells (nu, d', r): {}", self.oracle_cells);
        let _ = writeln!(s, "  failures: {}", self.failures.len());
        for f in &self.failures {
            let _ = writeln!(s, "    {}", f.describe());
        }
        for d in &self.set_differences {
            let _ = writeln!(
                s,
                "    set difference nu={} d'={} r={}: oracle-only {:?}, formula-only {:?}",
                d.nu,
                d.dprime,
                d.r,
                d.oracle_only
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
                d.formula_only
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
            );
        }
        for i in &self.inconclusive {
            let _ = writeln!(s, "    inconclusive: {i}");
        }
        let _ = writeln!(
            s,
            "  invariant checks: {}, failed: {}",
            self.invariant_checks,
            self.invariant_failures.len()
        );
        for f in &self.invariant_failures {
            let _ = writeln!(s, "    invariant: {f}");
        }
        s
    }
}

fn fmt_ells(e: &Option<BTreeSet<i64>>) -> String {
    match e {
        None => "Pic".into(),
        Some(s) if s.is_empty() => "{}".into(),
        Some(s) => format!(
            "{{{}}}",
            s.iter()
                .map(|l| format!("w{}", l))
                .collect::<Vec<_>>()
                .join(",")
        ),
    }
}

fn fmt_set<'a>(it: impl IntoIterator<Item = &'a SplittingVector>) -> String {
    format!(
        "{{{}}}",
        it.into_iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    )
}

/// Oracle maxima keyed by `(ν, d′, r)`, computed in parallel.
pub fn oracle_cells(
    keys: &BTreeSet<(i64, i64, i64)>,
    pad: i64,
) -> BTreeMap<(i64, i64, i64), Result<MaximalSet, OracleError>> {
    keys.par_iter()
        .map(|&(nu, dp, r)| ((nu, dp, r), maximal_by_degree(nu, dp, r, pad)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Compare an oracle cell with the closed form; `None` means equal.
pub fn compare_cell(m: &MaximalSet) -> Option<SetDifference> {
    let formula = closed_form_set(m.nu, m.dprime, m.r);
    if formula == m.vectors {
        return None;
    }
    Some(SetDifference {
        nu: m.nu,
        dprime: m.dprime,
        r: m.r,
        oracle_only: m.vectors.difference(&formula).cloned().collect(),
        formula_only: formula.difference(&m.vectors).cloned().collect(),
    })
}

/// Printed tables vs. formula vs. brute force on all `(g, ν, t)` with
/// `4 ≤ g ≤ g_max`, `ν ≤ ν_max`, `ν ≤ t ≤ g + 3`, `r ∈ {1, 2}`.
pub fn crosscheck_tables(
    g_max: i64,
    nu_max: i64,
    pad: i64,
) -> Result<VerificationReport, OracleError> {
    if g_max < 4 {
        return Err(OracleError::InvalidArgument(format!("g_max = {g_max} < 4")));
    }
    let mut cells = Vec::new();
    for g in 4..=g_max {
        for nu in GonalCurve::gonalities(g).filter(|&nu| nu <= nu_max) {
            for t in nu..=g + 3 {
                cells.push((g, nu, t));
            }
        }
    }

    let mut failures = Vec::new();
    let mut keys = BTreeSet::new();
    for &(g, nu, t) in &cells {
        let dprime = pushforward_degree(g, nu, t);
        for r in 1..=2 {
            let rep = components_w(g, nu, t, r).expect("grid respects the hypothesis");
            let table = if r == 1 {
                table_r1(g, nu, t)
                    .expect("grid respects the hypothesis")
                    .ells()
            } else {
                table_r2(g, nu, t)
                    .expect("grid respects the hypothesis")
                    .ells()
            };
            if table != rep.ells() {
                failures.push(Counterexample {
                    check: format!("table_r{r}"),
                    g: Some(g),
                    nu,
                    t: Some(t),
                    dprime,
                    r,
                    expected: fmt_ells(&rep.ells()),
                    found: fmt_ells(&table),
                });
            }
            if r > t - g {
                keys.insert((nu, dprime, r));
            }
        }
    }

    let oracle = oracle_cells(&keys, pad);
    let mut set_differences = Vec::new();
    let mut inconclusive = Vec::new();
    for (&(nu, dp, r), res) in &oracle {
        match res {
            Ok(m) => {
                if let Some(diff) = compare_cell(m) {
                    set_differences.push(diff);
                }
            }
            Err(e) => inconclusive.push(format!("nu={nu} d'={dp} r={r}: {e}")),
        }
    }

    for &(g, nu, t) in &cells {
        let dprime = pushforward_degree(g, nu, t);
        for r in 1..=2 {
            if r <= t - g {
                continue;
            }
            let Some(Ok(m)) = oracle.get(&(nu, dprime, r)) else {
                continue;
            };
            let emitted: BTreeSet<SplittingVector> = components_w(g, nu, t, r)
                .expect("grid respects the hypothesis")
                .components()
                .iter()
                .map(|c| c.vector.clone())
                .collect();
            let expected: BTreeSet<SplittingVector> = m
                .vectors
                .iter()
                .filter(|v| g - v.magnitude() >= 0)
                .cloned()
                .collect();
            if emitted != expected {
                failures.push(Counterexample {
                    check: "oracle".into(),
                    g: Some(g),
                    nu,
                    t: Some(t),
                    dprime,
                    r,
                    expected: fmt_set(&expected),
                    found: fmt_set(&emitted),
                });
            }
        }
    }

    let passed = failures.is_empty() && set_differences.is_empty() && inconclusive.is_empty();
    Ok(VerificationReport {
        g_max,
        nu_max,
        pad,
        table_cells: cells.len(),
        oracle_cells: oracle.len(),
        passed,
        failures,
        set_differences,
        inconclusive,
        invariant_checks: 0,
        invariant_failures: Vec::new(),
    })
}

/// [`crosscheck_tables`] followed by the invariant suite over the same grid.
pub fn verify_all(g_max: i64, nu_max: i64, pad: i64) -> Result<VerificationReport, OracleError> {
    let mut report = crosscheck_tables(g_max, nu_max, pad)?;
    let suite = crate::invariants::run_suite(g_max, nu_max);
    report.invariant_checks = suite.checks;
    report.invariant_failures = suite.failures;
    report.passed &= report.invariant_failures.is_empty();
    Ok(report)
}

/// Every `(ν, d′, r)` with `ν ∈ nus`, `0 ≤ r ≤ r_max`, `|d′| ≤ dprime_max`
/// in the special range `r > d′ + ν − 1`.
pub fn special_grid(
    nus: std::ops::RangeInclusive<i64>,
    r_max: i64,
    dprime_max: i64,
) -> BTreeSet<(i64, i64, i64)> {
    let mut keys = BTreeSet::new();
    for nu in nus {
        for r in 0..=r_max {
            for dp in -dprime_max..=dprime_max {
                if r > dp + nu - 1 {
                    keys.insert((nu, dp, r));
                }
            }
        }
    }
    keys
}

/// Oracle cells for [`special_grid`] with certificates and exact-`h⁰` checks.
pub fn oracle_grid(
    keys: &BTreeSet<(i64, i64, i64)>,
    pad: i64,
) -> (Vec<OracleCell>, Vec<SetDifference>, Vec<String>) {
    let mut cells = Vec::new();
    let mut diffs = Vec::new();
    let mut errors = Vec::new();
    for (&(nu, dp, r), res) in &oracle_cells(keys, pad) {
        match res {
            Ok(m) => {
                cells.push(OracleCell {
                    nu,
                    dprime: dp,
                    r,
                    maximal: m.vectors.iter().cloned().collect(),
                    certified: m.vectors.iter().all(|v| certify(v, r)),
                    exact_sections: m.vectors.iter().all(|v| v.h0() == r + 1),
                    pad: m.pad,
                });
                if let Some(d) = compare_cell(m) {
                    diffs.push(d);
                }
            }
            Err(e) => errors.push(format!("nu={nu} d'={dp} r={r}: {e}")),
        }
    }
    (cells, diffs, errors)
}
