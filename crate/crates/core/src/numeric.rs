//! Dimension counts used by the extension constructions: Ext-group
//! dimensions, expected codimensions of coboundary degeneracy loci, sections
//! of powers of the gonal pencil, and the secant-variety stability margin.
//!
//! Secant dimensions are always the expected (projective) dimension of the
//! secant variety of a non-degenerate curve. An affine cone over a projective
//! variety of dimension `k` has dimension `k + 1`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("out of regime: {0}")]
    OutOfRegime(String),
    #[error(
        "sigma = {sigma} has the wrong parity (must be congruent to 2delta - d = {gamma} mod 2)"
    )]
    Parity { sigma: i64, gamma: i64 },
    #[error("sigma = {sigma} outside the admissible window [{low}, {high}]")]
    SigmaOutOfWindow { sigma: i64, low: i64, high: i64 },
}

/// Extension `0 → N → F → L → 0` with `deg L = delta`, `deg N = d − delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSpec {
    pub g: i64,
    pub d: i64,
    pub delta: i64,
    pub kernel_iso_quotient: bool,
}

impl ExtensionSpec {
    pub fn new(
        g: i64,
        d: i64,
        delta: i64,
        kernel_iso_quotient: bool,
    ) -> Result<Self, NumericError> {
        if g < 2 {
            return Err(NumericError::InvalidArgument(format!("genus {g} < 2")));
        }
        if delta < 0 || delta > d {
            return Err(NumericError::InvalidArgument(format!(
                "quotient degree {delta} outside [0, {d}]"
            )));
        }
        if kernel_iso_quotient && d != 2 * delta {
            return Err(NumericError::InvalidArgument(format!(
                "L ≅ N forces d = 2delta (d = {d}, delta = {delta})"
            )));
        }
        Ok(Self {
            g,
            d,
            delta,
            kernel_iso_quotient,
        })
    }
}

/// `dim Ext¹(L, N)`: `2δ − d + g − 1` when `L ≇ N`, `g` when `L ≅ N`.
pub fn ext_dim(spec: &ExtensionSpec) -> Result<i64, NumericError> {
    if spec.kernel_iso_quotient {
        return Ok(spec.g);
    }
    let m = 2 * spec.delta - spec.d + spec.g - 1;
    if m < 0 {
        return Err(NumericError::OutOfRegime(format!(
            "2delta - d + g - 1 = {m} < 0"
        )));
    }
    Ok(m)
}

/// Expected codimension `max{0, t(h⁰(L) − h¹(N) + t)}` of the locus where
/// the coboundary map drops rank by at least `t`.
pub fn expected_codim(t: i64, h0_l: i64, h1_n: i64) -> Result<i64, NumericError> {
    if t < 1 {
        return Err(NumericError::InvalidArgument(format!("corank t = {t} < 1")));
    }
    Ok((t * (h0_l - h1_n + t)).max(0))
}

/// `h⁰(A^{⊗r})` for the gonal pencil `A`: `r + 1` when `g ≥ r(ν − 1)`,
/// otherwise `A^{⊗r}` is non-special and has `rν − g + 1` sections.
pub fn gonal_power_h0(g: i64, nu: i64, r: i64) -> Result<i64, NumericError> {
    if nu < 2 || r < 0 {
        return Err(NumericError::InvalidArgument(format!("nu = {nu}, r = {r}")));
    }
    if g >= r * (nu - 1) {
        Ok(r + 1)
    } else {
        Ok(r * nu - g + 1)
    }
}

/// Sections of a general line bundle of degree `deg`.
pub fn general_h0(g: i64, deg: i64) -> i64 {
    if deg >= 2 * g - 1 {
        deg - g + 1
    } else {
        (deg - g + 1).max(0)
    }
}

/// Expected dimension of the `h`-secant variety: `min(2h − 1, ambient)`.
pub fn secant_dim(h: i64, ambient_dim: i64) -> Result<i64, NumericError> {
    if h < 1 || ambient_dim < 0 {
        return Err(NumericError::InvalidArgument(format!(
            "h = {h}, ambient = {ambient_dim}"
        )));
    }
    Ok((2 * h - 1).min(ambient_dim))
}

/// How far a locus of projective dimension `locus_dim` in `P(Ext¹(L, N))`
/// exceeds the secant variety whose complement has Segre invariant ≥ σ.
///
/// A positive margin means the general extension in the locus avoids the
/// secant variety, hence has `s(F) ≥ σ`.
pub fn generic_stability_margin(
    g: i64,
    d: i64,
    delta: i64,
    sigma: i64,
    locus_dim: i64,
) -> Result<i64, NumericError> {
    let gamma = 2 * delta - d;
    if gamma < 2 {
        return Err(NumericError::OutOfRegime(format!(
            "2delta - d = {gamma} < 2; the secant criterion needs a morphism"
        )));
    }
    if (sigma - gamma).rem_euclid(2) != 0 {
        return Err(NumericError::Parity { sigma, gamma });
    }
    let low = 4 + d - 2 * delta;
    if sigma < low || sigma > gamma {
        return Err(NumericError::SigmaOutOfWindow {
            sigma,
            low,
            high: gamma,
        });
    }
    let m = ext_dim(&ExtensionSpec::new(g, d, delta, false)?)?;
    let h = (gamma + sigma - 2) / 2;
    Ok(locus_dim - 1 - secant_dim(h, m - 1)?)
}
