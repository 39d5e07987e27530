//! Validated curve parameters.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum HypothesisError {
    #[error("genus must be at least 4 (got g = {0})")]
    GenusTooSmall(i64),
    #[error("gonality must satisfy 3 <= nu and 2nu < g + 3 (got g = {g}, nu = {nu})")]
    GonalityOutOfRange { g: i64, nu: i64 },
    #[error("degree must be non-negative (got d = {0})")]
    NegativeDegree(i64),
    #[error("rank must be non-negative (got r = {0})")]
    NegativeRank(i64),
}

/// Genus and gonality of a general ν-gonal curve.
///
/// The gonality must lie strictly below the general gonality:
/// `3 ≤ ν` and `2ν < g + 3`, with `g ≥ 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GonalCurve {
    pub g: i64,
    pub nu: i64,
}

impl GonalCurve {
    pub fn new(g: i64, nu: i64) -> Result<Self, HypothesisError> {
        if g < 4 {
            return Err(HypothesisError::GenusTooSmall(g));
        }
        if nu < 3 || 2 * nu >= g + 3 {
            return Err(HypothesisError::GonalityOutOfRange { g, nu });
        }
        Ok(Self { g, nu })
    }

    /// All admissible gonalities for genus `g`.
    pub fn gonalities(g: i64) -> impl Iterator<Item = i64> {
        (3..)
            .take_while(move |&nu| 2 * nu < g + 3)
            .filter(move |_| g >= 4)
    }
}
