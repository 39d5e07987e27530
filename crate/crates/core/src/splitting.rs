//! Splitting-type vectors of vector bundles on the projective line.
//!
//! A rank-`n` bundle on P¹ splits as `O(e₁) ⊕ … ⊕ O(eₙ)`; we store the
//! multidegree sorted non-decreasingly. All quantities here are exact
//! integer counts.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplittingError {
    #[error("splitting vector must have at least one entry")]
    Empty,
    #[error("balanced bundle needs rank >= 1")]
    ZeroRank,
    #[error("vectors are incomparable: lengths {left_len}/{right_len}, degrees {left_degree}/{right_degree}")]
    Incomparable {
        left_len: usize,
        right_len: usize,
        left_degree: i64,
        right_degree: i64,
    },
}

/// Sorted splitting type `(e₁ ≤ … ≤ e_ν)`.
///
/// Unsorted input is sorted on construction; the only rejected input is the
/// empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingVector(Vec<i64>);

impl SplittingVector {
    pub fn new(mut entries: Vec<i64>) -> Result<Self, SplittingError> {
        if entries.is_empty() {
            return Err(SplittingError::Empty);
        }
        entries.sort_unstable();
        Ok(Self(entries))
    }

    /// The unique vector of the given length and degree whose entries differ
    /// pairwise by at most one.
    pub fn balanced(rank: usize, degree: i64) -> Result<Self, SplittingError> {
        if rank == 0 {
            return Err(SplittingError::ZeroRank);
        }
        let n = rank as i64;
        let q = degree.div_euclid(n);
        let r = degree.rem_euclid(n) as usize;
        let mut entries = vec![q; rank - r];
        entries.extend(std::iter::repeat_n(q + 1, r));
        Ok(Self(entries))
    }

    /// Direct sum: merged and re-sorted.
    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.0.len() + other.0.len());
        entries.extend_from_slice(&self.0);
        entries.extend_from_slice(&other.0);
        entries.sort_unstable();
        Self(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `Σ max(0, eᵢ + 1)`
    pub fn h0(&self) -> i64 {
        self.0.iter().map(|&e| (e + 1).max(0)).sum()
    }

    /// `Σ max(0, −eᵢ − 1)`
    pub fn h1(&self) -> i64 {
        self.0.iter().map(|&e| (-e - 1).max(0)).sum()
    }

    /// Number of non-negative entries.
    pub fn nonnegative_count(&self) -> usize {
        self.0.iter().filter(|&&e| e >= 0).count()
    }

    /// `u(ē) = Σ_{i<j} max(0, e_j − e_i − 1)`, the expected codimension of
    /// the splitting stratum.
    pub fn magnitude(&self) -> i64 {
        let e = &self.0;
        let mut total = 0;
        for i in 0..e.len() {
            for j in (i + 1)..e.len() {
                total += (e[j] - e[i] - 1).max(0);
            }
        }
        total
    }

    pub fn is_balanced(&self) -> bool {
        self.0.last().unwrap() - self.0.first().unwrap() <= 1
    }

    /// Is `other ≤ self` in the dominance order?
    ///
    /// Ascending partial sums of `other` must never exceed those of `self`.
    /// With this convention the balanced vector is the maximum of its
    /// (length, degree) class.
    pub fn dominates(&self, other: &Self) -> Result<bool, SplittingError> {
        if self.len() != other.len() || self.degree() != other.degree() {
            return Err(SplittingError::Incomparable {
                left_len: self.len(),
                right_len: other.len(),
                left_degree: self.degree(),
                right_degree: other.degree(),
            });
        }
        Ok(dominates_unchecked(&self.0, &other.0))
    }

    /// One-step moves toward balance: pick `eᵢ ≤ e_j − 2` and replace the
    /// pair by `(eᵢ + 1, e_j − 1)`.
    pub fn cover_moves_up(&self) -> BTreeSet<SplittingVector> {
        let e = &self.0;
        let mut out = BTreeSet::new();
        for i in 0..e.len() {
            // equal values give the same result; only the first of a run matters
            if i > 0 && e[i] == e[i - 1] {
                continue;
            }
            for j in (i + 1)..e.len() {
                if j + 1 < e.len() && e[j] == e[j + 1] {
                    continue;
                }
                if e[i] <= e[j] - 2 {
                    let mut moved = e.clone();
                    moved[i] += 1;
                    moved[j] -= 1;
                    moved.sort_unstable();
                    out.insert(SplittingVector(moved));
                }
            }
        }
        out
    }
}

pub(crate) fn dominates_unchecked(upper: &[i64], lower: &[i64]) -> bool {
    let (mut su, mut sl) = (0i64, 0i64);
    for (u, l) in upper.iter().zip(lower) {
        su += u;
        sl += l;
        if sl > su {
            return false;
        }
    }
    true
}

impl TryFrom<Vec<i64>> for SplittingVector {
    type Error = SplittingError;

    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<SplittingVector> for Vec<i64> {
    fn from(v: SplittingVector) -> Self {
        v.0
    }
}

impl fmt::Display for SplittingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
