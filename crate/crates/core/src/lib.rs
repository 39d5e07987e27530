//! Brill-Noether loci on general ν-gonal curves.
//!
//! Rank one: components of `W^r_d(C)` from maximal splitting types of the
//! pushforward along the gonal map. Rank two: a clause engine for the
//! components of `B^{k₃}_d ∩ U^s_C(d)`. Everything is exact integer
//! arithmetic.

pub mod atlas;
pub mod invariants;
pub mod numeric;
pub mod oracle;
pub mod params;
pub mod rank_one;
pub mod rank_two;
pub mod splitting;

pub use params::{GonalCurve, HypothesisError};
pub use splitting::{SplittingError, SplittingVector};
