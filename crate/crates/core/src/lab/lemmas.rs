//! Conditions under which **0** belongs to the center, median and `ℓ_p` sets,
//! stated purely in terms of the profile.
//!
//! Combined with translation invariance each condition determines its
//! function completely; see [`ConsensusFunction::characterized`].
//!
//! [`ConsensusFunction::characterized`]: crate::lab::ConsensusFunction::characterized

use std::cmp::Ordering;

use crate::cube::{check_scan, lexicographic, DEFAULT_SCAN_LIMIT};
use crate::error::Result;
use crate::profile::{Exponent, Profile};

/// `‖π‖ ≤ ‖π ⊕ u‖` for every `u`.
pub fn zero_in_center(profile: &Profile) -> Result<bool> {
    let n = profile.dimension();
    check_scan(n, DEFAULT_SCAN_LIMIT)?;
    let own = profile.norm();
    for u in lexicographic(n) {
        if profile.translate(&u)?.norm() < own {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every column sum is at most `k/2`.
pub fn zero_in_median(profile: &Profile) -> bool {
    let stats = profile.column_sums();
    stats
        .sums()
        .iter()
        .all(|&c| stats.vs_half(c) != Ordering::Greater)
}

/// `Char_p(π) ≤ Char_p(π ⊕ a)` for every `a`, within the score tolerance.
pub fn zero_in_lp(profile: &Profile, p: Exponent) -> Result<bool> {
    let n = profile.dimension();
    check_scan(n, DEFAULT_SCAN_LIMIT)?;
    let own = profile.char_p(p);
    for a in lexicographic(n) {
        if profile.translate(&a)?.char_p(p).compare(own) == Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}
