//! Profiles and the remoteness measures of a vertex with respect to them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::cube::{words_for, Vertex};
use crate::error::{Error, Result};

/// Absolute tolerance used whenever real-valued scores are compared.
pub const SCORE_TOLERANCE: f64 = 1e-9;

/// An ordered, non-empty sequence of vertices of one dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    dimension: usize,
    entries: Vec<Vertex>,
}

impl Profile {
    pub fn new(entries: Vec<Vertex>) -> Result<Self> {
        let first = entries.first().ok_or(Error::EmptyProfile)?;
        let dimension = first.dimension();
        if let Some(bad) = entries.iter().find(|x| x.dimension() != dimension) {
            return Err(Error::DimensionMismatch {
                left: dimension,
                right: bad.dimension(),
            });
        }
        Ok(Self { dimension, entries })
    }

    /// Parses each string as a bitstring vertex.
    pub fn from_strs<S: AsRef<str>>(entries: &[S]) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|s| s.as_ref().parse())
                .collect::<Result<_>>()?,
        )
    }

    pub fn single(x: Vertex) -> Self {
        Self {
            dimension: x.dimension(),
            entries: vec![x],
        }
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of entries `k`.
    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; kept for the `len`/`is_empty` convention.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn entries(&self) -> &[Vertex] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Vertex> {
        self.entries
    }

    fn check(&self, x: &Vertex) -> Result<()> {
        if x.dimension() != self.dimension {
            return Err(Error::DimensionMismatch {
                left: x.dimension(),
                right: self.dimension,
            });
        }
        Ok(())
    }

    /// `π ⊕ v`: every entry translated by `v`.
    pub fn translate(&self, v: &Vertex) -> Result<Profile> {
        self.check(v)?;
        Ok(Profile {
            dimension: self.dimension,
            entries: self.entries.iter().map(|x| x.xor_unchecked(v)).collect(),
        })
    }

    /// `π1 π2`: entries of `self` followed by entries of `other`.
    pub fn concat(&self, other: &Profile) -> Result<Profile> {
        if other.dimension != self.dimension {
            return Err(Error::DimensionMismatch {
                left: self.dimension,
                right: other.dimension,
            });
        }
        let mut entries = Vec::with_capacity(self.len() + other.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        Ok(Profile {
            dimension: self.dimension,
            entries,
        })
    }

    /// Per-coordinate counts of ones.
    ///
    /// Counting is bit-sliced: each word position keeps a stack of counter
    /// planes and every entry is added to all 64 columns of a word at once
    /// with a ripple-carry over the planes.
    pub fn column_sums(&self) -> ColumnStats {
        let n = self.dimension;
        let k = self.len();
        let planes_needed = (usize::BITS - k.leading_zeros()) as usize;
        let mut sums = vec![0usize; n];
        for w in 0..words_for(n) {
            let mut planes = vec![0u64; planes_needed];
            for x in &self.entries {
                let mut carry = x.words()[w];
                for plane in planes.iter_mut() {
                    if carry == 0 {
                        break;
                    }
                    let next = *plane & carry;
                    *plane ^= carry;
                    carry = next;
                }
            }
            let base = w * 64;
            for (i, sum) in sums.iter_mut().enumerate().skip(base).take(64) {
                let bit = i - base;
                *sum = planes
                    .iter()
                    .enumerate()
                    .map(|(b, plane)| (((plane >> bit) & 1) as usize) << b)
                    .sum();
            }
        }
        ColumnStats { k, sums }
    }

    /// `‖π‖`: the largest entry norm.
    pub fn norm(&self) -> usize {
        self.entries.iter().map(Vertex::norm).max().unwrap_or(0)
    }

    /// Eccentricity `e(x, π)`: largest distance from `x` to an entry.
    pub fn eccentricity(&self, x: &Vertex) -> Result<usize> {
        self.check(x)?;
        Ok(self
            .entries
            .iter()
            .map(|y| x.hamming_unchecked(y))
            .max()
            .unwrap_or(0))
    }

    /// Status `S_π(x)`: sum of distances from `x` to the entries.
    pub fn status(&self, x: &Vertex) -> Result<u64> {
        self.check(x)?;
        Ok(self
            .entries
            .iter()
            .map(|y| x.hamming_unchecked(y) as u64)
            .sum())
    }

    /// Square status `SS_π(x)`.
    pub fn square_status(&self, x: &Vertex) -> Result<u64> {
        self.check(x)?;
        Ok(self
            .entries
            .iter()
            .map(|y| (x.hamming_unchecked(y) as u64).pow(2))
            .sum())
    }

    /// `ℓ_p` status: sum of `d(x, x_i)^p`. Exact when `p` is integral and the sum fits.
    pub fn lp_status(&self, x: &Vertex, p: Exponent) -> Result<Score> {
        self.check(x)?;
        Ok(power_sum(
            self.entries.iter().map(|y| x.hamming_unchecked(y)),
            p,
        ))
    }

    /// `Char_p(π)`: sum over the entries of `‖x_i‖^p`, the `ℓ_p` status of **0**.
    pub fn char_p(&self, p: Exponent) -> Score {
        power_sum(self.entries.iter().map(Vertex::norm), p)
    }
}

fn power_sum(distances: impl Iterator<Item = usize> + Clone, p: Exponent) -> Score {
    if let Some(e) = p.integral() {
        let exact = distances.clone().try_fold(0u128, |acc, d| {
            (d as u128).checked_pow(e).and_then(|t| acc.checked_add(t))
        });
        if let Some(total) = exact {
            return Score::Exact(total);
        }
    }
    Score::Real(distances.map(|d| p.power(d)).sum())
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.iter().map(|x| x.to_string()))
            .finish()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.entries)
    }
}

/// Column sums `c_i` of a profile together with its length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnStats {
    k: usize,
    sums: Vec<usize>,
}

impl ColumnStats {
    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    pub fn dimension(&self) -> usize {
        self.sums.len()
    }

    /// Count for coordinate `i`, 0-based.
    pub fn sums(&self) -> &[usize] {
        &self.sums
    }

    /// Count for coordinate `j`, 1-based.
    pub fn sum(&self, j: usize) -> Option<usize> {
        j.checked_sub(1).and_then(|i| self.sums.get(i).copied())
    }

    /// `c` compared with `k/2`, without leaving the integers.
    #[inline]
    pub fn vs_half(&self, c: usize) -> Ordering {
        (2 * c).cmp(&self.k)
    }
}

/// Exponent `p ≥ 1` of the `ℓ_p` status.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Exponent(f64);

/// Largest integral exponent handled with integer arithmetic.
const MAX_INTEGRAL_EXPONENT: f64 = 62.0;

impl Exponent {
    pub const ONE: Exponent = Exponent(1.0);
    pub const TWO: Exponent = Exponent(2.0);

    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::InvalidExponent(p));
        }
        Ok(Self(p))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `Some(p)` when `p` is a whole number small enough for the exact path.
    pub fn integral(self) -> Option<u32> {
        (self.0.fract() == 0.0 && self.0 <= MAX_INTEGRAL_EXPONENT).then_some(self.0 as u32)
    }

    /// `d^p` as a float, with `0^p = 0`.
    pub fn power(self, d: usize) -> f64 {
        if d == 0 {
            0.0
        } else {
            (d as f64).powf(self.0)
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Value of an objective: exact integer or a float.
#[derive(Debug, Clone, Copy)]
pub enum Score {
    Exact(u128),
    Real(f64),
}

impl Score {
    pub fn as_f64(self) -> f64 {
        match self {
            Score::Exact(v) => v as f64,
            Score::Real(v) => v,
        }
    }

    pub fn as_exact(self) -> Option<u128> {
        match self {
            Score::Exact(v) => Some(v),
            Score::Real(_) => None,
        }
    }

    /// Exact comparison when both sides are integers, tolerance [`SCORE_TOLERANCE`] otherwise.
    pub fn compare(self, other: Score) -> Ordering {
        match (self, other) {
            (Score::Exact(a), Score::Exact(b)) => a.cmp(&b),
            (a, b) => {
                let (a, b) = (a.as_f64(), b.as_f64());
                if (a - b).abs() <= SCORE_TOLERANCE {
                    Ordering::Equal
                } else if a < b {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl PartialEq for Score {
    fn eq(&self, other: &Self) -> bool {
        self.compare(*other) == Ordering::Equal
    }
}

impl From<u64> for Score {
    fn from(v: u64) -> Self {
        Score::Exact(v as u128)
    }
}

impl From<usize> for Score {
    fn from(v: usize) -> Self {
        Score::Exact(v as u128)
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Score::Exact(v) => write!(f, "{v}"),
            Score::Real(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Score {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Score::Exact(v) => match u64::try_from(v) {
                Ok(small) => serializer.serialize_u64(small),
                Err(_) => serializer.serialize_u128(v),
            },
            Score::Real(v) => serializer.serialize_f64(v),
        }
    }
}
