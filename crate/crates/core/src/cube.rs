//! Vertices of the n-cube and the bit-level operations on them.
//!
//! A [`Vertex`] is a 0/1 vector of length `n` packed 64 coordinates per
//! word. Coordinates are addressed 1-based at the API surface; coordinate
//! `j` lives in bit `(j - 1) % 64` of word `(j - 1) / 64`. Bits beyond `n`
//! are always zero, so equality and hashing can work on whole words.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest dimension a [`Vertex`] may have.
pub const MAX_DIMENSION: usize = 1024;

/// Default cap on `n` for anything that walks all `2^n` vertices.
pub const DEFAULT_SCAN_LIMIT: usize = 25;

/// Hard ceiling for exhaustive scans; Gray indices must fit in a `u64`.
pub const HARD_SCAN_LIMIT: usize = 40;

const WORD_BITS: usize = 64;

pub(crate) type Words = SmallVec<[u64; 2]>;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
fn tail_mask(n: usize) -> u64 {
    match n % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A point of the n-cube.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    dimension: usize,
    words: Words,
}

fn check_dimension(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIMENSION {
        return Err(Error::InvalidDimension(n));
    }
    Ok(())
}

impl Vertex {
    /// The all-zeros vertex **0** of `Q_n`.
    pub fn zeros(n: usize) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self {
            dimension: n,
            words: SmallVec::from_elem(0, words_for(n)),
        })
    }

    /// The all-ones vertex **1** of `Q_n`.
    pub fn ones(n: usize) -> Result<Self> {
        Ok(Self::zeros(n)?.complement())
    }

    /// The unit vertex `e_j`: zeros except a one at coordinate `j` (1-based).
    pub fn unit(n: usize, j: usize) -> Result<Self> {
        let mut v = Self::zeros(n)?;
        v.set(j, true)?;
        Ok(v)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let mut v = Self::zeros(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
            }
        }
        Ok(v)
    }

    /// Builds a vertex of dimension `n <= 64` whose coordinate `j` is bit `j - 1` of `bits`.
    pub fn from_low_bits(n: usize, bits: u64) -> Result<Self> {
        check_dimension(n)?;
        if n > WORD_BITS {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Self {
            dimension: n,
            words: SmallVec::from_elem(bits & tail_mask(n), 1),
        })
    }

    /// Builds a vertex from packed words; bits beyond `n` are cleared.
    pub fn from_words(n: usize, words: &[u64]) -> Result<Self> {
        check_dimension(n)?;
        let need = words_for(n);
        if words.len() != need {
            return Err(Error::Config(format!(
                "{} words given for dimension {n}, expected {need}",
                words.len()
            )));
        }
        let mut words: Words = words.iter().copied().collect();
        words[need - 1] &= tail_mask(n);
        Ok(Self {
            dimension: n,
            words,
        })
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Low 64 coordinates as an integer (coordinate 1 in bit 0).
    #[inline]
    pub fn low_word(&self) -> u64 {
        self.words[0]
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.dimension {
            return Err(Error::CoordinateOutOfRange {
                index: j,
                dimension: self.dimension,
            });
        }
        Ok(())
    }

    /// Coordinate `j` (1-based).
    pub fn get(&self, j: usize) -> Result<bool> {
        self.check_index(j)?;
        Ok(self.bit(j - 1))
    }

    #[inline]
    pub(crate) fn bit(&self, i: usize) -> bool {
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, j: usize, value: bool) -> Result<()> {
        self.check_index(j)?;
        let i = j - 1;
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
        Ok(())
    }

    /// Flips coordinate `j` (1-based), i.e. `self ⊕ e_j`.
    pub fn flip(&mut self, j: usize) -> Result<()> {
        self.check_index(j)?;
        self.flip_bit(j - 1);
        Ok(())
    }

    #[inline]
    pub(crate) fn flip_bit(&mut self, i: usize) {
        self.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }

    fn same_dimension(&self, other: &Vertex) -> Result<()> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                left: self.dimension,
                right: other.dimension,
            });
        }
        Ok(())
    }

    /// Coordinatewise sum modulo 2.
    pub fn xor(&self, other: &Vertex) -> Result<Vertex> {
        self.same_dimension(other)?;
        Ok(self.xor_unchecked(other))
    }

    #[inline]
    pub(crate) fn xor_unchecked(&self, other: &Vertex) -> Vertex {
        Vertex {
            dimension: self.dimension,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    /// Hamming distance, one popcount per word.
    pub fn hamming(&self, other: &Vertex) -> Result<usize> {
        self.same_dimension(other)?;
        Ok(self.hamming_unchecked(other))
    }

    #[inline]
    pub(crate) fn hamming_unchecked(&self, other: &Vertex) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Number of ones, `d(0, self)`.
    pub fn norm(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Coordinatewise order: the one-set of `self` is a subset of the one-set of `other`.
    pub fn leq(&self, other: &Vertex) -> Result<bool> {
        self.same_dimension(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0))
    }

    /// `self ⊕ 1`.
    pub fn complement(&self) -> Vertex {
        let n = self.dimension;
        let mut words: Words = self.words.iter().map(|w| !w).collect();
        let last = words.len() - 1;
        words[last] &= tail_mask(n);
        Vertex {
            dimension: n,
            words,
        }
    }

    /// Coordinates (1-based) that are set.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dimension).filter(|&i| self.bit(i)).map(|i| i + 1)
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.dimension).map(|i| self.bit(i)).collect()
    }
}

impl Ord for Vertex {
    /// Lexicographic order on the bitstring, coordinate 1 first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.dimension.cmp(&other.dimension).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                match a.reverse_bits().cmp(&b.reverse_bits()) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.dimension)
            .map(|i| if self.bit(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({self})")
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidVertex {
            text: s.to_string(),
            reason,
        };
        let n = s.chars().count();
        if n == 0 || n > MAX_DIMENSION {
            return Err(invalid(format!("length must be in 1..={MAX_DIMENSION}")));
        }
        let mut v = Vertex::zeros(n)?;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.words[i / WORD_BITS] |= 1 << (i % WORD_BITS),
                other => {
                    return Err(invalid(format!(
                        "illegal character {other:?} at position {}",
                        i + 1
                    )))
                }
            }
        }
        Ok(v)
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The `i`-th word of the reflected binary Gray code.
#[inline]
pub fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

pub(crate) fn check_scan(n: usize, limit: usize) -> Result<()> {
    if n > limit.min(HARD_SCAN_LIMIT) {
        return Err(Error::ScanLimit {
            dimension: n,
            limit: limit.min(HARD_SCAN_LIMIT),
        });
    }
    Ok(())
}

/// All `2^n` vertices in reflected Gray-code order.
///
/// Each item carries the 1-based coordinate flipped to reach it from the
/// previous vertex (`None` for the first vertex, **0**).
#[derive(Debug, Clone)]
pub struct GrayCode {
    current: Vertex,
    index: u64,
    total: u64,
}

impl GrayCode {
    pub fn new(n: usize, limit: usize) -> Result<Self> {
        check_dimension(n)?;
        check_scan(n, limit)?;
        Ok(Self {
            current: Vertex::zeros(n)?,
            index: 0,
            total: 1u64 << n,
        })
    }
}

impl Iterator for GrayCode {
    type Item = (Vertex, Option<usize>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.index >= self.total {
            return None;
        }
        let flipped = if self.index == 0 {
            None
        } else {
            let bit = self.index.trailing_zeros() as usize;
            self.current.flip_bit(bit);
            Some(bit + 1)
        };
        self.index += 1;
        Some((self.current.clone(), flipped))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GrayCode {}

/// Gray-code enumeration of `Q_n` under the default scan limit.
pub fn enumerate_vertices(n: usize) -> Result<GrayCode> {
    GrayCode::new(n, DEFAULT_SCAN_LIMIT)
}

/// All vertices of `Q_n` in lexicographic bitstring order (coordinate 1 most significant).
pub(crate) fn lexicographic(n: usize) -> impl Iterator<Item = Vertex> {
    (0..1u64 << n).map(move |i| {
        let mut bits = 0u64;
        for b in 0..n {
            if (i >> (n - 1 - b)) & 1 == 1 {
                bits |= 1 << b;
            }
        }
        Vertex::from_low_bits(n, bits).expect("n checked by caller")
    })
}
