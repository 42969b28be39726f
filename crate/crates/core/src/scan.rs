//! Exhaustive Gray-code scans over `Q_n` with incremental distance updates.
//!
//! Consecutive Gray-code vertices differ in one coordinate, so each of the
//! `k` distances to the profile moves by exactly ±1 per step. The objective
//! is kept in a [`Tally`] that absorbs those unit moves.

use std::cmp::Ordering;
use std::thread;

use crate::cube::{check_scan, gray, Vertex};
use crate::error::Result;
use crate::profile::{Exponent, Profile, Score};

#[derive(Debug, Clone, Copy)]
pub(crate) enum Measure {
    Eccentricity,
    Power(Exponent),
}

trait Tally: Send {
    fn init(&mut self, distances: &[u32]);
    fn shift(&mut self, old: u32, new: u32);
    fn score(&self) -> Score;
}

/// Histogram of distances with a running maximum.
struct MaxTally {
    counts: Vec<u32>,
    max: u32,
}

impl Tally for MaxTally {
    fn init(&mut self, distances: &[u32]) {
        self.counts.iter_mut().for_each(|c| *c = 0);
        for &d in distances {
            self.counts[d as usize] += 1;
        }
        self.max = distances.iter().copied().max().unwrap_or(0);
    }

    #[inline]
    fn shift(&mut self, old: u32, new: u32) {
        self.counts[old as usize] -= 1;
        self.counts[new as usize] += 1;
        if new > self.max {
            self.max = new;
        } else if old == self.max && self.counts[old as usize] == 0 {
            // new = old - 1 holds at least this entry
            self.max = new;
        }
    }

    fn score(&self) -> Score {
        Score::Exact(self.max as u128)
    }
}

/// Exact running sum of `d^p` from a power table.
struct ExactPowerTally {
    powers: Vec<u128>,
    total: u128,
}

impl Tally for ExactPowerTally {
    fn init(&mut self, distances: &[u32]) {
        self.total = distances.iter().map(|&d| self.powers[d as usize]).sum();
    }

    #[inline]
    fn shift(&mut self, old: u32, new: u32) {
        self.total = self.total - self.powers[old as usize] + self.powers[new as usize];
    }

    fn score(&self) -> Score {
        Score::Exact(self.total)
    }
}

/// Float power sums recomputed from an exact distance histogram, so equal
/// histograms always give bit-identical scores and rounding never drifts.
struct RealPowerTally {
    powers: Vec<f64>,
    counts: Vec<u64>,
}

impl Tally for RealPowerTally {
    fn init(&mut self, distances: &[u32]) {
        self.counts.iter_mut().for_each(|c| *c = 0);
        for &d in distances {
            self.counts[d as usize] += 1;
        }
    }

    #[inline]
    fn shift(&mut self, old: u32, new: u32) {
        self.counts[old as usize] -= 1;
        self.counts[new as usize] += 1;
    }

    fn score(&self) -> Score {
        Score::Real(
            self.counts
                .iter()
                .zip(&self.powers)
                .map(|(&c, &p)| c as f64 * p)
                .sum(),
        )
    }
}

fn make_tally(measure: Measure, n: usize, k: usize) -> Box<dyn Tally> {
    match measure {
        Measure::Eccentricity => Box::new(MaxTally {
            counts: vec![0; n + 1],
            max: 0,
        }),
        Measure::Power(p) => {
            if let Some(powers) = exact_powers(p, n, k) {
                Box::new(ExactPowerTally { powers, total: 0 })
            } else {
                Box::new(RealPowerTally {
                    powers: (0..=n).map(|d| p.power(d)).collect(),
                    counts: vec![0; n + 1],
                })
            }
        }
    }
}

/// Power table `d^p` for `d = 0..=n`, if `k · n^p` fits in a `u128`.
fn exact_powers(p: Exponent, n: usize, k: usize) -> Option<Vec<u128>> {
    let e = p.integral()?;
    let top = (n as u128).checked_pow(e)?;
    top.checked_mul(k as u128)?;
    Some((0..=n as u128).map(|d| d.pow(e)).collect())
}

struct Segment {
    score: Score,
    winners: Vec<u64>,
}

fn absorb(best: &mut Option<Segment>, score: Score, code: u64) {
    match best {
        None => {
            *best = Some(Segment {
                score,
                winners: vec![code],
            })
        }
        Some(seg) => match score.compare(seg.score) {
            Ordering::Less => {
                seg.score = score;
                seg.winners.clear();
                seg.winners.push(code);
            }
            Ordering::Equal => seg.winners.push(code),
            Ordering::Greater => {}
        },
    }
}

fn scan_segment(
    entries: &[u64],
    columns: &[Vec<u64>],
    start: u64,
    end: u64,
    mut tally: Box<dyn Tally>,
) -> Segment {
    let mut x = gray(start);
    let mut distances: Vec<u32> = entries.iter().map(|e| (x ^ e).count_ones()).collect();
    tally.init(&distances);
    let mut best = None;
    absorb(&mut best, tally.score(), x);
    for i in start + 1..end {
        let j = i.trailing_zeros() as usize;
        let before = (x >> j) & 1;
        x ^= 1 << j;
        let column = &columns[j];
        for (idx, d) in distances.iter_mut().enumerate() {
            let bit = (column[idx / 64] >> (idx % 64)) & 1;
            let old = *d;
            // agreeing before the flip means disagreeing after it
            let new = if bit == before { old + 1 } else { old - 1 };
            *d = new;
            tally.shift(old, new);
        }
        absorb(&mut best, tally.score(), x);
    }
    best.expect("segment is non-empty")
}

/// Every vertex of `Q_n` minimizing `measure` over `profile`, sorted, with the optimum.
pub(crate) fn scan_minimum(
    profile: &Profile,
    measure: Measure,
    limit: usize,
    workers: usize,
) -> Result<(Vec<Vertex>, Score)> {
    let n = profile.dimension();
    check_scan(n, limit)?;
    let k = profile.len();
    let entries: Vec<u64> = profile.entries().iter().map(Vertex::low_word).collect();
    let columns: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            let mut col = vec![0u64; k.div_ceil(64)];
            for (idx, e) in entries.iter().enumerate() {
                col[idx / 64] |= ((e >> j) & 1) << (idx % 64);
            }
            col
        })
        .collect();

    let total = 1u64 << n;
    let parts = (workers.max(1) as u64).min(total);
    let bounds: Vec<(u64, u64)> = (0..parts)
        .map(|w| (total * w / parts, total * (w + 1) / parts))
        .filter(|(s, e)| s < e)
        .collect();

    let segments: Vec<Segment> = if bounds.len() == 1 {
        vec![scan_segment(
            &entries,
            &columns,
            0,
            total,
            make_tally(measure, n, k),
        )]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = bounds
                .iter()
                .map(|&(s, e)| {
                    let tally = make_tally(measure, n, k);
                    let (entries, columns) = (&entries, &columns);
                    scope.spawn(move || scan_segment(entries, columns, s, e, tally))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        })
    };

    let mut merged: Option<Segment> = None;
    for seg in segments {
        match &mut merged {
            None => merged = Some(seg),
            Some(m) => match seg.score.compare(m.score) {
                Ordering::Less => *m = seg,
                Ordering::Equal => m.winners.extend(seg.winners),
                Ordering::Greater => {}
            },
        }
    }
    let merged = merged.expect("at least one segment");
    let mut winners: Vec<Vertex> = merged
        .winners
        .into_iter()
        .map(|code| Vertex::from_low_bits(n, code))
        .collect::<Result<_>>()?;
    winners.sort();
    Ok((winners, merged.score))
}
