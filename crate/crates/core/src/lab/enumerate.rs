//! Profile spaces for exhaustive and randomized axiom checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cube::{lexicographic, Vertex};
use crate::error::{Error, Result};
use crate::profile::Profile;

/// Dimensions `min_n..=max_n` and lengths `1..=max_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub min_n: usize,
    pub max_n: usize,
    pub max_k: usize,
}

impl Bounds {
    pub fn upto(max_n: usize, max_k: usize) -> Self {
        Self {
            min_n: 1,
            max_n,
            max_k,
        }
    }

    pub fn exact(n: usize, max_k: usize) -> Self {
        Self {
            min_n: n,
            max_n: n,
            max_k,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_n == 0 || self.min_n > self.max_n || self.max_k == 0 {
            return Err(Error::Config(format!("empty bounds {self:?}")));
        }
        if self.max_n > 16 {
            return Err(Error::Config(format!(
                "dimension {} is too large for profile enumeration",
                self.max_n
            )));
        }
        Ok(())
    }

    pub fn dimensions(&self) -> std::ops::RangeInclusive<usize> {
        self.min_n..=self.max_n
    }

    /// `Σ_n Σ_{k=1..max_k} (2^n)^k`, the number of profiles [`profiles_within`] yields.
    pub fn profile_count(&self) -> u128 {
        self.dimensions()
            .map(|n| {
                (1..=self.max_k as u32)
                    .map(|k| (1u128 << n).pow(k))
                    .sum::<u128>()
            })
            .sum()
    }
}

/// How a check walks the profile space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    Exhaustive(Bounds),
    Randomized {
        #[serde(flatten)]
        bounds: Bounds,
        trials: usize,
        seed: u64,
    },
}

impl Mode {
    pub fn exhaustive(max_n: usize, max_k: usize) -> Self {
        Mode::Exhaustive(Bounds::upto(max_n, max_k))
    }

    pub fn randomized(max_n: usize, max_k: usize, trials: usize, seed: u64) -> Self {
        Mode::Randomized {
            bounds: Bounds::upto(max_n, max_k),
            trials,
            seed,
        }
    }

    pub fn bounds(&self) -> Bounds {
        match *self {
            Mode::Exhaustive(b) => b,
            Mode::Randomized { bounds, .. } => bounds,
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            Mode::Exhaustive(_) => None,
            Mode::Randomized { seed, .. } => Some(seed),
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self, Mode::Exhaustive(_))
    }

    /// The profiles this mode visits, in a fixed order.
    pub fn profiles(&self) -> Result<Box<dyn Iterator<Item = Profile>>> {
        let bounds = self.bounds();
        bounds.validate()?;
        Ok(match *self {
            Mode::Exhaustive(b) => Box::new(profiles_within(b)),
            Mode::Randomized {
                bounds,
                trials,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Box::new((0..trials).map(move |_| random_profile(&mut rng, bounds)))
            }
        })
    }
}

/// All profiles of dimension `n` and length exactly `k`, lexicographic in the entries.
pub fn profiles_of(n: usize, k: usize) -> impl Iterator<Item = Profile> {
    let vertices: Vec<Vertex> = lexicographic(n).collect();
    let base = vertices.len();
    let mut digits = vec![0usize; k];
    let mut done = k == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let profile = Profile::new(digits.iter().map(|&d| vertices[d].clone()).collect())
            .expect("k >= 1 entries of one dimension");
        // odometer, last entry fastest
        done = true;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                done = false;
                break;
            }
            *d = 0;
        }
        Some(profile)
    })
}

/// Every profile within `bounds`, ordered by dimension, then length, then entries.
pub fn profiles_within(bounds: Bounds) -> impl Iterator<Item = Profile> {
    bounds
        .dimensions()
        .flat_map(move |n| (1..=bounds.max_k).flat_map(move |k| profiles_of(n, k)))
}

pub fn random_vertex<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vertex {
    let words: Vec<u64> = (0..n.div_ceil(64)).map(|_| rng.gen()).collect();
    Vertex::from_words(n, &words).expect("valid dimension")
}

/// A profile with dimension and length drawn uniformly within `bounds`.
pub fn random_profile<R: Rng + ?Sized>(rng: &mut R, bounds: Bounds) -> Profile {
    let n = rng.gen_range(bounds.min_n..=bounds.max_n);
    let k = rng.gen_range(1..=bounds.max_k);
    random_profile_of(rng, n, k)
}

pub fn random_profile_of<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Profile {
    Profile::new((0..k).map(|_| random_vertex(rng, n)).collect()).expect("k >= 1")
}
