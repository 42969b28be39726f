//! Brute-force ground truth: evaluate the objective at every vertex.
//!
//! Deliberately naive. Each vertex is scored from scratch through the
//! profile metrics, with no Gray-code ordering and no closed forms, so it
//! stays independent of the code paths it is used to check.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::consensus::{ConsensusOutcome, FunctionKind};
use crate::cube::{check_scan, lexicographic, Vertex, DEFAULT_SCAN_LIMIT};
use crate::error::{Error, Result};
use crate::profile::{Exponent, Profile, Score};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Eccentricity,
    Status,
    LpStatus(f64),
}

impl Objective {
    pub fn lp(p: Exponent) -> Self {
        Objective::LpStatus(p.value())
    }

    fn evaluate(self, profile: &Profile, x: &Vertex) -> Result<Score> {
        Ok(match self {
            Objective::Eccentricity => profile.eccentricity(x)?.into(),
            Objective::Status => profile.status(x)?.into(),
            Objective::LpStatus(p) => profile.lp_status(x, Exponent::new(p)?)?,
        })
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Eccentricity => f.write_str("eccentricity"),
            Objective::Status => f.write_str("status"),
            Objective::LpStatus(p) => write!(f, "lp{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Minimize,
    Maximize,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Minimize => "min",
            Sense::Maximize => "max",
        })
    }
}

/// Exact optimal set of `objective` over all `2^n` vertices.
///
/// Only the status may be maximized (giving the anti-median).
pub fn oracle_argopt(
    profile: &Profile,
    objective: Objective,
    sense: Sense,
) -> Result<ConsensusOutcome> {
    let (function, p) = match (objective, sense) {
        (Objective::Eccentricity, Sense::Minimize) => (FunctionKind::Cen, None),
        (Objective::Status, Sense::Minimize) => (FunctionKind::Med, None),
        (Objective::Status, Sense::Maximize) => (FunctionKind::Am, None),
        (Objective::LpStatus(p), Sense::Minimize) => (FunctionKind::Lp, Some(p)),
        _ => {
            return Err(Error::Config(format!(
                "maximizing {objective} is not supported"
            )))
        }
    };
    let n = profile.dimension();
    check_scan(n, DEFAULT_SCAN_LIMIT)?;
    let better = match sense {
        Sense::Minimize => Ordering::Less,
        Sense::Maximize => Ordering::Greater,
    };
    let mut best: Option<Score> = None;
    let mut winners = Vec::new();
    for x in lexicographic(n) {
        let s = objective.evaluate(profile, &x)?;
        let ord = best.map_or(better, |b| s.compare(b));
        if ord == better {
            best = Some(s);
            winners.clear();
            winners.push(x);
        } else if ord == Ordering::Equal {
            winners.push(x);
        }
    }
    let score = best.expect("Q_n is non-empty");
    Ok(ConsensusOutcome::new(winners, score, function, p))
}
