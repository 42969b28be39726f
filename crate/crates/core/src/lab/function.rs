use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::consensus::Solver;
use crate::cube::{check_scan, lexicographic, Vertex, DEFAULT_SCAN_LIMIT};
use crate::error::{Error, Result};
use crate::lab::oracle::{oracle_argopt, Objective, Sense};
use crate::profile::{Exponent, Profile};

/// Winner set of a consensus function, ordered by bitstring.
pub type Winners = BTreeSet<Vertex>;

type Evaluator = dyn Fn(&Profile) -> Result<Vec<Vertex>> + Send + Sync;

/// A named map from profiles to non-empty vertex sets.
///
/// Every evaluation is checked: the result must be non-empty and live in
/// the profile's dimension.
#[derive(Clone)]
pub struct ConsensusFunction {
    name: String,
    eval: Arc<Evaluator>,
}

impl fmt::Debug for ConsensusFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConsensusFunction")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl ConsensusFunction {
    /// Wraps an arbitrary evaluator.
    pub fn from_fn<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(&Profile) -> Result<Vec<Vertex>> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            eval: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn evaluate(&self, profile: &Profile) -> Result<Winners> {
        let out: Winners = (self.eval)(profile)?.into_iter().collect();
        if out.is_empty() {
            return Err(Error::EmptyOutput {
                name: self.name.clone(),
            });
        }
        if let Some(bad) = out.iter().find(|x| x.dimension() != profile.dimension()) {
            return Err(Error::DimensionMismatch {
                left: bad.dimension(),
                right: profile.dimension(),
            });
        }
        Ok(out)
    }

    /// Closed-form median.
    pub fn median() -> Self {
        Self::median_with(Solver::default())
    }

    pub fn median_with(solver: Solver) -> Self {
        Self::from_fn("med", move |p| Ok(solver.median(p)?.into_winners()))
    }

    pub fn anti_median() -> Self {
        let solver = Solver::default();
        Self::from_fn("am", move |p| Ok(solver.anti_median(p)?.into_winners()))
    }

    /// Gray-scan center.
    pub fn center() -> Self {
        let solver = Solver::default();
        Self::from_fn("cen", move |p| Ok(solver.center(p)?.into_winners()))
    }

    /// Gray-scan `ℓ_p`.
    pub fn lp(p: Exponent) -> Self {
        let solver = Solver::default();
        Self::from_fn(format!("lp({p})"), move |prof| {
            Ok(solver.lp(prof, p)?.into_winners())
        })
    }

    pub fn mean() -> Self {
        let solver = Solver::default();
        Self::from_fn("mean", move |p| Ok(solver.mean(p)?.into_winners()))
    }

    /// Brute-force optimizer of `objective`, independent of the consensus module.
    pub fn oracle(objective: Objective, sense: Sense) -> Self {
        Self::from_fn(format!("oracle-{objective}-{sense}"), move |p| {
            Ok(oracle_argopt(p, objective, sense)?.into_winners())
        })
    }

    /// `f1`: the projection onto the first entry.
    pub fn f1() -> Self {
        Self::from_fn("f1", |p| Ok(vec![p.entries()[0].clone()]))
    }

    /// `f2`: the constant function returning every vertex.
    pub fn f2() -> Self {
        Self::from_fn("f2", |p| {
            let n = p.dimension();
            check_scan(n, DEFAULT_SCAN_LIMIT)?;
            Ok(lexicographic(n).collect())
        })
    }

    /// `f3`: the set of vertices occurring in the profile.
    pub fn f3() -> Self {
        Self::from_fn("f3", |p| Ok(p.entries().to_vec()))
    }

    /// A constant function of one fixed dimension.
    pub fn constant(name: impl Into<String>, output: Winners) -> Result<Self> {
        let n = output
            .first()
            .ok_or_else(|| Error::Config("a constant function needs a non-empty output".into()))?
            .dimension();
        let name = name.into();
        let label = name.clone();
        Ok(Self::from_fn(name, move |p| {
            if p.dimension() != n {
                return Err(Error::UnsupportedDimension {
                    name: label.clone(),
                    dimension: p.dimension(),
                });
            }
            Ok(output.iter().cloned().collect())
        }))
    }

    /// The translation-invariant function whose winners are the `v` with
    /// `zero_condition(π ⊕ v)`: the function pinned down by saying when
    /// **0** wins.
    pub fn characterized<F>(name: impl Into<String>, zero_condition: F) -> Self
    where
        F: Fn(&Profile) -> Result<bool> + Send + Sync + 'static,
    {
        Self::from_fn(name, move |p| {
            let n = p.dimension();
            check_scan(n, DEFAULT_SCAN_LIMIT)?;
            let mut out = Vec::new();
            for v in lexicographic(n) {
                if zero_condition(&p.translate(&v)?)? {
                    out.push(v);
                }
            }
            Ok(out)
        })
    }

    /// Looks up a builtin by name: `med`, `am`, `cen`, `mean`, `lp(<p>)`, `f1`, `f2`, `f3`.
    pub fn builtin(name: &str) -> Result<Self> {
        let name = name.trim();
        Ok(match name {
            "med" => Self::median(),
            "am" => Self::anti_median(),
            "cen" => Self::center(),
            "mean" => Self::mean(),
            "f1" => Self::f1(),
            "f2" => Self::f2(),
            "f3" => Self::f3(),
            _ => {
                let p = name
                    .strip_prefix("lp(")
                    .and_then(|s| s.strip_suffix(')'))
                    .or_else(|| name.strip_prefix("lp:"))
                    .ok_or_else(|| Error::Config(format!("unknown consensus function {name:?}")))?;
                let p: f64 = p
                    .parse()
                    .map_err(|_| Error::Config(format!("bad exponent in {name:?}")))?;
                Self::lp(Exponent::new(p)?)
            }
        })
    }
}
