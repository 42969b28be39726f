//! Report generation behind the `hyperconsensus` binary.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::ballot::BallotFile;
use crate::consensus::{maj, ConsensusOutcome, Solver};
use crate::cube::Vertex;
use crate::error::{Error, Result};
use crate::lab::{
    check_consistency, check_intersection_condition_with, check_maj, check_min, check_rr,
    check_translation, AxiomVerdict, Bounds, ConsensusFunction, Mode,
};
use crate::profile::{Exponent, Score};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Med,
    Cen,
    Mean,
    Lp,
    Am,
    Maj,
    Score,
    Axioms,
    Search,
}

impl Selector {
    pub fn needs_ballots(self) -> bool {
        !matches!(self, Selector::Axioms | Selector::Search)
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "med" => Selector::Med,
            "cen" => Selector::Cen,
            "mean" => Selector::Mean,
            "lp" => Selector::Lp,
            "am" => Selector::Am,
            "maj" => Selector::Maj,
            "score" => Selector::Score,
            "axioms" => Selector::Axioms,
            "search" => Selector::Search,
            other => return Err(Error::Config(format!("unknown function {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub selector: Selector,
    pub p: Option<f64>,
    pub solver: Solver,
    pub format: Format,
    pub seed: u64,
    /// Bounds for `axioms` (exhaustive) and `search` (sampling range).
    pub bounds: Bounds,
    pub trials: usize,
    /// Function examined by `axioms` and `search`, by builtin name.
    pub target: String,
    /// Vertex evaluated by `score`.
    pub vertex: Option<String>,
}

impl RunConfig {
    pub fn new(selector: Selector) -> Self {
        Self {
            selector,
            p: None,
            solver: Solver::default(),
            format: Format::Text,
            seed: 0,
            bounds: Bounds::upto(3, 3),
            trials: 1000,
            target: "med".into(),
            vertex: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(p) = self.p {
            Exponent::new(p)?;
        }
        match self.selector {
            Selector::Lp if self.p.is_none() => {
                Err(Error::Config("--function lp needs --p".into()))
            }
            Selector::Score if self.vertex.is_none() => {
                Err(Error::Config("--function score needs --vertex".into()))
            }
            Selector::Axioms | Selector::Search => {
                self.bounds.validate()?;
                ConsensusFunction::builtin(&self.target).map(|_| ())
            }
            _ => Ok(()),
        }
    }
}

#[derive(Serialize)]
struct WinnersReport {
    winners: Vec<Vertex>,
    score: Score,
    function: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    committees: Option<Vec<Vec<String>>>,
}

impl WinnersReport {
    fn from_outcome(outcome: ConsensusOutcome, ballots: &BallotFile) -> Self {
        let function = outcome.function().to_string();
        let (score, p) = (outcome.score(), outcome.exponent());
        Self::new(outcome.into_winners(), score, function, p, ballots)
    }

    fn new(
        winners: Vec<Vertex>,
        score: Score,
        function: String,
        p: Option<f64>,
        ballots: &BallotFile,
    ) -> Self {
        let committees = ballots.candidates().map(|_| {
            winners
                .iter()
                .filter_map(|w| ballots.committee(w))
                .collect()
        });
        Self {
            winners,
            score,
            function,
            p,
            committees,
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "function: {}", self.function);
        if let Some(p) = self.p {
            let _ = writeln!(out, "p: {p}");
        }
        let _ = writeln!(out, "score: {}", self.score);
        let _ = writeln!(out, "winners: {}", self.winners.len());
        for (i, w) in self.winners.iter().enumerate() {
            match &self.committees {
                Some(c) => {
                    let _ = writeln!(out, "  {w} {{{}}}", c[i].join(", "));
                }
                None => {
                    let _ = writeln!(out, "  {w}");
                }
            }
        }
        out
    }
}

#[derive(Serialize)]
struct ScoreReport {
    vertex: Vertex,
    eccentricity: usize,
    status: u64,
    square_status: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    lp_status: Option<Score>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<f64>,
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

fn require(ballots: Option<&BallotFile>) -> Result<&BallotFile> {
    ballots.ok_or_else(|| Error::Config("this function needs a ballot file".into()))
}

fn axiom_suite(f: &ConsensusFunction, mode: Mode) -> Result<Vec<AxiomVerdict>> {
    let mut out = vec![
        check_translation(f, mode)?,
        check_consistency(f, mode)?,
        check_maj(f, mode)?,
        check_min(f, mode)?,
        check_rr(f, mode)?,
    ];
    if mode.is_exhaustive() {
        let n = mode.bounds().max_n;
        let tc_mode = Mode::Exhaustive(Bounds::exact(n, mode.bounds().max_k.min(2)));
        out.push(check_intersection_condition_with(f, n, tc_mode)?);
    }
    Ok(out)
}

/// Runs one configured command and returns the rendered report.
pub fn run(config: &RunConfig, ballots: Option<&BallotFile>) -> Result<String> {
    config.validate()?;
    let solver = config.solver;
    let outcome = |o: ConsensusOutcome| -> Result<String> {
        let report = WinnersReport::from_outcome(o, require(ballots)?);
        Ok(render(config.format, &report, || report.text()))
    };
    match config.selector {
        Selector::Med => outcome(solver.median(require(ballots)?.profile())?),
        Selector::Am => outcome(solver.anti_median(require(ballots)?.profile())?),
        Selector::Cen => outcome(solver.center(require(ballots)?.profile())?),
        Selector::Mean => outcome(solver.mean(require(ballots)?.profile())?),
        Selector::Lp => {
            let p = Exponent::new(config.p.expect("validated"))?;
            outcome(solver.lp(require(ballots)?.profile(), p)?)
        }
        Selector::Maj => {
            let ballots = require(ballots)?;
            let w = maj(ballots.profile());
            let score = ballots.profile().status(&w)?.into();
            let report = WinnersReport::new(vec![w], score, "maj".into(), None, ballots);
            Ok(render(config.format, &report, || report.text()))
        }
        Selector::Score => {
            let ballots = require(ballots)?;
            let profile = ballots.profile();
            let x: Vertex = config.vertex.as_deref().expect("validated").parse()?;
            let p = config.p.map(Exponent::new).transpose()?;
            let report = ScoreReport {
                eccentricity: profile.eccentricity(&x)?,
                status: profile.status(&x)?,
                square_status: profile.square_status(&x)?,
                lp_status: p.map(|p| profile.lp_status(&x, p)).transpose()?,
                p: p.map(Exponent::value),
                vertex: x,
            };
            Ok(render(config.format, &report, || {
                let mut out = format!(
                    "vertex: {}\neccentricity: {}\nstatus: {}\nsquare_status: {}\n",
                    report.vertex, report.eccentricity, report.status, report.square_status
                );
                if let (Some(s), Some(p)) = (report.lp_status, report.p) {
                    let _ = writeln!(out, "lp_status (p = {p}): {s}");
                }
                out
            }))
        }
        Selector::Axioms | Selector::Search => {
            let f = ConsensusFunction::builtin(&config.target)?;
            let b = config.bounds;
            let mode = match config.selector {
                Selector::Axioms => Mode::Exhaustive(b),
                _ => Mode::Randomized {
                    bounds: b,
                    trials: config.trials,
                    seed: config.seed,
                },
            };
            let verdicts = axiom_suite(&f, mode)?;
            Ok(render(config.format, &verdicts, || {
                verdicts.iter().map(|v| format!("{v}\n")).collect()
            }))
        }
    }
}
