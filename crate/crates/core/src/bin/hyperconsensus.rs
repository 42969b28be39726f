use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hypercube_consensus::consensus::{Solver, DEFAULT_TIE_EXPANSION_LIMIT};
use hypercube_consensus::cube::DEFAULT_SCAN_LIMIT;
use hypercube_consensus::lab::Bounds;
use hypercube_consensus::run::{run, Format, RunConfig, Selector};
use hypercube_consensus::{BallotFile, Error};

/// Consensus committees from approval ballots on the n-cube.
#[derive(Parser, Debug)]
#[command(version)]
struct Args {
    /// Ballot file (line or JSON format); `-` or absent reads stdin.
    input: Option<PathBuf>,

    /// med | cen | mean | lp | am | maj | score | axioms | search
    #[arg(long, default_value = "med")]
    function: String,

    /// Exponent for `lp` (and the extra `score` column), at least 1.
    #[arg(long)]
    p: Option<f64>,

    /// text | json
    #[arg(long, default_value = "text")]
    format: String,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
    max_scan_n: usize,

    #[arg(long, default_value_t = DEFAULT_TIE_EXPANSION_LIMIT)]
    max_tie_expansion: usize,

    #[arg(long, default_value_t = 1)]
    workers: usize,

    /// `n,k` bounds for `axioms` and `search`.
    #[arg(long, default_value = "3,3")]
    exhaustive_bounds: String,

    /// Random trials for `search`.
    #[arg(long, default_value_t = 1000)]
    trials: usize,

    /// Function examined by `axioms` / `search`: med, am, cen, mean, lp(<p>), f1, f2, f3.
    #[arg(long, default_value = "med")]
    target: String,

    /// Vertex evaluated by `score`.
    #[arg(long)]
    vertex: Option<String>,
}

fn parse_bounds(s: &str) -> Result<Bounds, Error> {
    let bad = || Error::Config(format!("--exhaustive-bounds expects n,k, got {s:?}"));
    let (n, k) = s.split_once(',').ok_or_else(bad)?;
    let n = n.trim().parse().map_err(|_| bad())?;
    let k = k.trim().parse().map_err(|_| bad())?;
    Ok(Bounds::upto(n, k))
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    let io = |e: std::io::Error| Error::Config(format!("cannot read input: {e}"));
    match path {
        Some(p) if p.as_os_str() != "-" => text = std::fs::read_to_string(p).map_err(io)?,
        _ => {
            std::io::stdin().read_to_string(&mut text).map_err(io)?;
        }
    }
    Ok(text)
}

fn execute(args: Args) -> Result<String, Error> {
    let selector: Selector = args.function.parse()?;
    let config = RunConfig {
        selector,
        p: args.p,
        solver: Solver {
            max_scan_n: args.max_scan_n,
            max_tie_expansion: args.max_tie_expansion,
            workers: args.workers,
        },
        format: args.format.parse::<Format>()?,
        seed: args.seed,
        bounds: parse_bounds(&args.exhaustive_bounds)?,
        trials: args.trials,
        target: args.target,
        vertex: args.vertex,
    };
    config.validate()?;
    let ballots = if selector.needs_ballots() {
        Some(BallotFile::parse(&read_input(args.input.as_ref())?)?)
    } else {
        None
    };
    run(&config, ballots.as_ref())
}

fn main() -> ExitCode {
    match execute(Args::parse()) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
