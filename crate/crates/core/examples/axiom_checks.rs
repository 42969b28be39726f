//! Running the axiom lab over the built-in consensus functions.
//!
//! Exhaustive mode visits every profile within the bounds; randomized mode
//! samples with an explicit seed, so every report can be reproduced.

use hypercube_consensus::lab::{
    check_consistency, check_maj, check_min, check_rr, check_translation, ConsensusFunction, Mode,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let mode = Mode::exhaustive(3, 3);
    for name in ["med", "am", "cen", "mean", "f1", "f2", "f3"] {
        let f = ConsensusFunction::builtin(name)?;
        let verdicts = [
            check_translation(&f, mode)?,
            check_consistency(&f, mode)?,
            check_maj(&f, mode)?,
            check_min(&f, mode)?,
            check_rr(&f, mode)?,
        ];
        let row: Vec<String> = verdicts
            .iter()
            .map(|v| format!("{}={}", v.axiom, if v.holds() { "yes" } else { "no" }))
            .collect();
        println!("{name:>5}: {}", row.join(" "));
        for v in verdicts.iter().filter(|v| v.fails()) {
            if let Some(w) = &v.witness {
                assert!(w.replays(&f, None)?);
            }
        }
    }

    let sampled = check_translation(
        &ConsensusFunction::center(),
        Mode::randomized(10, 6, 200, 7),
    )?;
    println!("{}", sampled.to_json());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
