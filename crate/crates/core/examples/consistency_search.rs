//! Searching for a consistency counterexample for the center.
//!
//! Consistency asks that whenever two sub-electorates share a winner, the
//! merged electorate elects exactly the shared winners. The search prints
//! the first pair of profiles that breaks it, and the witness replays.

use hypercube_consensus::lab::{check_consistency, ConsensusFunction, Mode, Witness};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cen = ConsensusFunction::center();
    let verdict = check_consistency(&cen, Mode::exhaustive(3, 2))?;
    println!("{verdict}");
    let witness = verdict
        .witness
        .as_ref()
        .ok_or("expected a counterexample")?;
    if let Witness::Consistency { first, second, .. } = witness {
        println!("merging {first} with {second}");
    }
    assert!(witness.replays(&cen, None)?);

    let seeded = check_consistency(&cen, Mode::randomized(6, 4, 500, 2024))?;
    let again = check_consistency(&cen, Mode::randomized(6, 4, 500, 2024))?;
    assert_eq!(seeded.to_json(), again.to_json());
    println!("{}", seeded.to_json());

    let med = check_consistency(&ConsensusFunction::median(), Mode::exhaustive(3, 2))?;
    println!("median: {}", med.result);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
