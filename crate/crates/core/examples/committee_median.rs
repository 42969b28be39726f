//! Picking a committee from approval ballots with the majority-rule median.
//!
//! Each ballot approves a subset of the candidates. The median committee
//! minimizes the total number of disagreements with the voters; it is
//! computed column by column without searching the cube, so it scales to
//! many candidates and voters.

use hypercube_consensus::{condorcet_ties, maj, median, BallotFile};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let input = r#"{
        "n": 5,
        "candidates": ["ada", "bram", "chen", "dora", "eli"],
        "ballots": ["11000", "10100", "11010", "01001", "10110", "00011"]
    }"#;
    let ballots = BallotFile::parse(input)?;
    let profile = ballots.profile();

    let ties = condorcet_ties(profile);
    println!("majority vertex {}", maj(profile));
    println!("tied candidates: {:?}", ties.coordinates());

    // six voters, so every tied column doubles the number of optimal committees
    let med = median(profile)?;
    println!(
        "{} optimal committees, {} disagreements each",
        med.winners().len(),
        med.score()
    );
    for w in med.winners() {
        let names = ballots.committee(w).unwrap_or_default();
        println!("  {w} {{{}}}", names.join(", "));
    }
    assert_eq!(med.winners().len(), 1 << ties.coordinates().len());
    assert!(med.contains(&maj(profile)));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
