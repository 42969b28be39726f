//! Siting an unwanted facility as far as possible from everyone.
//!
//! The anti-median maximizes the total distance to the profile. It is the
//! complement of the median, seeded by the minority vertex.

use hypercube_consensus::{anti_median, median, min_vertex, Profile};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let homes = Profile::from_strs(&["1100", "1010", "1001", "0111"])?;
    let am = anti_median(&homes)?;
    println!("minority vertex {}", min_vertex(&homes));
    for site in am.winners() {
        println!("  site {site}, total distance {}", homes.status(site)?);
    }

    let med = median(&homes)?;
    for w in med.winners() {
        assert!(am.contains(&w.complement()));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
