//! Minimax, least-squares and general `ℓ_p` consensus by scanning the cube.
//!
//! The center minimizes the worst disagreement and the `ℓ_p` function
//! minimizes `Σ d(x, π_i)^p`. Both are found by walking all `2^n` vertices
//! in Gray order, optionally split over several threads.

use hypercube_consensus::{center, lp_consensus, mean, median, Exponent, Profile, Solver};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let pi = Profile::from_strs(&["000000", "000111", "111000", "110110"])?;

    let cen = center(&pi)?;
    println!(
        "center: {} vertices at eccentricity {}",
        cen.winners().len(),
        cen.score()
    );

    let med = median(&pi)?;
    let avg = mean(&pi)?;
    println!("median score {}, mean score {}", med.score(), avg.score());

    for p in [1.0, 1.5, 2.0, 4.0] {
        let out = lp_consensus(&pi, Exponent::new(p)?)?;
        let first = &out.winners()[0];
        println!(
            "p = {p}: {} winners, first {first}, score {}",
            out.winners().len(),
            out.score()
        );
    }
    assert_eq!(lp_consensus(&pi, Exponent::ONE)?.winners(), med.winners());

    let parallel = Solver {
        workers: 4,
        ..Solver::default()
    };
    assert_eq!(parallel.center(&pi)?.winners(), cen.winners());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
