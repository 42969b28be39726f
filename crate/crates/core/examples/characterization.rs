//! Defining a consensus function by when **0** wins, then checking that it
//! coincides with the built-in one.
//!
//! A translation-invariant function is determined by the profiles whose
//! winners include **0**. `characterized` turns such a condition into a
//! function and `verify_theorem1` compares two functions after checking
//! that both are translation invariant and agree at **0**.

use hypercube_consensus::lab::lemmas::{zero_in_center, zero_in_median};
use hypercube_consensus::lab::{verify_theorem1, Anchor, Bounds, ConsensusFunction, Outcome};
use hypercube_consensus::Vertex;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let bounds = Bounds::upto(3, 3);

    let by_columns = ConsensusFunction::characterized("zero-in-med", |pi| Ok(zero_in_median(pi)));
    let v = verify_theorem1(
        &by_columns,
        &ConsensusFunction::median(),
        &Anchor::Zeros,
        bounds,
    )?;
    println!("{v}");
    assert_eq!(v.result, Outcome::Holds);

    let by_norms = ConsensusFunction::characterized("zero-in-cen", zero_in_center);
    let v = verify_theorem1(
        &by_norms,
        &ConsensusFunction::center(),
        &Anchor::Zeros,
        bounds,
    )?;
    println!("{v}");
    assert_eq!(v.result, Outcome::Holds);

    // always returning 0 is not translation invariant, so the comparison does not apply
    let zero = ConsensusFunction::from_fn("zero", |pi| Ok(vec![Vertex::zeros(pi.dimension())?]));
    let v = verify_theorem1(&zero, &ConsensusFunction::median(), &Anchor::Zeros, bounds)?;
    println!("{v}");
    assert_eq!(v.result, Outcome::Inapplicable);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
