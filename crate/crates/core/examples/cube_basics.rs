//! Vertices of the n-cube: bitstrings, the XOR group, Hamming distance and
//! Gray-code enumeration.

use hypercube_consensus::{enumerate_vertices, Vertex};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let u: Vertex = "0110".parse()?;
    let v: Vertex = "1100".parse()?;
    let w = u.xor(&v)?;
    println!("{u} xor {v} = {w}, distance {}", u.hamming(&v)?);
    assert_eq!(w.to_string(), "1010");
    assert_eq!(u.hamming(&v)?, w.norm());

    // coordinates are 1-based, coordinate 1 is the leftmost character
    let mut x = Vertex::zeros(4)?;
    x.set(1, true)?;
    x.flip(4)?;
    println!("e1 + e4 = {x}, complement {}", x.complement());
    assert!(x.leq(&Vertex::ones(4)?)?);

    // Gray order changes one coordinate per step
    for (vertex, flipped) in enumerate_vertices(3)? {
        match flipped {
            Some(j) => println!("  {vertex}  (flipped {j})"),
            None => println!("  {vertex}"),
        }
    }

    let wide = Vertex::ones(200)?;
    println!("a 200-bit vertex has norm {}", wide.norm());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
