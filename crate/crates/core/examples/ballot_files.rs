//! Reading and writing ballot files in both supported encodings, and
//! producing the same reports the command-line tool prints.

use hypercube_consensus::run::{run as report, Format, RunConfig, Selector};
use hypercube_consensus::BallotFile;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let lines = "# three voters, three candidates\n110\n101\n011\n";
    let ballots = BallotFile::parse(lines)?;
    println!("{}", ballots.to_json());
    assert_eq!(
        BallotFile::parse(&ballots.to_json())?.profile(),
        ballots.profile()
    );

    match BallotFile::parse("110\n1a0\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("malformed input was accepted".into()),
    }

    let mut config = RunConfig::new(Selector::Med);
    print!("{}", report(&config, Some(&ballots))?);
    config.format = Format::Json;
    print!("{}", report(&config, Some(&ballots))?);

    config.selector = Selector::Score;
    config.vertex = Some("111".into());
    print!("{}", report(&config, Some(&ballots))?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
