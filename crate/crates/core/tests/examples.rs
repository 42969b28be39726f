#[allow(dead_code)]
#[path = "../examples/cube_basics.rs"]
mod cube_basics;

#[test]
fn cube_basics() {
    cube_basics::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/committee_median.rs"]
mod committee_median;

#[test]
fn committee_median() {
    committee_median::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/center_and_lp.rs"]
mod center_and_lp;

#[test]
fn center_and_lp() {
    center_and_lp::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/anti_median.rs"]
mod anti_median;

#[test]
fn anti_median() {
    anti_median::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/axiom_checks.rs"]
mod axiom_checks;

#[test]
fn axiom_checks() {
    axiom_checks::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/characterization.rs"]
mod characterization;

#[test]
fn characterization() {
    characterization::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/consistency_search.rs"]
mod consistency_search;

#[test]
fn consistency_search() {
    consistency_search::run().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/ballot_files.rs"]
mod ballot_files;

#[test]
fn ballot_files() {
    ballot_files::run().unwrap();
}
