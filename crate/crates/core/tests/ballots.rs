use hypercube_consensus::{BallotFile, Profile, Vertex};
use proptest::prelude::*;

fn ballot_file() -> impl Strategy<Value = BallotFile> {
    (1usize..=90, 1usize..=12, any::<bool>()).prop_flat_map(|(n, k, named)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), k).prop_map(
            move |rows| {
                let profile =
                    Profile::new(rows.iter().map(|r| Vertex::from_bits(r).unwrap()).collect())
                        .unwrap();
                let names = named.then(|| (1..=n).map(|j| format!("c{j}")).collect());
                BallotFile::new(profile, names).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn json_round_trips(b in ballot_file()) {
        let back = BallotFile::parse(&b.to_json()).unwrap();
        prop_assert_eq!(back.profile(), b.profile());
        prop_assert_eq!(back.candidates(), b.candidates());
        prop_assert_eq!(back.to_json(), b.to_json());
    }

    #[test]
    fn text_round_trips(b in ballot_file()) {
        let back = BallotFile::parse(&b.to_text()).unwrap();
        prop_assert_eq!(back.profile(), b.profile());
        prop_assert_eq!(back.to_text(), b.to_text());
    }

    #[test]
    fn committees_list_the_approved_names(b in ballot_file()) {
        let x = &b.profile().entries()[0];
        match b.committee(x) {
            Some(names) => prop_assert_eq!(names.len(), x.norm()),
            None => prop_assert!(b.candidates().is_none()),
        }
    }
}

#[test]
fn malformed_inputs_point_at_the_problem() {
    let e = BallotFile::parse("110\n10\n").unwrap_err();
    assert_eq!(e.line, Some(2));
    let e = BallotFile::parse("110\n1x0\n").unwrap_err();
    assert_eq!((e.line, e.column), (Some(2), Some(2)));
    assert!(BallotFile::parse("# only a comment\n").is_err());
    assert!(BallotFile::parse(r#"{"n":2,"candidates":["a","a"],"ballots":["10"]}"#).is_err());
    assert!(BallotFile::parse(r#"{"n":2,"ballots":[]}"#).is_err());
    assert!(BallotFile::parse(r#"{"n":2,"ballots":["10"],"extra":1}"#).is_err());
}
