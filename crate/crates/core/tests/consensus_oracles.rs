use hypercube_consensus::consensus::{condorcet_ties, maj, min_vertex};
use hypercube_consensus::lab::{
    oracle_argopt, profiles_within, random_profile, Bounds, Objective, Sense,
};
use hypercube_consensus::{
    anti_median, center, lp_consensus, median, ConsensusOutcome, Exponent, Profile, Score, Vertex,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn same(fast: &ConsensusOutcome, slow: &ConsensusOutcome, pi: &Profile) {
    assert_eq!(fast.winners(), slow.winners(), "winners differ on {pi:?}");
    assert_eq!(fast.score(), slow.score(), "scores differ on {pi:?}");
}

fn check_against_oracle(pi: &Profile) {
    use Objective::*;
    same(
        &median(pi).unwrap(),
        &oracle_argopt(pi, Status, Sense::Minimize).unwrap(),
        pi,
    );
    same(
        &anti_median(pi).unwrap(),
        &oracle_argopt(pi, Status, Sense::Maximize).unwrap(),
        pi,
    );
    same(
        &center(pi).unwrap(),
        &oracle_argopt(pi, Eccentricity, Sense::Minimize).unwrap(),
        pi,
    );
    for p in [1.0, 2.0, 3.0, 1.5] {
        let e = Exponent::new(p).unwrap();
        same(
            &lp_consensus(pi, e).unwrap(),
            &oracle_argopt(pi, Objective::lp(e), Sense::Minimize).unwrap(),
            pi,
        );
    }
}

fn random_profiles(count: usize, seed: u64, bounds: Bounds) -> Vec<Profile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_profile(&mut rng, bounds))
        .collect()
}

#[test]
fn fast_paths_match_the_oracle_on_every_small_profile() {
    let mut seen = 0;
    for pi in profiles_within(Bounds::upto(4, 4)) {
        check_against_oracle(&pi);
        seen += 1;
    }
    assert_eq!(seen, Bounds::upto(4, 4).profile_count() as usize);
}

#[test]
fn fast_paths_match_the_oracle_on_random_profiles() {
    for pi in random_profiles(500, 0x0ac1e, Bounds::upto(12, 9)) {
        check_against_oracle(&pi);
    }
}

#[test]
fn median_structure_holds() {
    let profiles =
        profiles_within(Bounds::upto(3, 4)).chain(random_profiles(300, 7, Bounds::upto(14, 10)));
    for pi in profiles {
        let k = pi.len();
        let med = median(&pi).unwrap();
        let ties = condorcet_ties(&pi);
        assert_eq!(med.winners().len(), 1 << ties.coordinates().len());
        if k % 2 == 1 {
            assert!(ties.coordinates().is_empty());
            assert_eq!(med.winners(), [maj(&pi)]);
        }
        assert!(med.contains(&maj(&pi)));
        let stats = pi.column_sums();
        let by_column: usize = stats.sums().iter().map(|&c| c.min(k - c)).sum();
        assert_eq!(med.score(), Score::from(by_column));
        assert_eq!(ties.score(), ties.coordinates().len());

        let am = anti_median(&pi).unwrap();
        assert_eq!(am.winners().len(), med.winners().len());
        assert!(am.contains(&min_vertex(&pi)));
        for w in med.winners() {
            assert!(am.contains(&w.complement()));
        }

        let upper = med
            .winners()
            .iter()
            .fold(Vertex::zeros(pi.dimension()).unwrap(), |acc, w| {
                let bits: Vec<bool> = (1..=pi.dimension())
                    .map(|j| acc.get(j).unwrap() || w.get(j).unwrap())
                    .collect();
                Vertex::from_bits(&bits).unwrap()
            });
        for w in med.winners() {
            assert!(maj(&pi).leq(w).unwrap());
            assert!(w.leq(&upper).unwrap());
        }
    }
}

#[test]
fn consensus_sets_are_translation_equivariant() {
    let profiles = random_profiles(200, 99, Bounds::upto(9, 6));
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for pi in profiles {
        let v = hypercube_consensus::lab::enumerate::random_vertex(&mut rng, pi.dimension());
        let moved = pi.translate(&v).unwrap();
        let p = Exponent::new(2.0).unwrap();
        let pairs = [
            (median(&pi).unwrap(), median(&moved).unwrap()),
            (anti_median(&pi).unwrap(), anti_median(&moved).unwrap()),
            (center(&pi).unwrap(), center(&moved).unwrap()),
            (
                lp_consensus(&pi, p).unwrap(),
                lp_consensus(&moved, p).unwrap(),
            ),
        ];
        for (before, after) in pairs {
            assert_eq!(before.score(), after.score());
            let mut shifted: Vec<Vertex> = before
                .winners()
                .iter()
                .map(|w| w.xor(&v).unwrap())
                .collect();
            shifted.sort();
            assert_eq!(shifted, after.winners());
        }
    }
}

#[test]
fn outcome_sets_are_never_empty_and_sorted() {
    for pi in random_profiles(200, 5, Bounds::upto(10, 7)) {
        for out in [
            median(&pi).unwrap(),
            center(&pi).unwrap(),
            anti_median(&pi).unwrap(),
        ] {
            assert!(!out.winners().is_empty());
            assert!(out.winners().windows(2).all(|w| w[0] < w[1]));
        }
    }
}
