//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hypercube_consensus::lab::{
    check_intersection_condition, check_maj, check_min, check_rr, check_translation,
    lemmas::{zero_in_center, zero_in_lp, zero_in_median},
    oracle_argopt, profiles_within, random_profile, verify_theorem1, Anchor, Bounds,
    ConsensusFunction, Mode, Objective, Outcome, Sense,
};
use hypercube_consensus::{
    anti_median, center, condorcet_ties, lp_consensus, median, Exponent, Profile, Vertex,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_SEED: u64 = 0x5eed_0001;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

/// Exhaustive n ≤ 3, k ≤ 3 plus 1,000 seeded random profiles with n ≤ 12, k ≤ 9.
fn criterion_one_instances() -> Vec<Profile> {
    let mut all: Vec<Profile> = profiles_within(Bounds::upto(3, 3)).collect();
    assert_eq!(all.len(), 14 + 84 + 584);
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    all.extend((0..1000).map(|_| random_profile(&mut rng, Bounds::upto(12, 9))));
    all
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence(instances: &[Profile]) -> Check {
    let start = Instant::now();
    for pi in instances {
        let fast = median(pi).map_err(|e| e.to_string())?;
        let brute =
            oracle_argopt(pi, Objective::Status, Sense::Minimize).map_err(|e| e.to_string())?;
        ensure(fast.winners() == brute.winners(), || {
            format!("winner sets differ on {pi}")
        })?;
        ensure(fast.score() == brute.score(), || {
            format!("scores differ on {pi}")
        })?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("{} profiles, {:.2?}", instances.len(), took))
}

fn cardinality_law(instances: &[Profile]) -> Check {
    for pi in instances {
        let expected = 1usize << condorcet_ties(pi).score();
        let med = median(pi).map_err(|e| e.to_string())?.winners().len();
        let am = anti_median(pi).map_err(|e| e.to_string())?.winners().len();
        ensure(med == expected && am == expected, || {
            format!("{pi}: |Med| = {med}, |AM| = {am}, 2^Cs = {expected}")
        })?;
    }
    Ok(format!("{} profiles", instances.len()))
}

fn lemma_suite() -> Check {
    let exponents: Vec<Exponent> = [1.0, 2.0, 3.0, 2.5]
        .into_iter()
        .map(|p| Exponent::new(p).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED ^ 3);
    let larger: Vec<Profile> = (0..500)
        .map(|_| {
            let n = rng.gen_range(4..=10);
            let k = rng.gen_range(1..=9);
            hypercube_consensus::lab::enumerate::random_profile_of(&mut rng, n, k)
        })
        .collect();
    let instances = profiles_within(Bounds::upto(3, 3)).chain(larger);
    let mut count = 0;
    for pi in instances {
        count += 1;
        let zero = Vertex::zeros(pi.dimension()).unwrap();
        let err = |e: hypercube_consensus::Error| e.to_string();
        let in_cen = center(&pi).map_err(err)?.contains(&zero);
        ensure(in_cen == zero_in_center(&pi).map_err(err)?, || {
            format!("center zero-membership on {pi}")
        })?;
        let in_med = median(&pi).map_err(err)?.contains(&zero);
        ensure(in_med == zero_in_median(&pi), || {
            format!("median zero-membership on {pi}")
        })?;
        for &p in &exponents {
            let in_lp = lp_consensus(&pi, p).map_err(err)?.contains(&zero);
            ensure(in_lp == zero_in_lp(&pi, p).map_err(err)?, || {
                format!("lp({p}) zero-membership on {pi}")
            })?;
        }
    }
    Ok(format!(
        "{count} profiles, p in {{1, 2, 3, 2.5}}, tolerance 1e-9"
    ))
}

fn anti_median_corollary(instances: &[Profile]) -> Check {
    for pi in instances {
        let fast = anti_median(pi).map_err(|e| e.to_string())?;
        let brute =
            oracle_argopt(pi, Objective::Status, Sense::Maximize).map_err(|e| e.to_string())?;
        ensure(
            fast.winners() == brute.winners() && fast.score() == brute.score(),
            || format!("anti-median differs on {pi}"),
        )?;
    }
    Ok(format!("{} profiles", instances.len()))
}

fn axiom_verdicts() -> Check {
    let mode = Mode::exhaustive(3, 3);
    let err = |e: hypercube_consensus::Error| e.to_string();
    let lp = |p: f64| ConsensusFunction::lp(Exponent::new(p).unwrap());
    let translation_holders = [
        ConsensusFunction::median(),
        ConsensusFunction::center(),
        lp(1.0),
        lp(2.0),
        lp(2.5),
        ConsensusFunction::anti_median(),
        ConsensusFunction::f1(),
        ConsensusFunction::f2(),
        ConsensusFunction::f3(),
    ];
    for f in &translation_holders {
        let v = check_translation(f, mode).map_err(err)?;
        ensure(v.result == Outcome::Holds, || {
            format!("(T) on {}: {v}", f.name())
        })?;
    }
    let med = ConsensusFunction::median();
    let am = ConsensusFunction::anti_median();
    let f2 = ConsensusFunction::f2();
    for v in [
        check_maj(&med, mode).map_err(err)?,
        check_min(&am, mode).map_err(err)?,
        check_rr(&med, mode).map_err(err)?,
        check_rr(&am, mode).map_err(err)?,
    ] {
        ensure(v.result == Outcome::Holds, || v.to_string())?;
    }
    let v = check_rr(&f2, mode).map_err(err)?;
    ensure(v.fails(), || format!("(RR) on f2 should fail: {v}"))?;
    let w = v.witness.as_ref().ok_or("no witness")?;
    ensure(w.replays(&f2, None).map_err(err)?, || {
        "f2 (RR) witness does not replay".into()
    })?;

    for n in 1..=3 {
        let v = check_intersection_condition(&f2, n).map_err(err)?;
        let s = v.summary.as_ref().ok_or("no summary")?;
        ensure(
            v.holds() && s.hypotheses_met && s.equals_f2 == Some(true),
            || format!("f2 at n = {n}: {v}"),
        )?;
        for f in [&med, &ConsensusFunction::f3()] {
            let v = check_intersection_condition(f, n).map_err(err)?;
            let s = v.summary.as_ref().ok_or("no summary")?;
            ensure(v.fails() && !s.hypotheses_met, || {
                format!("{} at n = {n}: {v}", f.name())
            })?;
        }
    }
    Ok("(T) x9, Maj/Min/RR, RR(f2) fails, intersection condition n = 1..3".into())
}

fn theorem1_self_diagnostic() -> Check {
    let bounds = Bounds::upto(3, 3);
    let err = |e: hypercube_consensus::Error| e.to_string();
    let v = verify_theorem1(
        &ConsensusFunction::median(),
        &ConsensusFunction::oracle(Objective::Status, Sense::Minimize),
        &Anchor::Zeros,
        bounds,
    )
    .map_err(err)?;
    ensure(
        v.result == Outcome::Holds && v.profiles_checked == 682,
        || v.to_string(),
    )?;
    let v = verify_theorem1(
        &ConsensusFunction::lp(Exponent::TWO),
        &ConsensusFunction::oracle(Objective::LpStatus(2.0), Sense::Minimize),
        &Anchor::Ones,
        bounds,
    )
    .map_err(err)?;
    ensure(
        v.result == Outcome::Holds && v.profiles_checked == 682,
        || v.to_string(),
    )?;
    Ok("med vs oracle at 0, lp(2) vs oracle at 1; 682 profiles each".into())
}

fn lp_cross_check(instances: &[Profile]) -> Check {
    let err = |e: hypercube_consensus::Error| e.to_string();
    for pi in instances {
        let lp1 = lp_consensus(pi, Exponent::ONE).map_err(err)?;
        let med = median(pi).map_err(err)?;
        ensure(
            lp1.winners() == med.winners() && lp1.score() == med.score(),
            || format!("lp(1) vs med on {pi}"),
        )?;
        let lp2 = lp_consensus(pi, Exponent::TWO).map_err(err)?;
        let mean = oracle_argopt(pi, Objective::LpStatus(2.0), Sense::Minimize).map_err(err)?;
        ensure(
            lp2.winners() == mean.winners()
                && lp2.score().as_exact().is_some()
                && lp2.score().as_exact() == mean.score().as_exact(),
            || format!("lp(2) vs oracle mean on {pi}"),
        )?;
    }
    Ok(format!("{} profiles, exact", instances.len()))
}

fn performance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED ^ 8);
    let ballots: Vec<Vertex> = (0..1_000_000)
        .map(|_| Vertex::from_low_bits(64, rng.gen()).unwrap())
        .collect();
    let big = Profile::new(ballots).unwrap();
    let start = Instant::now();
    let med = median(&big).map_err(|e| e.to_string())?;
    let t_med = start.elapsed();
    ensure(!med.winners().is_empty(), || "empty median".into())?;
    ensure(t_med < Duration::from_secs(2), || {
        format!("median took {t_med:?}")
    })?;

    let scan_profile = hypercube_consensus::lab::enumerate::random_profile_of(&mut rng, 20, 50);
    let start = Instant::now();
    let lp = lp_consensus(&scan_profile, Exponent::TWO).map_err(|e| e.to_string())?;
    let t_lp = start.elapsed();
    ensure(!lp.winners().is_empty(), || "empty lp".into())?;
    ensure(t_lp < Duration::from_secs(30), || {
        format!("lp scan took {t_lp:?}")
    })?;
    Ok(format!(
        "median n=64 k=1e6: {t_med:.2?} (< 2s); lp(2) scan n=20 k=50: {t_lp:.2?} (< 30s)"
    ))
}

fn cli_golden() -> Check {
    let cases: [(&str, &[&str], &str); 3] = [
        (
            "110\n101\n011\n",
            &["--function", "med"],
            "{\"winners\":[\"111\"],\"score\":3,\"function\":\"med\"}\n",
        ),
        (
            "110\n101\n011\n",
            &["--function", "am"],
            "{\"winners\":[\"000\"],\"score\":6,\"function\":\"am\"}\n",
        ),
        (
            "00\n11\n",
            &["--function", "lp", "--p", "2"],
            "{\"winners\":[\"01\",\"10\"],\"score\":2,\"function\":\"lp\",\"p\":2.0}\n",
        ),
    ];
    let dir =
        std::env::temp_dir().join(format!("hyperconsensus-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    for (i, (input, args, expected)) in cases.iter().enumerate() {
        let path = dir.join(format!("case{i}.txt"));
        std::fs::write(&path, input).map_err(|e| e.to_string())?;
        let out = Command::new(env!("CARGO_BIN_EXE_hyperconsensus"))
            .arg(&path)
            .args(*args)
            .args(["--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.success() && stdout == *expected, || {
            format!("case {i}: got {stdout:?}, status {:?}", out.status)
        })?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok("3 byte-identical JSON reports".into())
}

fn main() -> ExitCode {
    let instances = criterion_one_instances();
    let criteria: Vec<Criterion> = vec![
        (
            "1 oracle equivalence of the closed-form median",
            Box::new(|| oracle_equivalence(&instances)),
        ),
        (
            "2 cardinality law |Med| = |AM| = 2^Cs",
            Box::new(|| cardinality_law(&instances)),
        ),
        (
            "3 zero-membership lemmas for Cen, Med, lp",
            Box::new(lemma_suite),
        ),
        (
            "4 anti-median equals oracle status maximizer",
            Box::new(|| anti_median_corollary(&instances)),
        ),
        ("5 axiom verdicts", Box::new(axiom_verdicts)),
        (
            "6 translation-uniqueness self-diagnostic",
            Box::new(theorem1_self_diagnostic),
        ),
        (
            "7 lp(1) = med and lp(2) = oracle mean",
            Box::new(|| lp_cross_check(&instances)),
        ),
        ("8 performance", Box::new(performance)),
        ("9 CLI golden JSON", Box::new(cli_golden)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
