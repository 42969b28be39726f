//! The axiom checks.
//!
//! Each check walks the profiles of a [`Mode`] in order and stops at the
//! first violation, which is returned as a [`Witness`]. Exhaustive runs
//! report `holds`; randomized runs that find nothing report
//! `holds-within-trials`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::consensus::{condorcet_ties, maj, min_vertex};
use crate::cube::{check_scan, lexicographic, Vertex, DEFAULT_SCAN_LIMIT};
use crate::error::Result;
use crate::lab::enumerate::{profiles_within, random_profile_of, random_vertex, Bounds, Mode};
use crate::lab::function::{ConsensusFunction, Winners};
use crate::lab::verdict::{Axiom, AxiomVerdict, IntersectionSummary, Outcome, Witness};
use crate::profile::Profile;

/// Shifts tried per profile in randomized translation checks.
const RANDOM_SHIFTS: usize = 8;

/// The vertex two functions are compared at, resolved per dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Anchor {
    /// **0** of every dimension.
    Zeros,
    /// **1** of every dimension.
    Ones,
    /// One fixed vertex; only profiles of its dimension are considered.
    At(Vertex),
}

impl Anchor {
    pub fn resolve(&self, n: usize) -> Option<Vertex> {
        match self {
            Anchor::Zeros => Vertex::zeros(n).ok(),
            Anchor::Ones => Vertex::ones(n).ok(),
            Anchor::At(v) => (v.dimension() == n).then(|| v.clone()),
        }
    }
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Anchor::Zeros => f.write_str("zeros"),
            Anchor::Ones => f.write_str("ones"),
            Anchor::At(v) => write!(f, "{v}"),
        }
    }
}

fn shifts(mode: &Mode, n: usize, trial: u64) -> Vec<Vertex> {
    match mode {
        Mode::Exhaustive(_) => lexicographic(n).skip(1).collect(),
        Mode::Randomized { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial).rotate_left(17));
            (0..RANDOM_SHIFTS)
                .map(|_| random_vertex(&mut rng, n))
                .collect()
        }
    }
}

fn translation_witness(
    f: &ConsensusFunction,
    profile: &Profile,
    winners: &Winners,
    shift: &Vertex,
) -> Result<Option<Witness>> {
    let moved = profile.translate(shift)?;
    let moved_winners = f.evaluate(&moved)?;
    if let Some(u) = winners
        .iter()
        .find(|u| !moved_winners.contains(&u.xor_unchecked(shift)))
    {
        return Ok(Some(Witness::Translation {
            profile: profile.clone(),
            shift: shift.clone(),
            vertex: u.clone(),
            winners: winners.clone(),
            shifted_winners: moved_winners,
        }));
    }
    // The reverse inclusion failing is a forward violation seen from π ⊕ v.
    if let Some(y) = moved_winners
        .iter()
        .find(|y| !winners.contains(&y.xor_unchecked(shift)))
    {
        return Ok(Some(Witness::Translation {
            profile: moved,
            shift: shift.clone(),
            vertex: y.clone(),
            winners: moved_winners.clone(),
            shifted_winners: winners.clone(),
        }));
    }
    Ok(None)
}

/// (T): `u ∈ f(π)` implies `u ⊕ v ∈ f(π ⊕ v)`.
pub fn check_translation(f: &ConsensusFunction, mode: Mode) -> Result<AxiomVerdict> {
    let mut checked = 0;
    for profile in mode.profiles()? {
        checked += 1;
        let winners = f.evaluate(&profile)?;
        for shift in shifts(&mode, profile.dimension(), checked) {
            if let Some(w) = translation_witness(f, &profile, &winners, &shift)? {
                return Ok(AxiomVerdict::finish(
                    Axiom::Translation,
                    f.name(),
                    mode,
                    Some(w),
                    checked,
                ));
            }
        }
    }
    Ok(AxiomVerdict::finish(
        Axiom::Translation,
        f.name(),
        mode,
        None,
        checked,
    ))
}

/// `x0 ∈ f(π)` iff `x0 ∈ g(π)` on every visited profile.
pub fn check_agreement(
    f: &ConsensusFunction,
    g: &ConsensusFunction,
    anchor: &Anchor,
    mode: Mode,
) -> Result<AxiomVerdict> {
    let name = format!("{} vs {}", f.name(), g.name());
    let axiom = Axiom::Agreement(anchor.to_string());
    let mut checked = 0;
    for profile in mode.profiles()? {
        let Some(x0) = anchor.resolve(profile.dimension()) else {
            continue;
        };
        checked += 1;
        let in_first = f.evaluate(&profile)?.contains(&x0);
        let in_second = g.evaluate(&profile)?.contains(&x0);
        if in_first != in_second {
            let w = Witness::Agreement {
                profile,
                vertex: x0,
                in_first,
                in_second,
            };
            return Ok(AxiomVerdict::finish(axiom, name, mode, Some(w), checked));
        }
    }
    Ok(AxiomVerdict::finish(axiom, name, mode, None, checked))
}

/// Two functions satisfying (T) that agree at the anchor must coincide.
///
/// The hypotheses are checked first over the same bounds; if one fails the
/// verdict is `inapplicable` and carries that check's witness. A mismatch
/// after the hypotheses hold means one of the two implementations is wrong.
pub fn verify_theorem1(
    f: &ConsensusFunction,
    g: &ConsensusFunction,
    anchor: &Anchor,
    bounds: Bounds,
) -> Result<AxiomVerdict> {
    let mode = Mode::Exhaustive(bounds);
    let name = format!("{} vs {}", f.name(), g.name());
    for pre in [
        check_translation(f, mode)?,
        check_translation(g, mode)?,
        check_agreement(f, g, anchor, mode)?,
    ] {
        if pre.fails() {
            let mut v = AxiomVerdict::finish(
                Axiom::Uniqueness,
                name,
                mode,
                pre.witness,
                pre.profiles_checked,
            );
            v.result = Outcome::Inapplicable;
            return Ok(v);
        }
    }
    let mut checked = 0;
    for profile in profiles_within(bounds) {
        checked += 1;
        let a = f.evaluate(&profile)?;
        let b = g.evaluate(&profile)?;
        if a != b {
            let w = Witness::Mismatch {
                profile,
                first_winners: a,
                second_winners: b,
            };
            return Ok(AxiomVerdict::finish(
                Axiom::Uniqueness,
                name,
                mode,
                Some(w),
                checked,
            ));
        }
    }
    Ok(AxiomVerdict::finish(
        Axiom::Uniqueness,
        name,
        mode,
        None,
        checked,
    ))
}

fn consistency_witness(
    f: &ConsensusFunction,
    first: &Profile,
    a: &Winners,
    second: &Profile,
    b: &Winners,
) -> Result<Option<Witness>> {
    let both: Winners = a.intersection(b).cloned().collect();
    if both.is_empty() {
        return Ok(None);
    }
    let combined = f.evaluate(&first.concat(second)?)?;
    Ok((combined != both).then(|| Witness::Consistency {
        first: first.clone(),
        second: second.clone(),
        first_winners: a.clone(),
        second_winners: b.clone(),
        combined_winners: combined,
    }))
}

/// (C): `f(π1) ∩ f(π2) ≠ ∅` implies `f(π1 π2) = f(π1) ∩ f(π2)`.
///
/// Exhaustive mode visits every ordered pair of profiles of equal dimension
/// within the bounds; `profiles_checked` counts pairs.
pub fn check_consistency(f: &ConsensusFunction, mode: Mode) -> Result<AxiomVerdict> {
    let mut checked = 0;
    let finish = |w, checked| AxiomVerdict::finish(Axiom::Consistency, f.name(), mode, w, checked);
    match mode {
        Mode::Exhaustive(bounds) => {
            bounds.validate()?;
            for n in bounds.dimensions() {
                let table: Vec<(Profile, Winners)> =
                    profiles_within(Bounds::exact(n, bounds.max_k))
                        .map(|p| f.evaluate(&p).map(|w| (p, w)))
                        .collect::<Result<_>>()?;
                for (first, a) in &table {
                    for (second, b) in &table {
                        checked += 1;
                        if let Some(w) = consistency_witness(f, first, a, second, b)? {
                            return Ok(finish(Some(w), checked));
                        }
                    }
                }
            }
        }
        Mode::Randomized {
            bounds,
            trials,
            seed,
        } => {
            bounds.validate()?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let n = rng.gen_range(bounds.min_n..=bounds.max_n);
                let k1 = rng.gen_range(1..=bounds.max_k);
                let k2 = rng.gen_range(1..=bounds.max_k);
                let first = random_profile_of(&mut rng, n, k1);
                let second = random_profile_of(&mut rng, n, k2);
                checked += 1;
                let a = f.evaluate(&first)?;
                let b = f.evaluate(&second)?;
                if let Some(w) = consistency_witness(f, &first, &a, &second, &b)? {
                    return Ok(finish(Some(w), checked));
                }
            }
        }
    }
    Ok(finish(None, checked))
}

fn check_membership(
    f: &ConsensusFunction,
    mode: Mode,
    axiom: Axiom,
    required: fn(&Profile) -> Vertex,
) -> Result<AxiomVerdict> {
    let mut checked = 0;
    for profile in mode.profiles()? {
        checked += 1;
        let winners = f.evaluate(&profile)?;
        let need = required(&profile);
        if !winners.contains(&need) {
            let w = match axiom {
                Axiom::Majority => Witness::Majority {
                    profile,
                    required: need,
                    winners,
                },
                _ => Witness::Minority {
                    profile,
                    required: need,
                    winners,
                },
            };
            return Ok(AxiomVerdict::finish(
                axiom,
                f.name(),
                mode,
                Some(w),
                checked,
            ));
        }
    }
    Ok(AxiomVerdict::finish(axiom, f.name(), mode, None, checked))
}

/// (Maj): `Maj(π) ∈ f(π)`.
pub fn check_maj(f: &ConsensusFunction, mode: Mode) -> Result<AxiomVerdict> {
    check_membership(f, mode, Axiom::Majority, maj)
}

/// (Min): `Min(π) ∈ f(π)`.
pub fn check_min(f: &ConsensusFunction, mode: Mode) -> Result<AxiomVerdict> {
    check_membership(f, mode, Axiom::Minority, min_vertex)
}

/// (RR): `|f(π)| ≤ 2^Cs(π)`.
pub fn check_rr(f: &ConsensusFunction, mode: Mode) -> Result<AxiomVerdict> {
    let mut checked = 0;
    for profile in mode.profiles()? {
        checked += 1;
        let winners = f.evaluate(&profile)?.len();
        let cs = condorcet_ties(&profile).score();
        if cs < 64 && winners as u128 > 1u128 << cs {
            let w = Witness::RestrictedRange {
                profile,
                winners,
                condorcet_score: cs,
            };
            return Ok(AxiomVerdict::finish(
                Axiom::RestrictedRange,
                f.name(),
                mode,
                Some(w),
                checked,
            ));
        }
    }
    Ok(AxiomVerdict::finish(
        Axiom::RestrictedRange,
        f.name(),
        mode,
        None,
        checked,
    ))
}

/// `⋂_x f((x))` over all vertices `x` of `Q_n`.
pub fn single_vertex_intersection(f: &ConsensusFunction, n: usize) -> Result<Winners> {
    check_scan(n, DEFAULT_SCAN_LIMIT)?;
    let mut acc: Option<Winners> = None;
    for x in lexicographic(n) {
        let w = f.evaluate(&Profile::single(x))?;
        acc = Some(match acc {
            None => w,
            Some(a) => a.intersection(&w).cloned().collect(),
        });
        if acc.as_ref().is_some_and(|a| a.is_empty()) {
            break;
        }
    }
    Ok(acc.unwrap_or_default())
}

/// Intersection condition at dimension `n`, with (T) and (C) checked
/// exhaustively for profiles of length at most 2.
pub fn check_intersection_condition(f: &ConsensusFunction, n: usize) -> Result<AxiomVerdict> {
    check_intersection_condition_with(f, n, Mode::Exhaustive(Bounds::exact(n, 2)))
}

/// Evaluates `f` on the `2^n` single-vertex profiles and intersects the
/// results. The summary records whether (T) and (C) also hold under
/// `mode`, and when all three hypotheses do, whether `f` returns every
/// vertex on each profile of `mode`.
pub fn check_intersection_condition_with(
    f: &ConsensusFunction,
    n: usize,
    mode: Mode,
) -> Result<AxiomVerdict> {
    let intersection = single_vertex_intersection(f, n)?;
    let translation = check_translation(f, mode)?.result;
    let consistency = check_consistency(f, mode)?.result;
    let ok = |o: Outcome| matches!(o, Outcome::Holds | Outcome::HoldsWithinTrials);
    let hypotheses_met = !intersection.is_empty() && ok(translation) && ok(consistency);
    let equals_f2 = if hypotheses_met {
        let mut all = true;
        for profile in mode.profiles()? {
            let full = 1usize << profile.dimension();
            if f.evaluate(&profile)?.len() != full {
                all = false;
                break;
            }
        }
        Some(all)
    } else {
        None
    };
    let witness = intersection
        .is_empty()
        .then_some(Witness::EmptyIntersection { dimension: n });
    let mut verdict = AxiomVerdict::finish(
        Axiom::IntersectionCondition,
        f.name(),
        Mode::Exhaustive(Bounds::exact(n, 1)),
        witness,
        1 << n,
    );
    verdict.summary = Some(IntersectionSummary {
        dimension: n,
        intersection,
        translation,
        consistency,
        hypotheses_met,
        equals_f2,
    });
    Ok(verdict)
}
