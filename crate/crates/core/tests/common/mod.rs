#![allow(dead_code)]

use gldim_core::{DegreeSet, FractionalIdeal, NumericalSemigroup};
use rand::Rng;

/// Members of the semigroup generated by `gens`, up to `bound`, by dynamic
/// programming.
pub fn brute_members(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for d in 1..=bound {
        member[d as usize] = gens.iter().any(|&g| g <= d && member[(d - g) as usize]);
    }
    member
}

/// All numerical semigroups of genus at most `max_genus`, via the tree in
/// which the children of `S` remove one minimal generator above the
/// Frobenius number.
pub fn semigroups_up_to_genus(max_genus: usize) -> Vec<NumericalSemigroup> {
    let mut out = vec![NumericalSemigroup::naturals()];
    let mut frontier = out.clone();
    for _ in 0..max_genus {
        let mut next = Vec::new();
        for s in &frontier {
            for g in s.minimal_generators().into_iter().filter(|&g| g > s.frobenius()) {
                let carrier = s.carrier().without(g);
                next.push(NumericalSemigroup::from_degree_set(carrier).unwrap());
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn random_semigroup<R: Rng>(rng: &mut R, max_gen: i64) -> NumericalSemigroup {
    loop {
        let k = rng.gen_range(1..=3);
        let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=max_gen)).collect();
        if let Ok(s) = NumericalSemigroup::from_generators(&gens) {
            return s;
        }
    }
}

/// The ideal `⋃ (g + S)` over a few random generators in `0..=spread`.
pub fn random_ideal<R: Rng>(rng: &mut R, s: &NumericalSemigroup, spread: i64) -> FractionalIdeal {
    let k = rng.gen_range(1..=3);
    let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(0..=spread)).collect();
    let lo = *gens.iter().min().unwrap();
    let stab = s.conductor() + gens.iter().max().unwrap();
    let members = (lo..stab).filter(|&d| gens.iter().any(|&g| d >= g && s.contains(d - g)));
    FractionalIdeal::new(s, DegreeSet::from_members(members, stab)).unwrap()
}

/// Random ideals with pairwise non-isomorphic members.
pub fn random_basic_list<R: Rng>(rng: &mut R, s: &NumericalSemigroup, len: usize) -> Vec<FractionalIdeal> {
    let mut out: Vec<FractionalIdeal> = Vec::new();
    for _ in 0..4 * len {
        if out.len() == len {
            break;
        }
        let cand = random_ideal(rng, s, s.conductor() + 2);
        if out.iter().all(|i| !i.is_isomorphic(&cand)) {
            out.push(cand);
        }
    }
    out
}
