//! Normalization chains `S = R_0 ⊊ R_1 ⊊ … ⊊ R_n = ℕ`, where each ring is
//! the endomorphism ring of the maximal ideal of the previous one.
//!
//! For a numerical semigroup ring the curve is a domain, so `End(m)` never
//! splits into factors and the chain is unique.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{end_ring, FractionalIdeal, NumericalSemigroup};

#[derive(Debug, Clone, Serialize)]
pub struct LeuschkeChain {
    pub base: NumericalSemigroup,
    pub rings: Vec<NumericalSemigroup>,
    #[serde(skip)]
    pub as_ideals: Vec<FractionalIdeal>,
}

impl LeuschkeChain {
    /// Number of proper extensions in the chain.
    pub fn length(&self) -> usize {
        self.rings.len() - 1
    }

    /// δ-invariant of the base ring.
    pub fn delta(&self) -> usize {
        self.base.genus()
    }

    pub fn frobenius_sequence(&self) -> Vec<i64> {
        self.rings.iter().map(NumericalSemigroup::frobenius).collect()
    }
}

pub fn leuschke_chain(base: &NumericalSemigroup) -> Result<LeuschkeChain> {
    let limit = base.genus() + 1;
    let mut rings = vec![base.clone()];
    while !rings.last().unwrap().is_full() {
        if rings.len() > limit {
            return Err(Error::InvariantViolation(format!(
                "normalization chain of {base} did not reach ℕ within {limit} steps"
            )));
        }
        let current = rings.last().unwrap();
        let next = end_ring(&current.maximal_ideal())?;
        if next == *current {
            return Err(Error::InvariantViolation(format!("End(m) of {current} is not a proper extension")));
        }
        rings.push(next);
    }
    let as_ideals =
        rings.iter().map(|ring| FractionalIdeal::new(base, ring.carrier().clone())).collect::<Result<Vec<_>>>()?;
    Ok(LeuschkeChain { base: base.clone(), rings, as_ideals })
}

/// For every step `T ⊊ T'` with `T` symmetric, whether the Frobenius number
/// strictly drops. Steps whose smaller ring is not symmetric are skipped.
pub fn a_invariant_chain_check(chain: &LeuschkeChain) -> Vec<bool> {
    chain
        .rings
        .windows(2)
        .filter(|pair| pair[0].is_symmetric() && pair[0] != pair[1])
        .map(|pair| pair[1].frobenius() < pair[0].frobenius())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::DegreeSet;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    /// `(m : m)` by checking every candidate degree against the window.
    fn brute_end_of_max(s: &NumericalSemigroup) -> NumericalSemigroup {
        let c = s.conductor();
        let m = |d: i64| d > 0 && s.contains(d);
        let members: Vec<i64> = (0..=c + 1).filter(|&d| (1..=2 * c + 2).all(|x| !m(x) || m(x + d))).collect();
        NumericalSemigroup::from_degree_set(DegreeSet::from_members(members, c + 1)).unwrap()
    }

    #[test]
    fn e6_chain() {
        let chain = leuschke_chain(&sg(&[3, 4])).unwrap();
        assert_eq!(chain.rings, vec![sg(&[3, 4]), sg(&[3, 4, 5]), NumericalSemigroup::naturals()]);
        assert_eq!(chain.delta(), 3);
    }

    #[test]
    fn e8_chain_has_four_rings() {
        let s = sg(&[3, 5]);
        let chain = leuschke_chain(&s).unwrap();
        let mut brute = vec![s.clone()];
        while !brute.last().unwrap().is_full() {
            let next = brute_end_of_max(brute.last().unwrap());
            brute.push(next);
        }
        assert_eq!(chain.rings, brute);
        assert_eq!(chain.rings, vec![sg(&[3, 5]), sg(&[3, 5, 7]), sg(&[2, 3]), NumericalSemigroup::naturals()]);
        assert!(chain.as_ideals.iter().all(|i| i.min_element() == 0));
    }

    #[test]
    fn regular_ring_chain_is_trivial() {
        let chain = leuschke_chain(&NumericalSemigroup::naturals()).unwrap();
        assert_eq!(chain.rings.len(), 1);
        assert!(a_invariant_chain_check(&chain).is_empty());
    }

    #[test]
    fn a_family_chains() {
        for k in 1..=6 {
            let chain = leuschke_chain(&sg(&[2, 2 * k + 1])).unwrap();
            let mut expected: Vec<_> = (1..=k).rev().map(|j| sg(&[2, 2 * j + 1])).collect();
            expected.push(NumericalSemigroup::naturals());
            assert_eq!(chain.rings, expected, "k = {k}");
        }
    }

    #[test]
    fn frobenius_drop_on_chains() {
        let cusp = leuschke_chain(&sg(&[2, 3])).unwrap();
        assert_eq!(a_invariant_chain_check(&cusp), vec![true]);
        let e6 = leuschke_chain(&sg(&[3, 4])).unwrap();
        assert_eq!(e6.frobenius_sequence(), vec![5, 2, -1]);
        assert_eq!(a_invariant_chain_check(&e6), vec![true]);
    }
}
