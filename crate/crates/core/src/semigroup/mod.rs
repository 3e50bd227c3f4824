//! Numerical semigroups, fractional ideals over them, and the degree-set
//! arithmetic both are built on.
//!
//! A numerical semigroup `S ⊆ ℕ` stands for the monomial curve ring
//! `k[[t^s : s ∈ S]]`, and a fractional ideal is a degree set `I` with
//! `S + I ⊆ I`, standing for the rank-one module spanned by `t^i, i ∈ I`.
//! Every module-theoretic operation used downstream reduces to membership
//! questions on these sets.

mod degree_set;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use degree_set::DegreeSet;

use crate::error::{argument, Error, Result};

/// An additively closed, cofinite subset of ℕ containing zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    carrier: DegreeSet,
}

impl NumericalSemigroup {
    /// The smallest additively closed set containing `0` and `gens`.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(argument("no generators given"));
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(argument(format!("generator {bad} is not positive")));
        }
        let gcd = gens.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NotNumericalSemigroup { gcd });
        }
        let smallest = *gens.iter().min().unwrap();
        // grow the membership table until `smallest` consecutive members appear;
        // from there on every integer is reachable by adding `smallest`
        let mut member = vec![true];
        let mut run = 1i64;
        while run < smallest {
            let d = member.len() as i64;
            let hit = gens.iter().any(|&g| g <= d && member[(d - g) as usize]);
            member.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let carrier = DegreeSet::canonical(0, member);
        Ok(NumericalSemigroup { carrier })
    }

    /// Validates a degree set as a numerical semigroup.
    pub fn from_degree_set(carrier: DegreeSet) -> Result<Self> {
        if carrier.min_element() != Some(0) {
            return Err(argument("a numerical semigroup has minimum 0"));
        }
        let stab = carrier.stabilization().unwrap();
        let members: Vec<i64> = carrier.members_below_stab().collect();
        for &a in &members {
            for &b in &members {
                if a + b < stab && !carrier.contains(a + b) {
                    return Err(argument(format!("not additively closed: {a} + {b}")));
                }
            }
        }
        Ok(NumericalSemigroup { carrier })
    }

    /// ℕ itself, the ring `k[[t]]`.
    pub fn naturals() -> Self {
        NumericalSemigroup { carrier: DegreeSet::naturals() }
    }

    pub fn carrier(&self) -> &DegreeSet {
        &self.carrier
    }

    pub fn contains(&self, d: i64) -> bool {
        self.carrier.contains(d)
    }

    pub fn conductor(&self) -> i64 {
        self.carrier.stabilization().unwrap()
    }

    /// Largest gap, `-1` for ℕ. This is also the a-invariant of the
    /// semigroup ring.
    pub fn frobenius(&self) -> i64 {
        self.conductor() - 1
    }

    pub fn a_invariant(&self) -> i64 {
        self.frobenius()
    }

    pub fn gaps(&self) -> Vec<i64> {
        self.carrier.holes()
    }

    /// Number of gaps, the δ-invariant of the curve.
    pub fn genus(&self) -> usize {
        self.gaps().len()
    }

    pub fn is_full(&self) -> bool {
        self.conductor() == 0
    }

    /// `z ∈ S ⇔ F - z ∉ S` for all integers `z`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|z| self.contains(z) != self.contains(f - z))
    }

    /// Positive members that are not sums of two positive members.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let multiplicity = self.multiplicity();
        let positives: Vec<i64> = (1..=self.conductor() + multiplicity).filter(|&d| self.contains(d)).collect();
        positives
            .iter()
            .copied()
            .filter(|&d| !positives.iter().any(|&a| a < d && self.contains(d - a) && d - a > 0))
            .collect()
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> i64 {
        self.carrier.least_positive().unwrap()
    }

    /// `S \ {0}` as an ideal of `S`.
    pub fn maximal_ideal(&self) -> FractionalIdeal {
        FractionalIdeal { semigroup: self.clone(), degrees: self.carrier.without(0) }
    }

    /// `S` as an ideal over itself.
    pub fn as_ideal(&self) -> FractionalIdeal {
        FractionalIdeal { semigroup: self.clone(), degrees: self.carrier.clone() }
    }

    pub fn is_subsemigroup_of(&self, other: &NumericalSemigroup) -> bool {
        self.carrier.is_subset(&other.carrier)
    }

    /// Smallest numerical semigroup containing `self` and `extra`.
    pub fn adjoin(&self, extra: &[i64]) -> Result<Self> {
        let mut gens = self.minimal_generators();
        gens.extend_from_slice(extra);
        if gens.is_empty() {
            return Ok(self.clone());
        }
        NumericalSemigroup::from_generators(&gens)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.minimal_generators();
        write!(f, "<")?;
        for (k, g) in gens.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.minimal_generators().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let gens = Vec::<i64>::deserialize(deserializer)?;
        NumericalSemigroup::from_generators(&gens).map_err(serde::de::Error::custom)
    }
}

/// A nonempty degree set `I` with `S + I ⊆ I`, kept at its natural
/// embedding degrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FractionalIdeal {
    semigroup: NumericalSemigroup,
    degrees: DegreeSet,
}

impl FractionalIdeal {
    pub fn new(semigroup: &NumericalSemigroup, degrees: DegreeSet) -> Result<Self> {
        if degrees.is_empty() {
            return Err(argument("a fractional ideal is nonempty"));
        }
        let stab = degrees.stabilization().unwrap();
        let gens = semigroup.minimal_generators();
        for d in degrees.members_below_stab() {
            if let Some(s) = gens.iter().find(|&&s| !degrees.contains(d + s)) {
                return Err(argument(format!("not an ideal: {d} + {s} missing (stabilization {stab})")));
            }
        }
        Ok(FractionalIdeal { semigroup: semigroup.clone(), degrees })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn degrees(&self) -> &DegreeSet {
        &self.degrees
    }

    pub fn min_element(&self) -> i64 {
        self.degrees.min_element().unwrap()
    }

    /// Translate to minimum zero; returns the ideal and the shift removed.
    pub fn shift_normalize(&self) -> (FractionalIdeal, i64) {
        let (degrees, shift) = self.degrees.normalized();
        (FractionalIdeal { semigroup: self.semigroup.clone(), degrees }, shift)
    }

    pub fn shifted(&self, by: i64) -> FractionalIdeal {
        FractionalIdeal { semigroup: self.semigroup.clone(), degrees: self.degrees.shift(by) }
    }

    /// Isomorphic as modules: equal after translation.
    pub fn is_isomorphic(&self, other: &FractionalIdeal) -> bool {
        self.shift_normalize().0.degrees == other.shift_normalize().0.degrees
    }
}

impl fmt::Debug for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.degrees, self.semigroup)
    }
}

fn same_semigroup(i: &FractionalIdeal, j: &FractionalIdeal) -> Result<()> {
    if i.semigroup != j.semigroup {
        return Err(argument("ideals live over different semigroups"));
    }
    Ok(())
}

/// `(I : J) = {d : d + J ⊆ I}`, i.e. the degrees of `Hom(J, I)`.
pub fn ideal_quotient(i: &FractionalIdeal, j: &FractionalIdeal) -> Result<DegreeSet> {
    same_semigroup(i, j)?;
    i.degrees.quotient(&j.degrees)
}

/// `(I : I)`, the endomorphism ring of `I`, as a semigroup containing `S`.
pub fn end_ring(i: &FractionalIdeal) -> Result<NumericalSemigroup> {
    let q = i.degrees.quotient(&i.degrees)?;
    let ring = NumericalSemigroup::from_degree_set(q)
        .map_err(|e| Error::InvariantViolation(format!("(I : I) is not a semigroup: {e}")))?;
    if !i.semigroup.is_subsemigroup_of(&ring) {
        return Err(Error::InvariantViolation("(I : I) does not contain S".into()));
    }
    Ok(ring)
}

/// `I + J`, spanned by the monomials of both.
pub fn ideal_sum(i: &FractionalIdeal, j: &FractionalIdeal) -> Result<FractionalIdeal> {
    same_semigroup(i, j)?;
    Ok(FractionalIdeal { semigroup: i.semigroup.clone(), degrees: i.degrees.union(&j.degrees) })
}

/// `I · J`, spanned by products of monomials.
pub fn ideal_product(i: &FractionalIdeal, j: &FractionalIdeal) -> Result<FractionalIdeal> {
    same_semigroup(i, j)?;
    Ok(FractionalIdeal { semigroup: i.semigroup.clone(), degrees: i.degrees.minkowski_sum(&j.degrees) })
}

pub fn minkowski_sum(a: &DegreeSet, b: &DegreeSet) -> DegreeSet {
    a.minkowski_sum(b)
}

/// Length of `J / I` for `I ⊆ J`.
pub fn length_between(i: &DegreeSet, j: &DegreeSet) -> Result<usize> {
    if !i.is_subset(j) {
        return Err(argument("length_between needs nested sets"));
    }
    Ok(i.count_missing_from(j))
}
