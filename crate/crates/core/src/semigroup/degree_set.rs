use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{argument, Result};

/// A bounded-below subset of the integers that contains every integer from
/// some point on.
///
/// Stored as an explicit membership window `[min, stab)` plus the threshold
/// `stab` above which every integer is a member. The representation is kept
/// canonical: `min` is a member, and `stab` is the least integer `T` such
/// that all `d >= T` are members. The empty set is flagged separately.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeSet {
    empty: bool,
    min: i64,
    stab: i64,
    window: Vec<bool>,
}

impl DegreeSet {
    pub fn empty() -> Self {
        DegreeSet { empty: true, min: 0, stab: 0, window: Vec::new() }
    }

    /// `{d : d >= start}`.
    pub fn from_start(start: i64) -> Self {
        DegreeSet { empty: false, min: start, stab: start, window: Vec::new() }
    }

    /// All non-negative integers.
    pub fn naturals() -> Self {
        Self::from_start(0)
    }

    /// The set containing every listed degree below `stab` and every integer
    /// `>= stab`. Listed degrees at or above `stab` are ignored.
    pub fn from_members<I: IntoIterator<Item = i64>>(members: I, stab: i64) -> Self {
        let below: Vec<i64> = members.into_iter().filter(|&d| d < stab).collect();
        let start = below.iter().copied().min().unwrap_or(stab);
        let mut window = vec![false; (stab - start) as usize];
        for d in below {
            window[(d - start) as usize] = true;
        }
        Self::canonical(start, window)
    }

    /// Builds the set from a window starting at `start`; every integer at or
    /// after `start + window.len()` is a member.
    pub(crate) fn canonical(start: i64, mut window: Vec<bool>) -> Self {
        while window.last() == Some(&true) {
            window.pop();
        }
        let stab = start + window.len() as i64;
        match window.iter().position(|&b| b) {
            Some(first) => {
                window.drain(..first);
                DegreeSet { empty: false, min: start + first as i64, stab, window }
            }
            None => DegreeSet::from_start(stab),
        }
    }

    /// Membership predicate evaluated on `[start, stab)`, everything at or
    /// above `stab` included.
    pub fn from_predicate(start: i64, stab: i64, pred: impl Fn(i64) -> bool) -> Self {
        let stab = stab.max(start);
        let window = (start..stab).map(pred).collect();
        Self::canonical(start, window)
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn min_element(&self) -> Option<i64> {
        (!self.empty).then_some(self.min)
    }

    pub fn stabilization(&self) -> Option<i64> {
        (!self.empty).then_some(self.stab)
    }

    pub fn contains(&self, d: i64) -> bool {
        if self.empty || d < self.min {
            return false;
        }
        if d >= self.stab {
            return true;
        }
        self.window[(d - self.min) as usize]
    }

    /// Members strictly below the stabilization, in increasing order.
    pub fn members_below_stab(&self) -> impl Iterator<Item = i64> + '_ {
        let min = self.min;
        self.window.iter().enumerate().filter(|(_, &b)| b).map(move |(k, _)| min + k as i64)
    }

    /// Members of the set in `[lo, hi)`.
    pub fn members_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo..hi).filter(move |&d| self.contains(d))
    }

    /// Integers in `[min, stab)` that are not members.
    pub fn holes(&self) -> Vec<i64> {
        if self.empty {
            return Vec::new();
        }
        (self.min..self.stab).filter(|&d| !self.contains(d)).collect()
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.empty {
            return self.clone();
        }
        DegreeSet { empty: false, min: self.min + by, stab: self.stab + by, window: self.window.clone() }
    }

    /// Removes a single degree.
    pub fn without(&self, d: i64) -> Self {
        if !self.contains(d) {
            return self.clone();
        }
        let start = self.min;
        let stab = self.stab.max(d + 1);
        Self::from_predicate(start, stab, |x| x != d && self.contains(x))
    }

    pub fn union(&self, other: &Self) -> Self {
        if self.empty {
            return other.clone();
        }
        if other.empty {
            return self.clone();
        }
        let start = self.min.min(other.min);
        Self::from_predicate(start, self.stab.min(other.stab), |d| self.contains(d) || other.contains(d))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        if self.empty || other.empty {
            return Self::empty();
        }
        let start = self.min.max(other.min);
        let stab = self.stab.max(other.stab);
        Self::from_predicate(start, stab, |d| self.contains(d) && other.contains(d))
    }

    /// `{a + b : a in self, b in other}`.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        if self.empty || other.empty {
            return Self::empty();
        }
        let start = self.min + other.min;
        // every d >= stab1 + min2 is (d - min2) + min2 with d - min2 >= stab1
        let stab = (self.stab + other.min).min(other.stab + self.min);
        let mut window = vec![false; (stab - start).max(0) as usize];
        for a in self.members_in(self.min, stab - other.min) {
            for b in other.members_in(other.min, stab - a) {
                window[(a + b - start) as usize] = true;
            }
        }
        Self::canonical(start, window)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.empty {
            return true;
        }
        if other.empty {
            return false;
        }
        if self.stab < other.stab {
            // self contains [self.stab, other.stab) but other may not
            if (self.stab..other.stab).any(|d| !other.contains(d)) {
                return false;
            }
        }
        self.members_in(self.min, self.stab.max(other.stab)).all(|d| other.contains(d))
    }

    /// `{d : d + other ⊆ self}`, the colon quotient `(self : other)`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        if other.empty {
            return Err(argument("quotient by the empty set is not bounded below"));
        }
        if self.empty {
            return Ok(Self::empty());
        }
        let start = self.min - other.min;
        let stab = self.stab - other.min;
        Ok(Self::from_predicate(start, stab, |d| {
            other.members_in(other.min, self.stab - d).all(|b| self.contains(d + b))
        }))
    }

    /// Members of `self` missing from `other`. Finite whenever `other` is
    /// nonempty.
    pub fn finite_difference(&self, other: &Self) -> Vec<i64> {
        if self.empty {
            return Vec::new();
        }
        assert!(!other.empty, "difference with the empty set is infinite");
        self.members_in(self.min, self.stab.max(other.stab)).filter(|&d| !other.contains(d)).collect()
    }

    /// Number of members of `other` not in `self`, assuming `self ⊆ other`.
    pub fn count_missing_from(&self, other: &Self) -> usize {
        other.finite_difference(self).len()
    }

    /// Returns the set translated so that its minimum is zero, and the
    /// translation that was removed.
    pub fn normalized(&self) -> (Self, i64) {
        if self.empty {
            return (self.clone(), 0);
        }
        (self.shift(-self.min), self.min)
    }

    /// Smallest member strictly greater than zero.
    pub fn least_positive(&self) -> Option<i64> {
        if self.empty {
            return None;
        }
        let from = self.min.max(1);
        (from..=from.max(self.stab)).find(|&d| self.contains(d))
    }
}

impl fmt::Debug for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for d in self.members_below_stab() {
            write!(f, "{d}, ")?;
        }
        write!(f, "{}, ...}}", self.stab)
    }
}

#[derive(Serialize, Deserialize)]
struct DegreeSetJson {
    min: i64,
    stab: i64,
    members: Vec<i64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    empty: bool,
}

impl Serialize for DegreeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DegreeSetJson {
            min: self.min,
            stab: self.stab,
            members: self.members_below_stab().collect(),
            empty: self.empty,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DegreeSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DegreeSetJson::deserialize(deserializer)?;
        if raw.empty {
            return Ok(DegreeSet::empty());
        }
        if raw.stab < raw.min {
            return Err(serde::de::Error::custom("stab below min"));
        }
        if raw.members.iter().any(|&d| d < raw.min) {
            return Err(serde::de::Error::custom("member below min"));
        }
        let set = DegreeSet::from_members(raw.members, raw.stab);
        if set.min != raw.min {
            return Err(serde::de::Error::custom("min is not a member"));
        }
        Ok(set)
    }
}
