//! Endomorphism rings `A = End_R(⊕ M_i)` of sums of fractional ideals,
//! written as matrices of Hom degree sets.
//!
//! Entry `(i, j)` of the grid is `Hom(M_j, M_i) = (I_i : I_j)`. The
//! projective `P_i = e_i A` is row `i`, and a map `P_j → P_i` is left
//! multiplication by an element of entry `(i, j)`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{argument, Error, Result};
use crate::resolve::{Extent, MonomialAlgebra};
use crate::semigroup::{ideal_quotient, DegreeSet, FractionalIdeal, NumericalSemigroup};

#[derive(Debug, Clone)]
pub struct EndOrder {
    semigroup: NumericalSemigroup,
    ideals: Vec<FractionalIdeal>,
    hom: Vec<Vec<DegreeSet>>,
}

/// An `n × n` grid of degree sets, used for the radical and its square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalGrid {
    pub entries: Vec<Vec<DegreeSet>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuiverPresentation {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl QuiverPresentation {
    /// `counts[i][j]` is the number of arrows `i → j`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let mut counts = vec![vec![0; self.vertices]; self.vertices];
        for a in &self.arrows {
            counts[a.source][a.target] += 1;
        }
        counts
    }

    /// Graphviz rendering with 1-based vertex labels and `t^d` edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in 0..self.vertices {
            let _ = writeln!(out, "  {} [label=\"{}\"];", v + 1, v + 1);
        }
        for a in &self.arrows {
            let _ = writeln!(out, "  {} -> {} [label=\"t^{}\"];", a.source + 1, a.target + 1, a.degree);
        }
        out.push_str("}\n");
        out
    }
}

impl EndOrder {
    /// Builds the Hom grid of `⊕ ideals`.
    pub fn build(ideals: &[FractionalIdeal]) -> Result<Self> {
        let first = ideals.first().ok_or_else(|| argument("no ideals given"))?;
        let semigroup = first.semigroup().clone();
        if ideals.iter().any(|i| *i.semigroup() != semigroup) {
            return Err(argument("ideals live over different semigroups"));
        }
        for (a, ia) in ideals.iter().enumerate() {
            for (b, ib) in ideals.iter().enumerate().skip(a + 1) {
                if ia.is_isomorphic(ib) {
                    return Err(Error::NotBasic { first: a + 1, second: b + 1 });
                }
            }
        }
        let hom = ideals
            .iter()
            .map(|target| ideals.iter().map(|source| ideal_quotient(target, source)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let order = EndOrder { semigroup, ideals: ideals.to_vec(), hom };
        order.check_composition_closure()?;
        for i in 0..order.len() {
            NumericalSemigroup::from_degree_set(order.hom[i][i].clone())
                .map_err(|e| Error::InvariantViolation(format!("diagonal entry {i} is not a semigroup: {e}")))?;
        }
        Ok(order)
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn ideals(&self) -> &[FractionalIdeal] {
        &self.ideals
    }

    pub fn hom(&self, i: usize, j: usize) -> &DegreeSet {
        &self.hom[i][j]
    }

    pub fn hom_grid(&self) -> &[Vec<DegreeSet>] {
        &self.hom
    }

    fn check_composition_closure(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    if !self.hom[i][k].minkowski_sum(&self.hom[k][j]).is_subset(&self.hom[i][j]) {
                        return Err(Error::InvariantViolation(format!(
                            "Hom({k},{i}) · Hom({j},{k}) escapes Hom({j},{i})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Positive part on the diagonal, full Hom off the diagonal.
    pub fn radical(&self) -> RadicalGrid {
        let n = self.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.hom[i][i].without(0) } else { self.hom[i][j].clone() }).collect())
            .collect();
        RadicalGrid { entries }
    }

    /// `(J²)_{ij} = ∪_k J_{ik} + J_{kj}`. Every graded piece of every entry is
    /// at most one-dimensional, so the union of Minkowski sums is exact.
    pub fn radical_square(&self) -> RadicalGrid {
        self.radical().square()
    }

    /// One arrow `i → j` of degree `d` for every `d ∈ J_{ij} \ J²_{ij}`.
    pub fn quiver(&self) -> QuiverPresentation {
        let rad = self.radical();
        let sq = rad.square();
        let n = self.len();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for d in rad.entries[i][j].finite_difference(&sq.entries[i][j]) {
                    arrows.push(Arrow { source: i, target: j, degree: d });
                }
            }
        }
        QuiverPresentation { vertices: n, arrows }
    }

    /// Scalars `t^d` lying in every diagonal entry; these commute with the
    /// whole order.
    pub fn center(&self) -> NumericalSemigroup {
        let meet = (1..self.len()).fold(self.hom[0][0].clone(), |acc, i| acc.intersection(&self.hom[i][i]));
        NumericalSemigroup::from_degree_set(meet).expect("intersection of semigroups is a semigroup")
    }
}

impl RadicalGrid {
    pub fn square(&self) -> RadicalGrid {
        let n = self.entries.len();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(DegreeSet::empty(), |acc, k| {
                            acc.union(&self.entries[i][k].minkowski_sum(&self.entries[k][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        RadicalGrid { entries }
    }

    /// Entrywise `self \ smaller` as finite degree lists.
    pub fn quotient_support(&self, smaller: &RadicalGrid) -> Vec<Vec<Vec<i64>>> {
        self.entries
            .iter()
            .zip(&smaller.entries)
            .map(|(row, srow)| row.iter().zip(srow).map(|(a, b)| a.finite_difference(b)).collect())
            .collect()
    }
}

impl MonomialAlgebra for EndOrder {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn hom_contains(&self, i: usize, j: usize, d: i64) -> bool {
        self.hom[i][j].contains(d)
    }

    fn hom_min(&self, i: usize, j: usize) -> Option<i64> {
        self.hom[i][j].min_element()
    }

    fn hom_extent(&self, i: usize, j: usize) -> Extent {
        Extent::Cofinite { stab: self.hom[i][j].stabilization().unwrap_or(0) }
    }

    fn center_frobenius(&self) -> i64 {
        self.center().frobenius()
    }
}
