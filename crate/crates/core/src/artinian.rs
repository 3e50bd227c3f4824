//! Endomorphism algebras of `⊕ M_{a_i}` over `R = k[x]/(x^n)`, where
//! `M_a = R/(x^a)`.
//!
//! `Hom(M_a, M_b)` is spanned by multiplication by `x^c` for
//! `max(b − a, 0) <= c < b`, and composing two such maps multiplies the
//! monomials, vanishing once the degree reaches the target's length. That
//! is a truncated [`MonomialAlgebra`], so the resolution engine applies
//! unchanged and every window is finite.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{argument, Error, Result};
use crate::resolve::{self, Caps, Extent, GldimVerdict, MonomialAlgebra, SimpleOutcome, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArtinOrder {
    n: usize,
    indices: Vec<usize>,
    /// `hom[i][j] = (lo, hi)`, the degrees of `Hom(M_{a_j}, M_{a_i})`.
    hom: Vec<Vec<(i64, i64)>>,
}

/// Degrees `c` for which `x^c` gives a nonzero map `M_a → M_b`.
pub fn artin_hom_degrees(n: usize, a: usize, b: usize) -> Result<Vec<i64>> {
    if a == 0 || b == 0 || a > n || b > n {
        return Err(argument(format!("indices {a}, {b} must lie in 1..={n}")));
    }
    let (a, b) = (a as i64, b as i64);
    Ok(((b - a).max(0)..b).collect())
}

pub fn artin_order(n: usize, indices: &[usize]) -> Result<ArtinOrder> {
    if indices.is_empty() {
        return Err(argument("index list is empty"));
    }
    for (p, &a) in indices.iter().enumerate() {
        if a == 0 || a > n {
            return Err(argument(format!("index {a} is outside 1..={n}")));
        }
        if let Some(q) = indices[..p].iter().position(|&b| b == a) {
            return Err(Error::NotBasic { first: q + 1, second: p + 1 });
        }
    }
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    let hom = sorted
        .iter()
        .map(|&ai| {
            sorted
                .iter()
                .map(|&aj| {
                    let degs = artin_hom_degrees(n, aj, ai).expect("indices checked");
                    (degs[0], *degs.last().unwrap())
                })
                .collect()
        })
        .collect();
    let order = ArtinOrder { n, indices: sorted, hom };
    order.check()?;
    Ok(order)
}

impl ArtinOrder {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn hom_degrees(&self, i: usize, j: usize) -> Vec<i64> {
        let (lo, hi) = self.hom[i][j];
        (lo..=hi).collect()
    }

    fn check(&self) -> Result<()> {
        let l = self.len();
        for i in 0..l {
            for j in 0..l {
                let size = (self.hom[i][j].1 - self.hom[i][j].0 + 1) as usize;
                if size != self.indices[i].min(self.indices[j]) {
                    return Err(Error::InvariantViolation(format!("|Hom| wrong at ({}, {})", i + 1, j + 1)));
                }
                for k in 0..l {
                    for a in self.hom_degrees(i, j) {
                        for b in self.hom_degrees(j, k) {
                            let (lo, hi) = self.hom[i][k];
                            if a + b < lo || (a + b <= hi) != self.hom_contains(i, k, a + b) {
                                return Err(Error::InvariantViolation(format!(
                                    "composition leaves Hom at ({}, {}, {})",
                                    i + 1,
                                    j + 1,
                                    k + 1
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Resolution-step cap used when none is given: `4 · Σ a_i`.
    pub fn default_cap(&self) -> usize {
        4 * self.indices.iter().sum::<usize>()
    }
}

impl MonomialAlgebra for ArtinOrder {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn hom_contains(&self, i: usize, j: usize, d: i64) -> bool {
        let (lo, hi) = self.hom[i][j];
        lo <= d && d <= hi
    }

    fn hom_min(&self, i: usize, j: usize) -> Option<i64> {
        Some(self.hom[i][j].0)
    }

    fn hom_extent(&self, i: usize, j: usize) -> Extent {
        Extent::Finite { max: self.hom[i][j].1 }
    }
}

pub fn artin_gldim(n: usize, indices: &[usize], cap: Option<usize>) -> Result<GldimVerdict> {
    let order = artin_order(n, indices)?;
    let caps = Caps { max_length: cap.unwrap_or_else(|| order.default_cap()), ..Caps::default() };
    resolve::gldim(&order, &caps)
}

/// The syzygy at the witness is not projective: its dimension is smaller
/// than that of its projective cover. Projectives are exactly the
/// `Hom(M, M_a)` with `a` in the index set, so a non-projective syzygy
/// has an indecomposable summand `Hom(M, M_c)` with `c` outside it.
pub fn witness_is_not_projective(order: &ArtinOrder, witness: &Witness) -> bool {
    let syzygy_dim: usize = witness.fingerprint.dims.iter().map(|d| d.2).sum();
    let cover_dim: usize = witness
        .top
        .iter()
        .map(|t| (0..order.len()).map(|j| order.hom_dim(t.vertex, j).unwrap_or(0)).sum::<usize>())
        .sum();
    syzygy_dim < cover_dim
}

/// Whether a subset is `{1, …, l}` for some `l`.
pub fn is_initial_segment(indices: &[usize]) -> bool {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(k, &a)| a == k + 1)
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SubsetVerdict {
    Finite { gldim: usize },
    Infinite { witness: Witness },
    ExceedsCap { cap: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct SubsetReport {
    pub indices: Vec<usize>,
    #[serde(flatten)]
    pub verdict: SubsetVerdict,
    /// Every finite resolution passed all of its certificates.
    pub certificates_pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArtinSpectrum {
    pub n: usize,
    /// Global dimensions attained by finite subsets.
    pub spectrum: BTreeSet<usize>,
    pub subsets: Vec<SubsetReport>,
    /// Finite verdicts fall exactly on the initial segments.
    pub classification_matches: bool,
    /// Every infinite verdict has a non-projective witness syzygy.
    pub witnesses_checked: bool,
}

impl ArtinSpectrum {
    pub fn capped(&self) -> Vec<&SubsetReport> {
        self.subsets.iter().filter(|s| matches!(s.verdict, SubsetVerdict::ExceedsCap { .. })).collect()
    }
}

fn subset_report(n: usize, indices: Vec<usize>, cap: Option<usize>) -> Result<(SubsetReport, bool)> {
    let order = artin_order(n, &indices)?;
    let cap = cap.unwrap_or_else(|| order.default_cap());
    let caps = Caps { max_length: cap, ..Caps::default() };
    let verdict = resolve::gldim(&order, &caps)?;
    let (verdict, certificates_pass, witness_ok) = match verdict {
        GldimVerdict::Finite { gldim, resolutions } => {
            let pass = resolutions.iter().all(|r| r.certificate.all_pass());
            (SubsetVerdict::Finite { gldim }, pass, true)
        }
        GldimVerdict::Infinite { witness, outcomes } => {
            let pass = outcomes.iter().filter_map(SimpleOutcome::finite).all(|r| r.certificate.all_pass());
            let ok = witness_is_not_projective(&order, &witness);
            (SubsetVerdict::Infinite { witness }, pass, ok)
        }
        GldimVerdict::ExceedsCap { .. } => (SubsetVerdict::ExceedsCap { cap }, true, true),
    };
    Ok((SubsetReport { indices, verdict, certificates_pass }, witness_ok))
}

/// Runs [`artin_gldim`] on every nonempty subset of `{1, …, n}`, ordered by
/// bitmask, in parallel.
pub fn global_spectrum_artin(n: usize, cap: Option<usize>) -> Result<ArtinSpectrum> {
    if n == 0 || n > 16 {
        return Err(argument(format!("n = {n} must lie in 1..=16")));
    }
    let subsets: Vec<Vec<usize>> =
        (1u32..1 << n).map(|mask| (1..=n).filter(|&a| mask & (1 << (a - 1)) != 0).collect()).collect();
    let reports = subsets.into_par_iter().map(|s| subset_report(n, s, cap)).collect::<Result<Vec<_>>>()?;
    let witnesses_checked = reports.iter().all(|r| r.1);
    let subsets: Vec<SubsetReport> = reports.into_iter().map(|r| r.0).collect();
    let spectrum = subsets
        .iter()
        .filter_map(|s| match s.verdict {
            SubsetVerdict::Finite { gldim } => Some(gldim),
            _ => None,
        })
        .collect();
    let classification_matches =
        subsets.iter().all(|s| matches!(s.verdict, SubsetVerdict::Finite { .. }) == is_initial_segment(&s.indices));
    Ok(ArtinSpectrum { n, spectrum, subsets, classification_matches, witnesses_checked })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_degree_examples() {
        assert_eq!(artin_hom_degrees(4, 4, 4).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(artin_hom_degrees(3, 1, 3).unwrap(), vec![2]);
        assert!(artin_hom_degrees(3, 0, 1).is_err());
        assert!(artin_hom_degrees(3, 4, 1).is_err());
    }

    /// `x^c` is a well-defined nonzero map `R/x^a → R/x^b` iff `x^{c+a} = 0`
    /// in `R/x^b` and `x^c ≠ 0` there.
    #[test]
    fn hom_degrees_match_direct_count() {
        for n in 1..=8 {
            for a in 1..=n {
                for b in 1..=n {
                    let brute: Vec<i64> = (0..n as i64).filter(|&c| c + a as i64 >= b as i64 && c < b as i64).collect();
                    let degs = artin_hom_degrees(n, a, b).unwrap();
                    assert_eq!(degs, brute);
                    assert_eq!(degs.len(), a.min(b));
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        let o = artin_order(5, &[2, 5]).unwrap();
        assert_eq!(o.hom_degrees(0, 0), vec![0, 1]);
        assert_eq!(o.hom_degrees(0, 1), vec![0, 1]);
        assert_eq!(o.hom_degrees(1, 0), vec![3, 4]);
        assert_eq!(o.hom_degrees(1, 1), vec![0, 1, 2, 3, 4]);
        let field = artin_order(3, &[1]).unwrap();
        assert_eq!(field.hom_degrees(0, 0), vec![0]);
        let full = artin_order(4, &[1, 2, 3, 4]).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(full.hom_degrees(i, j).len(), (i + 1).min(j + 1));
            }
        }
    }

    #[test]
    fn order_errors() {
        assert_eq!(artin_order(4, &[1, 3, 1]), Err(Error::NotBasic { first: 1, second: 3 }));
        assert!(artin_order(4, &[]).is_err());
        assert!(artin_order(4, &[5]).is_err());
    }

    #[test]
    fn gldim_examples() {
        assert_eq!(artin_gldim(4, &[1, 2, 3, 4], Some(10)).unwrap().gldim(), Some(2));
        assert_eq!(artin_gldim(4, &[1], Some(10)).unwrap().gldim(), Some(0));
        match artin_gldim(4, &[1, 3, 4], Some(20)).unwrap() {
            GldimVerdict::Infinite { witness, .. } => {
                assert!(witness.repeat > witness.first);
                let order = artin_order(4, &[1, 3, 4]).unwrap();
                assert!(witness_is_not_projective(&order, &witness));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn regular_ring_alone_is_infinite() {
        // R/(x^n) itself: the simple k has a periodic resolution
        assert!(matches!(artin_gldim(3, &[3], None).unwrap(), GldimVerdict::Infinite { .. }));
    }

    #[test]
    fn spectrum_small_n() {
        let s1 = global_spectrum_artin(1, None).unwrap();
        assert_eq!(s1.spectrum, BTreeSet::from([0]));
        let s4 = global_spectrum_artin(4, None).unwrap();
        assert_eq!(s4.spectrum, BTreeSet::from([0, 2]));
        assert!(s4.classification_matches);
        assert!(s4.witnesses_checked);
        assert!(s4.subsets.iter().all(|s| s.certificates_pass));
        let finite: Vec<&Vec<usize>> = s4
            .subsets
            .iter()
            .filter(|s| matches!(s.verdict, SubsetVerdict::Finite { .. }))
            .map(|s| &s.indices)
            .collect();
        assert_eq!(finite, vec![&vec![1], &vec![1, 2], &vec![1, 2, 3], &vec![1, 2, 3, 4]]);
    }

    #[test]
    fn tiny_cap_is_reported() {
        let s = global_spectrum_artin(2, Some(0)).unwrap();
        assert!(!s.capped().is_empty());
    }
}
