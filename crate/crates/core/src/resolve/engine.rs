//! Degreewise machinery behind tops and syzygies.
//!
//! A graded submodule `X` of a sum of shifted projectives `⊕_r P_{v_r}(s_r)`
//! is described by the subspaces `X(j, d) ⊆ ℚ^r` of its degree-`d` piece at
//! vertex `j`: coordinate `r` is the coefficient of `t^{d - s_r}` in row `r`,
//! allowed only when that monomial lies in `Hom(M_j, M_{v_r})`. Right
//! multiplication by `t^e ∈ e_j' A e_j` sends `X(j', d')` to `X(j, d' + e)` by
//! zeroing the coordinates that leave their Hom entry (which never happens
//! for orders over a curve, and truncates in the Artinian case).

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Extent, LiftStrategy, MonomialAlgebra, Tag};
use crate::linalg::{nullspace, q, Subspace, Q};

/// Where the subspaces of a family come from.
#[derive(Debug, Clone)]
pub(crate) enum Source {
    /// `e_i J` inside `P_i`.
    Radical { vertex: usize },
    /// Kernel of the scalar cover matrix (rows tagged by `target`, columns by
    /// the family's ambient).
    Kernel { target: Vec<Tag>, matrix: Vec<Vec<Q>> },
    /// Submodule spanned by homogeneous generator vectors.
    Span { gens: Vec<(Tag, Vec<Q>)> },
}

#[derive(Debug, Clone)]
pub(crate) struct Family {
    pub ambient: Vec<Tag>,
    pub source: Source,
}

#[derive(Debug, Clone)]
pub(crate) struct Generator {
    pub tag: Tag,
    pub vector: Vec<Q>,
}

/// Result of scanning a family over a degree window.
#[derive(Debug, Clone)]
pub(crate) struct Scan {
    pub generators: Vec<Generator>,
    /// Nonzero subspaces, keyed by (vertex, degree).
    pub spaces: HashMap<(usize, i64), Subspace>,
    pub window: (i64, i64),
    /// The chosen generators span every scanned piece.
    pub generation_verified: bool,
    /// The radical part sits inside the piece at every scanned position.
    pub closure_verified: bool,
}

pub(crate) fn mask<A: MonomialAlgebra + ?Sized>(alg: &A, tags: &[Tag], j: usize, d: i64) -> Vec<bool> {
    tags.iter().map(|t| alg.hom_contains(t.vertex, j, d - t.shift)).collect()
}

fn restrict_vec(v: &[Q], mask: &[bool]) -> Vec<Q> {
    v.iter().zip(mask).map(|(x, &keep)| if keep { x.clone() } else { q(0) }).collect()
}

pub(crate) fn rad_stab<A: MonomialAlgebra + ?Sized>(alg: &A, i: usize, j: usize) -> Option<i64> {
    match alg.hom_extent(i, j) {
        Extent::Cofinite { stab } if i == j => Some(stab.max(1)),
        Extent::Cofinite { stab } => Some(stab),
        Extent::Finite { .. } => None,
    }
}

impl Family {
    pub fn radical(vertex: usize) -> Self {
        Family { ambient: vec![Tag { vertex, shift: 0 }], source: Source::Radical { vertex } }
    }

    pub fn space<A: MonomialAlgebra + ?Sized>(&self, alg: &A, j: usize, d: i64) -> Subspace {
        let dim = self.ambient.len();
        match &self.source {
            Source::Radical { vertex } => {
                if alg.rad_contains(*vertex, j, d) {
                    Subspace::full(1)
                } else {
                    Subspace::zero(1)
                }
            }
            Source::Kernel { target, matrix } => {
                let src = mask(alg, &self.ambient, j, d);
                let cols: Vec<usize> = (0..dim).filter(|&c| src[c]).collect();
                if cols.is_empty() {
                    return Subspace::zero(dim);
                }
                let tgt = mask(alg, target, j, d);
                let rows: Vec<Vec<Q>> = matrix
                    .iter()
                    .zip(&tgt)
                    .filter(|(_, &keep)| keep)
                    .map(|(row, _)| cols.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                let kernel = nullspace(&rows, cols.len());
                let embedded = kernel
                    .into_iter()
                    .map(|v| {
                        let mut full = vec![q(0); dim];
                        for (x, &c) in v.into_iter().zip(&cols) {
                            full[c] = x;
                        }
                        full
                    })
                    .collect();
                Subspace::span(dim, embedded)
            }
            Source::Span { gens } => {
                let m = mask(alg, &self.ambient, j, d);
                let vectors = gens
                    .iter()
                    .filter(|(tag, _)| alg.hom_contains(tag.vertex, j, d - tag.shift))
                    .map(|(_, v)| restrict_vec(v, &m))
                    .collect();
                Subspace::span(dim, vectors)
            }
        }
    }

    /// Lowest degree at which vertex `j` can carry a nonzero piece.
    fn lower(&self, alg: &(impl MonomialAlgebra + ?Sized), j: usize) -> Option<i64> {
        self.ambient.iter().filter_map(|t| alg.hom_min(t.vertex, j).map(|m| t.shift + m)).min()
    }

    /// Highest degree with a possibly nonzero piece (finite algebras only).
    fn finite_upper(&self, alg: &(impl MonomialAlgebra + ?Sized), j: usize) -> Option<i64> {
        self.ambient
            .iter()
            .filter_map(|t| match alg.hom_extent(t.vertex, j) {
                Extent::Finite { max } => alg.hom_min(t.vertex, j).map(|_| t.shift + max),
                Extent::Cofinite { .. } => None,
            })
            .max()
    }

    /// Degree beyond which no generator can appear, from saturation: past
    /// `T_j` every ambient coordinate is allowed and the piece is constant,
    /// so multiplication by the smallest positive loop at `j` covers it.
    pub fn saturation_bound<A: MonomialAlgebra + ?Sized>(&self, alg: &A) -> Option<i64> {
        let n = alg.vertex_count();
        let mut bound = i64::MIN;
        for j in 0..n {
            let threshold = match &self.source {
                Source::Radical { vertex } => rad_stab(alg, *vertex, j)?,
                _ => self
                    .ambient
                    .iter()
                    .map(|t| match alg.hom_extent(t.vertex, j) {
                        Extent::Cofinite { stab } => Some(t.shift + stab),
                        Extent::Finite { .. } => None,
                    })
                    .collect::<Option<Vec<_>>>()?
                    .into_iter()
                    .max()?,
            };
            let step = alg.least_positive_loop(j)?;
            bound = bound.max(threshold + step);
        }
        Some(bound)
    }

    pub fn max_shift(&self) -> i64 {
        self.ambient.iter().map(|t| t.shift).max().unwrap_or(0)
    }

    /// Candidate (vertex, degree) positions for generators, sorted by degree.
    fn positions<A: MonomialAlgebra + ?Sized>(&self, alg: &A, upper: Option<i64>) -> Vec<(usize, i64)> {
        let n = alg.vertex_count();
        let mut out = Vec::new();
        if let Source::Span { gens } = &self.source {
            out.extend(gens.iter().map(|(t, _)| (t.vertex, t.shift)));
        } else {
            for j in 0..n {
                let Some(lo) = self.lower(alg, j) else { continue };
                let hi = match self.finite_upper(alg, j) {
                    Some(h) if alg.is_finite_dimensional() => h,
                    _ => upper.expect("cofinite algebra needs a degree bound"),
                };
                out.extend((lo..=hi).map(|d| (j, d)));
            }
        }
        out.sort_by_key(|&(j, d)| (d, j));
        out.dedup();
        out
    }

    /// Computes every piece in the window, the top at every position, and a
    /// minimal generating set.
    pub fn scan<A: MonomialAlgebra + ?Sized>(&self, alg: &A, upper: Option<i64>, lift: LiftStrategy) -> Scan {
        let positions = self.positions(alg, upper);
        let dim = self.ambient.len();
        let mut spaces: HashMap<(usize, i64), Subspace> = HashMap::new();
        // Hom entries between ideals that are not normalized can have negative
        // degrees, so the radical part at (j, d) may come from any scanned piece
        let (lo, hi) = match (positions.iter().map(|p| p.1).min(), positions.iter().map(|p| p.1).max()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => {
                return Scan {
                    generators: Vec::new(),
                    spaces,
                    window: (0, -1),
                    generation_verified: true,
                    closure_verified: true,
                }
            }
        };
        let n = alg.vertex_count();
        let all_positions: Vec<(usize, i64)> = if matches!(self.source, Source::Span { .. }) {
            let mut v: Vec<(usize, i64)> = (lo..=hi).flat_map(|d| (0..n).map(move |j| (j, d))).collect();
            v.sort_by_key(|&(j, d)| (d, j));
            v
        } else {
            positions.clone()
        };
        for &(j, d) in &all_positions {
            let s = self.space(alg, j, d);
            if !s.is_zero() {
                spaces.insert((j, d), s);
            }
        }

        let mut rng = match lift {
            LiftStrategy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
            LiftStrategy::Lowest => None,
        };
        let mut generators: Vec<Generator> = Vec::new();
        let mut closure_verified = true;
        for &(j, d) in &positions {
            let Some(piece) = spaces.get(&(j, d)) else { continue };
            let m = mask(alg, &self.ambient, j, d);
            let mut images = Vec::new();
            for (&(jp, dp), sub) in &spaces {
                if alg.rad_contains(jp, j, d - dp) {
                    images.extend(sub.basis().iter().map(|v| restrict_vec(v, &m)));
                }
            }
            let radical = Subspace::span(dim, images);
            if !piece.contains_subspace(&radical) {
                closure_verified = false;
            }
            let wanted = piece.dim().saturating_sub(radical.dim());
            if wanted == 0 {
                continue;
            }
            let mut reached = radical.clone();
            let mut chosen = 0;
            match rng.as_mut() {
                None => {
                    for v in piece.basis() {
                        if chosen == wanted {
                            break;
                        }
                        if reached.insert(v) {
                            generators.push(Generator { tag: Tag { vertex: j, shift: d }, vector: v.clone() });
                            chosen += 1;
                        }
                    }
                }
                Some(rng) => {
                    while chosen < wanted {
                        let mut v = vec![q(0); dim];
                        for b in piece.basis() {
                            let c = q(rng.gen_range(-3..=3));
                            for (x, y) in v.iter_mut().zip(b) {
                                *x += &c * y;
                            }
                        }
                        if reached.insert(&v) {
                            generators.push(Generator { tag: Tag { vertex: j, shift: d }, vector: v });
                            chosen += 1;
                        }
                    }
                }
            }
        }

        let generation_verified = spaces.iter().all(|(&(j, d), piece)| {
            let m = mask(alg, &self.ambient, j, d);
            let vectors = generators
                .iter()
                .filter(|g| alg.hom_contains(g.tag.vertex, j, d - g.tag.shift))
                .map(|g| restrict_vec(&g.vector, &m))
                .collect();
            Subspace::span(dim, vectors) == *piece
        });
        Scan { generators, spaces, window: (lo, hi), generation_verified, closure_verified }
    }
}
