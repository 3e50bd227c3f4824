//! Minimal graded projective resolutions of simple modules.
//!
//! Everything here works over a [`MonomialAlgebra`]: a basic algebra whose
//! `e_i A e_j` is spanned by monomials `t^d` for `d` in a degree set, with
//! `t^a · t^b = t^{a+b}` when that degree is still present and zero
//! otherwise. Orders over monomial curves never truncate; the Artinian
//! algebras over `k[x]/(x^n)` do.
//!
//! Vertices are 0-based in the API and 1-based in every printed or
//! serialized form.

mod engine;
mod matrix;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{argument, Error, Result};
use crate::linalg::{q, rank, Q};
use engine::{mask, Family, Generator, Scan, Source};

pub use matrix::LaurentMatrix;

/// How far a Hom degree set reaches upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extent {
    /// Contains every degree `>= stab`.
    Cofinite { stab: i64 },
    /// Finite, with largest element `max` (meaningless when empty).
    Finite { max: i64 },
}

pub trait MonomialAlgebra: Sync {
    fn vertex_count(&self) -> usize;

    /// Whether `t^d` lies in `e_i A e_j = Hom(M_j, M_i)`.
    fn hom_contains(&self, i: usize, j: usize, d: i64) -> bool;

    fn hom_min(&self, i: usize, j: usize) -> Option<i64>;

    fn hom_extent(&self, i: usize, j: usize) -> Extent;

    /// Frobenius number of the center, used only by the default degree bound.
    fn center_frobenius(&self) -> i64 {
        -1
    }

    fn rad_contains(&self, i: usize, j: usize, d: i64) -> bool {
        self.hom_contains(i, j, d) && !(i == j && d == 0)
    }

    fn least_positive_loop(&self, j: usize) -> Option<i64> {
        let top = match self.hom_extent(j, j) {
            Extent::Cofinite { stab } => stab.max(1),
            Extent::Finite { max } => max,
        };
        (1..=top).find(|&d| self.hom_contains(j, j, d))
    }

    fn is_finite_dimensional(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|i| (0..n).all(|j| matches!(self.hom_extent(i, j), Extent::Finite { .. })))
    }

    /// Largest `stab − min` over the Hom grid.
    fn stabilization_spread(&self) -> i64 {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter_map(|(i, j)| match (self.hom_extent(i, j), self.hom_min(i, j)) {
                (Extent::Cofinite { stab }, Some(m)) => Some(stab - m),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// `dim_ℚ e_i A e_j` for finite-dimensional algebras.
    fn hom_dim(&self, i: usize, j: usize) -> Option<usize> {
        match (self.hom_extent(i, j), self.hom_min(i, j)) {
            (Extent::Finite { max }, Some(min)) => Some((min..=max).filter(|&d| self.hom_contains(i, j, d)).count()),
            (Extent::Finite { .. }, None) => Some(0),
            _ => None,
        }
    }
}

/// A summand `P_vertex` generated in degree `shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tag {
    pub vertex: usize,
    pub shift: i64,
}

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.vertex + 1, self.shift).serialize(serializer)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "P{}", self.vertex + 1)
        } else {
            write!(f, "P{}({})", self.vertex + 1, -self.shift)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LiftStrategy {
    /// Reduced echelon basis vectors, so one-dimensional pieces give single monomials.
    Lowest,
    /// Random integer combinations, for checking that Betti tables do not
    /// depend on the choice.
    Random { seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DegreeBound {
    /// Largest generator shift plus `multiplier · (frob(center) + spread + 1)`,
    /// raised to the saturation bound when that is larger.
    Auto { multiplier: i64 },
    /// Largest generator shift plus this slack, taken as given.
    Fixed(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_length: usize,
    pub degree_bound: DegreeBound,
    pub lift: LiftStrategy,
    pub verify_doubling: bool,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_length: 16,
            degree_bound: DegreeBound::Auto { multiplier: 1 },
            lift: LiftStrategy::Lowest,
            verify_doubling: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TopEntry {
    #[serde(serialize_with = "one_based")]
    pub vertex: usize,
    pub shift: i64,
    pub multiplicity: usize,
}

fn one_based<S: Serializer>(v: &usize, s: S) -> std::result::Result<S::Ok, S::Error> {
    (v + 1).serialize(s)
}

/// Free summands of each term of a resolution, sorted by (shift, vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub terms: Vec<Vec<Tag>>,
}

impl BettiTable {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn projective_dimension(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(Vec::len).collect()
    }

    /// Aggregated `(vertex, shift, multiplicity)` per homological degree.
    pub fn entries(&self) -> Vec<Vec<TopEntry>> {
        self.terms.iter().map(|term| aggregate(term)).collect()
    }
}

fn aggregate(tags: &[Tag]) -> Vec<TopEntry> {
    let mut counts: BTreeMap<(i64, usize), usize> = BTreeMap::new();
    for t in tags {
        *counts.entry((t.shift, t.vertex)).or_default() += 1;
    }
    counts.into_iter().map(|((shift, vertex), multiplicity)| TopEntry { vertex, shift, multiplicity }).collect()
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            vertex: usize,
            shift: i64,
            mult: usize,
        }
        let rows: Vec<Vec<Entry>> = self
            .entries()
            .into_iter()
            .map(|row| {
                row.into_iter().map(|e| Entry { vertex: e.vertex + 1, shift: e.shift, mult: e.multiplicity }).collect()
            })
            .collect();
        rows.serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// Consecutive maps compose to zero in the algebra.
    pub compositions_zero: bool,
    /// Every cover entry lies in the radical.
    pub minimality: bool,
    /// Every monomial sits in the Hom entry its tags dictate.
    pub grading_consistent: bool,
    /// The last map is injective: full column rank over `ℚ(t)` for orders
    /// over a curve, an exhaustively zero kernel for finite algebras.
    pub final_injective: bool,
    /// Ranks of consecutive maps add up to the term ranks in every scanned
    /// degree, including the augmentation onto the simple.
    pub degreewise_exact: bool,
    /// Alternating sum of ranks over `ℚ(t)` (curve case) or of dimensions
    /// (finite case) matches the simple.
    pub rank_nullity: bool,
    /// Chosen generators span every scanned piece of every syzygy.
    pub generators_span: bool,
    /// Every scanned window reached the saturation degree past which no
    /// syzygy generator can occur (always true for finite algebras).
    pub saturation_covered: bool,
    /// Largest degree slack above the current generators that was scanned.
    pub degree_bound_used: i64,
    /// Recomputing with twice the slack gives the same Betti table.
    pub doubling_stable: bool,
}

impl Certificate {
    pub fn all_pass(&self) -> bool {
        self.compositions_zero
            && self.minimality
            && self.grading_consistent
            && self.final_injective
            && self.degreewise_exact
            && self.rank_nullity
            && self.generators_span
            && self.saturation_covered
            && self.doubling_stable
    }
}

#[derive(Debug, Clone)]
pub struct Resolution {
    pub simple: usize,
    pub maps: Vec<LaurentMatrix>,
    pub betti: BettiTable,
    pub certificate: Certificate,
}

impl Resolution {
    pub fn projective_dimension(&self) -> usize {
        self.betti.projective_dimension()
    }

    pub fn summary(&self) -> ResolutionSummary {
        ResolutionSummary {
            simple: self.simple + 1,
            betti: self.betti.clone(),
            pd: self.projective_dimension(),
            certificates: self.certificate.clone(),
        }
    }
}

/// The JSON shape of a resolution: Betti table, pd and certificates.
#[derive(Debug, Clone, Serialize)]
pub struct ResolutionSummary {
    pub simple: usize,
    pub betti: BettiTable,
    pub pd: usize,
    pub certificates: Certificate,
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |tags: &[Tag]| tags.iter().map(Tag::to_string).collect::<Vec<_>>().join(" ⊕ ");
        write!(f, "0 ← S{}", self.simple + 1)?;
        for tags in &self.betti.terms {
            write!(f, " ← {}", term(tags))?;
        }
        writeln!(f, " ← 0")?;
        for (k, m) in self.maps.iter().enumerate() {
            writeln!(f, "d{}: {} → {}", k + 1, term(m.col_tags()), term(m.row_tags()))?;
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Graded dimensions and top of a syzygy, both translated so that the lowest
/// nonzero degree is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dims: Vec<(usize, i64, usize)>,
    pub top: Vec<(usize, i64)>,
}

/// Two syzygies of one simple with equal fingerprints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "one_based")]
    pub simple: usize,
    pub first: usize,
    pub repeat: usize,
    pub fingerprint: Fingerprint,
    /// Free summands of the syzygy at `repeat`, i.e. its projective cover.
    pub top: Vec<Tag>,
    /// Betti table up to `repeat`.
    pub partial: BettiTable,
}

#[derive(Debug, Clone)]
pub enum SimpleOutcome {
    Finite(Resolution),
    /// The resolution was still going after `max_length` steps.
    ExceedsCap(Resolution),
    /// A syzygy fingerprint repeated, so the resolution is periodic.
    Infinite(Witness),
}

impl SimpleOutcome {
    pub fn finite(&self) -> Option<&Resolution> {
        match self {
            SimpleOutcome::Finite(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub enum GldimVerdict {
    Finite { gldim: usize, resolutions: Vec<Resolution> },
    ExceedsCap { outcomes: Vec<SimpleOutcome> },
    Infinite { witness: Witness, outcomes: Vec<SimpleOutcome> },
}

impl GldimVerdict {
    pub fn gldim(&self) -> Option<usize> {
        match self {
            GldimVerdict::Finite { gldim, .. } => Some(*gldim),
            _ => None,
        }
    }
}

/// A graded submodule of `⊕ P_{v_r}(-s_r)` spanned by homogeneous columns.
#[derive(Debug, Clone)]
pub struct GradedPresentedModule {
    generators: LaurentMatrix,
}

impl GradedPresentedModule {
    pub fn new(generators: LaurentMatrix) -> Result<Self> {
        if generators.scalar_form().is_none() {
            return Err(argument("generator columns must be homogeneous of the degree their tags give"));
        }
        for c in 0..generators.ncols() {
            if (0..generators.nrows()).all(|r| generators.entry(r, c).is_zero()) {
                return Err(argument(format!("generator column {} is zero", c + 1)));
            }
        }
        Ok(GradedPresentedModule { generators })
    }

    /// `P_i` itself.
    pub fn projective(i: usize) -> Self {
        let tag = Tag { vertex: i, shift: 0 };
        GradedPresentedModule { generators: LaurentMatrix::from_scalars(vec![tag], vec![tag], &[vec![q(1)]]) }
    }

    /// `e_i J`, generated by all of its monomials below saturation.
    pub fn radical_row<A: MonomialAlgebra + ?Sized>(alg: &A, i: usize) -> Self {
        let n = alg.vertex_count();
        let mut cols = Vec::new();
        for j in 0..n {
            let Some(lo) = alg.hom_min(i, j) else { continue };
            let hi = match alg.hom_extent(i, j) {
                Extent::Finite { max } => max,
                Extent::Cofinite { .. } => {
                    engine::rad_stab(alg, i, j).unwrap_or(lo) + alg.least_positive_loop(j).unwrap_or(1)
                }
            };
            cols.extend((lo..=hi).filter(|&d| alg.rad_contains(i, j, d)).map(|d| Tag { vertex: j, shift: d }));
        }
        cols.sort_by_key(|t| (t.shift, t.vertex));
        let row = Tag { vertex: i, shift: 0 };
        let scalars = vec![vec![q(1); cols.len()]];
        GradedPresentedModule { generators: LaurentMatrix::from_scalars(vec![row], cols, &scalars) }
    }

    pub fn ambient(&self) -> &[Tag] {
        self.generators.row_tags()
    }

    pub fn generators(&self) -> &LaurentMatrix {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.ncols() == 0
    }

    fn family(&self) -> Family {
        let scalars = self.generators.scalar_form().expect("checked on construction");
        let gens = self
            .generators
            .col_tags()
            .iter()
            .enumerate()
            .map(|(c, tag)| (*tag, scalars.iter().map(|row| row[c].clone()).collect()))
            .collect();
        Family { ambient: self.ambient().to_vec(), source: Source::Span { gens } }
    }
}

/// `(vertex, shift, multiplicity)` of `M / MJ`.
pub fn top<A: MonomialAlgebra + ?Sized>(module: &GradedPresentedModule, alg: &A) -> Vec<TopEntry> {
    let scan = module.family().scan(alg, None, LiftStrategy::Lowest);
    let tags: Vec<Tag> = scan.generators.iter().map(|g| g.tag).collect();
    aggregate(&tags)
}

/// Projective cover of `module` and the module's first syzygy.
pub fn syzygy<A: MonomialAlgebra + ?Sized>(
    module: &GradedPresentedModule,
    alg: &A,
    caps: &Caps,
) -> Result<(LaurentMatrix, GradedPresentedModule)> {
    let scan = module.family().scan(alg, None, caps.lift);
    let (cover, kernel) = cover_and_kernel(&module.family(), &scan);
    let (upper, _) = upper_bound(&kernel, alg, caps.degree_bound);
    let kscan = kernel.scan(alg, upper, caps.lift);
    if caps.verify_doubling && !alg.is_finite_dimensional() {
        let slack = upper.unwrap_or(0) - kernel.max_shift();
        let again = kernel.scan(alg, Some(kernel.max_shift() + 2 * slack.max(1)), caps.lift);
        if tags_of(&again.generators) != tags_of(&kscan.generators) {
            return Err(Error::Precision { bound: slack });
        }
    }
    let gens = LaurentMatrix::from_scalars(
        kernel.ambient.clone(),
        tags_of(&kscan.generators),
        &columns_to_rows(&kscan.generators, kernel.ambient.len()),
    );
    Ok((cover, GradedPresentedModule { generators: gens }))
}

fn tags_of(gens: &[Generator]) -> Vec<Tag> {
    gens.iter().map(|g| g.tag).collect()
}

fn columns_to_rows(gens: &[Generator], rows: usize) -> Vec<Vec<Q>> {
    (0..rows).map(|r| gens.iter().map(|g| g.vector[r].clone()).collect()).collect()
}

/// Cover matrix from a scan's generators, and the family of its kernel.
fn cover_and_kernel(family: &Family, scan: &Scan) -> (LaurentMatrix, Family) {
    let cols = tags_of(&scan.generators);
    let scalars = columns_to_rows(&scan.generators, family.ambient.len());
    let cover = LaurentMatrix::from_scalars(family.ambient.clone(), cols.clone(), &scalars);
    let kernel = Family { ambient: cols, source: Source::Kernel { target: family.ambient.clone(), matrix: scalars } };
    (cover, kernel)
}

/// Degree window top and the slack it represents; `None` for finite algebras.
fn upper_bound<A: MonomialAlgebra + ?Sized>(family: &Family, alg: &A, bound: DegreeBound) -> (Option<i64>, i64) {
    if alg.is_finite_dimensional() {
        return (None, 0);
    }
    let base = family.max_shift();
    let upper = match bound {
        DegreeBound::Fixed(slack) => base + slack,
        DegreeBound::Auto { multiplier } => {
            let heuristic = base + multiplier * (alg.center_frobenius() + alg.stabilization_spread() + 1).max(1);
            heuristic.max(family.saturation_bound(alg).unwrap_or(heuristic))
        }
    };
    (Some(upper), upper - base)
}

fn fingerprint(scan: &Scan) -> Option<Fingerprint> {
    let low = scan.spaces.keys().map(|k| k.1).min()?;
    let mut dims: Vec<(usize, i64, usize)> = scan.spaces.iter().map(|(&(j, d), s)| (j, d - low, s.dim())).collect();
    dims.sort();
    let mut top: Vec<(usize, i64)> = scan.generators.iter().map(|g| (g.tag.vertex, g.tag.shift - low)).collect();
    top.sort();
    Some(Fingerprint { dims, top })
}

fn simple_fingerprint(i: usize) -> Fingerprint {
    Fingerprint { dims: vec![(i, 0, 1)], top: vec![(i, 0)] }
}

struct Raw {
    maps: Vec<LaurentMatrix>,
    terms: Vec<Vec<Tag>>,
    slack: i64,
    upper: i64,
    generators_span: bool,
    saturation_covered: bool,
    last_kernel_zero: bool,
    stopped: Stop,
}

enum Stop {
    Finished,
    Cap,
    Periodic { first: usize, repeat: usize, fingerprint: Fingerprint, top: Vec<Tag> },
}

fn run<A: MonomialAlgebra + ?Sized>(alg: &A, vertex: usize, bound: DegreeBound, caps: &Caps) -> Raw {
    let periodic = alg.is_finite_dimensional();
    let mut family = Family::radical(vertex);
    let mut raw = Raw {
        maps: Vec::new(),
        terms: vec![vec![Tag { vertex, shift: 0 }]],
        slack: 0,
        upper: i64::MIN,
        generators_span: true,
        saturation_covered: true,
        last_kernel_zero: false,
        stopped: Stop::Finished,
    };
    let mut seen: Vec<Fingerprint> = vec![simple_fingerprint(vertex)];
    loop {
        let (upper, slack) = upper_bound(&family, alg, bound);
        raw.slack = raw.slack.max(slack);
        if let (Some(u), Some(sat)) = (upper, family.saturation_bound(alg)) {
            raw.saturation_covered &= u >= sat;
        }
        let scan = family.scan(alg, upper, caps.lift);
        raw.upper = raw.upper.max(upper.unwrap_or(scan.window.1));
        raw.generators_span &= scan.generation_verified && scan.closure_verified;
        if periodic {
            if let Some(fp) = fingerprint(&scan) {
                if let Some(first) = seen.iter().position(|f| *f == fp) {
                    raw.stopped =
                        Stop::Periodic { first, repeat: seen.len(), fingerprint: fp, top: tags_of(&scan.generators) };
                    return raw;
                }
                seen.push(fp);
            }
        }
        if scan.generators.is_empty() {
            raw.last_kernel_zero = scan.spaces.is_empty();
            raw.stopped = Stop::Finished;
            return raw;
        }
        if raw.terms.len() > caps.max_length {
            raw.stopped = Stop::Cap;
            return raw;
        }
        let (cover, next) = cover_and_kernel(&family, &scan);
        raw.terms.push(cover.col_tags().to_vec());
        raw.maps.push(cover);
        family = next;
    }
}

/// Minimal resolution of the simple at `vertex`, with certificates.
pub fn simple_resolution<A: MonomialAlgebra + ?Sized>(alg: &A, vertex: usize, caps: &Caps) -> Result<SimpleOutcome> {
    if vertex >= alg.vertex_count() {
        return Err(argument(format!("vertex {} out of range 1..={}", vertex + 1, alg.vertex_count())));
    }
    let raw = run(alg, vertex, caps.degree_bound, caps);
    let betti = BettiTable { terms: raw.terms.clone() };
    if let Stop::Periodic { first, repeat, fingerprint, top } = raw.stopped {
        return Ok(SimpleOutcome::Infinite(Witness {
            simple: vertex,
            first,
            repeat,
            fingerprint,
            top,
            partial: betti,
        }));
    }

    let finite_dim = alg.is_finite_dimensional();
    let mut doubling_stable = finite_dim;
    if !finite_dim && caps.verify_doubling && matches!(raw.stopped, Stop::Finished) {
        let doubled = run(alg, vertex, DegreeBound::Fixed(2 * raw.slack.max(1)), caps);
        if doubled.terms != raw.terms {
            return Err(Error::Precision { bound: raw.slack });
        }
        doubling_stable = true;
    }

    let certificate = certify(alg, vertex, &raw, doubling_stable);
    let resolution = Resolution { simple: vertex, maps: raw.maps, betti, certificate };
    Ok(match raw.stopped {
        Stop::Cap => SimpleOutcome::ExceedsCap(resolution),
        _ => SimpleOutcome::Finite(resolution),
    })
}

fn certify<A: MonomialAlgebra + ?Sized>(alg: &A, vertex: usize, raw: &Raw, doubling_stable: bool) -> Certificate {
    let finite_dim = alg.is_finite_dimensional();
    let compositions_zero = raw.maps.windows(2).all(|w| w[0].compose(&w[1], alg).map(|m| m.is_zero()).unwrap_or(false));
    let minimality = raw.maps.iter().all(|m| m.entries_in_radical(alg));
    let grading_consistent = raw.maps.iter().all(|m| m.grading_consistent(alg));

    let final_injective = match raw.maps.last() {
        None => true,
        Some(_) if finite_dim => raw.last_kernel_zero,
        Some(last) => raw.last_kernel_zero && last.fraction_field_rank() == last.ncols(),
    };

    let rank_nullity = if finite_dim {
        let dim_p =
            |t: &Tag| -> i64 { (0..alg.vertex_count()).map(|j| alg.hom_dim(t.vertex, j).unwrap_or(0) as i64).sum() };
        let euler: i64 = raw
            .terms
            .iter()
            .enumerate()
            .map(|(k, tags)| if k % 2 == 0 { 1 } else { -1 } * tags.iter().map(dim_p).sum::<i64>())
            .sum();
        euler == 1
    } else {
        let ranks: Vec<usize> = raw.maps.iter().map(LaurentMatrix::fraction_field_rank).collect();
        raw.terms.iter().enumerate().all(|(k, tags)| {
            let incoming = if k == 0 { 0 } else { ranks[k - 1] };
            let outgoing = ranks.get(k).copied().unwrap_or(0);
            incoming + outgoing == tags.len()
        })
    };

    Certificate {
        compositions_zero,
        minimality,
        grading_consistent,
        final_injective,
        degreewise_exact: degreewise_exact(alg, vertex, raw),
        rank_nullity,
        generators_span: raw.generators_span,
        saturation_covered: raw.saturation_covered,
        degree_bound_used: raw.slack,
        doubling_stable,
    }
}

/// At every scanned `(j, d)`: `rank d_k + rank d_{k+1} = dim F_k`, with
/// `d_0` the augmentation onto the simple.
fn degreewise_exact<A: MonomialAlgebra + ?Sized>(alg: &A, vertex: usize, raw: &Raw) -> bool {
    let scalars: Vec<Vec<Vec<Q>>> = match raw.maps.iter().map(LaurentMatrix::scalar_form).collect() {
        Some(s) => s,
        None => return false,
    };
    let all_tags: Vec<Tag> = raw.terms.iter().flatten().copied().collect();
    let n = alg.vertex_count();
    let lo = (0..n)
        .flat_map(|j| all_tags.iter().filter_map(move |t| alg.hom_min(t.vertex, j).map(|m| t.shift + m)))
        .min()
        .unwrap_or(0);
    let hi = raw.upper.max(all_tags.iter().map(|t| t.shift).max().unwrap_or(0));
    let mut touched: HashSet<(usize, i64)> = HashSet::new();
    for j in 0..n {
        for d in lo..=hi {
            let masks: Vec<Vec<bool>> = raw.terms.iter().map(|tags| mask(alg, tags, j, d)).collect();
            if masks.iter().all(|m| !m.iter().any(|&b| b)) {
                continue;
            }
            touched.insert((j, d));
            let map_rank = |k: usize| -> usize {
                if k == 0 {
                    return usize::from(j == vertex && d == 0 && masks[0][0]);
                }
                let Some(s) = scalars.get(k - 1) else { return 0 };
                let rows: Vec<Vec<Q>> = s
                    .iter()
                    .zip(&masks[k - 1])
                    .filter(|(_, &keep)| keep)
                    .map(|(row, _)| {
                        row.iter().zip(&masks[k]).filter(|(_, &keep)| keep).map(|(x, _)| x.clone()).collect()
                    })
                    .collect();
                let cols = masks[k].iter().filter(|&&b| b).count();
                rank(&rows, cols)
            };
            for (k, m) in masks.iter().enumerate() {
                let dim = m.iter().filter(|&&b| b).count();
                if map_rank(k) + map_rank(k + 1) != dim {
                    return false;
                }
            }
        }
    }
    !touched.is_empty()
}

/// Resolves every simple, in parallel, and takes the maximum projective
/// dimension. The verdict is Infinite if any simple is periodic, else
/// ExceedsCap if any simple hit the cap.
pub fn gldim<A: MonomialAlgebra + ?Sized>(alg: &A, caps: &Caps) -> Result<GldimVerdict> {
    let outcomes: Vec<SimpleOutcome> =
        (0..alg.vertex_count()).into_par_iter().map(|i| simple_resolution(alg, i, caps)).collect::<Result<Vec<_>>>()?;
    if let Some(witness) = outcomes.iter().find_map(|o| match o {
        SimpleOutcome::Infinite(w) => Some(w.clone()),
        _ => None,
    }) {
        return Ok(GldimVerdict::Infinite { witness, outcomes });
    }
    if outcomes.iter().any(|o| matches!(o, SimpleOutcome::ExceedsCap(_))) {
        return Ok(GldimVerdict::ExceedsCap { outcomes });
    }
    let resolutions: Vec<Resolution> = outcomes
        .into_iter()
        .map(|o| match o {
            SimpleOutcome::Finite(r) => r,
            _ => unreachable!(),
        })
        .collect();
    let gldim = resolutions.iter().map(Resolution::projective_dimension).max().unwrap_or(0);
    Ok(GldimVerdict::Finite { gldim, resolutions })
}
