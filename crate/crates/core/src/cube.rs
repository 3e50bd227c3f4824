//! The cube algebras `Λ_n` (path algebra of the Hasse diagram of subsets of
//! `{1, …, n}` with commutativity relations) and their quotients `B_n`
//! obtained by deleting the vertex `∅`.
//!
//! Everything here is at the level of Hilbert series and resolution shapes;
//! subsets are bitmasks with bit `k` standing for the element `k + 1`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::error::{argument, Result};
use crate::linalg::q;
use crate::poly::{LaurentPoly, RationalFunction};

pub const MAX_N: usize = 10;

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(argument(format!("n = {n} must lie in 1..={MAX_N}")));
    }
    Ok(())
}

fn check_subset(n: usize, s: u32) -> Result<()> {
    if s >> n != 0 {
        return Err(argument(format!("subset {} is not inside {{1..{n}}}", subset_label(s))));
    }
    Ok(())
}

fn popcount(s: u32) -> i64 {
    i64::from(s.count_ones())
}

/// `{1,3}` style label.
pub fn subset_label(s: u32) -> String {
    let elems: Vec<String> = (0..32).filter(|k| s >> k & 1 == 1).map(|k| (k + 1).to_string()).collect();
    format!("{{{}}}", elems.join(","))
}

/// Bitmask of a list of 1-based elements.
pub fn subset_from_elements(elems: &[usize]) -> Result<u32> {
    elems.iter().try_fold(0u32, |acc, &e| {
        if e == 0 || e > 32 {
            Err(argument(format!("element {e} out of range")))
        } else {
            Ok(acc | 1 << (e - 1))
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CubeAlgebra {
    pub n: usize,
}

impl CubeAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(CubeAlgebra { n })
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..1u32 << self.n
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n
    }

    /// `|I Δ J|`, the length of a shortest path in the Hasse diagram.
    pub fn distance(&self, i: u32, j: u32) -> i64 {
        popcount(i ^ j)
    }

    pub fn metric_is_valid(&self) -> bool {
        let v: Vec<u32> = self.vertices().collect();
        v.iter().all(|&a| {
            self.distance(a, a) == 0
                && v.iter().all(|&b| {
                    self.distance(a, b) == self.distance(b, a)
                        && (a == b || self.distance(a, b) > 0)
                        && v.iter().all(|&c| self.distance(a, c) <= self.distance(a, b) + self.distance(b, c))
                })
        })
    }
}

fn one_minus_t_pow(k: i64, power: usize) -> LaurentPoly {
    let base = &LaurentPoly::one() - &LaurentPoly::t(k);
    base.pow(power as u32)
}

/// Hilbert series matrix of `Λ_n` in the path-length grading:
/// `t^{d(I,J)} / (1 − t²)^n`.
pub fn cube_hilbert(n: usize) -> Result<Vec<Vec<RationalFunction>>> {
    let cube = CubeAlgebra::new(n)?;
    let den = one_minus_t_pow(2, n);
    Ok(cube
        .vertices()
        .map(|i| {
            cube.vertices().map(|j| RationalFunction::new(LaurentPoly::t(cube.distance(i, j)), den.clone())).collect()
        })
        .collect())
}

/// Checks `H_{Λ_n}(t) · ((−t)^{d(I,J)}) = 1` exactly. Every entry of `H`
/// has the denominator `(1 − t²)^n`, so each product entry is one
/// polynomial over that denominator.
pub fn koszul_dual_check(n: usize) -> Result<bool> {
    let cube = CubeAlgebra::new(n)?;
    let den = one_minus_t_pow(2, n);
    let dual = |d: i64| LaurentPoly::monomial(d, q(if d % 2 == 0 { 1 } else { -1 }));
    for i in cube.vertices() {
        for k in cube.vertices() {
            let mut num = LaurentPoly::zero();
            for j in cube.vertices() {
                num = &num + &(&LaurentPoly::t(cube.distance(i, j)) * &dual(cube.distance(j, k)));
            }
            let entry = RationalFunction::new(num, den.clone());
            let expected = if i == k { RationalFunction::one() } else { RationalFunction::zero() };
            if entry != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Per homological degree, the vertices of the projectives in a resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionShape {
    pub levels: Vec<Vec<u32>>,
}

impl ResolutionShape {
    /// Index of the last nonempty level.
    pub fn length(&self) -> usize {
        self.levels.iter().rposition(|l| !l.is_empty()).unwrap_or(0)
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }
}

impl Serialize for ResolutionShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let labels: Vec<Vec<String>> =
            self.levels.iter().map(|l| l.iter().map(|&s| subset_label(s)).collect()).collect();
        labels.serialize(serializer)
    }
}

/// Level `k` holds every `J` with `d(I, J) = k`.
pub fn cube_simple_resolution_shape(n: usize, i: u32) -> Result<ResolutionShape> {
    let cube = CubeAlgebra::new(n)?;
    check_subset(n, i)?;
    let mut levels = vec![Vec::new(); n + 1];
    for j in cube.vertices() {
        levels[cube.distance(i, j) as usize].push(j);
    }
    Ok(ResolutionShape { levels })
}

/// Hilbert series of `Hom(R/x^I, R/x^J) ≅ (x^J : x^I)/(x^J)` over
/// `R = k[x_1, …, x_n]` with standard grading.
pub fn bn_hom_hilbert(n: usize, i: u32, j: u32) -> Result<RationalFunction> {
    check_n(n)?;
    check_subset(n, i)?;
    check_subset(n, j)?;
    let num = &LaurentPoly::t(popcount(j & !i)) * &one_minus_t_pow(popcount(i & j), 1);
    Ok(RationalFunction::new(num, one_minus_t_pow(1, n)))
}

/// The same Hom space graded by path length in the cube, where each arrow
/// has degree one and the loops `x_k` at a vertex containing `k` have
/// degree two.
pub fn bn_hom_hilbert_path_length(n: usize, i: u32, j: u32) -> Result<RationalFunction> {
    check_n(n)?;
    check_subset(n, i)?;
    check_subset(n, j)?;
    let num = &LaurentPoly::t(popcount(i ^ j)) * &one_minus_t_pow(2 * popcount(i & j), 1);
    Ok(RationalFunction::new(num, one_minus_t_pow(2, n)))
}

/// The cube shape with every `∅` removed.
pub fn bn_resolution_shape(n: usize, i: u32) -> Result<ResolutionShape> {
    if i == 0 {
        return Err(argument("∅ is the deleted vertex of B_n"));
    }
    let mut shape = cube_simple_resolution_shape(n, i)?;
    for level in &mut shape.levels {
        level.retain(|&j| j != 0);
    }
    let len = shape.length();
    shape.levels.truncate(len + 1);
    Ok(shape)
}

/// Largest shape length over the simples of `B_n`. This is `n` for
/// `n >= 2` and `0` for `n = 1`, where `B_1 = k` is semisimple.
pub fn bn_gldim(n: usize) -> Result<usize> {
    check_n(n)?;
    (1..1u32 << n).map(|i| bn_resolution_shape(n, i).map(|s| s.length())).try_fold(0, |m, l| l.map(|l| m.max(l)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Grading {
    /// Each variable in degree one.
    Standard,
    /// Path length in the cube.
    PathLength,
}

/// For every `K ≠ ∅`, the alternating sum over the `B_n` shape of `S_I` of
/// the shifted Hom series `Hom(M_J, M_K)`. Exactness of the resolution
/// means this is `1` at `K = I` and `0` elsewhere.
///
/// The shift of `P_J` is `t^{|J∖I|}` in the standard grading and
/// `t^{d(I,J)}` in the path-length grading.
pub fn bn_exactness_sums(n: usize, i: u32, grading: Grading) -> Result<Vec<(u32, RationalFunction)>> {
    let shape = bn_resolution_shape(n, i)?;
    (1..1u32 << n)
        .map(|k| {
            let mut terms = Vec::new();
            for (deg, level) in shape.levels.iter().enumerate() {
                for &j in level {
                    let (shift, series) = match grading {
                        Grading::Standard => (popcount(j & !i), bn_hom_hilbert(n, j, k)?),
                        Grading::PathLength => (deg as i64, bn_hom_hilbert_path_length(n, j, k)?),
                    };
                    let sign = if deg % 2 == 0 { 1 } else { -1 };
                    let factor = RationalFunction::from_poly(LaurentPoly::monomial(shift, q(sign)));
                    terms.push(&factor * &series);
                }
            }
            Ok((k, RationalFunction::sum(&terms)))
        })
        .collect()
}

/// The `B_n` resolution shape of `S_I` is exact in both gradings.
pub fn bn_exactness_check(n: usize, i: u32) -> Result<bool> {
    for grading in [Grading::Standard, Grading::PathLength] {
        for (k, sum) in bn_exactness_sums(n, i, grading)? {
            let expected = if k == i { RationalFunction::one() } else { RationalFunction::zero() };
            if sum != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Upper bound on the global dimension of `B_n` with the summand `K`
/// removed as well. Every occurrence of `K` at position `p` in the shape of
/// another simple is replaced by the tail of the shape of `S_K` (which
/// never contains `K`), starting at position `p`.
pub fn deleted_gldim_bound(n: usize, k: u32) -> Result<usize> {
    check_n(n)?;
    check_subset(n, k)?;
    if k == 0 {
        return bn_gldim(n);
    }
    let k_shape = bn_resolution_shape(n, k)?;
    let mut bound = 0;
    for i in (1..1u32 << n).filter(|&i| i != k) {
        let shape = bn_resolution_shape(n, i)?;
        let mut spliced: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (p, level) in shape.levels.iter().enumerate() {
            for &j in level {
                if j == k {
                    for (qpos, tail) in k_shape.levels.iter().enumerate().skip(1) {
                        spliced.entry(p + qpos - 1).or_default().extend(tail);
                    }
                } else {
                    spliced.entry(p).or_default().push(j);
                }
            }
        }
        debug_assert!(spliced.values().flatten().all(|&j| j != k));
        let len = spliced.iter().filter(|(_, v)| !v.is_empty()).map(|(&p, _)| p).max().unwrap_or(0);
        bound = bound.max(len);
    }
    Ok(bound)
}

/// A monomial `c · t_1^{e_1} ⋯ t_n^{e_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Monomial {
    coeff: i64,
    exps: Vec<u32>,
}

impl Monomial {
    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: self.coeff * other.coeff,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Expands `⊗_k [[1, t_k], [t_k, 1]]` by Kronecker products and compares
/// every entry `(I, J)` with `∏_k t_k^{i_k + j_k mod 2}`.
pub fn cube_tensor_identity_check(n: usize) -> Result<bool> {
    if n == 0 || n > 6 {
        return Err(argument(format!("n = {n} must lie in 1..=6")));
    }
    let unit = Monomial { coeff: 1, exps: vec![0; n] };
    let mut tensor = vec![vec![unit]];
    for k in 0..n {
        let var = |a: usize, b: usize| {
            let mut exps = vec![0; n];
            exps[k] = u32::from(a != b);
            Monomial { coeff: 1, exps }
        };
        let size = tensor.len();
        let mut next = vec![vec![Monomial { coeff: 0, exps: vec![0; n] }; 2 * size]; 2 * size];
        for a in 0..2 {
            for b in 0..2 {
                for (r, row) in tensor.iter().enumerate() {
                    for (c, m) in row.iter().enumerate() {
                        next[a * size + r][b * size + c] = var(a, b).mul(m);
                    }
                }
            }
        }
        tensor = next;
    }
    Ok(tensor.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, m)| m.coeff == 1 && (0..n).all(|k| m.exps[k] == ((i >> k & 1) + (j >> k & 1)) as u32 % 2))
    }))
}
