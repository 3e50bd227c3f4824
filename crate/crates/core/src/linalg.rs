//! Dense exact linear algebra over ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// column of each nonzero row. Zero rows are dropped.
pub fn rref(rows: &mut Vec<Vec<Q>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Q>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Basis of `{x : M x = 0}` for `M` given by rows with `cols` columns.
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// A subspace of `ℚ^dim` held as an RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|k| {
                let mut v = vec![Q::zero(); dim];
                v[k] = Q::one();
                v
            })
            .collect();
        Subspace { dim, basis, pivots: (0..dim).collect() }
    }

    pub fn span(dim: usize, vectors: Vec<Vec<Q>>) -> Self {
        let mut basis = vectors;
        let pivots = rref(&mut basis, dim);
        Subspace { dim, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    /// Remainder of `v` after eliminating against the basis.
    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut rows = std::mem::take(&mut self.basis);
        rows.push(v.to_vec());
        self.pivots = rref(&mut rows, self.dim);
        self.basis = rows;
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v);
        }
        out
    }

    /// Image under zeroing every coordinate outside `mask`.
    pub fn restrict(&self, mask: &[bool]) -> Subspace {
        let vectors = self
            .basis
            .iter()
            .map(|v| v.iter().zip(mask).map(|(x, &keep)| if keep { x.clone() } else { Q::zero() }).collect())
            .collect();
        Subspace::span(self.dim, vectors)
    }
}
