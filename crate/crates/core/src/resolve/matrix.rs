use std::fmt;

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{MonomialAlgebra, Tag};
use crate::error::{argument, Result};
use crate::linalg::Q;
use crate::poly::{LaurentPoly, RationalFunction};

/// A map `⊕_c P_{v_c}(-s_c) → ⊕_r P_{v_r}(-s_r)`: column `c` is the image of
/// the generator of the `c`-th source summand.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: Vec<Tag>,
    cols: Vec<Tag>,
    entries: Vec<Vec<LaurentPoly>>,
}

impl LaurentMatrix {
    pub fn new(rows: Vec<Tag>, cols: Vec<Tag>, entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(argument(format!(
                "matrix entries do not match {} row tags and {} column tags",
                rows.len(),
                cols.len()
            )));
        }
        Ok(LaurentMatrix { rows, cols, entries })
    }

    /// Entry `(r, c)` is `scalars[r][c] · t^{s_c − s_r}`.
    pub fn from_scalars(rows: Vec<Tag>, cols: Vec<Tag>, scalars: &[Vec<Q>]) -> Self {
        let entries = rows
            .iter()
            .zip(scalars)
            .map(|(rt, srow)| {
                cols.iter().zip(srow).map(|(ct, x)| LaurentPoly::monomial(ct.shift - rt.shift, x.clone())).collect()
            })
            .collect();
        LaurentMatrix { rows, cols, entries }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_tags(&self) -> &[Tag] {
        &self.rows
    }

    pub fn col_tags(&self) -> &[Tag] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r][c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(LaurentPoly::is_zero)
    }

    /// The scalar coefficients when every entry is zero or a monomial of
    /// the degree its tags dictate.
    pub fn scalar_form(&self) -> Option<Vec<Vec<Q>>> {
        self.rows
            .iter()
            .zip(&self.entries)
            .map(|(rt, row)| {
                self.cols
                    .iter()
                    .zip(row)
                    .map(|(ct, p)| {
                        if p.is_zero() {
                            Some(Q::zero())
                        } else {
                            p.as_monomial().filter(|(d, _)| *d == ct.shift - rt.shift).map(|(_, c)| c.clone())
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `self · other` in the algebra: a product of monomials is kept only
    /// if its degree lies in the Hom entry of the outer tags.
    pub fn compose<A: MonomialAlgebra + ?Sized>(&self, other: &LaurentMatrix, alg: &A) -> Result<LaurentMatrix> {
        if self.cols != other.rows {
            return Err(argument("composed maps do not share a middle module"));
        }
        let mut entries = vec![vec![LaurentPoly::zero(); other.ncols()]; self.nrows()];
        for (r, rt) in self.rows.iter().enumerate() {
            for (c, ct) in other.cols.iter().enumerate() {
                let out = &mut entries[r][c];
                for m in 0..self.ncols() {
                    for (a, x) in self.entries[r][m].terms() {
                        for (b, y) in other.entries[m][c].terms() {
                            if alg.hom_contains(rt.vertex, ct.vertex, a + b) {
                                out.add_term(a + b, x * y);
                            }
                        }
                    }
                }
            }
        }
        Ok(LaurentMatrix { rows: self.rows.clone(), cols: other.cols.clone(), entries })
    }

    /// Every monomial of entry `(r, c)` has degree `s_c − s_r` and lies in
    /// `Hom(M_{v_c}, M_{v_r})`.
    pub fn grading_consistent<A: MonomialAlgebra + ?Sized>(&self, alg: &A) -> bool {
        self.cells().all(|(rt, ct, p)| {
            p.terms().all(|(d, _)| d == ct.shift - rt.shift && alg.hom_contains(rt.vertex, ct.vertex, d))
        })
    }

    /// No entry has a unit component.
    pub fn entries_in_radical<A: MonomialAlgebra + ?Sized>(&self, alg: &A) -> bool {
        self.cells().all(|(rt, ct, p)| p.terms().all(|(d, _)| alg.rad_contains(rt.vertex, ct.vertex, d)))
    }

    fn cells(&self) -> impl Iterator<Item = (&Tag, &Tag, &LaurentPoly)> {
        self.rows
            .iter()
            .zip(&self.entries)
            .flat_map(move |(rt, row)| self.cols.iter().zip(row).map(move |(ct, p)| (rt, ct, p)))
    }

    /// Rank over the field of fractions `ℚ(t)`.
    pub fn fraction_field_rank(&self) -> usize {
        let mut m: Vec<Vec<RationalFunction>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| RationalFunction::from_poly(p.clone())).collect())
            .collect();
        let mut rank = 0;
        for c in 0..self.ncols() {
            let Some(p) = (rank..m.len()).find(|&k| !m[k][c].is_zero()) else { continue };
            m.swap(rank, p);
            let inv = m[rank][c].recip();
            let pivot: Vec<RationalFunction> = m[rank].iter().map(|x| x * &inv).collect();
            for row in m.iter_mut().skip(rank + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x = &*x - &(&factor * y);
                    }
                }
            }
            m[rank] = pivot;
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.entries.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for (k, row) in cells.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (c, s) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{s:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for LaurentMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> =
            self.entries.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect();
        let mut s = serializer.serialize_struct("LaurentMatrix", 3)?;
        s.serialize_field("rows", &self.rows)?;
        s.serialize_field("cols", &self.cols)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}
