//! Univariate Laurent polynomials and rational functions with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::{q, Q};

/// Finitely supported `Σ c_d t^d`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    pub fn monomial(degree: i64, coefficient: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(degree, coefficient);
        }
        LaurentPoly { terms }
    }

    /// `t^d`.
    pub fn t(degree: i64) -> Self {
        Self::monomial(degree, Q::one())
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_coeffs(start: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(start + k as i64, q(c));
        }
        p
    }

    pub fn add_term(&mut self, degree: i64, coefficient: Q) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(degree).or_insert_with(Q::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn coefficient(&self, degree: i64) -> Q {
        self.terms.get(&degree).cloned().unwrap_or_else(Q::zero)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single term `(degree, coefficient)`, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, &Q)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&d, c)| (d, c))
        } else {
            None
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&d, c)| (d + by, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&d, x)| (d, x * c)).collect() }
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&d, c)| (d, if d % 2 == 0 { c.clone() } else { -c.clone() })).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Integer coefficient list from the lowest degree, if all coefficients
    /// are integral.
    pub fn integer_coeffs(&self) -> Option<(i64, Vec<i64>)> {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Some((0, Vec::new()));
        };
        (lo..=hi)
            .map(|d| {
                let c = self.coefficient(d);
                c.is_integer().then(|| i64::try_from(c.to_integer()).ok()).flatten()
            })
            .collect::<Option<Vec<_>>>()
            .map(|v| (lo, v))
    }

    fn dense(&self) -> Vec<Q> {
        let hi = self.max_degree().unwrap_or(-1);
        (0..=hi).map(|d| self.coefficient(d)).collect()
    }

    fn from_dense(coeffs: &[Q]) -> Self {
        let mut p = Self::zero();
        for (d, c) in coeffs.iter().enumerate() {
            p.add_term(d as i64, c.clone());
        }
        p
    }
}

/// Quotient and remainder of polynomials (dense, lowest degree first).
fn div_rem(num: &[Q], den: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = den[dl - 1].clone();
    if rem.len() < dl {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Q::zero(); rem.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dl - 1] / &lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dl - 1);
    trim(&mut rem);
    (quot, rem)
}

fn trim(v: &mut Vec<Q>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &lead;
        }
    }
    x
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&d, c)| (d, -c.clone())).collect() }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&d, c)) in self.terms.iter().enumerate() {
            let neg = *c < Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff_shown = !mag.is_one() || d == 0;
            if coeff_shown {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

/// `num / den` in lowest terms: `den` is a polynomial with constant term 1
/// and no common factor with `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalFunctionJson {
    pub numerator_start: i64,
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction { num, den: LaurentPoly::one() };
        }
        let den_low = den.min_degree().unwrap();
        let num_low = num.min_degree().unwrap();
        let den_poly = den.shift(-den_low).dense();
        let num_poly = num.shift(-num_low).dense();
        let g = poly_gcd(&num_poly, &den_poly);
        let (num_red, _) = div_rem(&num_poly, &g);
        let (den_red, _) = div_rem(&den_poly, &g);
        let c0 = den_red[0].clone();
        let num = LaurentPoly::from_dense(&num_red).shift(num_low - den_low).scale(&c0.recip());
        let den = LaurentPoly::from_dense(&den_red).scale(&c0.recip());
        RationalFunction { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.max_degree()? - self.den.max_degree().unwrap())
    }

    pub fn recip(&self) -> Self {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Laurent expansion coefficients at degrees `start..start + count`.
    pub fn expand(&self, start: i64, count: usize) -> Vec<Q> {
        // den has constant term 1, so 1/den is a power series
        let hi = start + count as i64;
        let lo = self.num.min_degree().unwrap_or(start).min(start);
        let len = (hi - lo).max(0) as usize;
        let mut out = vec![Q::zero(); len];
        for k in 0..len {
            let d = lo + k as i64;
            let mut c = self.num.coefficient(d);
            for (e, x) in self.den.terms().filter(|(e, _)| *e > 0) {
                if (e as usize) <= k {
                    c -= x * &out[k - e as usize];
                }
            }
            out[k] = c;
        }
        out.split_off((start - lo) as usize)
    }

    /// Sum of many fractions, reducing once at the end.
    pub fn sum<'a, I: IntoIterator<Item = &'a RationalFunction>>(items: I) -> Self {
        let mut num = LaurentPoly::zero();
        let mut den = LaurentPoly::one();
        for f in items {
            if f.is_zero() {
                continue;
            }
            if f.den == den {
                num = &num + &f.num;
            } else {
                num = &(&num * &f.den) + &(&f.num * &den);
                den = &den * &f.den;
            }
        }
        RationalFunction::new(num, den)
    }

    pub fn to_json(&self) -> RationalFunctionJson {
        let start = self.num.min_degree().unwrap_or(0);
        let hi = self.num.max_degree().unwrap_or(-1);
        RationalFunctionJson {
            numerator_start: start,
            numerator: (start..=hi).map(|d| self.num.coefficient(d).to_string()).collect(),
            denominator: (0..=self.den.max_degree().unwrap()).map(|d| self.den.coefficient(d).to_string()).collect(),
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::sum([self, rhs])
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let neg = RationalFunction { num: -&rhs.num, den: rhs.den.clone() };
        RationalFunction::sum([self, &neg])
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl LaurentPoly {
    fn is_one_poly(&self) -> bool {
        *self == LaurentPoly::one()
    }
}
