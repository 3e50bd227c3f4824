//! Numeric rationality tests for quasi-homogeneous complete intersections.
//!
//! A record is the weights of the variables and the degrees of the
//! defining equations; the criteria only ever look at these numbers.

use serde::{Deserialize, Serialize};

use crate::error::{argument, Result};
use crate::poly::{LaurentPoly, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedHypersurface {
    weights: Vec<i64>,
    degrees: Vec<i64>,
}

impl WeightedHypersurface {
    /// `degrees` may be empty, giving a weighted polynomial ring.
    pub fn new(weights: Vec<i64>, degrees: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(argument("at least one weight is required"));
        }
        if weights.iter().chain(&degrees).any(|&x| x <= 0) {
            return Err(argument("weights and degrees must be positive"));
        }
        Ok(WeightedHypersurface { weights, degrees })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }
}

/// Flenner: rational iff the weights sum to strictly more than the degrees.
pub fn flenner_is_rational(h: &WeightedHypersurface) -> bool {
    h.weights.iter().sum::<i64>() > h.degrees.iter().sum::<i64>()
}

pub fn a_invariant_hypersurface(h: &WeightedHypersurface) -> i64 {
    h.degrees.iter().sum::<i64>() - h.weights.iter().sum::<i64>()
}

/// Watanabe: a graded ring with isolated singularity is rational iff its
/// a-invariant is negative.
pub fn watanabe_is_rational(a: i64) -> bool {
    a < 0
}

/// `∏ (1 − t^{d_i}) / ∏ (1 − t^{w_j})`.
pub fn hilbert_series_hypersurface(h: &WeightedHypersurface) -> RationalFunction {
    let factor = |e: i64| &LaurentPoly::one() - &LaurentPoly::t(e);
    let num = h.degrees.iter().fold(LaurentPoly::one(), |acc, &d| &acc * &factor(d));
    let den = h.weights.iter().fold(LaurentPoly::one(), |acc, &w| &acc * &factor(w));
    RationalFunction::new(num, den)
}
