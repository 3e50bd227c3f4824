//! Exact computations with endomorphism orders over monomial curves and
//! their relatives: numerical semigroups and fractional ideals, the chain of
//! rings obtained by repeatedly taking `End(m)`, matrix orders
//! `End_R(⊕ M_i)` with their quivers, minimal graded projective resolutions
//! of simple modules, and global dimension.
//!
//! ```
//! use gldim_core::{chain::leuschke_chain, order::EndOrder, resolve, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::from_generators(&[3, 4]).unwrap();
//! let chain = leuschke_chain(&s).unwrap();
//! let order = EndOrder::build(&chain.as_ideals).unwrap();
//! let verdict = resolve::gldim(&order, &resolve::Caps::default()).unwrap();
//! assert_eq!(verdict.gldim(), Some(3));
//! ```

pub mod artinian;
pub mod chain;
pub mod cube;
pub mod error;
pub mod linalg;
pub mod order;
pub mod poly;
pub mod rational;
pub mod resolve;
pub mod semigroup;

pub use error::{Error, Result};
pub use semigroup::{DegreeSet, FractionalIdeal, NumericalSemigroup};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/semigroups.md")]
    pub struct Semigroups;
    #[doc = include_str!("../../../book/src/chains.md")]
    pub struct Chains;
    #[doc = include_str!("../../../book/src/orders.md")]
    pub struct Orders;
    #[doc = include_str!("../../../book/src/resolutions.md")]
    pub struct Resolutions;
    #[doc = include_str!("../../../book/src/artinian.md")]
    pub struct Artinian;
    #[doc = include_str!("../../../book/src/cube.md")]
    pub struct Cube;
    #[doc = include_str!("../../../book/src/rational.md")]
    pub struct Rational;
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
}
