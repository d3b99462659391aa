//! Exact enumeration of polynomial permutation classes.
//!
//! A polynomial class is described as the union of the grid classes of a
//! finite set of peg permutations. The pipeline in [`enumerate`] completes
//! that set under the peg order, drops non-compact members, cleans the rest
//! into disjoint cross-sections and sums an inclusion-exclusion generating
//! function over each one. The result is an exact count for every length and
//! the eventual polynomial in the binomial basis.
//!
//! [`rearrange`] builds peg-set descriptions for the classes reachable from
//! the identity by at most `k` block-sorting moves, and [`oracle`] provides
//! brute-force ground truth for all of the above.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod enumerate;
pub mod oracle;
mod packed;
pub mod peg;
pub mod perm;
pub mod rearrange;
pub mod vecclass;

pub use enumerate::{
    build_cross_sections, enumerate_pegset, BinomialPolynomial, CountingFunction, CrossSection,
    Enumeration,
};
pub use error::{Error, Result};
pub use oracle::OracleLimits;
pub use peg::{Decoration, PegPermutation, PegSet};
pub use perm::{MonotoneRun, Permutation, RunDirection};
pub use rearrange::OperationKind;
pub use vecclass::{Cap, IntVector, VectorClass};
