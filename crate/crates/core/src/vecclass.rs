//! Positive-integer vectors under the product order, and their downsets.
//!
//! A [`VectorClass`] is a downset of `P^m` given by per-coordinate caps plus a
//! finite basis of minimal excluded vectors. Membership is "within the caps and
//! containing no basis element".

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// An m-tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(Vec<u32>);

impl IntVector {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if let Some(index) = coords.iter().position(|&c| c == 0) {
            return Err(Error::ZeroCoordinate { index });
        }
        Ok(IntVector(coords))
    }

    /// The all-one vector, the bottom of the lattice.
    pub fn ones(dim: usize) -> Self {
        IntVector(vec![1; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the coordinates.
    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// Coordinatewise maximum.
    pub fn join(&self, other: &IntVector) -> Result<IntVector> {
        self.check_dim(other.dim())?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &IntVector) -> IntVector {
        IntVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Product order: every coordinate of `self` is at most the one in `other`.
    /// Vectors of different dimension are incomparable.
    pub fn le(&self, other: &IntVector) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn within(&self, caps: &[Cap]) -> bool {
        self.0.iter().zip(caps).all(|(&c, cap)| cap.admits(c))
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: dim,
            })
        }
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Upper bound on one coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cap {
    Finite(u32),
    Unbounded,
}

impl Cap {
    pub fn admits(self, value: u32) -> bool {
        match self {
            Cap::Finite(c) => value <= c,
            Cap::Unbounded => true,
        }
    }
}

impl Ord for Cap {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Cap::Finite(a), Cap::Finite(b)) => a.cmp(b),
            (Cap::Finite(_), Cap::Unbounded) => Ordering::Less,
            (Cap::Unbounded, Cap::Finite(_)) => Ordering::Greater,
            (Cap::Unbounded, Cap::Unbounded) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Cap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cap::Finite(c) => write!(f, "{c}"),
            Cap::Unbounded => f.write_str("∞"),
        }
    }
}

/// A downset of positive-integer vectors of a fixed dimension.
///
/// Invariant: `basis` is a sorted antichain and every element lies within `caps`
/// (elements outside the caps exclude nothing and are dropped).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorClass {
    caps: Vec<Cap>,
    basis: Vec<IntVector>,
}

impl VectorClass {
    pub fn new(caps: Vec<Cap>, basis: Vec<IntVector>) -> Result<Self> {
        for b in &basis {
            b.check_dim(caps.len())?;
        }
        Ok(Self::normalized(caps, basis))
    }

    /// Every vector of dimension `dim`.
    pub fn full(dim: usize) -> Self {
        VectorClass {
            caps: vec![Cap::Unbounded; dim],
            basis: Vec::new(),
        }
    }

    /// The box of vectors below `caps`.
    pub fn with_caps(caps: Vec<Cap>) -> Self {
        VectorClass {
            caps,
            basis: Vec::new(),
        }
    }

    fn normalized(caps: Vec<Cap>, basis: Vec<IntVector>) -> Self {
        let basis = minimal_elements(basis.into_iter().filter(|b| b.within(&caps)).collect());
        VectorClass { caps, basis }
    }

    pub fn dim(&self) -> usize {
        self.caps.len()
    }

    pub fn caps(&self) -> &[Cap] {
        &self.caps
    }

    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    pub fn member(&self, v: &IntVector) -> Result<bool> {
        v.check_dim(self.dim())?;
        Ok(v.within(&self.caps) && self.basis.iter().all(|b| !b.le(v)))
    }

    /// Basis of the same downset with the caps expressed as excluded vectors.
    pub fn folded_basis(&self) -> Vec<IntVector> {
        let mut all = caps_to_basis(&self.caps);
        all.extend(self.basis.iter().cloned());
        minimal_elements(all)
    }

    pub fn intersect(&self, other: &VectorClass) -> Result<VectorClass> {
        self.check_same_dim(other)?;
        let caps = self
            .caps
            .iter()
            .zip(&other.caps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        Ok(Self::normalized(caps, basis))
    }

    /// The union, whose basis is the minimal joins of one excluded vector from each side.
    pub fn union(&self, other: &VectorClass) -> Result<VectorClass> {
        self.check_same_dim(other)?;
        let caps: Vec<Cap> = self
            .caps
            .iter()
            .zip(&other.caps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let left = self.folded_basis();
        let right = other.folded_basis();
        let mut joins = Vec::with_capacity(left.len() * right.len());
        for v in &left {
            for w in &right {
                joins.push(v.join_unchecked(w));
            }
        }
        Ok(Self::normalized(caps, joins))
    }

    fn check_same_dim(&self, other: &VectorClass) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }
}

impl fmt::Display for VectorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("caps (")?;
        for (i, c) in self.caps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(") basis {")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

/// One excluded vector per finite cap: `cap + 1` at that coordinate, 1 elsewhere.
pub fn caps_to_basis(caps: &[Cap]) -> Vec<IntVector> {
    caps.iter()
        .enumerate()
        .filter_map(|(i, cap)| match cap {
            Cap::Finite(c) => {
                let mut v = vec![1; caps.len()];
                v[i] = c + 1;
                Some(IntVector(v))
            }
            Cap::Unbounded => None,
        })
        .collect()
}

/// The minimal elements of a set of vectors, sorted and deduplicated.
pub fn minimal_elements(mut vectors: Vec<IntVector>) -> Vec<IntVector> {
    // a vector can only be above vectors of smaller or equal norm
    vectors.sort_by(|a, b| a.norm().cmp(&b.norm()).then_with(|| a.cmp(b)));
    vectors.dedup();
    let mut kept: Vec<IntVector> = Vec::with_capacity(vectors.len());
    for v in vectors {
        if !kept.iter().any(|k| k.le(&v)) {
            kept.push(v);
        }
    }
    kept.sort();
    kept
}
