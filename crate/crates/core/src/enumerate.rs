//! From a peg set to exact counts.
//!
//! The set is completed under the peg order, non-compact pegs are dropped and
//! every survivor is cleaned into a clean peg plus a cap vector. Pegs that
//! clean to the same peg have their vector classes united, which yields a
//! disjoint family of cross-sections. Each cross-section contributes an
//! inclusion-exclusion sum of terms `x^a / (1 - x)^s` over subsets of its basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::hash_map::Entry;
use hashbrown::{HashMap, HashSet};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::packed;
use crate::peg::{PegPermutation, PegSet};
use crate::vecclass::{IntVector, VectorClass};

/// Above this many basis elements, subsets are merged by their join instead of
/// being listed one by one.
pub const DEFAULT_COLLAPSE_LIMIT: usize = 20;

/// A clean peg together with the vectors it may be inflated by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSection {
    pub peg: PegPermutation,
    pub class: VectorClass,
}

impl CrossSection {
    /// The exclusion basis the generating function sums over: caps folded in,
    /// and only vectors inside the ambient class (dotted coordinates equal 1),
    /// since vectors outside it exclude nothing.
    pub fn effective_basis(&self) -> Vec<IntVector> {
        let dotted: Vec<bool> = self
            .peg
            .decorations()
            .iter()
            .map(|d| !d.is_signed())
            .collect();
        self.class
            .folded_basis()
            .into_iter()
            .filter(|b| {
                b.coords()
                    .iter()
                    .zip(&dotted)
                    .all(|(&c, &dot)| !dot || c == 1)
            })
            .collect()
    }

    /// Inclusion-exclusion generating function of this cross-section.
    pub fn gf(&self) -> CountingFunction {
        self.gf_with_limit(DEFAULT_COLLAPSE_LIMIT)
    }

    pub fn gf_with_limit(&self, collapse_above: usize) -> CountingFunction {
        let basis = self.effective_basis();
        let floor = self.peg.min_fill_vector();
        let s = self.peg.signed_count() as u32;
        let mut f = CountingFunction::zero();
        if basis.len() > collapse_above {
            // join -> signed multiplicity, one basis element at a time
            let mut joins: HashMap<IntVector, i64> = HashMap::new();
            joins.insert(floor, 1);
            for b in &basis {
                let mut next = joins.clone();
                for (u, c) in &joins {
                    *next.entry(u.join_unchecked(b)).or_insert(0) -= c;
                }
                next.retain(|_, c| *c != 0);
                joins = next;
            }
            for (u, c) in joins {
                f.add_term(c, u.norm(), s);
            }
        } else {
            subsets(&basis, 0, floor, 1, &mut |join, sign| {
                f.add_term(sign, join.norm(), s)
            });
        }
        f
    }
}

fn subsets(
    basis: &[IntVector],
    from: usize,
    join: IntVector,
    sign: i64,
    emit: &mut impl FnMut(&IntVector, i64),
) {
    emit(&join, sign);
    for i in from..basis.len() {
        subsets(basis, i + 1, join.join_unchecked(&basis[i]), -sign, emit);
    }
}

impl fmt::Display for CrossSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with {}", self.peg, self.class)
    }
}

/// Complete, compact, clean and group a peg set into disjoint cross-sections,
/// ordered by peg.
pub fn build_cross_sections(pegs: &PegSet) -> Vec<CrossSection> {
    let mut grouped: BTreeMap<PegPermutation, VectorClass> = BTreeMap::new();
    for rho in &pegs.downclose() {
        if !rho.is_compact() {
            continue;
        }
        let (tau, caps) = rho.clean().expect("compact pegs can be cleaned");
        let class = VectorClass::with_caps(caps);
        match grouped.get_mut(&tau) {
            Some(existing) => {
                *existing = existing.union(&class).expect("same peg, same dimension");
            }
            None => {
                grouped.insert(tau, class);
            }
        }
    }
    grouped
        .into_iter()
        .map(|(peg, class)| CrossSection { peg, class })
        .collect()
}

/// A signed combination of terms `x^a / (1 - x)^s`, stored as
/// `(a, s) -> multiplicity`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountingFunction {
    terms: BTreeMap<(u64, u32), i64>,
}

impl CountingFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, coefficient: i64, a: u64, s: u32) {
        let slot = self.terms.entry((a, s)).or_insert(0);
        *slot += coefficient;
        if *slot == 0 {
            self.terms.remove(&(a, s));
        }
    }

    pub fn add(&mut self, other: &CountingFunction) {
        for (&(a, s), &c) in &other.terms {
            self.add_term(c, a, s);
        }
    }

    /// `(multiplicity, a, s)` triples with non-zero multiplicity.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u64, u32)> + '_ {
        self.terms.iter().map(|(&(a, s), &c)| (c, a, s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^n`.
    pub fn eval(&self, n: u64) -> BigInt {
        let mut total = BigInt::zero();
        for (c, a, s) in self.terms() {
            total += BigInt::from(c) * series_coefficient(a, s, n);
        }
        total
    }

    /// First length from which every term agrees with its polynomial form.
    pub fn valid_from(&self) -> u64 {
        self.terms()
            .map(|(_, a, s)| if s == 0 { a + 1 } else { a })
            .max()
            .unwrap_or(0)
            .max(1)
    }

    /// The eventual polynomial, written in the basis `C(n, j)`.
    pub fn to_binomial_poly(&self) -> BinomialPolynomial {
        let degree = self
            .terms()
            .map(|(_, _, s)| s)
            .max()
            .unwrap_or(0)
            .saturating_sub(1) as usize;
        // values of the polynomial part at n = 0..=degree, then forward differences
        let mut values: Vec<BigInt> = (0..=degree as i64)
            .map(|n| {
                let mut total = BigInt::zero();
                for (c, a, s) in self.terms() {
                    if s > 0 {
                        let top = n - a as i64 + i64::from(s) - 1;
                        total += BigInt::from(c) * binomial_signed(top, u64::from(s - 1));
                    }
                }
                total
            })
            .collect();
        let mut coeffs = Vec::with_capacity(values.len());
        while !values.is_empty() {
            coeffs.push(values[0].clone());
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BinomialPolynomial {
            coeffs,
            valid_from: self.valid_from(),
        }
    }
}

/// `[x^n] x^a / (1 - x)^s`.
fn series_coefficient(a: u64, s: u32, n: u64) -> BigInt {
    if n < a {
        return BigInt::zero();
    }
    if s == 0 {
        return if n == a {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    binomial(n - a + u64::from(s) - 1, u64::from(s) - 1)
}

/// `C(n, k)` for non-negative `n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(x, k) = x (x - 1) ... (x - k + 1) / k!` for any integer `x`.
fn binomial_signed(x: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(x - i as i64) / BigInt::from(i + 1);
    }
    acc
}

/// `sum_j coeffs[j] * C(n, j)`, exact for `n >= valid_from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPolynomial {
    pub coeffs: Vec<BigInt>,
    pub valid_from: u64,
}

impl BinomialPolynomial {
    pub fn eval(&self, n: u64) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * binomial(n, j as u64))
            .sum()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl fmt::Display for BinomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "C(n,{j})")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Counts for `n = 1..=n_max` together with the eventual polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub counts: Vec<BigInt>,
    pub polynomial: BinomialPolynomial,
    pub function: CountingFunction,
    pub cross_sections: usize,
}

impl Enumeration {
    /// Count for length `n` (1-based), if it was computed.
    pub fn count(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.counts.get(i))
    }
}

/// Enumerate the union of the grid classes of `pegs` for lengths `1..=n_max`.
///
/// Same result as [`enumerate_cross_sections`] on [`build_cross_sections`],
/// but the cross-sections are never held all at once.
pub fn enumerate_pegset(pegs: &PegSet, n_max: usize) -> Enumeration {
    match layered_function(pegs) {
        Some((function, sections)) => finish(function, sections, n_max),
        None => enumerate_cross_sections(&build_cross_sections(pegs), n_max),
    }
}

pub fn enumerate_cross_sections(sections: &[CrossSection], n_max: usize) -> Enumeration {
    let mut function = CountingFunction::zero();
    for cs in sections {
        function.add(&cs.gf());
    }
    finish(function, sections.len(), n_max)
}

fn finish(function: CountingFunction, cross_sections: usize, n_max: usize) -> Enumeration {
    let counts = (1..=n_max as u64).map(|n| function.eval(n)).collect();
    Enumeration {
        counts,
        polynomial: function.to_binomial_poly(),
        function,
        cross_sections,
    }
}

/// The counting function and number of cross-sections, walking the downset one
/// length at a time from the longest pegs down.
///
/// A clean compact peg in the downset has the whole ambient class, whose
/// generating function is the single term `x^|m| / (1 - x)^s`. Only clean pegs
/// reached purely by contracting dotted runs need their capped classes united;
/// those come from longer pegs and are settled once their own length has been
/// walked. `None` if some peg is too long to pack.
fn layered_function(pegs: &PegSet) -> Option<(CountingFunction, usize)> {
    let keys: Vec<u128> = pegs
        .iter()
        .filter(|p| !p.is_empty())
        .map(packed::pack)
        .collect::<Option<_>>()?;
    let top = keys.iter().map(|&k| packed::len(k)).max().unwrap_or(0);
    let mut pending: Vec<HashMap<u128, VectorClass>> = (0..=top).map(|_| HashMap::new()).collect();
    let mut function = CountingFunction::zero();
    let mut sections = 0;
    let mut upper: HashSet<u128> = HashSet::new();
    for m in (1..=top).rev() {
        let mut layer: HashSet<u128> = HashSet::new();
        let mut stack = Vec::new();
        let mut visit = |key: u128| {
            if layer.insert(key) {
                stack.push(key);
            }
        };
        keys.iter()
            .filter(|&&k| packed::len(k) == m)
            .for_each(|&k| visit(k));
        for &key in &upper {
            packed::for_each_deletion(key, &mut visit);
        }
        drop(upper);
        while let Some(key) = stack.pop() {
            packed::for_each_dotting(key, |k| {
                if layer.insert(k) {
                    stack.push(k);
                }
            });
        }
        for &key in &layer {
            let rho = packed::unpack(key);
            if !rho.is_compact() {
                continue;
            }
            let (tau, caps) = rho.clean().expect("compact pegs can be cleaned");
            if tau == rho {
                function.add_term(1, rho.min_fill_vector().norm(), rho.signed_count() as u32);
                sections += 1;
                continue;
            }
            let class = VectorClass::with_caps(caps);
            match pending[tau.len()].entry(packed::pack(&tau).expect("cleaning shortens")) {
                Entry::Occupied(mut e) => {
                    let united = e.get().union(&class).expect("same peg, same dimension");
                    e.insert(united);
                }
                Entry::Vacant(e) => {
                    e.insert(class);
                }
            }
        }
        for (key, class) in core::mem::take(&mut pending[m]) {
            if !layer.contains(&key) {
                function.add(
                    &CrossSection {
                        peg: packed::unpack(key),
                        class,
                    }
                    .gf(),
                );
                sections += 1;
            }
        }
        upper = layer;
    }
    Some((function, sections))
}

/// Number of vectors `v` with `|v| = n` in the cross-section, by direct
/// enumeration. Independent of the generating function; used in tests.
#[cfg(test)]
pub(crate) fn brute_force_section_count(cs: &CrossSection, n: u64) -> u64 {
    let floor = cs.peg.min_fill_vector();
    let m = floor.dim();
    let mut count = 0;
    let mut coords = alloc::vec![0u32; m];
    fn walk(
        i: usize,
        left: u64,
        cs: &CrossSection,
        floor: &IntVector,
        coords: &mut Vec<u32>,
        count: &mut u64,
    ) {
        let m = coords.len();
        if i == m {
            if left == 0 {
                let v = IntVector::new(coords.clone()).unwrap();
                if cs.class.member(&v).unwrap() {
                    *count += 1;
                }
            }
            return;
        }
        let lo = floor.coords()[i];
        let hi = if cs.peg.decorations()[i].is_signed() {
            left as u32
        } else {
            1
        };
        for c in lo..=hi {
            if u64::from(c) > left {
                break;
            }
            coords[i] = c;
            walk(i + 1, left - u64::from(c), cs, floor, coords, count);
        }
    }
    walk(0, n, cs, &floor, &mut coords, &mut count);
    count
}
