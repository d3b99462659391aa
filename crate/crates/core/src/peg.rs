//! Peg permutations and their grid classes.
//!
//! A peg permutation decorates every entry of a permutation with `+`, `-` or
//! `.` (dot). Its grid class holds every permutation obtained by inflating `+`
//! entries with increasing runs, `-` entries with decreasing runs and dotted
//! entries with at most one point. Runs may be empty.

use alloc::collections::btree_set::{self, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashSet;

use crate::error::{Error, Result};
use crate::perm::{find_embedding, Permutation};
use crate::vecclass::{Cap, IntVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    Plus,
    Minus,
    Dot,
}

impl Decoration {
    pub fn is_signed(self) -> bool {
        self != Decoration::Dot
    }

    /// Direction swap used when a block is reversed.
    pub fn flipped(self) -> Decoration {
        match self {
            Decoration::Plus => Decoration::Minus,
            Decoration::Minus => Decoration::Plus,
            Decoration::Dot => Decoration::Dot,
        }
    }

    /// Whether `lower` may sit under `self` in the peg order.
    pub fn admits(self, lower: Decoration) -> bool {
        lower == self || lower == Decoration::Dot
    }

    pub fn symbol(self) -> char {
        match self {
            Decoration::Plus => '+',
            Decoration::Minus => '-',
            Decoration::Dot => '.',
        }
    }
}

/// A permutation with a decoration on every entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PegPermutation {
    base: Permutation,
    decorations: Vec<Decoration>,
}

impl PegPermutation {
    pub fn new(base: Permutation, decorations: Vec<Decoration>) -> Result<Self> {
        if base.len() != decorations.len() {
            return Err(Error::LengthMismatch {
                expected: base.len(),
                found: decorations.len(),
            });
        }
        Ok(PegPermutation { base, decorations })
    }

    /// The peg whose entries are order isomorphic to the keys, in order.
    pub fn from_keys<K: Ord>(entries: &[(K, Decoration)]) -> Self {
        let keys: Vec<&K> = entries.iter().map(|(k, _)| k).collect();
        PegPermutation {
            base: Permutation::standardize(&keys),
            decorations: entries.iter().map(|&(_, d)| d).collect(),
        }
    }

    /// A single entry with the given decoration.
    pub fn single(decoration: Decoration) -> Self {
        PegPermutation {
            base: Permutation::identity(1),
            decorations: vec![decoration],
        }
    }

    pub fn len(&self) -> usize {
        self.decorations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decorations.is_empty()
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn decorations(&self) -> &[Decoration] {
        &self.decorations
    }

    pub fn values(&self) -> &[u32] {
        self.base.entries()
    }

    pub fn signed_count(&self) -> usize {
        self.decorations.iter().filter(|d| d.is_signed()).count()
    }

    /// Peg order: `self` is obtained from `other` by deleting entries and
    /// turning signs into dots.
    pub fn peg_le(&self, other: &PegPermutation) -> bool {
        find_embedding(other.values(), self.values(), |j, i| {
            other.decorations[i].admits(self.decorations[j])
        })
        .is_some()
    }

    /// Pegs one step below in the peg order: one sign turned into a dot, or
    /// one entry deleted (never down to the empty peg).
    pub fn reductions(&self) -> Vec<PegPermutation> {
        let mut out = Vec::with_capacity(2 * self.len());
        for (i, d) in self.decorations.iter().enumerate() {
            if d.is_signed() {
                let mut decorations = self.decorations.clone();
                decorations[i] = Decoration::Dot;
                out.push(PegPermutation {
                    base: self.base.clone(),
                    decorations,
                });
            }
        }
        if self.len() > 1 {
            for i in 0..self.len() {
                out.push(self.without_entry(i));
            }
        }
        out
    }

    fn without_entry(&self, i: usize) -> PegPermutation {
        let removed = self.values()[i];
        let values: Vec<u32> = self
            .values()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        let mut decorations = self.decorations.clone();
        decorations.remove(i);
        PegPermutation {
            base: Permutation::new(values).expect("deleting an entry keeps a permutation"),
            decorations,
        }
    }

    /// Merge positions `i` and `i + 1`, which must form an interval, into one
    /// entry carrying `decoration`.
    fn contract_pair(&self, i: usize, decoration: Decoration) -> PegPermutation {
        let mut merged = self.without_entry(i + 1);
        merged.decorations[i] = decoration;
        merged
    }

    /// Direction of the adjacent pair at `i, i + 1` if it is an interval.
    fn pair_direction(&self, i: usize) -> Option<Decoration> {
        let v = self.values();
        if v[i + 1] == v[i] + 1 {
            Some(Decoration::Plus)
        } else if v[i] == v[i + 1] + 1 {
            Some(Decoration::Minus)
        } else {
            None
        }
    }

    /// If the pair at `i` is an interval whose two runs merge into one run of
    /// its direction (`1+2+`, `1+2.`, `1.2+` and the decreasing mirrors),
    /// the decoration of the merged entry.
    fn mergeable_pair(&self, i: usize) -> Option<Decoration> {
        let dir = self.pair_direction(i)?;
        let (a, b) = (self.decorations[i], self.decorations[i + 1]);
        let fits = |d: Decoration| d == dir || d == Decoration::Dot;
        let any_signed = a.is_signed() || b.is_signed();
        (fits(a) && fits(b) && any_signed).then_some(dir)
    }

    /// No interval of the patterns `1+2+`, `1+2.`, `1.2+`, `2-1-`, `2-1.`, `2.1-`.
    pub fn is_compact(&self) -> bool {
        (0..self.len().saturating_sub(1)).all(|i| self.mergeable_pair(i).is_none())
    }

    /// For compact pegs: no interval of the patterns `1.2.` or `2.1.`.
    pub fn is_clean(&self) -> Result<bool> {
        if !self.is_compact() {
            return Err(Error::NotCompact);
        }
        Ok((0..self.len().saturating_sub(1)).all(|i| !self.dotted_pair(i)))
    }

    fn dotted_pair(&self, i: usize) -> bool {
        self.decorations[i] == Decoration::Dot
            && self.decorations[i + 1] == Decoration::Dot
            && self.pair_direction(i).is_some()
    }

    /// Contract mergeable intervals until the peg is compact. The grid class is
    /// unchanged.
    pub fn normalize(&self) -> PegPermutation {
        let mut current = self.clone();
        loop {
            let hit = (0..current.len().saturating_sub(1))
                .find_map(|i| current.mergeable_pair(i).map(|d| (i, d)));
            match hit {
                Some((i, d)) => current = current.contract_pair(i, d),
                None => return current,
            }
        }
    }

    /// Contract every maximal monotone interval of dotted entries into one
    /// signed entry.
    ///
    /// Returns the clean peg with a cap per entry: `d` for an entry contracted
    /// from `d` dots, 1 for a remaining dot and unbounded for a signed entry.
    pub fn clean(&self) -> Result<(PegPermutation, Vec<Cap>)> {
        if !self.is_compact() {
            return Err(Error::NotCompact);
        }
        let n = self.len();
        let mut keys = Vec::with_capacity(n);
        let mut caps = Vec::with_capacity(n);
        let mut i = 0;
        while i < n {
            let d = self.decorations[i];
            if d.is_signed() {
                keys.push((self.values()[i], d));
                caps.push(Cap::Unbounded);
                i += 1;
                continue;
            }
            let mut j = i + 1;
            let mut dir = None;
            while j < n && self.dotted_pair(j - 1) {
                let step = self.pair_direction(j - 1);
                if dir.is_some() && dir != step {
                    break;
                }
                dir = step;
                j += 1;
            }
            let run = (j - i) as u32;
            keys.push((self.values()[i], dir.unwrap_or(Decoration::Dot)));
            caps.push(Cap::Finite(run));
            i = j;
        }
        Ok((PegPermutation::from_keys(&keys), caps))
    }

    /// The permutation obtained by inflating entry `i` with a run of length `v[i]`.
    pub fn inflate(&self, v: &IntVector) -> Result<Permutation> {
        if v.dim() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: v.dim(),
            });
        }
        let parts: Vec<Permutation> = self
            .decorations
            .iter()
            .zip(v.coords())
            .enumerate()
            .map(|(index, (&d, &length))| match d {
                Decoration::Plus => Ok(Permutation::identity(length as usize)),
                Decoration::Minus => Ok(Permutation::decreasing(length as usize)),
                Decoration::Dot if length == 1 => Ok(Permutation::identity(1)),
                Decoration::Dot => Err(Error::DottedInflation { index, length }),
            })
            .collect::<Result<_>>()?;
        self.base.inflate(&parts)
    }

    /// Minimum filling vector: 2 at signed entries, 1 at dotted ones.
    pub fn min_fill_vector(&self) -> IntVector {
        let coords = self
            .decorations
            .iter()
            .map(|d| if d.is_signed() { 2 } else { 1 })
            .collect();
        IntVector::new(coords).expect("coordinates are positive")
    }

    /// Whether `pi` fills this peg: signed entries take at least two points,
    /// dotted entries exactly one.
    pub fn fills(&self, pi: &Permutation) -> bool {
        PartitionSearch::new(pi, self, SizeRule::Filling).count(true) > 0
    }

    /// Membership of `pi` in the grid class.
    pub fn grid_member(&self, pi: &Permutation) -> bool {
        PartitionSearch::new(pi, self, SizeRule::Grid).count(true) > 0
    }

    /// Number of distinct partitions of `pi` compatible with this peg (parts may be empty).
    pub fn partition_count(&self, pi: &Permutation) -> usize {
        PartitionSearch::new(pi, self, SizeRule::Grid).count(false)
    }
}

#[derive(Clone, Copy)]
enum SizeRule {
    Grid,
    Filling,
}

/// Backtracking over segment lengths, one segment of `pi` per peg entry.
struct PartitionSearch<'a> {
    pi: &'a [u32],
    peg: &'a PegPermutation,
    rule: SizeRule,
    /// (min, max) value of each placed non-empty segment
    ranges: Vec<Option<(u32, u32)>>,
    /// largest number of points the entries `i..` can absorb
    capacity: Vec<usize>,
    /// fewest points the entries `i..` need
    demand: Vec<usize>,
}

impl<'a> PartitionSearch<'a> {
    fn new(pi: &'a Permutation, peg: &'a PegPermutation, rule: SizeRule) -> Self {
        let m = peg.len();
        let mut capacity = vec![0usize; m + 1];
        let mut demand = vec![0usize; m + 1];
        for i in (0..m).rev() {
            let (lo, hi) = Self::bounds(rule, peg.decorations[i]);
            capacity[i] = capacity[i + 1].saturating_add(hi);
            demand[i] = demand[i + 1] + lo;
        }
        PartitionSearch {
            pi: pi.entries(),
            peg,
            rule,
            ranges: Vec::with_capacity(m),
            capacity,
            demand,
        }
    }

    fn bounds(rule: SizeRule, d: Decoration) -> (usize, usize) {
        match (rule, d.is_signed()) {
            (SizeRule::Grid, true) => (0, usize::MAX),
            (SizeRule::Grid, false) => (0, 1),
            (SizeRule::Filling, true) => (2, usize::MAX),
            (SizeRule::Filling, false) => (1, 1),
        }
    }

    fn count(mut self, first_only: bool) -> usize {
        self.step(0, first_only)
    }

    fn step(&mut self, pos: usize, first_only: bool) -> usize {
        let i = self.ranges.len();
        let remaining = self.pi.len() - pos;
        if i == self.peg.len() {
            return usize::from(remaining == 0);
        }
        if remaining > self.capacity[i] || remaining < self.demand[i] {
            return 0;
        }
        let d = self.peg.decorations[i];
        let (lo, hi) = Self::bounds(self.rule, d);
        let hi = hi.min(remaining - self.demand[i + 1]);
        let mut found = 0;
        for len in lo..=hi {
            let seg = &self.pi[pos..pos + len];
            if !run_matches(seg, d) {
                // a longer segment extends a broken run
                break;
            }
            let range = seg
                .iter()
                .fold(None, |acc: Option<(u32, u32)>, &x| match acc {
                    None => Some((x, x)),
                    Some((a, b)) => Some((a.min(x), b.max(x))),
                });
            if let Some(r) = range {
                if !self.consistent(i, r) {
                    continue;
                }
            }
            self.ranges.push(range);
            found += self.step(pos + len, first_only);
            self.ranges.pop();
            if first_only && found > 0 {
                break;
            }
        }
        found
    }

    fn consistent(&self, i: usize, (lo, hi): (u32, u32)) -> bool {
        let values = self.peg.values();
        self.ranges.iter().enumerate().all(|(j, r)| match r {
            None => true,
            Some((a, b)) => {
                if values[j] < values[i] {
                    *b < lo
                } else {
                    *a > hi
                }
            }
        })
    }
}

fn run_matches(seg: &[u32], d: Decoration) -> bool {
    match d {
        Decoration::Plus => seg.windows(2).all(|w| w[0] < w[1]),
        Decoration::Minus => seg.windows(2).all(|w| w[0] > w[1]),
        Decoration::Dot => seg.len() <= 1,
    }
}

impl fmt::Display for PegPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, d)) in self.values().iter().zip(&self.decorations).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}{}", d.symbol())?;
        }
        Ok(())
    }
}

/// Whitespace-separated tokens such as `3- 1. 4+ 2+`.
impl FromStr for PegPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut decorations = Vec::new();
        for token in s.split_whitespace() {
            let (value, decoration) = parse_token(token)?;
            values.push(value);
            decorations.push(decoration);
        }
        let base = Permutation::new(values).map_err(|_| Error::Parse {
            token: s.trim().to_string(),
            reason: "values do not form a permutation of 1..m",
        })?;
        PegPermutation::new(base, decorations)
    }
}

/// One `<value><decoration>` token.
pub fn parse_token(token: &str) -> Result<(u32, Decoration)> {
    let bad = |reason| Error::Parse {
        token: token.to_string(),
        reason,
    };
    let last = token.chars().last().ok_or_else(|| bad("empty token"))?;
    let decoration = match last {
        '+' => Decoration::Plus,
        '-' => Decoration::Minus,
        '.' | '•' => Decoration::Dot,
        _ => return Err(bad("expected a value followed by '+', '-' or '.'")),
    };
    let digits = &token[..token.len() - last.len_utf8()];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("expected a value followed by '+', '-' or '.'"));
    }
    let value: u32 = digits.parse().map_err(|_| bad("value out of range"))?;
    if value == 0 {
        return Err(bad("values start at 1"));
    }
    Ok((value, decoration))
}

/// A set of peg permutations, kept in a deterministic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PegSet(BTreeSet<PegPermutation>);

impl PegSet {
    pub fn new() -> Self {
        PegSet(BTreeSet::new())
    }

    pub fn insert(&mut self, peg: PegPermutation) -> bool {
        self.0.insert(peg)
    }

    pub fn contains(&self, peg: &PegPermutation) -> bool {
        self.0.contains(peg)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, PegPermutation> {
        self.0.iter()
    }

    /// Membership in the union of the grid classes.
    pub fn grid_member(&self, pi: &Permutation) -> bool {
        self.0.iter().any(|rho| rho.grid_member(pi))
    }

    /// Every nonempty peg below some member, as a fixpoint of single reductions.
    pub fn downclose(&self) -> PegSet {
        let mut seen: HashSet<PegPermutation> = HashSet::new();
        let mut stack: Vec<PegPermutation> = Vec::new();
        for rho in &self.0 {
            if !rho.is_empty() && seen.insert(rho.clone()) {
                stack.push(rho.clone());
            }
        }
        while let Some(rho) = stack.pop() {
            for tau in rho.reductions() {
                if !seen.contains(&tau) {
                    seen.insert(tau.clone());
                    stack.push(tau);
                }
            }
        }
        seen.into_iter().collect()
    }
}

impl FromIterator<PegPermutation> for PegSet {
    fn from_iter<I: IntoIterator<Item = PegPermutation>>(iter: I) -> Self {
        PegSet(iter.into_iter().collect())
    }
}

impl Extend<PegPermutation> for PegSet {
    fn extend<I: IntoIterator<Item = PegPermutation>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for PegSet {
    type Item = PegPermutation;
    type IntoIter = btree_set::IntoIter<PegPermutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a PegSet {
    type Item = &'a PegPermutation;
    type IntoIter = btree_set::Iter<'a, PegPermutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
