//! Plain permutations: containment, monotone intervals and inflation.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation. The empty permutation is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

/// Direction of a monotone interval. Single entries are `Point`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RunDirection {
    Up,
    Down,
    Point,
}

/// One part of the coarsest monotone-interval partition.
///
/// `start` is a zero-based position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotoneRun {
    pub start: usize,
    pub len: usize,
    pub direction: RunDirection,
}

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n || seen[e - 1] {
                return Err(Error::NotAPermutation);
            }
            seen[e - 1] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    /// The permutation order isomorphic to a sequence of distinct keys.
    pub fn standardize<K: Ord>(keys: &[K]) -> Self {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut entries = vec![0u32; keys.len()];
        for (rank, &pos) in order.iter().enumerate() {
            entries[pos] = rank as u32 + 1;
        }
        Permutation(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }

    /// Whether `pattern` occurs as an order-isomorphic subsequence.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        self.find_occurrence(pattern).is_some()
    }

    /// Positions of one occurrence of `pattern`, if any.
    pub fn find_occurrence(&self, pattern: &Permutation) -> Option<Vec<usize>> {
        find_embedding(&self.0, &pattern.0, |_, _| true)
    }

    /// Direction of the window `start..start + len` if it is a monotone interval.
    pub fn monotone_interval(&self, start: usize, len: usize) -> Option<RunDirection> {
        let w = self.0.get(start..start + len)?;
        match len {
            0 => None,
            1 => Some(RunDirection::Point),
            _ => {
                if w.windows(2).all(|p| p[1] == p[0] + 1) {
                    Some(RunDirection::Up)
                } else if w.windows(2).all(|p| p[0] == p[1] + 1) {
                    Some(RunDirection::Down)
                } else {
                    None
                }
            }
        }
    }

    /// The unique coarsest partition into monotone intervals, left to right.
    pub fn maximal_monotone_runs(&self) -> Vec<MonotoneRun> {
        let e = &self.0;
        let mut runs = Vec::new();
        let mut i = 0;
        while i < e.len() {
            let mut j = i + 1;
            let direction = if j < e.len() && e[j] == e[i] + 1 {
                while j < e.len() && e[j] == e[j - 1] + 1 {
                    j += 1;
                }
                RunDirection::Up
            } else if j < e.len() && e[i] == e[j] + 1 {
                while j < e.len() && e[j - 1] == e[j] + 1 {
                    j += 1;
                }
                RunDirection::Down
            } else {
                RunDirection::Point
            };
            runs.push(MonotoneRun {
                start: i,
                len: j - i,
                direction,
            });
            i = j;
        }
        runs
    }

    /// Replace each entry by an interval order isomorphic to the matching part.
    /// Empty parts delete their entry.
    pub fn inflate(&self, parts: &[Permutation]) -> Result<Permutation> {
        if parts.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: parts.len(),
            });
        }
        // offset[v] = total size of the parts sitting below value v
        let mut size_by_value = vec![0u32; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            size_by_value[v as usize - 1] = parts[i].len() as u32;
        }
        let mut offset_by_value = vec![0u32; self.len()];
        let mut acc = 0;
        for (v, size) in size_by_value.iter().enumerate() {
            offset_by_value[v] = acc;
            acc += size;
        }
        let mut out = Vec::with_capacity(acc as usize);
        for (i, &v) in self.0.iter().enumerate() {
            let off = offset_by_value[v as usize - 1];
            out.extend(parts[i].0.iter().map(|x| x + off));
        }
        Ok(Permutation(out))
    }
}

/// Backtracking search for increasing positions of `text` order isomorphic
/// to `pattern`, with `accept(pattern_index, text_index)` filtering each pairing.
pub(crate) fn find_embedding<F>(text: &[u32], pattern: &[u32], accept: F) -> Option<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let k = pattern.len();
    if k > text.len() {
        return None;
    }
    let mut where_is = vec![0usize; k];
    for (i, &v) in pattern.iter().enumerate() {
        where_is[v as usize - 1] = i;
    }
    let mut search = Embedding {
        text,
        pattern,
        where_is,
        chosen: Vec::with_capacity(k),
        accept,
    };
    if search.extend(0) {
        Some(search.chosen)
    } else {
        None
    }
}

struct Embedding<'a, F> {
    text: &'a [u32],
    pattern: &'a [u32],
    where_is: Vec<usize>,
    chosen: Vec<usize>,
    accept: F,
}

impl<F: Fn(usize, usize) -> bool> Embedding<'_, F> {
    fn extend(&mut self, from: usize) -> bool {
        let j = self.chosen.len();
        let k = self.pattern.len();
        if j == k {
            return true;
        }
        let (lo, hi) = self.value_window(j);
        let last_start = self.text.len() - (k - j);
        for pos in from..=last_start {
            let v = self.text[pos];
            if v > lo && v < hi && (self.accept)(j, pos) {
                self.chosen.push(pos);
                if self.extend(pos + 1) {
                    return true;
                }
                self.chosen.pop();
            }
        }
        false
    }

    /// Exclusive bounds on the text value that may play pattern position `j`,
    /// from the nearest pattern values already placed.
    fn value_window(&self, j: usize) -> (u32, u32) {
        let p = self.pattern[j] as usize;
        let mut lo = 0;
        let mut hi = u32::MAX;
        for v in (1..p).rev() {
            let i = self.where_is[v - 1];
            if i < j {
                lo = self.text[self.chosen[i]];
                break;
            }
        }
        for v in p + 1..=self.pattern.len() {
            let i = self.where_is[v - 1];
            if i < j {
                hi = self.text[self.chosen[i]];
                break;
            }
        }
        (lo, hi)
    }
}

/// Iterator over all permutations of a fixed length.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.0.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(Permutation(succ));
        }
        Some(current)
    }
}

pub(crate) fn next_lexicographic<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Space-separated values, or a single digit string such as `3142` when n ≤ 9.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let entries: Vec<u32> = if tokens.len() == 1 && tokens[0].len() > 1 {
            let t = tokens[0];
            if t.len() > 9 {
                return Err(Error::Parse {
                    token: t.to_string(),
                    reason: "digit strings only work up to length 9",
                });
            }
            t.chars()
                .map(|c| {
                    c.to_digit(10).ok_or_else(|| Error::Parse {
                        token: t.to_string(),
                        reason: "expected digits",
                    })
                })
                .collect::<Result<_>>()?
        } else {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<u32>().map_err(|_| Error::Parse {
                        token: t.to_string(),
                        reason: "expected a positive integer",
                    })
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}
