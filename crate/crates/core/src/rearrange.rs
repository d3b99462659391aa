//! Block-sorting operations on permutations and on peg permutations.
//!
//! Every operation cuts its input into consecutive blocks and reassembles
//! them, possibly reversing some. Cuts may coincide, so empty blocks are
//! allowed and every operation can leave its input unchanged.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::peg::{Decoration, PegPermutation, PegSet};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperationKind {
    BlockTransposition,
    PrefixBlockTransposition,
    Reversal,
    PrefixReversal,
    CutAndPaste,
    BlockInterchange,
}

/// Output order of the blocks; `true` marks a reversed block.
type Layout = &'static [(usize, bool)];

const SWAP_MIDDLE: &[Layout] = &[&[(0, false), (2, false), (1, false), (3, false)]];
const REVERSE_MIDDLE: &[Layout] = &[&[(0, false), (1, true), (2, false)]];
const MOVE_MAYBE_REVERSED: &[Layout] = &[
    &[(0, false), (2, false), (1, false), (3, false)],
    &[(0, false), (2, true), (1, false), (3, false)],
    &[(0, false), (2, false), (1, true), (3, false)],
];
const SWAP_OUTER: &[Layout] = &[&[(0, false), (3, false), (2, false), (1, false), (4, false)]];

impl OperationKind {
    pub const ALL: [OperationKind; 6] = [
        OperationKind::BlockTransposition,
        OperationKind::PrefixBlockTransposition,
        OperationKind::Reversal,
        OperationKind::PrefixReversal,
        OperationKind::CutAndPaste,
        OperationKind::BlockInterchange,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperationKind::BlockTransposition => "block-transposition",
            OperationKind::PrefixBlockTransposition => "prefix-block-transposition",
            OperationKind::Reversal => "reversal",
            OperationKind::PrefixReversal => "prefix-reversal",
            OperationKind::CutAndPaste => "cut-and-paste",
            OperationKind::BlockInterchange => "block-interchange",
        }
    }

    /// Prefix variants pin the first cut to the start.
    pub fn is_prefix(self) -> bool {
        matches!(
            self,
            OperationKind::PrefixBlockTransposition | OperationKind::PrefixReversal
        )
    }

    fn cut_count(self) -> usize {
        match self {
            OperationKind::Reversal | OperationKind::PrefixReversal => 2,
            OperationKind::BlockInterchange => 4,
            _ => 3,
        }
    }

    fn layouts(self) -> &'static [Layout] {
        match self {
            OperationKind::BlockTransposition | OperationKind::PrefixBlockTransposition => {
                SWAP_MIDDLE
            }
            OperationKind::Reversal | OperationKind::PrefixReversal => REVERSE_MIDDLE,
            OperationKind::CutAndPaste => MOVE_MAYBE_REVERSED,
            OperationKind::BlockInterchange => SWAP_OUTER,
        }
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperationKind::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: "unknown operation",
            })
    }
}

/// Calls `f` with every non-decreasing choice of `count` cut locations from
/// `allowed`, the first one pinned to `allowed[0]` when `pinned`.
fn for_each_cut(allowed: &[usize], count: usize, pinned: bool, f: &mut impl FnMut(&[usize])) {
    fn rec(
        allowed: &[usize],
        from: usize,
        count: usize,
        cuts: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if cuts.len() == count {
            f(cuts);
            return;
        }
        for i in from..allowed.len() {
            cuts.push(allowed[i]);
            rec(allowed, i, count, cuts, f);
            cuts.pop();
        }
    }
    let mut cuts = Vec::with_capacity(count);
    if pinned {
        cuts.push(allowed[0]);
    }
    rec(allowed, 0, count, &mut cuts, f);
}

/// Reassemble `items`, cut at `cuts`, according to `layout`.
fn reassemble<T: Copy>(
    items: &[T],
    cuts: &[usize],
    layout: Layout,
    flip: impl Fn(T) -> T,
    out: &mut Vec<T>,
) {
    out.clear();
    let bound = |b: usize| match b {
        0 => 0,
        b if b > cuts.len() => items.len(),
        b => cuts[b - 1],
    };
    for &(block, reversed) in layout {
        let slice = &items[bound(block)..bound(block + 1)];
        if reversed {
            out.extend(slice.iter().rev().map(|&x| flip(x)));
        } else {
            out.extend_from_slice(slice);
        }
    }
}

/// Every permutation reachable from `pi` by one move, `pi` included.
pub fn apply_perm(op: OperationKind, pi: &Permutation) -> BTreeSet<Permutation> {
    let items = pi.entries();
    let allowed: Vec<usize> = (0..=items.len()).collect();
    let mut out = BTreeSet::new();
    let mut buf = Vec::with_capacity(items.len());
    for_each_cut(&allowed, op.cut_count(), op.is_prefix(), &mut |cuts| {
        for &layout in op.layouts() {
            reassemble(items, cuts, layout, |x| x, &mut buf);
            out.insert(Permutation::new(buf.clone()).expect("rearranging keeps a permutation"));
        }
    });
    out
}

/// Pegs whose grid classes cover exactly the one-move images of `Grid(rho)`.
///
/// A cut lands either between two entries or inside a signed entry. Cuts
/// inside an entry split it into several runs of the same sign with adjacent
/// values; dotted entries hold at most one point and are never split. Reversed
/// blocks have their signs swapped. Results are normalized.
pub fn apply_peg(op: OperationKind, rho: &PegPermutation) -> PegSet {
    let m = rho.len();
    // location 2i: boundary before entry i; 2i + 1: inside entry i
    let allowed: Vec<usize> = (0..=2 * m)
        .filter(|&loc| loc % 2 == 0 || rho.decorations()[loc / 2].is_signed())
        .collect();
    let mut out = PegSet::new();
    let mut items: Vec<((u32, usize), Decoration)> = Vec::with_capacity(m + 4);
    let mut split_cuts: Vec<usize> = Vec::with_capacity(4);
    let mut buf = Vec::with_capacity(m + 4);
    for_each_cut(&allowed, op.cut_count(), op.is_prefix(), &mut |cuts| {
        items.clear();
        split_cuts.clear();
        let mut c = 0;
        for i in 0..m {
            while c < cuts.len() && cuts[c] == 2 * i {
                split_cuts.push(items.len());
                c += 1;
            }
            let inner = cuts[c..]
                .iter()
                .take_while(|&&loc| loc == 2 * i + 1)
                .count();
            let value = rho.values()[i];
            let d = rho.decorations()[i];
            for r in 0..=inner {
                if r > 0 {
                    split_cuts.push(items.len());
                }
                let sub = if d == Decoration::Minus { inner - r } else { r };
                items.push(((value, sub), d));
            }
            c += inner;
        }
        while c < cuts.len() {
            split_cuts.push(items.len());
            c += 1;
        }
        for &layout in op.layouts() {
            reassemble(
                &items,
                &split_cuts,
                layout,
                |(k, d)| (k, d.flipped()),
                &mut buf,
            );
            out.insert(PegPermutation::from_keys(&buf).normalize());
        }
    });
    out
}

/// Pegs describing every permutation reachable from the identity in at most
/// `k` moves.
pub fn peg_set_for(op: OperationKind, k: usize) -> PegSet {
    let start = PegPermutation::single(Decoration::Plus);
    let mut all = PegSet::new();
    all.insert(start.clone());
    let mut frontier = alloc::vec![start];
    for _ in 0..k {
        let mut next = Vec::new();
        for rho in &frontier {
            for tau in apply_peg(op, rho) {
                if !all.contains(&tau) {
                    all.insert(tau.clone());
                    next.push(tau);
                }
            }
        }
        frontier = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_pegset;
    use alloc::vec;
    use num_bigint::BigInt;

    fn peg(s: &str) -> PegPermutation {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn reachable(op: OperationKind, k: usize, n: usize) -> usize {
        let mut seen = BTreeSet::new();
        seen.insert(Permutation::identity(n));
        let mut frontier = vec![Permutation::identity(n)];
        for _ in 0..k {
            let mut next = Vec::new();
            for p in &frontier {
                for q in apply_perm(op, p) {
                    if seen.insert(q.clone()) {
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        seen.len()
    }

    #[test]
    fn names_round_trip() {
        for op in OperationKind::ALL {
            assert_eq!(op.name().parse::<OperationKind>().unwrap(), op);
        }
        assert!("transposition".parse::<OperationKind>().is_err());
    }

    #[test]
    fn one_move_images() {
        let rev = apply_perm(OperationKind::Reversal, &perm("1234"));
        assert_eq!(rev.len(), 7);
        assert!(rev.contains(&perm("1432")));
        assert_eq!(
            apply_perm(OperationKind::BlockTransposition, &perm("1234")).len(),
            11
        );
        for op in OperationKind::ALL {
            assert_eq!(apply_perm(op, &Permutation::empty()).len(), 1);
            assert_eq!(apply_perm(op, &perm("1")).len(), 1);
            let pi = perm("2413");
            assert!(apply_perm(op, &pi).contains(&pi));
        }
        let pr = apply_perm(OperationKind::PrefixReversal, &perm("1234"));
        assert_eq!(pr.len(), 4);
    }

    #[test]
    fn peg_images_of_identity() {
        let bt = apply_peg(OperationKind::BlockTransposition, &peg("1+"));
        assert!(bt.contains(&peg("1+ 3+ 2+ 4+")));
        assert!(bt.iter().all(|p| p.peg_le(&peg("1+ 3+ 2+ 4+"))));
        let rev = apply_peg(OperationKind::Reversal, &peg("1+"));
        assert!(rev.contains(&peg("1+ 2- 3+")));
        assert!(rev.iter().all(|p| p.peg_le(&peg("1+ 2- 3+"))));
        let pr = apply_peg(OperationKind::PrefixReversal, &peg("1+"));
        assert!(pr.contains(&peg("1- 2+")));
        assert!(pr.iter().all(|p| p.peg_le(&peg("1- 2+"))));
    }

    #[test]
    fn peg_set_for_zero_moves() {
        for op in OperationKind::ALL {
            let g = peg_set_for(op, 0);
            assert_eq!(g.len(), 1);
            assert!(g.contains(&peg("1+")));
        }
    }

    #[test]
    fn one_move_classes_match_brute_force() {
        for op in OperationKind::ALL {
            let e = enumerate_pegset(&peg_set_for(op, 1), 7);
            for n in 1..=7 {
                assert_eq!(
                    e.counts[n - 1],
                    BigInt::from(reachable(op, 1, n)),
                    "{op} n={n}"
                );
            }
        }
    }

    #[test]
    fn block_interchange_k1_counts() {
        let e = enumerate_pegset(&peg_set_for(OperationKind::BlockInterchange, 1), 6);
        let expect: Vec<BigInt> = [1, 2, 6, 16, 36, 71]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(e.counts, expect);
    }
}
