//! Brute-force ground truth.
//!
//! Nothing here goes through peg sets or generating functions: reachability is
//! a breadth-first search over concrete permutations and grid classes are
//! scanned permutation by permutation.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::error::{Error, Result};
use crate::peg::{PegPermutation, PegSet};
use crate::perm::Permutation;
use crate::rearrange::{apply_perm, OperationKind};

/// Sizes above this are always refused.
pub const HARD_LIMIT: usize = 10;

/// Largest lengths the brute-force checks will accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub bfs: usize,
    pub grid: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { bfs: 9, grid: 8 }
    }
}

impl OracleLimits {
    fn check(n: usize, limit: usize) -> Result<()> {
        let limit = limit.min(HARD_LIMIT);
        if n > limit {
            Err(Error::LimitExceeded { n, limit })
        } else {
            Ok(())
        }
    }
}

/// Pack a permutation of length at most 16 into four bits per entry.
fn pack(entries: &[u32]) -> u64 {
    entries
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &v)| acc | (u64::from(v - 1) << (4 * i)))
}

fn unpack(key: u64, n: usize) -> Permutation {
    let entries = (0..n)
        .map(|i| ((key >> (4 * i)) & 0xf) as u32 + 1)
        .collect();
    Permutation::new(entries).expect("packed keys hold permutations")
}

/// Number of permutations of length `n` reachable from the identity in at
/// most `k` moves.
pub fn bfs_counts(op: OperationKind, k: usize, n: usize, limits: &OracleLimits) -> Result<usize> {
    OracleLimits::check(n, limits.bfs)?;
    let start = pack(Permutation::identity(n).entries());
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(start);
    let mut frontier = alloc::vec![start];
    for _ in 0..k {
        let mut next = Vec::new();
        for &key in &frontier {
            for q in apply_perm(op, &unpack(key, n)) {
                let qk = pack(q.entries());
                if seen.insert(qk) {
                    next.push(qk);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(seen.len())
}

/// Number of permutations of length `n` in the union of the grid classes.
pub fn grid_count(pegs: &PegSet, n: usize, limits: &OracleLimits) -> Result<usize> {
    OracleLimits::check(n, limits.grid)?;
    Ok(Permutation::all(n)
        .filter(|pi| pegs.grid_member(pi))
        .count())
}

/// Members of length `n` of one grid class, in lexicographic order.
pub fn grid_members(
    rho: &PegPermutation,
    n: usize,
    limits: &OracleLimits,
) -> Result<Vec<Permutation>> {
    OracleLimits::check(n, limits.grid)?;
    Ok(Permutation::all(n)
        .filter(|pi| rho.grid_member(pi))
        .collect())
}

/// Whether two grid classes agree on every length up to `n_max`.
pub fn grid_class_equal(
    a: &PegPermutation,
    b: &PegPermutation,
    n_max: usize,
    limits: &OracleLimits,
) -> Result<bool> {
    OracleLimits::check(n_max, limits.grid)?;
    Ok((0..=n_max).all(|n| Permutation::all(n).all(|pi| a.grid_member(&pi) == b.grid_member(&pi))))
}

/// Whether `Grid(a)` is contained in `Grid(b)` on every length up to `n_max`.
pub fn grid_class_subset(
    a: &PegPermutation,
    b: &PegPermutation,
    n_max: usize,
    limits: &OracleLimits,
) -> Result<bool> {
    OracleLimits::check(n_max, limits.grid)?;
    Ok(
        (0..=n_max)
            .all(|n| Permutation::all(n).all(|pi| !a.grid_member(&pi) || b.grid_member(&pi))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn peg(s: &str) -> PegPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn bfs_examples() {
        let lim = OracleLimits::default();
        assert_eq!(bfs_counts(OperationKind::Reversal, 2, 5, &lim), Ok(63));
        assert_eq!(bfs_counts(OperationKind::CutAndPaste, 1, 5, &lim), Ok(35));
        for op in OperationKind::ALL {
            assert_eq!(bfs_counts(op, 0, 6, &lim), Ok(1));
        }
        assert_eq!(
            bfs_counts(
                OperationKind::Reversal,
                1,
                11,
                &OracleLimits { bfs: 20, grid: 8 }
            ),
            Err(Error::LimitExceeded { n: 11, limit: 10 })
        );
        assert_eq!(
            bfs_counts(OperationKind::Reversal, 1, 10, &lim),
            Err(Error::LimitExceeded { n: 10, limit: 9 })
        );
    }

    #[test]
    fn grid_count_examples() {
        let lim = OracleLimits::default();
        let one = |s: &str| -> PegSet { [peg(s)].into_iter().collect() };
        assert_eq!(grid_count(&one("1+"), 5, &lim), Ok(1));
        assert_eq!(grid_count(&one("1-"), 3, &lim), Ok(1));
        let bt = one("1+ 3+ 2+ 4+").downclose();
        assert_eq!(grid_count(&bt, 4, &lim), Ok(11));
        assert_eq!(grid_count(&one("1+ 3+ 2+ 4+"), 4, &lim), Ok(11));
        assert!(grid_count(&bt, 9, &lim).is_err());
    }

    #[test]
    fn grid_equality_examples() {
        let lim = OracleLimits::default();
        assert_eq!(
            grid_class_equal(&peg("2- 1."), &peg("1-"), 6, &lim),
            Ok(true)
        );
        let r = peg("3- 1. 4+ 2+");
        assert_eq!(grid_class_equal(&r, &r, 5, &lim), Ok(true));
        assert_eq!(grid_class_equal(&peg("1+"), &peg("1-"), 3, &lim), Ok(false));
        assert_eq!(
            grid_class_subset(&peg("1. 2."), &peg("1+"), 6, &lim),
            Ok(true)
        );
        assert_eq!(
            grid_class_subset(&peg("1+"), &peg("1. 2."), 6, &lim),
            Ok(false)
        );
    }

    #[test]
    fn pack_round_trip() {
        for pi in Permutation::all(5) {
            assert_eq!(unpack(pack(pi.entries()), 5), pi);
        }
    }
}
