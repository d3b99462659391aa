//! Exhaustive checks of peg permutation semantics at small sizes.

use std::collections::{BTreeMap, BTreeSet};

use polyperm::oracle::grid_members;
use polyperm::{Decoration, IntVector, OracleLimits, PegPermutation, PegSet, Permutation};

const DECORATIONS: [Decoration; 3] = [Decoration::Plus, Decoration::Minus, Decoration::Dot];

fn pegs_of_length(m: usize) -> Vec<PegPermutation> {
    let mut out = Vec::new();
    for base in Permutation::all(m) {
        for code in 0..3usize.pow(m as u32) {
            let decorations = (0..m)
                .map(|i| DECORATIONS[code / 3usize.pow(i as u32) % 3])
                .collect();
            out.push(PegPermutation::new(base.clone(), decorations).unwrap());
        }
    }
    out
}

fn pegs_up_to(m: usize) -> Vec<PegPermutation> {
    (1..=m).flat_map(pegs_of_length).collect()
}

/// Grid class members of each peg, lengths 0..=n.
struct Classes {
    n: usize,
    members: BTreeMap<PegPermutation, BTreeSet<Permutation>>,
}

impl Classes {
    fn new(n: usize) -> Self {
        Classes {
            n,
            members: BTreeMap::new(),
        }
    }

    fn of(&mut self, rho: &PegPermutation) -> &BTreeSet<Permutation> {
        let n = self.n;
        self.members.entry(rho.clone()).or_insert_with(|| {
            (0..=n)
                .flat_map(|len| grid_members(rho, len, &OracleLimits::default()).unwrap())
                .collect()
        })
    }
}

fn strictly_below(rho: &PegPermutation) -> Vec<PegPermutation> {
    let single: PegSet = [rho.clone()].into_iter().collect();
    single
        .downclose()
        .into_iter()
        .filter(|t| t != rho)
        .collect()
}

fn vectors(rho: &PegPermutation, max: u32) -> Vec<IntVector> {
    let mut out = vec![Vec::new()];
    for d in rho.decorations() {
        let top = if d.is_signed() { max } else { 1 };
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=top).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|v| IntVector::new(v).unwrap())
        .collect()
}

#[test]
fn intersecting_monotone_intervals_have_monotone_union() {
    for n in 1..=6 {
        for pi in Permutation::all(n) {
            let mut intervals = Vec::new();
            for start in 0..n {
                for len in 1..=n - start {
                    if pi.monotone_interval(start, len).is_some() {
                        intervals.push((start, start + len));
                    }
                }
            }
            for &(a, b) in &intervals {
                for &(c, d) in &intervals {
                    if a.max(c) < b.min(d) {
                        let (lo, hi) = (a.min(c), b.max(d));
                        assert!(
                            pi.monotone_interval(lo, hi - lo).is_some(),
                            "{pi}: [{a},{b}) [{c},{d})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn peg_order_is_a_partial_order() {
    let pegs = pegs_up_to(3);
    for a in &pegs {
        assert!(a.peg_le(a));
        for b in &pegs {
            if a != b && a.peg_le(b) {
                assert!(!b.peg_le(a), "{a} and {b}");
            }
            for c in &pegs {
                if a.peg_le(b) && b.peg_le(c) {
                    assert!(a.peg_le(c), "{a} <= {b} <= {c}");
                }
            }
        }
    }
}

#[test]
fn grid_classes_are_monotone_in_the_peg_order() {
    let pegs = pegs_up_to(3);
    let mut classes = Classes::new(5);
    for rho in &pegs {
        let big = classes.of(rho).clone();
        for tau in pegs.iter().filter(|t| t.peg_le(rho)) {
            assert!(classes.of(tau).is_subset(&big), "{tau} <= {rho}");
        }
    }
}

#[test]
fn compact_means_no_smaller_peg_has_the_same_class() {
    let mut classes = Classes::new(6);
    for rho in pegs_up_to(3) {
        let own = classes.of(&rho).clone();
        let shadowed = strictly_below(&rho)
            .iter()
            .any(|tau| *classes.of(tau) == own);
        assert_eq!(rho.is_compact(), !shadowed, "{rho}");
    }
}

#[test]
fn fillers_of_compact_pegs_have_one_partition() {
    for rho in pegs_up_to(3).into_iter().filter(PegPermutation::is_compact) {
        for n in 1..=6 {
            for pi in Permutation::all(n).filter(|pi| rho.fills(pi)) {
                assert_eq!(rho.partition_count(&pi), 1, "{pi} fills {rho}");
            }
        }
    }
}

#[test]
fn clean_means_no_shorter_peg_contains_the_class() {
    let mut classes = Classes::new(6);
    let pegs = pegs_up_to(3);
    for rho in pegs.iter().filter(|r| r.is_compact()) {
        let own = classes.of(rho).clone();
        let covered = pegs
            .iter()
            .filter(|t| t.len() < rho.len())
            .any(|tau| own.is_subset(classes.of(tau)));
        assert_eq!(rho.is_clean().unwrap(), !covered, "{rho}");
    }
}

#[test]
fn normalize_preserves_grid_membership() {
    let mut classes = Classes::new(6);
    for rho in pegs_up_to(3) {
        let normal = rho.normalize();
        assert!(normal.is_compact(), "{rho} -> {normal}");
        let a = classes.of(&rho).clone();
        assert_eq!(&a, classes.of(&normal), "{rho} -> {normal}");
    }
}

#[test]
fn containment_reflects_the_vector_order() {
    for rho in pegs_up_to(3).into_iter().filter(PegPermutation::is_compact) {
        let min = rho.min_fill_vector();
        let vs = vectors(&rho, 4);
        let inflated: Vec<Permutation> = vs.iter().map(|v| rho.inflate(v).unwrap()).collect();
        for (v, pv) in vs.iter().zip(&inflated).filter(|(v, _)| min.le(v)) {
            for (w, pw) in vs.iter().zip(&inflated) {
                assert_eq!(pw.contains(pv), v.le(w), "{rho}: {v} vs {w}");
            }
        }
    }
}

#[test]
fn downclosed_sets_are_complete() {
    let sets: [&[&str]; 4] = [
        &["1+ 3+ 2+ 4+"],
        &["1+ 2- 3+"],
        &["3- 1. 4+ 2+"],
        &["2. 1+", "1- 3. 2+"],
    ];
    for pegs in sets {
        let g: PegSet = pegs.iter().map(|s| s.parse().unwrap()).collect();
        let closed = g.downclose();
        for n in 1..=6 {
            for pi in Permutation::all(n).filter(|pi| g.grid_member(pi)) {
                assert!(closed.iter().any(|r| r.fills(&pi)), "{pi} in {pegs:?}");
            }
        }
    }
}
