//! Acceptance criteria, one PASS/FAIL line each.

use std::collections::BTreeSet;
use std::process::Command;

use num_bigint::BigInt;
use polyperm::oracle::{grid_count, grid_members};
use polyperm::{
    build_cross_sections, enumerate_pegset, Cap, Decoration, IntVector, OperationKind,
    OracleLimits, PegPermutation, PegSet, Permutation, VectorClass,
};
use polyperm_cli::{cmd_op, cmd_verify};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use OperationKind::*;

const TABLES: &[(OperationKind, usize, [u64; 10])] = &[
    (
        BlockTransposition,
        1,
        [1, 2, 5, 11, 21, 36, 57, 85, 121, 166],
    ),
    (
        BlockTransposition,
        2,
        [1, 2, 6, 23, 89, 295, 827, 2017, 4405, 8812],
    ),
    (
        BlockTransposition,
        3,
        [1, 2, 6, 24, 120, 675, 3527, 15484, 56917, 179719],
    ),
    (
        PrefixBlockTransposition,
        1,
        [1, 2, 4, 7, 11, 16, 22, 29, 37, 46],
    ),
    (
        PrefixBlockTransposition,
        2,
        [1, 2, 6, 21, 61, 146, 302, 561, 961, 1546],
    ),
    (
        PrefixBlockTransposition,
        3,
        [1, 2, 6, 24, 116, 521, 1877, 5531, 13939, 31156],
    ),
    (Reversal, 1, [1, 2, 4, 7, 11, 16, 22, 29, 37, 46]),
    (Reversal, 2, [1, 2, 6, 22, 63, 145, 288, 516, 857, 1343]),
    (
        Reversal,
        3,
        [1, 2, 6, 24, 118, 534, 1851, 5158, 12264, 25943],
    ),
    (PrefixReversal, 1, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10]),
    (PrefixReversal, 2, [1, 2, 5, 10, 17, 26, 37, 50, 65, 82]),
    (
        PrefixReversal,
        3,
        [1, 2, 6, 21, 52, 105, 186, 301, 456, 657],
    ),
    (CutAndPaste, 1, [1, 2, 6, 16, 35, 66, 112, 176, 261, 370]),
    (
        CutAndPaste,
        2,
        [1, 2, 6, 24, 120, 577, 2208, 6768, 17469, 39603],
    ),
    (
        BlockInterchange,
        1,
        [1, 2, 6, 16, 36, 71, 127, 211, 331, 496],
    ),
    (
        BlockInterchange,
        2,
        [1, 2, 6, 24, 120, 540, 1996, 6196, 16732, 40459],
    ),
];

/// Coefficients in the basis C(n,0), C(n,1), ...
const POLYNOMIALS: &[(OperationKind, usize, &[i64])] = &[
    (BlockTransposition, 1, &[1, 0, 1, 1]),
    (BlockTransposition, 2, &[1, 0, 1, 2, 8, 18, 11]),
    (
        BlockTransposition,
        3,
        &[1, 0, 1, 2, 9, 44, 220, 656, 841, 369],
    ),
    (PrefixBlockTransposition, 1, &[1, 0, 1]),
    (PrefixBlockTransposition, 2, &[1, 0, 1, 2, 6]),
    (PrefixBlockTransposition, 3, &[1, 0, 1, 2, 9, 40, 90]),
    (Reversal, 1, &[1, 0, 1]),
    (Reversal, 3, &[318, -214, 131, -61, 20, 70, 35]),
    (PrefixReversal, 1, &[0, 1]),
    (PrefixReversal, 2, &[2, -1, 2]),
    (PrefixReversal, 3, &[-3, 3, -2, 6]),
    (CutAndPaste, 1, &[0, 1, 0, 3]),
    (CutAndPaste, 2, &[-18, 45, -61, 70, -53, 88, 107]),
    (BlockInterchange, 1, &[1, 0, 1, 2, 1]),
    (BlockInterchange, 2, &[1, 0, 1, 2, 9, 44, 85, 70, 21]),
];

fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn trimmed(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(|c| *c == BigInt::from(0)) {
        coeffs.pop();
    }
    coeffs
}

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn criterion(lines: &mut Vec<(String, bool)>, name: &str, body: impl FnOnce(&mut Outcome)) {
    let mut outcome = Outcome {
        failures: Vec::new(),
    };
    body(&mut outcome);
    let ok = outcome.failures.is_empty();
    let mut line = format!("{} {name}", if ok { "PASS" } else { "FAIL" });
    for f in outcome.failures.iter().take(5) {
        line.push_str(&format!("\n     {f}"));
    }
    println!("{line}");
    lines.push((name.to_string(), ok));
}

fn tables(o: &mut Outcome) {
    for &(op, k, row) in TABLES {
        let report = cmd_op(op, k, 10).unwrap();
        let expected: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
        o.check(report.counts == expected, || {
            format!(
                "{op} k={k}: got {:?}",
                report
                    .counts
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            )
        });
    }
}

fn polynomials(o: &mut Outcome) {
    for &(op, k, coeffs) in POLYNOMIALS {
        let got = trimmed(cmd_op(op, k, 1).unwrap().polynomial.coeffs);
        o.check(got == big(coeffs), || format!("{op} k={k}: got {got:?}"));
    }
    let report = cmd_op(Reversal, 2, 40).unwrap();
    let p = &report.polynomial;
    for n in p.valid_from..=p.valid_from + 10 {
        o.check(p.eval(n) == report.counts[n as usize - 1], || {
            format!("reversal k=2: polynomial disagrees with count at n={n}")
        });
    }
}

fn oracle(o: &mut Outcome) {
    let mut runs: Vec<(OperationKind, usize)> = OperationKind::ALL
        .iter()
        .flat_map(|&op| [(op, 1), (op, 2)])
        .collect();
    runs.push((PrefixReversal, 3));
    runs.push((PrefixBlockTransposition, 3));
    for (op, k) in runs {
        match cmd_verify(op, k, 7, 10) {
            Ok(report) => o.check(report.passed(), || report.render()),
            Err(e) => o.check(false, || format!("{op} k={k}: {e}")),
        }
    }
}

const DECORATIONS: [Decoration; 3] = [Decoration::Plus, Decoration::Minus, Decoration::Dot];

fn pegs_up_to(m: usize) -> Vec<PegPermutation> {
    let mut out = Vec::new();
    for len in 1..=m {
        for base in Permutation::all(len) {
            for code in 0..3usize.pow(len as u32) {
                let decs = (0..len)
                    .map(|i| DECORATIONS[code / 3usize.pow(i as u32) % 3])
                    .collect();
                out.push(PegPermutation::new(base.clone(), decs).unwrap());
            }
        }
    }
    out
}

fn class_up_to(rho: &PegPermutation, n: usize) -> BTreeSet<Permutation> {
    (0..=n)
        .flat_map(|len| grid_members(rho, len, &OracleLimits::default()).unwrap())
        .collect()
}

fn interval_unions(o: &mut Outcome) {
    for n in 1..=6 {
        for pi in Permutation::all(n) {
            let intervals: Vec<(usize, usize)> = (0..n)
                .flat_map(|s| (s + 1..=n).map(move |e| (s, e)))
                .filter(|&(s, e)| pi.monotone_interval(s, e - s).is_some())
                .collect();
            for &(a, b) in &intervals {
                for &(c, d) in &intervals {
                    if a.max(c) < b.min(d) {
                        let (lo, hi) = (a.min(c), b.max(d));
                        o.check(pi.monotone_interval(lo, hi - lo).is_some(), || {
                            format!("{pi}")
                        });
                    }
                }
            }
        }
    }
}

fn compactness(o: &mut Outcome) {
    let pegs = pegs_up_to(3);
    let classes: Vec<_> = pegs.iter().map(|r| class_up_to(r, 6)).collect();
    for (i, rho) in pegs.iter().enumerate() {
        let shadowed = pegs
            .iter()
            .zip(&classes)
            .any(|(tau, c)| tau != rho && tau.peg_le(rho) && *c == classes[i]);
        o.check(rho.is_compact() == !shadowed, || format!("{rho}"));
        if rho.is_compact() {
            let covered = pegs
                .iter()
                .zip(&classes)
                .any(|(tau, c)| tau.len() < rho.len() && classes[i].is_subset(c));
            o.check(rho.is_clean().unwrap() == !covered, || {
                format!("clean {rho}")
            });
        }
    }
}

fn unique_partitions(o: &mut Outcome) {
    for rho in pegs_up_to(3).into_iter().filter(PegPermutation::is_compact) {
        for n in 1..=6 {
            for pi in Permutation::all(n).filter(|pi| rho.fills(pi)) {
                o.check(rho.partition_count(&pi) == 1, || {
                    format!("{pi} fills {rho}")
                });
            }
        }
    }
}

fn vectors(dim: usize, max: u32) -> Vec<IntVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (1..=max).map(move |x| {
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

fn random_class(rng: &mut StdRng, dim: usize) -> VectorClass {
    let caps = (0..dim)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Cap::Unbounded
            } else {
                Cap::Finite(rng.gen_range(1..=5))
            }
        })
        .collect();
    let basis = (0..rng.gen_range(0..=3))
        .map(|_| IntVector::new((0..dim).map(|_| rng.gen_range(1..=4)).collect()).unwrap())
        .collect();
    VectorClass::new(caps, basis).unwrap()
}

fn vector_classes(o: &mut Outcome) {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=3);
        let (v, w) = (random_class(&mut rng, dim), random_class(&mut rng, dim));
        let (meet, join) = (v.intersect(&w).unwrap(), v.union(&w).unwrap());
        for x in vectors(dim, 6) {
            let (a, b) = (v.member(&x).unwrap(), w.member(&x).unwrap());
            o.check(meet.member(&x).unwrap() == (a && b), || {
                format!("{v} and {w} at {x}")
            });
            o.check(join.member(&x).unwrap() == (a || b), || {
                format!("{v} or {w} at {x}")
            });
        }
    }
}

fn random_pegset(rng: &mut StdRng) -> PegSet {
    (0..rng.gen_range(1..=3))
        .map(|_| {
            let m = rng.gen_range(1..=4);
            let mut values: Vec<u32> = (1..=m).collect();
            values.shuffle(rng);
            let decs = (0..m).map(|_| *DECORATIONS.choose(rng).unwrap()).collect();
            PegPermutation::new(Permutation::new(values).unwrap(), decs).unwrap()
        })
        .collect()
}

fn cross_sections(o: &mut Outcome) {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let pegs = random_pegset(&mut rng);
        let sections = build_cross_sections(&pegs);
        let e = enumerate_pegset(&pegs, 7);
        for n in 1..=7 {
            let mut seen = BTreeSet::new();
            let mut total = 0usize;
            for s in &sections {
                for v in vectors(s.peg.len(), n as u32) {
                    let fills = v.norm() == n as u64 && s.peg.min_fill_vector().le(&v);
                    if fills && s.class.member(&v).unwrap() {
                        seen.insert(s.peg.inflate(&v).unwrap());
                        total += 1;
                    }
                }
            }
            let expected = grid_count(&pegs, n, &OracleLimits::default()).unwrap();
            o.check(total == seen.len(), || {
                format!("{pegs:?}: overlapping sections at n={n}")
            });
            o.check(seen.len() == expected, || {
                format!("{pegs:?}: {} vs {expected} at n={n}", seen.len())
            });
            o.check(e.counts[n - 1] == BigInt::from(expected), || {
                format!("{pegs:?}: count at n={n}")
            });
        }
    }
}

fn determinism(o: &mut Outcome) {
    let runs: &[&[&str]] = &[
        &["op", "--op", "reversal", "-k", "2"],
        &[
            "op",
            "--op",
            "block-interchange",
            "-k",
            "2",
            "--format",
            "json",
        ],
        &["verify", "--op", "cut-and-paste", "-k", "1", "--n-max", "6"],
    ];
    for args in runs {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_polyperm"))
                .args(*args)
                .output()
                .unwrap()
        };
        let (a, b) = (run(), run());
        o.check(
            a.status.success() && a.stdout == b.stdout && a.stderr == b.stderr,
            || format!("{args:?}"),
        );
    }
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();
    criterion(&mut lines, "1 table reproduction, n = 1..10", tables);
    criterion(&mut lines, "2 polynomial reproduction", polynomials);
    criterion(
        &mut lines,
        "3 agreement with breadth-first search, n <= 7",
        oracle,
    );
    criterion(
        &mut lines,
        "4a intersecting monotone intervals",
        interval_unions,
    );
    criterion(
        &mut lines,
        "4b compact and clean pegs, length <= 3",
        compactness,
    );
    criterion(
        &mut lines,
        "4c unique partitions of fillers",
        unique_partitions,
    );
    criterion(
        &mut lines,
        "4d vector class union and intersection",
        vector_classes,
    );
    criterion(
        &mut lines,
        "4e cross-sections disjoint and exact",
        cross_sections,
    );
    criterion(&mut lines, "5 deterministic output", determinism);
    let failed: Vec<_> = lines
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n.as_str())
        .collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
}

/// Not gating: prints its line but never fails the suite.
#[test]
fn stretch_cut_and_paste_three_moves() {
    let row: [u64; 10] = [1, 2, 6, 24, 120, 720, 5040, 36757, 223898, 1055479];
    let coeffs: &[i64] = &[
        508264, -280036, 140012, -57622, 13839, 4136, -5368, 531, 21125, 12615,
    ];
    let mut lines = Vec::new();
    criterion(
        &mut lines,
        "stretch cut-and-paste k=3 table and polynomial",
        |o| {
            let report = cmd_op(CutAndPaste, 3, 10).unwrap();
            let expected: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
            o.check(report.counts == expected, || {
                format!("counts {:?}", report.counts)
            });
            let got = trimmed(report.polynomial.coeffs);
            o.check(got == big(coeffs), || format!("polynomial {got:?}"));
        },
    );
}
