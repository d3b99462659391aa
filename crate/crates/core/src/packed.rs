//! Peg permutations of length at most 17 packed into a `u128`.
//!
//! Bits 0..5 hold the length; entry `i` occupies the seven bits starting at
//! `5 + 7 i`: the decoration in the low two bits, `value - 1` in the high five.

use crate::peg::{Decoration, PegPermutation};
use crate::perm::Permutation;

pub(crate) const MAX_LEN: usize = 17;

const LEN_BITS: u32 = 5;
const FIELD: u32 = 7;
const FIELD_MASK: u128 = 0x7f;
const DOT: u128 = 2;

fn shift(i: usize) -> u32 {
    LEN_BITS + FIELD * i as u32
}

fn code(d: Decoration) -> u128 {
    match d {
        Decoration::Plus => 0,
        Decoration::Minus => 1,
        Decoration::Dot => DOT,
    }
}

pub(crate) fn pack(peg: &PegPermutation) -> Option<u128> {
    if peg.len() > MAX_LEN {
        return None;
    }
    let mut key = peg.len() as u128;
    for (i, (&v, &d)) in peg.values().iter().zip(peg.decorations()).enumerate() {
        key |= ((u128::from(v - 1) << 2) | code(d)) << shift(i);
    }
    Some(key)
}

pub(crate) fn len(key: u128) -> usize {
    (key & ((1 << LEN_BITS) - 1)) as usize
}

fn field(key: u128, i: usize) -> u128 {
    (key >> shift(i)) & FIELD_MASK
}

pub(crate) fn unpack(key: u128) -> PegPermutation {
    let m = len(key);
    let mut values = alloc::vec::Vec::with_capacity(m);
    let mut decorations = alloc::vec::Vec::with_capacity(m);
    for i in 0..m {
        let f = field(key, i);
        values.push((f >> 2) as u32 + 1);
        decorations.push(match f & 3 {
            0 => Decoration::Plus,
            1 => Decoration::Minus,
            _ => Decoration::Dot,
        });
    }
    let base = Permutation::new(values).expect("packed keys hold permutations");
    PegPermutation::new(base, decorations).expect("one decoration per value")
}

/// Every key with one signed entry turned into a dot.
pub(crate) fn for_each_dotting(key: u128, mut f: impl FnMut(u128)) {
    for i in 0..len(key) {
        if field(key, i) & 3 != DOT {
            f(key & !(3 << shift(i)) | DOT << shift(i));
        }
    }
}

/// Every key with one entry deleted, unless that would leave nothing.
pub(crate) fn for_each_deletion(key: u128, mut f: impl FnMut(u128)) {
    let m = len(key);
    if m < 2 {
        return;
    }
    for i in 0..m {
        let removed = field(key, i) >> 2;
        let mut out = (m - 1) as u128;
        for (slot, j) in (0..m).filter(|&j| j != i).enumerate() {
            let mut g = field(key, j);
            if g >> 2 > removed {
                g -= 1 << 2;
            }
            out |= g << shift(slot);
        }
        f(out);
    }
}
