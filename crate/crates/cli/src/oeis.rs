use polyperm::OperationKind;

/// OEIS identifiers of the at-most-`k`-move sequences, where known.
pub fn reference(op: OperationKind, k: usize) -> Option<&'static str> {
    use OperationKind::*;
    let table: &[&str] = match op {
        BlockTransposition => &["A000292", "A228392", "A228393"],
        PrefixBlockTransposition => &["A000124", "A228394", "A228395"],
        Reversal => &["A000124", "A228396", "A228397"],
        PrefixReversal => &["A000027", "A002522", "A228398"],
        CutAndPaste => &["A060354", "A228399", "A228400"],
        BlockInterchange => &["A145126", "A228401"],
    };
    k.checked_sub(1).and_then(|i| table.get(i)).copied()
}
