//! The six single-qubit Cliffords modulo Paulis, as shortest H/S words.

use crate::gate::Gate;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) enum LocalGen {
    H,
    S,
}

/// One word per element of the single-qubit symplectic group, shortest first.
pub(crate) const LOCAL_WORDS: [&[LocalGen]; 6] = [
    &[],
    &[LocalGen::H],
    &[LocalGen::S],
    &[LocalGen::H, LocalGen::S],
    &[LocalGen::S, LocalGen::H],
    &[LocalGen::H, LocalGen::S, LocalGen::H],
];

/// Action of a word on the (x, z) bits of a single-qubit Pauli.
pub(crate) fn apply_word(word: &[LocalGen], (mut x, mut z): (bool, bool)) -> (bool, bool) {
    for g in word {
        match g {
            LocalGen::H => std::mem::swap(&mut x, &mut z),
            LocalGen::S => z ^= x,
        }
    }
    (x, z)
}

pub(crate) fn word_gates(word: &[LocalGen], q: usize) -> impl Iterator<Item = Gate> + '_ {
    word.iter().map(move |g| match g {
        LocalGen::H => Gate::H(q),
        LocalGen::S => Gate::S(q),
    })
}

/// First (shortest) word satisfying `pred`.
pub(crate) fn find_word(pred: impl Fn(&[LocalGen]) -> bool) -> &'static [LocalGen] {
    LOCAL_WORDS.iter().copied().find(|w| pred(w)).expect("single-qubit symplectic group is transitive")
}
