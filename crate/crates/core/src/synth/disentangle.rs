//! Disentangling circuits for anticommuting Pauli pairs.
//!
//! Given anticommuting `O`, `O'`, a disentangler is a circuit `D` with
//! `D·O·D† = X_p` and `D·O'·D† = Z_p` for a chosen pivot qubit `p`, signs
//! included. The construction first brings every qubit into one of five
//! standard cases with single-qubit gates, then clears each case class with
//! CX ladders.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::local::{apply_word, find_word, word_gates};
use crate::pauli::PauliOperator;

/// Per-qubit classification of a pair after the local layer:
/// A = (X, Z), B = (X, X), C = (X, I), D = (I, Z), E = (I, I).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardFormPartition {
    pub local_layer: Vec<Gate>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    pub e: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisentangleResult {
    pub circuit: Circuit,
    /// Number of CX gates; the SWAP is free.
    pub cnot_cost: usize,
    pub deferred_swap: Option<(usize, usize)>,
}

fn check_pair(o: &PauliOperator, o2: &PauliOperator) -> Result<()> {
    if o.num_qubits() != o2.num_qubits() {
        return Err(Error::DimensionMismatch(o.num_qubits(), o2.num_qubits()));
    }
    if !o.anticommutes(o2) {
        return Err(Error::CommutingPair);
    }
    Ok(())
}

pub fn standard_form(o: &PauliOperator, o2: &PauliOperator) -> Result<StandardFormPartition> {
    check_pair(o, o2)?;
    let mut part = StandardFormPartition {
        local_layer: Vec::new(),
        a: Vec::new(),
        b: Vec::new(),
        c: Vec::new(),
        d: Vec::new(),
        e: Vec::new(),
    };
    for q in 0..o.num_qubits() {
        let p = (o.x_bit(q), o.z_bit(q));
        let p2 = (o2.x_bit(q), o2.z_bit(q));
        let on = p != (false, false);
        let on2 = p2 != (false, false);
        const X: (bool, bool) = (true, false);
        const Z: (bool, bool) = (false, true);
        let (word, class) = match (on, on2) {
            (true, true) if p != p2 => {
                (find_word(|w| apply_word(w, p) == X && apply_word(w, p2) == Z), &mut part.a)
            }
            (true, true) => (find_word(|w| apply_word(w, p) == X), &mut part.b),
            (true, false) => (find_word(|w| apply_word(w, p) == X), &mut part.c),
            (false, true) => (find_word(|w| apply_word(w, p2) == Z), &mut part.d),
            (false, false) => (find_word(|_| true), &mut part.e),
        };
        class.push(q);
        part.local_layer.extend(word_gates(word, q));
    }
    debug_assert!(part.a.len() % 2 == 1);
    Ok(part)
}

/// Class sizes of the standard form, computed word-parallel.
pub(crate) struct ClassSizes {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl ClassSizes {
    pub(crate) fn of(o: &PauliOperator, o2: &PauliOperator) -> ClassSizes {
        Self::of_words(o.x_words(), o.z_words(), o2.x_words(), o2.z_words())
    }

    pub(crate) fn of_words(x1: &[u64], z1: &[u64], x2: &[u64], z2: &[u64]) -> ClassSizes {
        let (mut a, mut b, mut c, mut d) = (0, 0, 0, 0);
        let words = x1.iter().zip(z1).zip(x2.iter().zip(z2));
        for ((&x1, &z1), (&x2, &z2)) in words {
            let on = x1 | z1;
            let on2 = x2 | z2;
            let eq = !(x1 ^ x2) & !(z1 ^ z2);
            let both = on & on2;
            a += (both & !eq).count_ones() as usize;
            b += (both & eq).count_ones() as usize;
            c += (on & !on2).count_ones() as usize;
            d += (!on & on2).count_ones() as usize;
        }
        ClassSizes { a, b, c, d }
    }

    pub(crate) fn cnot_cost(&self) -> usize {
        let b = if self.b > 0 { self.b + 1 } else { 0 };
        self.c + self.d + b + 3 * (self.a.saturating_sub(1) / 2)
    }
}

/// CX count of the disentangler, without building it.
pub fn disentangle_cost(o: &PauliOperator, o2: &PauliOperator) -> Result<usize> {
    check_pair(o, o2)?;
    Ok(ClassSizes::of(o, o2).cnot_cost())
}

/// Disentangler onto qubit 0.
pub fn disentangler(o: &PauliOperator, o2: &PauliOperator) -> Result<DisentangleResult> {
    disentangler_onto(o, o2, 0)
}

pub fn disentangler_onto(
    o: &PauliOperator,
    o2: &PauliOperator,
    pivot: usize,
) -> Result<DisentangleResult> {
    check_pair(o, o2)?;
    let n = o.num_qubits();
    if pivot >= n {
        return Err(Error::QubitOutOfRange { index: pivot, n });
    }
    let mut part = standard_form(o, o2)?;
    let mut gates = std::mem::take(&mut part.local_layer);
    let mut deferred_swap = None;

    if !part.a.contains(&pivot) {
        let a1 = part.a[0];
        gates.push(Gate::swap(pivot, a1));
        deferred_swap = Some((pivot.min(a1), pivot.max(a1)));
        part.a[0] = pivot;
        for class in [&mut part.b, &mut part.c, &mut part.d, &mut part.e] {
            if let Some(slot) = class.iter_mut().find(|q| **q == pivot) {
                *slot = a1;
                class.sort_unstable();
            }
        }
    }
    let head = pivot;
    let rest_a: Vec<usize> = part.a.iter().copied().filter(|&q| q != head).collect();

    let mut cnots = 0;
    for &j in &part.c {
        gates.push(Gate::CX(head, j));
        cnots += 1;
    }
    for &j in &part.d {
        gates.push(Gate::CX(j, head));
        cnots += 1;
    }
    if let Some((&i, others)) = part.b.split_first() {
        for &j in others {
            gates.push(Gate::CX(i, j));
            cnots += 1;
        }
        gates.extend([Gate::CX(head, i), Gate::H(i), Gate::CX(i, head)]);
        cnots += 2;
    }
    for pair in rest_a.chunks_exact(2) {
        let (p, q) = (pair[0], pair[1]);
        gates.extend([Gate::CX(q, p), Gate::CX(p, head), Gate::CX(head, q)]);
        cnots += 3;
    }

    let mut circuit = Circuit::from_gates_unchecked(n, gates);
    let img = circuit.conjugate_pauli(o)?;
    let img2 = circuit.conjugate_pauli(o2)?;
    debug_assert!(img.same_support_bits(&PauliOperator::x_on(n, head)));
    debug_assert!(img2.same_support_bits(&PauliOperator::z_on(n, head)));
    match (img.is_negative(), img2.is_negative()) {
        (false, false) => {}
        (true, false) => circuit.push_unchecked(Gate::Z(head)),
        (false, true) => circuit.push_unchecked(Gate::X(head)),
        (true, true) => circuit.push_unchecked(Gate::Y(head)),
    }
    Ok(DisentangleResult { circuit, cnot_cost: cnots, deferred_swap })
}
