//! Shortest words for the 24 single-qubit Cliffords and run collapsing.

use std::collections::VecDeque;
use std::sync::OnceLock;

use crate::circuit::Circuit;
use crate::gate::Gate;
use crate::pauli::PauliOperator;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum G1 {
    H,
    S,
    Sdg,
    X,
    Y,
    Z,
}

impl G1 {
    const ALL: [G1; 6] = [G1::H, G1::S, G1::Sdg, G1::Z, G1::X, G1::Y];

    fn on(self, q: usize) -> Gate {
        match self {
            G1::H => Gate::H(q),
            G1::S => Gate::S(q),
            G1::Sdg => Gate::Sdg(q),
            G1::X => Gate::X(q),
            G1::Y => Gate::Y(q),
            G1::Z => Gate::Z(q),
        }
    }
}

/// Images of X and Z under a single-qubit Clifford, packed into 6 bits.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
struct Local1 {
    x: PauliBits,
    z: PauliBits,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
struct PauliBits {
    x: bool,
    z: bool,
    neg: bool,
}

impl PauliBits {
    fn of(p: &PauliOperator) -> Self {
        PauliBits { x: p.x_bit(0), z: p.z_bit(0), neg: p.is_negative() }
    }

    fn code(self) -> usize {
        self.x as usize | (self.z as usize) << 1 | (self.neg as usize) << 2
    }
}

impl Local1 {
    fn key(self) -> usize {
        self.x.code() | self.z.code() << 3
    }
}

/// Tracks a single-qubit Clifford by conjugating X and Z through its gates.
fn simulate(gates: impl IntoIterator<Item = Gate>) -> Local1 {
    let mut x = PauliOperator::x_on(1, 0);
    let mut z = PauliOperator::z_on(1, 0);
    for g in gates {
        x.apply_gate(&g);
        z.apply_gate(&g);
    }
    Local1 { x: PauliBits::of(&x), z: PauliBits::of(&z) }
}

fn word_table() -> &'static [Option<Vec<G1>>; 64] {
    static TABLE: OnceLock<[Option<Vec<G1>>; 64]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: [Option<Vec<G1>>; 64] = std::array::from_fn(|_| None);
        let mut queue = VecDeque::new();
        table[simulate([]).key()] = Some(Vec::new());
        queue.push_back(Vec::<G1>::new());
        while let Some(word) = queue.pop_front() {
            for g in G1::ALL {
                let mut next = word.clone();
                next.push(g);
                let key = simulate(next.iter().map(|g| g.on(0))).key();
                if table[key].is_none() {
                    table[key] = Some(next.clone());
                    queue.push_back(next);
                }
            }
        }
        debug_assert_eq!(table.iter().filter(|w| w.is_some()).count(), 24);
        table
    })
}

/// Shortest gate sequence on `q` equal to `gates` (single-qubit gates on one
/// wire) up to global phase.
pub fn minimal_single_qubit_word(gates: &[Gate], q: usize) -> Vec<Gate> {
    let key = simulate(gates.iter().map(|g| g.relabel(|_| 0))).key();
    let word = word_table()[key].as_ref().expect("every single-qubit Clifford is reachable");
    word.iter().map(|g| g.on(q)).collect()
}

/// Replaces every maximal run of single-qubit gates on one wire by a shortest
/// equivalent word. Runs already of minimal length are left untouched.
pub fn collapse_runs(c: &Circuit) -> Circuit {
    let n = c.num_qubits();
    let mut pending: Vec<Vec<Gate>> = vec![Vec::new(); n];
    let mut out = Vec::with_capacity(c.len());
    let flush = |q: usize, pending: &mut Vec<Vec<Gate>>, out: &mut Vec<Gate>| {
        let run = std::mem::take(&mut pending[q]);
        if run.len() <= 1 {
            out.extend(run);
            return;
        }
        let word = minimal_single_qubit_word(&run, q);
        if word.len() < run.len() {
            out.extend(word);
        } else {
            out.extend(run);
        }
    };
    for g in c.gates() {
        match g.qubits() {
            (q, None) => pending[q].push(*g),
            (a, Some(b)) => {
                flush(a, &mut pending, &mut out);
                flush(b, &mut pending, &mut out);
                out.push(*g);
            }
        }
    }
    for q in 0..n {
        flush(q, &mut pending, &mut out);
    }
    Circuit::from_gates_unchecked(n, out)
}
