//! Moving H and phase gates across two-qubit gates.

use crate::circuit::Circuit;
use crate::gate::Gate;
use crate::templates::single::{collapse_runs, minimal_single_qubit_word};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PushDirection {
    /// Towards the end of the circuit.
    Right,
    /// Towards the start of the circuit.
    Left,
}

/// Rewrites `s` followed by `g` as `g'` followed by `s'`, if possible.
fn pass_through(s: Gate, g: Gate) -> Option<(Gate, Gate)> {
    if s.commutes_with(&g) {
        return Some((g, s));
    }
    match (s, g) {
        (Gate::H(q), Gate::CX(c, t)) if t == q => Some((Gate::cz(c, t), s)),
        (Gate::H(q), Gate::CZ(a, b)) if q == a || q == b => {
            let other = if q == a { b } else { a };
            Some((Gate::CX(other, q), s))
        }
        _ => None,
    }
}

fn shortest(run: Vec<Gate>, q: usize) -> Vec<Gate> {
    if run.len() <= 1 {
        return run;
    }
    let word = minimal_single_qubit_word(&run, q);
    if word.len() < run.len() {
        word
    } else {
        run
    }
}

fn push_right(c: &Circuit) -> Circuit {
    let n = c.num_qubits();
    let mut pending: Vec<Vec<Gate>> = vec![Vec::new(); n];
    let mut out = Vec::with_capacity(c.len());
    for &g in c.gates() {
        let (a, b) = match g.qubits() {
            (q, None) => {
                pending[q].push(g);
                continue;
            }
            (a, Some(b)) => (a, b),
        };
        let mut g = g;
        for q in [a, b] {
            let run = shortest(std::mem::take(&mut pending[q]), q);
            let mut k = run.len();
            let mut moved = Vec::new();
            while k > 0 {
                match pass_through(run[k - 1], g) {
                    Some((g2, s2)) => {
                        g = g2;
                        moved.push(s2);
                        k -= 1;
                    }
                    None => break,
                }
            }
            out.extend_from_slice(&run[..k]);
            moved.reverse();
            pending[q] = moved;
        }
        out.push(g);
    }
    for (q, run) in pending.into_iter().enumerate() {
        out.extend(shortest(run, q));
    }
    Circuit::from_gates_unchecked(n, out)
}

/// Pushes single-qubit gates across two-qubit gates in `direction` wherever a
/// commutation or the H/CX rewrite allows, then collapses single-qubit runs.
/// The two-qubit gate count is unchanged.
pub fn push_singles(c: &Circuit, direction: PushDirection) -> Circuit {
    let pushed = match direction {
        PushDirection::Right => push_right(c),
        PushDirection::Left => push_right(&c.inverse()).inverse(),
    };
    collapse_runs(&pushed)
}
