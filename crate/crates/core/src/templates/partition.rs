//! Splitting a circuit into compute, SWAP and Pauli stages.

use crate::circuit::Circuit;
use crate::gate::Gate;
use crate::pauli::PauliOperator;

/// `compute`, then the qubit permutation, then the Pauli layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StagePartition {
    pub compute: Circuit,
    /// The state on wire `i` ends up on wire `permutation[i]`.
    pub permutation: Vec<usize>,
    pub pauli: PauliOperator,
}

impl StagePartition {
    pub fn num_qubits(&self) -> usize {
        self.compute.num_qubits()
    }

    pub fn is_trivial_permutation(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Reassembles the three stages, expanding the permutation into SWAPs.
    pub fn to_circuit(&self) -> Circuit {
        let mut gates = self.compute.gates().to_vec();
        gates.extend(permutation_swaps(&self.permutation));
        gates.extend(self.pauli.to_gates());
        Circuit::from_gates_unchecked(self.num_qubits(), gates)
    }
}

/// SWAP gates (in time order) realizing `perm`, at most `n - 1` of them.
pub fn permutation_swaps(perm: &[usize]) -> Vec<Gate> {
    let n = perm.len();
    // pos[i]: where the content that started on wire i currently sits.
    let mut pos: Vec<usize> = (0..n).collect();
    let mut at: Vec<usize> = (0..n).collect();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let mut out = Vec::new();
    for target in 0..n {
        let content = inv[target];
        let from = pos[content];
        if from != target {
            out.push(Gate::swap(from, target));
            let other = at[target];
            at.swap(from, target);
            pos[content] = target;
            pos[other] = from;
        }
    }
    out
}

/// Pushes every SWAP and Pauli gate to the end of `c`.
pub fn partition_stages(c: &Circuit) -> StagePartition {
    let n = c.num_qubits();
    let mut perm: Vec<usize> = (0..n).collect();
    // inv[w]: the compute-stage wire whose content currently sits on wire w.
    let mut inv: Vec<usize> = (0..n).collect();
    let mut frame = PauliOperator::identity(n);
    let mut compute = Vec::with_capacity(c.len());
    for g in c.gates() {
        match *g {
            Gate::X(q) | Gate::Y(q) | Gate::Z(q) => {
                let p = match *g {
                    Gate::X(_) => PauliOperator::x_on(n, q),
                    Gate::Y(_) => PauliOperator::y_on(n, q),
                    _ => PauliOperator::z_on(n, q),
                };
                frame = p.mul(&frame);
            }
            Gate::Swap(a, b) => {
                frame.apply_gate(g);
                let (ia, ib) = (inv[a], inv[b]);
                inv.swap(a, b);
                perm[ia] = b;
                perm[ib] = a;
            }
            _ => {
                frame.apply_gate(g);
                compute.push(g.relabel(|w| inv[w]));
            }
        }
    }
    StagePartition { compute: Circuit::from_gates_unchecked(n, compute), permutation: perm, pauli: frame }
}

/// Rewrites every CX as a CZ between two Hadamards on its target.
pub fn to_cz_form(c: &Circuit) -> Circuit {
    let mut gates = Vec::with_capacity(c.len());
    for g in c.gates() {
        match *g {
            Gate::CX(ctl, t) => gates.extend([Gate::H(t), Gate::cz(ctl, t), Gate::H(t)]),
            other => gates.push(other),
        }
    }
    Circuit::from_gates_unchecked(c.num_qubits(), gates)
}
