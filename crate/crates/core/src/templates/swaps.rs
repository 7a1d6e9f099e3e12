//! Absorbing the SWAP stage into two-qubit gates of the compute stage.

use crate::circuit::Circuit;
use crate::gate::Gate;
use crate::templates::partition::{permutation_swaps, StagePartition};

fn same_cycle(perm: &[usize], u: usize, v: usize) -> bool {
    let mut w = perm[u];
    while w != u {
        if w == v {
            return true;
        }
        w = perm[w];
    }
    false
}

/// `g` followed by a SWAP of its two wires, as two entangling gates.
fn merged_with_swap(g: &Gate) -> Vec<Gate> {
    match *g {
        Gate::CX(a, b) => vec![Gate::CX(b, a), Gate::CX(a, b)],
        Gate::CZ(u, v) => vec![Gate::H(v), Gate::CX(v, u), Gate::CX(u, v), Gate::H(u)],
        _ => unreachable!("only entangling gates are merged"),
    }
}

/// Returns compute followed by the permutation, with no SWAP gates left.
///
/// Scanning the compute stage from its end, every CX or CZ whose wires lie in
/// one cycle of the remaining permutation absorbs the corresponding
/// transposition at the price of one extra entangling gate. Whatever is left
/// of the permutation becomes SWAPs of three CX each, placed in front.
pub fn merge_swaps(p: &StagePartition) -> Circuit {
    let n = p.num_qubits();
    let mut perm = p.permutation.clone();
    let mut tail_rev: Vec<Gate> = Vec::with_capacity(p.compute.len() + n);
    for h in p.compute.gates().iter().rev() {
        match *h {
            Gate::CX(u, v) | Gate::CZ(u, v) if same_cycle(&perm, u, v) => {
                let mut next = perm.clone();
                next[u] = perm[v];
                next[v] = perm[u];
                for g in merged_with_swap(h).iter().rev() {
                    tail_rev.push(g.relabel(|w| next[w]));
                }
                perm = next;
            }
            _ => tail_rev.push(h.relabel(|w| perm[w])),
        }
    }
    let mut gates = Vec::with_capacity(tail_rev.len() + 3 * n);
    for s in permutation_swaps(&perm) {
        let Gate::Swap(a, b) = s else { unreachable!() };
        gates.extend([Gate::CX(a, b), Gate::CX(b, a), Gate::CX(a, b)]);
    }
    gates.extend(tail_rev.into_iter().rev());
    Circuit::from_gates_unchecked(n, gates)
}
