//! Uniform sampling of Clifford unitaries and random test circuits.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::Circuit;
use crate::gate::Gate;
use crate::pauli::{Pauli1, PauliOperator};
use crate::synth::disentangle::disentangler_onto;
use crate::tableau::CliffordTableau;

const PAULIS: [Pauli1; 4] = [Pauli1::I, Pauli1::X, Pauli1::Y, Pauli1::Z];

/// Uniformly random Clifford (up to global phase), deterministic in `seed`.
pub fn random_clifford(n: usize, seed: u64) -> CliffordTableau {
    random_clifford_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_clifford_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CliffordTableau {
    CliffordTableau::from_circuit(&random_clifford_circuit(n, rng)).expect("generated gates are in range")
}

/// A circuit for a uniformly random Clifford.
///
/// The images of `X_k` and `Z_k` are drawn uniformly for `k = 0, 1, ...` among
/// signed Paulis on qubits `k..n` (the second anticommuting with the first).
/// Each pair is realized by inverting its disentangler onto qubit `k`, which
/// leaves qubits below `k` untouched.
pub fn random_clifford_circuit<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Circuit {
    let mut stages = Vec::with_capacity(n);
    for k in 0..n {
        let o = loop {
            let p = random_pauli_on(n, k, rng);
            if !p.is_identity_up_to_phase() {
                break p;
            }
        };
        let o2 = loop {
            let p = random_pauli_on(n, k, rng);
            if p.anticommutes(&o) {
                break p;
            }
        };
        stages.push(disentangler_onto(&o, &o2, k).expect("pair anticommutes").circuit);
    }
    let mut gates = Vec::new();
    for d in stages.iter().rev() {
        gates.extend(d.inverse().into_gates());
    }
    Circuit::from_gates_unchecked(n, gates)
}

/// Random signed Hermitian Pauli supported on qubits `from..n`.
fn random_pauli_on<R: Rng + ?Sized>(n: usize, from: usize, rng: &mut R) -> PauliOperator {
    let mut p = PauliOperator::identity(n);
    for q in from..n {
        p.set(q, PAULIS[rng.gen_range(0..4)]);
    }
    if rng.gen::<bool>() {
        p.negate();
    }
    p
}

/// Random circuit over the full gate set, for fuzzing.
pub fn random_circuit<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> Circuit {
    let mut c = Circuit::new(n);
    for _ in 0..len {
        let kinds = if n >= 2 { 9 } else { 6 };
        let q = rng.gen_range(0..n);
        let g = match rng.gen_range(0..kinds) {
            0 => Gate::H(q),
            1 => Gate::S(q),
            2 => Gate::Sdg(q),
            3 => Gate::X(q),
            4 => Gate::Y(q),
            5 => Gate::Z(q),
            k => {
                let mut r = rng.gen_range(0..n - 1);
                if r >= q {
                    r += 1;
                }
                match k {
                    6 => Gate::CX(q, r),
                    7 => Gate::cz(q, r),
                    _ => Gate::swap(q, r),
                }
            }
        };
        c.push_unchecked(g);
    }
    c
}
