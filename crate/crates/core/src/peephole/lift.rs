//! Turning a DP solution back into gates.
//!
//! With `U_A(v) = P_k^{v_k} ... P_1^{v_1} R`, the rewritten subset circuit is
//! `U_k^{-1} Q_k^{v_k} (U_k U_{k-1}^{-1}) ... Q_1^{v_1} (U_1 R)` where
//! `Q_j = U_j P_j U_j^{-1}`. Each `Q_j^{v_j}` becomes a controlled Pauli from
//! the group's outside qubit, emitted at the group's first coupling. Gates
//! outside the subset are kept in place.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::pauli::{Pauli1, PauliOperator};
use crate::peephole::cost_table::CostTable;
use crate::peephole::dp::DpSolution;
use crate::peephole::symbolic::{ControlBasis, SymbolicCircuit};
use crate::peephole::symplectic as sp;
use crate::tableau::CliffordTableau;

/// Minimal-CX gates for a signed Clifford on the subset, in local indices.
fn synthesize(target: &CliffordTableau, table: &CostTable) -> Vec<Gate> {
    let k = target.num_qubits();
    let w = table.witness(sp::from_tableau(target));
    let wt = CliffordTableau::from_circuit(&w).expect("witness is well formed");
    // A trailing Pauli F flips row r iff F anticommutes with it. The product of
    // the partner rows of every flipped row is such an F.
    let mut fix = 0u64;
    for j in 0..k {
        if wt.x_image(j).is_negative() != target.x_image(j).is_negative() {
            fix ^= sp::pauli_bits(wt.z_image(j));
        }
        if wt.z_image(j).is_negative() != target.z_image(j).is_negative() {
            fix ^= sp::pauli_bits(wt.x_image(j));
        }
    }
    let mut gates = w.into_gates();
    gates.extend(sp::bits_to_pauli(fix, k).to_gates());
    gates
}

/// Gates for `Q^v` with `v` read from `control` in `basis`; `a_of` maps local
/// subset indices to circuit qubits.
fn controlled_pauli(q: &PauliOperator, control: usize, basis: ControlBasis, a_of: &[usize]) -> Vec<Gate> {
    let mut gates = Vec::new();
    if basis == ControlBasis::X {
        gates.push(Gate::H(control));
    }
    let mut ys = 0u8;
    for (i, &a) in a_of.iter().enumerate() {
        match q.get(i) {
            Pauli1::I => {}
            Pauli1::X => gates.push(Gate::CX(control, a)),
            Pauli1::Z => gates.push(Gate::CZ(control, a)),
            Pauli1::Y => {
                ys += 1;
                gates.extend([Gate::Sdg(a), Gate::CX(control, a), Gate::S(a)]);
            }
        }
    }
    // Q = i^e X^x Z^z and each Y = i X Z, so Q = i^(e - #Y) times the product
    // of letters; that scalar becomes a phase gate on the control.
    match (q.phase_exp() + 4 - ys % 4) % 4 {
        1 => gates.push(Gate::S(control)),
        2 => gates.push(Gate::Z(control)),
        3 => gates.push(Gate::Sdg(control)),
        _ => {}
    }
    if basis == ControlBasis::X {
        gates.push(Gate::H(control));
    }
    gates
}

/// Rebuilds `c` with the subset part replaced by the circuit described by
/// `sol`.
pub fn lift(c: &Circuit, s: &SymbolicCircuit, sol: &DpSolution, table: &CostTable) -> Result<Circuit> {
    let k = s.subset.len();
    if sol.reps.len() != s.num_groups() || table.arity() != k {
        return Err(Error::InconsistentSolution(format!(
            "{} choices for {} groups on a {}-qubit table",
            sol.reps.len(),
            s.num_groups(),
            table.arity()
        )));
    }
    let us: Vec<CliffordTableau> = sol
        .reps
        .iter()
        .map(|&r| CliffordTableau::from_circuit(&table.witness(r)))
        .collect::<Result<_>>()?;
    let global = |gates: Vec<Gate>| -> Vec<Gate> { gates.iter().map(|g| g.relabel(|q| s.subset[q])).collect() };

    let mut absorbed = vec![false; c.len()];
    for &i in &s.absorbed {
        absorbed[i] = true;
    }
    let mut out = Vec::with_capacity(c.len());
    let first = match us.first() {
        Some(u1) => s.remainder.then(u1),
        None => s.remainder.clone(),
    };
    out.extend(global(synthesize(&first, table)));

    let mut next_group = 0;
    for (idx, g) in c.gates().iter().enumerate() {
        if let Some(grp) = s.groups.get(next_group).filter(|grp| grp.anchor == idx) {
            let j = next_group;
            let q = us[j].conjugate(&grp.pauli);
            out.extend(controlled_pauli(&q, grp.control, grp.basis, &s.subset));
            let step = match us.get(j + 1) {
                Some(u_next) => us[j].inverse().then(u_next),
                None => us[j].inverse(),
            };
            out.extend(global(synthesize(&step, table)));
            next_group += 1;
        }
        if !absorbed[idx] {
            out.push(*g);
        }
    }
    Ok(Circuit::from_gates_unchecked(c.num_qubits(), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::peephole::dp::dp_optimize;
    use crate::peephole::symbolic::project_onto_subset;
    use crate::random::random_circuit;
    use crate::tableau::circuits_equivalent;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn synthesize_is_exact() {
        let table = CostTable::build(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..200 {
            let c = random_circuit(2, 12, &mut rng);
            let t = CliffordTableau::from_circuit(&c).unwrap();
            let gates = synthesize(&t, &table);
            let back = CliffordTableau::from_circuit(&Circuit::from_gates(2, gates.clone()).unwrap()).unwrap();
            assert_eq!(back, t);
            assert_eq!(gates.iter().filter(|g| g.is_two_qubit()).count(), table.cost(sp::from_tableau(&t)) as usize);
        }
    }

    #[test]
    fn controlled_pauli_phases() {
        // Controlled (iXZ) = controlled Y.
        let mut q: PauliOperator = "YI".parse().unwrap();
        let gates = controlled_pauli(&q, 2, ControlBasis::Z, &[0, 1]);
        assert_eq!(gates, vec![Gate::Sdg(0), Gate::CX(2, 0), Gate::S(0)]);
        q.negate();
        let gates = controlled_pauli(&q, 2, ControlBasis::Z, &[0, 1]);
        assert_eq!(gates.last(), Some(&Gate::Z(2)));
    }

    fn check_random(k: usize, table: &CostTable, seed: u64, cases: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut done = 0;
        while done < cases {
            let n = rng.gen_range(k + 1..k + 4);
            let len = rng.gen_range(5..40);
            let c = random_circuit(n, len, &mut rng);
            let mut subset: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(&mut subset[..], &mut rng);
            subset.truncate(k);
            let Ok(s) = project_onto_subset(&c, &subset) else { continue };
            let sol = dp_optimize(&s, table).unwrap();
            let out = lift(&c, &s, &sol, table).unwrap();
            assert!(circuits_equivalent(&out, &c).unwrap(), "{}\n{:?}", c.to_text(), subset);
            let before = c.two_qubit_count();
            assert_eq!(out.two_qubit_count(), before - s.absorbed_cost + sol.cost);
            done += 1;
        }
    }

    #[test]
    fn lift_preserves_unitary_pairs() {
        check_random(2, &CostTable::build(2).unwrap(), 3, 300);
    }
}
