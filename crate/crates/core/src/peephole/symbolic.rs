//! Projection of a circuit onto a qubit subset `A`.
//!
//! Seen from `A`, a CX or CZ coupling `a ∈ A` to `b ∉ A` is a Pauli on `a`
//! raised to the (basis) value of `b`. Consecutive couplings with the same
//! control and basis share that value, so their Paulis multiply into one
//! symbolic Pauli gate `P_i^{v_i}`. Gates inside `A` are moved to the front by
//! conjugating the `P_i` they pass, which yields
//! `U_A(v) = P_k^{v_k} ... P_1^{v_1} R`.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::pauli::PauliOperator;
use crate::tableau::CliffordTableau;

/// Basis in which the control qubit of a group is read.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ControlBasis {
    /// Control of `CX(b, a)` or leg of `CZ(a, b)`.
    Z,
    /// Target of `CX(a, b)`.
    X,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpgGroup {
    pub control: usize,
    pub basis: ControlBasis,
    /// Index in the original circuit of the group's first coupling gate.
    pub anchor: usize,
    /// Operator on `A` (local indices), phase included.
    pub pauli: PauliOperator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicCircuit {
    /// Local qubit `i` is global qubit `subset[i]`.
    pub subset: Vec<usize>,
    pub remainder: CliffordTableau,
    pub groups: Vec<SpgGroup>,
    /// Indices of the gates absorbed into the symbolic form.
    pub absorbed: Vec<usize>,
    /// Two-qubit count of the absorbed gates.
    pub absorbed_cost: usize,
}

impl SymbolicCircuit {
    pub fn num_groups(&self) -> usize {
        self.groups.len()
    }

    /// Cheapest conceivable cost: one entangling gate per nontrivial group.
    pub fn lower_bound(&self) -> usize {
        self.groups.iter().filter(|g| !g.pauli.is_identity_up_to_phase()).count()
    }

    /// `U_A(v)` as a tableau on the subset (phases of the `P_i` dropped).
    pub fn evaluate(&self, v: &[bool]) -> CliffordTableau {
        let mut t = self.remainder.clone();
        for (g, &on) in self.groups.iter().zip(v) {
            if on {
                for gate in g.pauli.to_gates() {
                    t.apply_gate(&gate);
                }
            }
        }
        t
    }
}

fn check_subset(n: usize, subset: &[usize]) -> Result<Vec<Option<usize>>> {
    if !(2..=3).contains(&subset.len()) {
        return Err(Error::InvalidSubset(format!("subset size must be 2 or 3, got {}", subset.len())));
    }
    let mut local = vec![None; n];
    for (i, &q) in subset.iter().enumerate() {
        if q >= n {
            return Err(Error::QubitOutOfRange { index: q, n });
        }
        if local[q].is_some() {
            return Err(Error::RepeatedQubit(q));
        }
        local[q] = Some(i);
    }
    Ok(local)
}

pub fn project_onto_subset(c: &Circuit, subset: &[usize]) -> Result<SymbolicCircuit> {
    let n = c.num_qubits();
    let local = check_subset(n, subset)?;
    let k = subset.len();
    let mut remainder = CliffordTableau::identity(k);
    let mut groups: Vec<SpgGroup> = Vec::new();
    let mut open: Option<(usize, ControlBasis)> = None;
    let mut absorbed = Vec::new();
    let mut absorbed_cost = 0;

    for (idx, g) in c.gates().iter().enumerate() {
        let (q0, q1) = g.qubits();
        let in_a = |q: usize| local[q].is_some();
        let inside = in_a(q0) && q1.is_none_or(in_a);
        let outside = !in_a(q0) && q1.is_none_or(|q| !in_a(q));
        if inside {
            let lg = g.relabel(|q| local[q].expect("inside A"));
            remainder.apply_gate(&lg);
            for grp in &mut groups {
                grp.pauli.apply_gate(&lg);
            }
            absorbed.push(idx);
            absorbed_cost += match g {
                Gate::Swap(..) => 3,
                _ if g.is_two_qubit() => 1,
                _ => 0,
            };
            continue;
        }
        if outside {
            if let Some((b, _)) = open {
                if g.acts_on(b) {
                    open = None;
                }
            }
            continue;
        }
        let (b, basis, a, factor) = match *g {
            Gate::CX(ctl, t) if in_a(t) => (ctl, ControlBasis::Z, t, PauliOperator::x_on(k, local[t].unwrap())),
            Gate::CX(ctl, t) => (t, ControlBasis::X, ctl, PauliOperator::z_on(k, local[ctl].unwrap())),
            Gate::CZ(x, y) => {
                let (a, b) = if in_a(x) { (x, y) } else { (y, x) };
                (b, ControlBasis::Z, a, PauliOperator::z_on(k, local[a].unwrap()))
            }
            _ => return Err(Error::BoundaryCrossing(g.to_string())),
        };
        debug_assert!(in_a(a) && !in_a(b));
        absorbed.push(idx);
        absorbed_cost += 1;
        match (open, groups.last_mut()) {
            (Some(key), Some(last)) if key == (b, basis) => last.pauli = factor.mul(&last.pauli),
            _ => {
                groups.push(SpgGroup { control: b, basis, anchor: idx, pauli: factor });
                open = Some((b, basis));
            }
        }
    }
    Ok(SymbolicCircuit { subset: subset.to_vec(), remainder, groups, absorbed, absorbed_cost })
}
