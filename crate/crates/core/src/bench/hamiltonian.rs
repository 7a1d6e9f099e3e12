//! Layered CZ/H circuits modelling Hamiltonian evolution on a graph.

use crate::bench::graph::InteractionGraph;
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::tableau::CliffordTableau;

/// Default cap on the number of layers tried by [`evolution_period`].
pub const DEFAULT_PERIOD_CAP: u64 = 1_000_000;

fn layer(g: &InteractionGraph) -> impl Iterator<Item = Gate> + '_ {
    g.edges.iter().map(|&(a, b)| Gate::CZ(a, b)).chain((0..g.n).map(Gate::H))
}

/// `t` layers, each CZ on every edge (ascending) followed by H on every
/// vertex.
pub fn hamiltonian_circuit(g: &InteractionGraph, t: usize) -> Result<Circuit> {
    if t == 0 {
        return Err(Error::ZeroLayers);
    }
    let gates = (0..t).flat_map(|_| layer(g)).collect();
    Circuit::from_gates(g.n, gates)
}

/// Smallest `t >= 1` for which `t` layers equal the identity up to a layer of
/// Pauli gates.
pub fn evolution_period(g: &InteractionGraph, cap: u64) -> Result<u64> {
    let one = CliffordTableau::from_circuit(&hamiltonian_circuit(g, 1)?)?;
    let mut acc = one.clone();
    for t in 1..=cap {
        if acc.is_pauli() {
            return Ok(t);
        }
        acc = acc.then(&one);
    }
    Err(Error::PeriodCapExceeded(cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::graph::{make_graph, Family};

    #[test]
    fn one_layer_on_path() {
        let c = hamiltonian_circuit(&make_graph(Family::Path, 5).unwrap(), 1).unwrap();
        assert_eq!(c.two_qubit_count(), 4);
        assert_eq!(c.single_qubit_count(), 5);
        assert_eq!(c.gates()[0], Gate::CZ(0, 1));
        assert_eq!(c.gates()[4], Gate::H(0));
    }

    #[test]
    fn zero_layers_rejected() {
        let g = make_graph(Family::Path, 3).unwrap();
        assert_eq!(hamiltonian_circuit(&g, 0), Err(Error::ZeroLayers));
    }

    #[test]
    fn period_is_pauli_and_minimal() {
        let g = make_graph(Family::Cycle, 5).unwrap();
        let p = evolution_period(&g, 100).unwrap() as usize;
        let at = |t| CliffordTableau::from_circuit(&hamiltonian_circuit(&g, t).unwrap()).unwrap();
        assert!(at(p).is_pauli());
        // The signs only return after two periods here.
        assert!(!at(p).is_identity());
        assert!(at(2 * p).is_identity());
        for t in 1..p {
            assert!(!at(t).is_pauli());
        }
    }

    #[test]
    fn cap_is_reported() {
        let g = make_graph(Family::Path, 5).unwrap();
        assert_eq!(evolution_period(&g, 3), Err(Error::PeriodCapExceeded(3)));
    }
}
