//! Repeated peephole sweeps over random orderings of qubit pairs and triples.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::peephole::cache::shared_table;
use crate::peephole::cost_table::CostTable;
use crate::peephole::dp::dp_optimize;
use crate::peephole::lift::lift;
use crate::peephole::symbolic::project_onto_subset;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct PeepholeStats {
    /// Full sweeps started.
    pub sweeps: usize,
    pub subsets_tried: usize,
    pub improvements: usize,
    /// Whether the deadline cut the last sweep short.
    pub timed_out: bool,
}

/// Re-optimizes the part of `c` touching `subset`; `Some` only if the
/// two-qubit count strictly drops.
pub fn optimize_subset(c: &Circuit, subset: &[usize], table: &CostTable) -> Result<Option<Circuit>> {
    let s = match project_onto_subset(c, subset) {
        Ok(s) => s,
        // A SWAP across the boundary has no symbolic form; leave it alone.
        Err(Error::BoundaryCrossing(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if s.absorbed_cost <= s.lower_bound() {
        return Ok(None);
    }
    let sol = dp_optimize(&s, table)?;
    if sol.cost >= s.absorbed_cost {
        return Ok(None);
    }
    let out = lift(c, &s, &sol, table)?;
    debug_assert_eq!(out.two_qubit_count() + s.absorbed_cost, c.two_qubit_count() + sol.cost);
    Ok(Some(out))
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    match size {
        2 => {
            for a in 0..n {
                for b in a + 1..n {
                    out.push(vec![a, b]);
                }
            }
        }
        3 => {
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        out.push(vec![a, b, c]);
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// Sweeps all subsets of each size in `sizes` (in that order, each list
/// freshly shuffled) until a sweep brings no improvement or `deadline` passes.
pub fn peephole_pass_with_stats<R: Rng>(
    c: &Circuit,
    sizes: &[usize],
    rng: &mut R,
    deadline: Option<Instant>,
) -> Result<(Circuit, PeepholeStats)> {
    let mut tables = Vec::with_capacity(sizes.len());
    for &size in sizes {
        tables.push(shared_table(size)?);
    }
    let n = c.num_qubits();
    let mut cur = c.clone();
    let mut stats = PeepholeStats::default();
    loop {
        stats.sweeps += 1;
        let mut improved = false;
        for (&size, table) in sizes.iter().zip(&tables) {
            let mut list = subsets(n, size);
            list.shuffle(rng);
            for subset in &list {
                if deadline.is_some_and(|d| Instant::now() >= d) {
                    stats.timed_out = true;
                    return Ok((cur, stats));
                }
                stats.subsets_tried += 1;
                if let Some(next) = optimize_subset(&cur, subset, table)? {
                    cur = next;
                    stats.improvements += 1;
                    improved = true;
                }
            }
        }
        if !improved {
            return Ok((cur, stats));
        }
    }
}

pub fn peephole_pass<R: Rng>(c: &Circuit, sizes: &[usize], rng: &mut R, deadline: Option<Instant>) -> Result<Circuit> {
    peephole_pass_with_stats(c, sizes, rng, deadline).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::peephole::symplectic as sp;
    use crate::random::{random_circuit, random_clifford_circuit};
    use crate::tableau::{circuits_equivalent, CliffordTableau};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn circ(s: &str) -> Circuit {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let empty = Circuit::new(4);
        assert_eq!(peephole_pass(&empty, &[2], &mut rng, None).unwrap(), empty);
        let out = peephole_pass(&circ("qubits 2\ncx 0 1\ncx 0 1"), &[2], &mut rng, None).unwrap();
        assert_eq!(out.two_qubit_count(), 0);
    }

    #[test]
    fn merges_same_control_couplings() {
        let c = circ("qubits 3\ncx 2 0\nh 0\ncx 2 0");
        let table = shared_table(2).unwrap();
        let out = optimize_subset(&c, &[0, 1], table).unwrap().expect("improves");
        assert!(circuits_equivalent(&out, &c).unwrap());
        assert_eq!(out.two_qubit_count(), 1);
        assert!(out.gates().iter().any(|g| matches!(g, crate::Gate::S(2) | crate::Gate::Sdg(2))));
    }

    #[test]
    fn pairs_preserve_unitary_and_never_increase() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 3..7 {
            for _ in 0..6 {
                let c = random_circuit(n, 60, &mut rng);
                let (out, stats) = peephole_pass_with_stats(&c, &[2], &mut rng, None).unwrap();
                assert!(circuits_equivalent(&out, &c).unwrap());
                assert!(out.two_qubit_count() <= c.two_qubit_count());
                assert!(!stats.timed_out);
            }
        }
    }

    #[test]
    fn three_qubit_circuits_reach_table_optimum() {
        let table = shared_table(3).unwrap();
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = random_clifford_circuit(3, &mut rng);
            let out = peephole_pass(&c, &[2, 3], &mut rng, None).unwrap();
            assert!(circuits_equivalent(&out, &c).unwrap());
            let v = sp::from_tableau(&CliffordTableau::from_circuit(&c).unwrap());
            assert_eq!(out.two_qubit_count(), table.cost(v) as usize);
        }
    }

    #[test]
    fn expired_deadline_returns_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = random_circuit(4, 40, &mut rng);
        let (out, stats) = peephole_pass_with_stats(&c, &[2], &mut rng, Some(Instant::now())).unwrap();
        assert_eq!(out, c);
        assert!(stats.timed_out);
    }
}
