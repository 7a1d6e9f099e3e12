//! Choice of the Cliffords `U_1, ..., U_k` that minimize the cost of the
//! rewritten subset circuit
//!
//! `f = $(U_1 R) + sum_j |U_j P_j U_j^{-1}| + sum_j $(U_{j+1} U_j^{-1}) + $(U_k)`.
//!
//! `$` is invariant under single-qubit gates on either side, so each `U_j`
//! ranges over left cosets of the local subgroup only. The transition
//! `$(U_{j+1} U_j^{-1})` is the distance between the cosets in the graph
//! whose edges are single CX gates, so every layer of the minimization is one
//! multi-source shortest-path sweep.

use crate::error::{Error, Result};
use crate::peephole::cost_table::CostTable;
use crate::peephole::symbolic::SymbolicCircuit;
use crate::peephole::symplectic::{self as sp, Symp};

const INF: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpSolution {
    /// Coset representatives chosen for `U_1, ..., U_k`.
    pub reps: Vec<Symp>,
    /// Two-qubit count of the rewritten subset circuit.
    pub cost: usize,
}

/// `out[c] = min_s (init[s] + d(s, c))` and the minimizing `s`.
fn distance_transform(table: &CostTable, init: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let m = init.len();
    let mut dist = init.to_vec();
    let mut origin: Vec<u32> = (0..m as u32).collect();
    let mut buckets: Vec<Vec<u32>> = Vec::new();
    for (c, &d) in init.iter().enumerate() {
        if d != INF {
            let d = d as usize;
            if buckets.len() <= d {
                buckets.resize_with(d + 1, Vec::new);
            }
            buckets[d].push(c as u32);
        }
    }
    let mut d = 0;
    while d < buckets.len() {
        let bucket = std::mem::take(&mut buckets[d]);
        for c in bucket {
            if dist[c as usize] != d as u32 {
                continue;
            }
            for &nb in table.neighbors(c as usize) {
                let nd = d as u32 + 1;
                if nd < dist[nb as usize] {
                    dist[nb as usize] = nd;
                    origin[nb as usize] = origin[c as usize];
                    if buckets.len() <= d + 1 {
                        buckets.resize_with(d + 2, Vec::new);
                    }
                    buckets[d + 1].push(nb);
                }
            }
        }
        d += 1;
    }
    (dist, origin)
}

pub fn dp_optimize(s: &SymbolicCircuit, table: &CostTable) -> Result<DpSolution> {
    let k = table.arity();
    if s.subset.len() != k {
        return Err(Error::InvalidSubset(format!("table is for {k} qubits, subset has {}", s.subset.len())));
    }
    let reps = table.reps();
    let m = reps.len();
    let r = sp::from_tableau(&s.remainder);
    let paulis: Vec<u64> = s.groups.iter().map(|g| sp::pauli_bits(&g.pauli)).collect();

    let mut layer = vec![INF; m];
    layer[table.coset(sp::inverse(r, k))] = 0;
    let mut origins: Vec<Vec<u32>> = Vec::with_capacity(paulis.len());
    for &p in &paulis {
        let (mut dist, origin) = distance_transform(table, &layer);
        for (c, d) in dist.iter_mut().enumerate() {
            if *d != INF {
                *d += sp::weight(sp::image(reps[c], k, p), k);
            }
        }
        origins.push(origin);
        layer = dist;
    }
    let (dist, origin) = distance_transform(table, &layer);
    let id = table.identity_coset();
    let cost = dist[id];
    if cost == INF {
        return Err(Error::InconsistentSolution("coset graph is disconnected".into()));
    }

    let mut chosen = vec![0u32; paulis.len()];
    let mut cur = origin[id];
    for j in (0..paulis.len()).rev() {
        chosen[j] = cur;
        cur = origins[j][cur as usize];
    }
    Ok(DpSolution { reps: chosen.iter().map(|&c| reps[c as usize]).collect(), cost: cost as usize })
}

/// Value of the objective for explicit choices of `U_1, ..., U_k`.
pub fn objective(s: &SymbolicCircuit, table: &CostTable, us: &[Symp]) -> usize {
    let k = table.arity();
    let r = sp::from_tableau(&s.remainder);
    let mut prev_inv = r;
    let mut total = 0usize;
    for (g, &u) in s.groups.iter().zip(us) {
        total += table.cost(sp::then(prev_inv, u, k)) as usize;
        total += sp::weight(sp::image(u, k, sp::pauli_bits(&g.pauli)), k) as usize;
        prev_inv = sp::inverse(u, k);
    }
    total + table.cost(prev_inv) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Circuit;
    use crate::peephole::symbolic::project_onto_subset;
    use crate::random::random_circuit;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_force(s: &SymbolicCircuit, table: &CostTable) -> usize {
        let reps = table.reps();
        let k = s.num_groups();
        let mut best = usize::MAX;
        let mut idx = vec![0usize; k];
        loop {
            let us: Vec<Symp> = idx.iter().map(|&i| reps[i]).collect();
            best = best.min(objective(s, table, &us));
            let mut j = 0;
            while j < k {
                idx[j] += 1;
                if idx[j] < reps.len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == k {
                return best;
            }
        }
    }

    #[test]
    fn matches_brute_force_on_pairs() {
        let table = CostTable::build(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = [0usize; 4];
        let mut tries = 0;
        while seen.iter().any(|&c| c < 15) && tries < 20_000 {
            tries += 1;
            let n = rng.gen_range(3..6);
            let len = rng.gen_range(4..24);
            let c = random_circuit(n, len, &mut rng);
            let Ok(s) = project_onto_subset(&c, &[0, 1]) else { continue };
            let k = s.num_groups();
            if k > 3 || seen[k] >= 15 {
                continue;
            }
            seen[k] += 1;
            let sol = dp_optimize(&s, &table).unwrap();
            assert_eq!(sol.cost, brute_force(&s, &table), "{}", c.to_text());
            assert_eq!(objective(&s, &table, &sol.reps), sol.cost);
            assert!(sol.cost <= s.absorbed_cost);
            assert!(sol.cost >= s.lower_bound());
        }
        assert!(seen.iter().all(|&c| c >= 15), "{seen:?}");
    }

    #[test]
    fn no_groups_gives_remainder_cost() {
        let table = CostTable::build(2).unwrap();
        let c: Circuit = "qubits 2\ncx 0 1\ncx 1 0\ncx 0 1".parse().unwrap();
        let s = project_onto_subset(&c, &[0, 1]).unwrap();
        let sol = dp_optimize(&s, &table).unwrap();
        assert_eq!(sol.cost, 3);
        assert!(sol.reps.is_empty());
    }

    #[test]
    fn single_coupling_costs_one() {
        let table = CostTable::build(2).unwrap();
        let c: Circuit = "qubits 3\ncx 2 0".parse().unwrap();
        let s = project_onto_subset(&c, &[0, 1]).unwrap();
        assert_eq!(dp_optimize(&s, &table).unwrap().cost, 1);
    }

    #[test]
    fn redundant_couplings_collapse() {
        // Two couplings that cancel leave nothing to pay for.
        let table = CostTable::build(2).unwrap();
        let c: Circuit = "qubits 3\ncx 2 0\ncx 2 0".parse().unwrap();
        let s = project_onto_subset(&c, &[0, 1]).unwrap();
        assert_eq!(dp_optimize(&s, &table).unwrap().cost, 0);
    }

    #[test]
    fn wrong_arity_rejected() {
        let table = CostTable::build(2).unwrap();
        let c: Circuit = "qubits 3\ncx 2 0".parse().unwrap();
        let s = project_onto_subset(&c, &[0, 1, 2]).unwrap();
        assert!(dp_optimize(&s, &table).is_err());
    }

    fn random_projection(k: usize, max_groups: usize, rng: &mut ChaCha8Rng) -> SymbolicCircuit {
        loop {
            let n = rng.gen_range(k + 1..k + 4);
            let len = rng.gen_range(4..30);
            let c = random_circuit(n, len, rng);
            let subset: Vec<usize> = (0..k).collect();
            if let Ok(s) = project_onto_subset(&c, &subset) {
                if s.num_groups() <= max_groups {
                    return s;
                }
            }
        }
    }

    #[test]
    fn triples_single_group_exhaustive() {
        let table = crate::peephole::shared_table(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..4 {
            let s = random_projection(3, 1, &mut rng);
            let sol = dp_optimize(&s, table).unwrap();
            assert_eq!(sol.cost, brute_force(&s, table));
        }
    }

    #[test]
    fn triples_two_groups_sampled() {
        let table = crate::peephole::shared_table(3).unwrap();
        let reps = table.reps();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..4 {
            let s = loop {
                let s = random_projection(3, 2, &mut rng);
                if s.num_groups() == 2 {
                    break s;
                }
            };
            let sol = dp_optimize(&s, table).unwrap();
            assert_eq!(objective(&s, table, &sol.reps), sol.cost);
            // Exhaustive over the second choice for sampled first choices,
            // including the DP's own first choice.
            let mut firsts: Vec<Symp> = (0..40).map(|_| reps[rng.gen_range(0..reps.len())]).collect();
            firsts.push(sol.reps[0]);
            let best = firsts
                .iter()
                .flat_map(|&u1| reps.iter().map(move |&u2| [u1, u2]))
                .map(|us| objective(&s, table, &us))
                .min()
                .unwrap();
            assert_eq!(best, sol.cost);
        }
    }

    #[test]
    fn objective_ignores_local_left_factors() {
        let table = CostTable::build(2).unwrap();
        let locals: Vec<Symp> = sp::generators(2)
            .into_iter()
            .filter(|g| g.is_local())
            .map(|g| sp::apply_gen(sp::identity(2), 2, g))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let s = random_projection(2, 3, &mut rng);
            let reps = table.reps();
            let us: Vec<Symp> = (0..s.num_groups()).map(|_| reps[rng.gen_range(0..reps.len())]).collect();
            let base = objective(&s, &table, &us);
            for j in 0..us.len() {
                let mut moved = us.clone();
                for _ in 0..4 {
                    let l = locals[rng.gen_range(0..locals.len())];
                    moved[j] = sp::then(moved[j], l, 2);
                }
                assert_eq!(objective(&s, &table, &moved), base);
            }
        }
    }
}
