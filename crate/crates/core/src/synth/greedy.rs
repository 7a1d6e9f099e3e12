//! Greedy compilers that peel off one qubit per step.
//!
//! Both keep a working tableau `W`, initially the target. The unidirectional
//! compiler left-multiplies `W` by a disentangler `D` so that one qubit drops
//! out; the bidirectional one additionally right-multiplies by `E^-1`, where
//! `E` disentangles a low-weight pair `(P, P')`, and picks the pair whose
//! combined cost is smallest.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::Circuit;
use crate::gate::Gate;
use crate::pauli::{Pauli1, PauliOperator};
use crate::synth::disentangle::{disentangler_onto, ClassSizes};
use crate::tableau::CliffordTableau;

/// Candidates the randomized bidirectional compiler chooses among.
pub const BIDIRECTIONAL_CHOICES: usize = 4;

/// Bit-only view of a Pauli, for cost evaluation without phase bookkeeping.
#[derive(Clone)]
struct Bits {
    x: Vec<u64>,
    z: Vec<u64>,
}

impl Bits {
    fn zero(words: usize) -> Self {
        Bits { x: vec![0; words], z: vec![0; words] }
    }

    fn clear(&mut self) {
        self.x.fill(0);
        self.z.fill(0);
    }

    fn xor(&mut self, p: &PauliOperator) {
        for (a, b) in self.x.iter_mut().zip(p.x_words()) {
            *a ^= b;
        }
        for (a, b) in self.z.iter_mut().zip(p.z_words()) {
            *a ^= b;
        }
    }
}

fn pair_cost(o: &Bits, o2: &Bits) -> usize {
    ClassSizes::of_words(&o.x, &o.z, &o2.x, &o2.z).cnot_cost()
}

/// Disentangling cost of a pair given by its factors on at most two qubits.
fn local_pair_cost(p: [Pauli1; 2], p2: [Pauli1; 2]) -> usize {
    let pack = |f: [Pauli1; 2]| {
        let (x0, z0) = f[0].bits();
        let (x1, z1) = f[1].bits();
        ([x0 as u64 | (x1 as u64) << 1], [z0 as u64 | (z1 as u64) << 1])
    };
    let ((x1, z1), (x2, z2)) = (pack(p), pack(p2));
    ClassSizes::of_words(&x1, &z1, &x2, &z2).cnot_cost()
}

fn finish(n: usize, prefix: Vec<Gate>, disentanglers: Vec<Circuit>) -> Circuit {
    let mut gates = prefix;
    for d in disentanglers.iter().rev() {
        gates.extend(d.inverse().into_gates());
    }
    Circuit::from_gates_unchecked(n, gates)
}

/// Compiles `t`, always disentangling the qubit whose images are cheapest to
/// clear (lowest index on ties). With a seed, the qubit is drawn uniformly
/// from the remaining ones instead.
pub fn greedy_unidirectional(t: &CliffordTableau, seed: Option<u64>) -> Circuit {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let n = t.num_qubits();
    let mut w = t.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut steps = Vec::with_capacity(n);
    while !active.is_empty() {
        let idx = match rng.as_mut() {
            Some(r) => r.gen_range(0..active.len()),
            None => (0..active.len())
                .min_by_key(|&i| {
                    let p = active[i];
                    ClassSizes::of(w.x_image(p), w.z_image(p)).cnot_cost()
                })
                .expect("active set is nonempty"),
        };
        let p = active.remove(idx);
        let d = disentangler_onto(w.x_image(p), w.z_image(p), p)
            .expect("tableau rows anticommute")
            .circuit;
        w.apply_circuit(&d);
        steps.push(d);
    }
    debug_assert!(w.is_identity());
    finish(n, Vec::new(), steps)
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    cost: usize,
    /// Pauli factors of `P` and `P'` on qubits `a` and `b`.
    a: usize,
    b: usize,
    p: [Pauli1; 2],
    p2: [Pauli1; 2],
}

const PAULIS: [Pauli1; 4] = [Pauli1::I, Pauli1::X, Pauli1::Y, Pauli1::Z];

/// (X, Z) first so that an already separated qubit is left alone.
const SINGLE_PAIRS: [(Pauli1, Pauli1); 6] = [
    (Pauli1::X, Pauli1::Z),
    (Pauli1::X, Pauli1::Y),
    (Pauli1::Y, Pauli1::X),
    (Pauli1::Y, Pauli1::Z),
    (Pauli1::Z, Pauli1::X),
    (Pauli1::Z, Pauli1::Y),
];

fn anticommute1(a: Pauli1, b: Pauli1) -> bool {
    a != Pauli1::I && b != Pauli1::I && a != b
}

/// Enumerates anticommuting pairs of weight at most two on `active`, in
/// (qubit pair, Pauli encoding) order. Single-qubit pairs come from `a == b`.
fn for_each_candidate(active: &[usize], mut f: impl FnMut(usize, usize, [Pauli1; 2], [Pauli1; 2])) {
    for (i, &a) in active.iter().enumerate() {
        for (pa, qa) in SINGLE_PAIRS {
            f(a, a, [pa, Pauli1::I], [qa, Pauli1::I]);
        }
        for &b in &active[i + 1..] {
            for pa in PAULIS {
                for pb in PAULIS {
                    for qa in PAULIS {
                        for qb in PAULIS {
                            let p_on = (pa != Pauli1::I, pb != Pauli1::I);
                            let q_on = (qa != Pauli1::I, qb != Pauli1::I);
                            if p_on == (false, false) || q_on == (false, false) {
                                continue;
                            }
                            let support = (p_on.0 || q_on.0, p_on.1 || q_on.1);
                            if support != (true, true) {
                                continue;
                            }
                            if anticommute1(pa, qa) == anticommute1(pb, qb) {
                                continue;
                            }
                            f(a, b, [pa, pb], [qa, qb]);
                        }
                    }
                }
            }
        }
    }
}

fn build_pauli(n: usize, a: usize, b: usize, f: [Pauli1; 2]) -> PauliOperator {
    let mut p = PauliOperator::identity(n);
    p.set(a, f[0]);
    if b != a {
        p.set(b, f[1]);
    }
    p
}

fn image_bits(w: &CliffordTableau, out: &mut Bits, a: usize, b: usize, f: [Pauli1; 2]) {
    out.clear();
    let qs: &[(usize, Pauli1)] = &[(a, f[0]), (b, f[1])];
    for &(q, s) in if a == b { &qs[..1] } else { qs } {
        let (x, z) = s.bits();
        if x {
            out.xor(w.x_image(q));
        }
        if z {
            out.xor(w.z_image(q));
        }
    }
}

/// Compiles `t` by minimizing, per step, the CX cost of both the left and the
/// right disentangler over low-weight anticommuting pairs. With a seed, the
/// step picks uniformly among the [`BIDIRECTIONAL_CHOICES`] cheapest pairs.
///
/// The deterministic variant also runs the unidirectional compiler and returns
/// whichever circuit has fewer CX gates, so it never does worse.
pub fn greedy_bidirectional(t: &CliffordTableau, seed: Option<u64>) -> Circuit {
    let bi = bidirectional_core(t, seed.map(ChaCha8Rng::seed_from_u64), BIDIRECTIONAL_CHOICES);
    if seed.is_some() {
        return bi;
    }
    let uni = greedy_unidirectional(t, None);
    if uni.cx_count() < bi.cx_count() {
        uni
    } else {
        bi
    }
}

/// Bidirectional compiler without the unidirectional fallback.
pub fn greedy_bidirectional_raw(t: &CliffordTableau, seed: Option<u64>) -> Circuit {
    bidirectional_core(t, seed.map(ChaCha8Rng::seed_from_u64), BIDIRECTIONAL_CHOICES)
}

fn bidirectional_core(t: &CliffordTableau, mut rng: Option<ChaCha8Rng>, choices: usize) -> Circuit {
    let n = t.num_qubits();
    let words = crate::pauli::words_for(n);
    let mut w = t.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut prefix = Vec::new();
    let mut steps = Vec::with_capacity(n);
    let (mut o, mut o2) = (Bits::zero(words), Bits::zero(words));
    let mut cands: Vec<Candidate> = Vec::new();

    while !active.is_empty() {
        cands.clear();
        let mut best: Option<Candidate> = None;
        for_each_candidate(&active, |a, b, p, p2| {
            image_bits(&w, &mut o, a, b, p);
            image_bits(&w, &mut o2, a, b, p2);
            let cost = local_pair_cost(p, p2) + pair_cost(&o, &o2);
            let c = Candidate { cost, a, b, p, p2 };
            if rng.is_some() {
                cands.push(c);
            } else if best.is_none_or(|bst| cost < bst.cost) {
                best = Some(c);
            }
        });
        let chosen = match rng.as_mut() {
            Some(r) => {
                // Stable sort keeps enumeration order among equal costs.
                cands.sort_by_key(|c| c.cost);
                *cands[..choices.min(cands.len())].choose(r).expect("candidates exist")
            }
            None => best.expect("candidates exist"),
        };

        let p = build_pauli(n, chosen.a, chosen.b, chosen.p);
        let p2 = build_pauli(n, chosen.a, chosen.b, chosen.p2);
        let q = (0..n)
            .find(|&q| {
                let (u, v) = (p.get(q), p2.get(q));
                u != Pauli1::I && v != Pauli1::I && u != v
            })
            .expect("anticommuting pair has a qubit of class A");
        let e = disentangler_onto(&p, &p2, q).expect("pair anticommutes").circuit;
        for g in e.gates() {
            w.prepend_gate(&g.inverse());
        }
        let d = disentangler_onto(w.x_image(q), w.z_image(q), q)
            .expect("tableau rows anticommute")
            .circuit;
        w.apply_circuit(&d);
        prefix.extend_from_slice(e.gates());
        steps.push(d);
        active.retain(|&x| x != q);
    }
    debug_assert!(w.is_identity());
    finish(n, prefix, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_clifford;

    fn tab(s: &str) -> CliffordTableau {
        CliffordTableau::from_circuit(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn identity_compiles_to_empty() {
        let id = CliffordTableau::identity(4);
        assert!(greedy_unidirectional(&id, None).is_empty());
        assert!(greedy_bidirectional(&id, None).is_empty());
    }

    #[test]
    fn single_cx() {
        let t = tab("qubits 2\ncx 0 1");
        let u = greedy_unidirectional(&t, None);
        assert_eq!(CliffordTableau::from_circuit(&u).unwrap(), t);
        assert_eq!(u.cx_count(), 1);
        let b = greedy_bidirectional_raw(&t, None);
        assert_eq!(CliffordTableau::from_circuit(&b).unwrap(), t);
        assert_eq!(b.cx_count(), 1);
    }

    #[test]
    fn compilers_reproduce_random_tableaus() {
        for seed in 0..40 {
            let n = 1 + (seed as usize % 9);
            let t = random_clifford(n, seed);
            for c in [
                greedy_unidirectional(&t, None),
                greedy_unidirectional(&t, Some(seed)),
                greedy_bidirectional_raw(&t, None),
                greedy_bidirectional(&t, Some(seed)),
            ] {
                assert_eq!(CliffordTableau::from_circuit(&c).unwrap(), t, "seed {seed}");
            }
        }
    }

    #[test]
    fn unidirectional_bound_n6() {
        for seed in 0..200 {
            let c = greedy_unidirectional(&random_clifford(6, seed), None);
            assert!(c.cx_count() <= 27 + 24);
        }
    }

    #[test]
    fn candidate_enumeration_counts() {
        let mut single = 0;
        let mut double = 0;
        for_each_candidate(&[0, 1], |a, b, _, _| if a == b { single += 1 } else { double += 1 });
        assert_eq!(single, 12);
        // 120 ordered anticommuting pairs on two qubits, minus the 12 that
        // live on a single qubit.
        assert_eq!(double, 108);
    }
}
