//! Minimal CX counts over the symplectic group on two or three qubits.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::peephole::symplectic::{self as sp, Symp, SympGen};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) struct Entry {
    pub cost: u8,
    /// Index into the generator list of the last gate of a minimal circuit,
    /// or `u8::MAX` for the identity.
    pub pred: u8,
    pub coset: u32,
}

const NO_PRED: u8 = u8::MAX;

/// Cost lookup for every element of `Sp(2k, 2)`, plus the left cosets of the
/// local subgroup (single-qubit gates) and the graph that connects them by one
/// CX.
#[derive(Clone, Debug)]
pub struct CostTable {
    arity: usize,
    gens: Vec<SympGen>,
    entries: FxHashMap<Symp, Entry>,
    reps: Vec<Symp>,
    /// CSR adjacency of the coset graph: coset `c` reaches
    /// `adj[offsets[c]..offsets[c + 1]]` with one CX.
    offsets: Vec<u32>,
    adj: Vec<u32>,
}

impl CostTable {
    /// Breadth-first search from the identity with single-qubit generators at
    /// weight 0 and CX at weight 1.
    pub fn build(arity: usize) -> Result<Self> {
        if !(1..=3).contains(&arity) {
            return Err(Error::InvalidSubset(format!("cost tables exist for 1 to 3 qubits, not {arity}")));
        }
        let k = arity;
        let gens = sp::generators(k);
        let mut entries: FxHashMap<Symp, Entry> = FxHashMap::default();
        let mut order: Vec<Symp> = Vec::new();
        let mut queue: VecDeque<(u8, Symp)> = VecDeque::new();
        let id = sp::identity(k);
        entries.insert(id, Entry { cost: 0, pred: NO_PRED, coset: 0 });
        queue.push_back((0, id));
        let mut done: rustc_hash::FxHashSet<Symp> = Default::default();
        while let Some((d, v)) = queue.pop_front() {
            if entries[&v].cost != d || !done.insert(v) {
                continue;
            }
            order.push(v);
            for (gi, &g) in gens.iter().enumerate() {
                let w = sp::apply_gen(v, k, g);
                let nd = d + (!g.is_local()) as u8;
                let better = entries.get(&w).is_none_or(|e| nd < e.cost);
                if better {
                    entries.insert(w, Entry { cost: nd, pred: gi as u8, coset: 0 });
                    if g.is_local() {
                        queue.push_front((nd, w));
                    } else {
                        queue.push_back((nd, w));
                    }
                }
            }
        }
        Ok(Self::with_entries(k, gens, entries, order))
    }

    /// Computes cosets and their graph for a complete cost map. Cosets are
    /// numbered by the cheapest, then smallest, element they contain.
    fn with_entries(k: usize, gens: Vec<SympGen>, mut entries: FxHashMap<Symp, Entry>, mut order: Vec<Symp>) -> Self {
        let mut keyed: Vec<(u8, Symp)> = order.drain(..).map(|v| (entries[&v].cost, v)).collect();
        keyed.sort_unstable();
        order.extend(keyed.into_iter().map(|(_, v)| v));
        let locals = local_group(k, &gens);
        let cxs: Vec<SympGen> = gens.iter().copied().filter(|g| !g.is_local()).collect();
        const UNSET: u32 = u32::MAX;
        for e in entries.values_mut() {
            e.coset = UNSET;
        }
        let mut reps = Vec::new();
        let mut orbits: Vec<Vec<Symp>> = Vec::new();
        for &v in &order {
            if entries[&v].coset != UNSET {
                continue;
            }
            let c = reps.len() as u32;
            // Left multiplication by the local group is free, so the orbit
            // has exactly `locals.len()` distinct elements.
            let orbit: Vec<Symp> = locals.iter().map(|&l| sp::then(v, l, k)).collect();
            for w in &orbit {
                entries.get_mut(w).expect("table is complete").coset = c;
            }
            reps.push(*orbit.iter().min().expect("orbit contains v"));
            orbits.push(orbit);
        }
        let mut offsets = vec![0u32];
        let mut adj = Vec::new();
        for orbit in &orbits {
            let mut nb: Vec<u32> = orbit
                .iter()
                .flat_map(|&w| cxs.iter().map(move |&g| sp::apply_gen(w, k, g)))
                .map(|u| entries[&u].coset)
                .collect();
            nb.sort_unstable();
            nb.dedup();
            adj.extend(nb);
            offsets.push(adj.len() as u32);
        }
        CostTable { arity: k, gens, entries, reps, offsets, adj }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of elements covered.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coset representatives: the smallest encoding in each coset.
    pub fn reps(&self) -> &[Symp] {
        &self.reps
    }

    pub fn cost(&self, v: Symp) -> u8 {
        self.entries[&v].cost
    }

    pub fn max_cost(&self) -> u8 {
        self.entries.values().map(|e| e.cost).max().unwrap_or(0)
    }

    pub fn coset(&self, v: Symp) -> usize {
        self.entries[&v].coset as usize
    }

    /// Representative of the left coset of `v` under single-qubit gates.
    pub fn left_reduce(&self, v: Symp) -> Symp {
        self.reps[self.coset(v)]
    }

    pub fn identity_coset(&self) -> usize {
        self.coset(sp::identity(self.arity))
    }

    pub(crate) fn neighbors(&self, coset: usize) -> &[u32] {
        &self.adj[self.offsets[coset] as usize..self.offsets[coset + 1] as usize]
    }

    /// A circuit over H, S, CX with exactly `cost(v)` CX gates whose symplectic
    /// part is `v`.
    pub fn witness(&self, v: Symp) -> Circuit {
        let k = self.arity;
        let mut gates = Vec::new();
        let mut cur = v;
        loop {
            let e = self.entries[&cur];
            if e.pred == NO_PRED {
                break;
            }
            let g = self.gens[e.pred as usize];
            gates.push(g.to_gate());
            cur = sp::apply_gen(cur, k, g);
        }
        gates.reverse();
        Circuit::from_gates_unchecked(k, gates)
    }

    pub(crate) fn raw_entries(&self) -> impl Iterator<Item = (Symp, u8, u8)> + '_ {
        self.entries.iter().map(|(&v, e)| (v, e.cost, e.pred))
    }

    /// Rebuilds a table from serialized `(element, cost, predecessor)` triples.
    pub(crate) fn from_raw(arity: usize, raw: Vec<(Symp, u8, u8)>) -> Result<Self> {
        let gens = sp::generators(arity);
        let expected = group_order(arity);
        if raw.len() != expected {
            return Err(Error::Cache(format!("expected {expected} entries, found {}", raw.len())));
        }
        let mut entries: FxHashMap<Symp, Entry> = FxHashMap::default();
        for &(v, cost, pred) in &raw {
            if pred != NO_PRED && pred as usize >= gens.len() {
                return Err(Error::Cache("predecessor gate out of range".into()));
            }
            entries.insert(v, Entry { cost, pred, coset: 0 });
        }
        if entries.len() != expected {
            return Err(Error::Cache("duplicate entries".into()));
        }
        let order = raw.iter().map(|r| r.0).collect();
        Ok(Self::with_entries(arity, gens, entries, order))
    }
}

/// `|Sp(2k, 2)|`.
pub fn group_order(k: usize) -> usize {
    let mut order = 1usize << (k * k);
    for j in 1..=k {
        order *= (1usize << (2 * j)) - 1;
    }
    order
}

/// Every element of the local subgroup (`6^k` of them).
fn local_group(k: usize, gens: &[SympGen]) -> Vec<Symp> {
    let mut seen = vec![sp::identity(k)];
    let mut i = 0;
    while i < seen.len() {
        let w = seen[i];
        for &g in gens.iter().filter(|g| g.is_local()) {
            let u = sp::apply_gen(w, k, g);
            if !seen.contains(&u) {
                seen.push(u);
            }
        }
        i += 1;
    }
    seen
}
