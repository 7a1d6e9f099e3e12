//! Template matching with commutation-aware gathering.
//!
//! A template `G_0 ... G_{m-1}` equal to the identity yields rewrite rules:
//! any cyclic window `G_i ... G_{i+p-1}` may be replaced by the inverse of the
//! rest, `G_{i-1}^† ... G_{i+p}^†`. Reading the template backwards gives the
//! rules of the other direction. Matched gates need not be adjacent: the gates
//! in between are moved out of the way to the left or right when the
//! commutation rules of [`Gate::commutes_with`] allow it.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::circuit::Circuit;
use crate::gate::Gate;
use crate::templates::library::{builtin_templates, Template};

/// Maximum number of gates scanned past the anchor while gathering a match.
pub const MATCH_WINDOW: usize = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Minimize two-qubit gates, then other gates. SWAP and Pauli gates are
    /// free since later stages factor them out.
    TwoQubit,
    /// Only accept rewrites that keep the two-qubit count and remove
    /// single-qubit gates.
    SingleQubit,
}

impl Metric {
    fn cost(self, gates: &[Gate]) -> (usize, usize) {
        let mut two = 0;
        let mut one = 0;
        for g in gates {
            match (self, g) {
                (_, Gate::CX(..) | Gate::CZ(..)) => two += 1,
                (Metric::TwoQubit, Gate::Swap(..)) => {}
                (Metric::SingleQubit, Gate::Swap(..)) => two += 3,
                (Metric::TwoQubit, g) if g.is_pauli() => {}
                _ => one += 1,
            }
        }
        (two, one)
    }

    fn accepts(self, before: &[Gate], after: &[Gate]) -> bool {
        let (b2, b1) = self.cost(before);
        let (a2, a1) = self.cost(after);
        match self {
            Metric::TwoQubit => (a2, a1) < (b2, b1),
            Metric::SingleQubit => {
                a2 == b2 && a1 < b1 && !after.iter().any(|g| matches!(g, Gate::Swap(..)))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Rule {
    wires: usize,
    pattern: Vec<Gate>,
    replacement: Vec<Gate>,
}

/// Precompiled rewrite rules for one template list and metric.
#[derive(Clone, Debug)]
pub struct RuleSet {
    metric: Metric,
    /// Rules grouped by the kind of their first pattern gate.
    by_kind: Vec<Vec<Rule>>,
}

fn kind(g: &Gate) -> usize {
    match g {
        Gate::H(_) => 0,
        Gate::S(_) => 1,
        Gate::Sdg(_) => 2,
        Gate::X(_) => 3,
        Gate::Y(_) => 4,
        Gate::Z(_) => 5,
        Gate::CX(..) => 6,
        Gate::CZ(..) => 7,
        Gate::Swap(..) => 8,
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

impl RuleSet {
    pub fn new(templates: &[Template], metric: Metric) -> Self {
        let mut seen = HashSet::new();
        let mut rules = Vec::new();
        for t in templates.iter().flat_map(|t| [t.clone(), t.inverse()]) {
            let m = t.len();
            for sigma in permutations(t.wires) {
                let gates: Vec<Gate> = t.gates.iter().map(|g| g.relabel(|w| sigma[w])).collect();
                for i in 0..m {
                    for p in m.div_ceil(2)..=m {
                        let pattern: Vec<Gate> = (0..p).map(|k| gates[(i + k) % m]).collect();
                        let replacement: Vec<Gate> =
                            (1..=m - p).map(|k| gates[(i + m - k) % m].inverse()).collect();
                        if !metric.accepts(&pattern, &replacement) {
                            continue;
                        }
                        let rule = Rule { wires: t.wires, pattern, replacement };
                        if seen.insert(rule.clone()) {
                            rules.push(rule);
                        }
                    }
                }
            }
        }
        // Largest savings first.
        rules.sort_by_key(|r| {
            let (b2, b1) = metric.cost(&r.pattern);
            let (a2, a1) = metric.cost(&r.replacement);
            (std::cmp::Reverse(b2 - a2.min(b2)), std::cmp::Reverse(b1 as isize - a1 as isize))
        });
        let mut by_kind = vec![Vec::new(); 9];
        for r in rules {
            by_kind[kind(&r.pattern[0])].push(r);
        }
        RuleSet { metric, by_kind }
    }

    /// Rules from the eight built-in templates, built once per metric.
    pub fn builtin(metric: Metric) -> &'static RuleSet {
        static TWO: OnceLock<RuleSet> = OnceLock::new();
        static ONE: OnceLock<RuleSet> = OnceLock::new();
        let cell = match metric {
            Metric::TwoQubit => &TWO,
            Metric::SingleQubit => &ONE,
        };
        cell.get_or_init(|| RuleSet::new(builtin_templates(), metric))
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn len(&self) -> usize {
        self.by_kind.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Applies rules until none matches.
    pub fn apply(&self, c: &Circuit) -> Circuit {
        let n = c.num_qubits();
        let mut gates = c.gates().to_vec();
        let mut scratch = Scratch::new(n);
        loop {
            let mut changed = false;
            let mut j = 0;
            while j < gates.len() {
                let mut hit = None;
                for rule in &self.by_kind[kind(&gates[j])] {
                    if let Some(m) = try_match(&gates, j, rule, &mut scratch) {
                        hit = Some((rule, m));
                        break;
                    }
                }
                match hit {
                    Some((rule, m)) => {
                        gates = splice(&gates, j, rule, &m);
                        changed = true;
                    }
                    None => j += 1,
                }
            }
            if !changed {
                break;
            }
        }
        Circuit::from_gates_unchecked(n, gates)
    }
}

struct Match {
    binding: [usize; 3],
    left: Vec<usize>,
    right: Vec<usize>,
    end: usize,
}

/// Per-qubit marks reused across match attempts.
struct Scratch {
    touched: Vec<u32>,
    epoch: u32,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { touched: vec![0; n], epoch: 0 }
    }

    fn reset(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.touched.fill(0);
            self.epoch = 1;
        }
    }

    fn mark(&mut self, g: &Gate) {
        let (a, b) = g.qubits();
        self.touched[a] = self.epoch;
        if let Some(b) = b {
            self.touched[b] = self.epoch;
        }
    }

    fn hits(&self, g: &Gate) -> bool {
        let (a, b) = g.qubits();
        self.touched[a] == self.epoch || b.is_some_and(|b| self.touched[b] == self.epoch)
    }
}

const UNBOUND: usize = usize::MAX;

/// Extends `binding` so that pattern gate `pg` becomes circuit gate `g`.
fn unify(pg: &Gate, g: &Gate, binding: &mut [usize; 3]) -> bool {
    if kind(pg) != kind(g) {
        return false;
    }
    let (pa, pb) = pg.qubits();
    let (ga, gb) = g.qubits();
    let attempt = |binding: &mut [usize; 3], pairs: &[(usize, usize)]| -> bool {
        let mut trial = *binding;
        for &(w, q) in pairs {
            if trial[w] == UNBOUND {
                if trial.contains(&q) {
                    return false;
                }
                trial[w] = q;
            } else if trial[w] != q {
                return false;
            }
        }
        *binding = trial;
        true
    };
    match (pb, gb) {
        (None, None) => attempt(binding, &[(pa, ga)]),
        (Some(pb), Some(gb)) => {
            attempt(binding, &[(pa, ga), (pb, gb)])
                || (!matches!(pg, Gate::CX(..)) && attempt(binding, &[(pa, gb), (pb, ga)]))
        }
        _ => false,
    }
}

fn try_match(gates: &[Gate], j: usize, rule: &Rule, scratch: &mut Scratch) -> Option<Match> {
    let mut binding = [UNBOUND; 3];
    if !unify(&rule.pattern[0], &gates[j], &mut binding) {
        return None;
    }
    let mut matched = vec![j];
    let mut left = Vec::new();
    let mut right: Vec<usize> = Vec::new();
    scratch.reset();
    scratch.mark(&gates[j]);
    let mut next = 1;
    let mut k = j + 1;
    while next < rule.pattern.len() && k < gates.len() && k - j <= MATCH_WINDOW {
        let g = &gates[k];
        if !scratch.hits(g) {
            left.push(k);
            k += 1;
            continue;
        }
        let mut trial = binding;
        if unify(&rule.pattern[next], g, &mut trial) && right.iter().all(|&r| gates[r].commutes_with(g)) {
            binding = trial;
            matched.push(k);
            scratch.mark(g);
            next += 1;
        } else if matched.iter().chain(&right).all(|&i| gates[i].commutes_with(g)) {
            left.push(k);
        } else {
            // Every later matched gate must commute with a right-mover; give
            // up early when a fully bound pattern gate cannot.
            let doomed = rule.pattern[next..].iter().any(|pg| {
                let (a, b) = pg.qubits();
                let bound = binding[a] != UNBOUND && b.is_none_or(|b| binding[b] != UNBOUND);
                bound && !pg.relabel(|w| binding[w]).commutes_with(g)
            });
            if doomed {
                return None;
            }
            right.push(k);
            scratch.mark(g);
        }
        k += 1;
    }
    if next < rule.pattern.len() || binding[..rule.wires].contains(&UNBOUND) {
        return None;
    }
    let end = *matched.last().expect("nonempty");
    left.retain(|&i| i < end);
    right.retain(|&i| i < end);
    let mut b = [0; 3];
    b[..rule.wires].copy_from_slice(&binding[..rule.wires]);
    Some(Match { binding: b, left, right, end })
}

fn splice(gates: &[Gate], j: usize, rule: &Rule, m: &Match) -> Vec<Gate> {
    let mut out = Vec::with_capacity(gates.len());
    out.extend_from_slice(&gates[..j]);
    out.extend(m.left.iter().map(|&i| gates[i]));
    out.extend(rule.replacement.iter().map(|g| g.relabel(|w| m.binding[w])));
    out.extend(m.right.iter().map(|&i| gates[i]));
    out.extend_from_slice(&gates[m.end + 1..]);
    out
}

/// Applies the templates to `c` until no rewrite improves `metric`.
pub fn match_and_apply(c: &Circuit, templates: &[Template], metric: Metric) -> Circuit {
    RuleSet::new(templates, metric).apply(c)
}

/// Collapses single-qubit runs, then applies single-qubit-saving rewrites.
pub fn reduce_single_qubit(c: &Circuit) -> Circuit {
    let mut cur = crate::templates::single::collapse_runs(c);
    loop {
        let next = crate::templates::single::collapse_runs(&RuleSet::builtin(Metric::SingleQubit).apply(&cur));
        if next.len() >= cur.len() {
            return cur;
        }
        cur = next;
    }
}
