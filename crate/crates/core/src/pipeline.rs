//! Full optimization flow: stage partition, template matching with SWAP
//! merging to a fixpoint, symbolic peephole sweeps, then single-qubit cleanup.
//! [`compile_unitary`] adds greedy synthesis and best-of-k restarts.

use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::peephole::{peephole_pass_with_stats, PeepholeStats};
use crate::synth::greedy_bidirectional;
use crate::tableau::CliffordTableau;
use crate::templates::{
    merge_swaps, partition_stages, reduce_single_qubit, to_cz_form, Metric, RuleSet, StagePartition,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizeConfig {
    /// Budget for one optimization run (per restart). Checked between
    /// template rounds and between peephole subsets; `None` runs to a fixpoint.
    pub time_limit: Option<Duration>,
    pub restarts: usize,
    pub seed: u64,
    /// Peephole subset sizes, swept in this order.
    pub subset_sizes: Vec<usize>,
    pub enable_templates: bool,
    pub enable_peephole: bool,
}

impl Default for OptimizeConfig {
    fn default() -> Self {
        OptimizeConfig {
            time_limit: None,
            restarts: 1,
            seed: 0,
            subset_sizes: vec![2, 3],
            enable_templates: true,
            enable_peephole: true,
        }
    }
}

impl OptimizeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.time_limit == Some(Duration::ZERO) {
            return Err(Error::Config("time limit must be positive".into()));
        }
        if self.restarts == 0 {
            return Err(Error::Config("at least one restart is required".into()));
        }
        if let Some(&s) = self.subset_sizes.iter().find(|&&s| !(2..=3).contains(&s)) {
            return Err(Error::Config(format!("subset size {s} is not 2 or 3")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizeReport {
    pub best: Circuit,
    /// Final two-qubit count of each restart, in restart order.
    pub restart_counts: Vec<usize>,
    pub wall_time: Duration,
    /// Improving template/SWAP rounds, summed over restarts.
    pub template_rounds: usize,
    /// Peephole statistics, summed over restarts.
    pub peephole: PeepholeStats,
}

fn reassemble(p: &StagePartition) -> Circuit {
    let mut gates = merge_swaps(p).into_gates();
    gates.extend(p.pauli.to_gates());
    Circuit::from_gates_unchecked(p.num_qubits(), gates)
}

/// `c` without SWAP gates: stage partition, then SWAP merging into the
/// compute stage, then the Pauli layer.
pub fn merge_swap_stage(c: &Circuit) -> Circuit {
    reassemble(&partition_stages(c))
}

/// Partition, templates on the CZ form of the compute stage, SWAP merging,
/// Pauli layer back at the end.
fn template_round(c: &Circuit) -> Circuit {
    let mut p = partition_stages(c);
    p.compute = RuleSet::builtin(Metric::TwoQubit).apply(&to_cz_form(&p.compute));
    reassemble(&p)
}

fn templates_to_fixpoint(c: &Circuit, deadline: Option<Instant>) -> (Circuit, usize) {
    // Templates can move gates away from where a SWAP would have merged, so
    // the plain merge competes with the first round.
    let mut cur = [template_round(c), merge_swap_stage(c), c.clone()]
        .into_iter()
        .min_by_key(key)
        .expect("three candidates");
    let mut rounds = usize::from(cur.two_qubit_count() < c.two_qubit_count());
    while deadline.is_none_or(|d| Instant::now() < d) {
        let next = template_round(&cur);
        if next.two_qubit_count() >= cur.two_qubit_count() {
            break;
        }
        cur = next;
        rounds += 1;
    }
    (cur, rounds)
}

fn key(c: &Circuit) -> (usize, usize) {
    (c.two_qubit_count(), c.len())
}

fn optimize_with_rng(c: &Circuit, cfg: &OptimizeConfig, rng: &mut ChaCha8Rng) -> Result<OptimizeReport> {
    let start = Instant::now();
    let deadline = cfg.time_limit.map(|t| start + t);
    let mut cur = c.clone();
    let mut rounds = 0;
    if cfg.enable_templates {
        (cur, rounds) = templates_to_fixpoint(&cur, deadline);
    }
    let mut stats = PeepholeStats::default();
    if cfg.enable_peephole && !cfg.subset_sizes.is_empty() && c.num_qubits() >= 2 {
        (cur, stats) = peephole_pass_with_stats(&cur, &cfg.subset_sizes, rng, deadline)?;
    }
    if cfg.enable_templates {
        cur = reduce_single_qubit(&cur);
    }
    if cur.two_qubit_count() > c.two_qubit_count() {
        cur = c.clone();
    }
    Ok(OptimizeReport {
        restart_counts: vec![cur.two_qubit_count()],
        best: cur,
        wall_time: start.elapsed(),
        template_rounds: rounds,
        peephole: stats,
    })
}

/// Random stream for restart `r`; independent of scheduling.
fn restart_rng(seed: u64, r: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(r as u64);
    rng
}

/// Optimizes one circuit; the result is equivalent to `c` and has at most as
/// many two-qubit gates. `cfg.restarts` is ignored.
pub fn optimize_circuit(c: &Circuit, cfg: &OptimizeConfig) -> Result<OptimizeReport> {
    cfg.validate()?;
    optimize_with_rng(c, cfg, &mut restart_rng(cfg.seed, 0))
}

/// Synthesizes `t` `cfg.restarts` times (deterministic greedy first, then
/// randomized greedy), optimizes each and keeps the best.
pub fn compile_unitary(t: &CliffordTableau, cfg: &OptimizeConfig) -> Result<OptimizeReport> {
    cfg.validate()?;
    let start = Instant::now();
    let runs: Vec<OptimizeReport> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = restart_rng(cfg.seed, r);
            let synth_seed = (r > 0).then(|| rng.next_u64());
            let c = greedy_bidirectional(t, synth_seed);
            optimize_with_rng(&c, cfg, &mut rng)
        })
        .collect::<Result<_>>()?;
    let mut report = OptimizeReport {
        best: Circuit::new(t.num_qubits()),
        restart_counts: Vec::with_capacity(runs.len()),
        wall_time: Duration::ZERO,
        template_rounds: 0,
        peephole: PeepholeStats::default(),
    };
    let mut best: Option<Circuit> = None;
    for run in runs {
        report.restart_counts.push(run.best.two_qubit_count());
        report.template_rounds += run.template_rounds;
        report.peephole.sweeps += run.peephole.sweeps;
        report.peephole.subsets_tried += run.peephole.subsets_tried;
        report.peephole.improvements += run.peephole.improvements;
        report.peephole.timed_out |= run.peephole.timed_out;
        if best.as_ref().is_none_or(|b| key(&run.best) < key(b)) {
            best = Some(run.best);
        }
    }
    report.best = best.expect("at least one restart");
    report.wall_time = start.elapsed();
    Ok(report)
}
