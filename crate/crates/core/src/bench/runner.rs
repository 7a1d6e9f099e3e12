//! Benchmark rows: every layer count `1..=t_max` of a graph's evolution
//! circuit, compiled by each method and averaged.

use std::io::Write;

use rayon::prelude::*;

use crate::bench::graph::{make_graph, Family, InteractionGraph};
use crate::bench::hamiltonian::{evolution_period, hamiltonian_circuit, DEFAULT_PERIOD_CAP};
use crate::error::{Error, Result};
use crate::pipeline::{compile_unitary, merge_swap_stage, OptimizeConfig};
use crate::synth::{ag_canonical, greedy_bidirectional};
use crate::tableau::CliffordTableau;

pub const CSV_HEADER: [&str; 8] = ["family", "n_q", "t_max", "C_orig", "C_AG", "C_greedy", "C_opt", "r"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub optimize: OptimizeConfig,
    /// Largest layer count benchmarked.
    pub t_cap: usize,
    pub period_cap: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { optimize: OptimizeConfig::default(), t_cap: 300, period_cap: DEFAULT_PERIOD_CAP }
    }
}

/// Two-qubit counts for one layer count.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub t: usize,
    pub orig: usize,
    pub ag: usize,
    pub greedy: usize,
    pub opt: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub n_q: usize,
    pub t_max: usize,
    pub c_orig: f64,
    pub c_ag: f64,
    pub c_greedy: f64,
    pub c_opt: f64,
    /// `(C_AG - C_opt) / C_AG`.
    pub r: f64,
    pub instances: Vec<Instance>,
}

pub fn run_instance(g: &InteractionGraph, t: usize, cfg: &OptimizeConfig) -> Result<Instance> {
    let orig = hamiltonian_circuit(g, t)?;
    let target = CliffordTableau::from_circuit(&orig)?;
    let ag = ag_canonical(&target);
    let greedy = greedy_bidirectional(&target, None);
    let report = compile_unitary(&target, cfg)?;
    for (name, c) in [("A-G", &ag), ("greedy", &greedy), ("optimized", &report.best)] {
        if CliffordTableau::from_circuit(c)? != target {
            return Err(Error::Verification(format!("{name} circuit for {} n={} t={t}", g.family, g.n)));
        }
    }
    // SWAPs left by greedy synthesis are counted as merged into the circuit.
    let greedy_count = greedy.two_qubit_count().min(merge_swap_stage(&greedy).two_qubit_count());
    Ok(Instance {
        t,
        orig: orig.two_qubit_count(),
        ag: ag.two_qubit_count(),
        greedy: greedy_count,
        opt: report.best.two_qubit_count(),
    })
}

pub fn run_row(family: Family, n: usize, cfg: &BenchConfig) -> Result<BenchRow> {
    let g = make_graph(family, n)?;
    let period = evolution_period(&g, cfg.period_cap)?;
    let t_max = (period as usize).min(cfg.t_cap);
    let instances: Vec<Instance> =
        (1..=t_max).into_par_iter().map(|t| run_instance(&g, t, &cfg.optimize)).collect::<Result<_>>()?;
    let mean = |f: fn(&Instance) -> usize| instances.iter().map(f).sum::<usize>() as f64 / t_max as f64;
    let (c_ag, c_opt) = (mean(|i| i.ag), mean(|i| i.opt));
    Ok(BenchRow {
        family,
        n_q: n,
        t_max,
        c_orig: mean(|i| i.orig),
        c_ag,
        c_greedy: mean(|i| i.greedy),
        c_opt,
        r: if c_ag > 0.0 { (c_ag - c_opt) / c_ag } else { 0.0 },
        instances,
    })
}

/// One result per requested row, in request order; a failing row does not
/// stop the others.
pub fn run_bench(rows: &[(Family, usize)], cfg: &BenchConfig) -> Vec<Result<BenchRow>> {
    rows.par_iter().map(|&(f, n)| run_row(f, n, cfg)).collect()
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Config(format!("writing CSV: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            r.family.to_string(),
            r.n_q.to_string(),
            r.t_max.to_string(),
            format!("{:.2}", r.c_orig),
            format!("{:.2}", r.c_ag),
            format!("{:.2}", r.c_greedy),
            format!("{:.2}", r.c_opt),
            format!("{:.4}", r.r),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Config(format!("writing CSV: {e}")))
}
