use std::time::Duration;

use cliffopt::bench::{hamiltonian_circuit, make_graph, optimal_oracle, run_row, write_csv, BenchConfig, Family};
use cliffopt::peephole::{load_table, save_table, CostTable};
use cliffopt::pipeline::{compile_unitary, optimize_circuit, OptimizeConfig};
use cliffopt::random::random_clifford;
use cliffopt::synth::greedy_bidirectional;
use cliffopt::{circuits_equivalent, Circuit, CliffordTableau, Error};

fn parse(s: &str) -> Circuit {
    s.parse().unwrap()
}

#[test]
fn swap_written_as_three_cx_is_recognized() {
    let c = parse("qubits 2\ncx 0 1\ncx 1 0\ncx 0 1\ncx 0 1\ncx 1 0\ncx 0 1");
    let out = optimize_circuit(&c, &OptimizeConfig::default()).unwrap().best;
    assert_eq!(out.two_qubit_count(), 0);
}

#[test]
fn compile_reaches_oracle_on_small_unitaries() {
    let cfg = OptimizeConfig { restarts: 2, ..Default::default() };
    for seed in 0..10 {
        let t = random_clifford(3, seed);
        let report = compile_unitary(&t, &cfg).unwrap();
        assert_eq!(CliffordTableau::from_circuit(&report.best).unwrap(), t);
        assert_eq!(report.restart_counts.len(), 2);
        assert_eq!(report.best.two_qubit_count(), optimal_oracle(&t).unwrap());
    }
}

#[test]
fn restarts_are_deterministic() {
    let t = random_clifford(6, 17);
    let cfg = OptimizeConfig { restarts: 3, seed: 5, ..Default::default() };
    let a = compile_unitary(&t, &cfg).unwrap();
    let b = compile_unitary(&t, &cfg).unwrap();
    assert_eq!(a.best, b.best);
    assert_eq!(a.restart_counts, b.restart_counts);
    let greedy = greedy_bidirectional(&t, None).two_qubit_count();
    assert!(a.best.two_qubit_count() <= greedy);
}

#[test]
fn time_limit_still_returns_equivalent_circuit() {
    let c = hamiltonian_circuit(&make_graph(Family::Square, 9).unwrap(), 3).unwrap();
    let cfg = OptimizeConfig { time_limit: Some(Duration::from_millis(50)), ..Default::default() };
    let out = optimize_circuit(&c, &cfg).unwrap().best;
    assert!(circuits_equivalent(&c, &out).unwrap());
    assert!(out.two_qubit_count() <= c.two_qubit_count());
}

#[test]
fn bad_configs_rejected() {
    let c = parse("qubits 2\ncx 0 1");
    for cfg in [
        OptimizeConfig { restarts: 0, ..Default::default() },
        OptimizeConfig { subset_sizes: vec![4], ..Default::default() },
        OptimizeConfig { time_limit: Some(Duration::ZERO), ..Default::default() },
    ] {
        assert!(matches!(optimize_circuit(&c, &cfg), Err(Error::Config(_))));
    }
}

#[test]
fn cost_table_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("cliffopt-it-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t2.bin");
    let table = CostTable::build(2).unwrap();
    save_table(&table, &path).unwrap();
    let back = load_table(&path, 2).unwrap();
    assert_eq!(back.reps(), table.reps());
    assert!(load_table(&path, 3).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bench_row_counts_and_csv() {
    let cfg = BenchConfig { optimize: OptimizeConfig { subset_sizes: vec![2], ..Default::default() }, ..Default::default() };
    let row = run_row(Family::Path, 3, &cfg).unwrap();
    // |E| (t_max + 1) / 2 CZ gates on average.
    assert_eq!(row.c_orig, 2.0 * (row.t_max as f64 + 1.0) / 2.0);
    for i in &row.instances {
        assert!(i.opt <= i.greedy);
        assert_eq!(i.orig, 2 * i.t);
    }
    let mut buf = Vec::new();
    write_csv(&[row], &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn inadmissible_graphs() {
    assert!(matches!(make_graph(Family::HeavyHex, 13), Err(Error::InadmissibleGraph { .. })));
    assert!(matches!(make_graph(Family::Triangular, 4), Err(Error::InadmissibleGraph { .. })));
}
