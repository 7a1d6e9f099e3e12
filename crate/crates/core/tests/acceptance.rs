//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Built with `harness = false`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cliffopt::bench::{evolution_period, make_graph, optimal_oracle, run_row, BenchConfig, Family};
use cliffopt::peephole::dp::objective;
use cliffopt::peephole::symplectic::{self as sp, Symp};
use cliffopt::peephole::{dp_optimize, project_onto_subset, shared_table, CostTable, SymbolicCircuit};
use cliffopt::pipeline::{optimize_circuit, OptimizeConfig};
use cliffopt::random::{random_circuit, random_clifford_with};
use cliffopt::synth::{disentangler, greedy_bidirectional, greedy_unidirectional};
use cliffopt::templates::library::validate_templates;
use cliffopt::templates::builtin_templates;
use cliffopt::{tableaus_equal, CliffordTableau, Gate, PauliOperator};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn templates() -> Outcome {
    let start = Instant::now();
    let ts = builtin_templates();
    let all_identity =
        ts.iter().all(|t| CliffordTableau::from_circuit(&t.to_circuit()).unwrap().is_identity());
    let rejects_bad = validate_templates(&[('z', 2, vec![Gate::CX(0, 1), Gate::H(0)])]).is_err();
    let took = start.elapsed();
    check(
        ts.len() == 8 && all_identity && rejects_bad && took < Duration::from_secs(1),
        format!("{} templates, all identity: {all_identity}, bad template rejected: {rejects_bad}, {took:.2?}", ts.len()),
    )
}

fn fuzz_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cfg = OptimizeConfig { time_limit: Some(Duration::from_millis(100)), ..Default::default() };
    let start = Instant::now();
    let mut bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let len = rng.gen_range(0..=200);
        let c = random_circuit(n, len, &mut rng);
        let out = optimize_circuit(&c, &cfg).map_err(|e| e.to_string())?.best;
        let same = tableaus_equal(
            &CliffordTableau::from_circuit(&c).unwrap(),
            &CliffordTableau::from_circuit(&out).unwrap(),
        )
        .unwrap();
        if !same || out.two_qubit_count() > c.two_qubit_count() {
            bad += 1;
        }
    }
    check(bad == 0, format!("1000 circuits, {bad} failures, {:.1?}", start.elapsed()))
}

fn coset_counts() -> Outcome {
    let t2 = CostTable::build(2).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let t3 = CostTable::build(3).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let (r2, r3) = (t2.reps().len(), t3.reps().len());
    check(
        r2 == 20 && r3 == 6720 && took < Duration::from_secs(600),
        format!("arity 2: {r2}, arity 3: {r3} representatives; arity-3 build {took:.1?}"),
    )
}

fn projection(k: usize, groups: usize, rng: &mut ChaCha8Rng) -> SymbolicCircuit {
    let subset: Vec<usize> = (0..k).collect();
    loop {
        let n = rng.gen_range(k + 1..k + 4);
        let len = rng.gen_range(4..32);
        if let Ok(s) = project_onto_subset(&random_circuit(n, len, rng), &subset) {
            if s.num_groups() == groups {
                return s;
            }
        }
    }
}

fn brute_force_pairs(s: &SymbolicCircuit, table: &CostTable) -> usize {
    let reps = table.reps();
    let k = s.num_groups();
    let mut idx = vec![0usize; k];
    let mut best = usize::MAX;
    loop {
        let us: Vec<Symp> = idx.iter().map(|&i| reps[i]).collect();
        best = best.min(objective(s, table, &us));
        let Some(j) = (0..k).find(|&j| idx[j] + 1 < reps.len()) else { return best };
        idx[j] += 1;
        idx[..j].fill(0);
    }
}

/// Exhaustive over all pairs of representatives, skipping a pair only when
/// the two terms that depend on a single choice already reach the best value.
fn brute_force_two_groups(s: &SymbolicCircuit, table: &CostTable) -> usize {
    let k = table.arity();
    let r = sp::from_tableau(&s.remainder);
    let w = |u: Symp, p: &PauliOperator| sp::weight(sp::image(u, k, sp::pauli_bits(p)), k) as usize;
    let mut first: Vec<(usize, Symp)> = table
        .reps()
        .iter()
        .map(|&u| (table.cost(sp::then(r, u, k)) as usize + w(u, &s.groups[0].pauli), u))
        .collect();
    let mut second: Vec<(usize, Symp)> = table
        .reps()
        .iter()
        .map(|&u| (w(u, &s.groups[1].pauli) + table.cost(sp::inverse(u, k)) as usize, u))
        .collect();
    first.sort_unstable();
    second.sort_unstable();
    let mut best = usize::MAX;
    for &(a, u1) in &first {
        if a + second[0].0 >= best {
            break;
        }
        let inv = sp::inverse(u1, k);
        for &(b, u2) in &second {
            if a + b >= best {
                break;
            }
            best = best.min(a + b + table.cost(sp::then(inv, u2, k)) as usize);
        }
    }
    best
}

fn dp_optimality() -> Outcome {
    let t2 = shared_table(2).map_err(|e| e.to_string())?;
    let t3 = shared_table(3).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let start = Instant::now();
    let mut bad2 = 0;
    for i in 0..500 {
        let s = projection(2, i % 4, &mut rng);
        if dp_optimize(&s, t2).unwrap().cost != brute_force_pairs(&s, t2) {
            bad2 += 1;
        }
    }
    let mut bad3 = 0;
    for i in 0..50 {
        let groups = i % 3;
        let s = projection(3, groups, &mut rng);
        let dp = dp_optimize(&s, t3).unwrap().cost;
        let brute = match groups {
            0 => objective(&s, t3, &[]),
            1 => t3.reps().iter().map(|&u| objective(&s, t3, &[u])).min().unwrap(),
            _ => brute_force_two_groups(&s, t3),
        };
        if dp != brute {
            bad3 += 1;
        }
    }
    check(
        bad2 == 0 && bad3 == 0,
        format!("arity 2: {bad2}/500 mismatches, arity 3: {bad3}/50 mismatches, {:.1?}", start.elapsed()),
    )
}

fn optimal_recovery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cfg = OptimizeConfig { subset_sizes: vec![2, 3], ..Default::default() };
    let mut hits = 0;
    for _ in 0..200 {
        let t = random_clifford_with(3, &mut rng);
        let best = optimize_circuit(&greedy_bidirectional(&t, None), &cfg).unwrap().best;
        assert_eq!(CliffordTableau::from_circuit(&best).unwrap(), t);
        if best.two_qubit_count() == optimal_oracle(&t).unwrap() {
            hits += 1;
        }
    }
    check(hits >= 190, format!("{hits}/200 optimal"))
}

fn greedy_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [4usize, 8, 16, 32] {
        let bound = 3 * n * n / 4 + 4 * n;
        let worst = (0..1000)
            .map(|_| greedy_unidirectional(&random_clifford_with(n, &mut rng), None).two_qubit_count())
            .max()
            .unwrap();
        ok &= worst <= bound;
        parts.push(format!("n={n}: max CX {worst} <= {bound}"));
    }
    check(ok, parts.join(", "))
}

fn periods() -> Outcome {
    let expected = [
        (Family::Path, 5, 12),
        (Family::Cycle, 5, 10),
        (Family::Square, 4, 4),
        (Family::Triangular, 3, 6),
        (Family::Hexagonal, 6, 6),
        (Family::HeavyHex, 12, 12),
    ];
    let mut parts = Vec::new();
    let mut ok = true;
    for (f, n, want) in expected {
        let got = evolution_period(&make_graph(f, n).unwrap(), 1000).map_err(|e| e.to_string())?;
        ok &= got == want;
        parts.push(format!("{f}-{n}: {got}"));
    }
    check(ok, parts.join(", "))
}

fn bench_rows() -> Outcome {
    let cfg = BenchConfig {
        optimize: OptimizeConfig { restarts: 4, time_limit: Some(Duration::from_secs(600)), ..Default::default() },
        ..Default::default()
    };
    // (family, n, exact C_orig if required, bound on C_opt)
    let rows = [
        (Family::Path, 5, Some(26.0), 9.0),
        (Family::Cycle, 5, Some(27.5), 9.5),
        (Family::Triangular, 3, None, 3.0),
        (Family::Square, 4, None, 4.5),
    ];
    let mut parts = Vec::new();
    let mut ok = true;
    for (f, n, orig, bound) in rows {
        let row = run_row(f, n, &cfg).map_err(|e| e.to_string())?;
        let monotone = row.instances.iter().all(|i| i.opt <= i.greedy);
        ok &= orig.is_none_or(|o| row.c_orig == o) && row.c_opt <= bound && monotone;
        parts.push(format!("{f}-{n}: C_orig {:.2}, C_opt {:.2} (<= {bound})", row.c_orig, row.c_opt));
        if !monotone {
            parts.push(format!("{f}-{n}: C_opt > C_greedy on some instance"));
        }
    }
    check(ok, parts.join(", "))
}

fn disentangler_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let start = Instant::now();
    let mut bad = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=32);
        // Rows 0 and n of a random tableau form a random anticommuting pair.
        let t = random_clifford_with(n, &mut rng);
        let (o, o2) = (t.x_image(0), t.z_image(0));
        let l = disentangler(o, o2).unwrap().circuit;
        if l.conjugate_pauli(o).unwrap() != PauliOperator::x_on(n, 0)
            || l.conjugate_pauli(o2).unwrap() != PauliOperator::z_on(n, 0)
        {
            bad += 1;
        }
    }
    let took = start.elapsed();
    check(bad == 0 && took < Duration::from_secs(60), format!("10000 pairs, {bad} failures, {took:.1?}"))
}

fn bidirectional_dominance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut uni, mut bi) = (0usize, 0usize);
    for _ in 0..100 {
        let t = random_clifford_with(8, &mut rng);
        uni += greedy_unidirectional(&t, None).two_qubit_count();
        bi += greedy_bidirectional(&t, None).two_qubit_count();
    }
    let (uni, bi) = (uni as f64 / 100.0, bi as f64 / 100.0);
    check(bi <= uni, format!("mean CX (SWAP = 3) bidirectional {bi:.2}, unidirectional {uni:.2}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("template validity", templates),
        ("equivalence preservation", fuzz_equivalence),
        ("coset counts", coset_counts),
        ("DP optimality", dp_optimality),
        ("n=3 optimal recovery", optimal_recovery),
        ("greedy bound", greedy_bound),
        ("periods", periods),
        ("benchmark averages", bench_rows),
        ("disentangler exactness", disentangler_exactness),
        ("bidirectional dominance", bidirectional_dominance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
