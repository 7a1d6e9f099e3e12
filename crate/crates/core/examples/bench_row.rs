//! Hamiltonian evolution benchmark rows, written as CSV.
//!
//! Row arguments are FAMILY:N, e.g. `path:5 triangular:3`.

use cliffopt::bench::{run_bench, write_csv, BenchConfig, Family};
use cliffopt::pipeline::OptimizeConfig;

fn main() {
    let mut rows: Vec<(Family, usize)> = std::env::args()
        .skip(1)
        .map(|a| {
            let (f, n) = a.split_once(':').expect("FAMILY:N");
            (f.parse().expect("family"), n.parse().expect("size"))
        })
        .collect();
    if rows.is_empty() {
        rows = vec![(Family::Path, 5), (Family::Triangular, 3)];
    }
    let cfg = BenchConfig { optimize: OptimizeConfig { restarts: 2, ..Default::default() }, ..Default::default() };
    let done: Vec<_> = run_bench(&rows, &cfg).into_iter().filter_map(|r| r.map_err(|e| eprintln!("{e}")).ok()).collect();
    write_csv(&done, std::io::stdout()).unwrap();
}
