//! Command-line front end: synthesis, optimization, benchmarks, equivalence
//! checks and cost tables.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cliffopt::bench::{run_bench, write_csv, BenchConfig, Family};
use cliffopt::peephole::{set_cache_dir, shared_table};
use cliffopt::pipeline::{compile_unitary, optimize_circuit, OptimizeConfig};
use cliffopt::synth::{ag_canonical, greedy_bidirectional, greedy_unidirectional};
use cliffopt::{Circuit, CliffordTableau, Error, PauliOperator};

#[derive(Parser)]
#[command(name = "cliffopt", version, about = "Clifford circuit synthesis and CNOT count optimization")]
struct Cli {
    /// Directory for cached cost tables (also read from CLIFFOPT_TABLE_CACHE).
    #[arg(long, global = true, value_name = "DIR")]
    table_cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a circuit for a tableau (or for the unitary of a circuit).
    Synth {
        #[command(flatten)]
        io: InOut,
        #[arg(long, value_enum, default_value_t = Method::Full)]
        method: Method,
        #[command(flatten)]
        opt: OptArgs,
    },
    /// Optimize a circuit.
    Opt {
        #[command(flatten)]
        io: InOut,
        #[command(flatten)]
        opt: OptArgs,
    },
    /// Run Hamiltonian evolution benchmarks and print a CSV table.
    Bench {
        /// Rows as FAMILY:N, e.g. path:5 cycle:5 heavy_hex:12.
        #[arg(required = true, value_name = "FAMILY:N")]
        rows: Vec<String>,
        /// Largest number of layers per row.
        #[arg(long, default_value_t = 300)]
        t_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[command(flatten)]
        opt: OptArgs,
    },
    /// Check whether two circuits implement the same unitary.
    Check { a: PathBuf, b: PathBuf },
    /// Build (or load) a cost table and print its statistics.
    Table {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=3))]
        arity: u8,
    },
}

#[derive(Args)]
struct InOut {
    /// Input file; standard input if omitted.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file; standard output if omitted.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OptArgs {
    /// Seconds per optimization run.
    #[arg(long, value_name = "SEC")]
    time_limit: Option<f64>,
    #[arg(long, default_value_t = 1)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Peephole subset sizes.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    subsets: Vec<usize>,
}

impl OptArgs {
    fn config(&self) -> Result<OptimizeConfig, Error> {
        let time_limit = match self.time_limit {
            Some(s) if !(s > 0.0 && s.is_finite()) => {
                return Err(Error::Config("--time-limit must be a positive number of seconds".into()))
            }
            s => s.map(Duration::from_secs_f64),
        };
        let cfg = OptimizeConfig {
            time_limit,
            restarts: self.restarts,
            seed: self.seed,
            subset_sizes: self.subsets.clone(),
            ..Default::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Greedy synthesis followed by the full optimizer, best of the restarts.
    Full,
    Greedy,
    Unidirectional,
    /// Aaronson-Gottesman canonical form.
    Ag,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(m) => Failure::Verification(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

/// A circuit file (starting with `qubits N`) or a tableau given as `2n` Pauli
/// strings: the images of `X_0..X_{n-1}`, then of `Z_0..Z_{n-1}`.
fn parse_target(text: &str) -> Result<CliffordTableau, Error> {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    if lines.first().is_some_and(|l| l.starts_with("qubits")) {
        return CliffordTableau::from_circuit(&text.parse()?);
    }
    let rows = lines.iter().map(|l| l.parse::<PauliOperator>()).collect::<Result<Vec<_>, _>>()?;
    CliffordTableau::from_rows(rows)
}

fn verify(c: &Circuit, target: &CliffordTableau) -> Result<(), Failure> {
    if CliffordTableau::from_circuit(c)? != *target {
        return Err(Failure::Verification("output circuit does not match the input unitary".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(dir) = cli.table_cache {
        set_cache_dir(Some(dir));
    }
    match cli.command {
        Command::Synth { io, method, opt } => {
            let target = parse_target(&read_input(&io.input)?)?;
            let c = match method {
                Method::Full => compile_unitary(&target, &opt.config()?)?.best,
                Method::Greedy => greedy_bidirectional(&target, None),
                Method::Unidirectional => greedy_unidirectional(&target, None),
                Method::Ag => ag_canonical(&target),
            };
            verify(&c, &target)?;
            eprintln!("two-qubit gates: {}", c.two_qubit_count());
            write_output(&io.out, &c.to_text())
        }
        Command::Opt { io, opt } => {
            let c: Circuit = read_input(&io.input)?.parse()?;
            let report = optimize_circuit(&c, &opt.config()?)?;
            verify(&report.best, &CliffordTableau::from_circuit(&c)?)?;
            eprintln!(
                "two-qubit gates: {} -> {} in {:.2?}",
                c.two_qubit_count(),
                report.best.two_qubit_count(),
                report.wall_time
            );
            write_output(&io.out, &report.best.to_text())
        }
        Command::Bench { rows, t_cap, format: Format::Csv, out, opt } => {
            let mut specs = Vec::new();
            for r in &rows {
                let (f, n) = r.split_once(':').ok_or_else(|| Failure::Usage(format!("row '{r}' is not FAMILY:N")))?;
                let n = n.parse().map_err(|_| Failure::Usage(format!("bad size in row '{r}'")))?;
                specs.push((f.parse::<Family>()?, n));
            }
            let cfg = BenchConfig { optimize: opt.config()?, t_cap, ..Default::default() };
            let mut done = Vec::new();
            let mut failure = None;
            for ((f, n), res) in specs.iter().zip(run_bench(&specs, &cfg)) {
                match res {
                    Ok(row) => done.push(row),
                    Err(e) => {
                        eprintln!("{f}:{n}: {e}");
                        let fail = Failure::from(e);
                        if failure.is_none() || matches!(fail, Failure::Verification(_)) {
                            failure = Some(fail);
                        }
                    }
                }
            }
            let mut buf = Vec::new();
            write_csv(&done, &mut buf)?;
            write_output(&out, &String::from_utf8(buf).expect("CSV is UTF-8"))?;
            failure.map_or(Ok(()), Err)
        }
        Command::Check { a, b } => {
            let load = |p: &PathBuf| -> Result<Circuit, Failure> { Ok(read_input(&Some(p.clone()))?.parse()?) };
            let (ca, cb) = (load(&a)?, load(&b)?);
            if cliffopt::circuits_equivalent(&ca, &cb)? {
                println!("equivalent");
                Ok(())
            } else {
                println!("not equivalent");
                Err(Failure::Verification("circuits differ".into()))
            }
        }
        Command::Table { arity } => {
            let t = shared_table(arity as usize)?;
            println!("arity {arity}: {} elements, {} cosets, max cost {}", t.len(), t.reps().len(), t.max_cost());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(2)
        }
    }
}
