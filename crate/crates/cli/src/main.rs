use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use grundy_cli::bench::{self, Manifest};
use grundy_cli::generate::{self, Generated, Reduction};
use grundy_cli::report::{exit, Answer, CertificateFailure};
use grundy_cli::solve::{solve, Algorithm, SolveOptions};
use grundy_core::connected::DEFAULT_BUDGET;
use grundy_core::dimacs::read_dimacs_graph;
use grundy_core::exact::DP_CAP;
use grundy_core::reductions::{read_dimacs_cnf, CnfFormula};
use grundy_core::Variant;

#[derive(Parser)]
#[command(name = "grundy", version, about = "Grundy numbers of graphs: exact solvers, witness searches and gadget generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one problem on a DIMACS graph and print a JSON result.
    Solve {
        #[arg(value_enum)]
        algorithm: SolveAlgorithm,
        /// DIMACS `p edge` file.
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0.01)]
        epsilon: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Node budget of the connected search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Print the certificate with the result.
        #[arg(long)]
        certificate: bool,
        /// Largest graph the subset DP accepts.
        #[arg(long, default_value_t = DP_CAP)]
        dp_cap: usize,
    },
    /// Write a generated instance as DIMACS plus a JSON sidecar.
    Gen {
        #[command(subcommand)]
        generator: Generator,
    },
    /// Run a JSON manifest of instances and algorithms, write CSV.
    Bench {
        #[arg(long)]
        manifest: PathBuf,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveAlgorithm {
    Grundy,
    Weak,
    Connected,
    Xp,
    Local,
    Colorcoding,
}

#[derive(Clone, Copy, ValueEnum)]
enum NaeVariant {
    Weak,
    Proper,
}

#[derive(Args)]
struct Output {
    /// DIMACS destination.
    #[arg(short, long)]
    out: PathBuf,
    /// Sidecar destination; defaults to the DIMACS path with a `.json` extension.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Args)]
struct FormulaInput {
    /// DIMACS CNF file.
    #[arg(long)]
    cnf: PathBuf,
    /// Attach a satisfiable-side certificate found by brute force.
    #[arg(long)]
    witness: bool,
}

#[derive(Subcommand)]
enum Generator {
    /// Binomial tree T_k.
    Binomial {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// T_s with m dominant T_l subtrees removed.
    Pruned {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Monotone NAE-3-SAT gadget.
    Nae {
        #[command(flatten)]
        input: FormulaInput,
        #[arg(long, value_enum, default_value = "weak")]
        variant: NaeVariant,
        #[command(flatten)]
        output: Output,
    },
    /// SAT gadget with a small feedback vertex set.
    Fvs {
        #[command(flatten)]
        input: FormulaInput,
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        output: Output,
    },
    /// 3-SAT gadget for connected Grundy coloring with k = 7.
    Cgc {
        #[command(flatten)]
        input: FormulaInput,
        #[command(flatten)]
        output: Output,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_formula(path: &Path) -> Result<CnfFormula> {
    read_dimacs_cnf(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write_generated(gen: &Generated, output: &Output) -> Result<()> {
    let sidecar = output.sidecar.clone().unwrap_or_else(|| output.out.with_extension("json"));
    if sidecar == output.out {
        bail!("the sidecar would overwrite the DIMACS file; pass --sidecar");
    }
    std::fs::write(&output.out, &gen.dimacs).with_context(|| format!("writing {}", output.out.display()))?;
    let json = serde_json::to_string_pretty(&gen.sidecar)?;
    std::fs::write(&sidecar, json + "\n").with_context(|| format!("writing {}", sidecar.display()))?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve { algorithm, graph, k, epsilon, seed, budget, certificate, dp_cap } => {
            let g = read_dimacs_graph(&read(&graph)?).with_context(|| format!("parsing {}", graph.display()))?;
            let algorithm = match algorithm {
                SolveAlgorithm::Grundy => Algorithm::Grundy,
                SolveAlgorithm::Weak => Algorithm::Weak,
                SolveAlgorithm::Connected => Algorithm::Connected,
                SolveAlgorithm::Xp => Algorithm::Xp,
                SolveAlgorithm::Local => Algorithm::Local,
                SolveAlgorithm::Colorcoding => Algorithm::ColorCoding,
            };
            let opts = SolveOptions { k, epsilon, seed, budget, certificate, dp_cap };
            let report = solve(&g, algorithm, &opts)?;
            println!("{}", serde_json::to_string(&report)?);
            Ok(if report.answer == Answer::BudgetExceeded { exit::BUDGET } else { exit::OK })
        }
        Command::Gen { generator } => {
            let (gen, output) = match generator {
                Generator::Binomial { k, output } => (generate::binomial(k)?, output),
                Generator::Pruned { s, l, m, output } => (generate::pruned(s, l, m)?, output),
                Generator::Nae { input, variant, output } => {
                    let variant = match variant {
                        NaeVariant::Weak => Variant::Weak,
                        NaeVariant::Proper => Variant::Proper,
                    };
                    let f = read_formula(&input.cnf)?;
                    (generate::reduction(&f, Reduction::Nae(variant), input.witness)?, output)
                }
                Generator::Fvs { input, q, output } => {
                    let f = read_formula(&input.cnf)?;
                    (generate::reduction(&f, Reduction::Fvs { q }, input.witness)?, output)
                }
                Generator::Cgc { input, output } => {
                    let f = read_formula(&input.cnf)?;
                    (generate::reduction(&f, Reduction::Cgc, input.witness)?, output)
                }
            };
            write_generated(&gen, &output)?;
            Ok(exit::OK)
        }
        Command::Bench { manifest, out } => {
            let m = Manifest::load(&manifest)?;
            let base = manifest.parent().unwrap_or(Path::new("."));
            let rows = bench::run(&m, base)?;
            match out {
                Some(path) => {
                    let file = std::fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    bench::write_csv(&rows, file)?;
                }
                None => bench::write_csv(&rows, std::io::stdout().lock())?,
            }
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<CertificateFailure>().is_some() {
                ExitCode::from(exit::CERTIFICATE)
            } else {
                ExitCode::from(exit::INPUT)
            }
        }
    }
}
