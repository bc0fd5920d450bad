//! `schubert2`: batch front end for the G(2,n) engine.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use schubert2::euler_chow::{fixed_locus_table, g24_threecycle_coefficients, isolated_series};
use schubert2::orbit_classes::{
    caterpillar_model, enumerate_models, hook_beta_check, orbit_class, verify_model_independence,
};
use schubert2::partitions::{enumerate_partial_partitions, orbit_count, stratum_geometry};
use schubert2::schubert_ring::{gamma, multiply};
use schubert2::{ClassVector, Error, Grading, Partition, Rank2Matroid, SchubertIndex};

use render::{BetaDoc, Count, FixedRow, MatroidDoc, PartitionRow, SeriesDoc, TermsOnly};

const EXIT_VALIDATION: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_INVARIANT: u8 = 70;

/// Ground sets beyond this make the brute-force beta invariant impractical.
const MATROID_MAX_N: usize = 20;

#[derive(Parser)]
#[command(
    name = "schubert2",
    version,
    about = "Exact Schubert calculus and torus orbits in G(2,n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV where the document is a table.
    #[arg(long, global = true)]
    csv: bool,

    /// Write to this path instead of standard output; `-` is standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List Π_n with orbit counts and stratum geometry.
    Partitions {
        #[arg(long)]
        n: usize,
    },
    /// Orbit count τ_n(π).
    Tau {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pi: Partition,
    },
    /// The rank-2 matroid M_π on [n].
    Matroid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pi: Partition,
    },
    /// Thin Schubert class γ(π).
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pi: Partition,
    },
    /// Product σ_a · σ_b.
    Product {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_index)]
        a: SchubertIndex,
        #[arg(long, value_parser = parse_index)]
        b: SchubertIndex,
    },
    /// Cohomology class of a torus-orbit closure.
    OrbitClass {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pi: Partition,
        /// `caterpillar` or `index:<k>` into the enumerated models.
        #[arg(long, default_value = "caterpillar")]
        model: ModelChoice,
    },
    /// Compare the orbit class across every tree model.
    VerifyModels {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pi: Partition,
    },
    /// T-invariant subvariety families of dimension p.
    FixedLocus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// Euler-Chow series coefficients.
    EulerChow {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        max_degree: usize,
    },
    /// Hook coefficient of the orbit class against the beta invariant.
    BetaCheck {
        #[arg(long)]
        pi: Partition,
    },
}

#[derive(Clone)]
enum ModelChoice {
    Caterpillar,
    Index(usize),
}

impl FromStr for ModelChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "caterpillar" {
            return Ok(ModelChoice::Caterpillar);
        }
        s.strip_prefix("index:")
            .and_then(|k| k.parse().ok())
            .map(ModelChoice::Index)
            .ok_or_else(|| format!("expected `caterpillar` or `index:<k>`, got `{s}`"))
    }
}

fn parse_index(s: &str) -> Result<SchubertIndex, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a1, a2] = parts.as_slice() else {
        return Err(format!("expected `a1,a2`, got `{s}`"));
    };
    let a1: usize = a1.parse().map_err(|_| format!("bad integer `{a1}`"))?;
    let a2: usize = a2.parse().map_err(|_| format!("bad integer `{a2}`"))?;
    if a2 > a1 {
        return Err(format!("index ({a1},{a2}) needs a1 >= a2"));
    }
    Ok(SchubertIndex::new(a1, a2))
}

/// A failed run: exit status plus a one-line diagnostic.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_invariant() {
            EXIT_INVARIANT
        } else {
            EXIT_VALIDATION
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_VALIDATION,
        message: message.into(),
    }
}

enum Format {
    Json,
    Csv,
}

fn json<T: Serialize>(doc: &T) -> Result<String, Failure> {
    serde_json::to_string(doc).map_err(|e| invalid(format!("serialization failed: {e}")))
}

fn csv_table<H, R>(header: H, rows: impl IntoIterator<Item = R>) -> Result<String, Failure>
where
    H: IntoIterator,
    H::Item: AsRef<[u8]>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| invalid(format!("csv: {e}"));
    w.write_record(header).map_err(io_err)?;
    for r in rows {
        w.write_record(r).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| invalid(format!("csv: {e}")))?;
    let mut text = String::from_utf8(bytes).expect("csv output is utf-8");
    if text.ends_with('\n') {
        text.pop();
    }
    Ok(text)
}

fn no_csv(format: &Format, command: &str) -> Result<(), Failure> {
    match format {
        Format::Csv => Err(invalid(format!("--csv is not available for `{command}`"))),
        Format::Json => Ok(()),
    }
}

fn cohomology_basis(n: usize, a: SchubertIndex) -> Result<ClassVector, Failure> {
    Ok(ClassVector::basis(n, Grading::Cohomology, a)?)
}

fn run_command(command: Command, format: Format) -> Result<String, Failure> {
    match command {
        Command::Partitions { n } => {
            let rows = enumerate_partial_partitions(n)?
                .into_iter()
                .map(|pi| {
                    let tau = orbit_count(n, &pi)?;
                    let g = stratum_geometry(n, &pi)?;
                    Ok(PartitionRow::new(pi, tau, g))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            match format {
                Format::Json => json(&rows),
                Format::Csv => csv_table(
                    PartitionRow::csv_header(),
                    rows.iter().map(PartitionRow::csv_record),
                ),
            }
        }
        Command::Tau { n, pi } => {
            no_csv(&format, "tau")?;
            json(&Count::from(orbit_count(n, &pi)?))
        }
        Command::Matroid { n, pi } => {
            no_csv(&format, "matroid")?;
            if n > MATROID_MAX_N {
                return Err(invalid(format!(
                    "matroid needs n <= {MATROID_MAX_N}, got {n}"
                )));
            }
            let r = Rank2Matroid::from_partition(n, &pi)?;
            let m = r.to_basis_matroid();
            json(&MatroidDoc {
                n,
                pi,
                blocks: r.blocks().iter().map(|b| b.to_vec()).collect(),
                loops: r.loops().to_vec(),
                bases: m.bases().iter().map(|b| b.to_vec()).collect(),
                polytope_dim: m.polytope_dimension(),
                components: m.components().len(),
                connected: m.is_connected(),
                beta: m.beta_invariant(),
            })
        }
        Command::Gamma { n, pi } => {
            no_csv(&format, "gamma")?;
            json(&gamma(n, &pi)?)
        }
        Command::Product { n, a, b } => {
            no_csv(&format, "product")?;
            let c = multiply(&cohomology_basis(n, a)?, &cohomology_basis(n, b)?)?;
            json(&TermsOnly::from(&c))
        }
        Command::OrbitClass { n, pi, model } => {
            no_csv(&format, "orbit-class")?;
            let class = if pi.is_rigid() {
                if let ModelChoice::Index(k) = model {
                    if k > 0 {
                        return Err(invalid(format!(
                            "({pi}) is rigid: only model index:0 exists"
                        )));
                    }
                }
                orbit_class(n, &pi, None)?
            } else {
                let tree = match model {
                    ModelChoice::Caterpillar => caterpillar_model(&pi)?,
                    ModelChoice::Index(k) => {
                        let mut all = enumerate_models(&pi)?;
                        if k >= all.len() {
                            return Err(invalid(format!(
                                "model index {k} out of range: ({pi}) has {} models",
                                all.len()
                            )));
                        }
                        all.swap_remove(k)
                    }
                };
                orbit_class(n, &pi, Some(&tree))?
            };
            json(&class)
        }
        Command::VerifyModels { n, pi } => {
            no_csv(&format, "verify-models")?;
            let report = verify_model_independence(n, &pi)?;
            if !report.agree {
                return Err(Error::Invariant {
                    name: "model-independence",
                    detail: format!(
                        "models {:?} disagree for ({pi}) in n={n}",
                        report.counterexample
                    ),
                }
                .into());
            }
            json(&report)
        }
        Command::FixedLocus { n, p } => {
            let table = fixed_locus_table(n, p)?;
            let rows: Vec<FixedRow> = table.iter().map(FixedRow::from).collect();
            match format {
                Format::Json => json(&rows),
                Format::Csv => csv_table(
                    FixedRow::csv_header(),
                    rows.iter().map(FixedRow::csv_record),
                ),
            }
        }
        Command::EulerChow { n, p, max_degree } => {
            let series = if (n, p) == (4, 3) {
                g24_threecycle_coefficients(max_degree)?
            } else {
                isolated_series(n, p, max_degree)?
            };
            let doc = SeriesDoc::from(&series);
            match format {
                Format::Json => json(&doc),
                Format::Csv => {
                    let (header, rows) = doc.csv_rows();
                    csv_table(header, rows)
                }
            }
        }
        Command::BetaCheck { pi } => {
            no_csv(&format, "beta-check")?;
            let hb = hook_beta_check(&pi)?;
            if hb.hook_coeff != hb.beta {
                return Err(Error::Invariant {
                    name: "hook-beta",
                    detail: format!(
                        "({pi}): hook coefficient {} but beta {}",
                        hb.hook_coeff, hb.beta
                    ),
                }
                .into());
            }
            json(&BetaDoc {
                n: pi.weight(),
                pi,
                hook_coeff: hb.hook_coeff,
                beta: hb.beta,
                equal: true,
            })
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("SCHUBERT2_THREADS") else {
        return Ok(());
    };
    let k: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| {
            invalid(format!(
                "SCHUBERT2_THREADS must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| invalid(format!("thread pool: {e}")))
}

fn emit(text: &str, out: Option<PathBuf>) -> Result<(), Failure> {
    let io_err = |e: io::Error| invalid(format!("write failed: {e}"));
    match out {
        Some(path) if path.as_os_str() != "-" => fs::write(&path, format!("{text}\n"))
            .map_err(|e| invalid(format!("{}: {e}", path.display()))),
        _ => {
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "{text}").map_err(io_err)?;
            stdout.flush().map_err(io_err)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    return ExitCode::SUCCESS;
                }
                ErrorKind::UnknownArgument | ErrorKind::InvalidSubcommand => EXIT_USAGE,
                _ => EXIT_VALIDATION,
            };
            let text = e.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("error: bad arguments"));
            return ExitCode::from(code);
        }
    };
    let format = match (cli.output.json, cli.output.csv) {
        (_, true) => Format::Csv,
        _ => Format::Json,
    };
    let result = configure_threads()
        .and_then(|()| run_command(cli.command, format))
        .and_then(|text| emit(&text, cli.output.out));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
