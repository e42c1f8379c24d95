use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jordan_core::construct::Builder;
use jordan_core::engine::{
    jordan_constant, normal_abelian_profile, subgroup_classes, AbelianType, EngineOptions,
};
use jordan_core::kernel::GroupTable;
use jordan_core::suite::{report, run_verification, Corpus, Format, Selection};

#[derive(Parser)]
#[command(
    name = "jordan",
    version,
    about = "Exact Jordan constants of finite groups"
)]
struct Cli {
    /// Worker threads (defaults to every available core).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute J(G) with a witness subgroup and its normal abelian subgroup.
    Compute {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Output,
    },
    /// List the normal abelian subgroups by order and isomorphism type.
    Profile {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Output,
    },
    /// Summarize the conjugacy classes of subgroups.
    Subgroups {
        expr: String,
        /// Print one line per class instead of per-order totals.
        #[arg(long)]
        classes: bool,
    },
    /// Recompute the corpus of maximal finite groups and compare with the
    /// expected values.
    VerifyPaper {
        /// noniso, ordinary, supersingular, simple or all.
        #[arg(long, default_value = "all")]
        section: Selection,
        /// md, json or csv.
        #[arg(long, default_value = "md")]
        format: Format,
        /// Read the corpus from a file instead of the built-in copy.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Write the multiplication table as JSON.
    Export {
        expr: String,
        #[arg(long)]
        table: PathBuf,
    },
}

/// Failures that are the input's fault map to exit status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn build(expr: &str) -> Result<std::sync::Arc<GroupTable>, Failure> {
    Ok(Builder::new().build_str(expr)?)
}

/// Runs one command, appending its standard output to `out`.
fn run(cli: Cli, out: &mut String) -> Result<ExitCode, Failure> {
    let opts = EngineOptions {
        threads: cli.threads,
        ..Default::default()
    };
    match cli.command {
        Command::Compute { expr, format } => {
            let g = build(&expr)?;
            let r = jordan_constant(&g, &opts)?;
            match format {
                Output::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?,
                Output::Text => {
                    writeln!(out, "group: {}", r.label)?;
                    writeln!(out, "order: {}", r.order)?;
                    writeln!(out, "J = {}", r.jordan)?;
                    writeln!(out, "i(G) = {}", r.whole_group_index)?;
                    writeln!(
                        out,
                        "witness: subgroup of order {} with a normal abelian subgroup of order {}",
                        r.witness_subgroup.len(),
                        r.witness_abelian.len()
                    )?;
                    writeln!(out, "subgroup classes: {}", r.subgroup_classes)?;
                    writeln!(out, "time: {} ms", r.millis)?;
                }
            }
        }
        Command::Profile { expr, format } => {
            let g = build(&expr)?;
            let p = normal_abelian_profile(&g);
            let rows: Vec<(usize, String, Vec<usize>)> = p
                .entries
                .iter()
                .map(|e| {
                    (
                        e.subgroup.size(),
                        AbelianType(e.invariants.clone()).to_string(),
                        e.subgroup.elements(),
                    )
                })
                .collect();
            match format {
                Output::Json => {
                    let doc: Vec<_> = rows
                        .iter()
                        .map(|(o, t, els)| serde_json::json!({"order": o, "type": t, "elements": els}))
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
                }
                Output::Text => {
                    for (o, t, _) in &rows {
                        writeln!(out, "{o:>6}  {t}")?;
                    }
                    let types: Vec<String> = p.types().iter().map(|t| t.to_string()).collect();
                    writeln!(out, "types: {{{}}}", types.join(", "))?;
                    writeln!(out, "largest order: {}", p.max_order())?;
                }
            }
        }
        Command::Subgroups { expr, classes } => {
            let g = build(&expr)?;
            let inv = subgroup_classes(&g, &opts)?;
            writeln!(out, "order: {}", inv.group_order)?;
            writeln!(out, "classes: {}", inv.len())?;
            writeln!(out, "subgroups: {}", inv.subgroup_count())?;
            if classes {
                writeln!(
                    out,
                    "{:>6} {:>6} {:>8}  generators",
                    "order", "size", "N order"
                )?;
                for c in &inv.classes {
                    writeln!(
                        out,
                        "{:>6} {:>6} {:>8}  {:?}",
                        c.order(),
                        c.class_size,
                        c.normalizer_order,
                        c.generators
                    )?;
                }
            } else {
                let mut by_order: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
                for c in &inv.classes {
                    let e = by_order.entry(c.order()).or_default();
                    e.0 += 1;
                    e.1 += c.class_size;
                }
                writeln!(out, "{:>6} {:>8} {:>10}", "order", "classes", "subgroups")?;
                for (o, (k, n)) in by_order {
                    writeln!(out, "{o:>6} {k:>8} {n:>10}")?;
                }
            }
        }
        Command::VerifyPaper {
            section,
            format,
            corpus,
        } => {
            let corpus = match corpus {
                Some(path) => Corpus::parse(&std::fs::read_to_string(&path)?)?,
                None => Corpus::builtin(),
            };
            let r = run_verification(&corpus, section, &opts);
            write!(out, "{}", report::render(&r, format))?;
            if !r.passed() {
                eprintln!("verification failed");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export { expr, table } => {
            let g = build(&expr)?;
            std::fs::write(&table, g.to_json())?;
            eprintln!("wrote {} (order {})", table.display(), g.order());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let mut out = String::new();
    let result = run(Cli::parse(), &mut out);
    // a reader that stops early (such as `head`) is not an error
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
