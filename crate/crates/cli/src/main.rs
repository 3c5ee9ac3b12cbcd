use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use buchsbaum::{BettiTable, CiType, FiveTuple, GenerizationPlan};
use clap::{Parser, Subcommand};

mod report;

/// Betti-level analysis of diameter-one Buchsbaum space curves.
#[derive(Parser)]
#[command(name = "buchsbaum", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Components, obstructedness and singular locus of a table or 5-tuple.
    Analyze {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        tuple: Option<FiveTuple>,
        #[arg(long)]
        table: Option<PathBuf>,
        /// Degree of the Rao module; only needed for ACM tables.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<i64>,
    },
    /// Cancel ghost terms (--qi) and apply P1/P2 generizations to a table.
    Generize {
        table: PathBuf,
        #[arg(long, default_value_t = 0)]
        p1: u64,
        #[arg(long, default_value_t = 0)]
        p2: u64,
        /// Degrees of ghost-term cancellations, comma separated; repeats allowed.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        qi: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<i64>,
    },
    /// Link a table through a complete intersection of type f,g.
    Link {
        table: PathBuf,
        #[arg(long)]
        ci: CiType,
    },
    /// Build the specialization lattice of a 5-tuple.
    Lattice {
        #[arg(long)]
        tuple: FiveTuple,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = buchsbaum::DEFAULT_NODE_BUDGET)]
        budget: usize,
    },
    /// Check the counting formulas against brute force on all tuples with entries up to --max.
    Oracle {
        #[arg(long)]
        max: u64,
    },
}

fn read_table(path: &Path) -> Result<BettiTable> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(BettiTable::from_json(&text)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = match cli.command {
        Command::Analyze { tuple: Some(t), .. } => report::analyze_tuple(t),
        Command::Analyze { table, c, .. } => {
            let path = table.expect("clap enforces --tuple or --table");
            report::analyze_table(&read_table(&path)?, c)?
        }
        Command::Generize {
            table,
            p1,
            p2,
            qi,
            c,
        } => {
            let mut plan = GenerizationPlan::pq(p1, p2);
            for degree in qi {
                plan = plan.with_q(degree, 1);
            }
            report::generize(&read_table(&table)?, &plan, c)?
        }
        Command::Link { table, ci } => report::link(&read_table(&table)?, ci)?,
        Command::Lattice {
            tuple,
            dot,
            json,
            budget,
        } => {
            let lattice = buchsbaum::specialization_lattice_with_budget(tuple, budget)?;
            if let Some(path) = dot {
                fs::write(&path, lattice.to_dot())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = json {
                let body = report::canonical(&lattice)?;
                fs::write(&path, body + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            report::lattice_summary(&lattice)
        }
        Command::Oracle { max } => {
            let summary = buchsbaum::sweep(max);
            let passed = summary.passed();
            emit(&report::canonical(&summary)?)?;
            return Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
    };
    emit(&report::canonical(&out)?)?;
    Ok(ExitCode::SUCCESS)
}

/// Prints one JSON document; a closed pipe downstream is not an error.
fn emit(body: &str) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{body}").and_then(|_| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use buchsbaum::Error as E;
    if let Some(e) = err.downcast_ref::<E>() {
        return match e {
            E::Malformed(_) | E::InvalidResolution(_) | E::AcmNeedsC => 2,
            E::NotDiameterOne(_) => 3,
            E::ReductionBlocked { .. }
            | E::GhostBlocked { .. }
            | E::PqBlocked { .. }
            | E::NotMinimal(_) => 4,
            E::NoSuchCi(_) => 5,
            E::BudgetExceeded(_) => 6,
            E::Inconsistent(_) | E::Overflow => 1,
        };
    }
    if err.downcast_ref::<std::io::Error>().is_some() {
        return 2;
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
