//! Command-line front end: construct single instances, sweep parameter
//! grids, verify the result tables, and emit structured reports.
//!
//! Exit codes: 0 when every verdict is PASS, 2 on invalid/out-of-range
//! parameters, 3 on a verification mismatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hullforge::code::{InnerProduct, DEFAULT_ENUM_CAP};
use hullforge::constructions::{construct, euclidean_field, hermitian_field, TheoremId};
use hullforge::report::{evaluate_record, RunReport};
use hullforge::tables::{sweep_theorem, verify_table, Scope};
use hullforge::{Error, Result};

#[derive(Parser)]
#[command(
    name = "hullforge",
    version,
    about = "Construct MDS codes with prescribed hull dimensions, verify them by exact linear algebra, and derive entanglement-assisted quantum code parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct one code instance and verify hull, distance, and derived
    /// quantum parameters
    Construct {
        /// Construction id: A1, A2, A3, B, C1..C6
        #[arg(long)]
        theorem: String,
        /// Base field parameter q
        #[arg(long)]
        q: u32,
        /// Coset count m (construction B only)
        #[arg(long)]
        m: Option<u32>,
        /// Number of locators n
        #[arg(long)]
        n: Option<usize>,
        /// Code dimension k
        #[arg(long)]
        k: Option<usize>,
        /// Target hull dimension l
        #[arg(long)]
        l: Option<usize>,
        /// Assert that the independently verified hull dimension equals this
        /// value (mismatch exits 3)
        #[arg(long)]
        expect_hull: Option<usize>,
    },
    /// Re-derive one of the result tables (2, 3, or 4) and compare every row
    /// exactly against the checked-in expected values
    #[command(name = "verify-tables")]
    VerifyTables {
        /// Table number: 2, 3, or 4
        table: u8,
        /// Scope: fast (q ≤ 9) or full
        scope_arg: Option<String>,
        /// Scope: fast (q ≤ 9) or full [default: fast]
        #[arg(long)]
        scope: Option<String>,
    },
    /// Verify the entire legal parameter grid of a construction for each q
    Sweep {
        /// Construction id: A1, A2, A3, B, C1..C6
        #[arg(long)]
        theorem: String,
        /// Comma-separated base field parameters, e.g. 3,4,5
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Enumeration cap for exhaustive distance checks, overridable via the
/// HULLFORGE_CAP environment variable.
fn enum_cap() -> Result<u64> {
    match std::env::var("HULLFORGE_CAP") {
        Ok(s) => s.trim().parse().map_err(|_| {
            Error::ParamsOutOfRange(format!(
                "HULLFORGE_CAP must be a non-negative integer, got '{s}'"
            ))
        }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn field_for(theorem: TheoremId, q: u32) -> Result<hullforge::gf::FieldCtx> {
    match theorem.inner_product() {
        InnerProduct::Hermitian => hermitian_field(q),
        InnerProduct::Euclidean => euclidean_field(q),
    }
}

fn render(reports: &[RunReport], format: Format) -> String {
    match format {
        Format::Json => {
            if reports.len() == 1 {
                reports[0].to_json()
            } else {
                let mut s = serde_json::to_string_pretty(reports).expect("report serializes");
                s.push('\n');
                s
            }
        }
        Format::Csv => {
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                let csv = r.to_csv();
                if i == 0 {
                    out.push_str(&csv);
                } else if let Some(pos) = csv.find('\n') {
                    out.push_str(&csv[pos + 1..]);
                }
            }
            out
        }
        Format::Text => reports
            .iter()
            .map(|r| r.to_text())
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn emit(reports: &[RunReport], format: Format, out: Option<&PathBuf>) -> Result<()> {
    let rendered = render(reports, format);
    match out {
        Some(path) => {
            std::fs::write(path, rendered)
                .map_err(|e| Error::InvalidCode(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{rendered}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let cap = enum_cap()?;
    let reports: Vec<RunReport> = match cli.command {
        Command::Construct {
            theorem,
            q,
            m,
            n,
            k,
            l,
            expect_hull,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let ctx = field_for(theorem, q)?;
            let mut record = construct(&ctx, theorem, q, m, n, k, l)?;
            if let Some(h) = expect_hull {
                record.claimed_hull.1 = h;
            }
            let item = evaluate_record(&ctx, &record, cap)?;
            vec![RunReport::new(&ctx, vec![item])]
        }
        Command::VerifyTables {
            table,
            scope_arg,
            scope,
        } => {
            let scope: Scope = scope
                .or(scope_arg)
                .map(|s| s.parse())
                .transpose()?
                .unwrap_or(Scope::Fast);
            verify_table(table, scope, cap)?
        }
        Command::Sweep { theorem, q } => {
            let theorem: TheoremId = theorem.parse()?;
            let mut qs = q;
            qs.sort_unstable();
            qs.dedup();
            let mut reports = Vec::with_capacity(qs.len());
            for q in qs {
                reports.push(sweep_theorem(theorem, q, cap)?);
            }
            reports
        }
    };
    emit(&reports, cli.format, cli.out.as_ref())?;
    let all_pass = reports.iter().all(|r| r.all_pass());
    if !all_pass {
        for r in &reports {
            for item in r.items.iter().filter(|i| i.verdict.overall != "PASS") {
                eprintln!(
                    "FAIL: {} q={} n={} k={} l={} -> {}",
                    item.theorem,
                    item.params.q,
                    item.code.length,
                    item.params.k,
                    item.params.l,
                    item.verdict.overall
                );
            }
        }
    }
    Ok(all_pass)
}

/// Errors that mean "the mathematics disagreed" exit 3; everything else
/// (bad or out-of-range input) exits 2.
fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ConstructionAssertionFailed(_)
        | Error::RankIdentityViolated(..)
        | Error::SearchExhausted => 3,
        _ => 2,
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(3),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code_for(&e));
        }
    }
}
