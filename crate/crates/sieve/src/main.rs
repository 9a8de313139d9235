use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rigidity_core::surfaces::find_stable_split;
use rigidity_core::DivisorClass;
use rigidity_sieve::query::QueryVerdict;
use rigidity_sieve::sweep::{document, write_csv};
use rigidity_sieve::verify::Mutant;
use rigidity_sieve::{parallel, query, sweep, Error, Suite, SuiteOptions, SweepOptions, SCHEMA};
use serde_json::json;

#[derive(Parser)]
#[command(version, about = "Exclusion sieve for Hilbert-scheme components rigid in moduli")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and sieve verdict for one (d, g, r).
    Query {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        r: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// One row per (d, g) up to Castelnuovo's bound.
    Sweep {
        #[arg(long)]
        r: i64,
        #[arg(long, default_value_t = 100)]
        d_max: i64,
        #[arg(long)]
        g_max: Option<i64>,
        #[arg(long)]
        in_range_only: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run a verification suite; exits 1 if any violation is found.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long, default_value_t = 500)]
        d_max: i64,
        #[arg(long, default_value_t = 60)]
        alpha_max: i64,
        /// Put (30, 34) back inside the r = 9 range.
        #[arg(long)]
        no_exception: bool,
        /// Swap in a corrupted bound provider.
        #[arg(long, value_enum)]
        mutant: Option<Mutant>,
        /// Record wall-clock time in each report.
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Split aC_0 + bf on X_e into two smooth curves meeting in >= 3 points.
    Split {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        e: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn reject_format(format: Format, allowed: &[Format], command: &str) -> Result<(), Error> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Err(Error::Usage(format!("{command} does not support --format {name}")))
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    let mut out = io::stdout().lock();
    match command {
        Command::Query { d, g, r, format } => {
            reject_format(format, &[Format::Text, Format::Json], "query")?;
            let report = query(d, g, r)?;
            if format == Format::Json {
                serde_json::to_writer_pretty(&mut out, &report)?;
                writeln!(out)?;
            } else {
                print_query(&mut out, &report)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { r, d_max, g_max, in_range_only, format } => {
            reject_format(format, &[Format::Csv, Format::Json], "sweep")?;
            let opts = SweepOptions { r, d_max, g_max, in_range_only };
            let rows = sweep(&opts)?;
            if format == Format::Json {
                serde_json::to_writer_pretty(&mut out, &document(&opts, rows))?;
                writeln!(out)?;
            } else {
                write_csv(&rows, &mut out)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, r, d_max, alpha_max, no_exception, mutant, timing, format } => {
            reject_format(format, &[Format::Text, Format::Json], "verify")?;
            let opts = SuiteOptions { r, d_max, alpha_max, no_exception, timing, mutant };
            let reports = parallel::install(|| suite.run(&opts))??;
            let passed = reports.iter().all(|r| r.passed());
            if format == Format::Json {
                let doc = json!({ "schema": SCHEMA, "passed": passed, "reports": reports });
                serde_json::to_writer_pretty(&mut out, &doc)?;
                writeln!(out)?;
            } else {
                for report in &reports {
                    writeln!(out, "{}", report.summary())?;
                    for v in &report.violations {
                        writeln!(out, "  violation [{}] at {}: {}", v.check, v.at, v.detail)?;
                    }
                    for line in &report.listing {
                        writeln!(out, "  listed: {line}")?;
                    }
                    for note in &report.notes {
                        writeln!(out, "  note: {note}")?;
                    }
                    if let Some(ms) = report.elapsed_ms {
                        writeln!(out, "  elapsed: {ms} ms")?;
                    }
                }
                writeln!(out, "{}", if passed { "all checks passed" } else { "violations found" })?;
            }
            Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Split { a, b, e, format } => {
            reject_format(format, &[Format::Text, Format::Json], "split")?;
            let class = DivisorClass::new(a, b, e)?;
            let found = find_stable_split(class);
            if format == Format::Json {
                let doc = match &found {
                    Ok(Some(cert)) => json!({ "schema": SCHEMA, "class": class, "certificate": cert }),
                    Ok(None) => json!({ "schema": SCHEMA, "class": class, "diagnostic": "no splitting found" }),
                    Err(err) => json!({ "schema": SCHEMA, "class": class, "diagnostic": err.to_string() }),
                };
                serde_json::to_writer_pretty(&mut out, &doc)?;
                writeln!(out)?;
            } else {
                match &found {
                    Ok(Some(c)) => writeln!(
                        out,
                        "({},{},{}) = ({},{},{}) + ({},{},{}), intersection {}",
                        a, b, e, c.d1.a, c.d1.b, c.d1.e, c.d2.a, c.d2.b, c.d2.e, c.intersection
                    )?,
                    Ok(None) => writeln!(out, "({a},{b},{e}): no splitting found")?,
                    Err(err) => writeln!(out, "({a},{b},{e}): {err}")?,
                }
            }
            Ok(if matches!(found, Ok(Some(_))) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn print_query(out: &mut impl Write, q: &rigidity_sieve::QueryReport) -> io::Result<()> {
    let (d, g, r) = (q.input.d, q.input.g, q.input.r);
    let inv = &q.invariants;
    writeln!(out, "d={d} g={g} r={r}")?;
    writeln!(out, "rho = {}", inv.rho)?;
    writeln!(out, "lambda = {}", inv.lambda)?;
    let opt = |v: Option<i128>| v.map_or("-".to_string(), |v| v.to_string());
    writeln!(out, "pi = {}  pi1 = {}  pi2 = {}", opt(inv.pi), opt(inv.pi1), opt(inv.pi2))?;
    writeln!(out, "embed_cap = {}", inv.embed_cap)?;
    match &q.verdict {
        QueryVerdict::General { verdict } => {
            writeln!(out, "verdict: {}", verdict.label())?;
            for w in verdict.witnesses() {
                writeln!(out, "  alpha={} case={} slack={}", w.alpha, w.case.number(), w.slack)?;
            }
        }
        QueryVerdict::SpaceCurves { verdict } => match verdict {
            Some(v) => {
                writeln!(out, "verdict: {}", v.label())?;
                for w in v.witnesses() {
                    writeln!(out, "  alpha={} branch={:?} slack={}", w.alpha, w.branch, w.slack)?;
                }
            }
            None => writeln!(out, "verdict: outside the sieve domain (needs g >= 5, d <= g)")?,
        },
    }
    if let Some(in_range) = q.range_thm41 {
        writeln!(out, "hypothesis range: {}", if in_range { "in" } else { "out" })?;
    }
    if let Some(outcome) = &q.r3_outcome {
        match outcome {
            rigidity_core::sieve::R3Outcome::ExactImage(n) => writeln!(out, "classification: exact image of dimension {n}")?,
            rigidity_core::sieve::R3Outcome::MinImageIfNonempty(n) => {
                writeln!(out, "classification: image of dimension >= {n} if nonempty")?
            }
            other => writeln!(out, "classification: {}", other.label())?,
        }
    }
    Ok(())
}
