//! Command-line front end: classification runs, claim replay, and the small
//! per-quantity calculators.
//!
//! Exit codes: 0 on success, 1 on any contract error (bad arguments
//! included), 2 when verify-paper finds an outright disagreement.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use wfano_core::rational::rat_string;
use wfano_core::{
    chow, classify, emit_report, filters, has_disagreement, riemann_roch, verify_paper, ChernData,
    FormulaMode, QuadricContext, Rat, ReportFormat, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "wfano",
    version,
    about = "Exact classification pipeline for rank-2 weak Fano bundles on quadric hypersurfaces"
)]
struct Cli {
    /// Emit per-filter trace lines on stderr.
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the case analysis over (n, c1, c2) and emit audited records.
    Classify(ClassifyArgs),
    /// Recompute every replayed numeric claim and report agreement.
    VerifyPaper(VerifyPaperArgs),
    /// Euler characteristics of a rank-2 Chern datum.
    Chi(ChiArgs),
    /// Segre numbers of a rank-2 Chern datum.
    Segre(SegreArgs),
    /// Nef upper bound on c2 for a normalized datum on Q^n.
    Bound(BoundArgs),
    /// Verify the Chow-ring relations and degree normalization.
    ChowCheck(ChowCheckArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, default_value_t = 5)]
    n_min: u32,
    #[arg(long, default_value_t = 11)]
    n_max: u32,
    #[arg(long, default_value_t = 10)]
    c2_max: i64,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Decimal digits for the certified sin filter.
    #[arg(long, default_value_t = 40)]
    precision: u32,
    #[arg(long, value_enum, default_value_t = FormulaArg::Both)]
    formula: FormulaArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyPaperArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[arg(long, default_value_t = 40)]
    precision: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChiArgs {
    /// Quadric dimension (the Q^5 closed forms are printed only for n = 5).
    #[arg(long, default_value_t = 5)]
    n: u32,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    c1: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    c2: Rat,
    #[arg(long, value_enum, default_value_t = FormulaArg::Both)]
    formula: FormulaArg,
}

#[derive(Args)]
struct SegreArgs {
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    c1: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    c2: Rat,
    #[arg(long, default_value_t = 6)]
    i_max: u32,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, allow_hyphen_values = true)]
    c1: i64,
}

#[derive(Args)]
struct ChowCheckArgs {
    #[arg(long, default_value_t = 3)]
    n_min: u32,
    #[arg(long, default_value_t = 12)]
    n_max: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Markdown,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Markdown => ReportFormat::Markdown,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaArg {
    Printed,
    Hrr,
    Both,
}

impl From<FormulaArg> for FormulaMode {
    fn from(f: FormulaArg) -> Self {
        match f {
            FormulaArg::Printed => FormulaMode::Printed,
            FormulaArg::Hrr => FormulaMode::Hrr,
            FormulaArg::Both => FormulaMode::Both,
        }
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad integer '{t}': {e}"))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let denom = parse_int(q)?;
            if denom == 0 {
                return Err("zero denominator".to_string());
            }
            Ok(wfano_core::rational::ratio(parse_int(p)?, denom))
        }
        None => Ok(wfano_core::rational::rat(parse_int(s)?)),
    }
}

fn write_output(doc: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, doc).map_err(|e| format!("cannot write {path:?}: {e}")),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(doc.as_bytes())
                .and_then(|_| stdout.write_all(b"\n"))
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Classify(args) => {
            let config = RunConfig {
                n_min: args.n_min,
                n_max: args.n_max,
                c2_max: args.c2_max,
                format: args.format.into(),
                precision: args.precision,
                formula_mode: args.formula.into(),
            };
            let records = classify(&config).map_err(|e| e.to_string())?;
            let doc = emit_report(&records, &[], config.format).map_err(|e| e.to_string())?;
            write_output(&doc, args.out.as_ref())?;
            Ok(0)
        }
        Command::VerifyPaper(args) => {
            let config = RunConfig {
                precision: args.precision,
                format: args.format.into(),
                ..RunConfig::default()
            };
            let checks = verify_paper(&config).map_err(|e| e.to_string())?;
            let doc = emit_report(&[], &checks, config.format).map_err(|e| e.to_string())?;
            write_output(&doc, args.out.as_ref())?;
            Ok(if has_disagreement(&checks) { 2 } else { 0 })
        }
        Command::Chi(args) => {
            let context = QuadricContext::new(args.n).map_err(|e| e.to_string())?;
            let d = ChernData::new(args.c1, args.c2);
            let mut lines = vec![format!(
                "chi_hrr(Q^{}, {d}) = {}",
                args.n,
                rat_string(&riemann_roch::chi_hrr(context, &d))
            )];
            if args.n == 5 {
                let formula: FormulaMode = args.formula.into();
                if matches!(formula, FormulaMode::Printed | FormulaMode::Both) {
                    lines.push(format!(
                        "chi_q5 printed = {}",
                        rat_string(&riemann_roch::chi_q5(&d, riemann_roch::ChiFormula::Printed))
                    ));
                }
                if matches!(formula, FormulaMode::Hrr | FormulaMode::Both) {
                    lines.push(format!(
                        "chi_q5 hrr = {}",
                        rat_string(&riemann_roch::chi_q5(&d, riemann_roch::ChiFormula::Hrr))
                    ));
                }
            }
            write_output(&lines.join("\n"), None)?;
            Ok(0)
        }
        Command::Segre(args) => {
            let d = ChernData::new(args.c1, args.c2);
            let by_recurrence = d.segre_recurrence(args.i_max);
            let by_inversion = d.segre_inversion(args.i_max);
            if by_recurrence != by_inversion {
                return Err("internal: recurrence and inversion disagree".to_string());
            }
            let lines: Vec<String> = by_recurrence
                .iter()
                .enumerate()
                .map(|(i, s)| format!("s_{i} = {}", rat_string(s)))
                .collect();
            write_output(&lines.join("\n"), None)?;
            Ok(0)
        }
        Command::Bound(args) => {
            let bound = filters::nef_c2_bound(args.n, args.c1).map_err(|e| e.to_string())?;
            let exact = filters::nef_c2_bound_exact(args.n, args.c1).map_err(|e| e.to_string())?;
            let alpha = filters::alpha_for(args.n).expect("tabulated range");
            write_output(
                &format!(
                    "nef c2 bound on Q^{} with c1 = {}: {bound}\nalpha = {alpha}\nexact bound = {exact}",
                    args.n, args.c1
                ),
                None,
            )?;
            Ok(0)
        }
        Command::ChowCheck(args) => {
            if args.n_max < args.n_min {
                return Err(format!(
                    "n_max ({}) must not be below n_min ({})",
                    args.n_max, args.n_min
                ));
            }
            let mut lines = Vec::new();
            for n in args.n_min..=args.n_max {
                let context = QuadricContext::new(n).map_err(|e| e.to_string())?;
                let top = chow::ChowClass::h_power(context, n).degree();
                if top != wfano_core::rational::rat(2) {
                    return Err(format!("degree(H^{n}) = {top} on Q^{n}, expected 2"));
                }
                let middle = match chow::middle_relations_check(context) {
                    Ok(true) => "middle relations hold".to_string(),
                    Ok(false) => return Err(format!("middle relations fail on Q^{n}")),
                    Err(_) => "middle relations not applicable (even n)".to_string(),
                };
                lines.push(format!("Q^{n}: degree(H^{n}) = 2; {middle}"));
            }
            write_output(&lines.join("\n"), None)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    env_logger::Builder::new()
        .filter_level(if cli.trace {
            log::LevelFilter::Trace
        } else {
            log::LevelFilter::Warn
        })
        .init();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
