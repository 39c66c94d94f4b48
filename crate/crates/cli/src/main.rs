use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qcoh_cli::grid::{grid, parse_chi_list, points_for};
use qcoh_cli::record::{compute_record, exit_code, write_csv, Job, ModuleChoice, Record, What};
use qcoh_cli::verify::{self, Theorem};
use qcoh_core::repmod::{default_budget, PChar};
use rayon::prelude::*;

/// Cohomology of the queer Lie superalgebra q(2) in odd characteristic with
/// coefficients in baby Verma modules and their simple quotients.
#[derive(Parser)]
#[command(name = "qcoh", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute H0 and/or H1 for one module, or for every weight with `--lambda auto`.
    Compute(ComputeArgs),
    /// Check a published table over the whole weight grid.
    Verify(VerifyArgs),
    /// Emit one record per (character, weight, module).
    Scan(ScanArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuleArg {
    Verma,
    Simple,
    Both,
}

impl ModuleArg {
    fn choices(self) -> Vec<ModuleChoice> {
        match self {
            ModuleArg::Verma => vec![ModuleChoice::Verma],
            ModuleArg::Simple => vec![ModuleChoice::Simple],
            ModuleArg::Both => vec![ModuleChoice::Verma, ModuleChoice::Simple],
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    p: u32,
    /// zero | nilpotent | semisimple:a,b | mixed:a
    #[arg(long, default_value = "zero")]
    chi: String,
    /// `auto` for all of Lambda_chi, or `L1,L2` (residues or `[c0;c1;...]`).
    #[arg(long = "lambda", default_value = "auto", allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = ModuleChoice::Verma)]
    module: ModuleChoice,
    #[arg(long, value_enum, default_value_t = What::Both)]
    what: What,
    /// full | weight | both
    #[arg(long, default_value = "both")]
    method: String,
    /// Quotient route for simple modules: proposition | generic | both.
    #[arg(long, default_value = "generic")]
    route: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    #[arg(long)]
    p: u32,
    #[arg(long, default_value = "zero,nilpotent")]
    chi_types: String,
    #[arg(long)]
    jobs: Option<usize>,
    /// Also write all rows as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for certificates of rows that are not plain matches.
    #[arg(long, default_value = "qcoh-certificates")]
    certs: PathBuf,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value = "zero,nilpotent")]
    chi_types: String,
    #[arg(long, value_enum, default_value_t = ModuleArg::Both)]
    module: ModuleArg,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = What::Both)]
    what: What,
    #[arg(long, default_value = "both")]
    method: String,
    #[arg(long, default_value = "generic")]
    route: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(out: &Option<PathBuf>, body: &[u8]) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(body)?;
            Ok(())
        }
    }
}

fn emit_records(out: &Option<PathBuf>, format: Format, records: &[Record]) -> Result<()> {
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({ "records": records }))?;
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&mut buf, records)?;
            buf
        }
    };
    emit(out, &body)
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        b = b.num_threads(n);
    }
    Ok(b.build()?)
}

fn compute(a: ComputeArgs) -> Result<u8> {
    let chi: PChar = a.chi.parse()?;
    let points = points_for(a.p, chi, &a.lambda)?;
    let job = Job { what: a.what, method: a.method, route: a.route, budget: default_budget() };
    let records: Vec<Record> = points
        .par_iter()
        .map(|pt| compute_record(pt, a.module, &job, true))
        .collect();
    for r in &records {
        if let Some(e) = &r.error {
            eprintln!("error at ({},{}): {e}", r.lambda1, r.lambda2);
        }
    }
    emit_records(&a.out, a.format, &records)?;
    Ok(exit_code(&records))
}

fn scan(a: ScanArgs) -> Result<u8> {
    let chis = parse_chi_list(&a.chi_types)?;
    let points = grid(a.p, &chis)?;
    let job = Job { what: a.what, method: a.method, route: a.route, budget: default_budget() };
    let tasks: Vec<_> = points
        .iter()
        .flat_map(|pt| a.module.choices().into_iter().map(move |m| (pt, m)))
        .collect();
    let records: Vec<Record> = pool(a.jobs)?
        .install(|| tasks.par_iter().map(|(pt, m)| compute_record(pt, *m, &job, false)).collect());
    emit_records(&a.out, a.format, &records)?;
    Ok(exit_code(&records))
}

fn run_verify(a: VerifyArgs) -> Result<u8> {
    let chis = parse_chi_list(&a.chi_types)?;
    let points = grid(a.p, &chis)?;
    let budget = default_budget();
    let mut rows = pool(a.jobs)?.install(|| verify::verify_rows(a.theorem, &points, budget));
    verify::write_certificates(a.theorem, a.p, &mut rows, &a.certs)?;
    let text = verify::render(a.theorem, a.p, &a.chi_types, &rows);
    print!("{text}");
    if let Some(path) = &a.out {
        let body = serde_json::to_string_pretty(&serde_json::json!({
            "theorem": a.theorem.tag(),
            "p": a.p,
            "chi_types": a.chi_types,
            "rows": rows,
        }))? + "\n";
        std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(verify::exit_code(&rows))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Compute(a) => compute(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Scan(a) => scan(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
