//! Command-line front end.
//!
//! Exit codes: 0 when everything requested succeeded (and every verified
//! claim passed or was skipped), 1 when a verified claim failed, 2 for usage,
//! domain and I/O errors and for unknown claim ids.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::gen_trig::PQParams;
use crate::verify::{
    claim_ids, region_rows, run_claims, scan_rows, write_regions_csv, write_scan_csv, Quantity,
    Range1, ScanGrid, Status, CLAIMS,
};

#[derive(Debug, Parser)]
#[command(
    name = "pqelliptic",
    version,
    about = "Generalized (p,q)-elliptic integrals, the difference function delta, and grid certification of its inequalities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one quantity at one point.
    Eval(EvalArgs),
    /// Evaluate a quantity over a (p, q, r) grid and write CSV.
    Scan(ScanArgs),
    /// Certify claims over a grid and write a JSON report.
    Verify(VerifyArgs),
    /// Classify (p, q) pairs by the admissibility conditions and write CSV.
    Regions(RegionsArgs),
    /// List the registered claim ids.
    Claims,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub q: f64,
    /// Modulus; not needed for `pi`.
    #[arg(long)]
    pub r: Option<f64>,
    /// One of K, E, Kc, Ec, delta, delta_prime, delta_second, pi.
    #[arg(long)]
    pub quantity: Quantity,
}

/// Grid selection shared by `scan`, `verify` and `regions`. `--p`, `--q`,
/// `--r` and `--s` pin one axis to a single value and take precedence over
/// `--grid`.
#[derive(Debug, Args)]
pub struct GridArgs {
    /// Ranges as `p:lo:hi:n,q:lo:hi:n,r:lo:hi:n[,s:lo:hi:n]`; axes left out
    /// keep their defaults.
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long)]
    pub quantity: Quantity,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Comma-separated claim ids; all claims when absent.
    #[arg(long, value_delimiter = ',')]
    pub claims: Vec<String>,
    /// Replaces the default tolerance of every residual claim.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output file for the JSON report; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RegionsArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl GridArgs {
    pub fn build(&self) -> Result<ScanGrid> {
        let mut grid = match &self.grid {
            Some(text) => ScanGrid::parse(text)?,
            None => ScanGrid::default(),
        };
        let pin = |v: &str| Range1::parse(&format!("{v}:{v}:1"));
        if let Some(v) = &self.p {
            grid.p = pin(v)?;
        }
        if let Some(v) = &self.q {
            grid.q = pin(v)?;
        }
        if let Some(v) = &self.r {
            grid.r = pin(v)?;
        }
        if let Some(v) = &self.s {
            grid.s = Some(pin(v)?);
        }
        Ok(grid)
    }
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<()> {
    let params = PQParams::new(args.p, args.q)?;
    let r = match (args.r, args.quantity.needs_modulus()) {
        (Some(r), _) => r,
        (None, false) => 0.0,
        (None, true) => {
            return Err(Error::Domain(format!("quantity {} needs --r", args.quantity)));
        }
    };
    let res = args.quantity.evaluate(&params, r)?;
    writeln!(out, "quantity      {}", args.quantity)?;
    writeln!(out, "p             {}", args.p)?;
    writeln!(out, "q             {}", args.q)?;
    if args.quantity.needs_modulus() {
        writeln!(out, "r             {r}")?;
    }
    writeln!(out, "value         {}", res.value)?;
    writeln!(out, "err_estimate  {:e}", res.err_estimate)?;
    writeln!(out, "method        {}", res.method)?;
    Ok(())
}

pub fn cmd_scan(args: &ScanArgs) -> Result<()> {
    let grid = args.grid.build()?;
    grid.validate()?;
    let rows = scan_rows(&grid, args.quantity);
    write_scan_csv(&rows, open_out(&args.out)?)
}

pub fn cmd_regions(args: &RegionsArgs) -> Result<()> {
    let grid = args.grid.build()?;
    let rows = region_rows(&grid.p, &grid.q);
    write_regions_csv(&rows, open_out(&args.out)?)
}

/// Runs the claims, writes the report, and returns whether all passed.
pub fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let grid = args.grid.build()?;
    let report = run_claims(&args.claims, &grid, args.tol)?;
    let mut out = open_out(&args.out)?;
    out.write_all(report.to_json().as_bytes())?;
    out.flush()?;
    if args.out.is_some() {
        for c in &report.claims {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let worst = c.worst_residual.map(|w| format!("{w:.3e}")).unwrap_or_else(|| "-".into());
            eprintln!(
                "{status}  {:<20} evaluated {:>6}  failed {:>4}  skipped {:>4}  worst {worst}",
                c.id, c.evaluated, c.failed, c.skipped
            );
        }
    }
    Ok(report.all_passed())
}

fn list_claims(out: &mut dyn Write) -> Result<()> {
    for c in CLAIMS {
        writeln!(out, "{:<20} {}", c.id, c.description)?;
    }
    Ok(())
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    let outcome = match &cli.command {
        Command::Eval(a) => {
            let stdout = io::stdout();
            cmd_eval(a, &mut stdout.lock()).map(|_| true)
        }
        Command::Scan(a) => cmd_scan(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
        Command::Regions(a) => cmd_regions(a).map(|_| true),
        Command::Claims => list_claims(&mut io::stdout().lock()).map(|_| true),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::UnknownClaim(_) = e {
                eprintln!("known claims: {}", claim_ids().join(", "));
            }
            2
        }
    }
}

/// Entry point used by the `pqelliptic` binary.
pub fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}
