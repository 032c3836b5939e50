use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use lsac::cochain::{CochainComplex, OddConvention};
use lsac::cohomology::compute_cohomology;
use lsac::format::{parse_algebra_file_with, AlgebraFile};
use lsac::graded::compute_graded_cohomology;
use lsac::report::{render_human, DegreeReport, Provenance, Report};

mod suite;

#[derive(Parser)]
#[command(name = "lsac", version, about = "Exact cohomology of Lie (super)algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute H^k for one degree or for all degrees.
    Compute(ComputeArgs),
    /// Parse and check an algebra file.
    Validate {
        #[arg(long)]
        file: PathBuf,
    },
    /// Run the checks on the bundled algebras, or print one of them.
    Examples {
        /// Print the named bundled file instead of running the checks.
        #[arg(long)]
        show: Option<String>,
        /// List the bundled files.
        #[arg(long, conflicts_with = "show")]
        list: bool,
    },
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    order: Option<usize>,
    #[arg(long)]
    all: bool,
    /// Split by homogeneity (needs weights on every basis element).
    #[arg(long)]
    graded: bool,
    /// Restrict a graded run to one homogeneity.
    #[arg(long, allow_hyphen_values = true, requires = "graded")]
    homogeneity: Option<i64>,
    /// Write a JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    skip_validate: bool,
    /// Print wall time and peak memory to standard error.
    #[arg(long)]
    timing: bool,
    /// Override the file's odd convention.
    #[arg(long)]
    odd_convention: Option<OddConvention>,
}

impl ComputeArgs {
    /// The flags that affect results, in a fixed order.
    fn canonical_flags(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self.order {
            Some(k) => out.push(format!("--order {k}")),
            None => out.push("--all".into()),
        }
        if self.graded {
            out.push("--graded".into());
        }
        if let Some(h) = self.homogeneity {
            out.push(format!("--homogeneity {h}"));
        }
        if self.skip_validate {
            out.push("--skip-validate".into());
        }
        if let Some(c) = self.odd_convention {
            out.push(format!("--odd-convention {c}"));
        }
        out
    }
}

fn load(path: &PathBuf, validate: bool) -> Result<(String, AlgebraFile)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = parse_algebra_file_with(&text, validate).with_context(|| format!("in {}", path.display()))?;
    Ok((text, file))
}

fn degree_report(cx: &CochainComplex, k: usize, args: &ComputeArgs) -> Result<DegreeReport> {
    Ok(if args.graded {
        DegreeReport::graded(cx, &compute_graded_cohomology(cx, k, args.homogeneity)?)
    } else {
        DegreeReport::ungraded(cx, &compute_cohomology(cx, k)?)
    })
}

/// Peak resident set size in kB, where the platform reports it.
fn peak_memory_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn compute(args: &ComputeArgs) -> Result<()> {
    let start = Instant::now();
    let (text, file) = load(&args.file, !args.skip_validate)?;
    let cx = file.complex(args.odd_convention)?;
    let m = cx.algebra().dim();
    let degrees: Vec<usize> = match args.order {
        Some(k) if k == 0 || k > m => bail!("--order must be between 1 and {m}"),
        Some(k) => vec![k],
        None => (1..=m).collect(),
    };
    let degrees = degrees
        .into_iter()
        .map(|k| degree_report(&cx, k, args))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| {
            if args.skip_validate {
                e.context("computation failed; validation was skipped and the input may violate the axioms")
            } else {
                e
            }
        })?;
    let report = Report {
        algebra: file.name.clone(),
        odd_convention: cx.convention().to_string(),
        provenance: Provenance {
            input_sha256: hex::encode(Sha256::digest(text.as_bytes())),
            version: env!("CARGO_PKG_VERSION").to_string(),
            flags: args.canonical_flags(),
        },
        degrees,
    };
    print!("{}", render_human(&report));
    if let Some(path) = &args.report {
        let json = serde_json::to_string_pretty(&report)?;
        std::fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    if args.timing {
        let mem = peak_memory_kb().map_or("unavailable".to_string(), |kb| format!("{:.1} MB", kb as f64 / 1024.0));
        eprintln!(
            "timing (this implementation): wall {:.3} s, peak memory {mem}",
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}

fn validate(path: &PathBuf) -> Result<()> {
    let (_, file) = load(path, true)?;
    println!(
        "{}: valid; algebra dim {}, acting dim {}, module dim {}",
        file.name,
        file.algebra.dim(),
        file.subalgebra.algebra().dim(),
        file.module.dim()
    );
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Compute(args) => compute(&args).map(|_| true),
        Command::Validate { file } => validate(&file).map(|_| true),
        Command::Examples { show: Some(name), .. } => {
            let (_, text) = suite::BUNDLED
                .iter()
                .find(|(n, _)| *n == name)
                .with_context(|| format!("no bundled algebra named {name:?}"))?;
            print!("{text}");
            Ok(true)
        }
        Command::Examples { list: true, .. } => {
            for (name, _) in suite::BUNDLED {
                println!("{name}");
            }
            Ok(true)
        }
        Command::Examples { .. } => suite::run(),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
