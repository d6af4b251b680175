use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use stl_homology::harness::{run_campaign, CampaignConfig, Check, RingSpec, DEFAULT_BUDGET};
use stl_homology::ScalarDomain;

/// Certify HL2 of Steinberg Leibniz algebras and the identities behind it.
///
/// Exit status: 0 all checks pass, 1 some check fails, 2 usage or configuration error.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Catalog name (ground, dual, trunc3, group-c2, upper2, mat2, int) or a ring JSON file
    #[arg(long)]
    ring: String,
    /// f2, f3, f5 (any prime fP), q or z
    #[arg(long)]
    scalar: String,
    #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
    n: u8,
    /// cocycle, calculus, sharp, homology or all
    #[arg(long, default_value = "all")]
    check: String,
    /// JSON report path
    #[arg(long)]
    out: Option<PathBuf>,
    /// CSV summary of the homology rows
    #[arg(long)]
    csv: Option<PathBuf>,
    /// worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// refuse tasks whose largest tensor block exceeds this many triples
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// record wall-clock durations in the report
    #[arg(long)]
    timings: bool,
}

fn config(args: &Args) -> stl_homology::Result<CampaignConfig> {
    let scalar = ScalarDomain::parse(&args.scalar)?;
    let ring = RingSpec::Named {
        name: args.ring.clone(),
        scalar,
    };
    let mut c = CampaignConfig::new(
        vec![ring],
        vec![args.n as usize],
        Check::parse_many(&args.check)?,
    );
    c.output = args.out.clone();
    c.csv = args.csv.clone();
    c.jobs = args.jobs;
    c.budget = args.budget;
    c.timings = args.timings;
    Ok(c)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let report = match config(&args).and_then(|c| run_campaign(&c)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(2);
        }
    };
    for e in &report.entries {
        let mut line = format!(
            "{:<8} {}@{} n={} {}",
            format!("{:?}", e.status).to_lowercase(),
            e.ring,
            e.scalar,
            e.n,
            e.check
        );
        if let (Some(c), Some(p)) = (&e.computed, &e.predicted) {
            line.push_str(&format!(" computed={c} predicted={p}"));
        }
        if let Some(d) = &e.detail {
            line.push_str(&format!(" ({d})"));
        }
        println!("{line}");
        if let Some(w) = &e.witness {
            println!("         witness: {w}");
        }
    }
    let s = &report.summary;
    println!(
        "{} passed, {} failed, {} skipped, {} refused, {} errors",
        s.passed, s.failed, s.skipped, s.refused, s.errors
    );
    ExitCode::from(report.exit_code() as u8)
}
