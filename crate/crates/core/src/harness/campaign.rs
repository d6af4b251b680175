//! Runs `(ring, n, check)` tasks and assembles a deterministic report.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::ring_file::{resolve_ring, RingDocument};
use crate::assoc::AssocAlgebra;
use crate::error::{Error, Result};
use crate::leibniz::{build_sl, complex_sizes};
use crate::scalar::ScalarDomain;
use crate::steinberg::{
    build_stl, hat_over, hl2_report_for, verify_calculus, verify_cocycle, verify_sharp_relations,
    SteinbergModel,
};

/// Default bound on the triples of the largest weight block of the `sl_n(R)` complex.
pub const DEFAULT_BUDGET: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Cocycle,
    Calculus,
    Sharp,
    Homology,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::Cocycle,
        Check::Calculus,
        Check::Sharp,
        Check::Homology,
    ];

    /// Parses one name; `all` expands to every check.
    pub fn parse_many(s: &str) -> Result<Vec<Check>> {
        if s == "all" {
            return Ok(Check::ALL.to_vec());
        }
        s.parse().map(|c| vec![c])
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cocycle" => Ok(Check::Cocycle),
            "calculus" => Ok(Check::Calculus),
            "sharp" => Ok(Check::Sharp),
            "homology" => Ok(Check::Homology),
            _ => Err(Error::Config(format!("unknown check `{s}`"))),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::Cocycle => "cocycle",
            Check::Calculus => "calculus",
            Check::Sharp => "sharp",
            Check::Homology => "homology",
        };
        f.write_str(s)
    }
}

/// A catalog ring over some scalars, or an inline document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Named { name: String, scalar: ScalarDomain },
    Inline(RingDocument),
}

impl RingSpec {
    /// `name@scalar`, e.g. `ground@f2` or `path/to/ring.json@q`.
    pub fn parse(s: &str) -> Result<Self> {
        let (name, scalar) = s
            .rsplit_once('@')
            .ok_or_else(|| Error::Config(format!("ring `{s}` must be written name@scalar")))?;
        Ok(RingSpec::Named {
            name: name.to_string(),
            scalar: ScalarDomain::parse(scalar)?,
        })
    }

    pub fn resolve(&self) -> Result<AssocAlgebra> {
        match self {
            RingSpec::Named { name, scalar } => resolve_ring(name, *scalar),
            RingSpec::Inline(doc) => doc.to_algebra(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub rings: Vec<RingSpec>,
    pub ns: Vec<usize>,
    pub checks: Vec<Check>,
    pub output: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    /// worker threads; `None` uses the rayon default
    pub jobs: Option<usize>,
    pub budget: usize,
    /// include wall-clock durations (makes reports differ between runs)
    pub timings: bool,
}

impl CampaignConfig {
    pub fn new(rings: Vec<RingSpec>, ns: Vec<usize>, checks: Vec<Check>) -> Self {
        CampaignConfig {
            rings,
            ns,
            checks,
            output: None,
            csv: None,
            jobs: None,
            budget: DEFAULT_BUDGET,
            timings: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rings.is_empty() {
            return Err(Error::Config("no rings requested".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::Config("no checks requested".into()));
        }
        if self.ns.is_empty() {
            return Err(Error::Config("no matrix sizes requested".into()));
        }
        if let Some(n) = self.ns.iter().find(|n| !(3..=5).contains(*n)) {
            return Err(Error::Config(format!("n = {n} is not one of 3, 4, 5")));
        }
        if self.jobs == Some(0) {
            return Err(Error::Config("--jobs must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// the check does not apply (e.g. no cocycle for n = 5)
    Skipped,
    /// over the tensor budget
    Refused,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaskEntry {
    pub ring: String,
    pub scalar: String,
    pub n: usize,
    pub check: Check,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u128>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub refused: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub passed: bool,
    pub summary: Summary,
    pub entries: Vec<TaskEntry>,
}

impl CampaignReport {
    fn from_entries(mut entries: Vec<TaskEntry>) -> Self {
        entries.sort_by(|a, b| {
            (&a.ring, &a.scalar, a.n, a.check).cmp(&(&b.ring, &b.scalar, b.n, b.check))
        });
        let mut s = Summary {
            total: entries.len(),
            ..Summary::default()
        };
        for e in &entries {
            match e.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
                Status::Refused => s.refused += 1,
                Status::Error => s.errors += 1,
            }
        }
        CampaignReport {
            passed: s.failed + s.refused + s.errors == 0,
            summary: s,
            entries,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// `ring,scalar,n,predicted,computed,status` for the homology entries.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ring,scalar,n,predicted,computed,status\n");
        for e in self.entries.iter().filter(|e| e.check == Check::Homology) {
            let q = |s: &Option<String>| format!("\"{}\"", s.clone().unwrap_or_default());
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                e.ring,
                e.scalar,
                e.n,
                q(&e.predicted),
                q(&e.computed),
                serde_json::to_value(e.status).unwrap().as_str().unwrap()
            ));
        }
        out
    }

    /// 0 when everything passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

struct Task<'a> {
    ring: &'a AssocAlgebra,
    n: usize,
    checks: &'a [Check],
}

fn entry(r: &AssocAlgebra, n: usize, check: Check, status: Status) -> TaskEntry {
    TaskEntry {
        ring: r.name().to_string(),
        scalar: r.domain().code(),
        n,
        check,
        status,
        computed: None,
        predicted: None,
        witness: None,
        detail: None,
        duration_ms: None,
    }
}

fn pass_fail(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn run_check(
    task: &Task,
    model: &std::result::Result<SteinbergModel, String>,
    check: Check,
) -> TaskEntry {
    let (r, n) = (task.ring, task.n);
    let mut e = entry(r, n, check, Status::Pass);
    if matches!(check, Check::Cocycle | Check::Sharp) && n == 5 {
        e.status = Status::Skipped;
        e.detail = Some("defined for n = 3 and n = 4 only".into());
        return e;
    }
    if check == Check::Cocycle {
        match verify_cocycle(n, r) {
            Ok(rep) => {
                e.status = pass_fail(rep.passed);
                e.witness = rep.witness;
                e.detail = Some(format!(
                    "{} triples evaluated, {} vacuous",
                    rep.evaluated, rep.vacuous
                ));
            }
            Err(err) => {
                e.status = Status::Error;
                e.detail = Some(err.to_string());
            }
        }
        return e;
    }
    let model = match model {
        Ok(m) => m,
        Err(msg) => {
            e.status = Status::Error;
            e.detail = Some(msg.clone());
            return e;
        }
    };
    match check {
        Check::Calculus => {
            let rep = verify_calculus(model);
            e.status = pass_fail(rep.passed);
            e.witness = rep.first_failure();
            e.detail = Some(format!(
                "{} cases",
                rep.checks.iter().map(|c| c.cases).sum::<usize>()
            ));
        }
        Check::Sharp => match hat_over(model.clone()) {
            Ok(hat) => {
                let rep = verify_sharp_relations(&hat);
                e.status = pass_fail(rep.passed);
                e.witness = rep.first_failure();
                e.detail = Some(format!("dimension {}", hat.dim()));
            }
            Err(Error::TorsionQuotient(t)) => {
                e.status = Status::Skipped;
                e.detail = Some(format!("W has torsion {t:?}; no structure-constant model"));
            }
            Err(err) => {
                e.status = Status::Error;
                e.detail = Some(err.to_string());
            }
        },
        Check::Homology => match hl2_report_for(model) {
            Ok(rep) => {
                e.status = pass_fail(rep.passed());
                e.computed = Some(rep.computed.clone());
                e.predicted = Some(rep.predicted.clone());
                e.detail = Some(format!(
                    "HL2(sl) = {}, HH1 = {}, dim N = {}",
                    rep.sl_hl2, rep.hh1, rep.n_rank
                ));
                if !rep.passed() {
                    e.witness = Some(format!("{rep:?}"));
                }
            }
            Err(err) => {
                e.status = Status::Error;
                e.detail = Some(err.to_string());
            }
        },
        Check::Cocycle => unreachable!(),
    }
    e
}

fn run_task(task: &Task, budget: usize, timings: bool) -> Vec<TaskEntry> {
    let (r, n) = (task.ring, task.n);
    let sizes = build_sl(n, r).map(|sl| complex_sizes(&sl.algebra));
    if let Ok(s) = &sizes {
        if s.max_block_triples > budget {
            return task
                .checks
                .iter()
                .map(|&c| {
                    let mut e = entry(r, n, c, Status::Refused);
                    e.detail = Some(
                        Error::Budget {
                            size: s.max_block_triples,
                            limit: budget,
                        }
                        .to_string(),
                    );
                    e
                })
                .collect();
        }
    }
    let needs_model = task.checks.iter().any(|c| *c != Check::Cocycle);
    let start = Instant::now();
    let model = if needs_model {
        build_stl(n, r).map_err(|e| e.to_string())
    } else {
        Err("not built".into())
    };
    let build_ms = start.elapsed().as_millis();
    task.checks
        .iter()
        .map(|&c| {
            let t = Instant::now();
            let mut e = run_check(task, &model, c);
            if timings {
                let model_ms = if c == Check::Cocycle { 0 } else { build_ms };
                e.duration_ms = Some(t.elapsed().as_millis() + model_ms);
            }
            e
        })
        .collect()
}

/// Resolves the rings, then runs every `(ring, n)` group in parallel.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let rings = config
        .rings
        .iter()
        .map(RingSpec::resolve)
        .collect::<Result<Vec<_>>>()?;
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    let mut ns = config.ns.clone();
    ns.sort();
    ns.dedup();
    let tasks: Vec<Task> = rings
        .iter()
        .flat_map(|r| ns.iter().map(move |&n| (r, n)))
        .map(|(ring, n)| Task {
            ring,
            n,
            checks: &checks,
        })
        .collect();
    let run = || -> Vec<TaskEntry> {
        tasks
            .par_iter()
            .flat_map_iter(|t| run_task(t, config.budget, config.timings))
            .collect()
    };
    let entries = match config.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?
            .install(run),
        None => run(),
    };
    let report = CampaignReport::from_entries(entries);
    if let Some(path) = &config.output {
        std::fs::write(path, report.to_json()? + "\n")?;
    }
    if let Some(path) = &config.csv {
        std::fs::write(path, report.to_csv())?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(ring: &str, n: usize, check: Check) -> CampaignConfig {
        CampaignConfig::new(vec![RingSpec::parse(ring).unwrap()], vec![n], vec![check])
    }

    #[test]
    fn homology_entries() {
        let rep = run_campaign(&config("ground@f2", 4, Check::Homology)).unwrap();
        assert_eq!(rep.entries.len(), 1);
        assert_eq!(rep.entries[0].status, Status::Pass);
        assert_eq!(rep.entries[0].computed.as_deref(), Some("F2^6"));
        let rep = run_campaign(&config("mat2@f2", 4, Check::Homology)).unwrap();
        assert_eq!(rep.entries[0].predicted.as_deref(), Some("F2^0"));
        assert!(rep.passed);
    }

    #[test]
    fn budget_refuses() {
        let mut c = config("ground@f2", 4, Check::Homology);
        c.budget = 10;
        let rep = run_campaign(&c).unwrap();
        assert_eq!(rep.entries[0].status, Status::Refused);
        assert_eq!(rep.exit_code(), 1);
    }

    #[test]
    fn invalid_configs() {
        let mut c = config("ground@f2", 4, Check::Homology);
        c.ns = vec![6];
        assert!(matches!(run_campaign(&c), Err(Error::Config(_))));
        assert!(RingSpec::parse("ground").is_err());
        assert!(Check::parse_many("everything").is_err());
        assert_eq!(Check::parse_many("all").unwrap().len(), 4);
    }
}
