//! Verdicts and the machine-readable verification report.

use std::time::Instant;

use iboson_core::{find_check, CheckOutcome, CheckParams};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "iboson-report/1";

/// Check parameters as they appear in the report (mirrors the core params).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportParams {
    pub boxdims: (usize, usize, u32),
    pub n_max: usize,
    pub m_max: usize,
    pub order: u32,
    pub cap_m: usize,
    pub points: usize,
    pub seed: u64,
    pub weight: u32,
    pub mode_max: i64,
    pub mutate: bool,
}

impl From<&CheckParams> for ReportParams {
    fn from(p: &CheckParams) -> Self {
        ReportParams {
            boxdims: p.boxdims,
            n_max: p.n_max,
            m_max: p.m_max,
            order: p.order,
            cap_m: p.cap_m,
            points: p.points,
            seed: p.seed,
            weight: p.weight,
            mode_max: p.mode_max,
            mutate: p.mutate,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub params: ReportParams,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
}

/// The full report; `pass` is the conjunction of all verdicts.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub schema: String,
    pub seed: u64,
    pub threads: usize,
    pub checks: Vec<Verdict>,
    pub pass: bool,
}

/// One requested check: a known name plus its parameters.
#[derive(Clone, Debug)]
pub struct CheckRequest {
    pub name: String,
    pub params: CheckParams,
}

fn run_one(req: &CheckRequest) -> Verdict {
    let info = find_check(&req.name).expect("check names validated before dispatch");
    let start = Instant::now();
    let CheckOutcome { pass, witness } = (info.run)(&req.params);
    Verdict {
        name: info.name.to_string(),
        params: ReportParams::from(&req.params),
        pass,
        witness,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Runs the requested checks on `threads` worker threads. Checks are
/// independent jobs; verdicts come back in request order regardless of the
/// schedule, so reports are identical across thread counts (wall times
/// aside).
pub fn run_suite(requests: &[CheckRequest], threads: usize, seed: u64) -> Report {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let checks: Vec<Verdict> = pool.install(|| requests.par_iter().map(run_one).collect());
    let pass = checks.iter().all(|c| c.pass);
    Report {
        schema: SCHEMA.to_string(),
        seed,
        threads,
        checks,
        pass,
    }
}

/// Renders the human-readable lines (one per verdict plus a summary).
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    for v in &report.checks {
        let status = if v.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{} {} ({} ms)\n", status, v.name, v.millis));
        if let Some(w) = &v.witness {
            out.push_str(&format!("     witness: {}\n", w));
        }
    }
    let status = if report.pass { "PASS" } else { "FAIL" };
    out.push_str(&format!(
        "{}: {}/{} checks passed (seed {}, {} threads)\n",
        status,
        report.checks.iter().filter(|c| c.pass).count(),
        report.checks.len(),
        report.seed,
        report.threads
    ));
    out
}
