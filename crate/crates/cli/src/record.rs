//! One computation per (character, weight, module) and its flat record.

use std::time::Instant;

use anyhow::{bail, Result};
use qcoh_core::cohom::{cohomology, h1_vanishes_by_weights, CohomReport};
use qcoh_core::repmod::{build_verma, simple_module, GModule};
use qcoh_core::Sdim;
use serde::Serialize;

use crate::grid::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ModuleChoice {
    Verma,
    Simple,
}

impl ModuleChoice {
    pub fn name(self) -> &'static str {
        match self {
            ModuleChoice::Verma => "verma",
            ModuleChoice::Simple => "simple",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum What {
    H0,
    H1,
    Both,
}

/// Shared settings of a batch of computations.
#[derive(Clone, Debug)]
pub struct Job {
    pub what: What,
    pub method: String,
    pub route: String,
    pub budget: u128,
}

pub fn build_module(pt: &Point, which: ModuleChoice, route: &str, budget: u128) -> Result<GModule> {
    Ok(match which {
        ModuleChoice::Verma => build_verma(&pt.alg, &pt.chi, &pt.lam)?,
        ModuleChoice::Simple => simple_module(&pt.alg, &pt.chi, &pt.lam, route, budget)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub p: u32,
    pub chi_kind: String,
    pub chi_params: String,
    pub lambda1: String,
    pub lambda2: String,
    pub module: &'static str,
    pub field_degree: usize,
    pub dim: Option<usize>,
    pub h0: Option<Sdim>,
    pub h1: Option<Sdim>,
    pub method: String,
    pub expected: Option<Sdim>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub vanishes_by_weights: bool,
    pub ms: u128,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CohomReport>,
}

fn run(pt: &Point, which: ModuleChoice, job: &Job) -> Result<(GModule, CohomReport)> {
    let m = build_module(pt, which, &job.route, job.budget)?;
    let h1 = matches!(job.what, What::H1 | What::Both).then_some(job.method.as_str());
    let report = cohomology(&m, job.what != What::H1, h1)?;
    if let Some(s) = report.structure {
        if !s.all() {
            bail!("structural identities fail: {s:?}");
        }
    }
    Ok((m, report))
}

/// Computes one record; failures are recorded, not propagated.
pub fn compute_record(pt: &Point, which: ModuleChoice, job: &Job, keep_report: bool) -> Record {
    let start = Instant::now();
    let (a, b) = pt.lambda_text();
    let vanishes = h1_vanishes_by_weights(&pt.field, &pt.lam);
    let mut rec = Record {
        p: pt.p,
        chi_kind: serde_json::to_value(pt.chi.kind())
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
        chi_params: pt.chi.params(),
        lambda1: a,
        lambda2: b,
        module: which.name(),
        field_degree: pt.field.degree(),
        dim: None,
        h0: None,
        h1: None,
        method: job.method.clone(),
        expected: None,
        matches: false,
        vanishes_by_weights: vanishes,
        ms: 0,
        error: None,
        report: None,
    };
    match run(pt, which, job) {
        Ok((m, report)) => {
            rec.dim = Some(m.dim());
            rec.h0 = report.h0_sdim;
            rec.h1 = report.h1_sdim;
            rec.expected = report.paper_expected.or(report.paper_expected_h0);
            rec.matches = report.matches;
            let nonzero = [rec.h0, rec.h1].iter().flatten().any(|s| *s != Sdim::ZERO);
            if vanishes && nonzero {
                rec.error = Some("solver contradicts the weight criterion".into());
                rec.matches = false;
            }
            if keep_report {
                rec.report = Some(report);
            }
        }
        Err(e) => rec.error = Some(format!("{e:#}")),
    }
    rec.ms = start.elapsed().as_millis();
    rec
}

/// Writes records as CSV with the fixed column set.
pub fn write_csv<W: std::io::Write>(out: W, records: &[Record]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "p", "chi_kind", "chi_params", "lambda1", "lambda2", "module", "dim", "h0_even",
        "h0_odd", "h1_even", "h1_odd", "method", "expected_even", "expected_odd", "match", "ms",
    ])?;
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in records {
        w.write_record([
            r.p.to_string(),
            r.chi_kind.clone(),
            r.chi_params.clone(),
            r.lambda1.clone(),
            r.lambda2.clone(),
            r.module.to_string(),
            opt(r.dim),
            opt(r.h0.map(|s| s.even)),
            opt(r.h0.map(|s| s.odd)),
            opt(r.h1.map(|s| s.even)),
            opt(r.h1.map(|s| s.odd)),
            r.method.clone(),
            opt(r.expected.map(|s| s.even)),
            opt(r.expected.map(|s| s.odd)),
            if r.error.is_some() { "error".into() } else { r.matches.to_string() },
            r.ms.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// 1 if any record failed, 2 if any disagrees with the tables, else 0.
pub fn exit_code(records: &[Record]) -> u8 {
    if records.iter().any(|r| r.error.is_some()) {
        1
    } else if records.iter().any(|r| !r.matches) {
        2
    } else {
        0
    }
}
