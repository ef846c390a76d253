//! Batch experiment plans: build posets, run solvers, compare with expected
//! values, and report a pass/fail table.

use std::fmt::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::decomposition::{cover_graph, pathwidth_exact, treewidth_exact, WIDTH_DP_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::generators::{split, split_in_place, Family, GeneratorSpec, DEFAULT_SIZE_BUDGET};
use crate::pipeline::ldim_from_pathwidth;
use crate::poset::Poset;
use crate::random::seeded_poset;
use crate::solvers::{bdim_exact_with, dim_exact_with, ldim_exact_with, SolverOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Family { family: Family, params: Vec<usize> },
    Random { seed: u64, min: usize, max: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    #[default]
    None,
    Dual,
    Split,
    SplitInPlace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operation {
    Size,
    Height,
    Width,
    Dim,
    Ldim,
    Bdim,
    Treewidth,
    Pathwidth,
    /// μ of the verified path-width pipeline family.
    PipelineMu,
    /// 1 when the poset is isomorphic to the given family member, else 0.
    IsomorphicTo { family: Family, params: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Equals(usize),
    AtMost(usize),
    AtLeast(usize),
}

impl Expectation {
    pub fn holds(self, v: usize) -> bool {
        match self {
            Expectation::Equals(e) => v == e,
            Expectation::AtMost(e) => v <= e,
            Expectation::AtLeast(e) => v >= e,
        }
    }
}

impl std::fmt::Display for Expectation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expectation::Equals(e) => write!(f, "= {e}"),
            Expectation::AtMost(e) => write!(f, "<= {e}"),
            Expectation::AtLeast(e) => write!(f, ">= {e}"),
        }
    }
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// A published theorem or stated value.
    Published,
    /// Computed independently (oracle, hand enumeration, other solver).
    Computed,
    /// Immediate from the definitions.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanRow {
    pub id: String,
    pub source: Source,
    #[serde(default)]
    pub transform: Transform,
    pub operation: Operation,
    pub expect: Expectation,
    pub basis: Basis,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentPlan {
    pub name: String,
    pub rows: Vec<PlanRow>,
}

impl ExperimentPlan {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// A named built-in plan.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "paper-table" => Some(paper_table()),
            "empty" => Some(ExperimentPlan { name: "empty".into(), rows: vec![] }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowResult {
    pub id: String,
    pub subject: String,
    pub operation: String,
    pub expect: Expectation,
    pub basis: Basis,
    pub observed: Option<usize>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub plan: String,
    pub rows: Vec<RowResult>,
    pub passed: usize,
    pub failed: usize,
}

impl ExperimentReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "plan {}: {} passed, {} failed", self.plan, self.passed, self.failed).unwrap();
        for r in &self.rows {
            let observed = r.observed.map_or_else(|| "-".to_string(), |v| v.to_string());
            write!(
                out,
                "{:<4} {:<30} {:<28} {:<16} observed {:<6} expect {:<8} {:?}",
                if r.pass { "PASS" } else { "FAIL" },
                r.id,
                r.subject,
                r.operation,
                observed,
                r.expect.to_string(),
                r.basis
            )
            .unwrap();
            if let Some(e) = &r.error {
                write!(out, "  error: {e}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Limits applied to every row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunLimits {
    pub solver: SolverOptions,
    pub size_budget: usize,
    pub d_max: usize,
}

impl Default for RunLimits {
    fn default() -> Self {
        RunLimits {
            solver: SolverOptions { max_elements: 64, node_budget: 50_000_000 },
            size_budget: DEFAULT_SIZE_BUDGET,
            d_max: 10,
        }
    }
}

fn build(source: &Source, transform: Transform, budget: usize) -> Result<(Poset, String)> {
    let (p, mut name) = match source {
        Source::Family { family, params } => {
            let spec = GeneratorSpec::new(*family, params.clone())?;
            (spec.build(budget)?, spec.to_string())
        }
        Source::Random { seed, min, max } => {
            if min > max || *max == 0 {
                return Err(Error::BadParameter(format!("random size range {min}..={max}")));
            }
            (seeded_poset(*seed, *min, *max), format!("random(seed={seed})"))
        }
    };
    let p = match transform {
        Transform::None => p,
        Transform::Dual => {
            name = format!("dual({name})");
            p.dual()
        }
        Transform::Split => {
            name = format!("split({name})");
            split(&p).0
        }
        Transform::SplitInPlace => {
            name = format!("split_in_place({name})");
            split_in_place(&p).0
        }
    };
    Ok((p, name))
}

fn evaluate(p: &Poset, op: &Operation, limits: &RunLimits) -> Result<usize> {
    let width_dp = |p: &Poset| {
        if p.len() > WIDTH_DP_MAX_VERTICES {
            return Err(Error::BudgetExceeded(format!("width DP accepts at most {WIDTH_DP_MAX_VERTICES} vertices")));
        }
        Ok(cover_graph(p))
    };
    match op {
        Operation::Size => Ok(p.len()),
        Operation::Height => Ok(p.height()),
        Operation::Width => Ok(p.width().width),
        Operation::Dim => Ok(dim_exact_with(p, limits.d_max, limits.solver)?.value),
        Operation::Ldim => Ok(ldim_exact_with(p, limits.d_max, limits.solver)?.value),
        Operation::Bdim => Ok(bdim_exact_with(p, limits.d_max, limits.solver)?.value),
        Operation::Treewidth => Ok(treewidth_exact(&width_dp(p)?, p.len())?.0),
        Operation::Pathwidth => Ok(pathwidth_exact(&width_dp(p)?, p.len())?.0),
        Operation::PipelineMu => Ok(ldim_from_pathwidth(p)?.mu),
        Operation::IsomorphicTo { family, params } => {
            let other = GeneratorSpec::new(*family, params.clone())?.build(limits.size_budget)?;
            Ok(usize::from(p.is_isomorphic(&other).is_some()))
        }
    }
}

fn op_name(op: &Operation) -> String {
    match op {
        Operation::IsomorphicTo { family, params } => {
            let params: Vec<String> = params.iter().map(|p| p.to_string()).collect();
            format!("iso {}({})", family.name(), params.join(","))
        }
        other => serde_json::to_value(other)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_else(|| format!("{other:?}")),
    }
}

fn run_row(row: &PlanRow, limits: &RunLimits) -> RowResult {
    let start = Instant::now();
    let built = build(&row.source, row.transform, limits.size_budget);
    let subject = built.as_ref().map_or_else(|_| format!("{:?}", row.source), |(_, n)| n.clone());
    let value = built.and_then(|(p, _)| evaluate(&p, &row.operation, limits));
    let (observed, error) = match value {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e.to_string())),
    };
    RowResult {
        id: row.id.clone(),
        subject,
        operation: op_name(&row.operation),
        expect: row.expect,
        basis: row.basis,
        pass: observed.is_some_and(|v| row.expect.holds(v)),
        observed,
        error,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Runs every row (concurrently) and reports in plan order.
pub fn run_experiments(plan: &ExperimentPlan, limits: &RunLimits) -> ExperimentReport {
    let rows: Vec<RowResult> = std::thread::scope(|s| {
        let handles: Vec<_> = plan.rows.iter().map(|row| s.spawn(move || run_row(row, limits))).collect();
        handles.into_iter().map(|h| h.join().expect("experiment rows do not panic")).collect()
    });
    let passed = rows.iter().filter(|r| r.pass).count();
    ExperimentReport { plan: plan.name.clone(), failed: rows.len() - passed, passed, rows }
}

fn paper_table() -> ExperimentPlan {
    use Basis::*;
    use Expectation::*;
    let fam = |family: Family, params: &[usize]| Source::Family { family, params: params.to_vec() };
    let mut rows = Vec::new();
    let mut row = |id: &str, source: Source, transform: Transform, operation: Operation, expect, basis| {
        rows.push(PlanRow { id: id.into(), source, transform, operation, expect, basis })
    };
    let none = Transform::None;
    for n in 2..=6 {
        row(&format!("dim-standard-{n}"), fam(Family::Standard, &[n]), none, Operation::Dim, Equals(n), Published);
    }
    for (n, v) in [(2, 2), (3, 3), (4, 3)] {
        row(&format!("ldim-standard-{n}"), fam(Family::Standard, &[n]), none, Operation::Ldim, Equals(v), Published);
    }
    for (n, v) in [(2, 2), (3, 3)] {
        row(&format!("bdim-standard-{n}"), fam(Family::Standard, &[n]), none, Operation::Bdim, Equals(v), Published);
    }
    for (k, d, v) in [(2, 2, 2), (2, 3, 3), (3, 2, 2)] {
        row(&format!("dim-chainproduct-{k}-{d}"), fam(Family::Chainproduct, &[k, d]), none, Operation::Dim, Equals(v), Published);
    }
    for w in [2, 3] {
        row(&format!("dim-pw-family-{w}"), fam(Family::PwFamily, &[w]), none, Operation::Dim, Equals(w + 1), Published);
    }
    for (n, l, b) in [(3, 2, 1), (4, 2, 2), (5, 2, 2), (6, 3, 3)] {
        row(&format!("ldim-interval-{n}"), fam(Family::Interval, &[n]), none, Operation::Ldim, Equals(l), Computed);
        row(&format!("bdim-interval-{n}"), fam(Family::Interval, &[n]), none, Operation::Bdim, Equals(b), Computed);
    }
    row("dim-interval-5", fam(Family::Interval, &[5]), none, Operation::Dim, AtLeast(3), Published);
    row("dim-split-standard-3", fam(Family::Standard, &[3]), Transform::Split, Operation::Dim, AtMost(4), Published);
    row("dim-split-in-place-standard-3", fam(Family::Standard, &[3]), Transform::SplitInPlace, Operation::Dim, AtMost(4), Published);
    row(
        "jmw-1-is-standard-3",
        fam(Family::Jmw, &[1]),
        none,
        Operation::IsomorphicTo { family: Family::Standard, params: vec![3] },
        Equals(1),
        Published,
    );
    row("treewidth-jmw-2", fam(Family::Jmw, &[2]), none, Operation::Treewidth, AtMost(3), Published);
    row("dim-jmw-2", fam(Family::Jmw, &[2]), none, Operation::Dim, AtLeast(3), Computed);
    for n in [3, 4] {
        row(&format!("pathwidth-kelly-{n}"), fam(Family::Kelly, &[n]), none, Operation::Pathwidth, AtMost(3), Published);
    }
    row("pipeline-chain-5", fam(Family::Chain, &[5]), none, Operation::PipelineMu, AtMost(3), Computed);
    row("pipeline-standard-3", fam(Family::Standard, &[3]), none, Operation::PipelineMu, AtLeast(3), Computed);
    ExperimentPlan { name: "paper-table".into(), rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_plan_passes() {
        let r = run_experiments(&ExperimentPlan::builtin("empty").unwrap(), &RunLimits::default());
        assert!(r.rows.is_empty() && r.all_passed());
    }

    #[test]
    fn wrong_expectation_is_a_failure_row() {
        let plan = ExperimentPlan {
            name: "negative".into(),
            rows: vec![PlanRow {
                id: "dim-s3".into(),
                source: Source::Family { family: Family::Standard, params: vec![3] },
                transform: Transform::None,
                operation: Operation::Dim,
                expect: Expectation::Equals(2),
                basis: Basis::Trivial,
            }],
        };
        let r = run_experiments(&plan, &RunLimits::default());
        assert_eq!((r.passed, r.failed), (0, 1));
        assert_eq!(r.rows[0].observed, Some(3));
    }

    #[test]
    fn plan_json_round_trip() {
        let plan = paper_table();
        let text = serde_json::to_string(&plan).unwrap();
        assert_eq!(ExperimentPlan::from_json(&text).unwrap(), plan);
        assert!(matches!(ExperimentPlan::from_json("{"), Err(Error::Parse(_))));
    }
}
