//! Solver dispatch, post-hoc checks and run reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use geosep_core::geometry::{format_decimal, rect_intersection_graph};
use geosep_core::oracles::{brute_disccover, brute_mis, brute_pierce};
use geosep_core::separator::SeparatorDiagnostic;
use geosep_core::solvers::{
    disccover_exact_traced, disccover_ptas_traced, mis_exact_traced, mis_ptas_traced, pierce_exact_traced,
    pierce_ptas_traced, verify_disc_cover, verify_independent, verify_piercing, TraceEvent,
};
use geosep_core::{Disc, SolveConfig};
use serde::Serialize;
use serde_json::{json, Value};

use crate::instance::{InstanceFile, Items, Kind};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverKind {
    MisExact,
    MisPtas,
    PierceExact,
    PiercePtas,
    CoverExact,
    CoverPtas,
}

impl SolverKind {
    pub const ALL: [SolverKind; 6] = [
        SolverKind::MisExact,
        SolverKind::MisPtas,
        SolverKind::PierceExact,
        SolverKind::PiercePtas,
        SolverKind::CoverExact,
        SolverKind::CoverPtas,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SolverKind::MisExact => "mis-exact",
            SolverKind::MisPtas => "mis-ptas",
            SolverKind::PierceExact => "pierce-exact",
            SolverKind::PiercePtas => "pierce-ptas",
            SolverKind::CoverExact => "cover-exact",
            SolverKind::CoverPtas => "cover-ptas",
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            SolverKind::CoverExact | SolverKind::CoverPtas => Kind::Points,
            _ => Kind::Rects,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SolverKind::MisExact | SolverKind::PierceExact | SolverKind::CoverExact)
    }

    pub fn maximizes(&self) -> bool {
        matches!(self, SolverKind::MisExact | SolverKind::MisPtas)
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolverKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| CliError::Params(format!("unknown solver {s:?}")))
    }
}

/// Whether `value` meets the solver's promise against the optimum `opt`:
/// equality for exact solvers, `ceil((1 - eps) opt)` from below for the
/// maximization scheme and `floor((1 + eps) opt)` from above otherwise.
pub fn within_guarantee(solver: SolverKind, value: usize, opt: usize, epsilon: f64) -> bool {
    const SLACK: f64 = 1e-9;
    if solver.is_exact() {
        value == opt
    } else if solver.maximizes() {
        value as f64 >= ((1.0 - epsilon) * opt as f64 - SLACK).ceil()
    } else {
        value as f64 <= ((1.0 + epsilon) * opt as f64 + SLACK).floor()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunOptions {
    pub solver: SolverKind,
    pub config: SolveConfig,
    pub seed: u64,
    pub oracle_check: bool,
    /// Print each separator call to stderr as it happens.
    pub trace: bool,
}

impl RunOptions {
    pub fn new(solver: SolverKind) -> Self {
        Self {
            solver,
            config: SolveConfig::default(),
            seed: 0,
            oracle_check: false,
            trace: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigReport {
    pub epsilon: f64,
    pub t0: usize,
    pub c0: f64,
    pub enum_budget_factor: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub depth: usize,
    pub n: usize,
    pub mu: usize,
    pub l: usize,
    pub route: String,
    pub cost: usize,
}

impl From<&TraceEvent> for TraceRow {
    fn from(e: &TraceEvent) -> Self {
        Self {
            depth: e.depth,
            n: e.n,
            mu: e.mu,
            l: e.length,
            route: e.route.as_str().to_string(),
            cost: e.cost,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub value: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub solver: String,
    pub config: ConfigReport,
    pub n: usize,
    pub value: usize,
    pub wall_time_ms: f64,
    pub trace: Vec<TraceRow>,
    pub feasible: bool,
    /// Present when an oracle check was requested and the instance was
    /// small enough for it.
    pub oracle: Option<OracleReport>,
    pub solution: Vec<Value>,
}

impl RunReport {
    /// A run is good when its solution is feasible and any oracle agrees.
    pub fn ok(&self) -> bool {
        self.feasible && self.oracle.as_ref().is_none_or(|o| o.agrees)
    }
}

fn disc_json(d: &Disc) -> Value {
    let (cx, cy) = d.center_approx();
    match d {
        Disc::Centered { .. } => json!({ "center": [cx, cy] }),
        Disc::ThroughPair { a, b, side } => json!({
            "center": [cx, cy],
            "through": [[format_decimal(a.x), format_decimal(a.y)], [format_decimal(b.x), format_decimal(b.y)]],
            "side": format!("{side:?}").to_lowercase(),
        }),
    }
}

/// The matching oracle's optimum, or `None` past its size limit.
pub fn oracle_value(solver: SolverKind, items: &Items) -> Option<usize> {
    match items {
        Items::Rects(rects) if solver.maximizes() => brute_mis(&rect_intersection_graph(rects)).ok().map(|w| w.size),
        Items::Rects(rects) => brute_pierce(rects).ok().map(|w| w.size),
        Items::Points(points) => brute_disccover(points).ok().map(|w| w.size),
    }
}

pub fn solve(inst: &InstanceFile, opts: &RunOptions) -> Result<RunReport, CliError> {
    let solver = opts.solver;
    if inst.kind() != solver.kind() {
        return Err(CliError::KindMismatch {
            solver: solver.to_string(),
            expected: solver.kind(),
            got: inst.kind(),
        });
    }
    let cfg = &opts.config;
    let mut trace = Vec::new();
    let echo = opts.trace;
    let mut tracer = |e: &TraceEvent| {
        let row = TraceRow::from(e);
        if echo {
            eprintln!(
                "depth={} n={} mu={} l={} route={} cost={}",
                row.depth, row.n, row.mu, row.l, row.route, row.cost
            );
        }
        trace.push(row);
    };
    let start = Instant::now();
    let (value, feasible, solution) = match (&inst.items, solver) {
        (Items::Rects(rects), SolverKind::MisExact | SolverKind::MisPtas) => {
            let s = if solver == SolverKind::MisExact {
                mis_exact_traced(rects, cfg, &mut tracer)?
            } else {
                mis_ptas_traced(rects, cfg, &mut tracer)?
            };
            let feasible = verify_independent(rects, s.chosen.as_slice());
            (s.chosen.len(), feasible, s.chosen.iter().map(Value::from).collect())
        }
        (Items::Rects(rects), _) => {
            let s = if solver == SolverKind::PierceExact {
                pierce_exact_traced(rects, cfg, &mut tracer)?
            } else {
                pierce_ptas_traced(rects, cfg, &mut tracer)?
            };
            let feasible = verify_piercing(rects, &s.points);
            let sol = s.points.iter().map(|p| json!([format_decimal(p.x), format_decimal(p.y)])).collect();
            (s.points.len(), feasible, sol)
        }
        (Items::Points(points), _) => {
            let s = if solver == SolverKind::CoverExact {
                disccover_exact_traced(points, cfg, &mut tracer)?
            } else {
                disccover_ptas_traced(points, cfg, &mut tracer)?
            };
            let feasible = verify_disc_cover(points, &s.discs);
            (s.discs.len(), feasible, s.discs.iter().map(disc_json).collect())
        }
    };
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let oracle = if opts.oracle_check {
        oracle_value(solver, &inst.items).map(|opt| OracleReport {
            value: opt,
            agrees: within_guarantee(solver, value, opt, cfg.epsilon),
        })
    } else {
        None
    };
    Ok(RunReport {
        solver: solver.to_string(),
        config: ConfigReport {
            epsilon: cfg.epsilon,
            t0: cfg.base_threshold,
            c0: cfg.ptas_leaf_constant,
            enum_budget_factor: cfg.enum_budget_factor,
            seed: opts.seed,
        },
        n: inst.len(),
        value,
        wall_time_ms,
        trace,
        feasible,
        oracle,
        solution,
    })
}

/// The instance plus the failing subproblem's graph, cover and measure, in
/// the instance file format.
pub fn diagnostic_dump(inst: &InstanceFile, diag: &SeparatorDiagnostic) -> String {
    let mut dumped = inst.clone();
    let parts = |ps: &[geosep_core::VertexSet]| -> Value { ps.iter().map(|p| Value::from(p.as_slice().to_vec())).collect() };
    dumped.meta.params.insert(
        "separator_failure".to_string(),
        json!({
            "vertex_count": diag.vertex_count,
            "edges": diag.edges,
            "g1_parts": parts(&diag.g1_parts),
            "measure_parts": parts(&diag.measure_parts),
        }),
    );
    dumped.to_jsonl()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GenerateParams, Generator};

    #[test]
    fn solver_names_round_trip() {
        for k in SolverKind::ALL {
            assert_eq!(k.as_str().parse::<SolverKind>().unwrap(), k);
        }
        assert!("mis".parse::<SolverKind>().is_err());
    }

    #[test]
    fn guarantees() {
        assert!(within_guarantee(SolverKind::MisPtas, 5, 10, 0.5));
        assert!(!within_guarantee(SolverKind::MisPtas, 4, 10, 0.5));
        assert!(within_guarantee(SolverKind::PiercePtas, 15, 10, 0.5));
        assert!(!within_guarantee(SolverKind::CoverPtas, 16, 10, 0.5));
        // floor(1.3 * 10) must be 13 despite rounding in 1.3 * 10.
        assert!(within_guarantee(SolverKind::CoverPtas, 13, 10, 0.3));
        assert!(within_guarantee(SolverKind::MisPtas, 7, 10, 0.3));
        assert!(!within_guarantee(SolverKind::PierceExact, 3, 2, 0.5));
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let inst = generate(&GenerateParams::new(Kind::Points, 3, 0, Generator::Uniform { width: 2.0, height: 2.0 })).unwrap();
        let err = solve(&inst, &RunOptions::new(SolverKind::MisExact)).unwrap_err();
        assert!(matches!(err, CliError::KindMismatch { .. }));
        assert_eq!(err.exit_code(), 4);
    }

    #[test]
    fn report_with_oracle() {
        let inst = generate(&GenerateParams::new(Kind::Rects, 10, 3, Generator::Uniform { width: 3.0, height: 3.0 })).unwrap();
        for solver in [SolverKind::MisExact, SolverKind::MisPtas, SolverKind::PierceExact, SolverKind::PiercePtas] {
            let opts = RunOptions {
                oracle_check: true,
                ..RunOptions::new(solver)
            };
            let report = solve(&inst, &opts).unwrap();
            assert!(report.ok(), "{solver}: {report:?}");
            assert_eq!(report.solution.len(), report.value);
        }
    }
}
