//! Separator cost benchmark: recursively separate every instance down to
//! small pieces and record each call.

use std::io::Write;
use std::path::PathBuf;

use geosep_core::solvers::Decomposition;
use rayon::prelude::*;

use crate::instance::{InstanceFile, Items};
use crate::{worker_count, CliError};

pub const HEADER: [&str; 9] = ["file", "depth", "n", "mu", "l", "cost", "route", "ratio", "valid"];

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub file: String,
    pub depth: usize,
    pub n: usize,
    pub mu: usize,
    pub l: usize,
    pub cost: usize,
    pub route: String,
    /// `cost / sqrt(max(l, 1) * mu)`.
    pub ratio: f64,
    /// Whether the separator passed the full contract check.
    pub valid: bool,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchSummary {
    pub files: usize,
    pub rows: usize,
    pub max_ratio: f64,
    pub violations: usize,
}

pub fn bound_ratio(cost: usize, l: usize, mu: usize) -> f64 {
    cost as f64 / ((l.max(1) * mu.max(1)) as f64).sqrt()
}

/// Separates components until their measure is at most `leaf_mu`, one row
/// per separator call, in depth-first order.
pub fn separator_rows(inst: &InstanceFile, label: &str, leaf_mu: usize) -> Result<Vec<BenchRow>, CliError> {
    let dec = match &inst.items {
        Items::Rects(r) => Decomposition::for_rects(r),
        Items::Points(p) => Decomposition::for_points(p),
    };
    let mut rows = Vec::new();
    let mut stack = vec![((0..inst.len()).collect::<Vec<_>>(), 0usize)];
    while let Some((subset, depth)) = stack.pop() {
        for comp in dec.components(&subset).into_iter().rev() {
            let mu = dec.measure_of(&comp);
            if mu <= leaf_mu.max(1) {
                continue;
            }
            let (res, l) = dec.separate(&comp)?;
            let valid = dec.validate(&comp, &res).is_ok();
            rows.push(BenchRow {
                file: label.to_string(),
                depth,
                n: comp.len(),
                mu,
                l,
                cost: res.cost,
                route: res.route.as_str().to_string(),
                ratio: bound_ratio(res.cost, l, mu),
                valid,
            });
            stack.push((res.side_b.into_vec(), depth + 1));
            stack.push((res.side_a.into_vec(), depth + 1));
        }
    }
    Ok(rows)
}

pub fn write_rows<W: Write>(out: W, rows: &[BenchRow]) -> Result<BenchSummary, CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    let mut summary = BenchSummary {
        rows: rows.len(),
        ..BenchSummary::default()
    };
    let mut files = std::collections::BTreeSet::new();
    for r in rows {
        files.insert(r.file.as_str());
        summary.max_ratio = summary.max_ratio.max(r.ratio);
        summary.violations += usize::from(!r.valid);
        w.write_record([
            r.file.clone(),
            r.depth.to_string(),
            r.n.to_string(),
            r.mu.to_string(),
            r.l.to_string(),
            r.cost.to_string(),
            r.route.clone(),
            format!("{:.6}", r.ratio),
            r.valid.to_string(),
        ])?;
    }
    summary.files = files.len();
    if !rows.is_empty() {
        w.write_record([
            "summary".to_string(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            format!("{:.6}", summary.max_ratio),
            (summary.violations == 0).to_string(),
        ])?;
    }
    w.flush().map_err(|e| CliError::Io {
        path: "<benchmark output>".into(),
        source: e,
    })?;
    Ok(summary)
}

/// Runs every file matching `pattern` (sorted by path) on a worker pool
/// and writes the CSV table to `out`.
pub fn bench_separator<W: Write>(pattern: &str, leaf_mu: usize, out: W) -> Result<BenchSummary, CliError> {
    let mut paths: Vec<PathBuf> = glob::glob(pattern)
        .map_err(|e| CliError::Pattern(e.to_string()))?
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Pattern(e.to_string()))?;
    paths.sort();
    let run = || -> Result<Vec<Vec<BenchRow>>, CliError> {
        paths
            .par_iter()
            .map(|p| {
                let inst = InstanceFile::read(p)?;
                separator_rows(&inst, &p.display().to_string(), leaf_mu)
            })
            .collect()
    };
    let per_file = match worker_count() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Params(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let rows: Vec<BenchRow> = per_file.into_iter().flatten().collect();
    write_rows(out, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GenerateParams, Generator};
    use crate::instance::Kind;

    #[test]
    fn chain_rows_cost_one() {
        let inst = generate(&GenerateParams::new(Kind::Rects, 30, 0, Generator::Chain { vertical: false, step: 0.75 })).unwrap();
        let rows = separator_rows(&inst, "chain", 1).unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r.cost == 1 && r.valid));
    }

    #[test]
    fn empty_table_has_only_header() {
        let mut buf = Vec::new();
        let summary = write_rows(&mut buf, &[]).unwrap();
        assert_eq!(summary.rows, 0);
        assert_eq!(String::from_utf8(buf).unwrap(), "file,depth,n,mu,l,cost,route,ratio,valid\n");
    }

    #[test]
    fn ratio_uses_at_least_one_strip_gap() {
        assert_eq!(bound_ratio(2, 0, 4), 1.0);
        assert_eq!(bound_ratio(3, 1, 9), 1.0);
    }
}
