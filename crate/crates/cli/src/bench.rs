//! Timing runs over generated instances, written as CSV.

use std::io::Write;

use crate::generate::{generate, GenParams, Model};
use crate::solve::{solve, MethodChoice};

/// One CSV row; field order is the column order.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub n: u32,
    pub delta: usize,
    pub e: usize,
    pub method: &'static str,
    pub millis: f64,
    pub max_path_len: usize,
    pub outcome: &'static str,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<u32>,
    pub trials: usize,
    pub model: Model,
    pub max_degree: usize,
    pub edges: Option<usize>,
    pub method: MethodChoice,
    pub seed: u64,
}

/// Runs `trials` instances per size; instance `i` of size `n` uses seed
/// `seed + 1000·n + i`, so rows are reproducible one by one.
pub fn run(cfg: &BenchConfig) -> Vec<Row> {
    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        for i in 0..cfg.trials {
            let d = generate(&GenParams {
                n,
                edges: cfg.edges,
                max_degree: Some(cfg.max_degree),
                model: cfg.model,
                seed: cfg.seed.wrapping_add(1000 * n as u64).wrapping_add(i as u64),
            });
            let s = solve(&d, cfg.method);
            rows.push(Row {
                n,
                delta: d.max_degree(),
                e: d.edge_count(),
                method: s.report.method.name(),
                millis: s.report.micros.unwrap_or(0) as f64 / 1000.0,
                max_path_len: s.report.max_path_len,
                outcome: s.report.outcome.name(),
            });
        }
    }
    rows
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "Δ", "e", "method", "millis", "max_path_len", "outcome"])?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.delta.to_string(),
            r.e.to_string(),
            r.method.to_string(),
            format!("{:.3}", r.millis),
            r.max_path_len.to_string(),
            r.outcome.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Median of `millis` per size, in size order.
pub fn medians(rows: &[Row]) -> Vec<(u32, f64)> {
    let mut sizes: Vec<u32> = rows.iter().map(|r| r.n).collect();
    sizes.dedup();
    sizes
        .into_iter()
        .map(|n| {
            let mut t: Vec<f64> = rows.iter().filter(|r| r.n == n).map(|r| r.millis).collect();
            t.sort_by(f64::total_cmp);
            let mid = t.len() / 2;
            let m = if t.len() % 2 == 1 { t[mid] } else { (t[mid - 1] + t[mid]) / 2.0 };
            (n, m)
        })
        .collect()
}
