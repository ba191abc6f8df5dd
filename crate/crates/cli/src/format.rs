//! Text formats.
//!
//! Demand files:
//!
//! ```text
//! edp 1
//! n 3
//! e a1 b1 2
//! e a2 a3 1
//! ```
//!
//! Realization files hold one `path <label> <v0> … <vk>` line per demand
//! instance. Labels number the instances of the demand file in line order,
//! copy by copy. `#` starts a comment in both formats.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use edp_core::{DemandGraph, Realization, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn vertex(line: usize, s: &str, n: u32) -> Result<VertexId, FormatError> {
    let v = VertexId::parse(s).ok_or_else(|| err(line, format!("bad vertex `{s}`")))?;
    if !v.in_range(n) {
        return Err(err(line, format!("vertex {v} out of range for n = {n}")));
    }
    Ok(v)
}

pub fn parse_demand(text: &str) -> Result<DemandGraph, FormatError> {
    let mut it = lines(text);
    match it.next() {
        Some((_, w)) if w == ["edp", "1"] => {}
        Some((l, w)) => return Err(err(l, format!("expected `edp 1`, found `{}`", w.join(" ")))),
        None => return Err(err(1, "empty file")),
    }
    let n = match it.next() {
        Some((l, w)) if w.len() == 2 && w[0] == "n" => {
            let n: u32 = w[1].parse().map_err(|_| err(l, format!("bad n `{}`", w[1])))?;
            if n == 0 {
                return Err(err(l, "n must be positive"));
            }
            n
        }
        Some((l, _)) => return Err(err(l, "expected `n <int>`")),
        None => return Err(err(2, "missing `n` line")),
    };
    let mut d = DemandGraph::new(n).expect("n > 0");
    let mut seen = BTreeSet::new();
    for (l, w) in it {
        if w.len() != 4 || w[0] != "e" {
            return Err(err(l, format!("expected `e <u> <v> <mult>`, found `{}`", w.join(" "))));
        }
        let u = vertex(l, w[1], n)?;
        let v = vertex(l, w[2], n)?;
        if u == v {
            return Err(err(l, format!("loop at {u}")));
        }
        let m: u32 = w[3].parse().map_err(|_| err(l, format!("bad multiplicity `{}`", w[3])))?;
        if m == 0 {
            return Err(err(l, "multiplicity must be positive"));
        }
        // a second line for the same pair would make labels ambiguous
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(l, format!("pair {u} {v} listed twice")));
        }
        d.add_edge(u, v, m).map_err(|e| err(l, e.to_string()))?;
    }
    Ok(d)
}

pub fn write_demand(d: &DemandGraph) -> String {
    let mut s = format!("edp 1\nn {}\n", d.n());
    for e in d.edges() {
        writeln!(s, "e {} {} {}", e.u, e.v, e.multiplicity).unwrap();
    }
    s
}

/// Paths may come in any label order; vertex names are not range-checked
/// here, the verifier does that against the demand graph.
pub fn parse_realization(text: &str) -> Result<Realization, FormatError> {
    let mut r = Realization::new();
    for (l, w) in lines(text) {
        if w[0] != "path" || w.len() < 3 {
            return Err(err(l, format!("expected `path <label> <v0> …`, found `{}`", w.join(" "))));
        }
        let label: u32 = w[1].parse().map_err(|_| err(l, format!("bad label `{}`", w[1])))?;
        let path = w[2..]
            .iter()
            .map(|s| VertexId::parse(s).ok_or_else(|| err(l, format!("bad vertex `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if r.paths.insert(label, path).is_some() {
            return Err(err(l, format!("label {label} given twice")));
        }
    }
    Ok(r)
}

pub fn write_realization(r: &Realization) -> String {
    let mut s = String::new();
    for (label, p) in &r.paths {
        write!(s, "path {label}").unwrap();
        for v in p {
            write!(s, " {v}").unwrap();
        }
        s.push('\n');
    }
    s
}
