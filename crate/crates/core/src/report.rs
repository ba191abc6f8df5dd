//! What a solver did. Wall time is filled in by callers that have a clock.

use core::fmt;

use crate::degree::DegreeConditions;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Edge,
    Deg1,
    Deg2,
    Oracle,
    MaxEdp,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Edge => "edge",
            Method::Deg1 => "deg1",
            Method::Deg2 => "deg2",
            Method::Oracle => "oracle",
            Method::MaxEdp => "maxedp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Realized,
    ConditionUnmet,
    MethodFailure,
    Infeasible,
    ScaleExceeded,
    InvalidInput,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Realized => "Realized",
            Outcome::ConditionUnmet => "ConditionUnmet",
            Outcome::MethodFailure => "MethodFailure",
            Outcome::Infeasible => "Infeasible",
            Outcome::ScaleExceeded => "ScaleExceeded",
            Outcome::InvalidInput => "InvalidInput",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub method: Method,
    pub n: u32,
    pub edges: usize,
    pub max_degree: usize,
    pub conditions: Option<DegreeConditions>,
    pub lifts: usize,
    pub synthetic_edges: usize,
    pub max_path_len: usize,
    /// Degree realizers: smallest list size minus what greedy needs.
    pub min_list_slack: Option<i64>,
    pub micros: Option<u64>,
    pub outcome: Outcome,
}

impl SolveReport {
    pub fn new(method: Method, n: u32, edges: usize, max_degree: usize) -> Self {
        SolveReport {
            method,
            n,
            edges,
            max_degree,
            conditions: None,
            lifts: 0,
            synthetic_edges: 0,
            max_path_len: 0,
            min_list_slack: None,
            micros: None,
            outcome: Outcome::MethodFailure,
        }
    }
}

impl fmt::Display for SolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "method={} n={} e={} Δ={} lifts={} synthetic={} max_path_len={} outcome={}",
            self.method,
            self.n,
            self.edges,
            self.max_degree,
            self.lifts,
            self.synthetic_edges,
            self.max_path_len,
            self.outcome
        )?;
        if let Some(c) = &self.conditions {
            write!(f, " condition=[{c}]")?;
        }
        if let Some(us) = self.micros {
            write!(f, " micros={us}")?;
        }
        Ok(())
    }
}
