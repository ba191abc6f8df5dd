//! Method dispatch with timing, shared by `realize`, `bench` and the tests.

use std::time::Instant;

use edp_core::{
    realize_deg1, realize_deg2, realize_edge, DegreeConditions, DegreeOptions, DegreeVariant, DemandGraph, Method,
    Outcome, Realization, SolveError, SolveReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Edge,
    Deg1,
    Deg2,
    /// `edge` when `e ≤ 2n − 3` and `Δ ≤ n`, else whichever degree
    /// condition holds.
    Auto,
}

#[derive(Debug, Clone)]
pub struct Solved {
    pub report: SolveReport,
    pub realization: Option<Realization>,
    pub error: Option<SolveError>,
}

impl Solved {
    pub fn realized(&self) -> bool {
        self.report.outcome == Outcome::Realized
    }
}

pub fn edge_applies(d: &DemandGraph) -> bool {
    let n = d.n() as usize;
    n >= 2 && d.edge_count() + 3 <= 2 * n && d.max_degree() <= n
}

/// The method `auto` picks, or `None` when no sufficient condition holds.
pub fn auto_method(d: &DemandGraph) -> Option<Method> {
    if edge_applies(d) {
        Some(Method::Edge)
    } else if DegreeConditions::evaluate(d, DegreeVariant::Deg1).satisfied {
        Some(Method::Deg1)
    } else if DegreeConditions::evaluate(d, DegreeVariant::Deg2).satisfied {
        Some(Method::Deg2)
    } else {
        None
    }
}

pub fn outcome_of(e: &SolveError) -> Outcome {
    match e {
        SolveError::ConditionUnmet(_) | SolveError::PreconditionViolation(_) => Outcome::ConditionUnmet,
        SolveError::ScaleExceeded(_) => Outcome::ScaleExceeded,
        SolveError::Graph(_) => Outcome::InvalidInput,
        SolveError::MethodFailure { .. } | SolveError::Internal(_) => Outcome::MethodFailure,
    }
}

pub fn solve(d: &DemandGraph, choice: MethodChoice) -> Solved {
    let method = match choice {
        MethodChoice::Edge => Method::Edge,
        MethodChoice::Deg1 => Method::Deg1,
        MethodChoice::Deg2 => Method::Deg2,
        MethodChoice::Auto => match auto_method(d) {
            Some(m) => m,
            None => {
                // report the weaker of the two failed conditions
                let c = DegreeConditions::evaluate(d, DegreeVariant::Deg1);
                let mut report = SolveReport::new(Method::Deg1, d.n(), d.edge_count(), d.max_degree());
                report.conditions = Some(c.clone());
                report.outcome = Outcome::ConditionUnmet;
                return Solved {
                    report,
                    realization: None,
                    error: Some(SolveError::ConditionUnmet(c)),
                };
            }
        },
    };
    let start = Instant::now();
    let result = match method {
        Method::Edge => realize_edge(d),
        Method::Deg1 => realize_deg1(d, DegreeOptions::default()),
        _ => realize_deg2(d, DegreeOptions::default()),
    };
    let micros = start.elapsed().as_micros() as u64;
    match result {
        Ok((r, mut report)) => {
            report.micros = Some(micros);
            Solved {
                report,
                realization: Some(r),
                error: None,
            }
        }
        Err(e) => {
            let mut report = SolveReport::new(method, d.n(), d.edge_count(), d.max_degree());
            if let SolveError::ConditionUnmet(c) = &e {
                report.conditions = Some(c.clone());
            }
            report.micros = Some(micros);
            report.outcome = outcome_of(&e);
            Solved {
                report,
                realization: None,
                error: Some(e),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::extremal_bundle;
    use edp_core::{verify_realization, VertexId as V};

    #[test]
    fn extremal_is_refused_by_edge() {
        let s = solve(&extremal_bundle(3), MethodChoice::Edge);
        assert_eq!(s.report.outcome, Outcome::ConditionUnmet);
        assert!(s.realization.is_none());
    }

    #[test]
    fn auto_picks_by_condition() {
        let d = DemandGraph::from_edges(4, [(V::a(1), V::b(1), 2)]).unwrap();
        assert_eq!(auto_method(&d), Some(Method::Edge));
        let edges: Vec<_> = (1..=13).map(|i| (V::a(i), V::b(i), 1)).chain([(V::a(1), V::b(2), 1)]).collect();
        let d = DemandGraph::from_edges(13, edges).unwrap();
        assert_eq!(auto_method(&d), Some(Method::Edge));
        let d = crate::generate::regular(&mut crate::generate::rng(1), 25, 2);
        assert_eq!(auto_method(&d), Some(Method::Deg1));
        let s = solve(&d, MethodChoice::Auto);
        assert!(s.realized());
        assert_eq!(verify_realization(&d, s.realization.as_ref().unwrap()), Ok(()));
        assert_eq!(auto_method(&extremal_bundle(3)), None);
        assert_eq!(solve(&extremal_bundle(3), MethodChoice::Auto).report.outcome, Outcome::ConditionUnmet);
    }
}
