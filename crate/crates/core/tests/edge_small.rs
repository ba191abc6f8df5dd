mod common;

use common::all_demands;
use edp_core::{edp_decide, realize_edge, verify_realization, EdpOutcome, SearchBudget, SolveError};

#[test]
fn every_small_instance_is_realized() {
    for n in 2..=3u32 {
        let max_e = 2 * n as usize - 3;
        let mut count = 0;
        for d in all_demands(n, max_e) {
            if d.max_degree() > n as usize {
                continue;
            }
            let (r, report) = realize_edge(&d).unwrap_or_else(|e| panic!("{e} on {d:?}"));
            assert_eq!(verify_realization(&d, &r), Ok(()), "{d:?}");
            assert_eq!(report.edges, d.edge_count());
            count += 1;
        }
        assert!(count > 0);
    }
}

#[test]
fn every_instance_on_four() {
    let mut failures = Vec::new();
    for d in all_demands(4, 5) {
        if d.max_degree() > 4 {
            continue;
        }
        match realize_edge(&d) {
            Ok((r, _)) => assert_eq!(verify_realization(&d, &r), Ok(())),
            Err(e) => failures.push(format!("{e} on {:?}", d.edges())),
        }
    }
    assert!(failures.is_empty(), "{} failures, first: {}", failures.len(), failures[0]);
}

#[test]
fn oracle_agrees_on_small_instances() {
    // n = 3, e ≤ 4: whatever the realizer accepts, the oracle must find
    for d in all_demands(3, 4) {
        let oracle = edp_decide(&d, &SearchBudget::default());
        assert_ne!(oracle, EdpOutcome::ScaleExceeded);
        if let Ok((r, _)) = realize_edge(&d) {
            assert_eq!(verify_realization(&d, &r), Ok(()));
            assert!(oracle.is_feasible(), "{d:?}");
        }
    }
}

#[test]
fn over_budget_instances_are_refused() {
    for d in all_demands(2, 2) {
        if d.edge_count() == 2 {
            assert!(matches!(realize_edge(&d), Err(SolveError::PreconditionViolation(_))));
        }
    }
}
