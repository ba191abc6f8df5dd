mod common;

use common::random_demand;
use edp_core::coloring::{abb_coloring, color_edges, greedy_color, is_proper, make_equitable, shannon_color};
use edp_core::{
    realize_deg1, realize_deg2, realize_edge, regularize, verify_realization, DegreeConditions, DegreeOptions,
    DegreeVariant, LabeledMultigraph, Lists, Part,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> ProptestConfig {
    // PROPTEST_CASES raises the count for soak runs
    let cases = std::env::var("PROPTEST_CASES").ok().and_then(|s| s.parse().ok()).unwrap_or(cases);
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn edge_realizer_within_budget(seed in any::<u64>(), n in 5u32..=30, fill in 0.5f64..=1.0, mono in 0.0f64..=1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = ((2 * n as usize - 3) as f64 * fill) as usize;
        let d = random_demand(&mut rng, n, e, n as usize, mono);
        let (r, report) = realize_edge(&d).map_err(|e| TestCaseError::fail(format!("{e}")))?;
        prop_assert_eq!(verify_realization(&d, &r), Ok(()));
        prop_assert_eq!(report.max_path_len, r.max_path_len());
    }

    #[test]
    fn bundles_within_budget(seed in any::<u64>(), n in 4u32..=12) {
        // few pairs, high multiplicity
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut d = edp_core::DemandGraph::new(n).unwrap();
        let pairs = common::all_pairs(n);
        let mut left = 2 * n as usize - 3;
        let mut deg = vec![0usize; 2 * n as usize];
        while left > 0 {
            let (u, v) = pairs[rand::Rng::gen_range(&mut rng, 0..4.min(pairs.len()))];
            let m = rand::Rng::gen_range(&mut rng, 1..=left);
            let m = m.min(n as usize - deg[u]).min(n as usize - deg[v]);
            if m == 0 {
                break;
            }
            deg[u] += m;
            deg[v] += m;
            d.add_edge(common::vertex(n, u), common::vertex(n, v), m as u32).unwrap();
            left -= m;
        }
        let (r, _) = realize_edge(&d).map_err(|e| TestCaseError::fail(format!("{e} on {d:?}")))?;
        prop_assert_eq!(verify_realization(&d, &r), Ok(()));
    }

    #[test]
    fn deg1_under_threshold(seed in any::<u64>(), n in 13u32..=40, mono in 0.0f64..=1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let delta = ((n - 7) / 6) as usize;
        let d = random_demand(&mut rng, n, n as usize * delta, delta, mono);
        prop_assert!(DegreeConditions::evaluate(&d, DegreeVariant::Deg1).satisfied);
        let (r, report) = realize_deg1(&d, DegreeOptions::default()).map_err(|e| TestCaseError::fail(format!("{e}")))?;
        prop_assert_eq!(verify_realization(&d, &r), Ok(()));
        prop_assert!(report.max_path_len <= 4);
    }

    #[test]
    fn deg2_under_threshold(seed in any::<u64>(), n in 9u32..=40, mono in 0.0f64..=1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut delta = (n as usize - 5) / 4;
        let d = loop {
            let d = random_demand(&mut rng, n, n as usize * delta, delta, mono);
            if DegreeConditions::evaluate(&d, DegreeVariant::Deg2).satisfied {
                break d;
            }
            delta -= 1;
        };
        let (r, report) = realize_deg2(&d, DegreeOptions::default()).map_err(|e| TestCaseError::fail(format!("{e}")))?;
        prop_assert_eq!(verify_realization(&d, &r), Ok(()));
        prop_assert!(report.max_path_len <= 3);
    }

    #[test]
    fn coloring_invariants(seed in any::<u64>(), n in 2u32..=40, delta in 1usize..=10, mono in 0.0f64..=1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_demand(&mut rng, n, n as usize * delta, delta, mono);
        let g = LabeledMultigraph::from_demand(&d);
        let all = color_edges(&g, Part::All);
        let dd = d.max_degree().max(1);

        let greedy = greedy_color(&all, (2 * dd - 1) as u32, Lists::Full).unwrap();
        prop_assert!(is_proper(&all, &greedy));

        let k = greedy.k() + 2;
        let eq = make_equitable(&all, &greedy.clone().with_palette(k), k);
        prop_assert!(is_proper(&all, &eq));
        prop_assert!(eq.spread() <= 1);

        let sh = shannon_color(&all);
        prop_assert!(is_proper(&all, &sh));
        prop_assert!(sh.colors_used() <= 3 * d.max_degree() / 2);
    }

    #[test]
    fn abb_invariants(seed in any::<u64>(), n in 8u32..=40, mono in 0.0f64..=1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let delta = (n / 4) as usize;
        let d = random_demand(&mut rng, n, n as usize * delta, delta, mono);
        let g = LabeledMultigraph::from_demand(&d);
        let c = abb_coloring(&g).map_err(|e| TestCaseError::fail(format!("{e}")))?;
        let part = color_edges(&g, Part::CrossingAndB);
        prop_assert!(is_proper(&part, &c));
        prop_assert_eq!(c.k(), 2 * (n / 2));
        let spread = |ids: Vec<u32>| {
            let s = c.sizes_on(&ids);
            s.iter().max().unwrap() - s.iter().min().unwrap()
        };
        let b: Vec<u32> = color_edges(&g, Part::B).iter().map(|e| e.id).collect();
        let ab: Vec<u32> = color_edges(&g, Part::Crossing).iter().map(|e| e.id).collect();
        prop_assert!(spread(b) <= 1);
        prop_assert!(spread(ab) <= 2);
    }

    #[test]
    fn regularize_pads_to_max_degree(seed in any::<u64>(), n in 2u32..=20, mono in 0.0f64..=1.0, delta in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_demand(&mut rng, n, n as usize * delta, delta, mono);
        let g = regularize(&d);
        let target = d.max_degree();
        let short: Vec<usize> = g.vertices().map(|v| target - g.degree(v)).filter(|&s| s > 0).collect();
        prop_assert!(short.len() <= 1, "{:?}", short);
        prop_assert!(short.iter().all(|s| s % 2 == 0));
        prop_assert_eq!(g.lift_count(), 0);
        let (_, cross, _) = d.part_counts();
        prop_assert!(g.part_count(Part::Crossing) <= cross + 1 + target);
    }

    #[test]
    fn shortening_keeps_realizations_valid(seed in any::<u64>(), n in 5u32..=20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_demand(&mut rng, n, 2 * n as usize - 3, n as usize, 0.5);
        let (r, _) = realize_edge(&d).unwrap();
        let mut s = r.clone();
        s.shorten();
        prop_assert_eq!(verify_realization(&d, &s), Ok(()));
        for (l, p) in &s.paths {
            prop_assert!(p.len() <= r.paths[l].len());
        }
    }
}
