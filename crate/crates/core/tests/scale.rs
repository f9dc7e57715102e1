//! Instances well past the oracle bounds, checked against independent
//! characterizations instead of brute force.

mod common;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use rainbow_core::gallai_edmonds::{check_decomposition, ge_decompose};
use rainbow_core::graph::edge;
use rainbow_core::matching::{has_perfect_matching, maximum_matching, near_perfect_matching};
use rainbow_core::rainbow::rainbow_matching;
use rainbow_core::reach::{find_kf_augmenting_path, reach_from, reach_global, ReachConfig};
use rainbow_core::{verify_rainbow, Graph};

const PER_CALL: Duration = Duration::from_secs(1);

fn dense_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 1u32..=6).prop_flat_map(|(n, tenths)| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let p = f64::from(tenths) / 10.0;
        proptest::collection::vec(proptest::bool::weighted(p), pairs.len()).prop_map(move |mask| {
            let chosen = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&p, _)| p);
            Graph::from_edges(n, chosen).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decomposition_and_reach_at_scale(g in dense_graph(16, 40)) {
        let f = maximum_matching(&g);
        let cfg = ReachConfig::from_graph(&g, &f).unwrap();
        let start = Instant::now();
        let global = reach_global(&cfg).unwrap();
        prop_assert!(start.elapsed() < PER_CALL);
        prop_assert!(global.or_set().iter().all(|&v| !cfg.is_exposed(v)));
        prop_assert!(find_kf_augmenting_path(&cfg).unwrap().is_none());

        let dec = ge_decompose(&g, &f).unwrap();
        let report = check_decomposition(&g, &f, &dec);
        prop_assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn even_reach_detects_perfect_matchings_at_scale(g in dense_graph(17, 31)) {
        // Odd order, plus the pairs 1-2, 3-4, ... so that G - 0 has a perfect matching.
        let mut g = if g.vertex_count() % 2 == 1 { g } else { g.induced(&(1..g.vertex_count()).collect()).0 };
        let n = g.vertex_count();
        for i in (1..n).step_by(2) {
            if !g.has_edge(edge(i, i + 1)) {
                g.add_edge(edge(i, i + 1)).unwrap();
            }
        }
        let a = 0;
        let j = near_perfect_matching(&g, a).unwrap();
        let cfg = ReachConfig::from_graph(&g, &j).unwrap();
        let start = Instant::now();
        let r = reach_from(a, &cfg).unwrap();
        prop_assert!(start.elapsed() < PER_CALL);
        for x in (1..n).step_by(3) {
            let keep = (0..n).filter(|&v| v != x).collect();
            prop_assert_eq!(r.er_set().contains(&x), has_perfect_matching(&g.induced(&keep).0));
        }
    }

    #[test]
    fn growth_reaches_n_at_scale(
        (n, fam) in (6usize..=12).prop_flat_map(|n| (Just(n), common::family(n, 3 * n - 2, 2 * n + 6)))
    ) {
        let start = Instant::now();
        let rm = rainbow_matching(&fam, n).unwrap();
        prop_assert!(start.elapsed() < PER_CALL);
        prop_assert_eq!(rm.len(), n);
        prop_assert!(verify_rainbow(&fam, &rm));
    }
}

#[test]
fn long_path_is_found_past_oracle_bound() {
    // A path on 64 vertices with every other edge matched, ends exposed.
    let n = 64;
    let g = Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
    let f =
        rainbow_core::Matching::from_edges((0..31).map(|i| edge(2 * i + 1, 2 * i + 2))).unwrap();
    let cfg = ReachConfig::from_graph(&g, &f).unwrap();
    let p = find_kf_augmenting_path(&cfg).unwrap().unwrap();
    assert_eq!(p.len(), 63);
    assert!(p.is_augmenting_for(&f));
}
