mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rainbow_core::enrich::{is_enriching_definitional, is_enriching_structural};
use rainbow_core::enumerate::all_matchings;
use rainbow_core::gallai_edmonds::{ge_decompose, verify_decomposition};
use rainbow_core::graph::{edge, symmetric_difference, toggle_path_edges};
use rainbow_core::matching::{
    find_augmenting_path, is_hypomatchable, matching_number, maximum_matching,
};
use rainbow_core::rainbow::{guarantee_floor, max_rainbow_matching, rainbow_matching};
use rainbow_core::reach::{
    brute_force_reach, find_kf_augmenting_path, reach_from, reach_global, Parity, ReachConfig,
};
use rainbow_core::{
    validate_alternating_path, validate_matching, verify_rainbow, AlternatingPath, Label,
};

fn connected(g: &rainbow_core::Graph) -> bool {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn augmentation_grows_by_one_and_toggles_back(
        (f, m) in (2usize..=10)
            .prop_flat_map(|n| (Just(n), 0..n / 2))
            .prop_flat_map(|(n, small)| (Just(n), Just(small), small + 1..=n / 2))
            .prop_flat_map(|(n, small, large)| {
                (common::sized_matching(n, small), common::sized_matching(n, large))
            })
    ) {
        let p = find_augmenting_path(&f, &m).unwrap();
        let k: BTreeSet<_> = m.edges().difference(f.edges()).copied().collect();
        prop_assert!(validate_alternating_path(&p, &f, &k));
        prop_assert!(!f.covers(p.start()) && !f.covers(p.end()));

        let grown = symmetric_difference(&f, &p).unwrap();
        prop_assert_eq!(grown.len(), f.len() + 1);
        prop_assert!(validate_matching(grown.edges(), None));
        prop_assert_eq!(&toggle_path_edges(grown.edges(), &p), f.edges());
    }

    #[test]
    fn reversal_preserves_validity(
        perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(),
        len in 1usize..=8,
        k_first in any::<bool>(),
    ) {
        let vertices = perm[..len].to_vec();
        let first = if k_first { Label::K } else { Label::F };
        let labels: Vec<Label> = (0..len - 1)
            .map(|i| if i % 2 == 0 { first } else { first.flip() })
            .collect();
        let p = AlternatingPath::new(vertices.clone(), labels.clone()).unwrap();
        let r = p.reversed();
        let mut rv = vertices;
        rv.reverse();
        let mut rl = labels;
        rl.reverse();
        prop_assert_eq!(r.vertices(), &rv[..]);
        prop_assert_eq!(r.labels(), &rl[..]);
        prop_assert_eq!(AlternatingPath::new(rv, rl), Ok(r.clone()));
        prop_assert_eq!(r.reversed(), p);
    }

    #[test]
    fn maximum_matching_is_exact(g in common::graph(10)) {
        let m = maximum_matching(&g);
        prop_assert!(m.edges().iter().all(|&e| g.has_edge(e)));
        let best = all_matchings(&g).iter().map(|m| m.len()).max().unwrap();
        prop_assert_eq!(m.len(), best);
    }

    #[test]
    fn hypomatchable_graphs_are_odd_and_connected(g in common::graph(9)) {
        if is_hypomatchable(&g) {
            prop_assert_eq!(g.vertex_count() % 2, 1);
            prop_assert!(connected(&g));
        }
    }

    #[test]
    fn reach_matches_oracle(cfg in common::config(10)) {
        for a in 0..cfg.vertex_count() {
            let fast = reach_from(a, &cfg).unwrap();
            let slow = brute_force_reach(a, &cfg).unwrap();
            prop_assert_eq!(fast.or_set(), slow.or_set(), "OR from {}", a);
            prop_assert_eq!(fast.er_set(), slow.er_set(), "ER from {}", a);
            let dr: BTreeSet<_> = fast.or_set().intersection(fast.er_set()).copied().collect();
            prop_assert_eq!(fast.dr_set(), &dr);
            for (&(v, parity), w) in fast.witnesses() {
                prop_assert!(validate_alternating_path(w, cfg.f(), cfg.k()));
                prop_assert_eq!((w.start(), w.end()), (a, v));
                prop_assert_eq!(w.len() % 2 == 1, parity == Parity::Odd);
            }
        }
    }

    #[test]
    fn partner_shift_from_exposed_sources(cfg in common::config(10)) {
        for a in cfg.exposed() {
            let r = reach_from(a, &cfg).unwrap();
            for x in 0..cfg.vertex_count() {
                if let Some(px) = cfg.partner(x) {
                    prop_assert_eq!(r.or_set().contains(&x), r.er_set().contains(&px));
                }
            }
        }
    }

    #[test]
    fn kf_augmenting_path_iff_or_escapes(cfg in common::config(10)) {
        let global = reach_global(&cfg).unwrap();
        let escapes = global.or_set().iter().any(|&v| cfg.is_exposed(v));
        let found = find_kf_augmenting_path(&cfg).unwrap();
        prop_assert_eq!(found.is_some(), escapes);
        if let Some(p) = found {
            prop_assert!(p.is_augmenting_for(cfg.f()));
            prop_assert!(validate_alternating_path(&p, cfg.f(), cfg.k()));
        }
    }

    #[test]
    fn decomposition_verifies(g in common::graph(10)) {
        let f = maximum_matching(&g);
        let dec = ge_decompose(&g, &f).unwrap();
        prop_assert!(verify_decomposition(&g, &f, &dec));
    }

    #[test]
    fn enriching_characterization(g in common::graph(8)) {
        let f = maximum_matching(&g);
        let dec = ge_decompose(&g, &f).unwrap();
        let cfg = ReachConfig::from_graph(&g, &f).unwrap();
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                let e = edge(u, v);
                if g.has_edge(e) {
                    continue;
                }
                prop_assert_eq!(
                    is_enriching_structural(&g, &dec, e),
                    is_enriching_definitional(&cfg, e),
                    "edge {}", e
                );
            }
        }
    }

    #[test]
    fn enriching_edges_grow_or(cfg in common::config(9)) {
        let n = cfg.vertex_count();
        let before = reach_global(&cfg).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                let e = edge(u, v);
                if cfg.f().contains(e) {
                    continue;
                }
                if is_enriching_definitional(&cfg, e).unwrap() {
                    let after = reach_global(&cfg.with_k_edge(e).unwrap()).unwrap();
                    prop_assert!(after.or_set().is_superset(before.or_set()));
                    prop_assert!(after.or_set() != before.or_set());
                }
            }
        }
    }

    #[test]
    fn matching_number_without_vertex_drops_by_at_most_one(g in common::graph(9)) {
        let nu = matching_number(&g);
        for v in 0..g.vertex_count() {
            let keep = (0..g.vertex_count()).filter(|&u| u != v).collect();
            let (h, _) = g.induced(&keep);
            let mu = matching_number(&h);
            prop_assert!(mu == nu || mu + 1 == nu);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rainbow_theorem_small(
        (n, fam) in (1usize..=3).prop_flat_map(|n| (Just(n), common::family(n, 3 * n - 2, 2 * n + 2)))
    ) {
        let rm = rainbow_matching(&fam, n).unwrap();
        prop_assert_eq!(rm.len(), n);
        prop_assert!(verify_rainbow(&fam, &rm));
    }

    #[test]
    fn rainbow_between_floor_and_oracle(
        (n, fam) in (1usize..=3).prop_flat_map(|n| (Just(n), 1usize..=3 * n))
            .prop_flat_map(|(n, m)| (Just(n), common::family(n, m, 2 * n + 2)))
    ) {
        let rm = rainbow_matching(&fam, n).unwrap();
        prop_assert!(verify_rainbow(&fam, &rm));
        prop_assert!(rm.len() >= guarantee_floor(fam.len(), n));
        prop_assert!(rm.len() <= max_rainbow_matching(&fam).unwrap().len());
    }
}
