#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use rainbow_core::graph::edge;
use rainbow_core::reach::ReachConfig;
use rainbow_core::{ColoredFamily, Edge, Graph, Matching};

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Random simple graph on `1..=max_n` vertices.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = all_pairs(n);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let chosen = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&p, _)| p);
            Graph::from_edges(n, chosen).unwrap()
        })
    })
}

/// Greedy matching over the pairs of `order` that survive `keep`.
fn matching_from(order: &[(usize, usize)], keep: &[bool]) -> Matching {
    let mut m = Matching::new();
    for (&(u, v), &k) in order.iter().zip(keep) {
        if k && !m.covers(u) && !m.covers(v) {
            m.insert(edge(u, v)).unwrap();
        }
    }
    m
}

/// A random matching over `0..n`.
pub fn matching(n: usize) -> impl Strategy<Value = Matching> {
    let pairs = all_pairs(n);
    let len = pairs.len();
    (
        Just(pairs).prop_shuffle(),
        proptest::collection::vec(any::<bool>(), len),
    )
        .prop_map(|(order, keep)| matching_from(&order, &keep))
}

/// A random `(F, K)` configuration with disjoint `F` and `K`.
pub fn config(max_n: usize) -> impl Strategy<Value = ReachConfig> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = all_pairs(n);
        let len = pairs.len();
        (matching(n), proptest::collection::vec(any::<bool>(), len)).prop_map(move |(f, mask)| {
            let k: BTreeSet<Edge> = pairs
                .iter()
                .zip(&mask)
                .filter(|(&(u, v), &b)| b && !f.contains(edge(u, v)))
                .map(|(&(u, v), _)| edge(u, v))
                .collect();
            ReachConfig::new(n, f, k).unwrap()
        })
    })
}

/// A random matching of exactly `size` edges over `0..n`.
pub fn sized_matching(n: usize, size: usize) -> impl Strategy<Value = Matching> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |vs| {
            Matching::from_edges((0..size).map(|i| edge(vs[2 * i], vs[2 * i + 1]))).unwrap()
        })
}

/// `m` matchings of size `n` over `budget` vertices.
pub fn family(n: usize, m: usize, budget: usize) -> impl Strategy<Value = ColoredFamily> {
    proptest::collection::vec(sized_matching(budget, n), m)
        .prop_map(move |ms| ColoredFamily::new(budget, ms).unwrap())
}
