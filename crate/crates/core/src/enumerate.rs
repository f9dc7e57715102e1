//! Enumeration of small graphs and matchings for exhaustive checks.
//!
//! Graphs are generated up to isomorphism by vertex extension: every graph on
//! `n` vertices is some graph on `n - 1` vertices plus a vertex joined to a
//! subset of the others, and duplicates are removed by a canonical code
//! (minimum adjacency code over all labellings compatible with colour
//! refinement).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{edge, Edge, Graph, Matching, Vertex};
use crate::matching::matching_number;

/// Largest order supported by [`graphs_up_to_isomorphism`].
pub const MAX_CANONICAL_ORDER: usize = 10;

fn pair_bit(i: usize, j: usize) -> u64 {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    1u64 << (hi * (hi - 1) / 2 + lo)
}

/// Colour refinement; returns a cell index per vertex with cells numbered in
/// an order that depends only on the isomorphism class.
fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| color[u])
                    .collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap())
            .collect();
        if sorted.len() == classes {
            return next;
        }
        classes = sorted.len();
        color = next;
    }
}

fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let cell = refine(adj);
    let cells = cell.iter().max().map_or(0, |&c| c + 1);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); cells];
    for v in 0..n {
        members[cell[v]].push(v);
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| {
            (v + 1..n)
                .filter(move |&u| adj[v] >> u & 1 == 1)
                .map(move |u| (v, u))
        })
        .collect();

    // Labels are handed out cell by cell; within a cell every order is tried.
    let mut label = vec![0usize; n];
    let mut best = u64::MAX;
    fn assign(
        members: &mut [Vec<usize>],
        cell: usize,
        depth: usize,
        next_label: usize,
        label: &mut [usize],
        edges: &[(usize, usize)],
        best: &mut u64,
    ) {
        if cell == members.len() {
            let code = edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | pair_bit(label[u], label[v]));
            *best = (*best).min(code);
            return;
        }
        let size = members[cell].len();
        if depth == size {
            assign(members, cell + 1, 0, next_label, label, edges, best);
            return;
        }
        for i in depth..size {
            members[cell].swap(depth, i);
            let v = members[cell][depth];
            label[v] = next_label;
            assign(members, cell, depth + 1, next_label + 1, label, edges, best);
            members[cell].swap(depth, i);
        }
    }
    assign(&mut members, 0, 0, 0, &mut label, &edges, &mut best);
    best
}

fn graph_from_adj(adj: &[u16]) -> Graph {
    let n = adj.len();
    let pairs = (0..n).flat_map(|v| {
        (v + 1..n)
            .filter(move |&u| adj[v] >> u & 1 == 1)
            .map(move |u| (v, u))
    });
    Graph::from_edges(n, pairs).expect("adjacency masks are simple")
}

fn adj_from_code(n: usize, code: u64) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    for hi in 1..n {
        for lo in 0..hi {
            if code & pair_bit(lo, hi) != 0 {
                adj[lo] |= 1 << hi;
                adj[hi] |= 1 << lo;
            }
        }
    }
    adj
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, ordered by canonical code.
///
/// # Panics
///
/// Panics if `n > MAX_CANONICAL_ORDER`.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CANONICAL_ORDER, "order {n} too large to enumerate");
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = adj_from_code(k - 1, code);
            for mask in 0u16..(1 << (k - 1)) {
                let mut adj = base.clone();
                adj.push(mask);
                for (u, row) in adj.iter_mut().enumerate().take(k - 1) {
                    if mask >> u & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                next.insert(canonical_code(&adj));
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|code| graph_from_adj(&adj_from_code(n, code)))
        .collect()
}

/// Representatives of every isomorphism class with at most `max_n` vertices,
/// smallest order first.
pub fn graphs_up_to_order(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(graphs_up_to_isomorphism).collect()
}

/// Every labelled graph on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (v + 1..n).map(move |u| (v, u)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let chosen = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(n, chosen).unwrap()
    })
}

/// Canonical code of `g`, equal for isomorphic graphs.
///
/// # Panics
///
/// Panics if `g` has more than [`MAX_CANONICAL_ORDER`] vertices.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= MAX_CANONICAL_ORDER);
    let mut adj = vec![0u16; n];
    for e in g.edges() {
        adj[e.lo()] |= 1 << e.hi();
        adj[e.hi()] |= 1 << e.lo();
    }
    canonical_code(&adj)
}

fn collect_matchings(
    adj: &[Vec<Vertex>],
    v: usize,
    used: &mut [bool],
    current: &mut Vec<Edge>,
    min_size: usize,
    out: &mut Vec<Matching>,
) {
    let n = adj.len();
    let mut v = v;
    while v < n && used[v] {
        v += 1;
    }
    // Not enough vertices left to reach `min_size`.
    let free = (v..n).filter(|&u| !used[u]).count();
    if current.len() + free / 2 < min_size {
        return;
    }
    if v == n {
        out.push(Matching::from_edges(current.iter().copied()).unwrap());
        return;
    }
    used[v] = true;
    collect_matchings(adj, v + 1, used, current, min_size, out);
    for &u in &adj[v] {
        if u > v && !used[u] {
            used[u] = true;
            current.push(edge(v, u));
            collect_matchings(adj, v + 1, used, current, min_size, out);
            current.pop();
            used[u] = false;
        }
    }
    used[v] = false;
}

/// Every matching of `g`, including the empty one.
pub fn all_matchings(g: &Graph) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    collect_matchings(&g.adjacency(), 0, &mut used, &mut Vec::new(), 0, &mut out);
    out
}

/// Every maximum matching of `g`.
pub fn all_maximum_matchings(g: &Graph) -> Vec<Matching> {
    let nu = matching_number(g);
    let mut out = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    collect_matchings(&g.adjacency(), 0, &mut used, &mut Vec::new(), nu, &mut out);
    out.retain(|m| m.len() == nu);
    out
}

/// Every matching with exactly `size` edges in the complete graph on
/// `vertex_count` vertices.
pub fn matchings_of_size(vertex_count: usize, size: usize) -> Vec<Matching> {
    let complete = Graph::from_edges(
        vertex_count,
        (0..vertex_count).flat_map(|v| (v + 1..vertex_count).map(move |u| (v, u))),
    )
    .unwrap();
    let mut out = Vec::new();
    let mut used = vec![false; vertex_count];
    collect_matchings(
        &complete.adjacency(),
        0,
        &mut used,
        &mut Vec::new(),
        size,
        &mut out,
    );
    out.retain(|m| m.len() == size);
    out
}
