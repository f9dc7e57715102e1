//! Gallai–Edmonds decomposition relative to a maximum matching.
//!
//! For a maximum matching `F` of `G` the vertex set splits into `Q`, `S` and
//! components `H_i` of `G - S` such that:
//!
//! 1. `F[Q]` is a perfect matching of `Q`;
//! 2. each `H_i` is hypomatchable and `F` matches all of it except one root
//!    `r_i`;
//! 3. `S` is covered by `F`, each `s ∈ S` matched to some root.
//!
//! [`ge_decompose`] returns the decomposition with `Q` as small as possible
//! (the classical canonical one, `R = {v : ν(G - v) = ν(G)}`). Only for that
//! choice do the reachability identities `ER(K,F) = ⋃ V(H_i)` and
//! `OR(K,F) = S ∪ ⋃ (V(H_i) \ {r_i})` hold, with `K = E(G) \ F`.
//! [`verify_decomposition`] checks all of it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching, Vertex};
use crate::matching::{is_hypomatchable, matching_number, matching_numbers_without_each};
use crate::reach::{reach_global, ReachConfig};

/// One hypomatchable component `H_i` with its root `r_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub vertices: BTreeSet<Vertex>,
    pub root: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GEDecomposition {
    pub q_set: BTreeSet<Vertex>,
    pub s_set: BTreeSet<Vertex>,
    /// Sorted by smallest vertex.
    pub components: Vec<Component>,
    /// Components whose root is exposed by `F`.
    pub d_indices: Vec<usize>,
    /// Components whose root is matched into `S`.
    pub j_indices: Vec<usize>,
    /// `s_j = F(r_j)` for `j ∈ J`.
    pub s_of: BTreeMap<usize, Vertex>,
}

/// Where a vertex sits in a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Q,
    S,
    Component(usize),
}

impl GEDecomposition {
    /// All vertices in components (`R`).
    pub fn r_set(&self) -> BTreeSet<Vertex> {
        self.components
            .iter()
            .flat_map(|c| c.vertices.iter().copied())
            .collect()
    }

    pub fn roots(&self) -> BTreeSet<Vertex> {
        self.components.iter().map(|c| c.root).collect()
    }

    pub fn part_of(&self, v: Vertex) -> Option<Part> {
        if self.q_set.contains(&v) {
            return Some(Part::Q);
        }
        if self.s_set.contains(&v) {
            return Some(Part::S);
        }
        self.components
            .iter()
            .position(|c| c.vertices.contains(&v))
            .map(Part::Component)
    }

    /// Assembles a decomposition from its vertex parts, deriving roots and
    /// the D/J split from `f`. Components are sorted by smallest vertex.
    /// Fails if some component does not have exactly one vertex left
    /// unmatched inside it.
    pub fn from_parts(
        f: &Matching,
        q_set: BTreeSet<Vertex>,
        s_set: BTreeSet<Vertex>,
        mut parts: Vec<BTreeSet<Vertex>>,
    ) -> Result<Self> {
        parts.sort_by_key(|p| p.iter().next().copied());
        let mut components = Vec::with_capacity(parts.len());
        let mut d_indices = Vec::new();
        let mut j_indices = Vec::new();
        let mut s_of = BTreeMap::new();
        for (i, vertices) in parts.into_iter().enumerate() {
            let mut unmatched_inside = vertices
                .iter()
                .copied()
                .filter(|&v| !matches!(f.partner(v), Some(p) if vertices.contains(&p)));
            let root = match (unmatched_inside.next(), unmatched_inside.next()) {
                (Some(r), None) => r,
                _ => {
                    return Err(Error::ContractViolation(format!(
                        "component {vertices:?} does not have exactly one root under {f}"
                    )))
                }
            };
            match f.partner(root) {
                None => d_indices.push(i),
                Some(s) => {
                    j_indices.push(i);
                    s_of.insert(i, s);
                }
            }
            components.push(Component { vertices, root });
        }
        Ok(GEDecomposition {
            q_set,
            s_set,
            components,
            d_indices,
            j_indices,
            s_of,
        })
    }
}

fn connected_components(g: &Graph, within: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
    let adj = g.adjacency();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in within {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &u in &adj[v] {
                if within.contains(&u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// The canonical decomposition of `g` adapted to the maximum matching `f`.
pub fn ge_decompose(g: &Graph, f: &Matching) -> Result<GEDecomposition> {
    let n = g.vertex_count();
    if let Some(&e) = f.edges().iter().find(|&&e| !g.has_edge(e)) {
        return Err(Error::Precondition(format!(
            "matching edge {e} is not in the graph"
        )));
    }
    let nu = matching_number(g);
    if f.len() != nu {
        return Err(Error::NotMaximum {
            size: f.len(),
            maximum: nu,
        });
    }
    let without = matching_numbers_without_each(g);
    let r_set: BTreeSet<Vertex> = (0..n).filter(|&v| without[v] == nu).collect();
    let adj = g.adjacency();
    let s_set: BTreeSet<Vertex> = r_set
        .iter()
        .flat_map(|&v| adj[v].iter().copied())
        .filter(|u| !r_set.contains(u))
        .collect();
    let q_set: BTreeSet<Vertex> = (0..n)
        .filter(|v| !r_set.contains(v) && !s_set.contains(v))
        .collect();
    let parts = connected_components(g, &r_set);
    GEDecomposition::from_parts(f, q_set, s_set, parts)
}

/// Outcome of [`check_decomposition`]: every violated clause, by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionReport {
    pub violations: Vec<String>,
}

impl DecompositionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, clause: String) {
        self.violations.push(clause);
    }

    /// True iff no violation concerns the reachability identities.
    pub fn structure_valid(&self) -> bool {
        self.violations.iter().all(|v| v.starts_with("reach:"))
    }
}

/// Checks the three structural properties plus the D/J bookkeeping.
fn check_structure(
    g: &Graph,
    f: &Matching,
    dec: &GEDecomposition,
    report: &mut DecompositionReport,
) {
    let n = g.vertex_count();

    // Partition.
    let mut owner: Vec<Option<Part>> = vec![None; n];
    let mut claim = |v: Vertex, p: Part, report: &mut DecompositionReport| {
        if v >= n {
            report.fail(format!("partition: vertex {v} out of range"));
        } else if let Some(prev) = owner[v] {
            report.fail(format!("partition: vertex {v} in both {prev:?} and {p:?}"));
        } else {
            owner[v] = Some(p);
        }
    };
    for &v in &dec.q_set {
        claim(v, Part::Q, report);
    }
    for &v in &dec.s_set {
        claim(v, Part::S, report);
    }
    for (i, c) in dec.components.iter().enumerate() {
        for &v in &c.vertices {
            claim(v, Part::Component(i), report);
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        report.fail(format!("partition: vertex {v} unassigned"));
    }
    if !report.violations.is_empty() {
        return;
    }

    // (1) F[Q] perfect on Q.
    for &q in &dec.q_set {
        if !matches!(f.partner(q), Some(p) if dec.q_set.contains(&p)) {
            report.fail(format!("Q: vertex {q} not matched inside Q"));
        }
    }

    // (2) components of G - S, hypomatchable, near-perfectly matched.
    for (i, c) in dec.components.iter().enumerate() {
        for e in g.edges() {
            let (a, b) = e.endpoints();
            for (x, y) in [(a, b), (b, a)] {
                if c.vertices.contains(&x) && !c.vertices.contains(&y) && !dec.s_set.contains(&y) {
                    report.fail(format!("component {i}: edge {e} leaves it outside S"));
                }
            }
        }
        let (h, _) = g.induced(&c.vertices);
        if !is_connected(&h) {
            report.fail(format!("component {i}: not connected"));
        }
        if !is_hypomatchable(&h) {
            report.fail(format!("component {i}: not hypomatchable"));
        }
        if !c.vertices.contains(&c.root) {
            report.fail(format!("component {i}: root {} outside component", c.root));
        }
        for &v in &c.vertices {
            let inside = f.partner(v).is_some_and(|p| c.vertices.contains(&p));
            if v == c.root && inside {
                report.fail(format!("component {i}: root {v} matched inside"));
            }
            if v != c.root && !inside {
                report.fail(format!("component {i}: vertex {v} not matched inside"));
            }
        }
    }

    // (3) S matched into roots.
    let roots = dec.roots();
    for &s in &dec.s_set {
        match f.partner(s) {
            Some(r) if roots.contains(&r) => {}
            _ => report.fail(format!("S: vertex {s} not matched to a root")),
        }
    }

    // D/J split and the exposed set.
    for (i, c) in dec.components.iter().enumerate() {
        let in_d = dec.d_indices.contains(&i);
        let in_j = dec.j_indices.contains(&i);
        match f.partner(c.root) {
            None if !(in_d && !in_j) => report.fail(format!("D/J: component {i} should be in D")),
            Some(s) if !(in_j && !in_d) || dec.s_of.get(&i) != Some(&s) => {
                report.fail(format!("D/J: component {i} should be in J with s = {s}"))
            }
            _ => {}
        }
    }
    if dec.d_indices.len() + dec.j_indices.len() != dec.components.len() {
        report.fail("D/J: index sets do not cover the components".into());
    }
    let exposed: BTreeSet<Vertex> = (0..n).filter(|&v| !f.covers(v)).collect();
    let d_roots: BTreeSet<Vertex> = dec
        .d_indices
        .iter()
        .filter_map(|&d| dec.components.get(d).map(|c| c.root))
        .collect();
    if exposed != d_roots {
        report.fail(format!(
            "D/J: exposed set {exposed:?} differs from D roots {d_roots:?}"
        ));
    }
}

fn is_connected(h: &Graph) -> bool {
    let n = h.vertex_count();
    if n == 0 {
        return true;
    }
    let all: BTreeSet<Vertex> = (0..n).collect();
    connected_components(h, &all).len() == 1
}

/// Full diagnostic check of `dec` against `(g, f)`: the three structural
/// properties, the D/J bookkeeping, and both reachability identities.
/// Reachability clauses are prefixed `reach:`.
pub fn check_decomposition(g: &Graph, f: &Matching, dec: &GEDecomposition) -> DecompositionReport {
    let mut report = DecompositionReport::default();
    check_structure(g, f, dec, &mut report);
    if !report.violations.is_empty() {
        return report;
    }
    let sets = match ReachConfig::from_graph(g, f).and_then(|cfg| reach_global(&cfg)) {
        Ok(s) => s,
        Err(e) => {
            report.fail(format!("reach: {e}"));
            return report;
        }
    };
    let r_set = dec.r_set();
    if sets.er_set() != &r_set {
        report.fail(format!(
            "reach: ER(K,F) = {:?} but components cover {r_set:?}",
            sets.er_set()
        ));
    }
    let roots = dec.roots();
    let expected_or: BTreeSet<Vertex> = dec
        .s_set
        .iter()
        .copied()
        .chain(r_set.iter().copied().filter(|v| !roots.contains(v)))
        .collect();
    if sets.or_set() != &expected_or {
        report.fail(format!(
            "reach: OR(K,F) = {:?} but S and non-root component vertices are {expected_or:?}",
            sets.or_set()
        ));
    }
    report
}

pub fn verify_decomposition(g: &Graph, f: &Matching, dec: &GEDecomposition) -> bool {
    check_decomposition(g, f, dec).is_valid()
}

/// Every decomposition of `(g, f)` satisfying the three structural
/// properties, canonical or not. Exponential in the vertex count; intended
/// for instances of at most a dozen vertices.
pub fn all_structural_decompositions(g: &Graph, f: &Matching) -> Vec<GEDecomposition> {
    let n = g.vertex_count();
    assert!(
        n <= 16,
        "exhaustive decomposition search is limited to 16 vertices"
    );
    let mut out = Vec::new();
    for s_mask in 0u32..(1 << n) {
        let s_set: BTreeSet<Vertex> = (0..n).filter(|&v| s_mask >> v & 1 == 1).collect();
        if s_set.iter().any(|&s| !f.covers(s)) {
            continue;
        }
        let rest: BTreeSet<Vertex> = (0..n).filter(|v| !s_set.contains(v)).collect();
        let comps = connected_components(g, &rest);
        let eligible: Vec<usize> = (0..comps.len())
            .filter(|&i| comps[i].len() % 2 == 1 && is_hypomatchable(&g.induced(&comps[i]).0))
            .collect();
        for pick in 0u32..(1 << eligible.len()) {
            let chosen: Vec<BTreeSet<Vertex>> = eligible
                .iter()
                .enumerate()
                .filter(|&(b, _)| pick >> b & 1 == 1)
                .map(|(_, &i)| comps[i].clone())
                .collect();
            let r: BTreeSet<Vertex> = chosen.iter().flatten().copied().collect();
            let q_set: BTreeSet<Vertex> = rest.iter().copied().filter(|v| !r.contains(v)).collect();
            let Ok(dec) = GEDecomposition::from_parts(f, q_set, s_set.clone(), chosen) else {
                continue;
            };
            let mut report = DecompositionReport::default();
            check_structure(g, f, &dec, &mut report);
            if report.is_valid() {
                out.push(dec);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(usize, usize)]) -> Matching {
        Matching::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn path_on_three_vertices() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let f = m(&[(0, 1)]);
        let dec = ge_decompose(&g, &f).unwrap();
        assert!(dec.q_set.is_empty());
        assert_eq!(dec.s_set, set(&[1]));
        assert_eq!(
            dec.components,
            vec![
                Component {
                    vertices: set(&[0]),
                    root: 0
                },
                Component {
                    vertices: set(&[2]),
                    root: 2
                },
            ]
        );
        assert_eq!(dec.d_indices, vec![1]);
        assert_eq!(dec.j_indices, vec![0]);
        assert_eq!(dec.s_of.get(&0), Some(&1));
        assert!(verify_decomposition(&g, &f, &dec));
    }

    #[test]
    fn perfect_matching_gives_all_q() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let f = m(&[(0, 1), (2, 3)]);
        let dec = ge_decompose(&g, &f).unwrap();
        assert_eq!(dec.q_set, set(&[0, 1, 2, 3]));
        assert!(dec.s_set.is_empty() && dec.components.is_empty());
        assert!(verify_decomposition(&g, &f, &dec));
    }

    #[test]
    fn two_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let f = m(&[(0, 1), (3, 4)]);
        let dec = ge_decompose(&g, &f).unwrap();
        assert!(dec.q_set.is_empty() && dec.s_set.is_empty());
        assert_eq!(dec.components.len(), 2);
        assert_eq!(dec.roots(), set(&[2, 5]));
        assert_eq!(dec.d_indices, vec![0, 1]);
        assert!(verify_decomposition(&g, &f, &dec));
    }

    #[test]
    fn degenerate_graphs() {
        let dec = ge_decompose(&Graph::new(0), &Matching::new()).unwrap();
        assert_eq!(dec, GEDecomposition::default());

        let g = Graph::new(3);
        let dec = ge_decompose(&g, &Matching::new()).unwrap();
        assert_eq!(dec.components.len(), 3);
        assert!(dec.components.iter().all(|c| c.vertices == set(&[c.root])));
        assert!(dec.q_set.is_empty() && dec.s_set.is_empty());
        assert!(verify_decomposition(&g, &Matching::new(), &dec));
    }

    #[test]
    fn rejects_non_maximum() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            ge_decompose(&g, &m(&[(1, 2)])),
            Err(Error::NotMaximum {
                size: 1,
                maximum: 2
            })
        );
    }

    #[test]
    fn swapped_parts_fail() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let f = m(&[(0, 1)]);
        let mut dec = ge_decompose(&g, &f).unwrap();
        core::mem::swap(&mut dec.q_set, &mut dec.s_set);
        assert!(!verify_decomposition(&g, &f, &dec));
    }

    #[test]
    fn non_canonical_decomposition_fails_only_reachability() {
        // Triangle 0-1-2 with a pendant 2-3, perfectly matched. Taking
        // S = {3} and the triangle as a component rooted at 2 satisfies the
        // three structural properties but not the reachability identities.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let f = m(&[(0, 1), (2, 3)]);
        let dec =
            GEDecomposition::from_parts(&f, set(&[]), set(&[3]), vec![set(&[0, 1, 2])]).unwrap();
        let report = check_decomposition(&g, &f, &dec);
        assert!(!report.is_valid());
        assert!(report.structure_valid(), "{:?}", report.violations);

        let all = all_structural_decompositions(&g, &f);
        assert!(all.contains(&dec));
        assert!(all.contains(&ge_decompose(&g, &f).unwrap()));
    }
}
