//! Core value types: edges, graphs, matchings, alternating paths and rainbow
//! assignments.
//!
//! Vertices are dense `0..vertex_count` indices. Edges are stored with the
//! smaller endpoint first so that set equality is structural equality.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge between two distinct vertices, stored canonically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Result<Self> {
        match u.cmp(&v) {
            core::cmp::Ordering::Less => Ok(Edge { lo: u, hi: v }),
            core::cmp::Ordering::Greater => Ok(Edge { lo: v, hi: u }),
            core::cmp::Ordering::Equal => Err(Error::SelfLoop(u)),
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }

    pub fn touches(self, other: Edge) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }

    fn check_range(self, vertex_count: usize) -> Result<()> {
        if self.hi >= vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: self.hi,
                vertex_count,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Shorthand for building edges in tests and constructions whose endpoints
/// are known to differ.
///
/// # Panics
///
/// Panics if `u == v`.
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    Edge::new(u, v).expect("edge endpoints must differ")
}

/// A simple undirected graph on `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(Edge::new(u, v)?)?;
        }
        Ok(g)
    }

    /// Adds `e`, rejecting out-of-range endpoints and duplicates.
    pub fn add_edge(&mut self, e: Edge) -> Result<()> {
        e.check_range(self.vertex_count)?;
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge(e));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.vertex_count
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        adjacency(self.vertex_count, self.edges.iter().copied())
    }

    /// The subgraph induced on `keep`, relabelled to `0..keep.len()` in
    /// ascending vertex order. Returns the graph and the old labels.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> (Graph, Vec<Vertex>) {
        let labels: Vec<Vertex> = keep.iter().copied().collect();
        let mut index = BTreeMap::new();
        for (i, &v) in labels.iter().enumerate() {
            index.insert(v, i);
        }
        let mut g = Graph::new(labels.len());
        for e in &self.edges {
            if let (Some(&a), Some(&b)) = (index.get(&e.lo), index.get(&e.hi)) {
                g.edges.insert(edge(a, b));
            }
        }
        (g, labels)
    }

    /// `E(self) \ m`.
    pub fn edges_outside(&self, m: &Matching) -> BTreeSet<Edge> {
        self.edges.difference(&m.edges).copied().collect()
    }
}

pub(crate) fn adjacency<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Vec<Vec<Vertex>> {
    let mut adj = alloc::vec![Vec::new(); n];
    for e in edges {
        adj[e.lo].push(e.hi);
        adj[e.hi].push(e.lo);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Matching {
    edges: BTreeSet<Edge>,
}

impl Matching {
    pub fn new() -> Self {
        Matching::default()
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Result<Self> {
        let mut m = Matching::new();
        for e in edges {
            m.insert(e)?;
        }
        Ok(m)
    }

    /// Convenience constructor from raw pairs.
    pub fn from_pairs<I: IntoIterator<Item = (Vertex, Vertex)>>(pairs: I) -> Result<Self> {
        let mut m = Matching::new();
        for (u, v) in pairs {
            m.insert(Edge::new(u, v)?)?;
        }
        Ok(m)
    }

    pub fn insert(&mut self, e: Edge) -> Result<()> {
        if self.edges.contains(&e) {
            return Err(Error::DuplicateEdge(e));
        }
        if let Some(&clash) = self.edges.iter().find(|f| f.touches(e)) {
            return Err(Error::OverlappingEdges(clash, e));
        }
        self.edges.insert(e);
        Ok(())
    }

    pub fn remove(&mut self, e: Edge) -> bool {
        self.edges.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|e| e.contains(v))
    }

    /// The vertex matched to `v`.
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.edges.iter().find_map(|e| e.other(v))
    }

    /// The vertex set covered by the matching.
    pub fn covered(&self) -> BTreeSet<Vertex> {
        self.edges.iter().flat_map(|e| [e.lo, e.hi]).collect()
    }

    /// Largest endpoint plus one; zero for the empty matching.
    pub fn vertex_bound(&self) -> usize {
        self.edges.iter().map(|e| e.hi + 1).max().unwrap_or(0)
    }

    /// Partner array over `0..n`. Edges reaching beyond `n` are ignored.
    pub fn mates(&self, n: usize) -> Vec<Option<Vertex>> {
        let mut mate = alloc::vec![None; n];
        for e in &self.edges {
            if e.hi < n {
                mate[e.lo] = Some(e.hi);
                mate[e.hi] = Some(e.lo);
            }
        }
        mate
    }

    /// Edges of `self` with both ends in `set`.
    pub fn restricted_to(&self, set: &BTreeSet<Vertex>) -> Matching {
        Matching {
            edges: self
                .edges
                .iter()
                .filter(|e| set.contains(&e.lo) && set.contains(&e.hi))
                .copied()
                .collect(),
        }
    }

    pub(crate) fn from_set_unchecked(edges: BTreeSet<Edge>) -> Self {
        Matching { edges }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// True iff `edges` are pairwise disjoint, and within `vertex_budget` when one
/// is given.
pub fn validate_matching<'a, I>(edges: I, vertex_budget: Option<usize>) -> bool
where
    I: IntoIterator<Item = &'a Edge>,
{
    let mut seen = BTreeSet::new();
    for e in edges {
        if let Some(n) = vertex_budget {
            if e.hi >= n {
                return false;
            }
        }
        if !seen.insert(e.lo) || !seen.insert(e.hi) {
            return false;
        }
    }
    true
}

/// Which set an edge of an alternating path is drawn from.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    /// The non-matching side (`K`, or the complement of the matching).
    K,
    /// The matching side.
    F,
}

impl Label {
    pub fn flip(self) -> Label {
        match self {
            Label::K => Label::F,
            Label::F => Label::K,
        }
    }
}

/// A simple path with an explicit `K`/`F` label per edge.
///
/// The labels strictly alternate. The path's `K` edges need not belong to any
/// particular graph, which lets augmenting paths through non-edges be
/// represented directly.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlternatingPath {
    vertices: Vec<Vertex>,
    labels: Vec<Label>,
}

impl AlternatingPath {
    pub fn new(vertices: Vec<Vertex>, labels: Vec<Label>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("no vertices".into()));
        }
        if labels.len() + 1 != vertices.len() {
            return Err(Error::InvalidPath(format!(
                "{} vertices need {} labels, got {}",
                vertices.len(),
                vertices.len() - 1,
                labels.len()
            )));
        }
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPath("labels do not alternate".into()));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidPath(format!("vertex {v} repeats")));
            }
        }
        Ok(AlternatingPath { vertices, labels })
    }

    /// A path whose first edge is labelled `K`.
    pub fn k_first(vertices: Vec<Vertex>) -> Result<Self> {
        let labels = (0..vertices.len().saturating_sub(1))
            .map(|i| if i % 2 == 0 { Label::K } else { Label::F })
            .collect();
        Self::new(vertices, labels)
    }

    /// The zero-length path at `v`.
    pub fn trivial(v: Vertex) -> Self {
        AlternatingPath {
            vertices: alloc::vec![v],
            labels: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Edges in path order with their labels.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, Label)> + '_ {
        self.vertices
            .windows(2)
            .zip(&self.labels)
            .map(|(w, &l)| (edge(w[0], w[1]), l))
    }

    pub fn k_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges().filter(|&(_, l)| l == Label::K).map(|(e, _)| e)
    }

    pub fn f_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges().filter(|&(_, l)| l == Label::F).map(|(e, _)| e)
    }

    /// The same path traversed backwards.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut labels = self.labels.clone();
        labels.reverse();
        AlternatingPath { vertices, labels }
    }

    /// `self` followed by one more edge to `v`.
    pub fn extended(&self, v: Vertex) -> Result<Self> {
        let label = self.labels.last().map_or(Label::K, |l| l.flip());
        let mut vertices = self.vertices.clone();
        vertices.push(v);
        let mut labels = self.labels.clone();
        labels.push(label);
        Self::new(vertices, labels)
    }

    /// Drops the last edge; `None` on a zero-length path.
    pub fn truncated(&self) -> Option<Self> {
        if self.labels.is_empty() {
            return None;
        }
        let mut p = self.clone();
        p.vertices.pop();
        p.labels.pop();
        Some(p)
    }

    /// True iff `self` starts with a `K` edge, its `F` edges lie in `f`, its
    /// `K` edges avoid `f`, and both endpoints are exposed by `f`.
    pub fn is_augmenting_for(&self, f: &Matching) -> bool {
        self.len() % 2 == 1
            && self.labels[0] == Label::K
            && !f.covers(self.start())
            && !f.covers(self.end())
            && self.edges().all(|(e, l)| match l {
                Label::F => f.contains(e),
                Label::K => !f.contains(e),
            })
    }
}

impl fmt::Display for AlternatingPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                let sep = match self.labels[i - 1] {
                    Label::K => "~",
                    Label::F => "=",
                };
                write!(f, "{sep}")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// True iff `p` is simple, starts with a `K` edge, alternates, and every
/// `K`-labelled edge lies in `k` and every `F`-labelled edge lies in `f`.
pub fn validate_alternating_path(p: &AlternatingPath, f: &Matching, k: &BTreeSet<Edge>) -> bool {
    let mut seen = BTreeSet::new();
    if !p.vertices.iter().all(|&v| seen.insert(v)) {
        return false;
    }
    if p.labels.first().is_some_and(|&l| l != Label::K) {
        return false;
    }
    if p.labels.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    p.edges().all(|(e, l)| match l {
        Label::K => k.contains(&e),
        Label::F => f.contains(e),
    })
}

/// `edges` with the edges of `p` toggled.
pub fn toggle_path_edges(edges: &BTreeSet<Edge>, p: &AlternatingPath) -> BTreeSet<Edge> {
    let mut out = edges.clone();
    for (e, _) in p.edges() {
        if !out.remove(&e) {
            out.insert(e);
        }
    }
    out
}

/// Augments `f` along `p`: `f`'s edges off the path plus the path's `K`
/// edges. The result is one edge larger than `f`.
pub fn symmetric_difference(f: &Matching, p: &AlternatingPath) -> Result<Matching> {
    if !p.is_augmenting_for(f) {
        return Err(Error::InvalidPath(format!(
            "{p} is not an augmenting alternating path for {f}"
        )));
    }
    let toggled = toggle_path_edges(&f.edges, p);
    debug_assert!(validate_matching(&toggled, None));
    Ok(Matching::from_set_unchecked(toggled))
}

/// An ordered family of matchings; the index of a matching is its color.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ColoredFamily {
    vertex_count: usize,
    matchings: Vec<Matching>,
}

impl ColoredFamily {
    pub fn new(vertex_count: usize, matchings: Vec<Matching>) -> Result<Self> {
        for m in &matchings {
            for e in m.edges() {
                e.check_range(vertex_count)?;
            }
        }
        Ok(ColoredFamily {
            vertex_count,
            matchings,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn get(&self, color: usize) -> Option<&Matching> {
        self.matchings.get(color)
    }

    pub fn push(&mut self, m: Matching) -> Result<()> {
        for e in m.edges() {
            e.check_range(self.vertex_count)?;
        }
        self.matchings.push(m);
        Ok(())
    }
}

/// A matching whose edges are each assigned a distinct color.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RainbowMatching {
    assignment: BTreeMap<usize, Edge>,
}

impl RainbowMatching {
    pub fn new() -> Self {
        RainbowMatching::default()
    }

    /// Builds an assignment without checking it against any family.
    pub fn from_assignment<I: IntoIterator<Item = (usize, Edge)>>(pairs: I) -> Self {
        RainbowMatching {
            assignment: pairs.into_iter().collect(),
        }
    }

    pub fn assignment(&self) -> &BTreeMap<usize, Edge> {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn uses_color(&self, color: usize) -> bool {
        self.assignment.contains_key(&color)
    }

    pub fn color_of(&self, e: Edge) -> Option<usize> {
        self.assignment
            .iter()
            .find_map(|(&c, &x)| (x == e).then_some(c))
    }

    /// The underlying edge set. Only meaningful when the assignment is valid.
    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.assignment.values().copied().collect()
    }

    pub(crate) fn insert(&mut self, color: usize, e: Edge) {
        self.assignment.insert(color, e);
    }

    pub(crate) fn remove_edge(&mut self, e: Edge) -> Option<usize> {
        let color = self.color_of(e)?;
        self.assignment.remove(&color);
        Some(color)
    }
}

/// True iff every assigned edge belongs to its color's matching and the
/// assigned edges are pairwise disjoint.
pub fn verify_rainbow(family: &ColoredFamily, rm: &RainbowMatching) -> bool {
    let members = rm
        .assignment
        .iter()
        .all(|(&c, &e)| family.get(c).is_some_and(|m| m.contains(e)) && e.hi < family.vertex_count);
    members && validate_matching(rm.assignment.values(), Some(family.vertex_count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(pairs: &[(usize, usize)]) -> Matching {
        Matching::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn kset(pairs: &[(usize, usize)]) -> BTreeSet<Edge> {
        pairs.iter().map(|&(u, v)| edge(u, v)).collect()
    }

    #[test]
    fn edges_are_canonical() {
        assert_eq!(edge(3, 1), edge(1, 3));
        assert_eq!(edge(3, 1).endpoints(), (1, 3));
        assert_eq!(Edge::new(2, 2), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn validate_matching_examples() {
        assert!(validate_matching(&kset(&[(0, 1), (2, 3)]), None));
        assert!(!validate_matching(&kset(&[(0, 1), (1, 2)]), None));
        assert!(validate_matching(&BTreeSet::new(), None));
        assert!(!validate_matching(&kset(&[(0, 4)]), Some(4)));
    }

    #[test]
    fn graph_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(_))
        ));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn matching_rejects_overlap() {
        assert!(matches!(
            Matching::from_pairs([(0, 1), (1, 2)]),
            Err(Error::OverlappingEdges(..))
        ));
        let f = m(&[(0, 1), (2, 3)]);
        assert_eq!(f.partner(3), Some(2));
        assert_eq!(f.partner(4), None);
        assert_eq!(f.mates(5), vec![Some(1), Some(0), Some(3), Some(2), None]);
    }

    #[test]
    fn symmetric_difference_examples() {
        let p = AlternatingPath::k_first(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(
            symmetric_difference(&m(&[(1, 2)]), &p).unwrap(),
            m(&[(0, 1), (2, 3)])
        );

        let p = AlternatingPath::k_first(vec![0, 1]).unwrap();
        assert_eq!(
            symmetric_difference(&Matching::new(), &p).unwrap(),
            m(&[(0, 1)])
        );

        let f = m(&[(1, 2), (3, 4)]);
        let p = AlternatingPath::k_first(vec![0, 1, 2, 3, 4, 5]).unwrap();
        let out = symmetric_difference(&f, &p).unwrap();
        assert_eq!(out, m(&[(0, 1), (2, 3), (4, 5)]));
        assert_eq!(out.len(), 3);
    }

    #[test]
    fn symmetric_difference_rejects_non_augmenting() {
        // ends at a covered vertex
        let p = AlternatingPath::k_first(vec![0, 1, 2]).unwrap();
        assert!(symmetric_difference(&m(&[(1, 2)]), &p).is_err());
        // F-labelled edge not in f
        let p = AlternatingPath::k_first(vec![0, 1, 2, 3]).unwrap();
        assert!(symmetric_difference(&m(&[(1, 4)]), &p).is_err());
        // starts at a covered vertex
        let p = AlternatingPath::k_first(vec![1, 0]).unwrap();
        assert!(symmetric_difference(&m(&[(1, 2)]), &p).is_err());
    }

    #[test]
    fn validate_alternating_path_examples() {
        let p = AlternatingPath::k_first(vec![0, 1, 2]).unwrap();
        assert!(validate_alternating_path(
            &p,
            &m(&[(1, 2)]),
            &kset(&[(0, 1)])
        ));
        assert!(!validate_alternating_path(
            &p,
            &m(&[(1, 2)]),
            &BTreeSet::new()
        ));

        // 0-1-0 cannot even be constructed as a path value; the validator
        // rejects it when handed raw data too.
        assert!(AlternatingPath::k_first(vec![0, 1, 0]).is_err());
        let raw = AlternatingPath {
            vertices: vec![0, 1, 0],
            labels: vec![Label::K, Label::F],
        };
        assert!(!validate_alternating_path(
            &raw,
            &m(&[(0, 1)]),
            &kset(&[(0, 1)])
        ));
    }

    #[test]
    fn path_constructor_checks() {
        assert!(AlternatingPath::new(vec![0, 1, 2], vec![Label::K, Label::K]).is_err());
        assert!(AlternatingPath::new(vec![0, 1, 2], vec![Label::K]).is_err());
        assert!(AlternatingPath::new(vec![], vec![]).is_err());
        let p = AlternatingPath::trivial(4);
        assert_eq!(p.len(), 0);
        assert_eq!(p.start(), p.end());
    }

    #[test]
    fn reversal_and_extension() {
        let p = AlternatingPath::k_first(vec![0, 1, 2, 3]).unwrap();
        let r = p.reversed();
        assert_eq!(r.vertices(), &[3, 2, 1, 0]);
        assert_eq!(r.labels(), &[Label::K, Label::F, Label::K]);
        let e = p.truncated().unwrap();
        assert_eq!(e.end(), 2);
        assert_eq!(e.extended(3).unwrap(), p);
        assert!(p.extended(1).is_err());
    }

    #[test]
    fn rainbow_verification() {
        let fam = ColoredFamily::new(4, vec![m(&[(0, 1), (2, 3)]), m(&[(1, 2), (0, 3)])]).unwrap();
        let good = RainbowMatching::from_assignment([(0, edge(0, 1))]);
        assert!(verify_rainbow(&fam, &good));
        let clash = RainbowMatching::from_assignment([(0, edge(0, 1)), (1, edge(1, 2))]);
        assert!(!verify_rainbow(&fam, &clash));
        let absent = RainbowMatching::from_assignment([(1, edge(2, 3))]);
        assert!(!verify_rainbow(&fam, &absent));
        let no_color = RainbowMatching::from_assignment([(5, edge(2, 3))]);
        assert!(!verify_rainbow(&fam, &no_color));
    }

    #[test]
    fn family_rejects_out_of_range() {
        assert!(ColoredFamily::new(3, vec![m(&[(0, 3)])]).is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::from_edges(5, [(0, 1), (1, 3), (3, 4), (2, 4)]).unwrap();
        let keep: BTreeSet<_> = [1, 3, 4].into_iter().collect();
        let (h, labels) = g.induced(&keep);
        assert_eq!(labels, vec![1, 3, 4]);
        assert_eq!(h.edges(), &kset(&[(0, 1), (1, 2)]));
    }
}
