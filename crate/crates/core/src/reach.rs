//! Odd and even alternating reachability.
//!
//! Fix a matching `F` and an edge set `K` disjoint from it. A `K`–`F`
//! alternating path from `a` is a simple path whose first edge is in `K`
//! and whose edges alternate between `K` and `F`. A vertex is *oddly*
//! reachable from `a` if such a path ends at it with a `K` edge, and
//! *evenly* reachable if one ends at it with an `F` edge. `OR`/`ER`
//! collect these; `DR` is their intersection. The global sets take the
//! union over all `F`-exposed sources, and every exposed vertex is evenly
//! reachable from itself through the zero-length path.
//!
//! [`reach_from`] does not include the source in its own sets: a simple path
//! cannot return to its start.
//!
//! # Method
//!
//! Let `a` be the source. No exposed vertex other than `a` can be interior to
//! an alternating path, and neither can `a`'s partner (its `F` edge leads
//! back to `a`). Delete those vertices and `a`'s `F` edge. What remains is a
//! graph in which `F` leaves only `a` exposed, and there a vertex `x ≠ a` is
//! evenly reachable iff the graph minus `x` has a perfect matching, i.e. iff
//! `x` is an outer vertex of the exhausted Edmonds search rooted at `a`.
//! A covered `x` is oddly reachable iff its partner is evenly reachable, and
//! a deleted vertex is oddly reachable iff it has a `K` neighbour that is
//! outer (the source included).
//!
//! [`brute_force_reach`] enumerates simple paths instead and serves as the
//! ground truth for small instances.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::blossom::{Search, NONE};
use crate::error::{Error, Result};
use crate::graph::{adjacency, AlternatingPath, Edge, Graph, Label, Matching, Vertex};
use crate::matching::near_perfect_matching;

/// Largest vertex count [`brute_force_reach`] accepts by default.
pub const DEFAULT_ORACLE_BOUND: usize = 12;

/// A matching `F` and a disjoint edge set `K` over `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachConfig {
    vertex_count: usize,
    f: Matching,
    k: BTreeSet<Edge>,
    f_mate: Vec<Option<Vertex>>,
    k_adj: Vec<Vec<Vertex>>,
    all_adj: Vec<Vec<Vertex>>,
}

impl ReachConfig {
    pub fn new(vertex_count: usize, f: Matching, k: BTreeSet<Edge>) -> Result<Self> {
        for e in f.edges().iter().chain(&k) {
            if e.hi() >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: e.hi(),
                    vertex_count,
                });
            }
        }
        if let Some(&e) = k.iter().find(|&&e| f.contains(e)) {
            return Err(Error::EdgeInBoth(e));
        }
        let f_mate = f.mates(vertex_count);
        let k_adj = adjacency(vertex_count, k.iter().copied());
        let all_adj = adjacency(vertex_count, k.iter().chain(f.edges()).copied());
        Ok(ReachConfig {
            vertex_count,
            f,
            k,
            f_mate,
            k_adj,
            all_adj,
        })
    }

    /// `F = f`, `K = E(g) \ f`.
    pub fn from_graph(g: &Graph, f: &Matching) -> Result<Self> {
        Self::new(g.vertex_count(), f.clone(), g.edges_outside(f))
    }

    /// The same configuration with `e` added to `K`.
    pub fn with_k_edge(&self, e: Edge) -> Result<Self> {
        let mut k = self.k.clone();
        k.insert(e);
        Self::new(self.vertex_count, self.f.clone(), k)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn f(&self) -> &Matching {
        &self.f
    }

    pub fn k(&self) -> &BTreeSet<Edge> {
        &self.k
    }

    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.f_mate.get(v).copied().flatten()
    }

    pub fn is_exposed(&self, v: Vertex) -> bool {
        self.partner(v).is_none()
    }

    /// Vertices not covered by `F`, ascending.
    pub fn exposed(&self) -> Vec<Vertex> {
        (0..self.vertex_count)
            .filter(|&v| self.is_exposed(v))
            .collect()
    }

    pub(crate) fn k_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.k_adj[v]
    }
}

/// Path parity: odd paths end with a `K` edge, even paths with an `F` edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Odd,
    Even,
}

/// `OR`, `ER` and `DR` together with one witness path per reached
/// (vertex, parity) pair.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReachSets {
    or_set: BTreeSet<Vertex>,
    er_set: BTreeSet<Vertex>,
    dr_set: BTreeSet<Vertex>,
    witnesses: BTreeMap<(Vertex, Parity), AlternatingPath>,
}

impl ReachSets {
    fn from_parts(
        or_set: BTreeSet<Vertex>,
        er_set: BTreeSet<Vertex>,
        witnesses: BTreeMap<(Vertex, Parity), AlternatingPath>,
    ) -> Self {
        let dr_set = or_set.intersection(&er_set).copied().collect();
        ReachSets {
            or_set,
            er_set,
            dr_set,
            witnesses,
        }
    }

    pub fn or_set(&self) -> &BTreeSet<Vertex> {
        &self.or_set
    }

    pub fn er_set(&self) -> &BTreeSet<Vertex> {
        &self.er_set
    }

    pub fn dr_set(&self) -> &BTreeSet<Vertex> {
        &self.dr_set
    }

    pub fn witnesses(&self) -> &BTreeMap<(Vertex, Parity), AlternatingPath> {
        &self.witnesses
    }

    pub fn witness(&self, v: Vertex, parity: Parity) -> Option<&AlternatingPath> {
        self.witnesses.get(&(v, parity))
    }

    /// Same sets, witnesses ignored.
    pub fn same_sets(&self, other: &ReachSets) -> bool {
        self.or_set == other.or_set && self.er_set == other.er_set
    }
}

/// Membership masks for a single source, plus the finished search for
/// witness extraction.
struct SourceReach<'a> {
    source: Vertex,
    odd: Vec<bool>,
    even: Vec<bool>,
    search: Search<'a>,
    dead: Vec<bool>,
}

fn search_from<'a>(cfg: &'a ReachConfig, a: Vertex, alive: &'a mut Vec<bool>) -> SourceReach<'a> {
    let n = cfg.vertex_count;
    let mut mate: Vec<usize> = cfg.f_mate.iter().map(|m| m.unwrap_or(NONE)).collect();
    if let Some(p) = cfg.f_mate[a] {
        mate[a] = NONE;
        mate[p] = NONE;
    }
    alive.clear();
    alive.extend((0..n).map(|v| v == a || mate[v] != NONE));
    let dead: Vec<bool> = alive.iter().map(|&x| !x).collect();

    let mut search = Search::new(&cfg.all_adj, alive, mate);
    // `a` is the only exposed live vertex, so the tree cannot end in an
    // augmenting path.
    let found = search.grow(a);
    debug_assert!(found.is_none());

    let mut even = vec![false; n];
    for (v, slot) in even.iter_mut().enumerate() {
        *slot = v != a && !dead[v] && search.is_outer(v);
    }
    let mut odd = vec![false; n];
    for v in 0..n {
        if v == a {
            continue;
        }
        odd[v] = if dead[v] {
            cfg.k_adj[v].iter().any(|&u| !dead[u] && search.is_outer(u))
        } else {
            even[search.mate[v]]
        };
    }
    SourceReach {
        source: a,
        odd,
        even,
        search,
        dead,
    }
}

impl SourceReach<'_> {
    fn even_witness(&self, v: Vertex) -> Result<AlternatingPath> {
        let path = self.search.even_path(v, self.source).ok_or_else(|| {
            Error::ContractViolation(format!(
                "search tree yields no simple even path from {} to {v}",
                self.source
            ))
        })?;
        AlternatingPath::k_first(path)
    }

    fn odd_witness(&self, cfg: &ReachConfig, v: Vertex) -> Result<AlternatingPath> {
        if self.dead[v] {
            let u = cfg.k_adj[v]
                .iter()
                .copied()
                .find(|&u| !self.dead[u] && self.search.is_outer(u))
                .ok_or_else(|| Error::ContractViolation(format!("{v} has no outer neighbour")))?;
            let base = if u == self.source {
                AlternatingPath::trivial(u)
            } else {
                self.even_witness(u)?
            };
            base.extended(v)
        } else {
            let p = self.even_witness(self.search.mate[v])?;
            p.truncated()
                .ok_or_else(|| Error::ContractViolation(format!("empty witness for {v}")))
        }
    }

    fn into_sets(self, cfg: &ReachConfig) -> Result<ReachSets> {
        let mut witnesses = BTreeMap::new();
        let mut or_set = BTreeSet::new();
        let mut er_set = BTreeSet::new();
        for v in 0..cfg.vertex_count {
            if self.odd[v] {
                or_set.insert(v);
                witnesses.insert((v, Parity::Odd), self.odd_witness(cfg, v)?);
            }
            if self.even[v] {
                er_set.insert(v);
                witnesses.insert((v, Parity::Even), self.even_witness(v)?);
            }
        }
        Ok(ReachSets::from_parts(or_set, er_set, witnesses))
    }
}

fn check_vertex(cfg: &ReachConfig, a: Vertex) -> Result<()> {
    if a >= cfg.vertex_count {
        return Err(Error::VertexOutOfRange {
            vertex: a,
            vertex_count: cfg.vertex_count,
        });
    }
    Ok(())
}

/// `OR(a,K,F)`, `ER(a,K,F)` and `DR(a,K,F)` with witnesses.
pub fn reach_from(a: Vertex, cfg: &ReachConfig) -> Result<ReachSets> {
    check_vertex(cfg, a)?;
    let mut alive = Vec::new();
    search_from(cfg, a, &mut alive).into_sets(cfg)
}

/// `OR(K,F)` and `ER(K,F)`: unions over every exposed source, with each
/// exposed vertex added to `ER` through its zero-length path. Witnesses come
/// from the smallest source that reaches each (vertex, parity) pair.
pub fn reach_global(cfg: &ReachConfig) -> Result<ReachSets> {
    let mut or_set = BTreeSet::new();
    let mut er_set = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    for a in cfg.exposed() {
        er_set.insert(a);
        witnesses.insert((a, Parity::Even), AlternatingPath::trivial(a));
    }
    for a in cfg.exposed() {
        let sets = reach_from(a, cfg)?;
        or_set.extend(sets.or_set.iter().copied());
        er_set.extend(sets.er_set.iter().copied());
        for (key, path) in sets.witnesses {
            witnesses.entry(key).or_insert(path);
        }
    }
    Ok(ReachSets::from_parts(or_set, er_set, witnesses))
}

/// `OR(K,F)` as a membership mask, without witnesses.
pub(crate) fn odd_reachable_mask(cfg: &ReachConfig) -> Vec<bool> {
    let mut out = vec![false; cfg.vertex_count];
    let mut alive = Vec::new();
    for a in cfg.exposed() {
        let r = search_from(cfg, a, &mut alive);
        for (slot, &hit) in out.iter_mut().zip(&r.odd) {
            *slot |= hit;
        }
    }
    out
}

/// `OR(K,F)` without witnesses.
pub fn odd_reachable(cfg: &ReachConfig) -> BTreeSet<Vertex> {
    odd_reachable_mask(cfg)
        .into_iter()
        .enumerate()
        .filter_map(|(v, hit)| hit.then_some(v))
        .collect()
}

/// A `K`–`F` alternating path joining two exposed vertices, if one exists.
///
/// Such a path exists iff `OR(K,F)` contains an exposed vertex.
pub fn find_kf_augmenting_path(cfg: &ReachConfig) -> Result<Option<AlternatingPath>> {
    let mut alive = Vec::new();
    for a in cfg.exposed() {
        let r = search_from(cfg, a, &mut alive);
        if let Some(w) = (0..cfg.vertex_count).find(|&w| r.odd[w] && cfg.is_exposed(w)) {
            return r.odd_witness(cfg, w).map(Some);
        }
    }
    Ok(None)
}

/// Exhaustive enumeration of simple alternating paths from `a`, accepting
/// up to [`DEFAULT_ORACLE_BOUND`] vertices.
pub fn brute_force_reach(a: Vertex, cfg: &ReachConfig) -> Result<ReachSets> {
    brute_force_reach_bounded(a, cfg, DEFAULT_ORACLE_BOUND)
}

pub fn brute_force_reach_bounded(a: Vertex, cfg: &ReachConfig, bound: usize) -> Result<ReachSets> {
    if cfg.vertex_count > bound {
        return Err(Error::OracleBound(format!(
            "{} vertices, oracle bound is {bound}",
            cfg.vertex_count
        )));
    }
    check_vertex(cfg, a)?;

    struct Walk<'a> {
        cfg: &'a ReachConfig,
        on_path: Vec<bool>,
        path: Vec<Vertex>,
        or_set: BTreeSet<Vertex>,
        er_set: BTreeSet<Vertex>,
        witnesses: BTreeMap<(Vertex, Parity), AlternatingPath>,
    }

    impl Walk<'_> {
        fn record(&mut self, parity: Parity) {
            let v = *self.path.last().unwrap();
            match parity {
                Parity::Odd => self.or_set.insert(v),
                Parity::Even => self.er_set.insert(v),
            };
            if let alloc::collections::btree_map::Entry::Vacant(slot) =
                self.witnesses.entry((v, parity))
            {
                let labels = (0..self.path.len() - 1)
                    .map(|i| if i % 2 == 0 { Label::K } else { Label::F })
                    .collect();
                slot.insert(AlternatingPath::new(self.path.clone(), labels).unwrap());
            }
        }

        // At `v` with the last edge in F (or at the source); extend by K.
        fn grow_from(&mut self, v: Vertex) {
            for &b in self.cfg.k_neighbours(v) {
                if self.on_path[b] {
                    continue;
                }
                self.on_path[b] = true;
                self.path.push(b);
                self.record(Parity::Odd);
                if let Some(c) = self.cfg.partner(b) {
                    if !self.on_path[c] {
                        self.on_path[c] = true;
                        self.path.push(c);
                        self.record(Parity::Even);
                        self.grow_from(c);
                        self.path.pop();
                        self.on_path[c] = false;
                    }
                }
                self.path.pop();
                self.on_path[b] = false;
            }
        }
    }

    let mut walk = Walk {
        cfg,
        on_path: vec![false; cfg.vertex_count],
        path: vec![a],
        or_set: BTreeSet::new(),
        er_set: BTreeSet::new(),
        witnesses: BTreeMap::new(),
    };
    walk.on_path[a] = true;
    walk.grow_from(a);
    Ok(ReachSets::from_parts(
        walk.or_set,
        walk.er_set,
        walk.witnesses,
    ))
}

/// The two reachability conditions for hypomatchability, evaluated from the
/// smallest vertex `a` with a near-perfect matching `J` missing `a` and
/// `K = E(g) \ J`. The source counts as reached through its zero-length path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HypomatchableConditions {
    /// `V(g) = DR(a,K,J) ∪ {a}`.
    pub doubly_reachable: bool,
    /// `V(g) = ER(a,K,J) ∪ {a}`.
    pub evenly_reachable: bool,
}

/// `None` when no near-perfect matching misses vertex 0 (or `g` is empty).
pub fn hypomatchable_conditions(g: &Graph) -> Option<HypomatchableConditions> {
    let a = 0;
    if g.vertex_count() == 0 {
        return None;
    }
    let j = near_perfect_matching(g, a).ok()?;
    let cfg = ReachConfig::from_graph(g, &j).ok()?;
    let sets = reach_from(a, &cfg).ok()?;
    let n = g.vertex_count();
    let covers = |s: &BTreeSet<Vertex>| (0..n).all(|v| v == a || s.contains(&v));
    Some(HypomatchableConditions {
        doubly_reachable: covers(&sets.dr_set),
        evenly_reachable: covers(&sets.er_set),
    })
}

/// Hypomatchability decided by even reachability from one vertex.
pub fn hypomatchable_via_reach(g: &Graph) -> bool {
    if g.vertex_count() == 0 {
        return true;
    }
    hypomatchable_conditions(g).is_some_and(|c| c.evenly_reachable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge, validate_alternating_path};

    fn m(pairs: &[(usize, usize)]) -> Matching {
        Matching::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn ks(pairs: &[(usize, usize)]) -> BTreeSet<Edge> {
        pairs.iter().map(|&(u, v)| edge(u, v)).collect()
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn cfg(n: usize, f: &[(usize, usize)], k: &[(usize, usize)]) -> ReachConfig {
        ReachConfig::new(n, m(f), ks(k)).unwrap()
    }

    fn c5() -> ReachConfig {
        let f = [(1, 2), (3, 4)];
        let k = [(0, 1), (2, 3), (4, 0)];
        cfg(5, &f, &k)
    }

    #[test]
    fn reach_from_examples() {
        let c = cfg(4, &[(1, 2)], &[(0, 1), (2, 3)]);
        let r = reach_from(0, &c).unwrap();
        assert_eq!(r.or_set(), &set(&[1, 3]));
        assert_eq!(r.er_set(), &set(&[2]));

        let c = cfg(2, &[], &[(0, 1)]);
        let r = reach_from(0, &c).unwrap();
        assert_eq!(r.or_set(), &set(&[1]));
        assert!(r.er_set().is_empty());

        let r = reach_from(0, &c5()).unwrap();
        assert_eq!(r.or_set(), &set(&[1, 2, 3, 4]));
        assert_eq!(r.er_set(), &set(&[1, 2, 3, 4]));
        assert_eq!(r.dr_set(), &set(&[1, 2, 3, 4]));
    }

    #[test]
    fn oracle_matches_examples() {
        for (c, a) in [
            (cfg(4, &[(1, 2)], &[(0, 1), (2, 3)]), 0),
            (cfg(2, &[], &[(0, 1)]), 0),
            (c5(), 0),
        ] {
            let fast = reach_from(a, &c).unwrap();
            let slow = brute_force_reach(a, &c).unwrap();
            assert!(fast.same_sets(&slow));
        }
    }

    #[test]
    fn witnesses_validate() {
        let c = c5();
        let r = reach_from(0, &c).unwrap();
        for (&(v, parity), p) in r.witnesses() {
            assert!(validate_alternating_path(p, c.f(), c.k()));
            assert_eq!(p.start(), 0);
            assert_eq!(p.end(), v);
            assert_eq!(p.len() % 2 == 1, parity == Parity::Odd);
        }
    }

    #[test]
    fn reach_global_examples() {
        let c = cfg(4, &[(1, 2)], &[(0, 1), (2, 3)]);
        let r = reach_global(&c).unwrap();
        assert_eq!(r.or_set(), &set(&[1, 3, 2, 0]));
        assert!(r.er_set().is_superset(&set(&[0, 3])));

        let c = cfg(3, &[], &[]);
        let r = reach_global(&c).unwrap();
        assert!(r.or_set().is_empty());
        assert_eq!(r.er_set(), &set(&[0, 1, 2]));

        let c = cfg(4, &[(0, 1)], &[]);
        let r = reach_global(&c).unwrap();
        assert!(r.or_set().is_empty());
        assert_eq!(r.er_set(), &set(&[2, 3]));
    }

    #[test]
    fn covered_source() {
        // Source 1 is covered by 1-2; its partner is reached oddly via 1~3=4~2.
        let c = cfg(5, &[(1, 2), (3, 4)], &[(0, 1), (1, 3), (2, 4)]);
        let fast = reach_from(1, &c).unwrap();
        let slow = brute_force_reach(1, &c).unwrap();
        assert!(fast.same_sets(&slow));
        assert!(fast.or_set().contains(&2));
        assert!(!fast.er_set().contains(&1));
    }

    #[test]
    fn rejects_overlapping_config() {
        assert_eq!(
            ReachConfig::new(3, m(&[(0, 1)]), ks(&[(0, 1)])),
            Err(Error::EdgeInBoth(edge(0, 1)))
        );
    }

    #[test]
    fn kf_augmenting_examples() {
        let c = cfg(4, &[(1, 2)], &[(0, 1), (2, 3)]);
        let p = find_kf_augmenting_path(&c).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);

        let c = cfg(3, &[(0, 1)], &[(1, 2)]);
        assert_eq!(find_kf_augmenting_path(&c).unwrap(), None);

        let c = cfg(2, &[], &[(0, 1)]);
        let p = find_kf_augmenting_path(&c).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1]);
    }

    #[test]
    fn hypomatchable_via_reach_examples() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(hypomatchable_via_reach(&c5));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!hypomatchable_via_reach(&p3));
        assert!(hypomatchable_via_reach(&Graph::new(1)));
    }

    #[test]
    fn oracle_bound_enforced() {
        let c = cfg(13, &[], &[]);
        assert!(matches!(
            brute_force_reach(0, &c),
            Err(Error::OracleBound(_))
        ));
        assert!(brute_force_reach_bounded(0, &c, 13).is_ok());
    }
}
