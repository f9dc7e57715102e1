//! Multicolored augmenting paths and rainbow matchings.
//!
//! Given a matching `F` and more than `2|F|` augmenting `F`-alternating paths
//! of distinct colors, [`multicolored_augmenting_path`] picks one enriching
//! edge from each path in turn until `K` (the picked edges) admits a `K`–`F`
//! augmenting path. Each pick strictly enlarges `OR(K, F)`, which stays inside
//! the `2|F|` covered vertices until augmentation becomes possible, so the
//! paths cannot run out first.
//!
//! [`rainbow_matching`] grows a rainbow matching with that step: at size `k`
//! it takes `2k + 1` unrepresented colors, one augmenting path from each (the
//! color's matching is larger than the current one), and augments along the
//! multicolored result. With `3n - 2` colors this reaches size `n`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::enrich::Enricher;
use crate::error::{Error, Result};
use crate::graph::{
    symmetric_difference, AlternatingPath, ColoredFamily, Edge, Label, Matching, RainbowMatching,
    Vertex,
};
use crate::matching::find_augmenting_path;
use crate::reach::{find_kf_augmenting_path, ReachConfig};

/// A matching `F` with augmenting paths tagged by pairwise distinct colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPathFamily {
    vertex_count: usize,
    f: Matching,
    paths: Vec<(usize, AlternatingPath)>,
}

impl ColoredPathFamily {
    pub fn new(vertex_count: usize, f: Matching) -> Result<Self> {
        if let Some(&e) = f.edges().iter().find(|e| e.hi() >= vertex_count) {
            return Err(Error::VertexOutOfRange {
                vertex: e.hi(),
                vertex_count,
            });
        }
        Ok(ColoredPathFamily {
            vertex_count,
            f,
            paths: Vec::new(),
        })
    }

    pub fn with_paths<I>(vertex_count: usize, f: Matching, paths: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, AlternatingPath)>,
    {
        let mut fam = Self::new(vertex_count, f)?;
        for (color, p) in paths {
            fam.push(color, p)?;
        }
        Ok(fam)
    }

    /// Adds a path; it must be augmenting for `F` and its color unused.
    pub fn push(&mut self, color: usize, p: AlternatingPath) -> Result<()> {
        if let Some(&v) = p.vertices().iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        if !p.is_augmenting_for(&self.f) {
            return Err(Error::InvalidPath(format!(
                "{p} is not augmenting for {}",
                self.f
            )));
        }
        if self.paths.iter().any(|&(c, _)| c == color) {
            return Err(Error::Precondition(format!("color {color} used twice")));
        }
        self.paths.push((color, p));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn f(&self) -> &Matching {
        &self.f
    }

    pub fn paths(&self) -> &[(usize, AlternatingPath)] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// An augmenting path whose `K` edges carry pairwise distinct colors, each
/// edge lying on the family path of its color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulticoloredPath {
    pub path: AlternatingPath,
    pub colors: BTreeMap<Edge, usize>,
}

impl MulticoloredPath {
    /// True iff the path is augmenting for `fam.f()`, every `K` edge has a
    /// color whose path contains it, and no color repeats.
    pub fn is_valid_for(&self, fam: &ColoredPathFamily) -> bool {
        if !self.path.is_augmenting_for(fam.f()) {
            return false;
        }
        let mut used = BTreeSet::new();
        self.path.k_edges().all(|e| {
            let Some(&c) = self.colors.get(&e) else {
                return false;
            };
            let on_path = fam
                .paths
                .iter()
                .any(|(pc, p)| *pc == c && p.k_edges().any(|x| x == e));
            on_path && used.insert(c)
        }) && self.colors.len() == self.path.k_edges().count()
    }
}

/// Like [`multicolored_augmenting_path`] without the size precondition:
/// `Ok(None)` if the paths run out before augmentation becomes possible.
pub fn try_multicolored_augmenting_path(
    fam: &ColoredPathFamily,
) -> Result<Option<MulticoloredPath>> {
    let mut cfg = ReachConfig::new(fam.vertex_count, fam.f.clone(), BTreeSet::new())?;
    let mut colors: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut steps = fam.paths.iter();
    loop {
        if let Some(path) = find_kf_augmenting_path(&cfg)? {
            let colors = path.k_edges().map(|e| (e, colors[&e])).collect();
            return Ok(Some(MulticoloredPath { path, colors }));
        }
        let Some((color, p)) = steps.next() else {
            return Ok(None);
        };
        let e = Enricher::new(&cfg).first_on_path(p)?;
        colors.insert(e, *color);
        cfg = cfg.with_k_edge(e)?;
    }
}

/// A multicolored augmenting path, given more than `2|F|` colored paths.
pub fn multicolored_augmenting_path(fam: &ColoredPathFamily) -> Result<MulticoloredPath> {
    if fam.len() <= 2 * fam.f.len() {
        return Err(Error::Precondition(format!(
            "need more than {} paths, got {}",
            2 * fam.f.len(),
            fam.len()
        )));
    }
    try_multicolored_augmenting_path(fam)?.ok_or_else(|| {
        Error::ContractViolation(format!(
            "{} colored paths exhausted without a multicolored augmenting path for {}",
            fam.len(),
            fam.f
        ))
    })
}

/// Largest vertex count accepted by [`brute_force_multicolored`].
pub const MULTICOLORED_ORACLE_BOUND: usize = 16;

/// Exhaustive search over simple alternating paths using the family's `K`
/// edges, accepting a path if its `K` edges admit distinct colors.
pub fn brute_force_multicolored(fam: &ColoredPathFamily) -> Result<Option<MulticoloredPath>> {
    if fam.vertex_count > MULTICOLORED_ORACLE_BOUND {
        return Err(Error::OracleBound(format!(
            "{} vertices, bound is {MULTICOLORED_ORACLE_BOUND}",
            fam.vertex_count
        )));
    }
    let n = fam.vertex_count;
    let mut carriers: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (c, p) in &fam.paths {
        for e in p.k_edges() {
            carriers.entry(e).or_default().push(*c);
        }
    }
    let mut k_adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for e in carriers.keys() {
        k_adj[e.lo()].push(e.hi());
        k_adj[e.hi()].push(e.lo());
    }
    let mates = fam.f.mates(n);

    struct Dfs<'a> {
        k_adj: &'a [Vec<Vertex>],
        mates: &'a [Option<Vertex>],
        carriers: &'a BTreeMap<Edge, Vec<usize>>,
        on_path: Vec<bool>,
        path: Vec<Vertex>,
    }

    impl Dfs<'_> {
        // `path` ends at an exposed vertex or just after an F edge.
        fn extend(&mut self) -> Option<(AlternatingPath, BTreeMap<Edge, usize>)> {
            let v = *self.path.last().unwrap();
            for i in 0..self.k_adj[v].len() {
                let b = self.k_adj[v][i];
                if self.on_path[b] {
                    continue;
                }
                self.on_path[b] = true;
                self.path.push(b);
                let found = match self.mates[b] {
                    None => {
                        let p = AlternatingPath::k_first(self.path.clone()).unwrap();
                        distinct_colors(&p, self.carriers).map(|c| (p, c))
                    }
                    Some(c) if !self.on_path[c] => {
                        self.on_path[c] = true;
                        self.path.push(c);
                        let r = self.extend();
                        self.path.pop();
                        self.on_path[c] = false;
                        r
                    }
                    Some(_) => None,
                };
                self.path.pop();
                self.on_path[b] = false;
                if found.is_some() {
                    return found;
                }
            }
            None
        }
    }

    let mut dfs = Dfs {
        k_adj: &k_adj,
        mates: &mates,
        carriers: &carriers,
        on_path: vec![false; n],
        path: Vec::new(),
    };
    for a in (0..n).filter(|&v| mates[v].is_none()) {
        dfs.on_path[a] = true;
        dfs.path.push(a);
        let found = dfs.extend();
        dfs.path.pop();
        dfs.on_path[a] = false;
        if let Some((path, colors)) = found {
            return Ok(Some(MulticoloredPath { path, colors }));
        }
    }
    Ok(None)
}

/// A system of distinct colors for the `K` edges of `p`, by bipartite
/// matching of edges to colors.
fn distinct_colors(
    p: &AlternatingPath,
    carriers: &BTreeMap<Edge, Vec<usize>>,
) -> Option<BTreeMap<Edge, usize>> {
    let edges: Vec<Edge> = p.k_edges().collect();
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();

    fn try_assign(
        i: usize,
        edges: &[Edge],
        carriers: &BTreeMap<Edge, Vec<usize>>,
        owner: &mut BTreeMap<usize, usize>,
        visited: &mut BTreeSet<usize>,
    ) -> bool {
        for &c in &carriers[&edges[i]] {
            if !visited.insert(c) {
                continue;
            }
            let free = match owner.get(&c) {
                None => true,
                Some(&j) => try_assign(j, edges, carriers, owner, visited),
            };
            if free {
                owner.insert(c, i);
                return true;
            }
        }
        false
    }

    for i in 0..edges.len() {
        if !try_assign(i, &edges, carriers, &mut owner, &mut BTreeSet::new()) {
            return None;
        }
    }
    Some(owner.into_iter().map(|(c, i)| (edges[i], c)).collect())
}

/// `min(n, ⌊(m + 2) / 3⌋)`: the rainbow size guaranteed for `m` matchings of
/// size at least `n`.
pub fn guarantee_floor(m: usize, n: usize) -> usize {
    n.min(m.div_ceil(3))
}

/// One augmentation of the growth loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation {
    /// Size of the rainbow matching before the step.
    pub size_before: usize,
    /// The unrepresented colors whose paths were offered, ascending.
    pub offered: Vec<usize>,
    pub path: MulticoloredPath,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowRun {
    pub matching: RainbowMatching,
    /// Size after the greedy start, before any augmentation.
    pub greedy_size: usize,
    pub steps: Vec<Augmentation>,
}

/// The first `n` edges of every matching, in canonical order.
fn truncated_family(family: &ColoredFamily, n: usize) -> Result<Vec<Matching>> {
    family
        .matchings()
        .iter()
        .enumerate()
        .map(|(color, m)| {
            if m.len() < n {
                return Err(Error::MatchingTooSmall {
                    color,
                    size: m.len(),
                    required: n,
                });
            }
            Matching::from_edges(m.edges().iter().copied().take(n))
        })
        .collect()
}

/// [`rainbow_matching`] with a record of every augmentation.
pub fn grow_rainbow(family: &ColoredFamily, n: usize) -> Result<RainbowRun> {
    if n == 0 {
        return Err(Error::Precondition("target size must be positive".into()));
    }
    let matchings = truncated_family(family, n)?;
    let m = matchings.len();
    let floor = guarantee_floor(m, n);

    let mut rm = RainbowMatching::new();
    let mut covered = BTreeSet::new();
    for (color, mc) in matchings.iter().enumerate() {
        if rm.len() == n {
            break;
        }
        if let Some(&e) = mc
            .edges()
            .iter()
            .find(|e| !covered.contains(&e.lo()) && !covered.contains(&e.hi()))
        {
            rm.insert(color, e);
            covered.insert(e.lo());
            covered.insert(e.hi());
        }
    }
    let greedy_size = rm.len();

    let mut steps = Vec::new();
    while rm.len() < n {
        let k = rm.len();
        let unrepresented: Vec<usize> = (0..m).filter(|&c| !rm.uses_color(c)).collect();
        let full = unrepresented.len() > 2 * k;
        if !full && k < floor {
            return Err(Error::ContractViolation(format!(
                "only {} unrepresented colors at size {k}, below the guaranteed {floor}",
                unrepresented.len()
            )));
        }
        let offered: Vec<usize> = unrepresented.into_iter().take(2 * k + 1).collect();
        if offered.is_empty() {
            break;
        }
        let f = Matching::from_edges(rm.edge_set())?;
        let mut fam = ColoredPathFamily::new(family.vertex_count(), f.clone())?;
        for &c in &offered {
            fam.push(c, find_augmenting_path(&f, &matchings[c])?)?;
        }
        let found = if full {
            Some(multicolored_augmenting_path(&fam)?)
        } else {
            try_multicolored_augmenting_path(&fam)?
        };
        let Some(mp) = found else {
            break;
        };
        let grown = symmetric_difference(&f, &mp.path)?;
        for (e, label) in mp.path.edges() {
            match label {
                Label::F => {
                    rm.remove_edge(e);
                }
                Label::K => rm.insert(mp.colors[&e], e),
            }
        }
        if rm.len() != k + 1 || rm.edge_set() != *grown.edges() {
            return Err(Error::ContractViolation(format!(
                "augmentation along {} did not grow the rainbow matching by one",
                mp.path
            )));
        }
        steps.push(Augmentation {
            size_before: k,
            offered,
            path: mp,
        });
    }
    if rm.len() < floor {
        return Err(Error::ContractViolation(format!(
            "rainbow matching of size {} is below the guaranteed {floor}",
            rm.len()
        )));
    }
    Ok(RainbowRun {
        matching: rm,
        greedy_size,
        steps,
    })
}

/// A rainbow matching of size at least `min(n, ⌊(m + 2) / 3⌋)` for a family
/// of `m` matchings each of size at least `n`; size `n` when `m ≥ 3n - 2`.
///
/// Matchings larger than `n` are cut to their first `n` edges in canonical
/// order. Once fewer than `2k + 1` colors remain unrepresented at size `k`,
/// the remaining colors are still tried, so the result may exceed the
/// guarantee.
pub fn rainbow_matching(family: &ColoredFamily, n: usize) -> Result<RainbowMatching> {
    grow_rainbow(family, n).map(|run| run.matching)
}

/// Limits on the instances the exact rainbow oracle accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_colors: usize,
    pub max_total_edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_colors: 32,
            max_total_edges: 512,
        }
    }
}

fn check_limits(family: &ColoredFamily, limits: OracleLimits) -> Result<()> {
    let total: usize = family.matchings().iter().map(Matching::len).sum();
    if family.len() > limits.max_colors || total > limits.max_total_edges {
        return Err(Error::OracleBound(format!(
            "{} colors with {total} edges, limits are {} and {}",
            family.len(),
            limits.max_colors,
            limits.max_total_edges
        )));
    }
    Ok(())
}

struct Backtrack<'a> {
    family: &'a ColoredFamily,
    order: Vec<usize>,
    used: Vec<bool>,
    chosen: Vec<(usize, Edge)>,
    best: Vec<(usize, Edge)>,
    goal: usize,
}

impl Backtrack<'_> {
    fn new(family: &ColoredFamily, goal: usize) -> Backtrack<'_> {
        let mut order: Vec<usize> = (0..family.len()).collect();
        order.sort_by_key(|&c| (family.matchings()[c].len(), c));
        Backtrack {
            family,
            order,
            used: vec![false; family.vertex_count()],
            chosen: Vec::new(),
            best: Vec::new(),
            goal,
        }
    }

    /// Returns true once a selection of size `goal` is recorded.
    fn run(&mut self, at: usize) -> bool {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= self.goal {
                return true;
            }
        }
        let remaining = self.order.len() - at;
        if at == self.order.len() || self.chosen.len() + remaining <= self.best.len() {
            return false;
        }
        let color = self.order[at];
        for &e in self.family.matchings()[color].edges() {
            if self.used[e.lo()] || self.used[e.hi()] {
                continue;
            }
            self.used[e.lo()] = true;
            self.used[e.hi()] = true;
            self.chosen.push((color, e));
            let done = self.run(at + 1);
            self.chosen.pop();
            self.used[e.lo()] = false;
            self.used[e.hi()] = false;
            if done {
                return true;
            }
        }
        self.run(at + 1)
    }
}

/// A rainbow matching with at least `target` edges, if one exists, by
/// exhaustive backtracking.
pub fn brute_force_rainbow(
    family: &ColoredFamily,
    target: usize,
) -> Result<Option<RainbowMatching>> {
    brute_force_rainbow_with(family, target, OracleLimits::default())
}

pub fn brute_force_rainbow_with(
    family: &ColoredFamily,
    target: usize,
    limits: OracleLimits,
) -> Result<Option<RainbowMatching>> {
    check_limits(family, limits)?;
    let mut bt = Backtrack::new(family, target);
    bt.run(0);
    Ok((bt.best.len() >= target).then(|| RainbowMatching::from_assignment(bt.best)))
}

/// A rainbow matching of maximum size.
pub fn max_rainbow_matching(family: &ColoredFamily) -> Result<RainbowMatching> {
    max_rainbow_matching_with(family, OracleLimits::default())
}

pub fn max_rainbow_matching_with(
    family: &ColoredFamily,
    limits: OracleLimits,
) -> Result<RainbowMatching> {
    check_limits(family, limits)?;
    let ceiling = family.len().min(family.vertex_count() / 2);
    let mut bt = Backtrack::new(family, ceiling);
    bt.run(0);
    Ok(RainbowMatching::from_assignment(bt.best))
}
