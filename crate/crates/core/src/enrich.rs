//! Enriching edges.
//!
//! An edge `e` is enriching for `(K, F)` if adding it to `K` strictly enlarges
//! `OR(K, F)`. When `F` is maximum in `G` and `K = E(G) \ F`, the enriching
//! non-edges are exactly those joining a Gallai–Edmonds component to `Q` or
//! to a different component. Every augmenting `F`-alternating path, even one
//! through non-edges, carries an enriching `K` edge.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gallai_edmonds::{GEDecomposition, Part};
use crate::graph::{AlternatingPath, Edge, Graph};
use crate::reach::{odd_reachable_mask, ReachConfig};

fn check_candidate(cfg: &ReachConfig, e: Edge) -> Result<()> {
    if e.hi() >= cfg.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: e.hi(),
            vertex_count: cfg.vertex_count(),
        });
    }
    if cfg.f().contains(e) {
        return Err(Error::EdgeInMatching(e));
    }
    Ok(())
}

fn strictly_grows(before: &[bool], after: &[bool]) -> bool {
    before.iter().zip(after).all(|(&b, &a)| !b || a) && before != after
}

/// True iff `OR(K ∪ {e}, F) ⊋ OR(K, F)`, with `OR` taken over all exposed
/// sources. An edge already in `K` is never enriching.
pub fn is_enriching_definitional(cfg: &ReachConfig, e: Edge) -> Result<bool> {
    check_candidate(cfg, e)?;
    if cfg.k().contains(&e) {
        return Ok(false);
    }
    let before = odd_reachable_mask(cfg);
    let after = odd_reachable_mask(&cfg.with_k_edge(e)?);
    Ok(strictly_grows(&before, &after))
}

/// The structural test: `e` joins some component `H_i` to `Q` or to another
/// component. `dec` must be the canonical decomposition of `g`.
pub fn is_enriching_structural(g: &Graph, dec: &GEDecomposition, e: Edge) -> Result<bool> {
    if e.hi() >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: e.hi(),
            vertex_count: g.vertex_count(),
        });
    }
    if g.has_edge(e) {
        return Err(Error::EdgeInGraph(e));
    }
    let locate = |v| {
        dec.part_of(v).ok_or_else(|| {
            Error::Precondition(format!("vertex {v} missing from the decomposition"))
        })
    };
    Ok(match (locate(e.lo())?, locate(e.hi())?) {
        (Part::S, _) | (_, Part::S) | (Part::Q, Part::Q) => false,
        (Part::Component(i), Part::Component(k)) => i != k,
        (Part::Component(_), Part::Q) | (Part::Q, Part::Component(_)) => true,
    })
}

/// Definitional enrichment tests against a fixed `(K, F)`, with `OR(K, F)`
/// computed once and every answer memoized.
#[derive(Clone, Debug)]
pub struct Enricher<'a> {
    cfg: &'a ReachConfig,
    base: Vec<bool>,
    memo: BTreeMap<Edge, bool>,
}

impl<'a> Enricher<'a> {
    pub fn new(cfg: &'a ReachConfig) -> Self {
        Enricher {
            cfg,
            base: odd_reachable_mask(cfg),
            memo: BTreeMap::new(),
        }
    }

    pub fn config(&self) -> &ReachConfig {
        self.cfg
    }

    pub fn is_enriching(&mut self, e: Edge) -> Result<bool> {
        check_candidate(self.cfg, e)?;
        if let Some(&known) = self.memo.get(&e) {
            return Ok(known);
        }
        let answer = !self.cfg.k().contains(&e)
            && strictly_grows(&self.base, &odd_reachable_mask(&self.cfg.with_k_edge(e)?));
        self.memo.insert(e, answer);
        Ok(answer)
    }

    /// See [`find_enriching_edge_on_path`].
    pub fn first_on_path(&mut self, p: &AlternatingPath) -> Result<Edge> {
        if !p.is_augmenting_for(self.cfg.f()) {
            return Err(Error::InvalidPath(format!(
                "{p} is not augmenting for {}",
                self.cfg.f()
            )));
        }
        if let Some(v) = p.vertices().iter().find(|&&v| v >= self.cfg.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                vertex: *v,
                vertex_count: self.cfg.vertex_count(),
            });
        }
        for e in p.k_edges() {
            if self.is_enriching(e)? {
                return Ok(e);
            }
        }
        Err(Error::ContractViolation(format!(
            "augmenting path {p} has no enriching edge for F = {} and K = {:?}",
            self.cfg.f(),
            self.cfg.k()
        )))
    }
}

/// The first `K`-labelled edge of the augmenting path `p`, in path order, that
/// is enriching for `cfg`.
///
/// Such an edge exists whenever `F` is maximum in `F ∪ K`; if none does the
/// call fails with [`Error::ContractViolation`].
pub fn find_enriching_edge_on_path(cfg: &ReachConfig, p: &AlternatingPath) -> Result<Edge> {
    Enricher::new(cfg).first_on_path(p)
}
