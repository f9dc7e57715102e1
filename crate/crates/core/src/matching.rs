//! Exact maximum matching and the matching predicates built on it.
//!
//! Ties between maximum matchings are broken by the search itself: a greedy
//! pass over vertices in ascending order (each vertex takes its smallest free
//! neighbour), then one blossom search per still-exposed vertex in ascending
//! order. The result is a fixed function of the graph.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::blossom::{maximum_mates, NONE};
use crate::error::{Error, Result};
use crate::graph::{edge, AlternatingPath, Graph, Matching, Vertex};

fn mates_to_matching(mate: &[usize]) -> Matching {
    let edges: BTreeSet<_> = mate
        .iter()
        .enumerate()
        .filter(|&(v, &u)| u != NONE && v < u)
        .map(|(v, &u)| edge(v, u))
        .collect();
    Matching::from_set_unchecked(edges)
}

/// A maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let alive = vec![true; g.vertex_count()];
    mates_to_matching(&maximum_mates(&g.adjacency(), &alive))
}

/// Maximum matching of `g` with the vertices not flagged in `alive` deleted.
pub(crate) fn maximum_matching_on(adj: &[Vec<Vertex>], alive: &[bool]) -> Matching {
    mates_to_matching(&maximum_mates(adj, alive))
}

/// The matching number `ν(g)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// `ν(g - v)` for every vertex `v`, in vertex order.
pub fn matching_numbers_without_each(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut alive = vec![true; g.vertex_count()];
    (0..g.vertex_count())
        .map(|v| {
            alive[v] = false;
            let size = maximum_matching_on(&adj, &alive).len();
            alive[v] = true;
            size
        })
        .collect()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * matching_number(g) == g.vertex_count()
}

/// True iff `g - v` has a perfect matching for every vertex `v`.
///
/// The graph with no vertices is hypomatchable (the condition is vacuous).
pub fn is_hypomatchable(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    matching_numbers_without_each(g)
        .into_iter()
        .all(|size| 2 * size + 1 == n)
}

/// A matching covering every vertex except `exposed`.
pub fn near_perfect_matching(g: &Graph, exposed: Vertex) -> Result<Matching> {
    let n = g.vertex_count();
    if exposed >= n {
        return Err(Error::VertexOutOfRange {
            vertex: exposed,
            vertex_count: n,
        });
    }
    if n % 2 == 0 {
        return Err(Error::NoNearPerfectMatching(exposed));
    }
    let mut alive = vec![true; n];
    alive[exposed] = false;
    let m = maximum_matching_on(&g.adjacency(), &alive);
    if 2 * m.len() + 1 != n {
        return Err(Error::NoNearPerfectMatching(exposed));
    }
    Ok(m)
}

/// An `f`-alternating augmenting path inside `f ∪ m`, given `|m| > |f|`.
///
/// The components of `f ∪ m` are alternating paths and cycles (an edge in
/// both forms a two-cycle and is skipped). Components are scanned from their
/// smallest `f`-exposed, `m`-covered end vertex; the first one carrying more
/// `m` edges than `f` edges is returned, its `m` edges labelled `K`.
pub fn find_augmenting_path(f: &Matching, m: &Matching) -> Result<AlternatingPath> {
    if m.len() <= f.len() {
        return Err(Error::Precondition(format!(
            "augmenting path needs |m| > |f|, got |m|={} and |f|={}",
            m.len(),
            f.len()
        )));
    }
    let n = f.vertex_bound().max(m.vertex_bound());
    let f_mate = f.mates(n);
    let m_mate = m.mates(n);
    for start in 0..n {
        if f_mate[start].is_some() || m_mate[start].is_none() {
            continue;
        }
        let mut path = vec![start];
        let mut cur = start;
        // K step along m; `cur` is f-covered or the start.
        while let Some(next) = m_mate[cur] {
            path.push(next);
            match f_mate[next] {
                None => {
                    return AlternatingPath::k_first(path);
                }
                Some(after) => {
                    path.push(after);
                    cur = after;
                }
            }
        }
    }
    Err(Error::ContractViolation(format!(
        "no augmenting path in the union of {f} and {m} although |m| > |f|"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_alternating_path;

    fn cycle(k: usize) -> Graph {
        Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    fn m(pairs: &[(usize, usize)]) -> Matching {
        Matching::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn maximum_matching_examples() {
        assert_eq!(matching_number(&cycle(3)), 1);
        assert_eq!(matching_number(&cycle(4)), 2);
        assert_eq!(matching_number(&petersen()), 5);
        assert_eq!(matching_number(&Graph::new(0)), 0);
        assert_eq!(matching_number(&Graph::new(5)), 0);
    }

    #[test]
    fn blossom_needed() {
        // Triangle with a pendant at each corner; greedy takes 0-1 first and
        // must repair through the odd cycle.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (1, 5)]).unwrap();
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn maximum_matching_is_deterministic() {
        let g = petersen();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&cycle(4)));
        assert!(!has_perfect_matching(&cycle(3)));
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!has_perfect_matching(&p5));
        assert!(has_perfect_matching(&Graph::new(0)));
    }

    #[test]
    fn hypomatchable_examples() {
        assert!(is_hypomatchable(&cycle(5)));
        assert!(!is_hypomatchable(&cycle(4)));
        assert!(is_hypomatchable(&Graph::new(1)));
        assert!(is_hypomatchable(&Graph::new(0)));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_hypomatchable(&p3));
    }

    #[test]
    fn near_perfect_examples() {
        assert_eq!(
            near_perfect_matching(&cycle(5), 0).unwrap(),
            m(&[(1, 2), (3, 4)])
        );
        assert_eq!(near_perfect_matching(&cycle(3), 2).unwrap(), m(&[(0, 1)]));
        assert_eq!(
            near_perfect_matching(&cycle(5), 2).unwrap(),
            m(&[(0, 1), (3, 4)])
        );
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            near_perfect_matching(&p3, 1),
            Err(Error::NoNearPerfectMatching(1))
        );
        assert!(near_perfect_matching(&cycle(4), 0).is_err());
    }

    #[test]
    fn augmenting_path_examples() {
        let p = find_augmenting_path(&Matching::new(), &m(&[(0, 1)])).unwrap();
        assert_eq!(p.vertices(), &[0, 1]);

        let p = find_augmenting_path(&m(&[(1, 2)]), &m(&[(0, 1), (2, 3)])).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);

        let f = m(&[(1, 2), (5, 6)]);
        let p = find_augmenting_path(&f, &m(&[(0, 1), (2, 3), (5, 6)])).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);
        assert!(p.is_augmenting_for(&f));
    }

    #[test]
    fn augmenting_path_skips_balanced_components() {
        // 0-1 (m) 1-2 (f) is balanced; 4-5 (m) is the augmenting one.
        let f = m(&[(1, 2)]);
        let mm = m(&[(0, 1), (4, 5)]);
        let p = find_augmenting_path(&f, &mm).unwrap();
        assert_eq!(p.vertices(), &[4, 5]);
        let k = mm.edges().difference(f.edges()).copied().collect();
        assert!(validate_alternating_path(&p, &f, &k));
    }

    #[test]
    fn augmenting_path_precondition() {
        assert!(matches!(
            find_augmenting_path(&m(&[(0, 1)]), &m(&[(2, 3)])),
            Err(Error::Precondition(_))
        ));
    }
}
