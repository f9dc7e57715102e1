//! Tight and near-tight constructions.
//!
//! * [`two_matchings_family`]: `2n - 2` matchings of size `n` on the cycle
//!   `C_2n` (each of its two perfect matchings `n - 1` times) with no rainbow
//!   matching of size `n`.
//! * [`drisko_plus_even_family`]: the same plus a perfect matching of
//!   even-length chords, `2n - 1` matchings still without one (`n` even).
//! * [`sharpness_paths`]: `2k` augmenting paths for a matching of size `k`
//!   that admit no multicolored augmenting path.
//!
//! Cycle vertices are `0..2n` in cyclic order; a chord `{i, j}` has length
//! `j - i`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{edge, AlternatingPath, ColoredFamily, Graph, Matching, Vertex};
use crate::rainbow::ColoredPathFamily;

/// The cycle on `0..k` with edges `{i, i + 1 mod k}`.
pub fn cycle_graph(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "a cycle needs at least 3 vertices, got {k}"
        )));
    }
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// The perfect matching of `C_2n` made of edges `{2i, 2i + 1}`.
pub fn even_cycle_edges(n: usize) -> Matching {
    Matching::from_edges((0..n).map(|i| edge(2 * i, 2 * i + 1))).expect("disjoint edges")
}

/// The perfect matching of `C_2n` made of edges `{2i + 1, 2i + 2 mod 2n}`.
pub fn odd_cycle_edges(n: usize) -> Matching {
    Matching::from_edges((0..n).map(|i| edge(2 * i + 1, (2 * i + 2) % (2 * n))))
        .expect("disjoint edges")
}

/// `n - 1` copies of each perfect matching of `C_2n`, even edges first.
pub fn two_matchings_family(n: usize) -> Result<ColoredFamily> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    let mut matchings = Vec::with_capacity(2 * n - 2);
    matchings.extend(core::iter::repeat(even_cycle_edges(n)).take(n - 1));
    matchings.extend(core::iter::repeat(odd_cycle_edges(n)).take(n - 1));
    ColoredFamily::new(2 * n, matchings)
}

/// Whether `C_cycle_len` plus the chord `{i, j}` has a perfect matching that
/// uses the chord, which happens iff `j - i` is odd.
pub fn chord_extends_to_perfect(cycle_len: usize, i: Vertex, j: Vertex) -> Result<bool> {
    if cycle_len < 4 || cycle_len % 2 == 1 {
        return Err(Error::Precondition(format!(
            "cycle length must be even and at least 4, got {cycle_len}"
        )));
    }
    if i == j {
        return Err(Error::SelfLoop(i));
    }
    if let Some(v) = [i, j].into_iter().find(|&v| v >= cycle_len) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: cycle_len,
        });
    }
    Ok(i.abs_diff(j) % 2 == 1)
}

/// A perfect matching of `0..2n` whose pairs all have even length:
/// `{0,2}, {4,6}, …` and `{1,3}, {5,7}, …`. Exists only for even `n`.
pub fn even_chords_matching(n: usize) -> Result<Matching> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "an even-length perfect pairing of {} vertices needs n even and positive",
            2 * n
        )));
    }
    let evens = (0..n / 2).map(|t| edge(4 * t, 4 * t + 2));
    let odds = (0..n / 2).map(|t| edge(4 * t + 1, 4 * t + 3));
    Matching::from_edges(evens.chain(odds))
}

/// [`two_matchings_family`] with [`even_chords_matching`] as the last color.
pub fn drisko_plus_even_family(n: usize) -> Result<ColoredFamily> {
    let chords = even_chords_matching(n)?;
    let mut family = two_matchings_family(n)?;
    family.push(chords)?;
    Ok(family)
}

/// The matching of [`sharpness_paths`]: `{2i - 1, 2i}` for `i = 1..=k`.
pub fn sharpness_matching(k: usize) -> Matching {
    Matching::from_edges((1..=k).map(|i| edge(2 * i - 1, 2 * i))).expect("disjoint edges")
}

/// `x u_1 v_1 u_2 v_2 … u_k v_k y` with `x = 0`, `y = 2k + 1`,
/// `u_i = 2i - 1`, `v_i = 2i`.
pub fn sharpness_path_forward(k: usize) -> AlternatingPath {
    AlternatingPath::k_first((0..=2 * k + 1).collect()).expect("distinct vertices")
}

/// `x v_1 u_1 v_2 u_2 … v_k u_k y`, crossing every matching edge the other
/// way.
pub fn sharpness_path_crossed(k: usize) -> AlternatingPath {
    let mut vs = Vec::with_capacity(2 * k + 2);
    vs.push(0);
    for i in 1..=k {
        vs.push(2 * i);
        vs.push(2 * i - 1);
    }
    vs.push(2 * k + 1);
    AlternatingPath::k_first(vs).expect("distinct vertices")
}

/// A matching of size `k` on `2k + 2` vertices with `2k` colored augmenting
/// paths (colors `0..k` forward, `k..2k` crossed) that admit no multicolored
/// augmenting path: any alternating path between the two exposed vertices
/// stays forward or crossed throughout and needs `k + 1` colors of one kind.
pub fn sharpness_paths(k: usize) -> Result<ColoredPathFamily> {
    if k < 2 {
        return Err(Error::Precondition(format!("need k >= 2, got {k}")));
    }
    let forward = sharpness_path_forward(k);
    let crossed = sharpness_path_crossed(k);
    let paths = (0..k)
        .map(|c| (c, forward.clone()))
        .chain((k..2 * k).map(|c| (c, crossed.clone())));
    ColoredPathFamily::with_paths(2 * k + 2, sharpness_matching(k), paths)
}
