//! Edmonds' alternating-tree search with blossom shrinking, on dense
//! adjacency lists.
//!
//! One `Search` grows a single alternating tree from an exposed root. It is
//! used both for augmentation (maximum matching) and, run to exhaustion from
//! the only exposed vertex, to read off the outer vertex set, which is exactly
//! the set reachable by even alternating paths from the root.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

pub(crate) const NONE: usize = usize::MAX;

pub(crate) struct Search<'a> {
    adj: &'a [Vec<usize>],
    alive: &'a [bool],
    pub(crate) mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>,
    in_blossom: Vec<bool>,
    mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    pub(crate) fn new(adj: &'a [Vec<usize>], alive: &'a [bool], mate: Vec<usize>) -> Self {
        let n = adj.len();
        Search {
            adj,
            alive,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            in_blossom: vec![false; n],
            mark: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.mark.fill(false);
        loop {
            a = self.base[a];
            self.mark[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.mark[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// Grows the tree rooted at `root` until an exposed vertex is reached
    /// (returned) or the tree is exhausted (`None`).
    pub(crate) fn grow(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.parent.fill(NONE);
        self.outer.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.outer[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if !self.alive[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.outer[i] {
                                self.outer[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.outer[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    /// Flips the alternating path ending at the exposed vertex `end` that
    /// `grow` just returned.
    pub(crate) fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    pub(crate) fn is_outer(&self, v: usize) -> bool {
        self.outer[v]
    }

    /// The even alternating path from the root to the outer vertex `v`,
    /// listed root first. `None` if the tree pointers do not yield a simple
    /// path.
    pub(crate) fn even_path(&self, v: usize, root: usize) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut path = vec![v];
        let mut cur = v;
        while cur != root {
            let m = self.mate[cur];
            if m == NONE {
                return None;
            }
            let p = self.parent[m];
            if p == NONE || path.len() > n {
                return None;
            }
            path.push(m);
            path.push(p);
            cur = p;
        }
        path.reverse();
        let mut seen = vec![false; n];
        for &x in &path {
            if seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(path)
    }
}

/// Maximum matching over the vertices flagged in `alive`, returned as a
/// partner array. Roots are tried in ascending order starting from an empty
/// matching, and neighbours are scanned in adjacency order, so the output is
/// a fixed function of the input.
pub(crate) fn maximum_mates(adj: &[Vec<usize>], alive: &[bool]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    // Greedy pass first; the search only has to repair it.
    for v in 0..n {
        if !alive[v] || mate[v] != NONE {
            continue;
        }
        if let Some(&u) = adj[v].iter().find(|&&u| alive[u] && mate[u] == NONE) {
            mate[v] = u;
            mate[u] = v;
        }
    }
    let roots: Vec<usize> = (0..n).filter(|&r| alive[r]).collect();
    let mut search = Search::new(adj, alive, mate);
    for root in roots {
        if search.mate[root] == NONE {
            if let Some(end) = search.grow(root) {
                search.augment(end);
            }
        }
    }
    search.mate
}
