//! Matching-type invariants, independence, vertex covers and H-freeness.
//!
//! Every search is exact and deterministic: candidates are tried in vertex
//! and edge order, and ties keep the first witness found.

pub mod clique;
pub mod witness;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub use witness::Edge;

/// Size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// A maximum matching, found with Edmonds' blossom algorithm.
pub fn maximum_matching(g: &Graph) -> Vec<Edge> {
    let n = g.vertex_count();
    let mut mate = vec![usize::MAX; n];
    for root in 0..n {
        if mate[root] != usize::MAX {
            continue;
        }
        if let Some((mut v, parent)) = Blossom::new(g, &mate).augmenting_path(root) {
            while v != usize::MAX {
                let pv = parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    (0..n)
        .filter(|&v| mate[v] != usize::MAX && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect()
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: &'a [usize],
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    const NONE: usize = usize::MAX;

    fn new(g: &'a Graph, mate: &'a [usize]) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate,
            parent: vec![Self::NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.base.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == Self::NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut [bool]) {
        while self.base[v] != b {
            blossom[self.base[v]] = true;
            blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root` and the parent links.
    fn augmenting_path(mut self, root: usize) -> Option<(usize, Vec<usize>)> {
        let n = self.base.len();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in bits(self.g.neighbors(v)) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root
                    || (self.mate[to] != Self::NONE && self.parent[self.mate[to]] != Self::NONE)
                {
                    let cur = self.lca(v, to);
                    let mut blossom = vec![false; n];
                    self.mark_path(v, cur, to, &mut blossom);
                    self.mark_path(to, cur, v, &mut blossom);
                    for i in 0..n {
                        if blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == Self::NONE {
                    self.parent[to] = v;
                    if self.mate[to] == Self::NONE {
                        return Some((to, self.parent));
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Rows of the edge conflict graph: `f` is in row `e` when `e ≠ f` and the two
/// edges share a vertex or are joined by an edge of `g`.
pub fn edge_conflicts(g: &Graph) -> Vec<FixedBitSet> {
    let m = g.edge_count();
    let closed: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(a, b)| g.neighbors(a) | g.neighbors(b) | 1 << a | 1 << b)
        .collect();
    let mut rows = vec![FixedBitSet::with_capacity(m); m];
    for (i, &(c, d)) in g.edges().iter().enumerate() {
        for j in 0..i {
            if closed[j] & (1 << c | 1 << d) != 0 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    rows
}

/// Size of a maximum induced matching.
pub fn induced_matching_number(g: &Graph) -> usize {
    maximum_induced_matching(g).len()
}

/// A maximum induced matching: a maximum independent set of the edge conflict graph.
pub fn maximum_induced_matching(g: &Graph) -> Vec<Edge> {
    clique::max_independent_set(&edge_conflicts(g))
        .into_iter()
        .map(|i| g.edges()[i])
        .collect()
}

/// Minimum size of an inclusion-maximal matching.
pub fn min_maximal_matching_number(g: &Graph) -> usize {
    minimum_maximal_matching(g).len()
}

/// A minimum maximal matching by branch and bound: the first edge with both
/// endpoints free must be dominated, so branch on the free edges touching it.
pub fn minimum_maximal_matching(g: &Graph) -> Vec<Edge> {
    let mut best = maximum_matching(g);
    let mut current = Vec::new();
    mmm_search(g, 0, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn mmm_search(g: &Graph, covered: u64, current: &mut Vec<Edge>, best: &mut Vec<Edge>) {
    let free = |&(a, b): &Edge| covered & (1 << a | 1 << b) == 0;
    let Some(&(a, b)) = g.edges().iter().find(|e| free(e)) else {
        if current.len() < best.len() {
            *best = current.clone();
        }
        return;
    };
    if current.len() + free_induced_matching_bound(g, covered) >= best.len() {
        return;
    }
    let touching = 1u64 << a | 1u64 << b;
    let choices: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| free(e) && (1u64 << e.0 | 1u64 << e.1) & touching != 0)
        .copied()
        .collect();
    for (c, d) in choices {
        current.push((c, d));
        mmm_search(g, covered | 1 << c | 1 << d, current, best);
        current.pop();
    }
}

/// Greedy induced matching among the edges with both endpoints free. No single
/// edge of `g` can dominate two of its edges, so its size bounds the number of
/// edges still needed.
fn free_induced_matching_bound(g: &Graph, covered: u64) -> usize {
    let mut blocked = covered;
    let mut count = 0;
    for &(a, b) in g.edges() {
        if blocked & (1 << a | 1 << b) == 0 {
            count += 1;
            blocked |= 1 << a | 1 << b | ((g.neighbors(a) | g.neighbors(b)) & !covered);
        }
    }
    count
}

/// Size of a maximum independent set.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).count_ones() as usize
}

/// A maximum independent set as a vertex mask.
pub fn maximum_independent_set(g: &Graph) -> u64 {
    clique::max_independent_set(&vertex_rows(g))
        .into_iter()
        .fold(0, |m, v| m | 1 << v)
}

fn vertex_rows(g: &Graph) -> Vec<FixedBitSet> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(n);
            bits(g.neighbors(v)).for_each(|w| row.insert(w));
            row
        })
        .collect()
}

/// All inclusion-minimal vertex covers, each in vertex order, listed lexicographically.
pub fn minimal_vertex_covers(g: &Graph) -> Result<Vec<Vec<usize>>> {
    minimal_vertex_covers_with(g, &Caps::default())
}

pub fn minimal_vertex_covers_with(g: &Graph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    minimal_vertex_cover_masks(g, caps).map(|masks| {
        let mut covers: Vec<Vec<usize>> = masks.into_iter().map(|m| bits(m).collect()).collect();
        covers.sort();
        covers
    })
}

/// Minimal vertex covers as masks: complements of the maximal independent sets.
pub fn minimal_vertex_cover_masks(g: &Graph, caps: &Caps) -> Result<Vec<u64>> {
    caps.check("vertex count", g.vertex_count(), caps.vertices)?;
    let all = g.all();
    Ok(clique::maximal_independent_sets(g.adjacency())
        .into_iter()
        .map(|s| all & !s)
        .collect())
}

/// Whether all minimal vertex covers have the same size.
pub fn is_unmixed(g: &Graph) -> Result<bool> {
    is_unmixed_with(g, &Caps::default())
}

pub fn is_unmixed_with(g: &Graph, caps: &Caps) -> Result<bool> {
    let masks = minimal_vertex_cover_masks(g, caps)?;
    Ok(masks.windows(2).all(|w| w[0].count_ones() == w[1].count_ones()))
}

/// Whether some induced matching is also a maximal matching.
pub fn has_dominating_induced_matching(g: &Graph) -> bool {
    dominating_induced_matching(g).is_some()
}

/// An induced matching that is also maximal, if one exists.
pub fn dominating_induced_matching(g: &Graph) -> Option<Vec<Edge>> {
    let mut current = Vec::new();
    dim_search(g, 0, 0, &mut current).then_some(current)
}

/// `covered` holds the matched vertices, `blocked` additionally their neighbours.
fn dim_search(g: &Graph, covered: u64, blocked: u64, current: &mut Vec<Edge>) -> bool {
    let Some(&(a, b)) = g
        .edges()
        .iter()
        .find(|&&(a, b)| covered & (1 << a | 1 << b) == 0)
    else {
        return true;
    };
    let touching = 1u64 << a | 1u64 << b;
    for &(c, d) in g.edges() {
        let m = 1u64 << c | 1u64 << d;
        if m & touching == 0 || m & blocked != 0 {
            continue;
        }
        current.push((c, d));
        let nb = blocked | m | g.neighbors(c) | g.neighbors(d);
        if dim_search(g, covered | m, nb, current) {
            return true;
        }
        current.pop();
    }
    false
}

/// An induced path on `k` vertices, if one exists.
pub fn find_induced_path(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    if k < 2 {
        return Err(Error::invalid(format!("induced path length must be at least 2, got {k}")));
    }
    let mut path = Vec::with_capacity(k);
    for start in 0..g.vertex_count() {
        path.push(start);
        if extend_path(g, k, g.all() & !(1 << start), &mut path) {
            return Ok(Some(path));
        }
        path.pop();
    }
    Ok(None)
}

/// `allowed` holds the vertices not adjacent to any path vertex except possibly the last.
fn extend_path(g: &Graph, k: usize, allowed: u64, path: &mut Vec<usize>) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().expect("path is non-empty");
    for w in bits(g.neighbors(last) & allowed) {
        // Only extend from the smaller end of a two-vertex path to skip reversals.
        if path.len() == 1 && w < last && k > 2 {
            continue;
        }
        path.push(w);
        let next = allowed & !(1 << w) & !g.neighbors(last);
        if extend_path(g, k, next, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Whether `g` has no induced path on `k` vertices.
pub fn is_pk_free(g: &Graph, k: usize) -> Result<bool> {
    Ok(find_induced_path(g, k)?.is_none())
}

/// Whether `g` has no induced matching of size `n`.
pub fn is_nk2_free(g: &Graph, n: usize) -> bool {
    induced_matching_number(g) < n
}
