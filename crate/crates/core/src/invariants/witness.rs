//! Checkers for the witnesses returned by the invariant searches.

use crate::graph::{bits, Graph};

pub type Edge = (usize, usize);

fn span(edges: &[Edge]) -> Option<u64> {
    let mut seen = 0u64;
    for &(a, b) in edges {
        let m = 1u64 << a | 1u64 << b;
        if a == b || seen & m != 0 {
            return None;
        }
        seen |= m;
    }
    Some(seen)
}

pub fn is_matching(g: &Graph, edges: &[Edge]) -> bool {
    edges.iter().all(|&(a, b)| a != b && g.has_edge(a, b)) && span(edges).is_some()
}

/// Pairwise disjoint edges whose endpoints induce no further edges.
pub fn is_induced_matching(g: &Graph, edges: &[Edge]) -> bool {
    if !is_matching(g, edges) {
        return false;
    }
    let verts = span(edges).unwrap_or(0);
    let induced: usize = bits(verts)
        .map(|v| (g.neighbors(v) & verts).count_ones() as usize)
        .sum();
    induced == 2 * edges.len()
}

/// A matching that covers at least one endpoint of every edge.
pub fn is_maximal_matching(g: &Graph, edges: &[Edge]) -> bool {
    if !is_matching(g, edges) {
        return false;
    }
    let covered = span(edges).unwrap_or(0);
    g.edges()
        .iter()
        .all(|&(a, b)| covered & (1 << a | 1 << b) != 0)
}

pub fn is_independent_set(g: &Graph, set: u64) -> bool {
    bits(set).all(|v| g.neighbors(v) & set == 0)
}

pub fn is_vertex_cover(g: &Graph, set: u64) -> bool {
    g.edges()
        .iter()
        .all(|&(a, b)| set & (1 << a | 1 << b) != 0)
}

pub fn is_minimal_vertex_cover(g: &Graph, set: u64) -> bool {
    is_vertex_cover(g, set) && bits(set).all(|v| !is_vertex_cover(g, set & !(1 << v)))
}

/// Consecutive vertices adjacent, no other pair adjacent, all distinct.
pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    let distinct = path
        .iter()
        .try_fold(0u64, |m, &v| (m >> v & 1 == 0).then_some(m | 1 << v));
    distinct.is_some()
        && path.iter().enumerate().all(|(i, &u)| {
            path.iter()
                .enumerate()
                .skip(i + 1)
                .all(|(j, &v)| g.has_edge(u, v) == (j == i + 1))
        })
}

/// All vertices distinct, consecutive ones (cyclically) adjacent, no chords.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    k >= 3
        && is_induced_path(g, &cycle[..k - 1])
        && g.has_edge(cycle[k - 1], cycle[0])
        && g.has_edge(cycle[k - 1], cycle[k - 2])
        && cycle[1..k - 2]
            .iter()
            .all(|&v| !g.has_edge(cycle[k - 1], v))
        && cycle[..k - 1].iter().all(|&v| v != cycle[k - 1])
}
