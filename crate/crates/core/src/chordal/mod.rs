//! Chordality predicates, induced cycles and dual shellings.

mod cover;

pub use cover::{
    cochordal_cover_number, cochordal_cover_number_with, is_cochordal_cover, CochordalCover,
};

use serde::Serialize;

use crate::graph::{bits, Graph};
use crate::invariants::Edge;

/// A maximum-cardinality-search order, reversed so that it is a perfect
/// elimination ordering whenever the graph is chordal.
pub fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = bits(g.all() & !visited)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        visited |= 1 << v;
        order.push(v);
        for w in bits(g.neighbors(v) & !visited) {
            weight[w] += 1;
        }
    }
    order.reverse();
    order
}

/// Whether `order` is a perfect elimination ordering: the later neighbours of
/// every vertex form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.all();
    for &v in order {
        later &= !(1 << v);
        let nb = g.neighbors(v) & later;
        if bits(nb).any(|u| nb & !(g.neighbors(u) | 1 << u) != 0) {
            return false;
        }
    }
    true
}

/// A perfect elimination ordering, if the graph is chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let order = mcs_elimination_order(g);
    is_perfect_elimination_order(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&g.complement())
}

/// Co-chordality of the subgraph formed by the given edges of `g`.
pub fn is_cochordal_edges(g: &Graph, edges: &[Edge]) -> bool {
    let mut h = g.with_vertices_only();
    for &(a, b) in edges {
        h.add_edge_idx(a, b);
    }
    is_cochordal(&h)
}

/// A shortest induced cycle with at least `min_len` vertices, if any.
pub fn find_induced_cycle(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let min_len = min_len.max(3);
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let above = g.all() & !((2u64 << s) - 1);
        let mut path = vec![s];
        cycle_search(g, s, above, 1 << s, min_len, &mut path, &mut best);
    }
    best
}

/// Extends an induced path starting at its smallest vertex `s`. `blocked`
/// holds the path vertices and the neighbours of interior vertices.
fn cycle_search(
    g: &Graph,
    s: usize,
    above: u64,
    blocked: u64,
    min_len: usize,
    path: &mut Vec<usize>,
    best: &mut Option<Vec<usize>>,
) {
    if best.as_ref().is_some_and(|b| path.len() + 1 >= b.len()) {
        return;
    }
    let last = *path.last().expect("non-empty path");
    let next_blocked = if path.len() > 1 {
        blocked | g.neighbors(last)
    } else {
        blocked
    };
    for x in bits(g.neighbors(last) & above & !blocked) {
        path.push(x);
        if path.len() >= 3 && g.has_edge(x, s) {
            if path.len() >= min_len {
                *best = Some(path.clone());
            }
        } else {
            cycle_search(g, s, above, next_blocked | 1 << x, min_len, path, best);
        }
        path.pop();
    }
}

/// No induced cycle of length at least 5 in the graph or its complement.
pub fn is_weakly_chordal(g: &Graph) -> bool {
    find_induced_cycle(g, 5).is_none() && find_induced_cycle(&g.complement(), 5).is_none()
}

/// Bipartite with no induced cycle of length at least 6.
pub fn is_chordal_bipartite(g: &Graph) -> bool {
    g.is_bipartite() && find_induced_cycle(g, 6).is_none()
}

/// Two edges of `edges` that induce `2K2` in the subgraph they span, if any.
pub fn find_induced_2k2(edges: &[Edge]) -> Option<(Edge, Edge)> {
    let adj = |u: usize, v: usize| {
        edges
            .iter()
            .any(|&(a, b)| (a, b) == (u.min(v), u.max(v)))
    };
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !(adj(a, c) || adj(a, d) || adj(b, c) || adj(b, d)) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

/// An edge ordering in which every prefix spans a `2K2`-free graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualShelling {
    pub ordering: Vec<Edge>,
}

/// A dual shelling of `h`, present exactly when `h` is co-chordal. Built by
/// peeling edges from the end while the rest stays co-chordal.
pub fn dual_shelling(h: &Graph) -> Option<DualShelling> {
    if !is_cochordal(h) {
        return None;
    }
    let mut remaining: Vec<Edge> = h.edges().to_vec();
    let mut reversed = Vec::with_capacity(remaining.len());
    if !peel(h, &mut remaining, &mut reversed) {
        return None;
    }
    reversed.reverse();
    let shelling = DualShelling { ordering: reversed };
    debug_assert!(is_dual_shelling(h, &shelling));
    Some(shelling)
}

fn peel(h: &Graph, remaining: &mut Vec<Edge>, out: &mut Vec<Edge>) -> bool {
    if remaining.is_empty() {
        return true;
    }
    for i in (0..remaining.len()).rev() {
        let e = remaining.remove(i);
        if is_cochordal_edges(h, remaining) {
            out.push(e);
            if peel(h, remaining, out) {
                return true;
            }
            out.pop();
        }
        remaining.insert(i, e);
    }
    false
}

/// Checks that the ordering lists every edge of `h` once and that each
/// prefix is `2K2`-free.
pub fn is_dual_shelling(h: &Graph, shelling: &DualShelling) -> bool {
    let mut sorted = shelling.ordering.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != shelling.ordering.len() || sorted != h.edges() {
        return false;
    }
    (1..=shelling.ordering.len()).all(|k| find_induced_2k2(&shelling.ordering[..k]).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, edgeless, parse_graph, path, whisker};

    #[test]
    fn chordality() {
        assert!(is_chordal(&cycle(3).unwrap()));
        assert!(!is_chordal(&cycle(4).unwrap()));
        assert!(is_chordal(&parse_graph("a b\nb c\nb d\nd e").unwrap()));
        assert!(is_chordal(&Graph::new()));
    }

    #[test]
    fn cochordality() {
        assert!(is_cochordal(&path(4).unwrap()));
        let two_k2 = disjoint_union(&[path(2).unwrap(), path(2).unwrap()]);
        assert!(!is_cochordal(&two_k2));
        assert!(is_cochordal(&complete(5).unwrap()));
    }

    #[test]
    fn weakly_chordal_and_chordal_bipartite() {
        assert!(!is_weakly_chordal(&cycle(6).unwrap()));
        assert!(is_weakly_chordal(&cycle(4).unwrap()));
        assert!(is_weakly_chordal(&path(7).unwrap()));
        assert!(!is_chordal_bipartite(&cycle(6).unwrap()));
        assert!(is_chordal_bipartite(&cycle(4).unwrap()));
        assert!(is_chordal_bipartite(&whisker(&path(3).unwrap()).unwrap()));
        assert!(!is_chordal_bipartite(&cycle(3).unwrap()));
    }

    #[test]
    fn induced_cycles() {
        let c7 = cycle(7).unwrap();
        assert_eq!(find_induced_cycle(&c7, 3).unwrap().len(), 7);
        assert!(find_induced_cycle(&c7, 8).is_none());
        // A 6-cycle with one long chord: shortest induced cycles have length 4.
        let g = parse_graph("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n1 4").unwrap();
        assert_eq!(find_induced_cycle(&g, 4).unwrap().len(), 4);
        assert!(find_induced_cycle(&g, 5).is_none());
        assert!(find_induced_cycle(&edgeless(4).unwrap(), 3).is_none());
    }

    #[test]
    fn dual_shellings() {
        let two_k2 = disjoint_union(&[path(2).unwrap(), path(2).unwrap()]);
        assert!(dual_shelling(&two_k2).is_none());
        let k3 = complete(3).unwrap();
        assert!(is_dual_shelling(&k3, &dual_shelling(&k3).unwrap()));
        let p4 = path(4).unwrap();
        let s = dual_shelling(&p4).unwrap();
        assert!(is_dual_shelling(&p4, &s));
        let bad = DualShelling { ordering: vec![(0, 1), (2, 3), (1, 2)] };
        assert!(!is_dual_shelling(&p4, &bad));
    }
}
