//! Exhaustive enumeration of small graphs up to isomorphism, and seeded random graphs.
//!
//! Graphs are grown one vertex at a time and deduplicated by a canonical
//! code: colour refinement orders the vertices into cells, and the code is
//! the largest upper-triangle adjacency word over all orderings that respect
//! the cells.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{bits, cycle, disjoint_union, path, Graph};

/// Largest vertex count accepted by the exhaustive enumerators.
pub const MAX_ENUMERATION_VERTICES: usize = 10;

/// Stable colour classes of the vertices, numbered in an isomorphism-invariant order.
fn refine(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(adj[v]).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = signatures.iter().collect();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = signatures.iter().map(|s| rank[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// Canonical code of a graph with adjacency masks; equal codes mean isomorphic graphs.
pub fn canonical_code(adj: &[u64]) -> u64 {
    let n = adj.len();
    assert!(n <= MAX_ENUMERATION_VERTICES + 1, "canonical codes need at most 11 vertices");
    let colour = refine(adj);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colour[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut order = Vec::with_capacity(n);
    let mut best = 0u64;
    permute_cells(adj, &cells, 0, &mut order, &mut best);
    best
}

fn permute_cells(adj: &[u64], cells: &[Vec<usize>], c: usize, order: &mut Vec<usize>, best: &mut u64) {
    if c == cells.len() {
        *best = (*best).max(code_for(adj, order));
        return;
    }
    let mut cell = cells[c].clone();
    heap_permutations(&mut cell, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_cells(adj, cells, c + 1, order, best);
        order.truncate(len);
    });
}

fn heap_permutations(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k - 1 {
            go(k - 1, items, visit);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        go(k - 1, items, visit);
    }
    go(items.len(), items, visit)
}

fn code_for(adj: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | (adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn graph_from_adj(adj: &[u64]) -> Graph {
    let mut g = crate::graph::edgeless(adj.len()).expect("small vertex count");
    for a in 0..adj.len() {
        for b in bits(adj[a] >> (a + 1)).map(|k| k + a + 1) {
            g.add_edge_idx(a, b);
        }
    }
    g
}

fn connected(adj: &[u64]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let all = (1u64 << adj.len()) - 1;
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |m, v| m | adj[v]) & !seen;
        seen |= next;
        frontier = next;
    }
    seen == all
}

/// All graphs on exactly `n` vertices up to isomorphism, as adjacency masks,
/// in increasing canonical-code order.
fn all_graphs(n: usize) -> Vec<Vec<u64>> {
    let mut level: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    level.insert(0, Vec::new());
    for k in 0..n {
        let mut next: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for adj in level.values() {
            for nb in 0..(1u64 << k) {
                let mut a = adj.clone();
                a.push(nb);
                for v in bits(nb) {
                    a[v] |= 1 << k;
                }
                next.entry(canonical_code(&a)).or_insert(a);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::ResourceCap {
            what: "vertices for exhaustive enumeration",
            limit: MAX_ENUMERATION_VERTICES,
            actual: n,
        });
    }
    Ok(())
}

/// Connected graphs with `2 ≤ |V| ≤ max_vertices`, up to isomorphism, ordered by size.
pub fn connected_graphs(max_vertices: usize) -> Result<Vec<Graph>> {
    check_size(max_vertices)?;
    Ok((2..=max_vertices)
        .flat_map(|n| all_graphs(n).into_iter().filter(|a| connected(a)))
        .map(|a| graph_from_adj(&a))
        .collect())
}

/// Connected bipartite graphs with `2 ≤ |V| ≤ max_vertices`, up to isomorphism.
pub fn connected_bipartite_graphs(max_vertices: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs(max_vertices)?
        .into_iter()
        .filter(Graph::is_bipartite)
        .collect())
}

/// Trees with `2 ≤ |V| ≤ max_vertices`, up to isomorphism, grown by adding leaves.
pub fn trees(max_vertices: usize) -> Result<Vec<Graph>> {
    check_size(max_vertices)?;
    let mut out = Vec::new();
    let mut level: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    level.insert(canonical_code(&[0b10, 0b01]), vec![0b10, 0b01]);
    for k in 2..=max_vertices {
        out.extend(level.values().map(|a| graph_from_adj(a)));
        if k == max_vertices {
            break;
        }
        let mut next = BTreeMap::new();
        for adj in level.values() {
            for v in 0..k {
                let mut a = adj.clone();
                a.push(1 << v);
                a[v] |= 1 << k;
                next.entry(canonical_code(&a)).or_insert(a);
            }
        }
        level = next;
    }
    Ok(out)
}

/// Forests without isolated vertices and with `1 ≤ |E| ≤ max_edges`, up to
/// isomorphism, built as multisets of trees.
pub fn forests(max_edges: usize) -> Result<Vec<Graph>> {
    let trees = trees(max_edges + 1)?;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    forest_multisets(&trees, 0, max_edges, &mut chosen, &mut out);
    out.sort_by_key(|g: &Graph| (g.edge_count(), g.vertex_count()));
    Ok(out)
}

fn forest_multisets(trees: &[Graph], from: usize, budget: usize, chosen: &mut Vec<usize>, out: &mut Vec<Graph>) {
    if !chosen.is_empty() {
        let parts: Vec<Graph> = chosen.iter().map(|&i| trees[i].clone()).collect();
        out.push(disjoint_union(&parts));
    }
    for i in from..trees.len() {
        let e = trees[i].edge_count();
        if e <= budget {
            chosen.push(i);
            forest_multisets(trees, i, budget - e, chosen, out);
            chosen.pop();
        }
    }
}

/// Disjoint unions of cycles (lengths ≥ 3) and single edges on at most
/// `max_vertices` vertices, each as `(graph, cycle lengths, edge count)`.
pub fn cycles_plus_edges(max_vertices: usize) -> Result<Vec<(Graph, Vec<usize>, usize)>> {
    if max_vertices > crate::graph::MAX_VERTICES {
        return Err(Error::invalid("too many vertices"));
    }
    let mut out = Vec::new();
    let mut lengths = Vec::new();
    cycle_multisets(3, max_vertices, &mut lengths, &mut out);
    Ok(out)
}

fn cycle_multisets(
    min_len: usize,
    budget: usize,
    lengths: &mut Vec<usize>,
    out: &mut Vec<(Graph, Vec<usize>, usize)>,
) {
    for k in 0..=budget / 2 {
        if lengths.is_empty() && k == 0 {
            continue;
        }
        let mut parts: Vec<Graph> = lengths.iter().map(|&n| cycle(n).expect("n ≥ 3")).collect();
        parts.extend((0..k).map(|_| path(2).expect("edge")));
        out.push((disjoint_union(&parts), lengths.clone(), k));
    }
    for n in min_len..=budget {
        lengths.push(n);
        cycle_multisets(n, budget - n, lengths, out);
        lengths.pop();
    }
}

/// An Erdős–Rényi graph `G(n, p)` on `x1..xn` from a seeded ChaCha generator.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(n, p, &mut rng)
}

pub fn random_graph_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = crate::graph::edgeless(n)?;
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge_idx(a, b);
            }
        }
    }
    Ok(g)
}

/// Whether two graphs are isomorphic (small graphs only).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_code(a.adjacency()) == canonical_code(b.adjacency())
}
