//! Exact co-chordal cover number.
//!
//! Edges are assigned in edge order to at most `n` parts, for `n` rising from
//! the induced matching number. A part is kept only while it extends to a
//! co-chordal subgraph of `G`: equivalently, some chordal graph `C` satisfies
//! `G^c ⊆ C ⊆ K_V − part`. That sandwich is searched by repeatedly taking a
//! shortest chordless cycle of length ≥ 4 in `C` and branching on its chords.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{find_induced_cycle, is_cochordal_edges};
use crate::caps::Caps;
use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::{edge_conflicts, induced_matching_number, minimum_maximal_matching, Edge};

/// Co-chordal subgraphs (as edge lists) whose union is `E(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CochordalCover {
    pub parts: Vec<Vec<Edge>>,
    pub size: usize,
}

/// Union of the parts is `E(G)`, every part is a set of edges of `G`
/// spanning a co-chordal graph, and `size` counts the parts.
pub fn is_cochordal_cover(g: &Graph, cover: &CochordalCover) -> bool {
    let mut seen = vec![false; g.edge_count()];
    for part in &cover.parts {
        for &(a, b) in part {
            match g.edge_index(a, b) {
                Some(i) => seen[i] = true,
                None => return false,
            }
        }
        if !is_cochordal_edges(g, part) {
            return false;
        }
    }
    cover.size == cover.parts.len() && seen.into_iter().all(|s| s)
}

pub fn cochordal_cover_number(g: &Graph) -> Result<CochordalCover> {
    cochordal_cover_number_with(g, &Caps::default())
}

pub fn cochordal_cover_number_with(g: &Graph, caps: &Caps) -> Result<CochordalCover> {
    caps.check_graph(g)?;
    let upper = matching_cover(g);
    let lower = induced_matching_number(g);
    if upper.size <= lower {
        return Ok(upper);
    }
    let mut search = CoverSearch::new(g);
    for n in lower..upper.size {
        if let Some(cover) = search.run(n) {
            return Ok(cover);
        }
    }
    Ok(upper)
}

/// For a minimum maximal matching `z_1..z_b`, the parts `z_i` plus all edges
/// meeting `z_i`. Each is co-chordal and they cover every edge.
fn matching_cover(g: &Graph) -> CochordalCover {
    let parts: Vec<Vec<Edge>> = minimum_maximal_matching(g)
        .into_iter()
        .map(|(a, b)| {
            let m = 1u64 << a | 1u64 << b;
            g.edges()
                .iter()
                .filter(|&&(c, d)| (1u64 << c | 1u64 << d) & m != 0)
                .copied()
                .collect()
        })
        .collect();
    CochordalCover {
        size: parts.len(),
        parts,
    }
}

struct CoverSearch<'a> {
    g: &'a Graph,
    conflicts: Vec<FixedBitSet>,
    /// Extension found (or proven impossible) for a part, keyed by its edge set.
    memo: HashMap<FixedBitSet, Option<Vec<u64>>>,
}

impl<'a> CoverSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        CoverSearch {
            g,
            conflicts: edge_conflicts(g),
            memo: HashMap::new(),
        }
    }

    fn run(&mut self, n: usize) -> Option<CochordalCover> {
        let mut parts: Vec<FixedBitSet> = Vec::with_capacity(n);
        if !self.assign(0, n, &mut parts) {
            return None;
        }
        let parts = parts
            .iter()
            .map(|p| {
                let chordal = self.extension(p).expect("assigned parts extend");
                let mut edges: Vec<Edge> = self
                    .g
                    .edges()
                    .iter()
                    .filter(|&&(a, b)| chordal[a] >> b & 1 == 0)
                    .copied()
                    .collect();
                edges.sort_unstable();
                edges
            })
            .collect::<Vec<_>>();
        Some(CochordalCover { size: parts.len(), parts })
    }

    fn assign(&mut self, e: usize, n: usize, parts: &mut Vec<FixedBitSet>) -> bool {
        if e == self.g.edge_count() {
            return true;
        }
        for j in 0..parts.len() {
            // Two edges forming an induced 2K2 of G can never share a part.
            if !parts[j].is_subset(&self.conflicts[e]) {
                continue;
            }
            parts[j].insert(e);
            if self.extension(&parts[j]).is_some() && self.assign(e + 1, n, parts) {
                return true;
            }
            parts[j].set(e, false);
        }
        if parts.len() < n {
            let mut fresh = FixedBitSet::with_capacity(self.g.edge_count());
            fresh.insert(e);
            parts.push(fresh);
            if self.assign(e + 1, n, parts) {
                return true;
            }
            parts.pop();
        }
        false
    }

    /// Adjacency of a chordal graph `C` with `G^c ⊆ C` avoiding every edge of the part.
    fn extension(&mut self, part: &FixedBitSet) -> Option<Vec<u64>> {
        if let Some(found) = self.memo.get(part) {
            return found.clone();
        }
        let g = self.g;
        let mut allowed = g.with_vertices_only();
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            if !part.contains(i) {
                allowed.add_edge_idx(a, b);
            }
        }
        let start = g.complement();
        let mut failed = HashSet::new();
        let found = sandwich(&start, &allowed, &mut failed).map(|c| c.adjacency().to_vec());
        self.memo.insert(part.clone(), found.clone());
        found
    }
}

/// A chordal graph containing `c` whose extra edges all come from `allowed`.
fn sandwich(c: &Graph, allowed: &Graph, failed: &mut HashSet<Vec<u64>>) -> Option<Graph> {
    let Some(cycle) = find_induced_cycle(c, 4) else {
        return Some(c.clone());
    };
    if failed.contains(c.adjacency()) {
        return None;
    }
    let k = cycle.len();
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            let (a, b) = (cycle[i], cycle[j]);
            if !allowed.has_edge(a, b) {
                continue;
            }
            let mut next = c.clone();
            next.add_edge_idx(a, b);
            if let Some(done) = sandwich(&next, allowed, failed) {
                return Some(done);
            }
        }
    }
    failed.insert(c.adjacency().to_vec());
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, path, Family};

    fn number(g: &Graph) -> usize {
        let cover = cochordal_cover_number(g).unwrap();
        assert!(is_cochordal_cover(g, &cover), "{cover:?}");
        cover.size
    }

    #[test]
    fn cycles() {
        assert_eq!(number(&cycle(8).unwrap()), 3);
        assert_eq!(number(&cycle(6).unwrap()), 2);
        assert_eq!(number(&cycle(5).unwrap()), 2);
        assert_eq!(number(&cycle(4).unwrap()), 1);
    }

    #[test]
    fn union_of_pentagon_and_edge() {
        let g = disjoint_union(&[cycle(5).unwrap(), path(2).unwrap()]);
        assert_eq!(number(&g), 3);
    }

    #[test]
    fn small_cases() {
        assert_eq!(number(&Graph::new()), 0);
        assert_eq!(number(&complete(5).unwrap()), 1);
        assert_eq!(number(&path(2).unwrap()), 1);
        let g = Family::parse("U(C8,C8)").unwrap().build().unwrap().graph;
        assert_eq!(number(&g), 6);
    }

    #[test]
    fn edge_cap() {
        let caps = Caps { edges: 3, ..Caps::default() };
        assert!(cochordal_cover_number_with(&cycle(4).unwrap(), &caps)
            .unwrap_err()
            .is_resource());
    }
}
