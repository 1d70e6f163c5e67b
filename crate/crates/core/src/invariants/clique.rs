//! Maximum cliques and maximal independent sets.

use fixedbitset::FixedBitSet;

use crate::graph::bits;

/// A maximum clique of the graph given by adjacency rows, using greedy
/// colouring as the bound. Ties go to the first clique found, so the result
/// depends only on the row order.
pub fn max_clique(adj: &[FixedBitSet]) -> Vec<usize> {
    let n = adj.len();
    let mut search = Search {
        adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all);
    let mut best = search.best;
    best.sort_unstable();
    best
}

/// A maximum independent set over bitset rows: a maximum clique of the complement.
pub fn max_independent_set(adj: &[FixedBitSet]) -> Vec<usize> {
    max_clique(&complement_rows(adj))
}

pub(crate) fn complement_rows(adj: &[FixedBitSet]) -> Vec<FixedBitSet> {
    adj.iter()
        .enumerate()
        .map(|(i, row)| {
            let mut c = row.clone();
            c.toggle_range(..);
            c.set(i, false);
            c
        })
        .collect()
}

struct Search<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: FixedBitSet) {
        let coloured = self.colour(&candidates);
        for &(v, colour) in coloured.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.set(v, false);
        }
    }

    /// Greedy sequential colouring; returns vertices in non-decreasing colour order.
    fn colour(&self, candidates: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncoloured = candidates.clone();
        let mut out = Vec::with_capacity(candidates.count_ones(..));
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut class = uncoloured.clone();
            while let Some(v) = class.ones().next() {
                class.set(v, false);
                uncoloured.set(v, false);
                class.difference_with(&self.adj[v]);
                out.push((v, colour));
            }
        }
        out
    }
}

/// All maximal independent sets of a graph given by `u64` adjacency masks.
pub fn maximal_independent_sets(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let non_adj: Vec<u64> = (0..n).map(|v| all & !adj[v] & !(1 << v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_adj, 0, all, 0, &mut out);
    out
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| ((p & nbr[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    for v in bits(p & !nbr[pivot]) {
        bron_kerbosch(nbr, r | 1 << v, p & nbr[v], x & nbr[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(n: usize, edges: &[(usize, usize)]) -> Vec<FixedBitSet> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    #[test]
    fn clique_in_small_graphs() {
        let k4_plus = rows(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(max_clique(&k4_plus), vec![0, 1, 2, 3]);
        assert_eq!(max_clique(&rows(3, &[])).len(), 1);
        assert!(max_clique(&rows(0, &[])).is_empty());
        let c5 = rows(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(max_independent_set(&c5).len(), 2);
    }

    #[test]
    fn maximal_independent_sets_of_a_path() {
        // P4: a-b-c-d has maximal independent sets {a,c}, {a,d}, {b,d}.
        let adj = [0b0010, 0b0101, 0b1010, 0b0100];
        let mut sets = maximal_independent_sets(&adj);
        sets.sort_unstable();
        assert_eq!(sets, vec![0b0101, 0b1001, 0b1010]);
    }
}
