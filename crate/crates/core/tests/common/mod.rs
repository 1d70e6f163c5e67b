//! Brute-force reference computations, written without the library's search code.
#![allow(dead_code)]

use edgeideal_core::monomial::{polarize, MonomialIdeal};
use edgeideal_core::Graph;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Edge = (usize, usize);

fn touches(a: Edge, b: Edge) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

fn subsets<T: Copy>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    assert!(items.len() < 25, "brute force limited to 24 items");
    (0u32..1 << items.len()).map(move |m| {
        (0..items.len()).filter(|&i| m >> i & 1 == 1).map(|i| items[i]).collect()
    })
}

pub fn is_matching(edges: &[Edge]) -> bool {
    edges.iter().enumerate().all(|(i, &a)| edges[i + 1..].iter().all(|&b| !touches(a, b)))
}

pub fn is_induced_matching(g: &Graph, edges: &[Edge]) -> bool {
    is_matching(edges)
        && edges.iter().enumerate().all(|(i, &(a, b))| {
            edges[i + 1..]
                .iter()
                .all(|&(c, d)| !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d))
        })
}

pub fn is_maximal_matching(g: &Graph, edges: &[Edge]) -> bool {
    is_matching(edges) && g.edges().iter().all(|&e| edges.iter().any(|&m| touches(e, m)))
}

pub fn matching_number(g: &Graph) -> usize {
    subsets(g.edges()).filter(|s| is_matching(s)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn induced_matching_number(g: &Graph) -> usize {
    subsets(g.edges()).filter(|s| is_induced_matching(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn min_maximal_matching_number(g: &Graph) -> usize {
    subsets(g.edges())
        .filter(|s| is_maximal_matching(g, s))
        .map(|s| s.len())
        .min()
        .unwrap_or(0)
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&a| set.iter().all(|&b| !g.has_edge(a, b)))
}

pub fn independence_number(g: &Graph) -> usize {
    let vs: Vec<usize> = (0..g.vertex_count()).collect();
    subsets(&vs).filter(|s| is_independent(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn is_cover(g: &Graph, set: &[usize]) -> bool {
    g.edges().iter().all(|&(a, b)| set.contains(&a) || set.contains(&b))
}

/// Minimal vertex covers as sorted index lists, sorted.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<Vec<usize>> {
    let vs: Vec<usize> = (0..g.vertex_count()).collect();
    let mut out: Vec<Vec<usize>> = subsets(&vs)
        .filter(|s| is_cover(g, s))
        .filter(|s| {
            (0..s.len()).all(|i| {
                let smaller: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                !is_cover(g, &smaller)
            })
        })
        .collect();
    out.sort();
    out
}

/// Chordality by repeatedly deleting simplicial vertices.
pub fn is_chordal_adj(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> bool {
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        let simplicial = alive.iter().position(|&v| {
            let nb: Vec<usize> = alive.iter().copied().filter(|&w| w != v && adj(v, w)).collect();
            nb.iter().all(|&a| nb.iter().all(|&b| a == b || adj(a, b)))
        });
        match simplicial {
            Some(i) => {
                alive.remove(i);
            }
            None => return false,
        }
    }
    true
}

pub fn is_chordal(g: &Graph) -> bool {
    is_chordal_adj(g.vertex_count(), &|a, b| g.has_edge(a, b))
}

/// Whether the spanning subgraph with these edges has a chordal complement.
pub fn is_cochordal_edges(n: usize, edges: &[Edge]) -> bool {
    let has = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    is_chordal_adj(n, &|a, b| a != b && !has(a, b))
}

pub fn has_induced_2k2(edges: &[Edge]) -> bool {
    let has = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    edges.iter().enumerate().any(|(i, &(a, b))| {
        edges[i + 1..].iter().any(|&(c, d)| {
            !touches((a, b), (c, d)) && !has(a, c) && !has(a, d) && !has(b, c) && !has(b, d)
        })
    })
}

/// Smallest number of co-chordal edge sets whose union is `E(G)`.
pub fn cochordal_cover_number(g: &Graph) -> usize {
    let edges = g.edges();
    let m = edges.len();
    if m == 0 {
        return 0;
    }
    assert!(m <= 14, "brute-force cochord limited to 14 edges");
    let n = g.vertex_count();
    let good: Vec<u32> = (1u32..1 << m)
        .filter(|&mask| {
            let part: Vec<Edge> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            is_cochordal_edges(n, &part)
        })
        .collect();
    let full = (1u32 << m) - 1;
    // Breadth-first over covered sets.
    let mut dist = vec![usize::MAX; 1 << m];
    dist[0] = 0;
    let mut frontier = vec![0u32];
    let mut k = 0;
    while dist[full as usize] == usize::MAX {
        k += 1;
        let mut next = Vec::new();
        for &c in &frontier {
            let low = (!c & full).trailing_zeros();
            for &p in good.iter().filter(|&&p| p >> low & 1 == 1) {
                let u = (c | p) as usize;
                if dist[u] == usize::MAX {
                    dist[u] = k;
                    next.push(u as u32);
                }
            }
        }
        frontier = next;
    }
    k
}

/// Even-connection straight from the definition: walks `u = p0, …, p_{2k+1} = v`
/// with each `p_{2l+1} p_{2l+2}` a distinct entry of the multiset.
pub fn even_connected(g: &Graph, u: usize, v: usize, multiset: &[Edge]) -> bool {
    fn step(g: &Graph, at: usize, v: usize, multiset: &[Edge], used: &mut Vec<bool>, depth: usize) -> bool {
        // `at` is p_{2l}; choose p_{2l+1}, then either close or use an entry.
        for p in (0..g.vertex_count()).filter(|&p| g.has_edge(at, p)) {
            for i in 0..multiset.len() {
                if used[i] {
                    continue;
                }
                let (a, b) = multiset[i];
                let q = if p == a {
                    b
                } else if p == b {
                    a
                } else {
                    continue;
                };
                used[i] = true;
                let closes = (0..g.vertex_count()).any(|r| r == v && g.has_edge(q, r));
                if closes || step(g, q, v, multiset, used, depth + 1) {
                    used[i] = false;
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }
    let mut used = vec![false; multiset.len()];
    step(g, u, v, multiset, &mut used, 0)
}

/// Rank over the rationals by plain Gaussian elimination.
pub fn rational_rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut rows = rows;
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone() / pivot.clone();
                for k in c..cols {
                    let sub = rows[rank][k].clone() * f.clone();
                    rows[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced homology ranks over Q of the complex on `n` vertices whose faces
/// are the masks accepted by `is_face`, indexed by dimension + 1.
pub fn reduced_homology(n: usize, is_face: &dyn Fn(u32) -> bool) -> Vec<usize> {
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for f in (0u32..1 << n).filter(|&f| is_face(f)) {
        by_dim[f.count_ones() as usize].push(f);
    }
    let boundary_rank = |k: usize| -> usize {
        // Boundary from faces of size k to size k − 1.
        if k == 0 || by_dim[k].is_empty() || by_dim[k - 1].is_empty() {
            return 0;
        }
        let rows: Vec<Vec<BigRational>> = by_dim[k]
            .iter()
            .map(|&f| {
                by_dim[k - 1]
                    .iter()
                    .map(|&h| {
                        if h & f != h {
                            return BigRational::zero();
                        }
                        let dropped = (f & !h).trailing_zeros();
                        let pos = (f & ((1 << dropped) - 1)).count_ones();
                        if pos % 2 == 0 {
                            BigRational::one()
                        } else {
                            -BigRational::one()
                        }
                    })
                    .collect()
            })
            .collect();
        rational_rank(rows)
    };
    let ranks: Vec<usize> = (0..=n + 1).map(|k| if k <= n { boundary_rank(k) } else { 0 }).collect();
    (0..=n)
        .map(|k| by_dim[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// Regularity of a monomial ideal by Hochster's formula on its polarization:
/// `β_{i,σ}(I) = dim H̃_{|σ|−i−2}(Δ_σ)` with `Δ` the Stanley–Reisner complex.
pub fn hochster_regularity(ideal: &MonomialIdeal) -> usize {
    let (polar, _) = polarize(ideal);
    let n = polar.nvars();
    assert!(n <= 16, "Hochster oracle limited to 16 variables");
    let gens: Vec<u32> = polar
        .generators()
        .iter()
        .map(|g| g.support().fold(0u32, |m, v| m | 1 << v))
        .collect();
    let mut reg = 0;
    for sigma in 1u32..1 << n {
        let size = sigma.count_ones() as usize;
        let is_face = |f: u32| {
            let full = spread(f, sigma);
            full & !sigma == 0 && gens.iter().all(|&g| g & full != g)
        };
        let h = reduced_homology(size, &is_face);
        // H̃_d at index d + 1; β_{i,σ} lives at d = |σ| − i − 2.
        for (idx, &rank) in h.iter().enumerate() {
            if rank > 0 {
                let d = idx as isize - 1;
                let i = size as isize - d - 2;
                if i >= 0 {
                    reg = reg.max(size - i as usize);
                }
            }
        }
    }
    reg
}

/// Maps a mask over the positions of `sigma` back to variable indices.
fn spread(local: u32, sigma: u32) -> u32 {
    let mut out = 0;
    let mut k = 0;
    for v in 0..32 {
        if sigma >> v & 1 == 1 {
            if local >> k & 1 == 1 {
                out |= 1 << v;
            }
            k += 1;
        }
    }
    out
}

/// Checks an even walk against the definition without the library's checker:
/// odd length ≥ 3, consecutive vertices adjacent, and the `l`-th middle edge
/// equal to a distinct multiset entry.
pub fn valid_even_walk(g: &Graph, u: usize, v: usize, multiset: &[Edge], walk: &[usize]) -> bool {
    let len = walk.len();
    if len < 4 || len % 2 == 1 || walk[0] != u || walk[len - 1] != v {
        return false;
    }
    if !walk.windows(2).all(|p| g.has_edge(p[0], p[1])) {
        return false;
    }
    let middles: Vec<Edge> = (0..(len - 2) / 2)
        .map(|l| {
            let (a, b) = (walk[2 * l + 1], walk[2 * l + 2]);
            (a.min(b), a.max(b))
        })
        .collect();
    // Distinct entries: every middle edge needs its own copy in the multiset.
    let mut pool: Vec<Edge> = multiset.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    middles.iter().all(|m| match pool.iter().position(|p| p == m) {
        Some(i) => {
            pool.swap_remove(i);
            true
        }
        None => false,
    })
}
