//! Even-connected walks and the graph `G′` of `(I(G)^{s+1} : e_1⋯e_s)`.
//!
//! A walk `p_0 p_1 ⋯ p_{2k+1}` (k ≥ 1, vertices may repeat) even-connects its
//! ends with respect to a multiset of edges when every middle edge
//! `p_{2l+1} p_{2l+2}` is drawn from the multiset, each edge used at most its
//! multiplicity. `G′` adds an edge for every even-connected pair `u ≠ v` and a
//! pendant `z@u` for every vertex even-connected to itself.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::invariants::Edge;
use crate::monomial::{colon_by_monomial, edge_ideal, graph_of_quadratic, polarize, power_with, Monomial};

/// A walk witnessing even-connection, with the multiset entry used for each middle edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenWalkCertificate {
    pub walk: Vec<usize>,
    /// Entry `l` is the index into the edge multiset used for `p_{2l+1} p_{2l+2}`.
    pub middle_assignment: Vec<usize>,
}

/// Parses edges written as `u v` pairs separated by commas, e.g. `x2 x3, x4 x5`.
pub fn parse_edge_list(g: &Graph, text: &str) -> Result<Vec<Edge>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let parts: Vec<&str> = pair.split_whitespace().collect();
            match parts.as_slice() {
                [u, v] => g.edge_by_labels(u, v),
                _ => Err(Error::invalid(format!("edge `{pair}` is not a pair of labels"))),
            }
        })
        .collect()
}

/// Distinct edges of a multiset with multiplicities and the input positions of each.
struct Multiset {
    distinct: Vec<Edge>,
    positions: Vec<Vec<usize>>,
    /// Mixed-radix place values for encoding residual counts.
    radix: Vec<u64>,
}

impl Multiset {
    fn new(g: &Graph, edges: &[Edge]) -> Result<Self> {
        let mut map: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            let e = (a.min(b), a.max(b));
            if a == b || a >= g.vertex_count() || b >= g.vertex_count() || !g.has_edge(a, b) {
                return Err(Error::NotAnEdge(format!("({a},{b})")));
            }
            map.entry(e).or_default().push(i);
        }
        let (distinct, positions): (Vec<_>, Vec<_>) = map.into_iter().unzip();
        let mut radix = Vec::with_capacity(distinct.len());
        let mut place = 1u64;
        for p in &positions {
            radix.push(place);
            place = place
                .checked_mul(p.len() as u64 + 1)
                .ok_or_else(|| Error::invalid("edge multiset too large"))?;
        }
        Ok(Multiset { distinct, positions, radix })
    }

    fn full(&self) -> u64 {
        self.positions
            .iter()
            .zip(&self.radix)
            .map(|(p, r)| p.len() as u64 * r)
            .sum()
    }

    fn count(&self, code: u64, i: usize) -> u64 {
        code / self.radix[i] % (self.positions[i].len() as u64 + 1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    vertex: usize,
    odd: bool,
    residual: u64,
}

/// Breadth-first search from `u`; returns, for every vertex `v` even-connected
/// to `u`, a shortest certificate (ties broken by vertex and edge order).
fn search_from(g: &Graph, set: &Multiset, u: usize) -> BTreeMap<usize, EvenWalkCertificate> {
    let start = State { vertex: u, odd: false, residual: set.full() };
    let mut parent: HashMap<State, Option<(State, Option<usize>)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    let mut found = BTreeMap::new();
    let full = set.full();
    while let Some(st) = queue.pop_front() {
        let mut push = |next: State, via: Option<usize>, queue: &mut VecDeque<State>| {
            if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(next) {
                slot.insert(Some((st, via)));
                queue.push_back(next);
            }
        };
        if st.odd {
            if st.residual != full && !found.contains_key(&st.vertex) {
                found.insert(st.vertex, st);
            }
            for (i, &(a, b)) in set.distinct.iter().enumerate() {
                if set.count(st.residual, i) == 0 || (st.vertex != a && st.vertex != b) {
                    continue;
                }
                let other = if st.vertex == a { b } else { a };
                let next = State { vertex: other, odd: false, residual: st.residual - set.radix[i] };
                push(next, Some(i), &mut queue);
            }
        } else {
            for w in bits(g.neighbors(st.vertex)) {
                push(State { vertex: w, odd: true, residual: st.residual }, None, &mut queue);
            }
        }
    }
    found
        .into_iter()
        .map(|(v, end)| {
            let mut walk = vec![end.vertex];
            let mut used = Vec::new();
            let mut cur = end;
            while let Some(Some((prev, via))) = parent.get(&cur) {
                walk.push(prev.vertex);
                if let Some(i) = via {
                    used.push(*i);
                }
                cur = *prev;
            }
            walk.reverse();
            used.reverse();
            let mut taken = vec![0usize; set.distinct.len()];
            let middle_assignment = used
                .into_iter()
                .map(|i| {
                    taken[i] += 1;
                    set.positions[i][taken[i] - 1]
                })
                .collect();
            (v, EvenWalkCertificate { walk, middle_assignment })
        })
        .collect()
}

/// A shortest even-connecting walk from `u` to `v`, if one exists.
pub fn is_even_connected(
    g: &Graph,
    u: usize,
    v: usize,
    edges: &[Edge],
) -> Result<Option<EvenWalkCertificate>> {
    let set = Multiset::new(g, edges)?;
    if u >= g.vertex_count() || v >= g.vertex_count() {
        return Err(Error::invalid("vertex index out of range"));
    }
    Ok(search_from(g, &set, u).remove(&v))
}

/// Checks a certificate against the definition: odd length at least 3, walk
/// edges in `G`, middle edges equal to their assigned multiset entries, and no
/// multiset entry used twice.
pub fn check_certificate(
    g: &Graph,
    u: usize,
    v: usize,
    edges: &[Edge],
    cert: &EvenWalkCertificate,
) -> bool {
    let w = &cert.walk;
    let len = w.len();
    if len < 4 || !len.is_multiple_of(2) || w[0] != u || w[len - 1] != v {
        return false;
    }
    let k = (len - 2) / 2;
    if cert.middle_assignment.len() != k {
        return false;
    }
    if !w.windows(2).all(|p| p[0] != p[1] && g.has_edge(p[0], p[1])) {
        return false;
    }
    let mut used = vec![false; edges.len()];
    for (l, &i) in cert.middle_assignment.iter().enumerate() {
        if i >= edges.len() || used[i] {
            return false;
        }
        used[i] = true;
        let (a, b) = edges[i];
        let (p, q) = (w[2 * l + 1], w[2 * l + 2]);
        if (p, q) != (a, b) && (p, q) != (b, a) {
            return false;
        }
    }
    true
}

/// An edge of `G′` not in `G`, with the walk that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AddedEdge {
    pub u: String,
    pub v: String,
    pub certificate: EvenWalkCertificate,
}

/// `G′` together with the new edges and their certificates.
#[derive(Debug, Clone)]
pub struct GPrime {
    pub graph: Graph,
    pub added: Vec<AddedEdge>,
}

/// Label of the pendant attached to a self-connected vertex.
fn pendant_label(g: &Graph, u: usize) -> String {
    let base = format!("z@{}", g.label(u));
    if g.index_of(&base).is_none() {
        return base;
    }
    (2..)
        .map(|i| format!("{base}#{i}"))
        .find(|l| g.index_of(l).is_none())
        .expect("unbounded search")
}

/// `G′` by even-connection search.
pub fn gprime(g: &Graph, edges: &[Edge]) -> Result<Graph> {
    Ok(gprime_with_certificates(g, edges)?.graph)
}

pub fn gprime_with_certificates(g: &Graph, edges: &[Edge]) -> Result<GPrime> {
    if edges.is_empty() {
        return Err(Error::invalid("edge multiset must be non-empty"));
    }
    let set = Multiset::new(g, edges)?;
    let n = g.vertex_count();
    let mut out = g.clone();
    let mut added = Vec::new();
    let mut selfs = Vec::new();
    for u in 0..n {
        for (v, cert) in search_from(g, &set, u) {
            if v == u {
                selfs.push((u, cert));
            } else if u < v && !g.has_edge(u, v) {
                out.add_edge_idx(u, v);
                added.push(AddedEdge {
                    u: g.label(u).to_string(),
                    v: g.label(v).to_string(),
                    certificate: cert,
                });
            }
        }
    }
    for (u, cert) in selfs {
        let z = out.add_vertex(&pendant_label(g, u))?;
        out.add_edge_idx(u, z);
        added.push(AddedEdge {
            u: g.label(u).to_string(),
            v: out.label(z).to_string(),
            certificate: cert,
        });
    }
    Ok(GPrime { graph: out, added })
}

/// `G′` from the polarized colon ideal, with each second copy `x#2` renamed to `z@x`.
pub fn gprime_algebraic(g: &Graph, edges: &[Edge]) -> Result<Graph> {
    gprime_algebraic_with(g, edges, &Caps::default())
}

pub fn gprime_algebraic_with(g: &Graph, edges: &[Edge], caps: &Caps) -> Result<Graph> {
    if edges.is_empty() {
        return Err(Error::invalid("edge multiset must be non-empty"));
    }
    Multiset::new(g, edges)?;
    let ideal = edge_ideal(g);
    let n = g.vertex_count();
    let vars: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let m = Monomial::product_of(n, &vars);
    let colon = colon_by_monomial(&power_with(&ideal, edges.len() + 1, caps)?, &m);
    let (polar, map) = polarize(&colon);
    let pg = graph_of_quadratic(&polar)
        .map_err(|e| Error::Invariant(format!("colon ideal is not quadratic: {e}")))?;
    let mut out = g.with_vertices_only();
    let mut index = vec![usize::MAX; map.len()];
    for (i, p) in map.iter().enumerate() {
        index[i] = match p.copy {
            1 => p.original,
            2 => out.add_vertex(&pendant_label(g, p.original))?,
            c => return Err(Error::Invariant(format!("copy {c} of a variable in a quadratic colon"))),
        };
    }
    for &(a, b) in pg.edges() {
        out.add_edge_idx(index[a], index[b]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, parse_graph};

    fn g5() -> Graph {
        parse_graph("x1 x2\nx1 x5\nx2 x5\nx2 x3\nx3 x4\nx4 x5").unwrap()
    }

    fn edge(g: &Graph, u: &str, v: &str) -> Edge {
        g.edge_by_labels(u, v).unwrap()
    }

    fn labels_added(g: &Graph, h: &Graph) -> Vec<String> {
        h.edge_labels()
            .filter(|(u, v)| g.index_of(u).zip(g.index_of(v)).is_none_or(|(a, b)| !g.has_edge(a, b)))
            .map(|(u, v)| if u < v { format!("{u}{v}") } else { format!("{v}{u}") })
            .collect()
    }

    #[test]
    fn even_connections_in_g5() {
        let g = g5();
        let e = [edge(&g, "x2", "x5")];
        let x1 = g.vertex("x1").unwrap();
        let x3 = g.vertex("x3").unwrap();
        let c = is_even_connected(&g, x1, x1, &e).unwrap().unwrap();
        assert!(check_certificate(&g, x1, x1, &e, &c));
        let c = is_even_connected(&g, x1, x3, &e).unwrap().unwrap();
        assert_eq!(c.walk.len(), 4);
        assert!(check_certificate(&g, x1, x3, &e, &c));
    }

    #[test]
    fn no_even_connection_across_c6() {
        let c6 = cycle(6).unwrap();
        let e = [edge(&c6, "x2", "x3")];
        assert_eq!(is_even_connected(&c6, 0, 4, &e).unwrap(), None);
        assert!(is_even_connected(&c6, 0, 4, &[(0, 2)]).is_err());
    }

    #[test]
    fn hexagon_two_edges() {
        let c6 = cycle(6).unwrap();
        let e = [edge(&c6, "x2", "x3"), edge(&c6, "x4", "x5")];
        let h = gprime(&c6, &e).unwrap();
        assert_eq!(labels_added(&c6, &h), ["x1x4", "x3x6"]);
        assert_eq!(gprime_algebraic(&c6, &e).unwrap(), h);
    }

    #[test]
    fn unmixed_triangle_example() {
        let g = parse_graph("x1 x4\nx1 x2\nx1 x3\nx2 x3\nx2 x5\nx3 x6").unwrap();
        let e = [edge(&g, "x1", "x2")];
        let h = gprime(&g, &e).unwrap();
        let mut added = labels_added(&g, &h);
        added.sort();
        assert_eq!(added, ["x3x4", "x3x5", "x3z@x3", "x4x5"]);
        assert_eq!(gprime_algebraic(&g, &e).unwrap(), h);
    }

    #[test]
    fn star_adds_nothing() {
        let star = complete_bipartite(1, 3).unwrap();
        let e = [edge(&star, "x1", "y1")];
        assert_eq!(gprime(&star, &e).unwrap(), star);
        assert_eq!(gprime_algebraic(&star, &e).unwrap(), star);
    }

    #[test]
    fn repeated_edge_on_c4() {
        let c4 = cycle(4).unwrap();
        let e = [edge(&c4, "x1", "x2"), edge(&c4, "x1", "x2")];
        assert_eq!(gprime(&c4, &e).unwrap(), gprime_algebraic(&c4, &e).unwrap());
    }

    #[test]
    fn certificates_accompany_added_edges() {
        let g = g5();
        let e = [edge(&g, "x2", "x5")];
        let gp = gprime_with_certificates(&g, &e).unwrap();
        for a in &gp.added {
            let u = g.vertex(&a.u).unwrap();
            let v = g.index_of(&a.v).unwrap_or(u);
            assert!(check_certificate(&g, u, v, &e, &a.certificate));
        }
        assert_eq!(gp.graph, gprime_algebraic(&g, &e).unwrap());
    }

    #[test]
    fn edge_list_parsing() {
        let c6 = cycle(6).unwrap();
        assert_eq!(parse_edge_list(&c6, "x2 x3, x4 x5").unwrap(), vec![(1, 2), (3, 4)]);
        assert!(parse_edge_list(&c6, "x1 x3").is_err());
        assert!(parse_edge_list(&c6, "x1").is_err());
    }
}
