//! Finite simple graphs with labelled vertices.
//!
//! Vertices are stored in insertion order and addressed by index; all vertex
//! sets are `u64` masks over those indices, so a [`Graph`] holds at most
//! [`MAX_VERTICES`] vertices. Edges are kept as sorted index pairs `(u, v)`
//! with `u < v`, which fixes the edge order used by every search in the crate.

mod family;

pub use family::{
    add_pendants, complete, complete_bipartite, cycle, disjoint_union, edgeless, path,
    star_cycles, whisker, Family, FamilyGraph,
};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard limit on the number of vertices of a [`Graph`].
pub const MAX_VERTICES: usize = 64;

/// Iterates over the indices of the set bits of a mask.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[derive(Clone, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edge_labels().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from labels and label pairs; vertices appear in the
    /// order given, followed by any edge endpoints not already listed.
    pub fn from_edges<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v.as_ref())?;
        }
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    /// Adds a vertex if absent and returns its index.
    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if let Some(&i) = self.index.get(label) {
            return Ok(i);
        }
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::invalid(format!("vertex label `{label}` is empty or has whitespace")));
        }
        if self.labels.len() == MAX_VERTICES {
            return Err(Error::ResourceCap {
                what: "graph vertex count",
                limit: MAX_VERTICES,
                actual: MAX_VERTICES + 1,
            });
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(0);
        Ok(i)
    }

    /// Adds the edge `{u, v}`, creating endpoints as needed. Duplicate edges are ignored.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<()> {
        if u == v {
            return Err(Error::invalid(format!("loop at `{u}`")));
        }
        let a = self.add_vertex(u)?;
        let b = self.add_vertex(v)?;
        self.add_edge_idx(a, b);
        Ok(())
    }

    pub(crate) fn add_edge_idx(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.labels.len() && b < self.labels.len());
        if self.adj[a] >> b & 1 == 1 {
            return;
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        let e = (a.min(b), a.max(b));
        let pos = self.edges.binary_search(&e).unwrap_err();
        self.edges.insert(pos, e);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Mask of all vertices.
    pub fn all(&self) -> u64 {
        match self.labels.len() {
            64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    /// Neighbourhood mask of vertex `i`.
    pub fn neighbors(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Edges as sorted index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (self.labels[a].as_str(), self.labels[b].as_str()))
    }

    /// Formats an edge as `{u,v}`.
    pub fn edge_name(&self, (a, b): (usize, usize)) -> String {
        format!("{{{},{}}}", self.labels[a], self.labels[b])
    }

    /// Resolves a pair of labels to an edge of the graph.
    pub fn edge_by_labels(&self, u: &str, v: &str) -> Result<(usize, usize)> {
        let a = self.vertex(u)?;
        let b = self.vertex(v)?;
        if a == b || !self.has_edge(a, b) {
            return Err(Error::NotAnEdge(format!("{{{u},{v}}}")));
        }
        Ok((a.min(b), a.max(b)))
    }

    /// Vertices of positive degree.
    pub fn support(&self) -> u64 {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &n)| n != 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// Labelled-graph equality that ignores vertex order.
    pub fn same_labeled(&self, other: &Graph) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let map: Option<Vec<usize>> = self.labels.iter().map(|l| other.index_of(l)).collect();
        let Some(map) = map else { return false };
        self.edges
            .iter()
            .all(|&(a, b)| other.has_edge(map[a], map[b]))
    }

    /// The complement on the same vertex list.
    pub fn complement(&self) -> Graph {
        let mut g = self.with_vertices_only();
        let n = self.vertex_count();
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge(a, b) {
                    g.add_edge_idx(a, b);
                }
            }
        }
        g
    }

    pub(crate) fn with_vertices_only(&self) -> Graph {
        Graph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            adj: vec![0; self.labels.len()],
            edges: Vec::new(),
        }
    }

    /// Induced subgraph on the given labels, kept in this graph's vertex order.
    pub fn induced_subgraph<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Graph> {
        let mut mask = 0u64;
        for v in vertices {
            mask |= 1 << self.vertex(v.as_ref())?;
        }
        Ok(self.induced_by_mask(mask))
    }

    /// Induced subgraph on a vertex mask, kept in this graph's vertex order.
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let mut g = Graph::new();
        let mut map = vec![usize::MAX; self.vertex_count()];
        for i in bits(mask) {
            map[i] = g.add_vertex(&self.labels[i]).expect("labels are valid");
        }
        for &(a, b) in &self.edges {
            if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
                g.add_edge_idx(map[a], map[b]);
            }
        }
        g
    }

    /// Subgraph on all vertices with the given edges (by index into [`Graph::edges`]).
    pub fn spanning_subgraph(&self, edge_ids: impl IntoIterator<Item = usize>) -> Graph {
        let mut g = self.with_vertices_only();
        for id in edge_ids {
            let (a, b) = self.edges[id];
            g.add_edge_idx(a, b);
        }
        g
    }

    /// Connected components as vertex masks, ordered by their first vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let next = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A 2-colouring per component (component roots go to `X`), or `None`
    /// when the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in bits(self.adj[v]) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let x = (0..n).filter(|&v| side[v] == 0).fold(0, |acc, v| acc | 1 << v);
        Some(Bipartition { x, y: self.all() & !x })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Labels of the vertices in a mask, in vertex order.
    pub fn mask_labels(&self, mask: u64) -> Vec<String> {
        bits(mask).map(|i| self.labels[i].clone()).collect()
    }

    /// Renders the graph in the edge-list text format accepted by [`parse_graph`].
    /// Isolated vertices are written as `# vertex <label>` lines.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (i, l) in self.labels.iter().enumerate() {
            if self.adj[i] == 0 {
                out.push_str(&format!("# vertex {l}\n"));
            }
        }
        for (u, v) in self.edge_labels() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edge_labels()
                .map(|(u, v)| [u.to_string(), v.to_string()])
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        let mut g = Graph::new();
        for v in &json.vertices {
            g.add_vertex(v)?;
        }
        for [u, v] in &json.edges {
            g.vertex(u)?;
            g.vertex(v)?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

/// Serialized form of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Two disjoint independent vertex sets covering the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bipartition {
    pub x: u64,
    pub y: u64,
}

impl Bipartition {
    pub fn smaller_side(&self) -> usize {
        self.x.count_ones().min(self.y.count_ones()) as usize
    }

    /// Checks the partition against a graph whose first vertices are those it was built for.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let all = g.all();
        self.x & self.y == 0
            && (self.x | self.y) & all == all
            && (0..n).all(|v| {
                let same = if self.x >> v & 1 == 1 { self.x } else { self.y };
                g.neighbors(v) & same == 0
            })
    }
}

/// Parses the edge-list format: one `u v` pair per line, `#` comments and
/// blank lines ignored. A `# vertex <label>` comment declares an isolated vertex.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(label) = comment.trim().strip_prefix("vertex ") {
                g.add_vertex(label.trim())
                    .map_err(|e| Error::parse(line_no, e.to_string()))?;
            }
            continue;
        }
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [u, v] if u == v => return Err(Error::parse(line_no, format!("loop `{u} {v}`"))),
            [u, v] => g
                .add_edge(u, v)
                .map_err(|e| Error::parse(line_no, e.to_string()))?,
            _ => {
                return Err(Error::parse(
                    line_no,
                    format!("expected two vertex labels, found {}", tokens.len()),
                ))
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn six_vertex_example() -> Graph {
        parse_graph("x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x6\nx6 x1\nx3 x6\nx2 x5").unwrap()
    }

    #[test]
    fn parse_path() {
        let g = parse_graph("x1 x2\nx2 x3").unwrap();
        assert_eq!(g.labels(), ["x1", "x2", "x3"]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_empty_and_duplicates() {
        assert_eq!(parse_graph("").unwrap().vertex_count(), 0);
        let g = parse_graph("a b\nb a\na b").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_graph("a b\n\nc c") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_graph("a b c"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("a"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn comments_and_isolated_vertices_round_trip() {
        let g = parse_graph("# a comment\n# vertex z\na b # trailing\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        let back = parse_graph(&g.to_edge_list()).unwrap();
        assert!(back.same_labeled(&g));
    }

    #[test]
    fn complement_examples() {
        let c4 = cycle(4).unwrap();
        let co = c4.complement();
        assert_eq!(co.edge_count(), 2);
        assert!(co.edges().iter().all(|&(a, b)| co.degree(a) == 1 && co.degree(b) == 1));
        let k3 = edgeless(3).unwrap().complement();
        assert_eq!(k3.edge_count(), 3);
        let p5 = path(5).unwrap();
        assert_eq!(p5.complement().complement(), p5);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = six_vertex_example();
        let h = g.induced_subgraph(&["x2", "x3", "x5", "x6"]).unwrap();
        assert!(h.edge_by_labels("x3", "x6").is_ok());
        assert!(h.edge_by_labels("x2", "x5").is_ok());
        assert_eq!(g.induced_subgraph(g.labels()).unwrap(), g);
        assert_eq!(g.induced_subgraph::<&str>(&[]).unwrap().vertex_count(), 0);
        assert!(matches!(g.induced_subgraph(&["nope"]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn bipartition_examples() {
        let c6 = cycle(6).unwrap();
        let b = c6.bipartition().unwrap();
        assert_eq!(c6.mask_labels(b.x), ["x1", "x3", "x5"]);
        assert_eq!(c6.mask_labels(b.y), ["x2", "x4", "x6"]);
        assert!(cycle(3).unwrap().bipartition().is_none());
        let u = disjoint_union(&[path(2).unwrap(), path(2).unwrap()]);
        let b = u.bipartition().unwrap();
        assert_eq!((b.x.count_ones(), b.y.count_ones()), (2, 2));
        assert!(b.is_valid_for(&u));
    }

    #[test]
    fn json_round_trip() {
        let g = six_vertex_example();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Graph::from_json(&back).unwrap(), g);
    }
}
