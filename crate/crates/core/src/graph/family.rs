//! Named graph families and the family expression language.
//!
//! Label scheme:
//! - `cycle(n)`, `path(n)`, `complete(n)`, `edgeless(n)`: `x1..xn` (cycles in cyclic order);
//! - `complete_bipartite(m, n)`: `x1..xm` and `y1..yn`;
//! - `whisker(G)`: `G`'s vertices, then a pendant `w@u` for each vertex `u`;
//! - `add_pendants(G, [u, ..])`: pendant `p@u` (a repeated `u` gets `p@u#2`, ...);
//! - `disjoint_union(G1, .., Gt)`: vertex `v` of the `i`-th graph becomes `v_i` (t ≥ 2);
//! - `star_cycles(k, [r_{k+1}, .., r_n])`: centre `w`, leaves `x1..xn`, pendants `p@x1..p@xk`,
//!   and for `t > k` a cycle `x_t, c<t>_1, .., c<t>_<2r_t - 1>` of length `2r_t`.
//!
//! Expression syntax: `C6`, `P4`, `K5`, `K2,5`, `E3`, `W(G)`, `U(G1,G2,..)`,
//! `pend(G;[x1,x2])`, `star(k;[r,..])`, `co(G)`, plus the long names
//! `cycle(6)`, `path(4)`, `complete(5)`, `complete_bipartite(2,5)`, `edgeless(3)`,
//! `whisker(G)`, `disjoint_union(..)`, `add_pendants(G;[..])`, `star_cycles(k;[..])`,
//! `complement(G)`.

use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge_idx(n - 1, 0);
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("path needs at least 1 vertex"));
    }
    let mut g = edgeless(n)?;
    for i in 1..n {
        g.add_edge_idx(i - 1, i);
    }
    Ok(g)
}

pub fn edgeless(n: usize) -> Result<Graph> {
    let mut g = Graph::new();
    for i in 1..=n {
        g.add_vertex(&format!("x{i}"))?;
    }
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = edgeless(n)?;
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge_idx(a, b);
        }
    }
    Ok(g)
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    let mut g = edgeless(m)?;
    for j in 1..=n {
        g.add_vertex(&format!("y{j}"))?;
    }
    for a in 0..m {
        for b in m..m + n {
            g.add_edge_idx(a, b);
        }
    }
    Ok(g)
}

/// Whiskered graph: one new pendant `w@u` at every vertex `u`.
pub fn whisker(g: &Graph) -> Result<Graph> {
    let mut h = g.clone();
    for (i, label) in g.labels().iter().enumerate() {
        let w = h.add_vertex(&fresh(&h, &format!("w@{label}")))?;
        h.add_edge_idx(i, w);
    }
    Ok(h)
}

/// Adds a pendant `p@u` at each listed vertex.
pub fn add_pendants<S: AsRef<str>>(g: &Graph, at: &[S]) -> Result<Graph> {
    let mut h = g.clone();
    for u in at {
        let i = g.vertex(u.as_ref())?;
        let p = h.add_vertex(&fresh(&h, &format!("p@{}", u.as_ref())))?;
        h.add_edge_idx(i, p);
    }
    Ok(h)
}

/// Disjoint union; with two or more parts every label gets the suffix `_<part>`.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    if parts.len() == 1 {
        return parts[0].clone();
    }
    let mut g = Graph::new();
    for (p, part) in parts.iter().enumerate() {
        let offset = g.vertex_count();
        for l in part.labels() {
            g.add_vertex(&format!("{l}_{}", p + 1))
                .expect("union exceeds the vertex limit");
        }
        for &(a, b) in part.edges() {
            g.add_edge_idx(offset + a, offset + b);
        }
    }
    g
}

/// Star `K_{1,n}` with pendants at `x1..xk` and an even cycle of length `2r_t`
/// through each remaining leaf `x_t`. Returns a warning for every `2r_t ≢ 2 (mod 3)`.
pub fn star_cycles(k: usize, half_lengths: &[usize]) -> Result<(Graph, Vec<String>)> {
    let n = k + half_lengths.len();
    let mut g = Graph::new();
    let w = g.add_vertex("w")?;
    for t in 1..=n {
        let x = g.add_vertex(&format!("x{t}"))?;
        g.add_edge_idx(w, x);
    }
    let leaves: Vec<String> = (1..=k).map(|t| format!("x{t}")).collect();
    g = add_pendants(&g, &leaves)?;
    let mut warnings = Vec::new();
    for (j, &r) in half_lengths.iter().enumerate() {
        let t = k + 1 + j;
        if r < 2 {
            return Err(Error::invalid(format!("cycle at x{t} needs r ≥ 2, got {r}")));
        }
        let len = 2 * r;
        if len % 3 != 2 {
            warnings.push(format!("cycle length {len} at x{t} is not 2 mod 3"));
        }
        let mut prev = t; // index of x_t
        for c in 1..len {
            let v = g.add_vertex(&format!("c{t}_{c}"))?;
            g.add_edge_idx(prev, v);
            prev = v;
        }
        g.add_edge_idx(prev, t);
    }
    Ok((g, warnings))
}

fn fresh(g: &Graph, base: &str) -> String {
    if g.index_of(base).is_none() {
        return base.to_string();
    }
    (2..)
        .map(|i| format!("{base}#{i}"))
        .find(|l| g.index_of(l).is_none())
        .expect("unbounded search")
}

/// A parsed family expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Edgeless(usize),
    Whisker(Box<Family>),
    Union(Vec<Family>),
    Pendants(Box<Family>, Vec<String>),
    StarCycles(usize, Vec<usize>),
    Complement(Box<Family>),
}

/// A family graph together with construction warnings.
#[derive(Debug, Clone)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

impl Family {
    pub fn parse(text: &str) -> Result<Family> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { s: compact.as_bytes(), pos: 0 };
        let f = p.family()?;
        if p.pos != p.s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(f)
    }

    pub fn build(&self) -> Result<FamilyGraph> {
        let mut warnings = Vec::new();
        let graph = self.build_into(&mut warnings)?;
        Ok(FamilyGraph { graph, warnings })
    }

    fn build_into(&self, warnings: &mut Vec<String>) -> Result<Graph> {
        Ok(match self {
            Family::Cycle(n) => cycle(*n)?,
            Family::Path(n) => path(*n)?,
            Family::Complete(n) => complete(*n)?,
            Family::CompleteBipartite(m, n) => complete_bipartite(*m, *n)?,
            Family::Edgeless(n) => edgeless(*n)?,
            Family::Whisker(f) => whisker(&f.build_into(warnings)?)?,
            Family::Union(fs) => {
                let parts = fs
                    .iter()
                    .map(|f| f.build_into(warnings))
                    .collect::<Result<Vec<_>>>()?;
                let total: usize = parts.iter().map(Graph::vertex_count).sum();
                if total > super::MAX_VERTICES {
                    return Err(Error::ResourceCap {
                        what: "graph vertex count",
                        limit: super::MAX_VERTICES,
                        actual: total,
                    });
                }
                disjoint_union(&parts)
            }
            Family::Pendants(f, at) => add_pendants(&f.build_into(warnings)?, at)?,
            Family::StarCycles(k, rs) => {
                let (g, w) = star_cycles(*k, rs)?;
                warnings.extend(w);
                g
            }
            Family::Complement(f) => f.build_into(warnings)?.complement(),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Path(n) => write!(f, "P{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
            Family::Edgeless(n) => write!(f, "E{n}"),
            Family::Whisker(g) => write!(f, "W({g})"),
            Family::Union(gs) => {
                write!(f, "U(")?;
                for (i, g) in gs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ")")
            }
            Family::Pendants(g, at) => write!(f, "pend({g};[{}])", at.join(",")),
            Family::StarCycles(k, rs) => {
                let rs: Vec<String> = rs.iter().map(usize::to_string).collect();
                write!(f, "star({k};[{}])", rs.join(","))
            }
            Family::Complement(g) => write!(f, "co({g})"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::invalid(format!(
            "bad family expression at offset {}: {msg}",
            self.pos
        ))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.error("expected a number"))
    }

    fn next_is_digit(&self, offset: usize) -> bool {
        matches!(self.s.get(self.pos + offset), Some(c) if c.is_ascii_digit())
    }

    fn label(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if !matches!(c, b',' | b']' | b'[' | b';' | b'(' | b')'))
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a vertex label"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        if self.eat(b']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(b']') {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    fn family(&mut self) -> Result<Family> {
        let name = self.ident();
        let boxed = |f: Family| Box::new(f);
        Ok(match name.as_str() {
            "C" | "P" | "K" | "E" if self.next_is_digit(0) => {
                let n = self.number()?;
                match name.as_str() {
                    "C" => Family::Cycle(n),
                    "P" => Family::Path(n),
                    "E" => Family::Edgeless(n),
                    _ if self.peek() == Some(b',') && self.next_is_digit(1) => {
                        self.pos += 1;
                        Family::CompleteBipartite(n, self.number()?)
                    }
                    _ => Family::Complete(n),
                }
            }
            "cycle" | "path" | "complete" | "edgeless" => {
                self.expect(b'(')?;
                let n = self.number()?;
                self.expect(b')')?;
                match name.as_str() {
                    "cycle" => Family::Cycle(n),
                    "path" => Family::Path(n),
                    "complete" => Family::Complete(n),
                    _ => Family::Edgeless(n),
                }
            }
            "complete_bipartite" => {
                self.expect(b'(')?;
                let m = self.number()?;
                self.expect(b',')?;
                let n = self.number()?;
                self.expect(b')')?;
                Family::CompleteBipartite(m, n)
            }
            "W" | "whisker" | "co" | "complement" => {
                self.expect(b'(')?;
                let inner = self.family()?;
                self.expect(b')')?;
                if name.starts_with('c') {
                    Family::Complement(boxed(inner))
                } else {
                    Family::Whisker(boxed(inner))
                }
            }
            "U" | "disjoint_union" => {
                self.expect(b'(')?;
                let mut parts = vec![self.family()?];
                while self.eat(b',') {
                    parts.push(self.family()?);
                }
                self.expect(b')')?;
                Family::Union(parts)
            }
            "pend" | "add_pendants" => {
                self.expect(b'(')?;
                let inner = self.family()?;
                self.expect(b';')?;
                let at = self.list(Self::label)?;
                self.expect(b')')?;
                Family::Pendants(boxed(inner), at)
            }
            "star" | "star_cycles" => {
                self.expect(b'(')?;
                let k = self.number()?;
                self.expect(b';')?;
                let rs = self.list(Self::number)?;
                self.expect(b')')?;
                Family::StarCycles(k, rs)
            }
            "" => return Err(self.error("expected a family name")),
            other => return Err(self.error(&format!("unknown family `{other}`"))),
        })
    }
}
