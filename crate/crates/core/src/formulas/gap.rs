//! Search for graphs whose regularity sits strictly between the
//! induced-matching and co-chordal bounds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{reg_power_with, BettiOptions};
use crate::chordal::cochordal_cover_number_with;
use crate::enumerate::{connected_bipartite_graphs, connected_graphs, cycles_plus_edges, forests};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::induced_matching_number;

/// A graph family small enough to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapFamily {
    /// Connected graphs on at most this many vertices.
    Connected(usize),
    /// Connected bipartite graphs on at most this many vertices.
    ConnectedBipartite(usize),
    /// Forests without isolated vertices and with at most this many edges.
    Forests(usize),
    /// Disjoint unions of cycles and edges on at most this many vertices.
    CyclesPlusEdges(usize),
}

impl FromStr for GapFamily {
    type Err = Error;

    /// Parses `connected:N`, `connected-bipartite:N`, `forests:E` or `cycles-plus-edges:N`.
    fn from_str(text: &str) -> Result<GapFamily> {
        let (kind, n) = text
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("family `{text}` is not kind:N")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("family `{text}` has a non-numeric size")))?;
        match kind.trim() {
            "connected" => Ok(GapFamily::Connected(n)),
            "connected-bipartite" => Ok(GapFamily::ConnectedBipartite(n)),
            "forests" => Ok(GapFamily::Forests(n)),
            "cycles-plus-edges" => Ok(GapFamily::CyclesPlusEdges(n)),
            other => Err(Error::invalid(format!("unknown family kind `{other}`"))),
        }
    }
}

impl fmt::Display for GapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapFamily::Connected(n) => write!(f, "connected:{n}"),
            GapFamily::ConnectedBipartite(n) => write!(f, "connected-bipartite:{n}"),
            GapFamily::Forests(n) => write!(f, "forests:{n}"),
            GapFamily::CyclesPlusEdges(n) => write!(f, "cycles-plus-edges:{n}"),
        }
    }
}

impl GapFamily {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match *self {
            GapFamily::Connected(n) => connected_graphs(n),
            GapFamily::ConnectedBipartite(n) => connected_bipartite_graphs(n),
            GapFamily::Forests(n) => forests(n),
            GapFamily::CyclesPlusEdges(n) => Ok(cycles_plus_edges(n)?.into_iter().map(|(g, _, _)| g).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapEntry {
    /// Edge list, `u v` pairs separated by commas.
    pub graph: String,
    pub nu: usize,
    pub cochord: usize,
    pub reg: usize,
    /// `reg − (2s + ν − 1)`.
    pub gap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub family: String,
    pub s: usize,
    pub graphs: usize,
    /// Graphs skipped because a resource cap was reached.
    pub skipped: usize,
    /// Graphs with `2s+ν−1 < reg < 2s+cochord−1`.
    pub strict: Vec<GapEntry>,
    /// For each `n = cochord − ν`, the number of graphs with each gap `t`.
    pub distribution: BTreeMap<usize, BTreeMap<usize, usize>>,
}

/// Computes `ν`, `cochord` and the oracle regularity of `I(G)^s` for every
/// graph in the family.
pub fn gap_search(family: GapFamily, s: usize, betti: &BettiOptions) -> Result<GapReport> {
    if s == 0 {
        return Err(Error::invalid("the power s must be at least 1"));
    }
    let graphs = family.graphs()?;
    let entries: Vec<Option<GapEntry>> = graphs
        .par_iter()
        .map(|g| gap_entry(g, s, betti))
        .collect::<Result<_>>()?;
    let mut report = GapReport {
        family: family.to_string(),
        s,
        graphs: graphs.len(),
        skipped: 0,
        strict: Vec::new(),
        distribution: BTreeMap::new(),
    };
    for entry in entries {
        let Some(e) = entry else {
            report.skipped += 1;
            continue;
        };
        *report
            .distribution
            .entry(e.cochord - e.nu)
            .or_default()
            .entry(e.gap)
            .or_default() += 1;
        if e.gap > 0 && e.reg + 1 < 2 * s + e.cochord {
            report.strict.push(e);
        }
    }
    Ok(report)
}

fn gap_entry(g: &Graph, s: usize, betti: &BettiOptions) -> Result<Option<GapEntry>> {
    let computed = (|| {
        let nu = induced_matching_number(g);
        let cochord = cochordal_cover_number_with(g, &betti.caps)?.size;
        let reg = reg_power_with(g, s, betti)? as usize;
        let lower = 2 * s + nu - 1;
        if reg < lower {
            return Err(Error::Invariant(format!("oracle regularity {reg} below 2s+ν−1 = {lower}")));
        }
        Ok(GapEntry {
            graph: g.edge_labels().map(|(a, b)| format!("{a} {b}")).collect::<Vec<_>>().join(", "),
            nu,
            cochord,
            reg,
            gap: reg - lower,
        })
    })();
    match computed {
        Ok(e) => Ok(Some(e)),
        Err(e) if e.is_resource() => Ok(None),
        Err(e) => Err(e),
    }
}
