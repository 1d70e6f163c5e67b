//! Closed-form bounds and exact values for `reg(I(G)^s)`.
//!
//! Every bound is a function of a graph invariant and `s`. Upper bounds carry
//! a [`Validity`]: they are theorems for bipartite graphs (and for `s = 1` on
//! all graphs), and only observations otherwise.

mod gap;
mod harness;

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::betti::{reg_power_with, BettiOptions};
use crate::caps::Caps;
use crate::chordal::{cochordal_cover_number_with, is_weakly_chordal};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::invariants::{
    has_dominating_induced_matching, induced_matching_number, is_pk_free, is_unmixed_with,
    min_maximal_matching_number,
};

pub use gap::{gap_search, GapEntry, GapFamily, GapReport};
pub use harness::{
    check_theorems, Bounds, Check, CheckStatus, ColonReport, Counterexample, HarnessConfig, HarnessReport,
    RegularityReport,
};

fn check_s(s: usize) -> Result<()> {
    if s == 0 {
        Err(Error::invalid("the power s must be at least 1"))
    } else {
        Ok(())
    }
}

/// Whether an upper bound is a theorem for this input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Proven,
    Unproven,
}

impl Validity {
    fn for_graph(g: &Graph, s: usize) -> Validity {
        if s == 1 || g.is_bipartite() {
            Validity::Proven
        } else {
            Validity::Unproven
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Validity::Proven => "proven",
            Validity::Unproven => "observed, unproven",
        })
    }
}

impl Serialize for Validity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub value: usize,
    pub validity: Validity,
}

/// `2s + ν(G) − 1`, valid for every graph.
pub fn reg_lower_bound(g: &Graph, s: usize) -> Result<usize> {
    check_s(s)?;
    Ok(2 * s + induced_matching_number(g) - 1)
}

/// `2s + cochord(G) − 1`.
pub fn reg_upper_bound_cochord(g: &Graph, s: usize) -> Result<UpperBound> {
    reg_upper_bound_cochord_with(g, s, &Caps::default())
}

pub fn reg_upper_bound_cochord_with(g: &Graph, s: usize, caps: &Caps) -> Result<UpperBound> {
    check_s(s)?;
    let cochord = cochordal_cover_number_with(g, caps)?.size;
    Ok(UpperBound {
        value: (2 * s + cochord).saturating_sub(1),
        validity: Validity::for_graph(g, s),
    })
}

/// `2s + ba(G) − 1`.
pub fn reg_upper_bound_matching(g: &Graph, s: usize) -> Result<UpperBound> {
    check_s(s)?;
    Ok(UpperBound {
        value: (2 * s + min_maximal_matching_number(g)).saturating_sub(1),
        validity: Validity::for_graph(g, s),
    })
}

/// The bipartition bound as an exact rational together with its floor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartitionBound {
    pub value: Ratio<u64>,
    /// `min(|X|, |Y|)` for the bipartition used.
    pub smaller_side: usize,
}

impl BipartitionBound {
    pub fn floor(&self) -> u64 {
        self.value.floor().to_integer()
    }
}

impl Serialize for BipartitionBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BipartitionBound", 3)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.serialize_field("floor", &self.floor())?;
        st.serialize_field("smaller_side", &self.smaller_side)?;
        st.end()
    }
}

/// Smallest `min(|X|, |Y|)` over bipartitions of the non-isolated vertices.
fn smallest_side(g: &Graph) -> Option<usize> {
    let mut total = 0;
    for comp in g.components() {
        if comp.count_ones() == 1 {
            continue;
        }
        let part = g.induced_by_mask(comp).bipartition()?;
        total += part.smaller_side();
    }
    Some(total)
}

/// `2s + ½(ν(G) + min(|X|, |Y|)) − 1` for bipartite `G`, using the bipartition
/// with the smallest side (isolated vertices ignored).
pub fn reg_upper_bound_bipartition(g: &Graph, s: usize) -> Result<BipartitionBound> {
    check_s(s)?;
    let side = smallest_side(g).ok_or_else(|| Error::invalid("graph is not bipartite"))?;
    let nu = induced_matching_number(g) as u64;
    let value = Ratio::from_integer(2 * s as u64) + Ratio::new(nu + side as u64, 2) - Ratio::from_integer(1);
    Ok(BipartitionBound {
        value,
        smaller_side: side,
    })
}

/// Graph classes with a closed formula for `reg(I(G)^s)`, in dispatch order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExactClass {
    CyclesPlusEdges,
    DisjointCycles,
    UnmixedBipartite,
    WeaklyChordalBipartite,
    WhiskeredBipartite,
    P6FreeBipartite,
    DominatingInducedMatchingBipartite,
    Reg3ConnectedBipartite,
}

impl fmt::Display for ExactClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExactClass::CyclesPlusEdges => "cycles-plus-edges",
            ExactClass::DisjointCycles => "disjoint-cycles",
            ExactClass::UnmixedBipartite => "unmixed-bipartite",
            ExactClass::WeaklyChordalBipartite => "weakly-chordal-bipartite",
            ExactClass::WhiskeredBipartite => "whiskered-bipartite",
            ExactClass::P6FreeBipartite => "p6-free-bipartite",
            ExactClass::DominatingInducedMatchingBipartite => "dominating-induced-matching-bipartite",
            ExactClass::Reg3ConnectedBipartite => "reg3-connected-bipartite",
        })
    }
}

/// An exact value with the class that produced it and every class that applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactValue {
    pub value: usize,
    pub class: ExactClass,
    pub matches: Vec<ExactClass>,
}

/// Options for [`reg_exact_class_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactOptions {
    pub caps: Caps,
    /// When set, `reg(I(G))` is computed to test the regularity-3 class.
    pub oracle: Option<BettiOptions>,
}

/// Cycle lengths and number of single edges when every non-trivial component
/// of `g` is a cycle or an edge.
pub fn cycles_and_edges(g: &Graph) -> Option<(Vec<usize>, usize)> {
    let mut cycles = Vec::new();
    let mut edges = 0;
    for comp in g.components() {
        let n = comp.count_ones() as usize;
        let degs: Vec<usize> = bits(comp).map(|v| g.degree(v)).collect();
        match n {
            1 => {}
            2 => edges += 1,
            _ if degs.iter().all(|&d| d == 2) => cycles.push(n),
            _ => return None,
        }
    }
    cycles.sort_unstable();
    Some((cycles, edges))
}

/// `reg(I(H)^s)` for `H` a disjoint union of cycles and `k` edges, where a
/// formula is known: uniform residues with `k ≥ 1`, or a single cycle.
pub fn cycles_plus_edges_regularity(cycles: &[usize], k: usize, s: usize) -> Option<usize> {
    let nu = k + cycles.iter().map(|n| n / 3).sum::<usize>();
    let m = cycles.len();
    let twos = cycles.iter().filter(|&&n| n % 3 == 2).count();
    if m + k == 0 {
        return None;
    }
    if k >= 1 {
        if twos == 0 {
            Some(2 * s + nu - 1)
        } else if twos == m {
            Some(2 * s + nu + m - 1)
        } else {
            None
        }
    } else if m == 1 {
        Some(if twos == 1 && s == 1 { nu + 2 } else { 2 * s + nu - 1 })
    } else {
        None
    }
}

/// Whether every non-trivial component is a whiskered graph `W(H)`: leaves
/// are exactly the whiskers, one on each non-leaf.
pub fn is_whiskered(g: &Graph) -> bool {
    let mut any = false;
    for comp in g.components() {
        let n = comp.count_ones();
        if n == 1 {
            continue;
        }
        any = true;
        if n == 2 {
            continue;
        }
        let leaves = bits(comp).filter(|&v| g.degree(v) == 1).fold(0u64, |m, v| m | 1 << v);
        let inner = comp & !leaves;
        let ok = bits(leaves).all(|l| g.neighbors(l) & inner != 0)
            && bits(inner).all(|v| (g.neighbors(v) & leaves).count_ones() == 1);
        if !ok {
            return false;
        }
    }
    any
}

/// The exact class value for `reg(I(G)^s)`, if one applies.
pub fn reg_exact_class(g: &Graph, s: usize) -> Result<Option<ExactValue>> {
    reg_exact_class_with(g, s, &ExactOptions::default())
}

pub fn reg_exact_class_with(g: &Graph, s: usize, opts: &ExactOptions) -> Result<Option<ExactValue>> {
    check_s(s)?;
    if g.edge_count() == 0 {
        return Ok(None);
    }
    let mut found: Vec<(ExactClass, usize)> = Vec::new();
    if let Some((cycles, k)) = cycles_and_edges(g) {
        if let Some(v) = cycles_plus_edges_regularity(&cycles, k, s) {
            let class = if k >= 1 {
                ExactClass::CyclesPlusEdges
            } else {
                ExactClass::DisjointCycles
            };
            found.push((class, v));
        }
    }
    if g.is_bipartite() {
        let linear = 2 * s + induced_matching_number(g) - 1;
        opts.caps.check_graph(g)?;
        if is_unmixed_with(g, &opts.caps)? {
            found.push((ExactClass::UnmixedBipartite, linear));
        }
        if is_weakly_chordal(g) {
            found.push((ExactClass::WeaklyChordalBipartite, linear));
        }
        if is_whiskered(g) {
            found.push((ExactClass::WhiskeredBipartite, linear));
        }
        if is_pk_free(g, 6)? {
            found.push((ExactClass::P6FreeBipartite, linear));
        }
        if has_dominating_induced_matching(g) {
            found.push((ExactClass::DominatingInducedMatchingBipartite, linear));
        }
        if let Some(betti) = &opts.oracle {
            if g.is_connected() && reg_power_with(g, 1, betti)? == 3 {
                found.push((ExactClass::Reg3ConnectedBipartite, 2 * s + 1));
            }
        }
    }
    let Some(&(class, value)) = found.first() else {
        return Ok(None);
    };
    if let Some((other, v)) = found.iter().find(|(_, v)| *v != value) {
        return Err(Error::Invariant(format!(
            "classes {class} and {other} disagree: {value} vs {v}"
        )));
    }
    Ok(Some(ExactValue {
        value,
        class,
        matches: found.into_iter().map(|(c, _)| c).collect(),
    }))
}

/// A lower bound from an induced disjoint union `H` of cycles and edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RussBound {
    pub value: usize,
    /// Vertex labels of each cycle of `H`, in cyclic order.
    pub cycles: Vec<Vec<String>>,
    pub edges: Vec<(String, String)>,
}

struct Item {
    mask: u64,
    blocked: u64,
    weight: usize,
    is_edge: bool,
    cycle: Option<Vec<usize>>,
}

/// Lower bound on `reg(I(G)^s)` from induced subgraphs `H` that are disjoint
/// unions of cycles and edges, using `reg(I(G)^s) ≥ reg(I(H)^s)`.
///
/// At `s = 1` every such `H` gives `1 + k + Σ⌊n/3⌋ + #{n ≡ 2}`. For `s ≥ 2` the
/// cycles-plus-edges formula with all cycles `≡ 2 (mod 3)` and `k ≥ 1` gives
/// `2s + k + m + Σ⌊n/3⌋ − 1`; otherwise the bound is `2s + ν(G) − 1`. Cycles
/// with `n ≡ 0, 1` never beat their own induced matchings, so only cycles
/// `≡ 2 (mod 3)` are searched.
pub fn russ_lower_bound(g: &Graph, s: usize) -> Result<RussBound> {
    russ_lower_bound_with(g, s, &Caps::default())
}

pub fn russ_lower_bound_with(g: &Graph, s: usize, caps: &Caps) -> Result<RussBound> {
    check_s(s)?;
    caps.check_graph(g)?;
    let closed = |mask: u64| bits(mask).fold(mask, |m, v| m | g.neighbors(v));
    let mut items: Vec<Item> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let mask = 1u64 << a | 1u64 << b;
            Item {
                mask,
                blocked: closed(mask),
                weight: 1,
                is_edge: true,
                cycle: None,
            }
        })
        .collect();
    for cycle in induced_cycles_mod3(g, caps)? {
        let mask = cycle.iter().fold(0u64, |m, &v| m | 1 << v);
        items.push(Item {
            mask,
            blocked: closed(mask),
            weight: cycle.len() / 3 + 1,
            is_edge: false,
            cycle: Some(cycle),
        });
    }
    items.sort_by(|a, b| b.weight.cmp(&a.weight));
    let suffix: Vec<usize> = {
        let mut acc = vec![0; items.len() + 1];
        for i in (0..items.len()).rev() {
            acc[i] = acc[i + 1] + items[i].weight;
        }
        acc
    };
    let mut search = WeightSearch {
        items: &items,
        suffix: &suffix,
        need_edge: s >= 2,
        best: 0,
        best_set: Vec::new(),
        current: Vec::new(),
    };
    search.run(0, 0, 0, false);
    let nu_value = 2 * s + induced_matching_number(g) - 1;
    let chosen = search.best_set.clone();
    let union_value = if chosen.is_empty() { 0 } else { 2 * s + search.best - 1 };
    let mut bound = RussBound {
        value: union_value,
        cycles: Vec::new(),
        edges: Vec::new(),
    };
    if union_value >= nu_value && !chosen.is_empty() {
        for i in chosen {
            let it = &items[i];
            match &it.cycle {
                Some(c) => bound.cycles.push(c.iter().map(|&v| g.label(v).to_string()).collect()),
                None => {
                    let mut v = bits(it.mask);
                    let (a, b) = (v.next().expect("edge"), v.next().expect("edge"));
                    bound.edges.push((g.label(a).to_string(), g.label(b).to_string()));
                }
            }
        }
    } else {
        bound.value = nu_value;
        for (a, b) in crate::invariants::maximum_induced_matching(g) {
            bound.edges.push((g.label(a).to_string(), g.label(b).to_string()));
        }
    }
    Ok(bound)
}

struct WeightSearch<'a> {
    items: &'a [Item],
    suffix: &'a [usize],
    need_edge: bool,
    best: usize,
    best_set: Vec<usize>,
    current: Vec<usize>,
}

impl WeightSearch<'_> {
    fn run(&mut self, from: usize, used: u64, weight: usize, has_edge: bool) {
        if (has_edge || !self.need_edge) && weight > self.best {
            self.best = weight;
            self.best_set = self.current.clone();
        }
        for i in from..self.items.len() {
            if weight + self.suffix[i] <= self.best {
                return;
            }
            let it = &self.items[i];
            if it.blocked & used != 0 {
                continue;
            }
            self.current.push(i);
            self.run(i + 1, used | it.mask, weight + it.weight, has_edge || it.is_edge);
            self.current.pop();
        }
    }
}

/// Induced cycles of length `≡ 2 (mod 3)`, each once, starting at its smallest vertex.
fn induced_cycles_mod3(g: &Graph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for start in 0..g.vertex_count() {
        let higher = g.all() & !((2u64 << start) - 1);
        path.push(start);
        cycle_walk(g, start, higher, &mut path, &mut out, caps)?;
        path.pop();
    }
    Ok(out)
}

/// `allowed` holds the vertices above `start` not adjacent to an interior path vertex.
fn cycle_walk(
    g: &Graph,
    start: usize,
    allowed: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    caps: &Caps,
) -> Result<()> {
    let last = *path.last().expect("non-empty");
    for w in bits(g.neighbors(last) & allowed) {
        path.push(w);
        if path.len() >= 3 && g.has_edge(w, start) {
            // Each cycle is met in both directions; keep one.
            if path.len() % 3 == 2 && path[1] < w {
                out.push(path.clone());
                caps.check("induced cycles", out.len(), caps.generators)?;
            }
        } else {
            // Neighbours of `start` stay available, but only to close the cycle.
            let next = if path.len() == 2 {
                allowed & !(1 << w)
            } else {
                allowed & !(1 << w) & !g.neighbors(last)
            };
            cycle_walk(g, start, next, path, out, caps)?;
        }
        path.pop();
    }
    Ok(())
}
