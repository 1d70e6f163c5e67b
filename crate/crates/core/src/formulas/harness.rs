//! Runs every bound, exact formula and `G′` preservation claim on one graph
//! and compares them with the Betti oracle.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{reg_power_with, regularity_with, BettiOptions};
use crate::chordal::cochordal_cover_number_with;
use crate::error::Result;
use crate::even_connection::{check_certificate, gprime_algebraic_with, gprime_with_certificates};
use crate::graph::{Graph, GraphJson};
use crate::invariants::{
    induced_matching_number, is_nk2_free, is_pk_free, is_unmixed_with, min_maximal_matching_number,
    Edge,
};
use crate::monomial::{colon_by_monomial, edge_ideal, power_with, Monomial};

use super::{
    is_whiskered, reg_exact_class_with, reg_lower_bound, reg_upper_bound_bipartition,
    reg_upper_bound_cochord_with, reg_upper_bound_matching, russ_lower_bound_with, BipartitionBound,
    ExactOptions, ExactValue, RussBound, UpperBound, Validity,
};

/// What the harness computes.
#[derive(Debug, Clone)]
pub struct HarnessConfig {
    /// Powers checked against the bounds.
    pub s_values: Vec<usize>,
    /// Largest edge multiset used for `G′`; 0 skips the colon checks.
    pub max_multiset: usize,
    /// Compute `reg(I(G)^s)` with the Betti oracle.
    pub oracle: bool,
    /// Compute the regularity of every colon ideal.
    pub colon_oracle: bool,
    pub betti: BettiOptions,
    /// Name used in reports; defaults to the edge list.
    pub name: Option<String>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            s_values: vec![1, 2],
            max_multiset: 2,
            oracle: true,
            colon_oracle: true,
            betti: BettiOptions::default(),
            name: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    /// The claim applies and holds.
    Pass,
    /// The claim applies and is violated.
    Fail,
    /// A known failure outside the claim's hypotheses.
    ExpectedFailure,
    /// The hypotheses are not met; the outcome is noted in the detail.
    Recorded,
    /// A resource cap prevented the computation.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub citation: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(claim: impl Into<String>, citation: &'static str, holds: bool, asserted: bool) -> Check {
        let (status, detail) = match (holds, asserted) {
            (true, true) => (CheckStatus::Pass, ""),
            (false, true) => (CheckStatus::Fail, "violated"),
            (true, false) => (CheckStatus::Recorded, "holds outside the proven range"),
            (false, false) => (CheckStatus::Recorded, "violated outside the proven range"),
        };
        Check {
            claim: claim.into(),
            citation,
            status,
            detail: detail.to_string(),
        }
    }

    fn with_status(claim: impl Into<String>, citation: &'static str, status: CheckStatus, detail: &str) -> Check {
        Check {
            claim: claim.into(),
            citation,
            status,
            detail: detail.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: usize,
    pub cochord: UpperBound,
    pub matching: UpperBound,
    pub bipartition: Option<BipartitionBound>,
    pub russ: RussBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub graph: String,
    pub s: usize,
    pub nu: usize,
    pub cochord: usize,
    pub ba: usize,
    pub bounds: Bounds,
    pub exact: Option<ExactValue>,
    pub oracle: Option<usize>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColonReport {
    pub graph: String,
    /// The edge multiset, each entry as `u v`.
    pub edges: Vec<String>,
    pub added: Vec<(String, String)>,
    pub nu: usize,
    pub cochord: usize,
    pub colon_regularity: Option<usize>,
    pub checks: Vec<Check>,
}

/// A failed assertion with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph: GraphJson,
    pub s: Option<usize>,
    pub edges: Vec<String>,
    pub claim: String,
    pub citation: &'static str,
    pub values: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub graph: String,
    pub regularity: Vec<RegularityReport>,
    pub colons: Vec<ColonReport>,
    pub counterexamples: Vec<Counterexample>,
}

impl HarnessReport {
    /// No asserted claim failed.
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.regularity
            .iter()
            .flat_map(|r| &r.checks)
            .chain(self.colons.iter().flat_map(|c| &c.checks))
    }
}

fn graph_name(g: &Graph) -> String {
    g.edge_labels().map(|(a, b)| format!("{a} {b}")).collect::<Vec<_>>().join(", ")
}

/// Treats a resource-cap error as "not computed".
fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_resource() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Checks every applicable claim on `g`. Asserted claims that fail become
/// counterexamples; claims outside their hypotheses are recorded only.
pub fn check_theorems(g: &Graph, config: &HarnessConfig) -> Result<HarnessReport> {
    let name = config.name.clone().unwrap_or_else(|| graph_name(g));
    let caps = &config.betti.caps;
    caps.check_graph(g)?;
    let nu = induced_matching_number(g);
    let cochord = cochordal_cover_number_with(g, caps)?.size;
    let ba = min_maximal_matching_number(g);
    let reg1 = if config.oracle || config.colon_oracle {
        optional(reg_power_with(g, 1, &config.betti))?.map(|v| v as usize)
    } else {
        None
    };
    let ctx = Context {
        g,
        name: &name,
        config,
        nu,
        cochord,
        ba,
        reg1,
    };
    let regularity = config
        .s_values
        .par_iter()
        .map(|&s| ctx.regularity(s))
        .collect::<Result<Vec<_>>>()?;
    let multisets = edge_multisets(g.edge_count(), config.max_multiset);
    let colons = multisets
        .par_iter()
        .map(|m| {
            let edges: Vec<Edge> = m.iter().map(|&i| g.edges()[i]).collect();
            ctx.colon(&edges)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counterexamples = Vec::new();
    for r in &regularity {
        let values = r.values();
        for c in r.checks.iter().filter(|c| c.status == CheckStatus::Fail) {
            counterexamples.push(Counterexample {
                graph: g.to_json(),
                s: Some(r.s),
                edges: Vec::new(),
                claim: c.claim.clone(),
                citation: c.citation,
                values: values.clone(),
            });
        }
    }
    for r in &colons {
        let values = r.values(&ctx);
        for c in r.checks.iter().filter(|c| c.status == CheckStatus::Fail) {
            counterexamples.push(Counterexample {
                graph: g.to_json(),
                s: Some(r.edges.len()),
                edges: r.edges.clone(),
                claim: c.claim.clone(),
                citation: c.citation,
                values: values.clone(),
            });
        }
    }
    Ok(HarnessReport {
        graph: name,
        regularity,
        colons,
        counterexamples,
    })
}

/// Multisets of edge indices of sizes `1..=max`, in lexicographic order.
pub(crate) fn edge_multisets(edges: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(edges: usize, max: usize, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max {
            return;
        }
        for i in from..edges {
            current.push(i);
            go(edges, max, i, current, out);
            current.pop();
        }
    }
    go(edges, max, 0, &mut current, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

struct Context<'a> {
    g: &'a Graph,
    name: &'a str,
    config: &'a HarnessConfig,
    nu: usize,
    cochord: usize,
    ba: usize,
    reg1: Option<usize>,
}

impl RegularityReport {
    fn values(&self) -> BTreeMap<String, String> {
        let mut v = BTreeMap::new();
        v.insert("nu".into(), self.nu.to_string());
        v.insert("cochord".into(), self.cochord.to_string());
        v.insert("ba".into(), self.ba.to_string());
        v.insert("lower".into(), self.bounds.lower.to_string());
        v.insert("upper_cochord".into(), self.bounds.cochord.value.to_string());
        v.insert("upper_matching".into(), self.bounds.matching.value.to_string());
        if let Some(b) = &self.bounds.bipartition {
            v.insert("upper_bipartition".into(), b.value.to_string());
        }
        v.insert("russ".into(), self.bounds.russ.value.to_string());
        if let Some(e) = &self.exact {
            v.insert("exact".into(), format!("{} ({})", e.value, e.class));
        }
        if let Some(o) = self.oracle {
            v.insert("oracle".into(), o.to_string());
        }
        v
    }
}

impl ColonReport {
    fn values(&self, ctx: &Context) -> BTreeMap<String, String> {
        let mut v = BTreeMap::new();
        v.insert("nu".into(), ctx.nu.to_string());
        v.insert("cochord".into(), ctx.cochord.to_string());
        v.insert("nu_gprime".into(), self.nu.to_string());
        v.insert("cochord_gprime".into(), self.cochord.to_string());
        if let Some(r) = ctx.reg1 {
            v.insert("reg".into(), r.to_string());
        }
        if let Some(r) = self.colon_regularity {
            v.insert("reg_colon".into(), r.to_string());
        }
        v.insert(
            "added".into(),
            self.added.iter().map(|(a, b)| format!("{a} {b}")).collect::<Vec<_>>().join(", "),
        );
        v
    }
}

impl Context<'_> {
    fn regularity(&self, s: usize) -> Result<RegularityReport> {
        let g = self.g;
        let caps = &self.config.betti.caps;
        let lower = reg_lower_bound(g, s)?;
        let cochord = reg_upper_bound_cochord_with(g, s, caps)?;
        let matching = reg_upper_bound_matching(g, s)?;
        let bipartition = if g.is_bipartite() {
            Some(reg_upper_bound_bipartition(g, s)?)
        } else {
            None
        };
        let russ = russ_lower_bound_with(g, s, caps)?;
        let exact_opts = ExactOptions {
            caps: *caps,
            oracle: self.config.oracle.then_some(self.config.betti),
        };
        let exact = optional(reg_exact_class_with(g, s, &exact_opts))?.flatten();
        let oracle = if !self.config.oracle {
            None
        } else if s == 1 {
            self.reg1
        } else {
            optional(reg_power_with(g, s, &self.config.betti))?.map(|v| v as usize)
        };

        let mut checks = Vec::new();
        let proven = |b: &UpperBound| b.validity == Validity::Proven;
        checks.push(Check::new(
            format!("2s+ν−1 = {lower} ≤ 2s+cochord−1 = {}", cochord.value),
            "induced-matching lower bound",
            lower <= cochord.value,
            true,
        ));
        checks.push(Check::new(
            format!("2s+ν−1 = {lower} ≤ 2s+ba−1 = {}", matching.value),
            "minimum-maximal-matching upper bound",
            lower <= matching.value,
            true,
        ));
        if let Some(b) = &bipartition {
            checks.push(Check::new(
                format!("2s+ν−1 = {lower} ≤ bipartition bound {}", b.value),
                "bipartition upper bound",
                num_rational::Ratio::from_integer(lower as u64) <= b.value,
                true,
            ));
        }
        if let Some(e) = &exact {
            let mut hi = usize::MAX;
            for b in [&cochord, &matching] {
                if proven(b) {
                    hi = hi.min(b.value);
                }
            }
            checks.push(Check::new(
                format!("{lower} ≤ exact {} ≤ {}", e.value, if hi == usize::MAX { "∞".to_string() } else { hi.to_string() }),
                "exact class formula",
                lower <= e.value && e.value <= hi,
                true,
            ));
        }
        match oracle {
            None if self.config.oracle => checks.push(Check::with_status(
                "oracle regularity",
                "Betti oracle",
                CheckStatus::Skipped,
                "resource cap reached",
            )),
            None => {}
            Some(reg) => {
                checks.push(Check::new(
                    format!("2s+ν−1 = {lower} ≤ reg = {reg}"),
                    "induced-matching lower bound",
                    lower <= reg,
                    true,
                ));
                checks.push(Check::new(
                    format!("induced cycles-and-edges bound {} ≤ reg = {reg}", russ.value),
                    "induced cycles-plus-edges lower bound",
                    russ.value <= reg,
                    true,
                ));
                checks.push(Check::new(
                    format!("reg = {reg} ≤ 2s+cochord−1 = {}", cochord.value),
                    "co-chordal upper bound",
                    reg <= cochord.value,
                    proven(&cochord),
                ));
                checks.push(Check::new(
                    format!("reg = {reg} ≤ 2s+ba−1 = {}", matching.value),
                    "minimum-maximal-matching upper bound",
                    reg <= matching.value,
                    proven(&matching),
                ));
                if let Some(b) = &bipartition {
                    checks.push(Check::new(
                        format!("reg = {reg} ≤ bipartition bound {}", b.value),
                        "bipartition upper bound",
                        num_rational::Ratio::from_integer(reg as u64) <= b.value,
                        true,
                    ));
                }
                if let Some(e) = &exact {
                    checks.push(Check::new(
                        format!("exact {} ({}) = reg = {reg}", e.value, e.class),
                        "exact class formula",
                        e.value == reg,
                        true,
                    ));
                }
                if s == 1 && reg == 3 && g.is_bipartite() && g.is_connected() {
                    checks.push(Check::new(
                        format!("reg = 3 ⇒ ν = cochord = ba = 2 (ν={}, cochord={}, ba={})", self.nu, self.cochord, self.ba),
                        "regularity-three observation",
                        self.nu == 2 && self.cochord == 2 && self.ba == 2,
                        true,
                    ));
                }
            }
        }
        Ok(RegularityReport {
            graph: self.name.to_string(),
            s,
            nu: self.nu,
            cochord: self.cochord,
            ba: self.ba,
            bounds: Bounds {
                lower,
                cochord,
                matching,
                bipartition,
                russ,
            },
            exact,
            oracle,
            checks,
        })
    }

    fn colon(&self, edges: &[Edge]) -> Result<ColonReport> {
        let g = self.g;
        let caps = &self.config.betti.caps;
        let bipartite = g.is_bipartite();
        let single = edges.len() == 1;
        let gp = gprime_with_certificates(g, edges)?;
        let h = &gp.graph;
        let mut checks = Vec::new();

        let certs_ok = gp.added.iter().all(|a| {
            let u = g.index_of(&a.u);
            let v = g.index_of(&a.v).or(u);
            matches!((u, v), (Some(u), Some(v)) if check_certificate(g, u, v, edges, &a.certificate))
        });
        checks.push(Check::new(
            "every added edge has a valid even-walk certificate",
            "even-connection definition",
            certs_ok,
            true,
        ));
        match optional(gprime_algebraic_with(g, edges, caps))? {
            Some(alg) => checks.push(Check::new(
                "G′ from even connections equals the graph of the polarized colon",
                "even-connection description of the colon",
                alg.same_labeled(h),
                true,
            )),
            None => checks.push(Check::with_status(
                "G′ from even connections equals the graph of the polarized colon",
                "even-connection description of the colon",
                CheckStatus::Skipped,
                "resource cap reached",
            )),
        }
        if let Some(part) = g.bipartition() {
            let side = |v: usize| part.x >> v & 1;
            let crossing = h.edges().iter().all(|&(a, b)| {
                a >= g.vertex_count() || b >= g.vertex_count() || side(a) != side(b)
            });
            checks.push(Check::new(
                "G′ is bipartite on the bipartition of G",
                "bipartite preservation",
                h.is_bipartite() && crossing,
                true,
            ));
        }
        let nu = induced_matching_number(h);
        checks.push(Check::new(
            format!("ν(G′) = {nu} ≤ ν(G) = {}", self.nu),
            "induced matching number of G′",
            nu <= self.nu,
            true,
        ));
        let n = self.nu + 1;
        checks.push(Check::new(
            format!("G is {n}K2-free ⇒ G′ is {n}K2-free"),
            "nK2-free preservation",
            is_nk2_free(h, n),
            true,
        ));
        let cochord = cochordal_cover_number_with(h, caps)?.size;
        checks.push(Check::new(
            format!("cochord(G′) = {cochord} ≤ cochord(G) = {}", self.cochord),
            "co-chordal cover number of G′",
            cochord <= self.cochord,
            bipartite || single,
        ));
        let unmixed = is_unmixed_with(g, caps)?;
        if unmixed {
            let holds = is_unmixed_with(h, caps)?;
            let claim = "G unmixed ⇒ G′ unmixed";
            checks.push(if bipartite {
                Check::new(claim, "unmixed preservation", holds, true)
            } else if holds {
                Check::new(claim, "unmixed preservation", true, false)
            } else {
                Check::with_status(
                    claim,
                    "unmixed preservation",
                    CheckStatus::ExpectedFailure,
                    "non-bipartite G: unmixedness need not pass to G′",
                )
            });
        }
        for k in 4..=6 {
            if is_pk_free(g, k)? {
                checks.push(Check::new(
                    format!("G P{k}-free ⇒ G′ P{k}-free"),
                    "P_k-free preservation",
                    is_pk_free(h, k)?,
                    bipartite,
                ));
            }
        }

        let colon_regularity = if self.config.colon_oracle {
            optional(self.colon_regularity(edges))?
        } else {
            None
        };
        if let (Some(rc), Some(r1)) = (colon_regularity, self.reg1) {
            let conditions = self.colon_conditions(rc, nu, r1)?;
            let claim = format!("reg(colon) = {rc} ≤ reg(I(G)) = {r1}");
            let holds = rc <= r1;
            checks.push(if conditions.is_empty() {
                Check::new(claim, "colon regularity inequality", holds, false)
            } else {
                let mut c = Check::new(claim, "colon regularity inequality", holds, true);
                c.detail = format!("conditions: {}", conditions.join(", "));
                c
            });
        }
        let name = |&(a, b): &Edge| format!("{} {}", g.label(a), g.label(b));
        Ok(ColonReport {
            graph: self.name.to_string(),
            edges: edges.iter().map(name).collect(),
            added: gp.added.iter().map(|a| (a.u.clone(), a.v.clone())).collect(),
            nu,
            cochord,
            colon_regularity,
            checks,
        })
    }

    fn colon_regularity(&self, edges: &[Edge]) -> Result<usize> {
        let g = self.g;
        let caps = &self.config.betti.caps;
        let vars: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        let m = Monomial::product_of(g.vertex_count(), &vars);
        let colon = colon_by_monomial(&power_with(&edge_ideal(g), edges.len() + 1, caps)?, &m);
        Ok(regularity_with(&colon, &self.config.betti)? as usize)
    }

    /// Sufficient conditions for `reg(colon) ≤ reg(I(G))` that hold here.
    fn colon_conditions(&self, reg_colon: usize, nu_prime: usize, reg1: usize) -> Result<Vec<&'static str>> {
        let g = self.g;
        let caps = &self.config.betti.caps;
        let mut out = Vec::new();
        if reg_colon == nu_prime + 1 {
            out.push("reg(colon) = ν(G′)+1");
        }
        if g.is_bipartite() {
            if reg1 == self.cochord + 1 {
                out.push("bipartite with reg(I(G)) = cochord(G)+1");
            }
            if is_unmixed_with(g, caps)? {
                out.push("unmixed bipartite");
            }
            if crate::chordal::is_weakly_chordal(g) {
                out.push("weakly chordal bipartite");
            }
            if is_whiskered(g) {
                out.push("whiskered bipartite");
            }
            if is_pk_free(g, 6)? {
                out.push("P6-free bipartite");
            }
            if reg1 == 3 && g.is_connected() {
                out.push("connected bipartite with reg(I(G)) = 3");
            }
        }
        Ok(out)
    }
}
