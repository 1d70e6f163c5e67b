use std::fmt::Write as _;

use serde_json::{json, Value};

use edgeideal_core::betti::{betti_table_with, regularity_with, BettiOptions, Field};
use edgeideal_core::chordal::{
    cochordal_cover_number_with, dual_shelling, is_chordal, is_cochordal, is_weakly_chordal,
};
use edgeideal_core::enumerate::random_graph;
use edgeideal_core::even_connection::{gprime_algebraic_with, gprime_with_certificates, parse_edge_list};
use edgeideal_core::formulas::{
    check_theorems, gap_search, is_whiskered, Check, CheckStatus, GapFamily, HarnessConfig, RegularityReport,
};
use edgeideal_core::graph::GraphJson;
use edgeideal_core::invariants::{
    dominating_induced_matching, independence_number, is_pk_free, is_unmixed_with, matching_number,
    maximum_independent_set, maximum_induced_matching, maximum_matching, min_maximal_matching_number,
    minimal_vertex_covers_with, minimum_maximal_matching, Edge,
};
use edgeideal_core::monomial::{
    colon_by_monomial, edge_ideal, iterated_colon_with, parse_ideal, polarize, power_with, IdealJson,
    Monomial, MonomialIdeal,
};
use edgeideal_core::{parse_graph, Caps, Family, Graph};

use crate::{Command, Common, Failure, GraphInput};

type Out = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn caps(c: &Common) -> Result<Caps, Failure> {
    let mut caps = Caps::from_env()?;
    let overrides = [
        (&mut caps.vertices, c.cap_vertices),
        (&mut caps.edges, c.cap_edges),
        (&mut caps.lattice, c.cap_lattice),
        (&mut caps.generators, c.cap_generators),
        (&mut caps.faces, c.cap_faces),
    ];
    for (slot, value) in overrides {
        if let Some(v) = value {
            *slot = v;
        }
    }
    Ok(caps)
}

fn betti_options(c: &Common) -> Result<BettiOptions, Failure> {
    Ok(BettiOptions {
        field: Field::from_characteristic(c.characteristic)?,
        caps: caps(c)?,
    })
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
}

/// The input graph and a name for reports.
fn load(input: &GraphInput, common: &Common) -> Result<(Graph, String), Failure> {
    if let Some(path) = &input.graph {
        let text = read(path)?;
        let g = if text.trim_start().starts_with('{') {
            let json: GraphJson =
                serde_json::from_str(&text).map_err(|e| usage(format!("{path}: {e}")))?;
            Graph::from_json(&json)?
        } else {
            parse_graph(&text)?
        };
        return Ok((g, path.clone()));
    }
    if let Some(expr) = &input.family {
        let family = Family::parse(expr)?;
        let built = family.build()?;
        for w in &built.warnings {
            eprintln!("warning: {w}");
        }
        return Ok((built.graph, family.to_string()));
    }
    if let Some(expr) = &input.random {
        let (n, p) = expr
            .split_once(',')
            .ok_or_else(|| usage("--random expects N,P"))?;
        let n: usize = n.trim().parse().map_err(|_| usage("--random: N is not a number"))?;
        let p: f64 = p.trim().parse().map_err(|_| usage("--random: P is not a number"))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(usage("--random: P must lie in [0, 1]"));
        }
        let g = random_graph(n, p, common.seed)?;
        return Ok((g, format!("random({n},{p},seed={})", common.seed)));
    }
    Err(usage("one of --graph, --family or --random is required"))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn edge_names(g: &Graph, edges: &[Edge]) -> Vec<String> {
    edges.iter().map(|&(a, b)| format!("{} {}", g.label(a), g.label(b))).collect()
}

fn mask_names(g: &Graph, mask: u64) -> Vec<String> {
    g.mask_labels(mask)
}

pub fn run(command: Command) -> Out {
    match command {
        Command::Invariants { input, common } => invariants(&input, &common),
        Command::Gprime { input, edges, algebraic, common } => gprime(&input, &edges, algebraic, &common),
        Command::Ideal { input, s, edges, iterated, polarize, common } => {
            ideal(&input, s, edges.as_deref(), iterated, polarize, &common)
        }
        Command::Betti { input, ideal, s, common } => betti(&input, ideal.as_deref(), s, &common),
        Command::Reg { input, s, edges, common } => reg(&input, s, edges.as_deref(), &common),
        Command::Bounds { input, s, common } => bounds(&input, s, &common),
        Command::Check { input, s, max_multiset, no_oracle, common } => {
            check(&input, s, max_multiset, no_oracle, &common)
        }
        Command::GapSearch { family, s, common } => gap(&family, s, &common),
        Command::Families { family, common } => families(family.as_deref(), &common),
    }
}

fn invariants(input: &GraphInput, common: &Common) -> Out {
    let (g, name) = load(input, common)?;
    let caps = caps(common)?;
    caps.check_graph(&g)?;
    let cover = cochordal_cover_number_with(&g, &caps)?;
    let covers = minimal_vertex_covers_with(&g, &caps)?;
    let rows: Vec<(&str, Value)> = vec![
        ("vertices", json!(g.vertex_count())),
        ("edges", json!(g.edge_count())),
        ("matching_number", json!(matching_number(&g))),
        ("min_maximal_matching_number", json!(min_maximal_matching_number(&g))),
        ("induced_matching_number", json!(maximum_induced_matching(&g).len())),
        ("independence_number", json!(independence_number(&g))),
        ("cochordal_cover_number", json!(cover.size)),
        ("minimal_vertex_covers", json!(covers.len())),
        ("bipartite", json!(g.is_bipartite())),
        ("connected", json!(g.is_connected())),
        ("chordal", json!(is_chordal(&g))),
        ("cochordal", json!(is_cochordal(&g))),
        ("weakly_chordal", json!(is_weakly_chordal(&g))),
        ("unmixed", json!(is_unmixed_with(&g, &caps)?)),
        ("whiskered", json!(is_whiskered(&g))),
        ("dominating_induced_matching", json!(dominating_induced_matching(&g).is_some())),
        ("p6_free", json!(is_pk_free(&g, 6)?)),
    ];
    let witnesses = json!({
        "maximum_matching": edge_names(&g, &maximum_matching(&g)),
        "maximum_induced_matching": edge_names(&g, &maximum_induced_matching(&g)),
        "minimum_maximal_matching": edge_names(&g, &minimum_maximal_matching(&g)),
        "maximum_independent_set": mask_names(&g, maximum_independent_set(&g)),
        "dominating_induced_matching": dominating_induced_matching(&g).map(|m| edge_names(&g, &m)),
        "cochordal_cover": cover.parts.iter().map(|p| {
            let h = g.spanning_subgraph(p.iter().map(|&(a, b)| g.edge_index(a, b).expect("cover edge")));
            json!({
                "edges": edge_names(&g, p),
                "dual_shelling": dual_shelling(&h).map(|d| edge_names(&g, &d.ordering)),
            })
        }).collect::<Vec<_>>(),
        "minimal_vertex_covers": covers.iter().map(|c| c.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    if common.json {
        let mut obj = serde_json::Map::new();
        obj.insert("graph".into(), json!(name));
        for (k, v) in &rows {
            obj.insert((*k).into(), v.clone());
        }
        if common.verbose {
            obj.insert("witnesses".into(), witnesses);
        }
        return Ok(pretty(&Value::Object(obj)));
    }
    let mut out = format!("# {name}\n");
    for (k, v) in &rows {
        writeln!(out, "{k:<28} {v}").unwrap();
    }
    if common.verbose {
        for (k, v) in witnesses.as_object().expect("object") {
            writeln!(out, "{k:<28} {v}").unwrap();
        }
    }
    Ok(out)
}

fn gprime(input: &GraphInput, edges: &str, algebraic: bool, common: &Common) -> Out {
    let (g, name) = load(input, common)?;
    let multiset = parse_edge_list(&g, edges)?;
    let gp = gprime_with_certificates(&g, &multiset)?;
    let graph = if algebraic {
        gprime_algebraic_with(&g, &multiset, &caps(common)?)?
    } else {
        gp.graph.clone()
    };
    let walk_names = |w: &[usize]| w.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>();
    if common.json {
        let added: Vec<Value> = gp
            .added
            .iter()
            .map(|a| {
                json!({
                    "u": a.u,
                    "v": a.v,
                    "walk": walk_names(&a.certificate.walk),
                    "middle_edges": a.certificate.middle_assignment.iter()
                        .map(|&i| edge_names(&g, &multiset[i..=i]).remove(0)).collect::<Vec<_>>(),
                })
            })
            .collect();
        return Ok(pretty(&json!({
            "source": name,
            "edges": edge_names(&g, &multiset),
            "added": added,
            "graph": graph.to_json(),
        })));
    }
    let mut out = format!("# G′ of {name} for edges {}\n", edge_names(&g, &multiset).join(", "));
    for a in &gp.added {
        writeln!(out, "# added {} {}", a.u, a.v).unwrap();
        if common.verbose {
            writeln!(out, "#   walk {}", walk_names(&a.certificate.walk).join(" ")).unwrap();
        }
    }
    out.push_str(&graph.to_edge_list());
    Ok(out)
}

fn colon_ideal(g: &Graph, multiset: &[Edge], caps: &Caps) -> Result<MonomialIdeal, Failure> {
    let vars: Vec<usize> = multiset.iter().flat_map(|&(a, b)| [a, b]).collect();
    let m = Monomial::product_of(g.vertex_count(), &vars);
    Ok(colon_by_monomial(&power_with(&edge_ideal(g), multiset.len() + 1, caps)?, &m))
}

fn ideal(
    input: &GraphInput,
    s: usize,
    edges: Option<&str>,
    iterated: bool,
    polar: bool,
    common: &Common,
) -> Out {
    let (g, _) = load(input, common)?;
    let caps = caps(common)?;
    let mut ideal = match edges {
        Some(text) => {
            let multiset = parse_edge_list(&g, text)?;
            if multiset.is_empty() {
                return Err(usage("--edges must name at least one edge"));
            }
            if iterated {
                let pairs: Vec<(&str, &str)> =
                    multiset.iter().map(|&(a, b)| (g.label(a), g.label(b))).collect();
                iterated_colon_with(&edge_ideal(&g), &pairs, &caps)?
            } else {
                colon_ideal(&g, &multiset, &caps)?
            }
        }
        None => power_with(&edge_ideal(&g), s, &caps)?,
    };
    if polar {
        ideal = polarize(&ideal).0;
    }
    if common.json {
        return Ok(pretty(&serde_json::to_value(ideal.to_json()).expect("ideal JSON")));
    }
    Ok(ideal.to_text())
}

fn load_ideal(path: &str) -> Result<MonomialIdeal, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let json: IdealJson = serde_json::from_str(&text).map_err(|e| usage(format!("{path}: {e}")))?;
        Ok(MonomialIdeal::from_json(&json)?)
    } else {
        Ok(parse_ideal(&text)?)
    }
}

fn betti(input: &GraphInput, ideal_path: Option<&str>, s: usize, common: &Common) -> Out {
    let opts = betti_options(common)?;
    let (ideal, name) = match ideal_path {
        Some(path) => (load_ideal(path)?, path.to_string()),
        None => {
            let (g, name) = load(input, common)?;
            (power_with(&edge_ideal(&g), s, &opts.caps)?, format!("I({name})^{s}"))
        }
    };
    let (table, stats) = betti_table_with(&ideal, &opts)?;
    if common.json {
        return Ok(pretty(&json!({
            "ideal": name,
            "field": opts.field.to_string(),
            "entries": table.entries().map(|e| json!({"i": e.i, "j": e.j, "rank": e.rank})).collect::<Vec<_>>(),
            "regularity": table.regularity(),
            "projective_dimension": table.projective_dimension(),
            "stats": stats,
        })));
    }
    let mut out = format!("# {name}\n");
    out.push_str(&table.triangle());
    if !out.ends_with('\n') {
        out.push('\n');
    }
    if let Some(r) = table.regularity() {
        writeln!(out, "reg {r}").unwrap();
    }
    if common.verbose {
        writeln!(
            out,
            "# lattice {} complexes {} cones skipped {} euler checks {}",
            stats.lattice_size, stats.complexes_built, stats.cones_skipped, stats.euler_checks
        )
        .unwrap();
    }
    Ok(out)
}

fn reg(input: &GraphInput, s: usize, edges: Option<&str>, common: &Common) -> Out {
    let (g, name) = load(input, common)?;
    let opts = betti_options(common)?;
    if s == 0 {
        return Err(usage("--s must be at least 1"));
    }
    let (ideal, what) = match edges {
        Some(text) => {
            let multiset = parse_edge_list(&g, text)?;
            if multiset.is_empty() {
                return Err(usage("--edges must name at least one edge"));
            }
            let names = edge_names(&g, &multiset).join(", ");
            (colon_ideal(&g, &multiset, &opts.caps)?, format!("(I^{} : {names})", multiset.len() + 1))
        }
        None => (power_with(&edge_ideal(&g), s, &opts.caps)?, format!("I^{s}")),
    };
    if ideal.generators().is_empty() {
        return Err(usage("the edge ideal of an edgeless graph is zero"));
    }
    let r = regularity_with(&ideal, &opts)?;
    if common.json {
        return Ok(pretty(&json!({
            "graph": name,
            "ideal": what,
            "s": s,
            "field": opts.field.to_string(),
            "reg": r,
            "citation": "Betti oracle",
        })));
    }
    if common.verbose {
        return Ok(format!("reg {what} of {name} over {} = {r}  [Betti oracle]\n", opts.field));
    }
    Ok(format!("{r}\n"))
}

fn regularity_text(r: &RegularityReport, out: &mut String) {
    let b = &r.bounds;
    writeln!(out, "# {} s={} ν={} cochord={} ba={}", r.graph, r.s, r.nu, r.cochord, r.ba).unwrap();
    writeln!(out, "lower        {:<6} 2s+ν−1  [induced-matching lower bound]", b.lower).unwrap();
    writeln!(out, "russ         {:<6} induced cycles and edges  [induced cycles-plus-edges lower bound]", b.russ.value).unwrap();
    writeln!(out, "cochord      {:<6} 2s+cochord−1, {}  [co-chordal upper bound]", b.cochord.value, b.cochord.validity).unwrap();
    writeln!(out, "matching     {:<6} 2s+ba−1, {}  [minimum-maximal-matching upper bound]", b.matching.value, b.matching.validity).unwrap();
    if let Some(bp) = &b.bipartition {
        writeln!(out, "bipartition  {:<6} 2s+(ν+{})/2−1 = {}  [bipartition upper bound]", bp.floor(), bp.smaller_side, bp.value).unwrap();
    }
    match &r.exact {
        Some(e) => writeln!(out, "exact        {:<6} {}  [exact class formula]", e.value, e.class).unwrap(),
        None => writeln!(out, "exact        -      no class applies").unwrap(),
    }
    if let Some(o) = r.oracle {
        writeln!(out, "oracle       {o:<6} [Betti oracle]").unwrap();
    }
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::ExpectedFailure => "XFAIL",
        CheckStatus::Recorded => "NOTE",
        CheckStatus::Skipped => "SKIP",
    }
}

fn check_line(out: &mut String, c: &Check) {
    let line = format!("{:<5} {}  [{}] {}", status_word(c.status), c.claim, c.citation, c.detail);
    writeln!(out, "{}", line.trim_end()).unwrap();
}

fn bounds(input: &GraphInput, s: usize, common: &Common) -> Out {
    let (g, name) = load(input, common)?;
    if s == 0 {
        return Err(usage("--s must be at least 1"));
    }
    let cfg = HarnessConfig {
        s_values: vec![s],
        max_multiset: 0,
        oracle: false,
        colon_oracle: false,
        betti: betti_options(common)?,
        name: Some(name),
    };
    let report = check_theorems(&g, &cfg)?;
    let r = &report.regularity[0];
    if common.json {
        return Ok(pretty(&serde_json::to_value(r).expect("report JSON")));
    }
    let mut out = String::new();
    regularity_text(r, &mut out);
    Ok(out)
}

fn check(input: &GraphInput, s: Vec<usize>, max_multiset: usize, no_oracle: bool, common: &Common) -> Out {
    let (g, name) = load(input, common)?;
    if s.contains(&0) {
        return Err(usage("--s values must be at least 1"));
    }
    let cfg = HarnessConfig {
        s_values: s,
        max_multiset,
        oracle: !no_oracle,
        colon_oracle: !no_oracle,
        betti: betti_options(common)?,
        name: Some(name),
    };
    if g.edge_count() == 0 {
        return Err(usage("the harness needs a graph with at least one edge"));
    }
    let report = check_theorems(&g, &cfg)?;
    let out = if common.json {
        pretty(&serde_json::to_value(&report).expect("report JSON"))
    } else {
        let mut out = String::new();
        for r in &report.regularity {
            regularity_text(r, &mut out);
            for c in &r.checks {
                check_line(&mut out, c);
            }
        }
        for c in &report.colons {
            let shown: Vec<&_> = c
                .checks
                .iter()
                .filter(|k| common.verbose || k.status != CheckStatus::Pass)
                .collect();
            let passed = c.checks.len() - shown.iter().filter(|k| k.status != CheckStatus::Pass).count();
            writeln!(out, "# colon by {}: {} checks pass", c.edges.join(", "), passed).unwrap();
            for k in shown {
                check_line(&mut out, k);
            }
        }
        for ce in &report.counterexamples {
            writeln!(out, "COUNTEREXAMPLE {}", serde_json::to_string(ce).expect("JSON")).unwrap();
        }
        let total = report.checks().count();
        let failed = report.counterexamples.len();
        writeln!(out, "# {total} checks, {failed} failed").unwrap();
        out
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Harness(out))
    }
}

fn gap(family: &str, s: usize, common: &Common) -> Out {
    let family: GapFamily = family.parse()?;
    let report = gap_search(family, s, &betti_options(common)?)?;
    if common.json {
        return Ok(pretty(&serde_json::to_value(&report).expect("report JSON")));
    }
    let mut out = format!(
        "# {} s={}: {} graphs, {} skipped, {} strictly between the bounds\n",
        report.family,
        report.s,
        report.graphs,
        report.skipped,
        report.strict.len()
    );
    for e in &report.strict {
        writeln!(out, "strict ν={} cochord={} reg={}  {}", e.nu, e.cochord, e.reg, e.graph).unwrap();
    }
    for (n, dist) in &report.distribution {
        let cells: Vec<String> = dist.iter().map(|(t, c)| format!("t={t}:{c}")).collect();
        writeln!(out, "cochord−ν={n}  {}", cells.join(" ")).unwrap();
    }
    Ok(out)
}

const FAMILY_HELP: &str = "\
# family expressions
Cn            cycle x1..xn (n >= 3)
Pn            path x1..xn
Kn            complete graph
Km,n          complete bipartite, sides x1..xm and y1..yn
En            edgeless graph
W(F)          whiskers: pendant w@u on every vertex u
pend(F;[u,..]) pendant p@u on the listed vertices
U(F,G,..)     disjoint union, labels suffixed _1, _2, ..
co(F)         complement
star(k;[r,..]) star on w, pendants on x1..xk, a cycle C_2r glued at each later leaf
# gap-search families
connected:N  connected-bipartite:N  forests:E  cycles-plus-edges:N
";

fn families(family: Option<&str>, common: &Common) -> Out {
    let Some(expr) = family else {
        return Ok(FAMILY_HELP.to_string());
    };
    let f = Family::parse(expr)?;
    let built = f.build()?;
    for w in &built.warnings {
        eprintln!("warning: {w}");
    }
    if common.json {
        return Ok(pretty(&serde_json::to_value(built.graph.to_json()).expect("graph JSON")));
    }
    let mut out = format!("# {f}\n");
    for w in &built.warnings {
        writeln!(out, "# warning: {w}").unwrap();
    }
    out.push_str(&built.graph.to_edge_list());
    Ok(out)
}
