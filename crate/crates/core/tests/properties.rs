mod common;

use proptest::prelude::*;

use edgeideal_core::betti::reg_power;
use edgeideal_core::chordal::cochordal_cover_number;
use edgeideal_core::even_connection::{gprime, gprime_algebraic};
use edgeideal_core::formulas::{reg_exact_class, russ_lower_bound};
use edgeideal_core::graph::{edgeless, GraphJson};
use edgeideal_core::invariants::{induced_matching_number, matching_number, min_maximal_matching_number};
use edgeideal_core::monomial::{
    colon_by_monomial, edge_ideal, parse_ideal, polarize, power, Monomial, MonomialIdeal,
};
use edgeideal_core::{parse_graph, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = edgeless(n).unwrap();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        g.add_edge(&format!("x{}", a + 1), &format!("x{}", b + 1)).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_graph_with_edges(max_n: usize) -> impl Strategy<Value = (Graph, Vec<(usize, usize)>)> {
    arb_graph(max_n)
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
        .prop_flat_map(|g| {
            let m = g.edge_count();
            (Just(g), proptest::collection::vec(0..m, 1..=2))
        })
        .prop_map(|(g, idx)| {
            let edges = idx.iter().map(|&i| g.edges()[i]).collect();
            (g, edges)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matching_chain(g in arb_graph(9)) {
        let nu = induced_matching_number(&g);
        let cochord = cochordal_cover_number(&g).unwrap().size;
        let ba = min_maximal_matching_number(&g);
        let ca = matching_number(&g);
        prop_assert!(nu <= cochord && cochord <= ba && ba <= ca, "{nu} {cochord} {ba} {ca}");
        prop_assert!(ca <= 2 * ba);
    }

    #[test]
    fn gprime_descriptions_agree((g, m) in arb_graph_with_edges(7)) {
        let h = gprime(&g, &m).unwrap();
        prop_assert_eq!(&h, &gprime_algebraic(&g, &m).unwrap());
        prop_assert!(induced_matching_number(&h) <= induced_matching_number(&g));
        for &(a, b) in g.edges() {
            prop_assert!(h.has_edge(a, b));
        }
        if let Some(part) = g.bipartition() {
            prop_assert!(h.vertex_count() == g.vertex_count());
            for &(a, b) in h.edges() {
                prop_assert!((part.x >> a & 1) != (part.x >> b & 1));
            }
        }
    }

    #[test]
    fn regularity_sandwich(g in arb_graph(7).prop_filter("needs an edge", |g| g.edge_count() > 0)) {
        let r = reg_power(&g, 1).unwrap() as usize;
        let nu = induced_matching_number(&g);
        let cochord = cochordal_cover_number(&g).unwrap().size;
        prop_assert!(nu < r && r <= cochord + 1);
        prop_assert!(russ_lower_bound(&g, 1).unwrap().value <= r);
        if let Some(e) = reg_exact_class(&g, 1).unwrap() {
            prop_assert_eq!(e.value, r);
        }
    }

    #[test]
    fn colon_times_monomial_lies_in_ideal((g, m) in arb_graph_with_edges(6)) {
        let i = edge_ideal(&g);
        let vars: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
        let mono = Monomial::product_of(g.vertex_count(), &vars);
        let p = power(&i, m.len() + 1).unwrap();
        let c = colon_by_monomial(&p, &mono);
        for gen in c.generators() {
            prop_assert!(p.contains(&gen.mul(&mono)));
        }
        // The colon contains I and is generated in degree 2.
        for gen in i.generators() {
            prop_assert!(c.contains(gen));
        }
        prop_assert!(c.generators().iter().all(|g| g.degree() == 2));
    }

    #[test]
    fn polarization_is_squarefree_and_degree_preserving(g in arb_graph(5), s in 1usize..=3) {
        prop_assume!(g.edge_count() > 0);
        let p = power(&edge_ideal(&g), s).unwrap();
        let (q, map) = polarize(&p);
        prop_assert!(q.is_squarefree());
        prop_assert_eq!(q.generators().len(), p.generators().len());
        prop_assert!(q.generators().iter().all(|m| m.degree() as usize == 2 * s));
        prop_assert_eq!(map.len(), q.nvars());
    }

    #[test]
    fn graph_formats_round_trip(g in arb_graph(10)) {
        prop_assert!(parse_graph(&g.to_edge_list()).unwrap().same_labeled(&g));
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(Graph::from_json(&back).unwrap(), g);
    }

    #[test]
    fn ideal_formats_round_trip(g in arb_graph(6), s in 1usize..=2) {
        prop_assume!(g.edge_count() > 0);
        let p = power(&edge_ideal(&g), s).unwrap();
        prop_assert_eq!(&parse_ideal(&p.to_text()).unwrap(), &p);
        prop_assert_eq!(&MonomialIdeal::from_json(&p.to_json()).unwrap(), &p);
    }
}
