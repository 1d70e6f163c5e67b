//! Library results against brute-force reference computations.

mod common;

use edgeideal_core::betti::{reg_power, regularity};
use edgeideal_core::chordal::{
    cochordal_cover_number, dual_shelling, is_chordal, is_cochordal, is_dual_shelling,
};
use edgeideal_core::enumerate::{connected_graphs, random_graph};
use edgeideal_core::even_connection::{gprime, gprime_algebraic, is_even_connected};
use edgeideal_core::graph::{cycle, disjoint_union, path};
use edgeideal_core::invariants::{
    independence_number, induced_matching_number, matching_number, min_maximal_matching_number,
    minimal_vertex_covers,
};
use edgeideal_core::monomial::{colon_by_monomial, edge_ideal, power, Monomial};
use edgeideal_core::Graph;

fn small_graphs() -> Vec<Graph> {
    let mut out = connected_graphs(6).unwrap();
    out.extend((0..40).map(|seed| random_graph(7, 0.35, seed).unwrap()));
    out
}

#[test]
fn matching_invariants_match_brute_force() {
    for g in small_graphs() {
        let name = g.to_edge_list();
        assert_eq!(matching_number(&g), common::matching_number(&g), "{name}");
        assert_eq!(induced_matching_number(&g), common::induced_matching_number(&g), "{name}");
        assert_eq!(min_maximal_matching_number(&g), common::min_maximal_matching_number(&g), "{name}");
        assert_eq!(independence_number(&g), common::independence_number(&g), "{name}");
        assert_eq!(minimal_vertex_covers(&g).unwrap(), common::minimal_vertex_covers(&g), "{name}");
    }
}

#[test]
fn chordality_matches_brute_force() {
    for g in small_graphs() {
        assert_eq!(is_chordal(&g), common::is_chordal(&g), "{}", g.to_edge_list());
        assert_eq!(
            is_cochordal(&g),
            common::is_cochordal_edges(g.vertex_count(), g.edges()),
            "{}",
            g.to_edge_list()
        );
    }
}

#[test]
fn dual_shellings_exist_exactly_for_cochordal_graphs() {
    for g in small_graphs() {
        let cochordal = common::is_cochordal_edges(g.vertex_count(), g.edges());
        match dual_shelling(&g) {
            Some(s) => {
                assert!(cochordal);
                assert!(is_dual_shelling(&g, &s));
                for k in 1..=s.ordering.len() {
                    assert!(!common::has_induced_2k2(&s.ordering[..k]), "{}", g.to_edge_list());
                }
                let mut sorted = s.ordering.clone();
                sorted.sort();
                assert_eq!(sorted, g.edges());
            }
            None => assert!(!cochordal, "{}", g.to_edge_list()),
        }
    }
}

#[test]
fn cochord_matches_brute_force() {
    for g in small_graphs().into_iter().filter(|g| g.edge_count() <= 12) {
        let cover = cochordal_cover_number(&g).unwrap();
        assert_eq!(cover.size, common::cochordal_cover_number(&g), "{}", g.to_edge_list());
    }
}

#[test]
fn even_connection_matches_walk_enumeration() {
    let graphs: Vec<Graph> = connected_graphs(5).unwrap().into_iter().chain([cycle(6).unwrap()]).collect();
    for g in graphs {
        let edges = g.edges().to_vec();
        let mut multisets: Vec<Vec<(usize, usize)>> = edges.iter().map(|&e| vec![e]).collect();
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i..] {
                multisets.push(vec![a, b]);
            }
        }
        for m in multisets {
            for u in 0..g.vertex_count() {
                for v in 0..g.vertex_count() {
                    let found = is_even_connected(&g, u, v, &m).unwrap().is_some();
                    assert_eq!(found, common::even_connected(&g, u, v, &m), "{} {u} {v} {m:?}", g.to_edge_list());
                }
            }
            let h = gprime(&g, &m).unwrap();
            assert_eq!(h, gprime_algebraic(&g, &m).unwrap());
            for a in 0..g.vertex_count() {
                for b in a + 1..g.vertex_count() {
                    let expected = g.has_edge(a, b) || common::even_connected(&g, a, b, &m);
                    assert_eq!(h.has_edge(a, b), expected);
                }
            }
        }
    }
}

#[test]
fn regularity_matches_hochster_formula() {
    let mut graphs: Vec<Graph> = connected_graphs(5).unwrap();
    graphs.push(cycle(6).unwrap());
    graphs.push(disjoint_union(&[path(2).unwrap(), path(2).unwrap(), path(3).unwrap()]));
    for g in graphs {
        let ideal = edge_ideal(&g);
        assert_eq!(
            regularity(&ideal).unwrap() as usize,
            common::hochster_regularity(&ideal),
            "{}",
            g.to_edge_list()
        );
    }
}

#[test]
fn power_regularity_matches_hochster_formula() {
    for g in [cycle(4).unwrap(), cycle(5).unwrap(), path(4).unwrap(), path(5).unwrap()] {
        assert_eq!(
            reg_power(&g, 2).unwrap() as usize,
            common::hochster_regularity(&power(&edge_ideal(&g), 2).unwrap()),
            "{}",
            g.to_edge_list()
        );
    }
    // I(C5)^2 has a linear resolution.
    assert_eq!(common::hochster_regularity(&power(&edge_ideal(&cycle(5).unwrap()), 2).unwrap()), 4);
}

#[test]
fn colon_regularity_matches_hochster_formula() {
    let c6 = cycle(6).unwrap();
    let ideal = edge_ideal(&c6);
    let m = Monomial::product_of(6, &[1, 2, 3, 4]);
    let colon = colon_by_monomial(&power(&ideal, 3).unwrap(), &m);
    assert_eq!(regularity(&colon).unwrap(), 2);
    assert_eq!(common::hochster_regularity(&colon), 2);
}
