mod common;

use proptest::prelude::*;
use vislab_core::families::generate;
use vislab_core::graph::{
    biconnected_components, bridges, cartesian_product, cut_vertices, is_block_graph, is_chordal,
    maximal_cliques, parse_graph, simplicial_vertices, write_edge_list,
};
use vislab_core::{FamilySpec, Graph, InvariantKind, VertexSet, VisibilityContext, UNREACHABLE};

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9, 100u32..=900, any::<u64>()).prop_map(|(n, p, seed)| {
        generate(&FamilySpec::RandomConnected {
            n,
            edge_permille: p,
            seed,
        })
        .unwrap()
    })
}

fn components_without(g: &Graph, v: usize) -> usize {
    let keep = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&u| u != v)).unwrap();
    g.induced(&keep).component_count()
}

/// Induced cycles of length >= 4, found by checking every vertex subset.
fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.n();
    (0..1u64 << n).any(|m| {
        let vs = common::members_of(m, n);
        vs.len() >= 4 && {
            let sub = g.induced(&VertexSet::from_vertices(n, vs.iter().copied()).unwrap());
            (0..sub.n()).all(|v| sub.degree(v) == 2) && common::is_connected(&sub)
        }
    })
}

fn has_induced_diamond(g: &Graph) -> bool {
    let n = g.n();
    (0..1u64 << n).filter(|m| m.count_ones() == 4).any(|m| {
        let vs = common::members_of(m, n);
        let edges = vs
            .iter()
            .enumerate()
            .map(|(i, &a)| vs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
            .sum::<usize>();
        edges == 5
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distance_matrix_is_a_metric(g in random_graph()) {
        let d = g.distance_matrix();
        let oracle = common::all_distances(&g);
        for (u, row) in oracle.iter().enumerate() {
            for (v, &want) in row.iter().enumerate() {
                prop_assert_eq!(d.raw(u, v), want);
                prop_assert_eq!(d.raw(u, v), d.raw(v, u));
                prop_assert_ne!(d.raw(u, v), UNREACHABLE);
                for w in 0..g.n() {
                    prop_assert!(d.raw(u, v) <= d.raw(u, w) + d.raw(w, v));
                }
            }
        }
    }

    #[test]
    fn intervals_match_definition(g in random_graph()) {
        let d = common::all_distances(&g);
        let dm = g.distance_matrix();
        for u in 0..g.n() {
            for v in 0..g.n() {
                let want: Vec<usize> = (0..g.n()).filter(|&w| d[u][w] + d[w][v] == d[u][v]).collect();
                prop_assert_eq!(dm.interval(u, v).unwrap().to_vec(), want);
            }
        }
    }

    #[test]
    fn bridges_and_cut_vertices_match_deletion(g in random_graph()) {
        for (u, v) in g.edges().iter() {
            let is_bridge = !common::is_connected(&g.without_edge(u, v));
            prop_assert_eq!(bridges(&g).contains(u, v), is_bridge);
        }
        let cuts = cut_vertices(&g);
        for v in 0..g.n() {
            prop_assert_eq!(cuts.contains(v), g.n() > 1 && components_without(&g, v) > 1);
        }
        let blocks = biconnected_components(&g);
        for (u, v) in g.edges().iter() {
            prop_assert_eq!(blocks.iter().filter(|b| b.contains(u) && b.contains(v)).count(), 1);
        }
    }

    #[test]
    fn maximal_cliques_match_brute_force(g in random_graph()) {
        let n = g.n();
        let mut want: Vec<Vec<usize>> = (1..1u64 << n)
            .map(|m| common::members_of(m, n))
            .filter(|vs| common::is_clique(&g, vs))
            .filter(|vs| (0..n).all(|v| vs.contains(&v) || !vs.iter().all(|&u| g.has_edge(u, v))))
            .collect();
        want.sort();
        let mut got: Vec<Vec<usize>> = maximal_cliques(&g).unwrap().iter().map(VertexSet::to_vec).collect();
        got.sort();
        prop_assert_eq!(got, want);
        let simplicial = simplicial_vertices(&g);
        prop_assert_eq!(simplicial.len(), common::simplicial_count(&g));
    }

    #[test]
    fn block_graphs_are_diamond_free_chordal(g in random_graph()) {
        let chordal = !has_long_induced_cycle(&g);
        prop_assert_eq!(is_chordal(&g), chordal);
        prop_assert_eq!(is_block_graph(&g), chordal && !has_induced_diamond(&g));
    }

    #[test]
    fn visibility_is_symmetric_and_monotone(g in random_graph(), mask in any::<u64>(), drop in any::<u64>()) {
        let n = g.n();
        let ctx = VisibilityContext::new(g.clone());
        let x = VertexSet::from_vertices(n, common::members_of(mask, n)).unwrap();
        let y = VertexSet::from_vertices(n, x.iter().filter(|v| drop >> v & 1 == 1)).unwrap();
        let d = common::all_distances(&g);
        let flags: Vec<bool> = (0..n).map(|v| x.contains(v)).collect();
        for a in 0..n {
            for b in 0..n {
                let vis = ctx.is_x_visible(&x, a, b).unwrap();
                prop_assert_eq!(vis, ctx.is_x_visible(&x, b, a).unwrap());
                prop_assert_eq!(vis, common::visible(&d, &g, &flags, a, b));
                prop_assert!(!vis || ctx.is_x_visible(&y, a, b).unwrap());
            }
        }
    }

    #[test]
    fn neighborhood_lemma_flags_are_sound(g in random_graph()) {
        let ctx = VisibilityContext::new(g.clone());
        let table = common::valid_table(&g, InvariantKind::Mv);
        for check in ctx.neighborhood_lemma_scan().unwrap() {
            let closed = g.neighborhood(check.vertex, true).unwrap();
            let mask: u64 = closed.iter().map(|v| 1u64 << v).sum();
            let maximal = common::maximal_in_table(&table, mask, g.n());
            prop_assert_eq!(check.certified, maximal);
        }
    }

    #[test]
    fn edge_list_round_trips(g in random_graph()) {
        let text = write_edge_list(&g, &["roundtrip".to_string()]);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }
}

#[test]
fn product_sizes() {
    for (a, b) in [(2, 3), (3, 4), (4, 4)] {
        let pa = generate(&FamilySpec::Path(a)).unwrap();
        let pb = generate(&FamilySpec::Path(b)).unwrap();
        let prod = cartesian_product(&pa, &pb).unwrap();
        assert_eq!(prod.n(), a * b);
        assert_eq!(prod.edge_count(), a * (b - 1) + b * (a - 1));
        assert_eq!(prod, generate(&FamilySpec::Grid(vec![a, b])).unwrap());
    }
}
