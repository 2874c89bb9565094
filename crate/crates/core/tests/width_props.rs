mod common;

use proptest::prelude::*;

use common::*;
use pivotwidth::constructions::named;
use pivotwidth::constructions::trees::{all_trees, is_caterpillar, longest_path};
use pivotwidth::width::{
    exact_lrw, exact_lrw_with, lift_ordering, ordering_width, tree_lrw, tree_pathwidth,
    ExactOptions, LiftKind,
};
use pivotwidth::{Exec, Graph, VertexSet};

/// Widths computed by the all-orderings oracle.
#[test]
fn frozen_widths() {
    let cases: [(&str, Graph, usize); 9] = [
        ("C5", named::cycle(5).unwrap(), 2),
        ("C6", named::cycle(6).unwrap(), 2),
        ("P6", named::path(6), 1),
        ("K5", named::complete(5), 1),
        ("K3,3", named::complete_bipartite(3, 3), 1),
        ("W4", named::wheel(4).unwrap(), 1),
        ("W5", named::wheel(5).unwrap(), 3),
        ("S2,2,2", named::spider(2, 2, 2), 2),
        ("bw3", named::bw3(), 3),
    ];
    for (name, g, w) in cases {
        assert_eq!(lrw_oracle(&g), w, "{name} oracle");
        assert_eq!(exact_lrw(&g).unwrap().0, w, "{name}");
    }
    let grid = named::grid(3, 3);
    assert_eq!(lrw_oracle(&grid), 3);
    assert_eq!(exact_lrw(&grid).unwrap().0, 3);
}

#[test]
fn tree_width_formulas_on_all_trees_up_to_10() {
    for n in 1..=10 {
        for t in all_trees(n).unwrap() {
            let w = exact_lrw(&t).unwrap().0;
            assert_eq!(tree_lrw(&t).unwrap(), w);
            assert_eq!(is_caterpillar(&t).unwrap(), w <= 1);
            if n <= 8 {
                assert_eq!(tree_pathwidth(&t).unwrap(), pathwidth_oracle(&t));
            }
        }
    }
}

#[test]
fn parallel_and_sequential_agree() {
    for seed in 0..20u64 {
        let g = pivotwidth::constructions::random::gnp(
            &mut pivotwidth::constructions::random::rng(seed),
            12,
            0.4,
        );
        let par = exact_lrw_with(
            &g,
            ExactOptions {
                exec: Exec::Parallel,
                ..Default::default()
            },
        )
        .unwrap();
        let seq = exact_lrw_with(
            &g,
            ExactOptions {
                exec: Exec::Sequential,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(par, seq);
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn exact_matches_all_orderings(g in arb_graph(1, 7)) {
        let (w, cert) = exact_lrw(&g).unwrap();
        prop_assert_eq!(w, lrw_oracle(&g));
        prop_assert_eq!(cert.width, w);
        prop_assert!(cert.verify(&g));
        prop_assert_eq!(ordering_width_oracle(&g, &cert.ordering), w);
    }

    #[test]
    fn exact_never_exceeds_an_ordering(g in arb_graph(1, 12), perm in Just((0..12).collect::<Vec<usize>>()).prop_shuffle()) {
        let order: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let cert = ordering_width(&g, &order).unwrap();
        prop_assert!(exact_lrw(&g).unwrap().0 <= cert.width);
        prop_assert_eq!(cert.width, ordering_width_oracle(&g, &order));
    }

    #[test]
    fn complement_lift(g in arb_graph(1, 10)) {
        let h = g.complement();
        let (w, cert) = exact_lrw(&g).unwrap();
        prop_assert!(exact_lrw(&h).unwrap().0 <= w + 1);
        let lifted = lift_ordering(&LiftKind::Complement, &g, &cert, &h).unwrap();
        prop_assert!(lifted.certificate.width <= w + 1);
        prop_assert!(lifted.certificate.verify(&h));
    }

    #[test]
    fn bipartite_complement_lift(g in arb_graph(2, 10), a in any::<u64>(), b in any::<u64>()) {
        let a = subset_of(&g, a);
        let b = subset_of(&g, b).difference(&a);
        let h = g.bipartite_complement(&a, &b).unwrap();
        let (w, cert) = exact_lrw(&g).unwrap();
        prop_assert!(exact_lrw(&h).unwrap().0 <= w + 2);
        let lifted = lift_ordering(&LiftKind::BipartiteComplement { a, b }, &g, &cert, &h).unwrap();
        prop_assert!(lifted.certificate.width <= w + 2);
    }

    #[test]
    fn twin_expansion_lift(base in arb_connected(1, 6), sizes in proptest::collection::vec(1usize..3, 6), adjacent in any::<bool>()) {
        // Blow up vertex `v` of `base` into `sizes[v]` twins.
        let mut owner = Vec::new();
        for (v, &k) in sizes.iter().enumerate().take(base.n()) {
            owner.extend(std::iter::repeat_n(v, k));
        }
        let n = owner.len();
        let mut edges = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                let (p, q) = (owner[x], owner[y]);
                if (p == q && adjacent) || (p != q && base.has_edge(p, q)) {
                    edges.push((x, y));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let parts: Vec<VertexSet> = (0..base.n()).map(|v| (0..n).filter(|&x| owner[x] == v).collect()).collect();
        let (reduced, _) = g.contract_twins(&parts).unwrap();
        let (w, cert) = exact_lrw(&reduced).unwrap();
        prop_assert!(exact_lrw(&g).unwrap().0 <= w + 1);
        let lifted = lift_ordering(&LiftKind::TwinExpansion { parts }, &reduced, &cert, &g).unwrap();
        prop_assert!(lifted.certificate.width <= w + 1);
    }

    #[test]
    fn vertex_minors_do_not_increase_width(g in arb_graph(2, 10), steps in proptest::collection::vec((any::<bool>(), any::<prop::sample::Index>()), 1..8)) {
        let w = exact_lrw(&g).unwrap().0;
        let mut h = g.clone();
        for (delete, v) in steps {
            if h.n() <= 1 {
                break;
            }
            let v = v.index(h.n());
            h = if delete { h.delete_vertex(v).unwrap() } else { h.local_complement(v).unwrap() };
            prop_assert!(exact_lrw(&h).unwrap().0 <= w);
        }
    }

    #[test]
    fn trees_without_long_paths_have_small_pathwidth(t in arb_tree(1, 30)) {
        // With `d` vertices on a longest path there is no `P_{d+1}`.
        let d = longest_path(&t).unwrap().len();
        prop_assert!(tree_pathwidth(&t).unwrap() < d);
    }

    #[test]
    fn tree_formula_matches_dp(t in arb_tree(1, 14)) {
        prop_assert_eq!(tree_lrw(&t).unwrap(), exact_lrw(&t).unwrap().0);
    }

    #[test]
    fn disconnected_width_is_the_component_maximum(g in arb_graph(1, 7), h in arb_graph(1, 7)) {
        let u = g.disjoint_union(&h).unwrap();
        let w = exact_lrw(&g).unwrap().0.max(exact_lrw(&h).unwrap().0);
        prop_assert_eq!(exact_lrw(&u).unwrap().0, w);
    }
}
