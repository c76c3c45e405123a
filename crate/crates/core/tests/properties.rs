use graph_hypergroup::generators::{cayley, CayleySpec};
use graph_hypergroup::hypergroup::{analyze, build_structure_constants, check_hypergroup_axioms, enumerate_walks, EnumerationCaps};
use graph_hypergroup::{compute_distance_profile, Error, Graph, PointedGraph, Rational};
use proptest::prelude::*;

/// Random spanning tree plus extra edges, so the graph is connected.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..10).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            for (u, v) in extra {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                    edges.push(e);
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Connected circulant graphs on Z/n.
fn circulant() -> impl Strategy<Value = Graph> {
    (4usize..14)
        .prop_flat_map(|n| (Just(n), proptest::collection::btree_set(1..=n / 2, 1..4)))
        .prop_filter_map("disconnected", |(n, gens)| {
            let mut set: Vec<usize> = gens.iter().flat_map(|&g| [g, n - g]).collect();
            set.sort_unstable();
            set.dedup();
            cayley(&CayleySpec::cyclic(n, &set)).ok()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trip(g in connected_graph()) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn pipeline_never_contradicts_itself(g in connected_graph(), base in any::<prop::sample::Index>()) {
        let pg = PointedGraph::new(g.clone(), base.index(g.vertex_count())).unwrap();
        match analyze::<Rational>(&pg) {
            Ok(a) => {
                let v = a.verdict;
                prop_assert!(v.method_results.axioms);
                prop_assert_eq!(v.productive, v.method_results.brute_force);
                if v.s1 && v.s2 {
                    prop_assert_eq!(v.method_results.daa_criterion, Some(v.productive));
                }
            }
            Err(Error::NotSelfCentered { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e:?}"),
        }
    }

    #[test]
    fn circulants_are_self_centered_and_consistent(g in circulant()) {
        let pg = PointedGraph::new(g, 0).unwrap();
        let exact = analyze::<Rational>(&pg).unwrap().verdict;
        prop_assert!(exact.s1);
        let float = analyze::<f64>(&pg).unwrap().verdict;
        prop_assert_eq!(exact.method_results, float.method_results);
    }

    #[test]
    fn verdict_is_invariant_under_relabeling((g, perm) in circulant().prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), permutation(n)) })) {
        let a = analyze::<Rational>(&PointedGraph::new(g.clone(), 0).unwrap()).unwrap();
        let h = g.relabel(&perm).unwrap();
        let b = analyze::<Rational>(&PointedGraph::new(h, perm[0]).unwrap()).unwrap();
        prop_assert_eq!(&a.constants, &b.constants);
        prop_assert_eq!(a.verdict.sphere_sizes, b.verdict.sphere_sizes);
        prop_assert_eq!(a.verdict.method_results, b.verdict.method_results);
    }

    #[test]
    fn two_jumps_realize_the_constants(g in circulant()) {
        let p = compute_distance_profile(&PointedGraph::new(g, 0).unwrap()).unwrap();
        let sc = build_structure_constants::<Rational>(&p).unwrap();
        prop_assert!(check_hypergroup_axioms(&sc).holds);
        for i in 0..sc.order() {
            for j in 0..sc.order() {
                let walk = enumerate_walks::<Rational>(&p, &[i, j], EnumerationCaps::default()).unwrap();
                prop_assert_eq!(&walk[..], sc.product(i, j));
            }
        }
    }
}
