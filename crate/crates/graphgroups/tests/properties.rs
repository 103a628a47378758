use proptest::prelude::*;
use tamecm_graphgroups::*;

/// A random tree on `parents.len() + 1` vertices plus extra edges.
fn graph_from(parents: &[usize], extra: &[(usize, usize)]) -> GraphOfGroups {
    let mut g = GraphOfGroups::new("G");
    g.add_vertex("v0", "H0");
    for (i, &p) in parents.iter().enumerate() {
        let v = g.add_vertex(format!("v{}", i + 1), format!("H{}", i + 1));
        g.add_edge(format!("o{v}"), format!("K{v}"), p % v, v).unwrap();
    }
    let n = parents.len() + 1;
    for &(a, b) in extra {
        g.add_edge("x", "L", a % n, b % n).unwrap();
    }
    g
}

proptest! {
    #[test]
    fn trees_have_no_edge_generators(parents in proptest::collection::vec(0usize..16, 0..8)) {
        let mut g = graph_from(&parents, &[]);
        g.choose_tree().unwrap();
        prop_assert!(g.is_tree());
        let p = pi1_presentation(&g).unwrap();
        prop_assert_eq!(p.generators.len(), g.vertices().len());
        prop_assert!(!p.text.contains('⟨'));
    }

    #[test]
    fn every_non_tree_edge_is_a_generator(
        parents in proptest::collection::vec(0usize..16, 0..8),
        extra in proptest::collection::vec((0usize..16, 0usize..16), 0..5),
    ) {
        let mut g = graph_from(&parents, &extra);
        g.choose_tree().unwrap();
        let p = pi1_presentation(&g).unwrap();
        for (i, e) in g.edges().iter().enumerate() {
            prop_assert_eq!(p.generators.contains(&e.symbol), !g.tree().contains(&i));
        }
        prop_assert_eq!(p.relations.len(), g.edges().len());
        prop_assert_eq!(g.tree().len() + 1, g.vertices().len());
    }

    #[test]
    fn certificate_passes_for_any_seed(seed in 0u64..1000) {
        prop_assert!(certify_gamma2(30, seed).unwrap().passed());
    }
}
