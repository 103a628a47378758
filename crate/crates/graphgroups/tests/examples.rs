use tamecm_graphgroups::*;
use tamecm_orbits::C2Orbit;

fn squash(s: &str) -> String {
    s.split_whitespace().collect()
}

#[test]
fn printed_presentations() {
    let expected = [
        "G_0 = A ∗_U B",
        "G_1 = A_1 ∗_{U_1} B_1",
        "G_2 = (G_{2,x}⋊T) ∗_T (G_{2,y}⋊T) ∗_{Z₂} (G^{(1)}_{2,y}⋊Z₂)",
    ];
    for (n, want) in expected.iter().enumerate() {
        let p = pi1_presentation(&build_gamma(n).unwrap()).unwrap();
        assert_eq!(squash(&p.to_string()), squash(want), "n = {n}");
    }
}

#[test]
fn gamma_shapes() {
    for n in 0..=1 {
        let g = build_gamma(n).unwrap();
        assert_eq!((g.vertices().len(), g.edges().len()), (2, 1));
        assert!(g.is_tree());
    }
    let g = build_gamma(2).unwrap();
    assert_eq!(g.vertices().len(), 4);
    assert_eq!(g.edges().len(), 3);
    assert!(g.edges().iter().all(|e| e.source == 0));
    let orbits: Vec<_> = g.edges().iter().map(|e| e.orbit.as_str()).collect();
    assert_eq!(orbits, ["O_U(2,2)", "O_U(2,1)", "O_U^reg"]);
    assert_eq!(build_gamma(3).unwrap_err(), GraphError::Unsupported(3));
}

#[test]
fn single_vertex() {
    let mut g = GraphOfGroups::new("");
    g.add_vertex("pt", "H");
    let p = pi1_presentation(&g).unwrap();
    assert_eq!(p.to_string(), "H");
    assert_eq!(p.generators, ["H"]);
}

#[test]
fn invalid_graphs() {
    let mut g = GraphOfGroups::new("G");
    let a = g.add_vertex("a", "A");
    let b = g.add_vertex("b", "B");
    g.add_vertex("c", "C");
    g.add_edge("e", "E", a, b).unwrap();
    assert_eq!(g.choose_tree().unwrap_err(), GraphError::Disconnected);
    assert!(matches!(g.add_edge("f", "F", a, 7), Err(GraphError::MissingVertex { vertex: 7, .. })));

    let mut g = GraphOfGroups::new("G");
    let a = g.add_vertex("a", "A");
    let b = g.add_vertex("b", "B");
    let e0 = g.add_edge("e", "E", a, b).unwrap();
    let e1 = g.add_edge("f", "F", a, b).unwrap();
    g.set_tree([]);
    assert!(matches!(pi1_presentation(&g), Err(GraphError::BadTree(_))));
    g.set_tree([e0, e1]);
    assert!(matches!(pi1_presentation(&g), Err(GraphError::BadTree(_))));
}

#[test]
fn loop_edge_becomes_generator() {
    let mut g = GraphOfGroups::new("G");
    let a = g.add_vertex("a", "A");
    let b = g.add_vertex("b", "B");
    g.add_edge("e", "C", a, b).unwrap();
    g.add_edge("f", "D", b, a).unwrap();
    g.choose_tree().unwrap();
    let p = pi1_presentation(&g).unwrap();
    assert_eq!(p.text, "A ∗_C B ∗ ⟨e1⟩");
    assert_eq!(p.generators, ["A", "B", "e1"]);
    assert_eq!(p.relations[1], "e1⁻¹ α_e1(h) e1 = β_e1(h), h ∈ D");
}

#[test]
fn dot_output() {
    let dot = build_gamma(2).unwrap().to_dot();
    assert!(dot.starts_with("digraph \"G_2\" {"));
    assert_eq!(dot.matches("->").count(), 3);
    assert!(dot.contains("v0 -> v3 [label=\"O_U^reg\\nZ₂\", style=bold];"));
}

#[test]
fn gamma2_certificate() {
    let cert = certify_gamma2(200, 7).unwrap();
    assert_eq!(cert.labels_found(), 3);
    assert_eq!(cert.u_violations, 0);
    assert!(cert.a_connected());
    assert!(cert.passed());
    assert_eq!(cert.counts.values().sum::<usize>(), 200);
    assert!(cert.counts[&C2Orbit::Oreg] >= 60);
}
