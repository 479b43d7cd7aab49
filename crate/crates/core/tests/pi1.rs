use idemsplit::pi1::{
    basepoint_independence_check, basepoint_iso_check, enumerate_classes, group_axioms_check,
    GraphComplex, RelClass,
};
use idemsplit::text::{parse_graph, parse_path};

fn class(g: &GraphComplex, path: &str) -> RelClass {
    let p = g.path_from_steps(parse_path(path).unwrap()).unwrap();
    g.class_of(&p).unwrap()
}

#[test]
fn validate_examples() {
    assert!(GraphComplex::wedge(2).validate());
    assert!(GraphComplex::theta().validate());
    let cyclic = parse_graph("vertices 2\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\nbase 0 1\n").unwrap();
    assert!(!cyclic.validate());
}

#[test]
fn class_and_product_examples() {
    let g = GraphComplex::theta();
    assert!(class(&g, "").is_identity());
    assert!(class(&g, "e0 e0^-1 e0").is_identity());
    assert_eq!(class(&g, "e1 e2^-1").to_string(), "e1 e2^-1");
    let p = class(&g, "e1 e0^-1");
    let q = class(&g, "e2 e0^-1");
    assert_eq!(g.rel_product(&RelClass::identity(), &q), q);
    assert!(g.rel_product(&p, &g.rel_inverse(&p)).is_identity());
    assert_eq!(g.rel_product(&p, &q), class(&g, "e1 e0^-1 e2 e0^-1"));
}

#[test]
fn enumeration_and_isomorphism() {
    let wedge = GraphComplex::wedge(2);
    let counts: Vec<usize> = (1..=4).map(|l| enumerate_classes(&wedge, l).len()).collect();
    assert_eq!(counts, [5, 17, 53, 161]);
    let theta = GraphComplex::theta();
    assert!(basepoint_iso_check(&theta, 0, 6));
    assert!(basepoint_iso_check(&theta, 1, 6));
    assert!(basepoint_iso_check(&wedge, 0, 5));
    assert!(basepoint_independence_check(&theta, 4));
    assert!(group_axioms_check(&theta, 5, 3));
}

#[test]
fn longer_base_tree() {
    // a path 0 - 1 - 2 as the base, plus two extra edges closing loops
    let g = parse_graph(
        "vertices 3\nedge 0 0 1\nedge 1 1 2\nedge 2 0 2\nedge 3 2 2\nbase 0 1\n",
    )
    .unwrap();
    assert!(g.validate());
    assert_eq!(g.base_diameter(), 2);
    for x0 in 0..3 {
        assert!(basepoint_iso_check(&g, x0, 4), "x0 = {x0}");
    }
    assert!(basepoint_independence_check(&g, 3));
    assert!(group_axioms_check(&g, 3, 2));
    assert_eq!(enumerate_classes(&g, 1).len(), 5);
}
