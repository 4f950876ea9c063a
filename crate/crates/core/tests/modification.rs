mod common;

use common::*;
use proptest::prelude::*;

use tgon::graph::{graph_isomorphic, ModelBuilder, PointRef};
use tgon::modification::{
    canonical_representative, graft_tree, graft_tree_mapped, tropically_equivalent, GraftSpec,
    ModificationError,
};

fn path(lens: &[i128]) -> tgon::Model {
    let mut b = ModelBuilder::new("path").vertices((0..=lens.len()).map(|i| format!("p{i}")));
    for (i, l) in lens.iter().enumerate() {
        b = b.edge(
            format!("q{i}"),
            format!("p{i}"),
            format!("p{}", i + 1),
            r(*l),
        );
    }
    b.build().unwrap()
}

#[test]
fn graft_on_edge_interior() {
    let m = k4([5, 3, 1, 2, 4, 6]);
    let spec = GraftSpec {
        base_point: PointRef::interior("e1", r(2)),
        tree: path(&[1, 2]),
        attach_leaf: "p0".into(),
    };
    let (g, map) = graft_tree_mapped(&m, &spec).unwrap();
    assert_eq!(g.genus(), 3);
    // K4 plus the split vertex plus the two non-attached path vertices.
    assert_eq!(g.vertex_count(), 7);
    assert_eq!(g.edge_count(), 9);
    assert_eq!(g.total_length(), r(24));
    let base = &map["p0"];
    assert_eq!(g.valence(base), 3);
    assert_eq!(g.valence(&map["p2"]), 1);
    assert!(tropically_equivalent(&g, &m));
}

#[test]
fn graft_rejects_non_trees_and_non_leaves() {
    let m = k4([5, 3, 1, 2, 4, 6]);
    let not_leaf = GraftSpec {
        base_point: PointRef::vertex("v1"),
        tree: path(&[1, 1]),
        attach_leaf: "p1".into(),
    };
    assert_eq!(
        graft_tree(&m, &not_leaf).unwrap_err(),
        ModificationError::NotALeaf("p1".into())
    );
    let cyclic = GraftSpec {
        base_point: PointRef::vertex("v1"),
        tree: m.clone(),
        attach_leaf: "v1".into(),
    };
    assert_eq!(
        graft_tree(&m, &cyclic).unwrap_err(),
        ModificationError::NotATree
    );
}

#[test]
fn clashing_tree_ids_are_renamed() {
    let m = path(&[1, 1]).with_name("host").unwrap();
    let host = ModelBuilder::new("host")
        .vertices(["p0", "p1"])
        .edge("q0", "p0", "p1", r(1))
        .edge("q1", "p0", "p1", r(2))
        .build()
        .unwrap();
    let spec = GraftSpec {
        base_point: PointRef::vertex("p1"),
        tree: m,
        attach_leaf: "p0".into(),
    };
    let (g, map) = graft_tree_mapped(&host, &spec).unwrap();
    assert_eq!(map["p0"], "p1");
    assert_ne!(map["p2"], "p0");
    assert_ne!(map["p1"], "p1");
    assert_eq!(g.edge_count(), 4);
    assert_eq!(g.genus(), 1);
}

#[test]
fn changed_length_breaks_equivalence() {
    let m = k4([5, 3, 1, 2, 4, 6]);
    for i in 0..6 {
        let mut lens = [5, 3, 1, 2, 4, 6];
        lens[i] += 1;
        assert!(!tropically_equivalent(&m, &k4(lens)), "edge {}", i + 1);
    }
    // A K4 automorphism permutes lengths without changing the class:
    // swapping v3 and v4 exchanges e2 <-> e3 and e5 <-> e6.
    assert!(tropically_equivalent(&m, &k4([5, 1, 3, 2, 6, 4])));
}

#[test]
fn cycles_compare_by_length() {
    let cycle = |n: usize, l: i128| {
        let mut b = ModelBuilder::new("c").vertices((0..n).map(|i| format!("c{i}")));
        for i in 0..n {
            b = b.edge(
                format!("d{i}"),
                format!("c{i}"),
                format!("c{}", (i + 1) % n),
                r(l),
            );
        }
        b.build().unwrap()
    };
    assert!(tropically_equivalent(&cycle(3, 2), &cycle(2, 3)));
    assert!(!tropically_equivalent(&cycle(3, 2), &cycle(2, 2)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graft_preserves_genus_and_adds_dangling_edges(
        m in arb_model().prop_filter("has edges", |m| m.edge_count() > 0),
        (tree, leaf) in arb_tree(),
        v in any::<proptest::sample::Index>(),
    ) {
        let vs: Vec<String> = m.vertices().cloned().collect();
        let spec = GraftSpec {
            base_point: PointRef::vertex(vs[v.index(vs.len())].clone()),
            tree: tree.clone(),
            attach_leaf: leaf.clone(),
        };
        let (g, map) = graft_tree_mapped(&m, &spec).unwrap();
        prop_assert_eq!(g.genus(), m.genus());
        prop_assert_eq!(g.total_length(), m.total_length() + tree.total_length());
        let new_edges: Vec<String> = g.edges().map(|(e, _)| e.clone()).filter(|e| !m.lengths().contains_key(e)).collect();
        prop_assert_eq!(new_edges.len(), tree.edge_count());
        for e in &new_edges {
            prop_assert!(g.is_dangling(e).unwrap() || m.genus() == 0, "edge {}", e);
            prop_assert!(g.is_bridge(e).unwrap());
        }
        prop_assert_eq!(map.len(), tree.vertex_count());
    }

    #[test]
    fn equivalence_is_reflexive_and_symmetric(m in arb_cyclic_model(), n in arb_cyclic_model()) {
        prop_assert!(tropically_equivalent(&m, &m));
        prop_assert_eq!(tropically_equivalent(&m, &n), tropically_equivalent(&n, &m));
    }

    #[test]
    fn modifications_stay_equivalent(
        (m, g) in arb_cyclic_model().prop_flat_map(|m| (Just(m.clone()), arb_modification(m)))
    ) {
        prop_assert_eq!(g.genus(), m.genus());
        prop_assert!(tropically_equivalent(&m, &g));
        if let (Ok(a), Ok(b)) = (canonical_representative(&m), canonical_representative(&g)) {
            prop_assert!(graph_isomorphic(&a, &b, true));
            if a.vertex_count() <= 5 {
                prop_assert!(brute_force_isomorphic(&a, &b, true));
            }
        }
    }
}
