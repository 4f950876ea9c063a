mod common;

use std::collections::BTreeMap;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tgon::constructions::{construct_case, random_params, CaseId};
use tgon::graph::{ModelBuilder, PointRef};
use tgon::morphism::{induce_from_vertex_map, EdgeImage, MorphismError, MorphismSpec};
use tgon::rational::Rational;

fn constructed(case: usize, seed: u64) -> MorphismSpec {
    let case = CaseId::ALL[case % CaseId::ALL.len()];
    let params = random_params(case, &mut ChaCha8Rng::seed_from_u64(seed));
    construct_case(case, &params).unwrap().phi
}

fn arb_phi() -> impl Strategy<Value = MorphismSpec> {
    (0usize..14, any::<u64>()).prop_map(|(c, s)| constructed(c, s))
}

fn arb_target_point(phi: &MorphismSpec) -> impl Strategy<Value = PointRef> {
    arb_point(phi.target())
}

/// A path of two unit edges folded onto one unit edge.
fn fold() -> MorphismSpec {
    let source = ModelBuilder::new("vee")
        .vertices(["a", "b", "c"])
        .edge("x", "a", "b", r(1))
        .edge("y", "c", "b", r(1))
        .build()
        .unwrap();
    let target = ModelBuilder::new("seg")
        .vertices(["p", "q"])
        .edge("t", "p", "q", r(1))
        .build()
        .unwrap();
    let psi = BTreeMap::from([
        ("a".to_string(), "p".to_string()),
        ("b".to_string(), "q".to_string()),
        ("c".to_string(), "p".to_string()),
    ]);
    induce_from_vertex_map("fold", &source, &target, &psi).unwrap()
}

#[test]
fn fold_is_harmonic_of_degree_two() {
    let phi = fold();
    assert!(phi.is_harmonic().is_harmonic());
    assert_eq!(phi.degree().unwrap(), 2);
    assert_eq!(phi.local_degree("b").unwrap(), 2);
    assert_eq!(phi.local_degree("a").unwrap(), 1);
    let over = phi.fiber(&PointRef::interior("t", q(1, 4))).unwrap();
    assert_eq!(
        over,
        vec![
            PointRef::interior("x", q(1, 4)),
            PointRef::interior("y", q(1, 4))
        ]
    );
    // b: k = 2, l = 1, m = 2 gives slack 0 - 2 * (-1) = 2.
    let rh = phi.riemann_hurwitz().unwrap();
    assert_eq!(rh.entry("b").unwrap().slack, 2);
    assert_eq!(rh.entry("a").unwrap().slack, 0);
}

#[test]
fn contracted_edge_has_no_finite_fiber() {
    let source = ModelBuilder::new("s")
        .vertices(["a", "b", "c"])
        .edge("x", "a", "b", r(1))
        .edge("y", "b", "c", r(1))
        .build()
        .unwrap();
    let target = ModelBuilder::new("t")
        .vertices(["p", "q"])
        .edge("t", "p", "q", r(1))
        .build()
        .unwrap();
    let psi = BTreeMap::from([
        ("a".to_string(), "p".to_string()),
        ("b".to_string(), "q".to_string()),
        ("c".to_string(), "q".to_string()),
    ]);
    let phi = induce_from_vertex_map("c", &source, &target, &psi).unwrap();
    assert_eq!(phi.edge_map()["y"], EdgeImage::Constant("q".into()));
    assert_eq!(
        phi.fiber(&PointRef::vertex("q")).unwrap_err(),
        MorphismError::HasConstantEdges
    );
    assert!(!phi.is_tropical_morphism(true).is_tropical());
}

#[test]
fn unequal_slopes_break_harmonicity() {
    // Two edges from b onto t with slopes 1 and 2 on one side, nothing on
    // the other side of the image.
    let source = ModelBuilder::new("s")
        .vertices(["a", "b", "c"])
        .edge("x", "a", "b", r(2))
        .edge("y", "b", "c", r(1))
        .build()
        .unwrap();
    let target = ModelBuilder::new("t")
        .vertices(["p", "q", "o"])
        .edge("t", "p", "q", r(2))
        .edge("u", "q", "o", r(2))
        .build()
        .unwrap();
    let psi = BTreeMap::from([
        ("a".to_string(), "p".to_string()),
        ("b".to_string(), "q".to_string()),
        ("c".to_string(), "o".to_string()),
    ]);
    let phi = induce_from_vertex_map("s", &source, &target, &psi).unwrap();
    assert_eq!(phi.slope("x").unwrap(), r(1));
    assert_eq!(phi.slope("y").unwrap(), r(2));
    let report = phi.is_harmonic();
    assert!(!report.is_harmonic());
    assert_eq!(report.violations[0].vertex, "b");
    assert!(phi.degree().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn slopes_are_length_ratios(phi in arb_phi()) {
        for (e, img) in phi.edge_map() {
            if let EdgeImage::Onto { edge, .. } = img {
                let expected = phi.target().length(edge).unwrap() / phi.source().length(e).unwrap();
                prop_assert_eq!(phi.slope(e).unwrap(), expected);
                prop_assert!(expected.is_integer() && expected.is_positive());
            }
        }
    }

    #[test]
    fn directional_sums_total_twice_the_slopes(phi in arb_phi()) {
        let mut total = Rational::zero();
        for v in phi.source().vertices() {
            for (_, s) in phi.slope_sums(v).unwrap() {
                total += s;
            }
        }
        let mut twice = Rational::zero();
        for (e, _) in phi.source().edges() {
            twice += r(2) * phi.slope(e).unwrap();
        }
        prop_assert_eq!(total, twice);
    }

    #[test]
    fn weighted_fiber_is_constant(
        (phi, p) in arb_phi().prop_flat_map(|phi| { let s = arb_target_point(&phi); (Just(phi), s) })
    ) {
        let d = phi.degree().unwrap();
        prop_assert_eq!(d, 3);
        prop_assert_eq!(phi.weighted_fiber_size(&p).unwrap(), d);
        // Oracle: every fiber point maps back onto p.
        for x in phi.fiber(&p).unwrap() {
            match (&x, &p) {
                (PointRef::Vertex(v), PointRef::Vertex(w)) => prop_assert_eq!(&phi.vertex_map()[v], w),
                (PointRef::Interior { edge, offset }, PointRef::Interior { edge: t, offset: s }) => {
                    let EdgeImage::Onto { edge: img, aligned } = &phi.edge_map()[edge] else {
                        unreachable!()
                    };
                    prop_assert_eq!(img, t);
                    let along = *offset * phi.slope(edge).unwrap();
                    let len = phi.target().length(t).unwrap();
                    prop_assert_eq!(if *aligned { along } else { len - along }, *s);
                }
                _ => prop_assert!(false, "fiber point of the wrong kind"),
            }
        }
    }

    #[test]
    fn local_degree_inside_an_edge_is_the_slope(phi in arb_phi(), i in any::<proptest::sample::Index>()) {
        let edges: Vec<String> = phi.source().edges().map(|(e, _)| e.clone()).collect();
        let e = &edges[i.index(edges.len())];
        let len = phi.source().length(e).unwrap();
        let p = PointRef::interior(e.clone(), len.half());
        prop_assert_eq!(Rational::from_integer(phi.local_degree_at(&p).unwrap() as i128), phi.slope(e).unwrap());
    }

    #[test]
    fn refinement_preserves_the_morphism(
        (phi, i, k) in (arb_phi(), any::<proptest::sample::Index>(), 1i128..8)
    ) {
        let edges: Vec<(String, Rational)> =
            phi.target().lengths().iter().map(|(e, l)| (e.clone(), *l)).collect();
        let (t, l) = &edges[i.index(edges.len())];
        let q = PointRef::interior(t.clone(), *l * Rational::new(k, 8));
        let fine = phi.refine_at(&q).unwrap();
        let cert = fine.is_tropical_morphism(true);
        prop_assert!(cert.is_tropical(), "{:?}", cert.failures());
        prop_assert_eq!(fine.degree().unwrap(), 3);
        prop_assert_eq!(fine.source().genus(), phi.source().genus());
        prop_assert_eq!(fine.source().total_length(), phi.source().total_length());
        prop_assert_eq!(fine.target().total_length(), phi.target().total_length());
        for v in phi.source().vertices() {
            prop_assert_eq!(fine.local_degree(v).unwrap(), phi.local_degree(v).unwrap());
        }
        // New source vertices sit over the new target vertex with local
        // degree equal to the slope of the edge they split.
        let new_target: Vec<_> = fine.target().vertices().filter(|w| !phi.target().contains_vertex(w)).cloned().collect();
        prop_assert_eq!(new_target.len(), 1);
        prop_assert_eq!(fine.weighted_fiber_size(&PointRef::vertex(new_target[0].clone())).unwrap(), 3);
    }

    #[test]
    fn induced_map_is_deterministic(phi in arb_phi()) {
        let again = induce_from_vertex_map(phi.name(), phi.source(), phi.target(), phi.vertex_map()).unwrap();
        prop_assert_eq!(&again, &phi);
        prop_assert_eq!(tgon::io::emit_morphism(&again), tgon::io::emit_morphism(&phi));
    }
}
