//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines always show up in `cargo test` output.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tgon::constructions::{
    catalogue, classify, construct, construct_case, entry, random_params, tgon_upper_bound,
    tripod_folding, CaseId, ConstructionError, ConstructionResult, Param, ParamSet,
};
use tgon::graph::{graph_isomorphic, Model, ModelBuilder, PointRef};
use tgon::io::{emit_model, emit_morphism, parse_model, parse_morphism};
use tgon::modification::{canonical_representative, graft_tree, GraftSpec};
use tgon::morphism::{induce_from_vertex_map, EdgeImage, MorphismSpec};
use tgon::rational::Rational;

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn r(n: i128) -> Rational {
    Rational::from_integer(n)
}

fn k4_params() -> ParamSet {
    ParamSet::for_case(CaseId::C1_1A, &[5, 3, 1, 2, 4, 6]).unwrap()
}

fn sweep() -> &'static (Vec<ConstructionResult>, Vec<Model>, Duration) {
    static SWEEP: std::sync::OnceLock<(Vec<ConstructionResult>, Vec<Model>, Duration)> =
        std::sync::OnceLock::new();
    SWEEP.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut results = Vec::new();
        let mut inputs = Vec::new();
        let start = Instant::now();
        for case in CaseId::ALL {
            for _ in 0..100 {
                let p = random_params(case, &mut rng);
                inputs.push(entry(case).template.instantiate(&p).unwrap());
                match construct_case(case, &p) {
                    Ok(res) => results.push(res),
                    Err(e) => panic!("{case} {p}: {e}"),
                }
            }
        }
        (results, inputs, start.elapsed())
    })
}

fn c1_end_to_end() -> Outcome {
    let start = Instant::now();
    let res = construct_case(CaseId::C1_1A, &k4_params()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let phi = &res.phi;
    ensure!(phi.degree() == Ok(3), "degree {:?}", phi.degree());
    for (e, _) in phi.source().edges() {
        ensure!(
            phi.slope(e) == Ok(r(1)),
            "slope of {e} is {:?}",
            phi.slope(e)
        );
    }
    ensure!(phi.is_harmonic().is_harmonic(), "not harmonic");
    let rh = phi.riemann_hurwitz().map_err(|e| e.to_string())?;
    let v8 = rh.entry("v8").ok_or("no vertex v8")?;
    ensure!(v8.slack == 2, "slack at v8 is {}", v8.slack);
    ensure!(rh.holds(), "Riemann-Hurwitz fails");
    let fiber = phi
        .fiber(&PointRef::vertex("w1"))
        .map_err(|e| e.to_string())?;
    let expected: Vec<PointRef> = ["v1", "v5", "v7"].map(PointRef::vertex).to_vec();
    ensure!(fiber == expected, "fiber over w1 is {fiber:?}");
    for v in ["v1", "v5", "v7"] {
        ensure!(phi.local_degree(v) == Ok(1), "local degree at {v}");
    }
    ensure!(elapsed < Duration::from_millis(100), "took {elapsed:?}");

    // Same graph given as a plain K4 file goes through classification.
    let k4 = entry(CaseId::C1_1A)
        .template
        .instantiate(&k4_params())
        .unwrap();
    let via = construct(&k4).map_err(|e| e.to_string())?;
    ensure!(
        via.phi.degree() == Ok(3),
        "classified K4 has degree {:?}",
        via.phi.degree()
    );
    Ok(format!(
        "degree 3, slopes 1, slack(v8) = 2, fiber(w1) = {{v1,v5,v7}}, {elapsed:?}"
    ))
}

fn c2_sweep() -> Outcome {
    let (results, inputs, elapsed) = sweep();
    ensure!(results.len() == 1400, "{} constructions", results.len());
    for (res, input) in results.iter().zip(inputs) {
        let cert = res.phi.is_tropical_morphism(true);
        ensure!(
            cert.is_tropical(),
            "{} {}: {:?}",
            res.case,
            res.params,
            cert.failures()
        );
        ensure!(
            cert.degree == Some(3),
            "{} {}: degree {:?}",
            res.case,
            res.params,
            cert.degree
        );
        ensure!(
            res.tree.genus() == 0,
            "{} {}: tree genus",
            res.case,
            res.params
        );
        let reduced = canonical_representative(&res.gamma_prime).map_err(|e| e.to_string())?;
        ensure!(
            graph_isomorphic(&reduced, input, true),
            "{} {}: not the input",
            res.case,
            res.params
        );
    }
    ensure!(*elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("14 x 100 certified in {elapsed:?}"))
}

fn c3_degree() -> Outcome {
    let (results, _, _) = sweep();
    let mut points = 0usize;
    for res in results {
        let phi = &res.phi;
        let t = phi.target();
        let mut sums = BTreeSet::new();
        for w in t.vertices() {
            sums.insert(
                phi.weighted_fiber_size(&PointRef::vertex(w.clone()))
                    .map_err(|e| e.to_string())?,
            );
            points += 1;
        }
        for (e, l) in t.lengths() {
            sums.insert(
                phi.weighted_fiber_size(&PointRef::interior(e.clone(), l.half()))
                    .map_err(|e| e.to_string())?,
            );
            points += 1;
        }
        ensure!(
            sums.len() == 1,
            "{} {}: fiber sums {sums:?}",
            res.case,
            res.params
        );
    }
    Ok(format!(
        "{points} fibers over vertices and midpoints, all of weight 3"
    ))
}

fn c4_boundary() -> Outcome {
    let cases = [
        CaseId::C1_2,
        CaseId::C1_4,
        CaseId::C1_5,
        CaseId::C2_1,
        CaseId::C2_2,
        CaseId::C3_1,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in cases {
        for _ in 0..10 {
            let p = random_params(case, &mut rng);
            let p = p.clone().with(Param::B, p.get(Param::A).unwrap());
            let direct = construct_case(case, &p);
            ensure!(
                matches!(direct, Err(ConstructionError::HyperellipticDegenerate)),
                "{case} {p}: construct_case gave {:?}",
                direct.map(|r| r.case)
            );
            let m = entry(case).template.instantiate(&p).unwrap();
            let classified = classify(&m);
            ensure!(
                classified == Err(ConstructionError::HyperellipticDegenerate),
                "{case} {p}: classify gave {:?}",
                classified.map(|c| c.case)
            );
            ensure!(construct(&m).is_err(), "{case} {p}: construct succeeded");
        }
    }
    Ok("a = b rejected for C1_2 C1_4 C1_5 C2_1 C2_2 C3_1".into())
}

fn c5_folding() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let p = random_params(CaseId::C4, &mut rng);
        let phi = tripod_folding(&p).map_err(|e| e.to_string())?;
        let cert = phi.is_tropical_morphism(true);
        ensure!(cert.harmonic(), "{p}: folding not harmonic");
        ensure!(cert.degree == Some(2), "{p}: degree {:?}", cert.degree);
        ensure!(!cert.rh_holds(), "{p}: Riemann-Hurwitz holds");
        let rh = phi.riemann_hurwitz().unwrap();
        let bad: Vec<_> = rh
            .failures()
            .map(|e| (e.vertex.as_str(), e.k, e.l, e.m))
            .collect();
        ensure!(bad == vec![("v1", 3, 3, 2)], "{p}: failures {bad:?}");
        for (e, img) in phi.edge_map() {
            let s = phi.slope(e).unwrap();
            let bridge = matches!(img, EdgeImage::Onto { edge, .. } if edge.starts_with("w1_"));
            ensure!(s == r(if bridge { 2 } else { 1 }), "{p}: slope {s} on {e}");
        }
        // With slope 1 on the bridges as well, the map cannot be harmonic:
        // at a loop vertex the loop halves give 2 and the bridge gives 1.
        let flat = slope_one_folding(&phi);
        ensure!(
            !flat.is_harmonic().is_harmonic(),
            "{p}: slope-1 folding is harmonic"
        );
    }
    Ok("harmonic of degree 2, RH fails only at v1 (k=3, l=3, m=2); bridges need slope 2".into())
}

/// The folding with the target bridges shortened so that every slope is 1.
fn slope_one_folding(phi: &MorphismSpec) -> MorphismSpec {
    let t = phi.target();
    let mut b = ModelBuilder::new(t.name()).vertices(t.vertices().cloned());
    for (id, e) in t.edges() {
        let len = if id.starts_with("w1_") {
            t.lengths()[id].half()
        } else {
            t.lengths()[id]
        };
        b = b.edge(id.clone(), e.v0.clone(), e.v1.clone(), len);
    }
    let target = b.build().unwrap();
    induce_from_vertex_map("flat", phi.source(), &target, phi.vertex_map()).unwrap()
}

fn random_tree<R: Rng>(rng: &mut R) -> Model {
    let n = rng.random_range(2..=4);
    let mut b = ModelBuilder::new("t").vertices((0..n).map(|i| format!("g{i}")));
    for child in 1..n {
        let parent = rng.random_range(0..child);
        let len = Rational::new(rng.random_range(1..=20), rng.random_range(1..=6));
        b = b.edge(
            format!("h{child}"),
            format!("g{parent}"),
            format!("g{child}"),
            len,
        );
    }
    b.build().unwrap()
}

fn c6_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for trial in 0..200 {
        let case = CaseId::ALL[trial % 14];
        let original = entry(case)
            .template
            .instantiate(&random_params(case, &mut rng))
            .unwrap();
        let mut m = original.clone();
        for _ in 0..rng.random_range(1..=5) {
            let edges: Vec<(String, Rational)> =
                m.lengths().iter().map(|(e, l)| (e.clone(), *l)).collect();
            let (e, l) = &edges[rng.random_range(0..edges.len())];
            let at = *l * Rational::new(rng.random_range(1..8), 8);
            if rng.random_bool(0.5) {
                m = m.subdivide_edge(e, at).unwrap();
            } else {
                let tree = random_tree(&mut rng);
                let leaf = format!("g{}", tree.vertex_count() - 1);
                let base_point = if rng.random_bool(0.5) {
                    PointRef::interior(e.clone(), at)
                } else {
                    PointRef::Vertex(m.edge(e).unwrap().v1.clone())
                };
                m = graft_tree(
                    &m,
                    &GraftSpec {
                        base_point,
                        tree,
                        attach_leaf: leaf,
                    },
                )
                .unwrap();
            }
            ensure!(m.genus() == 3, "trial {trial}: genus {}", m.genus());
        }
        let back = canonical_representative(&m).map_err(|e| e.to_string())?;
        ensure!(
            graph_isomorphic(&back, &original, true),
            "trial {trial} ({case}): not isomorphic"
        );
    }
    Ok("200 modified catalogue models reduce to the original".into())
}

fn c7_induced() -> Outcome {
    let runs: Vec<ConstructionResult> = (0..3)
        .map(|_| construct_case(CaseId::C1_1A, &k4_params()).unwrap())
        .collect();
    let base = &runs[0];
    let psi = base.phi.vertex_map().clone();
    let tables: Vec<String> = runs
        .iter()
        .flat_map(|r| {
            let again = induce_from_vertex_map("phi", &r.gamma_prime, &r.tree, &psi).unwrap();
            [emit_morphism(&r.phi), emit_morphism(&again)]
        })
        .collect();
    ensure!(
        tables.windows(2).all(|w| w[0] == w[1]),
        "edge tables differ between runs"
    );

    // Independent reading of the edge images: the unique tree edge joining
    // the images of the endpoints, aligned when the tails correspond.
    let (s, t) = (base.phi.source(), base.phi.target());
    for (id, e) in s.edges() {
        let (a, b) = (&psi[&e.v0], &psi[&e.v1]);
        let hits: Vec<(&String, bool)> = t
            .edges()
            .filter_map(|(tid, te)| {
                if (&te.v0, &te.v1) == (a, b) {
                    Some((tid, true))
                } else if (&te.v0, &te.v1) == (b, a) {
                    Some((tid, false))
                } else {
                    None
                }
            })
            .collect();
        ensure!(hits.len() == 1, "{id}: {} candidate images", hits.len());
        let (tid, aligned) = hits[0];
        let expected = EdgeImage::Onto {
            edge: tid.clone(),
            aligned,
        };
        ensure!(
            base.phi.edge_map()[id] == expected,
            "{id}: image {:?}",
            base.phi.edge_map()[id]
        );
        let ratio = t.lengths()[tid] / s.lengths()[id];
        ensure!(
            base.phi.slope(id) == Ok(ratio),
            "{id}: slope {:?} vs {ratio}",
            base.phi.slope(id)
        );
    }
    Ok(format!(
        "{} edge images identical across runs, slopes are length ratios",
        s.edge_count()
    ))
}

fn c8_bound() -> Outcome {
    let b = tgon_upper_bound(3);
    ensure!(b == 3, "bound is {b}");
    let (results, _, _) = sweep();
    let max = results.iter().filter_map(|r| r.certificate.degree).max();
    ensure!(max == Some(3), "max certified degree {max:?}");
    Ok("ceil(3/2) + 1 = 3 and every catalogue instance has a degree-3 certificate".into())
}

fn round_trip_model(m: &Model) -> Result<(), String> {
    let text = emit_model(m);
    let back = parse_model(&text).map_err(|e| e.to_string())?;
    ensure!(&back == m, "{} changed on parse", m.name());
    ensure!(emit_model(&back) == text, "{} changed on re-emit", m.name());
    Ok(())
}

fn c9_serialization() -> Outcome {
    let mut count = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for e in catalogue() {
        round_trip_model(&e.template.shape())?;
        round_trip_model(
            &e.template
                .instantiate(&random_params(e.case, &mut rng))
                .unwrap(),
        )?;
        count += 2;
    }
    let (results, _, _) = sweep();
    for res in results {
        for m in [&res.refined, &res.gamma_prime, &res.tree] {
            round_trip_model(m)?;
        }
        let text = emit_morphism(&res.phi);
        let s = parse_model(&emit_model(&res.gamma_prime)).unwrap();
        let t = parse_model(&emit_model(&res.tree)).unwrap();
        let back = parse_morphism(&text, &s, &t).map_err(|e| e.to_string())?;
        ensure!(
            back == res.phi,
            "{} {}: morphism changed",
            res.case,
            res.params
        );
        ensure!(
            emit_morphism(&back) == text,
            "{} {}: morphism re-emit differs",
            res.case,
            res.params
        );
        count += 4;
    }
    Ok(format!("{count} files round trip byte for byte"))
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("C1_1A end-to-end", c1_end_to_end),
        ("catalogue sweep", c2_sweep),
        ("degree well-defined", c3_degree),
        ("hyperelliptic boundary", c4_boundary),
        ("folding fails RH", c5_folding),
        ("equivalence round trips", c6_equivalence),
        ("induced map determinism", c7_induced),
        ("upper bound", c8_bound),
        ("serialization", c9_serialization),
    ];
    let mut passed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => {
                passed += 1;
                println!("acceptance {}: PASS {name}: {detail}", i + 1);
            }
            Err(why) => println!("acceptance {}: FAIL {name}: {why}", i + 1),
        }
    }
    println!("acceptance: {passed}/{} passed", criteria.len());
    if passed < criteria.len() {
        std::process::exit(1);
    }
}
