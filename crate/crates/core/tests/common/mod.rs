#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::sample::Index;

use tgon::graph::{Model, ModelBuilder, PointRef, VertexId};
use tgon::rational::Rational;

pub fn r(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn q(p: i128, d: i128) -> Rational {
    Rational::new(p, d)
}

/// The K4 with e1 = v1v2, e2 = v1v3, e3 = v4v1, e4 = v3v4, e5 = v2v3,
/// e6 = v2v4 and the given lengths.
pub fn k4(lens: [i128; 6]) -> Model {
    ModelBuilder::new("k4")
        .vertices(["v1", "v2", "v3", "v4"])
        .edge("e1", "v1", "v2", r(lens[0]))
        .edge("e2", "v1", "v3", r(lens[1]))
        .edge("e3", "v4", "v1", r(lens[2]))
        .edge("e4", "v3", "v4", r(lens[3]))
        .edge("e5", "v2", "v3", r(lens[4]))
        .edge("e6", "v2", "v4", r(lens[5]))
        .build()
        .unwrap()
}

fn length() -> impl Strategy<Value = Rational> {
    (1i128..=16, 1i128..=8).prop_map(|(p, d)| Rational::new(p, d))
}

/// Random connected multigraphs with up to 6 vertices: a random spanning
/// tree plus up to 5 extra edges, which may be loops or parallel edges.
pub fn arb_model() -> impl Strategy<Value = Model> {
    (1usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec((any::<Index>(), length(), any::<bool>()), n - 1),
                proptest::collection::vec((any::<Index>(), any::<Index>(), length()), 0..=5),
            )
        })
        .prop_map(|(n, tree, extra)| {
            let name = |i: usize| format!("u{i}");
            let mut b = ModelBuilder::new("rand").vertices((0..n).map(name));
            for (i, (parent, len, flip)) in tree.into_iter().enumerate() {
                let child = i + 1;
                let p = parent.index(child);
                let (x, y) = if flip { (child, p) } else { (p, child) };
                b = b.edge(format!("t{child}"), name(x), name(y), len);
            }
            for (k, (x, y, len)) in extra.into_iter().enumerate() {
                b = b.edge(format!("x{k}"), name(x.index(n)), name(y.index(n)), len);
            }
            b.build().unwrap()
        })
}

/// Models of genus at least 1.
pub fn arb_cyclic_model() -> impl Strategy<Value = Model> {
    arb_model().prop_filter("genus >= 1", |m| m.genus() >= 1)
}

/// A random point of `m`: a vertex, or an interior point of an edge at a
/// fraction `k/8` of its length.
pub fn arb_point(m: &Model) -> impl Strategy<Value = PointRef> {
    let vertices: Vec<VertexId> = m.vertices().cloned().collect();
    let edges: Vec<(String, Rational)> = m.lengths().iter().map(|(e, l)| (e.clone(), *l)).collect();
    (any::<Index>(), 0i128..8, any::<bool>()).prop_map(move |(i, k, on_vertex)| {
        if on_vertex || edges.is_empty() || k == 0 {
            PointRef::Vertex(vertices[i.index(vertices.len())].clone())
        } else {
            let (e, l) = &edges[i.index(edges.len())];
            PointRef::interior(e.clone(), *l * Rational::new(k, 8))
        }
    })
}

/// Shortest distance between two vertices by enumerating every simple path.
pub fn brute_force_distance(m: &Model, a: &str, b: &str) -> Rational {
    fn walk(
        m: &Model,
        at: &str,
        goal: &str,
        seen: &mut BTreeSet<String>,
        acc: Rational,
        best: &mut Option<Rational>,
    ) {
        if at == goal {
            if best.is_none_or(|b| acc < b) {
                *best = Some(acc);
            }
            return;
        }
        for (id, e) in m.edges() {
            let next = if e.v0 == at {
                &e.v1
            } else if e.v1 == at {
                &e.v0
            } else {
                continue;
            };
            if seen.contains(next) {
                continue;
            }
            seen.insert(next.clone());
            walk(m, next, goal, seen, acc + m.lengths()[id], best);
            seen.remove(next);
        }
    }
    let mut best = None;
    let mut seen = BTreeSet::from([a.to_string()]);
    walk(m, a, b, &mut seen, Rational::zero(), &mut best);
    best.expect("models are connected")
}

/// Multigraph isomorphism by trying every vertex permutation.
pub fn brute_force_isomorphic(m1: &Model, m2: &Model, respect_lengths: bool) -> bool {
    let v1: Vec<&VertexId> = m1.vertices().collect();
    let v2: Vec<&VertexId> = m2.vertices().collect();
    if v1.len() != v2.len() || m1.edge_count() != m2.edge_count() {
        return false;
    }
    let multiset = |m: &Model, map: &dyn Fn(&str) -> String| {
        let mut out: Vec<(String, String, Rational)> = m
            .edges()
            .map(|(id, e)| {
                let (a, b) = (map(&e.v0), map(&e.v1));
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                let l = if respect_lengths {
                    m.lengths()[id]
                } else {
                    Rational::one()
                };
                (a, b, l)
            })
            .collect();
        out.sort();
        out
    };
    let target = multiset(m2, &|v| v.to_string());
    let mut perm: Vec<usize> = (0..v2.len()).collect();
    loop {
        let map: BTreeMap<&str, &str> = v1
            .iter()
            .zip(perm.iter())
            .map(|(a, &j)| (a.as_str(), v2[j].as_str()))
            .collect();
        if multiset(m1, &|v| map[v].to_string()) == target {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Renames vertices with a prefix and reverses the vertex order, so that
/// sorted iteration differs from the original.
pub fn relabel(m: &Model, seed: u64) -> Model {
    let mut vs: Vec<&VertexId> = m.vertices().collect();
    let k = (seed as usize) % vs.len().max(1);
    vs.rotate_left(k);
    let vmap: BTreeMap<String, String> = vs
        .iter()
        .enumerate()
        .map(|(i, v)| ((*v).clone(), format!("z{}", vs.len() - i)))
        .collect();
    let emap: BTreeMap<String, String> = m
        .edges()
        .map(|(id, _)| (id.clone(), format!("f_{id}")))
        .collect();
    m.relabel(&vmap, &emap).unwrap()
}

/// Components of `m` without edge `skip`, by union-find.
pub fn components_without(m: &Model, skip: &str) -> usize {
    let vs: Vec<&VertexId> = m.vertices().collect();
    let idx: BTreeMap<&str, usize> = vs
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let mut parent: Vec<usize> = (0..vs.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = find(p, p[x]);
            p[x] = r;
            r
        }
    }
    for (id, e) in m.edges() {
        if id == skip {
            continue;
        }
        let (a, b) = (
            find(&mut parent, idx[e.v0.as_str()]),
            find(&mut parent, idx[e.v1.as_str()]),
        );
        parent[a] = b;
    }
    (0..vs.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Random metric trees on 2 to 5 vertices `g0, g1, ...`. The last vertex
/// never has children, so it is always a leaf and serves as attach point.
pub fn arb_tree() -> impl Strategy<Value = (Model, VertexId)> {
    (2usize..=5)
        .prop_flat_map(|n| proptest::collection::vec((any::<Index>(), length()), n - 1))
        .prop_map(|links| {
            let n = links.len() + 1;
            let name = |i: usize| format!("g{i}");
            let mut b = ModelBuilder::new("tree").vertices((0..n).map(name));
            for (i, (parent, len)) in links.into_iter().enumerate() {
                let child = i + 1;
                b = b.edge(
                    format!("h{child}"),
                    name(parent.index(child)),
                    name(child),
                    len,
                );
            }
            (b.build().unwrap(), name(n - 1))
        })
}

/// A sequence of random grafts and subdivisions applied to `m`.
pub fn arb_modification(m: Model) -> impl Strategy<Value = Model> {
    proptest::collection::vec((any::<bool>(), any::<Index>(), 0i128..8, arb_tree()), 1..=4)
        .prop_map(move |steps| {
            let mut cur = m.clone();
            for (graft, i, k, (tree, leaf)) in steps {
                let edges: Vec<(String, Rational)> =
                    cur.lengths().iter().map(|(e, l)| (e.clone(), *l)).collect();
                let (e, l) = &edges[i.index(edges.len())];
                if graft {
                    let base_point = if k == 0 {
                        PointRef::Vertex(cur.edge(e).unwrap().v0.clone())
                    } else {
                        PointRef::interior(e.clone(), *l * Rational::new(k, 8))
                    };
                    let spec = tgon::modification::GraftSpec {
                        base_point,
                        tree,
                        attach_leaf: leaf,
                    };
                    cur = tgon::modification::graft_tree(&cur, &spec).unwrap();
                } else {
                    let k = k.max(1);
                    cur = cur.subdivide_edge(e, *l * Rational::new(k, 8)).unwrap();
                }
            }
            cur
        })
}
