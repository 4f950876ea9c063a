// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Per-case data for the degree-3 constructions.
//!
//! Each blueprint lists the refined model (the template with some edges
//! subdivided), the trees grafted onto it, the target tree and the vertex
//! map onto the tree. Edge maps are not listed; they are induced from the
//! vertex map. Names follow the usual drawings: `p` stands for a prime, so
//! `v6p` is v6' and `x3pp` is x3''. Vertices named `x..` only exist on
//! grafted trees.

use std::collections::BTreeMap;

use crate::rational::Rational;

use super::{CaseId, Param, ParamSet};

pub(super) type Seg = (&'static str, &'static str, Rational);

#[derive(Debug, Clone, Default)]
pub(super) struct Blueprint {
    pub refined: Vec<Seg>,
    /// `(attach vertex, tree edges)`.
    pub grafts: Vec<(&'static str, Vec<Seg>)>,
    pub tree: Vec<Seg>,
    pub psi: Vec<(&'static str, &'static str)>,
}

impl Blueprint {
    fn fiber(&mut self, w: &'static str, vs: &[&'static str]) {
        for v in vs {
            self.psi.push((v, w));
        }
    }

    /// Contracts zero-length edges everywhere. Each merged class keeps the
    /// name that was declared first; grafts that vanish entirely are
    /// dropped.
    pub fn contract_zero_edges(self) -> Blueprint {
        let mut order: Vec<&'static str> = Vec::new();
        let mut note = |v: &'static str| {
            if !order.contains(&v) {
                order.push(v);
            }
        };
        for (a, b, _) in self
            .refined
            .iter()
            .chain(self.grafts.iter().flat_map(|(_, g)| g.iter()))
            .chain(self.tree.iter())
        {
            note(a);
            note(b);
        }
        let mut rep: BTreeMap<&'static str, &'static str> =
            order.iter().map(|v| (*v, *v)).collect();
        fn find(rep: &BTreeMap<&'static str, &'static str>, mut v: &'static str) -> &'static str {
            while rep[v] != v {
                v = rep[v];
            }
            v
        }
        let rank = |v: &str| order.iter().position(|x| *x == v).unwrap();
        let zero_edges = self
            .refined
            .iter()
            .chain(self.grafts.iter().flat_map(|(_, g)| g.iter()))
            .chain(self.tree.iter())
            .filter(|(_, _, l)| l.is_zero());
        for (a, b, _) in zero_edges {
            let (ra, rb) = (find(&rep, a), find(&rep, b));
            if ra != rb {
                let (keep, drop) = if rank(ra) < rank(rb) {
                    (ra, rb)
                } else {
                    (rb, ra)
                };
                rep.insert(drop, keep);
            }
        }
        let map_segs = |segs: &[Seg]| -> Vec<Seg> {
            segs.iter()
                .filter(|(_, _, l)| !l.is_zero())
                .map(|(a, b, l)| (find(&rep, a), find(&rep, b), *l))
                .collect()
        };
        let mut psi: Vec<(&'static str, &'static str)> = Vec::new();
        for (v, w) in &self.psi {
            let pair = (find(&rep, v), find(&rep, w));
            match psi.iter().find(|(x, _)| *x == pair.0) {
                Some(existing) => assert_eq!(existing.1, pair.1, "merged vertices disagree"),
                None => psi.push(pair),
            }
        }
        Blueprint {
            refined: map_segs(&self.refined),
            grafts: self
                .grafts
                .iter()
                .map(|(at, g)| (find(&rep, at), map_segs(g)))
                .filter(|(_, g)| !g.is_empty())
                .collect(),
            tree: map_segs(&self.tree),
            psi,
        }
    }
}

pub(super) fn blueprint(case: CaseId, p: &ParamSet) -> Blueprint {
    let v = |x: Param| p.get(x).unwrap_or_default();
    let (a, b, c, d, e, f) = (
        v(Param::A),
        v(Param::B),
        v(Param::C),
        v(Param::D),
        v(Param::E),
        v(Param::F),
    );
    let h = |x: Rational| x.half();
    let two = Rational::from_integer(2);
    let mut bp = Blueprint::default();
    match case {
        CaseId::C1_1A | CaseId::C1_1B | CaseId::C1_1C => {
            // Base vertex v1 with a >= b >= c on e1, e2, e3. In the two
            // degenerate subcases the (a-c)/2 or (b-c)/2 pieces vanish.
            let (ac, bc) = (h(a - c), h(b - c));
            bp.refined = vec![
                ("v1", "v6", ac),
                ("v6", "v5", ac),
                ("v5", "v2", c),
                ("v1", "v8", bc),
                ("v8", "v7", bc),
                ("v7", "v3", c),
                ("v4", "v1", c),
                ("v4", "v9", h(d)),
                ("v9", "v3", h(d)),
                ("v2", "v10", h(e)),
                ("v10", "v3", h(e)),
                ("v2", "v11", h(f)),
                ("v11", "v4", h(f)),
            ];
            bp.grafts = vec![
                ("v2", vec![("v2", "v9p", h(d))]),
                ("v3", vec![("v3", "v11p", h(f))]),
                ("v4", vec![("v4", "v10p", h(e))]),
                ("v5", vec![("v5", "v8p", bc)]),
                ("v7", vec![("v7", "v6p", ac)]),
            ];
            bp.tree = vec![
                ("w1", "w0", c),
                ("w1", "w6", ac),
                ("w1", "w8", bc),
                ("w0", "w9", h(d)),
                ("w0", "w10", h(e)),
                ("w0", "w11", h(f)),
            ];
            bp.fiber("w1", &["v1", "v5", "v7"]);
            bp.fiber("w0", &["v2", "v3", "v4"]);
            bp.fiber("w6", &["v6", "v6p"]);
            bp.fiber("w8", &["v8", "v8p"]);
            bp.fiber("w9", &["v9", "v9p"]);
            bp.fiber("w10", &["v10", "v10p"]);
            bp.fiber("w11", &["v11", "v11p"]);
            if case != CaseId::C1_1A {
                bp = bp.contract_zero_edges();
            }
        }
        CaseId::C1_2 => {
            let ba = h(b - a);
            bp.refined = vec![
                ("v1", "v2", a),
                ("v4", "v5", a),
                ("v5", "v6", ba),
                ("v6", "v3", ba),
                ("v1", "v7", h(c)),
                ("v7", "v4", h(c)),
                ("v1", "v8", h(d)),
                ("v8", "v4", h(d)),
                ("v2", "v9", h(e)),
                ("v9", "v3", h(e)),
                ("v2", "v10", h(f)),
                ("v10", "v3", h(f)),
            ];
            bp.grafts = vec![
                ("v2", vec![("v2", "v6p", ba)]),
                (
                    "v3",
                    vec![
                        ("v3", "v11p", a),
                        ("v11p", "v7p", h(c)),
                        ("v11p", "v8p", h(d)),
                    ],
                ),
                ("v5", vec![("v5", "v9p", h(e))]),
                ("v5", vec![("v5", "v10p", h(f))]),
            ];
            bp.tree = vec![
                ("w1", "w2", a),
                ("w2", "w6", ba),
                ("w1", "w7", h(c)),
                ("w1", "w8", h(d)),
                ("w2", "w9", h(e)),
                ("w2", "w10", h(f)),
            ];
            bp.fiber("w1", &["v1", "v4", "v11p"]);
            bp.fiber("w2", &["v2", "v3", "v5"]);
            bp.fiber("w6", &["v6", "v6p"]);
            bp.fiber("w7", &["v7", "v7p"]);
            bp.fiber("w8", &["v8", "v8p"]);
            bp.fiber("w9", &["v9", "v9p"]);
            bp.fiber("w10", &["v10", "v10p"]);
        }
        CaseId::C1_3 => {
            bp.refined = vec![
                ("v3", "v6", h(b)),
                ("v6", "v4", h(b)),
                ("v4", "v7", h(c)),
                ("v7", "v1", h(c)),
                ("v4", "v8", h(d)),
                ("v8", "v1", h(d)),
                ("v1", "v9", h(e)),
                ("v9", "v3", h(e)),
                ("v1", "v10", h(f)),
                ("v10", "v3", h(f)),
            ];
            bp.grafts = vec![
                ("v4", vec![("v4", "v9p", h(e))]),
                ("v4", vec![("v4", "v10p", h(f))]),
                ("v1", vec![("v1", "v6p", h(b))]),
                ("v3", vec![("v3", "v8p", h(d))]),
                ("v3", vec![("v3", "v7p", h(c))]),
            ];
            bp.tree = vec![
                ("w1", "w6", h(b)),
                ("w1", "w7", h(c)),
                ("w1", "w8", h(d)),
                ("w1", "w9", h(e)),
                ("w1", "w10", h(f)),
            ];
            bp.fiber("w1", &["v1", "v3", "v4"]);
            bp.fiber("w6", &["v6", "v6p"]);
            bp.fiber("w7", &["v7", "v7p"]);
            bp.fiber("w8", &["v8", "v8p"]);
            bp.fiber("w9", &["v9", "v9p"]);
            bp.fiber("w10", &["v10", "v10p"]);
        }
        CaseId::C1_4 => {
            let ba = h(b - a);
            bp.refined = vec![
                ("v4", "v5", a),
                ("v5", "v6", ba),
                ("v6", "v2", ba),
                ("v1", "v2", a),
                ("v4", "v7", h(c)),
                ("v7", "v1", h(c)),
                ("v4", "v8", h(d)),
                ("v8", "v1", h(d)),
                ("v2", "v9", h(e)),
                ("v9", "v2", h(e)),
            ];
            bp.grafts = vec![
                (
                    "v2",
                    vec![("v2", "v11", a), ("v11", "v7p", h(c)), ("v11", "v8p", h(d))],
                ),
                ("v5", vec![("v5", "v9p", h(e))]),
                ("v2", vec![("v2", "v6p", ba)]),
            ];
            bp.tree = vec![
                ("w1", "w2", a),
                ("w2", "w6", ba),
                ("w2", "w9", h(e)),
                ("w1", "w7", h(c)),
                ("w1", "w8", h(d)),
            ];
            bp.fiber("w1", &["v4", "v1", "v11"]);
            bp.fiber("w2", &["v5", "v2"]);
            bp.fiber("w6", &["v6", "v6p"]);
            bp.fiber("w7", &["v7", "v7p"]);
            bp.fiber("w8", &["v8", "v8p"]);
            bp.fiber("w9", &["v9", "v9p"]);
        }
        CaseId::C1_5 => {
            let ba = h(b - a);
            bp.refined = vec![
                ("v2", "v1", a),
                ("v1", "v5", a),
                ("v5", "v6", ba),
                ("v6", "v2", ba),
                ("v1", "v7", h(c)),
                ("v7", "v1", h(c)),
                ("v2", "v9", h(e)),
                ("v9", "v2", h(e)),
            ];
            bp.grafts = vec![
                ("v2", vec![("v2", "v11", a), ("v11", "v7p", h(c))]),
                ("v5", vec![("v5", "v9p", h(e))]),
                ("v2", vec![("v2", "v6p", ba)]),
            ];
            bp.tree = vec![
                ("w1", "w2", a),
                ("w2", "w6", ba),
                ("w2", "w9", h(e)),
                ("w1", "w7", h(c)),
            ];
            bp.fiber("w1", &["v1", "v11"]);
            bp.fiber("w2", &["v5", "v2"]);
            bp.fiber("w6", &["v6", "v6p"]);
            bp.fiber("w7", &["v7", "v7p"]);
            bp.fiber("w9", &["v9", "v9p"]);
        }
        CaseId::C1_6 => {
            // v3 carries the loop e; the three parallel edges are halved.
            bp.refined = vec![
                ("v1", "v3p", h(d)),
                ("v3p", "v3", h(d)),
                ("v1", "v3pp", h(c)),
                ("v3pp", "v3", h(c)),
                ("v1", "v2p", h(b)),
                ("v2p", "v3", h(b)),
                ("v3", "v4p", h(e)),
                ("v4p", "v3", h(e)),
            ];
            bp.grafts = vec![
                ("v1", vec![("v1", "x4p", h(e))]),
                ("v3", vec![("v3", "x3p", h(d))]),
                ("v3", vec![("v3", "x3pp", h(c))]),
                ("v3", vec![("v3", "x2p", h(b))]),
            ];
            bp.tree = vec![
                ("w1", "w3p", h(d)),
                ("w1", "w3pp", h(c)),
                ("w1", "w2p", h(b)),
                ("w1", "w4p", h(e)),
            ];
            bp.fiber("w1", &["v1", "v3"]);
            bp.fiber("w3p", &["v3p", "x3p"]);
            bp.fiber("w3pp", &["v3pp", "x3pp"]);
            bp.fiber("w2p", &["v2p", "x2p"]);
            bp.fiber("w4p", &["v4p", "x4p"]);
        }
        CaseId::C2_1 => {
            let ba = h(b - a);
            bp.refined = vec![
                ("v1", "v2", a),
                ("v3", "v2pp", a),
                ("v2pp", "v2p", ba),
                ("v2p", "v2", ba),
                ("v3", "v3p", h(d)),
                ("v3p", "v1", h(d)),
                ("v3", "v3pp", h(c)),
                ("v3pp", "v1", h(c)),
                ("v2", "v4", f),
                ("v4", "v4p", h(e)),
                ("v4p", "v4", h(e)),
            ];
            bp.grafts = vec![
                ("v2pp", vec![("v2pp", "x4", f), ("x4", "x4p", h(e))]),
                (
                    "v4",
                    vec![
                        ("v4", "x2", f),
                        ("x2", "x1", a),
                        ("x2", "x2p", ba),
                        ("x1", "x3p", h(d)),
                        ("x1", "x3pp", h(c)),
                    ],
                ),
            ];
            bp.tree = vec![
                ("w1", "w2", a),
                ("w2", "w4", f),
                ("w4", "w4p", h(e)),
                ("w2", "w2p", ba),
                ("w1", "w3p", h(d)),
                ("w1", "w3pp", h(c)),
            ];
            bp.fiber("w1", &["v1", "v3", "x1"]);
            bp.fiber("w2", &["v2", "v2pp", "x2"]);
            bp.fiber("w4", &["v4", "x4"]);
            bp.fiber("w4p", &["v4p", "x4p"]);
            bp.fiber("w2p", &["v2p", "x2p"]);
            bp.fiber("w3p", &["v3p", "x3p"]);
            bp.fiber("w3pp", &["v3pp", "x3pp"]);
        }
        CaseId::C2_2 => {
            let ba = h(b - a);
            bp.refined = vec![
                ("v1", "v2", a),
                ("v1", "v2pp", a),
                ("v2pp", "v2p", ba),
                ("v2p", "v2", ba),
                ("v1", "v3pp", h(c)),
                ("v3pp", "v1", h(c)),
                ("v2", "v4", d),
                ("v4", "v4p", h(e)),
                ("v4p", "v4", h(e)),
            ];
            bp.grafts = vec![
                ("v2pp", vec![("v2pp", "x4", d), ("x4", "x4p", h(e))]),
                (
                    "v4",
                    vec![
                        ("v4", "x2", d),
                        ("x2", "x1", a),
                        ("x2", "x2p", ba),
                        ("x1", "x3pp", h(c)),
                    ],
                ),
            ];
            bp.tree = vec![
                ("w1", "w2", a),
                ("w2", "w2p", ba),
                ("w2", "w4", d),
                ("w4", "w4p", h(e)),
                ("w1", "w3pp", h(c)),
            ];
            bp.fiber("w1", &["v1", "x1"]);
            bp.fiber("w2", &["v2", "v2pp", "x2"]);
            bp.fiber("w4", &["v4", "x4"]);
            bp.fiber("w4p", &["v4p", "x4p"]);
            bp.fiber("w2p", &["v2p", "x2p"]);
            bp.fiber("w3pp", &["v3pp", "x3pp"]);
        }
        CaseId::C2_3 => {
            bp.refined = vec![
                ("v3", "v3p", h(d)),
                ("v3p", "v1", h(d)),
                ("v3", "v3pp", h(c)),
                ("v3pp", "v1", h(c)),
                ("v1", "v2p", h(b)),
                ("v2p", "v3", h(b)),
                ("v1", "v4", f),
                ("v4", "v4p", h(e)),
                ("v4p", "v4", h(e)),
            ];
            bp.grafts = vec![
                ("v3", vec![("v3", "x4", f), ("x4", "x4p", h(e))]),
                (
                    "v4",
                    vec![
                        ("v4", "x1", f),
                        ("x1", "x2p", h(b)),
                        ("x1", "x3p", h(d)),
                        ("x1", "x3pp", h(c)),
                    ],
                ),
            ];
            bp.tree = vec![
                ("w1", "w2p", h(b)),
                ("w1", "w3p", h(d)),
                ("w1", "w3pp", h(c)),
                ("w1", "w4", f),
                ("w4", "w4p", h(e)),
            ];
            bp.fiber("w1", &["v3", "v1", "x1"]);
            bp.fiber("w4", &["v4", "x4"]);
            bp.fiber("w4p", &["v4p", "x4p"]);
            bp.fiber("w2p", &["v2p", "x2p"]);
            bp.fiber("w3p", &["v3p", "x3p"]);
            bp.fiber("w3pp", &["v3pp", "x3pp"]);
        }
        CaseId::C3_1 => {
            // The bridge c is covered twice by itself, with slope 2.
            let ba = h(b - a);
            bp.refined = vec![
                ("v3", "v3p", h(f)),
                ("v3p", "v3", h(f)),
                ("v3", "v1", c),
                ("v1", "v2", a),
                ("v1", "v2pp", a),
                ("v2pp", "v2p", ba),
                ("v2p", "v2", ba),
                ("v2", "v4", d),
                ("v4", "v4p", h(e)),
                ("v4p", "v4", h(e)),
            ];
            bp.grafts = vec![
                ("v2pp", vec![("v2pp", "x4", d), ("x4", "x4p", h(e))]),
                (
                    "v4",
                    vec![
                        ("v4", "x2", d),
                        ("x2", "x1", a),
                        ("x1", "x3", two * c),
                        ("x3", "x3p", h(f)),
                        ("x2", "x2p", ba),
                    ],
                ),
            ];
            bp.tree = vec![
                ("w3p", "w3", h(f)),
                ("w3", "w1", two * c),
                ("w1", "w2", a),
                ("w2", "w4", d),
                ("w4", "w4p", h(e)),
                ("w2", "w2p", ba),
            ];
            bp.fiber("w3", &["v3", "x3"]);
            bp.fiber("w1", &["v1", "x1"]);
            bp.fiber("w2", &["v2", "v2pp", "x2"]);
            bp.fiber("w4", &["v4", "x4"]);
            bp.fiber("w3p", &["v3p", "x3p"]);
            bp.fiber("w4p", &["v4p", "x4p"]);
            bp.fiber("w2p", &["v2p", "x2p"]);
        }
        CaseId::C3_2 => {
            bp.refined = vec![
                ("v3", "v3p", h(f)),
                ("v3p", "v3", h(f)),
                ("v3", "v1", c),
                ("v1", "v2p", h(b)),
                ("v2p", "v1", h(b)),
                ("v1", "v4", d),
                ("v4", "v4p", h(e)),
                ("v4p", "v4", h(e)),
            ];
            bp.grafts = vec![
                ("v1", vec![("v1", "x4", d), ("x4", "x4p", h(e))]),
                (
                    "v4",
                    vec![
                        ("v4", "x1", d),
                        ("x1", "x3", two * c),
                        ("x3", "x3p", h(f)),
                        ("x1", "x2p", h(b)),
                    ],
                ),
            ];
            bp.tree = vec![
                ("w3p", "w3", h(f)),
                ("w3", "w1", two * c),
                ("w1", "w4", d),
                ("w4", "w4p", h(e)),
                ("w1", "w2p", h(b)),
            ];
            bp.fiber("w3", &["v3", "x3"]);
            bp.fiber("w1", &["v1", "x1"]);
            bp.fiber("w4", &["v4", "x4"]);
            bp.fiber("w3p", &["v3p", "x3p"]);
            bp.fiber("w2p", &["v2p", "x2p"]);
            bp.fiber("w4p", &["v4p", "x4p"]);
        }
        CaseId::C4 => {
            // Every bridge maps with slope 2 and gets a grafted copy at v1.
            bp.refined = vec![
                ("v2", "v1", a),
                ("v1", "v3", b),
                ("v1", "v4", c),
                ("v2", "v2p", h(d)),
                ("v2p", "v2", h(d)),
                ("v3", "v3p", h(e)),
                ("v3p", "v3", h(e)),
                ("v4", "v4p", h(f)),
                ("v4p", "v4", h(f)),
            ];
            bp.grafts = vec![
                ("v1", vec![("v1", "x2", two * a), ("x2", "x2p", h(d))]),
                ("v1", vec![("v1", "x3", two * b), ("x3", "x3p", h(e))]),
                ("v1", vec![("v1", "x4", two * c), ("x4", "x4p", h(f))]),
            ];
            bp.tree = vec![
                ("w1", "w2", two * a),
                ("w2", "w2p", h(d)),
                ("w1", "w3", two * b),
                ("w3", "w3p", h(e)),
                ("w1", "w4", two * c),
                ("w4", "w4p", h(f)),
            ];
            bp.fiber("w1", &["v1"]);
            bp.fiber("w2", &["v2", "x2"]);
            bp.fiber("w3", &["v3", "x3"]);
            bp.fiber("w4", &["v4", "x4"]);
            bp.fiber("w2p", &["v2p", "x2p"]);
            bp.fiber("w3p", &["v3p", "x3p"]);
            bp.fiber("w4p", &["v4p", "x4p"]);
        }
    }
    bp
}
