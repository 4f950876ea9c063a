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

//! The thirteen genus-3 combinatorial types that carry a certified
//! degree-3 construction, with symbolic edge lengths.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Model, ModelBuilder};
use crate::rational::Rational;

use super::{CaseId, ConstructionError, Param, ParamSet};

/// A combinatorial type whose edges carry length slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Template {
    pub name: &'static str,
    pub vertices: &'static [&'static str],
    /// `(edge id, v0, v1, slot)`.
    pub edges: &'static [(&'static str, &'static str, &'static str, Param)],
}

impl Template {
    pub fn slots(&self) -> Vec<Param> {
        let mut s: Vec<Param> = self.edges.iter().map(|e| e.3).collect();
        s.sort();
        s
    }

    pub fn bridge_count(&self) -> usize {
        self.shape().bridge_count()
    }

    /// The slot carried by edge `e`.
    pub fn slot(&self, e: &str) -> Option<Param> {
        self.edges.iter().find(|x| x.0 == e).map(|x| x.3)
    }

    /// The template with every edge of length 1.
    pub fn shape(&self) -> Model {
        let ones: BTreeMap<Param, Rational> = self
            .slots()
            .into_iter()
            .map(|p| (p, Rational::one()))
            .collect();
        self.build(&ones).expect("templates are valid models")
    }

    /// The template with slot values from `params`.
    pub fn instantiate(&self, params: &ParamSet) -> Result<Model, ConstructionError> {
        params.check_slots(&self.slots())?;
        self.build(params.values())
            .map_err(|e| ConstructionError::ConstraintViolation(e.to_string()))
    }

    fn build(&self, values: &BTreeMap<Param, Rational>) -> Result<Model, crate::graph::GraphError> {
        let mut b = ModelBuilder::new(self.name).vertices(self.vertices.iter().copied());
        for &(id, v0, v1, p) in self.edges {
            b = b.edge(id, v0, v1, values[&p]);
        }
        b.build()
    }
}

/// Side conditions on the slot values of a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    None,
    /// `b > a`; equality is the hyperelliptic boundary.
    BGreaterThanA,
    /// At the base vertex with incident lengths `a, b, c`: `c < b <= a`.
    K4Distinct,
    /// `c = b < a`.
    K4TwoEqual,
    /// `c = b = a`.
    K4AllEqual,
}

/// How a parameter set sits against a [`Constraint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintStatus {
    Satisfied,
    /// On the boundary where the graph is hyperelliptic.
    Degenerate,
    Violated,
}

impl Constraint {
    pub fn status(&self, p: &ParamSet) -> ConstraintStatus {
        use ConstraintStatus::*;
        let get = |x| p.get(x).expect("slot checked before constraint");
        let ok = |b: bool| if b { Satisfied } else { Violated };
        match self {
            Constraint::None => Satisfied,
            Constraint::BGreaterThanA => {
                let (a, b) = (get(Param::A), get(Param::B));
                if b > a {
                    Satisfied
                } else if b == a {
                    Degenerate
                } else {
                    Violated
                }
            }
            Constraint::K4Distinct => {
                let (a, b, c) = (get(Param::A), get(Param::B), get(Param::C));
                ok(c < b && b <= a)
            }
            Constraint::K4TwoEqual => {
                let (a, b, c) = (get(Param::A), get(Param::B), get(Param::C));
                ok(c == b && b < a)
            }
            Constraint::K4AllEqual => {
                let (a, b, c) = (get(Param::A), get(Param::B), get(Param::C));
                ok(c == b && b == a)
            }
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::None => "none",
            Constraint::BGreaterThanA => "b > a",
            Constraint::K4Distinct => "c < b <= a",
            Constraint::K4TwoEqual => "c = b < a",
            Constraint::K4AllEqual => "c = b = a",
        })
    }
}

/// One row of the catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub case: CaseId,
    pub template: &'static Template,
    pub constraint: Constraint,
}

impl CatalogueEntry {
    pub fn slots(&self) -> Vec<Param> {
        self.template.slots()
    }
}

use Param::{A, B, C, D, E, F};

pub static K4: Template = Template {
    name: "k4",
    vertices: &["v1", "v2", "v3", "v4"],
    edges: &[
        ("e1", "v1", "v2", A),
        ("e2", "v1", "v3", B),
        ("e3", "v4", "v1", C),
        ("e4", "v3", "v4", D),
        ("e5", "v2", "v3", E),
        ("e6", "v2", "v4", F),
    ],
};

/// Two pairs of parallel edges joined by two single edges.
pub static TWO_DOUBLE_EDGES: Template = Template {
    name: "two_double_edges",
    vertices: &["v1", "v2", "v3", "v4"],
    edges: &[
        ("v1v2", "v1", "v2", A),
        ("v3v4", "v3", "v4", B),
        ("e1", "v1", "v4", C),
        ("e2", "v1", "v4", D),
        ("e3", "v2", "v3", E),
        ("e4", "v2", "v3", F),
    ],
};

pub static TRIANGLE_TWO_DOUBLE: Template = Template {
    name: "triangle_two_double",
    vertices: &["v1", "v3", "v4"],
    edges: &[
        ("b", "v4", "v3", B),
        ("c", "v4", "v1", C),
        ("d", "v4", "v1", D),
        ("e", "v1", "v3", E),
        ("f", "v1", "v3", F),
    ],
};

pub static TRIANGLE_DOUBLE_LOOP: Template = Template {
    name: "triangle_double_loop",
    vertices: &["v1", "v2", "v4"],
    edges: &[
        ("a", "v1", "v2", A),
        ("b", "v4", "v2", B),
        ("c", "v4", "v1", C),
        ("d", "v4", "v1", D),
        ("e", "v2", "v2", E),
    ],
};

pub static DOUBLE_EDGE_TWO_LOOPS: Template = Template {
    name: "double_edge_two_loops",
    vertices: &["v1", "v2"],
    edges: &[
        ("a", "v1", "v2", A),
        ("b", "v2", "v1", B),
        ("c", "v1", "v1", C),
        ("e", "v2", "v2", E),
    ],
};

pub static TRIPLE_EDGE_LOOP: Template = Template {
    name: "triple_edge_loop",
    vertices: &["v1", "v3"],
    edges: &[
        ("b", "v3", "v1", B),
        ("c", "v1", "v3", C),
        ("d", "v3", "v1", D),
        ("e", "v3", "v3", E),
    ],
};

pub static TRIANGLE_BRIDGE_LOOP: Template = Template {
    name: "triangle_bridge_loop",
    vertices: &["v1", "v2", "v3", "v4"],
    edges: &[
        ("a", "v2", "v1", A),
        ("b", "v3", "v2", B),
        ("c", "v3", "v1", C),
        ("d", "v3", "v1", D),
        ("e", "v4", "v4", E),
        ("f", "v2", "v4", F),
    ],
};

pub static DOUBLE_LOOP_BRIDGE_LOOP: Template = Template {
    name: "double_loop_bridge_loop",
    vertices: &["v1", "v2", "v4"],
    edges: &[
        ("a", "v1", "v2", A),
        ("b", "v2", "v1", B),
        ("c", "v1", "v1", C),
        ("d", "v2", "v4", D),
        ("e", "v4", "v4", E),
    ],
};

pub static THETA_BRIDGE_LOOP: Template = Template {
    name: "theta_bridge_loop",
    vertices: &["v1", "v3", "v4"],
    edges: &[
        ("b", "v1", "v3", B),
        ("c", "v3", "v1", C),
        ("d", "v3", "v1", D),
        ("e", "v4", "v4", E),
        ("f", "v4", "v1", F),
    ],
};

pub static LOOP_BRIDGE_DOUBLE_BRIDGE_LOOP: Template = Template {
    name: "loop_bridge_double_bridge_loop",
    vertices: &["v1", "v2", "v3", "v4"],
    edges: &[
        ("a", "v1", "v2", A),
        ("b", "v2", "v1", B),
        ("c", "v3", "v1", C),
        ("d", "v2", "v4", D),
        ("e", "v4", "v4", E),
        ("f", "v3", "v3", F),
    ],
};

pub static CHAIN_OF_LOOPS: Template = Template {
    name: "chain_of_loops",
    vertices: &["v1", "v3", "v4"],
    edges: &[
        ("b", "v1", "v1", B),
        ("c", "v3", "v1", C),
        ("d", "v1", "v4", D),
        ("e", "v4", "v4", E),
        ("f", "v3", "v3", F),
    ],
};

pub static TRIPOD_OF_LOOPS: Template = Template {
    name: "tripod_of_loops",
    vertices: &["v1", "v2", "v3", "v4"],
    edges: &[
        ("a", "v1", "v2", A),
        ("b", "v3", "v1", B),
        ("c", "v1", "v4", C),
        ("d", "v2", "v2", D),
        ("e", "v3", "v3", E),
        ("f", "v4", "v4", F),
    ],
};

static CATALOGUE: [CatalogueEntry; 14] = [
    CatalogueEntry {
        case: CaseId::C1_1A,
        template: &K4,
        constraint: Constraint::K4Distinct,
    },
    CatalogueEntry {
        case: CaseId::C1_1B,
        template: &K4,
        constraint: Constraint::K4TwoEqual,
    },
    CatalogueEntry {
        case: CaseId::C1_1C,
        template: &K4,
        constraint: Constraint::K4AllEqual,
    },
    CatalogueEntry {
        case: CaseId::C1_2,
        template: &TWO_DOUBLE_EDGES,
        constraint: Constraint::BGreaterThanA,
    },
    CatalogueEntry {
        case: CaseId::C1_3,
        template: &TRIANGLE_TWO_DOUBLE,
        constraint: Constraint::None,
    },
    CatalogueEntry {
        case: CaseId::C1_4,
        template: &TRIANGLE_DOUBLE_LOOP,
        constraint: Constraint::BGreaterThanA,
    },
    CatalogueEntry {
        case: CaseId::C1_5,
        template: &DOUBLE_EDGE_TWO_LOOPS,
        constraint: Constraint::BGreaterThanA,
    },
    CatalogueEntry {
        case: CaseId::C1_6,
        template: &TRIPLE_EDGE_LOOP,
        constraint: Constraint::None,
    },
    CatalogueEntry {
        case: CaseId::C2_1,
        template: &TRIANGLE_BRIDGE_LOOP,
        constraint: Constraint::BGreaterThanA,
    },
    CatalogueEntry {
        case: CaseId::C2_2,
        template: &DOUBLE_LOOP_BRIDGE_LOOP,
        constraint: Constraint::BGreaterThanA,
    },
    CatalogueEntry {
        case: CaseId::C2_3,
        template: &THETA_BRIDGE_LOOP,
        constraint: Constraint::None,
    },
    CatalogueEntry {
        case: CaseId::C3_1,
        template: &LOOP_BRIDGE_DOUBLE_BRIDGE_LOOP,
        constraint: Constraint::BGreaterThanA,
    },
    CatalogueEntry {
        case: CaseId::C3_2,
        template: &CHAIN_OF_LOOPS,
        constraint: Constraint::None,
    },
    CatalogueEntry {
        case: CaseId::C4,
        template: &TRIPOD_OF_LOOPS,
        constraint: Constraint::None,
    },
];

/// All fourteen cases in order. The three K4 cases share one template and
/// differ in their constraint.
pub fn catalogue() -> &'static [CatalogueEntry] {
    &CATALOGUE
}

pub fn entry(case: CaseId) -> &'static CatalogueEntry {
    CATALOGUE
        .iter()
        .find(|e| e.case == case)
        .expect("every case has an entry")
}
