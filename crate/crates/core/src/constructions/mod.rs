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

//! Degree-3 tropical morphisms from genus-3 metric graphs to trees.
//!
//! Every genus-3 metric graph that is not hyperelliptic falls into one of
//! fourteen cases ([`CaseId`]). For each case [`construct_case`] builds a
//! tropical modification of the input, a metric tree, and a vertex map
//! whose induced morphism is harmonic of degree 3 and satisfies the local
//! Riemann-Hurwitz inequality. The result is verified before it is
//! returned; a construction that fails its own checks is an error, never a
//! silent success.

mod blueprints;
mod catalogue;
mod classify;
mod folding;
mod sampling;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use catalogue::{
    catalogue, entry, CatalogueEntry, Constraint, ConstraintStatus, Template, CHAIN_OF_LOOPS,
    DOUBLE_EDGE_TWO_LOOPS, DOUBLE_LOOP_BRIDGE_LOOP, K4, LOOP_BRIDGE_DOUBLE_BRIDGE_LOOP,
    THETA_BRIDGE_LOOP, TRIANGLE_BRIDGE_LOOP, TRIANGLE_DOUBLE_LOOP, TRIANGLE_TWO_DOUBLE,
    TRIPLE_EDGE_LOOP, TRIPOD_OF_LOOPS, TWO_DOUBLE_EDGES,
};
pub use classify::{classify, Classification};
pub use folding::tripod_folding;
pub use sampling::{random_params, MAX_TERM};

use crate::graph::{fresh_id, graph_isomorphic, Model, ModelBuilder, PointRef, VertexId};
use crate::modification::{
    canonical_representative, graft_tree_mapped, tropically_equivalent, GraftSpec,
};
use crate::morphism::{induce_from_vertex_map, MorphismSpec, TropicalCertificate};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("NotGenus3: model has genus {0}")]
    NotGenus3(usize),
    #[error("HyperellipticDegenerate: every matching parameter assignment has a = b")]
    HyperellipticDegenerate,
    #[error("Unrecognized: {0}")]
    Unrecognized(String),
    #[error("ConstraintViolation: {0}")]
    ConstraintViolation(String),
    #[error("InternalVerificationFailure: {0}")]
    InternalVerificationFailure(String),
}

/// The fourteen cases, grouped by the number of bridges (0 to 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    C1_1A,
    C1_1B,
    C1_1C,
    C1_2,
    C1_3,
    C1_4,
    C1_5,
    C1_6,
    C2_1,
    C2_2,
    C2_3,
    C3_1,
    C3_2,
    C4,
}

impl CaseId {
    pub const ALL: [CaseId; 14] = [
        CaseId::C1_1A,
        CaseId::C1_1B,
        CaseId::C1_1C,
        CaseId::C1_2,
        CaseId::C1_3,
        CaseId::C1_4,
        CaseId::C1_5,
        CaseId::C1_6,
        CaseId::C2_1,
        CaseId::C2_2,
        CaseId::C2_3,
        CaseId::C3_1,
        CaseId::C3_2,
        CaseId::C4,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseId::C1_1A => "C1_1A",
            CaseId::C1_1B => "C1_1B",
            CaseId::C1_1C => "C1_1C",
            CaseId::C1_2 => "C1_2",
            CaseId::C1_3 => "C1_3",
            CaseId::C1_4 => "C1_4",
            CaseId::C1_5 => "C1_5",
            CaseId::C1_6 => "C1_6",
            CaseId::C2_1 => "C2_1",
            CaseId::C2_2 => "C2_2",
            CaseId::C2_3 => "C2_3",
            CaseId::C3_1 => "C3_1",
            CaseId::C3_2 => "C3_2",
            CaseId::C4 => "C4",
        }
    }

    pub fn bridge_count(&self) -> usize {
        entry(*self).template.bridge_count()
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown case {s:?}"))
    }
}

/// A length slot of a template.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Param {
    pub const ALL: [Param; 6] = [Param::A, Param::B, Param::C, Param::D, Param::E, Param::F];

    pub fn letter(&self) -> char {
        match self {
            Param::A => 'a',
            Param::B => 'b',
            Param::C => 'c',
            Param::D => 'd',
            Param::E => 'e',
            Param::F => 'f',
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Values for the length slots of one template.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ParamSet(BTreeMap<Param, Rational>);

impl ParamSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Param, Rational)>) -> Self {
        ParamSet(pairs.into_iter().collect())
    }

    /// Integer values in slot order `a, b, ...`, skipping nothing: the
    /// slice must cover exactly the slots of `case`.
    pub fn for_case(case: CaseId, values: &[i128]) -> Result<Self, ConstructionError> {
        let slots = entry(case).slots();
        if slots.len() != values.len() {
            return Err(ConstructionError::ConstraintViolation(format!(
                "{case} takes {} parameters, got {}",
                slots.len(),
                values.len()
            )));
        }
        Ok(Self::from_pairs(
            slots
                .into_iter()
                .zip(values.iter().map(|v| Rational::from_integer(*v))),
        ))
    }

    pub fn with(mut self, p: Param, value: Rational) -> Self {
        self.0.insert(p, value);
        self
    }

    pub fn get(&self, p: Param) -> Option<Rational> {
        self.0.get(&p).copied()
    }

    pub fn values(&self) -> &BTreeMap<Param, Rational> {
        &self.0
    }

    /// Values in slot order.
    pub fn tuple(&self) -> Vec<Rational> {
        self.0.values().copied().collect()
    }

    fn check_slots(&self, slots: &[Param]) -> Result<(), ConstructionError> {
        let have: Vec<Param> = self.0.keys().copied().collect();
        if have != slots {
            let fmt = |ps: &[Param]| ps.iter().map(|p| p.letter()).collect::<String>();
            return Err(ConstructionError::ConstraintViolation(format!(
                "expected slots {}, got {}",
                fmt(slots),
                fmt(&have)
            )));
        }
        if let Some((p, v)) = self.0.iter().find(|(_, v)| !v.is_positive()) {
            return Err(ConstructionError::ConstraintViolation(format!(
                "{p} = {v} is not positive"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(p, v)| format!("{p}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A certified degree-3 tropical morphism onto a tree.
#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub case: CaseId,
    pub params: ParamSet,
    /// The template with the subdivisions used by the construction, before
    /// any tree is grafted.
    pub refined: Model,
    /// The refined model with all trees grafted on.
    pub gamma_prime: Model,
    pub tree: Model,
    pub phi: MorphismSpec,
    pub certificate: TropicalCertificate,
}

/// Builds and verifies the degree-3 morphism for `case` with the given
/// parameters.
///
/// Fails with [`ConstructionError::HyperellipticDegenerate`] when the
/// parameters sit on the `a = b` boundary, and with
/// [`ConstructionError::InternalVerificationFailure`] if the morphism is
/// not tropical of degree 3 onto a tree or the modification does not
/// reduce back to the template.
pub fn construct_case(
    case: CaseId,
    params: &ParamSet,
) -> Result<ConstructionResult, ConstructionError> {
    let entry = entry(case);
    let template = entry.template.instantiate(params)?;
    match entry.constraint.status(params) {
        ConstraintStatus::Satisfied => {}
        ConstraintStatus::Degenerate => return Err(ConstructionError::HyperellipticDegenerate),
        ConstraintStatus::Violated => {
            return Err(ConstructionError::ConstraintViolation(format!(
                "{case} requires {}, got {params}",
                entry.constraint
            )))
        }
    }
    let bp = blueprints::blueprint(case, params);
    let fail =
        |what: String| ConstructionError::InternalVerificationFailure(format!("{case}: {what}"));

    let refined = model_from_segments("refined", &bp.refined).map_err(&fail)?;
    let mut gamma_prime = refined.clone().with_name("gamma_prime").unwrap();
    let mut used_edges: Vec<String> = refined.edges().map(|(id, _)| id.clone()).collect();
    for (at, segs) in &bp.grafts {
        let tree = segments_builder("graft", segs, &mut used_edges)
            .build()
            .map_err(|e| fail(e.to_string()))?;
        let spec = GraftSpec {
            base_point: PointRef::vertex(*at),
            tree,
            attach_leaf: at.to_string(),
        };
        let (next, vmap) =
            graft_tree_mapped(&gamma_prime, &spec).map_err(|e| fail(e.to_string()))?;
        if vmap.iter().any(|(k, v)| k != v) {
            return Err(fail(format!("graft at {at} clashes with existing names")));
        }
        gamma_prime = next;
    }
    let tree = model_from_segments("tree", &bp.tree).map_err(&fail)?;
    let psi: BTreeMap<VertexId, VertexId> = bp
        .psi
        .iter()
        .map(|(v, w)| (v.to_string(), w.to_string()))
        .collect();
    let phi = induce_from_vertex_map("phi", &gamma_prime, &tree, &psi)
        .map_err(|e| fail(e.to_string()))?;

    let certificate = phi.is_tropical_morphism(true);
    if !certificate.is_tropical() {
        return Err(fail(certificate.failures().join("; ")));
    }
    if certificate.degree != Some(3) {
        return Err(fail(format!("degree {:?}, expected 3", certificate.degree)));
    }
    let reduced = canonical_representative(&gamma_prime).map_err(|e| fail(e.to_string()))?;
    if !graph_isomorphic(&reduced, &template, true) {
        return Err(fail("modification does not reduce to the template".into()));
    }
    Ok(ConstructionResult {
        case,
        params: params.clone(),
        refined,
        gamma_prime,
        tree,
        phi,
        certificate,
    })
}

/// Classifies `m` and builds its certified degree-3 morphism. The source
/// of the result uses the catalogue's vertex names, and is checked to be
/// tropically equivalent to `m`.
pub fn construct(m: &Model) -> Result<ConstructionResult, ConstructionError> {
    let class = classify(m)?;
    let result = construct_case(class.case, &class.params)?;
    if !tropically_equivalent(&result.gamma_prime, m) {
        return Err(ConstructionError::InternalVerificationFailure(
            "result is not tropically equivalent to the input".into(),
        ));
    }
    Ok(result)
}

/// Upper bound `ceil(g / 2) + 1` on the tropical gonality of a metric graph
/// of genus `g`.
pub fn tgon_upper_bound(g: usize) -> usize {
    g.div_ceil(2) + 1
}

/// Edges named `v0_v1`, with a numeric suffix for parallel copies.
fn segments_builder(name: &str, segs: &[blueprints::Seg], used: &mut Vec<String>) -> ModelBuilder {
    let mut vertices: Vec<&str> = Vec::new();
    for (a, b, _) in segs {
        for v in [a, b] {
            if !vertices.contains(v) {
                vertices.push(v);
            }
        }
    }
    let mut builder = ModelBuilder::new(name).vertices(vertices);
    for (a, b, len) in segs {
        let id = fresh_id(&format!("{a}_{b}"), |s| used.iter().any(|u| u == s));
        used.push(id.clone());
        builder = builder.edge(id, *a, *b, *len);
    }
    builder
}

fn model_from_segments(name: &str, segs: &[blueprints::Seg]) -> Result<Model, String> {
    segments_builder(name, segs, &mut Vec::new())
        .build()
        .map_err(|e| e.to_string())
}
