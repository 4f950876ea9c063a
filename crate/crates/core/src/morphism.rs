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

//! Piecewise-linear maps between metric models.
//!
//! A [`MorphismSpec`] sends vertices to vertices and each edge either to a
//! single vertex or linearly onto a single target edge. The slope of an edge
//! mapped onto `t` is `len(t) / len(e)`. On top of that come harmonicity,
//! local degrees, fibers, the global degree, the local Riemann-Hurwitz
//! inequality and the combined tropical morphism check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{DirectionRef, EdgeId, GraphError, Model, PointRef, VertexId};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("vertex {0} has no image")]
    MissingVertexImage(VertexId),
    #[error("edge {0} has no image")]
    MissingEdgeImage(EdgeId),
    #[error("image {1} of {0} is not a target vertex")]
    UnknownTargetVertex(VertexId, VertexId),
    #[error("image of edge {0} is not a target edge")]
    UnknownTargetEdge(EdgeId),
    #[error("map names unknown source vertex or edge {0}")]
    UnknownSource(String),
    #[error("image of edge {0} does not match the images of its endpoints")]
    InconsistentEdgeImage(EdgeId),
    #[error("endpoints of edge {edge} map to {0} and {1}, which are not adjacent", .images.0, .images.1)]
    AdjacencyViolation {
        edge: EdgeId,
        images: (VertexId, VertexId),
    },
    #[error("source edge {0} is a loop")]
    LoopInSource(EdgeId),
    #[error("target has loops or parallel edges")]
    TargetNotSimple,
    #[error("map contracts edges to points")]
    HasConstantEdges,
    #[error("map is not harmonic at {0}")]
    NotHarmonic(VertexId),
    #[error("direction {0} is not at the image of {1}")]
    DirectionNotAtImage(DirectionRef, VertexId),
    #[error("fiber sizes differ: {first} over {first_at}, {other} over {other_at}")]
    DegreeMismatch {
        first: u64,
        first_at: String,
        other: u64,
        other_at: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, MorphismError>;

/// Where a source edge goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeImage {
    /// The whole edge collapses to this target vertex.
    Constant(VertexId),
    /// The edge maps linearly onto `edge`; `aligned` means the source `v0`
    /// goes to the target `v0`.
    Onto { edge: EdgeId, aligned: bool },
}

impl fmt::Display for EdgeImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeImage::Constant(v) => write!(f, "const {v}"),
            EdgeImage::Onto { edge, aligned } => {
                write!(f, "onto {edge} {}", if *aligned { "+" } else { "-" })
            }
        }
    }
}

/// A validated map of metric models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismSpec {
    name: String,
    source: Model,
    target: Model,
    vertex_map: BTreeMap<VertexId, VertexId>,
    edge_map: BTreeMap<EdgeId, EdgeImage>,
}

impl MorphismSpec {
    /// Checks that both maps are total and that every edge image agrees
    /// with the images of the edge's endpoints.
    pub fn new(
        name: impl Into<String>,
        source: Model,
        target: Model,
        vertex_map: BTreeMap<VertexId, VertexId>,
        edge_map: BTreeMap<EdgeId, EdgeImage>,
    ) -> Result<Self> {
        for v in vertex_map.keys() {
            if !source.contains_vertex(v) {
                return Err(MorphismError::UnknownSource(v.clone()));
            }
        }
        for e in edge_map.keys() {
            if source.edge(e).is_err() {
                return Err(MorphismError::UnknownSource(e.clone()));
            }
        }
        for v in source.vertices() {
            let w = vertex_map
                .get(v)
                .ok_or_else(|| MorphismError::MissingVertexImage(v.clone()))?;
            if !target.contains_vertex(w) {
                return Err(MorphismError::UnknownTargetVertex(v.clone(), w.clone()));
            }
        }
        for (id, e) in source.edges() {
            let image = edge_map
                .get(id)
                .ok_or_else(|| MorphismError::MissingEdgeImage(id.clone()))?;
            let (a, b) = (&vertex_map[&e.v0], &vertex_map[&e.v1]);
            let ok = match image {
                EdgeImage::Constant(w) => a == w && b == w,
                EdgeImage::Onto { edge, aligned } => {
                    let t = target
                        .edge(edge)
                        .map_err(|_| MorphismError::UnknownTargetEdge(id.clone()))?;
                    if *aligned {
                        *a == t.v0 && *b == t.v1
                    } else {
                        *a == t.v1 && *b == t.v0
                    }
                }
            };
            if !ok {
                return Err(MorphismError::InconsistentEdgeImage(id.clone()));
            }
        }
        Ok(MorphismSpec {
            name: name.into(),
            source,
            target,
            vertex_map,
            edge_map,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Model {
        &self.source
    }

    pub fn target(&self) -> &Model {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.vertex_map
    }

    pub fn edge_map(&self) -> &BTreeMap<EdgeId, EdgeImage> {
        &self.edge_map
    }

    pub fn image(&self, v: &str) -> Option<&VertexId> {
        self.vertex_map.get(v)
    }

    /// `len(t) / len(e)` for an edge mapped onto `t`, zero for a collapsed
    /// edge.
    pub fn slope(&self, e: &str) -> Result<Rational> {
        let image = self
            .edge_map
            .get(e)
            .ok_or_else(|| MorphismError::UnknownSource(e.to_string()))?;
        Ok(match image {
            EdgeImage::Constant(_) => Rational::zero(),
            EdgeImage::Onto { edge, .. } => self.target.length(edge)? / self.source.length(e)?,
        })
    }

    pub fn constant_edges(&self) -> Vec<EdgeId> {
        self.edge_map
            .iter()
            .filter(|(_, im)| matches!(im, EdgeImage::Constant(_)))
            .map(|(e, _)| e.clone())
            .collect()
    }

    /// The target direction that a source direction is carried to, or
    /// `None` for a collapsed edge.
    pub fn image_direction(&self, d: &DirectionRef) -> Option<DirectionRef> {
        match &self.edge_map[&d.edge] {
            EdgeImage::Constant(_) => None,
            EdgeImage::Onto { edge, aligned } => {
                let end = if *aligned { d.end } else { d.end.opposite() };
                let t = self.target.edge(edge).unwrap();
                Some(DirectionRef {
                    vertex: t.endpoint(end).clone(),
                    edge: edge.clone(),
                    end,
                })
            }
        }
    }

    /// Sum of slopes of the source edges at `v` whose image leaves `phi(v)`
    /// in direction `d`.
    pub fn directional_slope_sum(&self, v: &str, d: &DirectionRef) -> Result<Rational> {
        let w = self
            .image(v)
            .ok_or_else(|| MorphismError::UnknownSource(v.to_string()))?;
        if d.vertex != *w || !self.target.directions(w).contains(d) {
            return Err(MorphismError::DirectionNotAtImage(d.clone(), v.to_string()));
        }
        let mut sum = Rational::zero();
        for sd in self.source.directions(v) {
            if self.image_direction(&sd).as_ref() == Some(d) {
                sum += self.slope(&sd.edge)?;
            }
        }
        Ok(sum)
    }

    /// Directional slope sums at `v`, one per target direction at `phi(v)`.
    pub fn slope_sums(&self, v: &str) -> Result<Vec<(DirectionRef, Rational)>> {
        let w = self
            .image(v)
            .ok_or_else(|| MorphismError::UnknownSource(v.to_string()))?;
        self.target
            .directions(w)
            .into_iter()
            .map(|d| {
                let s = self.directional_slope_sum(v, &d)?;
                Ok((d, s))
            })
            .collect()
    }

    /// Integer slopes everywhere and, at every source vertex, the same
    /// directional slope sum in every target direction.
    pub fn is_harmonic(&self) -> HarmonicityReport {
        let non_integer_slopes: Vec<EdgeId> = self
            .source
            .edges()
            .filter(|(e, _)| !self.slope(e).unwrap().is_integer())
            .map(|(e, _)| e.clone())
            .collect();
        let mut violations = Vec::new();
        let mut local_degrees = BTreeMap::new();
        for v in self.source.vertices() {
            let sums = self.slope_sums(v).unwrap();
            let distinct: BTreeSet<Rational> = sums.iter().map(|(_, s)| *s).collect();
            match distinct.len() {
                0 => {
                    local_degrees.insert(v.clone(), Rational::zero());
                }
                1 => {
                    local_degrees.insert(v.clone(), *distinct.first().unwrap());
                }
                _ => violations.push(HarmonicityViolation {
                    vertex: v.clone(),
                    sums,
                }),
            }
        }
        HarmonicityReport {
            non_integer_slopes,
            violations,
            local_degrees,
        }
    }

    /// The common directional slope sum at `v`.
    pub fn local_degree(&self, v: &str) -> Result<u64> {
        let sums = self.slope_sums(v)?;
        let distinct: BTreeSet<Rational> = sums.iter().map(|(_, s)| *s).collect();
        match distinct.len() {
            0 => Ok(0),
            1 => {
                let m = *distinct.first().unwrap();
                let all_integer = self
                    .source
                    .directions(v)
                    .iter()
                    .all(|d| self.slope(&d.edge).unwrap().is_integer());
                match m.to_integer() {
                    Some(n) if all_integer => Ok(n as u64),
                    _ => Err(MorphismError::NotHarmonic(v.to_string())),
                }
            }
            _ => Err(MorphismError::NotHarmonic(v.to_string())),
        }
    }

    /// Local degree at any point of the source: the slope for a point inside
    /// an edge, [`MorphismSpec::local_degree`] at a vertex.
    pub fn local_degree_at(&self, p: &PointRef) -> Result<u64> {
        self.source.check_point(p)?;
        match p {
            PointRef::Vertex(v) => self.local_degree(v),
            PointRef::Interior { edge, .. } => self
                .slope(edge)?
                .to_integer()
                .map(|n| n as u64)
                .ok_or_else(|| MorphismError::NotHarmonic(p.to_string())),
        }
    }

    /// Preimage of a target point. Needs a map without collapsed edges, so
    /// that every fiber is finite.
    pub fn fiber(&self, q: &PointRef) -> Result<Vec<PointRef>> {
        if !self.constant_edges().is_empty() {
            return Err(MorphismError::HasConstantEdges);
        }
        self.target.check_point(q)?;
        let mut out = Vec::new();
        match q {
            PointRef::Vertex(w) => {
                for (v, img) in &self.vertex_map {
                    if img == w {
                        out.push(PointRef::Vertex(v.clone()));
                    }
                }
            }
            PointRef::Interior { edge: t, offset: s } => {
                let len_t = self.target.length(t)?;
                for (e, img) in &self.edge_map {
                    if let EdgeImage::Onto { edge, aligned } = img {
                        if edge == t {
                            let slope = self.slope(e)?;
                            let along = if *aligned { *s } else { len_t - *s };
                            out.push(PointRef::interior(e.clone(), along / slope));
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Weighted size of the fiber over `q`: local degrees over a vertex,
    /// slopes over an interior point.
    pub fn weighted_fiber_size(&self, q: &PointRef) -> Result<u64> {
        self.target.check_point(q)?;
        match q {
            PointRef::Vertex(w) => {
                let mut total = 0;
                for (v, img) in &self.vertex_map {
                    if img == w {
                        total += self.local_degree(v)?;
                    }
                }
                Ok(total)
            }
            PointRef::Interior { edge: t, .. } => {
                let mut total = Rational::zero();
                for (e, img) in &self.edge_map {
                    if matches!(img, EdgeImage::Onto { edge, .. } if edge == t) {
                        total += self.slope(e)?;
                    }
                }
                total
                    .to_integer()
                    .map(|n| n as u64)
                    .ok_or_else(|| MorphismError::NotHarmonic(format!("over {q}")))
            }
        }
    }

    /// The weighted fiber size, checked to agree over every target vertex
    /// and every target edge midpoint.
    pub fn degree(&self) -> Result<u64> {
        let report = self.is_harmonic();
        if let Some(v) = report.first_failure() {
            return Err(MorphismError::NotHarmonic(v));
        }
        let mut points: Vec<PointRef> = self.target.vertices().map(PointRef::vertex).collect();
        for (t, _) in self.target.edges() {
            points.push(PointRef::interior(t.clone(), self.target.length(t)?.half()));
        }
        let mut first: Option<(u64, String)> = None;
        for q in points {
            let n = self.weighted_fiber_size(&q)?;
            match &first {
                None => first = Some((n, q.to_string())),
                Some((m, at)) if *m != n => {
                    return Err(MorphismError::DegreeMismatch {
                        first: *m,
                        first_at: at.clone(),
                        other: n,
                        other_at: q.to_string(),
                    })
                }
                _ => {}
            }
        }
        Ok(first.map(|(n, _)| n).unwrap_or(0))
    }

    /// `(k - 2) >= m (l - 2)` at every source vertex, where `k` and `l` are
    /// the valences of `v` and `phi(v)` and `m` is the local degree.
    pub fn riemann_hurwitz(&self) -> Result<RiemannHurwitzReport> {
        let mut entries = Vec::new();
        for v in self.source.vertices() {
            let m = self.local_degree(v)?;
            let k = self.source.valence(v) as i64;
            let l = self.target.valence(&self.vertex_map[v]) as i64;
            entries.push(RiemannHurwitzEntry {
                vertex: v.clone(),
                k,
                l,
                m,
                slack: (k - 2) - m as i64 * (l - 2),
            });
        }
        Ok(RiemannHurwitzReport { entries })
    }

    /// Runs every check that makes a map a tropical morphism: no collapsed
    /// edges, positive integer slopes, harmonicity, a well-defined degree,
    /// the local Riemann-Hurwitz inequality and, when `tree_target` is set,
    /// a genus-0 target.
    pub fn is_tropical_morphism(&self, tree_target: bool) -> TropicalCertificate {
        let harmonicity = self.is_harmonic();
        let harmonic = harmonicity.is_harmonic();
        let degree = if harmonic { self.degree().ok() } else { None };
        let riemann_hurwitz = if harmonic {
            self.riemann_hurwitz().ok()
        } else {
            None
        };
        TropicalCertificate {
            constant_edges: self.constant_edges(),
            harmonicity,
            degree,
            riemann_hurwitz,
            target_genus: self.target.genus(),
            tree_target,
        }
    }

    /// Subdivides the target at an interior point `q` and every source edge
    /// over it at the matching preimage, so that `q` becomes a vertex. Maps
    /// stay equivalent; vertices are returned unchanged.
    pub fn refine_at(&self, q: &PointRef) -> Result<MorphismSpec> {
        self.target.check_point(q)?;
        let PointRef::Interior { edge: t, offset: s } = q else {
            return Ok(self.clone());
        };
        let len_t = self.target.length(t)?;
        let (target, w, [t0, t1]) = self.target.split_edge(t, *s)?;
        let mut source = self.source.clone();
        let mut vertex_map = self.vertex_map.clone();
        let mut edge_map = self.edge_map.clone();
        for (e, img) in &self.edge_map {
            let EdgeImage::Onto { edge, aligned } = img else {
                continue;
            };
            if edge != t {
                continue;
            }
            let slope = self.slope(e)?;
            let along = if *aligned { *s } else { len_t - *s };
            let (next, x, [e0, e1]) = source.split_edge(e, along / slope)?;
            source = next;
            vertex_map.insert(x, w.clone());
            edge_map.remove(e);
            let (im0, im1) = if *aligned {
                ((&t0, true), (&t1, true))
            } else {
                ((&t1, false), (&t0, false))
            };
            edge_map.insert(
                e0,
                EdgeImage::Onto {
                    edge: im0.0.clone(),
                    aligned: im0.1,
                },
            );
            edge_map.insert(
                e1,
                EdgeImage::Onto {
                    edge: im1.0.clone(),
                    aligned: im1.1,
                },
            );
        }
        MorphismSpec::new(self.name.clone(), source, target, vertex_map, edge_map)
    }
}

/// Builds the map determined by a vertex map into a simple target: an
/// edge whose endpoints share an image collapses, and any other edge maps
/// onto the unique target edge joining the images.
pub fn induce_from_vertex_map(
    name: impl Into<String>,
    source: &Model,
    target: &Model,
    psi: &BTreeMap<VertexId, VertexId>,
) -> Result<MorphismSpec> {
    let mut seen = BTreeSet::new();
    for (_, t) in target.edges() {
        let key = if t.v0 < t.v1 {
            (&t.v0, &t.v1)
        } else {
            (&t.v1, &t.v0)
        };
        if t.is_loop() || !seen.insert(key) {
            return Err(MorphismError::TargetNotSimple);
        }
    }
    let mut edge_map = BTreeMap::new();
    for (id, e) in source.edges() {
        if e.is_loop() {
            return Err(MorphismError::LoopInSource(id.clone()));
        }
        let a = psi
            .get(&e.v0)
            .ok_or_else(|| MorphismError::MissingVertexImage(e.v0.clone()))?;
        let b = psi
            .get(&e.v1)
            .ok_or_else(|| MorphismError::MissingVertexImage(e.v1.clone()))?;
        let image = if a == b {
            EdgeImage::Constant(a.clone())
        } else {
            let t = target.graph().edges_between(a, b);
            let Some(t) = t.first() else {
                return Err(MorphismError::AdjacencyViolation {
                    edge: id.clone(),
                    images: (a.clone(), b.clone()),
                });
            };
            let aligned = target.edge(t)?.v0 == *a;
            EdgeImage::Onto {
                edge: t.clone(),
                aligned,
            }
        };
        edge_map.insert(id.clone(), image);
    }
    MorphismSpec::new(name, source.clone(), target.clone(), psi.clone(), edge_map)
}

/// Directions at a vertex whose slope sums disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicityViolation {
    pub vertex: VertexId,
    pub sums: Vec<(DirectionRef, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicityReport {
    pub non_integer_slopes: Vec<EdgeId>,
    pub violations: Vec<HarmonicityViolation>,
    /// Common slope sum at every vertex where the sums agree.
    pub local_degrees: BTreeMap<VertexId, Rational>,
}

impl HarmonicityReport {
    pub fn is_harmonic(&self) -> bool {
        self.non_integer_slopes.is_empty() && self.violations.is_empty()
    }

    fn first_failure(&self) -> Option<String> {
        if let Some(v) = self.violations.first() {
            return Some(v.vertex.clone());
        }
        self.non_integer_slopes.first().map(|e| format!("edge {e}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemannHurwitzEntry {
    pub vertex: VertexId,
    pub k: i64,
    pub l: i64,
    pub m: u64,
    /// `(k - 2) - m (l - 2)`; the inequality holds when this is nonnegative.
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemannHurwitzReport {
    pub entries: Vec<RiemannHurwitzEntry>,
}

impl RiemannHurwitzReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.slack >= 0)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RiemannHurwitzEntry> {
        self.entries.iter().filter(|e| e.slack < 0)
    }

    pub fn entry(&self, v: &str) -> Option<&RiemannHurwitzEntry> {
        self.entries.iter().find(|e| e.vertex == v)
    }
}

/// Outcome of [`MorphismSpec::is_tropical_morphism`], with enough detail
/// to point at the offending vertex or edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalCertificate {
    pub constant_edges: Vec<EdgeId>,
    pub harmonicity: HarmonicityReport,
    pub degree: Option<u64>,
    pub riemann_hurwitz: Option<RiemannHurwitzReport>,
    pub target_genus: usize,
    pub tree_target: bool,
}

impl TropicalCertificate {
    pub fn harmonic(&self) -> bool {
        self.harmonicity.is_harmonic()
    }

    pub fn rh_holds(&self) -> bool {
        self.riemann_hurwitz.as_ref().is_some_and(|r| r.holds())
    }

    pub fn is_tropical(&self) -> bool {
        self.constant_edges.is_empty()
            && self.harmonic()
            && self.degree.is_some_and(|d| d > 0)
            && self.rh_holds()
            && (!self.tree_target || self.target_genus == 0)
    }

    /// One line per failed condition.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for e in &self.constant_edges {
            out.push(format!("edge {e} is contracted"));
        }
        for e in &self.harmonicity.non_integer_slopes {
            out.push(format!("edge {e} has a non-integer slope"));
        }
        for v in &self.harmonicity.violations {
            let sums: Vec<String> = v.sums.iter().map(|(d, s)| format!("{d}={s}")).collect();
            out.push(format!("not harmonic at {}: {}", v.vertex, sums.join(" ")));
        }
        if self.harmonic() && self.degree.is_none() {
            out.push("fiber sizes differ".to_string());
        }
        if let Some(rh) = &self.riemann_hurwitz {
            for e in rh.failures() {
                out.push(format!(
                    "riemann-hurwitz fails at {}: k={} l={} m={} slack={}",
                    e.vertex, e.k, e.l, e.m, e.slack
                ));
            }
        }
        if self.tree_target && self.target_genus != 0 {
            out.push(format!("target has genus {}", self.target_genus));
        }
        out
    }
}
