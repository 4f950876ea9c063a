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

//! Finite multigraphs and their metric models.
//!
//! A [`Graph`] is a finite multigraph whose edges carry an ordered pair of
//! endpoints `(v0, v1)`; loops and parallel edges are allowed. A [`Model`]
//! is a connected graph together with a positive rational length on every
//! edge. Identifiers are plain strings made of ASCII alphanumerics and `_`,
//! and all collections are kept sorted so that every operation is
//! deterministic.

mod iso;
mod metric;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use iso::{find_isomorphism, graph_isomorphic, isomorphisms, Isomorphism};

use crate::rational::Rational;

pub type VertexId = String;
pub type EdgeId = String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("invalid identifier {0:?}")]
    InvalidId(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge {0}")]
    DuplicateEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {0} has non-positive length {1}")]
    NonPositiveLength(EdgeId, Rational),
    #[error("edge {0} has no length")]
    MissingLength(EdgeId),
    #[error("length given for unknown edge {0}")]
    StrayLength(EdgeId),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("split point {1} is not interior to edge {0}")]
    InvalidSplit(EdgeId, Rational),
    #[error("point {0} does not lie on the model")]
    InvalidPoint(String),
    #[error("model is a single metric loop and has no essential vertices")]
    MetricLoop,
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// Returns true if `id` is a non-empty string of ASCII alphanumerics and `_`.
pub fn is_valid_id(id: &str) -> bool {
    !id.is_empty() && id.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn check_id(id: &str) -> Result<()> {
    if is_valid_id(id) {
        Ok(())
    } else {
        Err(GraphError::InvalidId(id.to_string()))
    }
}

/// Which end of an edge: `Tail` is `v0`, `Head` is `v1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn opposite(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub v0: VertexId,
    pub v1: VertexId,
}

impl Edge {
    pub fn new(v0: impl Into<VertexId>, v1: impl Into<VertexId>) -> Self {
        Edge {
            v0: v0.into(),
            v1: v1.into(),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.v0 == self.v1
    }

    pub fn endpoint(&self, end: End) -> &VertexId {
        match end {
            End::Tail => &self.v0,
            End::Head => &self.v1,
        }
    }

    /// The endpoint across the edge from `v`. For a loop this is `v` itself.
    pub fn other(&self, v: &str) -> Option<&VertexId> {
        if self.v0 == v {
            Some(&self.v1)
        } else if self.v1 == v {
            Some(&self.v0)
        } else {
            None
        }
    }
}

/// A point of a metric graph: a vertex, or a point in the interior of an
/// edge at `offset` from its `v0` end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointRef {
    Vertex(VertexId),
    Interior { edge: EdgeId, offset: Rational },
}

impl PointRef {
    pub fn vertex(v: impl Into<VertexId>) -> Self {
        PointRef::Vertex(v.into())
    }

    pub fn interior(edge: impl Into<EdgeId>, offset: Rational) -> Self {
        PointRef::Interior {
            edge: edge.into(),
            offset,
        }
    }
}

impl fmt::Display for PointRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointRef::Vertex(v) => write!(f, "{v}"),
            PointRef::Interior { edge, offset } => write!(f, "{edge}@{offset}"),
        }
    }
}

/// A tangent direction at a vertex: the germ of `edge` leaving `vertex`
/// through the given end. A loop gives two directions at its vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectionRef {
    pub vertex: VertexId,
    pub edge: EdgeId,
    pub end: End,
}

impl fmt::Display for DirectionRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = match self.end {
            End::Tail => "+",
            End::Head => "-",
        };
        write!(f, "{}:{}{}", self.vertex, self.edge, end)
    }
}

/// A finite multigraph with ordered edge endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Edge>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: impl Into<VertexId>) -> Result<()> {
        let v = v.into();
        check_id(&v)?;
        if !self.vertices.insert(v.clone()) {
            return Err(GraphError::DuplicateVertex(v));
        }
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        e: impl Into<EdgeId>,
        v0: impl Into<VertexId>,
        v1: impl Into<VertexId>,
    ) -> Result<()> {
        let e = e.into();
        let edge = Edge::new(v0, v1);
        check_id(&e)?;
        for v in [&edge.v0, &edge.v1] {
            if !self.vertices.contains(v) {
                return Err(GraphError::UnknownVertex(v.clone()));
            }
        }
        if self.edges.contains_key(&e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        self.edges.insert(e, edge);
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.vertices.iter()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&EdgeId, &Edge)> + '_ {
        self.edges.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn contains_edge(&self, e: &str) -> bool {
        self.edges.contains_key(e)
    }

    pub fn edge(&self, e: &str) -> Result<&Edge> {
        self.edges
            .get(e)
            .ok_or_else(|| GraphError::UnknownEdge(e.to_string()))
    }

    /// Edge ends at `v`, sorted. A loop at `v` contributes both of its ends.
    pub fn directions(&self, v: &str) -> Vec<DirectionRef> {
        let mut out = Vec::new();
        for (id, edge) in &self.edges {
            for end in [End::Tail, End::Head] {
                if edge.endpoint(end) == v {
                    out.push(DirectionRef {
                        vertex: v.to_string(),
                        edge: id.clone(),
                        end,
                    });
                }
            }
        }
        out
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn valence(&self, v: &str) -> usize {
        self.edges
            .values()
            .map(|e| (e.v0 == v) as usize + (e.v1 == v) as usize)
            .sum()
    }

    /// Edges joining `u` and `v` in either orientation, sorted by id.
    pub fn edges_between(&self, u: &str, v: &str) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, e)| (e.v0 == u && e.v1 == v) || (e.v0 == v && e.v1 == u))
            .map(|(id, _)| id.clone())
            .collect()
    }

    /// Connected components, each as a sorted vertex set, ignoring the
    /// edges in `skip`.
    pub fn components_without(&self, skip: &BTreeSet<&str>) -> Vec<BTreeSet<VertexId>> {
        let mut adjacency: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for v in &self.vertices {
            adjacency.entry(v.as_str()).or_default();
        }
        for (id, e) in &self.edges {
            if skip.contains(id.as_str()) {
                continue;
            }
            adjacency.get_mut(e.v0.as_str()).unwrap().push(&e.v1);
            adjacency.get_mut(e.v1.as_str()).unwrap().push(&e.v0);
        }
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut out = Vec::new();
        for v in &self.vertices {
            if seen.contains(v.as_str()) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![v.as_str()];
            seen.insert(v);
            while let Some(x) = stack.pop() {
                comp.insert(x.to_string());
                for &y in &adjacency[x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&BTreeSet::new()).len() == 1
    }

    /// First Betti number `|E| - |V| + c` where `c` is the number of
    /// components.
    pub fn genus(&self) -> usize {
        let c = self.components_without(&BTreeSet::new()).len();
        self.edges.len() + c - self.vertices.len()
    }

    /// Bridges, found by a low-link depth-first search that tracks the
    /// entering edge id so that parallel edges are handled correctly.
    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let n = index.len();
        let ids: Vec<&EdgeId> = self.edges.keys().collect();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (k, e) in self.edges.values().enumerate() {
            if e.is_loop() {
                continue;
            }
            let (a, b) = (index[e.v0.as_str()], index[e.v1.as_str()]);
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut bridges = BTreeSet::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, entering edge, next adjacency position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (v, via) = (top.0, top.1);
                if top.2 < adj[v].len() {
                    let (w, k) = adj[v][top.2];
                    top.2 += 1;
                    if k == via {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, k, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            bridges.insert(ids[via].clone());
                        }
                    }
                }
            }
        }
        bridges
    }
}

/// A connected multigraph with a positive rational length on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    name: String,
    graph: Graph,
    lengths: BTreeMap<EdgeId, Rational>,
}

/// Incremental constructor for [`Model`].
///
/// ```
/// use tgon::graph::ModelBuilder;
/// use tgon::rational::Rational;
///
/// let theta = ModelBuilder::new("theta")
///     .vertices(["x", "y"])
///     .edge("a", "x", "y", Rational::from_integer(1))
///     .edge("b", "x", "y", Rational::from_integer(2))
///     .edge("c", "y", "x", Rational::new(1, 2))
///     .build()
///     .unwrap();
/// assert_eq!(theta.genus(), 2);
/// ```
#[derive(Debug, Clone)]
pub struct ModelBuilder {
    name: String,
    vertices: Vec<VertexId>,
    edges: Vec<(EdgeId, VertexId, VertexId, Rational)>,
}

impl ModelBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        ModelBuilder {
            name: name.into(),
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertex(mut self, v: impl Into<VertexId>) -> Self {
        self.vertices.push(v.into());
        self
    }

    pub fn vertices<I, S>(mut self, vs: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<VertexId>,
    {
        self.vertices.extend(vs.into_iter().map(Into::into));
        self
    }

    pub fn edge(
        mut self,
        e: impl Into<EdgeId>,
        v0: impl Into<VertexId>,
        v1: impl Into<VertexId>,
        length: Rational,
    ) -> Self {
        self.edges.push((e.into(), v0.into(), v1.into(), length));
        self
    }

    pub fn build(self) -> Result<Model> {
        let mut graph = Graph::new();
        for v in self.vertices {
            graph.add_vertex(v)?;
        }
        let mut lengths = BTreeMap::new();
        for (e, v0, v1, len) in self.edges {
            graph.add_edge(e.clone(), v0, v1)?;
            lengths.insert(e, len);
        }
        Model::new(self.name, graph, lengths)
    }
}

impl Model {
    /// Validates and builds a model. The graph must be non-empty and
    /// connected and every edge must have exactly one positive length.
    pub fn new(
        name: impl Into<String>,
        graph: Graph,
        lengths: BTreeMap<EdgeId, Rational>,
    ) -> Result<Self> {
        let name = name.into();
        check_id(&name)?;
        if graph.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        for e in lengths.keys() {
            if !graph.contains_edge(e) {
                return Err(GraphError::StrayLength(e.clone()));
            }
        }
        for (e, _) in graph.edges() {
            match lengths.get(e) {
                None => return Err(GraphError::MissingLength(e.clone())),
                Some(l) if !l.is_positive() => {
                    return Err(GraphError::NonPositiveLength(e.clone(), *l))
                }
                Some(_) => {}
            }
        }
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(Model {
            name,
            graph,
            lengths,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        check_id(&name)?;
        self.name = name;
        Ok(self)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.graph.vertices()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&EdgeId, &Edge)> + '_ {
        self.graph.edges()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn edge(&self, e: &str) -> Result<&Edge> {
        self.graph.edge(e)
    }

    pub fn length(&self, e: &str) -> Result<Rational> {
        self.lengths
            .get(e)
            .copied()
            .ok_or_else(|| GraphError::UnknownEdge(e.to_string()))
    }

    pub fn lengths(&self) -> &BTreeMap<EdgeId, Rational> {
        &self.lengths
    }

    pub fn total_length(&self) -> Rational {
        self.lengths.values().sum()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.graph.contains_vertex(v)
    }

    pub fn valence(&self, v: &str) -> usize {
        self.graph.valence(v)
    }

    pub fn directions(&self, v: &str) -> Vec<DirectionRef> {
        self.graph.directions(v)
    }

    /// `|E| - |V| + 1`.
    pub fn genus(&self) -> usize {
        self.graph.genus()
    }

    pub fn is_tree(&self) -> bool {
        self.genus() == 0
    }

    /// Checks that `p` names an existing vertex or an interior point.
    pub fn check_point(&self, p: &PointRef) -> Result<()> {
        match p {
            PointRef::Vertex(v) if self.contains_vertex(v) => Ok(()),
            PointRef::Vertex(v) => Err(GraphError::UnknownVertex(v.clone())),
            PointRef::Interior { edge, offset } => {
                let len = self.length(edge)?;
                if offset.is_positive() && *offset < len {
                    Ok(())
                } else {
                    Err(GraphError::InvalidPoint(p.to_string()))
                }
            }
        }
    }

    /// A vertex id not in use, `base` itself when free.
    pub fn fresh_vertex_id(&self, base: &str) -> VertexId {
        fresh_id(base, |s| self.contains_vertex(s))
    }

    pub fn fresh_edge_id(&self, base: &str) -> EdgeId {
        fresh_id(base, |s| self.graph.contains_edge(s))
    }

    /// Splits edge `e` at distance `split` from its `v0` end.
    ///
    /// Returns the new model, the new vertex and the two new edges, in the
    /// order `(v0, new)` then `(new, v1)`. The new ids are derived from `e`.
    pub fn split_edge(&self, e: &str, split: Rational) -> Result<(Model, VertexId, [EdgeId; 2])> {
        let names = [
            self.fresh_vertex_id(&format!("{e}_s")),
            self.fresh_edge_id(&format!("{e}_a")),
            self.fresh_edge_id(&format!("{e}_b")),
        ];
        self.split_edge_named(e, split, &names[0], [&names[1], &names[2]])
    }

    /// [`Model::split_edge`] with caller-chosen names. `e` itself may be
    /// reused as one of the new edge ids.
    pub fn split_edge_named(
        &self,
        e: &str,
        split: Rational,
        vertex: &str,
        halves: [&str; 2],
    ) -> Result<(Model, VertexId, [EdgeId; 2])> {
        let edge = self.edge(e)?.clone();
        let len = self.length(e)?;
        if !(split.is_positive() && split < len) {
            return Err(GraphError::InvalidSplit(e.to_string(), split));
        }
        if halves[0] == halves[1] {
            return Err(GraphError::DuplicateEdge(halves[0].to_string()));
        }
        let mut graph = self.graph.clone();
        let mut lengths = self.lengths.clone();
        graph.edges.remove(e);
        lengths.remove(e);
        graph.add_vertex(vertex)?;
        graph.add_edge(halves[0], edge.v0.clone(), vertex)?;
        graph.add_edge(halves[1], vertex, edge.v1.clone())?;
        lengths.insert(halves[0].to_string(), split);
        lengths.insert(halves[1].to_string(), len - split);
        let m = Model::new(self.name.clone(), graph, lengths)?;
        Ok((
            m,
            vertex.to_string(),
            [halves[0].to_string(), halves[1].to_string()],
        ))
    }

    /// Subdivides `e` at distance `split` from its `v0` end. Subdividing a
    /// loop yields a pair of parallel edges.
    pub fn subdivide_edge(&self, e: &str, split: Rational) -> Result<Model> {
        self.split_edge(e, split).map(|(m, _, _)| m)
    }

    /// Turns a point into a vertex, subdividing its edge if needed.
    pub fn realize_point(&self, p: &PointRef) -> Result<(Model, VertexId)> {
        self.check_point(p)?;
        match p {
            PointRef::Vertex(v) => Ok((self.clone(), v.clone())),
            PointRef::Interior { edge, offset } => {
                let (m, v, _) = self.split_edge(edge, *offset)?;
                Ok((m, v))
            }
        }
    }

    /// Subdivides every loop at its midpoint, giving a loopless model.
    pub fn resolve_loops(&self) -> Model {
        let loops: Vec<EdgeId> = self
            .edges()
            .filter(|(_, e)| e.is_loop())
            .map(|(id, _)| id.clone())
            .collect();
        let mut m = self.clone();
        for e in loops {
            let half = m.lengths[&e].half();
            m = m.subdivide_edge(&e, half).expect("midpoint is interior");
        }
        m
    }

    /// Vertices of valence other than 2.
    pub fn essential_vertices(&self) -> BTreeSet<VertexId> {
        self.vertices()
            .filter(|v| self.valence(v) != 2)
            .cloned()
            .collect()
    }

    /// Suppresses every valence-2 vertex, merging its two edges into one.
    ///
    /// The merged edge keeps the smaller of the two edge ids and runs from
    /// the far end of that edge to the far end of the other. Merging may
    /// create loops. Fails with [`GraphError::MetricLoop`] when the model is
    /// a single cycle.
    pub fn essential_model(&self) -> Result<Model> {
        if self.essential_vertices().is_empty() {
            return Err(GraphError::MetricLoop);
        }
        let mut graph = self.graph.clone();
        let mut lengths = self.lengths.clone();
        loop {
            let Some(v) = graph.vertices().find(|v| graph.valence(v) == 2).cloned() else {
                break;
            };
            let dirs = graph.directions(&v);
            let (ea, eb) = (dirs[0].edge.clone(), dirs[1].edge.clone());
            debug_assert_ne!(ea, eb, "a valence-2 loop vertex is a metric loop");
            let x = graph.edges[&ea].other(&v).unwrap().clone();
            let y = graph.edges[&eb].other(&v).unwrap().clone();
            let len = lengths[&ea] + lengths[&eb];
            graph.edges.remove(&eb);
            lengths.remove(&eb);
            graph.edges.insert(ea.clone(), Edge::new(x, y));
            lengths.insert(ea, len);
            graph.vertices.remove(&v);
        }
        Model::new(self.name.clone(), graph, lengths)
    }

    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        self.graph.bridges()
    }

    pub fn bridge_count(&self) -> usize {
        self.bridges().len()
    }

    /// Loops are never bridges.
    pub fn is_bridge(&self, e: &str) -> Result<bool> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return Ok(false);
        }
        let skip = BTreeSet::from([e]);
        Ok(self.graph.components_without(&skip).len() > 1)
    }

    /// Sides of a bridge: the vertex sets of the two components left after
    /// deleting `e`, the one containing `v0` first. `None` if `e` is not a
    /// bridge.
    fn bridge_sides(&self, e: &str) -> Result<Option<[BTreeSet<VertexId>; 2]>> {
        if !self.is_bridge(e)? {
            return Ok(None);
        }
        let edge = self.edge(e)?;
        let skip = BTreeSet::from([e]);
        let comps = self.graph.components_without(&skip);
        let (mut a, mut b) = (None, None);
        for c in comps {
            if c.contains(&edge.v0) {
                a = Some(c);
            } else {
                b = Some(c);
            }
        }
        Ok(Some([a.unwrap(), b.unwrap()]))
    }

    /// Genus of the subgraph induced on `side`.
    fn side_genus(&self, side: &BTreeSet<VertexId>) -> usize {
        let e = self
            .edges()
            .filter(|(_, e)| side.contains(&e.v0) && side.contains(&e.v1))
            .count();
        e + 1 - side.len()
    }

    /// An edge whose removal leaves two components, at least one of which
    /// is a tree.
    pub fn is_dangling(&self, e: &str) -> Result<bool> {
        Ok(match self.bridge_sides(e)? {
            None => false,
            Some(sides) => sides.iter().any(|s| self.side_genus(s) == 0),
        })
    }

    /// Contracts dangling edges until none is left. Each contraction keeps
    /// the endpoint on the side of larger genus, or `v0` on a tie, so trees
    /// hanging off the graph collapse onto their attachment vertex.
    pub fn contract_dangling(&self) -> Model {
        let mut m = self.clone();
        loop {
            let next = m.edges().map(|(id, _)| id.clone()).find_map(|id| {
                let sides = m.bridge_sides(&id).unwrap()?;
                let (g0, g1) = (m.side_genus(&sides[0]), m.side_genus(&sides[1]));
                (g0 == 0 || g1 == 0).then_some((id, g1 > g0))
            });
            let Some((e, keep_head)) = next else {
                return m;
            };
            let edge = m.graph.edges[&e].clone();
            let (keep, drop) = if keep_head {
                (edge.v1, edge.v0)
            } else {
                (edge.v0, edge.v1)
            };
            m.graph.edges.remove(&e);
            m.lengths.remove(&e);
            m.graph.vertices.remove(&drop);
            for other in m.graph.edges.values_mut() {
                if other.v0 == drop {
                    other.v0 = keep.clone();
                }
                if other.v1 == drop {
                    other.v1 = keep.clone();
                }
            }
        }
    }

    /// Shortest-path distance between two points.
    pub fn distance(&self, p: &PointRef, q: &PointRef) -> Result<Rational> {
        metric::distance(self, p, q)
    }

    /// Renames vertices and edges through the given maps; ids not in a map
    /// are kept.
    pub fn relabel(
        &self,
        vertices: &BTreeMap<VertexId, VertexId>,
        edges: &BTreeMap<EdgeId, EdgeId>,
    ) -> Result<Model> {
        let rv = |v: &VertexId| vertices.get(v).cloned().unwrap_or_else(|| v.clone());
        let re = |e: &EdgeId| edges.get(e).cloned().unwrap_or_else(|| e.clone());
        let mut graph = Graph::new();
        for v in self.vertices() {
            graph.add_vertex(rv(v))?;
        }
        let mut lengths = BTreeMap::new();
        for (id, e) in self.edges() {
            graph.add_edge(re(id), rv(&e.v0), rv(&e.v1))?;
            lengths.insert(re(id), self.lengths[id]);
        }
        Model::new(self.name.clone(), graph, lengths)
    }
}

/// `base` if `taken(base)` is false, otherwise the first free `base_2`,
/// `base_3`, ...
pub(crate) fn fresh_id(base: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(base) {
        return base.to_string();
    }
    (2..)
        .map(|i| format!("{base}_{i}"))
        .find(|s| !taken(s))
        .unwrap()
}
