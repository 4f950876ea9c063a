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

//! Tropical modifications: grafting metric trees onto a model, and the
//! equivalence they generate.
//!
//! Two models are tropically equivalent when they become isomorphic after
//! contracting every dangling tree and suppressing every valence-2 vertex.

use std::collections::BTreeMap;

use crate::graph::{graph_isomorphic, GraphError, Model, PointRef, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModificationError {
    #[error("grafted model is not a tree")]
    NotATree,
    #[error("attach vertex {0} is not a leaf of the tree")]
    NotALeaf(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A metric tree to glue onto a model: `attach_leaf` is identified with
/// `base_point`.
#[derive(Debug, Clone)]
pub struct GraftSpec {
    pub base_point: PointRef,
    pub tree: Model,
    pub attach_leaf: VertexId,
}

/// Glues `spec.tree` onto `m`, subdividing first if the base point is
/// interior to an edge.
///
/// Tree vertices and edges keep their ids unless they clash with ids of
/// `m`, in which case they get fresh `_2`, `_3`, ... suffixes. The returned
/// map sends each tree vertex to its id in the result.
pub fn graft_tree_mapped(
    m: &Model,
    spec: &GraftSpec,
) -> Result<(Model, BTreeMap<VertexId, VertexId>), ModificationError> {
    let tree = &spec.tree;
    if !tree.is_tree() {
        return Err(ModificationError::NotATree);
    }
    if !tree.contains_vertex(&spec.attach_leaf) || tree.valence(&spec.attach_leaf) != 1 {
        return Err(ModificationError::NotALeaf(spec.attach_leaf.clone()));
    }
    let (host, base) = m.realize_point(&spec.base_point)?;

    let mut taken_v: Vec<VertexId> = host.vertices().cloned().collect();
    let mut taken_e: Vec<String> = host.edges().map(|(id, _)| id.clone()).collect();
    let mut vmap = BTreeMap::new();
    for v in tree.vertices() {
        let id = if *v == spec.attach_leaf {
            base.clone()
        } else {
            let id = crate::graph::fresh_id(v, |s| taken_v.iter().any(|t| t == s));
            taken_v.push(id.clone());
            id
        };
        vmap.insert(v.clone(), id);
    }

    let mut b = crate::graph::ModelBuilder::new(host.name()).vertices(host.vertices().cloned());
    for (id, e) in host.edges() {
        b = b.edge(id.clone(), e.v0.clone(), e.v1.clone(), host.lengths()[id]);
    }
    for v in tree.vertices().filter(|v| **v != spec.attach_leaf) {
        b = b.vertex(vmap[v].clone());
    }
    for (id, e) in tree.edges() {
        let new_id = crate::graph::fresh_id(id, |s| taken_e.iter().any(|t| t == s));
        taken_e.push(new_id.clone());
        b = b.edge(
            new_id,
            vmap[&e.v0].clone(),
            vmap[&e.v1].clone(),
            tree.lengths()[id],
        );
    }
    Ok((b.build()?, vmap))
}

/// [`graft_tree_mapped`] without the vertex map.
pub fn graft_tree(m: &Model, spec: &GraftSpec) -> Result<Model, ModificationError> {
    graft_tree_mapped(m, spec).map(|(m, _)| m)
}

/// Contracts all dangling trees, then suppresses valence-2 vertices.
///
/// Fails with [`GraphError::MetricLoop`] on models that reduce to a single
/// cycle.
pub fn canonical_representative(m: &Model) -> Result<Model, GraphError> {
    m.contract_dangling().essential_model()
}

/// Whether `m1` and `m2` reduce to length-isomorphic canonical
/// representatives. Models reducing to a single cycle are equivalent when
/// the cycles have equal length.
pub fn tropically_equivalent(m1: &Model, m2: &Model) -> bool {
    match (canonical_representative(m1), canonical_representative(m2)) {
        (Ok(a), Ok(b)) => graph_isomorphic(&a, &b, true),
        (Err(GraphError::MetricLoop), Err(GraphError::MetricLoop)) => {
            m1.contract_dangling().total_length() == m2.contract_dangling().total_length()
        }
        _ => false,
    }
}
