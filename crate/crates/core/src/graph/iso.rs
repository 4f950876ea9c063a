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

//! Multigraph isomorphism by backtracking.
//!
//! Two models are isomorphic when a vertex bijection carries, for every
//! unordered vertex pair (including a vertex paired with itself, for loops),
//! the multiset of edges between them onto the corresponding multiset. With
//! `respect_lengths` the multisets compare edge lengths; otherwise only
//! their sizes. Edge orientation is ignored.

use std::collections::BTreeMap;

use super::{EdgeId, Model, VertexId};
use crate::rational::Rational;

/// A vertex bijection together with a compatible edge bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

struct Indexed<'a> {
    model: &'a Model,
    names: Vec<&'a VertexId>,
    valence: Vec<usize>,
    adjacent: Vec<Vec<usize>>,
    // Edge ids between i <= j, sorted by (length, id).
    pairs: BTreeMap<(usize, usize), Vec<&'a EdgeId>>,
    // Sorted lengths per pair; all ones when lengths are ignored.
    signature: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl<'a> Indexed<'a> {
    fn new(model: &'a Model, respect_lengths: bool) -> Self {
        let names: Vec<&VertexId> = model.vertices().collect();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let n = names.len();
        let mut valence = vec![0; n];
        let mut adjacent = vec![Vec::new(); n];
        let mut pairs: BTreeMap<(usize, usize), Vec<&EdgeId>> = BTreeMap::new();
        for (id, e) in model.edges() {
            let (a, b) = (index[e.v0.as_str()], index[e.v1.as_str()]);
            valence[a] += 1;
            valence[b] += 1;
            let key = (a.min(b), a.max(b));
            let entry = pairs.entry(key).or_default();
            if entry.is_empty() && a != b {
                adjacent[a].push(b);
                adjacent[b].push(a);
            }
            entry.push(id);
        }
        let lengths = model.lengths();
        for ids in pairs.values_mut() {
            ids.sort_by(|x, y| (lengths[*x], *x).cmp(&(lengths[*y], *y)));
        }
        let signature = pairs
            .iter()
            .map(|(k, ids)| {
                let sig = ids
                    .iter()
                    .map(|e| {
                        if respect_lengths {
                            lengths[*e]
                        } else {
                            Rational::one()
                        }
                    })
                    .collect();
                (*k, sig)
            })
            .collect();
        Indexed {
            model,
            names,
            valence,
            adjacent,
            pairs,
            signature,
        }
    }

    fn sig(&self, a: usize, b: usize) -> &[Rational] {
        self.signature
            .get(&(a.min(b), a.max(b)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    fn edges(&self, a: usize, b: usize) -> &[&'a EdgeId] {
        self.pairs
            .get(&(a.min(b), a.max(b)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Breadth-first order from vertex 0, with the earlier neighbour each
    /// vertex was reached from.
    fn search_order(&self) -> Vec<(usize, Option<usize>)> {
        let n = self.names.len();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            order.push((root, None));
            let mut head = order.len() - 1;
            while head < order.len() {
                let (v, _) = order[head];
                head += 1;
                for &w in &self.adjacent[v] {
                    if !seen[w] {
                        seen[w] = true;
                        order.push((w, Some(v)));
                    }
                }
            }
        }
        order
    }
}

struct Matcher<'a, 'b> {
    g1: &'b Indexed<'a>,
    g2: &'b Indexed<'a>,
    order: Vec<(usize, Option<usize>)>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_, '_> {
    fn compatible(&self, depth: usize, x: usize, y: usize) -> bool {
        if self.g1.valence[x] != self.g2.valence[y] || self.g1.sig(x, x) != self.g2.sig(y, y) {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&(u, _)| self.g1.sig(x, u) == self.g2.sig(y, self.map[u]))
    }

    /// Calls `found` on each complete vertex map; stops when it returns true.
    fn extend(&mut self, depth: usize, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return found(&self.map);
        }
        let (x, parent) = self.order[depth];
        let candidates: Vec<usize> = match parent {
            Some(p) => self.g2.adjacent[self.map[p]].clone(),
            None => (0..self.g2.names.len()).collect(),
        };
        for y in candidates {
            if self.used[y] || !self.compatible(depth, x, y) {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            let stop = self.extend(depth + 1, found);
            self.used[y] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

fn quick_reject(m1: &Model, m2: &Model) -> bool {
    m1.vertex_count() != m2.vertex_count() || m1.edge_count() != m2.edge_count()
}

fn for_each_vertex_map(
    g1: &Indexed<'_>,
    g2: &Indexed<'_>,
    found: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = g1.names.len();
    let mut matcher = Matcher {
        g1,
        g2,
        order: g1.search_order(),
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    matcher.extend(0, found);
}

/// Edge bijections compatible with a vertex map: a product over vertex
/// pairs of the permutations that respect the pair signatures.
fn edge_maps(
    g1: &Indexed<'_>,
    g2: &Indexed<'_>,
    map: &[usize],
    respect_lengths: bool,
    all: bool,
) -> Vec<BTreeMap<EdgeId, EdgeId>> {
    let mut out = vec![BTreeMap::new()];
    for (&(a, b), ids1) in &g1.pairs {
        let ids2 = g2.edges(map[a], map[b]);
        let perms = if all {
            matching_permutations(g1.model, ids1, g2.model, ids2, respect_lengths)
        } else {
            // Both lists are sorted by length, so the identity pairing works.
            vec![(0..ids1.len()).collect()]
        };
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for partial in &out {
            for perm in &perms {
                let mut m = partial.clone();
                for (i, &j) in perm.iter().enumerate() {
                    m.insert(ids1[i].clone(), ids2[j].clone());
                }
                next.push(m);
            }
        }
        out = next;
    }
    out
}

fn matching_permutations(
    m1: &Model,
    ids1: &[&EdgeId],
    m2: &Model,
    ids2: &[&EdgeId],
    respect_lengths: bool,
) -> Vec<Vec<usize>> {
    let n = ids1.len();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        k: usize,
        ok: &dyn Fn(usize, usize) -> bool,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == used.len() {
            out.push(perm.clone());
            return;
        }
        for j in 0..used.len() {
            if !used[j] && ok(k, j) {
                used[j] = true;
                perm.push(j);
                rec(k + 1, ok, perm, used, out);
                perm.pop();
                used[j] = false;
            }
        }
    }
    let ok =
        |i: usize, j: usize| !respect_lengths || m1.lengths()[ids1[i]] == m2.lengths()[ids2[j]];
    rec(0, &ok, &mut perm, &mut used, &mut out);
    out
}

fn to_isomorphism(
    g1: &Indexed<'_>,
    g2: &Indexed<'_>,
    map: &[usize],
    edge_map: BTreeMap<EdgeId, EdgeId>,
) -> Isomorphism {
    Isomorphism {
        vertex_map: map
            .iter()
            .enumerate()
            .map(|(i, &j)| (g1.names[i].clone(), g2.names[j].clone()))
            .collect(),
        edge_map,
    }
}

/// One isomorphism `m1 -> m2`, if any.
pub fn find_isomorphism(m1: &Model, m2: &Model, respect_lengths: bool) -> Option<Isomorphism> {
    if quick_reject(m1, m2) {
        return None;
    }
    let g1 = Indexed::new(m1, respect_lengths);
    let g2 = Indexed::new(m2, respect_lengths);
    let mut result = None;
    for_each_vertex_map(&g1, &g2, &mut |map| {
        let edges = edge_maps(&g1, &g2, map, respect_lengths, false)
            .pop()
            .unwrap();
        result = Some(to_isomorphism(&g1, &g2, map, edges));
        true
    });
    result
}

/// Whether `m1` and `m2` are isomorphic as multigraphs, optionally
/// respecting edge lengths.
pub fn graph_isomorphic(m1: &Model, m2: &Model, respect_lengths: bool) -> bool {
    find_isomorphism(m1, m2, respect_lengths).is_some()
}

/// Every isomorphism `m1 -> m2`, including each way of matching parallel
/// edges and loops, in a deterministic order.
pub fn isomorphisms(m1: &Model, m2: &Model, respect_lengths: bool) -> Vec<Isomorphism> {
    if quick_reject(m1, m2) {
        return Vec::new();
    }
    let g1 = Indexed::new(m1, respect_lengths);
    let g2 = Indexed::new(m2, respect_lengths);
    let mut out = Vec::new();
    for_each_vertex_map(&g1, &g2, &mut |map| {
        for edges in edge_maps(&g1, &g2, map, respect_lengths, true) {
            out.push(to_isomorphism(&g1, &g2, map, edges));
        }
        false
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ModelBuilder;

    fn r(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    fn theta(names: [&str; 2], lens: [i128; 3]) -> Model {
        ModelBuilder::new("t")
            .vertices(names)
            .edge("a", names[0], names[1], r(lens[0]))
            .edge("b", names[1], names[0], r(lens[1]))
            .edge("c", names[0], names[1], r(lens[2]))
            .build()
            .unwrap()
    }

    #[test]
    fn theta_automorphisms() {
        let t = theta(["x", "y"], [1, 1, 1]);
        // 2 vertex swaps times 3! edge permutations
        assert_eq!(isomorphisms(&t, &t, false).len(), 12);
        assert_eq!(isomorphisms(&t, &t, true).len(), 12);
        let u = theta(["x", "y"], [1, 2, 3]);
        assert_eq!(isomorphisms(&u, &u, true).len(), 2);
    }

    #[test]
    fn lengths_matter_only_when_asked() {
        let t = theta(["x", "y"], [1, 2, 3]);
        let u = theta(["p", "q"], [3, 1, 2]);
        let w = theta(["p", "q"], [3, 1, 1]);
        assert!(graph_isomorphic(&t, &u, true));
        assert!(!graph_isomorphic(&t, &w, true));
        assert!(graph_isomorphic(&t, &w, false));
        let iso = find_isomorphism(&t, &u, true).unwrap();
        for (e1, e2) in &iso.edge_map {
            assert_eq!(t.length(e1), u.length(e2));
        }
    }

    #[test]
    fn loops_distinguish_graphs() {
        let dumbbell = ModelBuilder::new("d")
            .vertices(["x", "y"])
            .edge("l1", "x", "x", r(1))
            .edge("l2", "y", "y", r(1))
            .edge("b", "x", "y", r(1))
            .build()
            .unwrap();
        let other = ModelBuilder::new("d")
            .vertices(["x", "y"])
            .edge("l1", "x", "x", r(1))
            .edge("b1", "x", "y", r(1))
            .edge("b2", "x", "y", r(1))
            .build()
            .unwrap();
        assert!(!graph_isomorphic(&dumbbell, &other, false));
        assert_eq!(isomorphisms(&dumbbell, &dumbbell, false).len(), 2);
    }
}
