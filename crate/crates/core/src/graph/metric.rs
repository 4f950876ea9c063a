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

use std::collections::BTreeMap;

use super::{Model, PointRef, Result, VertexId};
use crate::rational::Rational;

pub(super) fn distance(m: &Model, p: &PointRef, q: &PointRef) -> Result<Rational> {
    m.check_point(p)?;
    m.check_point(q)?;
    if p == q {
        return Ok(Rational::zero());
    }
    let (m2, a, b) = match (p, q) {
        (
            PointRef::Interior {
                edge: e1,
                offset: s,
            },
            PointRef::Interior {
                edge: e2,
                offset: t,
            },
        ) if e1 == e2 => {
            let (lo, hi) = if s < t { (*s, *t) } else { (*t, *s) };
            let (m1, a, halves) = m.split_edge(e1, lo)?;
            let (m2, b) = m1.realize_point(&PointRef::interior(halves[1].clone(), hi - lo))?;
            (m2, a, b)
        }
        _ => {
            let (m1, a) = m.realize_point(p)?;
            let (m2, b) = m1.realize_point(q)?;
            (m2, a, b)
        }
    };
    Ok(dijkstra(&m2, &a)[&b])
}

/// Single-source shortest paths, quadratic in the number of vertices.
pub(super) fn dijkstra(m: &Model, source: &str) -> BTreeMap<VertexId, Rational> {
    let mut dist: BTreeMap<&VertexId, Option<Rational>> = m.vertices().map(|v| (v, None)).collect();
    let mut done: BTreeMap<&VertexId, Rational> = BTreeMap::new();
    *dist.get_mut(&source.to_string()).unwrap() = Some(Rational::zero());
    let mut adjacency: BTreeMap<&VertexId, Vec<(&VertexId, Rational)>> = BTreeMap::new();
    for (id, e) in m.edges() {
        let len = m.lengths()[id];
        adjacency.entry(&e.v0).or_default().push((&e.v1, len));
        adjacency.entry(&e.v1).or_default().push((&e.v0, len));
    }
    while let Some((v, d)) = dist
        .iter()
        .filter(|(v, d)| d.is_some() && !done.contains_key(*v))
        .map(|(v, d)| (*v, d.unwrap()))
        .min_by_key(|(_, d)| *d)
    {
        done.insert(v, d);
        for &(w, len) in adjacency.get(v).into_iter().flatten() {
            let cand = d + len;
            let slot = dist.get_mut(w).unwrap();
            if slot.is_none_or(|cur| cand < cur) {
                *slot = Some(cand);
            }
        }
    }
    done.into_iter().map(|(v, d)| (v.clone(), d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ModelBuilder;

    #[test]
    fn antipodal_points_on_two_cycle() {
        let m = ModelBuilder::new("c")
            .vertices(["x", "y"])
            .edge("a", "x", "y", Rational::from_integer(3))
            .edge("b", "y", "x", Rational::from_integer(5))
            .build()
            .unwrap();
        // circumference 8; the point at x+3/2 along a is opposite b's point
        // at 5/2 from y
        let p = PointRef::interior("a", Rational::new(3, 2));
        let q = PointRef::interior("b", Rational::new(5, 2));
        assert_eq!(m.distance(&p, &q).unwrap(), Rational::from_integer(4));
        let q2 = PointRef::interior("a", Rational::new(1, 2));
        assert_eq!(m.distance(&p, &q2).unwrap(), Rational::one());
        assert_eq!(m.distance(&q2, &p).unwrap(), Rational::one());
    }

    #[test]
    fn points_on_a_loop() {
        let m = ModelBuilder::new("c")
            .vertex("x")
            .edge("l", "x", "x", Rational::from_integer(10))
            .build()
            .unwrap();
        let p = PointRef::interior("l", Rational::from_integer(1));
        let q = PointRef::interior("l", Rational::from_integer(9));
        assert_eq!(m.distance(&p, &q).unwrap(), Rational::from_integer(2));
        assert_eq!(
            m.distance(&p, &PointRef::vertex("x")).unwrap(),
            Rational::from_integer(1)
        );
    }
}
