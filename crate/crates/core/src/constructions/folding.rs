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

use crate::graph::ModelBuilder;
use crate::morphism::{induce_from_vertex_map, MorphismSpec};
use crate::rational::Rational;

use super::{entry, CaseId, ConstructionError, Param, ParamSet};

/// The degree-2 quotient of the tripod of loops by its involution.
///
/// Each loop is folded in half onto a leaf edge and each bridge is covered
/// twice by itself, so the bridges carry slope 2. The map is harmonic of
/// degree 2 but breaks the local Riemann-Hurwitz inequality at the centre
/// (`k = 3`, `l = 3`, `m = 2`), which is why the tripod needs the degree-3
/// construction instead.
pub fn tripod_folding(params: &ParamSet) -> Result<MorphismSpec, ConstructionError> {
    entry(CaseId::C4).template.instantiate(params)?;
    let g = |p| params.get(p).unwrap();
    let two = Rational::from_integer(2);
    let legs = [
        ("2", g(Param::A), g(Param::D)),
        ("3", g(Param::B), g(Param::E)),
        ("4", g(Param::C), g(Param::F)),
    ];
    let mut source = ModelBuilder::new("tripod").vertex("v1");
    let mut target = ModelBuilder::new("quotient").vertex("w1");
    let mut psi = BTreeMap::from([("v1".to_string(), "w1".to_string())]);
    for (i, bridge, ring) in legs {
        let (v, vp, w, wp) = (
            format!("v{i}"),
            format!("v{i}p"),
            format!("w{i}"),
            format!("w{i}p"),
        );
        source = source
            .vertices([v.clone(), vp.clone()])
            .edge(format!("v1_{v}"), "v1", v.clone(), bridge)
            .edge(format!("{v}_{vp}"), v.clone(), vp.clone(), ring.half())
            .edge(format!("{vp}_{v}"), vp.clone(), v.clone(), ring.half());
        target = target
            .vertices([w.clone(), wp.clone()])
            .edge(format!("w1_{w}"), "w1", w.clone(), two * bridge)
            .edge(format!("{w}_{wp}"), w.clone(), wp.clone(), ring.half());
        psi.insert(v, w);
        psi.insert(vp, wp);
    }
    let fail = |e: String| ConstructionError::InternalVerificationFailure(e);
    let source = source.build().map_err(|e| fail(e.to_string()))?;
    let target = target.build().map_err(|e| fail(e.to_string()))?;
    induce_from_vertex_map("folding", &source, &target, &psi).map_err(|e| fail(e.to_string()))
}
