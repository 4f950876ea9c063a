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

use crate::graph::{isomorphisms, EdgeId, Model, VertexId};
use crate::modification::canonical_representative;

use super::catalogue::{catalogue, ConstraintStatus};
use super::{CaseId, ConstructionError, ParamSet};

/// A genus-3 model recognised as one of the catalogue cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub case: CaseId,
    pub params: ParamSet,
    /// The canonical representative that was matched.
    pub canonical: Model,
    /// Template vertex to vertex of `canonical`.
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    /// Template edge to edge of `canonical`.
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

/// Finds the catalogue case of `m` and reads off its parameters.
///
/// The model is reduced to its canonical representative and matched, with
/// lengths ignored, against every template with the same number of
/// bridges. Every matching isomorphism yields a parameter assignment; those
/// meeting the case constraint are kept and the lexicographically smallest
/// `(a, b, ..., f)` wins. For the K4 type this picks the base vertex and
/// the subcase at once. If a template matches but every assignment sits on
/// the `a = b` boundary the model is reported as hyperelliptic.
pub fn classify(m: &Model) -> Result<Classification, ConstructionError> {
    let genus = m.genus();
    if genus != 3 {
        return Err(ConstructionError::NotGenus3(genus));
    }
    let canonical =
        canonical_representative(m).map_err(|e| ConstructionError::Unrecognized(e.to_string()))?;
    let bridges = canonical.bridge_count();

    let mut degenerate = false;
    let mut best: Option<(Vec<_>, Classification)> = None;
    for entry in catalogue() {
        let template = entry.template;
        if template.bridge_count() != bridges {
            continue;
        }
        let shape = template.shape();
        for iso in isomorphisms(&shape, &canonical, false) {
            let params = ParamSet::from_pairs(
                iso.edge_map
                    .iter()
                    .map(|(te, ce)| (template.slot(te).unwrap(), canonical.length(ce).unwrap())),
            );
            match entry.constraint.status(&params) {
                ConstraintStatus::Satisfied => {}
                ConstraintStatus::Degenerate => {
                    degenerate = true;
                    continue;
                }
                ConstraintStatus::Violated => continue,
            }
            let key = params.tuple();
            if best.as_ref().is_some_and(|(k, _)| *k <= key) {
                continue;
            }
            best = Some((
                key,
                Classification {
                    case: entry.case,
                    params,
                    canonical: canonical.clone(),
                    vertex_map: iso.vertex_map,
                    edge_map: iso.edge_map,
                },
            ));
        }
    }
    match best {
        Some((_, c)) => Ok(c),
        None if degenerate => Err(ConstructionError::HyperellipticDegenerate),
        None => Err(ConstructionError::Unrecognized(format!(
            "no catalogue type with {bridges} bridges matches"
        ))),
    }
}
