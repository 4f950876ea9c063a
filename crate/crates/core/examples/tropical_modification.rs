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

//! Tropical modification: grafting trees leaves the tropical class alone.
//!
//!     cargo run --example tropical_modification

use tgon::graph::PointRef;
use tgon::modification::{canonical_representative, graft_tree, tropically_equivalent, GraftSpec};
use tgon::{ModelBuilder, Rational};

fn main() {
    let r = Rational::from_integer;
    let k4 = ModelBuilder::new("k4")
        .vertices(["v1", "v2", "v3", "v4"])
        .edge("e1", "v1", "v2", r(5))
        .edge("e2", "v1", "v3", r(3))
        .edge("e3", "v4", "v1", r(1))
        .edge("e4", "v3", "v4", r(2))
        .edge("e5", "v2", "v3", r(4))
        .edge("e6", "v2", "v4", r(6))
        .build()
        .unwrap();

    let tripod = ModelBuilder::new("tripod")
        .vertices(["c", "l1", "l2", "l3"])
        .edge("s1", "c", "l1", r(1))
        .edge("s2", "c", "l2", r(2))
        .edge("s3", "c", "l3", Rational::new(1, 3))
        .build()
        .unwrap();

    let spec = GraftSpec {
        base_point: PointRef::interior("e6", r(4)),
        tree: tripod,
        attach_leaf: "l1".into(),
    };
    let modified = graft_tree(&k4, &spec).unwrap();
    println!(
        "modified: {} vertices, {} edges, genus {}",
        modified.vertex_count(),
        modified.edge_count(),
        modified.genus()
    );
    let dangling: Vec<_> = modified
        .edges()
        .filter(|(e, _)| modified.is_dangling(e).unwrap())
        .map(|(e, _)| e.clone())
        .collect();
    println!("dangling edges: {dangling:?}");

    let back = canonical_representative(&modified).unwrap();
    println!(
        "canonical: {} vertices, {} edges",
        back.vertex_count(),
        back.edge_count()
    );
    println!(
        "equivalent to k4: {}",
        tropically_equivalent(&modified, &k4)
    );

    let mut lens = k4.lengths().clone();
    *lens.get_mut("e1").unwrap() = r(6);
    let other = tgon::Model::new("k4b", k4.graph().clone(), lens).unwrap();
    println!(
        "equivalent after changing e1: {}",
        tropically_equivalent(&other, &k4)
    );
}
