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

//! Building a metric graph and asking basic questions about it.
//!
//!     cargo run --example model_basics

use tgon::graph::PointRef;
use tgon::{ModelBuilder, Rational};

fn main() {
    let r = Rational::from_integer;
    // A theta graph with a pendant edge hanging off one vertex.
    let m = ModelBuilder::new("theta")
        .vertices(["a", "b", "c"])
        .edge("x", "a", "b", r(1))
        .edge("y", "a", "b", r(2))
        .edge("z", "b", "a", Rational::new(7, 2))
        .edge("t", "b", "c", r(3))
        .build()
        .expect("valid model");

    println!("genus {} total length {}", m.genus(), m.total_length());
    println!("bridges {:?}", m.bridges());
    for v in m.vertices() {
        println!("  valence({v}) = {}", m.valence(v));
    }

    let mid_y = PointRef::interior("y", r(1));
    let d = m.distance(&mid_y, &PointRef::vertex("c")).unwrap();
    println!("distance from the middle of y to c: {d}");

    let ess = m.contract_dangling().essential_model().unwrap();
    println!(
        "essential model: {} vertices, {} edges",
        ess.vertex_count(),
        ess.edge_count()
    );

    let fine = m.subdivide_edge("z", Rational::new(1, 2)).unwrap();
    assert_eq!(fine.genus(), m.genus());
    println!("after subdividing z: {} vertices", fine.vertex_count());
}
