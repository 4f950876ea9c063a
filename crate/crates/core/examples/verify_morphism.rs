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

//! Building a map from a vertex assignment and checking what it is.
//!
//!     cargo run --example verify_morphism

use std::collections::BTreeMap;

use tgon::graph::PointRef;
use tgon::io::emit_certificate;
use tgon::{induce_from_vertex_map, ModelBuilder, Rational};

fn main() {
    let r = Rational::from_integer;
    // A 2-cycle of total length 4 folded onto a segment of length 2.
    let circle = ModelBuilder::new("circle")
        .vertices(["n", "s"])
        .edge("east", "n", "s", r(2))
        .edge("west", "s", "n", r(2))
        .build()
        .unwrap();
    let segment = ModelBuilder::new("segment")
        .vertices(["top", "bottom"])
        .edge("i", "top", "bottom", r(2))
        .build()
        .unwrap();
    let psi: BTreeMap<String, String> = [("n", "top"), ("s", "bottom")]
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .into();

    let phi = induce_from_vertex_map("fold", &circle, &segment, &psi).unwrap();
    for (e, img) in phi.edge_map() {
        println!("{e} -> {img:?}, slope {}", phi.slope(e).unwrap());
    }
    println!(
        "fiber over i@1/2: {:?}",
        phi.fiber(&PointRef::interior("i", Rational::new(1, 2)))
            .unwrap()
    );

    let cert = phi.is_tropical_morphism(true);
    print!("{}", emit_certificate(&phi, &cert));

    // Unequal sides give slopes 2 and 1. Each end of the segment has a
    // single direction, so the map is still harmonic, now of degree 3.
    let lopsided = ModelBuilder::new("circle")
        .vertices(["n", "s"])
        .edge("east", "n", "s", r(1))
        .edge("west", "s", "n", r(2))
        .build()
        .unwrap();
    let phi3 = induce_from_vertex_map("fold", &lopsided, &segment, &psi).unwrap();
    println!("lopsided: degree {:?}", phi3.degree());

    // Sending both vertices to the top contracts the whole circle.
    let both_top: BTreeMap<String, String> = [("n", "top"), ("s", "top")]
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .into();
    let collapsed = induce_from_vertex_map("collapse", &circle, &segment, &both_top).unwrap();
    let cert = collapsed.is_tropical_morphism(true);
    println!("collapsed: tropical {}", cert.is_tropical());
    for f in cert.failures() {
        println!("  {f}");
    }
}
