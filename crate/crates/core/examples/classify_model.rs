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

//! Recognising a genus-3 graph given with arbitrary labels, extra
//! subdivisions and dangling trees.
//!
//!     cargo run --example classify_model [path.tmg]

use tgon::io::parse_model;
use tgon::{classify, construct};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/data/loops_and_bridges.tmg"
        )
        .into()
    });
    let text = std::fs::read_to_string(&path).expect("readable model file");
    let m = parse_model(&text).expect("valid model");
    println!("{path}: genus {}, {} bridges", m.genus(), m.bridges().len());

    match classify(&m) {
        Ok(c) => {
            println!("case {} with {}", c.case, c.params);
            for (t, v) in &c.vertex_map {
                println!("  template {t} is {v}");
            }
            let res = construct(&m).expect("classified models construct");
            println!(
                "degree-3 morphism onto a tree with {} edges",
                res.tree.edge_count()
            );
        }
        Err(e) => println!("{e}"),
    }
}
