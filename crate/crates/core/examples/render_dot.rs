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

//! Graphviz output for a constructed morphism.
//!
//!     cargo run --example render_dot > phi.dot && dot -Tsvg phi.dot > phi.svg

use tgon::io::render_morphism;
use tgon::{construct_case, CaseId, ParamSet};

fn main() {
    let params = ParamSet::for_case(CaseId::C2_3, &[2, 3, 5, 7, 11]).unwrap();
    let res = construct_case(CaseId::C2_3, &params).unwrap();
    print!("{}", render_morphism(&res.phi));
}
