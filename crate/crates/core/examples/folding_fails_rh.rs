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

//! The tripod of loops has an obvious degree-2 map onto a tree: fold each
//! loop in half. It is harmonic but fails Riemann-Hurwitz at the centre.
//!
//!     cargo run --example folding_fails_rh

use tgon::constructions::tripod_folding;
use tgon::{construct_case, CaseId, ParamSet};

fn main() {
    let params = ParamSet::for_case(CaseId::C4, &[1, 2, 3, 4, 5, 6]).unwrap();
    let fold = tripod_folding(&params).unwrap();
    let cert = fold.is_tropical_morphism(true);
    println!(
        "harmonic {} degree {:?} tropical {}",
        cert.harmonic(),
        cert.degree,
        cert.is_tropical()
    );
    for e in fold.riemann_hurwitz().unwrap().failures() {
        println!(
            "  {}: k = {}, l = {}, m = {}, (k-2) - m(l-2) = {}",
            e.vertex, e.k, e.l, e.m, e.slack
        );
    }

    let res = construct_case(CaseId::C4, &params).unwrap();
    println!(
        "degree-3 construction: tropical {}",
        res.certificate.is_tropical()
    );
}
