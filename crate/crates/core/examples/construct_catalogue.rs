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

//! Every catalogue case with random rational parameters, constructed and
//! certified.
//!
//!     cargo run --example construct_catalogue [seed]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tgon::constructions::{entry, random_params};
use tgon::{construct_case, CaseId};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in CaseId::ALL {
        let params = random_params(case, &mut rng);
        let res = construct_case(case, &params).expect("construction certifies");
        let rh_slack: i64 = res
            .certificate
            .riemann_hurwitz
            .as_ref()
            .map(|r| r.entries.iter().map(|e| e.slack).sum())
            .unwrap_or_default();
        println!(
            "{case:<6} {:<32} |V'| {:>2} |E'| {:>2} tree edges {:>2} degree {} total RH slack {rh_slack}",
            entry(case).template.name,
            res.gamma_prime.vertex_count(),
            res.gamma_prime.edge_count(),
            res.tree.edge_count(),
            res.certificate.degree.unwrap(),
        );
        println!("       {params}");
    }
}
