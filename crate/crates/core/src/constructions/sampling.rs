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

use rand::Rng;

use crate::rational::Rational;

use super::{entry, CaseId, Constraint, ConstraintStatus, Param, ParamSet};

/// Largest numerator and denominator drawn by [`random_params`].
pub const MAX_TERM: i128 = 64;

fn draw<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::new(
        rng.random_range(1..=MAX_TERM),
        rng.random_range(1..=MAX_TERM),
    )
}

/// Random parameters for `case` that satisfy its constraint. Every value
/// is `p/q` with `1 <= p, q <= 64`.
pub fn random_params<R: Rng + ?Sized>(case: CaseId, rng: &mut R) -> ParamSet {
    let e = entry(case);
    loop {
        let mut p = ParamSet::from_pairs(e.slots().into_iter().map(|s| (s, draw(rng))));
        match e.constraint {
            Constraint::K4Distinct => {
                let mut abc =
                    [p.get(Param::A), p.get(Param::B), p.get(Param::C)].map(Option::unwrap);
                abc.sort_by(|x, y| y.cmp(x));
                p = p
                    .with(Param::A, abc[0])
                    .with(Param::B, abc[1])
                    .with(Param::C, abc[2]);
            }
            Constraint::K4TwoEqual => {
                let (x, y) = (p.get(Param::A).unwrap(), p.get(Param::B).unwrap());
                p = p
                    .with(Param::A, x.max(y))
                    .with(Param::B, x.min(y))
                    .with(Param::C, x.min(y));
            }
            Constraint::K4AllEqual => {
                let x = p.get(Param::A).unwrap();
                p = p.with(Param::B, x).with(Param::C, x);
            }
            Constraint::BGreaterThanA => {
                let (x, y) = (p.get(Param::A).unwrap(), p.get(Param::B).unwrap());
                p = p.with(Param::A, x.min(y)).with(Param::B, x.max(y));
            }
            Constraint::None => {}
        }
        if e.constraint.status(&p) == ConstraintStatus::Satisfied {
            return p;
        }
    }
}
