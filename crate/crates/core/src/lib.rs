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

//! Metric graphs with exact rational edge lengths, harmonic maps between
//! them, and certified degree-3 tropical morphisms for genus-3 graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`rational`]: overflow-checked exact rationals.
//! - [`graph`]: multigraphs, metric models, subdivision, bridges,
//!   essential models, distances and isomorphism.
//! - [`modification`]: grafting trees and tropical equivalence.
//! - [`morphism`]: edge images, slopes, harmonicity, degree, fibers and
//!   the Riemann-Hurwitz check.
//! - [`constructions`]: the genus-3 catalogue, classification and the
//!   degree-3 constructions.
//! - [`io`]: the `.tmg` / `.tpm` text formats, certificates and Graphviz.
//! - [`cli`]: the `tgon` command line.
//!
//! ```
//! use tgon::constructions::construct;
//! use tgon::io::parse_model;
//!
//! let k4 = parse_model(
//!     "graph k4
//!      vertex v1\n vertex v2\n vertex v3\n vertex v4
//!      edge e1 v1 v2 5\n edge e2 v1 v3 3\n edge e3 v4 v1 1
//!      edge e4 v3 v4 2\n edge e5 v2 v3 4\n edge e6 v2 v4 6",
//! )
//! .unwrap();
//! let result = construct(&k4).unwrap();
//! assert_eq!(result.certificate.degree, Some(3));
//! assert!(result.certificate.is_tropical());
//! ```

pub mod cli;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod modification;
pub mod morphism;
pub mod rational;

pub use constructions::{
    classify, construct, construct_case, CaseId, ConstructionResult, ParamSet,
};
pub use graph::{Model, ModelBuilder, PointRef};
pub use morphism::{induce_from_vertex_map, EdgeImage, MorphismSpec, TropicalCertificate};
pub use rational::Rational;
