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

use std::fmt::Write;

use crate::graph::Model;
use crate::morphism::{EdgeImage, MorphismSpec};

const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

fn write_edges(out: &mut String, m: &Model, prefix: &str, indent: &str) {
    for (id, e) in m.edges() {
        writeln!(
            out,
            "{indent}\"{prefix}{}\" -- \"{prefix}{}\" [label=\"{id} {}\"];",
            e.v0,
            e.v1,
            m.lengths()[id]
        )
        .unwrap();
    }
}

/// Graphviz `graph` for a model, edges labelled with id and length.
pub fn render_model(m: &Model) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", m.name()).unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for v in m.vertices() {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    write_edges(&mut out, m, "", "  ");
    writeln!(out, "}}").unwrap();
    out
}

/// Source and target side by side. Vertices are coloured by their image
/// and dashed lines join each source vertex to its image; collapsed edges
/// are drawn bold.
pub fn render_morphism(phi: &MorphismSpec) -> String {
    let colour = |w: &str| {
        let i = phi.target().vertices().position(|x| x == w).unwrap_or(0);
        PALETTE[i % PALETTE.len()]
    };
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", phi.name()).unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10, style=filled];").unwrap();
    writeln!(out, "  subgraph cluster_source {{").unwrap();
    writeln!(out, "    label=\"{}\";", phi.source().name()).unwrap();
    for (v, w) in phi.vertex_map() {
        writeln!(
            out,
            "    \"s:{v}\" [label=\"{v}\", fillcolor=\"{}\"];",
            colour(w)
        )
        .unwrap();
    }
    for (id, e) in phi.source().edges() {
        let style = match &phi.edge_map()[id] {
            EdgeImage::Constant(_) => ", penwidth=3".to_string(),
            EdgeImage::Onto { .. } => format!(", taillabel=\"{}\"", phi.slope(id).unwrap()),
        };
        writeln!(
            out,
            "    \"s:{}\" -- \"s:{}\" [label=\"{id} {}\"{style}];",
            e.v0,
            e.v1,
            phi.source().lengths()[id]
        )
        .unwrap();
    }
    writeln!(out, "  }}").unwrap();
    writeln!(out, "  subgraph cluster_target {{").unwrap();
    writeln!(out, "    label=\"{}\";", phi.target().name()).unwrap();
    for w in phi.target().vertices() {
        writeln!(
            out,
            "    \"t:{w}\" [label=\"{w}\", fillcolor=\"{}\"];",
            colour(w)
        )
        .unwrap();
    }
    write_edges(&mut out, phi.target(), "t:", "    ");
    writeln!(out, "  }}").unwrap();
    for (v, w) in phi.vertex_map() {
        writeln!(
            out,
            "  \"s:{v}\" -- \"t:{w}\" [style=dashed, constraint=false, color=gray];"
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
