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

//! Line-oriented text formats and Graphviz output.
//!
//! Models use the `.tmg` format:
//!
//! ```text
//! # comment
//! graph theta
//! vertex x
//! vertex y
//! edge a x y 1
//! edge b x y 3/2
//! ```
//!
//! Morphisms use the `.tpm` format, which names its source and target
//! models and lists the vertex and edge maps:
//!
//! ```text
//! morphism fold
//! source circle
//! target segment
//! vmap p x
//! emap a onto t +
//! emap c const x
//! ```
//!
//! Emitters sort everything by id, so `emit(parse(text))` is a normal form
//! and `parse(emit(m)) == m`.

mod dot;

use std::collections::BTreeMap;
use std::fmt::Write;

pub use dot::{render_model, render_morphism};

use crate::graph::{GraphError, Model, ModelBuilder};
use crate::morphism::{EdgeImage, MorphismError, MorphismSpec, TropicalCertificate};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` header")]
    MissingHeader(&'static str),
    #[error("invalid model: {0}")]
    Model(#[from] GraphError),
    #[error("invalid morphism: {0}")]
    Morphism(#[from] MorphismError),
    #[error("morphism expects {role} model {expected:?}, got {found:?}")]
    NameMismatch {
        role: &'static str,
        expected: String,
        found: String,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty, comment-stripped lines with 1-based numbers.
fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn expect_args(line: usize, toks: &[&str], n: usize) -> Result<(), ParseError> {
    if toks.len() != n + 1 {
        return Err(syntax(
            line,
            format!(
                "`{}` takes {} argument(s), got {}",
                toks[0],
                n,
                toks.len() - 1
            ),
        ));
    }
    Ok(())
}

/// Parses a `.tmg` model.
pub fn parse_model(text: &str) -> Result<Model, ParseError> {
    let mut builder: Option<ModelBuilder> = None;
    let mut declared: Vec<&str> = Vec::new();
    for (line, toks) in tokens(text) {
        match (toks[0], builder.take()) {
            ("graph", None) => {
                expect_args(line, &toks, 1)?;
                builder = Some(ModelBuilder::new(toks[1]));
            }
            ("graph", Some(_)) => return Err(syntax(line, "second `graph` header")),
            (_, None) => return Err(ParseError::MissingHeader("graph")),
            ("vertex", Some(b)) => {
                expect_args(line, &toks, 1)?;
                if declared.contains(&toks[1]) {
                    return Err(syntax(line, format!("duplicate vertex {}", toks[1])));
                }
                declared.push(toks[1]);
                builder = Some(b.vertex(toks[1]));
            }
            ("edge", Some(b)) => {
                expect_args(line, &toks, 4)?;
                let len: Rational =
                    toks[4]
                        .parse()
                        .map_err(|e: crate::rational::ParseRationalError| {
                            syntax(line, e.to_string())
                        })?;
                if let Some(v) = toks[2..4].iter().find(|v| !declared.contains(v)) {
                    return Err(syntax(line, format!("unknown vertex {v}")));
                }
                if !len.is_positive() {
                    return Err(syntax(line, format!("non-positive length {len}")));
                }
                builder = Some(b.edge(toks[1], toks[2], toks[3], len));
            }
            (kw, Some(_)) => return Err(syntax(line, format!("unknown keyword `{kw}`"))),
        }
    }
    Ok(builder.ok_or(ParseError::MissingHeader("graph"))?.build()?)
}

/// Emits a model in `.tmg` form with vertices and edges sorted by id.
pub fn emit_model(m: &Model) -> String {
    let mut out = String::new();
    writeln!(out, "graph {}", m.name()).unwrap();
    for v in m.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for (id, e) in m.edges() {
        writeln!(out, "edge {id} {} {} {}", e.v0, e.v1, m.lengths()[id]).unwrap();
    }
    out
}

/// The source and target model names a `.tpm` text refers to.
pub fn morphism_header(text: &str) -> Result<(String, String), ParseError> {
    let (mut source, mut target) = (None, None);
    for (line, toks) in tokens(text) {
        match toks[0] {
            "source" => {
                expect_args(line, &toks, 1)?;
                source = Some(toks[1].to_string());
            }
            "target" => {
                expect_args(line, &toks, 1)?;
                target = Some(toks[1].to_string());
            }
            _ => {}
        }
    }
    Ok((
        source.ok_or(ParseError::MissingHeader("source"))?,
        target.ok_or(ParseError::MissingHeader("target"))?,
    ))
}

/// Parses a `.tpm` morphism between the given models. The `source` and
/// `target` lines must name them.
pub fn parse_morphism(
    text: &str,
    source: &Model,
    target: &Model,
) -> Result<MorphismSpec, ParseError> {
    let mut name = None;
    let mut vmap = BTreeMap::new();
    let mut emap = BTreeMap::new();
    let (src_name, tgt_name) = morphism_header(text)?;
    for (role, declared, given) in [
        ("source", &src_name, source.name()),
        ("target", &tgt_name, target.name()),
    ] {
        if declared != given {
            return Err(ParseError::NameMismatch {
                role,
                expected: declared.clone(),
                found: given.to_string(),
            });
        }
    }
    for (line, toks) in tokens(text) {
        if name.is_none() && toks[0] != "morphism" {
            return Err(ParseError::MissingHeader("morphism"));
        }
        match toks[0] {
            "morphism" => {
                expect_args(line, &toks, 1)?;
                if name.replace(toks[1].to_string()).is_some() {
                    return Err(syntax(line, "second `morphism` header"));
                }
            }
            "source" | "target" => {}
            "vmap" => {
                expect_args(line, &toks, 2)?;
                if vmap
                    .insert(toks[1].to_string(), toks[2].to_string())
                    .is_some()
                {
                    return Err(syntax(line, format!("vertex {} mapped twice", toks[1])));
                }
            }
            "emap" => {
                let image = match toks.get(2).copied() {
                    Some("const") => {
                        expect_args(line, &toks, 3)?;
                        EdgeImage::Constant(toks[3].to_string())
                    }
                    Some("onto") => {
                        expect_args(line, &toks, 4)?;
                        let aligned = match toks[4] {
                            "+" => true,
                            "-" => false,
                            o => {
                                return Err(syntax(
                                    line,
                                    format!("orientation must be + or -, got {o}"),
                                ))
                            }
                        };
                        EdgeImage::Onto {
                            edge: toks[3].to_string(),
                            aligned,
                        }
                    }
                    _ => {
                        return Err(syntax(
                            line,
                            "expected `emap <e> const <v>` or `emap <e> onto <t> +|-`",
                        ))
                    }
                };
                if emap.insert(toks[1].to_string(), image).is_some() {
                    return Err(syntax(line, format!("edge {} mapped twice", toks[1])));
                }
            }
            kw => return Err(syntax(line, format!("unknown keyword `{kw}`"))),
        }
    }
    let name = name.ok_or(ParseError::MissingHeader("morphism"))?;
    Ok(MorphismSpec::new(
        name,
        source.clone(),
        target.clone(),
        vmap,
        emap,
    )?)
}

/// Emits a morphism in `.tpm` form, sorted by id.
pub fn emit_morphism(phi: &MorphismSpec) -> String {
    let mut out = String::new();
    writeln!(out, "morphism {}", phi.name()).unwrap();
    writeln!(out, "source {}", phi.source().name()).unwrap();
    writeln!(out, "target {}", phi.target().name()).unwrap();
    for (v, w) in phi.vertex_map() {
        writeln!(out, "vmap {v} {w}").unwrap();
    }
    for (e, image) in phi.edge_map() {
        writeln!(out, "emap {e} {image}").unwrap();
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Emits a certificate as `key: value` lines followed by per-vertex
/// witness lines and any failures.
///
/// ```text
/// tropical: yes
/// harmonic: yes
/// degree: 3
/// rh: yes
/// vertex v1 image w1 m 1 k 3 l 3 slack 0
/// ```
pub fn emit_certificate(phi: &MorphismSpec, cert: &TropicalCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "tropical: {}", yes_no(cert.is_tropical())).unwrap();
    writeln!(out, "harmonic: {}", yes_no(cert.harmonic())).unwrap();
    match cert.degree {
        Some(d) => writeln!(out, "degree: {d}").unwrap(),
        None => writeln!(out, "degree: none").unwrap(),
    }
    writeln!(out, "rh: {}", yes_no(cert.rh_holds())).unwrap();
    if let Some(rh) = &cert.riemann_hurwitz {
        for e in &rh.entries {
            writeln!(
                out,
                "vertex {} image {} m {} k {} l {} slack {}",
                e.vertex,
                phi.vertex_map()[&e.vertex],
                e.m,
                e.k,
                e.l,
                e.slack
            )
            .unwrap();
        }
    }
    for f in cert.failures() {
        writeln!(out, "fail: {f}").unwrap();
    }
    out
}
