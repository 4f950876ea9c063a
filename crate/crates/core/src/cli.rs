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

//! Command-line front end. [`run`] does all the work and returns the exit
//! code and output, so the binary only parses arguments and prints.
//!
//! Exit codes: 0 success, 1 a verification came out negative, 2 input
//! could not be read or parsed, 3 the model could not be classified.

use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    classify, construct, construct_case, random_params, tgon_upper_bound, CaseId, ConstructionError,
};
use crate::graph::Model;
use crate::io::{
    emit_certificate, emit_model, emit_morphism, parse_model, parse_morphism, render_model,
    render_morphism,
};
use crate::modification::tropically_equivalent;
use crate::morphism::MorphismSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CLASSIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "tgon",
    version,
    about = "Metric graphs, tropical morphisms and degree-3 constructions in genus 3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus, valences, bridges and essential model of a .tmg file.
    Info { model: PathBuf },
    /// Catalogue case and parameters of a genus-3 model.
    Classify { model: PathBuf },
    /// Build and certify a degree-3 tropical morphism for a genus-3 model.
    Construct {
        model: PathBuf,
        /// Directory for gamma_prime.tmg, tree.tmg, phi.tpm and certificate.txt.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a morphism; harmonicity only unless --tropical is given.
    Verify {
        source: PathBuf,
        target: PathBuf,
        morphism: PathBuf,
        /// Require a tropical morphism onto a tree.
        #[arg(long)]
        tropical: bool,
    },
    /// Graphviz output for a model, or for a morphism with --target and --morphism.
    Render {
        model: PathBuf,
        #[arg(long, requires = "morphism")]
        target: Option<PathBuf>,
        #[arg(long, requires = "target")]
        morphism: Option<PathBuf>,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random sweep over every catalogue case.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameter draws per case.
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
}

/// Exit code and captured output of one command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }
}

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_model(path: &Path) -> Result<Model, Outcome> {
    parse_model(&read(path)?)
        .map_err(|e| Outcome::fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_morphism(source: &Path, target: &Path, phi: &Path) -> Result<MorphismSpec, Outcome> {
    let (s, t) = (load_model(source)?, load_model(target)?);
    parse_morphism(&read(phi)?, &s, &t)
        .map_err(|e| Outcome::fail(EXIT_PARSE, format!("{}: {e}", phi.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Outcome> {
    fs::write(path, text)
        .map_err(|e| Outcome::fail(EXIT_NEGATIVE, format!("{}: {e}", path.display())))
}

fn classification_failure(e: ConstructionError) -> Outcome {
    let code = match e {
        ConstructionError::InternalVerificationFailure(_) => EXIT_NEGATIVE,
        _ => EXIT_CLASSIFY,
    };
    Outcome::fail(code, e.to_string())
}

/// Runs one command.
pub fn run(command: &Command) -> Outcome {
    let result = match command {
        Command::Info { model } => info(model),
        Command::Classify { model } => classify_cmd(model),
        Command::Construct { model, out } => construct_cmd(model, out.as_deref()),
        Command::Verify {
            source,
            target,
            morphism,
            tropical,
        } => verify(source, target, morphism, *tropical),
        Command::Render {
            model,
            target,
            morphism,
            out,
        } => render(
            model,
            target.as_deref(),
            morphism.as_deref(),
            out.as_deref(),
        ),
        Command::Selftest { seed, trials } => Ok(selftest(*seed, *trials)),
    };
    result.unwrap_or_else(|o| o)
}

fn info(path: &Path) -> Result<Outcome, Outcome> {
    let m = load_model(path)?;
    let mut out = String::new();
    writeln!(out, "graph: {}", m.name()).unwrap();
    writeln!(out, "genus: {}", m.genus()).unwrap();
    writeln!(out, "vertices: {}", m.vertex_count()).unwrap();
    writeln!(out, "edges: {}", m.edge_count()).unwrap();
    writeln!(out, "total_length: {}", m.total_length()).unwrap();
    let bridges: Vec<String> = m.bridges().into_iter().collect();
    writeln!(out, "bridges: {}", bridges.join(" ")).unwrap();
    for v in m.vertices() {
        writeln!(out, "valence {v} {}", m.valence(v)).unwrap();
    }
    match crate::modification::canonical_representative(&m) {
        Ok(c) => writeln!(
            out,
            "canonical: {} vertices, {} edges",
            c.vertex_count(),
            c.edge_count()
        )
        .unwrap(),
        Err(e) => writeln!(out, "canonical: {e}").unwrap(),
    }
    writeln!(out, "gonality_bound: {}", tgon_upper_bound(m.genus())).unwrap();
    Ok(Outcome::ok(out))
}

fn classify_cmd(path: &Path) -> Result<Outcome, Outcome> {
    let m = load_model(path)?;
    let c = classify(&m).map_err(classification_failure)?;
    let mut out = String::new();
    writeln!(out, "case: {}", c.case).unwrap();
    writeln!(out, "params: {}", c.params).unwrap();
    for (t, v) in &c.vertex_map {
        writeln!(out, "vertex {t} {v}").unwrap();
    }
    for (t, e) in &c.edge_map {
        writeln!(out, "edge {t} {e}").unwrap();
    }
    Ok(Outcome::ok(out))
}

fn construct_cmd(path: &Path, out_dir: Option<&Path>) -> Result<Outcome, Outcome> {
    let m = load_model(path)?;
    let res = construct(&m).map_err(classification_failure)?;
    let cert = emit_certificate(&res.phi, &res.certificate);
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)
            .map_err(|e| Outcome::fail(EXIT_NEGATIVE, format!("{}: {e}", dir.display())))?;
        write_file(&dir.join("gamma_prime.tmg"), &emit_model(&res.gamma_prime))?;
        write_file(&dir.join("tree.tmg"), &emit_model(&res.tree))?;
        write_file(&dir.join("phi.tpm"), &emit_morphism(&res.phi))?;
        write_file(&dir.join("certificate.txt"), &cert)?;
    }
    let mut out = String::new();
    writeln!(out, "case: {}", res.case).unwrap();
    writeln!(out, "params: {}", res.params).unwrap();
    out.push_str(&cert);
    Ok(Outcome::ok(out))
}

fn verify(source: &Path, target: &Path, phi: &Path, tropical: bool) -> Result<Outcome, Outcome> {
    let phi = load_morphism(source, target, phi)?;
    let cert = phi.is_tropical_morphism(tropical);
    let text = emit_certificate(&phi, &cert);
    let good = if tropical {
        cert.is_tropical()
    } else {
        cert.harmonic()
    };
    Ok(Outcome {
        code: if good { EXIT_OK } else { EXIT_NEGATIVE },
        stdout: text,
        stderr: String::new(),
    })
}

fn render(
    model: &Path,
    target: Option<&Path>,
    morphism: Option<&Path>,
    out: Option<&Path>,
) -> Result<Outcome, Outcome> {
    let dot = match (target, morphism) {
        (Some(t), Some(p)) => render_morphism(&load_morphism(model, t, p)?),
        _ => render_model(&load_model(model)?),
    };
    match out {
        Some(path) => {
            write_file(path, &dot)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(dot)),
    }
}

/// For each case: draw parameters, construct directly, then rebuild the
/// template, classify it, construct again and check the round trip
/// through the text formats.
pub fn selftest(seed: u64, trials: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    let mut all_ok = true;
    for case in CaseId::ALL {
        let mut passed = 0;
        let mut first_failure = None;
        for _ in 0..trials {
            let params = random_params(case, &mut rng);
            let check = || -> Result<(), String> {
                let direct = construct_case(case, &params).map_err(|e| e.to_string())?;
                let template = crate::constructions::entry(case)
                    .template
                    .instantiate(&params)
                    .map_err(|e| e.to_string())?;
                let via = construct(&template).map_err(|e| e.to_string())?;
                if !tropically_equivalent(&via.gamma_prime, &direct.gamma_prime) {
                    return Err("classified construction differs".into());
                }
                let text = emit_model(&direct.gamma_prime);
                let back = parse_model(&text).map_err(|e| e.to_string())?;
                let phi = parse_morphism(&emit_morphism(&direct.phi), &back, &direct.tree)
                    .map_err(|e| e.to_string())?;
                if phi != direct.phi {
                    return Err("text round trip changed the morphism".into());
                }
                Ok(())
            };
            match check() {
                Ok(()) => passed += 1,
                Err(e) => {
                    first_failure.get_or_insert(format!("{params}: {e}"));
                }
            }
        }
        all_ok &= passed == trials;
        write!(out, "{case} {passed}/{trials}").unwrap();
        if let Some(f) = first_failure {
            write!(out, " first failure {f}").unwrap();
        }
        out.push('\n');
    }
    writeln!(out, "selftest: {}", if all_ok { "pass" } else { "fail" }).unwrap();
    Outcome {
        code: if all_ok { EXIT_OK } else { EXIT_NEGATIVE },
        stdout: out,
        stderr: String::new(),
    }
}
