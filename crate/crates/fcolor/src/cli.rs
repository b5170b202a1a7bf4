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

//! The `fcolor` command line.
//!
//! Exit codes: 0 f-Class 1 (or success), 2 f-Class 2 (or an invalid
//! coloring), 3 unknown, 1 other errors, 64 usage errors, 66 unreadable
//! input files.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use fcolor_core::{
    classify, classify_any, exact_chi_f, explain, search_coloring, upper_color_f, verify_coloring, ClassifyOptions,
    FColoring, FInstance, SearchOutcome, VerdictClass,
};
use serde::Serialize;

use crate::dot::to_dot;
use crate::families::{gen_family, FSpec};
use crate::fgr::{parse_fgr, serialize_fgr};
use crate::json::{AnyVerdictJson, ColoringJson, VerdictJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_CLASS2: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NO_INPUT: i32 = 66;

#[derive(Debug, Parser)]
#[command(name = "fcolor", version, about = "Classify and color graphs under f-edge-coloring constraints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide f-Class 1 or f-Class 2 and print the certificate.
    Classify {
        file: PathBuf,
        #[arg(long = "exact-limit", default_value_t = 24)]
        exact_limit: usize,
        #[arg(long = "cut-budget", default_value_t = 1_000_000)]
        cut_budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print an f-coloring as JSON.
    Color {
        file: PathBuf,
        /// Palette size; `Δ_f` triggers exact search when needed.
        #[arg(long)]
        colors: Option<usize>,
    },
    /// Check a coloring file against an instance.
    Verify { file: PathBuf, coloring: PathBuf },
    /// Exact f-chromatic index (at most 30 edges).
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a family member in .fgr format.
    Gen {
        family: String,
        params: Vec<String>,
        /// const:k, list:v1,...,vn or hub:k
        #[arg(long = "f")]
        f_spec: Option<String>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Classify every .fgr file in a directory, one line each.
    Batch {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long = "exact-limit", default_value_t = 24)]
        exact_limit: usize,
        #[arg(long = "cut-budget", default_value_t = 1_000_000)]
        cut_budget: u64,
    },
    /// Graphviz DOT, with edge colors when a coloring is given.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    NoInput(String),
    Error(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::NoInput(_) => EXIT_NO_INPUT,
            Failure::Error(_) => EXIT_ERROR,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::NoInput(m) | Failure::Error(m) => m,
        }
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::NoInput(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<FInstance, Failure> {
    parse_fgr(&read(path)?).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path) -> Result<ColoringJson, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn class_code(class: VerdictClass) -> i32 {
    match class {
        VerdictClass::Class1 => EXIT_OK,
        VerdictClass::Class2 => EXIT_CLASS2,
        VerdictClass::Unknown => EXIT_UNKNOWN,
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Error(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::Error(e.to_string()))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Error(e.to_string()))
}

/// Verdict text or JSON for a file; returns the class and the rendering.
fn classify_file(inst: &FInstance, opts: &ClassifyOptions, format: Format) -> Result<(VerdictClass, String), Failure> {
    if inst.graph().component_count() <= 1 || inst.m() == 0 {
        let v = classify(inst, opts).map_err(|e| Failure::Error(e.to_string()))?;
        let text = match format {
            Format::Text => explain(&v),
            Format::Json => serde_json::to_string(&VerdictJson::new(inst, &v)).expect("serializable") + "\n",
        };
        return Ok((v.class, text));
    }
    let any = classify_any(inst, opts).map_err(|e| Failure::Error(e.to_string()))?;
    let text = match format {
        Format::Json => serde_json::to_string(&AnyVerdictJson::new(inst, &any)).expect("serializable") + "\n",
        Format::Text => {
            let mut t = format!("class: {}\ndelta_f: {}\n", any.class, any.delta_f);
            for (i, c) in any.components.iter().enumerate() {
                let names: Vec<String> = c.vertices.iter().map(|v| (v + 1).to_string()).collect();
                t.push_str(&format!("component {} (vertices {}):\n", i + 1, names.join(" ")));
                for line in explain(&c.verdict).lines() {
                    t.push_str("    ");
                    t.push_str(line);
                    t.push('\n');
                }
            }
            t
        }
    };
    Ok((any.class, text))
}

fn cmd_color(inst: &FInstance, colors: Option<usize>, out: &mut dyn Write) -> Outcome {
    if inst.m() == 0 {
        json_line(out, &ColoringJson { k: colors.unwrap_or(0), edges: Vec::new() })?;
        return Ok(EXIT_OK);
    }
    let d = inst.delta_f();
    let up = upper_color_f(inst).map_err(|e| Failure::Error(e.to_string()))?;
    let col = match colors {
        None => up,
        Some(k) if k >= up.k() => FColoring::new(k, up.colors().to_vec()),
        Some(k) if k < d => {
            return Err(Failure::Error(format!("{k} colors is below the lower bound Δ_f = {d}")));
        }
        Some(k) => match search_coloring(inst, k, Some(50_000_000)).outcome {
            SearchOutcome::Found(c) => c,
            SearchOutcome::ProvedNone => {
                return Err(Failure::Error(format!("no f-coloring with {k} colors exists")));
            }
            SearchOutcome::Exhausted => {
                return Err(Failure::Error(format!("search budget ran out looking for {k} colors")));
            }
        },
    };
    json_line(out, &ColoringJson::from_coloring(inst, &col))?;
    Ok(EXIT_OK)
}

fn cmd_verify(inst: &FInstance, path: &Path, out: &mut dyn Write) -> Outcome {
    let col = match load_coloring(path)?.to_coloring(inst) {
        Ok(c) => c,
        Err(e) => {
            emit(out, &format!("invalid: {e}\n"))?;
            return Ok(EXIT_CLASS2);
        }
    };
    match verify_coloring(inst, &col) {
        Err(e) => {
            emit(out, &format!("invalid: {}\n", coverage_text(inst, &e)))?;
            Ok(EXIT_CLASS2)
        }
        Ok(report) if report.is_valid() => {
            emit(out, &format!("valid: {} colors, {} edges\n", col.k(), inst.m()))?;
            Ok(EXIT_OK)
        }
        Ok(report) => {
            for v in &report.violations {
                emit(
                    out,
                    &format!(
                        "invalid: vertex {} has {} edges of color {}, allowed {}\n",
                        v.vertex + 1,
                        v.count,
                        v.color,
                        v.capacity
                    ),
                )?;
            }
            Ok(EXIT_CLASS2)
        }
    }
}

fn coverage_text(inst: &FInstance, e: &fcolor_core::CoverageError) -> String {
    use fcolor_core::CoverageError::*;
    let name = |edge: usize| {
        let (a, b) = inst.graph().edge(edge);
        format!("{}-{}", a + 1, b + 1)
    };
    match *e {
        LengthMismatch { edges, colored } => format!("instance has {edges} edges, coloring covers {colored}"),
        Uncolored { edge } => format!("edge {} has no color", name(edge)),
        ColorOutOfRange { edge, color, k } => format!("edge {} has color {color}, outside 1..={k}", name(edge)),
    }
}

#[derive(Serialize)]
struct OracleJson {
    chi_f: usize,
    delta_f: usize,
    class: &'static str,
    nodes_expanded: u64,
    exhausted_at_delta_f: bool,
    witness: ColoringJson,
}

fn cmd_oracle(inst: &FInstance, format: Format, out: &mut dyn Write) -> Outcome {
    let r = exact_chi_f(inst).map_err(|e| Failure::Error(e.to_string()))?;
    let class = if r.chi_f == inst.delta_f() { VerdictClass::Class1 } else { VerdictClass::Class2 };
    match format {
        Format::Text => emit(
            out,
            &format!(
                "chi_f: {}\ndelta_f: {}\nclass: {}\nnodes: {}\n",
                r.chi_f,
                inst.delta_f(),
                class,
                r.nodes_expanded
            ),
        )?,
        Format::Json => json_line(
            out,
            &OracleJson {
                chi_f: r.chi_f,
                delta_f: inst.delta_f(),
                class: class.as_str(),
                nodes_expanded: r.nodes_expanded,
                exhausted_at_delta_f: r.exhausted_at_delta_f,
                witness: ColoringJson::from_coloring(inst, &r.witness),
            },
        )?,
    }
    Ok(class_code(class))
}

#[derive(Serialize)]
struct BatchLine {
    file: String,
    class: Option<&'static str>,
    rule: Option<&'static str>,
    delta_f: Option<usize>,
    error: Option<String>,
}

fn cmd_batch(dir: &Path, opts: &ClassifyOptions, format: Format, out: &mut dyn Write) -> Outcome {
    let entries = fs::read_dir(dir).map_err(|e| Failure::NoInput(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "fgr"))
        .collect();
    files.sort();
    let mut code = EXIT_OK;
    for path in files {
        let name = path.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
        let result = load(&path).and_then(|inst| {
            if inst.graph().component_count() <= 1 || inst.m() == 0 {
                classify(&inst, opts)
                    .map(|v| (v.class, Some(v.rule.id()), v.delta_f))
                    .map_err(|e| Failure::Error(e.to_string()))
            } else {
                classify_any(&inst, opts)
                    .map(|v| (v.class, None, v.delta_f))
                    .map_err(|e| Failure::Error(e.to_string()))
            }
        });
        let line = match result {
            Ok((class, rule, delta_f)) => {
                BatchLine { file: name, class: Some(class.as_str()), rule, delta_f: Some(delta_f), error: None }
            }
            Err(f) => {
                code = EXIT_ERROR;
                BatchLine { file: name, class: None, rule: None, delta_f: None, error: Some(f.message().to_string()) }
            }
        };
        match format {
            Format::Json => json_line(out, &line)?,
            Format::Text => {
                let text = match (&line.error, line.class) {
                    (Some(e), _) => format!("{} error {}\n", line.file, e),
                    (None, Some(class)) => format!(
                        "{} {} {} delta_f={}\n",
                        line.file,
                        class,
                        line.rule.unwrap_or("COMPONENTS"),
                        line.delta_f.unwrap_or(0)
                    ),
                    (None, None) => unreachable!("a batch line has a class or an error"),
                };
                emit(out, &text)?;
            }
        }
    }
    Ok(code)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Classify { file, exact_limit, cut_budget, format } => {
            let inst = load(&file)?;
            let opts = ClassifyOptions { exact_edge_limit: exact_limit, cut_budget, ..ClassifyOptions::default() };
            let (class, text) = classify_file(&inst, &opts, format)?;
            emit(out, &text)?;
            Ok(class_code(class))
        }
        Command::Color { file, colors } => cmd_color(&load(&file)?, colors, out),
        Command::Verify { file, coloring } => cmd_verify(&load(&file)?, &coloring, out),
        Command::Oracle { file, format } => cmd_oracle(&load(&file)?, format, out),
        Command::Gen { family, params, f_spec, output } => {
            let spec = f_spec.as_deref().map(FSpec::parse).transpose().map_err(|e| Failure::Usage(e.to_string()))?;
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let inst = gen_family(&family, &params, spec.as_ref()).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = serialize_fgr(&inst);
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::Error(format!("{}: {e}", path.display())))?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Batch { dir, format, exact_limit, cut_budget } => {
            let opts = ClassifyOptions { exact_edge_limit: exact_limit, cut_budget, ..ClassifyOptions::default() };
            cmd_batch(&dir, &opts, format, out)
        }
        Command::ExportDot { file, coloring } => {
            let inst = load(&file)?;
            let col = match coloring {
                Some(p) => Some(load_coloring(&p)?.to_coloring(&inst).map_err(|e| Failure::Error(e.to_string()))?),
                None => None,
            };
            emit(out, &to_dot(&inst, col.as_ref()))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line with `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "fcolor: {}", f.message());
            f.code()
        }
    }
}
