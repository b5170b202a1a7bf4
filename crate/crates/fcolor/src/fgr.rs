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

//! The `.fgr` instance format.
//!
//! ```text
//! # optional comments, anywhere after '#'
//! p fgraph <n> <m>
//! f <f_1> ... <f_n>
//! e <u> <v>        (m lines, 1-based vertices)
//! ```

use std::fmt::Write;

use fcolor_core::{FInstance, InstanceError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FgrError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {expected} edges but the file lists {found}")]
    HeaderMismatch { expected: usize, found: usize },
    #[error("line {line}: {}", one_based(.source))]
    Instance { line: usize, source: InstanceError },
}

/// Instance errors in file terms: 1-based vertices and edge lines.
fn one_based(e: &InstanceError) -> String {
    match *e {
        InstanceError::LoopEdge { vertex, .. } => format!("loop at vertex {}", vertex + 1),
        InstanceError::DuplicateEdge { first, .. } => format!("repeats edge number {}", first + 1),
        InstanceError::VertexOutOfRange { vertex, n, .. } => format!("vertex {} is outside 1..={n}", vertex + 1),
        InstanceError::NonPositiveF { vertex } => format!("f value of vertex {} must be at least 1", vertex + 1),
        InstanceError::FLengthMismatch { expected, found } => format!("expected {expected} f values, found {found}"),
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FgrError {
    FgrError::Syntax { line, message: message.into() }
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>, FgrError> {
    fields
        .iter()
        .map(|t| t.parse::<usize>().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{t}`"))))
        .collect()
}

pub fn parse_fgr(text: &str) -> Result<FInstance, FgrError> {
    let mut header: Option<(usize, usize)> = None;
    let mut f: Option<Vec<usize>> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    let mut f_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        let Some((&tag, rest)) = fields.split_first() else { continue };
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` line"));
                }
                if rest.len() != 3 || rest[0] != "fgraph" {
                    return Err(syntax(line, "expected `p fgraph <n> <m>`"));
                }
                let v = numbers(line, &rest[1..])?;
                header = Some((v[0], v[1]));
            }
            "f" => {
                let (n, _) = header.ok_or_else(|| syntax(line, "`f` line before the `p` line"))?;
                if f.is_some() {
                    return Err(syntax(line, "second `f` line"));
                }
                if rest.len() != n {
                    return Err(syntax(line, format!("expected {n} f values, found {}", rest.len())));
                }
                f = Some(numbers(line, rest)?);
                f_line = line;
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| syntax(line, "`e` line before the `p` line"))?;
                if f.is_none() {
                    return Err(syntax(line, "`e` line before the `f` line"));
                }
                if rest.len() != 2 {
                    return Err(syntax(line, "expected `e <u> <v>`"));
                }
                let v = numbers(line, rest)?;
                if let Some(&bad) = v.iter().find(|&&x| x == 0 || x > n) {
                    return Err(syntax(line, format!("vertex {bad} is outside 1..={n}")));
                }
                edges.push((v[0] - 1, v[1] - 1));
                edge_lines.push(line);
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| syntax(text.lines().count().max(1), "missing `p fgraph <n> <m>` line"))?;
    let f = f.ok_or_else(|| syntax(text.lines().count().max(1), "missing `f` line"))?;
    if edges.len() != m {
        return Err(FgrError::HeaderMismatch { expected: m, found: edges.len() });
    }
    FInstance::new(n, &edges, &f).map_err(|e| {
        let line = match e {
            InstanceError::LoopEdge { edge, .. }
            | InstanceError::DuplicateEdge { edge, .. }
            | InstanceError::VertexOutOfRange { edge, .. } => edge_lines[edge],
            InstanceError::NonPositiveF { .. } | InstanceError::FLengthMismatch { .. } => f_line,
        };
        FgrError::Instance { line, source: e }
    })
}

pub fn serialize_fgr(inst: &FInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p fgraph {} {}", inst.n(), inst.m());
    out.push('f');
    for &v in inst.f_values() {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
    for &(a, b) in inst.graph().edges() {
        let _ = writeln!(out, "e {} {}", a + 1, b + 1);
    }
    out
}
