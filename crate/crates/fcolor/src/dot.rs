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

//! Graphviz export.

use std::fmt::Write;

use fcolor_core::{FColoring, FInstance};

/// Edge colors by color index, cycling after twelve.
pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
    "#17becf", "#000000", "#f1c40f",
];

pub fn palette_color(c: usize) -> &'static str {
    PALETTE[(c.max(1) - 1) % PALETTE.len()]
}

/// Undirected DOT with one node per vertex (labelled `v (f=…)`) and, when
/// a coloring is given, `color` and `label` attributes on each colored edge.
pub fn to_dot(inst: &FInstance, col: Option<&FColoring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..inst.n() {
        let _ = writeln!(out, "  {} [label=\"{} (f={})\"];", v + 1, v + 1, inst.f(v));
    }
    for (e, &(a, b)) in inst.graph().edges().iter().enumerate() {
        match col.map(|c| c.color(e)).filter(|&c| c != 0) {
            Some(c) => {
                let _ = writeln!(out, "  {} -- {} [color=\"{}\", label=\"{}\"];", a + 1, b + 1, palette_color(c), c);
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", a + 1, b + 1);
            }
        }
    }
    out.push_str("}\n");
    out
}
