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

//! Constructive colorers that need no search.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{ColorState, FColoring};
use crate::extend::color_remaining;
use crate::graph::{FInstance, Graph};
use crate::konig::konig_color;
use crate::split::split_instance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    EmptyGraph,
    /// `even_f_color` needs every `f(v)` to be even.
    NotAllEven { vertex: usize },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::EmptyGraph => write!(f, "instance has no edges"),
            ColoringError::NotAllEven { vertex } => write!(f, "f({vertex}) is odd"),
        }
    }
}

impl core::error::Error for ColoringError {}

/// An f-coloring with at most `max ⌈(d(v) + 1) / f(v)⌉` colors.
///
/// When the split graph is bipartite the result has exactly `Δ_f` colors.
/// Otherwise edges are inserted one at a time with [`FInstance::upper_bound`]
/// colors; that palette leaves a spare color at every vertex throughout, so
/// each insertion succeeds.
pub fn upper_color_f(inst: &FInstance) -> Result<FColoring, ColoringError> {
    if inst.m() == 0 {
        return Err(ColoringError::EmptyGraph);
    }
    let s = split_instance(inst);
    if let Some(side) = s.split.bipartition() {
        let col = konig_color(&s.split, &side).expect("bipartition comes from the graph");
        return Ok(s.merge(&col));
    }
    let k = inst.upper_bound();
    let mut st = ColorState::new(inst, k);
    color_remaining(&mut st).expect("a spare color exists at every vertex");
    Ok(st.to_coloring().compacted())
}

/// A `Δ_f`-coloring when every `f(v)` is even.
///
/// Orient the edges so that in- and out-degree differ by at most one at every
/// vertex, then color the bipartite out/in double cover with `f(v)/2` on
/// both copies of `v`.
pub fn even_f_color(inst: &FInstance) -> Result<FColoring, ColoringError> {
    if let Some(vertex) = (0..inst.n()).find(|&v| inst.f(v) % 2 == 1) {
        return Err(ColoringError::NotAllEven { vertex });
    }
    if inst.m() == 0 {
        return Err(ColoringError::EmptyGraph);
    }
    let g = inst.graph();
    let n = g.n();
    let arcs = balanced_orientation(g);
    let cover_edges: Vec<(usize, usize)> = arcs.iter().map(|&(t, h)| (t, n + h)).collect();
    let cover = Graph::new(2 * n, &cover_edges).expect("double cover of a simple graph is simple");
    let half: Vec<usize> = (0..2 * n).map(|x| inst.f(x % n) / 2).collect();
    let cover_inst = FInstance::from_graph(cover, half).expect("f/2 is positive");
    let s = split_instance(&cover_inst);
    let side = s.split.bipartition().expect("split of a bipartite graph is bipartite");
    let col = s.merge(&konig_color(&s.split, &side).expect("bipartition comes from the graph"));
    // Cover edge `i` is original edge `i`.
    Ok(col)
}

/// Orients every edge as `(tail, head)`, indexed like `g.edges()`, so that
/// `|out(v) − in(v)| ≤ 1` for every vertex.
///
/// Maximal trails are peeled off, starting from a vertex of odd remaining
/// degree while one exists: interior vertices stay balanced and every vertex
/// ends at most one open trail.
fn balanced_orientation(g: &Graph) -> Vec<(usize, usize)> {
    let mut used = vec![false; g.m()];
    let mut remaining: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut cursor = vec![0usize; g.n()];
    let mut arcs = g.edges().to_vec();
    loop {
        let start = (0..g.n())
            .find(|&v| remaining[v] % 2 == 1)
            .or_else(|| (0..g.n()).find(|&v| remaining[v] > 0));
        let Some(mut at) = start else { break };
        loop {
            let inc = g.incident(at);
            while cursor[at] < inc.len() && used[inc[cursor[at]].1] {
                cursor[at] += 1;
            }
            if cursor[at] == inc.len() {
                break;
            }
            let (to, e) = inc[cursor[at]];
            used[e] = true;
            remaining[at] -= 1;
            remaining[to] -= 1;
            arcs[e] = (at, to);
            at = to;
        }
    }
    arcs
}
