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

//! König's theorem: bipartite graphs have a proper `Δ`-edge-coloring.

use core::fmt;

use crate::coloring::{ColorState, FColoring};
use crate::extend::trail_swap;
use crate::graph::{FInstance, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KonigError {
    /// The side vector has the wrong length or `edge` does not cross it.
    NotBipartite { edge: Option<usize> },
}

impl fmt::Display for KonigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KonigError::NotBipartite { edge: Some(e) } => {
                write!(f, "edge {e} has both ends on the same side")
            }
            KonigError::NotBipartite { edge: None } => {
                write!(f, "side assignment does not match the vertex count")
            }
        }
    }
}

impl core::error::Error for KonigError {}

/// Proper coloring of a bipartite graph with exactly `Δ` colors.
///
/// Edges are colored in index order. For `uv` with `a` missing at `u` and
/// `b` missing at `v`: if `a` is also missing at `v` use it, otherwise flip
/// the `a`/`b` path from `v`, which cannot reach `u` in a bipartite graph.
pub fn konig_color(g: &Graph, side: &[u8]) -> Result<FColoring, KonigError> {
    if side.len() != g.n() {
        return Err(KonigError::NotBipartite { edge: None });
    }
    if let Some(e) = (0..g.m()).find(|&e| {
        let (a, b) = g.edge(e);
        side[a] == side[b]
    }) {
        return Err(KonigError::NotBipartite { edge: Some(e) });
    }
    let inst = FInstance::uniform(g.clone(), 1).expect("f = 1 is positive");
    let k = g.max_degree();
    let mut st = ColorState::new(&inst, k);
    for e in 0..g.m() {
        let (u, v) = g.edge(e);
        let a = st.first_spare(u).expect("uncolored edge leaves a free color at u");
        if st.spare(v, a) {
            st.set(e, a);
            continue;
        }
        let b = st.first_spare(v).expect("uncolored edge leaves a free color at v");
        let first = g
            .incident(v)
            .iter()
            .map(|&(_, ed)| ed)
            .find(|&ed| st.color(ed) == a)
            .expect("a is present at v");
        let (_, end) = trail_swap(&mut st, v, first, a, b).expect("Kempe path flip");
        debug_assert_ne!(end, u);
        st.set(e, a);
    }
    Ok(st.to_coloring())
}
