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

//! Exact backtracking search for an f-coloring with a fixed palette.
//!
//! The branching edge is the uncolored edge with the fewest usable colors
//! (lowest index on ties). Colors are tried in increasing order and a color
//! above the largest one used so far is only tried once, since unused colors
//! are interchangeable. A node is abandoned when some uncolored edge has no
//! usable color or when some vertex cannot absorb its uncolored edges: for
//! each color the vertex can take at most `f(v) − count` more, and no more
//! than the number of its uncolored edges whose other end still has that
//! color spare.

use alloc::vec::Vec;

use crate::coloring::{ColorState, FColoring, UNCOLORED};
use crate::graph::FInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(FColoring),
    /// The whole tree was explored: no coloring with this palette exists.
    ProvedNone,
    /// The node budget ran out first.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    /// Color assignments tried.
    pub nodes: u64,
}

impl SearchResult {
    pub fn coloring(&self) -> Option<&FColoring> {
        match &self.outcome {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Searches for an f-coloring with palette `1..=k`. `budget` caps the number
/// of color assignments; `None` searches to completion.
pub fn search_coloring(inst: &FInstance, k: usize, budget: Option<u64>) -> SearchResult {
    if inst.m() == 0 {
        return SearchResult { outcome: SearchOutcome::Found(FColoring::new(k, Vec::new())), nodes: 0 };
    }
    if k == 0 {
        return SearchResult { outcome: SearchOutcome::ProvedNone, nodes: 0 };
    }
    let mut s = Search {
        st: ColorState::new(inst, k),
        uncolored_at: (0..inst.n()).map(|v| inst.graph().degree(v)).collect(),
        left: inst.m(),
        nodes: 0,
        budget: budget.unwrap_or(u64::MAX),
        out_of_budget: false,
    };
    let found = s.run(0);
    let outcome = if found {
        SearchOutcome::Found(s.st.to_coloring())
    } else if s.out_of_budget {
        SearchOutcome::Exhausted
    } else {
        SearchOutcome::ProvedNone
    };
    SearchResult { outcome, nodes: s.nodes }
}

/// [`search_coloring`] with `k = Δ_f`.
pub fn search_delta_f_coloring(inst: &FInstance, budget: Option<u64>) -> SearchResult {
    search_coloring(inst, inst.delta_f(), budget)
}

struct Search<'a> {
    st: ColorState<'a>,
    uncolored_at: Vec<usize>,
    left: usize,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

impl Search<'_> {
    fn usable(&self, e: usize, c: usize) -> bool {
        let (a, b) = self.st.inst.graph().edge(e);
        self.st.spare(a, c) && self.st.spare(b, c)
    }

    /// Returns the branching edge, or `None` if some edge is stuck.
    fn pick(&self, top: usize) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for e in 0..self.st.inst.m() {
            if self.st.color(e) != UNCOLORED {
                continue;
            }
            let options = (1..=top).filter(|&c| self.usable(e, c)).count();
            if options == 0 {
                return None;
            }
            if best.map_or(true, |(o, _)| options < o) {
                best = Some((options, e));
                if options == 1 {
                    break;
                }
            }
        }
        best.map(|(_, e)| e)
    }

    fn capacity_ok(&self) -> bool {
        let inst = self.st.inst;
        let g = inst.graph();
        for v in 0..inst.n() {
            let need = self.uncolored_at[v];
            if need == 0 {
                continue;
            }
            let mut room = 0;
            for c in 1..=self.st.k {
                let here = inst.f(v) - self.st.count(v, c);
                if here == 0 {
                    continue;
                }
                let reachable = g
                    .incident(v)
                    .iter()
                    .filter(|&&(w, e)| self.st.color(e) == UNCOLORED && self.st.spare(w, c))
                    .count();
                room += here.min(reachable);
                if room >= need {
                    break;
                }
            }
            if room < need {
                return false;
            }
        }
        true
    }

    fn run(&mut self, max_used: usize) -> bool {
        if self.left == 0 {
            return true;
        }
        if !self.capacity_ok() {
            return false;
        }
        let top = self.st.k.min(max_used + 1);
        let Some(e) = self.pick(top) else { return false };
        let (a, b) = self.st.inst.graph().edge(e);
        for c in 1..=top {
            if !self.usable(e, c) {
                continue;
            }
            if self.nodes >= self.budget {
                self.out_of_budget = true;
                return false;
            }
            self.nodes += 1;
            self.st.set(e, c);
            self.uncolored_at[a] -= 1;
            self.uncolored_at[b] -= 1;
            self.left -= 1;
            if self.run(max_used.max(c)) {
                return true;
            }
            self.st.set(e, UNCOLORED);
            self.uncolored_at[a] += 1;
            self.uncolored_at[b] += 1;
            self.left += 1;
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}
