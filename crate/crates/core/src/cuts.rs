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

//! Small edge cuts that are a star or a matching.
//!
//! Both finders look for cuts of at most `Δ_f − 2` edges in a connected
//! instance with `Δ_f ≥ 3`. Star cuts are enumerated completely; matching
//! cuts come from a budgeted search over vertex bipartitions, since deciding
//! whether a matching cut exists is hard in general.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{FInstance, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutKind {
    Matching,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    /// Edge indices, ascending.
    pub cut_edges: Vec<usize>,
    pub kind: CutKind,
    pub star_center: Option<usize>,
    /// The side containing vertex 0 for matching cuts, or the star center's
    /// side for star cuts; ascending.
    pub side_x: Vec<usize>,
    pub side_y: Vec<usize>,
}

impl CutWitness {
    pub fn len(&self) -> usize {
        self.cut_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cut_edges.is_empty()
    }

    /// Re-checks every structural claim against `g`, from scratch.
    pub fn check(&self, g: &Graph) -> bool {
        if self.cut_edges.is_empty() || self.side_x.is_empty() || self.side_y.is_empty() {
            return false;
        }
        let mut side = vec![u8::MAX; g.n()];
        for &v in &self.side_x {
            side[v] = 0;
        }
        for &v in &self.side_y {
            if side[v] != u8::MAX {
                return false;
            }
            side[v] = 1;
        }
        if side.contains(&u8::MAX) {
            return false;
        }
        let crossing: Vec<usize> = (0..g.m())
            .filter(|&e| {
                let (a, b) = g.edge(e);
                side[a] != side[b]
            })
            .collect();
        if crossing != self.cut_edges {
            return false;
        }
        let shape_ok = match self.kind {
            CutKind::Matching => {
                let mut hit = vec![false; g.n()];
                self.cut_edges.iter().all(|&e| {
                    let (a, b) = g.edge(e);
                    let fresh = !hit[a] && !hit[b];
                    hit[a] = true;
                    hit[b] = true;
                    fresh
                })
            }
            CutKind::Star => match self.star_center {
                Some(c) => self.cut_edges.iter().all(|&e| {
                    let (a, b) = g.edge(e);
                    a == c || b == c
                }),
                None => false,
            },
        };
        let before = g.component_count();
        let after = g.without_edges(|e| self.cut_edges.binary_search(&e).is_ok()).component_count();
        shape_ok && after > before
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutError {
    /// The finders need a connected instance with `Δ_f ≥ 3`.
    PreconditionFailed { delta_f: usize, connected: bool },
}

impl fmt::Display for CutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutError::PreconditionFailed { delta_f, connected } => write!(
                f,
                "cut search needs a connected instance with delta_f >= 3 (delta_f = {delta_f}, connected = {connected})"
            ),
        }
    }
}

impl core::error::Error for CutError {}

/// Outcome of the budgeted matching-cut search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutSearch {
    Found(CutWitness),
    NotFound,
    BudgetExhausted,
}

fn check_precondition(inst: &FInstance) -> Result<usize, CutError> {
    let connected = inst.graph().is_connected();
    if !connected || inst.delta_f() < 3 {
        return Err(CutError::PreconditionFailed { delta_f: inst.delta_f(), connected });
    }
    Ok(inst.delta_f() - 2)
}

/// Smallest star cut of at most `Δ_f − 2` edges (ties: lowest center, then
/// the component with the smallest vertex).
///
/// Every minimal star cut at `u` is the set of edges from `u` into one
/// component of `G − u`; when `G − u` is connected that is the whole star at
/// `u`, which isolates it.
pub fn find_star_cut(inst: &FInstance) -> Result<Option<CutWitness>, CutError> {
    let limit = check_precondition(inst)?;
    let g = inst.graph();
    let mut best: Option<(usize, CutWitness)> = None;
    for u in 0..g.n() {
        let rest = g.without_edges(|e| {
            let (a, b) = g.edge(e);
            a == u || b == u
        });
        for comp in rest.components() {
            if comp == [u] {
                continue;
            }
            let mut cut_edges: Vec<usize> = g
                .incident(u)
                .iter()
                .filter(|&&(w, _)| comp.binary_search(&w).is_ok())
                .map(|&(_, e)| e)
                .collect();
            let size = cut_edges.len();
            if size == 0 || size > limit || best.as_ref().is_some_and(|(s, _)| *s <= size) {
                continue;
            }
            cut_edges.sort_unstable();
            let side_x: Vec<usize> = (0..g.n()).filter(|v| comp.binary_search(v).is_err()).collect();
            best = Some((
                size,
                CutWitness {
                    cut_edges,
                    kind: CutKind::Star,
                    star_center: Some(u),
                    side_x,
                    side_y: comp,
                },
            ));
        }
    }
    Ok(best.map(|(_, w)| w).filter(|w| w.check(g)))
}

struct MatchingCutSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    side: Vec<u8>,
    cross_degree: Vec<usize>,
    crossing: usize,
    limit: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl MatchingCutSearch<'_> {
    fn assign(&mut self, v: usize, s: u8) -> bool {
        self.side[v] = s;
        let mut ok = true;
        for (w, _) in self.g.incident(v).iter().copied() {
            if self.side[w] != u8::MAX && self.side[w] != s {
                self.cross_degree[v] += 1;
                self.cross_degree[w] += 1;
                self.crossing += 1;
                ok &= self.cross_degree[w] <= 1;
            }
        }
        ok && self.cross_degree[v] <= 1 && self.crossing <= self.limit
    }

    fn unassign(&mut self, v: usize) {
        let s = self.side[v];
        for (w, _) in self.g.incident(v).iter().copied() {
            if self.side[w] != u8::MAX && self.side[w] != s {
                self.cross_degree[v] -= 1;
                self.cross_degree[w] -= 1;
                self.crossing -= 1;
            }
        }
        self.side[v] = u8::MAX;
    }

    fn run(&mut self, depth: usize, used_y: bool) -> bool {
        if depth == self.order.len() {
            return used_y && self.crossing > 0;
        }
        let v = self.order[depth];
        for s in [0u8, 1] {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return false;
            }
            let ok = self.assign(v, s);
            if ok && self.run(depth + 1, used_y || s == 1) {
                return true;
            }
            self.unassign(v);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Searches for a matching cut of at most `Δ_f − 2` edges, expanding at most
/// `budget` search nodes. Vertices are placed in BFS order from vertex 0,
/// which is fixed on side X; a branch dies as soon as some vertex has two
/// neighbors across or the cut grows past the limit.
pub fn find_matching_cut(inst: &FInstance, budget: u64) -> Result<CutSearch, CutError> {
    let limit = check_precondition(inst)?;
    let g = inst.graph();
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    let mut search = MatchingCutSearch {
        g,
        order,
        side: vec![u8::MAX; g.n()],
        cross_degree: vec![0; g.n()],
        crossing: 0,
        limit,
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.side[0] = 0;
    if !search.run(1, false) {
        return Ok(if search.exhausted { CutSearch::BudgetExhausted } else { CutSearch::NotFound });
    }
    let side = search.side;
    let cut_edges: Vec<usize> = (0..g.m())
        .filter(|&e| {
            let (a, b) = g.edge(e);
            side[a] != side[b]
        })
        .collect();
    let witness = CutWitness {
        cut_edges,
        kind: CutKind::Matching,
        star_center: None,
        side_x: (0..g.n()).filter(|&v| side[v] == 0).collect(),
        side_y: (0..g.n()).filter(|&v| side[v] == 1).collect(),
    };
    if witness.check(g) {
        Ok(CutSearch::Found(witness))
    } else {
        Ok(CutSearch::NotFound)
    }
}
