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

//! Edge colorings and their validity check.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::FInstance;

/// Marker for an edge without a color in a partial coloring.
pub const UNCOLORED: usize = 0;

/// A palette size `k` and one color in `1..=k` per edge index. Partial
/// colorings use [`UNCOLORED`] for missing edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FColoring {
    k: usize,
    colors: Vec<usize>,
}

impl FColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> FColoring {
        FColoring { k, colors }
    }

    /// Palette size.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> usize {
        self.colors[e]
    }

    pub fn is_complete(&self) -> bool {
        !self.colors.contains(&UNCOLORED)
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        for &c in &self.colors {
            if c != UNCOLORED && c <= self.k {
                seen[c] = true;
            }
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// Renumbers used colors to `1..=d` in order of their old values and
    /// shrinks the palette to `d`.
    pub fn compacted(&self) -> FColoring {
        let mut map = vec![UNCOLORED; self.k + 1];
        let mut next = 0;
        for c in 1..=self.k {
            if self.colors.contains(&c) {
                next += 1;
                map[c] = next;
            }
        }
        FColoring { k: next, colors: self.colors.iter().map(|&c| map[c]).collect() }
    }

    /// Copy with one edge's color cleared.
    pub fn without(&self, e: usize) -> FColoring {
        let mut colors = self.colors.clone();
        colors[e] = UNCOLORED;
        FColoring { k: self.k, colors }
    }
}

/// Vertex `vertex` sees `color` `count` times but may only see it
/// `capacity = f(vertex)` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub color: usize,
    pub count: usize,
    pub capacity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverageError {
    /// The coloring lists a different number of edges than the instance.
    LengthMismatch { edges: usize, colored: usize },
    Uncolored { edge: usize },
    ColorOutOfRange { edge: usize, color: usize, k: usize },
}

impl fmt::Display for CoverageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverageError::LengthMismatch { edges, colored } => {
                write!(f, "instance has {edges} edges but the coloring covers {colored}")
            }
            CoverageError::Uncolored { edge } => write!(f, "edge {edge} has no color"),
            CoverageError::ColorOutOfRange { edge, color, k } => {
                write!(f, "edge {edge} has color {color}, outside 1..={k}")
            }
        }
    }
}

impl core::error::Error for CoverageError {}

/// Checks a complete coloring; every over-full (vertex, color) pair is
/// reported, ordered by vertex and then color.
pub fn verify_coloring(inst: &FInstance, col: &FColoring) -> Result<VerifyReport, CoverageError> {
    if col.colors.len() != inst.m() {
        return Err(CoverageError::LengthMismatch { edges: inst.m(), colored: col.colors.len() });
    }
    if let Some(edge) = col.colors.iter().position(|&c| c == UNCOLORED) {
        return Err(CoverageError::Uncolored { edge });
    }
    verify_partial(inst, col)
}

/// Like [`verify_coloring`] but uncolored edges are allowed and ignored.
pub fn verify_partial(inst: &FInstance, col: &FColoring) -> Result<VerifyReport, CoverageError> {
    if col.colors.len() != inst.m() {
        return Err(CoverageError::LengthMismatch { edges: inst.m(), colored: col.colors.len() });
    }
    if let Some(edge) = col.colors.iter().position(|&c| c > col.k) {
        return Err(CoverageError::ColorOutOfRange { edge, color: col.colors[edge], k: col.k });
    }
    let k = col.k;
    let mut counts = vec![0usize; inst.n() * (k + 1)];
    for (e, &c) in col.colors.iter().enumerate() {
        if c == UNCOLORED {
            continue;
        }
        let (a, b) = inst.graph().edge(e);
        counts[a * (k + 1) + c] += 1;
        counts[b * (k + 1) + c] += 1;
    }
    let mut violations = Vec::new();
    for v in 0..inst.n() {
        for c in 1..=k {
            let count = counts[v * (k + 1) + c];
            if count > inst.f(v) {
                violations.push(Violation { vertex: v, color: c, count, capacity: inst.f(v) });
            }
        }
    }
    Ok(VerifyReport { violations })
}

/// Mutable coloring with cached per-vertex color counts.
///
/// Counts may temporarily exceed `f` while a recoloring is in flight; the
/// algorithms that use this restore validity before handing a coloring back.
#[derive(Debug, Clone)]
pub(crate) struct ColorState<'a> {
    pub(crate) inst: &'a FInstance,
    pub(crate) k: usize,
    colors: Vec<usize>,
    counts: Vec<usize>,
}

impl<'a> ColorState<'a> {
    pub(crate) fn new(inst: &'a FInstance, k: usize) -> ColorState<'a> {
        ColorState { inst, k, colors: vec![UNCOLORED; inst.m()], counts: vec![0; inst.n() * (k + 1)] }
    }

    pub(crate) fn from_coloring(inst: &'a FInstance, col: &FColoring, k: usize) -> ColorState<'a> {
        let mut st = ColorState::new(inst, k);
        for (e, &c) in col.colors().iter().enumerate() {
            if c != UNCOLORED {
                st.set(e, c);
            }
        }
        st
    }

    pub(crate) fn color(&self, e: usize) -> usize {
        self.colors[e]
    }

    pub(crate) fn count(&self, v: usize, c: usize) -> usize {
        self.counts[v * (self.k + 1) + c]
    }

    /// Color `c` appears fewer than `f(v)` times at `v`.
    pub(crate) fn spare(&self, v: usize, c: usize) -> bool {
        self.count(v, c) < self.inst.f(v)
    }

    pub(crate) fn first_spare(&self, v: usize) -> Option<usize> {
        (1..=self.k).find(|&c| self.spare(v, c))
    }

    pub(crate) fn set(&mut self, e: usize, c: usize) {
        let (a, b) = self.inst.graph().edge(e);
        let old = self.colors[e];
        let stride = self.k + 1;
        if old != UNCOLORED {
            self.counts[a * stride + old] -= 1;
            self.counts[b * stride + old] -= 1;
        }
        if c != UNCOLORED {
            self.counts[a * stride + c] += 1;
            self.counts[b * stride + c] += 1;
        }
        self.colors[e] = c;
    }

    pub(crate) fn vertex_ok(&self, v: usize) -> bool {
        (1..=self.k).all(|c| self.count(v, c) <= self.inst.f(v))
    }

    pub(crate) fn to_coloring(&self) -> FColoring {
        FColoring::new(self.k, self.colors.clone())
    }

    #[cfg(test)]
    pub(crate) fn counts_match_recount(&self) -> bool {
        let fresh = ColorState::from_coloring(self.inst, &self.to_coloring(), self.k);
        fresh.counts == self.counts
    }
}
