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

//! All small graphs up to isomorphism, and f-assignments for them.
//!
//! The canonical code of a graph is the smallest upper-triangle adjacency
//! bit string over the vertex orders that respect a stable color
//! refinement (degree, then neighbor-class multisets). Graphs of order `n`
//! are grown from those of order `n − 1` by adding a vertex with every
//! possible neighborhood and keeping one graph per code.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{FInstance, Graph};

/// Largest order [`enumerate_instances`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateError {
    TooLarge { max_n: usize, cap: usize },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::TooLarge { max_n, cap } => {
                write!(f, "order {max_n} is above the enumeration limit of {cap}")
            }
        }
    }
}

impl core::error::Error for EnumerateError {}

/// An f-assignment that can be laid over any graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FPattern {
    /// `f ≡ k`.
    Const(usize),
    /// `f = k` on the lowest-index vertex of maximum degree, 1 elsewhere.
    Hub(usize),
}

impl FPattern {
    pub fn values(&self, g: &Graph) -> Vec<usize> {
        match *self {
            FPattern::Const(k) => vec![k; g.n()],
            FPattern::Hub(k) => {
                let mut f = vec![1; g.n()];
                if let Some(hub) = hub_vertex(g) {
                    f[hub] = k;
                }
                f
            }
        }
    }

    pub fn apply(&self, g: &Graph) -> FInstance {
        FInstance::from_graph(g.clone(), self.values(g)).expect("pattern values are positive")
    }
}

fn hub_vertex(g: &Graph) -> Option<usize> {
    let top = g.max_degree();
    (0..g.n()).find(|&v| g.degree(v) == top)
}

/// Canonical code; equal for two graphs exactly when they are isomorphic
/// (and have the same order). Supports up to 11 vertices.
///
/// Bits are emitted column by column (`j = 1..n`, then `i < j`), so a
/// prefix of the vertex order fixes a prefix of the code and dominated
/// orders are cut early.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let cells = refine(g);
    let mut slots = cells.clone();
    slots.sort_unstable();
    let mut adj = vec![0u16; n];
    for &(a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut s = OrderSearch {
        adj,
        cells,
        slots,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
    };
    s.run(0);
    s.best.unwrap_or(0)
}

struct OrderSearch {
    adj: Vec<u16>,
    cells: Vec<usize>,
    /// Cell label required at each position.
    slots: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<u64>,
    total_bits: u32,
}

impl OrderSearch {
    fn run(&mut self, prefix: u64) {
        let p = self.order.len();
        let n = self.adj.len();
        if p == n {
            if self.best.map_or(true, |b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.cells[v] != self.slots[p] {
                continue;
            }
            let mut code = prefix;
            for &u in &self.order {
                code = code << 1 | u64::from(self.adj[u] >> v & 1);
            }
            if let Some(b) = self.best {
                let done = (p * (p + 1) / 2) as u32;
                if code > b >> (self.total_bits - done) {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(code);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Stable refinement: returns a cell label per vertex. Labels are ranks of
/// isomorphism-invariant signatures, so they are themselves invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    labels = rank(&labels.iter().map(|&d| vec![d]).collect::<Vec<_>>());
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).map(|w| labels[w]).collect();
                s.sort_unstable();
                s.insert(0, labels[v]);
                s
            })
            .collect();
        let next = rank(&sigs);
        let before = count_distinct(&labels);
        let after = count_distinct(&next);
        labels = next;
        if after == before {
            return labels;
        }
    }
}

fn rank(sigs: &[Vec<usize>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = sigs.iter().collect();
    distinct.sort();
    distinct.dedup();
    sigs.iter().map(|s| distinct.binary_search(&s).expect("present")).collect()
}

fn count_distinct(labels: &[usize]) -> usize {
    let mut l = labels.to_vec();
    l.sort_unstable();
    l.dedup();
    l.len()
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("decoded graph is simple")
}

/// Every graph of order `n`, one per isomorphism class, in canonical form
/// and ordered by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(n.min(1))];
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    for order in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u32..(1 << (order - 1)) {
                let mut edges = g.edges().to_vec();
                edges.extend((0..order - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, order - 1)));
                let h = Graph::new(order, &edges).expect("adding a new vertex keeps the graph simple");
                let code = canonical_code(&h);
                next.entry(code).or_insert_with(|| graph_from_code(order, code));
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Connected graphs of order exactly `n`, ordered by canonical code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| g.n() > 0 && g.is_connected()).collect()
}

/// Every connected graph with 2 to `max_n` vertices crossed with every
/// pattern, ordered by order, then canonical code, then pattern.
pub fn enumerate_instances(max_n: usize, patterns: &[FPattern]) -> Result<Vec<FInstance>, EnumerateError> {
    if max_n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::TooLarge { max_n, cap: MAX_ENUMERATION_ORDER });
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        for g in connected_graphs(n) {
            for p in patterns {
                out.push(p.apply(&g));
            }
        }
    }
    Ok(out)
}
