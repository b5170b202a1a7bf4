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

//! Simple undirected graphs and f-instances.
//!
//! Vertices are dense `0..n` indices. Edges are stored normalized as
//! `(min, max)` in the order they were supplied; the position of an edge in
//! that list is its edge index, and every tie in this crate is broken by the
//! lowest vertex or edge index.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised while building a [`Graph`] or an [`FInstance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    /// Edge `edge` joins `vertex` to itself.
    LoopEdge { edge: usize, vertex: usize },
    /// Edge `edge` repeats the pair already given as edge `first`.
    DuplicateEdge { edge: usize, first: usize },
    /// Edge `edge` names `vertex`, which is not below `n`.
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    /// `f(vertex)` is zero.
    NonPositiveF { vertex: usize },
    /// The f vector does not have one entry per vertex.
    FLengthMismatch { expected: usize, found: usize },
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::LoopEdge { edge, vertex } => {
                write!(f, "edge {edge} is a loop at vertex {vertex}")
            }
            InstanceError::DuplicateEdge { edge, first } => {
                write!(f, "edge {edge} duplicates edge {first}")
            }
            InstanceError::VertexOutOfRange { edge, vertex, n } => {
                write!(f, "edge {edge} uses vertex {vertex}, but the graph has {n} vertices")
            }
            InstanceError::NonPositiveF { vertex } => {
                write!(f, "f({vertex}) must be at least 1")
            }
            InstanceError::FLengthMismatch { expected, found } => {
                write!(f, "expected {expected} f values, found {found}")
            }
        }
    }
}

impl core::error::Error for InstanceError {}

/// A simple, finite, undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index), sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated pairs and out-of-range ends.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, InstanceError> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(InstanceError::VertexOutOfRange { edge: i, vertex: x, n });
                }
            }
            if u == v {
                return Err(InstanceError::LoopEdge { edge: i, vertex: u });
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            match adj[a].binary_search_by_key(&b, |&(w, _)| w) {
                Ok(pos) => {
                    return Err(InstanceError::DuplicateEdge { edge: i, first: adj[a][pos].1 });
                }
                Err(pos) => adj[a].insert(pos, (b, i)),
            }
            let pos = adj[b].binary_search_by_key(&a, |&(w, _)| w).unwrap_err();
            adj[b].insert(pos, (a, i));
            normalized.push((a, b));
        }
        Ok(Graph { n, edges: normalized, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbor, edge index)` pairs at `v`, ordered by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|pos| list[pos].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Subgraph induced on `vertices`, relabeled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        Graph::new(vertices.len(), &edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Same vertex set, every edge except those for which `drop` is true.
    /// Surviving edges keep their relative order.
    pub fn without_edges(&self, drop: impl Fn(usize) -> bool) -> Graph {
        let edges: Vec<(usize, usize)> =
            (0..self.m()).filter(|&e| !drop(e)).map(|e| self.edges[e]).collect();
        Graph::new(self.n, &edges).expect("edge subset of a simple graph is simple")
    }

    /// Relabels vertex `v` as `perm[v]`. Edge order is preserved.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::new(self.n, &edges).expect("relabeling by a permutation keeps the graph simple")
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// True for connected graphs with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// Two-coloring of the vertices when one exists. The lowest-index vertex
    /// of every component is put on side 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The lexicographically smallest induced claw `(center, [a, b, c])`,
    /// with `a < b < c` pairwise non-adjacent neighbors of `center`.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        for v in 0..self.n {
            let nb: Vec<usize> = self.neighbors(v).collect();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if self.has_edge(nb[i], nb[j]) {
                        continue;
                    }
                    for l in j + 1..nb.len() {
                        if !self.has_edge(nb[i], nb[l]) && !self.has_edge(nb[j], nb[l]) {
                            return Some((v, [nb[i], nb[j], nb[l]]));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }
}

pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// A simple graph together with a positive vertex function `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FInstance {
    graph: Graph,
    f: Vec<usize>,
    delta_f: usize,
}

impl FInstance {
    /// Validates the edge list and `f`, and caches `Δ_f`.
    pub fn new(n: usize, edges: &[(usize, usize)], f: &[usize]) -> Result<FInstance, InstanceError> {
        let graph = Graph::new(n, edges)?;
        FInstance::from_graph(graph, f.to_vec())
    }

    pub fn from_graph(graph: Graph, f: Vec<usize>) -> Result<FInstance, InstanceError> {
        if f.len() != graph.n() {
            return Err(InstanceError::FLengthMismatch { expected: graph.n(), found: f.len() });
        }
        if let Some(vertex) = f.iter().position(|&x| x == 0) {
            return Err(InstanceError::NonPositiveF { vertex });
        }
        let delta_f = compute_delta_f(&graph, &f);
        Ok(FInstance { graph, f, delta_f })
    }

    /// `f ≡ 1`, the ordinary edge-coloring setting.
    pub fn uniform(graph: Graph, value: usize) -> Result<FInstance, InstanceError> {
        let f = vec![value; graph.n()];
        FInstance::from_graph(graph, f)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn f(&self, v: usize) -> usize {
        self.f[v]
    }

    pub fn f_values(&self) -> &[usize] {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// `max ⌈d(v) / f(v)⌉`, or 0 for an edgeless graph.
    pub fn delta_f(&self) -> usize {
        self.delta_f
    }

    /// `⌈d(v) / f(v)⌉`.
    pub fn load(&self, v: usize) -> usize {
        ceil_div(self.graph.degree(v), self.f[v])
    }

    /// `d(v) = f(v) · Δ_f`.
    pub fn is_f_maximum(&self, v: usize) -> bool {
        self.delta_f > 0 && self.graph.degree(v) == self.f[v] * self.delta_f
    }

    /// `max ⌈(d(v) + 1) / f(v)⌉`, the constructive upper bound on the
    /// f-chromatic index.
    pub fn upper_bound(&self) -> usize {
        (0..self.n()).map(|v| ceil_div(self.graph.degree(v) + 1, self.f[v])).max().unwrap_or(0)
    }

    /// Sub-instance induced on `vertices` (relabeled in the given order),
    /// keeping each vertex's f value.
    pub fn induced(&self, vertices: &[usize]) -> FInstance {
        let graph = self.graph.induced(vertices);
        let f = vertices.iter().map(|&v| self.f[v]).collect();
        FInstance::from_graph(graph, f).expect("restriction keeps f positive")
    }

    pub fn without_edge(&self, e: usize) -> FInstance {
        let graph = self.graph.without_edges(|x| x == e);
        FInstance::from_graph(graph, self.f.clone()).expect("same f")
    }

    /// Relabels vertex `v` as `perm[v]`, carrying f along.
    pub fn relabel(&self, perm: &[usize]) -> FInstance {
        let graph = self.graph.relabel(perm);
        let mut f = vec![0; self.n()];
        for (v, &p) in perm.iter().enumerate() {
            f[p] = self.f[v];
        }
        FInstance::from_graph(graph, f).expect("same f values")
    }
}

fn compute_delta_f(graph: &Graph, f: &[usize]) -> usize {
    (0..graph.n()).map(|v| ceil_div(graph.degree(v), f[v])).max().unwrap_or(0)
}

/// Recomputes `Δ_f` from scratch, independent of the cached value.
pub fn delta_f_from_scratch(inst: &FInstance) -> usize {
    compute_delta_f(inst.graph(), inst.f_values())
}

/// Recognizes the exceptional graph: the wheel on five rim vertices with
/// `f = 2` at the hub and `f = 1` on the rim.
pub fn is_graph_w(inst: &FInstance) -> bool {
    let g = inst.graph();
    if g.n() != 6 || g.m() != 10 {
        return false;
    }
    let Some(hub) = (0..6).find(|&v| g.degree(v) == 5) else {
        return false;
    };
    if inst.f(hub) != 2 {
        return false;
    }
    let rim: Vec<usize> = (0..6).filter(|&v| v != hub).collect();
    if rim.iter().any(|&v| g.degree(v) != 3 || inst.f(v) != 1) {
        return false;
    }
    // Every rim vertex has degree 3 with one spoke, so the rim is 2-regular;
    // it is a 5-cycle exactly when it is connected.
    g.induced(&rim).is_connected()
}
