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

//! Vertex splitting: `v` becomes up to `f(v)` copies that share out its
//! edges round-robin, so a proper coloring of the split graph is an
//! f-coloring of the original.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::FColoring;
use crate::graph::{FInstance, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitGraph {
    /// Split edge `i` corresponds to original edge `i`.
    pub split: Graph,
    /// Original vertex of each split vertex.
    pub origin: Vec<usize>,
    /// Split vertices of each original vertex, in copy order.
    pub copies: Vec<Vec<usize>>,
}

impl SplitGraph {
    /// A coloring of the split graph read as a coloring of the original
    /// edges. Edge indices line up, so this only checks the length.
    pub fn merge(&self, col: &FColoring) -> FColoring {
        assert_eq!(col.colors().len(), self.split.m(), "coloring does not cover the split graph");
        col.clone()
    }
}

/// Splits `v` into `min(f(v), max(d(v), 1))` copies. The `i`-th incident
/// edge of `v` (by edge index) goes to copy `i mod copies`.
pub fn split_instance(inst: &FInstance) -> SplitGraph {
    let g = inst.graph();
    let mut origin = Vec::new();
    let mut copies = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let count = inst.f(v).min(g.degree(v).max(1));
        let ids: Vec<usize> = (origin.len()..origin.len() + count).collect();
        origin.extend(core::iter::repeat(v).take(count));
        copies.push(ids);
    }
    // Position of each edge within each endpoint's incidence list, in edge
    // index order.
    let mut seen = vec![0usize; g.n()];
    let mut edges = Vec::with_capacity(g.m());
    for &(a, b) in g.edges() {
        let ca = copies[a][seen[a] % copies[a].len()];
        let cb = copies[b][seen[b] % copies[b].len()];
        seen[a] += 1;
        seen[b] += 1;
        edges.push((ca, cb));
    }
    let split = Graph::new(origin.len(), &edges).expect("split of a simple graph is simple");
    SplitGraph { split, origin, copies }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_center_splits_three_two() {
        let edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
        let inst = FInstance::new(6, &edges, &[2, 1, 1, 1, 1, 1]).unwrap();
        let s = split_instance(&inst);
        assert_eq!(s.copies[0].len(), 2);
        assert_eq!(s.split.degree(s.copies[0][0]), 3);
        assert_eq!(s.split.degree(s.copies[0][1]), 2);
        assert_eq!(s.split.max_degree(), inst.delta_f());
        assert!(s.split.is_bipartite());
    }

    #[test]
    fn f_one_is_identity() {
        let inst = FInstance::new(4, &[(0, 1), (1, 2), (2, 3), (0, 2)], &[1; 4]).unwrap();
        let s = split_instance(&inst);
        assert_eq!(&s.split, inst.graph());
        assert_eq!(s.origin, vec![0, 1, 2, 3]);
    }

    #[test]
    fn c4_with_f_two_is_a_perfect_matching() {
        let inst = FInstance::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[2; 4]).unwrap();
        let s = split_instance(&inst);
        assert_eq!(s.split.n(), 8);
        assert_eq!(s.split.max_degree(), 1);
        assert_eq!(s.split.min_degree(), 1);
    }

    #[test]
    fn merge_keeps_edge_order() {
        let inst = FInstance::new(3, &[(0, 1), (1, 2)], &[1, 2, 1]).unwrap();
        let s = split_instance(&inst);
        let col = FColoring::new(1, vec![1, 1]);
        assert_eq!(s.merge(&col), col);
        for (e, &(a, b)) in s.split.edges().iter().enumerate() {
            let (x, y) = inst.graph().edge(e);
            let mut o = [s.origin[a], s.origin[b]];
            o.sort_unstable();
            assert_eq!(o, [x, y]);
        }
    }
}
