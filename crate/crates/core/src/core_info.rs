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

//! The f-core: the subgraph induced on the f-maximum vertices, i.e. those
//! with `d(v) = f(v) · Δ_f`.

use alloc::vec::Vec;

use crate::graph::{FInstance, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreInfo {
    /// f-maximum vertices, ascending. `core_graph` vertex `i` is `members[i]`.
    pub members: Vec<usize>,
    pub core_graph: Graph,
    pub max_core_degree: usize,
    pub is_forest: bool,
    pub all_components_unicyclic_or_tree: bool,
    /// Non-empty and every member has exactly two core neighbors.
    pub is_two_regular: bool,
}

impl CoreInfo {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// Computes the f-core, or `None` for an edgeless instance.
pub fn f_core(inst: &FInstance) -> Option<CoreInfo> {
    if inst.delta_f() == 0 {
        return None;
    }
    let members: Vec<usize> = (0..inst.n()).filter(|&v| inst.is_f_maximum(v)).collect();
    let core_graph = inst.graph().induced(&members);
    let max_core_degree = core_graph.max_degree();
    let components = core_graph.components();
    let mut is_forest = true;
    let mut all_components_unicyclic_or_tree = true;
    for comp in &components {
        let edges: usize = comp.iter().map(|&v| core_graph.degree(v)).sum::<usize>() / 2;
        if edges >= comp.len() {
            is_forest = false;
        }
        if edges > comp.len() {
            all_components_unicyclic_or_tree = false;
        }
    }
    let is_two_regular = !members.is_empty() && (0..members.len()).all(|v| core_graph.degree(v) == 2);
    Some(CoreInfo {
        members,
        core_graph,
        max_core_degree,
        is_forest,
        all_components_unicyclic_or_tree,
        is_two_regular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn odd_cycle_core_is_everything() {
        let edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let inst = FInstance::new(5, &edges, &[1; 5]).unwrap();
        let core = f_core(&inst).unwrap();
        assert_eq!(core.members, vec![0, 1, 2, 3, 4]);
        assert!(core.is_two_regular);
        assert!(!core.is_forest);
        assert!(core.all_components_unicyclic_or_tree);
    }

    #[test]
    fn star_with_heavy_center_has_empty_core() {
        let edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
        let inst = FInstance::new(6, &edges, &[2, 1, 1, 1, 1, 1]).unwrap();
        let core = f_core(&inst).unwrap();
        assert!(core.is_empty());
        assert!(!core.is_two_regular);
        assert!(core.is_forest);
    }

    #[test]
    fn triangle_with_pendant() {
        // Degrees 3, 2, 2, 1: only vertex 0 reaches Δ_f = 3.
        let inst = FInstance::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)], &[1; 4]).unwrap();
        let core = f_core(&inst).unwrap();
        assert_eq!(core.members, vec![0]);
        assert!(core.is_forest);
        assert_eq!(core.max_core_degree, 0);
    }

    #[test]
    fn edgeless_has_no_core() {
        let inst = FInstance::new(3, &[], &[1; 3]).unwrap();
        assert!(f_core(&inst).is_none());
    }
}
