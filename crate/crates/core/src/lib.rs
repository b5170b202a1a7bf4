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

#![no_std]

//! # `fcolor-core`
//!
//! f-edge-colorings of simple graphs. An f-coloring assigns colors to edges
//! so that every vertex `v` sees each color at most `f(v)` times. The least
//! number of colors is always `Δ_f` or `Δ_f + 1`, where
//! `Δ_f = max ⌈d(v) / f(v)⌉`; this crate decides which one for as many
//! instances as it can, with a coloring attached to every positive answer.
//!
//! Everything here is `alloc`-only. File formats, generators and the command
//! line live in the `fcolor` crate.

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
pub mod coloring;
pub mod core_info;
pub mod cuts;
pub mod enumerate;
pub mod extend;
pub mod graph;
pub mod konig;
pub mod oracle;
pub mod search;
pub mod split;
pub mod upper;

pub use classify::{
    classify, classify_any, evaluate_rule, explain, AnyVerdict, ClassifyError, ClassifyOptions, ComponentVerdict, Rule,
    RuleCheck, Verdict, VerdictClass,
};
pub use enumerate::{connected_graphs, enumerate_instances, EnumerateError, FPattern};
pub use coloring::{verify_coloring, CoverageError, FColoring, VerifyReport, Violation};
pub use core_info::{f_core, CoreInfo};
pub use cuts::{find_matching_cut, find_star_cut, CutError, CutKind, CutSearch, CutWitness};
pub use extend::{extend_one_edge, vizing_color, ExtendError};
pub use graph::{is_graph_w, FInstance, Graph, InstanceError};
pub use konig::{konig_color, KonigError};
pub use oracle::{exact_chi_f, is_f_critical, OracleError, OracleResult};
pub use search::{search_coloring, search_delta_f_coloring, SearchOutcome, SearchResult};
pub use split::{split_instance, SplitGraph};
pub use upper::{even_f_color, upper_color_f, ColoringError};
