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

//! Exact f-chromatic index for small instances.

use core::fmt;

use crate::coloring::FColoring;
use crate::graph::FInstance;
use crate::search::{search_delta_f_coloring, SearchOutcome};
use crate::upper::upper_color_f;

/// Largest edge count [`exact_chi_f`] accepts.
pub const ORACLE_EDGE_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    EmptyGraph,
    TooLarge { edges: usize, cap: usize },
    /// The search proved no `Δ_f`-coloring exists but the constructive
    /// colorer produced one.
    InternalInconsistency,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::EmptyGraph => write!(f, "instance has no edges"),
            OracleError::TooLarge { edges, cap } => {
                write!(f, "instance has {edges} edges, more than the exact limit of {cap}")
            }
            OracleError::InternalInconsistency => {
                write!(f, "exhaustive search and the constructive colorer disagree")
            }
        }
    }
}

impl core::error::Error for OracleError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub chi_f: usize,
    /// A valid coloring with `chi_f` colors.
    pub witness: FColoring,
    pub nodes_expanded: u64,
    /// The search proved there is no `Δ_f`-coloring.
    pub exhausted_at_delta_f: bool,
}

/// The f-chromatic index, by exhaustive search at `Δ_f`.
pub fn exact_chi_f(inst: &FInstance) -> Result<OracleResult, OracleError> {
    if inst.m() == 0 {
        return Err(OracleError::EmptyGraph);
    }
    if inst.m() > ORACLE_EDGE_CAP {
        return Err(OracleError::TooLarge { edges: inst.m(), cap: ORACLE_EDGE_CAP });
    }
    let delta_f = inst.delta_f();
    let r = search_delta_f_coloring(inst, None);
    match r.outcome {
        SearchOutcome::Found(witness) => Ok(OracleResult {
            chi_f: delta_f,
            witness,
            nodes_expanded: r.nodes,
            exhausted_at_delta_f: false,
        }),
        SearchOutcome::ProvedNone => {
            let up = upper_color_f(inst).map_err(|_| OracleError::InternalInconsistency)?;
            if up.k() != delta_f + 1 {
                return Err(OracleError::InternalInconsistency);
            }
            Ok(OracleResult { chi_f: delta_f + 1, witness: up, nodes_expanded: r.nodes, exhausted_at_delta_f: true })
        }
        SearchOutcome::Exhausted => unreachable!("unbounded search cannot run out of budget"),
    }
}

fn chi_or_zero(inst: &FInstance) -> Result<usize, OracleError> {
    match exact_chi_f(inst) {
        Ok(r) => Ok(r.chi_f),
        Err(OracleError::EmptyGraph) => Ok(0),
        Err(e) => Err(e),
    }
}

/// Connected, f-Class 2, and deleting any edge lowers the f-chromatic index.
pub fn is_f_critical(inst: &FInstance) -> Result<bool, OracleError> {
    let r = exact_chi_f(inst)?;
    if !inst.graph().is_connected() || r.chi_f != inst.delta_f() + 1 {
        return Ok(false);
    }
    for e in 0..inst.m() {
        if chi_or_zero(&inst.without_edge(e))? >= r.chi_f {
            return Ok(false);
        }
    }
    Ok(true)
}
