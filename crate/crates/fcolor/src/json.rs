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

//! JSON documents: colorings and verdicts. Vertices are 1-based and key
//! order is fixed, so equal inputs give byte-identical output.

use fcolor_core::{AnyVerdict, CutKind, FColoring, FInstance, Verdict};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// `{"k": …, "edges": [[u, v, c], …]}` with edges in instance order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub k: usize,
    pub edges: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringFileError {
    #[error("coloring names edge {0}-{1}, which is not in the instance")]
    UnknownEdge(usize, usize),
    #[error("coloring lists edge {0}-{1} more than once")]
    RepeatedEdge(usize, usize),
}

impl ColoringJson {
    pub fn from_coloring(inst: &FInstance, col: &FColoring) -> ColoringJson {
        let edges = inst
            .graph()
            .edges()
            .iter()
            .zip(col.colors())
            .map(|(&(a, b), &c)| (a + 1, b + 1, c))
            .collect();
        ColoringJson { k: col.k(), edges }
    }

    /// Edges may be listed in any order and orientation; edges left out
    /// stay uncolored.
    pub fn to_coloring(&self, inst: &FInstance) -> Result<FColoring, ColoringFileError> {
        let g = inst.graph();
        let mut colors = vec![0; inst.m()];
        let mut seen = vec![false; inst.m()];
        for &(u, v, c) in &self.edges {
            let e = (u >= 1 && v >= 1 && u <= inst.n() && v <= inst.n())
                .then(|| g.edge_id(u - 1, v - 1))
                .flatten()
                .ok_or(ColoringFileError::UnknownEdge(u, v))?;
            if seen[e] {
                return Err(ColoringFileError::RepeatedEdge(u, v));
            }
            seen[e] = true;
            colors[e] = c;
        }
        Ok(FColoring::new(self.k, colors))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutJson {
    pub kind: &'static str,
    pub edges: Vec<(usize, usize)>,
    pub star_center: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleCheckJson {
    pub rule: &'static str,
    pub fired: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub class: &'static str,
    pub rule: &'static str,
    pub delta_f: usize,
    pub witness: Option<ColoringJson>,
    pub upper: Option<ColoringJson>,
    pub search_nodes: Option<u64>,
    pub exhausted_at_delta_f: bool,
    pub cut: Option<CutJson>,
    pub notes: Vec<String>,
    pub trace: Vec<RuleCheckJson>,
}

impl VerdictJson {
    pub fn new(inst: &FInstance, v: &Verdict) -> VerdictJson {
        let g = inst.graph();
        VerdictJson {
            class: v.class.as_str(),
            rule: v.rule.id(),
            delta_f: v.delta_f,
            witness: v.witness.as_ref().map(|c| ColoringJson::from_coloring(inst, c)),
            upper: v.upper.as_ref().map(|c| ColoringJson::from_coloring(inst, c)),
            search_nodes: v.search_nodes,
            exhausted_at_delta_f: v.exhausted_at_delta_f,
            cut: v.cut.as_ref().map(|c| CutJson {
                kind: match c.kind {
                    CutKind::Matching => "matching",
                    CutKind::Star => "star",
                },
                edges: c
                    .cut_edges
                    .iter()
                    .map(|&e| {
                        let (a, b) = g.edge(e);
                        (a + 1, b + 1)
                    })
                    .collect(),
                star_center: c.star_center.map(|s| s + 1),
            }),
            notes: v.notes.clone(),
            trace: v
                .trace
                .iter()
                .map(|c| RuleCheckJson { rule: c.rule.id(), fired: c.fired, reason: c.reason.clone() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentJson {
    pub vertices: Vec<usize>,
    pub verdict: VerdictJson,
}

/// Verdict for an instance with several components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnyVerdictJson {
    pub class: &'static str,
    pub delta_f: usize,
    pub witness: Option<ColoringJson>,
    pub components: Vec<ComponentJson>,
}

impl AnyVerdictJson {
    pub fn new(inst: &FInstance, v: &AnyVerdict) -> AnyVerdictJson {
        AnyVerdictJson {
            class: v.class.as_str(),
            delta_f: v.delta_f,
            witness: v.witness.as_ref().map(|c| ColoringJson::from_coloring(inst, c)),
            components: v
                .components
                .iter()
                .map(|c| ComponentJson {
                    vertices: c.vertices.iter().map(|&x| x + 1).collect(),
                    verdict: VerdictJson::new(&inst.induced(&c.vertices), &c.verdict),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fcolor_core::{classify, ClassifyOptions};

    fn triangle() -> FInstance {
        FInstance::new(3, &[(0, 1), (1, 2), (0, 2)], &[1; 3]).unwrap()
    }

    #[test]
    fn coloring_round_trip() {
        let inst = triangle();
        let col = FColoring::new(3, vec![1, 2, 3]);
        let j = ColoringJson::from_coloring(&inst, &col);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"k":3,"edges":[[1,2,1],[2,3,2],[1,3,3]]}"#);
        let back: ColoringJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_coloring(&inst).unwrap(), col);
    }

    #[test]
    fn coloring_file_errors() {
        let inst = triangle();
        let j = ColoringJson { k: 2, edges: vec![(1, 2, 1), (2, 1, 2)] };
        assert_eq!(j.to_coloring(&inst), Err(ColoringFileError::RepeatedEdge(2, 1)));
        let j = ColoringJson { k: 2, edges: vec![(1, 4, 1)] };
        assert_eq!(j.to_coloring(&inst), Err(ColoringFileError::UnknownEdge(1, 4)));
        let partial = ColoringJson { k: 2, edges: vec![(3, 2, 1)] }.to_coloring(&inst).unwrap();
        assert_eq!(partial.colors(), &[0, 1, 0]);
    }

    #[test]
    fn verdict_keys_in_order() {
        let inst = triangle();
        let v = classify(&inst, &ClassifyOptions::default()).unwrap();
        let text = serde_json::to_string(&VerdictJson::new(&inst, &v)).unwrap();
        assert!(text.starts_with(r#"{"class":"class2","rule":"EXACT","delta_f":2,"witness":null,"upper":{"k":3"#));
    }
}
