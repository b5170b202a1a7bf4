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

//! Named graph families and f assignments.
//!
//! | family | params | vertices |
//! |---|---|---|
//! | `cycle` | `n ≥ 3` | `0..n` around the cycle |
//! | `path` | `n ≥ 2` | `0..n` along the path |
//! | `complete` | `n ≥ 2` | |
//! | `complete_bipartite` | `a b ≥ 1` | `0..a` on one side |
//! | `wheel` | `n ≥ 3` | hub `0`, rim `1..=n` |
//! | `petersen` | | outer cycle `0..5`, spokes `i, i+5`, inner pentagram |
//! | `star` | `n ≥ 1` | center `0`, leaves `1..=n` |
//! | `random` | `n p seed` | each pair `i < j` in lexicographic order kept with probability `p` |
//! | `graph_w` | | `wheel 5`, default f `hub:2` |
//!
//! `random` draws from the 64-bit LCG `s ← s · 6364136223846793005 +
//! 1442695040888963407 (mod 2⁶⁴)` seeded with `s = seed`, taking
//! `(s >> 11) / 2⁵³` after each step as a uniform in `[0, 1)`; a pair is an
//! edge when that uniform is below `p`.

use fcolor_core::{FInstance, Graph};
use thiserror::Error;

pub const FAMILIES: [&str; 9] =
    ["cycle", "path", "complete", "complete_bipartite", "wheel", "petersen", "star", "random", "graph_w"];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for `{family}`: {message}")]
    BadParams { family: String, message: String },
}

/// The f grammar: `const:k`, `list:v1,…,vn` or `hub:k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FSpec {
    Const(usize),
    List(Vec<usize>),
    /// `k` on the lowest-index vertex of maximum degree, 1 elsewhere.
    Hub(usize),
}

impl FSpec {
    pub fn parse(text: &str) -> Result<FSpec, FamilyError> {
        let bad = |message: &str| FamilyError::BadParams { family: String::from("f"), message: format!("{message} in `{text}`") };
        let positive = |t: &str| match t.trim().parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(bad("expected a positive integer")),
        };
        let (kind, value) = text.split_once(':').ok_or_else(|| bad("expected `kind:value`"))?;
        match kind {
            "const" => Ok(FSpec::Const(positive(value)?)),
            "hub" => Ok(FSpec::Hub(positive(value)?)),
            "list" => Ok(FSpec::List(value.split(',').map(positive).collect::<Result<_, _>>()?)),
            _ => Err(bad("unknown f kind")),
        }
    }

    pub fn values(&self, g: &Graph) -> Result<Vec<usize>, FamilyError> {
        match self {
            FSpec::Const(k) => Ok(vec![*k; g.n()]),
            FSpec::Hub(k) => {
                let mut f = vec![1; g.n()];
                let top = g.max_degree();
                if let Some(hub) = (0..g.n()).find(|&v| g.degree(v) == top) {
                    f[hub] = *k;
                }
                Ok(f)
            }
            FSpec::List(values) if values.len() == g.n() => Ok(values.clone()),
            FSpec::List(values) => Err(FamilyError::BadParams {
                family: String::from("f"),
                message: format!("list has {} values for {} vertices", values.len(), g.n()),
            }),
        }
    }
}

/// The generator described in the module docs.
#[derive(Debug, Clone)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Lcg {
        Lcg(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Lcg::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are distinct")
}

fn cycle_edges(n: usize, offset: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (offset + i, offset + (i + 1) % n))
}

pub fn petersen() -> Graph {
    let mut edges: Vec<(usize, usize)> = cycle_edges(5, 0).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::new(10, &edges).expect("Petersen graph is simple")
}

pub fn wheel(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..=n).map(|i| (i, i % n + 1)));
    Graph::new(n + 1, &edges).expect("wheel is simple")
}

fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Builds a family member; `f_spec` defaults to `const:1` (`hub:2` for
/// `graph_w`).
pub fn gen_family(name: &str, params: &[&str], f_spec: Option<&FSpec>) -> Result<FInstance, FamilyError> {
    let bad = |message: String| FamilyError::BadParams { family: name.to_string(), message };
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(bad(format!("expected {k} parameters, found {}", params.len())))
        }
    };
    let int = |i: usize, min: usize| -> Result<usize, FamilyError> {
        match params[i].parse::<usize>() {
            Ok(v) if v >= min => Ok(v),
            _ => Err(bad(format!("parameter `{}` must be an integer ≥ {min}", params[i]))),
        }
    };
    let graph = match name {
        "cycle" => {
            arity(1)?;
            let n = int(0, 3)?;
            Graph::new(n, &cycle_edges(n, 0).collect::<Vec<_>>())
        }
        "path" => {
            arity(1)?;
            let n = int(0, 2)?;
            Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
        }
        "complete" => {
            arity(1)?;
            let n = int(0, 2)?;
            Graph::new(n, &complete_edges(n))
        }
        "complete_bipartite" => {
            arity(2)?;
            let (a, b) = (int(0, 1)?, int(1, 1)?);
            Graph::new(a + b, &(0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect::<Vec<_>>())
        }
        "wheel" => {
            arity(1)?;
            Ok(wheel(int(0, 3)?))
        }
        "petersen" => {
            arity(0)?;
            Ok(petersen())
        }
        "star" => {
            arity(1)?;
            let n = int(0, 1)?;
            Graph::new(n + 1, &(1..=n).map(|i| (0, i)).collect::<Vec<_>>())
        }
        "random" => {
            arity(3)?;
            let n = int(0, 1)?;
            let p: f64 = params[1]
                .parse()
                .ok()
                .filter(|p: &f64| (0.0..=1.0).contains(p))
                .ok_or_else(|| bad(format!("probability `{}` must be in [0, 1]", params[1])))?;
            let seed: u64 = params[2].parse().map_err(|_| bad(format!("seed `{}` must be an integer", params[2])))?;
            Ok(random_graph(n, p, seed))
        }
        "graph_w" => {
            arity(0)?;
            Ok(wheel(5))
        }
        _ => return Err(FamilyError::UnknownFamily(name.to_string())),
    }
    .expect("family constructions are simple");
    let default = if name == "graph_w" { FSpec::Hub(2) } else { FSpec::Const(1) };
    let f = f_spec.unwrap_or(&default).values(&graph)?;
    Ok(FInstance::from_graph(graph, f).expect("f values are positive"))
}
