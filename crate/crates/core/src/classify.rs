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

//! Rule pipeline deciding f-Class 1 or f-Class 2.
//!
//! Rules are tried in [`Rule::STRUCTURAL`] order and the first that fires
//! decides. Structural rules only ever conclude f-Class 1, and every such
//! verdict carries a `Δ_f`-coloring. Small instances that no rule settles
//! are decided by exhaustive search; larger ones come back `Unknown`.
//!
//! Vertex numbers inside human-readable reasons are 1-based.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::coloring::FColoring;
use crate::core_info::{f_core, CoreInfo};
use crate::cuts::{find_matching_cut, find_star_cut, CutKind, CutSearch, CutWitness};
use crate::graph::{is_graph_w, FInstance};
use crate::search::{search_delta_f_coloring, SearchOutcome};
use crate::upper::{even_f_color, upper_color_f};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Instances with at most this many edges are settled by exhaustive
    /// search when no structural rule fires.
    pub exact_edge_limit: usize,
    /// Node budget for the matching-cut search.
    pub cut_budget: u64,
    /// Node budget for the coloring search behind rules that do not build
    /// their coloring directly.
    pub witness_budget: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { exact_edge_limit: 24, cut_budget: 1_000_000, witness_budget: 50_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Bipartite,
    EvenF,
    EmptyCore,
    CoreUnicyclic,
    CoreDeg2Necessary,
    SmallCut,
    ClawFree,
    Exact,
    Unknown,
}

impl Rule {
    /// The rules that decide from structure alone, in pipeline order.
    pub const STRUCTURAL: [Rule; 7] = [
        Rule::Bipartite,
        Rule::EvenF,
        Rule::EmptyCore,
        Rule::CoreUnicyclic,
        Rule::CoreDeg2Necessary,
        Rule::SmallCut,
        Rule::ClawFree,
    ];

    pub const ALL: [Rule; 9] = [
        Rule::Bipartite,
        Rule::EvenF,
        Rule::EmptyCore,
        Rule::CoreUnicyclic,
        Rule::CoreDeg2Necessary,
        Rule::SmallCut,
        Rule::ClawFree,
        Rule::Exact,
        Rule::Unknown,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::Bipartite => "BIPARTITE",
            Rule::EvenF => "EVEN_F",
            Rule::EmptyCore => "EMPTY_CORE",
            Rule::CoreUnicyclic => "CORE_UNICYCLIC",
            Rule::CoreDeg2Necessary => "CORE_DEG2_NECESSARY",
            Rule::SmallCut => "SMALL_CUT",
            Rule::ClawFree => "CLAWFREE",
            Rule::Exact => "EXACT",
            Rule::Unknown => "UNKNOWN",
        }
    }

    pub fn from_id(id: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.id() == id)
    }

    /// The result the rule rests on, stated in one line.
    pub fn citation(self) -> &'static str {
        match self {
            Rule::Bipartite => "bipartite graphs are f-Class 1 (Hakimi-Kariv)",
            Rule::EvenF => "graphs with every f(v) even are f-Class 1 (Hakimi-Kariv)",
            Rule::EmptyCore => "f(v) does not divide d(v) on any f-core vertex, so f-Class 1 (empty f-core)",
            Rule::CoreUnicyclic => {
                "f-core components all unicyclic or trees, f-core not 2-regular, so f-Class 1"
            }
            Rule::CoreDeg2Necessary => {
                "an f-Class 2 graph with f-core of maximum degree at most 2 is f-critical, has a \
                 2-regular f-core, has d(v) = f(v)·Δ_f − 1 off the f-core, has at least three \
                 f-maximum vertices and has every v adjacent to at least 2f(v) of them"
            }
            Rule::SmallCut => {
                "f-core of maximum degree at most 2 and an edge cut of size at most Δ_f − 2 that is \
                 a matching or a star, so f-Class 1"
            }
            Rule::ClawFree => {
                "connected claw-free graph with f-core of maximum degree at most 2 and some \
                 f(v) ≥ 2 is f-Class 1 unless it is the graph W"
            }
            Rule::Exact => "exhaustive search for a Δ_f-coloring",
            Rule::Unknown => "no rule applies and the instance is above the exact edge limit",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictClass {
    Class1,
    Class2,
    Unknown,
}

impl VerdictClass {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictClass::Class1 => "class1",
            VerdictClass::Class2 => "class2",
            VerdictClass::Unknown => "unknown",
        }
    }
}

impl fmt::Display for VerdictClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of testing one rule's hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleCheck {
    pub rule: Rule,
    pub fired: bool,
    pub reason: String,
    /// The cut found by [`Rule::SmallCut`].
    pub cut: Option<CutWitness>,
    /// Set when a budget ran out while testing the hypothesis.
    pub note: Option<String>,
}

impl RuleCheck {
    fn hit(rule: Rule, reason: String) -> RuleCheck {
        RuleCheck { rule, fired: true, reason, cut: None, note: None }
    }

    fn miss(rule: Rule, reason: String) -> RuleCheck {
        RuleCheck { rule, fired: false, reason, cut: None, note: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub class: VerdictClass,
    pub rule: Rule,
    pub delta_f: usize,
    /// For f-Class 1: a valid coloring with palette `1..=Δ_f`.
    pub witness: Option<FColoring>,
    /// A constructive coloring with at most `Δ_f + 1` colors, attached to
    /// every verdict that is not f-Class 1 with a witness.
    pub upper: Option<FColoring>,
    /// Nodes spent by the coloring search, if one ran.
    pub search_nodes: Option<u64>,
    /// Exhaustive search proved no `Δ_f`-coloring exists.
    pub exhausted_at_delta_f: bool,
    pub cut: Option<CutWitness>,
    pub notes: Vec<String>,
    /// Every rule tested, in order, up to and including the one that fired.
    pub trace: Vec<RuleCheck>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifyError {
    Disconnected { components: usize },
    EmptyGraph,
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Disconnected { components } => {
                write!(f, "instance has {components} components; classify each one separately")
            }
            ClassifyError::EmptyGraph => write!(f, "instance has no edges"),
        }
    }
}

impl core::error::Error for ClassifyError {}

/// Tests one structural rule's hypothesis without producing a coloring.
/// `Exact` and `Unknown` depend only on the options and the edge count.
pub fn evaluate_rule(inst: &FInstance, rule: Rule, opts: &ClassifyOptions) -> RuleCheck {
    match f_core(inst) {
        Some(core) => evaluate_with_core(inst, &core, rule, opts),
        None => RuleCheck::miss(rule, String::from("instance has no edges")),
    }
}

fn evaluate_with_core(inst: &FInstance, core: &CoreInfo, rule: Rule, opts: &ClassifyOptions) -> RuleCheck {
    let g = inst.graph();
    match rule {
        Rule::Bipartite => match g.bipartition() {
            Some(_) => RuleCheck::hit(rule, String::from("graph is bipartite")),
            None => RuleCheck::miss(rule, String::from("graph has an odd cycle")),
        },
        Rule::EvenF => match (0..inst.n()).find(|&v| inst.f(v) % 2 == 1) {
            None => RuleCheck::hit(rule, String::from("every f(v) is even")),
            Some(v) => RuleCheck::miss(rule, format!("f({}) = {} is odd", v + 1, inst.f(v))),
        },
        Rule::EmptyCore => {
            if core.is_empty() {
                RuleCheck::hit(rule, String::from("no vertex has d(v) = f(v)·Δ_f"))
            } else {
                RuleCheck::miss(rule, format!("f-core has {} vertices", core.members.len()))
            }
        }
        Rule::CoreUnicyclic => {
            if !core.all_components_unicyclic_or_tree {
                RuleCheck::miss(rule, String::from("some f-core component has two or more cycles"))
            } else if core.is_two_regular {
                RuleCheck::miss(rule, String::from("f-core is 2-regular"))
            } else if core.is_forest {
                RuleCheck::hit(rule, String::from("f-core is a forest"))
            } else {
                RuleCheck::hit(rule, String::from("f-core components are unicyclic or trees and not all cycles"))
            }
        }
        Rule::CoreDeg2Necessary => evaluate_necessary(inst, core),
        Rule::SmallCut => evaluate_cut(inst, core, opts),
        Rule::ClawFree => {
            if core.max_core_degree > 2 {
                RuleCheck::miss(rule, format!("f-core has maximum degree {}", core.max_core_degree))
            } else if let Some((c, leaves)) = g.find_claw() {
                RuleCheck::miss(
                    rule,
                    format!(
                        "claw centered at {} with leaves {}, {}, {}",
                        c + 1,
                        leaves[0] + 1,
                        leaves[1] + 1,
                        leaves[2] + 1
                    ),
                )
            } else if (0..inst.n()).all(|v| inst.f(v) == 1) {
                RuleCheck::miss(rule, String::from("f ≡ 1"))
            } else if is_graph_w(inst) {
                RuleCheck::miss(rule, String::from("instance is the graph W"))
            } else {
                RuleCheck::hit(rule, String::from("claw-free with some f(v) ≥ 2 and not W"))
            }
        }
        Rule::Exact => {
            if inst.m() <= opts.exact_edge_limit {
                RuleCheck::hit(rule, format!("{} edges, limit {}", inst.m(), opts.exact_edge_limit))
            } else {
                RuleCheck::miss(rule, format!("{} edges, above limit {}", inst.m(), opts.exact_edge_limit))
            }
        }
        Rule::Unknown => RuleCheck::hit(rule, String::from("no rule applies")),
    }
}

fn evaluate_necessary(inst: &FInstance, core: &CoreInfo) -> RuleCheck {
    let rule = Rule::CoreDeg2Necessary;
    if core.max_core_degree > 2 {
        return RuleCheck::miss(rule, format!("f-core has maximum degree {}", core.max_core_degree));
    }
    if !core.is_two_regular {
        return RuleCheck::miss(rule, String::from("f-core is not 2-regular"));
    }
    let g = inst.graph();
    let d = inst.delta_f();
    if let Some(v) = (0..inst.n()).find(|&v| !core.contains(v) && g.degree(v) + 1 != inst.f(v) * d) {
        return RuleCheck::hit(
            rule,
            format!(
                "vertex {} is off the f-core with d = {} but f(v)·Δ_f − 1 = {}",
                v + 1,
                g.degree(v),
                inst.f(v) * d - 1
            ),
        );
    }
    if core.members.len() < 3 {
        return RuleCheck::hit(rule, format!("only {} f-maximum vertices", core.members.len()));
    }
    for v in 0..inst.n() {
        let near = g.neighbors(v).filter(|&w| core.contains(w)).count();
        if near < 2 * inst.f(v) {
            return RuleCheck::hit(
                rule,
                format!("vertex {} has {} f-maximum neighbors, fewer than 2f(v) = {}", v + 1, near, 2 * inst.f(v)),
            );
        }
    }
    RuleCheck::miss(rule, String::from("every necessary condition for f-Class 2 holds"))
}

fn evaluate_cut(inst: &FInstance, core: &CoreInfo, opts: &ClassifyOptions) -> RuleCheck {
    let rule = Rule::SmallCut;
    if core.max_core_degree > 2 {
        return RuleCheck::miss(rule, format!("f-core has maximum degree {}", core.max_core_degree));
    }
    if inst.delta_f() < 3 {
        return RuleCheck::miss(rule, format!("Δ_f = {} leaves no room for a cut of size Δ_f − 2", inst.delta_f()));
    }
    let limit = inst.delta_f() - 2;
    let star = match find_star_cut(inst) {
        Ok(s) => s,
        Err(e) => return RuleCheck::miss(rule, format!("{e}")),
    };
    if let Some(cut) = star {
        let mut check = RuleCheck::hit(
            rule,
            format!(
                "star cut of {} edges at vertex {} (limit {})",
                cut.len(),
                cut.star_center.map_or(0, |c| c + 1),
                limit
            ),
        );
        check.cut = Some(cut);
        return check;
    }
    match find_matching_cut(inst, opts.cut_budget) {
        Ok(CutSearch::Found(cut)) => {
            let mut check =
                RuleCheck::hit(rule, format!("matching cut of {} edges (limit {})", cut.len(), limit));
            check.cut = Some(cut);
            check
        }
        Ok(CutSearch::NotFound) => {
            RuleCheck::miss(rule, format!("no star or matching edge cut of size at most {limit}"))
        }
        Ok(CutSearch::BudgetExhausted) => {
            let mut check = RuleCheck::miss(rule, format!("no star cut of size at most {limit}"));
            check.note = Some(String::from("matching-cut budget exhausted"));
            check
        }
        Err(e) => RuleCheck::miss(rule, format!("{e}")),
    }
}

/// Palette widened to `Δ_f` when the coloring fits.
fn fit(col: FColoring, delta_f: usize) -> Option<FColoring> {
    (col.k() <= delta_f).then(|| FColoring::new(delta_f, col.colors().to_vec()))
}

/// Classifies a connected instance with at least one edge.
pub fn classify(inst: &FInstance, opts: &ClassifyOptions) -> Result<Verdict, ClassifyError> {
    if inst.m() == 0 {
        return Err(ClassifyError::EmptyGraph);
    }
    let components = inst.graph().component_count();
    if components > 1 {
        return Err(ClassifyError::Disconnected { components });
    }
    let core = f_core(inst).expect("instance has edges");
    let d = inst.delta_f();
    let mut v = Verdict {
        class: VerdictClass::Unknown,
        rule: Rule::Unknown,
        delta_f: d,
        witness: None,
        upper: None,
        search_nodes: None,
        exhausted_at_delta_f: false,
        cut: None,
        notes: Vec::new(),
        trace: Vec::new(),
    };
    for rule in Rule::STRUCTURAL {
        let check = evaluate_with_core(inst, &core, rule, opts);
        if let Some(n) = &check.note {
            v.notes.push(n.clone());
        }
        let fired = check.fired;
        v.cut = check.cut.clone();
        v.trace.push(check);
        if !fired {
            continue;
        }
        v.rule = rule;
        v.class = VerdictClass::Class1;
        let direct = match rule {
            Rule::EvenF => even_f_color(inst).ok().and_then(|c| fit(c, d)),
            _ => upper_color_f(inst).ok().and_then(|c| fit(c, d)),
        };
        if direct.is_some() {
            v.witness = direct;
            return Ok(v);
        }
        let r = search_delta_f_coloring(inst, Some(opts.witness_budget));
        v.search_nodes = Some(r.nodes);
        match r.outcome {
            SearchOutcome::Found(c) => v.witness = Some(c),
            SearchOutcome::Exhausted => {
                v.notes.push(format!("{} fired but the witness search ran out of budget", rule.id()));
                v.upper = upper_color_f(inst).ok();
            }
            SearchOutcome::ProvedNone => {
                v.notes.push(format!(
                    "{} fired but exhaustive search found no Δ_f-coloring; reporting the search result",
                    rule.id()
                ));
                v.class = VerdictClass::Class2;
                v.rule = Rule::Exact;
                v.exhausted_at_delta_f = true;
                v.upper = upper_color_f(inst).ok();
            }
        }
        return Ok(v);
    }
    v.cut = None;
    let exact = evaluate_with_core(inst, &core, Rule::Exact, opts);
    let run_exact = exact.fired;
    v.trace.push(exact);
    if !run_exact {
        v.trace.push(evaluate_with_core(inst, &core, Rule::Unknown, opts));
        v.upper = upper_color_f(inst).ok();
        return Ok(v);
    }
    v.rule = Rule::Exact;
    let r = search_delta_f_coloring(inst, None);
    v.search_nodes = Some(r.nodes);
    match r.outcome {
        SearchOutcome::Found(c) => {
            v.class = VerdictClass::Class1;
            v.witness = Some(c);
        }
        SearchOutcome::ProvedNone => {
            v.class = VerdictClass::Class2;
            v.exhausted_at_delta_f = true;
            v.upper = upper_color_f(inst).ok();
        }
        SearchOutcome::Exhausted => unreachable!("unbounded search cannot run out of budget"),
    }
    Ok(v)
}

/// One connected component's verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    /// Original vertex numbers, ascending; component vertex `i` is
    /// `vertices[i]`.
    pub vertices: Vec<usize>,
    /// Original edge index of each component edge.
    pub edges: Vec<usize>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnyVerdict {
    pub class: VerdictClass,
    /// `Δ_f` of the whole instance.
    pub delta_f: usize,
    /// Components with at least one edge, ordered by lowest vertex.
    pub components: Vec<ComponentVerdict>,
    /// For f-Class 1: a `Δ_f`-coloring of the whole instance.
    pub witness: Option<FColoring>,
}

/// Classifies every component with at least one edge. The instance is
/// f-Class 1 exactly when every component is colorable with the global
/// `Δ_f`; components with a smaller `Δ_f` always are.
pub fn classify_any(inst: &FInstance, opts: &ClassifyOptions) -> Result<AnyVerdict, ClassifyError> {
    if inst.m() == 0 {
        return Err(ClassifyError::EmptyGraph);
    }
    let g = inst.graph();
    let d = inst.delta_f();
    let mut components = Vec::new();
    let mut colors = vec![0usize; inst.m()];
    let mut class = VerdictClass::Class1;
    for comp in g.components() {
        let sub = inst.induced(&comp);
        if sub.m() == 0 {
            continue;
        }
        let edges: Vec<usize> = sub
            .graph()
            .edges()
            .iter()
            .map(|&(a, b)| g.edge_id(comp[a], comp[b]).expect("induced edge exists"))
            .collect();
        let verdict = classify(&sub, opts)?;
        let coloring = if sub.delta_f() < d {
            upper_color_f(&sub).ok()
        } else {
            match verdict.class {
                VerdictClass::Class1 => verdict.witness.clone(),
                VerdictClass::Class2 => {
                    class = VerdictClass::Class2;
                    None
                }
                VerdictClass::Unknown => {
                    if class == VerdictClass::Class1 {
                        class = VerdictClass::Unknown;
                    }
                    None
                }
            }
        };
        match coloring {
            Some(c) => {
                for (i, &e) in edges.iter().enumerate() {
                    colors[e] = c.color(i);
                }
            }
            None if class == VerdictClass::Class1 => class = VerdictClass::Unknown,
            None => {}
        }
        components.push(ComponentVerdict { vertices: comp, edges, verdict });
    }
    let witness = (class == VerdictClass::Class1).then(|| FColoring::new(d, colors));
    Ok(AnyVerdict { class, delta_f: d, components, witness })
}

/// Human-readable report of a verdict.
pub fn explain(v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "class: {}", v.class);
    let _ = writeln!(out, "rule: {}", v.rule.id());
    let _ = writeln!(out, "delta_f: {}", v.delta_f);
    let _ = writeln!(out, "because: {}", v.rule.citation());
    if v.rule == Rule::CoreUnicyclic {
        if let Some(c) = v.trace.last().filter(|c| c.reason == "f-core is a forest") {
            let _ = writeln!(out, "also: {} (forest f-core, so f-Class 1)", c.reason);
        }
    }
    match &v.witness {
        Some(w) => {
            let _ = writeln!(out, "witness: {} edges, {} colors used of {}", w.colors().len(), w.distinct_colors(), w.k());
        }
        None if v.class == VerdictClass::Class1 => {
            let _ = writeln!(out, "witness: none");
        }
        None => {}
    }
    if let Some(u) = &v.upper {
        let _ = writeln!(out, "upper coloring: {} colors", u.k());
    }
    if let Some(n) = v.search_nodes {
        let outcome = if v.exhausted_at_delta_f {
            "search space exhausted, no Δ_f-coloring"
        } else if v.witness.is_some() {
            "coloring found"
        } else {
            "stopped"
        };
        let _ = writeln!(out, "search: {n} nodes, {outcome}");
    }
    if let Some(c) = &v.cut {
        let kind = match c.kind {
            CutKind::Matching => "matching",
            CutKind::Star => "star",
        };
        let edges: Vec<String> = c.cut_edges.iter().map(|e| format!("{}", e + 1)).collect();
        let _ = writeln!(out, "cut: {kind}, edges {}", edges.join(" "));
    }
    let _ = writeln!(out, "trace:");
    for c in &v.trace {
        let mark = if c.fired { "fired" } else { "miss " };
        let _ = writeln!(out, "  {mark} {:<20} {}", c.rule.id(), c.reason);
    }
    for n in &v.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;

    fn cycle(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    fn complete(n: usize) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        edges
    }

    fn run(n: usize, edges: &[(usize, usize)], f: &[usize]) -> (FInstance, Verdict) {
        let inst = FInstance::new(n, edges, f).unwrap();
        let v = classify(&inst, &ClassifyOptions::default()).unwrap();
        if v.class == VerdictClass::Class1 {
            let w = v.witness.as_ref().unwrap();
            assert_eq!(w.k(), inst.delta_f());
            assert!(verify_coloring(&inst, w).unwrap().is_valid());
        }
        (inst, v)
    }

    #[test]
    fn k33_bipartite() {
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                edges.push((i, j));
            }
        }
        let (_, v) = run(6, &edges, &[1; 6]);
        assert_eq!((v.class, v.rule), (VerdictClass::Class1, Rule::Bipartite));
        assert_eq!(v.witness.unwrap().k(), 3);
    }

    #[test]
    fn c5_exact_class_two() {
        let (_, v) = run(5, &cycle(5), &[1; 5]);
        assert_eq!((v.class, v.rule), (VerdictClass::Class2, Rule::Exact));
        assert!(v.exhausted_at_delta_f);
        assert_eq!(v.upper.unwrap().k(), 3);
        assert!(v.trace[..7].iter().all(|c| !c.fired));
    }

    #[test]
    fn graph_w_exact_class_two() {
        let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
        edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let (_, v) = run(6, &edges, &[2, 1, 1, 1, 1, 1]);
        assert_eq!((v.class, v.rule), (VerdictClass::Class2, Rule::Exact));
        assert_eq!(v.trace[6].reason, "instance is the graph W");
    }

    #[test]
    fn k5_with_even_f() {
        let (_, v) = run(5, &complete(5), &[2; 5]);
        assert_eq!((v.class, v.rule), (VerdictClass::Class1, Rule::EvenF));
        assert_eq!(v.witness.unwrap().k(), 2);
    }

    #[test]
    fn k4_core_has_many_cycles() {
        let (_, v) = run(4, &complete(4), &[1; 4]);
        assert_eq!((v.class, v.rule), (VerdictClass::Class1, Rule::Exact));
    }

    #[test]
    fn triangle_with_pendant_is_unicyclic_core() {
        let (_, v) = run(4, &[(0, 1), (1, 2), (0, 2), (0, 3)], &[1; 4]);
        assert_eq!((v.class, v.rule), (VerdictClass::Class1, Rule::CoreUnicyclic));
    }

    #[test]
    fn errors() {
        let two = FInstance::new(4, &[(0, 1), (2, 3)], &[1; 4]).unwrap();
        assert_eq!(classify(&two, &ClassifyOptions::default()), Err(ClassifyError::Disconnected { components: 2 }));
        let empty = FInstance::new(2, &[], &[1; 2]).unwrap();
        assert_eq!(classify(&empty, &ClassifyOptions::default()), Err(ClassifyError::EmptyGraph));
    }

    #[test]
    fn small_limit_gives_unknown() {
        let inst = FInstance::new(5, &cycle(5), &[1; 5]).unwrap();
        let opts = ClassifyOptions { exact_edge_limit: 3, ..ClassifyOptions::default() };
        let v = classify(&inst, &opts).unwrap();
        assert_eq!((v.class, v.rule), (VerdictClass::Unknown, Rule::Unknown));
        assert!(explain(&v).contains("miss  BIPARTITE"));
    }

    #[test]
    fn disjoint_unions() {
        let opts = ClassifyOptions::default();
        let mut c5c6 = cycle(5);
        c5c6.extend(cycle(6).into_iter().map(|(a, b)| (a + 5, b + 5)));
        let inst = FInstance::new(11, &c5c6, &[1; 11]).unwrap();
        assert_eq!(classify_any(&inst, &opts).unwrap().class, VerdictClass::Class2);

        let mut c6c8 = cycle(6);
        c6c8.extend(cycle(8).into_iter().map(|(a, b)| (a + 6, b + 6)));
        let inst = FInstance::new(14, &c6c8, &[1; 14]).unwrap();
        let any = classify_any(&inst, &opts).unwrap();
        assert_eq!(any.class, VerdictClass::Class1);
        assert!(verify_coloring(&inst, any.witness.as_ref().unwrap()).unwrap().is_valid());

        let mut c5star = cycle(5);
        c5star.extend([(5, 6), (5, 7), (5, 8)]);
        let inst = FInstance::new(9, &c5star, &[1; 9]).unwrap();
        let any = classify_any(&inst, &opts).unwrap();
        assert_eq!(any.delta_f, 3);
        assert_eq!(any.class, VerdictClass::Class1);
        let w = any.witness.unwrap();
        assert_eq!(w.k(), 3);
        assert!(verify_coloring(&inst, &w).unwrap().is_valid());
    }

    #[test]
    fn explain_mentions_rule_and_stats() {
        let (_, v) = run(5, &cycle(5), &[1; 5]);
        let text = explain(&v);
        assert!(text.contains("rule: EXACT"));
        assert!(text.contains("nodes"));
        let (_, b) = run(2, &[(0, 1)], &[1, 1]);
        assert!(explain(&b).contains("bipartite graphs are f-Class 1"));
    }

    #[test]
    fn rule_ids_round_trip() {
        for r in Rule::ALL {
            assert_eq!(Rule::from_id(r.id()), Some(r));
        }
    }
}
