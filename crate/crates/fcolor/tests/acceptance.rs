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

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact integers.

use std::collections::BTreeMap;
use std::time::Instant;

use fcolor::cli::run;
use fcolor::families::{gen_family, random_graph, FSpec};
use fcolor::fgr::{parse_fgr, serialize_fgr};
use fcolor_core::classify::evaluate_rule;
use fcolor_core::enumerate::{connected_graphs, enumerate_instances, FPattern};
use fcolor_core::{
    classify, classify_any, exact_chi_f, extend_one_edge, f_core, is_f_critical, is_graph_w, upper_color_f,
    verify_coloring, ClassifyOptions, FColoring, FInstance, Graph, Rule, Verdict, VerdictClass,
};

const PALETTE: [FPattern; 3] = [FPattern::Const(1), FPattern::Const(2), FPattern::Hub(2)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Oracle and classifier results for one instance.
struct Record {
    inst: FInstance,
    verdict: Verdict,
    chi_f: usize,
}

impl Record {
    fn oracle_class(&self) -> VerdictClass {
        if self.chi_f == self.inst.delta_f() {
            VerdictClass::Class1
        } else {
            VerdictClass::Class2
        }
    }
}

fn valid_with(inst: &FInstance, col: &FColoring, k: usize) -> bool {
    col.k() == k && verify_coloring(inst, col).map(|r| r.is_valid()).unwrap_or(false)
}

fn analyse(instances: Vec<FInstance>) -> Vec<Record> {
    let opts = ClassifyOptions::default();
    instances
        .into_iter()
        .map(|inst| {
            let verdict = classify(&inst, &opts).expect("corpus instances are connected with edges");
            let chi_f = exact_chi_f(&inst).expect("corpus instances are small").chi_f;
            Record { inst, verdict, chi_f }
        })
        .collect()
}

fn exhaustive_corpus() -> Vec<FInstance> {
    enumerate_instances(6, &PALETTE).expect("order 6 is enumerable")
}

/// 500 connected graphs from the documented generator, 4 to 10 vertices and
/// at most 18 edges, each crossed with the f palette.
fn sampled_corpus() -> Vec<FInstance> {
    let probabilities = [0.2, 0.3, 0.4, 0.55];
    let mut graphs = Vec::new();
    let mut seed = 1u64;
    while graphs.len() < 500 {
        let n = 4 + (seed % 7) as usize;
        let p = probabilities[(seed / 7 % 4) as usize];
        let g = random_graph(n, p, seed);
        if g.m() >= 1 && g.m() <= 18 && g.is_connected() {
            graphs.push(g);
        }
        seed += 1;
    }
    graphs.iter().flat_map(|g| PALETTE.iter().map(move |p| p.apply(g))).collect()
}

fn complete_edges(n: usize, offset: usize, out: &mut Vec<(usize, usize)>) {
    for i in 0..n {
        for j in i + 1..n {
            out.push((offset + i, offset + j));
        }
    }
}

/// Two K5 blocks joined by a bridge or by two disjoint edges.
fn two_k5(matching: bool) -> Graph {
    let mut edges = Vec::new();
    complete_edges(5, 0, &mut edges);
    complete_edges(5, 5, &mut edges);
    edges.push((0, 5));
    if matching {
        edges.push((1, 6));
    }
    Graph::new(10, &edges).unwrap()
}

/// Two triangles with two adjacent f = 2 vertices joined to all six
/// triangle vertices: claw-free, 2-regular f-core, `Δ_f = 4`.
fn clawfree_double_hub() -> FInstance {
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7)];
    for u in 0..6 {
        edges.push((u, 6));
        edges.push((u, 7));
    }
    FInstance::new(8, &edges, &[1, 1, 1, 1, 1, 1, 2, 2]).unwrap()
}

fn coverage_corpus() -> Vec<FInstance> {
    let mut out = Vec::new();
    for matching in [false, true] {
        for p in [FPattern::Const(1), FPattern::Hub(2)] {
            out.push(p.apply(&two_k5(matching)));
        }
    }
    out.push(clawfree_double_hub());
    out.push(gen_family("graph_w", &[], None).unwrap());
    out
}

fn c1(records: &[Record]) -> Outcome {
    let bad: Vec<usize> = (0..records.len())
        .filter(|&i| {
            let r = &records[i];
            let witness_ok = r.verdict.class != VerdictClass::Class1
                || r.verdict.witness.as_ref().is_some_and(|w| valid_with(&r.inst, w, r.inst.delta_f()));
            r.verdict.class != r.oracle_class() || !witness_ok
        })
        .collect();
    outcome(bad.is_empty(), format!("{} instances, {} disagreements", records.len(), bad.len()))
}

fn c3(records: &[&Record]) -> Outcome {
    let mut over_bound = 0;
    let mut bipartite = 0;
    let mut bipartite_off = 0;
    for r in records {
        let col = upper_color_f(&r.inst).unwrap();
        let d = r.inst.delta_f();
        let valid = verify_coloring(&r.inst, &col).unwrap().is_valid();
        if !valid || col.k() > r.inst.upper_bound() || col.k() > d + 1 {
            over_bound += 1;
        }
        if r.inst.graph().is_bipartite() {
            bipartite += 1;
            if col.k() != d {
                bipartite_off += 1;
            }
        }
    }
    outcome(
        over_bound == 0 && bipartite_off == 0 && bipartite > 0,
        format!(
            "{} instances, {} above max ceil((d+1)/f) or Δ_f+1, {} bipartite with {} not at Δ_f",
            records.len(),
            over_bound,
            bipartite,
            bipartite_off
        ),
    )
}

fn c4(records: &[&Record]) -> Outcome {
    let even: Vec<&&Record> = records.iter().filter(|r| r.inst.f_values().iter().all(|f| f % 2 == 0)).collect();
    let missing = even
        .iter()
        .filter(|r| {
            r.verdict.class != VerdictClass::Class1
                || !r.verdict.witness.as_ref().is_some_and(|w| valid_with(&r.inst, w, r.inst.delta_f()))
        })
        .count();
    outcome(!even.is_empty() && missing == 0, format!("{} all-even instances, {} without a Δ_f witness", even.len(), missing))
}

fn c5(records: &[&Record]) -> Outcome {
    let opts = ClassifyOptions::default();
    let mut hypothesis: BTreeMap<Rule, (usize, usize)> = BTreeMap::new();
    let mut decided: BTreeMap<Rule, usize> = BTreeMap::new();
    for r in records {
        *decided.entry(r.verdict.rule).or_default() += 1;
        for rule in Rule::STRUCTURAL {
            if evaluate_rule(&r.inst, rule, &opts).fired {
                let entry = hypothesis.entry(rule).or_default();
                entry.0 += 1;
                if r.oracle_class() != VerdictClass::Class1 {
                    entry.1 += 1;
                }
            }
        }
    }
    let mut pass = true;
    let mut parts = Vec::new();
    for rule in Rule::STRUCTURAL {
        let (fired, wrong) = hypothesis.get(&rule).copied().unwrap_or((0, 0));
        let first = decided.get(&rule).copied().unwrap_or(0);
        pass &= fired > 0 && first > 0 && wrong == 0;
        parts.push(format!("{}={}/{}/{}", rule.id(), first, fired, wrong));
    }
    outcome(pass, format!("decided/hypothesis/oracle-class2 per rule: {}", parts.join(" ")))
}

fn c6() -> Outcome {
    let opts = ClassifyOptions::default();
    let mut lines = Vec::new();
    let mut pass = true;
    for matching in [false, true] {
        for p in [FPattern::Const(1), FPattern::Hub(2)] {
            let inst = p.apply(&two_k5(matching));
            let check = evaluate_rule(&inst, Rule::SmallCut, &opts);
            let cut_ok = check.cut.as_ref().is_some_and(|c| c.check(inst.graph()) && c.len() + 2 <= inst.delta_f());
            let v = classify(&inst, &opts).unwrap();
            let witness_ok = v.class == VerdictClass::Class1
                && v.witness.as_ref().is_some_and(|w| valid_with(&inst, w, inst.delta_f()));
            let pipeline_ok = !(matching && p == FPattern::Const(1)) || v.rule == Rule::SmallCut;
            pass &= check.fired && cut_ok && witness_ok && pipeline_ok;
            lines.push(format!(
                "{}{}: cut={} decided by {}",
                if matching { "matching" } else { "bridge" },
                if p == FPattern::Const(1) { "/f=1" } else { "/hub:2" },
                check.cut.as_ref().map_or(0, |c| c.len()),
                v.rule.id()
            ));
        }
    }
    outcome(pass, lines.join(", "))
}

fn c7(records: &[&Record]) -> Outcome {
    let opts = ClassifyOptions::default();
    let w = gen_family("graph_w", &[], None).unwrap();
    let wv = classify(&w, &opts).unwrap();
    let wr = exact_chi_f(&w).unwrap();
    let w_ok = is_graph_w(&w) && wv.class == VerdictClass::Class2 && wr.chi_f == 4 && w.delta_f() + 1 == 4;
    let mut fired = 0;
    let mut wrong = 0;
    let mut decided = 0;
    for r in records {
        if evaluate_rule(&r.inst, Rule::ClawFree, &opts).fired {
            fired += 1;
            if r.oracle_class() != VerdictClass::Class1 {
                wrong += 1;
            }
            if r.verdict.rule == Rule::ClawFree {
                decided += 1;
            }
        }
    }
    outcome(
        w_ok && fired > 0 && decided > 0 && wrong == 0,
        format!(
            "W: class {} chi_f {}; claw-free rule fired on {} instances ({} decided by it), {} oracle class2",
            wv.class, wr.chi_f, fired, decided, wrong
        ),
    )
}

fn c8() -> Outcome {
    let patterns = [FPattern::Const(1), FPattern::Const(2), FPattern::Const(3), FPattern::Hub(2), FPattern::Hub(3)];
    let mut critical = Vec::new();
    for inst in enumerate_instances(6, &patterns).unwrap() {
        if exact_chi_f(&inst).unwrap().chi_f == inst.delta_f() + 1 && is_f_critical(&inst).unwrap() {
            critical.push(inst);
        }
    }
    let mut violations = 0;
    for inst in &critical {
        let core = f_core(inst).unwrap();
        let g = inst.graph();
        if core.members.len() < 3 {
            violations += 1;
        }
        if (0..inst.n()).any(|v| g.neighbors(v).filter(|&w| core.contains(w)).count() < 2 * inst.f(v)) {
            violations += 1;
        }
        if core.max_core_degree <= 2 {
            if !core.is_two_regular {
                violations += 1;
            }
            if (0..inst.n()).any(|v| !core.contains(v) && g.degree(v) + 1 != inst.f(v) * inst.delta_f()) {
                violations += 1;
            }
        }
    }
    let odd_cycles = [3, 5].iter().all(|&n| {
        critical.iter().any(|i| {
            i.n() == n && i.m() == n && i.graph().max_degree() == 2 && i.f_values().iter().all(|&f| f == 1)
        })
    });
    outcome(
        odd_cycles && violations == 0 && !critical.is_empty(),
        format!("{} f-critical instances (C3 and C5 present: {}), {} violations", critical.len(), odd_cycles, violations),
    )
}

fn c9() -> Outcome {
    let opts = ClassifyOptions::default();
    let fam = |name: &str, params: &[&str], f: FSpec| gen_family(name, params, Some(&f)).unwrap();
    let cases: Vec<(&str, FInstance, VerdictClass, Option<usize>)> = vec![
        ("petersen", fam("petersen", &[], FSpec::Const(1)), VerdictClass::Class2, None),
        ("K4", fam("complete", &["4"], FSpec::Const(1)), VerdictClass::Class1, Some(3)),
        ("C3", fam("cycle", &["3"], FSpec::Const(1)), VerdictClass::Class2, None),
        ("C5", fam("cycle", &["5"], FSpec::Const(1)), VerdictClass::Class2, None),
        ("C7", fam("cycle", &["7"], FSpec::Const(1)), VerdictClass::Class2, None),
        ("K5 f=2", fam("complete", &["5"], FSpec::Const(2)), VerdictClass::Class1, Some(2)),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, inst, want, colors) in cases {
        let v = classify(&inst, &opts).unwrap();
        let chi = exact_chi_f(&inst).unwrap().chi_f;
        let oracle = if chi == inst.delta_f() { VerdictClass::Class1 } else { VerdictClass::Class2 };
        let colors_ok = match colors {
            Some(k) => v.witness.as_ref().is_some_and(|w| valid_with(&inst, w, k)),
            None => true,
        };
        let ok = v.class == want && oracle == want && colors_ok;
        pass &= ok;
        parts.push(format!("{name}={}{}", v.class, if ok { "" } else { "(!)" }));
    }
    outcome(pass, parts.join(" "))
}

/// Every valid coloring of the edges other than `skip` with palette `1..=k`.
fn partial_colorings(inst: &FInstance, skip: usize, k: usize, out: &mut Vec<FColoring>) {
    fn go(inst: &FInstance, skip: usize, k: usize, e: usize, colors: &mut Vec<usize>, counts: &mut Vec<usize>, out: &mut Vec<FColoring>) {
        if e == inst.m() {
            out.push(FColoring::new(k, colors.clone()));
            return;
        }
        if e == skip {
            go(inst, skip, k, e + 1, colors, counts, out);
            return;
        }
        let (a, b) = inst.graph().edge(e);
        for c in 1..=k {
            if counts[a * (k + 1) + c] < inst.f(a) && counts[b * (k + 1) + c] < inst.f(b) {
                counts[a * (k + 1) + c] += 1;
                counts[b * (k + 1) + c] += 1;
                colors[e] = c;
                go(inst, skip, k, e + 1, colors, counts, out);
                colors[e] = 0;
                counts[a * (k + 1) + c] -= 1;
                counts[b * (k + 1) + c] -= 1;
            }
        }
    }
    let mut colors = vec![0; inst.m()];
    let mut counts = vec![0; inst.n() * (k + 1)];
    go(inst, skip, k, 0, &mut colors, &mut counts, out);
}

fn has_spare(inst: &FInstance, col: &FColoring, x: usize) -> bool {
    let g = inst.graph();
    (1..=col.k()).any(|c| g.incident(x).iter().filter(|&&(_, e)| col.color(e) == c).count() < inst.f(x))
}

fn c10() -> Outcome {
    let patterns = [FPattern::Const(1), FPattern::Const(2), FPattern::Hub(2), FPattern::Hub(3)];
    let mut triples = 0u64;
    let mut failures = 0u64;
    for n in 2..=5 {
        for g in connected_graphs(n) {
            for p in patterns {
                let inst = p.apply(&g);
                for e in 0..inst.m() {
                    let (a, b) = g.edge(e);
                    let around: Vec<usize> = g.neighbors(a).chain(g.neighbors(b)).collect();
                    for k in 1..=3 {
                        let mut partials = Vec::new();
                        partial_colorings(&inst, e, k, &mut partials);
                        for partial in partials {
                            if !around.iter().all(|&x| has_spare(&inst, &partial, x)) {
                                continue;
                            }
                            triples += 1;
                            match extend_one_edge(&inst, &partial, e, k) {
                                Ok(col) if valid_with(&inst, &col, k) => {}
                                _ => failures += 1,
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(triples > 0 && failures == 0, format!("{triples} triples satisfying the spare-color hypothesis, {failures} failures"))
}

fn family_matrix() -> Vec<(String, FInstance)> {
    let mut out = Vec::new();
    let specs = [None, Some(FSpec::Const(2)), Some(FSpec::Hub(2)), Some(FSpec::Const(3))];
    let mut push = |name: &str, params: &[&str]| {
        for spec in &specs {
            let inst = gen_family(name, params, spec.as_ref()).unwrap();
            let label = format!("{name} {} {:?}", params.join(" "), spec);
            out.push((label, inst));
        }
    };
    for n in ["3", "4", "5", "6", "7"] {
        push("cycle", &[n]);
        push("path", &[n]);
        push("complete", &[n]);
        push("wheel", &[n]);
        push("star", &[n]);
    }
    for (a, b) in [("1", "1"), ("2", "3"), ("3", "3")] {
        push("complete_bipartite", &[a, b]);
    }
    push("petersen", &[]);
    push("graph_w", &[]);
    for seed in ["1", "2", "3", "4", "5", "6"] {
        push("random", &["8", "0.3", seed]);
    }
    let list = gen_family("path", &["4"], Some(&FSpec::List(vec![1, 2, 3, 1]))).unwrap();
    out.push((String::from("path 4 list"), list));
    out
}

fn c11() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let opts = ClassifyOptions::default();
    let matrix = family_matrix();
    let mut round_trip_bad = 0;
    let mut exit_bad = 0;
    let mut unstable = 0;
    let cli = |args: &[&str]| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["fcolor"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, out)
    };
    for (i, (_, inst)) in matrix.iter().enumerate() {
        let text = serialize_fgr(inst);
        if parse_fgr(&text).as_ref() != Ok(inst) {
            round_trip_bad += 1;
        }
        if inst.m() == 0 {
            continue;
        }
        let path = dir.path().join(format!("case{i:03}.fgr"));
        std::fs::write(&path, &text).unwrap();
        let path = path.to_str().unwrap();
        let class = if inst.graph().is_connected() {
            classify(inst, &opts).unwrap().class
        } else {
            classify_any(inst, &opts).unwrap().class
        };
        let want = match class {
            VerdictClass::Class1 => 0,
            VerdictClass::Class2 => 2,
            VerdictClass::Unknown => 3,
        };
        let (code, first) = cli(&["classify", path, "--format", "json"]);
        let (_, second) = cli(&["classify", path, "--format", "json"]);
        if code != want {
            exit_bad += 1;
        }
        let (_, c1) = cli(&["color", path]);
        let (_, c2) = cli(&["color", path]);
        if first != second || c1 != c2 || first.is_empty() {
            unstable += 1;
        }
    }
    let d = dir.path().to_str().unwrap();
    let (_, b1) = cli(&["batch", d, "--format", "json"]);
    let (_, b2) = cli(&["batch", d, "--format", "json"]);
    if b1 != b2 || b1.is_empty() {
        unstable += 1;
    }
    outcome(
        round_trip_bad == 0 && exit_bad == 0 && unstable == 0,
        format!(
            "{} family instances: {} round-trip mismatches, {} exit-code mismatches, {} unstable outputs",
            matrix.len(),
            round_trip_bad,
            exit_bad,
            unstable
        ),
    )
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome, f64)> = Vec::new();
    let mut timed = |id: usize, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        results.push((id, name, o, start.elapsed().as_secs_f64()));
        let (id, name, o, secs) = results.last().unwrap();
        println!("{} [{id:>2}] {name}: {} ({secs:.1}s)", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    };

    let start = Instant::now();
    let exhaustive = analyse(exhaustive_corpus());
    let sampled = analyse(sampled_corpus());
    let coverage = analyse(coverage_corpus());
    println!("corpora: {} exhaustive, {} sampled, {} constructed ({:.1}s)", exhaustive.len(), sampled.len(), coverage.len(), start.elapsed().as_secs_f64());
    let all: Vec<&Record> = exhaustive.iter().chain(&sampled).chain(&coverage).collect();
    let corpora: Vec<&Record> = exhaustive.iter().chain(&sampled).collect();

    timed(1, "oracle agreement, every connected graph up to 6 vertices", &mut || c1(&exhaustive));
    timed(2, "oracle agreement, 500 sampled graphs up to 10 vertices", &mut || c1(&sampled));
    timed(3, "constructive upper bound", &mut || c3(&corpora));
    timed(4, "all-even f gets a Δ_f coloring", &mut || c4(&corpora));
    timed(5, "structural rule soundness and coverage", &mut || c5(&all));
    timed(6, "small star or matching cut", &mut c6);
    timed(7, "claw-free rule and the graph W", &mut || c7(&all));
    timed(8, "f-critical instances up to 6 vertices", &mut c8);
    timed(9, "known anchors", &mut c9);
    timed(10, "single-edge extension", &mut c10);
    timed(11, "file format and command line", &mut c11);

    let failed = results.iter().filter(|r| !r.2.pass).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
