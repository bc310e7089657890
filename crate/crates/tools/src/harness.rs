//! Exhaustive theorem verification against the exact oracle.
//!
//! Every registered statement is checked on every corpus graph meeting its
//! hypothesis. Work is split across rayon workers by corpus index and merged
//! back in index order, so reports do not depend on the thread count.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use coalition_core::enumerate::{check_order, graph_from_code, pair_count};
use coalition_core::matrix::{Justification, PairWitness, Refutation};
use coalition_core::prufer::labeled_trees;
use coalition_core::{
    cc_number_with, check_cc_equals_n, check_cc_equals_n_minus_1, connected_domatic_number,
    expand_domatic_to_cc_partition, gamma_c, in_family_f, is_cc_partition, CcOptions, CcResult,
    Decision, Graph, Partition, Variant, MAX_SEARCH_ORDER,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::formats::{emit_graph6, parse_graph6, FormatError};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown theorem id {0:?} (expected T1..T10 or a theorem name)")]
    UnknownTheorem(String),
    #[error("corpus graph of order {n} exceeds the oracle guard {limit}")]
    Guard { n: usize, limit: usize },
    #[error("invalid corpus: {0}")]
    Corpus(String),
    #[error(transparent)]
    Core(#[from] coalition_core::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
}

impl HarnessError {
    pub fn is_guard(&self) -> bool {
        match self {
            HarnessError::Guard { .. } => true,
            HarnessError::Core(e) => e.is_guard(),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
    ];

    pub fn key(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::T10 => "T10",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "cc_zero_iff_family_f",
            TheoremId::T2 => "cc_ge_two_dc",
            TheoremId::T3 => "trees_cc_two",
            TheoremId::T4 => "pendant_lt_n",
            TheoremId::T5 => "algo1_iff_oracle",
            TheoremId::T6 => "algo2_vs_oracle",
            TheoremId::T7 => "corona_cc_two",
            TheoremId::T8 => "full_vertex_lower",
            TheoremId::T9 => "disconnected_zero",
            TheoremId::T10 => "lower_upper_bounds",
        }
    }

    /// The checked statement, hypothesis first.
    pub fn anchor(self) -> &'static str {
        match self {
            TheoremId::T1 => "any graph: CC(G)=0 iff G is in the peelable family F",
            TheoremId::T2 => "connected, no full vertex, n>1: CC(G) >= 2 d_c(G)",
            TheoremId::T3 => "tree with no full vertex: CC(T)=2",
            TheoremId::T4 => "connected, min degree 1, no full vertex: CC(G) < n",
            TheoremId::T5 => "connected, no full vertex: every vertex has an incident edge with E-row sum n iff CC(G)=n",
            TheoremId::T6 => "connected, no full vertex, n>=3: the pair/triple test decides CC(G)=n-1",
            TheoremId::T7 => "connected corona H o K1: CC(G)=2",
            TheoremId::T8 => "connected, not in F, not complete, k>=1 full vertices: CC(G) >= k+2",
            TheoremId::T9 => "disconnected, n>=2: CC(G)=0",
            TheoremId::T10 => "connected, not in F: 1 <= CC(G) <= n",
        }
    }

    /// T6 is reported but never fails a run.
    pub fn asserted(self) -> bool {
        self != TheoremId::T6
    }

    pub fn parse_list(list: &str) -> Result<Vec<TheoremId>, HarnessError> {
        let mut ids: Vec<TheoremId> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        ids.sort();
        ids.dedup();
        Ok(ids)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.key().eq_ignore_ascii_case(s) || t.name() == s)
            .ok_or_else(|| HarnessError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDescriptor {
    pub source: String,
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub graphs: usize,
}

enum Items {
    Codes(Vec<(u8, u64)>),
    Graphs(Vec<Graph>),
}

/// An indexed, finite stream of graphs.
pub struct Corpus {
    descriptor: CorpusDescriptor,
    items: Items,
}

impl Corpus {
    /// All labeled graphs on `n_min..=n_max` vertices, ascending by order and
    /// then by edge code.
    pub fn labeled(
        n_min: usize,
        n_max: usize,
        connected_only: bool,
        allow_extended: bool,
    ) -> Result<Self, HarnessError> {
        if n_min == 0 || n_min > n_max {
            return Err(HarnessError::Corpus(format!(
                "need 1 <= n_min <= n_max, got {n_min}..{n_max}"
            )));
        }
        check_order(n_max, allow_extended)?;
        let mut codes = Vec::new();
        for n in n_min..=n_max {
            let space = 1u64 << pair_count(n);
            let start = codes.len();
            codes.extend((0..space).map(|c| (n as u8, c)));
            if connected_only {
                let kept: Vec<_> = codes
                    .drain(start..)
                    .collect::<Vec<_>>()
                    .into_par_iter()
                    .filter(|&(n, c)| graph_from_code(n as usize, c).is_connected())
                    .collect();
                codes.extend(kept);
            }
        }
        Ok(Corpus {
            descriptor: CorpusDescriptor {
                source: "labeled".into(),
                n_min,
                n_max,
                connected_only,
                graphs: codes.len(),
            },
            items: Items::Codes(codes),
        })
    }

    /// Every labeled tree on `n_min..=n_max` vertices from Prüfer sequences.
    pub fn trees(n_min: usize, n_max: usize) -> Result<Self, HarnessError> {
        if n_min == 0 || n_min > n_max || n_max > 9 {
            return Err(HarnessError::Corpus(format!(
                "tree corpus needs 1 <= n_min <= n_max <= 9, got {n_min}..{n_max}"
            )));
        }
        let graphs: Vec<Graph> = (n_min..=n_max).flat_map(labeled_trees).collect();
        Ok(Self::from_graphs("trees", true, graphs))
    }

    /// `H o K1` for every connected labeled `H` with `1..=h_max` vertices.
    pub fn coronas(h_max: usize) -> Result<Self, HarnessError> {
        let base = Corpus::labeled(1, h_max, true, false)?;
        let graphs = (0..base.len())
            .map(|i| base.graph(i).corona(&Graph::empty(1)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_graphs("corona_k1", true, graphs))
    }

    pub fn from_graphs(source: &str, connected_only: bool, graphs: Vec<Graph>) -> Self {
        let n_min = graphs.iter().map(Graph::n).min().unwrap_or(0);
        let n_max = graphs.iter().map(Graph::n).max().unwrap_or(0);
        Corpus {
            descriptor: CorpusDescriptor {
                source: source.into(),
                n_min,
                n_max,
                connected_only,
                graphs: graphs.len(),
            },
            items: Items::Graphs(graphs),
        }
    }

    pub fn descriptor(&self) -> &CorpusDescriptor {
        &self.descriptor
    }

    pub fn len(&self) -> usize {
        self.descriptor.graphs
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn graph(&self, i: usize) -> Graph {
        match &self.items {
            Items::Codes(codes) => graph_from_code(codes[i].0 as usize, codes[i].1),
            Items::Graphs(graphs) => graphs[i].clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    pub expected: String,
    pub actual: String,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    pub detail: Detail,
}

/// Agreement counts for the two `CC(G)=n-1` deciders.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct VariantStats {
    pub oracle_yes: usize,
    pub paper_agree: usize,
    pub paper_false_positives: usize,
    pub paper_false_negatives: usize,
    pub strict_agree: usize,
    pub strict_false_positives: usize,
    pub strict_false_negatives: usize,
    pub paper_agreement_rate: f64,
    pub strict_agreement_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub id: String,
    pub name: String,
    pub anchor: String,
    pub asserted: bool,
    pub corpus: String,
    pub checked: usize,
    pub passed: usize,
    pub counterexamples: Vec<Certificate>,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variants: Option<VariantStats>,
}

impl TheoremReport {
    pub fn theorem(&self) -> TheoremId {
        self.id.parse().expect("report ids come from the registry")
    }

    pub fn ok(&self) -> bool {
        !self.asserted || self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub corpus: Vec<CorpusDescriptor>,
    pub theorems: Vec<TheoremReport>,
}

impl VerifyReport {
    /// Every asserted theorem is free of counterexamples.
    pub fn passed(&self) -> bool {
        self.theorems.iter().all(TheoremReport::ok)
    }

    pub fn get(&self, id: TheoremId) -> Option<&TheoremReport> {
        self.theorems.iter().find(|t| t.id == id.key())
    }

    /// The report with every timing field zeroed.
    pub fn without_timing(&self) -> VerifyReport {
        let mut r = self.clone();
        for t in &mut r.theorems {
            t.millis = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<4} {:<22} {:<10} {:>8} {:>8} {:>6} {:>8}  status",
            "id", "name", "corpus", "checked", "passed", "fail", "millis"
        );
        for t in &self.theorems {
            let status = match (t.counterexamples.is_empty(), t.asserted) {
                (true, _) => "ok",
                (false, true) => "FAIL",
                (false, false) => "report",
            };
            let _ = writeln!(
                out,
                "{:<4} {:<22} {:<10} {:>8} {:>8} {:>6} {:>8}  {}",
                t.id,
                t.name,
                t.corpus,
                t.checked,
                t.passed,
                t.counterexamples.len(),
                t.millis,
                status
            );
            if let Some(v) = &t.variants {
                let _ = writeln!(
                    out,
                    "     paper agreement {:.4} (fp {}, fn {}), strict agreement {:.4} (fp {}, fn {}), oracle yes {}",
                    v.paper_agreement_rate,
                    v.paper_false_positives,
                    v.paper_false_negatives,
                    v.strict_agreement_rate,
                    v.strict_false_positives,
                    v.strict_false_negatives,
                    v.oracle_yes
                );
            }
        }
        out
    }
}

fn options(guard: usize) -> CcOptions {
    CcOptions {
        guard,
        shortcut_disconnected: false,
    }
}

fn full_search(g: &Graph, guard: usize) -> Result<CcResult, HarnessError> {
    Ok(cc_number_with(g, &options(guard))?)
}

fn lists(p: &Partition) -> Value {
    json!(p.to_lists())
}

fn opt_lists(p: Option<&Partition>) -> Value {
    p.map_or(Value::Null, lists)
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() == pair_count(g.n())
}

/// Outcome of one theorem on one graph in its hypothesis.
struct Checked {
    failure: Option<Detail>,
    /// `(oracle, paper, strict)` answers for T6.
    variants: Option<(bool, bool, bool)>,
}

impl Checked {
    fn when(ok: bool, detail: impl FnOnce() -> Detail) -> Self {
        Checked {
            failure: (!ok).then(detail),
            variants: None,
        }
    }
}

fn refutation_json(r: &Refutation) -> Value {
    match r {
        Refutation::UndominatedVertex { vertex } => {
            json!({"kind": "undominated_vertex", "vertex": vertex})
        }
        Refutation::CcEqualsN => json!({"kind": "cc_equals_n"}),
        Refutation::NoQualifyingPair => json!({"kind": "no_qualifying_pair"}),
    }
}

pub fn pair_witness_json(w: &PairWitness) -> Value {
    let just: Vec<Value> = w
        .justifications
        .iter()
        .map(|(x, j)| match j {
            Justification::DominatingEdge(e) => json!({"x": x, "edge": [e.u(), e.v()]}),
            Justification::DominatingTriple => json!({"x": x, "triple": [x, w.u, w.v]}),
        })
        .collect();
    json!({"u": w.u, "v": w.v, "y": w.y, "justifications": just})
}

pub fn decision_json<W>(d: &Decision<W>, witness: impl Fn(&W) -> Value) -> Value {
    match d {
        Decision::Yes(w) => json!({"answer": true, "witness": witness(w)}),
        Decision::No(r) => json!({"answer": false, "refutation": refutation_json(r)}),
    }
}

/// Runs `theorem` on `g`, or `None` when `g` is outside its hypothesis.
fn check(theorem: TheoremId, g: &Graph, cc: usize, guard: usize) -> Result<Option<Checked>, HarnessError> {
    let n = g.n();
    let connected = g.is_connected();
    let full = g.full_vertices().len();
    let cc_witness = || full_search(g, guard).ok().and_then(|r| r.witness);
    let bare = |expected: String| {
        move || Detail {
            expected,
            actual: format!("cc={cc}"),
            witness: opt_lists(cc_witness().as_ref()),
        }
    };
    let checked = match theorem {
        TheoremId::T1 => {
            let verdict = in_family_f(g)?;
            Checked::when((cc == 0) == verdict.member, || Detail {
                expected: if verdict.member { "cc=0" } else { "cc>0" }.into(),
                actual: format!("cc={cc}"),
                witness: json!({
                    "member": verdict.member,
                    "terminal": verdict.trace.terminal.name(),
                    "peel": verdict.trace.steps.iter().map(|s| s.vertex).collect::<Vec<_>>(),
                    "partition": opt_lists(cc_witness().as_ref()),
                }),
            })
        }
        TheoremId::T2 => {
            if !connected || full > 0 || n < 2 {
                return Ok(None);
            }
            let (dc, d) = connected_domatic_number(g, guard)?;
            let expansion = expand_domatic_to_cc_partition(g, &d);
            let expansion_ok = match &expansion {
                Ok(p) => p.len() >= 2 * dc && is_cc_partition(g, p)?.valid,
                Err(_) => false,
            };
            Checked::when(cc >= 2 * dc && expansion_ok, || Detail {
                expected: format!("cc>={} and expansion size>={}", 2 * dc, 2 * dc),
                actual: match &expansion {
                    Ok(p) => format!("cc={cc}, expansion size={}", p.len()),
                    Err(e) => format!("cc={cc}, expansion failed: {e}"),
                },
                witness: json!({
                    "domatic": lists(d.as_partition()),
                    "expansion": expansion.as_ref().map_or(Value::Null, lists),
                }),
            })
        }
        TheoremId::T3 => {
            if !g.is_tree() || full > 0 {
                return Ok(None);
            }
            Checked::when(cc == 2, bare("cc=2".into()))
        }
        TheoremId::T4 => {
            if !connected || full > 0 || g.min_degree() != Some(1) {
                return Ok(None);
            }
            Checked::when(cc < n, bare(format!("cc<{n}")))
        }
        TheoremId::T5 => {
            if !connected || full > 0 || n < 2 {
                return Ok(None);
            }
            let d = check_cc_equals_n(g)?;
            let replays = d.witness().map_or(true, |w| w.replays(g));
            Checked::when(d.answer() == (cc == n) && replays, || Detail {
                expected: format!("check_n={}", cc == n),
                actual: format!("check_n={}, cc={cc}, witness replays={replays}", d.answer()),
                witness: decision_json(&d, |w| {
                    json!(w.edges.iter().map(|(x, e)| json!([x, [e.u(), e.v()]])).collect::<Vec<_>>())
                }),
            })
        }
        TheoremId::T6 => {
            if !connected || full > 0 || n < 3 {
                return Ok(None);
            }
            let truth = cc == n - 1;
            let paper = check_cc_equals_n_minus_1(g, Variant::Paper)?;
            let strict = check_cc_equals_n_minus_1(g, Variant::Strict)?;
            let p = paper.witness().map_or(paper.answer(), |w| w.replays(g, Variant::Paper));
            let s = strict.witness().map_or(strict.answer(), |w| w.replays(g, Variant::Strict));
            Checked {
                failure: (p != truth || s != truth).then(|| Detail {
                    expected: format!("cc=n-1 is {truth}"),
                    actual: format!("cc={cc}, paper={p}, strict={s}"),
                    witness: json!({
                        "paper": decision_json(&paper, pair_witness_json),
                        "strict": decision_json(&strict, pair_witness_json),
                        "partition": opt_lists(cc_witness().as_ref()),
                    }),
                }),
                variants: Some((truth, p, s)),
            }
        }
        TheoremId::T7 => {
            if !connected || !g.is_corona_with_k1() {
                return Ok(None);
            }
            Checked::when(cc == 2, bare("cc=2".into()))
        }
        TheoremId::T8 => {
            if !connected || full == 0 || is_complete(g) || in_family_f(g)?.member {
                return Ok(None);
            }
            Checked::when(cc >= full + 2, bare(format!("cc>={}", full + 2)))
        }
        TheoremId::T9 => {
            if connected || n < 2 {
                return Ok(None);
            }
            Checked::when(cc == 0, bare("cc=0".into()))
        }
        TheoremId::T10 => {
            if !connected || in_family_f(g)?.member {
                return Ok(None);
            }
            Checked::when((1..=n).contains(&cc), bare(format!("1<=cc<={n}")))
        }
    };
    Ok(Some(checked))
}

fn guard_limit(guard: usize) -> usize {
    guard.min(MAX_SEARCH_ORDER)
}

/// Runs `theorems` over every corpus graph.
pub fn run_theorem_suite(
    corpus: &Corpus,
    theorems: &[TheoremId],
    guard: usize,
) -> Result<VerifyReport, HarnessError> {
    let limit = guard_limit(guard);
    if corpus.descriptor.n_max > limit {
        return Err(HarnessError::Guard {
            n: corpus.descriptor.n_max,
            limit,
        });
    }
    let ccs: Vec<usize> = (0..corpus.len())
        .into_par_iter()
        .map(|i| full_search(&corpus.graph(i), guard).map(|r| r.cc))
        .collect::<Result<_, _>>()?;

    let mut reports = Vec::new();
    for &theorem in theorems {
        let start = Instant::now();
        let outcomes: Vec<Option<Checked>> = (0..corpus.len())
            .into_par_iter()
            .map(|i| check(theorem, &corpus.graph(i), ccs[i], guard))
            .collect::<Result<_, _>>()?;
        let mut report = TheoremReport {
            id: theorem.key().into(),
            name: theorem.name().into(),
            anchor: theorem.anchor().into(),
            asserted: theorem.asserted(),
            corpus: corpus.descriptor.source.clone(),
            checked: 0,
            passed: 0,
            counterexamples: Vec::new(),
            millis: 0,
            variants: None,
        };
        let mut stats = VariantStats::default();
        for (i, outcome) in outcomes.into_iter().enumerate() {
            let Some(outcome) = outcome else { continue };
            report.checked += 1;
            match outcome.failure {
                None => report.passed += 1,
                Some(detail) => report.counterexamples.push(Certificate {
                    graph6: emit_graph6(&corpus.graph(i))?,
                    detail,
                }),
            }
            if let Some((truth, paper, strict)) = outcome.variants {
                stats.oracle_yes += truth as usize;
                tally(truth, paper, &mut stats.paper_agree, &mut stats.paper_false_positives, &mut stats.paper_false_negatives);
                tally(truth, strict, &mut stats.strict_agree, &mut stats.strict_false_positives, &mut stats.strict_false_negatives);
            }
        }
        if theorem == TheoremId::T6 {
            let rate = |agree: usize| if report.checked == 0 { 1.0 } else { agree as f64 / report.checked as f64 };
            stats.paper_agreement_rate = rate(stats.paper_agree);
            stats.strict_agreement_rate = rate(stats.strict_agree);
            report.variants = Some(stats);
        }
        report.millis = start.elapsed().as_millis() as u64;
        reports.push(report);
    }
    Ok(VerifyReport {
        corpus: vec![corpus.descriptor.clone()],
        theorems: reports,
    })
}

fn tally(truth: bool, answer: bool, agree: &mut usize, fp: &mut usize, fneg: &mut usize) {
    match (truth, answer) {
        (t, a) if t == a => *agree += 1,
        (false, true) => *fp += 1,
        _ => *fneg += 1,
    }
}

/// Re-runs `theorem` on the certificate's graph and compares the discrepancy.
pub fn replay(theorem: TheoremId, cert: &Certificate, guard: usize) -> Result<bool, HarnessError> {
    let g = parse_graph6(&cert.graph6)?;
    let cc = full_search(&g, guard)?.cc;
    Ok(match check(theorem, &g, cc, guard)? {
        Some(Checked {
            failure: Some(detail),
            ..
        }) => detail == cert.detail,
        _ => false,
    })
}

/// Corpus layout for a full `verify` run.
#[derive(Debug, Clone)]
pub struct VerifyPlan {
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub allow_extended: bool,
    pub tree_n_max: usize,
    pub corona_h_max: usize,
    pub theorems: Vec<TheoremId>,
    pub guard: usize,
}

impl Default for VerifyPlan {
    fn default() -> Self {
        VerifyPlan {
            n_min: 1,
            n_max: 6,
            connected_only: false,
            allow_extended: false,
            tree_n_max: 7,
            corona_h_max: 5,
            theorems: TheoremId::ALL.to_vec(),
            guard: coalition_core::DEFAULT_GUARD,
        }
    }
}

/// T3 runs on the Prüfer tree corpus, T7 on the corona corpus and the rest
/// on the labeled corpus.
pub fn run_plan(plan: &VerifyPlan) -> Result<VerifyReport, HarnessError> {
    let (trees, rest): (Vec<_>, Vec<_>) = plan.theorems.iter().partition(|&&t| t == TheoremId::T3);
    let (coronas, labeled): (Vec<_>, Vec<_>) = rest.into_iter().partition(|&t| t == TheoremId::T7);
    let mut merged = VerifyReport {
        corpus: Vec::new(),
        theorems: Vec::new(),
    };
    let mut absorb = |r: VerifyReport| {
        merged.corpus.extend(r.corpus);
        merged.theorems.extend(r.theorems);
    };
    if !labeled.is_empty() {
        let corpus = Corpus::labeled(plan.n_min, plan.n_max, plan.connected_only, plan.allow_extended)?;
        absorb(run_theorem_suite(&corpus, &labeled, plan.guard)?);
    }
    if !trees.is_empty() {
        absorb(run_theorem_suite(&Corpus::trees(1, plan.tree_n_max)?, &trees, plan.guard)?);
    }
    if !coronas.is_empty() {
        absorb(run_theorem_suite(&Corpus::coronas(plan.corona_h_max)?, &coronas, plan.guard)?);
    }
    merged.theorems.sort_by_key(TheoremReport::theorem);
    Ok(merged)
}

/// Every invariant on one graph, with consistency flags between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossRecord {
    pub graph6: String,
    pub n: usize,
    pub cc: usize,
    pub witness: Option<Vec<Vec<usize>>>,
    pub d_c: Option<usize>,
    pub gamma_c: Option<usize>,
    pub family_f: bool,
    pub check_n: Option<bool>,
    pub check_n1_paper: Option<bool>,
    pub check_n1_strict: Option<bool>,
    pub consistency: Vec<(String, bool)>,
}

impl CrossRecord {
    pub fn consistent(&self) -> bool {
        self.consistency.iter().all(|(_, ok)| *ok)
    }
}

pub fn cross_validate(g: &Graph, guard: usize) -> Result<CrossRecord, HarnessError> {
    let limit = guard_limit(guard);
    if g.n() > limit {
        return Err(HarnessError::Guard { n: g.n(), limit });
    }
    let n = g.n();
    let r = full_search(g, guard)?;
    let family_f = in_family_f(g)?.member;
    let connected = g.is_connected();
    let decidable = connected && !g.has_full_vertex();
    let d_c = connected
        .then(|| connected_domatic_number(g, guard).map(|(k, _)| k))
        .transpose()?;
    let gamma = connected.then(|| gamma_c(g).map(|(k, _)| k)).transpose()?;
    let check_n = (decidable && n >= 2)
        .then(|| check_cc_equals_n(g).map(|d| d.answer()))
        .transpose()?;
    let n1 = |v| {
        (decidable && n >= 3)
            .then(|| check_cc_equals_n_minus_1(g, v).map(|d| d.answer()))
            .transpose()
    };
    let (paper, strict) = (n1(Variant::Paper)?, n1(Variant::Strict)?);

    let mut consistency = vec![("cc_zero_iff_family_f".to_string(), (r.cc == 0) == family_f)];
    if let Some(c) = check_n {
        consistency.push(("check_n_matches_oracle".into(), c == (r.cc == n)));
    }
    if let Some(s) = strict {
        consistency.push(("strict_matches_oracle".into(), s == (r.cc + 1 == n)));
    }
    if let (Some(dc), true) = (d_c, decidable && n > 1) {
        consistency.push(("cc_ge_two_dc".into(), r.cc >= 2 * dc));
    }
    if let (Some(dc), Some(gc)) = (d_c, gamma) {
        consistency.push(("dc_times_gamma_le_n".into(), dc * gc <= n));
    }
    Ok(CrossRecord {
        graph6: emit_graph6(g)?,
        n,
        cc: r.cc,
        witness: r.witness.map(|w| w.to_lists()),
        d_c,
        gamma_c: gamma,
        family_f,
        check_n,
        check_n1_paper: paper,
        check_n1_strict: strict,
        consistency,
    })
}
