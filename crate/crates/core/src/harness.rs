//! Batch verification over graph universes, single-graph coloring and the
//! structural profile used by the command line.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::Bits;
use crate::colorers::{BoundCertificate, Pipeline};
use crate::enumerate::{self, GraphStream, Source};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, PerfectDivision};
use crate::patterns::{self, Pattern};
use crate::structure::{self, CutsetReport, DominatorKind};

/// Largest order a divisibility target accepts (3^n subset pairs).
pub const DIVISIBILITY_TARGET_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    Divisible,
    Bound(Pipeline),
    Sumner,
    Dominating,
    P5Hole,
    K23Hole,
    K23Second,
    K1k1k3Hole,
    K1k1k3Second,
    K1k1k3Antihole,
    MinimalCutset,
    AntiholeTwoCliques,
}

/// A verifiable statement: the universe it quantifies over and the check
/// run on every member.
#[derive(Clone, Debug)]
pub struct Target {
    pub id: &'static str,
    pub alias: &'static str,
    pub statement: &'static str,
    pub free_of: &'static str,
    pub connected: bool,
    pub omega_min: Option<usize>,
    pub n_limit: usize,
    check: Check,
}

#[allow(clippy::too_many_arguments)]
const fn target(
    id: &'static str,
    alias: &'static str,
    statement: &'static str,
    free_of: &'static str,
    connected: bool,
    omega_min: Option<usize>,
    n_limit: usize,
    check: Check,
) -> Target {
    Target {
        id,
        alias,
        statement,
        free_of,
        connected,
        omega_min,
        n_limit,
        check,
    }
}

const G: usize = enumerate::GENERATE_LIMIT;
const D: usize = DIVISIBILITY_TARGET_LIMIT;

/// Every target, with the alternative id under which it is also accepted.
pub static TARGETS: [Target; 17] = [
    target("p5-c5-k23-divisible", "theorem-1.1", "(P5, C5, K2,3)-free graphs are perfectly divisible", "P5,C5,K2,3", true, None, D, Check::Divisible),
    target("p5-k23-bound", "theorem-1.2", "χ ≤ 2ω²−ω−3 for (P5, K2,3)-free graphs with ω ≥ 2", "P5,K2,3", false, Some(2), G, Check::Bound(Pipeline::P5K23)),
    target("p5-k1-2k2-bound", "theorem-1.3", "χ ≤ (3/2)(ω²−ω) for connected (P5, K1+2K2)-free graphs", "P5,K1+2K2", true, Some(2), G, Check::Bound(Pipeline::P5K1TwoK2)),
    target("p5-k1-k1k3-bound", "theorem-1.4", "χ ≤ 3ω+11 for (P5, K1+(K1∪K3))-free graphs", "P5,K1+(K1uK3)", false, None, G, Check::Bound(Pipeline::P5K1K1K3)),
    target("p5-hole-structure", "lemma-2.2", "5-hole neighborhoods of P5-free graphs", "P5", false, None, G, Check::P5Hole),
    target("alpha2-divisible", "lemma-2.4", "graphs with α ≤ 2 are perfectly divisible", "3K1", false, None, D, Check::Divisible),
    target("minimal-cutset-structure", "lemma-3.1", "minimal cutsets of (P5, C5, K2,3)-free graphs without clique cutsets", "P5,C5,K2,3", true, None, G, Check::MinimalCutset),
    target("k23-hole-structure", "lemma-4.1", "5-hole neighborhoods of (P5, K2,3)-free graphs", "P5,K2,3", false, None, G, Check::K23Hole),
    target("k23-second-neighborhood", "lemma-4.2", "second neighborhoods of 5-holes in (P5, K2,3)-free graphs without clique cutsets", "P5,K2,3", true, None, G, Check::K23Second),
    target("dominating-clique-or-p3", "lemma-5.1", "connected P5-free graphs have a dominating clique or P3", "P5", true, None, G, Check::Dominating),
    target("wagon-2k2", "lemma-5.2", "χ ≤ (ω²+ω)/2 for 2K2-free graphs", "2K2", false, None, G, Check::Bound(Pipeline::Wagon)),
    target("sumner-p5-k3", "lemma-6.1", "(P5, K3)-free graphs are 3-colorable", "P5,K3", false, None, G, Check::Sumner),
    target("k1k3-free-bound", "lemma-6.2", "χ ≤ 3ω−3 for (P5, K1∪K3)-free graphs with an edge", "P5,K1uK3", false, Some(2), G, Check::Bound(Pipeline::K1K3Free)),
    target("k1k1k3-hole-structure", "lemma-6.3", "5-hole neighborhoods of (P5, K1+(K1∪K3))-free graphs without clique cutsets", "P5,K1+(K1uK3)", true, None, G, Check::K1k1k3Hole),
    target("k1k1k3-second-neighborhood", "lemma-6.4", "outer neighborhoods of 5-holes in (P5, K1+(K1∪K3))-free graphs without clique cutsets", "P5,K1+(K1uK3)", true, None, G, Check::K1k1k3Second),
    target("k1k1k3-antihole", "lemma-6.5", "long odd antihole neighborhoods of (P5, C5, K1+(K1∪K3))-free graphs", "P5,C5,K1+(K1uK3)", false, None, G, Check::K1k1k3Antihole),
    target("odd-antihole-two-cliques", "observation-2.1", "no odd antihole is the union of two cliques", "", false, None, G, Check::AntiholeTwoCliques),
];

pub fn find_target(id: &str) -> Result<&'static Target> {
    TARGETS
        .iter()
        .find(|t| t.id == id || t.alias == id)
        .ok_or_else(|| Error::UnknownTarget(id.to_string()))
}

/// Accepts a pipeline id or the id of the bound target it verifies.
pub fn parse_pipeline(id: &str) -> Result<Pipeline> {
    if let Ok(p) = Pipeline::from_id(id) {
        return Ok(p);
    }
    match TARGETS.iter().find(|t| t.id == id || t.alias == id) {
        Some(Target {
            check: Check::Bound(p), ..
        }) => Ok(*p),
        Some(Target {
            check: Check::Sumner, ..
        }) => Ok(Pipeline::Sumner),
        Some(Target {
            check: Check::Divisible,
            ..
        }) => Ok(Pipeline::Divisible),
        _ => Err(Error::UnknownTarget(id.to_string())),
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyParams {
    pub target: String,
    pub n_min: usize,
    pub n_max: usize,
    /// Restrict to connected graphs on top of the target's own universe.
    pub connected: bool,
    /// Read the universe from a graph6 file instead of generating it.
    pub input: Option<PathBuf>,
    /// Worker threads; `None` reads `CHIBIND_THREADS`, then uses all cores.
    pub threads: Option<usize>,
    /// Record wall time. Off by default so reports are byte-stable.
    pub timing: bool,
}

impl VerifyParams {
    pub fn new(target: &str, n_max: usize) -> Self {
        VerifyParams {
            target: target.to_string(),
            n_min: 1,
            n_max,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportParams {
    pub n_min: usize,
    pub n_max: usize,
    pub free_of: Vec<String>,
    pub connected: bool,
    pub omega_min: Option<usize>,
    pub source: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub graphs_checked: usize,
    /// Graphs on which the statement had something to check (for example a
    /// 5-hole to decompose).
    pub applicable: usize,
    pub violations: usize,
    pub by_order: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub g6: String,
    pub detail: String,
}

/// A value measured against the bound it must respect.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub ratio: f64,
    pub value: usize,
    pub bound: usize,
    pub omega: usize,
    pub g6: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Extreme {
    pub worst: Option<Witness>,
    pub by_omega: BTreeMap<usize, Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Extremes {
    /// Exact chromatic number against the bound.
    pub chi: Extreme,
    /// Colors used by the constructive pipeline against the bound.
    pub colors_used: Extreme,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub target: String,
    pub statement: String,
    pub params: ReportParams,
    pub counts: Counts,
    pub violations: Vec<Violation>,
    pub extremes: Extremes,
    pub summary: String,
    pub seconds: Option<f64>,
}

/// One CSV row per checked graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRow {
    pub g6: String,
    pub n: usize,
    pub omega: usize,
    pub chi: Option<usize>,
    pub colors_used: Option<usize>,
    pub bound: Option<usize>,
    pub violations: usize,
}

#[derive(Clone, Copy, Debug)]
struct Measure {
    value: usize,
    bound: usize,
    omega: usize,
}

#[derive(Default)]
struct Outcome {
    applicable: bool,
    violations: Vec<String>,
    chi: Option<Measure>,
    colors: Option<Measure>,
}

impl Outcome {
    fn fail(&mut self, detail: impl Into<String>) {
        self.violations.push(detail.into());
    }

    fn absorb(&mut self, what: &str, r: Result<Vec<String>>) {
        match r {
            Ok(v) => self.violations.extend(v.into_iter().map(|d| format!("{what}: {d}"))),
            Err(e) => self.fail(format!("{what}: {e}")),
        }
    }
}

fn exact_chi(g: &Graph) -> usize {
    invariants::chromatic_number(g).0
}

fn check_bound(g: &Graph, p: Pipeline, out: &mut Outcome) {
    out.applicable = true;
    let omega = invariants::clique_number(g);
    let bound = p.bound(omega);
    let chi = exact_chi(g);
    out.chi = Some(Measure { value: chi, bound, omega });
    if chi > bound {
        out.fail(format!("χ = {chi} exceeds the bound {bound} at ω = {omega}"));
    }
    match p.run(g) {
        Ok((c, cert)) => {
            for v in cert.verify(g, &c) {
                out.fail(format!("certificate: {v}"));
            }
            if c.colors_used() < chi {
                out.fail("pipeline used fewer colors than χ");
            }
            out.colors = Some(Measure {
                value: cert.colors_used,
                bound,
                omega,
            });
        }
        Err(e) => out.fail(format!("pipeline {}: {e}", p.id())),
    }
}

fn check_divisible(g: &Graph, out: &mut Outcome) {
    out.applicable = true;
    match invariants::first_indivisible_subset(g) {
        Ok(None) => {}
        Ok(Some(s)) => out.fail(format!("induced subgraph on {:?} has no perfect division", Bits(s).collect::<Vec<_>>())),
        Err(e) => return out.fail(e.to_string()),
    }
    let omega = invariants::clique_number(g);
    let bound = invariants::divisible_bound(omega);
    out.chi = Some(Measure {
        value: exact_chi(g),
        bound,
        omega,
    });
    if out.violations.is_empty() {
        match invariants::chi_bound_divisible(g) {
            Ok((used, c)) => {
                if !c.is_proper(g) {
                    out.fail("division coloring is not proper");
                }
                out.colors = Some(Measure { value: used, bound, omega });
            }
            Err(e) => out.fail(e.to_string()),
        }
    }
}

fn check_sumner(g: &Graph, out: &mut Outcome) {
    check_bound(g, Pipeline::Sumner, out);
    let bip = g.is_bipartite_mask(g.all());
    if let Some(m) = out.colors {
        if (m.value <= 2) != bip {
            out.fail(format!("{} colors on a graph that is {}bipartite", m.value, if bip { "" } else { "not " }));
        }
    }
    if let Err(e) = crate::colorers::sumner_shapes(g) {
        out.fail(format!("shape: {e}"));
    }
}

fn check_dominating(g: &Graph, out: &mut Outcome) {
    out.applicable = true;
    match structure::find_dominating_clique_or_p3(g) {
        Ok((kind, set)) => {
            let m = set.mask();
            if !g.dominates_mask(m) {
                out.fail("returned set does not dominate");
            }
            let ok = match kind {
                DominatorKind::Clique => g.is_clique_mask(m),
                DominatorKind::P3 => m.count_ones() == 3 && g.is_connected_mask(m) && !g.is_clique_mask(m),
            };
            if !ok {
                out.fail(format!("returned {kind:?} is not of that shape"));
            }
        }
        Err(e) => out.fail(e.to_string()),
    }
}

fn has_clique_cutset(g: &Graph) -> bool {
    !g.is_connected() || structure::find_clique_cutset_mask(g).is_some()
}

fn for_each_hole(g: &Graph, out: &mut Outcome, what: &str, f: impl Fn(&structure::FiveHoleDecomposition) -> Vec<String>) {
    for hole in structure::five_holes(g) {
        out.applicable = true;
        let r = structure::decompose_five_hole(g, hole).map(|d| f(&d));
        out.absorb(&format!("{what} at hole {hole:?}"), r);
    }
}

fn check_one(t: &Target, g: &Graph) -> Outcome {
    let mut out = Outcome::default();
    match t.check {
        Check::Divisible => check_divisible(g, &mut out),
        Check::Bound(p) => check_bound(g, p, &mut out),
        Check::Sumner => check_sumner(g, &mut out),
        Check::Dominating => check_dominating(g, &mut out),
        Check::P5Hole => for_each_hole(g, &mut out, "hole lemma", |d| structure::check_p5_hole_lemma(g, d)),
        Check::K23Hole => for_each_hole(g, &mut out, "hole lemma", |d| structure::check_k23_hole_lemma(g, d)),
        Check::K23Second if !has_clique_cutset(g) => {
            for_each_hole(g, &mut out, "second neighborhood", |d| structure::check_k23_cutset_lemma(g, d))
        }
        Check::K1k1k3Hole if !has_clique_cutset(g) => {
            for_each_hole(g, &mut out, "hole lemma", |d| structure::check_k1k1k3_hole_lemma(g, d))
        }
        Check::K1k1k3Second if !has_clique_cutset(g) => for_each_hole(g, &mut out, "outer neighborhoods", |d| {
            structure::check_k1k1k3_second_neighborhood(g, d)
        }),
        Check::K23Second | Check::K1k1k3Hole | Check::K1k1k3Second => {}
        Check::K1k1k3Antihole => {
            for a in structure::long_odd_antiholes(g) {
                out.applicable = true;
                let r = structure::decompose_antihole(g, &a).map(|d| structure::check_antihole_lemma(g, &d));
                out.absorb(&format!("antihole {a:?}"), r);
            }
        }
        Check::MinimalCutset => {
            if !has_clique_cutset(g) {
                out.applicable = true;
                out.absorb("minimal cutsets", structure::check_c5_cutset_lemma(g));
            }
        }
        Check::AntiholeTwoCliques => {
            let mut found: Vec<Vec<usize>> = structure::five_holes(g).into_iter().map(|h| h.to_vec()).collect();
            found.extend(structure::long_odd_antiholes(g));
            for a in found {
                out.applicable = true;
                let m = a.iter().fold(0u64, |m, &v| m | 1 << v);
                match patterns::odd_antihole_not_two_cliques(&g.induced_mask(m)) {
                    Ok(true) => {}
                    Ok(false) => out.fail(format!("antihole {a:?} splits into two cliques")),
                    Err(e) => out.fail(e.to_string()),
                }
            }
        }
    }
    out
}

fn thread_count(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| std::env::var("CHIBIND_THREADS").ok().and_then(|s| s.trim().parse().ok()))
        .filter(|&t| t > 0)
        .unwrap_or(0)
}

/// Larger ratio first; ties go to the smaller graph6 string.
fn worse(a: &Witness, b: &Witness) -> bool {
    match (a.value * b.bound).cmp(&(b.value * a.bound)) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.g6 < b.g6,
    }
}

impl Extreme {
    fn record(&mut self, m: Measure, g6: &str) {
        let w = Witness {
            ratio: if m.bound == 0 { 0.0 } else { m.value as f64 / m.bound as f64 },
            value: m.value,
            bound: m.bound,
            omega: m.omega,
            g6: g6.to_string(),
        };
        if self.worst.as_ref().is_none_or(|cur| worse(&w, cur)) {
            self.worst = Some(w.clone());
        }
        match self.by_omega.get(&m.omega) {
            Some(cur) if !worse(&w, cur) => {}
            _ => {
                self.by_omega.insert(m.omega, w);
            }
        }
    }
}

/// Runs a target over its universe. The report depends only on the
/// parameters, never on the thread count.
pub fn verify(params: &VerifyParams) -> Result<VerificationReport> {
    Ok(verify_with_rows(params)?.0)
}

pub fn verify_with_rows(params: &VerifyParams) -> Result<(VerificationReport, Vec<GraphRow>)> {
    let t = find_target(&params.target)?;
    if params.n_max > t.n_limit {
        return Err(Error::Capacity {
            what: "verification order",
            limit: t.n_limit,
            got: params.n_max,
        });
    }
    let start = Instant::now();
    let free = patterns::parse_pattern_list(t.free_of)?;
    let base = match &params.input {
        Some(p) => GraphStream::file(p),
        None => GraphStream::generated_range(params.n_min.max(1), params.n_max, false),
    };
    let mut stream = base.connected(t.connected || params.connected);
    stream.free_of = free.clone();
    if let Some(w) = t.omega_min {
        stream = stream.omega_at_least(w);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count(params.threads))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let graphs = pool.install(|| stream.collect())?;
    if let Some(g) = graphs.iter().find(|g| g.n() > t.n_limit) {
        return Err(Error::Capacity {
            what: "verification order",
            limit: t.n_limit,
            got: g.n(),
        });
    }
    let outcomes: Vec<(String, Outcome)> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| (enumerate::encode_graph6(g).unwrap(), check_one(t, g)))
            .collect()
    });

    let mut counts = Counts::default();
    let mut violations = Vec::new();
    let mut extremes = Extremes::default();
    let mut rows = Vec::with_capacity(outcomes.len());
    for (g, (g6, o)) in graphs.iter().zip(&outcomes) {
        counts.graphs_checked += 1;
        *counts.by_order.entry(g.n()).or_default() += 1;
        counts.applicable += usize::from(o.applicable);
        for d in &o.violations {
            violations.push(Violation {
                g6: g6.clone(),
                detail: d.clone(),
            });
        }
        if let Some(m) = o.chi {
            extremes.chi.record(m, g6);
        }
        if let Some(m) = o.colors {
            extremes.colors_used.record(m, g6);
        }
        rows.push(GraphRow {
            g6: g6.clone(),
            n: g.n(),
            omega: o.chi.or(o.colors).map_or_else(|| invariants::clique_number(g), |m| m.omega),
            chi: o.chi.map(|m| m.value),
            colors_used: o.colors.map(|m| m.value),
            bound: o.chi.or(o.colors).map(|m| m.bound),
            violations: o.violations.len(),
        });
    }
    violations.sort_by(|a, b| (&a.g6, &a.detail).cmp(&(&b.g6, &b.detail)));
    rows.sort_by(|a, b| a.g6.cmp(&b.g6));
    counts.violations = violations.len();
    let summary = if violations.is_empty() {
        format!("ok: {} holds on all {} graphs", t.id, counts.graphs_checked)
    } else {
        format!(
            "BUG: {} violations of a proved statement ({}); the implementation is wrong",
            violations.len(),
            t.id
        )
    };
    let report = VerificationReport {
        target: t.id.to_string(),
        statement: t.statement.to_string(),
        params: ReportParams {
            n_min: params.n_min.max(1),
            n_max: params.n_max,
            free_of: free.iter().map(|p| p.name.clone()).collect(),
            connected: t.connected || params.connected,
            omega_min: t.omega_min,
            source: match &stream.source {
                Source::Generated { .. } => "generated".to_string(),
                Source::File(p) => p.display().to_string(),
            },
        },
        counts,
        violations,
        extremes,
        summary,
        seconds: params.timing.then(|| start.elapsed().as_secs_f64()),
    };
    Ok((report, rows))
}

// ---------------------------------------------------------------------------
// single graphs

/// Parses `"0-1,1-2"` into a graph on `1 + max vertex` vertices, or on `n`
/// vertices when given.
pub fn parse_edges(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    for part in text.split([',', ' ', ';']).filter(|p| !p.trim().is_empty()) {
        let (a, b) = part
            .trim()
            .split_once('-')
            .ok_or_else(|| Error::Precondition(format!("edge `{part}` is not of the form u-v")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Precondition(format!("bad vertex `{s}`")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    Graph::from_edge_list(n, &edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorResult {
    pub g6: String,
    pub pipeline: String,
    pub colors: Vec<usize>,
    pub certificate: BoundCertificate,
}

pub fn color_one(g: &Graph, pipeline: &str) -> Result<ColorResult> {
    let p = parse_pipeline(pipeline)?;
    let (c, certificate) = p.run(g)?;
    Ok(ColorResult {
        g6: enumerate::encode_graph6(g)?,
        pipeline: p.id().to_string(),
        colors: c.colors,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleClass {
    pub class: String,
    pub vertices: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleProfile {
    pub hole: [usize; 5],
    pub classes: Vec<HoleClass>,
    /// `levels[i]` is the set at distance `i + 1` from the hole.
    pub levels: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dominator {
    pub kind: DominatorKind,
    pub vertices: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub g6: String,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub perfect: bool,
    pub odd_hole: Option<Vec<usize>>,
    pub odd_antihole: Option<Vec<usize>>,
    /// Catalog patterns the graph induces.
    pub contains: Vec<String>,
    pub five_hole: Option<HoleProfile>,
    pub clique_cutset: Option<CutsetReport>,
    pub minimal_cutsets: Option<Vec<CutsetReport>>,
    pub homogeneous_set: Option<VertexSet>,
    pub dominating: Option<Dominator>,
    pub perfect_division: Option<PerfectDivision>,
    pub perfectly_divisible: Option<bool>,
}

/// Structural profile of one graph. Expensive parts are skipped (left
/// `None`) above their size limits.
pub fn analyze_one(g: &Graph) -> Result<Profile> {
    let connected = g.is_connected();
    let five_hole = match structure::find_five_hole(g) {
        Some(h) => {
            let d = structure::decompose_five_hole(g, h)?;
            Some(HoleProfile {
                hole: h,
                classes: d
                    .nonempty_classes()
                    .into_iter()
                    .map(|(k, m)| HoleClass {
                        class: structure::class_name(k),
                        vertices: g.set_from_mask(m).unwrap(),
                    })
                    .collect(),
                levels: d.levels.iter().map(|&m| g.set_from_mask(m).unwrap()).collect(),
            })
        }
        None => None,
    };
    let (clique_cutset, minimal_cutsets, dominating) = if connected && g.n() > 0 {
        let (kind, vertices) = structure::find_dominating_clique_or_p3(g)
            .map(|(k, v)| (Some(k), Some(v)))
            .unwrap_or((None, None));
        (
            structure::find_clique_cutset(g)?,
            if g.n() <= 16 { Some(structure::minimal_cutsets(g)?) } else { None },
            kind.zip(vertices).map(|(kind, vertices)| Dominator { kind, vertices }),
        )
    } else {
        (None, None, None)
    };
    let small = g.n() <= invariants::DIVISIBILITY_LIMIT;
    Ok(Profile {
        g6: enumerate::encode_graph6(g)?,
        n: g.n(),
        edges: g.edge_count(),
        connected,
        omega: invariants::clique_number(g),
        alpha: invariants::independence_number(g),
        chi: exact_chi(g),
        perfect: patterns::is_perfect(g),
        odd_hole: patterns::find_odd_hole_cycle(g),
        odd_antihole: patterns::find_odd_antihole_cycle(g),
        contains: patterns::catalog()
            .iter()
            .filter(|p| patterns::contains(g, &p.graph))
            .map(|p| p.name.clone())
            .collect(),
        five_hole,
        clique_cutset,
        minimal_cutsets,
        homogeneous_set: structure::find_homogeneous_set(g),
        dominating,
        perfect_division: if g.n() <= invariants::TABLE_LIMIT {
            invariants::find_perfect_division(g)?
        } else {
            None
        },
        perfectly_divisible: if small { Some(invariants::is_perfectly_divisible(g)?) } else { None },
    })
}

/// Human-readable rendering of a profile.
pub fn render_profile(p: &Profile) -> String {
    let set = |s: &VertexSet| format!("{:?}", s.to_vec());
    let mut out = String::new();
    out.push_str(&format!("graph6        {}\n", p.g6));
    out.push_str(&format!("order/size    {} vertices, {} edges, {}\n", p.n, p.edges, if p.connected { "connected" } else { "disconnected" }));
    out.push_str(&format!("ω / α / χ     {} / {} / {}\n", p.omega, p.alpha, p.chi));
    out.push_str(&format!("perfect       {}\n", p.perfect));
    if let Some(h) = &p.odd_hole {
        out.push_str(&format!("odd hole      {h:?}\n"));
    }
    if let Some(a) = &p.odd_antihole {
        out.push_str(&format!("odd antihole  {a:?}\n"));
    }
    out.push_str(&format!("induces       {}\n", if p.contains.is_empty() { "-".to_string() } else { p.contains.join(" ") }));
    if let Some(h) = &p.five_hole {
        out.push_str(&format!("5-hole        {:?}\n", h.hole));
        for c in &h.classes {
            out.push_str(&format!("  N{:<12}{}\n", c.class, set(&c.vertices)));
        }
        for (i, l) in h.levels.iter().enumerate().skip(1) {
            out.push_str(&format!("  level {}     {}\n", i + 1, set(l)));
        }
    }
    match &p.clique_cutset {
        Some(c) => out.push_str(&format!("clique cutset {}\n", set(&c.cutset))),
        None => out.push_str("clique cutset none\n"),
    }
    if let Some(ms) = &p.minimal_cutsets {
        out.push_str(&format!("minimal cutsets ({})\n", ms.len()));
        for c in ms.iter().take(20) {
            out.push_str(&format!("  {}\n", set(&c.cutset)));
        }
    }
    match &p.homogeneous_set {
        Some(h) => out.push_str(&format!("homogeneous   {}\n", set(h))),
        None => out.push_str("homogeneous   none\n"),
    }
    if let Some(d) = &p.dominating {
        out.push_str(&format!("dominating    {:?} {}\n", d.kind, set(&d.vertices)));
    }
    if let Some(d) = &p.perfect_division {
        out.push_str(&format!("division      perfect part {}, rest {}\n", set(&d.a), set(&d.b)));
    }
    if let Some(b) = p.perfectly_divisible {
        out.push_str(&format!("divisible     {b}\n"));
    }
    out
}

/// Human-readable rendering of a coloring result.
pub fn render_coloring(r: &ColorResult) -> String {
    let c = &r.certificate;
    let mut out = format!(
        "{} on {}: {} colors, bound {} at ω = {}\ncolors {:?}\n",
        r.pipeline, r.g6, c.colors_used, c.bound_value, c.omega, r.colors
    );
    for s in &c.pipeline_trace {
        out.push_str(&format!("  {:<40} {:?} -> {:?}\n", s.step, s.vertices.to_vec(), s.palette));
    }
    out
}

/// Lists a universe: graph6 lines of the members of `free_of` on `n`
/// vertices.
pub fn gen_lines(n: usize, connected: bool, free_of: &[Pattern]) -> Result<String> {
    let graphs = enumerate::generate_free(n, free_of, connected)?;
    enumerate::write_graph6_lines(&graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{complete_bipartite, cycle, path};

    #[test]
    fn aliases_resolve() {
        assert_eq!(find_target("theorem-1.2").unwrap().id, "p5-k23-bound");
        assert_eq!(parse_pipeline("theorem-1.3").unwrap(), Pipeline::P5K1TwoK2);
        assert!(find_target("lemma-9.9").is_err());
        let mut ids: Vec<&str> = TARGETS.iter().flat_map(|t| [t.id, t.alias]).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 2 * TARGETS.len());
    }

    #[test]
    fn small_verify_runs_clean() {
        for t in &TARGETS {
            let r = verify(&VerifyParams::new(t.id, 6)).unwrap();
            assert!(r.violations.is_empty(), "{}: {:?}", t.id, r.violations);
            assert!(r.seconds.is_none());
        }
    }

    #[test]
    fn sharpness_witness_at_omega_two() {
        let r = verify(&VerifyParams::new("theorem-1.2", 6)).unwrap();
        let w = &r.extremes.colors_used.by_omega[&2];
        assert_eq!((w.value, w.bound), (3, 3));
        assert_eq!(r.extremes.chi.by_omega[&2].ratio, 1.0);
    }

    #[test]
    fn color_and_analyze() {
        let r = color_one(&cycle(5), "p5-k23").unwrap();
        assert_eq!((r.certificate.colors_used, r.certificate.bound_value), (3, 3));
        let e = color_one(&path(5), "p5-k23").unwrap_err();
        assert!(e.is_precondition());
        let p = analyze_one(&complete_bipartite(2, 3)).unwrap();
        assert!(p.homogeneous_set.is_some());
        assert!(render_profile(&p).contains("homogeneous"));
    }

    #[test]
    fn edges_parse() {
        let g = parse_edges("0-1,1-2", None).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
        assert!(parse_edges("0-", None).is_err());
        assert_eq!(parse_edges("", Some(2)).unwrap().n(), 2);
    }
}
