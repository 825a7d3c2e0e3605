//! Constructive coloring pipelines with bound certificates.
//!
//! Each pipeline step owns a list of palette colors and records it in the
//! trace. Steps that reuse another step's colors are only sound because the
//! two vertex sets are anticomplete; every paint operation re-checks the
//! edges to already colored vertices and fails loudly on a conflict.

use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, Coloring};
use crate::patterns::{self, Pattern};
use crate::structure::{self, SumnerShape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: String,
    pub vertices: VertexSet,
    pub palette: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub theorem: String,
    pub omega: usize,
    pub bound_value: usize,
    pub colors_used: usize,
    pub pipeline_trace: Vec<TraceStep>,
}

impl BoundCertificate {
    /// Re-checks the certificate against the coloring: the bound formula,
    /// the color count, and that the last trace step covering each vertex
    /// lists its color.
    pub fn verify(&self, g: &Graph, coloring: &Coloring) -> Vec<String> {
        let mut out = Vec::new();
        if !coloring.is_proper(g) {
            out.push("coloring is not proper".to_string());
        }
        if coloring.colors_used() != self.colors_used {
            out.push(format!(
                "certificate says {} colors, coloring uses {}",
                self.colors_used,
                coloring.colors_used()
            ));
        }
        if self.colors_used > self.bound_value {
            out.push(format!("{} colors exceed the bound {}", self.colors_used, self.bound_value));
        }
        match Pipeline::from_id(&self.theorem) {
            Ok(p) if p.bound(self.omega) != self.bound_value => {
                out.push(format!("bound {} does not match ω = {}", self.bound_value, self.omega))
            }
            Err(_) => out.push(format!("unknown pipeline {}", self.theorem)),
            _ => {}
        }
        if invariants::clique_number(g) != self.omega {
            out.push("recorded ω is wrong".to_string());
        }
        for v in 0..g.n() {
            match self.pipeline_trace.iter().rev().find(|s| s.vertices.contains(v)) {
                None => out.push(format!("vertex {v} is in no trace step")),
                Some(s) if !s.palette.contains(&coloring.colors[v]) => out.push(format!(
                    "vertex {v} has color {} outside the palette of step {}",
                    coloring.colors[v], s.step
                )),
                _ => {}
            }
        }
        out
    }
}

/// A coloring under construction, in the local numbering of one graph.
#[derive(Clone, Debug)]
struct Colored {
    colors: Vec<usize>,
    trace: Vec<Step>,
}

#[derive(Clone, Debug)]
struct Step {
    name: String,
    vertices: u64,
    palette: Vec<usize>,
}

impl Colored {
    fn palette_size(&self) -> usize {
        self.colors.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    fn single(g: &Graph, name: &str, colors: Vec<usize>) -> Colored {
        let mut palette: Vec<usize> = colors.clone();
        palette.sort_unstable();
        palette.dedup();
        Colored {
            colors,
            trace: vec![Step {
                name: name.to_string(),
                vertices: g.all(),
                palette,
            }],
        }
    }

    fn into_output(self, g: &Graph, pipeline: Pipeline) -> Result<(Coloring, BoundCertificate)> {
        let coloring = Coloring {
            k: self.palette_size(),
            colors: self.colors,
        };
        if !coloring.is_proper(g) {
            return Err(Error::Structural(format!("{} produced an improper coloring", pipeline.id())));
        }
        let omega = invariants::clique_number(g);
        let cert = BoundCertificate {
            theorem: pipeline.id().to_string(),
            omega,
            bound_value: pipeline.bound(omega),
            colors_used: coloring.colors_used(),
            pipeline_trace: self
                .trace
                .into_iter()
                .map(|s| TraceStep {
                    step: s.name,
                    vertices: g.set_from_mask(s.vertices).unwrap(),
                    palette: s.palette,
                })
                .collect(),
        };
        if cert.colors_used > cert.bound_value {
            return Err(Error::BoundViolation {
                used: cert.colors_used,
                bound: cert.bound_value,
            });
        }
        Ok((coloring, cert))
    }
}

const UNSET: usize = usize::MAX;

struct Painter<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    next: usize,
    trace: Vec<Step>,
}

impl<'a> Painter<'a> {
    fn new(g: &'a Graph) -> Self {
        Painter {
            g,
            colors: vec![UNSET; g.n()],
            next: 0,
            trace: Vec::new(),
        }
    }

    fn fresh(&mut self, k: usize) -> Vec<usize> {
        let p: Vec<usize> = (self.next..self.next + k).collect();
        self.next += k;
        p
    }

    /// Paints the vertices of `only` (a subset of `domain`) using `sub`, a
    /// coloring of `G[domain]`, with sub-color `c` becoming `palette[c]`.
    fn paint_part(&mut self, name: &str, domain: u64, only: u64, sub: &Colored, palette: &[usize]) -> Result<()> {
        if sub.palette_size() > palette.len() {
            return Err(Error::Structural(format!(
                "step {name} needs {} colors but owns {}",
                sub.palette_size(),
                palette.len()
            )));
        }
        let verts: Vec<usize> = Bits(domain).collect();
        let local = |m: u64| -> u64 {
            verts
                .iter()
                .enumerate()
                .filter(|(_, &v)| m >> v & 1 == 1)
                .fold(0, |acc, (i, _)| acc | 1 << i)
        };
        let lift = |m: u64| -> u64 { Bits(m).fold(0, |acc, i| acc | 1 << verts[i]) };
        for (i, &v) in verts.iter().enumerate() {
            if only >> v & 1 == 1 {
                self.colors[v] = palette[sub.colors[i]];
            }
        }
        let only_local = local(only);
        for s in &sub.trace {
            let vs = s.vertices & only_local;
            if vs != 0 {
                self.trace.push(Step {
                    name: format!("{name}/{}", s.name),
                    vertices: lift(vs),
                    palette: s.palette.iter().map(|&c| palette[c]).collect(),
                });
            }
        }
        self.check_conflicts(name, only)
    }

    fn paint(&mut self, name: &str, domain: u64, sub: &Colored, palette: &[usize]) -> Result<()> {
        self.paint_part(name, domain, domain, sub, palette)
    }

    /// Gives every vertex of `mask` the same color.
    fn paint_flat(&mut self, name: &str, mask: u64, color: usize) -> Result<()> {
        if mask == 0 {
            return Ok(());
        }
        for v in Bits(mask) {
            self.colors[v] = color;
        }
        self.trace.push(Step {
            name: name.to_string(),
            vertices: mask,
            palette: vec![color],
        });
        self.check_conflicts(name, mask)
    }

    fn check_conflicts(&self, name: &str, mask: u64) -> Result<()> {
        for v in Bits(mask) {
            for u in Bits(self.g.nbrs(v)) {
                if self.colors[u] == self.colors[v] {
                    return Err(Error::Structural(format!(
                        "step {name}: adjacent {u} and {v} both got color {}",
                        self.colors[v]
                    )));
                }
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<Colored> {
        if let Some(v) = self.colors.iter().position(|&c| c == UNSET) {
            return Err(Error::Structural(format!("vertex {v} was never colored")));
        }
        Ok(Colored {
            colors: self.colors,
            trace: self.trace,
        })
    }
}

fn pattern(name: &str) -> Pattern {
    Pattern::by_name(name).expect("catalog pattern")
}

fn require_free(g: &Graph, names: &[&str]) -> Result<()> {
    let pats: Vec<Pattern> = names.iter().map(|n| pattern(n)).collect();
    patterns::require_free(g, &pats)
}

fn empty_colored() -> Colored {
    Colored {
        colors: vec![],
        trace: vec![],
    }
}

// ---------------------------------------------------------------------------
// (P5, K3)-free graphs

fn sumner(g: &Graph) -> Result<Colored> {
    let mut colors = vec![0; g.n()];
    let mut trace = Vec::new();
    for comp in g.components_mask(g.all()) {
        match structure::sumner_shape(g, comp)? {
            SumnerShape::Bipartite { side } => {
                for v in Bits(comp) {
                    colors[v] = if side.contains(v) { 0 } else { 1 };
                }
                let mut palette: Vec<usize> = Bits(comp).map(|v| colors[v]).collect();
                palette.sort_unstable();
                palette.dedup();
                trace.push(Step {
                    name: "bipartite-component".into(),
                    vertices: comp,
                    palette,
                });
            }
            SumnerShape::InflatedFiveHole { classes } => {
                for (p, class) in classes.iter().enumerate() {
                    for v in class.iter() {
                        colors[v] = [0, 1, 0, 1, 2][p];
                    }
                }
                trace.push(Step {
                    name: "inflated-5-hole-component".into(),
                    vertices: comp,
                    palette: vec![0, 1, 2],
                });
            }
        }
    }
    Ok(Colored { colors, trace })
}

/// Colors a (P5, K3)-free graph with at most 3 colors, two when bipartite.
pub fn color_sumner(g: &Graph) -> Result<Coloring> {
    Ok(Pipeline::Sumner.run(g)?.0)
}

/// The shape certificate of every component of a (P5, K3)-free graph.
pub fn sumner_shapes(g: &Graph) -> Result<Vec<(VertexSet, SumnerShape)>> {
    require_free(g, &["P5", "K3"])?;
    g.components_mask(g.all())
        .into_iter()
        .map(|c| Ok((g.set_from_mask(c).unwrap(), structure::sumner_shape(g, c)?)))
        .collect()
}

// ---------------------------------------------------------------------------
// (P5, K1∪K3)-free graphs

fn k1k3_free(g: &Graph) -> Result<Colored> {
    if g.n() == 0 {
        return Ok(empty_colored());
    }
    if invariants::clique_number(g) <= 2 {
        return sumner(g);
    }
    let v = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let nb = g.nbrs(v);
    let rest = g.all() & !nb & !(1 << v);
    let mut p = Painter::new(g);
    let inner = k1k3_free(&g.induced_mask(nb))?;
    let pal = p.fresh(inner.palette_size());
    p.paint("neighborhood", nb, &inner, &pal)?;
    let outer = sumner(&g.induced_mask(rest))?;
    let pal = p.fresh(3);
    p.paint("non-neighbors", rest, &outer, &pal)?;
    p.paint_flat("peeled-vertex", 1 << v, pal[0])?;
    p.finish()
}

/// Colors a (P5, K1∪K3)-free graph with at most 3ω−3 colors.
pub fn color_k1_union_k3_free(g: &Graph) -> Result<Coloring> {
    Ok(Pipeline::K1K3Free.run(g)?.0)
}

// ---------------------------------------------------------------------------
// 2K2-free graphs

fn wagon(g: &Graph) -> Result<Colored> {
    if g.n() == 0 {
        return Ok(empty_colored());
    }
    let k: Vec<usize> = Bits(invariants::max_clique_mask(g, g.all())).collect();
    let w = k.len();
    let pair_index = |i: usize, j: usize| w + i * (2 * w - i - 1) / 2 + (j - i - 1);
    let mut colors = vec![0; g.n()];
    for (i, &ki) in k.iter().enumerate() {
        colors[ki] = i;
    }
    let kmask = k.iter().fold(0u64, |m, &v| m | 1 << v);
    for x in Bits(g.all() & !kmask) {
        let missed: Vec<usize> = (0..w).filter(|&i| !g.has_edge(x, k[i])).collect();
        colors[x] = match missed.as_slice() {
            [] => return Err(Error::Structural(format!("vertex {x} extends a maximum clique"))),
            [i] => *i,
            [i, j, ..] => pair_index(*i, *j),
        };
    }
    let proper = Coloring {
        colors: colors.clone(),
        k: 0,
    }
    .is_proper(g);
    if proper {
        Ok(Colored::single(g, "clique-buckets", colors))
    } else {
        let (_, exact) = invariants::chromatic_number(g);
        Ok(Colored::single(g, "exact-fallback", exact.colors))
    }
}

/// Colors a 2K2-free graph with at most (ω²+ω)/2 colors.
pub fn color_wagon_2k2_free(g: &Graph) -> Result<Coloring> {
    Ok(Pipeline::Wagon.run(g)?.0)
}

// ---------------------------------------------------------------------------
// shared preprocessing

/// Colors each component and each side of a clique cutset separately, then
/// merges by permuting the second side's palette to agree on the cutset.
fn split_and_color(g: &Graph, leaf: &dyn Fn(&Graph) -> Result<Colored>) -> Result<Colored> {
    if g.n() == 0 {
        return Ok(empty_colored());
    }
    if g.n() == 1 {
        return Ok(Colored::single(g, "single-vertex", vec![0]));
    }
    let all = g.all();
    let comps = g.components_mask(all);
    if comps.len() > 1 {
        let mut p = Painter::new(g);
        for c in comps {
            let sub = split_and_color(&g.induced_mask(c), leaf)?;
            let pal: Vec<usize> = (0..sub.palette_size()).collect();
            p.paint("component", c, &sub, &pal)?;
        }
        return p.finish();
    }
    let Some(cut) = structure::find_clique_cutset_mask(g) else {
        return leaf(g);
    };
    let side = g.components_mask(all & !cut)[0];
    let first = side | cut;
    let second = all & !side;
    let c1 = split_and_color(&g.induced_mask(first), leaf)?;
    let c2 = split_and_color(&g.induced_mask(second), leaf)?;
    // color of each cutset vertex on either side
    let first_verts: Vec<usize> = Bits(first).collect();
    let second_verts: Vec<usize> = Bits(second).collect();
    let mut map = vec![UNSET; c2.palette_size()];
    let mut taken = vec![false; c1.palette_size().max(c2.palette_size()) + cut.count_ones() as usize];
    for s in Bits(cut) {
        let a = c1.colors[first_verts.iter().position(|&v| v == s).unwrap()];
        let b = c2.colors[second_verts.iter().position(|&v| v == s).unwrap()];
        map[b] = a;
        taken[a] = true;
    }
    let mut free = (0..).filter(|&c| c >= taken.len() || !taken[c]);
    for slot in map.iter_mut().filter(|s| **s == UNSET) {
        *slot = free.next().unwrap();
    }
    let mut p = Painter::new(g);
    let pal1: Vec<usize> = (0..c1.palette_size()).collect();
    p.paint("cutset-side", first, &c1, &pal1)?;
    p.paint("cutset-rest", second, &c2, &map)?;
    p.finish()
}

/// Recolors first-fit in the order of the current color classes. Never
/// uses more colors than before.
fn first_fit_reduce(g: &Graph, c: Colored) -> Colored {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (c.colors[v], v));
    let mut colors = vec![UNSET; g.n()];
    for v in order {
        let used: Vec<usize> = Bits(g.nbrs(v)).map(|u| colors[u]).filter(|&x| x != UNSET).collect();
        colors[v] = (0..).find(|x| !used.contains(x)).unwrap();
    }
    let mut out = c;
    let mut palette = colors.clone();
    palette.sort_unstable();
    palette.dedup();
    out.trace.push(Step {
        name: "first-fit-reduce".into(),
        vertices: g.all(),
        palette,
    });
    out.colors = colors;
    out
}

fn violations_to_error(what: &str, v: Vec<String>) -> Result<()> {
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Structural(format!("{what}: {}", v.join("; "))))
    }
}

fn divisible(g: &Graph) -> Result<Colored> {
    let (_, c) = invariants::chi_bound_divisible(g)?;
    Ok(Colored::single(g, "perfect-divisions", c.colors))
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

// ---------------------------------------------------------------------------
// (P5, K2,3)-free graphs

fn p5_k23_leaf(g: &Graph) -> Result<Colored> {
    let omega = invariants::clique_number(g);
    if omega <= 2 {
        return sumner(g);
    }
    let Some(hole) = structure::find_five_hole(g) else {
        return divisible(g);
    };
    let dec = structure::decompose_five_hole(g, hole)?;
    violations_to_error("hole neighborhood", structure::check_p5_hole_lemma(g, &dec))?;
    violations_to_error("hole classes", structure::check_k23_hole_lemma(g, &dec))?;
    violations_to_error("second neighborhood", structure::check_k23_cutset_lemma(g, &dec))?;
    let mut p = Painter::new(g);
    let groups = [
        ("triples-123-234", dec.class(&[1, 2, 3]) | dec.class(&[2, 3, 4])),
        ("triples-345-451", dec.class(&[3, 4, 5]) | dec.class(&[4, 5, 1])),
        ("triple-512", dec.class(&[5, 1, 2])),
        ("full-class", dec.full_class()),
    ];
    let slice = choose2(omega - 1);
    let mut palettes = Vec::new();
    for (name, m) in groups {
        if invariants::independence_number_mask(g, m) > 2 {
            return Err(Error::Structural(format!("{name} has three independent vertices")));
        }
        let pal = p.fresh(slice);
        let sub = divisible(&g.induced_mask(m))?;
        p.paint(name, m, &sub, &pal)?;
        palettes.push(pal);
    }
    let mut s_palettes = Vec::new();
    for (i, &si) in dec.s_partition().iter().enumerate() {
        let pal = p.fresh(omega - 1);
        let n = si.count_ones() as usize;
        if !g.is_clique_mask(si) || n > pal.len() {
            return Err(Error::Structural(format!("S{} is not a clique of size below ω", i + 1)));
        }
        let sub = Colored::single(&g.induced_mask(si), "clique", (0..n).collect());
        p.paint(&format!("clique-S{}", i + 1), si, &sub, &pal)?;
        s_palettes.push(pal);
    }
    for (i, pal) in s_palettes.iter().enumerate() {
        p.paint_flat(&format!("hole-from-S{}", i + 1), 1 << dec.hole[i], pal[0])?;
    }
    let small_donor: Vec<usize> = palettes[..3].concat();
    let big_donor: Vec<usize> = [small_donor.clone(), s_palettes.concat()].concat();
    for b in g.components_mask(dec.level(2)) {
        let sub = divisible(&g.induced_mask(b))?;
        let donor = if invariants::clique_number_mask(g, b) < omega {
            &small_donor
        } else {
            &big_donor
        };
        p.paint("second-neighborhood", b, &sub, donor)?;
    }
    p.finish()
}

fn p5_k23(g: &Graph) -> Result<Colored> {
    require_free(g, &["P5", "K2,3"])?;
    let omega = invariants::clique_number(g);
    if omega < 2 {
        return Err(Error::Precondition("needs at least one edge".into()));
    }
    let c = split_and_color(g, &p5_k23_leaf)?;
    let bound = Pipeline::P5K23.bound(omega);
    let used = distinct(&c.colors);
    Ok(if used > bound { first_fit_reduce(g, c) } else { c })
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

// ---------------------------------------------------------------------------
// (P5, K1+2K2)-free graphs

fn p5_k1_2k2(g: &Graph) -> Result<Colored> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    require_free(g, &["P5", "K1+2K2"])?;
    if invariants::clique_number(g) < 2 {
        return Err(Error::Precondition("needs at least one edge".into()));
    }
    let (kind, dom) = structure::dominating_mask(g)
        .ok_or_else(|| Error::Structural("no dominating clique or P3".into()))?;
    let d: Vec<usize> = Bits(dom).collect();
    let mut p = Painter::new(g);
    let mut done = 0u64;
    let owners = match kind {
        structure::DominatorKind::P3 => 3,
        structure::DominatorKind::Clique => d.len().min(2),
    };
    for &v in &d[..owners] {
        let nb = g.nbrs(v);
        let sub = wagon(&g.induced_mask(nb))?;
        let pal = p.fresh(sub.palette_size());
        p.paint_part(&format!("neighborhood-of-{v}"), nb, nb & !done, &sub, &pal)?;
        done |= nb;
    }
    if owners == 1 {
        let pal = p.fresh(1);
        p.paint_flat("dominating-vertex", 1 << d[0], pal[0])?;
        done |= 1 << d[0];
    }
    for &v in d.iter().skip(owners) {
        let t = g.nbrs(v) & g.all() & !done;
        if !g.is_independent_mask(t) {
            return Err(Error::Structural(format!("leftover neighbors of {v} are not independent")));
        }
        if t != 0 {
            let pal = p.fresh(1);
            p.paint_flat(&format!("leftover-of-{v}"), t, pal[0])?;
        }
        done |= t;
    }
    p.finish()
}

// ---------------------------------------------------------------------------
// (P5, K1+(K1∪K3))-free graphs

fn p5_k1_k1k3_leaf(g: &Graph) -> Result<Colored> {
    if patterns::is_perfect(g) {
        let (_, c) = invariants::chromatic_number(g);
        return Ok(Colored::single(g, "perfect", c.colors));
    }
    if let Some(hole) = structure::find_five_hole(g) {
        return k1k1k3_hole_branch(g, hole);
    }
    let co = g.complement();
    let mut len = 7;
    while len <= g.n() {
        if let Some(a) = patterns::find_induced_cycle(&co, co.all(), len) {
            return k1k1k3_antihole_branch(g, &a);
        }
        len += 2;
    }
    Err(Error::Structural("imperfect graph with no odd hole or antihole".into()))
}

fn k1k1k3_hole_branch(g: &Graph, hole: [usize; 5]) -> Result<Colored> {
    let dec = structure::decompose_five_hole(g, hole)?;
    violations_to_error("hole neighborhood", structure::check_p5_hole_lemma(g, &dec))?;
    violations_to_error("hole classes", structure::check_k1k1k3_hole_lemma(g, &dec))?;
    if dec.level(4) != 0 {
        return Err(Error::Structural("vertices at distance 4 from the hole".into()));
    }
    let mut p = Painter::new(g);
    let full = dec.full_class();
    let sub = k1k3_free(&g.induced_mask(full))?;
    let pal = p.fresh(sub.palette_size());
    p.paint("full-class", full, &sub, &pal)?;
    let block = p.fresh(15);
    for i in 1..=5 {
        let m = dec.class(&[i, i + 2]);
        let sub = sumner(&g.induced_mask(m))?;
        let j = (i - 1) as usize * 3;
        p.paint(&format!("pair-class-{i}"), m, &sub, &block[j..j + 3])?;
    }
    for i in 1..=5 {
        let group = dec.class(&[i, i + 1, i + 2]) | dec.class(&[i, i + 1, i + 3]) | dec.class(&[i, i + 1, i + 2, i + 3]);
        if group != 0 {
            let pal = p.fresh(1);
            p.paint_flat(&format!("group-{i}"), group, pal[0])?;
        }
    }
    let (a, b) = structure::split_second_neighborhood(g, &dec)?;
    for (name, m, range) in [
        ("second-neighborhood-a", a, 0..3),
        ("second-neighborhood-b", b, 3..6),
        ("third-neighborhood", dec.level(3), 6..9),
    ] {
        let sub = sumner(&g.induced_mask(m))?;
        p.paint(name, m, &sub, &block[range])?;
    }
    for i in 0..5 {
        let v = dec.hole[i];
        let used: Vec<usize> = Bits(g.nbrs(v)).map(|u| p.colors[u]).collect();
        let c = block
            .iter()
            .copied()
            .find(|c| !used.contains(c))
            .ok_or_else(|| Error::Structural(format!("no free reused color for hole vertex {v}")))?;
        p.paint_flat("hole", 1 << v, c)?;
    }
    p.finish()
}

fn k1k1k3_antihole_branch(g: &Graph, antihole: &[usize]) -> Result<Colored> {
    let dec = structure::decompose_antihole(g, antihole)?;
    violations_to_error("antihole neighborhood", structure::check_antihole_lemma(g, &dec))?;
    let amask = dec.mask();
    if amask | dec.complete | dec.partial != g.all() {
        return Err(Error::Structural("vertices far from the antihole".into()));
    }
    let k = (antihole.len() - 1) / 2;
    let mut p = Painter::new(g);
    let (chi, c) = invariants::chromatic_number(&g.induced_mask(amask));
    if chi != k + 1 {
        return Err(Error::Structural(format!("antihole needs {chi} colors, expected {}", k + 1)));
    }
    let pal = p.fresh(chi);
    p.paint("antihole", amask, &Colored::single(&g.induced_mask(amask), "exact", c.colors), &pal)?;
    let sub = k1k3_free(&g.induced_mask(dec.complete))?;
    let s_colors = sub.palette_size();
    let pal = p.fresh(s_colors);
    p.paint("complete-to-antihole", dec.complete, &sub, &pal)?;
    for (i, &t) in dec.t_classes.iter().enumerate() {
        if t != 0 {
            let pal = p.fresh(1);
            p.paint_flat(&format!("partial-class-{}", i + 1), t, pal[0])?;
        }
    }
    let omega_s = invariants::clique_number_mask(g, dec.complete);
    let s_budget = match omega_s {
        0 => 0,
        1 => 1,
        w => 3 * w - 3,
    };
    let budget = (k + 1) + s_budget + (2 * k + 1);
    let out = p.finish()?;
    if distinct(&out.colors) > budget {
        return Err(Error::BoundViolation {
            used: distinct(&out.colors),
            bound: budget,
        });
    }
    Ok(out)
}

fn p5_k1_k1k3(g: &Graph) -> Result<Colored> {
    require_free(g, &["P5", "K1+(K1uK3)"])?;
    split_and_color(g, &p5_k1_k1k3_leaf)
}

// ---------------------------------------------------------------------------

/// The coloring pipelines, each with its class precondition and bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pipeline {
    /// (P5, K2,3)-free: 2ω²−ω−3.
    P5K23,
    /// Connected (P5, K1+2K2)-free: (3/2)(ω²−ω).
    P5K1TwoK2,
    /// (P5, K1+(K1∪K3))-free: 3ω+11.
    P5K1K1K3,
    /// (P5, K3)-free: 3.
    Sumner,
    /// (P5, K1∪K3)-free with an edge: 3ω−3.
    K1K3Free,
    /// 2K2-free: (ω²+ω)/2.
    Wagon,
    /// Perfectly divisible: C(ω+1, 2).
    Divisible,
}

impl Pipeline {
    pub const ALL: [Pipeline; 7] = [
        Pipeline::P5K23,
        Pipeline::P5K1TwoK2,
        Pipeline::P5K1K1K3,
        Pipeline::Sumner,
        Pipeline::K1K3Free,
        Pipeline::Wagon,
        Pipeline::Divisible,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Pipeline::P5K23 => "p5-k23",
            Pipeline::P5K1TwoK2 => "p5-k1-2k2",
            Pipeline::P5K1K1K3 => "p5-k1-k1k3",
            Pipeline::Sumner => "sumner",
            Pipeline::K1K3Free => "k1k3-free",
            Pipeline::Wagon => "wagon",
            Pipeline::Divisible => "divisible",
        }
    }

    pub fn from_id(id: &str) -> Result<Pipeline> {
        Pipeline::ALL
            .into_iter()
            .find(|p| p.id() == id)
            .ok_or_else(|| Error::UnknownTarget(id.to_string()))
    }

    pub fn bound(self, omega: usize) -> usize {
        let w = omega;
        match self {
            Pipeline::P5K23 => (2 * w * w).saturating_sub(w + 3),
            Pipeline::P5K1TwoK2 => 3 * w * w.saturating_sub(1) / 2,
            Pipeline::P5K1K1K3 => 3 * w + 11,
            Pipeline::Sumner => 3,
            Pipeline::K1K3Free => (3 * w).saturating_sub(3),
            Pipeline::Wagon | Pipeline::Divisible => w * (w + 1) / 2,
        }
    }

    pub fn run(self, g: &Graph) -> Result<(Coloring, BoundCertificate)> {
        let colored = match self {
            Pipeline::P5K23 => p5_k23(g)?,
            Pipeline::P5K1TwoK2 => p5_k1_2k2(g)?,
            Pipeline::P5K1K1K3 => p5_k1_k1k3(g)?,
            Pipeline::Sumner => {
                require_free(g, &["P5", "K3"])?;
                sumner(g)?
            }
            Pipeline::K1K3Free => {
                require_free(g, &["P5", "K1uK3"])?;
                if g.edge_count() == 0 {
                    return Err(Error::Precondition("needs at least one edge".into()));
                }
                k1k3_free(g)?
            }
            Pipeline::Wagon => {
                require_free(g, &["2K2"])?;
                wagon(g)?
            }
            Pipeline::Divisible => divisible(g)?,
        };
        colored.into_output(g, self)
    }
}

pub fn color_p5_k23(g: &Graph) -> Result<(Coloring, BoundCertificate)> {
    Pipeline::P5K23.run(g)
}

pub fn color_p5_k1_2k2(g: &Graph) -> Result<(Coloring, BoundCertificate)> {
    Pipeline::P5K1TwoK2.run(g)
}

pub fn color_p5_k1_k1k3(g: &Graph) -> Result<(Coloring, BoundCertificate)> {
    Pipeline::P5K1K1K3.run(g)
}
