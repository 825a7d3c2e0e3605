//! 5-hole neighborhoods, antihole neighborhoods, cutsets, homogeneous sets,
//! dominating cliques and the structural lemma checkers.
//!
//! Checkers return lists of violation messages. An empty list is expected on
//! every admitted input; anything else is a bug somewhere.
//!
//! Hole positions are 1-based and taken mod 5, so `v(6) == v(1)`. A class
//! key is the literal set of positions a vertex sees on the hole.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants;
use crate::patterns::{self, Pattern};

fn pos(i: isize) -> usize {
    (i - 1).rem_euclid(5) as usize
}

/// Bit key of a set of 1-based hole positions (reduced mod 5).
pub fn class_key(t: &[isize]) -> usize {
    t.iter().fold(0, |k, &i| k | 1 << pos(i))
}

/// Renders a class key as `{1,3}`.
pub fn class_name(key: usize) -> String {
    let inner: Vec<String> = (0..5)
        .filter(|b| key >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", inner.join(","))
}

#[derive(Clone, Debug)]
pub struct FiveHoleDecomposition {
    pub hole: [usize; 5],
    classes: [u64; 32],
    /// `levels[0]` is N(C), `levels[1]` is N²(C), and so on.
    pub levels: Vec<u64>,
    /// Vertices in other components.
    pub unreachable: u64,
}

impl FiveHoleDecomposition {
    /// Hole vertex at 1-based position `i` (mod 5).
    pub fn v(&self, i: isize) -> usize {
        self.hole[pos(i)]
    }

    pub fn hole_mask(&self) -> u64 {
        self.hole.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// N_T(C) for the literal position set `t`.
    pub fn class(&self, t: &[isize]) -> u64 {
        self.classes[class_key(t)]
    }

    pub fn class_by_key(&self, key: usize) -> u64 {
        self.classes[key]
    }

    /// N^i(C), `i >= 1`.
    pub fn level(&self, i: usize) -> u64 {
        self.levels.get(i - 1).copied().unwrap_or(0)
    }

    pub fn neighborhood(&self) -> u64 {
        self.level(1)
    }

    pub fn full_class(&self) -> u64 {
        self.classes[31]
    }

    /// Hole positions adjacent to `x`, as a class key.
    pub fn key_of(&self, g: &Graph, x: usize) -> usize {
        (0..5).filter(|&p| g.has_edge(x, self.hole[p])).fold(0, |k, p| k | 1 << p)
    }

    pub fn nonempty_classes(&self) -> Vec<(usize, u64)> {
        (1..32)
            .filter(|&k| self.classes[k] != 0)
            .map(|k| (k, self.classes[k]))
            .collect()
    }

    /// The five cliques covering N(C) minus the full class and the
    /// consecutive-triple classes: S_i misses v_i.
    pub fn s_partition(&self) -> [u64; 5] {
        [
            self.class(&[2, 5]) | self.class(&[2, 3, 5]) | self.class(&[2, 4, 5]) | self.class(&[2, 3, 4, 5]),
            self.class(&[1, 3]) | self.class(&[1, 3, 4]) | self.class(&[1, 3, 5]) | self.class(&[1, 3, 4, 5]),
            self.class(&[2, 4]) | self.class(&[1, 2, 4, 5]),
            self.class(&[3, 5]) | self.class(&[1, 2, 3, 5]),
            self.class(&[1, 4]) | self.class(&[1, 2, 4]) | self.class(&[1, 2, 3, 4]),
        ]
    }

    /// Union of the consecutive-triple classes N_{i,i+1,i+2}.
    pub fn consecutive_triples(&self) -> u64 {
        (1..=5).fold(0, |m, i| m | self.class(&[i, i + 1, i + 2]))
    }
}

pub fn find_five_hole(g: &Graph) -> Option<[usize; 5]> {
    patterns::find_induced_cycle(g, g.all(), 5).map(|c| [c[0], c[1], c[2], c[3], c[4]])
}

pub fn is_induced_five_hole(g: &Graph, hole: &[usize; 5]) -> bool {
    let mask = hole.iter().fold(0u64, |m, &v| m | 1u64.checked_shl(v as u32).unwrap_or(0));
    if hole.iter().any(|&v| v >= g.n()) || mask.count_ones() != 5 {
        return false;
    }
    (0..5).all(|p| {
        (0..5).filter(|&q| q != p).all(|q| {
            let consecutive = (p + 1) % 5 == q || (q + 1) % 5 == p;
            g.has_edge(hole[p], hole[q]) == consecutive
        })
    })
}

pub fn decompose_five_hole(g: &Graph, hole: [usize; 5]) -> Result<FiveHoleDecomposition> {
    if !is_induced_five_hole(g, &hole) {
        return Err(Error::Precondition(format!(
            "{hole:?} is not an induced 5-cycle in cyclic order"
        )));
    }
    let hmask = hole.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut classes = [0u64; 32];
    let mut levels: Vec<u64> = Vec::new();
    let mut unreachable = 0;
    for (v, d) in g.distances_from_mask(hmask).into_iter().enumerate() {
        match d {
            None => unreachable |= 1 << v,
            Some(0) => {}
            Some(d) => {
                if levels.len() < d {
                    levels.resize(d, 0);
                }
                levels[d - 1] |= 1 << v;
            }
        }
    }
    for x in Bits(levels.first().copied().unwrap_or(0)) {
        let key = (0..5).filter(|&p| g.has_edge(x, hole[p])).fold(0, |k, p| k | 1 << p);
        classes[key] |= 1 << x;
    }
    Ok(FiveHoleDecomposition {
        hole,
        classes,
        levels,
        unreachable,
    })
}

/// All induced 5-holes, one cyclic order each.
pub fn five_holes(g: &Graph) -> Vec<[usize; 5]> {
    patterns::induced_cycles(g, 5)
        .into_iter()
        .map(|c| [c[0], c[1], c[2], c[3], c[4]])
        .collect()
}

fn fmt_set(mask: u64) -> String {
    format!("{:?}", Bits(mask).collect::<Vec<_>>())
}

/// Neighborhood facts every P5-free graph has around a 5-hole.
pub fn check_p5_hole_lemma(g: &Graph, dec: &FiveHoleDecomposition) -> Vec<String> {
    let mut out = Vec::new();
    let hole = dec.hole;
    let n2 = dec.level(2);
    let n3 = dec.level(3);
    for i in 1..=5 {
        for t in [vec![i], vec![i, i + 1]] {
            let c = dec.class(&t);
            if c != 0 {
                out.push(format!(
                    "hole {hole:?}: class {} is nonempty: {}",
                    class_name(class_key(&t)),
                    fmt_set(c)
                ));
            }
        }
        let near = dec.class(&[i, i + 2]) | dec.class(&[i, i + 1, i + 2]);
        if !g.is_anticomplete_to_mask(near, n2) {
            out.push(format!(
                "hole {hole:?}: classes {} and {} are not anticomplete to the second neighborhood",
                class_name(class_key(&[i, i + 2])),
                class_name(class_key(&[i, i + 1, i + 2]))
            ));
        }
    }
    for x in Bits(dec.neighborhood()) {
        if g.level_mask(1 << x, 2) & n3 != 0 && dec.full_class() >> x & 1 == 0 {
            out.push(format!(
                "hole {hole:?}: vertex {x} reaches the third neighborhood at distance 2 but sees only {}",
                class_name(dec.key_of(g, x))
            ));
        }
    }
    let comps = g.components_mask(n3);
    for x in Bits(n2) {
        for &b in &comps {
            let seen = g.nbrs(x) & b;
            if seen != 0 && seen != b {
                out.push(format!(
                    "hole {hole:?}: vertex {x} is mixed on third-neighborhood component {}",
                    fmt_set(b)
                ));
            }
        }
    }
    if dec.unreachable == 0 && dec.levels.len() > 3 {
        out.push(format!(
            "hole {hole:?}: vertices at distance 4 or more: {}",
            fmt_set(dec.level(4))
        ));
    }
    out
}

/// True iff `u, v` is a bad pair: for some `i`, one lies in N_{i,i+1,i+3}
/// and the other in N_{i,i+1,i+2,i+4}.
pub fn is_bad_pair(g: &Graph, dec: &FiveHoleDecomposition, u: usize, v: usize) -> Result<bool> {
    let nc = dec.neighborhood();
    if u >= g.n() || v >= g.n() || u == v || nc >> u & 1 == 0 || nc >> v & 1 == 0 {
        return Err(Error::Precondition(format!(
            "bad pairs are two distinct hole neighbors; got {u} and {v}"
        )));
    }
    if g.has_edge(u, v) {
        return Err(Error::Precondition(format!("{u} and {v} are adjacent")));
    }
    Ok(bad_pair_unchecked(dec, u, v))
}

fn bad_pair_unchecked(dec: &FiveHoleDecomposition, u: usize, v: usize) -> bool {
    (1..=5).any(|i| {
        let a = dec.class(&[i, i + 1, i + 3]);
        let b = dec.class(&[i, i + 1, i + 2, i + 4]);
        (a >> u & 1 == 1 && b >> v & 1 == 1) || (a >> v & 1 == 1 && b >> u & 1 == 1)
    })
}

/// Neighborhood facts of a (P5, K2,3)-free graph around a 5-hole.
pub fn check_k23_hole_lemma(g: &Graph, dec: &FiveHoleDecomposition) -> Vec<String> {
    let mut out = Vec::new();
    let hole = dec.hole;
    let nc = dec.neighborhood();
    let n2 = dec.level(2);
    let omega = invariants::clique_number(g);
    // two vertices seeing both ends of a hole path of length 2 but not its
    // middle are adjacent
    for u in Bits(nc) {
        for v in Bits(nc & !bits::full(u + 1)) {
            if g.has_edge(u, v) {
                continue;
            }
            for i in 1..=5 {
                let (a, m, b) = (dec.v(i), dec.v(i + 1), dec.v(i + 2));
                let both = g.nbrs(u) & g.nbrs(v);
                if both >> a & 1 == 1 && both >> b & 1 == 1 && !g.has_edge(u, m) && !g.has_edge(v, m) {
                    out.push(format!(
                        "hole {hole:?}: non-adjacent {u}, {v} share {a}, {b} and both miss {m}"
                    ));
                }
            }
            if !bad_pair_unchecked(dec, u, v) {
                let common = g.nbrs(u) & g.nbrs(v) & n2;
                if common != 0 {
                    out.push(format!(
                        "hole {hole:?}: non-adjacent {u}, {v} are not a bad pair but share second-neighborhood vertices {}",
                        fmt_set(common)
                    ));
                }
            }
        }
    }
    for i in 1..=5 {
        for t in [vec![i, i + 2], vec![i, i + 1, i + 3], vec![i, i + 1, i + 2, i + 3]] {
            let c = dec.class(&t);
            if !g.is_clique_mask(c) {
                out.push(format!(
                    "hole {hole:?}: class {} is not a clique",
                    class_name(class_key(&t))
                ));
            }
        }
        let tri = dec.class(&[i, i + 1, i + 2]);
        if invariants::independence_number_mask(g, tri) > 2 {
            out.push(format!(
                "hole {hole:?}: class {} has three independent vertices",
                class_name(class_key(&[i, i + 1, i + 2]))
            ));
        }
        let next = dec.class(&[i + 1, i + 2, i + 3]);
        if !g.is_complete_to_mask(tri, next) {
            out.push(format!(
                "hole {hole:?}: classes {} and {} are not complete to each other",
                class_name(class_key(&[i, i + 1, i + 2])),
                class_name(class_key(&[i + 1, i + 2, i + 3]))
            ));
        }
    }
    if invariants::independence_number_mask(g, dec.full_class()) > 2 {
        out.push(format!("hole {hole:?}: the full class has three independent vertices"));
    }
    let s = dec.s_partition();
    let rest = nc & !dec.full_class() & !dec.consecutive_triples();
    let union = s.iter().fold(0, |m, &x| m | x);
    if union != rest || s.iter().map(|x| x.count_ones()).sum::<u32>() != rest.count_ones() {
        out.push(format!(
            "hole {hole:?}: the five cliques do not partition {}",
            fmt_set(rest)
        ));
    }
    for (j, &si) in s.iter().enumerate() {
        let vi = dec.hole[j];
        if !g.is_clique_mask(si) {
            out.push(format!("hole {hole:?}: S{} = {} is not a clique", j + 1, fmt_set(si)));
        }
        if si.count_ones() as usize + 1 > omega {
            out.push(format!("hole {hole:?}: S{} has more than ω-1 vertices", j + 1));
        }
        if g.nbrs(vi) & si != 0 {
            out.push(format!("hole {hole:?}: v{} has neighbors in S{}", j + 1, j + 1));
        }
    }
    out
}

/// Second-neighborhood facts of a (P5, K2,3)-free graph without clique
/// cutsets around a 5-hole.
pub fn check_k23_cutset_lemma(g: &Graph, dec: &FiveHoleDecomposition) -> Vec<String> {
    let mut out = Vec::new();
    let hole = dec.hole;
    let omega = invariants::clique_number(g);
    if dec.level(3) != 0 {
        out.push(format!(
            "hole {hole:?}: third neighborhood is nonempty: {}",
            fmt_set(dec.level(3))
        ));
    }
    let nc = dec.neighborhood();
    for b in g.components_mask(dec.level(2)) {
        if invariants::independence_number_mask(g, b) > 2 {
            out.push(format!(
                "hole {hole:?}: second-neighborhood component {} has three independent vertices",
                fmt_set(b)
            ));
        }
        if invariants::clique_number_mask(g, b) == omega {
            let touching = g.nbrs_of_mask(b) & nc;
            if touching & !dec.full_class() != 0 {
                out.push(format!(
                    "hole {hole:?}: component {} of full clique number touches {} outside the full class",
                    fmt_set(b),
                    fmt_set(touching & !dec.full_class())
                ));
            }
        }
    }
    out
}

/// Splits N²(C) into two triangle-free parts following the constructive
/// argument: per component, either one neighbor dominates it, or two
/// non-adjacent hole neighbors `u, v` see it and the split is
/// `(N(u), rest)`.
pub fn split_second_neighborhood(g: &Graph, dec: &FiveHoleDecomposition) -> Result<(u64, u64)> {
    let nc = dec.neighborhood();
    let mut first = 0;
    let mut second = 0;
    let k3 = Pattern::by_name("K3")?.graph;
    let triangle_free = |m: u64| patterns::find_induced_within(g, m, &k3).is_none();
    for t in g.components_mask(dec.level(2)) {
        let seers: Vec<usize> = Bits(nc).filter(|&x| g.nbrs(x) & t != 0).collect();
        if seers.iter().any(|&x| t & !g.nbrs(x) == 0) {
            if !triangle_free(t) {
                return Err(Error::Structural(format!(
                    "dominated second-neighborhood component {} has a triangle",
                    fmt_set(t)
                )));
            }
            first |= t;
            continue;
        }
        let mut found = None;
        'pairs: for (a, &u) in seers.iter().enumerate() {
            for &v in &seers[a + 1..] {
                if g.has_edge(u, v) {
                    continue;
                }
                let part = g.nbrs(u) & t;
                if triangle_free(part) && triangle_free(t & !part) {
                    found = Some(part);
                    break 'pairs;
                }
            }
        }
        let part = found.ok_or_else(|| {
            Error::Structural(format!(
                "no two-part triangle-free split for second-neighborhood component {}",
                fmt_set(t)
            ))
        })?;
        first |= part;
        second |= t & !part;
    }
    Ok((first, second))
}

/// Neighborhood facts of a (P5, K1+(K1∪K3))-free graph without clique
/// cutsets around a 5-hole.
pub fn check_k1k1k3_hole_lemma(g: &Graph, dec: &FiveHoleDecomposition) -> Vec<String> {
    let mut out = Vec::new();
    let hole = dec.hole;
    let k1k3 = Pattern::by_name("K1uK3").expect("catalog").graph;
    let k3 = Pattern::by_name("K3").expect("catalog").graph;
    let nc = dec.neighborhood();
    for i in 1..=5 {
        let vi = dec.v(i);
        if let Some(e) = patterns::find_induced_within(g, g.nbrs(vi), &k1k3) {
            out.push(format!("hole {hole:?}: N(v{i}) contains K1uK3 at {:?}", e.map));
        }
        let pair = dec.class(&[i, i + 2]);
        if let Some(e) = patterns::find_induced_within(g, pair, &k3) {
            out.push(format!(
                "hole {hole:?}: class {} contains a triangle at {:?}",
                class_name(class_key(&[i, i + 2])),
                e.map
            ));
        }
        let group = dec.class(&[i, i + 1, i + 2])
            | dec.class(&[i, i + 1, i + 3])
            | dec.class(&[i, i + 1, i + 2, i + 3]);
        if !g.is_independent_mask(group) {
            out.push(format!(
                "hole {hole:?}: the group of classes starting at {i} is not independent: {}",
                fmt_set(group)
            ));
        }
    }
    for t in g.components_mask(dec.level(2)) {
        let seers = Bits(nc).filter(|&x| g.nbrs(x) & t != 0).fold(0u64, |m, x| m | 1 << x);
        if Bits(nc).any(|x| t & !g.nbrs(x) == 0) {
            continue;
        }
        let has_pair = Bits(seers).any(|u| seers & !g.nbrs(u) & !(1 << u) != 0);
        if !has_pair {
            out.push(format!(
                "hole {hole:?}: undominated component {} is seen only by a clique of hole neighbors",
                fmt_set(t)
            ));
        }
    }
    out
}

/// The two-part split of N²(C) and the triangle-freeness of N³(C).
pub fn check_k1k1k3_second_neighborhood(g: &Graph, dec: &FiveHoleDecomposition) -> Vec<String> {
    let mut out = Vec::new();
    let hole = dec.hole;
    let k3 = Pattern::by_name("K3").expect("catalog").graph;
    if let Some(e) = patterns::find_induced_within(g, dec.level(3), &k3) {
        out.push(format!("hole {hole:?}: third neighborhood has a triangle at {:?}", e.map));
    }
    if let Err(e) = split_second_neighborhood(g, dec) {
        out.push(format!("hole {hole:?}: {e}"));
    }
    out
}

/// An odd antihole `A` and its neighborhood: the vertices complete to `A`,
/// the rest of N(A) sorted into the classes `T_i`, and N²(A).
#[derive(Clone, Debug)]
pub struct AntiholeDecomposition {
    /// Cyclic order with consecutive vertices non-adjacent.
    pub antihole: Vec<usize>,
    pub complete: u64,
    pub partial: u64,
    /// `t_classes[i]`: partial vertices missing `v_i`, seeing `v_{i+1}` and
    /// `v_{i+3}` (0-based here), each claimed by the first matching `i`.
    pub t_classes: Vec<u64>,
    pub unassigned: u64,
    pub second: u64,
}

impl AntiholeDecomposition {
    pub fn mask(&self) -> u64 {
        self.antihole.iter().fold(0, |m, &v| m | 1 << v)
    }
}

pub fn decompose_antihole(g: &Graph, antihole: &[usize]) -> Result<AntiholeDecomposition> {
    let h = antihole.len();
    let mask = antihole.iter().fold(0u64, |m, &v| m | 1u64.checked_shl(v as u32).unwrap_or(0));
    let ok = h >= 5
        && h % 2 == 1
        && antihole.iter().all(|&v| v < g.n())
        && mask.count_ones() as usize == h
        && (0..h).all(|p| {
            (0..h).filter(|&q| q != p).all(|q| {
                let consecutive = (p + 1) % h == q || (q + 1) % h == p;
                g.has_edge(antihole[p], antihole[q]) != consecutive
            })
        });
    if !ok {
        return Err(Error::Precondition(format!(
            "{antihole:?} is not an odd antihole in cyclic order"
        )));
    }
    let nbhd = g.nbrs_of_mask(mask) & !mask;
    let complete = Bits(nbhd).filter(|&x| mask & !g.nbrs(x) == 0).fold(0u64, |m, x| m | 1 << x);
    let partial = nbhd & !complete;
    let mut t_classes = vec![0u64; h];
    let mut unassigned = 0;
    for x in Bits(partial) {
        let at = |i: usize| g.has_edge(x, antihole[i % h]);
        match (0..h).find(|&i| !at(i) && at(i + 1) && at(i + 3)) {
            Some(i) => t_classes[i] |= 1 << x,
            None => unassigned |= 1 << x,
        }
    }
    Ok(AntiholeDecomposition {
        antihole: antihole.to_vec(),
        complete,
        partial,
        t_classes,
        unassigned,
        second: g.level_mask(mask, 2),
    })
}

/// All induced odd antiholes on at least 7 vertices, one cyclic order each.
pub fn long_odd_antiholes(g: &Graph) -> Vec<Vec<usize>> {
    let co = g.complement();
    let mut out = Vec::new();
    let mut len = 7;
    while len <= g.n() {
        out.extend(patterns::induced_cycles(&co, len));
        len += 2;
    }
    out
}

/// Antihole facts of a (P5, C5, K1+(K1∪K3))-free graph.
pub fn check_antihole_lemma(g: &Graph, dec: &AntiholeDecomposition) -> Vec<String> {
    let mut out = Vec::new();
    let a = &dec.antihole;
    let k1k3 = Pattern::by_name("K1uK3").expect("catalog").graph;
    if let Some(e) = patterns::find_induced_within(g, dec.complete, &k1k3) {
        out.push(format!(
            "antihole {a:?}: vertices complete to it contain K1uK3 at {:?}",
            e.map
        ));
    }
    for (i, &t) in dec.t_classes.iter().enumerate() {
        if !g.is_independent_mask(t) {
            out.push(format!("antihole {a:?}: class T{} = {} is not independent", i + 1, fmt_set(t)));
        }
    }
    if dec.unassigned != 0 {
        out.push(format!(
            "antihole {a:?}: partial neighbors {} fit no class",
            fmt_set(dec.unassigned)
        ));
    }
    if dec.second != 0 {
        out.push(format!(
            "antihole {a:?}: second neighborhood is nonempty: {}",
            fmt_set(dec.second)
        ));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutsetKind {
    CliqueCutset,
    MinimalCutset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutsetReport {
    pub cutset: VertexSet,
    pub kind: CutsetKind,
    pub side_components: Vec<VertexSet>,
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Visits the `k`-cliques of `G[within]` in lexicographic order until `visit`
/// returns false.
pub fn for_each_clique_of_size(g: &Graph, within: u64, k: usize, mut visit: impl FnMut(u64) -> bool) {
    fn rec(g: &Graph, cand: u64, clique: u64, left: usize, visit: &mut impl FnMut(u64) -> bool) -> bool {
        if left == 0 {
            return visit(clique);
        }
        if (cand.count_ones() as usize) < left {
            return true;
        }
        for v in Bits(cand) {
            let next = cand & g.nbrs(v) & !bits::full(v + 1);
            if !rec(g, next, clique | 1 << v, left - 1, visit) {
                return false;
            }
        }
        true
    }
    rec(g, within & g.all(), 0, k, &mut visit);
}

fn cutset_report(g: &Graph, s: u64, kind: CutsetKind) -> CutsetReport {
    CutsetReport {
        cutset: g.set_from_mask(s).unwrap(),
        kind,
        side_components: g
            .components_mask(g.all() & !s)
            .into_iter()
            .map(|c| g.set_from_mask(c).unwrap())
            .collect(),
    }
}

/// Smallest, then lexicographically least, clique whose removal disconnects
/// the graph.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<CutsetReport>> {
    require_connected(g)?;
    Ok(find_clique_cutset_mask(g).map(|s| cutset_report(g, s, CutsetKind::CliqueCutset)))
}

pub(crate) fn find_clique_cutset_mask(g: &Graph) -> Option<u64> {
    let all = g.all();
    let mut found = None;
    for k in 1..g.n().saturating_sub(1) {
        for_each_clique_of_size(g, all, k, |s| {
            if !g.is_connected_mask(all & !s) {
                found = Some(s);
                false
            } else {
                true
            }
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// `S` is an inclusion-minimal cutset iff `G - S` has at least two
/// components and every vertex of `S` has a neighbor in each of them.
pub fn is_minimal_cutset_mask(g: &Graph, s: u64) -> bool {
    let comps = g.components_mask(g.all() & !s);
    comps.len() >= 2 && Bits(s).all(|x| comps.iter().all(|&c| g.nbrs(x) & c != 0))
}

/// Every inclusion-minimal cutset, sorted by size then lexicographically.
pub fn minimal_cutsets(g: &Graph) -> Result<Vec<CutsetReport>> {
    require_connected(g)?;
    Ok(minimal_cutset_masks(g)
        .into_iter()
        .map(|s| cutset_report(g, s, CutsetKind::MinimalCutset))
        .collect())
}

pub const EXHAUSTIVE_CUTSET_LIMIT: usize = 12;

pub fn minimal_cutset_masks(g: &Graph) -> Vec<u64> {
    let mut out = if g.n() <= EXHAUSTIVE_CUTSET_LIMIT {
        minimal_cutsets_exhaustive(g)
    } else {
        minimal_separators(g)
            .into_iter()
            .filter(|&s| is_minimal_cutset_mask(g, s))
            .collect()
    };
    out.sort_by(|&a, &b| bits::size_lex_cmp(a, b));
    out
}

pub fn minimal_cutsets_exhaustive(g: &Graph) -> Vec<u64> {
    (1..g.all()).filter(|&s| is_minimal_cutset_mask(g, s)).collect()
}

/// All minimal vertex separators, by closing the separators around single
/// vertices under the "separator plus one neighborhood" step.
pub fn minimal_separators(g: &Graph) -> Vec<u64> {
    let all = g.all();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut queue: Vec<u64> = Vec::new();
    let mut push = |s: u64, queue: &mut Vec<u64>| {
        if s != 0 && seen.insert(s) {
            queue.push(s);
        }
    };
    for v in 0..g.n() {
        let closed = g.nbrs(v) | 1 << v;
        for c in g.components_mask(all & !closed) {
            push(g.nbrs_of_mask(c) & !c, &mut queue);
        }
    }
    while let Some(s) = queue.pop() {
        for x in Bits(s) {
            let removed = s | g.nbrs(x);
            for c in g.components_mask(all & !removed) {
                push(g.nbrs_of_mask(c) & !c, &mut queue);
            }
        }
    }
    seen.into_iter().collect()
}

/// Smallest, then lexicographically least, homogeneous set.
///
/// Every homogeneous set contains the closure of any pair inside it (the
/// least homogeneous superset of the pair), so the smallest ones are
/// closures of pairs.
pub fn find_homogeneous_set(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let mut best: Option<u64> = None;
    for a in 0..n {
        for b in a + 1..n {
            let x = pair_closure(g, a, b);
            if x.count_ones() as usize >= n {
                continue;
            }
            best = match best {
                Some(cur) if bits::size_lex_cmp(cur, x) != Ordering::Greater => Some(cur),
                _ => Some(x),
            };
        }
    }
    best.map(|m| g.set_from_mask(m).unwrap())
}

fn pair_closure(g: &Graph, a: usize, b: usize) -> u64 {
    let all = g.all();
    let mut x = 1u64 << a | 1 << b;
    loop {
        let splitter = Bits(all & !x).find(|&z| {
            let seen = g.nbrs(z) & x;
            seen != 0 && seen != x
        });
        match splitter {
            Some(z) => x |= 1 << z,
            None => return x,
        }
    }
}

pub fn is_homogeneous_mask(g: &Graph, x: u64) -> bool {
    let size = x.count_ones() as usize;
    size >= 2
        && size < g.n()
        && Bits(g.all() & !x).all(|z| {
            let seen = g.nbrs(z) & x;
            seen == 0 || seen == x
        })
}

pub const HOMOGENEOUS_SCAN_LIMIT: usize = 16;

/// Exhaustive scan over all subsets; the reference for
/// [`find_homogeneous_set`].
pub fn find_homogeneous_set_exhaustive(g: &Graph) -> Result<Option<VertexSet>> {
    if g.n() > HOMOGENEOUS_SCAN_LIMIT {
        return Err(Error::Capacity {
            what: "homogeneous set scan",
            limit: HOMOGENEOUS_SCAN_LIMIT,
            got: g.n(),
        });
    }
    for k in 2..g.n() {
        if let Some(x) = bits::subsets_of_size(g.all(), k)
            .into_iter()
            .find(|&x| is_homogeneous_mask(g, x))
        {
            return Ok(Some(g.set_from_mask(x).unwrap()));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DominatorKind {
    Clique,
    P3,
}

/// A dominating clique (smallest, then lexicographically least) or, failing
/// that, the lexicographically least dominating induced P3.
pub fn find_dominating_clique_or_p3(g: &Graph) -> Result<(DominatorKind, VertexSet)> {
    require_connected(g)?;
    if g.n() == 0 {
        return Err(Error::Precondition("the empty graph has no dominating set".into()));
    }
    let (kind, mask) = match dominating_mask(g) {
        Some(found) => found,
        None => {
            let p5 = Pattern::by_name("P5")?;
            patterns::require_free(g, &[p5])?;
            return Err(Error::Structural(
                "connected P5-free graph without a dominating clique or P3".into(),
            ));
        }
    };
    Ok((kind, g.set_from_mask(mask).unwrap()))
}

pub(crate) fn dominating_mask(g: &Graph) -> Option<(DominatorKind, u64)> {
    let all = g.all();
    for k in 1..=g.n() {
        let mut found = None;
        let mut any = false;
        for_each_clique_of_size(g, all, k, |s| {
            any = true;
            if g.dominates_mask(s) {
                found = Some(s);
                false
            } else {
                true
            }
        });
        if let Some(s) = found {
            return Some((DominatorKind::Clique, s));
        }
        if !any {
            break;
        }
    }
    for triple in bits::subsets_of_size(all, 3) {
        let edges: u32 = Bits(triple).map(|v| (g.nbrs(v) & triple).count_ones()).sum::<u32>() / 2;
        if edges == 2 && g.dominates_mask(triple) {
            return Some((DominatorKind::P3, triple));
        }
    }
    None
}

/// Minimal-cutset facts of a connected (P5, C5, K2,3)-free graph without
/// clique cutsets.
pub fn check_c5_cutset_lemma(g: &Graph) -> Result<Vec<String>> {
    require_connected(g)?;
    let mut out = Vec::new();
    for s in minimal_cutset_masks(g) {
        let tag = fmt_set(s);
        let comps = g.components_mask(g.all() & !s);
        if comps.len() != 2 {
            out.push(format!("cutset {tag}: {} components", comps.len()));
        }
        for s1 in Bits(s) {
            for s2 in Bits(s & !bits::full(s1 + 1) & !g.nbrs(s1)) {
                for &c in &comps {
                    if let Some(p) = long_induced_path(g, s1, s2, c) {
                        out.push(format!(
                            "cutset {tag}: induced path {p:?} between {s1} and {s2} has length {}",
                            p.len() - 1
                        ));
                    }
                }
            }
        }
        for x in Bits(s) {
            if !comps.iter().any(|&c| c & !g.nbrs(x) == 0) {
                out.push(format!("cutset {tag}: vertex {x} is complete to no component"));
            }
        }
        let alpha = invariants::independence_number_mask(g, s);
        if alpha != 2 {
            out.push(format!("cutset {tag}: independence number {alpha}"));
        }
    }
    Ok(out)
}

/// An induced `a`-`b` path of length at least 3 with interior in `within`.
fn long_induced_path(g: &Graph, a: usize, b: usize, within: u64) -> Option<Vec<usize>> {
    fn rec(g: &Graph, b: usize, within: u64, path: &mut Vec<usize>, banned: u64) -> Option<Vec<usize>> {
        let last = *path.last().unwrap();
        for w in Bits(g.nbrs(last) & within & !banned) {
            path.push(w);
            if g.has_edge(w, b) {
                if path.len() >= 3 {
                    let mut p = path.clone();
                    p.push(b);
                    return Some(p);
                }
            } else {
                let next_banned = banned | g.nbrs(last) | 1 << last;
                if let Some(p) = rec(g, b, within, path, next_banned) {
                    return Some(p);
                }
            }
            path.pop();
        }
        None
    }
    let mut path = vec![a];
    rec(g, b, within, &mut path, 1 << a)
}

/// Shape of a connected (P5, K3)-free graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "shape")]
pub enum SumnerShape {
    /// Vertices of one side; the rest of the component is the other side.
    Bipartite { side: VertexSet },
    /// Five independent classes in cyclic order, consecutive classes
    /// complete to each other and the others anticomplete.
    InflatedFiveHole { classes: [VertexSet; 5] },
}

/// Certifies the shape of the component `component` of a (P5, K3)-free
/// graph.
pub fn sumner_shape(g: &Graph, component: u64) -> Result<SumnerShape> {
    if let Some(side) = g.two_coloring_mask(component) {
        return Ok(SumnerShape::Bipartite {
            side: g.set_from_mask(side).unwrap(),
        });
    }
    let hole = patterns::find_induced_cycle(g, component, 5).ok_or_else(|| {
        Error::Structural(format!(
            "non-bipartite component {} has no 5-hole",
            fmt_set(component)
        ))
    })?;
    let mut classes = [0u64; 5];
    for x in Bits(component) {
        let seen: Vec<usize> = (0..5).filter(|&p| g.has_edge(x, hole[p])).collect();
        let p = (0..5).find(|&p| seen == [(p + 4) % 5, (p + 1) % 5] || seen == [(p + 1) % 5, (p + 4) % 5]);
        match p {
            Some(p) => classes[p] |= 1 << x,
            None => {
                return Err(Error::Structural(format!(
                    "vertex {x} sees hole positions {seen:?} of {hole:?}"
                )))
            }
        }
    }
    for p in 0..5 {
        let ok = g.is_independent_mask(classes[p])
            && g.is_complete_to_mask(classes[p], classes[(p + 1) % 5])
            && g.is_anticomplete_to_mask(classes[p], classes[(p + 2) % 5]);
        if !ok {
            return Err(Error::Structural(format!(
                "component {} is not an inflated 5-hole around {hole:?}",
                fmt_set(component)
            )));
        }
    }
    Ok(SumnerShape::InflatedFiveHole {
        classes: classes.map(|c| g.set_from_mask(c).unwrap()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{complete, complete_bipartite, cycle, path};

    fn c5_plus(extra: &[&[usize]]) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for (j, nb) in extra.iter().enumerate() {
            for &u in nb.iter() {
                e.push((5 + j, u));
            }
        }
        Graph::from_edge_list(5 + extra.len(), &e).unwrap()
    }

    #[test]
    fn five_hole_search() {
        assert_eq!(find_five_hole(&cycle(5)), Some([0, 1, 2, 3, 4]));
        let apex = c5_plus(&[&[0, 1, 2, 3, 4]]);
        assert_eq!(find_five_hole(&apex), Some([0, 1, 2, 3, 4]));
        assert_eq!(find_five_hole(&complete_bipartite(3, 3)), None);
    }

    #[test]
    fn classification() {
        let g = c5_plus(&[&[0, 2]]);
        let d = decompose_five_hole(&g, [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(d.class(&[1, 3]), 1 << 5);
        let g = c5_plus(&[&[0, 1, 2, 3, 4]]);
        let d = decompose_five_hole(&g, [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(d.full_class(), 1 << 5);
        let d = decompose_five_hole(&cycle(5), [0, 1, 2, 3, 4]).unwrap();
        assert!(d.nonempty_classes().is_empty() && d.levels.is_empty());
        assert!(decompose_five_hole(&cycle(5), [0, 2, 1, 3, 4]).is_err());
    }

    #[test]
    fn index_identities() {
        for k in 1..=5 {
            let l = k + 2;
            assert_eq!(class_key(&[k, k + 2]), class_key(&[l, l + 3]));
            assert_eq!(class_key(&[k, k + 2, k + 3]), class_key(&[l, l + 1, l + 3]));
        }
    }

    #[test]
    fn bad_pairs() {
        // u sees {1,2,4}, v sees {1,2,3,5}
        let g = c5_plus(&[&[0, 1, 3], &[0, 1, 2, 4]]);
        let d = decompose_five_hole(&g, [0, 1, 2, 3, 4]).unwrap();
        assert!(is_bad_pair(&g, &d, 5, 6).unwrap());
        let g = c5_plus(&[&[0, 2], &[0, 2]]);
        let d = decompose_five_hole(&g, [0, 1, 2, 3, 4]).unwrap();
        assert!(!is_bad_pair(&g, &d, 5, 6).unwrap());
        let g = c5_plus(&[&[0, 2], &[0, 2, 5]]);
        let d = decompose_five_hole(&g, [0, 1, 2, 3, 4]).unwrap();
        assert!(is_bad_pair(&g, &d, 5, 6).is_err());
    }

    #[test]
    fn s_partition_covers_the_listed_classes() {
        // one vertex in each nonempty class allowed for P5-free graphs,
        // minus the full class and the consecutive triples
        let mut keys = Vec::new();
        for i in 1..=5 {
            keys.push(vec![i, i + 2]);
            keys.push(vec![i, i + 1, i + 3]);
            keys.push(vec![i, i + 1, i + 2, i + 3]);
        }
        let nb: Vec<Vec<usize>> = keys
            .iter()
            .map(|t| t.iter().map(|&i| pos(i)).collect())
            .collect();
        let refs: Vec<&[usize]> = nb.iter().map(|v| v.as_slice()).collect();
        let g = c5_plus(&refs);
        let d = decompose_five_hole(&g, [0, 1, 2, 3, 4]).unwrap();
        let s = d.s_partition();
        let union = s.iter().fold(0, |m, &x| m | x);
        assert_eq!(union, d.neighborhood());
        assert_eq!(s.iter().map(|x| x.count_ones()).sum::<u32>(), 15);
        for (j, &si) in s.iter().enumerate() {
            assert_eq!(g.nbrs(j) & si, 0);
        }
    }

    #[test]
    fn cutsets() {
        let p3 = path(3);
        let r = find_clique_cutset(&p3).unwrap().unwrap();
        assert_eq!(r.cutset.to_vec(), vec![1]);
        assert_eq!(r.side_components.len(), 2);
        assert!(find_clique_cutset(&cycle(5)).unwrap().is_none());
        let m = minimal_cutsets(&cycle(5)).unwrap();
        let sets: Vec<Vec<usize>> = m.iter().map(|r| r.cutset.to_vec()).collect();
        assert_eq!(
            sets,
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]
        );
        assert!(minimal_cutsets(&complete(4)).unwrap().is_empty());
        assert!(find_clique_cutset(&complete(4)).unwrap().is_none());
        let two = Graph::disjoint_union(&path(2), &path(2)).unwrap();
        assert!(matches!(find_clique_cutset(&two), Err(Error::Disconnected)));
    }

    #[test]
    fn separators_agree_with_exhaustive_scan() {
        let samples = [
            cycle(7),
            path(6),
            cycle(6).complement(),
            c5_plus(&[&[0, 2], &[1, 3, 4], &[5, 6]]),
            complete_bipartite(3, 4),
        ];
        for g in &samples {
            let mut fast: Vec<u64> = minimal_separators(g)
                .into_iter()
                .filter(|&s| is_minimal_cutset_mask(g, s))
                .collect();
            fast.sort_by(|&a, &b| bits::size_lex_cmp(a, b));
            assert_eq!(fast, minimal_cutset_masks(g), "{g:?}");
        }
    }

    #[test]
    fn homogeneous_sets() {
        let k23 = complete_bipartite(2, 3);
        assert_eq!(find_homogeneous_set(&k23).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(find_homogeneous_set(&path(4)), None);
        assert_eq!(find_homogeneous_set_exhaustive(&path(4)).unwrap(), None);
        assert_eq!(find_homogeneous_set(&cycle(5)), None);
        assert_eq!(find_homogeneous_set_exhaustive(&cycle(5)).unwrap(), None);
        for g in [k23, cycle(4), c5_plus(&[&[0, 2], &[0, 2]])] {
            assert_eq!(
                find_homogeneous_set(&g),
                find_homogeneous_set_exhaustive(&g).unwrap()
            );
        }
    }

    #[test]
    fn dominators() {
        let (k, s) = find_dominating_clique_or_p3(&complete(1)).unwrap();
        assert_eq!((k, s.to_vec()), (DominatorKind::Clique, vec![0]));
        let (k, s) = find_dominating_clique_or_p3(&cycle(5)).unwrap();
        assert_eq!((k, s.to_vec()), (DominatorKind::P3, vec![0, 1, 2]));
        // exhaustive: no clique dominates C5
        for m in 1..32u64 {
            if cycle(5).is_clique_mask(m) {
                assert!(!cycle(5).dominates_mask(m));
            }
        }
        let (k, s) = find_dominating_clique_or_p3(&complete_bipartite(1, 3)).unwrap();
        assert_eq!((k, s.to_vec()), (DominatorKind::Clique, vec![0]));
        // P6 has neither
        assert!(find_dominating_clique_or_p3(&path(7)).is_err());
    }

    #[test]
    fn induced_paths_through_a_side() {
        let g = cycle(6);
        assert!(long_induced_path(&g, 0, 3, 0b10110).is_some());
        assert!(long_induced_path(&g, 0, 2, 0b00010).is_none());
    }

    #[test]
    fn sumner_shapes() {
        let c5 = cycle(5);
        assert!(matches!(sumner_shape(&c5, c5.all()).unwrap(), SumnerShape::InflatedFiveHole { .. }));
        let c6 = cycle(6);
        assert!(matches!(sumner_shape(&c6, c6.all()).unwrap(), SumnerShape::Bipartite { .. }));
        // C5 with every vertex doubled
        let mut e = Vec::new();
        for i in 0..5 {
            let j = (i + 1) % 5;
            for a in [i, i + 5] {
                for b in [j, j + 5] {
                    e.push((a, b));
                }
            }
        }
        let g = Graph::from_edge_list(10, &e).unwrap();
        match sumner_shape(&g, g.all()).unwrap() {
            SumnerShape::InflatedFiveHole { classes } => {
                assert!(classes.iter().all(|c| c.len() == 2))
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn antihole_classes() {
        let g = cycle(7).complement();
        let a = patterns::find_odd_antihole_cycle(&g).unwrap();
        let d = decompose_antihole(&g, &a).unwrap();
        assert_eq!(d.mask(), g.all());
        assert_eq!(d.complete | d.partial | d.second, 0);
        assert!(check_antihole_lemma(&g, &d).is_empty());
        assert!(decompose_antihole(&cycle(7), &[0, 1, 2, 3, 4, 5, 6]).is_err());
    }
}
