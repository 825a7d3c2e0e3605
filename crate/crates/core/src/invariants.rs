//! Exact invariants: clique, independence and chromatic numbers, perfect
//! divisions and perfect divisibility.

use serde::Serialize;

use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns;

/// Subset tables are built over all `2^n` subsets.
pub const TABLE_LIMIT: usize = 20;
/// The divisibility DP enumerates `3^n` (subset, submask) pairs.
pub const DIVISIBILITY_LIMIT: usize = 16;

/// A proper vertex coloring. `colors[v] < k` for every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.into_iter().filter(|&b| b).count()
    }

    pub fn class_mask(&self, color: usize) -> u64 {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    /// Renumbers the used colors to `0..colors_used()`, keeping their order.
    pub fn compacted(&self) -> Coloring {
        let mut map = vec![usize::MAX; self.k];
        for &c in &self.colors {
            map[c] = 0;
        }
        let mut next = 0;
        for slot in map.iter_mut().filter(|s| **s == 0) {
            *slot = next;
            next += 1;
        }
        Coloring {
            colors: self.colors.iter().map(|&c| map[c]).collect(),
            k: next,
        }
    }
}

/// A split `(A, B)` of the vertices with `G[A]` perfect and
/// `ω(G[B]) < ω(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectDivision {
    pub a: VertexSet,
    pub b: VertexSet,
    pub omega_g: usize,
    pub omega_b: usize,
}

impl PerfectDivision {
    /// Re-checks the division with the hole search and the clique solver,
    /// independently of the subset tables that produced it.
    pub fn verify(&self, g: &Graph) -> bool {
        let all = g.all();
        self.a.universe() == g.n()
            && self.b.universe() == g.n()
            && self.a.mask() & self.b.mask() == 0
            && self.a.mask() | self.b.mask() == all
            && patterns::is_perfect(&g.induced_mask(self.a.mask()))
            && clique_number(g) == self.omega_g
            && clique_number_mask(g, self.b.mask()) == self.omega_b
            && self.omega_b < self.omega_g
    }
}

/// A maximum clique of `G[within]`, found by branch and bound with greedy
/// coloring bounds.
pub fn max_clique_mask(g: &Graph, within: u64) -> u64 {
    let mut best = 0u64;
    let mut best_size = 0u32;
    expand_clique(g, 0, 0, within & g.all(), &mut best, &mut best_size);
    best
}

fn expand_clique(g: &Graph, r: u64, r_size: u32, mut p: u64, best: &mut u64, best_size: &mut u32) {
    let mut order = [0u8; 64];
    let mut bound = [0u32; 64];
    let mut count = 0;
    let mut uncolored = p;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v) & !g.nbrs(v);
            uncolored &= !(1 << v);
            order[count] = v as u8;
            bound[count] = color;
            count += 1;
        }
    }
    for i in (0..count).rev() {
        if r_size + bound[i] <= *best_size {
            return;
        }
        let v = order[i] as usize;
        let np = p & g.nbrs(v);
        if np == 0 {
            if r_size + 1 > *best_size {
                *best = r | 1 << v;
                *best_size = r_size + 1;
            }
        } else {
            expand_clique(g, r | 1 << v, r_size + 1, np, best, best_size);
        }
        p &= !(1 << v);
    }
}

pub fn clique_number_mask(g: &Graph, within: u64) -> usize {
    max_clique_mask(g, within).count_ones() as usize
}

/// ω(G); ω of the empty graph is 0.
pub fn clique_number(g: &Graph) -> usize {
    clique_number_mask(g, g.all())
}

/// α(G) = ω(complement of G).
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

pub fn independence_number_mask(g: &Graph, within: u64) -> usize {
    let h = g.induced_mask(within);
    independence_number(&h)
}

/// Saturation-order greedy coloring (DSATUR).
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut forbidden = vec![0u64; n];
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (forbidden[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (!forbidden[v]).trailing_zeros() as usize;
        colors[v] = c;
        k = k.max(c + 1);
        for u in Bits(g.nbrs(v)) {
            forbidden[u] |= 1 << c;
        }
    }
    Coloring { colors, k }
}

/// Exact chromatic number with an optimal coloring.
///
/// Iterative deepening from the clique bound up to the DSATUR bound; each
/// round is a DSATUR-ordered backtracking search for a `k`-coloring.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    if n == 0 {
        return (0, Coloring { colors: vec![], k: 0 });
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.k;
    let clique = max_clique_mask(g, g.all());
    let lower = clique.count_ones() as usize;
    for k in lower..upper {
        if let Some(c) = k_coloring(g, k, clique) {
            return (k, c);
        }
    }
    (upper, greedy)
}

/// Searches for a proper coloring with at most `k` colors; `seed` must be a
/// clique of size at most `k` and gets colors `0..`.
pub fn k_coloring(g: &Graph, k: usize, seed: u64) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring { colors: vec![], k });
    }
    if k == 0 || seed.count_ones() as usize > k || k > 64 {
        return None;
    }
    let mut st = KColor {
        g,
        k,
        colors: vec![usize::MAX; n],
        classes: vec![0u64; k],
    };
    let mut used = 0;
    for v in Bits(seed) {
        st.colors[v] = used;
        st.classes[used] |= 1 << v;
        used += 1;
    }
    let remaining = g.all() & !seed;
    if st.search(remaining, used) {
        Some(Coloring { colors: st.colors, k })
    } else {
        None
    }
}

struct KColor<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    classes: Vec<u64>,
}

impl KColor<'_> {
    fn forbidden(&self, v: usize, used: usize) -> u64 {
        let nb = self.g.nbrs(v);
        (0..used)
            .filter(|&c| self.classes[c] & nb != 0)
            .fold(0, |m, c| m | 1 << c)
    }

    fn search(&mut self, remaining: u64, used: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        // most saturated vertex, ties by degree then index
        let mut pick = usize::MAX;
        let mut pick_key = (0u32, 0usize);
        let mut pick_forb = 0;
        for v in Bits(remaining) {
            let f = self.forbidden(v, used);
            let key = (f.count_ones(), self.g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
                pick_forb = f;
            }
        }
        let v = pick;
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if pick_forb >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            self.classes[c] |= 1 << v;
            let next_used = used.max(c + 1);
            if self.search(remaining & !(1 << v), next_used) {
                return true;
            }
            self.classes[c] &= !(1 << v);
            self.colors[v] = usize::MAX;
        }
        false
    }
}

/// Per-subset perfection flags and clique numbers for one graph.
pub struct SubsetTables {
    n: usize,
    perfect: Vec<bool>,
    omega: Vec<u8>,
}

impl SubsetTables {
    /// A subset is perfect iff all its one-vertex deletions are and it is not
    /// itself an odd hole or an odd antihole.
    pub fn build(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > TABLE_LIMIT {
            return Err(Error::Capacity {
                what: "subset tables",
                limit: TABLE_LIMIT,
                got: n,
            });
        }
        let size = 1usize << n;
        let mut perfect = vec![true; size];
        let mut omega = vec![0u8; size];
        for s in 1..size as u64 {
            let v = s.trailing_zeros() as usize;
            let rest = s & !(1 << v);
            omega[s as usize] =
                omega[rest as usize].max(1 + omega[(rest & g.nbrs(v)) as usize]);
            if s.count_ones() >= 5 {
                perfect[s as usize] = Bits(s).all(|u| perfect[(s & !(1 << u)) as usize])
                    && !patterns::is_odd_hole_or_antihole_mask(g, s);
            }
        }
        Ok(SubsetTables { n, perfect, omega })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_perfect(&self, mask: u64) -> bool {
        self.perfect[mask as usize]
    }

    pub fn omega(&self, mask: u64) -> usize {
        self.omega[mask as usize] as usize
    }

    /// First `A ⊆ s` giving a perfect division of `G[s]`: `A = s` when `G[s]`
    /// is perfect, otherwise by ascending size then lexicographic order.
    pub fn division_of(&self, s: u64) -> Option<u64> {
        if s == 0 {
            return None;
        }
        if self.is_perfect(s) {
            return Some(s);
        }
        let target = self.omega(s);
        (0..=s.count_ones() as usize).find_map(|size| {
            bits::subsets_of_size(s, size)
                .into_iter()
                .find(|&a| self.is_perfect(a) && self.omega(s & !a) < target)
        })
    }

    fn has_division(&self, s: u64) -> bool {
        if self.is_perfect(s) {
            return true;
        }
        let target = self.omega(s);
        // submasks of s, descending
        let mut a = s;
        loop {
            a = (a.wrapping_sub(1)) & s;
            if self.is_perfect(a) && self.omega(s & !a) < target {
                return true;
            }
            if a == 0 {
                return false;
            }
        }
    }
}

pub fn find_perfect_division(g: &Graph) -> Result<Option<PerfectDivision>> {
    let tables = SubsetTables::build(g)?;
    let all = g.all();
    Ok(tables.division_of(all).map(|a| PerfectDivision {
        a: g.set_from_mask(a).unwrap(),
        b: g.set_from_mask(all & !a).unwrap(),
        omega_g: tables.omega(all),
        omega_b: tables.omega(all & !a),
    }))
}

/// Smallest (as an integer mask) nonempty induced subgraph without a perfect
/// division, if any.
pub fn first_indivisible_subset(g: &Graph) -> Result<Option<u64>> {
    if g.n() > DIVISIBILITY_LIMIT {
        return Err(Error::Capacity {
            what: "perfect divisibility",
            limit: DIVISIBILITY_LIMIT,
            got: g.n(),
        });
    }
    let tables = SubsetTables::build(g)?;
    Ok((1..=g.all()).find(|&s| !tables.has_division(s)))
}

pub fn is_perfectly_divisible(g: &Graph) -> Result<bool> {
    Ok(first_indivisible_subset(g)?.is_none())
}

/// `C(ω+1, 2)`.
pub fn divisible_bound(omega: usize) -> usize {
    omega * (omega + 1) / 2
}

/// Colors a perfectly divisible graph by peeling perfect divisions: each
/// perfect part gets an exact coloring on a fresh palette and the recursion
/// continues on the part with smaller clique number.
pub fn chi_bound_divisible(g: &Graph) -> Result<(usize, Coloring)> {
    if let Some(bad) = first_indivisible_subset(g)? {
        return Err(Error::NotPerfectlyDivisible(bad));
    }
    let tables = SubsetTables::build(g)?;
    let mut colors = vec![0usize; g.n()];
    let mut offset = 0;
    let mut rest = g.all();
    while rest != 0 {
        let a = tables
            .division_of(rest)
            .ok_or(Error::NotPerfectlyDivisible(rest))?;
        let part = g.induced_mask(a);
        let (k, col) = chromatic_number(&part);
        if k != tables.omega(a) {
            return Err(Error::Structural(format!(
                "perfect part {a:#x} has chromatic number {k} but clique number {}",
                tables.omega(a)
            )));
        }
        for (i, v) in Bits(a).enumerate() {
            colors[v] = offset + col.colors[i];
        }
        offset += k;
        rest &= !a;
    }
    let bound = divisible_bound(tables.omega(g.all()));
    if offset > bound {
        return Err(Error::BoundViolation {
            used: offset,
            bound,
        });
    }
    Ok((offset, Coloring { colors, k: offset }))
}
