//! Independent reference computations. Nothing here calls the library's
//! algorithms: only `Graph` construction and adjacency rows are used.

#![allow(dead_code)]

use std::sync::OnceLock;

use chibind::enumerate;
use chibind::Graph;

pub fn rows(g: &Graph) -> Vec<u64> {
    g.rows().to_vec()
}

pub fn is_clique(rows: &[u64], mask: u64) -> bool {
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if mask & !(1 << v) & !rows[v] != 0 {
            return false;
        }
    }
    true
}

pub fn is_independent(rows: &[u64], mask: u64) -> bool {
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if rows[v] & mask != 0 {
            return false;
        }
    }
    true
}

/// Per-subset chromatic and clique numbers by dynamic programming over all
/// subsets: `chi[S] = 1 + min chi[S - I]` over independent `I` holding the
/// lowest vertex of `S`.
pub struct SubsetDp {
    pub chi: Vec<u8>,
    pub omega: Vec<u8>,
}

pub fn subset_dp(g: &Graph) -> SubsetDp {
    let n = g.n();
    assert!(n <= 12);
    let r = rows(g);
    let size = 1usize << n;
    let mut indep = vec![false; size];
    indep[0] = true;
    let mut omega = vec![0u8; size];
    for m in 1..size {
        let v = m.trailing_zeros() as usize;
        let rest = m & !(1 << v);
        indep[m] = indep[rest] && r[v] & rest as u64 == 0;
        omega[m] = omega[rest].max(1 + omega[rest & r[v] as usize]);
    }
    let mut chi = vec![0u8; size];
    for m in 1..size {
        let low = m & m.wrapping_neg();
        let rest = m & !low;
        let mut best = u8::MAX;
        // independent sets containing the lowest vertex
        let mut s = rest;
        loop {
            let i = s | low;
            if indep[i] {
                best = best.min(1 + chi[m & !i]);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
        chi[m] = best;
    }
    SubsetDp { chi, omega }
}

pub fn chi(g: &Graph) -> usize {
    subset_dp(g).chi[(1usize << g.n()) - 1] as usize
}

pub fn omega(g: &Graph) -> usize {
    subset_dp(g).omega[(1usize << g.n()) - 1] as usize
}

/// χ = ω on every induced subgraph.
pub fn is_perfect(g: &Graph) -> bool {
    let dp = subset_dp(g);
    dp.chi.iter().zip(&dp.omega).all(|(a, b)| a == b)
}

/// Definitional perfect divisibility from the subset tables of the oracle.
pub fn divisible_by_definition(g: &Graph) -> bool {
    let dp = subset_dp(g);
    let size = 1usize << g.n();
    let mut perfect = vec![true; size];
    for m in 1..size {
        perfect[m] = dp.chi[m] == dp.omega[m] && (0..g.n()).filter(|v| m >> v & 1 == 1).all(|v| perfect[m & !(1 << v)]);
    }
    (1..size).all(|m| {
        let mut a = m;
        loop {
            if perfect[a] && dp.omega[m & !a] < dp.omega[m] {
                return true;
            }
            if a == 0 {
                return false;
            }
            a = (a - 1) & m;
        }
    })
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

pub fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let r = rows(g);
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= r[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == g.n()
}

// ---------------------------------------------------------------------------
// pattern detection by signature

/// Sorted degree sequence plus triangle count of `G[mask]`. For the small
/// patterns below this determines the graph up to isomorphism; the oracle
/// tests check that claim exhaustively.
pub fn signature(rows: &[u64], mask: u64) -> (Vec<u32>, u32) {
    let mut degs = Vec::new();
    let mut tri = 0;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let nb = rows[v] & mask;
        degs.push(nb.count_ones());
        let mut a = nb;
        while a != 0 {
            let u = a.trailing_zeros() as usize;
            a &= a - 1;
            tri += (rows[u] & nb).count_ones();
        }
    }
    degs.sort_unstable();
    (degs, tri / 6)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pat {
    P5,
    C5,
    K3,
    K23,
    K1TwoK2,
    K1K1K3,
    TwoK2,
    K1K3,
    ThreeK1,
}

impl Pat {
    pub fn size(self) -> usize {
        match self {
            Pat::P5 | Pat::C5 | Pat::K23 | Pat::K1TwoK2 | Pat::K1K1K3 => 5,
            Pat::TwoK2 | Pat::K1K3 => 4,
            Pat::K3 | Pat::ThreeK1 => 3,
        }
    }

    pub fn signature(self) -> (Vec<u32>, u32) {
        match self {
            Pat::P5 => (vec![1, 1, 2, 2, 2], 0),
            Pat::C5 => (vec![2, 2, 2, 2, 2], 0),
            Pat::K3 => (vec![2, 2, 2], 1),
            Pat::K23 => (vec![2, 2, 2, 3, 3], 0),
            Pat::K1TwoK2 => (vec![2, 2, 2, 2, 4], 2),
            Pat::K1K1K3 => (vec![1, 3, 3, 3, 4], 4),
            Pat::TwoK2 => (vec![1, 1, 1, 1], 0),
            Pat::K1K3 => (vec![0, 2, 2, 2], 1),
            Pat::ThreeK1 => (vec![0, 0, 0], 0),
        }
    }

    /// The pattern as an explicit edge list.
    pub fn graph(self) -> Graph {
        let e: &[(usize, usize)] = match self {
            Pat::P5 => &[(0, 1), (1, 2), (2, 3), (3, 4)],
            Pat::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
            Pat::K3 => &[(0, 1), (1, 2), (0, 2)],
            Pat::K23 => &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
            Pat::K1TwoK2 => &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)],
            Pat::K1K1K3 => &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (3, 4), (2, 4)],
            Pat::TwoK2 => &[(0, 1), (2, 3)],
            Pat::K1K3 => &[(1, 2), (2, 3), (1, 3)],
            Pat::ThreeK1 => &[],
        };
        Graph::from_edge_list(self.size(), e).unwrap()
    }
}

pub fn induces(g: &Graph, p: Pat) -> bool {
    let r = rows(g);
    let k = p.size();
    let want = p.signature();
    let n = g.n();
    if n < k {
        return false;
    }
    let mut mask: u64 = (1 << k) - 1;
    let limit = 1u64 << n;
    while mask < limit {
        if signature(&r, mask) == want {
            return true;
        }
        // next subset with the same popcount
        let c = mask & mask.wrapping_neg();
        let rr = mask + c;
        mask = (((rr ^ mask) >> 2) / c) | rr;
    }
    false
}

pub fn is_free(g: &Graph, pats: &[Pat]) -> bool {
    pats.iter().all(|&p| !induces(g, p))
}

// ---------------------------------------------------------------------------
// labeled enumeration

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Labeled graph from upper-triangle bits `x(0,1), x(0,2), x(1,2), ...`.
pub fn labeled(n: usize, bits: u64) -> Vec<u64> {
    let mut r = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                r[i] |= 1 << j;
                r[j] |= 1 << i;
            }
            k += 1;
        }
    }
    r
}

/// Minimum over all relabelings of the upper-triangle bit string.
pub fn brute_canonical(rows: &[u64], perms: &[Vec<usize>]) -> u64 {
    let n = rows.len();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | (rows[p[j]] >> p[i] & 1);
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}

/// Isomorphism classes among all labeled graphs on `n` vertices.
pub fn labeled_classes(n: usize, connected_only: bool) -> Vec<u64> {
    let perms = permutations(n);
    let m = n * n.saturating_sub(1) / 2;
    let mut codes: Vec<u64> = (0..1u64 << m)
        .filter_map(|b| {
            let r = labeled(n, b);
            let g = Graph::from_rows(r.clone()).unwrap();
            if connected_only && !is_connected(&g) {
                return None;
            }
            Some(brute_canonical(&r, &perms))
        })
        .collect();
    codes.sort_unstable();
    codes.dedup();
    codes
}

/// graph6 packing written out from the format description.
pub fn graph6_by_hand(g: &Graph) -> String {
    let n = g.n();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j) as u8);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    let mut s = String::new();
    s.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |a, &b| a * 2 + b);
        s.push((63 + v) as char);
    }
    s
}

// ---------------------------------------------------------------------------
// shared universes

/// Every graph on `n` vertices up to isomorphism, for `n <= 9`, from the
/// library generator (whose completeness is checked separately against the
/// labeled oracle).
pub fn all_graphs(n: usize) -> &'static [Graph] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    let c = CACHE.get_or_init(|| (0..=9).map(|k| enumerate::generate(k, false).unwrap()).collect());
    &c[n]
}

/// Members of the class on `1..=n_max` vertices, filtered by the signature
/// oracle.
pub fn universe(n_max: usize, pats: &[Pat], connected: bool) -> Vec<Graph> {
    use rayon::prelude::*;
    (1..=n_max)
        .flat_map(|n| all_graphs(n).to_vec())
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|g| (!connected || is_connected(g)) && is_free(g, pats))
        .collect()
}
