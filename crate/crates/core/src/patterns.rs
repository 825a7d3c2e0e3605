//! Forbidden-pattern catalog and induced-subgraph detection.
//!
//! Every detector here is the same backtracking search: pattern vertices are
//! mapped in index order onto host vertices in ascending order, so the first
//! embedding found is the lexicographically least one.

use std::sync::OnceLock;

use serde::Serialize;

use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A named small graph used as a forbidden induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub name: String,
    pub graph: Graph,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Pattern {
            name: name.into(),
            graph,
        }
    }

    /// Looks a pattern up in the catalog by its public identifier.
    pub fn by_name(name: &str) -> Result<Pattern> {
        let key = normalize_name(name);
        catalog()
            .iter()
            .find(|p| p.name == key)
            .cloned()
            .ok_or_else(|| Error::UnknownPattern(name.to_string()))
    }
}

fn normalize_name(name: &str) -> String {
    name.trim().replace('∪', "u").replace(' ', "")
}

/// Injective map from pattern vertices to host vertices witnessing an
/// induced copy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> u64 {
        self.map.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Re-checks that this map is an induced embedding of `pattern` into `host`.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.n();
        if self.map.len() != k || self.image().count_ones() as usize != k {
            return false;
        }
        if self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        (0..k).all(|i| {
            (0..k).all(|j| i == j || pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j]))
        })
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).expect("path")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).expect("cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n).expect("complete")
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    Graph::join(&Graph::empty(p).unwrap(), &Graph::empty(q).unwrap()).expect("K_{p,q}")
}

fn union(a: &Graph, b: &Graph) -> Graph {
    Graph::disjoint_union(a, b).unwrap()
}

fn join(a: &Graph, b: &Graph) -> Graph {
    Graph::join(a, b).unwrap()
}

fn edges(n: usize, e: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, e).unwrap()
}

fn build_catalog() -> Vec<Pattern> {
    let k1 = complete(1);
    let k3 = complete(3);
    let two_k2 = union(&complete(2), &complete(2));
    let diamond = join(&k1, &path(3));
    let mut out = Vec::new();
    for n in 2..=7 {
        out.push(Pattern::new(format!("P{n}"), path(n)));
    }
    for n in 4..=9 {
        out.push(Pattern::new(format!("C{n}"), cycle(n)));
    }
    for n in 1..=6 {
        out.push(Pattern::new(format!("K{n}"), complete(n)));
    }
    out.push(Pattern::new("K1,3", complete_bipartite(1, 3)));
    out.push(Pattern::new("K2,3", complete_bipartite(2, 3)));
    out.push(Pattern::new("2K2", two_k2.clone()));
    // the complement of a triangle; freeness means independence number at most 2
    out.push(Pattern::new("3K1", Graph::empty(3).unwrap()));
    out.push(Pattern::new("K1+2K2", join(&k1, &two_k2)));
    out.push(Pattern::new("K1uK3", union(&k1, &k3)));
    out.push(Pattern::new("K1+(K1uK3)", join(&k1, &union(&k1, &k3))));
    out.push(Pattern::new(
        "bull",
        edges(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
    ));
    out.push(Pattern::new(
        "cricket",
        edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]),
    ));
    // the P3 ends (1 and 3) are the degree-2 vertices
    out.push(Pattern::new("diamond", diamond.clone()));
    out.push(Pattern::new(
        "cochair",
        edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4)]),
    ));
    out.push(Pattern::new("dart", join(&k1, &union(&k1, &path(3)))));
    out.push(Pattern::new(
        "hammer",
        edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
    ));
    out.push(Pattern::new("house", path(5).complement()));
    out.push(Pattern::new("gem", join(&k1, &path(4))));
    out.push(Pattern::new("gem+", join(&k1, &union(&k1, &path(4)))));
    out.push(Pattern::new(
        "paraglider",
        edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (3, 4)]),
    ));
    // Not drawn with the others; the usual banner: a 4-cycle plus a pendant.
    out.push(Pattern::new(
        "banner",
        edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    ));
    out
}

pub fn catalog() -> &'static [Pattern] {
    static CATALOG: OnceLock<Vec<Pattern>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Parses a comma-separated list of catalog names. A bare number after a
/// comma belongs to the previous name, so `P5,K2,3` is `[P5, K2,3]`.
pub fn parse_pattern_list(list: &str) -> Result<Vec<Pattern>> {
    let mut names: Vec<String> = Vec::new();
    for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if tok.chars().all(|c| c.is_ascii_digit()) {
            match names.last_mut() {
                Some(last) => {
                    last.push(',');
                    last.push_str(tok);
                }
                None => return Err(Error::UnknownPattern(tok.to_string())),
            }
        } else {
            names.push(tok.to_string());
        }
    }
    names.iter().map(|n| Pattern::by_name(n)).collect()
}

/// Lexicographically least induced embedding of `pattern` into `host`.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_induced_within(host, host.all(), pattern)
}

/// Like [`find_induced`] but only uses host vertices in `within`.
pub fn find_induced_within(host: &Graph, within: u64, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.n();
    if k == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    let within = within & host.all();
    if k > within.count_ones() as usize {
        return None;
    }
    // host vertices whose degree inside `within` can carry each pattern degree
    let host_deg: Vec<u32> = (0..host.n())
        .map(|v| (host.nbrs(v) & within).count_ones())
        .collect();
    let feasible: Vec<u64> = (0..k)
        .map(|i| {
            let d = pattern.degree(i) as u32;
            let co = (k - 1 - pattern.degree(i)) as u32;
            Bits(within)
                .filter(|&h| host_deg[h] >= d && within.count_ones() - 1 - host_deg[h] >= co)
                .fold(0, |m, h| m | 1 << h)
        })
        .collect();
    let mut map = vec![0usize; k];
    if search(host, pattern, within, &feasible, &mut map, 0, 0) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn search(
    host: &Graph,
    pattern: &Graph,
    within: u64,
    feasible: &[u64],
    map: &mut [usize],
    depth: usize,
    used: u64,
) -> bool {
    if depth == map.len() {
        return true;
    }
    let mut cand = feasible[depth] & !used;
    for (j, &m) in map.iter().enumerate().take(depth) {
        let h = host.nbrs(m);
        if pattern.has_edge(depth, j) {
            cand &= h;
        } else {
            cand &= !h;
        }
    }
    cand &= within;
    for h in Bits(cand) {
        map[depth] = h;
        if search(host, pattern, within, feasible, map, depth + 1, used | 1 << h) {
            return true;
        }
    }
    false
}

pub fn contains(host: &Graph, pattern: &Graph) -> bool {
    find_induced(host, pattern).is_some()
}

/// True iff `host` induces none of `patterns`.
pub fn is_free(host: &Graph, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|p| !contains(host, &p.graph))
}

/// First pattern that `host` induces, with its embedding.
pub fn first_violation<'a>(host: &Graph, patterns: &'a [Pattern]) -> Option<(&'a Pattern, Embedding)> {
    patterns
        .iter()
        .find_map(|p| find_induced(host, &p.graph).map(|e| (p, e)))
}

/// Errors with the first induced pattern, if any.
pub fn require_free(host: &Graph, patterns: &[Pattern]) -> Result<()> {
    match first_violation(host, patterns) {
        Some((p, e)) => Err(Error::NotFree {
            pattern: p.name.clone(),
            embedding: e.map,
        }),
        None => Ok(()),
    }
}

/// Calls `visit` on every induced cycle of length `len` (>= 3) inside
/// `within`, as a vertex sequence starting at its smallest vertex with the
/// second vertex smaller than the last. Stops early when `visit` returns
/// `false`.
pub fn for_each_induced_cycle(
    g: &Graph,
    within: u64,
    len: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    if len < 3 || len > within.count_ones() as usize {
        return;
    }
    let mut path = Vec::with_capacity(len);
    for s in Bits(within) {
        let allowed = within & !bits::full(s + 1);
        path.clear();
        path.push(s);
        if !extend_cycle(g, allowed, len, &mut path, 0, &mut visit) {
            return;
        }
    }
}

/// `blocked` holds the closed neighborhoods of all path vertices except the
/// first and the last.
fn extend_cycle(
    g: &Graph,
    allowed: u64,
    len: usize,
    path: &mut Vec<usize>,
    blocked: u64,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let k = path.len();
    let s = path[0];
    let last = path[k - 1];
    let mut cand = g.nbrs(last) & allowed & !blocked;
    let on_path = path.iter().fold(0u64, |m, &v| m | 1 << v);
    cand &= !on_path;
    if k == len - 1 {
        cand &= g.nbrs(s);
        // orientation: second vertex below the closing vertex
        cand &= !bits::full(path[1] + 1);
    } else if k >= 2 {
        cand &= !g.nbrs(s);
    }
    let next_blocked = if k >= 2 {
        blocked | g.nbrs(last) | 1 << last
    } else {
        blocked
    };
    for w in Bits(cand) {
        path.push(w);
        let keep_going = if k + 1 == len {
            visit(path)
        } else {
            extend_cycle(g, allowed, len, path, next_blocked, visit)
        };
        path.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// All induced cycles of the given length, in search order.
pub fn induced_cycles(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_induced_cycle(g, g.all(), len, |c| {
        out.push(c.to_vec());
        true
    });
    out
}

/// First induced cycle of length `len` inside `within`.
pub fn find_induced_cycle(g: &Graph, within: u64, len: usize) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_cycle(g, within, len, |c| {
        found = Some(c.to_vec());
        false
    });
    found
}

/// Shortest odd hole (length >= 5) as an ordered cycle.
pub fn find_odd_hole_cycle(g: &Graph) -> Option<Vec<usize>> {
    (5..=g.n())
        .step_by(2)
        .find_map(|len| find_induced_cycle(g, g.all(), len))
}

/// Shortest odd antihole (length >= 5), ordered so that consecutive
/// vertices are non-adjacent in `g`.
pub fn find_odd_antihole_cycle(g: &Graph) -> Option<Vec<usize>> {
    find_odd_hole_cycle(&g.complement())
}

pub fn find_odd_hole(g: &Graph) -> Option<VertexSet> {
    find_odd_hole_cycle(g).map(|c| g.set(&c).unwrap())
}

pub fn find_odd_antihole(g: &Graph) -> Option<VertexSet> {
    find_odd_antihole_cycle(g).map(|c| g.set(&c).unwrap())
}

/// Perfection through the absence of odd holes and odd antiholes.
pub fn is_perfect(g: &Graph) -> bool {
    find_odd_hole_cycle(g).is_none() && find_odd_antihole_cycle(g).is_none()
}

/// True when `G[mask]` is itself an odd hole or an odd antihole.
pub(crate) fn is_odd_hole_or_antihole_mask(g: &Graph, mask: u64) -> bool {
    let k = mask.count_ones();
    if k < 5 || k.is_multiple_of(2) {
        return false;
    }
    let hole = Bits(mask).all(|v| (g.nbrs(v) & mask).count_ones() == 2);
    let anti = Bits(mask).all(|v| (g.nbrs(v) & mask).count_ones() == k - 3);
    if !hole && !anti {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    if hole {
        g.reach(start, mask) == mask
    } else {
        // connectivity of the complement restricted to mask
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= !g.nbrs(v) & mask & !(1 << v);
            }
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        seen == mask
    }
}

/// Whether no split of the vertices into two cliques exists, by scanning all
/// bipartitions. The input must be an odd antihole on at least 5 vertices.
pub fn odd_antihole_not_two_cliques(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > 24 || !is_odd_hole_or_antihole_mask(g, g.all())
        || !(0..n).all(|v| g.degree(v) == n - 3)
    {
        return Err(Error::Precondition(
            "input is not an odd antihole on at least 5 vertices".into(),
        ));
    }
    let all = g.all();
    for a in 0..=all {
        if g.is_clique_mask(a) && g.is_clique_mask(all & !a) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(name: &str) -> Graph {
        Pattern::by_name(name).unwrap().graph
    }

    #[test]
    fn catalog_shapes() {
        let expect = [
            ("P5", 5, 4),
            ("C9", 9, 9),
            ("K6", 6, 15),
            ("K1,3", 4, 3),
            ("K2,3", 5, 6),
            ("2K2", 4, 2),
            ("K1+2K2", 5, 6),
            ("K1uK3", 4, 3),
            ("K1+(K1uK3)", 5, 7),
            ("bull", 5, 5),
            ("cricket", 5, 5),
            ("diamond", 4, 5),
            ("cochair", 5, 6),
            ("dart", 5, 6),
            ("hammer", 5, 5),
            ("house", 5, 6),
            ("gem", 5, 7),
            ("gem+", 6, 8),
            ("paraglider", 5, 7),
            ("banner", 5, 5),
        ];
        for (name, n, m) in expect {
            let g = pat(name);
            assert_eq!((g.n(), g.edge_count()), (n, m), "{name}");
        }
        let mut deg = pat("K1+(K1uK3)").degrees();
        deg.sort();
        assert_eq!(deg, vec![1, 3, 3, 3, 4]);
        let mut deg = pat("bull").degrees();
        deg.sort();
        assert_eq!(deg, vec![1, 1, 2, 3, 3]);
        let mut deg = pat("cricket").degrees();
        deg.sort();
        assert_eq!(deg, vec![1, 1, 2, 2, 4]);
        let mut deg = pat("paraglider").degrees();
        deg.sort();
        assert_eq!(deg, vec![2, 3, 3, 3, 3]);
        let mut deg = pat("hammer").degrees();
        deg.sort();
        assert_eq!(deg, vec![1, 2, 2, 2, 3]);
    }

    #[test]
    fn catalog_self_embeds() {
        for p in catalog() {
            let e = find_induced(&p.graph, &p.graph).expect(&p.name);
            assert!(e.is_valid(&p.graph, &p.graph));
        }
    }

    #[test]
    fn parse_list() {
        let ps = parse_pattern_list("P5,K2,3,K1+(K1uK3)").unwrap();
        let names: Vec<_> = ps.iter().map(|p| p.name.as_str()).collect();
        assert_eq!(names, vec!["P5", "K2,3", "K1+(K1uK3)"]);
        assert!(parse_pattern_list("").unwrap().is_empty());
        assert!(matches!(
            parse_pattern_list("P5,nope"),
            Err(Error::UnknownPattern(_))
        ));
        assert_eq!(Pattern::by_name("K1+(K1∪K3)").unwrap().name, "K1+(K1uK3)");
    }

    #[test]
    fn induced_search_examples() {
        let c5 = cycle(5);
        let e = find_induced(&c5, &path(4)).unwrap();
        assert_eq!(e.map, vec![0, 1, 2, 3]);
        assert!(find_induced(&c5, &path(5)).is_none());
        let k23 = complete_bipartite(2, 3);
        let e = find_induced(&k23, &cycle(4)).unwrap();
        assert!(e.is_valid(&k23, &cycle(4)));
    }

    #[test]
    fn freeness_examples() {
        let list = parse_pattern_list("P5,C5,K2,3").unwrap();
        assert!(!is_free(&cycle(5), &list));
        assert!(!is_free(&cycle(6), &parse_pattern_list("P5").unwrap()));
        assert!(is_free(&complete(5), &list));
        let err = require_free(&cycle(6), &parse_pattern_list("P5").unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotFree { .. }));
    }

    #[test]
    fn holes_and_antiholes() {
        assert_eq!(find_odd_hole(&cycle(5)).unwrap().len(), 5);
        assert!(find_odd_hole(&cycle(6)).is_none());
        assert_eq!(find_odd_antihole(&cycle(7).complement()).unwrap().len(), 7);
        assert!(!is_perfect(&cycle(5)));
        assert!(is_perfect(&path(4)));
        assert!(is_perfect(&cycle(6)));
        assert!(!is_perfect(&cycle(7).complement()));
        // cycle ordering convention
        let c = find_odd_hole_cycle(&cycle(5)).unwrap();
        assert_eq!(c, vec![0, 1, 2, 3, 4]);
        assert_eq!(induced_cycles(&cycle(5), 5).len(), 1);
        assert_eq!(induced_cycles(&complete_bipartite(2, 3), 4).len(), 3);
    }

    #[test]
    fn two_clique_scan() {
        for n in [5, 7, 9] {
            let anti = cycle(n).complement();
            assert!(odd_antihole_not_two_cliques(&anti).unwrap());
        }
        assert!(odd_antihole_not_two_cliques(&cycle(7)).is_err());
        assert!(odd_antihole_not_two_cliques(&cycle(6).complement()).is_err());
    }
}
