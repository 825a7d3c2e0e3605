//! Dense small-graph representation.
//!
//! A [`Graph`] stores one 64-bit adjacency row per vertex, so vertex sets are
//! single machine words. Most of the crate works on raw `u64` masks
//! internally; the checked [`VertexSet`] wrapper is what the public API hands
//! out.

use std::fmt;

use crate::bits::{self, Bits};
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `0..n` of a particular graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    mask: u64,
    n: u8,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        VertexSet { mask: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        VertexSet {
            mask: bits::full(n),
            n: n as u8,
        }
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertices",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        let extra = mask & !bits::full(n);
        if extra != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: extra.trailing_zeros() as usize,
                n,
            });
        }
        Ok(VertexSet { mask, n: n as u8 })
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            mask |= 1 << v;
        }
        Self::from_mask(n, mask)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Size of the universe this set is bound to.
    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.mask >> v & 1 == 1
    }

    pub fn iter(&self) -> Bits {
        Bits(self.mask)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            mask: !self.mask & bits::full(self.n as usize),
            n: self.n,
        }
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple undirected graph on at most 64 vertices.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Graph");
        if let Some(label) = &self.label {
            s.field("label", label);
        }
        s.field("n", &self.n()).field("edges", &self.edges()).finish()
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            what: "vertices",
            limit: MAX_VERTICES,
            got: n,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph {
            adj: vec![0; n],
            label: None,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_capacity(n)?;
        let full = bits::full(n);
        Ok(Graph {
            adj: (0..n).map(|v| full & !(1 << v)).collect(),
            label: None,
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric with a zero
    /// diagonal; bits at or above `rows.len()` are rejected.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_capacity(n)?;
        let full = bits::full(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !full).trailing_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::LoopEdge(v));
            }
            for u in Bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency is not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { adj: rows, label: None })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { adj: rows, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Mask of all vertices.
    pub fn all(&self) -> u64 {
        bits::full(self.n())
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn set(&self, vertices: &[usize]) -> Result<VertexSet> {
        VertexSet::from_vertices(self.n(), vertices)
    }

    pub fn set_from_mask(&self, mask: u64) -> Result<VertexSet> {
        VertexSet::from_mask(self.n(), mask)
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighborhood of `v` as a mask.
    #[inline]
    pub fn nbrs(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in Bits(self.adj[u] & !bits::full(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_set(&self, s: &VertexSet) -> Result<u64> {
        if s.universe() != self.n() {
            return Err(Error::SetMismatch {
                set_n: s.universe(),
                graph_n: self.n(),
            });
        }
        Ok(s.mask())
    }

    /// Union of the neighborhoods of `mask`, minus `mask` itself.
    pub fn nbrs_of_mask(&self, mask: u64) -> u64 {
        let mut out = 0;
        for v in Bits(mask) {
            out |= self.adj[v];
        }
        out & !mask
    }

    /// Induced subgraph on `mask`, relabeled by ascending original index.
    pub fn induced_mask(&self, mask: u64) -> Graph {
        let mask = mask & self.all();
        let verts: Vec<usize> = Bits(mask).collect();
        let rows = verts
            .iter()
            .map(|&v| bits::compress(self.adj[v], mask))
            .collect();
        Graph {
            adj: rows,
            label: None,
        }
    }

    pub fn induced(&self, s: &VertexSet) -> Result<Graph> {
        Ok(self.induced_mask(self.check_set(s)?))
    }

    pub fn complement(&self) -> Graph {
        let full = self.all();
        Graph {
            adj: (0..self.n())
                .map(|v| !self.adj[v] & full & !(1 << v))
                .collect(),
            label: self.label.as_ref().map(|l| format!("co-({l})")),
        }
    }

    fn combine(g1: &Graph, g2: &Graph, cross: bool) -> Result<Graph> {
        let (n1, n2) = (g1.n(), g2.n());
        check_capacity(n1 + n2)?;
        let low = bits::full(n1);
        let high = bits::full(n1 + n2) & !low;
        let mut rows = Vec::with_capacity(n1 + n2);
        for &r in &g1.adj {
            rows.push(r | if cross { high } else { 0 });
        }
        for &r in &g2.adj {
            rows.push(r << n1 | if cross { low } else { 0 });
        }
        Ok(Graph {
            adj: rows,
            label: None,
        })
    }

    /// `g1 ∪ g2`; the vertices of `g2` are shifted by `g1.n()`.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
        Self::combine(g1, g2, false)
    }

    /// `g1 + g2`; the vertices of `g2` are shifted by `g1.n()`.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
        Self::combine(g1, g2, true)
    }

    /// Vertices of the component of `G[within]` containing `start`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components of `G[mask]`, ordered by smallest vertex.
    pub fn components_mask(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask & self.all();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        self.components_mask(self.all())
            .into_iter()
            .map(|m| VertexSet { mask: m, n: n as u8 })
            .collect()
    }

    pub fn is_connected_mask(&self, mask: u64) -> bool {
        mask == 0 || self.reach(mask.trailing_zeros() as usize, mask) == mask
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_mask(self.all())
    }

    /// Hop distances to the nearest vertex of `sources`; `None` marks
    /// unreachable vertices.
    pub fn distances_from_mask(&self, sources: u64) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut seen = sources & self.all();
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            for v in Bits(frontier) {
                dist[v] = Some(d);
            }
            frontier = self.nbrs_of_mask(frontier) & !seen;
            seen |= frontier;
            d += 1;
        }
        dist
    }

    pub fn distances_from(&self, s: &VertexSet) -> Result<Vec<Option<usize>>> {
        Ok(self.distances_from_mask(self.check_set(s)?))
    }

    /// Vertices at distance exactly `i` from `mask` (`i >= 1`).
    pub fn level_mask(&self, mask: u64, i: usize) -> u64 {
        let mut seen = mask;
        let mut frontier = mask;
        for _ in 0..i {
            frontier = self.nbrs_of_mask(frontier) & !seen;
            seen |= frontier;
        }
        frontier
    }

    pub fn is_clique_mask(&self, mask: u64) -> bool {
        Bits(mask).all(|v| (mask & !(1 << v)) & !self.adj[v] == 0)
    }

    pub fn is_independent_mask(&self, mask: u64) -> bool {
        Bits(mask).all(|v| mask & self.adj[v] == 0)
    }

    pub fn is_complete_to_mask(&self, x: u64, y: u64) -> bool {
        Bits(x).all(|v| y & !self.adj[v] == 0)
    }

    pub fn is_anticomplete_to_mask(&self, x: u64, y: u64) -> bool {
        Bits(x).all(|v| y & self.adj[v] == 0)
    }

    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.is_clique_mask(self.check_set(s)?))
    }

    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.is_independent_mask(self.check_set(s)?))
    }

    fn check_pair(&self, x: &VertexSet, y: &VertexSet) -> Result<(u64, u64)> {
        let (x, y) = (self.check_set(x)?, self.check_set(y)?);
        if x & y != 0 {
            return Err(Error::OverlappingSets);
        }
        Ok((x, y))
    }

    pub fn is_complete_to(&self, x: &VertexSet, y: &VertexSet) -> Result<bool> {
        let (x, y) = self.check_pair(x, y)?;
        Ok(self.is_complete_to_mask(x, y))
    }

    pub fn is_anticomplete_to(&self, x: &VertexSet, y: &VertexSet) -> Result<bool> {
        let (x, y) = self.check_pair(x, y)?;
        Ok(self.is_anticomplete_to_mask(x, y))
    }

    /// True when every vertex outside `mask` has a neighbor in it.
    pub fn dominates_mask(&self, mask: u64) -> bool {
        (mask | self.nbrs_of_mask(mask)) == self.all()
    }

    pub fn is_bipartite_mask(&self, mask: u64) -> bool {
        self.two_coloring_mask(mask).is_some()
    }

    /// BFS 2-coloring of `G[mask]`: returns the mask of vertices on side 1.
    pub fn two_coloring_mask(&self, mask: u64) -> Option<u64> {
        let mut side1 = 0u64;
        for comp in self.components_mask(mask) {
            let mut seen = 1u64 << comp.trailing_zeros();
            let mut frontier = seen;
            let mut parity = false;
            while frontier != 0 {
                if parity {
                    side1 |= frontier;
                }
                let next = self.nbrs_of_mask(frontier) & comp & !seen;
                seen |= next;
                frontier = next;
                parity = !parity;
            }
        }
        let side0 = mask & !side1;
        (self.is_independent_mask(side0) && self.is_independent_mask(side1)).then_some(side1)
    }
}
