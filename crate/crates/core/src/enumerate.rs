//! Non-isomorphic graph generation and graph6 interchange.
//!
//! Canonical form: the minimum upper-triangle code over the leaves of an
//! individualization-refinement search. The code packs `x(0,1), x(0,2),
//! x(1,2), x(0,3), ...` most significant bit first, so for a fixed `n`
//! ordering by code is ordering by graph6 string.

use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants;
use crate::patterns::{self, Pattern};

/// Largest order `generate` accepts.
pub const GENERATE_LIMIT: usize = 10;
/// Largest order with a canonical code (the code must fit 64 bits).
pub const CANONICAL_LIMIT: usize = 11;
/// Largest order the short graph6 form can carry.
pub const GRAPH6_LIMIT: usize = 62;

fn upper_code(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        let row = g.nbrs(order[j]);
        for &u in &order[..j] {
            code = code << 1 | (row >> u & 1);
        }
    }
    code
}

/// Rebuilds the graph whose canonical code is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Result<Graph> {
    if n > CANONICAL_LIMIT {
        return Err(Error::Capacity {
            what: "canonical code",
            limit: CANONICAL_LIMIT,
            got: n,
        });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    Graph::from_rows(rows)
}

/// Splits every cell by the number of neighbors each vertex has in every
/// cell, until nothing splits. The result depends only on the isomorphism
/// type of (graph, ordered partition).
fn refine(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    loop {
        let mut out = Vec::with_capacity(g.n());
        for &c in &cells {
            if c.count_ones() == 1 {
                out.push(c);
                continue;
            }
            let mut sig: Vec<(Vec<u32>, usize)> = Bits(c)
                .map(|v| (cells.iter().map(|&d| (g.nbrs(v) & d).count_ones()).collect(), v))
                .collect();
            sig.sort();
            let mut cur = 0u64;
            for i in 0..sig.len() {
                if i > 0 && sig[i].0 != sig[i - 1].0 {
                    out.push(cur);
                    cur = 0;
                }
                cur |= 1 << sig[i].1;
            }
            out.push(cur);
        }
        if out.len() == cells.len() {
            return out;
        }
        cells = out;
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.nbrs(u) & !(1 << v) == g.nbrs(v) & !(1 << u)
}

fn search(g: &Graph, cells: Vec<u64>, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.count_ones() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = upper_code(g, &order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, order));
            }
        }
        Some(idx) => {
            let cell = cells[idx];
            let mut tried: Vec<usize> = Vec::new();
            for v in Bits(cell) {
                // swapping twins of one cell is an automorphism fixing the
                // partition, so their subtrees give the same codes
                if tried.iter().any(|&u| twins(g, u, v)) {
                    continue;
                }
                tried.push(v);
                let mut next = cells.clone();
                next[idx] = 1 << v;
                next.insert(idx + 1, cell & !(1 << v));
                search(g, next, best);
            }
        }
    }
}

/// Canonical order (`order[i]` is the vertex placed at position `i`) and
/// canonical code.
pub fn canonical_labeling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    if g.n() > CANONICAL_LIMIT {
        return Err(Error::Capacity {
            what: "canonical labeling",
            limit: CANONICAL_LIMIT,
            got: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok((0, vec![]));
    }
    let mut best = None;
    search(g, vec![g.all()], &mut best);
    Ok(best.unwrap())
}

pub fn canonical_code(g: &Graph) -> Result<u64> {
    Ok(canonical_labeling(g)?.0)
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    graph_from_code(g.n(), canonical_code(g)?)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a)? == canonical_code(b)?)
}

fn extend(h: &Graph, nbrs: u64) -> Graph {
    let n = h.n();
    let mut rows: Vec<u64> = h.rows().to_vec();
    for v in Bits(nbrs) {
        rows[v] |= 1 << n;
    }
    rows.push(nbrs);
    Graph::from_rows_unchecked(rows)
}

/// One representative per isomorphism class of graphs on `n` vertices
/// avoiding `free_of`, sorted by canonical code. Each graph arises from a
/// smaller member by adding a vertex of minimum degree, so only members are
/// ever extended.
fn generate_class(n: usize, free_of: &[Pattern]) -> Result<Vec<Graph>> {
    Ok(generate_levels(n, free_of)?.pop().unwrap())
}

/// `levels[m]` holds the class members on `m` vertices, for `m <= n`.
fn generate_levels(n: usize, free_of: &[Pattern]) -> Result<Vec<Vec<Graph>>> {
    if n > GENERATE_LIMIT {
        return Err(Error::Capacity {
            what: "generation order",
            limit: GENERATE_LIMIT,
            got: n,
        });
    }
    let mut levels = vec![vec![Graph::empty(0)?]];
    for m in 1..=n {
        let mut codes: Vec<u64> = levels[m - 1]
            .par_iter()
            .flat_map_iter(|h| {
                let degs = h.degrees();
                (0..1u64 << (m - 1)).filter_map(move |s| {
                    let deg = s.count_ones() as usize;
                    // the new vertex must have minimum degree
                    if degs.iter().enumerate().any(|(v, &d)| d + ((s >> v & 1) as usize) < deg) {
                        return None;
                    }
                    let g = extend(h, s);
                    if !patterns::is_free(&g, free_of) {
                        return None;
                    }
                    Some(canonical_code(&g).unwrap())
                })
            })
            .collect();
        codes.par_sort_unstable();
        codes.dedup();
        levels.push(codes.into_iter().map(|c| graph_from_code(m, c).unwrap()).collect());
    }
    Ok(levels)
}

/// All graphs on exactly `n` vertices up to isomorphism, in canonical-code
/// order.
pub fn generate(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    generate_free(n, &[], connected_only)
}

/// Like [`generate`] restricted to graphs with no induced member of
/// `free_of`.
pub fn generate_free(n: usize, free_of: &[Pattern], connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = generate_class(n, free_of)?;
    if connected_only {
        out.retain(|g| g.is_connected());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// graph6

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_LIMIT {
        return Err(Error::Capacity {
            what: "graph6 short form",
            limit: GRAPH6_LIMIT,
            got: n,
        });
    }
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).unwrap())
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: String| Error::Graph6(msg);
    let Some(&first) = bytes.first() else {
        return Err(bad("empty input".into()));
    };
    if first == 126 {
        return Err(Error::Capacity {
            what: "graph6 short form",
            limit: GRAPH6_LIMIT,
            got: GRAPH6_LIMIT + 1,
        });
    }
    if !(63..=125).contains(&first) {
        return Err(bad(format!("byte {first} cannot start a graph6 string")));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < need {
        return Err(bad(format!("truncated: need {need} data bytes, got {}", body.len())));
    }
    if body.len() > need {
        return Err(bad(format!("{} trailing bytes", body.len() - need)));
    }
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} is outside the graph6 range")));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Decodes a graph6 file: one graph per line, blank lines and a leading
/// `>>graph6<<` header ignored.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    text.lines()
        .map(|l| l.strip_prefix(">>graph6<<").unwrap_or(l).trim())
        .filter(|l| !l.is_empty())
        .map(decode_graph6)
        .collect()
}

pub fn write_graph6_lines(graphs: &[Graph]) -> Result<String> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&encode_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// streams

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Every order from `n_min` to `n_max`.
    Generated { n_min: usize, n_max: usize },
    File(PathBuf),
}

/// A graph universe plus the filters that cut it down.
#[derive(Clone, Debug)]
pub struct GraphStream {
    pub source: Source,
    pub free_of: Vec<Pattern>,
    pub connected: bool,
    pub omega_min: Option<usize>,
    pub omega_max: Option<usize>,
}

impl GraphStream {
    pub fn generated(n: usize, connected_only: bool) -> Self {
        Self::generated_range(1, n, connected_only)
    }

    pub fn generated_range(n_min: usize, n_max: usize, connected_only: bool) -> Self {
        GraphStream {
            source: Source::Generated { n_min, n_max },
            free_of: Vec::new(),
            connected: connected_only,
            omega_min: None,
            omega_max: None,
        }
    }

    pub fn file(path: impl Into<PathBuf>) -> Self {
        GraphStream {
            source: Source::File(path.into()),
            free_of: Vec::new(),
            connected: false,
            omega_min: None,
            omega_max: None,
        }
    }

    pub fn omega_at_least(mut self, w: usize) -> Self {
        self.omega_min = Some(w);
        self
    }

    pub fn omega_at_most(mut self, w: usize) -> Self {
        self.omega_max = Some(w);
        self
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected |= yes;
        self
    }

    fn admits(&self, g: &Graph) -> bool {
        if self.connected && !g.is_connected() {
            return false;
        }
        if self.omega_min.is_some() || self.omega_max.is_some() {
            let w = invariants::clique_number(g);
            if self.omega_min.is_some_and(|m| w < m) || self.omega_max.is_some_and(|m| w > m) {
                return false;
            }
        }
        patterns::is_free(g, &self.free_of)
    }

    /// Materializes the stream. Generated sources produce graphs by
    /// increasing order, each order in canonical-code order; file sources
    /// keep file order.
    pub fn collect(&self) -> Result<Vec<Graph>> {
        let raw = match &self.source {
            Source::Generated { n_min, n_max } => {
                // freeness is hereditary, so the class can be grown
                // directly instead of filtered afterwards
                let levels = generate_levels(*n_max, &self.free_of)?;
                levels.into_iter().skip(*n_min).flatten().collect()
            }
            Source::File(p) => read_graph6_file(p)?,
        };
        Ok(raw.into_iter().filter(|g| self.admits(g)).collect())
    }
}

/// Adds freeness and predicate filters to a stream.
pub fn filter_stream(s: GraphStream, free_of: &[&str], connected: bool) -> Result<GraphStream> {
    let mut s = s.connected(connected);
    for name in free_of {
        s.free_of.push(Pattern::by_name(name)?);
    }
    Ok(s)
}
