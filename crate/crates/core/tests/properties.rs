//! Randomized invariants over arbitrary graphs and over random members of
//! the restricted classes.

mod common;

use chibind::enumerate::{self, canonical_code, decode_graph6, encode_graph6};
use chibind::invariants::{self, PerfectDivision};
use chibind::patterns::{self, parse_pattern_list};
use chibind::structure;
use chibind::{Graph, Pipeline};
use common::*;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = vec![];
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Grows a graph one vertex at a time, drawing the new vertex's
/// neighborhood from `seeds` and keeping it only if the class still admits
/// the result. With `connected`, isolated newcomers are refused too.
fn grow(list: &str, seeds: &[u64], connected: bool) -> Graph {
    let pats = parse_pattern_list(list).unwrap();
    let mut rows: Vec<u64> = vec![0];
    for &s in seeds {
        let n = rows.len();
        let nb = s & ((1u64 << n) - 1);
        if connected && nb == 0 {
            continue;
        }
        let mut next = rows.clone();
        next.push(nb);
        for (v, r) in next.iter_mut().enumerate().take(n) {
            if nb >> v & 1 == 1 {
                *r |= 1 << n;
            }
        }
        let g = Graph::from_rows(next.clone()).unwrap();
        if patterns::is_free(&g, &pats) {
            rows = next;
        }
    }
    Graph::from_rows(rows).unwrap()
}

fn seeds(len: usize) -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(any::<u64>(), 1..len)
}

fn check_pipeline(p: Pipeline, g: &Graph) -> Result<(), TestCaseError> {
    let (c, cert) = p.run(g).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(is_proper(g, &c.colors));
    let w = invariants::clique_number(g);
    prop_assert_eq!(cert.omega, w);
    prop_assert_eq!(cert.colors_used, distinct(&c.colors));
    prop_assert!(cert.colors_used <= p.bound(w));
    prop_assert_eq!(cert.bound_value, p.bound(w));
    let problems = cert.verify(g, &c);
    prop_assert!(problems.is_empty(), "{:?}", problems);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(20)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn independence_is_clique_of_complement(g in graph_strategy(16)) {
        prop_assert_eq!(invariants::independence_number(&g), invariants::clique_number(&g.complement()));
    }

    #[test]
    fn chromatic_number_is_sandwiched(g in graph_strategy(11)) {
        let (k, c) = invariants::chromatic_number(&g);
        let w = invariants::clique_number(&g);
        let max_deg = g.degrees().into_iter().max().unwrap_or(0);
        prop_assert!(w <= k && k <= max_deg + 1);
        prop_assert!(is_proper(&g, &c.colors));
        prop_assert_eq!(distinct(&c.colors), k);
        prop_assert_eq!(k, chi(&g));
    }

    #[test]
    fn embeddings_are_induced_copies(g in graph_strategy(12), which in 0usize..9) {
        let p = &patterns::catalog()[which % patterns::catalog().len()];
        if let Some(e) = patterns::find_induced(&g, &p.graph) {
            prop_assert!(e.is_valid(&g, &p.graph));
            prop_assert_eq!(e.image().count_ones() as usize, p.graph.n());
        }
    }

    #[test]
    fn freeness_is_hereditary(g in graph_strategy(12), drop in any::<u64>()) {
        let keep = g.all() & !drop;
        prop_assume!(keep != 0);
        let h = g.induced_mask(keep);
        for p in patterns::catalog() {
            if !patterns::contains(&g, &p.graph) {
                prop_assert!(!patterns::contains(&h, &p.graph));
            }
        }
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(62)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert_eq!(decode_graph6(&s).unwrap(), g.clone());
        if g.n() <= 12 {
            prop_assert_eq!(s, graph6_by_hand(&g));
        }
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph_strategy(11), perm in Just(()).prop_perturb(|_, mut rng| {
        let mut p: Vec<usize> = (0..11).collect();
        for i in (1..p.len()).rev() {
            p.swap(i, rng.random_range(0..=i));
        }
        p
    })) {
        let n = g.n();
        let order: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let mut rows = vec![0u64; n];
        for (a, &u) in order.iter().enumerate() {
            for (b, &v) in order.iter().enumerate() {
                if g.has_edge(u, v) {
                    rows[a] |= 1 << b;
                }
            }
        }
        let h = Graph::from_rows(rows).unwrap();
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        prop_assert!(enumerate::is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn perfect_divisions_are_valid(g in graph_strategy(12)) {
        if let Some(d) = invariants::find_perfect_division(&g).unwrap() {
            prop_assert!(d.verify(&g));
            let PerfectDivision { a, b, .. } = d;
            prop_assert_eq!(a.mask() | b.mask(), g.all());
            prop_assert_eq!(a.mask() & b.mask(), 0);
            prop_assert!(is_perfect(&g.induced_mask(a.mask())));
            prop_assert!(omega(&g.induced_mask(b.mask())) < omega(&g));
        } else {
            prop_assert!(!invariants::is_perfectly_divisible(&g).unwrap());
        }
    }

    #[test]
    fn homogeneous_sets_are_homogeneous(g in graph_strategy(14)) {
        if let Some(s) = structure::find_homogeneous_set(&g) {
            let x = s.mask();
            prop_assert!(s.len() >= 2 && s.len() < g.n());
            for v in 0..g.n() {
                if x >> v & 1 == 0 {
                    let seen = g.nbrs(v) & x;
                    prop_assert!(seen == 0 || seen == x);
                }
            }
        }
        if g.n() <= 12 {
            prop_assert_eq!(
                structure::find_homogeneous_set(&g).map(|s| s.len()),
                structure::find_homogeneous_set_exhaustive(&g).unwrap().map(|s| s.len())
            );
        }
    }

    #[test]
    fn separators_agree_with_exhaustive_search(g in graph_strategy(11)) {
        prop_assume!(g.is_connected());
        let mut fast: Vec<u64> = structure::minimal_separators(&g)
            .into_iter()
            .filter(|&s| structure::is_minimal_cutset_mask(&g, s))
            .collect();
        let mut slow = structure::minimal_cutsets_exhaustive(&g);
        fast.sort_unstable();
        slow.sort_unstable();
        prop_assert_eq!(fast, slow);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn p5_k23_pipeline_is_certified(s in seeds(90)) {
        let g = grow("P5,K2,3", &s, false);
        prop_assume!(g.edge_count() > 0);
        check_pipeline(Pipeline::P5K23, &g)?;
    }

    #[test]
    fn p5_k1_2k2_pipeline_is_certified(s in seeds(90)) {
        let g = grow("P5,K1+2K2", &s, true);
        prop_assume!(g.edge_count() > 0);
        check_pipeline(Pipeline::P5K1TwoK2, &g)?;
    }

    #[test]
    fn p5_k1_k1k3_pipeline_is_certified(s in seeds(90)) {
        let g = grow("P5,K1+(K1uK3)", &s, false);
        check_pipeline(Pipeline::P5K1K1K3, &g)?;
    }

    #[test]
    fn k1k3_free_pipeline_is_certified(s in seeds(30)) {
        let g = grow("P5,K1uK3", &s, false);
        prop_assume!(g.edge_count() > 0);
        check_pipeline(Pipeline::K1K3Free, &g)?;
    }

    #[test]
    fn wagon_pipeline_is_certified(s in seeds(30)) {
        let g = grow("2K2", &s, false);
        check_pipeline(Pipeline::Wagon, &g)?;
    }

    #[test]
    fn sumner_is_two_colors_exactly_on_bipartite_graphs(s in seeds(40)) {
        let g = grow("P5,K3", &s, false);
        check_pipeline(Pipeline::Sumner, &g)?;
        let c = chibind::colorers::color_sumner(&g).unwrap();
        prop_assert_eq!(distinct(&c.colors) <= 2, g.is_bipartite_mask(g.all()));
        for (comp, shape) in chibind::colorers::sumner_shapes(&g).unwrap() {
            match shape {
                structure::SumnerShape::Bipartite { side } => {
                    let r = rows(&g);
                    prop_assert!(is_independent(&r, side.mask()));
                    prop_assert!(is_independent(&r, comp.mask() & !side.mask()));
                }
                structure::SumnerShape::InflatedFiveHole { classes } => {
                    let r = rows(&g);
                    for p in 0..5 {
                        let a = classes[p].mask();
                        let b = classes[(p + 1) % 5].mask();
                        let c2 = classes[(p + 2) % 5].mask();
                        prop_assert!(is_independent(&r, a));
                        prop_assert!(g.is_complete_to_mask(a, b) && g.is_anticomplete_to_mask(a, c2));
                    }
                }
            }
        }
    }

    #[test]
    fn divisible_pipeline_is_certified(s in seeds(14)) {
        let g = grow("P5,C5,K2,3", &s, false);
        check_pipeline(Pipeline::Divisible, &g)?;
    }
}

