mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use ryser_core::certificates::{
    check_sidecover, check_stndrdcnt, extremal_search, lb_f, mindeg_floor, SearchOptions,
};
use ryser_core::constructions::random_intersecting;
use ryser_core::fractional::{integer, lovasz_frac_witness, lp_min, nu_star, rational, tau_star, verify_smallh, Constraint};
use ryser_core::hypergraph::{
    canonical_form, degree_of, is_intersecting, is_linear, parse_digit_format, parse_table_format,
    serialize_digit_format, serialize_table, VertexDeletion,
};
use ryser_core::solvers::{greedy_cover, nu, tau};
use ryser_core::{Hypergraph, PartiteHypergraph, Rational, VertexRef};

/// Arbitrary partite hypergraphs with up to 8 edges and 4 vertices per side.
fn partite() -> impl Strategy<Value = PartiteHypergraph> {
    (2usize..=5, 1usize..=4)
        .prop_flat_map(|(r, cap)| {
            let edge = proptest::collection::vec(0..cap, r);
            (Just(r), Just(cap), proptest::collection::vec(edge, 1..=8))
        })
        .prop_map(|(r, cap, edges)| PartiteHypergraph::new(vec![cap; r], edges).unwrap())
}

/// Fixed-seed intersecting instances from the library generator.
fn intersecting() -> impl Strategy<Value = PartiteHypergraph> {
    (3usize..=6, 2usize..=8, 2usize..=4, any::<u64>())
        .prop_filter_map("generator stuck", |(r, m, cap, seed)| random_intersecting(r, m, cap, seed).ok())
}

/// A hypergraph with a random side permutation and per-side relabelings.
fn with_symmetry() -> impl Strategy<Value = (PartiteHypergraph, Vec<usize>, Vec<Vec<usize>>)> {
    partite().prop_flat_map(|h| {
        let r = h.r();
        let perm = Just((0..r).collect::<Vec<_>>()).prop_shuffle();
        let relabel: Vec<_> = h
            .side_sizes()
            .iter()
            .map(|&s| Just((0..s).collect::<Vec<_>>()).prop_shuffle())
            .collect();
        (Just(h), perm, relabel)
    })
}

fn flat_vertices(h: &PartiteHypergraph) -> Vec<VertexRef> {
    (0..h.vertex_count()).map(|v| h.vertex_ref(v)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn table_round_trip(h in partite()) {
        prop_assert_eq!(parse_table_format(&serialize_table(&h)).unwrap(), h);
    }

    #[test]
    fn digit_round_trip(h in partite()) {
        let h = h.strip_isolated();
        let text = serialize_digit_format(&h).unwrap();
        prop_assert_eq!(parse_digit_format(&text, h.r()).unwrap(), h);
    }

    #[test]
    fn general_view_preserves_tau_and_nu(h in partite()) {
        let g = h.to_general();
        let t = tau(&h).unwrap().0;
        prop_assert_eq!(tau(&g).unwrap().0, t);
        prop_assert_eq!(nu(&g).0, nu(&h).0);
        prop_assert_eq!(common::brute_tau(&h, u64::MAX), Some(t));
        prop_assert_eq!(common::brute_nu(&h), nu(&h).0);
    }

    #[test]
    fn linear_implies_intersecting(h in partite()) {
        prop_assume!(h.edges().len() >= 2);
        if is_linear(&h).unwrap() {
            prop_assert!(is_intersecting(&h).unwrap());
        }
    }

    #[test]
    fn canonical_form_is_invariant((h, perm, relabel) in with_symmetry()) {
        let moved = h.permuted(&perm, &relabel).unwrap();
        prop_assert_eq!(canonical_form(&moved), canonical_form(&h));
    }

    #[test]
    fn remove_star_drops_the_degree(h in partite(), pick in any::<prop::sample::Index>()) {
        let verts = flat_vertices(&h);
        let v = verts[pick.index(verts.len())];
        let d = degree_of(&h, v).unwrap();
        let reduced = h.remove_star(v).unwrap();
        prop_assert_eq!(h.edges().len() - reduced.hypergraph.edges().len(), d);
    }

    #[test]
    fn deleting_vertices_removes_whole_edges(h in partite(), pick in any::<prop::sample::Index>()) {
        let verts = flat_vertices(&h);
        let v = verts[pick.index(verts.len())];
        let reduced = h.delete_vertices(&BTreeSet::from([v])).unwrap();
        let meeting = h.edges().iter().filter(|e| e[v.side as usize] == v.index as usize).count();
        prop_assert_eq!(reduced.hypergraph.edges().len(), h.edges().len() - meeting);
        prop_assert!(reduced.hypergraph.edges().iter().all(|e| e.len() == h.r()));
    }

    #[test]
    fn witnesses_recheck_and_repeat(h in partite()) {
        let (t, c) = tau(&h).unwrap();
        let (n, m) = nu(&h);
        prop_assert!(c.is_valid_for(&h) && c.len() == t);
        prop_assert!(m.is_valid_for(&h) && m.len() == n);
        prop_assert_eq!(tau(&h).unwrap().1, c);
        prop_assert_eq!(nu(&h).1, m);
        prop_assert!(t <= h.r() * n);
        prop_assert!(greedy_cover(&h).unwrap().is_valid_for(&h));
    }

    #[test]
    fn duplicate_edges_change_nothing(h in partite()) {
        let mut doubled = h.edges().to_vec();
        doubled.extend_from_slice(h.edges());
        let d = PartiteHypergraph::new(h.side_sizes().to_vec(), doubled).unwrap();
        prop_assert_eq!(tau(&d).unwrap().0, tau(&h).unwrap().0);
        prop_assert_eq!(nu(&d).0, nu(&h).0);
    }

    #[test]
    fn matching_number_one_iff_intersecting(h in partite()) {
        prop_assume!(h.edges().len() >= 2);
        prop_assert_eq!(nu(&h).0 == 1, is_intersecting(&h).unwrap());
    }

    #[test]
    fn greedy_within_half_on_intersecting(h in intersecting()) {
        prop_assume!(h.edges().len() >= 2);
        prop_assert!(greedy_cover(&h).unwrap().len() <= h.edges().len().div_ceil(2));
    }

    #[test]
    fn lemma_checkers_hold_when_applicable(h in intersecting()) {
        for report in [check_stndrdcnt(&h).unwrap(), check_sidecover(&h).unwrap()] {
            prop_assert!(report.precondition_failed() || report.overall(), "{}", report.to_text());
        }
    }

    #[test]
    fn mindeg_floor_monotone(r in 3usize..400, t in 1usize..399) {
        prop_assume!(t + 1 < r);
        prop_assert!(mindeg_floor(r, t) <= mindeg_floor(r, t + 1));
        if t >= 2 {
            prop_assert!(mindeg_floor(r + 1, t) <= mindeg_floor(r, t));
        }
    }

    #[test]
    fn lb_f_monotone(r in 3usize..2000) {
        prop_assert!(lb_f(r) >= lb_f(r - 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fractional_chain_and_duality(h in partite()) {
        let (ts, cover) = tau_star(&h).unwrap();
        let (ns, packing) = nu_star(&h).unwrap();
        prop_assert_eq!(&ts, &ns);
        prop_assert!(cover.is_valid_for(&h));
        prop_assert_eq!(packing.total(), ns.clone());
        prop_assert!(integer(nu(&h).0) <= ns);
        prop_assert!(ts <= integer(tau(&h).unwrap().0));
    }

    #[test]
    fn fractional_theorems_hold(h in partite()) {
        prop_assert!(verify_smallh(&h).unwrap().overall());
        let w = lovasz_frac_witness(&h).unwrap();
        prop_assert!(w.drop() >= rational(1, 1));
    }

    #[test]
    fn scaling_the_objective_scales_the_value(h in partite(), num in 1i64..20, den in 1i64..20) {
        let n = h.vertex_count();
        let rows: Vec<Constraint> = (0..h.edge_count())
            .map(|e| {
                let mut row = vec![rational(0, 1); n];
                for v in h.edge_vertices(e) {
                    row[v] = rational(1, 1);
                }
                Constraint::new(row, rational(1, 1))
            })
            .collect();
        let ones = vec![rational(1, 1); n];
        let c = rational(num, den);
        let scaled: Vec<Rational> = ones.iter().map(|x| x * &c).collect();
        let a = lp_min(&rows, &ones).unwrap();
        let b = lp_min(&rows, &scaled).unwrap();
        prop_assert_eq!(b.value, a.value * &c);
        let support = |p: &[Rational]| p.iter().map(|x| *x != rational(0, 1)).collect::<Vec<_>>();
        prop_assert_eq!(support(&b.point), support(&a.point));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn search_verdict_ignores_enumeration_order(m in 2usize..=4, t in 2usize..=3) {
        let forward = extremal_search(3, m, t, SearchOptions::default()).unwrap();
        let reverse = extremal_search(3, m, t, SearchOptions { reverse: true, ..SearchOptions::default() }).unwrap();
        prop_assert_eq!(forward.is_absent(), reverse.is_absent());
        prop_assert_eq!(forward.classes_per_level, reverse.classes_per_level);
    }
}
