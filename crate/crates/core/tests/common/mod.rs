//! Brute-force oracles that share no code with the library solvers.

#![allow(dead_code)]

use ryser_core::{Hypergraph, PartiteHypergraph};

/// For each flat vertex, the bitmask of edges containing it.
pub fn incidence_masks<H: Hypergraph + ?Sized>(h: &H) -> Vec<u64> {
    assert!(h.edge_count() <= 64, "oracle handles at most 64 edges");
    let mut masks = vec![0u64; h.vertex_count()];
    for e in 0..h.edge_count() {
        for v in h.edge_vertices(e) {
            masks[v] |= 1 << e;
        }
    }
    masks
}

fn full(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Plain k-subset enumeration; `budget` counts subsets visited.
fn some_cover(masks: &[u64], all: u64, k: usize, start: usize, acc: u64, budget: &mut u64) -> Option<bool> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    if acc == all {
        return Some(true);
    }
    if k == 0 {
        return Some(false);
    }
    for v in start..masks.len() {
        if some_cover(masks, all, k - 1, v + 1, acc | masks[v], budget)? {
            return Some(true);
        }
    }
    Some(false)
}

/// Is there a cover with at most `k` vertices? `None` when more than
/// `budget` subsets would be needed.
pub fn has_cover_leq<H: Hypergraph + ?Sized>(h: &H, k: usize, budget: u64) -> Option<bool> {
    let masks = incidence_masks(h);
    let mut b = budget;
    some_cover(&masks, full(h.edge_count()), k, 0, 0, &mut b)
}

/// Smallest cover size by increasing k.
pub fn brute_tau<H: Hypergraph + ?Sized>(h: &H, budget: u64) -> Option<usize> {
    let masks = incidence_masks(h);
    let all = full(h.edge_count());
    let mut b = budget;
    (0..=h.vertex_count()).find_map(|k| match some_cover(&masks, all, k, 0, 0, &mut b) {
        Some(true) => Some(Some(k)),
        Some(false) => None,
        None => Some(None),
    })?
}

/// Largest set of pairwise disjoint edges, by exhaustive recursion.
pub fn brute_nu<H: Hypergraph + ?Sized>(h: &H) -> usize {
    let edges: Vec<Vec<usize>> = (0..h.edge_count()).map(|e| h.edge_vertices(e)).collect();
    fn go(edges: &[Vec<usize>], i: usize, used: &mut Vec<bool>) -> usize {
        if i == edges.len() {
            return 0;
        }
        let skip = go(edges, i + 1, used);
        if edges[i].iter().any(|&v| used[v]) {
            return skip;
        }
        for &v in &edges[i] {
            used[v] = true;
        }
        let take = 1 + go(edges, i + 1, used);
        for &v in &edges[i] {
            used[v] = false;
        }
        skip.max(take)
    }
    go(&edges, 0, &mut vec![false; h.vertex_count()])
}

/// Pairwise edge meets computed directly from the partite rows.
pub fn brute_intersecting(h: &PartiteHypergraph) -> bool {
    let e = h.edges();
    (0..e.len()).all(|i| (i + 1..e.len()).all(|j| e[i].iter().zip(&e[j]).any(|(a, b)| a == b)))
}

pub fn brute_linear(h: &PartiteHypergraph) -> bool {
    let e = h.edges();
    (0..e.len()).all(|i| (i + 1..e.len()).all(|j| e[i].iter().zip(&e[j]).filter(|(a, b)| a == b).count() == 1))
}

/// Every vertex subset avoiding `side`, cheapest cover first; returns the
/// minimum size (None if impossible within `max_k`).
pub fn brute_avoiding(h: &PartiteHypergraph, side: usize, max_k: usize) -> Option<usize> {
    let keep: Vec<usize> = (0..h.vertex_count())
        .filter(|&v| h.vertex_ref(v).side as usize != side)
        .collect();
    let all_masks = incidence_masks(h);
    let masks: Vec<u64> = keep.iter().map(|&v| all_masks[v]).collect();
    let all = full(h.edge_count());
    let mut unlimited = u64::MAX;
    (0..=max_k).find(|&k| some_cover(&masks, all, k, 0, 0, &mut unlimited) == Some(true))
}

/// Exhaustive minimum of `|C ∩ V_d| + |C \ V_d| / (r - 1)` over all vertex
/// subsets, as a reduced fraction `(numerator, denominator)`.
pub fn brute_biased(h: &PartiteHypergraph, side: usize) -> (u64, u64) {
    let n = h.vertex_count();
    assert!(n <= 24, "oracle enumerates 2^n subsets");
    let masks = incidence_masks(h);
    let all = full(h.edge_count());
    let r = h.r() as u64;
    let mut best = u64::MAX;
    for subset in 0u32..(1 << n) {
        let mut acc = 0;
        let mut cost = 0;
        for v in 0..n {
            if subset >> v & 1 == 1 {
                acc |= masks[v];
                cost += if h.vertex_ref(v).side as usize == side { r - 1 } else { 1 };
            }
        }
        if acc == all {
            best = best.min(cost);
        }
    }
    let g = gcd(best, r - 1);
    (best / g, (r - 1) / g)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
