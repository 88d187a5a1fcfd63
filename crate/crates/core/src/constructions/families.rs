use crate::error::{Error, Result};
use crate::hypergraph::{parse_digit_format, PartiteHypergraph};

pub const F7_DIGITS: &str = "1111111 2154322 3332221 4325512 1235354 1344433 1424266 2222135 2313664 \
3514555 3655163 4136465 4412343 4551234 5123253 5361365 6142564";

pub const F6_DIGITS: &str = "111111 222211 333131 444114 553315 143252 125334 213444 255153 241535 351224 514233 545421";

pub const F6_LINEAR_DIGITS: &str =
    "111111 212222 221333 322144 333213 413354 424412 432531 441245 514543 525251 543132 552315";

/// 17 edges on 7 sides of 6 vertices, not linear, `tau = 6`.
pub fn example_f7() -> PartiteHypergraph {
    parse_digit_format(F7_DIGITS, 7).expect("embedded table")
}

/// 13 edges on 6 sides of 5 vertices, not linear, `tau = 5`.
pub fn example_f6() -> PartiteHypergraph {
    parse_digit_format(F6_DIGITS, 6).expect("embedded table")
}

/// 13 edges on 6 sides of 5 vertices, linear, `tau = 5`.
pub fn example_f6_linear() -> PartiteHypergraph {
    parse_digit_format(F6_LINEAR_DIGITS, 6).expect("embedded table")
}

/// Round-robin 1-factorization of `K_{r+1}` with hub `r`, read as a 2-regular
/// linear hypergraph on `r + 1` lines, minus the hub's line.
///
/// Side `k` is round `k`, whose pairs are `{r, k}` (vertex 0) and
/// `{k + i, k - i} mod r` (vertex `i`) for `i = 1..(r-1)/2`.
pub fn one_factorization_instance(r: usize) -> Result<PartiteHypergraph> {
    if r < 3 || r % 2 == 0 {
        return Err(Error::Domain(format!("needs odd r >= 3, got {r}")));
    }
    let half = (r - 1) / 2;
    let edges = (0..r)
        .map(|u| {
            (0..r)
                .map(|k| {
                    let i = (u + r - k) % r;
                    if i > half {
                        r - i
                    } else {
                        i
                    }
                })
                .collect()
        })
        .collect();
    PartiteHypergraph::new(vec![half + 1; r], edges)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

pub const BIASED_MAX_R: usize = 8;

/// `r - 2` edges `e_i` through the first vertex of the last side and
/// vertex `i` of every other side, plus one edge through the second vertex
/// of the last side per permutation `sigma` (lexicographic order), after
/// which vertex `r - 1` of each of the first `r - 1` sides is split so
/// that each of its edges gets its own vertex.
pub fn biased_counterexample(r: usize) -> Result<PartiteHypergraph> {
    if !(4..=BIASED_MAX_R).contains(&r) {
        return Err(Error::Domain(format!("needs 4 <= r <= {BIASED_MAX_R}, got {r}")));
    }
    let split = r - 2;
    let mut edges: Vec<Vec<usize>> = (0..r - 2)
        .map(|i| {
            let mut e = vec![i; r - 1];
            e.push(0);
            e
        })
        .collect();
    for sigma in permutations(r - 1) {
        let mut e = sigma;
        e.push(1);
        edges.push(e);
    }
    let mut next = vec![split; r - 1];
    for e in edges.iter_mut() {
        for (side, v) in e.iter_mut().take(r - 1).enumerate() {
            if *v == split {
                *v = next[side];
                next[side] += 1;
            }
        }
    }
    let mut sizes = next;
    sizes.push(2);
    PartiteHypergraph::new(sizes, edges)
}

pub const EXPONENTIAL_R_RANGE: std::ops::RangeInclusive<usize> = 4..=12;

/// Side 1 has a vertex `v_P` per `P = {2} ∪ Q`, `Q ⊆ {3..r}`, indexed by the
/// bitmask of `Q`; side `i > 1` has `a_i` (vertex 0) and `b_i` (vertex 1).
/// Each `P` gives the edges `v_P + a_P + b_rest` and `v_P + b_P + a_rest`.
pub fn exponential_counterexample(r: usize) -> Result<PartiteHypergraph> {
    if !EXPONENTIAL_R_RANGE.contains(&r) {
        return Err(Error::Domain(format!(
            "needs {} <= r <= {}, got {r}",
            EXPONENTIAL_R_RANGE.start(),
            EXPONENTIAL_R_RANGE.end()
        )));
    }
    let count = 1usize << (r - 2);
    let mut edges = Vec::with_capacity(2 * count);
    for q in 0..count {
        let in_p = |side: usize| side == 1 || (side >= 2 && q >> (side - 2) & 1 == 1);
        for flip in [0, 1] {
            let mut e = vec![q];
            e.extend((1..r).map(|side| usize::from(in_p(side)) ^ 1 ^ flip));
            edges.push(e);
        }
    }
    let mut sizes = vec![2; r];
    sizes[0] = count;
    PartiteHypergraph::new(sizes, edges)
}

/// Named constructions accepted by [`construct_by_name`].
pub const CONSTRUCTION_NAMES: &[&str] = &["tpp", "oval", "onefact", "f7", "f6", "f6linear", "biased", "expside"];

/// Builds a partite construction from its short name and integer parameter.
pub fn construct_by_name(name: &str, param: Option<usize>) -> Result<PartiteHypergraph> {
    let need = || param.ok_or_else(|| Error::Domain(format!("construction `{name}` needs a parameter")));
    let fixed = |h: PartiteHypergraph| match param {
        Some(_) => Err(Error::Domain(format!("construction `{name}` takes no parameter"))),
        None => Ok(h),
    };
    match name {
        "tpp" => super::truncated_projective_plane(need()?),
        "oval" => super::oval_secant_subplane(need()?),
        "onefact" => one_factorization_instance(need()?),
        "biased" => biased_counterexample(need()?),
        "expside" => exponential_counterexample(need()?),
        "f7" => fixed(example_f7()),
        "f6" => fixed(example_f6()),
        "f6linear" => fixed(example_f6_linear()),
        _ => Err(Error::Domain(format!("unknown construction `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::hypergraph::{serialize_digit_format, Hypergraph};

    fn side_degrees(h: &PartiteHypergraph) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for e in h.edges() {
            for (s, &v) in e.iter().enumerate() {
                *out.entry((s, v)).or_insert(0) += 1;
            }
        }
        out
    }

    #[test]
    fn examples_byte_match_their_tables() {
        let norm = |s: &str| s.split_whitespace().collect::<Vec<_>>().join(" ") + "\n";
        assert_eq!(serialize_digit_format(&example_f7()).unwrap(), norm(F7_DIGITS));
        assert_eq!(serialize_digit_format(&example_f6()).unwrap(), norm(F6_DIGITS));
        assert_eq!(serialize_digit_format(&example_f6_linear()).unwrap(), norm(F6_LINEAR_DIGITS));
    }

    #[test]
    fn example_sizes() {
        let f7 = example_f7();
        assert_eq!((f7.edge_count(), f7.vertex_count()), (17, 42));
        let f6 = example_f6();
        assert_eq!((f6.edge_count(), f6.vertex_count()), (13, 30));
    }

    #[test]
    fn one_factorization_degrees() {
        let h = one_factorization_instance(5).unwrap();
        let deg = side_degrees(&h);
        for s in 0..5 {
            assert_eq!(deg[&(s, 0)], 1);
            assert_eq!(deg[&(s, 1)], 2);
            assert_eq!(deg[&(s, 2)], 2);
        }
        assert!(one_factorization_instance(4).is_err());
    }

    #[test]
    fn biased_shape() {
        let h = biased_counterexample(4).unwrap();
        assert_eq!(h.edge_count(), 8);
        assert_eq!(h.side_sizes(), &[4, 4, 4, 2]);
        let h = biased_counterexample(5).unwrap();
        assert_eq!(h.edge_count(), 27);
        assert_eq!(h.side_sizes(), &[9, 9, 9, 9, 2]);
        assert!(biased_counterexample(3).is_err());
        assert!(biased_counterexample(9).is_err());
    }

    #[test]
    fn exponential_shape() {
        let h = exponential_counterexample(4).unwrap();
        assert_eq!(h.side_sizes(), &[4, 2, 2, 2]);
        assert_eq!(h.edge_count(), 8);
        // P = {2}: a_2 b_3 b_4, then b_2 a_3 a_4
        assert_eq!(h.edges()[0], vec![0, 0, 1, 1]);
        assert_eq!(h.edges()[1], vec![0, 1, 0, 0]);
        assert!(exponential_counterexample(13).is_err());
    }

    #[test]
    fn construct_names() {
        assert_eq!(construct_by_name("tpp", Some(3)).unwrap().edge_count(), 9);
        assert!(construct_by_name("f7", Some(1)).is_err());
        assert!(construct_by_name("tpp", None).is_err());
        assert!(construct_by_name("nope", None).is_err());
    }
}
