//! Constructive checks of the fractional cover results for partite hypergraphs.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::{integer, lp_min, nu_star, tau_star, Constraint, EdgeWeighting, Rational};
use crate::certificates::{CertificateReport, Claim, Relation};
use crate::error::{Error, Result};
use crate::hypergraph::{degrees, Hypergraph, PartiteHypergraph, VertexDeletion, VertexRef};
use crate::solvers::nu;

fn check_side(h: &PartiteHypergraph, side: usize) -> Result<()> {
    if side >= h.r() {
        return Err(Error::OutOfBounds(format!("side {} of {}", side + 1, h.r())));
    }
    Ok(())
}

/// Solves for a basic optimal fractional cover and counts the sides whose
/// non-isolated vertices all carry positive weight; passes when at most one does.
pub fn verify_smallh(h: &PartiteHypergraph) -> Result<CertificateReport> {
    if h.r() < 2 {
        return Err(Error::Domain("needs r >= 2".into()));
    }
    let (value, cover) = tau_star(h)?;
    let deg = degrees(h);
    let mut positive_sides = Vec::new();
    for side in 0..h.r() {
        let mut live = (0..h.side_sizes()[side])
            .map(|i| VertexRef::new(side, i))
            .filter(|&v| deg[h.flat_index(v).expect("in range")] > 0)
            .peekable();
        if live.peek().is_some() && live.all(|v| cover.weight(v) > Rational::zero()) {
            positive_sides.push(side + 1);
        }
    }

    let mut report = CertificateReport::new("smallh", Some(h.fingerprint()));
    report.claim(Claim::holds("basic optimum is a fractional cover", cover.is_valid_for(h)));
    report.claim(Claim::compare(
        "sides with all weights positive",
        &positive_sides.len(),
        Relation::Le,
        &1,
    ));
    report.witness(format!("tau* = {value}"));
    let support: Vec<String> = cover
        .weights
        .iter()
        .filter(|(_, w)| !w.is_zero())
        .map(|(v, w)| format!("{v}={w}"))
        .collect();
    report.witness(format!("support {}", support.join(" ")));
    Ok(report)
}

/// Set `S = e \ {v}` whose deletion lowers the fractional matching number by at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LovaszWitness {
    pub edge: usize,
    pub vertex: VertexRef,
    pub removed: BTreeSet<VertexRef>,
    pub before: Rational,
    pub after: Rational,
    /// False when the exhaustive fallback produced the pair.
    pub from_basic_solution: bool,
}

impl LovaszWitness {
    pub fn drop(&self) -> Rational {
        &self.before - &self.after
    }
}

fn try_pair(h: &PartiteHypergraph, e: usize, v: VertexRef, before: &Rational) -> Result<Option<LovaszWitness>> {
    let removed: BTreeSet<VertexRef> = (0..h.r())
        .map(|s| VertexRef::new(s, h.edges()[e][s]))
        .filter(|&u| u != v)
        .collect();
    let after = nu_star(&h.delete_vertices(&removed)?.hypergraph)?.0;
    if before - &after >= Rational::one() {
        return Ok(Some(LovaszWitness {
            edge: e,
            vertex: v,
            removed,
            before: before.clone(),
            after,
            from_basic_solution: true,
        }));
    }
    Ok(None)
}

/// Takes a zero-weight vertex `v` of a basic optimal fractional cover on
/// some edge `e` and checks `nu*(H - (e \ {v})) <= nu*(H) - 1` exactly.
/// Falls back to trying every pair when no such vertex lies on an edge.
pub fn lovasz_frac_witness(h: &PartiteHypergraph) -> Result<LovaszWitness> {
    if h.edge_count() == 0 {
        return Err(Error::Domain("needs at least one edge".into()));
    }
    let before = nu_star(h)?.0;
    let (_, cover) = tau_star(h)?;
    let pairs = || {
        (0..h.edge_count()).flat_map(move |e| (0..h.r()).map(move |s| (e, VertexRef::new(s, h.edges()[e][s]))))
    };
    for (e, v) in pairs().filter(|&(_, v)| cover.weight(v).is_zero()) {
        if let Some(w) = try_pair(h, e, v, &before)? {
            return Ok(w);
        }
    }
    for (e, v) in pairs() {
        if let Some(mut w) = try_pair(h, e, v, &before)? {
            w.from_basic_solution = false;
            return Ok(w);
        }
    }
    Err(Error::Internal("no edge-minus-vertex set lowers nu*".into()))
}

/// `β` on the one-vertex side and `α` on edges such that `Σβ + Σα <= ν(H)`
/// and `β χ_u + Σ α_e χ_{e \ V_1}` is a fractional cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalStrongWitness {
    pub side: usize,
    pub beta: BTreeMap<VertexRef, u8>,
    pub alpha: EdgeWeighting,
    pub total: Rational,
    pub nu: usize,
}

impl FractionalStrongWitness {
    /// Independent re-check of both conditions against `h`.
    pub fn is_valid_for(&self, h: &PartiteHypergraph) -> bool {
        let beta_sum: usize = self.beta.values().map(|&b| b as usize).sum();
        let total = integer(beta_sum) + self.alpha.total();
        if total != self.total || total > integer(nu(h).0) {
            return false;
        }
        h.edges().iter().all(|f| {
            let from_beta = self.beta.get(&VertexRef::new(self.side, f[self.side])).copied().unwrap_or(0);
            let from_alpha: Rational = self
                .alpha
                .alpha
                .iter()
                .map(|(&e, a)| {
                    let shared = (0..h.r())
                        .filter(|&s| s != self.side && h.edges()[e][s] == f[s])
                        .count();
                    a * integer(shared)
                })
                .sum();
            integer(from_beta as usize) + from_alpha >= Rational::one()
        })
    }
}

/// Largest side the β enumeration accepts.
pub const STRONG_WITNESS_SIDE_LIMIT: usize = 20;

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            let stop = rec(i + 1, n, k, cur, f)?;
            cur.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Treats side `v1` as the one-vertex part of a (1, r-1) partition and
/// enumerates `β` sets by ascending size, solving for the cheapest `α` each time.
pub fn fractional_strong_witness(h: &PartiteHypergraph, v1: usize) -> Result<FractionalStrongWitness> {
    check_side(h, v1)?;
    let side_size = h.side_sizes()[v1];
    if side_size > STRONG_WITNESS_SIDE_LIMIT {
        return Err(Error::Capacity(format!(
            "side {} has {side_size} vertices; enumeration is limited to {STRONG_WITNESS_SIDE_LIMIT}",
            v1 + 1
        )));
    }
    let matching_number = nu(h).0;
    let target = integer(matching_number);
    let m = h.edge_count();
    let shared = |e: usize, f: usize| {
        (0..h.r())
            .filter(|&s| s != v1 && h.edges()[e][s] == h.edges()[f][s])
            .count()
    };

    let mut found = None;
    for size in 0..=side_size.min(matching_number) {
        let done = combinations(side_size, size, &mut |chosen| {
            let rows: Vec<Constraint> = (0..m)
                .filter(|&f| !chosen.contains(&h.edges()[f][v1]))
                .map(|f| Constraint::new((0..m).map(|e| integer(shared(e, f))).collect(), Rational::one()))
                .collect();
            let sol = match lp_min(&rows, &vec![Rational::one(); m]) {
                Ok(sol) => sol,
                Err(Error::Infeasible) => return Ok(false),
                Err(e) => return Err(e),
            };
            let total = integer(chosen.len()) + &sol.value;
            if total <= target {
                let beta = (0..side_size)
                    .map(|i| (VertexRef::new(v1, i), u8::from(chosen.contains(&i))))
                    .collect();
                let positions: Vec<usize> = (0..m).collect();
                found = Some(FractionalStrongWitness {
                    side: v1,
                    beta,
                    alpha: EdgeWeighting::from_point(&sol.point, &positions),
                    total,
                    nu: matching_number,
                });
                return Ok(true);
            }
            Ok(false)
        })?;
        if done {
            break;
        }
    }
    found.ok_or_else(|| Error::Internal("no (beta, alpha) pair reaches nu".into()))
}

/// Checks `tau* <= (r - 1) nu` with side `v1` as the one-vertex part.
pub fn furedi_check(h: &PartiteHypergraph, v1: usize) -> Result<CertificateReport> {
    check_side(h, v1)?;
    let (t, _) = tau_star(h)?;
    let (n, _) = nu(h);
    let bound = integer((h.r() - 1) * n);
    let mut report = CertificateReport::new(format!("furedi (V1 = side {})", v1 + 1), Some(h.fingerprint()));
    report.claim(Claim::compare("tau* <= (r-1) nu", &t, Relation::Le, &bound));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractional::rational;
    use crate::hypergraph::parse_digit_format;

    #[test]
    fn smallh_single_edge() {
        let h = parse_digit_format("111", 3).unwrap();
        assert!(verify_smallh(&h).unwrap().overall());
    }

    #[test]
    fn lovasz_single_edge_and_two_disjoint() {
        let h = parse_digit_format("111", 3).unwrap();
        let w = lovasz_frac_witness(&h).unwrap();
        assert_eq!((w.before.clone(), w.after.clone()), (integer(1), integer(0)));
        assert_eq!(w.removed.len(), 2);
        let h = parse_digit_format("111 222", 3).unwrap();
        let w = lovasz_frac_witness(&h).unwrap();
        assert_eq!((w.before, w.after), (integer(2), integer(1)));
    }

    #[test]
    fn strong_single_edge() {
        let h = parse_digit_format("111", 3).unwrap();
        let w = fractional_strong_witness(&h, 0).unwrap();
        assert_eq!(w.beta.values().copied().collect::<Vec<_>>(), vec![0]);
        // alpha_e counts once per vertex of e minus V_1
        assert_eq!(w.alpha.get(0), rational(1, 2));
        assert_eq!(w.total, rational(1, 2));
        assert!(w.is_valid_for(&h));
    }

    #[test]
    fn strong_with_a_single_side_one_vertex() {
        // intersecting, |V_1| = 1: beta = 1 on the only V_1 vertex suffices
        let h = parse_digit_format("111 122 133", 3).unwrap();
        let w = fractional_strong_witness(&h, 0).unwrap();
        assert!(w.is_valid_for(&h));
        assert!(w.total <= integer(1));
    }

    #[test]
    fn strong_capacity_limit() {
        let edges = (0..21).map(|i| vec![i, 0]).collect();
        let h = PartiteHypergraph::new(vec![21, 1], edges).unwrap();
        assert!(matches!(fractional_strong_witness(&h, 0), Err(Error::Capacity(_))));
    }

    #[test]
    fn furedi_single_edge() {
        let h = parse_digit_format("111", 3).unwrap();
        assert!(furedi_check(&h, 0).unwrap().overall());
        assert!(furedi_check(&h, 5).is_err());
    }
}
