//! Fractional covers and matchings, solved exactly over the rationals.

mod simplex;
mod theorems;

pub use simplex::{lp_min, Constraint, LpSolution};
pub use theorems::{
    fractional_strong_witness, furedi_check, lovasz_frac_witness, verify_smallh,
    FractionalStrongWitness, LovaszWitness,
};

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{Fingerprint, Hypergraph, VertexRef};
use crate::solvers::Incidence;

/// Exact rational with arbitrary-precision numerator and denominator.
/// Displays as `p/q`, or `p` when the denominator is 1.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

pub fn integer(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Non-negative vertex weights with total at least 1 on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalCover {
    pub weights: BTreeMap<VertexRef, Rational>,
    pub value: Rational,
    pub certified_for: Fingerprint,
}

impl FractionalCover {
    pub fn weight(&self, v: VertexRef) -> Rational {
        self.weights.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    /// Re-checks every edge constraint and the stated value.
    pub fn is_valid_for<H: Hypergraph + ?Sized>(&self, h: &H) -> bool {
        if self.certified_for != h.fingerprint() {
            return false;
        }
        if self.weights.values().any(|w| w < &Rational::zero()) {
            return false;
        }
        let total: Rational = self.weights.values().sum();
        total == self.value
            && (0..h.edge_count()).all(|e| {
                let s: Rational = h.edge_vertices(e).iter().map(|&v| self.weight(h.vertex_ref(v))).sum();
                s >= Rational::one()
            })
    }
}

/// Non-negative coefficients on edge positions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeWeighting {
    pub alpha: BTreeMap<usize, Rational>,
}

impl EdgeWeighting {
    pub fn total(&self) -> Rational {
        self.alpha.values().sum()
    }

    pub fn get(&self, e: usize) -> Rational {
        self.alpha.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    fn from_point(point: &[Rational], positions: &[usize]) -> Self {
        EdgeWeighting {
            alpha: positions
                .iter()
                .zip(point)
                .filter(|(_, x)| !x.is_zero())
                .map(|(&e, x)| (e, x.clone()))
                .collect(),
        }
    }
}

fn require_edges<H: Hypergraph + ?Sized>(h: &H, what: &str) -> Result<()> {
    if h.edge_count() == 0 {
        return Err(Error::Domain(format!("{what} needs at least one edge")));
    }
    Ok(())
}

/// Fractional covering number with a basic optimal fractional cover.
pub fn tau_star<H: Hypergraph + ?Sized>(h: &H) -> Result<(Rational, FractionalCover)> {
    require_edges(h, "tau*")?;
    let inc = Incidence::new(h);
    let n = inc.vertex_count;
    let rows: Vec<Constraint> = inc
        .edges
        .iter()
        .map(|e| {
            let mut coeffs = vec![Rational::zero(); n];
            for &v in e {
                coeffs[v] = Rational::one();
            }
            Constraint::new(coeffs, Rational::one())
        })
        .collect();
    let sol = lp_min(&rows, &vec![Rational::one(); n])?;
    let weights = sol
        .point
        .iter()
        .enumerate()
        .map(|(v, w)| (h.vertex_ref(v), w.clone()))
        .collect();
    let cover = FractionalCover {
        weights,
        value: sol.value.clone(),
        certified_for: h.fingerprint(),
    };
    Ok((sol.value, cover))
}

/// Fractional matching number, solved as its own packing program
/// (`max Σ y_e` with `Σ_{e ∋ v} y_e <= 1`). An empty hypergraph gives 0.
pub fn nu_star<H: Hypergraph + ?Sized>(h: &H) -> Result<(Rational, EdgeWeighting)> {
    let m = h.edge_count();
    if m == 0 {
        return Ok((Rational::zero(), EdgeWeighting::default()));
    }
    let mut incident = vec![Vec::new(); h.vertex_count()];
    for e in 0..m {
        for v in h.edge_vertices(e) {
            incident[v].push(e);
        }
    }
    let rows: Vec<Constraint> = incident
        .iter()
        .filter(|es| !es.is_empty())
        .map(|es| {
            let mut coeffs = vec![Rational::zero(); m];
            for &e in es {
                coeffs[e] = -Rational::one();
            }
            Constraint::new(coeffs, -Rational::one())
        })
        .collect();
    let sol = lp_min(&rows, &vec![-Rational::one(); m])?;
    let positions: Vec<usize> = (0..m).collect();
    Ok((-sol.value, EdgeWeighting::from_point(&sol.point, &positions)))
}

/// Least total of edge coefficients such that every edge `f` collects
/// coefficient mass at least 1 from the edges meeting it:
/// `Σ_{e ∩ f ≠ ∅} α_e >= 1`. Equals 1 on every intersecting hypergraph.
pub fn tau_s<H: Hypergraph + ?Sized>(h: &H) -> Result<(Rational, EdgeWeighting)> {
    edge_weighted_cover(h, |e, f| usize::from(meet(e, f) > 0))
}

/// Variant in which `e` contributes `α_e |e ∩ f|` to edge `f`, so that
/// `Σ α_e χ_e` is a fractional cover in the vertex-weight sense.
pub fn tau_s_multiplicity<H: Hypergraph + ?Sized>(h: &H) -> Result<(Rational, EdgeWeighting)> {
    edge_weighted_cover(h, meet)
}

fn meet(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

fn edge_weighted_cover<H: Hypergraph + ?Sized>(
    h: &H,
    coefficient: impl Fn(&[usize], &[usize]) -> usize,
) -> Result<(Rational, EdgeWeighting)> {
    require_edges(h, "tau_s")?;
    let inc = Incidence::new(h);
    let m = inc.edges.len();
    let rows: Vec<Constraint> = inc
        .edges
        .iter()
        .map(|f| {
            let coeffs = inc.edges.iter().map(|e| integer(coefficient(e, f))).collect();
            Constraint::new(coeffs, Rational::one())
        })
        .collect();
    let sol = lp_min(&rows, &vec![Rational::one(); m])?;
    Ok((sol.value, EdgeWeighting::from_point(&sol.point, &inc.origin)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{parse_digit_format, GeneralHypergraph};

    #[test]
    fn single_edge() {
        let h = parse_digit_format("111", 3).unwrap();
        let (t, cover) = tau_star(&h).unwrap();
        assert_eq!(t, integer(1));
        assert!(cover.is_valid_for(&h));
        assert_eq!(nu_star(&h).unwrap().0, integer(1));
        assert_eq!(tau_s(&h).unwrap().0, integer(1));
        assert_eq!(tau_s_multiplicity(&h).unwrap().0, rational(1, 3));
    }

    #[test]
    fn two_disjoint_edges() {
        let h = parse_digit_format("111 222", 3).unwrap();
        assert_eq!(tau_star(&h).unwrap().0, integer(2));
        assert_eq!(nu_star(&h).unwrap().0, integer(2));
        assert_eq!(tau_s(&h).unwrap().0, integer(2));
        assert_eq!(tau_s_multiplicity(&h).unwrap().0, rational(2, 3));
    }

    #[test]
    fn fano_multiplicity_variant() {
        // each line meets itself in 3 points and the other six lines once
        let g = crate::constructions::projective_plane(2).unwrap();
        assert_eq!(tau_s(&g).unwrap().0, integer(1));
        assert_eq!(tau_s_multiplicity(&g).unwrap().0, rational(7, 9));
    }

    #[test]
    fn triangle_graph() {
        let g = GeneralHypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(tau_star(&g).unwrap().0, rational(3, 2));
        let (v, y) = nu_star(&g).unwrap();
        assert_eq!(v, rational(3, 2));
        assert_eq!(y.total(), v);
    }

    #[test]
    fn empty_is_rejected_where_required() {
        let g = GeneralHypergraph::new(2, vec![]).unwrap();
        assert!(tau_star(&g).is_err());
        assert!(tau_s(&g).is_err());
        assert_eq!(nu_star(&g).unwrap().0, integer(0));
    }

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(rational(14, 6).to_string(), "7/3");
        assert_eq!(rational(4, 2).to_string(), "2");
    }
}
