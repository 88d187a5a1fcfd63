use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Cover, Incidence};
use crate::error::{Error, Result};
use crate::fractional::Rational;
use crate::hypergraph::{Hypergraph, PartiteHypergraph, VertexRef};

struct WeightedSearch<'a> {
    inc: &'a Incidence,
    weight: &'a [Rational],
    hits: Vec<u32>,
    banned: Vec<bool>,
    chosen: Vec<usize>,
    cost: Rational,
    uncovered: usize,
    best: Option<(Rational, Vec<usize>)>,
}

impl WeightedSearch<'_> {
    fn set(&mut self, v: usize, on: bool) {
        for &e in &self.inc.vertex_edges[v] {
            if on {
                if self.hits[e] == 0 {
                    self.uncovered -= 1;
                }
                self.hits[e] += 1;
            } else {
                self.hits[e] -= 1;
                if self.hits[e] == 0 {
                    self.uncovered += 1;
                }
            }
        }
        if on {
            self.cost += &self.weight[v];
            self.chosen.push(v);
        } else {
            self.cost -= &self.weight[v];
            self.chosen.pop();
        }
    }

    /// Disjoint uncovered edges each need their own cheapest allowed vertex.
    fn lower_bound(&self) -> Rational {
        let mut taken = vec![false; self.inc.vertex_count];
        let mut total = Rational::zero();
        for (e, verts) in self.inc.edges.iter().enumerate() {
            if self.hits[e] > 0 {
                continue;
            }
            let allowed: Vec<usize> = verts.iter().copied().filter(|&v| !self.banned[v]).collect();
            if allowed.iter().any(|&v| taken[v]) {
                continue;
            }
            if let Some(min) = allowed.iter().map(|&v| &self.weight[v]).min() {
                total += min;
            }
            for v in allowed {
                taken[v] = true;
            }
        }
        total
    }

    fn run(&mut self) {
        if self.uncovered == 0 {
            if self.best.as_ref().is_none_or(|(b, _)| self.cost < *b) {
                self.best = Some((self.cost.clone(), self.chosen.clone()));
            }
            return;
        }
        if let Some((b, _)) = &self.best {
            if &self.cost + self.lower_bound() >= *b {
                return;
            }
        }
        let edge = (0..self.inc.edges.len())
            .filter(|&e| self.hits[e] == 0)
            .min_by_key(|&e| self.inc.edges[e].iter().filter(|&&v| !self.banned[v]).count())
            .expect("an uncovered edge exists");
        let branch: Vec<usize> = self.inc.edges[edge].iter().copied().filter(|&v| !self.banned[v]).collect();
        for &v in &branch {
            self.set(v, true);
            self.run();
            self.set(v, false);
            self.banned[v] = true;
        }
        for v in branch {
            self.banned[v] = false;
        }
    }
}

/// Cover of least total weight. Every vertex needs a non-negative weight.
pub fn weighted_min_cover<H: Hypergraph + ?Sized>(
    h: &H,
    weights: &BTreeMap<VertexRef, Rational>,
) -> Result<(Rational, Cover)> {
    let mut flat = vec![None; h.vertex_count()];
    for (&v, w) in weights {
        if w < &Rational::zero() {
            return Err(Error::Domain(format!("vertex {v} has negative weight {w}")));
        }
        flat[h.flat_index(v)?] = Some(w.clone());
    }
    let weight = flat
        .into_iter()
        .enumerate()
        .map(|(i, w)| w.ok_or_else(|| Error::Domain(format!("vertex {} has no weight", h.vertex_ref(i)))))
        .collect::<Result<Vec<_>>>()?;

    let inc = Incidence::new(h);
    let mut search = WeightedSearch {
        inc: &inc,
        weight: &weight,
        hits: vec![0; inc.edges.len()],
        banned: vec![false; inc.vertex_count],
        chosen: Vec::new(),
        cost: Rational::zero(),
        uncovered: inc.edges.len(),
        best: None,
    };
    search.run();
    let (value, chosen) = search.best.expect("taking every vertex always covers");
    Ok((value, Cover::from_flat(h, chosen)))
}

/// Least biased size `|C ∩ V_d| + |C \ V_d| / (r - 1)` over covers `C`,
/// where `V_d` is the distinguished side.
pub fn min_biased_cover(h: &PartiteHypergraph, distinguished: usize) -> Result<(Rational, Cover)> {
    let r = h.r();
    if r < 2 {
        return Err(Error::Domain("biased size needs r >= 2".into()));
    }
    if distinguished >= r {
        return Err(Error::OutOfBounds(format!("side {} of {r}", distinguished + 1)));
    }
    let light = Rational::new(1.into(), ((r - 1) as i64).into());
    let weights = (0..h.vertex_count())
        .map(|i| {
            let v = h.vertex_ref(i);
            let w = if v.side as usize == distinguished { Rational::one() } else { light.clone() };
            (v, w)
        })
        .collect();
    weighted_min_cover(h, &weights)
}
