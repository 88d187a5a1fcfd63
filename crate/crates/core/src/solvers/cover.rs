use std::collections::BTreeSet;

use super::{Budget, Cover, Incidence, Ticker};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, PartiteHypergraph, VertexRef};

/// Depth-first search for a cover within a budget of `k` vertices.
///
/// Each node picks the uncovered edge with the fewest allowed vertices and
/// branches on them in ascending order; the i-th branch bans the vertices
/// tried before it, so no cover is visited twice.
struct CoverSearch<'a> {
    inc: &'a Incidence,
    hits: Vec<u32>,
    banned: Vec<bool>,
    chosen: Vec<usize>,
    uncovered: usize,
    ticker: Ticker,
}

impl<'a> CoverSearch<'a> {
    fn new(inc: &'a Incidence, banned: Vec<bool>, budget: Budget) -> Self {
        CoverSearch {
            inc,
            hits: vec![0; inc.edges.len()],
            banned,
            chosen: Vec::new(),
            uncovered: inc.edges.len(),
            ticker: Ticker::new(budget),
        }
    }

    fn choose(&mut self, v: usize) {
        for &e in &self.inc.vertex_edges[v] {
            if self.hits[e] == 0 {
                self.uncovered -= 1;
            }
            self.hits[e] += 1;
        }
        self.chosen.push(v);
    }

    fn unchoose(&mut self, v: usize) {
        for &e in &self.inc.vertex_edges[v] {
            self.hits[e] -= 1;
            if self.hits[e] == 0 {
                self.uncovered += 1;
            }
        }
        self.chosen.pop();
    }

    fn allowed(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.inc.edges[e].iter().copied().filter(|&v| !self.banned[v])
    }

    /// Lower bounds on the vertices still needed: greedy disjoint packing of
    /// uncovered edges, and the fewest top-degree vertices reaching every
    /// uncovered edge. True when either exceeds `k`.
    fn hopeless(&self, k: usize) -> bool {
        let mut taken = vec![false; self.inc.vertex_count];
        let mut packing = 0;
        let mut degree = vec![0usize; self.inc.vertex_count];
        for e in 0..self.inc.edges.len() {
            if self.hits[e] > 0 {
                continue;
            }
            let allowed: Vec<usize> = self.allowed(e).collect();
            for &v in &allowed {
                degree[v] += 1;
            }
            if allowed.iter().all(|&v| !taken[v]) {
                packing += 1;
                for v in allowed {
                    taken[v] = true;
                }
            }
        }
        if packing > k {
            return true;
        }
        degree.sort_unstable_by(|a, b| b.cmp(a));
        degree.iter().take(k).sum::<usize>() < self.uncovered
    }

    fn run(&mut self, k: usize) -> Result<bool> {
        self.ticker.tick()?;
        if self.uncovered == 0 {
            return Ok(true);
        }
        if k == 0 || self.hopeless(k) {
            return Ok(false);
        }
        let edge = (0..self.inc.edges.len())
            .filter(|&e| self.hits[e] == 0)
            .min_by_key(|&e| self.allowed(e).count())
            .expect("an uncovered edge exists");
        let branch: Vec<usize> = self.allowed(edge).collect();
        if branch.is_empty() {
            return Ok(false);
        }
        let mut found = false;
        let mut banned_here = Vec::new();
        for v in branch {
            self.choose(v);
            let ok = self.run(k - 1);
            if matches!(ok, Ok(true)) {
                found = true;
                break;
            }
            self.unchoose(v);
            ok?;
            self.banned[v] = true;
            banned_here.push(v);
        }
        for v in banned_here {
            self.banned[v] = false;
        }
        Ok(found)
    }
}

fn banned_flags<H: Hypergraph + ?Sized>(h: &H, banned: &BTreeSet<VertexRef>) -> Result<Vec<bool>> {
    let mut flags = vec![false; h.vertex_count()];
    for &v in banned {
        flags[h.flat_index(v)?] = true;
    }
    Ok(flags)
}

/// A cover of at most `k` vertices, or `None` once the search has
/// exhausted every candidate (an absence certificate).
pub fn find_cover_leq<H: Hypergraph + ?Sized>(h: &H, k: usize) -> Option<Cover> {
    find_cover_leq_with(h, k, &BTreeSet::new(), Budget::unlimited()).expect("no budget, no bans")
}

/// [`find_cover_leq`] restricted to vertices outside `banned`, under a time budget.
pub fn find_cover_leq_with<H: Hypergraph + ?Sized>(
    h: &H,
    k: usize,
    banned: &BTreeSet<VertexRef>,
    budget: Budget,
) -> Result<Option<Cover>> {
    let inc = Incidence::new(h);
    let mut search = CoverSearch::new(&inc, banned_flags(h, banned)?, budget.started());
    if search.run(k)? {
        Ok(Some(Cover::from_flat(h, search.chosen)))
    } else {
        Ok(None)
    }
}

/// Covering number with a minimum cover as witness.
pub fn tau<H: Hypergraph + ?Sized>(h: &H) -> Result<(usize, Cover)> {
    tau_with(h, &BTreeSet::new(), Budget::unlimited())?
        .ok_or_else(|| Error::Internal("unrestricted cover search failed".into()))
}

/// Minimum cover avoiding `banned`, found by trying k = 1, 2, ... in turn.
/// `None` when some edge lies entirely inside `banned`.
pub fn tau_with<H: Hypergraph + ?Sized>(
    h: &H,
    banned: &BTreeSet<VertexRef>,
    budget: Budget,
) -> Result<Option<(usize, Cover)>> {
    if h.edge_count() == 0 {
        return Err(Error::Domain("tau needs at least one edge".into()));
    }
    let flags = banned_flags(h, banned)?;
    if (0..h.edge_count()).any(|e| h.edge_vertices(e).iter().all(|&v| flags[v])) {
        return Ok(None);
    }
    let inc = Incidence::new(h);
    let budget = budget.started();
    for k in 1..=inc.edges.len() {
        let mut search = CoverSearch::new(&inc, flags.clone(), budget);
        if search.run(k)? {
            let cover = Cover::from_flat(h, search.chosen);
            return Ok(Some((k, cover)));
        }
    }
    Err(Error::Internal("one vertex per edge always covers".into()))
}

/// Repeatedly takes a vertex of maximum degree among the uncovered edges,
/// breaking ties by ascending vertex.
pub fn greedy_cover<H: Hypergraph + ?Sized>(h: &H) -> Result<Cover> {
    if h.edge_count() == 0 {
        return Err(Error::Domain("greedy cover needs at least one edge".into()));
    }
    let inc = Incidence::new(h);
    let mut covered = vec![false; inc.edges.len()];
    let mut left = inc.edges.len();
    let mut chosen = Vec::new();
    while left > 0 {
        let (v, _) = (0..inc.vertex_count)
            .map(|v| (v, inc.vertex_edges[v].iter().filter(|&&e| !covered[e]).count()))
            .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
        for &e in &inc.vertex_edges[v] {
            if !std::mem::replace(&mut covered[e], true) {
                left -= 1;
            }
        }
        chosen.push(v);
    }
    Ok(Cover::from_flat(h, chosen))
}

/// Minimum cover using no vertex of side `banned`; `None` if impossible.
pub fn min_cover_avoiding(h: &PartiteHypergraph, banned: usize) -> Result<Option<(usize, Cover)>> {
    if h.r() < 2 {
        return Err(Error::Domain("avoiding a side needs r >= 2".into()));
    }
    if banned >= h.r() {
        return Err(Error::OutOfBounds(format!("side {} of {}", banned + 1, h.r())));
    }
    let set = (0..h.side_sizes()[banned]).map(|i| VertexRef::new(banned, i)).collect();
    tau_with(h, &set, Budget::unlimited())
}
