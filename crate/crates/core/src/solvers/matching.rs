use super::{Budget, Incidence, Matching, Ticker};
use crate::error::Result;
use crate::hypergraph::Hypergraph;

struct MatchingSearch<'a> {
    inc: &'a Incidence,
    used: Vec<bool>,
    cur: Vec<usize>,
    best: Vec<usize>,
    ticker: Ticker,
}

impl MatchingSearch<'_> {
    fn fits(&self, e: usize) -> bool {
        self.inc.edges[e].iter().all(|&v| !self.used[v])
    }

    /// Edges from `from` on that still fit, and the free vertices they
    /// could use divided by the smallest such edge: both bound the gain.
    fn bound(&self, from: usize) -> usize {
        let mut count = 0;
        let mut smallest = usize::MAX;
        let mut reachable = vec![false; self.inc.vertex_count];
        for e in from..self.inc.edges.len() {
            if self.fits(e) {
                count += 1;
                smallest = smallest.min(self.inc.edges[e].len());
                for &v in &self.inc.edges[e] {
                    reachable[v] = true;
                }
            }
        }
        if count == 0 {
            return 0;
        }
        count.min(reachable.iter().filter(|&&b| b).count() / smallest)
    }

    fn run(&mut self, from: usize) -> Result<()> {
        self.ticker.tick()?;
        if self.cur.len() > self.best.len() {
            self.best = self.cur.clone();
        }
        if self.cur.len() + self.bound(from) <= self.best.len() {
            return Ok(());
        }
        let Some(e) = (from..self.inc.edges.len()).find(|&e| self.fits(e)) else {
            return Ok(());
        };
        for &v in &self.inc.edges[e] {
            self.used[v] = true;
        }
        self.cur.push(e);
        let res = self.run(e + 1);
        self.cur.pop();
        for &v in &self.inc.edges[e] {
            self.used[v] = false;
        }
        res?;
        self.run(e + 1)
    }
}

/// Matching number with a maximum matching as witness (0 for no edges).
pub fn nu<H: Hypergraph + ?Sized>(h: &H) -> (usize, Matching) {
    nu_with(h, Budget::unlimited()).expect("unlimited budget")
}

/// Include/exclude branch and bound over edges in position order.
pub fn nu_with<H: Hypergraph + ?Sized>(h: &H, budget: Budget) -> Result<(usize, Matching)> {
    let inc = Incidence::new(h);
    let mut search = MatchingSearch {
        inc: &inc,
        used: vec![false; inc.vertex_count],
        cur: Vec::new(),
        best: Vec::new(),
        ticker: Ticker::new(budget.started()),
    };
    search.run(0)?;
    let matching = Matching {
        edge_indices: search.best.iter().map(|&e| inc.origin[e]).collect(),
        certified_for: h.fingerprint(),
    };
    Ok((matching.len(), matching))
}
