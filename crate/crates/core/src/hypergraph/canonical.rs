//! Canonical labelling of partite hypergraphs.
//!
//! The symmetry group is side permutations composed with independent
//! relabelings of the vertices inside each side. For a fixed side order an
//! edge ordering determines a labelling: each side numbers its vertices by
//! first appearance. The canonical matrix is the lexicographically least
//! edge matrix over all side orders and edge orderings. Since the row placed
//! at depth `d` depends only on the rows before it, the least matrix always
//! extends a least prefix by a least next row, so the search only branches on
//! ties and prunes any prefix already larger than the best found.

use super::PartiteHypergraph;

const UNSET: u32 = u32::MAX;

struct Search<'a> {
    edges: &'a [Vec<u32>],
    /// Canonical side sizes for the best matrix so far.
    best_sizes: Option<Vec<u32>>,
    best: Option<Vec<Vec<u32>>>,
    cur: Vec<Vec<u32>>,
    used: Vec<bool>,
    labels: Vec<Vec<u32>>,
    next: Vec<u32>,
}

impl Search<'_> {
    fn row_of(&self, e: usize) -> Vec<u32> {
        self.edges[e]
            .iter()
            .enumerate()
            .map(|(side, &v)| match self.labels[side][v as usize] {
                UNSET => self.next[side],
                l => l,
            })
            .collect()
    }

    /// Compares `cur ++ [row]` with the same-length prefix of `best`.
    fn prefix_cmp(&self, row: &[u32]) -> std::cmp::Ordering {
        let Some(best) = &self.best else {
            return std::cmp::Ordering::Less;
        };
        let d = self.cur.len();
        self.cur
            .iter()
            .map(Vec::as_slice)
            .chain(std::iter::once(row))
            .cmp(best[..=d].iter().map(Vec::as_slice))
    }

    fn run(&mut self, sizes: &[u32]) {
        let m = self.edges.len();
        if self.cur.len() == m {
            let better = match (&self.best, &self.best_sizes) {
                (Some(b), Some(s)) => (&self.cur, sizes) < (b, s.as_slice()),
                _ => true,
            };
            if better {
                self.best = Some(self.cur.clone());
                self.best_sizes = Some(sizes.to_vec());
            }
            return;
        }

        let mut min_row: Option<Vec<u32>> = None;
        let mut ties: Vec<usize> = Vec::new();
        for e in 0..m {
            if self.used[e] || ties.iter().any(|&t| self.edges[t] == self.edges[e]) {
                continue;
            }
            let row = self.row_of(e);
            match &min_row {
                Some(best) if row > *best => {}
                Some(best) if row == *best => ties.push(e),
                _ => {
                    min_row = Some(row);
                    ties.clear();
                    ties.push(e);
                }
            }
        }
        let row = min_row.expect("an unused edge remains");
        if self.prefix_cmp(&row) == std::cmp::Ordering::Greater {
            return;
        }

        for e in ties {
            let mut fresh = Vec::new();
            for (side, &v) in self.edges[e].iter().enumerate() {
                if self.labels[side][v as usize] == UNSET {
                    self.labels[side][v as usize] = self.next[side];
                    self.next[side] += 1;
                    fresh.push((side, v));
                }
            }
            self.used[e] = true;
            self.cur.push(row.clone());
            self.run(sizes);
            self.cur.pop();
            self.used[e] = false;
            for (side, v) in fresh {
                self.labels[side][v as usize] = UNSET;
                self.next[side] -= 1;
            }
        }
    }
}

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(perm, k + 1, f);
            perm.swap(k, i);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    rec(&mut perm, 0, f);
}

/// Byte string equal for two hypergraphs exactly when they are isomorphic
/// under side permutations and per-side vertex relabelings. Edge order is
/// ignored; repeated edges and isolated vertices are significant.
pub fn canonical_form(h: &PartiteHypergraph) -> Vec<u8> {
    let r = h.r();
    let m = h.edges().len();
    let mut best: Option<Vec<Vec<u32>>> = None;
    let mut best_sizes: Option<Vec<u32>> = None;

    for_each_permutation(r, &mut |perm| {
        let edges: Vec<Vec<u32>> = h
            .edges()
            .iter()
            .map(|e| perm.iter().map(|&old| e[old] as u32).collect())
            .collect();
        let sizes: Vec<u32> = perm.iter().map(|&old| h.side_sizes()[old] as u32).collect();
        let mut search = Search {
            edges: &edges,
            best: best.take(),
            best_sizes: best_sizes.take(),
            cur: Vec::with_capacity(m),
            used: vec![false; m],
            labels: sizes.iter().map(|&s| vec![UNSET; s as usize]).collect(),
            next: vec![0; r],
        };
        search.run(&sizes);
        best = search.best;
        best_sizes = search.best_sizes;
    });

    let mut out = Vec::with_capacity(8 + 4 * r + 4 * r * m);
    out.extend((r as u32).to_le_bytes());
    out.extend((m as u32).to_le_bytes());
    for s in best_sizes.unwrap_or_default() {
        out.extend(s.to_le_bytes());
    }
    for row in best.unwrap_or_default() {
        for x in row {
            out.extend(x.to_le_bytes());
        }
    }
    out
}
