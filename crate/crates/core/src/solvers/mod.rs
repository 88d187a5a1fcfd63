//! Exact covers and matchings.
//!
//! All searches are deterministic: vertices are tried in ascending flat
//! order, which is ascending [`VertexRef`] order. Repeated edges are
//! collapsed before searching; they never change `tau` or `nu`.

mod cover;
mod matching;
mod weighted;

pub use cover::{find_cover_leq, find_cover_leq_with, greedy_cover, min_cover_avoiding, tau, tau_with};
pub use matching::{nu, nu_with};
pub use weighted::{min_biased_cover, weighted_min_cover};

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::hypergraph::{Fingerprint, Hypergraph, VertexRef};

/// Wall-clock cap for a single solver call.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    limit: Option<Duration>,
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn millis(ms: u64) -> Self {
        let limit = Duration::from_millis(ms);
        Budget {
            limit: Some(limit),
            deadline: Some(Instant::now() + limit),
        }
    }

    /// Restarts the clock; a budget describes a per-call allowance.
    pub(crate) fn started(self) -> Self {
        Budget {
            limit: self.limit,
            deadline: self.limit.map(|l| Instant::now() + l),
        }
    }

    pub(crate) fn check(&self) -> Result<()> {
        match (self.deadline, self.limit) {
            (Some(d), Some(l)) if Instant::now() > d => Err(Error::Budget(l.as_millis() as u64)),
            _ => Ok(()),
        }
    }
}

/// Counts nodes and polls the clock every 1024 of them.
#[derive(Debug)]
pub(crate) struct Ticker {
    budget: Budget,
    pub nodes: u64,
}

impl Ticker {
    /// `budget` should already be started by the public entry point.
    pub fn new(budget: Budget) -> Self {
        Ticker { budget, nodes: 0 }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            self.budget.check()?;
        }
        Ok(())
    }
}

/// A set of vertices meeting every edge of the fingerprinted hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub vertices: BTreeSet<VertexRef>,
    pub certified_for: Fingerprint,
}

impl Cover {
    pub(crate) fn from_flat<H: Hypergraph + ?Sized>(h: &H, flat: impl IntoIterator<Item = usize>) -> Self {
        Cover {
            vertices: flat.into_iter().map(|v| h.vertex_ref(v)).collect(),
            certified_for: h.fingerprint(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Linear-time re-check against `h`.
    pub fn is_valid_for<H: Hypergraph + ?Sized>(&self, h: &H) -> bool {
        if self.certified_for != h.fingerprint() {
            return false;
        }
        covers(h, &self.vertices)
    }
}

/// True when `set` meets every edge of `h`; foreign vertices make it false.
pub fn covers<H: Hypergraph + ?Sized>(h: &H, set: &BTreeSet<VertexRef>) -> bool {
    let mut mark = vec![false; h.vertex_count()];
    for &v in set {
        match h.flat_index(v) {
            Ok(i) => mark[i] = true,
            Err(_) => return false,
        }
    }
    (0..h.edge_count()).all(|e| h.edge_vertices(e).iter().any(|&v| mark[v]))
}

/// Pairwise disjoint edges, by position in the fingerprinted hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edge_indices: BTreeSet<usize>,
    pub certified_for: Fingerprint,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edge_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_indices.is_empty()
    }

    pub fn is_valid_for<H: Hypergraph + ?Sized>(&self, h: &H) -> bool {
        if self.certified_for != h.fingerprint() {
            return false;
        }
        let mut seen = vec![false; h.vertex_count()];
        for &e in &self.edge_indices {
            if e >= h.edge_count() {
                return false;
            }
            for v in h.edge_vertices(e) {
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        true
    }
}

/// Deduplicated flat incidence structure used by the searches.
#[derive(Debug, Clone)]
pub(crate) struct Incidence {
    pub vertex_count: usize,
    pub edges: Vec<Vec<usize>>,
    /// Original position of the first occurrence of each distinct edge.
    pub origin: Vec<usize>,
    pub vertex_edges: Vec<Vec<usize>>,
}

impl Incidence {
    pub fn new<H: Hypergraph + ?Sized>(h: &H) -> Self {
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for e in 0..h.edge_count() {
            let verts = h.edge_vertices(e);
            if seen.insert(verts.clone()) {
                edges.push(verts);
                origin.push(e);
            }
        }
        let mut vertex_edges = vec![Vec::new(); h.vertex_count()];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                vertex_edges[v].push(i);
            }
        }
        Incidence {
            vertex_count: h.vertex_count(),
            edges,
            origin,
            vertex_edges,
        }
    }
}
