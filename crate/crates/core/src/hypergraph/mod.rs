//! Hypergraph data model shared by every solver and checker.
//!
//! Two concrete carriers exist: [`GeneralHypergraph`] (flat vertex set,
//! arbitrary edges) and [`PartiteHypergraph`] (r sides, one vertex per side
//! in every edge). Both expose a flat view through the [`Hypergraph`] trait,
//! where the flat index of vertex `i` on side `s` is the sum of the sizes of
//! the sides before `s` plus `i`. Flat order therefore coincides with
//! ascending [`VertexRef`] order, which is the tie-break used everywhere.

mod canonical;
mod format;
mod transform;

pub use canonical::canonical_form;
pub use format::{
    parse_digit_format, parse_general_table, parse_table_format, serialize_digit_format,
    serialize_general_table, serialize_table, GENERAL_HEADER,
};
pub use transform::{degree_of, Reduced, VertexDeletion};

use std::collections::BTreeMap;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Side value used by vertices of a [`GeneralHypergraph`].
pub const FLAT_SIDE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    pub side: u32,
    pub index: u32,
}

impl VertexRef {
    pub fn new(side: usize, index: usize) -> Self {
        VertexRef {
            side: side as u32,
            index: index as u32,
        }
    }

    pub fn flat(index: usize) -> Self {
        VertexRef {
            side: FLAT_SIDE,
            index: index as u32,
        }
    }
}

impl fmt::Display for VertexRef {
    /// Vertices print 1-based, as `s<side>:<index>` or `v<index>` when flat.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.side == FLAT_SIDE {
            write!(f, "v{}", self.index + 1)
        } else {
            write!(f, "s{}:{}", self.side + 1, self.index + 1)
        }
    }
}

/// Short content hash identifying a hypergraph inside reports and witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fingerprint(pub [u8; 8]);

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

fn fingerprint_of(tag: &str, sizes: &[usize], edges: &[Vec<usize>]) -> Fingerprint {
    let mut hasher = Sha256::new();
    hasher.update(tag.as_bytes());
    for s in sizes {
        hasher.update((*s as u64).to_le_bytes());
    }
    hasher.update([0xff]);
    for e in edges {
        hasher.update((e.len() as u64).to_le_bytes());
        for v in e {
            hasher.update((*v as u64).to_le_bytes());
        }
    }
    let digest = hasher.finalize();
    let mut out = [0u8; 8];
    out.copy_from_slice(&digest[..8]);
    Fingerprint(out)
}

/// Flat view of a hypergraph. Every solver is written against this trait.
pub trait Hypergraph {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    /// Flat vertex indices of edge `e`, strictly ascending.
    fn edge_vertices(&self, e: usize) -> Vec<usize>;
    fn vertex_ref(&self, flat: usize) -> VertexRef;
    fn flat_index(&self, v: VertexRef) -> Result<usize>;
    fn fingerprint(&self) -> Fingerprint;

    /// Uniformity if all edges have equal size (the side count for partite input).
    fn uniformity(&self) -> Option<usize> {
        let mut sizes = (0..self.edge_count()).map(|e| self.edge_vertices(e).len());
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    fn flat_edges(&self) -> Vec<Vec<usize>> {
        (0..self.edge_count()).map(|e| self.edge_vertices(e)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralHypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl GeneralHypergraph {
    /// Builds a hypergraph; each edge is sorted, and must be non-empty,
    /// duplicate-free and within `vertex_count`.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::Domain(format!("edge {i} is empty")));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Domain(format!("edge {i} repeats a vertex")));
            }
            if let Some(&v) = e.last().filter(|&&v| v >= vertex_count) {
                return Err(Error::OutOfBounds(format!(
                    "edge {i} uses vertex {v} but there are {vertex_count} vertices"
                )));
            }
            normalized.push(e);
        }
        Ok(GeneralHypergraph {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &GeneralHypergraph) -> GeneralHypergraph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|v| v + shift).collect()),
        );
        GeneralHypergraph {
            vertex_count: self.vertex_count + other.vertex_count,
            edges,
        }
    }
}

impl Hypergraph for GeneralHypergraph {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn edge_vertices(&self, e: usize) -> Vec<usize> {
        self.edges[e].clone()
    }

    fn vertex_ref(&self, flat: usize) -> VertexRef {
        VertexRef::flat(flat)
    }

    fn flat_index(&self, v: VertexRef) -> Result<usize> {
        if v.side != FLAT_SIDE || v.index as usize >= self.vertex_count {
            return Err(Error::OutOfBounds(format!(
                "{v} is not a vertex of a general hypergraph on {} vertices",
                self.vertex_count
            )));
        }
        Ok(v.index as usize)
    }

    fn fingerprint(&self) -> Fingerprint {
        fingerprint_of("general", &[self.vertex_count], &self.edges)
    }

    fn flat_edges(&self) -> Vec<Vec<usize>> {
        self.edges.clone()
    }
}

/// An r-partite hypergraph: `edges[k][i]` is the vertex of edge `k` on side `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartiteHypergraph {
    side_sizes: Vec<usize>,
    edges: Vec<Vec<usize>>,
}

impl PartiteHypergraph {
    /// Sides may be empty only when no edge exists (e.g. after deleting a
    /// whole side); otherwise every edge has exactly one in-range vertex per side.
    pub fn new(side_sizes: Vec<usize>, edges: Vec<Vec<usize>>) -> Result<Self> {
        if side_sizes.is_empty() {
            return Err(Error::Domain("a partite hypergraph needs at least one side".into()));
        }
        let r = side_sizes.len();
        for (k, e) in edges.iter().enumerate() {
            if e.len() != r {
                return Err(Error::Domain(format!(
                    "edge {k} has {} entries but there are {r} sides",
                    e.len()
                )));
            }
            for (side, (&v, &size)) in e.iter().zip(&side_sizes).enumerate() {
                if v >= size {
                    return Err(Error::OutOfBounds(format!(
                        "edge {k} uses vertex {} on side {} of size {size}",
                        v + 1,
                        side + 1
                    )));
                }
            }
        }
        Ok(PartiteHypergraph { side_sizes, edges })
    }

    pub fn r(&self) -> usize {
        self.side_sizes.len()
    }

    pub fn side_sizes(&self) -> &[usize] {
        &self.side_sizes
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    fn side_offset(&self, side: usize) -> usize {
        self.side_sizes[..side].iter().sum()
    }

    /// Flattens sides into consecutive vertex ranges.
    pub fn to_general(&self) -> GeneralHypergraph {
        GeneralHypergraph {
            vertex_count: self.side_sizes.iter().sum(),
            edges: (0..self.edges.len()).map(|e| self.edge_vertices(e)).collect(),
        }
    }

    /// Disjoint union, side by side; requires equal side counts.
    pub fn disjoint_union(&self, other: &PartiteHypergraph) -> Result<PartiteHypergraph> {
        if self.r() != other.r() {
            return Err(Error::Domain("disjoint union needs equal side counts".into()));
        }
        let sizes: Vec<usize> = self
            .side_sizes
            .iter()
            .zip(&other.side_sizes)
            .map(|(a, b)| a + b)
            .collect();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| {
            e.iter()
                .zip(&self.side_sizes)
                .map(|(v, shift)| v + shift)
                .collect()
        }));
        PartiteHypergraph::new(sizes, edges)
    }

    /// Applies a side permutation (`perm[new] = old`) and per-side relabelings
    /// (`relabel[old_side][old_index] = new_index`).
    pub fn permuted(&self, perm: &[usize], relabel: &[Vec<usize>]) -> Result<PartiteHypergraph> {
        let r = self.r();
        let mut seen = vec![false; r];
        if perm.len() != r || perm.iter().any(|&p| p >= r || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Domain("side permutation is not a permutation".into()));
        }
        if relabel.len() != r || relabel.iter().zip(&self.side_sizes).any(|(m, &s)| m.len() != s) {
            return Err(Error::Domain("relabeling does not match side sizes".into()));
        }
        let sizes = perm.iter().map(|&old| self.side_sizes[old]).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| perm.iter().map(|&old| relabel[old][e[old]]).collect())
            .collect();
        PartiteHypergraph::new(sizes, edges)
    }

    /// Drops vertices of degree 0, renumbering each side stably.
    pub fn strip_isolated(&self) -> PartiteHypergraph {
        let mut used: Vec<Vec<bool>> = self.side_sizes.iter().map(|&s| vec![false; s]).collect();
        for e in &self.edges {
            for (side, &v) in e.iter().enumerate() {
                used[side][v] = true;
            }
        }
        let maps: Vec<Vec<Option<usize>>> = used
            .iter()
            .map(|u| {
                let mut next = 0;
                u.iter()
                    .map(|&b| {
                        b.then(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let sizes = used.iter().map(|u| u.iter().filter(|&&b| b).count()).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .map(|(side, &v)| maps[side][v].expect("used vertex"))
                    .collect()
            })
            .collect();
        PartiteHypergraph {
            side_sizes: sizes,
            edges,
        }
    }

    /// Keeps only the edges at the given positions, in the given order.
    pub fn edge_subset(&self, positions: &[usize]) -> Result<PartiteHypergraph> {
        let edges = positions
            .iter()
            .map(|&p| {
                self.edges
                    .get(p)
                    .cloned()
                    .ok_or_else(|| Error::OutOfBounds(format!("edge position {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PartiteHypergraph::new(self.side_sizes.clone(), edges)
    }

    /// The side of `v`, checked.
    pub fn side_of(&self, v: VertexRef) -> Result<usize> {
        self.flat_index(v)?;
        Ok(v.side as usize)
    }
}

impl Hypergraph for PartiteHypergraph {
    fn vertex_count(&self) -> usize {
        self.side_sizes.iter().sum()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn edge_vertices(&self, e: usize) -> Vec<usize> {
        let mut offset = 0;
        self.edges[e]
            .iter()
            .zip(&self.side_sizes)
            .map(|(&v, &size)| {
                let flat = offset + v;
                offset += size;
                flat
            })
            .collect()
    }

    fn vertex_ref(&self, flat: usize) -> VertexRef {
        let mut rest = flat;
        for (side, &size) in self.side_sizes.iter().enumerate() {
            if rest < size {
                return VertexRef::new(side, rest);
            }
            rest -= size;
        }
        panic!("flat vertex {flat} out of range");
    }

    fn flat_index(&self, v: VertexRef) -> Result<usize> {
        let side = v.side as usize;
        if side >= self.r() || v.index as usize >= self.side_sizes[side] {
            return Err(Error::OutOfBounds(format!(
                "{v} is not a vertex of a hypergraph with side sizes {:?}",
                self.side_sizes
            )));
        }
        Ok(self.side_offset(side) + v.index as usize)
    }

    fn fingerprint(&self) -> Fingerprint {
        fingerprint_of("partite", &self.side_sizes, &self.edges)
    }

    fn uniformity(&self) -> Option<usize> {
        Some(self.r())
    }
}

/// Number of vertices by degree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeProfile {
    pub counts: BTreeMap<usize, usize>,
}

impl DegreeProfile {
    fn from_degrees(degrees: impl IntoIterator<Item = usize>, include_zero: bool) -> Self {
        let mut counts = BTreeMap::new();
        for d in degrees {
            if d > 0 || include_zero {
                *counts.entry(d).or_insert(0) += 1;
            }
        }
        DegreeProfile { counts }
    }

    /// Vertices of exactly degree `d`.
    pub fn count(&self, d: usize) -> usize {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// Vertices with degree at least `d`.
    pub fn count_at_least(&self, d: usize) -> usize {
        self.counts.range(d..).map(|(_, c)| c).sum()
    }

    /// Sum of degree times count, i.e. the number of incidences.
    pub fn incidences(&self) -> usize {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Degree of every flat vertex.
pub fn degrees<H: Hypergraph + ?Sized>(h: &H) -> Vec<usize> {
    let mut deg = vec![0; h.vertex_count()];
    for e in 0..h.edge_count() {
        for v in h.edge_vertices(e) {
            deg[v] += 1;
        }
    }
    deg
}

pub fn max_degree<H: Hypergraph + ?Sized>(h: &H) -> usize {
    degrees(h).into_iter().max().unwrap_or(0)
}

pub fn degree_profile<H: Hypergraph + ?Sized>(h: &H, include_zero: bool) -> DegreeProfile {
    DegreeProfile::from_degrees(degrees(h), include_zero)
}

pub fn side_degree_profile(
    h: &PartiteHypergraph,
    side: usize,
    include_zero: bool,
) -> Result<DegreeProfile> {
    if side >= h.r() {
        return Err(Error::OutOfBounds(format!("side {} of {}", side + 1, h.r())));
    }
    let mut deg = vec![0; h.side_sizes()[side]];
    for e in h.edges() {
        deg[e[side]] += 1;
    }
    Ok(DegreeProfile::from_degrees(deg, include_zero))
}

fn sorted_meet(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Sizes of all pairwise edge intersections.
pub(crate) fn pair_meets<H: Hypergraph + ?Sized>(h: &H) -> impl Iterator<Item = usize> {
    let edges = h.flat_edges();
    let mut meets = Vec::with_capacity(edges.len() * edges.len().saturating_sub(1) / 2);
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            meets.push(sorted_meet(a, b));
        }
    }
    meets.into_iter()
}

/// Every two distinct edges share a vertex.
pub fn is_intersecting<H: Hypergraph + ?Sized>(h: &H) -> Result<bool> {
    if h.edge_count() == 0 {
        return Err(Error::Domain("intersecting is undefined for an empty hypergraph".into()));
    }
    Ok(pair_meets(h).all(|k| k >= 1))
}

/// Every two distinct edges share exactly one vertex.
pub fn is_linear<H: Hypergraph + ?Sized>(h: &H) -> Result<bool> {
    if h.edge_count() < 2 {
        return Err(Error::Domain("linearity needs at least two edges".into()));
    }
    Ok(pair_meets(h).all(|k| k == 1))
}

/// Pairwise-meet check without the two-edge precondition (vacuous for |H| < 2).
pub(crate) fn pairwise_meet_once<H: Hypergraph + ?Sized>(h: &H) -> bool {
    pair_meets(h).all(|k| k == 1)
}
