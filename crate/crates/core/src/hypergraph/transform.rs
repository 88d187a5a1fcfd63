use std::collections::BTreeSet;

use super::{degrees, GeneralHypergraph, Hypergraph, PartiteHypergraph, VertexRef};
use crate::error::Result;

/// Result of a vertex-removing transform together with its bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced<H> {
    pub hypergraph: H,
    /// Old reference of every surviving vertex, indexed by new flat index.
    pub kept_vertices: Vec<VertexRef>,
    /// Old position of every surviving edge, in order.
    pub kept_edges: Vec<usize>,
}

pub trait VertexDeletion: Hypergraph + Sized {
    /// Rebuilds with the flagged flat vertices and listed edges only.
    /// Every kept edge must avoid every dropped vertex.
    fn restrict(&self, keep_vertex: &[bool], kept_edges: Vec<usize>) -> Reduced<Self>;

    /// `H - S`: removes the vertices of `S` and every edge meeting `S`.
    fn delete_vertices(&self, set: &BTreeSet<VertexRef>) -> Result<Reduced<Self>> {
        let mut keep = vec![true; self.vertex_count()];
        for &v in set {
            keep[self.flat_index(v)?] = false;
        }
        let edges = (0..self.edge_count())
            .filter(|&e| self.edge_vertices(e).iter().all(|&v| keep[v]))
            .collect();
        Ok(self.restrict(&keep, edges))
    }

    /// Removes the edges through `v`, then every vertex left with degree 0.
    fn remove_star(&self, v: VertexRef) -> Result<Reduced<Self>> {
        let center = self.flat_index(v)?;
        let edges: Vec<usize> = (0..self.edge_count())
            .filter(|&e| !self.edge_vertices(e).contains(&center))
            .collect();
        let mut keep = vec![false; self.vertex_count()];
        for &e in &edges {
            for u in self.edge_vertices(e) {
                keep[u] = true;
            }
        }
        Ok(self.restrict(&keep, edges))
    }
}

fn renumber(keep: &[bool]) -> Vec<Option<usize>> {
    let mut next = 0;
    keep.iter()
        .map(|&k| {
            k.then(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

impl VertexDeletion for GeneralHypergraph {
    fn restrict(&self, keep_vertex: &[bool], kept_edges: Vec<usize>) -> Reduced<Self> {
        let map = renumber(keep_vertex);
        let kept_vertices = (0..self.vertex_count())
            .filter(|&v| keep_vertex[v])
            .map(VertexRef::flat)
            .collect::<Vec<_>>();
        let edges = kept_edges
            .iter()
            .map(|&e| self.edges()[e].iter().map(|&v| map[v].expect("kept")).collect())
            .collect();
        Reduced {
            hypergraph: GeneralHypergraph::new(kept_vertices.len(), edges).expect("valid restriction"),
            kept_vertices,
            kept_edges,
        }
    }
}

impl VertexDeletion for PartiteHypergraph {
    fn restrict(&self, keep_vertex: &[bool], kept_edges: Vec<usize>) -> Reduced<Self> {
        let mut sizes = Vec::with_capacity(self.r());
        let mut maps = Vec::with_capacity(self.r());
        let mut kept_vertices = Vec::new();
        let mut offset = 0;
        for (side, &size) in self.side_sizes().iter().enumerate() {
            let flags = &keep_vertex[offset..offset + size];
            let map = renumber(flags);
            kept_vertices.extend((0..size).filter(|&i| flags[i]).map(|i| VertexRef::new(side, i)));
            sizes.push(flags.iter().filter(|&&k| k).count());
            maps.push(map);
            offset += size;
        }
        let edges = kept_edges
            .iter()
            .map(|&e| {
                self.edges()[e]
                    .iter()
                    .enumerate()
                    .map(|(side, &v)| maps[side][v].expect("kept"))
                    .collect()
            })
            .collect();
        Reduced {
            hypergraph: PartiteHypergraph::new(sizes, edges).expect("valid restriction"),
            kept_vertices,
            kept_edges,
        }
    }
}

/// Degree of `v` in `h`, checked.
pub fn degree_of<H: Hypergraph>(h: &H, v: VertexRef) -> Result<usize> {
    Ok(degrees(h)[h.flat_index(v)?])
}
