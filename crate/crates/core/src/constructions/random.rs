//! Seeded generators. The stream is ChaCha8 seeded through
//! `SeedableRng::seed_from_u64`, so output is identical on every platform.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::PartiteHypergraph;

/// Candidate draws allowed per requested edge.
pub const ATTEMPTS_PER_EDGE: usize = 20_000;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws edges uniformly from `side_cap^r` tuples, keeping each candidate
/// that is new and meets every kept edge, until `m` edges are kept.
/// Unused vertices are dropped from the result.
pub fn random_intersecting(r: usize, m: usize, side_cap: usize, seed: u64) -> Result<PartiteHypergraph> {
    if r == 0 || m == 0 || side_cap == 0 {
        return Err(Error::Domain("r, m and side_cap must be positive".into()));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut attempts = 0usize;
    while edges.len() < m {
        if attempts == ATTEMPTS_PER_EDGE * m {
            return Err(Error::Generation(format!(
                "kept {} of {m} edges after {attempts} draws (r = {r}, side_cap = {side_cap}, seed = {seed})",
                edges.len()
            )));
        }
        attempts += 1;
        let cand: Vec<usize> = (0..r).map(|_| rng.random_range(0..side_cap)).collect();
        if edges.iter().all(|e| *e != cand && e.iter().zip(&cand).any(|(a, b)| a == b)) {
            edges.push(cand);
        }
    }
    Ok(PartiteHypergraph::new(vec![side_cap; r], edges)?.strip_isolated())
}

/// `m` distinct edge positions sampled uniformly, kept in their original order.
pub fn random_line_subset(h: &PartiteHypergraph, m: usize, seed: u64) -> Result<PartiteHypergraph> {
    let total = h.edges().len();
    if m > total {
        return Err(Error::Domain(format!("cannot sample {m} of {total} edges")));
    }
    let mut rng = rng_from_seed(seed);
    let mut positions = sample(&mut rng, total, m).into_vec();
    positions.sort_unstable();
    h.edge_subset(&positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::truncated_projective_plane;
    use crate::hypergraph::is_intersecting;

    #[test]
    fn deterministic_and_intersecting() {
        let a = random_intersecting(4, 8, 3, 7).unwrap();
        let b = random_intersecting(4, 8, 3, 7).unwrap();
        assert_eq!(a, b);
        assert!(is_intersecting(&a).unwrap());
        assert_eq!(a.edges().len(), 8);
    }

    #[test]
    fn impossible_requests_fail() {
        // only 2 distinct edges exist on one 2-vertex side
        assert!(matches!(random_intersecting(1, 3, 2, 0), Err(Error::Generation(_))));
        assert!(random_intersecting(3, 0, 2, 0).is_err());
    }

    #[test]
    fn full_subset_is_identity() {
        let tpp = truncated_projective_plane(3).unwrap();
        assert_eq!(random_line_subset(&tpp, 9, 42).unwrap(), tpp);
        assert!(random_line_subset(&tpp, 10, 42).is_err());
    }
}
