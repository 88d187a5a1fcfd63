//! The bundled verification corpus: embedded examples, constructed families
//! and fixed-seed random instances.

use crate::constructions::{
    biased_counterexample, example_f6, example_f6_linear, example_f7, exponential_counterexample,
    one_factorization_instance, oval_secant_subplane, random_intersecting, random_line_subset,
    truncated_projective_plane,
};
use crate::error::{Error, Result};
use crate::hypergraph::{max_degree, PartiteHypergraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub hypergraph: PartiteHypergraph,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, hypergraph: PartiteHypergraph) -> Self {
        CorpusEntry {
            name: name.into(),
            hypergraph,
        }
    }
}

/// Parameters `(r, m, side_cap)` of the random intersecting corpus entries,
/// seeded by their position.
const RANDOM_SHAPES: &[(usize, usize, usize)] = &[
    (3, 4, 3),
    (3, 5, 3),
    (3, 6, 3),
    (3, 7, 4),
    (4, 4, 3),
    (4, 5, 3),
    (4, 6, 3),
    (4, 7, 3),
    (4, 8, 4),
    (4, 9, 4),
    (5, 5, 3),
    (5, 6, 3),
    (5, 7, 3),
    (5, 8, 4),
    (5, 9, 4),
    (5, 10, 4),
    (6, 6, 3),
    (6, 8, 4),
    (6, 10, 4),
    (6, 12, 5),
    (7, 8, 4),
    (7, 10, 5),
    (3, 8, 5),
    (4, 10, 5),
];

pub const CORPUS_SEED_BASE: u64 = 1000;

/// Seed stride used when a draw gets stuck on a maximal hypergraph.
const RESEED_STRIDE: u64 = 1_000_000;

/// First successful draw among `seed`, `seed + RESEED_STRIDE`, ...
fn seeded_intersecting(r: usize, m: usize, cap: usize, seed: u64) -> Result<(u64, PartiteHypergraph)> {
    let mut last = None;
    for k in 0..32 {
        let s = seed + k * RESEED_STRIDE;
        match random_intersecting(r, m, cap, s) {
            Ok(h) => return Ok((s, h)),
            Err(e @ Error::Generation(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = vec![
        CorpusEntry::new("f7", example_f7()),
        CorpusEntry::new("f6", example_f6()),
        CorpusEntry::new("f6linear", example_f6_linear()),
    ];
    for q in [2, 3, 4, 5] {
        out.push(CorpusEntry::new(format!("tpp{q}"), truncated_projective_plane(q)?));
    }
    for q in [3, 5, 7] {
        out.push(CorpusEntry::new(format!("oval{q}"), oval_secant_subplane(q)?));
    }
    for r in [3, 5, 7, 9] {
        out.push(CorpusEntry::new(format!("onefact{r}"), one_factorization_instance(r)?));
    }
    for r in [4, 5] {
        out.push(CorpusEntry::new(format!("biased{r}"), biased_counterexample(r)?));
        out.push(CorpusEntry::new(format!("expside{r}"), exponential_counterexample(r)?));
    }
    for r in 2..=5 {
        let edge = PartiteHypergraph::new(vec![1; r], vec![vec![0; r]])?;
        out.push(CorpusEntry::new(format!("edge{r}"), edge));
    }
    let disjoint = PartiteHypergraph::new(vec![2; 3], vec![vec![0; 3], vec![1; 3]])?;
    out.push(CorpusEntry::new("disjoint3", disjoint));
    let f6 = example_f6();
    out.push(CorpusEntry::new("f6+f6", f6.disjoint_union(&f6)?));
    let tpp4 = truncated_projective_plane(4)?;
    for (i, m) in [6, 8, 10].into_iter().enumerate() {
        let seed = CORPUS_SEED_BASE + 100 + i as u64;
        out.push(CorpusEntry::new(format!("tpp4-subset{m}"), random_line_subset(&tpp4, m, seed)?));
    }
    for (i, &(r, m, cap)) in RANDOM_SHAPES.iter().enumerate() {
        let (seed, h) = seeded_intersecting(r, m, cap, CORPUS_SEED_BASE + i as u64)?;
        out.push(CorpusEntry::new(format!("random-r{r}-m{m}-s{seed}"), h));
    }
    Ok(out)
}

/// Largest degree allowed in the lemma corpus, the precondition of the
/// strictest lemma checker.
pub const LEMMA_MAX_DEGREE: usize = 4;

/// The first `count` fixed-seed random intersecting instances with maximum
/// degree at most [`LEMMA_MAX_DEGREE`], drawn with r in 3..=6 and 3 to 8 edges.
pub fn random_lemma_instances(count: usize, seed_base: u64) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::with_capacity(count);
    for i in 0.. {
        if out.len() == count {
            break;
        }
        let r = 3 + i % 4;
        let m = 3 + (i / 4) % 6;
        let cap = 3 + (i / 32) % 2;
        let (seed, h) = seeded_intersecting(r, m, cap, seed_base + i as u64)?;
        if max_degree(&h) <= LEMMA_MAX_DEGREE {
            out.push(CorpusEntry::new(format!("lemma-r{r}-m{m}-s{seed}"), h));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{canonical_form, is_intersecting};

    #[test]
    fn corpus_size_and_names() {
        let c = corpus().unwrap();
        assert!(c.len() >= 50, "{}", c.len());
        let mut names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }

    #[test]
    fn random_entries_are_intersecting_and_distinct() {
        let c = corpus().unwrap();
        let random: Vec<_> = c.iter().filter(|e| e.name.starts_with("random")).collect();
        assert!(random.iter().all(|e| is_intersecting(&e.hypergraph).unwrap()));
        let mut forms: Vec<_> = random.iter().map(|e| canonical_form(&e.hypergraph)).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), random.len());
    }

    #[test]
    fn lemma_instances_meet_degree_cap() {
        let hs = random_lemma_instances(50, 5000).unwrap();
        assert_eq!(hs.len(), 50);
        assert!(hs.iter().all(|e| max_degree(&e.hypergraph) <= LEMMA_MAX_DEGREE));
        assert!(hs.iter().all(|e| is_intersecting(&e.hypergraph).unwrap()));
    }
}
