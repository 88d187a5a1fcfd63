use std::collections::BTreeSet;

use super::{CertificateReport, Claim, Relation};
use crate::constructions::{
    biased_counterexample, example_f6, example_f6_linear, example_f7, exponential_counterexample,
    oval_secant_subplane, projective_plane, truncated_projective_plane,
};
use crate::error::Result;
use crate::fractional::{
    fractional_strong_witness, furedi_check, integer, lovasz_frac_witness, nu_star, rational, tau_s, tau_star,
    verify_smallh,
};
use crate::hypergraph::{is_intersecting, is_linear, Hypergraph, PartiteHypergraph, VertexRef};
use crate::solvers::{covers, find_cover_leq, min_biased_cover, min_cover_avoiding, nu, tau};

/// Largest one-vertex side handed to [`fractional_strong_witness`] by the suites.
pub const STRONG_SIDE_LIMIT: usize = 6;

/// Covering numbers, sizes and linearity of the three embedded examples.
pub fn check_named_examples() -> Result<CertificateReport> {
    let mut report = CertificateReport::new("named examples", None);
    let f7 = example_f7();
    let f6 = example_f6();
    let f6l = example_f6_linear();
    report.claim(Claim::compare("f7 edges", &f7.edge_count(), Relation::Eq, &17));
    report.claim(Claim::compare("f7 vertices", &f7.vertex_count(), Relation::Eq, &42));
    report.claim(Claim::holds("f7 has no 5-cover", find_cover_leq(&f7, 5).is_none()));
    report.claim(Claim::compare("tau(f7)", &tau(&f7)?.0, Relation::Eq, &6));
    report.claim(Claim::compare("nu(f7)", &nu(&f7).0, Relation::Eq, &1));
    report.claim(Claim::holds("f7 not linear", !is_linear(&f7)?));
    report.claim(Claim::compare("f6 edges", &f6.edge_count(), Relation::Eq, &13));
    report.claim(Claim::compare("f6 vertices", &f6.vertex_count(), Relation::Eq, &30));
    report.claim(Claim::compare("tau(f6)", &tau(&f6)?.0, Relation::Eq, &5));
    report.claim(Claim::holds("f6 intersecting", is_intersecting(&f6)?));
    report.claim(Claim::holds("f6 not linear", !is_linear(&f6)?));
    report.claim(Claim::compare("tau(f6linear)", &tau(&f6l)?.0, Relation::Eq, &5));
    report.claim(Claim::holds("f6linear linear", is_linear(&f6l)?));
    report.claim(Claim::holds("f6linear intersecting", is_intersecting(&f6l)?));
    Ok(report)
}

/// Counts and covering numbers of the projective-plane families.
pub fn check_plane_families() -> Result<CertificateReport> {
    let mut report = CertificateReport::new("projective plane families", None);
    for q in [2, 3] {
        let pg = projective_plane(q)?;
        report.claim(Claim::compare(format!("tau(PG(2,{q}))"), &tau(&pg)?.0, Relation::Eq, &(q + 1)));
        report.claim(Claim::holds(format!("PG(2,{q}) linear"), is_linear(&pg)?));
    }
    for q in [2, 3, 4] {
        let h = truncated_projective_plane(q)?;
        report.claim(Claim::compare(format!("tpp({q}) edges"), &h.edge_count(), Relation::Eq, &(q * q)));
        report.claim(Claim::compare(format!("tau(tpp({q}))"), &tau(&h)?.0, Relation::Eq, &q));
    }
    for q in [3, 5] {
        let h = oval_secant_subplane(q)?;
        report.claim(Claim::compare(format!("oval({q}) edges"), &h.edge_count(), Relation::Eq, &((q * q + q) / 2)));
        report.claim(Claim::compare(format!("tau(oval({q}))"), &tau(&h)?.0, Relation::Ge, &q));
    }
    Ok(report)
}

/// Exact LP quantities, their orderings, and the fractional theorems on one instance.
pub fn fractional_profile(name: &str, h: &PartiteHypergraph) -> Result<CertificateReport> {
    let mut report = CertificateReport::new(format!("fractional {name}"), Some(h.fingerprint()));
    let (ts, cover) = tau_star(h)?;
    let (ns, packing) = nu_star(h)?;
    let (t, _) = tau(h)?;
    let (n, _) = nu(h);
    report.claim(Claim::compare("tau* = nu*", &ts, Relation::Eq, &ns));
    report.claim(Claim::holds("tau* weights form a fractional cover", cover.is_valid_for(h)));
    report.claim(Claim::compare("nu* packing total", &packing.total(), Relation::Eq, &ns));
    report.claim(Claim::compare("nu <= nu*", &integer(n), Relation::Le, &ns));
    report.claim(Claim::compare("tau* <= tau", &ts, Relation::Le, &integer(t)));
    report.claim(Claim::holds("smallh", verify_smallh(h)?.overall()));
    let w = lovasz_frac_witness(h)?;
    report.claim(Claim::compare(
        format!("nu* drop after deleting e{} minus {}", w.edge + 1, w.vertex),
        &w.drop(),
        Relation::Ge,
        &rational(1, 1),
    ));
    if let Some(side) = (0..h.r()).min_by_key(|&s| h.side_sizes()[s]).filter(|&s| h.side_sizes()[s] <= STRONG_SIDE_LIMIT) {
        let sw = fractional_strong_witness(h, side)?;
        report.claim(Claim::compare(
            format!("fractionalstrong (V1 = side {}) beta + alpha <= nu", side + 1),
            &sw.total,
            Relation::Le,
            &integer(n),
        ));
        report.claim(Claim::holds("fractionalstrong witness re-checks", sw.is_valid_for(h)));
    }
    report.claim(Claim::holds("furedi", furedi_check(h, 0)?.overall()));
    if is_intersecting(h)? {
        report.claim(Claim::compare("tau_s on intersecting", &tau_s(h)?.0, Relation::Eq, &rational(1, 1)));
    }
    report.witness(format!("tau* = {ts}, tau = {t}, nu = {n}"));
    Ok(report)
}

/// Exact fractional cover number of the Fano plane.
pub fn check_fano_fraction() -> Result<CertificateReport> {
    let pg = projective_plane(2)?;
    let mut report = CertificateReport::new("fano fractional", Some(pg.fingerprint()));
    let (ts, _) = tau_star(&pg)?;
    let (ns, _) = nu_star(&pg)?;
    report.claim(Claim::compare("tau*(PG(2,2))", &ts, Relation::Eq, &rational(7, 3)));
    report.claim(Claim::compare("nu*(PG(2,2))", &ns, Relation::Eq, &rational(7, 3)));
    Ok(report)
}

/// Intersecting, neither last-side vertex covers, avoiding covers need
/// `2r - 4` vertices, and every cover has biased size above `nu = 1`.
pub fn check_biased(r: usize) -> Result<CertificateReport> {
    let h = biased_counterexample(r)?;
    let mut report = CertificateReport::new(format!("biased counterexample r = {r}"), Some(h.fingerprint()));
    report.claim(Claim::holds("intersecting", is_intersecting(&h)?));
    let last = r - 1;
    for i in 0..h.side_sizes()[last] {
        let single = BTreeSet::from([VertexRef::new(last, i)]);
        report.claim(Claim::holds(format!("{} alone is not a cover", VertexRef::new(last, i)), !covers(&h, &single)));
    }
    match min_cover_avoiding(&h, last)? {
        Some((k, _)) => report.claim(Claim::compare("min cover avoiding last side", &k, Relation::Eq, &(2 * r - 4))),
        None => report.claim(Claim::holds("some cover avoids the last side", false)),
    };
    let (biased, cover) = min_biased_cover(&h, last)?;
    let (n, _) = nu(&h);
    report.claim(Claim::compare("min biased size > nu", &biased, Relation::Gt, &integer(n)));
    report.claim(Claim::compare("nu", &n, Relation::Eq, &1));
    report.witness(format!(
        "biased optimum {biased} at {}",
        cover.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    ));
    Ok(report)
}

/// Intersecting, and `e \ V_1` is not a cover for any edge `e`.
pub fn check_exponential(r: usize) -> Result<CertificateReport> {
    let h = exponential_counterexample(r)?;
    let mut report = CertificateReport::new(format!("exponential-side counterexample r = {r}"), Some(h.fingerprint()));
    report.claim(Claim::holds("intersecting", is_intersecting(&h)?));
    report.claim(Claim::compare("|V_1|", &h.side_sizes()[0], Relation::Eq, &(1 << (r - 2))));
    let failures = h
        .edges()
        .iter()
        .filter(|e| {
            let rest: BTreeSet<VertexRef> = (1..r).map(|s| VertexRef::new(s, e[s])).collect();
            !covers(&h, &rest)
        })
        .count();
    report.claim(Claim::compare("edges e with e minus V_1 not a cover", &failures, Relation::Eq, &h.edge_count()));
    Ok(report)
}
