use super::{CertificateReport, Claim, Relation};
use crate::error::Result;
use crate::fractional::{integer, rational, Rational};
use crate::hypergraph::{
    degree_profile, degrees, is_intersecting, pairwise_meet_once, side_degree_profile, Hypergraph, PartiteHypergraph,
};
use crate::solvers::tau;

fn intersecting_precondition(report: &mut CertificateReport, h: &PartiteHypergraph) -> Result<bool> {
    let ok = is_intersecting(h)?;
    Ok(report.require(Claim::holds("intersecting", ok)))
}

/// Vertices of positive degree on each side.
fn live_side_counts(h: &PartiteHypergraph) -> Vec<usize> {
    (0..h.r())
        .map(|s| side_degree_profile(h, s, false).expect("side in range").counts.values().sum())
        .collect()
}

/// Counting bounds `x1 + x4 >= C(|H|,2) + 3r tau - 2r|H|` and
/// `x3 + 3x4 >= C(|H|,2) + r tau - r|H|` for maximum degree at most 4, with
/// equality exactly when H is linear with `tau` vertices on each side.
pub fn check_stndrdcnt(h: &PartiteHypergraph) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("stndrdcnt", Some(h.fingerprint()));
    if !intersecting_precondition(&mut report, h)? {
        return Ok(report);
    }
    let profile = degree_profile(h, false);
    if !report.require(Claim::compare("max degree", &profile.max_degree(), Relation::Le, &4)) {
        return Ok(report);
    }
    let (t, cover) = tau(h)?;
    let x = |d: usize| profile.count(d) as i64;
    let (r, m, t) = (h.r() as i64, h.edge_count() as i64, t as i64);
    let pairs = m * (m - 1) / 2;
    let lhs1 = x(1) + x(4);
    let rhs1 = pairs + 3 * r * t - 2 * r * m;
    let lhs2 = x(3) + 3 * x(4);
    let rhs2 = pairs + r * t - r * m;
    report.claim(Claim::compare("x1 + x4 >= C(|H|,2) + 3r tau - 2r|H|", &lhs1, Relation::Ge, &rhs1));
    report.claim(Claim::compare("x3 + 3x4 >= C(|H|,2) + r tau - r|H|", &lhs2, Relation::Ge, &rhs2));

    let tight_sides = live_side_counts(h).iter().all(|&c| c as i64 == t);
    let extremal = pairwise_meet_once(h) && tight_sides;
    report.claim(Claim::compare(
        "equality in first bound iff linear with tau vertices per side",
        &(lhs1 == rhs1),
        Relation::Eq,
        &extremal,
    ));
    report.claim(Claim::compare(
        "equality in second bound iff linear with tau vertices per side",
        &(lhs2 == rhs2),
        Relation::Eq,
        &extremal,
    ));
    report.witness(format!("profile {profile}"));
    report.witness(format!("tau = {t} via {}", format_cover(&cover.vertices)));
    Ok(report)
}

fn format_cover<'a>(vs: impl IntoIterator<Item = &'a crate::hypergraph::VertexRef>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// `(y1 + 1)/2 + y2 >= tau` on every side, where `y1` counts degree-1 and
/// `y2` degree-at-least-2 vertices of that side.
pub fn check_sidecover(h: &PartiteHypergraph) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("sidecover", Some(h.fingerprint()));
    if !intersecting_precondition(&mut report, h)? {
        return Ok(report);
    }
    let (t, _) = tau(h)?;
    let t = integer(t);
    for side in 0..h.r() {
        let p = side_degree_profile(h, side, false)?;
        let (y1, y2) = (p.count(1), p.count_at_least(2));
        let lhs = rational(y1 as i64 + 1, 2) + integer(y2);
        report.claim(Claim::compare(
            format!("side {}: (y1+1)/2 + y2 >= tau (y1 = {y1}, y2 = {y2})", side + 1),
            &lhs,
            Relation::Ge,
            &t,
        ));
    }
    Ok(report)
}

/// For odd r, intersecting H with `|H| <= r` and `tau >= (r+1)/2`: exactly r
/// edges, `tau = (r+1)/2`, each side one degree-1 and `(r-1)/2` degree-2
/// vertices, each edge one degree-1 and `r-1` degree-2 vertices, linear.
pub fn check_onefact(h: &PartiteHypergraph) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("onefact", Some(h.fingerprint()));
    let r = h.r();
    if !report.require(Claim::holds("r odd", r % 2 == 1)) {
        return Ok(report);
    }
    if !intersecting_precondition(&mut report, h)? {
        return Ok(report);
    }
    if !report.require(Claim::compare("|H| <= r", &h.edge_count(), Relation::Le, &r)) {
        return Ok(report);
    }
    let (t, _) = tau(h)?;
    let half = (r + 1) / 2;
    if !report.require(Claim::compare("tau >= (r+1)/2", &t, Relation::Ge, &half)) {
        return Ok(report);
    }
    report.claim(Claim::compare("|H| = r", &h.edge_count(), Relation::Eq, &r));
    report.claim(Claim::compare("tau = (r+1)/2", &t, Relation::Eq, &half));
    let sides_ok = (0..r).all(|s| {
        let p = side_degree_profile(h, s, false).expect("side in range");
        p.count(1) == 1 && p.count(2) == (r - 1) / 2 && p.counts.len() == 2
    });
    report.claim(Claim::holds("each side: one degree-1 and (r-1)/2 degree-2 vertices", sides_ok));
    let deg = degrees(h);
    let lines_ok = (0..h.edge_count()).all(|e| {
        let ds: Vec<usize> = h.edge_vertices(e).iter().map(|&v| deg[v]).collect();
        ds.iter().filter(|&&d| d == 1).count() == 1 && ds.iter().filter(|&&d| d == 2).count() == r - 1
    });
    report.claim(Claim::holds("each edge: one degree-1 and r-1 degree-2 vertices", lines_ok));
    report.claim(Claim::holds("linear", pairwise_meet_once(h)));
    Ok(report)
}

/// Least maximum degree forced in an intersecting r-partite hypergraph whose
/// covering number is `t`: 1 for `t = 1`, else the largest `d` in 2..=5 whose
/// threshold holds (`t > (r+1)/2`, `t > 2r/3 + 1`, `t >= (25r+23)/32`).
pub fn mindeg_floor(r: usize, t: usize) -> usize {
    if t <= 1 {
        return 1;
    }
    let (r, t) = (r as u128, t as u128);
    let mut d = 2;
    if 2 * t > r + 1 {
        d = 3;
    }
    if 3 * t > 2 * r + 3 {
        d = 4;
    }
    if 32 * t >= 25 * r + 23 {
        d = 5;
    }
    d
}

/// `sum_{t=1}^{r-1} mindeg_floor(r, t)`: removing a maximum-degree vertex
/// lowers tau by at most one, so peeling from `tau = r - 1` down to 1 needs
/// at least this many edges.
pub fn lb_f(r: usize) -> usize {
    (1..r).map(|t| mindeg_floor(r, t)).sum()
}

/// The summands of [`lb_f`] in order `t = 1..r-1`.
pub fn lb_f_terms(r: usize) -> Vec<usize> {
    (1..r).map(|t| mindeg_floor(r, t)).collect()
}

/// Limit of `lb_f(r) / r`.
pub fn lb_f_slope() -> Rational {
    rational(293, 96)
}

/// Maximum degree is at least `mindeg_floor(r, tau)`.
pub fn check_mindeg(h: &PartiteHypergraph) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("mindeg", Some(h.fingerprint()));
    if !intersecting_precondition(&mut report, h)? {
        return Ok(report);
    }
    let (t, _) = tau(h)?;
    let delta = degree_profile(h, false).max_degree();
    let floor = mindeg_floor(h.r(), t);
    report.claim(Claim::compare(
        format!("max degree >= mindeg_floor(r = {}, tau = {t})", h.r()),
        &delta,
        Relation::Ge,
        &floor,
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_f7, one_factorization_instance, truncated_projective_plane};
    use crate::hypergraph::parse_digit_format;

    #[test]
    fn floors_at_quoted_points() {
        assert_eq!(mindeg_floor(8, 7), 5);
        assert_eq!(mindeg_floor(7, 6), 4);
        assert_eq!(mindeg_floor(9, 1), 1);
        // t = (r+1)/2 is not strict
        assert_eq!(mindeg_floor(5, 3), 2);
    }

    #[test]
    fn lb_values() {
        assert_eq!([7, 8, 9, 10].map(lb_f), [14, 18, 20, 24]);
        assert_eq!(lb_f(2), 1);
        assert_eq!(lb_f_terms(8), vec![1, 2, 2, 2, 3, 3, 5]);
    }

    #[test]
    fn single_edge_reports() {
        let h = parse_digit_format("111", 3).unwrap();
        for rep in [check_stndrdcnt(&h), check_sidecover(&h), check_mindeg(&h)] {
            assert!(rep.unwrap().overall());
        }
        let rep = check_onefact(&h).unwrap();
        assert!(rep.precondition_failed());
    }

    #[test]
    fn onefact_instances() {
        for r in [3, 5, 7] {
            let rep = check_onefact(&one_factorization_instance(r).unwrap()).unwrap();
            assert!(rep.overall(), "{rep}");
        }
        let rep = check_onefact(&truncated_projective_plane(2).unwrap()).unwrap();
        assert!(rep.precondition_failed());
    }

    #[test]
    fn stndrdcnt_equality_on_onefact() {
        let rep = check_stndrdcnt(&one_factorization_instance(5).unwrap()).unwrap();
        assert!(rep.overall(), "{rep}");
    }

    #[test]
    fn f7_mindeg_and_sidecover() {
        let h = example_f7();
        assert!(check_mindeg(&h).unwrap().overall());
        assert!(check_sidecover(&h).unwrap().overall());
    }
}
