use std::collections::BTreeSet;

use anyhow::Result;
use ryser_core::certificates::{
    enumerate_achievers, extremal_search, lb_f, lb_f_slope, lb_f_terms, mindeg_floor, run_suite, SearchOptions,
    SearchVerdict, Suite,
};
use ryser_core::constructions::{random_line_subset, truncated_projective_plane};
use ryser_core::fractional::{integer, nu_star, rational, tau_s, tau_star};
use ryser_core::hypergraph::{serialize_digit_format, serialize_table};
use ryser_core::solvers::{find_cover_leq_with, greedy_cover, min_biased_cover, nu_with, tau_with, Budget};
use ryser_core::{Error, PartiteHypergraph, VertexRef};

use crate::input::Loaded;
use crate::output::{edge_list, frac, vertex_list, Printer};
use crate::{usage, Quantity, Status};

pub const BUDGET_ENV: &str = "RYSER_BUDGET_MS";

pub const PROBE_LABEL: &str = "empirical probe — asymptotic theorem not verifiable at desk scale";

pub fn budget_from_env() -> Result<Budget> {
    match std::env::var(BUDGET_ENV) {
        Err(_) => Ok(Budget::unlimited()),
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(ms) if ms > 0 => Ok(Budget::millis(ms)),
            _ => Err(usage(format!("{BUDGET_ENV} must be a positive integer, got `{v}`"))),
        },
    }
}

/// Prints `key = unknown` for an exhausted budget and reports failure.
fn budgeted<T>(out: Printer, key: &str, r: ryser_core::Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Budget(ms)) => {
            out.kv(key, "unknown");
            eprintln!("{key}: time budget of {ms} ms exhausted");
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn chosen_side(h: &PartiteHypergraph, side: Option<usize>) -> Result<usize> {
    match side {
        None => Ok(h.r() - 1),
        Some(s) if (1..=h.r()).contains(&s) => Ok(s - 1),
        Some(s) => Err(usage(format!("side {s} outside 1..={}", h.r()))),
    }
}

pub fn solve(out: Printer, loaded: &Loaded, quantity: Quantity, side: Option<usize>, budget: Budget) -> Result<Status> {
    let h = loaded.as_dyn();
    if h.edge_count() == 0 {
        return Err(usage("input has no edges"));
    }
    if matches!(quantity, Quantity::Biased | Quantity::Avoiding) {
        loaded.partite("biased and avoiding")?;
    }
    out.human(format!("# {} vertices, {} edges", h.vertex_count(), h.edge_count()));
    out.kv("fingerprint", h.fingerprint());
    let none = BTreeSet::new();
    match quantity {
        Quantity::Tau => {
            let Some(found) = budgeted(out, "tau", tau_with(h, &none, budget))? else {
                return Ok(Status::Failed);
            };
            let (k, cover) = found.expect("nothing banned");
            out.kv("tau", k);
            out.kv("cover", vertex_list(&cover));
        }
        Quantity::Nu => {
            let Some((k, m)) = budgeted(out, "nu", nu_with(h, budget))? else {
                return Ok(Status::Failed);
            };
            out.kv("nu", k);
            out.kv("matching", edge_list(&m));
        }
        Quantity::Taustar => {
            let (v, cover) = tau_star(h)?;
            out.kv("tau*", frac(&v));
            for (u, w) in &cover.weights {
                out.kv(&format!("weight.{u}"), frac(w));
            }
        }
        Quantity::Nustar => {
            let (v, w) = nu_star(h)?;
            out.kv("nu*", frac(&v));
            out.weights(&w);
        }
        Quantity::Taus => {
            let (v, w) = tau_s(h)?;
            out.kv("tau_s", frac(&v));
            out.weights(&w);
        }
        Quantity::Greedy => {
            let cover = greedy_cover(h)?;
            out.kv("greedy", cover.len());
            out.kv("cover", vertex_list(&cover));
        }
        Quantity::Biased => {
            let p = loaded.partite("biased")?;
            let s = chosen_side(p, side)?;
            let (v, cover) = min_biased_cover(p, s)?;
            out.kv("side", s + 1);
            out.kv("biased", frac(&v));
            out.kv("cover", vertex_list(&cover));
        }
        Quantity::Avoiding => {
            let p = loaded.partite("avoiding")?;
            let s = chosen_side(p, side)?;
            let banned = (0..p.side_sizes()[s]).map(|i| VertexRef::new(s, i)).collect();
            out.kv("side", s + 1);
            let Some(found) = budgeted(out, "avoiding", tau_with(p, &banned, budget))? else {
                return Ok(Status::Failed);
            };
            match found {
                Some((k, cover)) => {
                    out.kv("avoiding", k);
                    out.kv("cover", vertex_list(&cover));
                }
                None => {
                    out.kv("avoiding", "none");
                    out.human("# some edge lies entirely in the avoided side");
                }
            }
        }
    }
    Ok(Status::Ok)
}

pub fn verify(out: Printer, suite: Suite) -> Result<Status> {
    let outcome = run_suite(suite)?;
    for r in &outcome.reports {
        if out.machine || !r.overall() {
            out.report(r);
        } else {
            println!("PASS {} ({} claims)", r.subject, r.claims.len());
        }
    }
    for s in &outcome.skipped {
        match out.machine {
            true => out.kv("skipped", s),
            false => println!("skipped {s}"),
        }
    }
    let failed = outcome.failures().count();
    out.kv("suite", suite);
    out.kv("reports", outcome.reports.len());
    out.kv("claims", outcome.reports.iter().map(|r| r.claims.len()).sum::<usize>());
    out.kv("failed", failed);
    out.kv("skipped_count", outcome.skipped.len());
    let pass = outcome.passed();
    out.kv("overall", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { Status::Ok } else { Status::Failed })
}

pub fn bound(out: Printer, r: usize) -> Result<Status> {
    if r < 2 {
        return Err(usage("bound needs r >= 2"));
    }
    let terms = lb_f_terms(r);
    let total = lb_f(r);
    if out.machine {
        out.kv("r", r);
        out.kv("terms", terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "));
        out.kv("lb_f", total);
    } else {
        for t in 1..r {
            println!("mindeg_floor({r}, {t}) = {}", mindeg_floor(r, t));
        }
        let sum: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
        match sum.len() {
            1 => println!("lb_f({r}) = {total}"),
            _ => println!("lb_f({r}) = {} = {total}", sum.join(" + ")),
        }
        let slope = lb_f_slope() * integer(r);
        println!("# 293r/96 = {} (asymptotic slope)", frac(&slope));
    }
    Ok(Status::Ok)
}

pub struct SearchArgs {
    pub r: usize,
    pub m: usize,
    pub t: usize,
    pub reverse: bool,
    pub max_candidates: Option<u64>,
    pub achievers: bool,
    pub long_running: bool,
}

fn one_line(h: &PartiteHypergraph) -> String {
    serialize_digit_format(h).unwrap_or_else(|_| serialize_table(h).trim_end().replace('\n', " / "))
}

pub fn search(out: Printer, a: SearchArgs) -> Result<Status> {
    if a.r >= 5 && !a.long_running {
        return Err(usage("search with r >= 5 has no runtime guarantee; pass --long-running"));
    }
    let mut opts = SearchOptions {
        reverse: a.reverse,
        ..SearchOptions::default()
    };
    if let Some(n) = a.max_candidates {
        opts.max_candidates = n;
    }
    if a.achievers {
        let found = enumerate_achievers(a.r, a.m, a.t, opts)?;
        out.kv("achievers", found.len());
        for (i, h) in found.iter().enumerate() {
            out.kv(&format!("achiever.{}", i + 1), one_line(h).trim_end());
        }
        return Ok(Status::Ok);
    }
    let s = extremal_search(a.r, a.m, a.t, opts)?;
    if out.machine {
        out.kv("r", s.r);
        out.kv("m", s.m);
        out.kv("t", s.t);
        let levels: Vec<String> = s.classes_per_level.iter().map(|c| c.to_string()).collect();
        out.kv("classes", levels.join(" "));
        out.kv("candidates", s.candidates);
        match &s.verdict {
            SearchVerdict::Absent => out.kv("verdict", "absent"),
            SearchVerdict::Witness(h) => {
                out.kv("verdict", "witness");
                out.kv("witness", one_line(h).trim_end());
            }
        }
    }
    let report = s.report();
    out.report(&report);
    Ok(if report.overall() { Status::Ok } else { Status::Failed })
}

pub fn random_tpp(out: Printer, r: usize, m: usize, trials: usize, seed: u64, budget: Budget) -> Result<Status> {
    if r < 3 {
        return Err(usage("random-tpp needs r >= 3"));
    }
    let q = r - 1;
    if m == 0 || m > q * q {
        return Err(usage(format!("m must lie in 1..={} for r = {r}", q * q)));
    }
    if trials == 0 {
        return Err(usage("trials must be positive"));
    }
    let tpp = truncated_projective_plane(q)?;
    let none = BTreeSet::new();
    let mut hits = 0usize;
    for i in 0..trials {
        let h = random_line_subset(&tpp, m, seed.wrapping_add(i as u64))?;
        let Some(small) = budgeted(out, "fraction", find_cover_leq_with(&h, r - 2, &none, budget))? else {
            return Ok(Status::Failed);
        };
        hits += usize::from(small.is_none());
    }
    let fraction = rational(hits as i64, trials as i64);
    out.kv("label", PROBE_LABEL);
    out.kv("r", r);
    out.kv("q", q);
    out.kv("m", m);
    out.kv("trials", trials);
    out.kv("seed", seed);
    out.kv("hits", hits);
    out.kv("fraction", frac(&fraction));
    out.kv("fraction_decimal", format!("{:.4}", hits as f64 / trials as f64));
    Ok(Status::Ok)
}
