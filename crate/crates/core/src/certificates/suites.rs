use std::fmt;
use std::str::FromStr;

use super::{
    check_biased, check_exponential, check_fano_fraction, check_mindeg, check_onefact, check_named_examples,
    check_plane_families, check_sidecover, check_stndrdcnt, fractional_profile, lb_f, mindeg_floor,
    CertificateReport, Claim, Relation,
};
use crate::constructions::one_factorization_instance;
use crate::corpus::{corpus, random_lemma_instances, CorpusEntry};
use crate::error::{Error, Result};
use crate::hypergraph::is_intersecting;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    NamedExamples,
    Lemmas,
    Fractional,
    Counterexamples,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["paper-examples", "lemmas", "fractional", "counterexamples", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NamedExamples => "paper-examples",
            Suite::Lemmas => "lemmas",
            Suite::Fractional => "fractional",
            Suite::Counterexamples => "counterexamples",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "paper-examples" => Suite::NamedExamples,
            "lemmas" => Suite::Lemmas,
            "fractional" => Suite::Fractional,
            "counterexamples" => Suite::Counterexamples,
            "all" => Suite::All,
            _ => return Err(Error::Domain(format!("unknown suite `{s}`; expected one of {}", Suite::NAMES.join(", ")))),
        })
    }
}

/// Reports of one suite run. Instances whose preconditions fail are listed
/// in `skipped` instead of counting as failures.
#[derive(Debug, Clone, Default)]
pub struct SuiteOutcome {
    pub reports: Vec<CertificateReport>,
    pub skipped: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CertificateReport::overall)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateReport> {
        self.reports.iter().filter(|r| !r.overall())
    }

    fn push_checked(&mut self, name: &str, report: CertificateReport) {
        if report.precondition_failed() {
            let failed: Vec<&str> = report
                .preconditions
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.description.as_str())
                .collect();
            self.skipped.push(format!("{} on {name}: {}", report.subject, failed.join(", ")));
        } else {
            let mut report = report;
            report.subject = format!("{} on {name}", report.subject);
            self.reports.push(report);
        }
    }

    fn extend(&mut self, other: SuiteOutcome) {
        self.reports.extend(other.reports);
        self.skipped.extend(other.skipped);
    }
}

/// Seed base and size of the random lemma corpus.
pub const LEMMA_SEED_BASE: u64 = 5000;
pub const LEMMA_INSTANCES: usize = 200;

/// Degree-threshold and lower-bound arithmetic.
pub fn check_bound_values() -> CertificateReport {
    let mut report = CertificateReport::new("lower-bound recurrence", None);
    for (r, want) in [(7, 14), (8, 18), (9, 20), (10, 24)] {
        report.claim(Claim::compare(format!("lb_f({r})"), &lb_f(r), Relation::Eq, &want));
    }
    report.claim(Claim::compare("mindeg_floor(8, 7)", &mindeg_floor(8, 7), Relation::Eq, &5));
    report.claim(Claim::compare("mindeg_floor(7, 6)", &mindeg_floor(7, 6), Relation::Eq, &4));
    report
}

fn lemma_checks(entries: &[CorpusEntry]) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for e in entries {
        let h = &e.hypergraph;
        if !is_intersecting(h)? {
            out.skipped.push(format!("lemmas on {}: not intersecting", e.name));
            continue;
        }
        out.push_checked(&e.name, check_stndrdcnt(h)?);
        out.push_checked(&e.name, check_sidecover(h)?);
        out.push_checked(&e.name, check_mindeg(h)?);
        if h.r() % 2 == 1 && h.edges().len() <= h.r() {
            out.push_checked(&e.name, check_onefact(h)?);
        }
    }
    Ok(out)
}

pub fn run_suite(suite: Suite) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    match suite {
        Suite::NamedExamples => {
            out.reports.push(check_named_examples()?);
            out.reports.push(check_plane_families()?);
        }
        Suite::Lemmas => {
            out.reports.push(check_bound_values());
            for r in [3, 5, 7, 9] {
                out.push_checked(&format!("onefact{r}"), check_onefact(&one_factorization_instance(r)?)?);
            }
            out.extend(lemma_checks(&corpus()?)?);
            out.extend(lemma_checks(&random_lemma_instances(LEMMA_INSTANCES, LEMMA_SEED_BASE)?)?);
        }
        Suite::Fractional => {
            out.reports.push(check_fano_fraction()?);
            for e in corpus()? {
                out.reports.push(fractional_profile(&e.name, &e.hypergraph)?);
            }
        }
        Suite::Counterexamples => {
            for r in [4, 5] {
                out.reports.push(check_biased(r)?);
                out.reports.push(check_exponential(r)?);
            }
        }
        Suite::All => {
            for s in [Suite::NamedExamples, Suite::Lemmas, Suite::Fractional, Suite::Counterexamples] {
                out.extend(run_suite(s)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn bound_values_pass() {
        assert!(check_bound_values().overall());
    }
}
