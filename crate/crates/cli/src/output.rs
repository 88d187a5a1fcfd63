use ryser_core::certificates::CertificateReport;
use ryser_core::solvers::{Cover, Matching};
use ryser_core::fractional::EdgeWeighting;
use ryser_core::Rational;

/// Fractions always print as `p/q`, integers included.
pub fn frac(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn vertex_list(c: &Cover) -> String {
    c.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn edge_list(m: &Matching) -> String {
    m.edge_indices.iter().map(|e| format!("e{}", e + 1)).collect::<Vec<_>>().join(" ")
}

/// Writes `key = value` lines; human mode adds commentary lines.
#[derive(Debug, Clone, Copy)]
pub struct Printer {
    pub machine: bool,
}

impl Printer {
    pub fn kv(&self, key: &str, value: impl std::fmt::Display) {
        println!("{key} = {value}");
    }

    pub fn human(&self, text: impl std::fmt::Display) {
        if !self.machine {
            println!("{text}");
        }
    }

    pub fn weights(&self, w: &EdgeWeighting) {
        for (e, a) in &w.alpha {
            self.kv(&format!("alpha.e{}", e + 1), frac(a));
        }
    }

    /// Machine mode: one `claim = PASS|FAIL | subject | claim` line per claim.
    pub fn report(&self, r: &CertificateReport) {
        if self.machine {
            for c in r.preconditions.iter().chain(&r.claims) {
                let status = if c.pass { "PASS" } else { "FAIL" };
                self.kv("claim", format!("{status} | {} | {}: {} {} {}", r.subject, c.description, c.lhs, c.relation.symbol(), c.rhs));
            }
        } else {
            print!("{}", r.to_text());
        }
    }
}
