use std::fmt;

use crate::hypergraph::Fingerprint;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }

    pub fn holds<T: PartialOrd + ?Sized>(self, lhs: &T, rhs: &T) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

/// One evaluated inequality or equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub description: String,
    pub lhs: String,
    pub relation: Relation,
    pub rhs: String,
    pub pass: bool,
}

impl Claim {
    pub fn compare<T: PartialOrd + fmt::Display + ?Sized>(
        description: impl Into<String>,
        lhs: &T,
        relation: Relation,
        rhs: &T,
    ) -> Self {
        Claim {
            description: description.into(),
            lhs: lhs.to_string(),
            relation,
            rhs: rhs.to_string(),
            pass: relation.holds(lhs, rhs),
        }
    }

    /// A boolean fact, rendered as `true = true`.
    pub fn holds(description: impl Into<String>, fact: bool) -> Self {
        Claim::compare(description, &fact, Relation::Eq, &true)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} -> {}",
            self.description,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

/// Machine-checkable outcome of one verification run.
///
/// Preconditions are evaluated first; when one fails the conclusions are
/// not evaluated and the report says so instead of failing a conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub subject: String,
    pub fingerprint: Option<Fingerprint>,
    pub preconditions: Vec<Claim>,
    pub claims: Vec<Claim>,
    pub witnesses: Vec<String>,
}

impl CertificateReport {
    pub fn new(subject: impl Into<String>, fingerprint: Option<Fingerprint>) -> Self {
        CertificateReport {
            subject: subject.into(),
            fingerprint,
            preconditions: Vec::new(),
            claims: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn require(&mut self, claim: Claim) -> bool {
        let pass = claim.pass;
        self.preconditions.push(claim);
        pass
    }

    pub fn claim(&mut self, claim: Claim) -> bool {
        let pass = claim.pass;
        self.claims.push(claim);
        pass
    }

    pub fn witness(&mut self, text: impl Into<String>) {
        self.witnesses.push(text.into());
    }

    pub fn precondition_failed(&self) -> bool {
        self.preconditions.iter().any(|c| !c.pass)
    }

    pub fn overall(&self) -> bool {
        !self.precondition_failed() && self.claims.iter().all(|c| c.pass)
    }

    /// Claim lines followed by `OVERALL: PASS|FAIL`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.fingerprint {
            Some(fp) => out.push_str(&format!("# {} [{fp}]\n", self.subject)),
            None => out.push_str(&format!("# {}\n", self.subject)),
        }
        for c in &self.preconditions {
            out.push_str(&format!("precondition {c}\n"));
        }
        for c in &self.claims {
            out.push_str(&format!("{c}\n"));
        }
        for w in &self.witnesses {
            out.push_str(&format!("# witness: {w}\n"));
        }
        if self.precondition_failed() {
            out.push_str("# precondition failed; conclusions not evaluated\n");
        }
        out.push_str(if self.overall() { "OVERALL: PASS\n" } else { "OVERALL: FAIL\n" });
        out
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
