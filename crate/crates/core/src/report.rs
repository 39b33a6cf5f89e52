use std::fmt::{self, Display};

use serde::Serialize;

use crate::menelaus::{ProofStep, ProofTrace};

/// One checked equality, both sides rendered canonically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl Claim {
    pub fn equality<T: PartialEq + Display>(label: impl Into<String>, lhs: &T, rhs: &T) -> Claim {
        Claim {
            label: label.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal: lhs == rhs,
        }
    }

    /// A yes/no fact, shown as `true = true` when it holds.
    pub fn fact(label: impl Into<String>, holds: bool) -> Claim {
        Claim {
            label: label.into(),
            lhs: holds.to_string(),
            rhs: "true".into(),
            equal: holds,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub name: String,
    pub seed: Option<u64>,
    pub inputs: serde_json::Value,
    pub claims: Vec<Claim>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<ProofTrace>,
}

impl TheoremReport {
    pub fn new(name: &str, inputs: serde_json::Value) -> Self {
        TheoremReport {
            name: name.into(),
            seed: None,
            inputs,
            claims: Vec::new(),
            verdict: true,
            trace: None,
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.verdict &= claim.equal;
        self.claims.push(claim);
    }

    pub fn eq<T: PartialEq + Display>(&mut self, label: &str, lhs: &T, rhs: &T) {
        self.push(Claim::equality(label, lhs, rhs));
    }

    pub fn fact(&mut self, label: &str, holds: bool) {
        self.push(Claim::fact(label, holds));
    }

    pub fn attach(&mut self, trace: ProofTrace) {
        self.verdict &= trace.verdict;
        self.trace = Some(trace);
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn claim(&self, label: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.label == label)
    }
}

fn mark(ok: bool) -> char {
    if ok { '✓' } else { '✗' }
}

impl Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {} = {}", mark(self.equal), self.label, self.lhs, self.rhs)
    }
}

impl Display for ProofStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{:?}] {}: {}  ({} = {})  [{}]", mark(self.equal), self.kind, self.label, self.statement, self.lhs, self.rhs, self.cite)
    }
}

impl Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "proof replay: {}", self.name)?;
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "  {:>2}. {s}", i + 1)?;
        }
        write!(f, "  verdict: {}", mark(self.verdict))
    }
}

impl Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.seed {
            Some(s) => writeln!(f, "{} (seed {s})", self.name)?,
            None => writeln!(f, "{}", self.name)?,
        }
        for c in &self.claims {
            writeln!(f, "  {c}")?;
        }
        if let Some(t) = &self.trace {
            writeln!(f, "{t}")?;
        }
        write!(f, "verdict: {}", mark(self.verdict))
    }
}
