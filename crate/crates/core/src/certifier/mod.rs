//! The theorem engine.
//!
//! [`certify`] checks the hypotheses of the applicable non-isogeny results
//! for a pair `(f, h)`, records each check as a [`Hypothesis`], and derives
//! the verdict from the trace alone through [`decide`]. A verdict other than
//! `Inconclusive` needs its whole hypothesis chain present and verified, so
//! a certificate can be rechecked by re-deciding its trace and by rerunning
//! the computation ([`check_certificate`]).

mod disjoint;
mod json;
mod routes;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use disjoint::{prove_linear_disjointness, DisjointRule, DisjointnessResult};
pub use routes::{certify, check_setting, supersingular_constraint, CHAR_P_BOUND};

use crate::error::{Error, Result};
use crate::exact::Polynomial;

/// Hypothesis names. The verdict rules below refer to these.
pub mod names {
    pub const EQUAL_DEGREE: &str = "equal_degree";
    pub const SQUAREFREE_F: &str = "squarefree_f";
    pub const SQUAREFREE_H: &str = "squarefree_h";
    pub const SETTING: &str = "setting";
    pub const EXACTLY_ONE_IRREDUCIBLE: &str = "exactly_one_irreducible";
    pub const BOTH_IRREDUCIBLE: &str = "both_irreducible";
    pub const SOME_IRREDUCIBLE: &str = "some_irreducible";
    pub const J_OUTSIDE_S: &str = "j_outside_S";
    pub const GALOIS_F: &str = "galois_f";
    pub const GALOIS_H: &str = "galois_h";
    pub const DOUBLY_TRANSITIVE: &str = "doubly_transitive";
    pub const LINEAR_DISJOINTNESS: &str = "linear_disjointness";
    pub const BOTH_CYCLIC_CUBIC: &str = "both_cyclic_cubic";
    pub const STEM_FIELDS_NONISOMORPHIC: &str = "stem_fields_nonisomorphic";
}

use names::*;

/// Reason recorded when both j-invariants of the one-reducible cubic route lie in S.
pub const BOTH_J_IN_S: &str = "Cor \"rational\" case (ii): both j in S";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub citation: String,
    pub status: Status,
    pub detail: String,
}

impl Hypothesis {
    pub fn new(name: &str, citation: &str, status: Status, detail: impl Into<String>) -> Self {
        Hypothesis { name: name.into(), citation: citation.into(), status, detail: detail.into() }
    }

    pub fn check(name: &str, citation: &str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { Status::Verified } else { Status::Failed };
        Self::new(name, citation, status, detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotIsogenousOverClosure,
    IsogenyImpliesCM { cyclotomic_degree: u64 },
    HomZero,
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::NotIsogenousOverClosure => "NotIsogenousOverClosure",
            Verdict::IsogenyImpliesCM { .. } => "IsogenyImpliesCM",
            Verdict::HomZero => "HomZero",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    /// Whether the verdict rules out isogeny over the algebraic closure.
    pub fn is_non_isogeny(&self) -> bool {
        matches!(self, Verdict::NotIsogenousOverClosure | Verdict::HomZero)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::IsogenyImpliesCM { cyclotomic_degree } => {
                write!(f, "IsogenyImpliesCM(n={cyclotomic_degree})")
            }
            Verdict::Inconclusive { reason } => write!(f, "Inconclusive({reason})"),
            v => f.write_str(v.tag()),
        }
    }
}

/// Supersingular-branch constraint in characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPConstraint {
    pub p: u64,
    pub f_p: Option<u64>,
    pub allowed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub f: Polynomial,
    pub h: Polynomial,
    pub n: u64,
    pub verdict: Verdict,
    pub char_p_constraints: Vec<CharPConstraint>,
    pub trace: Vec<Hypothesis>,
    pub version: String,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        json::to_json(self)
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        json::from_json(text)
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.trace.iter().find(|h| h.name == name)
    }
}

const COMMON: [&str; 4] = [EQUAL_DEGREE, SQUAREFREE_F, SQUAREFREE_H, SETTING];

/// Hypotheses each verdict needs, beyond the common ones.
fn chain_for(verdict: &Verdict) -> &'static [&'static str] {
    match verdict {
        Verdict::HomZero => &[
            BOTH_IRREDUCIBLE,
            GALOIS_F,
            GALOIS_H,
            DOUBLY_TRANSITIVE,
            LINEAR_DISJOINTNESS,
        ],
        Verdict::NotIsogenousOverClosure => &[],
        Verdict::IsogenyImpliesCM { .. } => &[EXACTLY_ONE_IRREDUCIBLE],
        Verdict::Inconclusive { .. } => &[],
    }
}

/// The verdict a trace supports. Any hypothesis that is not verified gives
/// `Inconclusive`, and so does a chain with a missing link.
pub fn decide(n: u64, trace: &[Hypothesis]) -> Verdict {
    if let Some(bad) = trace.iter().find(|h| h.status != Status::Verified) {
        let reason = if bad.name == J_OUTSIDE_S && bad.status == Status::Failed {
            BOTH_J_IN_S.to_string()
        } else {
            format!("{} {}: {}", bad.name, bad.status, bad.detail)
        };
        return Verdict::Inconclusive { reason };
    }
    let has = |name: &str| trace.iter().any(|h| h.name == name);
    let all = |names: &[&str]| names.iter().all(|n| has(n));
    if !all(&COMMON) {
        return Verdict::Inconclusive { reason: "incomplete hypothesis chain".into() };
    }
    let candidate = if has(LINEAR_DISJOINTNESS) {
        Verdict::HomZero
    } else if has(STEM_FIELDS_NONISOMORPHIC) && all(&[BOTH_IRREDUCIBLE, BOTH_CYCLIC_CUBIC]) {
        Verdict::NotIsogenousOverClosure
    } else if has(J_OUTSIDE_S) && has(EXACTLY_ONE_IRREDUCIBLE) {
        Verdict::NotIsogenousOverClosure
    } else if has(EXACTLY_ONE_IRREDUCIBLE) {
        Verdict::IsogenyImpliesCM { cyclotomic_degree: n }
    } else {
        return Verdict::Inconclusive { reason: "no applicable rule".into() };
    };
    if all(chain_for(&candidate)) {
        candidate
    } else {
        Verdict::Inconclusive { reason: "incomplete hypothesis chain".into() }
    }
}

/// Rechecks a certificate: its verdict must follow from its trace, and
/// recomputing from its inputs must reproduce it exactly.
pub fn check_certificate(cert: &Certificate) -> Result<()> {
    let decided = decide(cert.n, &cert.trace);
    if decided != cert.verdict {
        return Err(Error::Inconsistency(format!(
            "trace supports {decided}, certificate claims {}",
            cert.verdict
        )));
    }
    let fresh = certify(&cert.f, &cert.h);
    if &fresh != cert {
        return Err(Error::Inconsistency(format!(
            "recomputation gives {} with a different trace",
            fresh.verdict
        )));
    }
    Ok(())
}
