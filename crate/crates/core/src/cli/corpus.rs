//! Regression corpus of polynomial pairs with known verdicts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::parser::parse_polynomial;
use crate::certifier::{certify, Certificate, Verdict};
use crate::error::{Error, Result};

/// The corpus shipped with the crate.
pub const BUNDLED: &str = include_str!("../../data/corpus.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCase {
    pub name: String,
    pub f: String,
    /// Absent means the pair `(f, f)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    pub expected: String,
    /// When present, an `Inconclusive` verdict must carry exactly this reason.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub citation: String,
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub case: CorpusCase,
    pub certificate: Certificate,
    pub passed: bool,
}

const TAGS: [&str; 4] = ["NotIsogenousOverClosure", "IsogenyImpliesCM", "HomZero", "Inconclusive"];

pub fn load_corpus(text: &str) -> Result<Vec<CorpusCase>> {
    let cases: Vec<CorpusCase> =
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("malformed corpus: {e}")))?;
    for c in &cases {
        if !TAGS.contains(&c.expected.as_str()) {
            return Err(Error::invalid(format!(
                "case {:?}: unknown expected tag {:?}",
                c.name, c.expected
            )));
        }
    }
    Ok(cases)
}

fn matches(case: &CorpusCase, verdict: &Verdict) -> bool {
    if verdict.tag() != case.expected {
        return false;
    }
    match (verdict, &case.reason) {
        (Verdict::Inconclusive { reason }, Some(want)) => reason == want,
        _ => true,
    }
}

/// Certifies every case; results come back in corpus order.
pub fn run_corpus(cases: &[CorpusCase]) -> Result<Vec<CaseOutcome>> {
    cases
        .par_iter()
        .map(|case| {
            let f = parse_polynomial(&case.f)?;
            let h = match &case.h {
                Some(h) => parse_polynomial(h)?,
                None => f.clone(),
            };
            let certificate = certify(&f, &h);
            let passed = matches(case, &certificate.verdict);
            Ok(CaseOutcome { case: case.clone(), certificate, passed })
        })
        .collect()
}
