use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{CharPConstraint, Certificate, Hypothesis, Verdict};
use crate::error::{Error, Result};
use crate::exact::{format_rational, Polynomial};

#[derive(Serialize, Deserialize)]
struct Inputs {
    f: Vec<String>,
    h: Vec<String>,
    n: u64,
}

#[derive(Serialize, Deserialize)]
struct VerdictDoc {
    tag: String,
    parameters: Map<String, Value>,
}

#[derive(Serialize, Deserialize)]
struct Document {
    inputs: Inputs,
    verdict: VerdictDoc,
    char_p_constraints: Vec<CharPConstraint>,
    trace: Vec<Hypothesis>,
    version: String,
}

/// Coefficients from the constant term up.
pub(crate) fn coefficient_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

pub(crate) fn parse_coefficients(cs: &[String]) -> Result<Polynomial> {
    cs.iter()
        .map(|c| {
            BigRational::from_str(c.trim())
                .map_err(|_| Error::invalid(format!("bad coefficient {c:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Polynomial::from_coeffs)
}

fn verdict_doc(v: &Verdict) -> VerdictDoc {
    let mut parameters = Map::new();
    match v {
        Verdict::IsogenyImpliesCM { cyclotomic_degree } => {
            parameters.insert("cyclotomic_degree".into(), Value::from(*cyclotomic_degree));
        }
        Verdict::Inconclusive { reason } => {
            parameters.insert("reason".into(), Value::from(reason.clone()));
        }
        Verdict::HomZero | Verdict::NotIsogenousOverClosure => {}
    }
    VerdictDoc { tag: v.tag().into(), parameters }
}

fn verdict_from_doc(d: &VerdictDoc) -> Result<Verdict> {
    let missing = |key: &str| Error::invalid(format!("verdict {} lacks parameter {key}", d.tag));
    Ok(match d.tag.as_str() {
        "HomZero" => Verdict::HomZero,
        "NotIsogenousOverClosure" => Verdict::NotIsogenousOverClosure,
        "IsogenyImpliesCM" => Verdict::IsogenyImpliesCM {
            cyclotomic_degree: d
                .parameters
                .get("cyclotomic_degree")
                .and_then(Value::as_u64)
                .ok_or_else(|| missing("cyclotomic_degree"))?,
        },
        "Inconclusive" => Verdict::Inconclusive {
            reason: d
                .parameters
                .get("reason")
                .and_then(Value::as_str)
                .ok_or_else(|| missing("reason"))?
                .to_string(),
        },
        other => return Err(Error::invalid(format!("unknown verdict tag {other:?}"))),
    })
}

pub(crate) fn to_json(c: &Certificate) -> String {
    let doc = Document {
        inputs: Inputs { f: coefficient_strings(&c.f), h: coefficient_strings(&c.h), n: c.n },
        verdict: verdict_doc(&c.verdict),
        char_p_constraints: c.char_p_constraints.clone(),
        trace: c.trace.clone(),
        version: c.version.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("certificate documents always serialize")
}

pub(crate) fn from_json(text: &str) -> Result<Certificate> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("malformed certificate: {e}")))?;
    Ok(Certificate {
        f: parse_coefficients(&doc.inputs.f)?,
        h: parse_coefficients(&doc.inputs.h)?,
        n: doc.inputs.n,
        verdict: verdict_from_doc(&doc.verdict)?,
        char_p_constraints: doc.char_p_constraints,
        trace: doc.trace,
        version: doc.version,
    })
}

#[cfg(test)]
mod tests {
    use super::super::certify;
    use super::*;

    #[test]
    fn round_trip_and_key_order() {
        let c = certify(&Polynomial::from_ints(&[-5, 0, 0, 1]), &Polynomial::from_ints(&[22, -15, 0, 1]));
        let text = c.to_json();
        let keys = ["\"inputs\"", "\"verdict\"", "\"char_p_constraints\"", "\"trace\"", "\"version\""];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(text.contains("\"22\""));
        assert_eq!(Certificate::from_json(&text).unwrap(), c);
    }

    #[test]
    fn rational_coefficients_render_as_fractions() {
        let f = Polynomial::from_coeffs(vec![BigRational::new((-7).into(), 27.into())]);
        assert_eq!(coefficient_strings(&f), vec!["-7/27"]);
        assert_eq!(parse_coefficients(&["-7/27".into()]).unwrap(), f);
        assert!(parse_coefficients(&["x".into()]).is_err());
    }

    #[test]
    fn malformed_documents() {
        assert!(Certificate::from_json("{}").is_err());
        assert!(Certificate::from_json("not json").is_err());
    }
}
