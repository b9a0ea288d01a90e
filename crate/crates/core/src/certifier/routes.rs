use crate::curves::{in_s, j_invariant};
use crate::error::{Error, Result};
use crate::exact::{format_rational, is_prime_u64, is_primitive_root, multiplicative_order, Polynomial};
use crate::factor::{is_irreducible, is_squarefree};
use crate::galois::{galois_group, group_properties, GaloisGroupId};
use crate::number_field::fields_isomorphic;

use super::disjoint::{disjointness, DisjointnessResult};
use super::names::*;
use super::{decide, CharPConstraint, Certificate, Hypothesis, Status, Verdict};

/// Characteristics `3 ≤ p < CHAR_P_BOUND` get a row in the constraint table.
pub const CHAR_P_BOUND: u64 = 50;

const CITE_ENDO_H: &str = "Thm \"endoH\"";
const CITE_SETTING: &str = "Thm \"endoH\": n odd prime, 2 primitive mod n";
const CITE_RATIONAL: &str = "Cor \"rational\"";
const CITE_MAIN_H: &str = "Thm \"mainH\"";
const CITE_DOUBLY: &str = "Thm \"mainH\"(ii)";
const CITE_BOURBAKI: &str = "Prop \"BourbakiLang\"; Thm \"mainH\"(iii)";
const CITE_QUINTIC: &str = "Thm \"mainH\"(iii); quintic S5/F20 quadratic subfields";
const CITE_OVER_Q: &str = "Cor \"overQ\"(ii)";

pub fn check_setting(n: u64) -> Hypothesis {
    let (ok, detail) = if n < 3 || !is_prime_u64(n) {
        (false, format!("n = {n} is not an odd prime"))
    } else {
        let order = multiplicative_order(2, n).expect("odd prime modulus");
        let ok = is_primitive_root(2, n).expect("odd prime modulus");
        (ok, format!("n = {n}, order of 2 mod n is {order}"))
    };
    Hypothesis::check(SETTING, CITE_SETTING, ok, detail)
}

/// `(𝔣_p, allowed)`: the order of `p` mod `n`, and whether the supersingular
/// branch is possible in characteristic `p` (it needs `𝔣_p` even). For
/// `p = n` there is no constraint.
pub fn supersingular_constraint(n: u64, p: u64) -> Result<(Option<u64>, bool)> {
    if n < 3 || !is_prime_u64(n) {
        return Err(Error::invalid(format!("{n} is not an odd prime")));
    }
    if !is_prime_u64(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if p == n {
        return Ok((None, true));
    }
    let order = multiplicative_order(p as i64, n)?;
    Ok((Some(order), order % 2 == 0))
}

fn char_p_table(n: u64) -> Vec<CharPConstraint> {
    (3..CHAR_P_BOUND)
        .filter(|&p| is_prime_u64(p))
        .map(|p| {
            let (f_p, allowed) = supersingular_constraint(n, p).expect("n and p are prime");
            CharPConstraint { p, f_p, allowed }
        })
        .collect()
}

fn unknown(name: &str, citation: &str, err: &Error) -> Hypothesis {
    Hypothesis::new(name, citation, Status::Unknown, err.to_string())
}

/// Decides which route applies to `(f, h)` and records every check.
/// Never fails: errors end up as failed or unknown hypotheses.
pub fn certify(f: &Polynomial, h: &Polynomial) -> Certificate {
    let n = f.degree().unwrap_or(0) as u64;
    let mut trace = Vec::new();
    let mut char_p_constraints = Vec::new();
    run_routes(f, h, n, &mut trace, &mut char_p_constraints);
    let verdict = decide(n, &trace);
    if !matches!(verdict, Verdict::HomZero) {
        char_p_constraints.clear();
    }
    Certificate {
        f: f.clone(),
        h: h.clone(),
        n,
        verdict,
        char_p_constraints,
        trace,
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn run_routes(
    f: &Polynomial,
    h: &Polynomial,
    n: u64,
    trace: &mut Vec<Hypothesis>,
    char_p: &mut Vec<CharPConstraint>,
) {
    let (df, dh) = (f.degree(), h.degree());
    trace.push(Hypothesis::check(
        EQUAL_DEGREE,
        CITE_ENDO_H,
        df.is_some() && df == dh,
        format!("deg f = {}, deg h = {}", show_degree(df), show_degree(dh)),
    ));
    let sf = is_squarefree(f) && df.unwrap_or(0) > 0;
    let sh = is_squarefree(h) && dh.unwrap_or(0) > 0;
    trace.push(Hypothesis::check(SQUAREFREE_F, CITE_ENDO_H, sf, squarefree_detail("f", f, sf)));
    trace.push(Hypothesis::check(SQUAREFREE_H, CITE_ENDO_H, sh, squarefree_detail("h", h, sh)));
    trace.push(check_setting(n));
    if trace.iter().any(|h| h.status != Status::Verified) {
        return;
    }

    let (fi, hi) = match (is_irreducible(f), is_irreducible(h)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            trace.push(unknown(SOME_IRREDUCIBLE, CITE_ENDO_H, &e));
            return;
        }
    };
    match (fi, hi) {
        (true, false) | (false, true) => one_reducible(f, h, fi, n, trace),
        (true, true) => both_irreducible(f, h, n, trace, char_p),
        (false, false) => trace.push(Hypothesis::check(
            SOME_IRREDUCIBLE,
            CITE_ENDO_H,
            false,
            "f and h are both reducible; no route covers this pair",
        )),
    }
}

fn show_degree(d: Option<usize>) -> String {
    d.map_or("-inf".into(), |d| d.to_string())
}

fn squarefree_detail(label: &str, p: &Polynomial, ok: bool) -> String {
    if ok {
        format!("{label} = {p} has distinct roots")
    } else {
        format!("{label} = {p} is constant or has a repeated root")
    }
}

fn one_reducible(f: &Polynomial, h: &Polynomial, f_irreducible: bool, n: u64, trace: &mut Vec<Hypothesis>) {
    let which = if f_irreducible { "f irreducible, h reducible" } else { "h irreducible, f reducible" };
    trace.push(Hypothesis::check(EXACTLY_ONE_IRREDUCIBLE, CITE_ENDO_H, true, which));
    if n != 3 {
        return;
    }
    match (j_invariant(f), j_invariant(h)) {
        (Ok(jf), Ok(jh)) => {
            let outside = !in_s(&jf) || !in_s(&jh);
            trace.push(Hypothesis::check(
                J_OUTSIDE_S,
                CITE_RATIONAL,
                outside,
                format!("j(f) = {}, j(h) = {}", format_rational(&jf), format_rational(&jh)),
            ));
        }
        (Err(e), _) | (_, Err(e)) => trace.push(unknown(J_OUTSIDE_S, CITE_RATIONAL, &e)),
    }
}

fn both_irreducible(
    f: &Polynomial,
    h: &Polynomial,
    n: u64,
    trace: &mut Vec<Hypothesis>,
    char_p: &mut Vec<CharPConstraint>,
) {
    trace.push(Hypothesis::check(BOTH_IRREDUCIBLE, CITE_MAIN_H, true, "f and h are irreducible"));
    let group = |name: &str, label: &str, p: &Polynomial, trace: &mut Vec<Hypothesis>| match galois_group(p) {
        Ok(g) => {
            trace.push(Hypothesis::check(name, CITE_MAIN_H, true, format!("Gal({label}) = {g}")));
            Some(g)
        }
        Err(e) => {
            trace.push(unknown(name, CITE_MAIN_H, &e));
            None
        }
    };
    let gf = group(GALOIS_F, "f", f, trace);
    let gh = group(GALOIS_H, "h", h, trace);
    let (Some(gf), Some(gh)) = (gf, gh) else {
        return;
    };

    if n == 3 && gf == GaloisGroupId::C3 && gh == GaloisGroupId::C3 {
        trace.push(Hypothesis::check(BOTH_CYCLIC_CUBIC, CITE_OVER_Q, true, "Gal(f) = Gal(h) = C3"));
        match fields_isomorphic(f, h) {
            Ok(iso) => trace.push(Hypothesis::check(
                STEM_FIELDS_NONISOMORPHIC,
                CITE_OVER_Q,
                !iso,
                if iso {
                    "f has a root in the stem field of h"
                } else {
                    "f has no root in the stem field of h"
                },
            )),
            Err(e) => trace.push(unknown(STEM_FIELDS_NONISOMORPHIC, CITE_OVER_Q, &e)),
        }
        return;
    }

    let doubly = |g| group_properties(g).map(|p| p.doubly_transitive).unwrap_or(false);
    let (tf, th) = (doubly(gf), doubly(gh));
    trace.push(Hypothesis::check(
        DOUBLY_TRANSITIVE,
        CITE_DOUBLY,
        tf || th,
        format!("{gf} doubly transitive: {tf}; {gh} doubly transitive: {th}"),
    ));
    let hyp = match disjointness(f, gf, h, gh) {
        Ok(DisjointnessResult::Disjoint(rule)) => {
            let cite = if rule == super::DisjointRule::R3 { CITE_QUINTIC } else { CITE_BOURBAKI };
            Hypothesis::check(LINEAR_DISJOINTNESS, cite, true, format!("rule {rule}"))
        }
        Ok(DisjointnessResult::NotDisjoint(why)) => {
            Hypothesis::check(LINEAR_DISJOINTNESS, CITE_BOURBAKI, false, why)
        }
        Ok(DisjointnessResult::Unknown) => Hypothesis::new(
            LINEAR_DISJOINTNESS,
            CITE_BOURBAKI,
            Status::Unknown,
            format!("no rule decides {gf} against {gh}"),
        ),
        Err(e) => unknown(LINEAR_DISJOINTNESS, CITE_BOURBAKI, &e),
    };
    let proved = hyp.status == Status::Verified;
    trace.push(hyp);
    if proved {
        *char_p = char_p_table(n);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn settings() {
        assert_eq!(check_setting(3).status, Status::Verified);
        assert_eq!(check_setting(5).status, Status::Verified);
        assert_eq!(check_setting(7).status, Status::Failed);
        assert_eq!(check_setting(9).status, Status::Failed);
        assert_eq!(check_setting(1).status, Status::Failed);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(supersingular_constraint(3, 7).unwrap(), (Some(1), false));
        assert_eq!(supersingular_constraint(3, 5).unwrap(), (Some(2), true));
        assert_eq!(supersingular_constraint(5, 11).unwrap(), (Some(1), false));
        assert_eq!(supersingular_constraint(5, 7).unwrap(), (Some(4), true));
        assert_eq!(supersingular_constraint(5, 5).unwrap(), (None, true));
        assert!(supersingular_constraint(4, 7).is_err());
        assert!(supersingular_constraint(5, 9).is_err());
    }

    #[test]
    fn routes() {
        let c = certify(&p(&[-5, 0, 0, 1]), &p(&[22, -15, 0, 1]));
        assert_eq!(c.verdict, Verdict::Inconclusive { reason: super::super::BOTH_J_IN_S.into() });
        let c = certify(&p(&[-1, -1, 0, 1]), &p(&[-1, 0, 0, 1]));
        assert_eq!(c.verdict, Verdict::NotIsogenousOverClosure);
        let c = certify(&p(&[-1, -2, 1, 1]), &p(&[-1, -4, -1, 1]));
        assert_eq!(c.verdict, Verdict::NotIsogenousOverClosure);
        let c = certify(&p(&[-1, -1, 0, 1]), &p(&[-1, -2, 1, 1]));
        assert_eq!(c.verdict, Verdict::HomZero);
        assert_eq!(c.char_p_constraints.len(), 14);
        let c = certify(&p(&[-2, 0, 0, 0, 0, 1]), &p(&[-1, 0, 0, 0, 0, 1]));
        assert_eq!(c.verdict, Verdict::IsogenyImpliesCM { cyclotomic_degree: 5 });
        let c = certify(&p(&[-1, 0, 0, 1]), &p(&[22, -15, 0, 1]));
        assert!(matches!(c.verdict, Verdict::Inconclusive { .. }));
    }

    #[test]
    fn bad_inputs_become_failed_hypotheses() {
        let c = certify(&p(&[-1, 0, 0, 1]), &p(&[-1, 0, 1]));
        assert_eq!(c.hypothesis(EQUAL_DEGREE).unwrap().status, Status::Failed);
        assert!(matches!(c.verdict, Verdict::Inconclusive { .. }));
        let c = certify(&p(&[0, 0, 0, 1]), &p(&[-1, 0, 0, 1]));
        assert_eq!(c.hypothesis(SQUAREFREE_F).unwrap().status, Status::Failed);
        let c = certify(&Polynomial::zero(), &Polynomial::zero());
        assert!(matches!(c.verdict, Verdict::Inconclusive { .. }));
        let c = certify(&p(&[-1, -1, 0, 0, 0, 0, 0, 1]), &p(&[-1, 0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(c.hypothesis(SETTING).unwrap().status, Status::Failed);
    }
}
