//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use isocert::certifier::{
    certify, check_certificate, decide, supersingular_constraint, Certificate, Status, Verdict,
    BOTH_J_IN_S,
};
use isocert::cli::corpus::{load_corpus, run_corpus, BUNDLED};
use isocert::cli::parse_polynomial;
use isocert::curves::{in_s, j_invariant};
use isocert::exact::integer::DEFAULT_TRIAL_BOUND;
use isocert::exact::{
    discriminant, factor_integer, is_prime_u64, resultant, squarefree_part, Integer, Polynomial,
};
use isocert::factor::factor_over_q;
use isocert::galois::{galois_group, GaloisGroupId};
use isocert::gf2::{heart_module, standard_generators, GroupTag};
use num_rational::BigRational;
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(src: &str) -> Polynomial {
    parse_polynomial(src).unwrap()
}

const C5_QUINTIC: &str = "x^5 - 110*x^3 - 55*x^2 + 2310*x + 979";

fn criterion_1() -> Outcome {
    let d = discriminant(&p("x^5 - x - 1")).map_err(|e| e.to_string())?;
    ensure!(d == int(2869), "disc(x^5-x-1) = {d}");
    let d_int = d.to_integer();
    ensure!(squarefree_part(&d_int).unwrap() == Integer::from(2869), "squarefree part of 2869");
    let fs = factor_integer(&d_int, DEFAULT_TRIAL_BOUND).unwrap();
    ensure!(
        fs == vec![(Integer::from(19), 1), (Integer::from(151), 1)],
        "2869 factors as {fs:?}"
    );
    let d2 = discriminant(&p("x^5 + 15*x + 12")).unwrap();
    ensure!(d2 == int(259_200_000), "disc(x^5+15x+12) = {d2}");
    let fs2 = factor_integer(&d2.to_integer(), DEFAULT_TRIAL_BOUND).unwrap();
    let want: Vec<(Integer, u32)> = vec![(2.into(), 10), (3.into(), 4), (5.into(), 5)];
    ensure!(fs2 == want, "259200000 factors as {fs2:?}");
    ensure!(squarefree_part(&d2.to_integer()).unwrap() == Integer::from(5), "squarefree part 5");
    for a in -20..=20 {
        let want = (a * a + 3 * a + 9) * (a * a + 3 * a + 9);
        let got = discriminant(&shanks(a)).unwrap();
        ensure!(got == int(want), "disc(h_{a}) = {got}, want {want}");
    }
    Ok("2869 = 19*151; 259200000 = 2^10*3^4*5^5; 41 Shanks discriminants".into())
}

fn criterion_2() -> Outcome {
    let fl = factor_over_q(&p("x^3 - 15*x + 22")).unwrap();
    ensure!(
        fl.factors == vec![(p("x - 2"), 1), (p("x^2 + 2*x - 11"), 1)] && fl.unit == int(1),
        "x^3-15x+22 -> {:?}",
        fl.factors
    );
    for src in ["x^5 - x - 1", "x^5 - 2"] {
        ensure!(factor_over_q(&p(src)).unwrap().is_irreducible(), "{src} should be irreducible");
    }
    let mut rng = rng(2);
    for i in 0..500 {
        let deg = rng.gen_range(1..=8);
        let f = Polynomial::from_ints(&random_int_coeffs(&mut rng, deg, 50));
        let fl = factor_over_q(&f).map_err(|e| format!("case {i}: {e}"))?;
        ensure!(fl.expand() == f, "case {i}: {f} does not reconstruct");
        ensure!(fl.factors.iter().all(|(g, _)| g.is_monic()), "case {i}: non-monic factor");
    }
    let mut checked = 0;
    for i in 0..400 {
        let deg = rng.gen_range(1..=4);
        let c = random_int_coeffs(&mut rng, deg, 8);
        let f = Polynomial::from_ints(&c);
        let got = factor_over_q(&f).unwrap().degrees();
        let mut got = got;
        got.sort_unstable();
        let want = brute_force_degrees(&c);
        ensure!(got == want, "case {i}: {f}: factorizer {got:?}, brute force {want:?}");
        checked += 1;
    }
    Ok(format!("Example factorization exact; 500 reconstructions; {checked} brute-force matches"))
}

fn criterion_3() -> Outcome {
    use GaloisGroupId::*;
    let mut cases = vec![
        ("x^3 - 5".to_string(), S3),
        ("x^3 - x - 1".to_string(), S3),
    ];
    for a in [-1, 1, 2, 4] {
        cases.push((shanks(a).to_string(), C3));
    }
    cases.push(("x^5 - x - 1".into(), S5));
    cases.push(("x^5 + 15*x + 12".into(), F20));
    cases.push((C5_QUINTIC.into(), C5));
    let mut slowest = Duration::ZERO;
    for (src, want) in cases {
        let start = Instant::now();
        let got = galois_group(&p(&src)).map_err(|e| format!("{src}: {e}"))?;
        let took = start.elapsed();
        ensure!(got == want, "{src}: got {got}, want {want}");
        if want.degree() == Some(5) {
            ensure!(took < Duration::from_secs(60), "{src} took {took:?}");
            slowest = slowest.max(took);
        }
    }
    Ok(format!("9 identifications; slowest quintic {slowest:.2?}"))
}

fn criterion_4() -> Outcome {
    let j1 = j_invariant(&p("x^3 - 5")).unwrap();
    let j2 = j_invariant(&p("x^3 - 15*x + 22")).unwrap();
    ensure!(j1 == int(0) && in_s(&j1), "j(x^3-5) = {j1}");
    ensure!(j2 == int(54000) && in_s(&j2), "j(x^3-15x+22) = {j2}");
    for a in [-1, 1, 2, 4, 7] {
        let j = j_invariant(&shanks(a)).unwrap();
        ensure!(!in_s(&j), "j(h_{a}) = {j} lies in S");
    }
    Ok("j = 0, 54000 in S; Shanks j outside S".into())
}

fn module_report(tag: &str, n: usize) -> Result<(bool, usize), String> {
    let tag: GroupTag = tag.parse().map_err(|e| format!("{e}"))?;
    let gens = standard_generators(tag, n).map_err(|e| format!("{e}"))?;
    let r = heart_module(n, &gens)
        .and_then(|m| m.analyze())
        .map_err(|e| format!("{e}"))?;
    Ok((r.simple, r.endomorphism_dim))
}

fn criterion_5() -> Outcome {
    let table: [(&str, usize, Option<bool>, Option<usize>); 9] = [
        ("S3", 3, Some(true), Some(1)),
        ("C5", 5, Some(true), Some(4)),
        ("D5", 5, Some(true), None),
        ("F20", 5, Some(true), Some(1)),
        ("A5", 5, Some(true), Some(1)),
        ("S5", 5, Some(true), Some(1)),
        ("C7", 7, Some(false), None),
        ("C11", 11, Some(true), None),
        ("C13", 13, Some(true), None),
    ];
    let mut d5_end = 0;
    for (tag, n, simple, end) in table {
        let (s, e) = module_report(tag, n)?;
        if let Some(want) = simple {
            ensure!(s == want, "({n},{tag}) simple = {s}");
        }
        if let Some(want) = end {
            ensure!(e == want, "({n},{tag}) end dim = {e}");
        }
        if tag == "D5" {
            d5_end = e;
        }
    }
    let mut oracle_cases = 0;
    for (tag, n) in [("S3", 3), ("C3", 3), ("C5", 5), ("D5", 5), ("F20", 5), ("A5", 5), ("S5", 5), ("C7", 7)] {
        let gens = standard_generators(tag.parse().unwrap(), n).unwrap();
        let images: Vec<Vec<usize>> = gens.iter().map(|g| g.images()).collect();
        let (s, _) = module_report(tag, n)?;
        let oracle = simple_by_all_subspaces(n, &images);
        ensure!(s == oracle, "({n},{tag}): spin says {s}, all-subspace oracle {oracle}");
        oracle_cases += 1;
    }
    Ok(format!("table matches (D5 end dim {d5_end}); {oracle_cases} oracle agreements"))
}

fn all_verified(c: &Certificate) -> bool {
    c.trace.iter().all(|h| h.status == Status::Verified)
}

fn criterion_6() -> Outcome {
    let sh = |a| shanks(a).to_string();
    let cases: Vec<(String, String, &str)> = vec![
        ("x^5 - x - 1".into(), C5_QUINTIC.into(), "HomZero"),
        ("x^5 + 15*x + 12".into(), C5_QUINTIC.into(), "HomZero"),
        ("x^5 - x - 1".into(), "x^5 + 15*x + 12".into(), "HomZero"),
        ("x^3 - x - 1".into(), sh(-1), "HomZero"),
        (sh(-1), sh(1), "NotIsogenousOverClosure"),
        ("x^3 - 5".into(), "x^3 - 15*x + 22".into(), "Inconclusive"),
        ("x^5 - 2".into(), "x^5 - 1".into(), "IsogenyImpliesCM"),
    ];
    for (f, h, want) in &cases {
        let c = certify(&p(f), &p(h));
        ensure!(c.verdict.tag() == *want, "({f}, {h}): {}", c.verdict);
        if *want == "Inconclusive" {
            ensure!(
                c.verdict == Verdict::Inconclusive { reason: BOTH_J_IN_S.into() },
                "({f}, {h}) should stop at case (ii): {}",
                c.verdict
            );
        } else {
            ensure!(all_verified(&c), "({f}, {h}): trace has unverified hypotheses");
        }
        ensure!(!c.verdict.is_non_isogeny() || *want != "IsogenyImpliesCM", "unsound claim");
        let back = Certificate::from_json(&c.to_json()).map_err(|e| e.to_string())?;
        check_certificate(&back).map_err(|e| format!("({f}, {h}): {e}"))?;
    }
    let corpus = run_corpus(&load_corpus(BUNDLED).unwrap()).map_err(|e| e.to_string())?;
    let failed: Vec<_> = corpus.iter().filter(|o| !o.passed).map(|o| o.case.name.clone()).collect();
    ensure!(failed.is_empty(), "corpus mismatches: {failed:?}");
    Ok(format!("{} named pairs; bundled corpus {}/{} pass", cases.len(), corpus.len(), corpus.len()))
}

fn criterion_7() -> Outcome {
    let mut rows = 0;
    for q in (2..100).filter(|&q| is_prime_u64(q) && q != 3) {
        let (_, allowed) = supersingular_constraint(3, q).unwrap();
        ensure!(allowed == (q % 3 != 1), "p = {q}: allowed = {allowed}");
        rows += 1;
    }
    ensure!(supersingular_constraint(5, 11).unwrap() == (Some(1), false), "(5, 11)");
    ensure!(supersingular_constraint(5, 7).unwrap() == (Some(4), true), "(5, 7)");
    Ok(format!("{rows} primes below 100 for n = 3; (5,11) and (5,7) exact"))
}

fn suite_sylvester() -> Outcome {
    let mut rng = rng(81);
    for i in 0..200 {
        let (m, n) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let f = random_int_coeffs(&mut rng, m, 20);
        let g = random_int_coeffs(&mut rng, n, 20);
        let got = resultant(&Polynomial::from_ints(&f), &Polynomial::from_ints(&g)).unwrap();
        let want = BigRational::from_integer(sylvester_resultant(&f, &g));
        ensure!(got == want, "case {i}: Res({f:?}, {g:?}) = {got}, Sylvester {want}");
    }
    Ok("200".into())
}

fn suite_disc_multiplicativity() -> Outcome {
    let mut rng = rng(82);
    for i in 0..100 {
        let (df, dg) = (rng.gen_range(2..=4), rng.gen_range(2..=4));
        let f = Polynomial::from_ints(&random_int_coeffs(&mut rng, df, 9));
        let g = Polynomial::from_ints(&random_int_coeffs(&mut rng, dg, 9));
        let lhs = discriminant(&(&f * &g)).unwrap();
        let r = resultant(&f, &g).unwrap();
        let rhs = discriminant(&f).unwrap() * discriminant(&g).unwrap() * &r * &r;
        ensure!(lhs == rhs, "case {i}: disc({f} * {g})");
    }
    Ok("100".into())
}

fn suite_j_invariance() -> Outcome {
    let mut rng = rng(83);
    let mut done = 0;
    while done < 100 {
        let (a, b, u) = (random_rational(&mut rng, 9), random_rational(&mut rng, 9), random_rational(&mut rng, 9));
        let f = Polynomial::from_coeffs(vec![b.clone(), a.clone(), int(0), int(1)]);
        if u == int(0) || j_invariant(&f).is_err() {
            continue;
        }
        let u2 = &u * &u;
        let g = Polynomial::from_coeffs(vec![b * &u2 * &u2 * &u2, a * &u2 * &u2, int(0), int(1)]);
        ensure!(j_invariant(&f).unwrap() == j_invariant(&g).unwrap(), "scaling {f} by {u}");
        done += 1;
    }
    let mut done = 0;
    while done < 100 {
        let f = random_rational_poly(&mut rng, 3, 9);
        let Ok(j) = j_invariant(&f) else { continue };
        let c = random_rational(&mut rng, 9);
        ensure!(j_invariant(&f.shift(&c)).unwrap() == j, "translating {f} by {c}");
        done += 1;
    }
    Ok("100 + 100".into())
}

fn suite_parser_round_trip() -> Outcome {
    let mut rng = rng(84);
    for i in 0..200 {
        let deg = rng.gen_range(0..=7);
        let f = random_rational_poly(&mut rng, deg, 30);
        let text = f.to_string();
        let back = parse_polynomial(&text).map_err(|e| format!("case {i}: {text:?}: {e}"))?;
        ensure!(back == f, "case {i}: {text:?} reparsed as {back}");
    }
    Ok("200".into())
}

fn suite_fault_injection() -> Outcome {
    let outcomes = run_corpus(&load_corpus(BUNDLED).unwrap()).map_err(|e| e.to_string())?;
    let mut flips = 0;
    for o in &outcomes {
        let c = &o.certificate;
        for i in 0..c.trace.len() {
            for status in [Status::Failed, Status::Unknown] {
                let mut trace = c.trace.clone();
                trace[i].status = status;
                let v = decide(c.n, &trace);
                ensure!(
                    matches!(v, Verdict::Inconclusive { .. }),
                    "{}: flipping {} to {status} still gives {v}",
                    o.case.name,
                    trace[i].name
                );
                flips += 1;
            }
        }
    }
    Ok(format!("{flips} flips over {} cases", outcomes.len()))
}

fn criterion_8() -> Outcome {
    let suites: [(&str, fn() -> Outcome); 5] = [
        ("resultant-Sylvester", suite_sylvester),
        ("disc multiplicativity", suite_disc_multiplicativity),
        ("j invariance", suite_j_invariance),
        ("parser round trip", suite_parser_round_trip),
        ("fault injection", suite_fault_injection),
    ];
    let mut parts = Vec::new();
    for (name, suite) in suites {
        let detail = suite().map_err(|e| format!("{name}: {e}"))?;
        parts.push(format!("{name} {detail}"));
    }
    Ok(parts.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("exact discriminants", criterion_1),
        ("factorization", criterion_2),
        ("Galois identification", criterion_3),
        ("j-invariants", criterion_4),
        ("F2 module table", criterion_5),
        ("certifier corpus", criterion_6),
        ("parity table", criterion_7),
        ("property suites", criterion_8),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{took:.2?}]", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
