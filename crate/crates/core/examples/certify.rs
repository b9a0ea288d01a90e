//! Certify pairs of polynomials and print the verdict with its trace.
//!
//! ```text
//! cargo run --example certify -- "x^5 - x - 1" "x^5 - 2"
//! ```

use isocert::certifier::{certify, check_certificate, Certificate};
use isocert::cli::parse_polynomial;

fn main() -> isocert::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [f, h] => vec![(f.clone(), h.clone())],
        _ => [
            ("x^5 - x - 1", "x^5 + 15x + 12"),
            ("x^3 - x - 1", "x^3 + x^2 - 2x - 1"),
            ("x^3 + x^2 - 2x - 1", "x^3 - x^2 - 4x - 1"),
            ("x^5 - 2", "x^5 - 1"),
            ("x^3 - 5", "x^3 - 15x + 22"),
        ]
        .iter()
        .map(|(f, h)| (f.to_string(), h.to_string()))
        .collect(),
    };
    for (f, h) in pairs {
        let cert = certify(&parse_polynomial(&f)?, &parse_polynomial(&h)?);
        println!("f = {}\nh = {}\nverdict: {}", cert.f, cert.h, cert.verdict);
        for hyp in &cert.trace {
            println!("  [{}] {}: {}", hyp.status, hyp.name, hyp.detail);
        }
        let back = Certificate::from_json(&cert.to_json())?;
        check_certificate(&back)?;
        println!("  json round trip re-checks\n");
    }
    Ok(())
}
