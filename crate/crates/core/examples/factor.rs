//! Factor a few integer polynomials over the rationals.
//!
//! ```text
//! cargo run --example factor -- "x^6 - 1"
//! ```

use isocert::cli::parse_polynomial;
use isocert::factor::factor_over_q;

fn main() -> isocert::Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["x^3 - 15x + 22", "x^5 - x - 1", "x^8 - 1", "6x^4 - 5x^2 + 1", "(x^2 - 2)^3 * (x + 1)"]
            .map(String::from)
            .to_vec();
    }
    for src in &inputs {
        let f = parse_polynomial(src)?;
        let fl = factor_over_q(&f)?;
        print!("{f} = {}", isocert::exact::format_rational(&fl.unit));
        for (g, m) in &fl.factors {
            match m {
                1 => print!(" ({g})"),
                _ => print!(" ({g})^{m}"),
            }
        }
        println!();
    }
    Ok(())
}
