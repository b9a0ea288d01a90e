//! j-invariants of y^2 = f(x) for cubics, and the exceptional set S.

use isocert::cli::parse_polynomial;
use isocert::curves::{in_s, short_weierstrass, S};
use isocert::exact::format_rational;

fn main() -> isocert::Result<()> {
    println!("S = {S:?}");
    let inputs = [
        "x^3 - 5", "x^3 - 15x + 22", "x^3 - x", "x^3 - x - 1",
        "x^3 + x^2 - 2x - 1", "x^3 - x^2 - 4x - 1", "2x^3 + 3x^2 - 1/2",
    ];
    for src in inputs {
        let f = parse_polynomial(src)?;
        let w = short_weierstrass(&f)?;
        let j = w.j_invariant();
        println!(
            "{f:<24} y^2 = x^3 + ({})x + ({})   j = {:<16} in S: {}",
            format_rational(&w.a), format_rational(&w.b), format_rational(&j), in_s(&j)
        );
    }
    Ok(())
}
