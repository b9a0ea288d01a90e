//! Factoring over a stem field Q[t]/(m) with the norm method.

use isocert::cli::parse_polynomial;
use isocert::number_field::{factor_over_stem_field, fields_isomorphic, stem_factor_pattern};

fn main() -> isocert::Result<()> {
    let m = parse_polynomial("x^3 - 2")?;
    for (g, e) in factor_over_stem_field(&m, &m)? {
        println!("over Q(2^(1/3)): ({g})^{e}");
    }

    let shanks = parse_polynomial("x^3 + x^2 - 2x - 1")?;
    println!("Shanks cubic splits as {:?}", stem_factor_pattern(&shanks)?);
    for src in ["x^5 - x - 1", "x^5 + 15x + 12", "x^5 - 2", "x^5 - 5x + 12"] {
        let f = parse_polynomial(src)?;
        println!("{f}: {:?}", stem_factor_pattern(&f)?);
    }

    let a = parse_polynomial("x^3 - x^2 - 4x - 1")?;
    println!("Q[x]/({shanks}) = Q[x]/({a})? {}", fields_isomorphic(&shanks, &a)?);
    let b = parse_polynomial("x^2 - 2")?;
    let c = parse_polynomial("x^2 - 8")?;
    println!("Q[x]/({b}) = Q[x]/({c})? {}", fields_isomorphic(&b, &c)?);
    Ok(())
}
