//! Discriminants, resultants and squarefree parts.

use isocert::cli::parse_polynomial;
use isocert::exact::integer::DEFAULT_TRIAL_BOUND;
use isocert::exact::{discriminant, factor_integer, resultant, squarefree_part};

fn main() -> isocert::Result<()> {
    for src in ["x^5 - x - 1", "x^5 + 15x + 12", "x^3 + x^2 - 2x - 1", "x^2 - 1/3x + 1/7"] {
        let f = parse_polynomial(src)?;
        let d = discriminant(&f)?;
        let n = d.numer() * d.denom();
        println!(
            "disc({f}) = {}   squarefree part {}   factors {:?}",
            isocert::exact::format_rational(&d),
            squarefree_part(&n)?,
            factor_integer(&n, DEFAULT_TRIAL_BOUND)?
        );
    }

    let f = parse_polynomial("x^3 - 2")?;
    let g = parse_polynomial("x^2 + x + 1")?;
    println!("Res({f}, {g}) = {}", resultant(&f, &g)?);
    Ok(())
}
