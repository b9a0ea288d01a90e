//! Galois groups of cubics and quintics, with the mod-p cycle-type scan.

use isocert::cli::parse_polynomial;
use isocert::galois::{cycle_type_prefilter, cycle_types, galois_group, group_properties};

fn main() -> isocert::Result<()> {
    let inputs = [
        "x^3 - 5",
        "x^3 + x^2 - 2x - 1",
        "x^5 - x - 1",
        "x^5 + 15x + 12",
        "x^5 + 20x + 16",
        "x^5 - 2",
        "x^5 - 5x + 12",
        "x^5 - 110x^3 - 55x^2 + 2310x + 979",
    ];
    for src in inputs {
        let f = parse_polynomial(src)?;
        let g = galois_group(&f)?;
        let props = group_properties(g)?;
        let seen = cycle_type_prefilter(&f, 200)?;
        let allowed = cycle_types(g)?;
        println!(
            "{f:<40} {g:<4} order {:<3} doubly transitive {:<5} patterns seen {}/{}",
            props.order,
            props.doubly_transitive,
            seen.len(),
            allowed.len()
        );
    }
    Ok(())
}
