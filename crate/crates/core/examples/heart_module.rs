//! The F2 heart of the permutation module for the standard transitive groups.

use isocert::gf2::{generate_group, heart_module, standard_generators, GroupTag};

fn main() -> isocert::Result<()> {
    let cases = [
        ("S3", 3), ("C3", 3), ("C5", 5), ("D5", 5), ("F20", 5), ("A5", 5), ("S5", 5),
        ("C7", 7), ("C11", 11), ("C13", 13), ("C17", 17), ("C23", 23),
    ];
    println!("{:<5} {:>3} {:>6} {:>7} {:>4} {:>9}", "group", "n", "order", "simple", "end", "abs.simp");
    for (tag, n) in cases {
        let tag: GroupTag = tag.parse()?;
        let gens = standard_generators(tag, n)?;
        let order = if n <= 11 { generate_group(n, &gens).len().to_string() } else { "-".into() };
        let r = heart_module(n, &gens)?.analyze()?;
        println!(
            "{:<5} {:>3} {:>6} {:>7} {:>4} {:>9}",
            tag.to_string(), n, order, r.simple, r.endomorphism_dim, r.absolutely_simple
        );
    }

    let c5 = heart_module(5, &standard_generators(GroupTag::Cyclic(5), 5)?)?;
    println!("\nC5 acting on the heart:\n{}", c5.generators()[0]);
    Ok(())
}
