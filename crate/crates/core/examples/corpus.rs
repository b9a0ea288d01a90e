//! Run the bundled regression corpus and report each case.

use isocert::cli::corpus::{load_corpus, run_corpus, BUNDLED};

fn main() -> isocert::Result<()> {
    let outcomes = run_corpus(&load_corpus(BUNDLED)?)?;
    for o in &outcomes {
        let mark = if o.passed { "ok  " } else { "FAIL" };
        println!("{mark} {:<48} {}", o.case.name, o.certificate.verdict);
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{} reproduce", outcomes.len());
    Ok(())
}
