//! Command-line front end.
//!
//! [`run`] takes the argument list and two output streams and returns the
//! process exit code: 0 on success (an `Inconclusive` verdict included), 1 on
//! usage, parse or malformed-corpus errors, 2 on capability errors, 3 when a
//! corpus case does not reproduce its expected verdict.

pub mod corpus;
mod parser;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_traits::Signed;
use serde_json::{json, Value};

pub use parser::parse_polynomial;

use crate::certifier::{certify, Certificate};
use crate::curves::{in_s, short_weierstrass};
use crate::error::{Error, Result};
use crate::exact::integer::DEFAULT_TRIAL_BOUND;
use crate::exact::{discriminant, factor_integer, format_rational, squarefree_part, Integer, Polynomial};
use crate::factor::factor_over_q;
use crate::galois::{cycle_type_prefilter, cycle_types, galois_group, group_properties, GaloisGroupId};
use crate::gf2::{heart_module, standard_generators, GroupTag};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAPABILITY: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "isocert", version, about = "Exact non-isogeny certificates for hyperelliptic jacobians")]
struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest prime for the advisory mod-p cycle-type scan.
    #[arg(long, global = true, default_value_t = 200, value_name = "B")]
    prime_bound: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor a polynomial over the rationals.
    Factor { poly: String },
    /// Discriminant, its squarefree part and factorization.
    Disc { poly: String },
    /// Galois group of a cubic or quintic.
    Galois { poly: String },
    /// j-invariant of y^2 = f(x) for a cubic f.
    J { poly: String },
    /// Simplicity of the F2 heart module of a permutation group.
    Module {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
    },
    /// Certify a pair of polynomials.
    Certify { f: String, h: String },
    /// Run the regression corpus.
    Corpus {
        /// Corpus file; the bundled corpus when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

struct Ctx<'a> {
    json: bool,
    prime_bound: u64,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, doc: &Value, text: &str) -> Result<()> {
        let rendered = if self.json {
            serde_json::to_string_pretty(doc).expect("json values serialize")
        } else {
            text.trim_end().to_string()
        };
        writeln!(self.out, "{rendered}").map_err(io_error)
    }

    fn warn(&mut self, message: &str) {
        let _ = writeln!(self.err, "warning: {message}");
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::invalid(format!("output failed: {e}"))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capability(_) | Error::Unfactored(_) => EXIT_CAPABILITY,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, prime_bound: cli.prime_bound, out, err };
    let result = match &cli.command {
        Command::Factor { poly } => cmd_factor(&mut ctx, poly),
        Command::Disc { poly } => cmd_disc(&mut ctx, poly),
        Command::Galois { poly } => cmd_galois(&mut ctx, poly),
        Command::J { poly } => cmd_j(&mut ctx, poly),
        Command::Module { group, n } => cmd_module(&mut ctx, group, *n),
        Command::Certify { f, h } => cmd_certify(&mut ctx, f, h),
        Command::Corpus { file } => cmd_corpus(&mut ctx, file.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn parse_arg(src: &str) -> Result<Polynomial> {
    parse_polynomial(src).map_err(|e| match e {
        Error::Parse { offset, message } => {
            Error::Parse { offset, message: format!("in {src:?}: {message}") }
        }
        e => e,
    })
}

fn cmd_factor(ctx: &mut Ctx, src: &str) -> Result<i32> {
    let f = parse_arg(src)?;
    let fl = factor_over_q(&f)?;
    let mut text = format_rational(&fl.unit);
    for (g, m) in &fl.factors {
        text += &format!(" * ({g})");
        if *m > 1 {
            text += &format!("^{m}");
        }
    }
    let doc = json!({
        "input": f.to_string(),
        "unit": format_rational(&fl.unit),
        "factors": fl.factors.iter().map(|(g, m)| json!({
            "factor": g.to_string(),
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    });
    ctx.emit(&doc, &text)?;
    Ok(EXIT_OK)
}

fn factorization_text(fs: &[(Integer, u32)]) -> String {
    if fs.is_empty() {
        return "1".into();
    }
    fs.iter()
        .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn cmd_disc(ctx: &mut Ctx, src: &str) -> Result<i32> {
    let f = parse_arg(src)?;
    let d = discriminant(&f)?;
    let sqf = squarefree_part(&(d.numer() * d.denom()))?;
    let num_f = factor_integer(&d.numer().abs(), DEFAULT_TRIAL_BOUND)?;
    let den_f = factor_integer(d.denom(), DEFAULT_TRIAL_BOUND)?;
    let sign = if d.is_negative() { "-" } else { "" };
    let mut fact = format!("{sign}{}", factorization_text(&num_f));
    if !den_f.is_empty() {
        fact += &format!(" / ({})", factorization_text(&den_f));
    }
    let text = format!(
        "disc = {}\nsquarefree part = {sqf}\nfactorization = {fact}",
        format_rational(&d)
    );
    let doc = json!({
        "input": f.to_string(),
        "discriminant": format_rational(&d),
        "squarefree_part": sqf.to_string(),
        "factorization": fact,
    });
    ctx.emit(&doc, &text)?;
    Ok(EXIT_OK)
}

fn cmd_galois(ctx: &mut Ctx, src: &str) -> Result<i32> {
    let f = parse_arg(src)?;
    let g = galois_group(&f)?;
    let mut doc = json!({ "input": f.to_string(), "group": g.to_string() });
    if g != GaloisGroupId::Reducible {
        let props = group_properties(g)?;
        doc["properties"] = serde_json::to_value(props).expect("plain struct");
        let seen = cycle_type_prefilter(&f, ctx.prime_bound)?;
        let allowed = cycle_types(g)?;
        let stray: Vec<_> = seen.difference(&allowed).cloned().collect();
        if !stray.is_empty() {
            ctx.warn(&format!(
                "mod-p factorization patterns {stray:?} are not cycle types of {g}"
            ));
        }
        doc["prefilter"] = json!({
            "prime_bound": ctx.prime_bound,
            "patterns": seen.iter().collect::<Vec<_>>(),
            "consistent": stray.is_empty(),
        });
    }
    ctx.emit(&doc, &g.to_string())?;
    Ok(EXIT_OK)
}

fn cmd_j(ctx: &mut Ctx, src: &str) -> Result<i32> {
    let f = parse_arg(src)?;
    let w = short_weierstrass(&f)?;
    let j = w.j_invariant();
    let text = format!(
        "y^2 = x^3 + ({})*x + ({})\nj = {}\nin S: {}",
        format_rational(&w.a),
        format_rational(&w.b),
        format_rational(&j),
        in_s(&j)
    );
    let doc = json!({
        "input": f.to_string(),
        "a": format_rational(&w.a),
        "b": format_rational(&w.b),
        "j": format_rational(&j),
        "in_S": in_s(&j),
    });
    ctx.emit(&doc, &text)?;
    Ok(EXIT_OK)
}

fn cmd_module(ctx: &mut Ctx, group: &str, n: usize) -> Result<i32> {
    let tag: GroupTag = group.parse()?;
    let gens = standard_generators(tag, n)?;
    let report = heart_module(n, &gens)?.analyze()?;
    let text = format!(
        "group {tag} on {n} points, heart dimension {}\nsimple = {}\nendomorphism_dim = {}\nabsolutely_simple = {}",
        n - 1,
        report.simple,
        report.endomorphism_dim,
        report.absolutely_simple
    );
    let doc = json!({
        "group": tag.to_string(),
        "n": n,
        "generators": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "report": report,
    });
    ctx.emit(&doc, &text)?;
    Ok(EXIT_OK)
}

fn certificate_text(c: &Certificate) -> String {
    let mut text = format!("f = {}\nh = {}\nverdict: {}\n", c.f, c.h, c.verdict);
    for h in &c.trace {
        text += &format!("  [{}] {} ({}): {}\n", h.status, h.name, h.citation, h.detail);
    }
    if !c.char_p_constraints.is_empty() {
        text += "supersingular branch by characteristic (p: order of p mod n, allowed):\n";
        for row in &c.char_p_constraints {
            let fp = row.f_p.map_or("-".to_string(), |v| v.to_string());
            text += &format!("  p = {}: {fp}, {}\n", row.p, row.allowed);
        }
    }
    text
}

fn cmd_certify(ctx: &mut Ctx, f: &str, h: &str) -> Result<i32> {
    let (f, h) = (parse_arg(f)?, parse_arg(h)?);
    let cert = certify(&f, &h);
    let doc: Value = serde_json::from_str(&cert.to_json()).expect("certificate json");
    ctx.emit(&doc, &certificate_text(&cert))?;
    Ok(EXIT_OK)
}

fn cmd_corpus(ctx: &mut Ctx, file: Option<&std::path::Path>) -> Result<i32> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?,
        None => corpus::BUNDLED.to_string(),
    };
    let cases = corpus::load_corpus(&text)?;
    if cases.is_empty() {
        ctx.warn("the corpus has no cases");
    }
    let outcomes = corpus::run_corpus(&cases)?;
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.case.name.as_str())
        .collect();
    let mut lines = String::new();
    for o in &outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        lines += &format!(
            "{mark} {}: {} (expected {}) [{}]\n",
            o.case.name, o.certificate.verdict, o.case.expected, o.case.citation
        );
    }
    lines += &format!("{} of {} cases pass\n", outcomes.len() - failed.len(), outcomes.len());
    let doc = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "cases": outcomes.iter().map(|o| json!({
            "name": o.case.name,
            "expected": o.case.expected,
            "verdict": o.certificate.verdict.tag(),
            "passed": o.passed,
            "citation": o.case.citation,
        })).collect::<Vec<_>>(),
        "passed": outcomes.len() - failed.len(),
        "failed": failed,
    });
    ctx.emit(&doc, &lines)?;
    if failed.is_empty() {
        Ok(EXIT_OK)
    } else {
        for name in &failed {
            let _ = writeln!(ctx.err, "mismatch: {name}");
        }
        Ok(EXIT_MISMATCH)
    }
}
