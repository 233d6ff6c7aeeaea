//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 numeric precision failure.

use std::collections::HashMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::braidword::{comb, parse_braid};
use crate::chisymbol::{chi, chi_braid, chi_braid_literal, chi_code, SymbolVariant};
use crate::chord3::{classify, Reducer};
use crate::error::Error;
use crate::mzvassoc::{associator, conjecture_table, DEFAULT_EPS};
use crate::ncseries::Word;
use crate::twobridge::{conway_of_fraction, trace_braid, Fraction};
use crate::verify::{bc_words, subword_identity, verify_exhaustive, verify_random, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "braid-conway", version, about = "Conway polynomial of short-circuit closures of pure 3-braids")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Absolute error target for multiple zeta values.
    #[arg(long, global = true, default_value_t = DEFAULT_EPS)]
    pub eps: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Route {
    /// Exact transfer-matrix evaluation.
    Streaming,
    /// Truncated Magnus expansion, reduction, symbol on codes.
    Literal,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Combed form `w · x12^e` of a pure braid.
    Comb { word: String },
    /// Conway coefficients of the closure read off from the symbol of the Magnus expansion.
    Chi {
        word: String,
        #[arg(short = 'N', long = "degree", default_value_t = 6)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Route::Streaming)]
        route: Route,
    },
    /// Conway polynomial of the closure from the two-bridge fraction.
    Conway {
        #[arg(required_unless_present = "fraction")]
        word: Option<String>,
        /// Use a fraction `p/q` directly.
        #[arg(long, conflicts_with = "word")]
        fraction: Option<String>,
        /// Show every intermediate stage.
        #[arg(long)]
        trace: bool,
    },
    /// Descending normal form of a chord word such as `ABC` or `C^3 B C^3`, with codes and symbol values.
    Reduce { word: String },
    /// Compare the symbol with the oracle on many braids.
    Verify {
        /// Check every word of at most this many letters.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Additional random words.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 10)]
        sample_len: usize,
        #[arg(long, default_value_t = 3)]
        max_exp: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check the subword identity on positive B/C words up to this length.
        #[arg(long, default_value_t = 0)]
        subwords: usize,
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Coefficients of the associator in `a`, `b`.
    Associator {
        #[arg(short = 'D', long = "degree", default_value_t = 4)]
        degree: usize,
    },
    /// Symbol of the associator against the multiple zeta sums.
    Conjecture {
        #[arg(short = 'n', long = "n", default_value_t = 5)]
        n: usize,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Precision(_) | Error::ImaginaryResidue { .. } => EXIT_PRECISION,
        _ => EXIT_USAGE,
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("serializable"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    if !(cli.eps > 0.0) {
        return Err(Error::Precision(cli.eps).into());
    }
    match &cli.command {
        Command::Comb { word } => {
            let cf = comb(&parse_braid(word)?);
            if cli.json {
                emit(out, &cf)?;
            } else {
                writeln!(out, "{cf}")?;
            }
        }
        Command::Chi { word, degree, route } => {
            let w = parse_braid(word)?;
            let p = match route {
                Route::Streaming => chi_braid(&w, *degree),
                Route::Literal => chi_braid_literal(&w, *degree),
            };
            if cli.json {
                emit(out, &p)?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        Command::Conway { word, fraction, trace } => match (word, fraction) {
            (_, Some(f)) => {
                let f: Fraction = f.parse()?;
                let p = conway_of_fraction(&f)?;
                if cli.json {
                    emit(out, &json!({ "fraction": f, "conway": p }))?;
                } else {
                    writeln!(out, "{p}")?;
                }
            }
            (Some(w), None) => {
                let t = trace_braid(&parse_braid(w)?)?;
                if cli.json {
                    emit(out, &t)?;
                } else if *trace {
                    writeln!(out, "braid:              {}", t.braid)?;
                    writeln!(out, "combed:             {}", t.combed)?;
                    writeln!(out, "closure exponents:  {}", t.closure)?;
                    writeln!(out, "continued fraction: {}", t.continued_fraction)?;
                    writeln!(out, "fraction:           {}", t.fraction)?;
                    writeln!(out, "alexander:          {}", t.alexander)?;
                    writeln!(out, "conway:             {}", t.conway)?;
                } else {
                    writeln!(out, "{}", t.conway)?;
                }
            }
            (None, None) => unreachable!("clap requires one of them"),
        },
        Command::Reduce { word } => {
            let w: Word = word.parse()?;
            let d = Reducer::new().reduce::<num_bigint::BigInt>(w);
            let rows: Vec<_> = d
                .terms()
                .map(|(diag, c)| {
                    let code = classify(diag);
                    let value = chi_code(&code).expect("classified codes are valid");
                    (diag.to_string(), c.to_string(), code.to_string(), value)
                })
                .collect();
            let total = chi(&d);
            if cli.json {
                let terms: Vec<_> = rows
                    .iter()
                    .map(|(d, c, code, v)| json!({ "diagram": d, "coeff": c, "code": code, "chi": v }))
                    .collect();
                emit(out, &json!({ "terms": terms, "chi": total }))?;
            } else {
                for (d, c, code, v) in &rows {
                    writeln!(out, "{c:>6}  {d:<16} {code:<10} {v}")?;
                }
                writeln!(out, "chi = {total}")?;
            }
        }
        Command::Verify { max_len, samples, sample_len, max_exp, seed, subwords, corrupt } => {
            let variant = if *corrupt { SymbolVariant::CorruptedBlockWeight } else { SymbolVariant::Standard };
            let mut report = verify_exhaustive(*max_len, variant)?;
            if *samples > 0 {
                report = report.merge(verify_random(*samples, *sample_len, *max_exp, *seed, variant)?);
            }
            let (sub_checked, sub_failed) = check_subwords(*subwords)?;
            let ok = report.passed() && sub_failed.is_empty();
            if cli.json {
                emit(
                    out,
                    &json!({
                        "passed": ok,
                        "oracle": report,
                        "subword_identity": { "checked": sub_checked, "failures": sub_failed },
                    }),
                )?;
            } else {
                print_report(out, &report)?;
                if *subwords > 0 {
                    if sub_failed.is_empty() {
                        writeln!(out, "subword identity holds on all {sub_checked} B/C words")?;
                    } else {
                        for w in &sub_failed {
                            writeln!(out, "subword identity fails: {w}")?;
                        }
                    }
                }
            }
            return Ok(if ok { EXIT_OK } else { EXIT_VERIFY });
        }
        Command::Associator { degree } => {
            let phi = associator(*degree, cli.eps)?;
            if cli.json {
                emit(out, &phi)?;
            } else {
                for (w, c, x) in phi.terms() {
                    writeln!(out, "{:<14} {:>+20.12}  {c}", w.to_string(), x)?;
                }
            }
        }
        Command::Conjecture { n } => {
            let rows = conjecture_table(*n, cli.eps)?;
            if cli.json {
                emit(out, &rows)?;
            } else {
                writeln!(out, "{:>3}  {:>16}  {:>16}  {:>10}", "n", "lhs", "rhs", "diff")?;
                for r in &rows {
                    let show = |x: Option<f64>, p: usize| x.map_or("-".to_string(), |v| format!("{v:.p$}"));
                    writeln!(
                        out,
                        "{:>3}  {:>16}  {:>16.12}  {:>10}",
                        r.n,
                        show(r.lhs, 12),
                        r.rhs,
                        r.difference.map_or("-".to_string(), |v| format!("{v:.1e}"))
                    )?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn check_subwords(max_len: usize) -> Result<(usize, Vec<String>), Error> {
    if max_len == 0 {
        return Ok((0, Vec::new()));
    }
    let mut cache = HashMap::new();
    let words = bc_words(max_len);
    let mut failed = Vec::new();
    for &w in &words {
        let (lhs, rhs) = subword_identity(w, &mut cache)?;
        if lhs != rhs {
            failed.push(w.pretty());
        }
    }
    Ok((words.len(), failed))
}

fn print_report(out: &mut dyn Write, r: &VerifyReport) -> std::io::Result<()> {
    if r.passed() {
        return writeln!(out, "all {} words agree", r.checked);
    }
    for m in &r.mismatches {
        writeln!(out, "mismatch: {}  chi = {}  oracle = {}", m.word, m.chi, m.oracle)?;
    }
    writeln!(out, "{} of {} words disagree", r.mismatches.len(), r.checked)
}
