use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use leavitt_core::inner::ObstructionReport;
use leavitt_core::{
    ad, classify_by_obstruction, find_inner_witness, multiply, obstruction_coefficients, oracle, reduce_word,
    AlgebraConfig, DerivationSpec, Element, Generator, Residual, ViolationReport, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::deriv_file::load_derivation;
use crate::syntax::parse_element;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REPORT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "leavitt", version, about = "Normal forms and derivations of the Leavitt path algebra W(l)")]
pub struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of an expression.
    Normalize {
        #[arg(long)]
        loops: u32,
        expr: String,
    },
    /// Multiply two expressions.
    Mul {
        #[arg(long)]
        loops: u32,
        a: String,
        b: String,
    },
    /// Apply a derivation to an expression.
    Derive {
        #[arg(long)]
        deriv: PathBuf,
        /// Skip the relation check (the result may depend on spelling).
        #[arg(long)]
        unchecked: bool,
        expr: String,
    },
    /// Print the inner derivation ad(lambda) on every generator.
    Ad {
        #[arg(long)]
        loops: u32,
        lambda: String,
    },
    /// Check the defining relations for a derivation file.
    Check {
        #[arg(long)]
        deriv: PathBuf,
    },
    /// Check the coefficient equations for a derivation file.
    GenthCheck {
        #[arg(long)]
        deriv: PathBuf,
    },
    /// List the e1 p e1 obstruction coefficients.
    Obstructions {
        #[arg(long)]
        deriv: PathBuf,
        /// Exclude the word e1 e1 (empty p).
        #[arg(long)]
        strict_omega: bool,
    },
    /// Search for lambda with ad(lambda) = D among monomials of bounded length.
    Witness {
        #[arg(long)]
        deriv: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Compare the normal form with randomized rewriting and check overlaps.
    Selfcheck {
        #[arg(long)]
        loops: u32,
        #[arg(long, default_value_t = 1000)]
        words: usize,
        #[arg(long, default_value_t = 8)]
        max_word_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rewriting orders tried per word.
        #[arg(long, default_value_t = 5)]
        seeds: u64,
    },
}

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            exit_code: EXIT_OK,
        }
    }

    fn with_code(stdout: String, exit_code: i32) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            exit_code,
        }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            exit_code: EXIT_USAGE,
        }
    }
}

/// `[[word, numerator, denominator], ...]` in canonical order.
pub fn element_json(x: &Element) -> Value {
    Value::Array(
        x.iter()
            .map(|(m, c)| json!([m.to_string(), c.numer().to_string(), c.denom().to_string()]))
            .collect(),
    )
}

fn generator_label(g: Generator) -> String {
    format!("D({g})")
}

fn report_json(report: &ViolationReport) -> Value {
    Value::Array(
        report
            .iter()
            .map(|v| {
                let residual = match &v.residual {
                    Residual::Element(e) => json!({ "element": element_json(e) }),
                    Residual::Scalar(c) => json!({ "scalar": [c.numer().to_string(), c.denom().to_string()] }),
                };
                json!({ "equation": v.equation.to_string(), "residual": residual })
            })
            .collect(),
    )
}

fn derivation_values(d: &DerivationSpec) -> Vec<(Generator, Element)> {
    d.config()
        .generators()
        .into_iter()
        .map(|g| (g, d.value(g).into_owned()))
        .collect()
}

fn render(json_mode: bool, text: String, value: Value) -> String {
    if json_mode {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("json values serialize"))
    } else {
        text
    }
}

fn report_outcome(json_mode: bool, report: &ViolationReport) -> Outcome {
    let stdout = render(json_mode, report.to_string(), json!({ "violations": report_json(report) }));
    let code = if report.is_empty() { EXIT_OK } else { EXIT_REPORT };
    Outcome::with_code(stdout, code)
}

fn obstruction_json(report: &ObstructionReport) -> Value {
    Value::Array(
        report
            .entries
            .iter()
            .map(|e| {
                json!({
                    "family": e.family.to_string(),
                    "word": e.word,
                    "value": [e.value.numer().to_string(), e.value.denom().to_string()],
                })
            })
            .collect(),
    )
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome::error(err),
        }
    };
}

pub fn run(cli: Cli) -> Outcome {
    let json_mode = cli.json;
    match cli.command {
        Command::Normalize { loops, expr } => {
            let cfg = tri!(AlgebraConfig::new(loops));
            let x = tri!(parse_element(&expr, &cfg));
            Outcome::ok(render(json_mode, format!("{x}\n"), json!({ "terms": element_json(&x) })))
        }
        Command::Mul { loops, a, b } => {
            let cfg = tri!(AlgebraConfig::new(loops));
            let a = tri!(parse_element(&a, &cfg));
            let b = tri!(parse_element(&b, &cfg));
            let p = tri!(multiply(&cfg, &a, &b));
            Outcome::ok(render(json_mode, format!("{p}\n"), json!({ "terms": element_json(&p) })))
        }
        Command::Derive { deriv, unchecked, expr } => {
            let d = tri!(load_derivation(&deriv));
            let x = tri!(parse_element(&expr, d.config()));
            let y = if unchecked {
                d.extend_unchecked(&x)
            } else {
                tri!(d.extend(&x))
            };
            Outcome::ok(render(json_mode, format!("{y}\n"), json!({ "terms": element_json(&y) })))
        }
        Command::Ad { loops, lambda } => {
            let cfg = tri!(AlgebraConfig::new(loops));
            let lambda = tri!(parse_element(&lambda, &cfg));
            let d = tri!(ad(&cfg, &lambda));
            let values = derivation_values(&d);
            let mut text = String::new();
            for (g, x) in &values {
                writeln!(text, "{} = {x}", generator_label(*g)).unwrap();
            }
            let value = json!({
                "values": values
                    .iter()
                    .map(|(g, x)| json!({ "generator": g.to_string(), "terms": element_json(x) }))
                    .collect::<Vec<_>>()
            });
            Outcome::ok(render(json_mode, text, value))
        }
        Command::Check { deriv } => {
            let d = tri!(load_derivation(&deriv));
            report_outcome(json_mode, &d.check_relations())
        }
        Command::GenthCheck { deriv } => {
            let d = tri!(load_derivation(&deriv));
            report_outcome(json_mode, &d.check_genth_equations())
        }
        Command::Obstructions { deriv, strict_omega } => {
            let d = tri!(load_derivation(&deriv));
            let report = obstruction_coefficients(&d, !strict_omega);
            let class = classify_by_obstruction(&d, !strict_omega).ok();
            let mut text = report.to_string();
            match class {
                Some(c) => writeln!(text, "classification: {c}").unwrap(),
                None => writeln!(text, "classification: not a derivation").unwrap(),
            }
            let value = json!({
                "include_trivial_p": report.include_trivial_p,
                "entries": obstruction_json(&report),
                "classification": class.map(|c| format!("{c:?}")),
            });
            let code = if report.is_empty() { EXIT_OK } else { EXIT_REPORT };
            Outcome::with_code(render(json_mode, text, value), code)
        }
        Command::Witness { deriv, max_len } => {
            let d = tri!(load_derivation(&deriv));
            match tri!(find_inner_witness(&d, max_len)) {
                Some(lambda) => Outcome::ok(render(
                    json_mode,
                    format!("{lambda}\n"),
                    json!({ "witness": element_json(&lambda) }),
                )),
                None => Outcome::with_code(
                    render(
                        json_mode,
                        format!("none up to {max_len}\n"),
                        json!({ "witness": Value::Null, "max_len": max_len }),
                    ),
                    EXIT_REPORT,
                ),
            }
        }
        Command::Selfcheck {
            loops,
            words,
            max_word_len,
            seed,
            seeds,
        } => {
            let cfg = tri!(AlgebraConfig::new(loops));
            selfcheck(json_mode, &cfg, words, max_word_len, seed, seeds)
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, cfg: &AlgebraConfig, max_len: usize) -> Word {
    let mut alphabet = vec![Generator::Vertex];
    alphabet.extend(cfg.generators());
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| alphabet[rng.random_range(0..alphabet.len())]).collect()
}

fn selfcheck(json_mode: bool, cfg: &AlgebraConfig, words: usize, max_word_len: usize, seed: u64, seeds: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements: Vec<Value> = Vec::new();
    let mut text = String::new();
    for _ in 0..words {
        let word = random_word(&mut rng, cfg, max_word_len);
        let expected = tri!(reduce_word(cfg, &word));
        for s in 0..seeds {
            let got = tri!(oracle::exhaustive_reduce(cfg, &word, seed.wrapping_add(s)));
            if got != expected {
                writeln!(text, "disagreement on {word} (order seed {s}): {expected} vs {got}").unwrap();
                disagreements.push(json!({ "word": word.to_string(), "normal_form": element_json(&expected), "oracle": element_json(&got) }));
            }
        }
    }
    let overlaps = tri!(oracle::check_overlaps(cfg));
    writeln!(
        text,
        "{words} words x {seeds} orders: {} disagreement(s)",
        disagreements.len()
    )
    .unwrap();
    write!(text, "overlaps: {overlaps}").unwrap();
    let value = json!({
        "words": words,
        "orders": seeds,
        "disagreements": disagreements,
        "overlaps": report_json(&overlaps),
    });
    let code = if disagreements.is_empty() && overlaps.is_empty() {
        EXIT_OK
    } else {
        EXIT_REPORT
    };
    Outcome::with_code(render(json_mode, text, value), code)
}
