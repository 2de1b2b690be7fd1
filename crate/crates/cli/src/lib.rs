//! Command-line front end for `thompson-core`.
//!
//! Elements, automorphism words and matrices are passed as JSON, either
//! inline or as a path to a file. Results go to stdout; domain errors go to
//! stderr as `{"error": code, "detail": message}` with exit status 1, usage
//! errors exit with status 2.

mod demo;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use thompson_core::groupf::apply_aut;
use thompson_core::{
    ab, class_rep, conj_by_tlike, h1_matrix, reidemeister_of_matrix, rev, snf, twisted_equiv_abelian, AutWord, Dyadic,
    Element, FMap, IntMatrix, TLikeMap,
};

pub use demo::{demo_theorem, DEFAULT_SEED, SEED_ENV};

#[derive(Parser, Debug)]
#[command(
    name = "thompson-twist",
    version,
    about = "Exact computations in Thompson's group F and its twisted conjugacy classes"
)]
pub struct Cli {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an element and print its canonical form.
    Validate {
        #[arg(long)]
        element: String,
    },
    /// Evaluate an element at a dyadic point.
    Eval {
        #[arg(long)]
        element: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Compose two elements of F: f ∘ h.
    Compose {
        #[arg(long)]
        f: String,
        #[arg(long)]
        h: String,
    },
    /// Invert an element of F or an eventually T-like map.
    Invert {
        #[arg(long)]
        element: String,
    },
    /// Abelianization (f_l, f_r).
    Ab {
        #[arg(long)]
        element: String,
    },
    /// Apply the reversal automorphism x ↦ -f(-x).
    Rev {
        #[arg(long)]
        element: String,
    },
    /// Conjugate f by an eventually T-like map g: g ∘ f ∘ g⁻¹.
    Conjugate {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Apply an automorphism word to an element of F.
    AutApply {
        #[arg(long)]
        word: String,
        #[arg(long)]
        element: String,
    },
    /// Induced matrix on H1(F) = Z × Z.
    H1Matrix {
        #[arg(long)]
        word: String,
    },
    /// Smith normal form U·A·V = D.
    Snf {
        #[arg(long)]
        matrix: String,
    },
    /// Reidemeister number #Coker(I - A) of an automorphism of Z^n.
    Reidemeister {
        #[arg(long)]
        matrix: String,
    },
    /// Whether u and v are twisted conjugate under A.
    TwistedEquiv {
        #[arg(long)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Canonical representative of the twisted class of v under A.
    ClassRep {
        #[arg(long)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Reproduce the computation showing R(φ) is infinite for every automorphism.
    DemoTheorem {
        /// Certify the set {(0, a) : |a| <= N}.
        #[arg(long, default_value_t = 20)]
        n: i64,
        /// Number of random automorphism words to sample.
        #[arg(long, default_value_t = 6)]
        samples: usize,
    },
}

/// Error reported on stderr as a JSON object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: String,
    pub detail: String,
}

impl CliError {
    fn input(detail: impl Into<String>) -> CliError {
        CliError {
            code: "InvalidInput".into(),
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": self.code, "detail": self.detail})
    }
}

impl<E: Into<thompson_core::Error>> From<E> for CliError {
    fn from(e: E) -> CliError {
        let e = e.into();
        CliError {
            code: e.code().to_string(),
            detail: e.to_string(),
        }
    }
}

/// Parse arguments, run one command, and return the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_json());
            1
        }
    }
}

/// Inline JSON when the argument starts with `{` or `[`; a file path otherwise.
fn load_json(arg: &str) -> Result<Value, CliError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::input(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("invalid JSON: {e}")))
}

fn load_element(arg: &str) -> Result<Element, CliError> {
    Ok(Element::from_json(load_json(arg)?)?)
}

fn load_f(arg: &str) -> Result<FMap, CliError> {
    Ok(FMap::from_json(load_json(arg)?)?)
}

/// A T-like map, or an element of F viewed as one.
fn load_tlike(arg: &str) -> Result<TLikeMap, CliError> {
    Ok(match load_element(arg)? {
        Element::TLike(g) => g,
        Element::F(f) => TLikeMap::from_f(&f),
    })
}

fn load_word(arg: &str) -> Result<AutWord, CliError> {
    Ok(AutWord::from_json(&load_json(arg)?)?)
}

fn load_matrix(arg: &str) -> Result<IntMatrix, CliError> {
    Ok(IntMatrix::from_json(&load_json(arg)?)?)
}

fn load_vector(arg: &str) -> Result<Vec<BigInt>, CliError> {
    let value: Value = serde_json::from_str(arg).map_err(|e| CliError::input(format!("invalid vector: {e}")))?;
    value
        .as_array()
        .ok_or_else(|| CliError::input("vector must be a JSON array"))?
        .iter()
        .map(|v| {
            let s = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                other => other.to_string(),
            };
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| CliError::input(format!("not an integer: {s}")))
        })
        .collect()
}

fn vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| json!(x.to_string())).collect())
}

fn vec_text(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let json_mode = cli.output == Output::Json;
    // (text form, json form)
    let (text, value): (String, Value) = match &cli.command {
        Command::Validate { element } => {
            let v = load_element(element)?.to_json();
            (v.to_string(), v)
        }
        Command::Eval { element, x } => {
            let x: Dyadic = x.parse().map_err(|_| CliError {
                code: "NonDyadic".into(),
                detail: x.clone(),
            })?;
            let y = match load_element(element)? {
                Element::F(f) => f.eval(&x),
                Element::TLike(g) => g.eval(&x),
            };
            (y.to_string(), json!({"x": x.to_string(), "y": y.to_string()}))
        }
        Command::Compose { f, h } => {
            let v = load_f(f)?.compose(&load_f(h)?).to_json();
            (v.to_string(), v)
        }
        Command::Invert { element } => {
            let v = match load_element(element)? {
                Element::F(f) => f.inverse().to_json(),
                Element::TLike(g) => g.inverse().to_json(),
            };
            (v.to_string(), v)
        }
        Command::Ab { element } => {
            let p = ab(&load_f(element)?);
            (p.to_string(), json!({"l": p.l, "r": p.r}))
        }
        Command::Rev { element } => {
            let v = rev(&load_f(element)?).to_json();
            (v.to_string(), v)
        }
        Command::Conjugate { f, g } => {
            let v = conj_by_tlike(&load_f(f)?, &load_tlike(g)?)?.to_json();
            (v.to_string(), v)
        }
        Command::AutApply { word, element } => {
            let v = apply_aut(&load_word(word)?, &load_f(element)?)?.to_json();
            (v.to_string(), v)
        }
        Command::H1Matrix { word } => {
            let m = h1_matrix(&load_word(word)?)?;
            (m.to_string(), m.to_json())
        }
        Command::Snf { matrix } => {
            let r = snf(&load_matrix(matrix)?);
            let text = format!("U = {}\nD = {}\nV = {}", r.u, r.d, r.v);
            (
                text,
                json!({"U": r.u.to_json(), "D": r.d.to_json(), "V": r.v.to_json()}),
            )
        }
        Command::Reidemeister { matrix } => {
            let r = reidemeister_of_matrix(&load_matrix(matrix)?)?;
            (r.to_string(), json!({"reidemeister": r.to_string()}))
        }
        Command::TwistedEquiv { matrix, u, v } => {
            let eq = twisted_equiv_abelian(&load_vector(u)?, &load_vector(v)?, &load_matrix(matrix)?)?;
            (eq.to_string(), json!({"equivalent": eq}))
        }
        Command::ClassRep { matrix, v } => {
            let rep = class_rep(&load_vector(v)?, &load_matrix(matrix)?)?;
            (vec_text(&rep), json!({"class_rep": vec_json(&rep)}))
        }
        Command::DemoTheorem { n, samples } => {
            let seed = demo::seed_from_env()?;
            let report = demo_theorem(*n, *samples, seed)?;
            let value = json!({"report": report});
            (report.trim_end().to_string(), value)
        }
    };
    let written = if json_mode {
        writeln!(out, "{value}")
    } else {
        writeln!(out, "{text}")
    };
    written.map_err(|e| CliError::input(format!("write failed: {e}")))
}
