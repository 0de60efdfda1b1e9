use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use freepal::braid::{self, BraidWord};
use freepal::freegroup::{format_letters, parse_letters, FreeWord, MonoidWord};
use freepal::pal;
use freepal::quotient::{self, FiniteHom, Permutation};
use freepal::sample;
use freepal::Error;

/// Palindromization on the free group F2 = <a, b>.
///
/// Words: `a`, `b` are generators, `A`, `B` their inverses, `1` the identity.
/// Braids: whitespace-separated signed indices such as `1 -2 1`.
#[derive(Parser, Debug)]
#[command(name = "freepal", version)]
struct Cli {
    /// Emit one JSON object {command, input, result} per result.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Bound for `orbit` degrees and `closure-demo` n.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pal(w); reads one word per line from stdin when no word is given.
    Pal { word: Option<String> },
    /// Some w with Pal(w) = g.
    Preimage { word: String },
    /// Whether g is a value of Pal (abg conjugate to bag); batch on stdin.
    InImage { word: Option<String> },
    /// Whether Pal(u) = Pal(v).
    Equal { u: String, v: String },
    /// Whether Pal(w) = 1; batch on stdin.
    Kernel { word: Option<String> },
    /// Shortest palindromic extension of a raw symbol string (no reduction).
    Closure { word: String },
    /// Iterated palindromic closure of a positive word.
    Pp { word: String },
    /// Directive word of a central word.
    Directive { word: String },
    /// Whether two braid words are equal in B3.
    BraidEqual {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Whether a braid word is trivial in B3.
    BraidTrivial {
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        indices: Vec<String>,
    },
    /// The braid beta(w), with a -> 1, b -> -2.
    Beta { word: String },
    /// The matrix M_w in SL2(Z).
    Matrix { word: String },
    /// Orbit table of S_n x S_n under the R_w action.
    Orbit { degree: usize },
    /// Continuity certificate for phi: F2 -> S_n on random word pairs.
    Certify {
        #[arg(long)]
        degree: usize,
        /// Image of a in cycle notation, e.g. "(0 1 2)".
        #[arg(long)]
        phi_a: String,
        /// Image of b in cycle notation.
        #[arg(long)]
        phi_b: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// pi(Pal((a^-1 b)^(p^n))), nonzero for every prime power.
    PropGap {
        p: Option<u64>,
        n: Option<u64>,
        /// Use the exponent k directly instead of p^n.
        #[arg(long, conflicts_with_all = ["p", "n"])]
        exponent: Option<u64>,
    },
    /// (a b^{n!})^+ = a b^{n!} a for n = 1..=max-n.
    ClosureDemo,
}

/// Domain failures exit with 1, parse failures with 2.
enum Failure {
    Parse(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// One printed result: its input echo, plain text and JSON forms.
struct Record {
    input: Value,
    text: String,
    json: Value,
}

impl Record {
    fn new(input: impl Into<Value>, text: impl Into<String>, json: impl Into<Value>) -> Self {
        Record {
            input: input.into(),
            text: text.into(),
            json: json.into(),
        }
    }

    fn word(input: &str, w: &FreeWord) -> Self {
        Record::new(input, w.to_string(), w.to_string())
    }

    fn flag(input: impl Into<Value>, b: bool) -> Self {
        Record::new(input, b.to_string(), b)
    }
}

fn word(s: &str) -> Result<FreeWord, Failure> {
    Ok(s.parse()?)
}

fn braid_word(s: &str) -> Result<BraidWord, Failure> {
    Ok(s.parse()?)
}

fn stdin_lines() -> Result<Vec<String>, Failure> {
    let stdin = io::stdin();
    let mut out = Vec::new();
    for line in stdin.lock().lines() {
        let line = line.map_err(|e| Failure::Parse(format!("reading stdin: {e}")))?;
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            out.push(trimmed.to_string());
        }
    }
    Ok(out)
}

/// Parses every input before computing anything.
fn batch(
    single: &Option<String>,
    f: impl Fn(&str, &FreeWord) -> Record,
) -> Result<Vec<Record>, Failure> {
    let inputs = match single {
        Some(s) => vec![s.clone()],
        None => stdin_lines()?,
    };
    let words = inputs
        .iter()
        .map(|s| word(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(inputs.iter().zip(&words).map(|(s, w)| f(s, w)).collect())
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Pal { .. } => "pal",
        Command::Preimage { .. } => "preimage",
        Command::InImage { .. } => "in-image",
        Command::Equal { .. } => "equal",
        Command::Kernel { .. } => "kernel",
        Command::Closure { .. } => "closure",
        Command::Pp { .. } => "pp",
        Command::Directive { .. } => "directive",
        Command::BraidEqual { .. } => "braid-equal",
        Command::BraidTrivial { .. } => "braid-trivial",
        Command::Beta { .. } => "beta",
        Command::Matrix { .. } => "matrix",
        Command::Orbit { .. } => "orbit",
        Command::Certify { .. } => "certify",
        Command::PropGap { .. } => "prop-gap",
        Command::ClosureDemo => "closure-demo",
    }
}

fn run(cli: &Cli) -> Result<Vec<Record>, Failure> {
    let records = match &cli.command {
        Command::Pal { word } => batch(word, |s, w| Record::word(s, &pal::pal(w)))?,
        Command::InImage { word } => batch(word, |s, w| Record::flag(s, pal::in_image(w)))?,
        Command::Kernel { word } => batch(word, |s, w| Record::flag(s, pal::in_kernel(w)))?,
        Command::Preimage { word: s } => {
            let g = word(s)?;
            vec![Record::word(s, &pal::preimage(&g)?)]
        }
        Command::Equal { u, v } => {
            let (x, y) = (word(u)?, word(v)?);
            vec![Record::flag(json!([u, v]), pal::pal_equal(&x, &y))]
        }
        Command::Closure { word: s } => {
            let letters = parse_letters(s)?;
            let closed = format_letters(&pal::closure_plus(&letters));
            vec![Record::new(s.as_str(), closed.clone(), closed)]
        }
        Command::Pp { word: s } => {
            let m: MonoidWord = s.parse()?;
            let out = pal::pp(&m).to_string();
            vec![Record::new(s.as_str(), out.clone(), out)]
        }
        Command::Directive { word: s } => {
            let m: MonoidWord = s.parse()?;
            let out = pal::directive(&m)?.to_string();
            vec![Record::new(s.as_str(), out.clone(), out)]
        }
        Command::BraidEqual { x, y } => {
            let (bx, by) = (braid_word(x)?, braid_word(y)?);
            vec![Record::flag(json!([x, y]), braid::braids_equal(&bx, &by))]
        }
        Command::BraidTrivial { indices } => {
            let joined = indices.join(" ");
            let b = braid_word(&joined)?;
            vec![Record::flag(joined, braid::is_trivial(&b))]
        }
        Command::Beta { word: s } => {
            let b = braid::beta(&word(s)?).to_string();
            vec![Record::new(s.as_str(), b.clone(), b)]
        }
        Command::Matrix { word: s } => {
            let m = freepal::matrix_of(&word(s)?)?;
            let rows = json!([[m.m11, m.m12], [m.m21, m.m22]]);
            vec![Record::new(s.as_str(), m.to_string(), rows)]
        }
        Command::Orbit { degree } => {
            let max = cli.max_n.unwrap_or(quotient::DEFAULT_MAX_DEGREE);
            let table = quotient::orbit_table_bounded(*degree, max)?;
            let rows: Vec<Value> = table
                .points
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    json!({
                        "point": p.to_string(),
                        "orbit_id": table.orbit_id[i],
                        "transversal": table.transversal[i].to_string(),
                    })
                })
                .collect();
            let text = table.to_text();
            vec![Record::new(
                *degree as u64,
                text.trim_end().to_string(),
                Value::Array(rows),
            )]
        }
        Command::Certify {
            degree,
            phi_a,
            phi_b,
            samples,
            max_len,
        } => {
            let phi = FiniteHom::new(
                Permutation::from_cycles(*degree, phi_a)?,
                Permutation::from_cycles(*degree, phi_b)?,
            )?;
            let mut rng = sample::seeded(cli.seed);
            let pairs = sample::random_pairs(&mut rng, *samples, *max_len);
            let ok = quotient::continuity_certificate(&phi, &pairs);
            let input = json!({
                "degree": degree,
                "phi_a": phi.phi_a.to_string(),
                "phi_b": phi.phi_b.to_string(),
                "samples": samples,
                "seed": cli.seed,
            });
            vec![Record::flag(input, ok)]
        }
        Command::PropGap { p, n, exponent } => {
            let (input, v) = match (p, n, exponent) {
                (_, _, Some(k)) => (json!({ "exponent": k }), quotient::gap_for_exponent(*k)?),
                (Some(p), Some(n), None) => (json!([p, n]), quotient::pro_p_gap(*p, *n)?),
                _ => return Err(Failure::Parse("prop-gap needs <p> <n> or --exponent <k>".into())),
            };
            vec![Record::new(input, v.to_string(), json!([v.x, v.y]))]
        }
        Command::ClosureDemo => {
            let n_max = cli.max_n.unwrap_or(5);
            let rows = quotient::closure_discontinuity_demo(n_max)?;
            let text = rows
                .iter()
                .map(|r| {
                    format!(
                        "{}\t{}\t{}\t{}",
                        r.n,
                        format_letters(&r.word),
                        format_letters(&r.closed),
                        r.matches
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "word": format_letters(&r.word),
                        "closed": format_letters(&r.closed),
                        "matches": r.matches,
                    })
                })
                .collect();
            vec![Record::new(n_max as u64, text, Value::Array(json_rows))]
        }
    };
    Ok(records)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli) {
        Ok(records) => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for r in records {
                let line = if cli.json {
                    json!({ "command": name, "input": r.input, "result": r.json }).to_string()
                } else {
                    r.text
                };
                if writeln!(out, "{line}").is_err() {
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
