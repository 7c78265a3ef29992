//! Argument parsing and the verbs behind the `quasicover` binary.
//!
//! Exit codes: 0 when a question was answered or a property verified, 1 when
//! a verification run found a counterexample, 2 for usage errors.

use std::fmt::Write as _;
use std::io::{self, Write};

use clap::{Parser, Subcommand};
use quasicover_core::verify::{tightness_search, EnumerationSpec, Property};
use quasicover_core::{
    all_cover_lengths, almost_borders, almost_periods, border_array, cover_array, cover_intervals,
    is_left_seed, is_periodic, is_seed_oracle, periods, seed_coverage, shortest_cover, Word,
};
use serde_json::json;

use crate::diagram;
use crate::runner::{verify, RunOptions};

#[derive(Parser, Debug)]
#[command(name = "quasicover", version, about = "Covers, seeds and quasiperiodicity of strings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Borders, periods, cover array and covers of a word
    Analyze {
        #[arg(value_parser = parse_word)]
        word: Word,
        /// Also list almost periods and almost borders
        #[arg(long)]
        almost: bool,
        /// Draw the occurrences of the shortest cover
        #[arg(long)]
        diagram: bool,
        #[arg(long)]
        json: bool,
    },
    /// Shortest cover length of every prefix
    CoverArray {
        #[arg(value_parser = parse_word)]
        word: Word,
        #[arg(long)]
        json: bool,
    },
    /// All proper covers of a word
    Covers {
        #[arg(value_parser = parse_word)]
        word: Word,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether SEED is a seed of WORD
    SeedCheck {
        #[arg(value_parser = parse_word)]
        seed: Word,
        #[arg(value_parser = parse_word)]
        word: Word,
        /// Print a superstring covered by the seed
        #[arg(long)]
        witness: bool,
        /// Draw the occurrence and overhang intervals
        #[arg(long)]
        diagram: bool,
        #[arg(long)]
        json: bool,
    },
    /// Almost periods and almost borders of a word
    Almost {
        #[arg(value_parser = parse_word)]
        word: Word,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively check a statement over all words of the given lengths
    Verify {
        /// fact-periodic, lemma-seed, lemma-cover-seed or theorem-quasi
        #[arg(value_parser = parse_property)]
        property: Property,
        #[arg(long, default_value_t = 2)]
        sigma: u8,
        /// Inclusive length range, `A..B`
        #[arg(long, value_parser = parse_range)]
        n: LengthRange,
        /// Only words whose letters first appear in order a, b, c, ...
        #[arg(long)]
        canonical: bool,
        #[arg(long, env = "QUASICOVER_WORKERS", default_value_t = 1)]
        workers: usize,
        /// Stop at the first counterexample
        #[arg(long)]
        stop_at_first: bool,
        #[arg(long)]
        json: bool,
    },
    /// The two-mismatch pair a^(n/2-1) b a^(n/2-1) b / a^n
    Tightness {
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthRange {
    pub min: usize,
    pub max: usize,
}

fn parse_word(s: &str) -> Result<Word, String> {
    if s.is_empty() {
        return Err("word must not be empty".into());
    }
    s.parse::<Word>().map_err(|e| e.to_string())
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
        format!("unknown property {s:?}; expected one of {}", names.join(", "))
    })
}

pub fn parse_range(s: &str) -> Result<LengthRange, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid length {t:?}"));
    let (min, max) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    Ok(LengthRange { min, max })
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<quasicover_core::Error> for CliError {
    fn from(e: quasicover_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// Runs one command, writing its report to `out`; returns the exit code.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Analyze { word, almost, diagram, json } => analyze(word, *almost, *diagram, *json, out),
        Command::CoverArray { word, json } => {
            let cv = cover_array(word);
            if *json {
                writeln!(out, "{}", json!({ "word": word.to_string(), "cover_array": cv.as_slice() }))?;
            } else {
                writeln!(out, "cover array: {}", join(cv.as_slice()))?;
            }
            Ok(0)
        }
        Command::Covers { word, json } => {
            let lengths = all_cover_lengths(word)?;
            let covers: Vec<String> = lengths.iter().map(|&l| word.prefix(l).to_string()).collect();
            if *json {
                writeln!(
                    out,
                    "{}",
                    json!({ "word": word.to_string(), "cover_lengths": lengths, "covers": covers })
                )?;
            } else if lengths.is_empty() {
                writeln!(out, "no proper covers")?;
            } else {
                for (len, cover) in lengths.iter().zip(&covers) {
                    writeln!(out, "{len} {cover}")?;
                }
            }
            Ok(0)
        }
        Command::SeedCheck { seed, word, witness, diagram, json } => {
            seed_check(seed, word, *witness, *diagram, *json, out)
        }
        Command::Almost { word, json } => {
            let text = almost_section(word, *json)?;
            writeln!(out, "{text}")?;
            Ok(0)
        }
        Command::Verify { property, sigma, n, canonical, workers, stop_at_first, json } => {
            if *workers == 0 {
                return Err(CliError::Usage("--workers must be at least 1".into()));
            }
            let spec = EnumerationSpec::new(*sigma, n.min, n.max, *canonical)?;
            if *sigma > 26 {
                return Err(CliError::Usage("--sigma must be at most 26".into()));
            }
            let options = RunOptions { workers: *workers, stop_at_first: *stop_at_first };
            let report = verify(*property, &spec, &options)?;
            if *json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            Ok(report.exit_code())
        }
        Command::Tightness { n, json } => {
            let t = tightness_search(*n)?;
            if *json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "n": n,
                        "w": t.w.to_string(),
                        "w_prime": t.w_prime.to_string(),
                        "mismatches": t.mismatches,
                        "w_quasiperiodic": t.w_quasiperiodic,
                        "w_prime_quasiperiodic": t.w_prime_quasiperiodic,
                    })
                )?;
            } else {
                writeln!(out, "w: {}", t.w)?;
                writeln!(out, "w': {}", t.w_prime)?;
                writeln!(out, "mismatches: {}", join(&t.mismatches))?;
                writeln!(out, "w quasiperiodic: {}", t.w_quasiperiodic)?;
                writeln!(out, "w' quasiperiodic: {}", t.w_prime_quasiperiodic)?;
            }
            Ok(0)
        }
    }
}

fn almost_section(word: &Word, json: bool) -> Result<String, CliError> {
    let aps = almost_periods(word)?;
    let abs = almost_borders(word)?;
    if json {
        let aps: Vec<_> = aps.iter().map(|a| json!({ "period": a.period, "mismatch": a.mismatch })).collect();
        let abs: Vec<_> = abs.iter().map(|a| json!({ "length": a.length, "mismatch": a.mismatch })).collect();
        return Ok(json!({ "word": word.to_string(), "almost_periods": aps, "almost_borders": abs }).to_string());
    }
    let aps: Vec<String> = aps.iter().map(|a| format!("({}, {})", a.period, a.mismatch)).collect();
    let abs: Vec<String> = abs.iter().map(|a| format!("({}, {})", a.length, a.mismatch)).collect();
    let list = |v: Vec<String>| if v.is_empty() { "none".to_string() } else { v.join(" ") };
    Ok(format!("almost periods (p, j): {}\nalmost borders (b, j): {}", list(aps), list(abs)))
}

fn analyze(word: &Word, almost: bool, diagram: bool, json: bool, out: &mut dyn Write) -> Result<u8, CliError> {
    let n = word.len();
    let borders = border_array(word);
    let periods = periods(word)?;
    let periodic = is_periodic(word)?;
    let cv = cover_array(word);
    let shortest = shortest_cover(word)?;
    let lengths = all_cover_lengths(word)?;
    let quasi = shortest.len() < n;

    if json {
        let mut value = json!({
            "word": word.to_string(),
            "length": n,
            "border_array": borders.as_slice(),
            "periods": periods,
            "periodic": periodic,
            "cover_array": cv.as_slice(),
            "shortest_cover": shortest.to_string(),
            "cover_lengths": lengths,
            "quasiperiodic": quasi,
        });
        if almost {
            let extra: serde_json::Value = serde_json::from_str(&almost_section(word, true)?).expect("valid json");
            value["almost_periods"] = extra["almost_periods"].clone();
            value["almost_borders"] = extra["almost_borders"].clone();
        }
        writeln!(out, "{value}")?;
        return Ok(0);
    }

    let mut text = String::new();
    let _ = writeln!(text, "word: {word}");
    let _ = writeln!(text, "length: {n}");
    let _ = writeln!(text, "border array: {}", join(borders.as_slice()));
    let _ = writeln!(text, "periods: {}", join(&periods));
    let _ = writeln!(text, "periodic: {periodic}");
    let _ = writeln!(text, "cover array: {}", join(cv.as_slice()));
    let _ = writeln!(text, "shortest cover: {shortest}");
    let _ = writeln!(text, "proper cover lengths: {}", join(&lengths));
    let _ = writeln!(text, "quasiperiodic: {quasi}");
    if almost {
        let _ = writeln!(text, "{}", almost_section(word, false)?);
    }
    if diagram {
        text.push_str(&diagram::render(word, &cover_intervals(&shortest, word)?));
    }
    write!(out, "{text}")?;
    Ok(0)
}

fn seed_check(
    seed: &Word,
    word: &Word,
    witness: bool,
    diagram: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    if seed.len() > word.len() {
        return Err(CliError::Usage(format!(
            "seed of length {} is longer than the word ({})",
            seed.len(),
            word.len()
        )));
    }
    let coverage = seed_coverage(seed, word)?;
    let left = is_left_seed(seed, word)?;
    let found = if witness { is_seed_oracle(seed, word)? } else { None };

    if json {
        let intervals: Vec<_> = coverage
            .intervals
            .iter()
            .map(|iv| json!({ "start": iv.start, "end": iv.end, "kind": format!("{:?}", iv.kind) }))
            .collect();
        let mut value = json!({
            "seed": seed.to_string(),
            "word": word.to_string(),
            "is_seed": coverage.is_seed,
            "is_left_seed": left,
            "intervals": intervals,
        });
        if witness {
            value["witness"] = match &found {
                Some(w) => json!({
                    "superstring": w.superstring.to_string(),
                    "left_trim": w.left_trim,
                    "right_trim": w.right_trim,
                }),
                None => serde_json::Value::Null,
            };
        }
        writeln!(out, "{value}")?;
        return Ok(0);
    }

    writeln!(out, "seed: {}", coverage.is_seed)?;
    writeln!(out, "left seed: {left}")?;
    if witness {
        match &found {
            Some(w) => writeln!(
                out,
                "witness: {} (left trim {}, right trim {})",
                w.superstring, w.left_trim, w.right_trim
            )?,
            None => writeln!(out, "witness: none")?,
        }
    }
    if diagram {
        write!(out, "{}", diagram::render(word, &coverage.intervals))?;
    }
    Ok(0)
}
