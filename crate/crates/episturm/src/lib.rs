//! Command-line front end for `episturm-core`.
//!
//! [`run`] parses an argument list, dispatches to the library and writes the
//! result. Words use the library's text format: lowercase letters are
//! `L`-spinned, uppercase letters `R`-spinned, and `pre(period)` denotes an
//! eventually periodic infinite word.
//!
//! Exit status is 0 on success, 1 on a domain error (the error name is
//! printed on stderr) and 2 on a usage error or malformed word.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use episturm_core::words::parse_letters;
use episturm_core::{
    block_equivalent_bfs, classify, directed_prefix_with, enumerate_respins, epistandard_prefix,
    equivalent, normalize_evp_with, normalize_finite, parse, unique_directive,
    Alphabet, Error, EvPeriodicSpinnedWord, Letter, LetterImageMap, SpinnedWord, Word,
};
use serde_json::{json, Value};

/// Longest word `blockeq` compares by exhaustive search.
const BFS_MAX_LEN: usize = 16;

const QUOTING: &str = "Eventually periodic words contain parentheses and must be quoted \
in the shell, e.g. episturm equiv '(abc)' 'ABC(aBC)'.";

#[derive(Parser, Debug)]
#[command(name = "episturm", version, about = "Episturmian words and morphisms", after_help = QUOTING)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Print one JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Longest prefix `generate` may produce.
    #[arg(long, global = true, value_name = "N")]
    max_output: Option<usize>,

    /// Cap on the normalizer's pending R-spinned run.
    #[arg(long, global = true, value_name = "N")]
    max_pending: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Normalized directive word of a finite or eventually periodic word.
    Normalize { word: String },
    /// Letter images of the morphism directed by a finite word.
    Images { word: String },
    /// Applies the morphism directed by WORD to lowercase LETTERS.
    Apply { word: String, letters: String },
    /// Whether two finite words are block-equivalent (exhaustive search up
    /// to 16 letters, normal forms beyond).
    Blockeq { w1: String, w2: String },
    /// Whether two infinite words direct a common episturmian word.
    Equiv { d1: String, d2: String },
    /// Whether the directed word has a unique directive word.
    Unique {
        word: String,
        /// Recurring letter selecting the word an ultimately R-spinned word directs.
        #[arg(long, value_parser = parse_letter)]
        start: Option<Letter>,
    },
    /// Respins of the first K letters that direct a common word.
    Enumerate {
        word: String,
        #[arg(long, value_name = "K")]
        window: usize,
    },
    /// Periodic, AperiodicManyL or AperiodicUltimatelyR.
    Classify { word: String },
    /// Prefix of the directed episturmian word.
    Generate {
        word: String,
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        #[arg(long, value_parser = parse_letter)]
        start: Option<Letter>,
        #[arg(long, value_enum, default_value_t = Via::Mu)]
        via: Via,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    /// Letter images of directive prefixes.
    Mu,
    /// Iterated palindromic closure (L-spinned words only).
    Pal,
}

fn parse_letter(s: &str) -> Result<Letter, String> {
    let mut chars = s.chars();
    match (chars.next().and_then(Letter::from_char), chars.next()) {
        (Some(l), None) => Ok(l),
        _ => Err(format!("`{s}` is not a single lowercase letter")),
    }
}

enum Failure {
    /// Malformed input: exit 2.
    Usage(String),
    /// Library error: exit 1.
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(format!("{}: {e}", e.name())),
            e => Failure::Domain(e),
        }
    }
}

fn finite(arg: &str) -> Result<SpinnedWord, Failure> {
    match parse(arg).map_err(|e| word_error(arg, e))? {
        Word::Finite(w) => Ok(w),
        Word::Infinite(_) => Err(Failure::Usage(format!("ParseError: `{arg}`: expected a finite word"))),
    }
}

fn infinite(arg: &str) -> Result<EvPeriodicSpinnedWord, Failure> {
    match parse(arg).map_err(|e| word_error(arg, e))? {
        Word::Infinite(w) => Ok(w.canonicalize()),
        Word::Finite(_) => {
            Err(Failure::Usage(format!("ParseError: `{arg}`: expected an eventually periodic word `pre(period)`")))
        }
    }
}

fn word_error(arg: &str, e: Error) -> Failure {
    Failure::Usage(format!("{}: `{arg}`: {e}", e.name()))
}

fn letters_text(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_char()).collect()
}

/// Result of a verb: plain-text lines and the equivalent JSON object.
struct Output {
    lines: Vec<String>,
    json: Value,
}

impl Output {
    fn single(key: &str, text: String, value: Value) -> Output {
        Output { lines: vec![text], json: json!({ key: value }) }
    }

    fn boolean(key: &str, b: bool) -> Output {
        Output::single(key, b.to_string(), Value::Bool(b))
    }

    fn word(key: &str, text: String) -> Output {
        Output::single(key, text.clone(), Value::String(text))
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    Ok(match &cli.verb {
        Verb::Normalize { word } => {
            let text = match parse(word).map_err(|e| word_error(word, e))? {
                Word::Finite(w) => normalize_finite(&w).to_string(),
                Word::Infinite(d) => normalize_evp_with(&d, cli.max_pending)?.to_string(),
            };
            Output::word("normalize", text)
        }
        Verb::Images { word } => {
            let m = LetterImageMap::mu(&finite(word)?);
            let lines = m.images().map(|(l, img)| format!("{l}->{}", letters_text(img))).collect();
            let map: serde_json::Map<String, Value> =
                m.images().map(|(l, img)| (l.to_string(), Value::String(letters_text(img)))).collect();
            Output { lines, json: json!({ "images": map }) }
        }
        Verb::Apply { word, letters } => {
            let w = finite(word)?;
            let input = parse_letters(letters).map_err(|e| word_error(letters, e))?;
            let span = w.alph().union(input.iter().copied().collect());
            let m = LetterImageMap::mu_over(&w, Alphabet::spanning(span))?;
            Output::word("apply", letters_text(&m.apply(&input)?))
        }
        Verb::Blockeq { w1, w2 } => {
            let (w1, w2) = (finite(w1)?, finite(w2)?);
            // the search visits up to 2^len spin vectors; past that, the
            // normal forms give the same answer
            let same = if w1.len() <= BFS_MAX_LEN {
                block_equivalent_bfs(&w1, &w2)
            } else {
                w1.underlying() == w2.underlying() && normalize_finite(&w1) == normalize_finite(&w2)
            };
            Output::boolean("blockeq", same)
        }
        Verb::Equiv { d1, d2 } => Output::boolean("equivalent", equivalent(&infinite(d1)?, &infinite(d2)?)?),
        Verb::Unique { word, start } => Output::boolean("unique", unique_directive(&infinite(word)?, *start)?),
        Verb::Enumerate { word, window } => {
            let found = enumerate_respins(&infinite(word)?, *window)?;
            let lines: Vec<String> = found.iter().map(ToString::to_string).collect();
            Output { json: json!({ "enumerate": lines }), lines }
        }
        Verb::Classify { word } => {
            let class = classify(&infinite(word)?).to_string();
            Output::word("classify", class)
        }
        Verb::Generate { word, n, start, via } => {
            let d = infinite(word)?;
            let cap = cli.max_output.unwrap_or(episturm_core::generate::DEFAULT_MAX_OUTPUT);
            let prefix = match via {
                Via::Mu => directed_prefix_with(&d, *n, *start, cap)?,
                Via::Pal if *n > cap => return Err(Error::OutputCapExceeded { requested: *n, cap }.into()),
                Via::Pal => epistandard_prefix(&d, *n)?,
            };
            Output::word("generate", letters_text(&prefix))
        }
    })
}

/// Runs the tool on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            let written = if cli.json {
                writeln!(out, "{}", output.json)
            } else {
                output.lines.iter().try_for_each(|line| writeln!(out, "{line}"))
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            let _ = writeln!(err, "Usage: episturm <verb> <args…> (see `episturm --help`)");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "{}: {e}", e.name());
            1
        }
    }
}
