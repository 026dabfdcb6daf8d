//! `adverbia`: query and check an adverb lexicon from the command line.
//!
//! Every subcommand prints JSON on stdout. Exit codes: 0 success, 1
//! unreadable input file, 2 malformed payload, 3 no reading survives
//! `disambiguate`. `validate` also exits 1 when the lexicon has errors.

mod payload;

use std::fmt;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use adverbia::analytics::{diff_against_reference, parse_reference, summarize};
use adverbia::lexicon::{parse_lexicon, Diagnostic};
use adverbia::{attach, check_order, filter_by_context, fixtures, order_angaben, Token};
use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "adverbia", version, about = "German adverb lexicon engine")]
struct Cli {
    /// Lexicon file (tab-separated, 13 columns).
    #[arg(long, short, env = "ADVERBIA_LEXICON", global = true)]
    lexicon: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate the lexicon; print all diagnostics.
    Validate,
    /// Print every reading of a lemma.
    Lookup { lemma: String },
    /// Sort a JSON array of "lemma@class" selectors by position class.
    Order {
        /// JSON payload; read from stdin when absent.
        #[arg(long)]
        payload: Option<String>,
    },
    /// Check a given adverbial order for class, negation, focus and
    /// Vorfeld violations.
    CheckOrder {
        #[arg(long)]
        payload: Option<String>,
    },
    /// Resolve degree-particle scope over a JSON token array.
    Scope {
        #[arg(long)]
        payload: Option<String>,
    },
    /// Filter the readings of a lemma by context cues.
    Disambiguate {
        lemma: String,
        /// in-vorfeld, predicative, follows-negation, focus, case=gen|dat|acc,
        /// graduated-by=SELECTOR
        #[arg(long = "cue")]
        cues: Vec<String>,
    },
    /// Per-class feature homogeneity of the lexicon.
    Summarize,
    /// Compare the lexicon's class summaries with a reference table.
    Diff {
        /// Reference table; the bundled class generalization table when
        /// absent.
        #[arg(long)]
        reference: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Unreadable(String),
    Payload(String),
    NoReading(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Unreadable(_) => 1,
            CliError::Payload(_) => 2,
            CliError::NoReading(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Unreadable(msg) | CliError::Payload(msg) | CliError::NoReading(msg) => {
                f.write_str(msg)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("adverbia: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let path = cli.lexicon.ok_or_else(|| {
        CliError::Unreadable("no lexicon given (--lexicon or ADVERBIA_LEXICON)".into())
    })?;
    let (lexicon, diagnostics) = parse_lexicon(&read_file(&path)?);

    if let Command::Validate = cli.command {
        emit(&diagnostics);
        return Ok(if diagnostics.iter().any(Diagnostic::is_error) {
            1
        } else {
            0
        });
    }
    for diagnostic in diagnostics.iter().filter(|d| d.is_error()) {
        eprintln!("{}: {diagnostic}", path.display());
    }

    match cli.command {
        Command::Validate => unreachable!(),
        Command::Lookup { lemma } => emit(&lexicon.lookup(&lemma)),
        Command::Order { payload } => {
            let selectors: Vec<String> = payload::parse(&read_payload(payload)?)?;
            let entries = selectors
                .iter()
                .map(|s| payload::resolve(&lexicon, s))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<_> = entries.iter().collect();
            let sorted: Vec<String> = order_angaben(&refs).iter().map(|e| e.selector()).collect();
            emit(&sorted);
        }
        Command::CheckOrder { payload } => {
            let request = payload::parse(&read_payload(payload)?)?;
            let resolved = payload::ResolvedSeq::new(&lexicon, request)?;
            emit(&check_order(&resolved.seq()?));
        }
        Command::Scope { payload } => {
            let specs: Vec<payload::TokenSpec> = payload::parse(&read_payload(payload)?)?;
            let tokens = specs
                .into_iter()
                .map(|spec| spec.resolve(&lexicon))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&ScopeReport::new(&tokens));
        }
        Command::Disambiguate { lemma, cues } => {
            let cues = cues
                .iter()
                .map(|cue| payload::parse_cue(&lexicon, cue))
                .collect::<Result<Vec<_>, _>>()?;
            let kept = filter_by_context(&lexicon.lookup(&lemma), &cues);
            emit(&kept);
            if kept.is_empty() {
                return Err(CliError::NoReading(format!(
                    "no reading of {lemma:?} fits the cues"
                )));
            }
        }
        Command::Summarize => emit(&summarize(&lexicon)),
        Command::Diff { reference } => {
            let rows = match reference {
                Some(path) => parse_reference(&read_file(&path)?)
                    .map_err(|e| CliError::Unreadable(format!("{}: {e}", path.display())))?,
                None => fixtures::table2_reference(),
            };
            emit(&diff_against_reference(&summarize(&lexicon), &rows));
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct ScopeReport<'a> {
    attachments: Vec<AttachmentReport<'a>>,
    free: Vec<usize>,
}

#[derive(Serialize)]
struct AttachmentReport<'a> {
    particle: &'a str,
    particle_index: usize,
    target: &'a str,
    target_index: usize,
    direction: adverbia::scope::Side,
    distant: bool,
}

impl<'a> ScopeReport<'a> {
    fn new(tokens: &'a [Token]) -> Self {
        let parse = attach(tokens);
        let attachments = parse
            .attachments
            .iter()
            .map(|a| AttachmentReport {
                particle: &tokens[a.particle_index].surface,
                particle_index: a.particle_index,
                target: &tokens[a.target_index].surface,
                target_index: a.target_index,
                direction: a.direction_used,
                distant: a.distant,
            })
            .collect();
        ScopeReport {
            attachments,
            free: parse.free,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Unreadable(format!("{}: {e}", path.display())))
}

fn read_payload(flag: Option<String>) -> Result<String, CliError> {
    match flag {
        Some(text) => Ok(text),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Payload(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn emit<T: Serialize + ?Sized>(value: &T) {
    let json = serde_json::to_string_pretty(value).expect("output is serializable");
    println!("{json}");
}
