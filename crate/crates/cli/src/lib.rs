//! Command-line front end. [`run`] does all the work so it can be tested
//! without spawning a process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use rcn_core::kripke::{self, Frame};
use rcn_core::normal_form;
use rcn_core::selftest;
use rcn_core::spectrum::{self, Spectrum};
use rcn_core::{ignatiev, word, Error, Formula, Ordinal, Sequent, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "rcn", version, about = "Decide, normalize and evaluate variable-free RC-nabla formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a variable-free sequent `A |- B`.
    Decide {
        sequent: String,
        /// Also model-check diamond-only sequents in the canonical model
        /// and fail if the two verdicts differ.
        #[arg(long)]
        cross_check: bool,
    },
    /// Print a normal form of a variable-free formula.
    Nf {
        #[arg(long, value_enum, default_value_t = Style::Fat)]
        style: Style,
        formula: String,
    },
    /// Print the point denoted by a variable-free formula.
    Eval { formula: String },
    /// Order type of a word in `<n`.
    Word2ord { n: usize, word: String },
    /// The canonical word of an ordinal in level `n`.
    Ord2word { n: usize, ordinal: String },
    /// Conservativity spectra.
    Spectrum {
        #[command(subcommand)]
        action: SpectrumCommand,
    },
    /// Kripke frames in the line-oriented text format.
    Frames {
        #[command(subcommand)]
        action: FramesCommand,
    },
    /// The iterated reflection formula Q_n^k(word) and the word equal to it.
    Qword { n: usize, k: usize, word: String },
    /// Run the bounded exhaustive checks.
    Selftest {
        /// Size budget; larger values enumerate more formulas.
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Style {
    Weak,
    Fat,
    Thin,
}

#[derive(Subcommand, Debug)]
enum SpectrumCommand {
    /// Check the constraint `a_{i+1} <= l(a_i)`.
    Validate { spectrum: String },
    /// The fat normal form with the given spectrum.
    ToFormula { spectrum: String },
    /// The spectrum of a variable-free formula.
    OfFormula { formula: String },
    /// Spectra of some standard theories.
    Examples,
}

#[derive(Subcommand, Debug)]
enum FramesCommand {
    /// Report violated frame conditions.
    Check { file: PathBuf },
    /// Whether a sequent holds at every node under every valuation.
    Validate { file: PathBuf, sequent: String },
}

enum Failure {
    Core(Error),
    Io(String),
    Selftest,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::IndexOverflow { .. } | Error::Frame(_) => EXIT_PARSE,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_PRECONDITION,
    }
}

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("rcn".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(()) => Outcome {
            code: EXIT_OK,
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure::Core(e)) => Outcome {
            code: exit_code(&e),
            stdout: out,
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Io(msg)) => Outcome {
            code: EXIT_PRECONDITION,
            stdout: out,
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Selftest) => Outcome {
            code: EXIT_INTERNAL,
            stdout: out,
            stderr: "error: some checks failed\n".into(),
        },
    }
}

fn execute(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Decide { sequent, cross_check } => {
            let s: Sequent = sequent.parse()?;
            let verdict = ignatiev::derives(&s.lhs, &s.rhs)?;
            if cross_check && s.lhs.require_closed_rc().is_ok() && s.rhs.require_closed_rc().is_ok() {
                let km = kripke::derives_km(&s.lhs, &s.rhs)?;
                if km != verdict {
                    return Err(Error::Internal(format!(
                        "algebra says {verdict}, canonical model says {km}"
                    ))
                    .into());
                }
            }
            line(out, if verdict { "derivable" } else { "not derivable" });
        }
        Command::Nf { style, formula } => {
            let f: Formula = formula.parse()?;
            let text = match style {
                Style::Weak => normal_form::weak_nf(&f)?.to_string(),
                Style::Fat => normal_form::fat_nf(&f)?.to_string(),
                Style::Thin => normal_form::thin_nf(&f)?.to_string(),
            };
            line(out, text);
        }
        Command::Eval { formula } => {
            let f: Formula = formula.parse()?;
            line(out, ignatiev::eval(&f)?);
        }
        Command::Word2ord { n, word: w } => {
            let w: Word = w.parse()?;
            line(out, word::o(n, &w)?);
        }
        Command::Ord2word { n, ordinal } => {
            let a: Ordinal = ordinal.parse()?;
            line(out, word::word_of(n, &a));
        }
        Command::Spectrum { action } => spectrum_command(action, out)?,
        Command::Frames { action } => frames_command(action, out)?,
        Command::Qword { n, k, word: w } => {
            let w: Word = w.parse()?;
            let (q, equal) = normal_form::q_word(n, k, &w)?;
            line(out, q);
            line(out, equal);
        }
        Command::Selftest { max_size } => {
            let reports = selftest::run_all(max_size);
            for r in &reports {
                line(out, r);
            }
            if !reports.iter().all(selftest::Report::passed) {
                return Err(Failure::Selftest);
            }
        }
    }
    Ok(())
}

fn spectrum_command(action: SpectrumCommand, out: &mut String) -> Result<(), Failure> {
    match action {
        SpectrumCommand::Validate { spectrum: s } => {
            let s: Spectrum = s.parse()?;
            match s.first_violation() {
                None => line(out, "valid"),
                Some(i) => line(out, format!("invalid at index {i}")),
            }
        }
        SpectrumCommand::ToFormula { spectrum: s } => {
            let s: Spectrum = s.parse()?;
            line(out, spectrum::to_formula(&s)?);
        }
        SpectrumCommand::OfFormula { formula } => {
            let f: Formula = formula.parse()?;
            line(out, spectrum::of_formula(&f)?);
        }
        SpectrumCommand::Examples => {
            for (name, s) in spectrum::examples_table() {
                line(out, format!("{name}: {s}"));
            }
        }
    }
    Ok(())
}

fn read_frame(file: &PathBuf) -> Result<Frame, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Io(format!("{}: {e}", file.display())))?;
    Ok(text.parse()?)
}

fn frames_command(action: FramesCommand, out: &mut String) -> Result<(), Failure> {
    match action {
        FramesCommand::Check { file } => {
            let frame = read_frame(&file)?;
            let violations = kripke::check_frame_conditions(&frame);
            if violations.is_empty() {
                line(out, "all frame conditions hold");
            }
            for v in violations {
                line(out, v);
            }
        }
        FramesCommand::Validate { file, sequent } => {
            let frame = read_frame(&file)?;
            let s: Sequent = sequent.parse()?;
            let valid = kripke::frame_validates(&frame, &s)?;
            line(out, if valid { "valid" } else { "not valid" });
        }
    }
    Ok(())
}

fn line(out: &mut String, item: impl std::fmt::Display) {
    let _ = writeln!(out, "{item}");
}
