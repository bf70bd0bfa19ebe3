//! The `regcone` command-line front end.
//!
//! Exit codes: 0 for success, `IsCone` or `true`; 1 for `NotCone` or
//! `false`; 2 for input errors; 3 when a search is inconclusive.
//! Words are passed as a single argument of space-separated tokens.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::automata::{self, parse_automaton, write_automaton, Automaton};
use crate::conecheck::{ConeCandidate, RefuteConfig};
use crate::error::{Error, Result};
use crate::freegroup::{benois_reduce, GroupAlphabet};
use crate::graphprod::{parse_graph, GraphPresentation};
use crate::orders::{z2_bounded_verify, Z2Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "regcone", version, about = "Regular languages, free groups and positive cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Freely reduce every word of a language over a group alphabet.
    Reduce {
        input: PathBuf,
        /// Where to write the reduced automaton.
        output: Option<PathBuf>,
    },
    /// Decide whether a language represents a positive cone.
    ConeCheck { input: PathBuf },
    /// Search for a disjointness certificate by pumping.
    Refute {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        ball: usize,
        #[arg(long, default_value_t = 6)]
        tmax: usize,
    },
    /// Geodesics in a graph product.
    Geo {
        graph: PathBuf,
        #[command(subcommand)]
        action: GeoAction,
    },
    /// Compare the abelian image of a language with the lexicographic cone of Z².
    Z2Verify {
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        radius: u32,
    },
    /// Intersection.
    And { a: PathBuf, b: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Union.
    Or { a: PathBuf, b: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Complement within all words over the alphabet.
    Not { a: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Concatenation.
    Cat { a: PathBuf, b: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Kleene star.
    Star { a: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Reversal.
    Rev { a: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Prefix closure.
    Pref { a: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Language equivalence.
    Eq { a: PathBuf, b: PathBuf },
    /// Accepted words up to a length, in shortlex order.
    Enum {
        a: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
}

#[derive(Debug, Subcommand)]
enum GeoAction {
    /// Is the word geodesic?
    Check { word: String },
    /// Write the automaton of all geodesics.
    Build { output: PathBuf },
    /// Build the witness pair w x y x⁻¹ w⁻¹, w x y⁻¹ x⁻¹ w⁻¹.
    Witness { word: String, t: String, u: String, x: String, y: String },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Inconclusive(_) | Error::SearchExhausted(_) => EXIT_INCONCLUSIVE,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn load(path: &Path) -> Result<Automaton> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_automaton(&text).map_err(|e| Error::Parse {
        line: match e {
            Error::Parse { line, .. } => line,
            _ => 0,
        },
        msg: format!("{}: {e}", path.display()),
    })
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn save(path: &Path, a: &Automaton) -> Result<()> {
    std::fs::write(path, write_automaton(a)).map_err(|e| io_error(path, e))
}

fn emit(out: &mut dyn Write, a: &Automaton, output: Option<PathBuf>) -> Result<i32> {
    let a = a.minimized();
    match output {
        Some(path) => save(&path, &a)?,
        None => out.write_all(write_automaton(&a).as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn load_graph(path: &Path) -> Result<GraphPresentation> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_graph(&text, path.parent())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Reduce { input, output } => {
            let a = load(&input)?;
            let group = GroupAlphabet::from_alphabet(a.alphabet().clone())?;
            let reduced = benois_reduce(&group, &a)?.into_automaton();
            if let Some(path) = output {
                save(&path, &reduced)?;
            }
            writeln!(out, "states: {}", reduced.state_count())?;
            match reduced.shortest_word() {
                Some(w) => writeln!(out, "shortest: {}", group.format(&w))?,
                None => writeln!(out, "empty")?,
            }
            Ok(EXIT_OK)
        }
        Command::ConeCheck { input } => {
            let c = ConeCandidate::from_automaton(load(&input)?)?;
            let verdict = c.check_axioms()?;
            out.write_all(verdict.render(c.group()).as_bytes())?;
            Ok(if verdict.is_cone() { EXIT_OK } else { EXIT_NO })
        }
        Command::Refute { input, ball, tmax } => {
            let cfg = RefuteConfig::new(ball, tmax)?;
            let c = ConeCandidate::from_automaton(load(&input)?)?;
            match c.pumping_witness(&cfg) {
                Ok(v) => {
                    out.write_all(v.render(c.group()).as_bytes())?;
                    writeln!(out, "verified: {}", c.verify(&v))?;
                    Ok(EXIT_NO)
                }
                Err(Error::Inconclusive(msg)) => {
                    writeln!(out, "inconclusive: {msg}")?;
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(e) => Err(e),
            }
        }
        Command::Geo { graph, action } => geo(&load_graph(&graph)?, action, out),
        Command::Z2Verify { input, radius } => match z2_bounded_verify(&load(&input)?, radius)? {
            Z2Check::Pass => {
                writeln!(out, "pass")?;
                Ok(EXIT_OK)
            }
            Z2Check::Fail { point: (n, m), represented } => {
                let why = if represented { "represented but not positive" } else { "positive but not represented" };
                writeln!(out, "fail at ({n}, {m}): {why}")?;
                Ok(EXIT_NO)
            }
        },
        Command::And { a, b, output } => emit(out, &automata::intersect(&load(&a)?, &load(&b)?)?, output),
        Command::Or { a, b, output } => emit(out, &automata::union(&load(&a)?, &load(&b)?)?, output),
        Command::Not { a, output } => emit(out, &automata::complement(&load(&a)?, None)?, output),
        Command::Cat { a, b, output } => emit(out, &automata::concat(&load(&a)?, &load(&b)?)?, output),
        Command::Star { a, output } => emit(out, &automata::star(&load(&a)?), output),
        Command::Rev { a, output } => emit(out, &automata::reverse(&load(&a)?), output),
        Command::Pref { a, output } => emit(out, &automata::prefix_closure(&load(&a)?), output),
        Command::Eq { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            match a.distinguishing_word(&b)? {
                None => {
                    writeln!(out, "true")?;
                    Ok(EXIT_OK)
                }
                Some(w) => {
                    writeln!(out, "false")?;
                    writeln!(out, "distinguishing: {}", a.alphabet().format_word(&w))?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Enum { a, max_len } => {
            let a = load(&a)?;
            for w in a.enumerate(max_len) {
                writeln!(out, "{}", a.alphabet().format_word(&w))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn geo(g: &GraphPresentation, action: GeoAction, out: &mut dyn Write) -> Result<i32> {
    let group = g.group();
    match action {
        GeoAction::Check { word } => {
            let geodesic = g.is_geodesic(&group.parse_word(&word)?);
            writeln!(out, "{geodesic}")?;
            Ok(if geodesic { EXIT_OK } else { EXIT_NO })
        }
        GeoAction::Build { output } => {
            let a = g.geo_automaton()?;
            save(&output, &a)?;
            writeln!(out, "states: {}", a.state_count())?;
            Ok(EXIT_OK)
        }
        GeoAction::Witness { word, t, u, x, y } => {
            let w = group.parse_word(&word)?;
            let p = g.witness_pair_named(&w, &t, &u, &x, &y)?;
            let names = g.vertex_names();
            writeln!(out, "orientation: t={} u={} x={} y={}", names[p.t], names[p.u], group.alphabet().name(p.x), group.alphabet().name(p.y))?;
            writeln!(out, "first: {}", group.format(&p.first))?;
            writeln!(out, "first geodesic: {}", p.first_geodesic)?;
            writeln!(out, "second: {}", group.format(&p.second))?;
            writeln!(out, "second geodesic: {}", p.second_geodesic)?;
            let inverse = match g.cancel_commuting(&p.first.concat(&p.second))? {
                Some(rest) => rest.is_empty().to_string(),
                None => "not checked".to_string(),
            };
            writeln!(out, "mutually inverse: {inverse}")?;
            Ok(if p.first_geodesic && p.second_geodesic { EXIT_OK } else { EXIT_NO })
        }
    }
}
