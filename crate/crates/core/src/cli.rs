//! The command dispatcher behind the `bang` binary.
//!
//! Exit statuses: 0 on success, 1 on term or flag errors, 2 when a suite
//! reports failures, 3 when only inconclusive cases block a verdict.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::props::{run_suite, GenSpec, SuiteId};
use crate::redex::{enumerate_redexes, least_level};
use crate::reduction::{format_trace, reachable_graph, reduce_seeded, ReduceOutcome, Strategy, DEFAULT_CAP};
use crate::syntax::{parse_with, validate, Calculus, CalculusProfile, Term};
use crate::translate::{cbn_inverse, forgetful, translate, translate_context, Mode};

#[derive(Debug, Parser)]
#[command(name = "bang", version, about = "Rewriting workbench for the bang calculus and the CbN/CbV λ-calculi")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a term and print it back in surface syntax.
    Parse(TermArgs),
    /// Reduce a term with a strategy.
    Reduce {
        #[command(flatten)]
        input: TermArgs,
        #[arg(long, value_enum, default_value_t = StrategyArg::Ll)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 100)]
        fuel: usize,
        /// Pick operator contractions at random.
        #[arg(long)]
        seed: Option<u64>,
        /// Print every step.
        #[arg(long)]
        trace: bool,
    },
    /// Translate a λ-term (or a one-hole context) into the bang calculus, or back.
    Translate {
        /// The λ-term; read from standard input when absent.
        term: Option<String>,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Apply the left inverse of the chosen translation.
        #[arg(long, conflicts_with = "forget")]
        inverse: bool,
        /// Apply the forgetful map.
        #[arg(long)]
        forget: bool,
    },
    /// Print the least level of a term.
    Ll(TermArgs),
    /// List the redex occurrences of a term.
    Redexes(TermArgs),
    /// Build the bounded reduction graph of a term.
    Graph {
        #[command(flatten)]
        input: TermArgs,
        #[arg(long, default_value_t = 25)]
        fuel: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write the graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run a property suite on generated terms.
    Check {
        /// Suite name; `modular:OP` and `postponement:E,I` take arguments.
        suite: String,
        #[arg(long, value_enum, default_value_t = CalculusArg::Bang)]
        calculus: CalculusArg,
        #[arg(long, value_enum, default_value_t = OpsArg::Oplus)]
        ops: OpsArg,
        /// Maximal term size.
        #[arg(long, default_value_t = 5)]
        size: usize,
        /// Draw this many random terms instead of enumerating.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        fuel: usize,
        #[arg(long, default_value_t = 500)]
        cap: usize,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct TermArgs {
    /// The term; read from standard input when absent.
    pub term: Option<String>,
    #[arg(long, value_enum, default_value_t = CalculusArg::Bang)]
    pub calculus: CalculusArg,
    #[arg(long, value_enum, default_value_t = OpsArg::Oplus)]
    pub ops: OpsArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CalculusArg {
    Cbn,
    Cbv,
    Bang,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpsArg {
    /// `⊕` is syntax only.
    None,
    Oplus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    #[value(alias = "least-level")]
    Ll,
    #[value(alias = "leftmost-outermost")]
    Lo,
    Surface,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Cbn,
    Cbv,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Ll => Strategy::LeastLevel,
            StrategyArg::Lo => Strategy::LeftmostOutermost,
            StrategyArg::Surface => Strategy::SurfaceFirst,
            StrategyArg::Full => Strategy::FullLeftmost,
        }
    }
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Cbn => Mode::CbN,
            ModeArg::Cbv => Mode::CbV,
        }
    }
}

pub fn profile_of(calculus: CalculusArg, ops: OpsArg) -> CalculusProfile {
    let calculus = match calculus {
        CalculusArg::Cbn => Calculus::CbN,
        CalculusArg::Cbv => Calculus::CbV,
        CalculusArg::Bang => Calculus::Bang,
    };
    let p = CalculusProfile::with_oplus(calculus);
    match ops {
        OpsArg::None => p.without_op_rules(),
        OpsArg::Oplus => p,
    }
}

/// Exit status and the text for both output streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Outcome {
        Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Runs `cmd`; `stdin` supplies the term when no positional one is given.
pub fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Outcome {
    run(cmd, stdin).unwrap_or_else(|e| Outcome::error(&e))
}

fn read_term(arg: Option<String>, stdin: &mut dyn Read) -> Result<String> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Io(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn load(input: TermArgs, stdin: &mut dyn Read) -> Result<(Term, CalculusProfile)> {
    let profile = profile_of(input.calculus, input.ops);
    let src = read_term(input.term, stdin)?;
    let t = parse_with(src.trim(), profile.registry())?;
    validate(&t, &profile).map_err(|violations| Error::Invalid {
        profile: profile.to_string(),
        violations,
    })?;
    Ok((t, profile))
}

fn write_file(path: &FsPath, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

fn run(cmd: Command, stdin: &mut dyn Read) -> Result<Outcome> {
    match cmd {
        Command::Parse(input) => {
            let (t, _) = load(input, stdin)?;
            Ok(Outcome::ok(format!("{t}\n")))
        }
        Command::Reduce {
            input,
            strategy,
            fuel,
            seed,
            trace,
        } => {
            let (t, profile) = load(input, stdin)?;
            let outcome = reduce_seeded(&t, &profile, strategy.into(), fuel, seed)?;
            let mut out = String::new();
            if trace {
                out.push_str(&format_trace(outcome.trace())?);
            }
            let steps = outcome.trace().len();
            let _ = writeln!(out, "result: {}", outcome.term());
            match &outcome {
                ReduceOutcome::NormalForm { .. } => {
                    let _ = writeln!(out, "status: normal-form steps={steps}");
                }
                ReduceOutcome::FuelExhausted { cycle_detected, .. } => {
                    let _ = writeln!(
                        out,
                        "status: fuel-exhausted steps={steps} cycle={cycle_detected} distinct={}",
                        outcome.distinct_states()
                    );
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Translate {
            term,
            mode,
            inverse,
            forget,
        } => {
            let src = read_term(term, stdin)?;
            let t = parse_with(src.trim(), CalculusProfile::bang().registry())?;
            let mode = Mode::from(mode);
            let out = if forget || (inverse && mode == Mode::CbV) {
                forgetful(&t)?
            } else if inverse {
                cbn_inverse(&t)?
            } else if t.hole_count() > 0 {
                translate_context(&t, mode)?
            } else {
                translate(&t, mode)?
            };
            Ok(Outcome::ok(format!("{out}\n")))
        }
        Command::Ll(input) => {
            let (t, profile) = load(input, stdin)?;
            Ok(Outcome::ok(format!("{}\n", least_level(&t, &profile))))
        }
        Command::Redexes(input) => {
            let (t, profile) = load(input, stdin)?;
            let mut out = String::new();
            for r in enumerate_redexes(&t, &profile)? {
                let _ = write!(out, "{} {} {}", r.path, r.rule, r.level);
                out.push_str(if r.is_d { " d\n" } else { "\n" });
            }
            Ok(Outcome::ok(out))
        }
        Command::Graph { input, fuel, cap, dot } => {
            let (t, profile) = load(input, stdin)?;
            let g = reachable_graph(&t, &profile, fuel, cap)?;
            if let Some(path) = dot {
                write_file(&path, &g.to_dot())?;
            }
            let mut out = format!(
                "nodes={} edges={} truncated={}\n",
                g.node_count(),
                g.edges.len(),
                g.truncated
            );
            for i in g.normal_forms() {
                let _ = writeln!(out, "normal: {}", g.nodes[i]);
            }
            Ok(Outcome::ok(out))
        }
        Command::Check {
            suite,
            calculus,
            ops,
            size,
            count,
            seed,
            fuel,
            cap,
            out,
        } => {
            let suite: SuiteId = suite.parse()?;
            let profile = profile_of(calculus, ops);
            let spec = match count {
                Some(count) => GenSpec::random(profile, count, size, seed),
                None => GenSpec::exhaustive(profile, size),
            };
            let report = run_suite(&suite, &spec, fuel, cap)?;
            let text = report.render();
            if let Some(path) = out {
                write_file(&path, &text)?;
            }
            Ok(Outcome {
                code: report.exit_code() as u8,
                stdout: text,
                stderr: String::new(),
            })
        }
    }
}
