//! Command-line front end. Every command prints a single JSON object except
//! `gen-w`, which prints the word as a token line.

use std::fs;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::automaton::Automaton;
use crate::decision::{self, DecisionOptions, DecisionReport, Strategy};
use crate::error::Error;
use crate::format::{parse_automaton, serialize_automaton, word_to_json};
use crate::ops::{self, DEFAULT_MAX_SUBSETS};
use crate::reductions::{cnf_to_rponfa, dtm_to_ponfa, parse_dimacs, Dtm};
use crate::triviality::{self, TrivialityOptions};
use crate::word::Word;
use crate::{dre, extremal};

#[derive(Parser, Debug)]
#[command(name = "ponfa", version, about = "Partially ordered automata toolkit")]
struct Cli {
    /// Cap on subsets or search nodes explored.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SUBSETS)]
    max_subsets: usize,
    /// Largest representative length the bounded strategy accepts.
    #[arg(long, global = true, default_value_t = 64)]
    max_bound: u128,
    /// Add wall time in milliseconds to the stats.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report the automaton class and structural flags.
    Classify { file: String },
    /// Decide L(F) = Σ*.
    Universal {
        file: String,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
    },
    /// Decide L(F) ⊆ L(G).
    Include {
        left: String,
        right: String,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
    },
    /// Decide L(F) = L(G).
    Equal {
        left: String,
        right: String,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
    },
    /// R-triviality, or k-R-triviality with --k.
    Rtrivial {
        file: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print the extremal word W_{k,n}.
    GenW { k: usize, n: usize },
    /// Print the automaton A_{k,n} rejecting exactly W_{k,n}.
    GenA { k: usize, n: usize },
    /// Print the rpoNFA of a DIMACS formula.
    ReduceCnf { file: String },
    /// Print the poNFA of a machine and its input.
    ReduceTm { machine: String, input: String },
    /// Decide definability by a deterministic regular expression.
    Dre { file: String },
    /// Check the extremal construction for one (k, n).
    VerifyExtremal {
        k: usize,
        n: usize,
        /// Also minimize the determinized automaton.
        #[arg(long)]
        minimize: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs one command; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => CommandOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => CommandOutput {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Lib(e)) => CommandOutput {
            code: if e.is_capacity() || matches!(e, Error::Internal(_)) { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &str) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

fn load(path: &str) -> std::result::Result<Automaton, Failure> {
    parse_automaton(&read(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn internal(command: &str) -> Failure {
    Failure::Lib(Error::Internal(format!("{command} produced a witness that does not validate")))
}

fn witness_json(w: &Option<Word>, a: &Automaton) -> Value {
    w.as_ref().map_or(Value::Null, |w| word_to_json(w, a.alphabet()))
}

fn report_stats(r: &DecisionReport) -> Value {
    let mut stats = serde_json::to_value(&r.stats).expect("stats serialize");
    stats["strategy"] = json!(r.strategy.to_string());
    stats
}

fn emit(result: Value, witness: Value, mut stats: Value, started: Option<Instant>) -> String {
    if let Some(t) = started {
        stats["wall_ms"] = json!(t.elapsed().as_secs_f64() * 1000.0);
    }
    let mut s = json!({"result": result, "witness": witness, "stats": stats}).to_string();
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> Outcome {
    let started = cli.timing.then(Instant::now);
    let opts = DecisionOptions {
        max_subsets: cli.max_subsets,
        bound_budget: cli.max_bound,
        ..DecisionOptions::default()
    };
    match &cli.command {
        Command::Classify { file } => {
            let a = load(file)?;
            let c = a.classify();
            let stats = json!({
                "states": a.state_count(),
                "symbols": a.alphabet_size(),
                "complete": c.is_complete,
                "deterministic": c.is_deterministic,
                "partially_ordered": c.is_partially_ordered,
                "self_loop_deterministic": c.is_self_loop_deterministic,
                "depth": a.depth().ok(),
            });
            Ok(emit(json!(c.class.as_str()), Value::Null, stats, started))
        }
        Command::Universal { file, strategy } => {
            let a = load(file)?;
            let r = decision::is_universal(&a, *strategy, opts)?;
            if let Some(w) = &r.decision.witness {
                if a.accepts(w)? {
                    return Err(internal("universal"));
                }
            }
            Ok(emit(json!(r.decision.holds), witness_json(&r.decision.witness, &a), report_stats(&r), started))
        }
        Command::Include { left, right, strategy } => {
            let (a, b) = (load(left)?, load(right)?);
            let r = decision::includes(&a, &b, *strategy, opts)?;
            if let Some(w) = &r.decision.witness {
                let b = b.aligned_to(a.alphabet())?;
                if !a.accepts(w)? || b.accepts(w)? {
                    return Err(internal("include"));
                }
            }
            Ok(emit(json!(r.decision.holds), witness_json(&r.decision.witness, &a), report_stats(&r), started))
        }
        Command::Equal { left, right, strategy } => {
            let (a, b) = (load(left)?, load(right)?);
            let r = decision::equivalent(&a, &b, *strategy, opts)?;
            if let Some(w) = &r.decision.witness {
                let b = b.aligned_to(a.alphabet())?;
                if a.accepts(w)? == b.accepts(w)? {
                    return Err(internal("equal"));
                }
            }
            let stats = json!({
                "direction": r.direction,
                "left": report_stats(&r.left),
                "right": report_stats(&r.right),
            });
            Ok(emit(json!(r.decision.holds), witness_json(&r.decision.witness, &a), stats, started))
        }
        Command::Rtrivial { file, k } => {
            let a = load(file)?;
            let tr_opts = TrivialityOptions {
                max_subsets: cli.max_subsets,
                ..TrivialityOptions::default()
            };
            let v = match k {
                Some(k) => triviality::is_k_r_trivial(&a, *k, tr_opts)?,
                None => triviality::is_r_trivial(&a, cli.max_subsets)?,
            };
            let mut stats = json!({
                "k": v.k_used,
                "representatives_tested": v.representatives_tested,
            });
            let witness = if let Some(s) = &v.split_class {
                if !a.accepts(&s.member_in)? || a.accepts(&s.member_out)? {
                    return Err(internal("rtrivial"));
                }
                stats["member_in"] = word_to_json(&s.member_in, a.alphabet());
                stats["member_out"] = word_to_json(&s.member_out, a.alphabet());
                Some(s.representative.clone())
            } else if let Some(c) = &v.cycle {
                stats["cycle_prefix"] = word_to_json(&c.prefix, a.alphabet());
                stats["cycle"] = word_to_json(&c.cycle, a.alphabet());
                Some(c.prefix.concat(&c.cycle))
            } else {
                None
            };
            Ok(emit(json!(v.holds), witness_json(&witness, &a), stats, started))
        }
        Command::GenW { k, n } => {
            let w = extremal::build_w(*k, *n)?;
            let tokens = extremal::symbol_tokens(*n);
            let mut line = w.tokens(&tokens).join(" ");
            line.push('\n');
            Ok(line)
        }
        Command::GenA { k, n } => Ok(serialize_automaton(&extremal::build_a(*k, *n)?)),
        Command::ReduceCnf { file } => {
            let f = parse_dimacs(&read(file)?).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
            Ok(serialize_automaton(&cnf_to_rponfa(&f)?))
        }
        Command::ReduceTm { machine, input } => {
            let m = Dtm::parse(&read(machine)?).map_err(|e| Failure::Usage(format!("{machine}: {e}")))?;
            let x = m.parse_input(input)?;
            Ok(serialize_automaton(&dtm_to_ponfa(&m, &x)?))
        }
        Command::Dre { file } => {
            let a = load(file)?;
            let holds = dre::is_dre_definable_capped(&a, cli.max_subsets)?;
            let m = ops::minimal_dfa(&a, cli.max_subsets)?;
            let dec = dre::orbits(&m)?;
            let stats = json!({
                "minimal_states": m.state_count(),
                "orbits": dec.orbits.len(),
                "orbit_property": dre::has_orbit_property(&m)?,
            });
            Ok(emit(json!(holds), Value::Null, stats, started))
        }
        Command::VerifyExtremal { k, n, minimize } => {
            let r = extremal::verify_extremal(*k, *n, *minimize, cli.max_subsets)?;
            let stats = serde_json::to_value(&r).expect("report serializes");
            Ok(emit(json!(r.passed()), Value::Null, stats, started))
        }
    }
}
