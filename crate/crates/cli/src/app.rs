use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use iwforms_dsl::{load, Session, Value};

use crate::demos;
use crate::report::Report;

#[derive(Debug, Parser)]
#[command(name = "iwforms", version, about = "Exact checks on spaces of integrable 1-forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every query in a scenario file.
    Check(Input),
    /// Rank of each form space.
    Rank(Input),
    /// Quadrics cutting out the integrable classes of each form space.
    Quadrics(Input),
    /// Rational normal curves through point sets.
    Steiner(Input),
    /// Curves through integrable forms, and whether they stay integrable.
    VeroneseWeb(Input),
    /// Jacobi identity and integrable left-invariant forms.
    Lie(Input),
    /// Godbillon-Vey sequences.
    Gv(Input),
    /// Codimension and degree of the pencil component R_n(d, d).
    Stats {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Run a built-in example.
    Demo {
        name: Option<String>,
        /// Member of a family of examples.
        #[arg(long)]
        n: Option<usize>,
        /// List the available demos.
        #[arg(long)]
        list: bool,
        /// Print the scenario source instead of running it.
        #[arg(long)]
        source: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Scenario file.
    #[arg(long, short, value_name = "FILE")]
    pub input: PathBuf,
}

/// Rendered output and the process exit status.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

/// Bad input: unreadable files, diagnostics, unknown demos. Exit status 2.
#[derive(Debug, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Query kinds a subcommand runs, and the queries it derives from a binding
/// when the file has none of those kinds.
pub struct Selection {
    pub kinds: &'static [&'static str],
    pub derive: fn(&str, &Value) -> Vec<String>,
}

fn selection(cmd: &Command) -> Option<Selection> {
    let s = match cmd {
        Command::Rank(_) => Selection {
            kinds: &["rank"],
            derive: |n, v| match v {
                Value::Space(_) => vec![format!("rank({n});")],
                _ => vec![],
            },
        },
        Command::Quadrics(_) => Selection {
            kinds: &["quadrics"],
            derive: |n, v| match v {
                Value::Space(_) => vec![format!("quadrics({n});")],
                _ => vec![],
            },
        },
        Command::Steiner(_) => Selection {
            kinds: &["steiner", "general_position"],
            derive: |n, v| match v {
                Value::Points(_) => vec![format!("steiner({n});")],
                _ => vec![],
            },
        },
        Command::VeroneseWeb(_) => Selection {
            kinds: &["veronese_web"],
            derive: |_, _| vec![],
        },
        Command::Lie(_) => Selection {
            kinds: &["jacobi", "lie_iw", "integrable_at"],
            derive: |n, v| match v {
                Value::Lie(_) => vec![format!("jacobi({n});"), format!("lie_iw({n});")],
                _ => vec![],
            },
        },
        Command::Gv(_) => Selection {
            kinds: &["is_gv", "gv_curve", "high_wedge"],
            derive: |n, v| match v {
                Value::Seq(_) => vec![format!("is_gv({n});")],
                _ => vec![],
            },
        },
        _ => return None,
    };
    Some(s)
}

fn diagnose(origin: &str, src: &str) -> Result<Session, InputError> {
    load(src).map_err(|d| InputError(format!("{origin}:{d}")))
}

/// Parses, selects and runs the queries of a scenario.
pub fn run_scenario(
    origin: &str,
    src: &str,
    selection: Option<&Selection>,
) -> Result<Report, InputError> {
    let session = diagnose(origin, src)?;
    let Some(&Selection { kinds, derive }) = selection else {
        return Ok(Report::run(src, &session.queries));
    };
    let pick = |s: &Session| {
        s.queries
            .iter()
            .filter(|q| kinds.contains(&q.op.name()))
            .cloned()
            .collect::<Vec<_>>()
    };
    let mut queries = pick(&session);
    if queries.is_empty() {
        let extra: Vec<String> = session
            .bindings
            .iter()
            .flat_map(|(n, v)| derive(n, v))
            .collect();
        if extra.is_empty() {
            return Err(InputError(format!(
                "{origin}: nothing to run; expected a {} query",
                kinds.join(" or ")
            )));
        }
        let augmented = format!("{src}\n{}\n", extra.join("\n"));
        queries = pick(&diagnose(origin, &augmented)?);
    }
    Ok(Report::run(src, &queries))
}

/// Carries out a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, InputError> {
    let start = Instant::now();
    let report = match &cli.command {
        Command::Stats { n, d } => run_scenario("stats", &format!("stats({n}, {d});\n"), None)?,
        Command::Demo {
            name,
            n,
            list,
            source,
        } => {
            if *list {
                let text = demos::DEMOS
                    .iter()
                    .map(|d| format!("{:<14} {}\n", d.name, d.summary))
                    .collect();
                return Ok(Outcome { text, code: 0 });
            }
            let name = name
                .as_deref()
                .ok_or_else(|| InputError("demo needs a NAME; try `demo --list`".into()))?;
            let src = demos::source(name, *n).map_err(InputError)?;
            if *source {
                return Ok(Outcome { text: src, code: 0 });
            }
            run_scenario(name, &src, None)?
        }
        Command::Check(input)
        | Command::Rank(input)
        | Command::Quadrics(input)
        | Command::Steiner(input)
        | Command::VeroneseWeb(input)
        | Command::Lie(input)
        | Command::Gv(input) => {
            let origin = input.input.display().to_string();
            let src = std::fs::read_to_string(&input.input)
                .map_err(|e| InputError(format!("{origin}: cannot read: {e}")))?;
            run_scenario(&origin, &src, selection(&cli.command).as_ref())?
        }
    };
    let timing_ms = start.elapsed().as_millis() as u64;
    let text = if cli.json {
        report.to_json(timing_ms)
    } else {
        report.render_text(timing_ms)
    };
    Ok(Outcome {
        text,
        code: report.exit_code(),
    })
}
