use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use iwforms_core::formspace::Quadric;
use iwforms_core::{MPoly, Rational};
use iwforms_dsl::exec::Status;
use iwforms_dsl::{Outcome, Query, QueryResult};

/// Bumped whenever the JSON layout of [`Report`] changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Tool {
    pub fn current() -> Self {
        Tool {
            name: "iwforms",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

/// Deterministic for a fixed input: no clocks, no paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: Tool,
    pub input_digest: String,
    pub results: Vec<QueryResult>,
}

/// What `--json` prints.
#[derive(Serialize)]
pub struct Envelope<'a> {
    pub report: &'a Report,
    pub timing_ms: u64,
}

pub fn digest(source: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(source.as_bytes())))
}

impl Report {
    /// Runs the queries concurrently; results keep the given order.
    pub fn run(source: &str, queries: &[Query]) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: Tool::current(),
            input_digest: digest(source),
            results: queries.par_iter().map(Query::evaluate).collect(),
        }
    }

    /// 2 if a query could not be carried out, else 1 if a verdict differs
    /// from its expectation, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.results.iter().any(|r| r.status == Status::Error) {
            2
        } else if self.results.iter().any(|r| r.status == Status::Mismatch) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self, timing_ms: u64) -> String {
        let env = Envelope {
            report: self,
            timing_ms,
        };
        serde_json::to_string_pretty(&env).expect("report serializes") + "\n"
    }

    pub fn render_text(&self, timing_ms: u64) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}  input {}", self.tool.name, self.tool.version, self.input_digest);
        for r in &self.results {
            let tag = match r.status {
                Status::Ok => "ok",
                Status::Mismatch => "MISMATCH",
                Status::Error => "ERROR",
            };
            let _ = writeln!(out, "[{tag}] line {}: {}", r.line, r.query);
            if let Some(e) = &r.error {
                let _ = writeln!(out, "    {e}");
            }
            if let Some(o) = &r.outcome {
                render_outcome(&mut out, o, r.expected);
            }
        }
        let count = |s| self.results.iter().filter(|r| r.status == s).count();
        let total = self.results.len();
        let _ = writeln!(
            out,
            "{total} {}: {} ok, {} mismatched, {} failed ({timing_ms} ms)",
            if total == 1 { "query" } else { "queries" },
            count(Status::Ok),
            count(Status::Mismatch),
            count(Status::Error),
        );
        out
    }
}

fn render_outcome(out: &mut String, o: &Outcome, expected: Option<bool>) {
    let verdict = |v: bool| match expected {
        Some(e) => format!("{v} (expected {e})"),
        None => v.to_string(),
    };
    match o {
        Outcome::Verdict { value } => {
            let _ = writeln!(out, "    verdict: {}", verdict(*value));
        }
        Outcome::Integer { value } => {
            let _ = writeln!(out, "    value: {value}");
        }
        Outcome::Quadrics { system } => {
            let _ = writeln!(
                out,
                "    {} quadric(s) in projective coordinates x0..x{}",
                system.len(),
                system.dim.saturating_sub(1)
            );
            for q in &system.quadrics {
                let _ = writeln!(out, "      {} = 0", quadratic_form(q));
            }
        }
        Outcome::Curve { curve, rnc } | Outcome::VeroneseWeb { curve, rnc, .. } => {
            if let Outcome::VeroneseWeb { contained, .. } = o {
                let _ = writeln!(out, "    contained in I_W: {}", verdict(*contained));
            }
            let _ = writeln!(
                out,
                "    curve of degree {} spanning a P^{}{}",
                rnc.degree,
                rnc.span_dim,
                if rnc.is_rnc { ", rational normal curve" } else { "" }
            );
            for (i, c) in curve.components().iter().enumerate() {
                let _ = writeln!(out, "      C{i}(s, t) = {c}");
            }
        }
        Outcome::Stats { stats } => {
            let _ = writeln!(
                out,
                "    n = {}, d = {}: N_d = {}, codimension {}, degree {}",
                stats.n, stats.d, stats.n_d, stats.codimension, stats.degree
            );
        }
    }
}

fn quadratic_form(q: &Quadric) -> MPoly {
    let m = q.matrix.len();
    let two = Rational::from_integer(2.into());
    let mut terms = Vec::new();
    for i in 0..m {
        for j in i..m {
            let mut e = vec![0u32; m];
            e[i] += 1;
            e[j] += 1;
            let c = if i == j { q.matrix[i][j].clone() } else { &q.matrix[i][j] * &two };
            terms.push((e, c));
        }
    }
    MPoly::from_terms(m, terms).expect("exponents match")
}
