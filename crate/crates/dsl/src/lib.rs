//! A small scenario language for the `iwforms` toolkit.
//!
//! A scenario declares the number of variables, binds names to polynomials,
//! forms, spaces of forms, point sets, Lie algebras and Godbillon–Vey
//! sequences, and lists queries to run against them:
//!
//! ```text
//! ambient 3;
//! w = (2 + 3*x0)*d(x1);
//! is_integrable(w);
//! ```
//!
//! [`parse`] produces an [`Ast`], [`elaborate`] evaluates it into a typed
//! [`Session`], and [`Query::run`] executes a single query.

pub mod ast;
pub mod diag;
pub mod elaborate;
pub mod exec;
pub mod lexer;
pub mod parser;
pub mod pretty;

pub use ast::{Ast, Expr, Stmt};
pub use diag::{Diagnostic, Phase, Span};
pub use elaborate::{elaborate, Query, QueryOp, Session, Value};
pub use exec::{Outcome, QueryResult};
pub use parser::{parse, parse_expr};
pub use pretty::{pretty, pretty_expr};

/// Parses and elaborates in one step.
pub fn load(src: &str) -> Result<Session, Diagnostic> {
    elaborate(&parse(src)?)
}
