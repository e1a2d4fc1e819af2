use std::collections::HashSet;

use num_traits::ToPrimitive;

use crate::ast::{Ast, BinOp, Expr, ExprKind, Stmt, StmtKind};
use crate::diag::{Diagnostic, Phase, Span};
use crate::lexer::{lex, Tok, Token};

const EXPR_START: &[&str] = &["integer", "variable", "name", "`d(`", "`(`", "`[`", "`-`"];

/// Parses a scenario. Duplicate bindings, a repeated or late `ambient`
/// declaration, and variable indices outside the declared ambient dimension
/// are reported here with their source position.
pub fn parse(src: &str) -> Result<Ast, Diagnostic> {
    let tokens = lex(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ambient: None,
        names: HashSet::new(),
        seen_expr: false,
        standalone: false,
    };
    let mut statements = Vec::new();
    while p.peek() != &Tok::Eof {
        statements.push(p.statement()?);
    }
    Ok(Ast { statements })
}

/// Parses a single expression, with no ambient bound on variable indices.
pub fn parse_expr(src: &str) -> Result<Expr, Diagnostic> {
    let tokens = lex(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ambient: None,
        names: HashSet::new(),
        seen_expr: false,
        standalone: true,
    };
    let e = p.expr()?;
    p.expect(Tok::Eof, &["end of input"])?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    ambient: Option<usize>,
    names: HashSet<String>,
    /// Whether a variable or `d(..)` has appeared yet.
    seen_expr: bool,
    /// Parsing a lone expression: variables need no ambient declaration.
    standalone: bool,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn span(&self) -> Span {
        self.tokens[self.pos].span
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>, expected: &[&str]) -> Diagnostic {
        Diagnostic::new(Phase::Parse, self.span(), message).expecting(expected)
    }

    fn unexpected(&self, expected: &[&str]) -> Diagnostic {
        self.error(format!("unexpected {}", self.peek().describe()), expected)
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<Token, Diagnostic> {
        if *self.peek() == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn statement(&mut self) -> Result<Stmt, Diagnostic> {
        let span = self.span();
        let Tok::Ident(name) = self.peek().clone() else {
            return Err(self.unexpected(&["`ambient`", "name", "query"]));
        };
        if name == "ambient" && matches!(self.peek_at(1), Tok::Int(_)) {
            self.bump();
            let t = self.bump();
            let Tok::Int(n) = t.tok else { unreachable!() };
            let n = n
                .to_usize()
                .filter(|n| (1..=64).contains(n))
                .ok_or_else(|| Diagnostic::new(Phase::Parse, t.span, "ambient dimension must be between 1 and 64"))?;
            if self.ambient.is_some() {
                return Err(Diagnostic::new(Phase::Parse, span, "ambient dimension declared twice"));
            }
            if self.seen_expr {
                return Err(Diagnostic::new(
                    Phase::Parse,
                    span,
                    "ambient dimension must be declared before any variable or form",
                ));
            }
            self.ambient = Some(n);
            self.expect(Tok::Semi, &["`;`"])?;
            return Ok(Stmt {
                kind: StmtKind::Ambient(n),
                span,
            });
        }
        self.bump();
        match self.peek() {
            Tok::Assign => {
                if is_reserved(&name) {
                    return Err(Diagnostic::new(
                        Phase::Parse,
                        span,
                        format!("`{name}` is reserved and cannot be bound"),
                    ));
                }
                if !self.names.insert(name.clone()) {
                    return Err(Diagnostic::new(
                        Phase::Parse,
                        span,
                        format!("duplicate binding `{name}`"),
                    ));
                }
                self.bump();
                let value = self.expr()?;
                self.expect(Tok::Semi, &["`;`", "operator"])?;
                Ok(Stmt {
                    kind: StmtKind::Bind(name, value),
                    span,
                })
            }
            Tok::LParen => {
                self.bump();
                let args = self.args(Tok::RParen)?;
                let expect = if *self.peek() == Tok::EqEq {
                    self.bump();
                    match self.peek() {
                        Tok::Ident(w) if w == "true" || w == "false" => {
                            let v = w == "true";
                            self.bump();
                            Some(v)
                        }
                        _ => return Err(self.unexpected(&["`true`", "`false`"])),
                    }
                } else {
                    None
                };
                self.expect(Tok::Semi, &["`;`", "`==`"])?;
                Ok(Stmt {
                    kind: StmtKind::Query { name, args, expect },
                    span,
                })
            }
            _ => Err(self.unexpected(&["`=`", "`(`"])),
        }
    }

    /// Comma-separated arguments up to `close`, which is consumed.
    fn args(&mut self, close: Tok) -> Result<Vec<Expr>, Diagnostic> {
        let closing = if close == Tok::RParen { "`)`" } else { "`]`" };
        let mut out = Vec::new();
        if *self.peek() == close {
            self.bump();
            return Ok(out);
        }
        loop {
            let e = self.expr()?;
            let e = if *self.peek() == Tok::Arrow && close == Tok::RParen {
                let span = e.span;
                self.bump();
                let v = self.expr()?;
                Expr::new(ExprKind::Arrow(Box::new(e), Box::new(v)), span)
            } else {
                e
            };
            out.push(e);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                t if *t == close => {
                    self.bump();
                    return Ok(out);
                }
                _ => return Err(self.unexpected(&["`,`", closing, "operator"])),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, Diagnostic> {
        self.binary(1)
    }

    /// Precedence climbing over the left-associative binary operators.
    fn binary(&mut self, min_prec: u8) -> Result<Expr, Diagnostic> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                Tok::Wedge => BinOp::Wedge,
                _ => return Ok(lhs),
            };
            let prec = op.precedence();
            if prec < min_prec {
                return Ok(lhs);
            }
            let span = self.span();
            self.bump();
            let rhs = self.binary(prec + 1)?;
            lhs = Expr::new(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span);
        }
    }

    /// Unary minus binds tighter than `*` but looser than `^`.
    fn unary(&mut self) -> Result<Expr, Diagnostic> {
        if *self.peek() == Tok::Minus {
            let span = self.span();
            self.bump();
            let inner = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), span));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, Diagnostic> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let span = self.span();
        self.bump();
        let t = self.bump();
        let Tok::Int(e) = t.tok else {
            return Err(Diagnostic::new(Phase::Parse, t.span, format!("unexpected {}", t.tok.describe()))
                .expecting(&["integer exponent"]));
        };
        let e = e
            .to_u32()
            .filter(|&e| e <= 1000)
            .ok_or_else(|| Diagnostic::new(Phase::Parse, t.span, "exponent too large"))?;
        if *self.peek() == Tok::Caret {
            return Err(self.error("exponentiation does not chain; add parentheses", &[]));
        }
        Ok(Expr::new(ExprKind::Pow(Box::new(base), e), span))
    }

    fn atom(&mut self) -> Result<Expr, Diagnostic> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::new(ExprKind::Int(n), span))
            }
            Tok::Var(k) => {
                self.seen_expr = true;
                if let Some(n) = self.ambient {
                    if k >= n {
                        return Err(Diagnostic::new(
                            Phase::Parse,
                            span,
                            format!("variable x{k} is outside the ambient dimension {n}"),
                        ));
                    }
                } else if !self.standalone {
                    return Err(Diagnostic::new(
                        Phase::Parse,
                        span,
                        "declare `ambient N;` before using variables",
                    ));
                }
                self.bump();
                Ok(Expr::new(ExprKind::Var(k), span))
            }
            Tok::Z => {
                self.seen_expr = true;
                self.bump();
                Ok(Expr::new(ExprKind::Z, span))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, &["`)`", "operator"])?;
                Ok(e)
            }
            Tok::LBracket => {
                self.bump();
                let items = self.args(Tok::RBracket)?;
                Ok(Expr::new(ExprKind::List(items), span))
            }
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() != Tok::LParen {
                    if is_reserved(&name) {
                        return Err(Diagnostic::new(
                            Phase::Parse,
                            span,
                            format!("`{name}` cannot be used as a value"),
                        ));
                    }
                    return Ok(Expr::new(ExprKind::Name(name), span));
                }
                self.bump();
                if name == "d" {
                    self.seen_expr = true;
                    let inner = self.expr()?;
                    self.expect(Tok::RParen, &["`)`", "operator"])?;
                    return Ok(Expr::new(ExprKind::D(Box::new(inner)), span));
                }
                let args = self.args(Tok::RParen)?;
                Ok(Expr::new(ExprKind::Call(name, args), span))
            }
            _ => Err(self.error(
                format!("expected an expression, found {}", self.peek().describe()),
                EXPR_START,
            )),
        }
    }
}

fn is_reserved(name: &str) -> bool {
    matches!(name, "ambient" | "d" | "true" | "false")
}
