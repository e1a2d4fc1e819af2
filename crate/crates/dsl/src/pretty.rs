//! Canonical text form of a parsed scenario. Printing, parsing and printing
//! again reproduces the same text.

use std::fmt::Write;

use crate::ast::{Ast, BinOp, Expr, ExprKind, Stmt, StmtKind};

const UNARY: u8 = 4;
const POWER: u8 = 5;
const ATOM: u8 = 6;

fn precedence(e: &Expr) -> u8 {
    match &e.kind {
        ExprKind::Binary(op, ..) => op.precedence(),
        ExprKind::Neg(_) => UNARY,
        ExprKind::Pow(..) => POWER,
        // only valid as a call argument, where it is printed bare
        ExprKind::Arrow(..) => 0,
        _ => ATOM,
    }
}

pub fn pretty_expr(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, e);
    s
}

fn write_child(out: &mut String, e: &Expr, parens: bool) {
    if parens {
        out.push('(');
        write_expr(out, e);
        out.push(')');
    } else {
        write_expr(out, e);
    }
}

fn write_list(out: &mut String, items: &[Expr]) {
    for (i, a) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write_expr(out, a);
    }
}

fn write_expr(out: &mut String, e: &Expr) {
    match &e.kind {
        ExprKind::Int(n) => {
            let _ = write!(out, "{n}");
        }
        ExprKind::Var(k) => {
            let _ = write!(out, "x{k}");
        }
        ExprKind::Z => out.push('z'),
        ExprKind::Name(n) => out.push_str(n),
        ExprKind::Neg(inner) => {
            out.push('-');
            write_child(out, inner, precedence(inner) < UNARY);
        }
        ExprKind::Binary(op, l, r) => {
            let p = op.precedence();
            write_child(out, l, precedence(l) < p);
            match op {
                BinOp::Mul | BinOp::Div => out.push_str(op.symbol()),
                _ => {
                    let _ = write!(out, " {} ", op.symbol());
                }
            }
            write_child(out, r, precedence(r) <= p);
        }
        ExprKind::Pow(base, k) => {
            write_child(out, base, precedence(base) < ATOM);
            let _ = write!(out, "^{k}");
        }
        ExprKind::D(inner) => {
            out.push_str("d(");
            write_expr(out, inner);
            out.push(')');
        }
        ExprKind::Call(name, args) => {
            out.push_str(name);
            out.push('(');
            write_list(out, args);
            out.push(')');
        }
        ExprKind::List(items) => {
            out.push('[');
            write_list(out, items);
            out.push(']');
        }
        ExprKind::Arrow(k, v) => {
            write_expr(out, k);
            out.push_str(" -> ");
            write_expr(out, v);
        }
    }
}

pub fn pretty_stmt(st: &Stmt) -> String {
    match &st.kind {
        StmtKind::Ambient(n) => format!("ambient {n};"),
        StmtKind::Bind(name, e) => format!("{name} = {};", pretty_expr(e)),
        StmtKind::Query { name, args, expect } => {
            let mut s = format!("{name}(");
            write_list(&mut s, args);
            s.push(')');
            if let Some(v) = expect {
                let _ = write!(s, " == {v}");
            }
            s.push(';');
            s
        }
    }
}

pub fn pretty(ast: &Ast) -> String {
    let mut out = String::new();
    for st in &ast.statements {
        out.push_str(&pretty_stmt(st));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse, parse_expr};

    fn roundtrip(src: &str) -> String {
        pretty_expr(&parse_expr(src).unwrap())
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(roundtrip("(2 + 3*x0)*d(x1)"), "(2 + 3*x0)*d(x1)");
        assert_eq!(roundtrip("a - (b - c)"), "a - (b - c)");
        assert_eq!(roundtrip("(a - b) - c"), "a - b - c");
        assert_eq!(roundtrip("-(x0^2)"), "-x0^2");
        assert_eq!(roundtrip("(-x0)^2"), "(-x0)^2");
        assert_eq!(roundtrip("d(x0) /\\ d(x1) + a*b /\\ c"), "d(x0) /\\ d(x1) + a*b /\\ c");
        assert_eq!(roundtrip("(a + b) /\\ c"), "(a + b) /\\ c");
        assert_eq!(roundtrip("a*(b/c)"), "a*(b/c)");
    }

    #[test]
    fn statements() {
        let src = "ambient 2;\nw = x0*d(x1);\nis_integrable(w) == false;\nl = lie(2, [0, 1] -> [1, 0]);\n";
        assert_eq!(pretty(&parse(src).unwrap()), src);
    }
}
