use std::collections::HashMap;

use num_traits::{ToPrimitive, Zero};

use iwforms_core::gv::GVSequence;
use iwforms_core::lie::{BracketEntry, LieAlgebra};
use iwforms_core::steiner::PointsPW;
use iwforms_core::{FormSpace, MPoly, PForm, Rational};

use crate::ast::{Ast, BinOp, Expr, ExprKind, StmtKind};
use crate::diag::{Diagnostic, Phase, Span};
use crate::pretty::pretty_stmt;

/// A typed value bound to a name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(MPoly),
    Form(PForm),
    Vector(Vec<Rational>),
    Space(FormSpace),
    Points(PointsPW),
    Lie(LieAlgebra),
    Seq(GVSequence),
}

impl Value {
    pub fn type_name(&self) -> String {
        match self {
            Value::Poly(_) => "polynomial".into(),
            Value::Form(f) => format!("{}-form", f.degree()),
            Value::Vector(_) => "list".into(),
            Value::Space(_) => "form space".into(),
            Value::Points(_) => "point set".into(),
            Value::Lie(_) => "Lie algebra".into(),
            Value::Seq(_) => "sequence".into(),
        }
    }
}

/// A type-checked query with its arguments already evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QueryOp {
    IsIntegrable(PForm),
    Rank(FormSpace),
    Quadrics(FormSpace),
    GeneralPosition(Vec<Vec<Rational>>),
    Steiner(PointsPW),
    VeroneseWeb(FormSpace, Vec<PForm>),
    Jacobi(LieAlgebra),
    LieIw(LieAlgebra),
    IntegrableAt(LieAlgebra, Vec<Rational>),
    IsGv(GVSequence),
    GvCurve(GVSequence),
    HighWedge(GVSequence),
    Stats(u64, u64),
}

impl QueryOp {
    /// The verdict a query is expected to produce when the source does not
    /// say otherwise; `None` for queries that only compute something.
    pub fn default_expectation(&self) -> Option<bool> {
        match self {
            QueryOp::IsIntegrable(_)
            | QueryOp::GeneralPosition(_)
            | QueryOp::VeroneseWeb(..)
            | QueryOp::Jacobi(_)
            | QueryOp::IntegrableAt(..)
            | QueryOp::IsGv(_)
            | QueryOp::HighWedge(_) => Some(true),
            _ => None,
        }
    }

    /// Name used in source text and reports.
    pub fn name(&self) -> &'static str {
        match self {
            QueryOp::IsIntegrable(_) => "is_integrable",
            QueryOp::Rank(_) => "rank",
            QueryOp::Quadrics(_) => "quadrics",
            QueryOp::GeneralPosition(_) => "general_position",
            QueryOp::Steiner(_) => "steiner",
            QueryOp::VeroneseWeb(..) => "veronese_web",
            QueryOp::Jacobi(_) => "jacobi",
            QueryOp::LieIw(_) => "lie_iw",
            QueryOp::IntegrableAt(..) => "integrable_at",
            QueryOp::IsGv(_) => "is_gv",
            QueryOp::GvCurve(_) => "gv_curve",
            QueryOp::HighWedge(_) => "high_wedge",
            QueryOp::Stats(..) => "stats",
        }
    }
}

pub const QUERY_NAMES: &[&str] = &[
    "is_integrable",
    "rank",
    "quadrics",
    "general_position",
    "steiner",
    "veronese_web",
    "jacobi",
    "lie_iw",
    "integrable_at",
    "is_gv",
    "gv_curve",
    "high_wedge",
    "stats",
];

const CONSTRUCTORS: &[&str] = &["space", "points", "lie", "seq"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Query {
    pub op: QueryOp,
    /// Canonical source text of the query statement.
    pub text: String,
    pub expect: Option<bool>,
    pub span: Span,
}

impl Query {
    /// Expected verdict: the explicit `== b` if present, else the default.
    pub fn expected(&self) -> Option<bool> {
        self.expect.or_else(|| self.op.default_expectation())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Session {
    /// Number of `x` variables; 0 when undeclared.
    pub ambient: usize,
    /// In source order. Polynomials and forms that do not involve `z` live
    /// on `ambient` variables, the others on `ambient + 1` with `z` last.
    pub bindings: Vec<(String, Value)>,
    pub queries: Vec<Query>,
}

impl Session {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

/// Evaluates every binding and type-checks every query.
pub fn elaborate(ast: &Ast) -> Result<Session, Diagnostic> {
    let ambient = ast
        .statements
        .iter()
        .find_map(|s| match s.kind {
            StmtKind::Ambient(n) => Some(n),
            _ => None,
        })
        .unwrap_or(0);
    let mut el = Elaborator {
        n: ambient,
        env: HashMap::new(),
    };
    let mut session = Session {
        ambient,
        ..Session::default()
    };
    for st in &ast.statements {
        match &st.kind {
            StmtKind::Ambient(_) => {}
            StmtKind::Bind(name, e) => {
                let v = el.eval(e)?;
                session.bindings.push((name.clone(), el.lower_value(&v)));
                el.env.insert(name.clone(), v);
            }
            StmtKind::Query { name, args, expect } => {
                let op = el.query(name, args, st.span)?;
                if expect.is_some() && op.default_expectation().is_none() {
                    return Err(err(
                        st.span,
                        format!("`{name}` computes a value and has no verdict to compare"),
                    ));
                }
                session.queries.push(Query {
                    op,
                    text: pretty_stmt(st),
                    expect: *expect,
                    span: st.span,
                });
            }
        }
    }
    Ok(session)
}

fn err(span: Span, message: impl Into<String>) -> Diagnostic {
    Diagnostic::new(Phase::Elaborate, span, message)
}

fn core_err(span: Span, e: iwforms_core::Error) -> Diagnostic {
    err(span, e.to_string())
}

struct Elaborator {
    n: usize,
    /// Polynomials and forms here always live on `n + 1` variables.
    env: HashMap<String, Value>,
}

impl Elaborator {
    fn nvars(&self) -> usize {
        self.n + 1
    }

    fn eval(&self, e: &Expr) -> Result<Value, Diagnostic> {
        let m = self.nvars();
        let span = e.span;
        Ok(match &e.kind {
            ExprKind::Int(k) => Value::Poly(MPoly::constant(m, Rational::from_integer(k.clone()))),
            ExprKind::Var(k) => {
                if *k >= self.n {
                    return Err(err(
                        span,
                        format!("variable x{k} is outside the ambient dimension {}", self.n),
                    ));
                }
                Value::Poly(MPoly::var(m, *k))
            }
            ExprKind::Z => Value::Poly(MPoly::var(m, self.n)),
            ExprKind::Name(name) => self
                .env
                .get(name)
                .cloned()
                .ok_or_else(|| err(span, format!("unbound name `{name}`")))?,
            ExprKind::Neg(inner) => match self.eval(inner)? {
                Value::Poly(p) => Value::Poly(-p),
                Value::Form(f) => Value::Form(f.scale(&-Rational::from_integer(1.into()))),
                other => return Err(type_err(span, "negate", &other)),
            },
            ExprKind::Binary(op, l, r) => {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                self.binary(*op, a, b, span)?
            }
            ExprKind::Pow(base, k) => match self.eval(base)? {
                Value::Poly(p) => Value::Poly(p.pow(*k)),
                other => return Err(type_err(span, "raise to a power", &other)),
            },
            ExprKind::D(inner) => match self.eval(inner)? {
                Value::Poly(p) => Value::Form(PForm::function(p).ext_d()),
                Value::Form(f) => normalize(f.ext_d()),
                other => return Err(type_err(span, "differentiate", &other)),
            },
            ExprKind::List(items) => Value::Vector(
                items
                    .iter()
                    .map(|x| self.constant(x))
                    .collect::<Result<_, _>>()?,
            ),
            ExprKind::Call(name, args) => self.construct(name, args, span)?,
            ExprKind::Arrow(..) => {
                return Err(err(span, "`->` is only allowed in the entries of lie(..)"));
            }
        })
    }

    fn binary(&self, op: BinOp, a: Value, b: Value, span: Span) -> Result<Value, Diagnostic> {
        use Value::{Form, Poly};
        let ce = |e| core_err(span, e);
        Ok(match (op, a, b) {
            (BinOp::Add, Poly(p), Poly(q)) => Poly(&p + &q),
            (BinOp::Sub, Poly(p), Poly(q)) => Poly(&p - &q),
            (BinOp::Add | BinOp::Sub, a @ (Poly(_) | Form(_)), b @ (Poly(_) | Form(_))) => {
                let (f, g) = (as_form(a), as_form(b));
                if f.degree() != g.degree() {
                    return Err(err(
                        span,
                        format!(
                            "cannot combine a {}-form and a {}-form",
                            f.degree(),
                            g.degree()
                        ),
                    ));
                }
                let r = if op == BinOp::Add { f.add(&g) } else { f.sub(&g) };
                normalize(r.map_err(ce)?)
            }
            (BinOp::Mul, Poly(p), Poly(q)) => Poly(&p * &q),
            (BinOp::Mul, Poly(p), Form(f)) | (BinOp::Mul, Form(f), Poly(p)) => {
                normalize(f.mul_function(&p).map_err(ce)?)
            }
            (BinOp::Mul, Form(_), Form(_)) => {
                return Err(err(span, "forms are multiplied with `/\\`, not `*`"));
            }
            (BinOp::Div, a, Poly(q)) => {
                let c = q
                    .as_constant()
                    .ok_or_else(|| err(span, "division is only by nonzero constants"))?;
                if c.is_zero() {
                    return Err(err(span, "division by zero"));
                }
                let inv = c.recip();
                match a {
                    Poly(p) => Poly(p.scale(&inv)),
                    Form(f) => Form(f.scale(&inv)),
                    other => return Err(type_err(span, "divide", &other)),
                }
            }
            (BinOp::Wedge, a @ (Poly(_) | Form(_)), b @ (Poly(_) | Form(_))) => {
                normalize(as_form(a).wedge(&as_form(b)).map_err(ce)?)
            }
            (_, a, b) => {
                let bad = if matches!(a, Poly(_) | Form(_)) { b } else { a };
                return Err(type_err(span, &format!("apply `{}` to", op.symbol()), &bad));
            }
        })
    }

    fn constant(&self, e: &Expr) -> Result<Rational, Diagnostic> {
        match self.eval(e)? {
            Value::Poly(p) => p
                .as_constant()
                .ok_or_else(|| err(e.span, "expected a rational constant")),
            other => Err(err(
                e.span,
                format!("expected a rational constant, found a {}", other.type_name()),
            )),
        }
    }

    fn small_int(&self, e: &Expr, what: &str) -> Result<u64, Diagnostic> {
        let c = self.constant(e)?;
        if !c.is_integer() {
            return Err(err(e.span, format!("{what} must be an integer")));
        }
        c.to_integer()
            .to_u64()
            .ok_or_else(|| err(e.span, format!("{what} must be a non-negative integer")))
    }

    fn vector(&self, e: &Expr) -> Result<Vec<Rational>, Diagnostic> {
        match self.eval(e)? {
            Value::Vector(v) => Ok(v),
            other => Err(err(
                e.span,
                format!("expected a list of rationals, found a {}", other.type_name()),
            )),
        }
    }

    fn one_form(&self, e: &Expr) -> Result<PForm, Diagnostic> {
        match self.eval(e)? {
            Value::Form(f) if f.degree() == 1 => Ok(f),
            Value::Poly(p) if p.is_zero() => Ok(PForm::zero(self.nvars(), 1)),
            other => Err(err(
                e.span,
                format!("expected a 1-form, found a {}", other.type_name()),
            )),
        }
    }

    fn construct(&self, name: &str, args: &[Expr], span: Span) -> Result<Value, Diagnostic> {
        match name {
            "space" => {
                let forms = args
                    .iter()
                    .map(|a| self.one_form(a))
                    .collect::<Result<Vec<_>, _>>()?;
                let forms = self.lower_all(forms);
                FormSpace::new(forms)
                    .map(Value::Space)
                    .map_err(|e| core_err(span, e))
            }
            "points" => {
                let pts = args
                    .iter()
                    .map(|a| self.vector(a))
                    .collect::<Result<Vec<_>, _>>()?;
                PointsPW::new(pts)
                    .map(Value::Points)
                    .map_err(|e| core_err(span, e))
            }
            "seq" => {
                let forms = args
                    .iter()
                    .map(|a| {
                        let f = self.one_form(a)?;
                        lower_form(&f, self.n).ok_or_else(|| {
                            err(a.span, "sequence members must not involve z")
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                GVSequence::new(forms)
                    .map(Value::Seq)
                    .map_err(|e| core_err(span, e))
            }
            "lie" => {
                let Some((dim, entries)) = args.split_first() else {
                    return Err(err(span, "lie(..) needs the dimension as first argument"));
                };
                let dim = self.small_int(dim, "the dimension")? as usize;
                let mut brackets = Vec::new();
                for a in entries {
                    let ExprKind::Arrow(k, v) = &a.kind else {
                        return Err(err(a.span, "expected an entry `[i, j] -> [c_0, ..]`"));
                    };
                    let ExprKind::List(ij) = &k.kind else {
                        return Err(err(k.span, "expected an index pair `[i, j]`"));
                    };
                    if ij.len() != 2 {
                        return Err(err(k.span, "expected an index pair `[i, j]`"));
                    }
                    let i = self.small_int(&ij[0], "a basis index")? as usize;
                    let j = self.small_int(&ij[1], "a basis index")? as usize;
                    brackets.push(BracketEntry {
                        i,
                        j,
                        coeffs: self.vector(v)?,
                    });
                }
                LieAlgebra::from_brackets(dim, &brackets)
                    .map(Value::Lie)
                    .map_err(|e| core_err(span, e))
            }
            q if QUERY_NAMES.contains(&q) => Err(err(
                span,
                format!("`{q}` is a query and cannot be used as a value"),
            )),
            other => Err(err(span, format!("unknown constructor `{other}`"))
                .expecting(CONSTRUCTORS)),
        }
    }

    fn query(&self, name: &str, args: &[Expr], span: Span) -> Result<QueryOp, Diagnostic> {
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(err(
                    span,
                    format!("`{name}` takes {k} argument(s), got {}", args.len()),
                ))
            }
        };
        let value = |i: usize| self.eval(&args[i]);
        let wrong = |i: usize, want: &str, got: &Value| {
            err(
                args[i].span,
                format!("`{name}` expects {want}, found a {}", got.type_name()),
            )
        };
        Ok(match name {
            "is_integrable" => match args.len() {
                1 => match value(0)? {
                    Value::Form(f) if f.degree() == 1 => {
                        QueryOp::IsIntegrable(lower_form(&f, self.n).unwrap_or(f))
                    }
                    other => return Err(wrong(0, "a 1-form", &other)),
                },
                2 => {
                    let Value::Space(w) = value(0)? else {
                        return Err(wrong(0, "a form space", &value(0)?));
                    };
                    let lambda = self.vector(&args[1])?;
                    let f = w.member(&lambda).map_err(|e| core_err(args[1].span, e))?;
                    QueryOp::IsIntegrable(f)
                }
                _ => return Err(err(span, "`is_integrable` takes a 1-form, or a space and coordinates")),
            },
            "rank" | "quadrics" => {
                arity(1)?;
                match value(0)? {
                    Value::Space(w) if name == "rank" => QueryOp::Rank(w),
                    Value::Space(w) => QueryOp::Quadrics(w),
                    other => return Err(wrong(0, "a form space", &other)),
                }
            }
            "general_position" => QueryOp::GeneralPosition(
                args.iter()
                    .map(|a| self.vector(a))
                    .collect::<Result<_, _>>()?,
            ),
            "steiner" => {
                arity(1)?;
                match value(0)? {
                    Value::Points(p) => QueryOp::Steiner(p),
                    other => return Err(wrong(0, "a point set", &other)),
                }
            }
            "veronese_web" => {
                let Some((first, rest)) = args.split_first() else {
                    return Err(err(span, "`veronese_web` takes a space followed by forms"));
                };
                let Value::Space(w) = self.eval(first)? else {
                    return Err(wrong(0, "a form space", &self.eval(first)?));
                };
                let forms = rest
                    .iter()
                    .map(|a| self.one_form(a))
                    .collect::<Result<Vec<_>, _>>()?;
                let forms = if w.nvars() == self.n {
                    forms
                        .iter()
                        .zip(rest)
                        .map(|(f, a)| {
                            lower_form(f, self.n)
                                .ok_or_else(|| err(a.span, "form involves z but the space does not"))
                        })
                        .collect::<Result<Vec<_>, _>>()?
                } else {
                    forms
                };
                QueryOp::VeroneseWeb(w, forms)
            }
            "jacobi" | "lie_iw" => {
                arity(1)?;
                match value(0)? {
                    Value::Lie(l) if name == "jacobi" => QueryOp::Jacobi(l),
                    Value::Lie(l) => QueryOp::LieIw(l),
                    other => return Err(wrong(0, "a Lie algebra", &other)),
                }
            }
            "integrable_at" => {
                arity(2)?;
                let Value::Lie(l) = value(0)? else {
                    return Err(wrong(0, "a Lie algebra", &value(0)?));
                };
                let lambda = self.vector(&args[1])?;
                if lambda.len() != l.dim() {
                    return Err(err(
                        args[1].span,
                        format!("expected {} coordinates, got {}", l.dim(), lambda.len()),
                    ));
                }
                QueryOp::IntegrableAt(l, lambda)
            }
            "is_gv" | "gv_curve" | "high_wedge" => {
                arity(1)?;
                match value(0)? {
                    Value::Seq(s) => match name {
                        "is_gv" => QueryOp::IsGv(s),
                        "gv_curve" => QueryOp::GvCurve(s),
                        _ => QueryOp::HighWedge(s),
                    },
                    other => return Err(wrong(0, "a sequence", &other)),
                }
            }
            "stats" => {
                arity(2)?;
                QueryOp::Stats(self.small_int(&args[0], "n")?, self.small_int(&args[1], "d")?)
            }
            other => {
                return Err(err(span, format!("unknown query `{other}`")).expecting(QUERY_NAMES))
            }
        })
    }

    /// Drops `z` from every form if none of them involves it.
    fn lower_all(&self, forms: Vec<PForm>) -> Vec<PForm> {
        let lowered: Option<Vec<PForm>> = forms.iter().map(|f| lower_form(f, self.n)).collect();
        lowered.unwrap_or(forms)
    }

    fn lower_value(&self, v: &Value) -> Value {
        match v {
            Value::Poly(p) => Value::Poly(lower_poly(p, self.n).unwrap_or_else(|| p.clone())),
            Value::Form(f) => Value::Form(lower_form(f, self.n).unwrap_or_else(|| f.clone())),
            other => other.clone(),
        }
    }
}

fn type_err(span: Span, action: &str, v: &Value) -> Diagnostic {
    err(span, format!("cannot {action} a {}", v.type_name()))
}

fn as_form(v: Value) -> PForm {
    match v {
        Value::Poly(p) => PForm::function(p),
        Value::Form(f) => f,
        _ => unreachable!("checked by the caller"),
    }
}

/// 0-forms are reported as polynomials.
fn normalize(f: PForm) -> Value {
    if f.degree() == 0 {
        Value::Poly(f.component(&[]))
    } else {
        Value::Form(f)
    }
}

/// The polynomial on the first `n` variables, if it does not involve the
/// last one.
fn lower_poly(p: &MPoly, n: usize) -> Option<MPoly> {
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exponents();
        if e[n] != 0 {
            return None;
        }
        terms.push((e[..n].to_vec(), c.clone()));
    }
    Some(MPoly::from_terms(n, terms).expect("consistent exponents"))
}

fn lower_form(f: &PForm, n: usize) -> Option<PForm> {
    let mut terms = Vec::new();
    for (idx, p) in f.components() {
        if idx.contains(&n) {
            return None;
        }
        terms.push((idx.clone(), lower_poly(p, n)?));
    }
    Some(PForm::from_terms(n, f.degree(), terms).expect("indices in range"))
}
