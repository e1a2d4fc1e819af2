use serde::Serialize;

use iwforms_core::formspace::{
    curve_is_rnc, general_position, is_integrable, iw_quadrics, rn_dd_stats, RncReport, RnDdStats,
};
use iwforms_core::gv::{gv_curve, high_wedge_obstruction, is_gv_sequence};
use iwforms_core::lie::{is_integrable_covector, lie_iw};
use iwforms_core::steiner::{steiner_rnc, verify_veronese_web};
use iwforms_core::{CurveParam, Error, QuadricSystem};

use crate::elaborate::{Query, QueryOp};

/// What a query computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Outcome {
    Verdict {
        value: bool,
    },
    Integer {
        value: usize,
    },
    Quadrics {
        system: QuadricSystem,
    },
    Curve {
        curve: CurveParam,
        rnc: RncReport,
    },
    VeroneseWeb {
        contained: bool,
        curve: CurveParam,
        rnc: RncReport,
    },
    Stats {
        stats: RnDdStats,
    },
}

impl Outcome {
    pub fn verdict(&self) -> Option<bool> {
        match self {
            Outcome::Verdict { value } => Some(*value),
            Outcome::VeroneseWeb { contained, .. } => Some(*contained),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Ran, and any verdict matched its expectation.
    Ok,
    Mismatch,
    Error,
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QueryResult {
    pub query: String,
    pub kind: &'static str,
    pub line: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<Outcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Query {
    pub fn run(&self) -> Result<Outcome, Error> {
        let verdict = |value| Ok(Outcome::Verdict { value });
        match &self.op {
            QueryOp::IsIntegrable(f) => verdict(is_integrable(f)?),
            QueryOp::Rank(w) => Ok(Outcome::Integer { value: w.rank() }),
            QueryOp::Quadrics(w) => Ok(Outcome::Quadrics {
                system: iw_quadrics(w),
            }),
            QueryOp::GeneralPosition(pts) => verdict(general_position(pts)?),
            QueryOp::Steiner(p) => curve(steiner_rnc(p)?),
            QueryOp::VeroneseWeb(w, forms) => {
                let r = verify_veronese_web(w, forms)?;
                Ok(Outcome::VeroneseWeb {
                    contained: r.contained,
                    rnc: curve_is_rnc(&r.curve),
                    curve: r.curve,
                })
            }
            QueryOp::Jacobi(l) => verdict(l.check_jacobi()),
            QueryOp::LieIw(l) => Ok(Outcome::Quadrics { system: lie_iw(l)? }),
            QueryOp::IntegrableAt(l, lambda) => verdict(is_integrable_covector(l, lambda)?),
            QueryOp::IsGv(s) => verdict(is_gv_sequence(s)),
            QueryOp::GvCurve(s) => curve(gv_curve(s)?),
            QueryOp::HighWedge(s) => verdict(high_wedge_obstruction(s)?),
            QueryOp::Stats(n, d) => Ok(Outcome::Stats {
                stats: rn_dd_stats(*n, *d)?,
            }),
        }
    }

    /// Runs the query and compares any verdict with its expectation.
    pub fn evaluate(&self) -> QueryResult {
        let expected = self.expected();
        let mut result = QueryResult {
            query: self.text.clone(),
            kind: self.op.name(),
            line: self.span.line,
            status: Status::Ok,
            expected,
            outcome: None,
            error: None,
        };
        match self.run() {
            Ok(outcome) => {
                if let (Some(want), Some(got)) = (expected, outcome.verdict()) {
                    if want != got {
                        result.status = Status::Mismatch;
                    }
                }
                result.outcome = Some(outcome);
            }
            Err(e) => {
                result.status = Status::Error;
                result.error = Some(e.to_string());
            }
        }
        result
    }
}

fn curve(c: CurveParam) -> Result<Outcome, Error> {
    Ok(Outcome::Curve {
        rnc: curve_is_rnc(&c),
        curve: c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::load;

    fn run_all(src: &str) -> Vec<QueryResult> {
        load(src).unwrap().queries.iter().map(Query::evaluate).collect()
    }

    #[test]
    fn verdicts_and_expectations() {
        let rs = run_all(
            "ambient 3;\n\
             a = x1*d(x0) + d(x2);\n\
             b = d(x0) + x0*d(x1);\n\
             is_integrable(a);\n\
             is_integrable(a) == false;\n\
             is_integrable(b);",
        );
        assert_eq!(rs[0].status, Status::Mismatch);
        assert_eq!(rs[1].status, Status::Ok);
        assert_eq!(rs[2].status, Status::Ok);
        assert_eq!(rs[0].line, 4);
    }

    #[test]
    fn computed_values() {
        let rs = run_all(
            "ambient 2; w = space(d(x0), d(x1), x1*d(x0));\n\
             rank(w); quadrics(w); stats(3, 2);",
        );
        assert_eq!(rs[0].outcome, Some(Outcome::Integer { value: 2 }));
        assert!(matches!(rs[1].outcome, Some(Outcome::Quadrics { .. })));
        assert!(matches!(rs[2].outcome, Some(Outcome::Stats { .. })));
    }

    #[test]
    fn core_errors_are_reported() {
        let rs = run_all("ambient 2; w = space(d(x0), d(x1)); veronese_web(w, d(x0));");
        assert_eq!(rs[0].status, Status::Error);
        assert!(rs[0].error.is_some());
    }

    #[test]
    fn steiner_conic() {
        let rs = run_all("p = points([1, 0, 0], [0, 0, 1], [1, 1, 1], [1, 2, 4], [1, 3, 9]); steiner(p);");
        let Some(Outcome::Curve { rnc, .. }) = &rs[0].outcome else { panic!() };
        assert!(rnc.is_rnc);
        assert_eq!(rnc.degree, 2);
    }
}
