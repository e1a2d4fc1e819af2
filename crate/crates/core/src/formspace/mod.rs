//! Finite-dimensional spaces `W` of 1-forms and the variety `I_W` of classes
//! of integrable forms in `ℙ(W)`.

mod curve;
mod quadrics;
mod stats;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{MPoly, Monomial, Rational};
use crate::error::{Error, Result};
use crate::exterior::PForm;

pub use curve::{curve_in_iw, curve_is_rnc, CurveParam, RncReport};
pub use quadrics::{eval_quadrics, iw_quadrics, Quadric, QuadricLabel, QuadricSystem};
pub use stats::{binomial, rn_dd_stats, RnDdStats};

/// `ω ∧ dω = 0`, checked exactly.
pub fn is_integrable(omega: &PForm) -> Result<bool> {
    if omega.degree() != 1 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            got: omega.degree(),
        });
    }
    Ok(omega.wedge(&omega.ext_d())?.is_zero())
}

/// Ordered basis of a space of 1-forms, linearly independent over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace {
    nvars: usize,
    basis: Vec<PForm>,
}

impl FormSpace {
    pub fn new(basis: Vec<PForm>) -> Result<Self> {
        let Some(first) = basis.first() else {
            return Err(Error::InvalidParameter("empty basis".into()));
        };
        let nvars = first.nvars();
        for f in &basis {
            if f.degree() != 1 {
                return Err(Error::DegreeMismatch {
                    expected: 1,
                    got: f.degree(),
                });
            }
            if f.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: f.nvars(),
                });
            }
        }
        let space = FormSpace { nvars, basis };
        if linalg::rank(&space.coefficient_matrix(&[])) != space.dim() {
            return Err(Error::LinearlyDependent);
        }
        Ok(space)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PForm] {
        &self.basis
    }

    /// Rows are basis forms (followed by `extra`), columns are the
    /// `(dx index, monomial)` pairs occurring anywhere.
    fn coefficient_matrix(&self, extra: &[&PForm]) -> Matrix {
        let forms: Vec<&PForm> = self.basis.iter().chain(extra.iter().copied()).collect();
        let mut columns: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
        for f in &forms {
            for (idx, p) in f.components() {
                for (m, _) in p.terms() {
                    let next = columns.len();
                    columns.entry((idx[0], m.clone())).or_insert(next);
                }
            }
        }
        forms
            .iter()
            .map(|f| {
                let mut row = vec![Rational::zero(); columns.len()];
                for (idx, p) in f.components() {
                    for (m, c) in p.terms() {
                        row[columns[&(idx[0], m.clone())]] = c.clone();
                    }
                }
                row
            })
            .collect()
    }

    /// `Σ λ_i ω_i`.
    pub fn member(&self, lambda: &[Rational]) -> Result<PForm> {
        if lambda.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: lambda.len(),
            });
        }
        let mut out = PForm::zero(self.nvars, 1);
        for (l, w) in lambda.iter().zip(&self.basis) {
            if !l.is_zero() {
                out = out.add(&w.scale(l))?;
            }
        }
        Ok(out)
    }

    /// Coordinates of `form` in the basis, or `None` if it is not in `W`.
    pub fn coordinates(&self, form: &PForm) -> Result<Option<Vec<Rational>>> {
        if form.degree() != 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: form.degree(),
            });
        }
        if form.nvars() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: form.nvars(),
            });
        }
        let mut rows = self.coefficient_matrix(&[form]);
        let target = rows.pop().expect("extra row present");
        let lambda = linalg::solve(&linalg::transpose(&rows), &target);
        Ok(lambda)
    }

    /// Largest `r` such that some wedge of `r` basis elements is nonzero.
    /// Subsets are tried from `r = min(dim, nvars)` downward in lexicographic
    /// order, returning at the first nonzero wedge.
    pub fn rank(&self) -> usize {
        let top = self.dim().min(self.nvars);
        for r in (1..=top).rev() {
            for subset in combinations(self.dim(), r) {
                let mut w = self.basis[subset[0]].clone();
                for &i in &subset[1..] {
                    w = w.wedge(&self.basis[i]).expect("same variable count");
                    if w.is_zero() {
                        break;
                    }
                }
                if !w.is_zero() {
                    return r;
                }
            }
        }
        0
    }

    /// Pulls every basis form back by `x = M·y`.
    pub fn pullback_linear(&self, m: &Matrix) -> Result<FormSpace> {
        let basis = self
            .basis
            .iter()
            .map(|w| w.pullback_linear(m))
            .collect::<Result<Vec<_>>>()?;
        FormSpace::new(basis)
    }

    /// Square matrix `A` with `ω_i = Σ_k A_ik dx_k`, when `dim W = nvars`.
    pub fn square_coefficients(&self) -> Result<Vec<Vec<MPoly>>> {
        if self.dim() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: self.dim(),
            });
        }
        Ok(self
            .basis
            .iter()
            .map(|w| (0..self.nvars).map(|k| w.component(&[k])).collect())
            .collect())
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// True iff every `(n+1)`-subset of the given points of `ℙ^n` is linearly
/// independent. With at most `n + 1` points the whole set must be independent.
pub fn general_position(points: &[Vec<Rational>]) -> Result<bool> {
    let Some(first) = points.first() else {
        return Ok(true);
    };
    let len = first.len();
    for p in points {
        if p.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                got: p.len(),
            });
        }
        if p.iter().all(Zero::is_zero) {
            return Err(Error::AllZero);
        }
    }
    if points.len() <= len {
        return Ok(linalg::rank(&points.to_vec()) == points.len());
    }
    for subset in combinations(points.len(), len) {
        let m: Matrix = subset.iter().map(|&i| points[i].clone()).collect();
        if linalg::determinant(&m).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn integrability_examples() {
        assert!(is_integrable(&PForm::dx(3, 0)).unwrap());
        let w = PForm::dx(3, 0)
            .mul_function(&MPoly::var(3, 2))
            .unwrap()
            .add(&PForm::dx(3, 1))
            .unwrap();
        assert!(!is_integrable(&w).unwrap());
        let two = PForm::dx(3, 0).wedge(&PForm::dx(3, 1)).unwrap();
        assert!(is_integrable(&two).is_err());
    }

    #[test]
    fn rank_examples() {
        let full = FormSpace::new((0..4).map(|i| PForm::dx(4, i)).collect()).unwrap();
        assert_eq!(full.rank(), 4);
        // span{dx0, dx1, x0 dx1} in two variables: enumerate the wedges
        let third = PForm::dx(2, 1).mul_function(&MPoly::var(2, 0)).unwrap();
        let w = FormSpace::new(vec![PForm::dx(2, 0), PForm::dx(2, 1), third]).unwrap();
        assert_eq!(w.rank(), 2);
        // a pencil of proportional forms has rank one
        let p = FormSpace::new(vec![
            PForm::dx(3, 0),
            PForm::dx(3, 0).mul_function(&MPoly::var(3, 1)).unwrap(),
        ])
        .unwrap();
        assert_eq!(p.rank(), 1);
    }

    #[test]
    fn dependent_basis_rejected() {
        let r = FormSpace::new(vec![PForm::dx(2, 0), PForm::dx(2, 0).scale(&int(3))]);
        assert_eq!(r, Err(Error::LinearlyDependent));
    }

    #[test]
    fn coordinates_roundtrip() {
        let w = FormSpace::new(vec![
            PForm::dx(2, 0),
            PForm::dx(2, 1).mul_function(&MPoly::var(2, 0)).unwrap(),
        ])
        .unwrap();
        let lam = vec![int(3), int(-2)];
        let f = w.member(&lam).unwrap();
        assert_eq!(w.coordinates(&f).unwrap(), Some(lam));
        assert_eq!(w.coordinates(&PForm::dx(2, 1)).unwrap(), None);
    }

    #[test]
    fn general_position_examples() {
        let mut pts: Vec<_> = (0..3).map(|i| {
            let mut v = vec![0; 3];
            v[i] = 1;
            pt(&v)
        }).collect();
        pts.push(pt(&[1, 1, 1]));
        assert!(general_position(&pts).unwrap());
        let mut dup = pts.clone();
        dup.push(pt(&[2, 2, 2]));
        assert!(!general_position(&dup).unwrap());
        let bad = vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1]), pt(&[1, 1, 0])];
        assert!(!general_position(&bad).unwrap());
        assert_eq!(general_position(&[pt(&[0, 0])]), Err(Error::AllZero));
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
