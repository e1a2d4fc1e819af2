//! Lie algebras from structure constants, the Chevalley–Eilenberg
//! differential on `Λ g*`, and the integrability variety of left-invariant
//! 1-forms.
//!
//! Sign convention: `dξ(u, v) = −ξ([u, v])`, so for the dual basis
//! `d e*_k = −Σ_{i<j} c_ij^k e*_i ∧ e*_j` where `[e_i, e_j] = Σ_k c_ij^k e_k`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{serde_rational, Rational};
use crate::error::{Error, Result};
use crate::formspace::{QuadricLabel, QuadricSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// `c[i][j][k]`, antisymmetric in `(i, j)`.
    c: Vec<Vec<Vec<Rational>>>,
    jacobi: bool,
}

/// `{ "i": .., "j": .., "coeffs": [c_k ..] }`: the bracket `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    #[serde(with = "serde_rational::vec")]
    pub coeffs: Vec<Rational>,
}

/// JSON form of structure constants; omitted brackets are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieAlgebraSpec {
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
}

impl LieAlgebra {
    /// Full structure-constant tensor; antisymmetry is checked, the Jacobi
    /// identity is evaluated and recorded.
    pub fn new(c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let dim = c.len();
        for (i, ci) in c.iter().enumerate() {
            if ci.len() != dim || ci.iter().any(|v| v.len() != dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: ci.len(),
                });
            }
            for j in 0..dim {
                for k in 0..dim {
                    if c[i][j][k] != -c[j][i][k].clone() {
                        return Err(Error::NotAntisymmetric { i, j });
                    }
                }
            }
        }
        let mut l = LieAlgebra {
            dim,
            c,
            jacobi: false,
        };
        l.jacobi = l.jacobiator_vanishes();
        Ok(l)
    }

    /// Builds from brackets `[e_i, e_j]` with `i < j` (or `i > j`, stored with
    /// the opposite sign). Listing both orders, or `i == j` with a nonzero
    /// bracket, must be consistent with antisymmetry.
    pub fn from_brackets(dim: usize, brackets: &[BracketEntry]) -> Result<Self> {
        let mut c = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        let mut set: BTreeMap<(usize, usize), ()> = BTreeMap::new();
        for b in brackets {
            if b.i >= dim || b.j >= dim {
                return Err(Error::IndexOutOfRange {
                    index: b.i.max(b.j),
                    bound: dim,
                });
            }
            if b.coeffs.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: b.coeffs.len(),
                });
            }
            if b.i == b.j {
                if b.coeffs.iter().any(|x| !x.is_zero()) {
                    return Err(Error::NotAntisymmetric { i: b.i, j: b.j });
                }
                continue;
            }
            let key = (b.i.min(b.j), b.i.max(b.j));
            let sign = if b.i < b.j { Rational::one() } else { -Rational::one() };
            let v: Vec<Rational> = b.coeffs.iter().map(|x| x * &sign).collect();
            if set.insert(key, ()).is_some() && c[key.0][key.1] != v {
                return Err(Error::NotAntisymmetric { i: b.i, j: b.j });
            }
            c[key.1][key.0] = v.iter().map(|x| -x).collect();
            c[key.0][key.1] = v;
        }
        Self::new(c)
    }

    pub fn from_spec(spec: &LieAlgebraSpec) -> Result<Self> {
        Self::from_brackets(spec.dim, &spec.brackets)
    }

    pub fn to_spec(&self) -> LieAlgebraSpec {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.c[i][j].iter().any(|x| !x.is_zero()) {
                    brackets.push(BracketEntry {
                        i,
                        j,
                        coeffs: self.c[i][j].clone(),
                    });
                }
            }
        }
        LieAlgebraSpec {
            dim: self.dim,
            brackets,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    /// `Σ_cyc [[e_i, e_j], e_k] = 0` for all index triples.
    pub fn check_jacobi(&self) -> bool {
        self.jacobi
    }

    fn jacobiator_vanishes(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut s = Rational::zero();
                        for m in 0..n {
                            s += &self.c[i][j][m] * &self.c[m][k][l]
                                + &self.c[j][k][m] * &self.c[m][i][l]
                                + &self.c[k][i][m] * &self.c[m][j][l];
                        }
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The same algebra in the basis `e'_a = Σ_b P_ab e_b`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim;
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.len(),
            });
        }
        let inv = linalg::inverse(p).ok_or(Error::LinearlyDependent)?;
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                let br = self.bracket(&p[a], &p[b]);
                for (col, out) in c[a][b].iter_mut().enumerate() {
                    *out = br.iter().zip(&inv).map(|(x, row)| x * &row[col]).sum();
                }
            }
        }
        LieAlgebra::new(c)
    }

    /// `[u, v]` for vectors in the basis `e_0, .., e_{m-1}`.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    if !self.c[i][j][k].is_zero() {
                        *o += &uv * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Whether the span of `basis` is closed under the bracket.
    pub fn is_subalgebra(&self, basis: &[Vec<Rational>]) -> bool {
        let r = linalg::rank(&basis.to_vec());
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let mut m: Matrix = basis.to_vec();
                m.push(self.bracket(&basis[a], &basis[b]));
                if linalg::rank(&m) != r {
                    return false;
                }
            }
        }
        true
    }

    fn d_basis(&self, k: usize) -> ConstForm {
        let mut out = ConstForm::zero(self.dim, 2);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = &self.c[i][j][k];
                if !c.is_zero() {
                    out.add_term(vec![i, j], -c.clone());
                }
            }
        }
        out
    }
}

/// Constant-coefficient element of `Λ^q g*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstForm {
    dim: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Rational>,
}

impl ConstForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        ConstForm {
            dim,
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// The covector `e*_k`.
    pub fn covector(dim: usize, k: usize) -> Self {
        let mut f = Self::zero(dim, 1);
        f.add_term(vec![k], Rational::one());
        f
    }

    /// `Σ λ_k e*_k`.
    pub fn linear(lambda: &[Rational]) -> Self {
        let mut f = Self::zero(lambda.len(), 1);
        for (k, l) in lambda.iter().enumerate() {
            f.add_term(vec![k], l.clone());
        }
        f
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.comps.remove(&idx).unwrap_or_else(Rational::zero) + c;
        if !v.is_zero() {
            self.comps.insert(idx, v);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> Rational {
        self.comps.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.comps.iter()
    }

    pub fn add(&self, other: &ConstForm) -> ConstForm {
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (i, c) in &other.comps {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ConstForm {
        let mut out = ConstForm::zero(self.dim, self.degree);
        for (i, a) in &self.comps {
            out.add_term(i.clone(), a * c);
        }
        out
    }

    pub fn wedge(&self, other: &ConstForm) -> ConstForm {
        let mut out = ConstForm::zero(self.dim, self.degree + other.degree);
        for (ia, a) in &self.comps {
            for (ib, b) in &other.comps {
                if ia.iter().any(|i| ib.contains(i)) {
                    continue;
                }
                let inv: usize = ia.iter().map(|x| ib.iter().filter(|y| *y < x).count()).sum();
                let mut idx: Vec<usize> = ia.iter().chain(ib).copied().collect();
                idx.sort_unstable();
                let p = a * b;
                out.add_term(idx, if inv % 2 == 1 { -p } else { p });
            }
        }
        out
    }
}

/// Chevalley–Eilenberg differential, extended from `g*` by the graded
/// Leibniz rule.
pub fn coalgebra_d(l: &LieAlgebra, a: &ConstForm) -> Result<ConstForm> {
    if !l.check_jacobi() {
        return Err(Error::JacobiFailure);
    }
    Ok(raw_d(l, a))
}

fn raw_d(l: &LieAlgebra, a: &ConstForm) -> ConstForm {
    let mut out = ConstForm::zero(l.dim, a.degree + 1);
    for (idx, c) in &a.comps {
        for p in 0..idx.len() {
            let mut term = ConstForm::zero(l.dim, 0);
            term.add_term(Vec::new(), c.clone());
            for (q, &k) in idx.iter().enumerate() {
                let factor = if q == p {
                    l.d_basis(k)
                } else {
                    ConstForm::covector(l.dim, k)
                };
                term = term.wedge(&factor);
            }
            if p % 2 == 1 {
                term = term.scale(&-Rational::one());
            }
            out = out.add(&term);
        }
    }
    out
}

/// Whether `d ∘ d` vanishes on every basis covector. Independent of the
/// cached Jacobi flag; used to cross-check it.
pub fn d_squared_vanishes(l: &LieAlgebra) -> bool {
    (0..l.dim).all(|k| raw_d(l, &raw_d(l, &ConstForm::covector(l.dim, k))).is_zero())
}

/// `(Σ λ_i e*_i) ∧ d(Σ λ_i e*_i) = 0` in `Λ³ g*`.
pub fn is_integrable_covector(l: &LieAlgebra, lambda: &[Rational]) -> Result<bool> {
    if lambda.len() != l.dim {
        return Err(Error::DimensionMismatch {
            expected: l.dim,
            got: lambda.len(),
        });
    }
    let w = ConstForm::linear(lambda);
    Ok(w.wedge(&coalgebra_d(l, &w)?).is_zero())
}

/// Quadrics in `λ` cutting out the integrable classes of `ℙ(g*)`. Labels
/// carry the `Λ³ g*` index triple and an empty monomial.
pub fn lie_iw(l: &LieAlgebra) -> Result<QuadricSystem> {
    if !l.check_jacobi() {
        return Err(Error::JacobiFailure);
    }
    let m = l.dim;
    let ds: Vec<ConstForm> = (0..m).map(|k| raw_d(l, &ConstForm::covector(m, k))).collect();
    let mut raw: BTreeMap<QuadricLabel, Matrix> = BTreeMap::new();
    for i in 0..m {
        let ei = ConstForm::covector(m, i);
        for (j, dj) in ds.iter().enumerate() {
            for (idx, c) in ei.wedge(dj).components() {
                let label = QuadricLabel {
                    form_indices: [idx[0], idx[1], idx[2]],
                    monomial: Vec::new(),
                };
                let e = raw
                    .entry(label)
                    .or_insert_with(|| vec![vec![Rational::zero(); m]; m]);
                e[i][j] += c;
            }
        }
    }
    Ok(QuadricSystem::from_pair_coefficients(m, raw))
}
