//! Differential forms and vector fields with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::linalg::{kernel_minors, Matrix};
use crate::algebra::{MPoly, Rational};
use crate::error::{Error, Result};

/// A differential `q`-form `Σ f_I dx_I` on `nvars` variables.
///
/// Keys are strictly increasing index tuples of length `degree`; no zero
/// coefficient is stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PForm {
    nvars: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, MPoly>,
}

/// Sorts `idx` in place and returns the sign of the sorting permutation, or
/// `None` if an index repeats.
fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl PForm {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        PForm {
            nvars,
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// The 0-form `f`.
    pub fn function(f: MPoly) -> Self {
        let mut out = PForm::zero(f.nvars(), 0);
        if !f.is_zero() {
            out.comps.insert(Vec::new(), f);
        }
        out
    }

    pub fn dx(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "dx{i} out of range for {nvars} variables");
        let mut out = PForm::zero(nvars, 1);
        out.comps.insert(vec![i], MPoly::one(nvars));
        out
    }

    /// The 1-form `Σ coeffs[i] dx_i`.
    pub fn one_form(coeffs: Vec<MPoly>) -> Result<Self> {
        let n = coeffs.len();
        Self::from_terms(n, 1, coeffs.into_iter().enumerate().map(|(i, c)| (vec![i], c)))
    }

    /// Builds a form from `(indices, coefficient)` pairs in any index order;
    /// the antisymmetry sign is applied and repeated indices vanish.
    pub fn from_terms<I>(nvars: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, MPoly)>,
    {
        let mut out = PForm::zero(nvars, degree);
        for (mut idx, f) in terms {
            if idx.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: idx.len(),
                });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= nvars) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    bound: nvars,
                });
            }
            if f.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: f.nvars(),
                });
            }
            if let Some(sign) = sort_with_sign(&mut idx) {
                let f = if sign < 0 { -f } else { f };
                out.add_component(idx, f);
            }
        }
        Ok(out)
    }

    fn add_component(&mut self, idx: Vec<usize>, f: MPoly) {
        if f.is_zero() {
            return;
        }
        let merged = match self.comps.remove(&idx) {
            Some(old) => &old + &f,
            None => f,
        };
        if !merged.is_zero() {
            self.comps.insert(idx, merged);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &MPoly)> {
        self.comps.iter()
    }

    pub fn component(&self, idx: &[usize]) -> MPoly {
        self.comps
            .get(idx)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(self.nvars))
    }

    fn check_nvars(&self, other: &PForm) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PForm) -> Result<PForm> {
        self.check_nvars(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        let mut out = self.clone();
        for (idx, f) in &other.comps {
            out.add_component(idx.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PForm) -> Result<PForm> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> PForm {
        self.mul_function(&MPoly::constant(self.nvars, c.clone()))
            .expect("same variable count")
    }

    pub fn mul_function(&self, f: &MPoly) -> Result<PForm> {
        if f.nvars() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: f.nvars(),
            });
        }
        let mut out = PForm::zero(self.nvars, self.degree);
        for (idx, g) in &self.comps {
            out.add_component(idx.clone(), g * f);
        }
        Ok(out)
    }

    /// Exterior product. A product of degree above `nvars` is the zero form of
    /// that degree.
    pub fn wedge(&self, other: &PForm) -> Result<PForm> {
        self.check_nvars(other)?;
        let mut out = PForm::zero(self.nvars, self.degree + other.degree);
        if out.degree > self.nvars {
            return Ok(out);
        }
        for (ia, fa) in &self.comps {
            for (ib, fb) in &other.comps {
                if ia.iter().any(|i| ib.contains(i)) {
                    continue;
                }
                // sign = parity of pairs (a in I, b in J) with a > b
                let inversions: usize = ia
                    .iter()
                    .map(|a| ib.iter().filter(|b| *b < a).count())
                    .sum();
                let mut idx: Vec<usize> = ia.iter().chain(ib).copied().collect();
                idx.sort_unstable();
                let prod = fa * fb;
                out.add_component(idx, if inversions % 2 == 1 { -prod } else { prod });
            }
        }
        Ok(out)
    }

    /// Exterior derivative `d`. On a top-degree form the result is the zero
    /// form of degree `nvars + 1`.
    pub fn ext_d(&self) -> PForm {
        let mut out = PForm::zero(self.nvars, self.degree + 1);
        if self.degree >= self.nvars {
            return out;
        }
        for (idx, f) in &self.comps {
            for k in 0..self.nvars {
                if idx.contains(&k) {
                    continue;
                }
                let df = f.derivative(k);
                if df.is_zero() {
                    continue;
                }
                let pos = idx.iter().filter(|&&i| i < k).count();
                let mut nidx = idx.clone();
                nidx.insert(pos, k);
                out.add_component(nidx, if pos % 2 == 1 { -df } else { df });
            }
        }
        out
    }

    /// Interior product `ι_v`.
    pub fn contract(&self, v: &PVectorField) -> Result<PForm> {
        if self.degree == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: 0,
            });
        }
        if v.nvars != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: v.nvars,
            });
        }
        let mut out = PForm::zero(self.nvars, self.degree - 1);
        for (idx, f) in &self.comps {
            for (p, i) in idx.iter().enumerate() {
                let Some(vi) = v.comps.get(i) else { continue };
                let mut nidx = idx.clone();
                nidx.remove(p);
                let term = f * vi;
                out.add_component(nidx, if p % 2 == 1 { -term } else { term });
            }
        }
        Ok(out)
    }

    /// Pullback by the linear map `x = M·y` (so `dx_i = Σ_j M_ij dy_j`).
    pub fn pullback_linear(&self, m: &Matrix) -> Result<PForm> {
        let n = self.nvars;
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.len(),
            });
        }
        let images: Vec<MPoly> = m
            .iter()
            .map(|row| {
                let terms = row.iter().enumerate().map(|(j, c)| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    (e, c.clone())
                });
                MPoly::from_terms(n, terms).expect("well-formed")
            })
            .collect();
        let dx_images: Vec<PForm> = m
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (vec![j], MPoly::constant(n, c.clone())));
                PForm::from_terms(n, 1, terms).expect("well-formed")
            })
            .collect();
        let mut out = PForm::zero(n, self.degree);
        for (idx, f) in &self.comps {
            let mut term = PForm::function(f.substitute(&images)?);
            if term.is_zero() {
                continue;
            }
            for &i in idx {
                term = term.wedge(&dx_images[i])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Re-embeds into more variables (new ones appended).
    pub fn with_nvars(&self, nvars: usize) -> Result<PForm> {
        if nvars < self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: nvars,
            });
        }
        let mut out = PForm::zero(nvars, self.degree);
        for (idx, f) in &self.comps {
            out.add_component(idx.clone(), f.with_nvars(nvars)?);
        }
        Ok(out)
    }

    /// Value of every coefficient at a point, keyed by index tuple.
    pub fn eval(&self, point: &[Rational]) -> Result<BTreeMap<Vec<usize>, Rational>> {
        let mut out = BTreeMap::new();
        for (idx, f) in &self.comps {
            let v = f.eval(point)?;
            if !v.is_zero() {
                out.insert(idx.clone(), v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return f.write_str("0");
        }
        for (k, (idx, c)) in self.comps.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if idx.is_empty() {
                write!(f, "({c})")?;
                continue;
            }
            let dxs: Vec<String> = idx.iter().map(|i| format!("d(x{i})")).collect();
            write!(f, "({c})*{}", dxs.join(" /\\ "))?;
        }
        Ok(())
    }
}

/// Polynomial vector field `Σ v_i ∂_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PVectorField {
    nvars: usize,
    comps: BTreeMap<usize, MPoly>,
}

impl PVectorField {
    pub fn zero(nvars: usize) -> Self {
        PVectorField {
            nvars,
            comps: BTreeMap::new(),
        }
    }

    pub fn partial(nvars: usize, i: usize) -> Self {
        let mut v = Self::zero(nvars);
        v.comps.insert(i, MPoly::one(nvars));
        v
    }

    pub fn new(coeffs: Vec<MPoly>) -> Result<Self> {
        let nvars = coeffs.len();
        let mut v = Self::zero(nvars);
        for (i, c) in coeffs.into_iter().enumerate() {
            if c.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: c.nvars(),
                });
            }
            if !c.is_zero() {
                v.comps.insert(i, c);
            }
        }
        Ok(v)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn component(&self, i: usize) -> MPoly {
        self.comps
            .get(&i)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// The derivation `v(f) = Σ v_i ∂f/∂x_i`.
    pub fn apply(&self, f: &MPoly) -> MPoly {
        self.comps
            .iter()
            .fold(MPoly::zero(self.nvars), |acc, (&i, vi)| &acc + &(vi * &f.derivative(i)))
    }

    pub fn add(&self, other: &PVectorField) -> Result<PVectorField> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        PVectorField::new(
            (0..self.nvars)
                .map(|i| &self.component(i) + &other.component(i))
                .collect(),
        )
    }

    pub fn mul_function(&self, f: &MPoly) -> PVectorField {
        PVectorField::new((0..self.nvars).map(|i| &self.component(i) * f).collect())
            .expect("same variable count")
    }

    pub fn scale(&self, c: &Rational) -> PVectorField {
        PVectorField::new((0..self.nvars).map(|i| self.component(i).scale(c)).collect())
            .expect("same variable count")
    }

    /// `[u, v]_k = Σ_m (u_m ∂_m v_k − v_m ∂_m u_k)`.
    pub fn lie_bracket(&self, other: &PVectorField) -> Result<PVectorField> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        PVectorField::new(
            (0..self.nvars)
                .map(|k| &self.apply(&other.component(k)) - &other.apply(&self.component(k)))
                .collect(),
        )
    }
}

/// For `n` fields in `n + 1` variables, returns for each pair `i < j` the
/// coefficient of `[f_i, f_j] ∧ f_1 ∧ ⋯ ∧ f_n` against the volume element.
/// All entries vanish iff the distribution spanned by the fields is involutive
/// on the open set where they are independent.
pub fn involutivity_defect(fields: &[PVectorField]) -> Result<Vec<((usize, usize), MPoly)>> {
    let Some(first) = fields.first() else {
        return Err(Error::InvalidParameter("no vector fields given".into()));
    };
    let nvars = first.nvars;
    if fields.len() + 1 != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars - 1,
            got: fields.len(),
        });
    }
    if let Some(bad) = fields.iter().find(|f| f.nvars != nvars) {
        return Err(Error::VarCountMismatch {
            left: nvars,
            right: bad.nvars,
        });
    }
    let rows: Vec<Vec<MPoly>> = fields
        .iter()
        .map(|f| (0..nvars).map(|k| f.component(k)).collect())
        .collect();
    // Expanding along the bracket row, the cofactors are the signed maximal
    // minors of the field matrix, shared by every pair.
    let cofactors = kernel_minors(&rows);
    let mut out = Vec::new();
    for i in 0..fields.len() {
        for j in i + 1..fields.len() {
            let br = fields[i].lie_bracket(&fields[j])?;
            let mut acc = MPoly::zero(nvars);
            for (k, c) in cofactors.iter().enumerate() {
                let b = br.component(k);
                if !b.is_zero() && !c.is_zero() {
                    acc = &acc + &(&b * c);
                }
            }
            out.push(((i, j), acc));
        }
    }
    Ok(out)
}
