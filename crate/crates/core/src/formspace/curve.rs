use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{iw_quadrics, FormSpace};
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{int, primitive_normalize, BiForm, Rational};
use crate::error::{Error, Result};

/// Projective curve `(s:t) ↦ (C_0(s,t) : ⋯ : C_m(s,t))` given by binary forms
/// of a common degree.
///
/// Always reduced (the components share no factor of positive degree) and
/// primitive-normalized.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveParam {
    components: Vec<BiForm>,
}

impl CurveParam {
    /// Removes the common factor of the components and normalizes. All-zero
    /// components are rejected.
    pub fn new(components: Vec<BiForm>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::AllZero);
        };
        let d = first.degree();
        if let Some(bad) = components.iter().find(|c| c.degree() != d) {
            return Err(Error::DegreeMismatch {
                expected: d,
                got: bad.degree(),
            });
        }
        if components.iter().all(BiForm::is_zero) {
            return Err(Error::AllZero);
        }
        let g = components
            .iter()
            .fold(BiForm::zero(0), |acc, c| acc.gcd(c));
        let reduced: Vec<BiForm> = if g.degree() == 0 {
            components
        } else {
            components
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        BiForm::zero(d - g.degree())
                    } else {
                        c.div_exact(&g).expect("gcd divides every component")
                    }
                })
                .collect()
        };
        Ok(CurveParam {
            components: primitive_normalize(&reduced)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.components[0].degree()
    }

    /// Number of components, i.e. `dim W` for a curve in `ℙ(W)`.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[BiForm] {
        &self.components
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Vec<Rational> {
        self.components.iter().map(|c| c.eval(s, t)).collect()
    }

    /// Composes with an invertible linear change of `(s, t)`.
    pub fn reparameterize(&self, m: &[[Rational; 2]; 2]) -> Result<CurveParam> {
        CurveParam::new(self.components.iter().map(|c| c.reparameterize(m)).collect())
    }

    /// Applies a linear map `y = M·x` to the ambient coordinates.
    pub fn transform(&self, m: &Matrix) -> Result<CurveParam> {
        if m.iter().any(|row| row.len() != self.len()) {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: m.first().map_or(0, Vec::len),
            });
        }
        let d = self.degree();
        let comps = m
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.components)
                    .fold(BiForm::zero(d), |acc, (a, c)| {
                        acc.add(&c.scale(a)).expect("equal degrees")
                    })
            })
            .collect();
        CurveParam::new(comps)
    }

    /// The binary form whose roots are exactly the parameters mapped to
    /// `point`: the gcd of the 2×2 minors `C_a p_b − C_b p_a`. Degree 0 means
    /// the point is not on the curve.
    pub fn fibre(&self, point: &[Rational]) -> Result<BiForm> {
        if point.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: point.len(),
            });
        }
        if point.iter().all(Zero::is_zero) {
            return Err(Error::AllZero);
        }
        let mut g = BiForm::zero(0);
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                let minor = self.components[a]
                    .scale(&point[b])
                    .sub(&self.components[b].scale(&point[a]))
                    .expect("equal degrees");
                g = g.gcd(&minor);
            }
        }
        // A curve constantly equal to the point has every minor zero.
        if g.is_zero() {
            return Ok(BiForm::zero(self.degree()));
        }
        // Parameters where the whole curve vanishes cannot occur for a
        // reduced parameterization, so every root of g maps to the point.
        Ok(g)
    }

    /// The unique parameter mapped to `point`, if exactly one exists.
    pub fn preimage(&self, point: &[Rational]) -> Result<Option<(Rational, Rational)>> {
        Ok(self.fibre(point)?.linear_root())
    }
}

/// `{ "degree": d, "components": [[coeffs]..] }` with coefficients as strings.
impl Serialize for CurveParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let comps: Vec<Vec<String>> = self
            .components
            .iter()
            .map(|c| c.coeffs().iter().map(ToString::to_string).collect())
            .collect();
        let mut st = s.serialize_struct("CurveParam", 2)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("components", &comps)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RncReport {
    pub span_dim: usize,
    pub degree: usize,
    pub is_rnc: bool,
    /// Whether some sampled point has a single preimage. A reduced
    /// parameterization that fails this is generically many-to-one, and
    /// `degree` is then the parameterization degree rather than the degree
    /// of the image.
    pub injective: bool,
}

/// Span dimension and degree of the curve; a rational normal curve in its
/// span is exactly a curve of degree equal to its span dimension.
pub fn curve_is_rnc(c: &CurveParam) -> RncReport {
    let m: Matrix = c.components.iter().map(|f| f.coeffs().to_vec()).collect();
    let span_dim = linalg::rank(&m) - 1;
    let degree = c.degree();
    let injective = degree > 0
        && (1..=4i64).any(|k| {
            let (s, t) = (int(1), int(k));
            let p = c.eval(&s, &t);
            !p.iter().all(Zero::is_zero)
                && c.fibre(&p).map(|f| f.degree() == 1).unwrap_or(false)
        });
    RncReport {
        span_dim,
        degree,
        is_rnc: degree == span_dim,
        injective,
    }
}

/// Every member `Σ C_i(s,t) ω_i` of the curve is integrable, checked
/// identically in `(s, t, x)` by composing each quadric of `I_W` with the
/// curve.
pub fn curve_in_iw(w: &FormSpace, c: &CurveParam) -> Result<bool> {
    if c.len() != w.dim() {
        return Err(Error::DimensionMismatch {
            expected: w.dim(),
            got: c.len(),
        });
    }
    let q = iw_quadrics(w);
    let comps = c.components();
    let d2 = 2 * c.degree();
    for quad in &q.quadrics {
        let mut acc = BiForm::zero(d2);
        for (i, row) in quad.matrix.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                if m.is_zero() || comps[i].is_zero() || comps[j].is_zero() {
                    continue;
                }
                acc = acc.add(&comps[i].mul(&comps[j]).scale(m))?;
            }
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
