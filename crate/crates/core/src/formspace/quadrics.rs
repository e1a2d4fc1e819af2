use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::FormSpace;
use crate::algebra::linalg::Matrix;
use crate::algebra::{primitive_normalize, serde_rational, Monomial, Rational};
use crate::error::{Error, Result};

/// Which coefficient of `ω ∧ dω` a quadric comes from: the 3-form basis
/// element `dx_a ∧ dx_b ∧ dx_c` and the `x`-monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadricLabel {
    pub form_indices: [usize; 3],
    pub monomial: Vec<u32>,
}

impl Ord for QuadricLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.form_indices.cmp(&other.form_indices).then_with(|| {
            Monomial::from_exponents(self.monomial.clone())
                .cmp(&Monomial::from_exponents(other.monomial.clone()))
        })
    }
}

impl PartialOrd for QuadricLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quadric {
    pub label: QuadricLabel,
    /// Symmetric, primitive-normalized.
    #[serde(with = "serde_rational::matrix")]
    pub matrix: Matrix,
}

impl Quadric {
    pub fn eval(&self, lambda: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, row) in self.matrix.iter().enumerate() {
            if lambda[i].is_zero() {
                continue;
            }
            for (j, m) in row.iter().enumerate() {
                if !m.is_zero() {
                    acc += m * &lambda[i] * &lambda[j];
                }
            }
        }
        acc
    }
}

/// Quadratic forms in the coordinates `λ` of `ℙ(W)` whose common zero locus
/// is `I_W`. Serialized as
/// `{ "dim": m+1, "quadrics": [ { "label": { "form_indices": [a,b,c], "monomial": [..] }, "matrix": [[..]] } ] }`
/// with matrix entries written as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricSystem {
    pub dim: usize,
    pub quadrics: Vec<Quadric>,
}

impl QuadricSystem {
    /// Builds the system from, per label, the (not necessarily symmetric)
    /// matrix `c` with `Σ c_ij λ_i λ_j` the labelled coefficient. Zero
    /// quadrics are dropped and scale duplicates keep the first label.
    pub fn from_pair_coefficients(dim: usize, raw: BTreeMap<QuadricLabel, Matrix>) -> Self {
        let mut seen: HashSet<Vec<Rational>> = HashSet::new();
        let mut quadrics = Vec::new();
        for (label, c) in raw {
            let flat: Vec<Rational> = (0..dim)
                .flat_map(|i| {
                    let c = &c;
                    (0..dim).map(move |j| (&c[i][j] + &c[j][i]) / Rational::from_integer(2.into()))
                })
                .collect();
            let Ok(normalized) = primitive_normalize(&flat) else {
                continue;
            };
            if !seen.insert(normalized.clone()) {
                continue;
            }
            let matrix = normalized.chunks(dim).map(<[Rational]>::to_vec).collect();
            quadrics.push(Quadric { label, matrix });
        }
        QuadricSystem { dim, quadrics }
    }

    pub fn is_empty(&self) -> bool {
        self.quadrics.is_empty()
    }

    pub fn len(&self) -> usize {
        self.quadrics.len()
    }
}

/// Coefficient quadrics of `ω ∧ dω` for `ω = Σ λ_i ω_i`, using
/// `ω ∧ dω = Σ_{i,j} λ_i λ_j ω_i ∧ dω_j`.
pub fn iw_quadrics(w: &FormSpace) -> QuadricSystem {
    let dim = w.dim();
    let dws: Vec<_> = w.basis().iter().map(|f| f.ext_d()).collect();
    let mut raw: BTreeMap<QuadricLabel, Matrix> = BTreeMap::new();
    for (i, wi) in w.basis().iter().enumerate() {
        for (j, dwj) in dws.iter().enumerate() {
            let t = wi.wedge(dwj).expect("same variable count");
            for (idx, p) in t.components() {
                for (m, c) in p.terms() {
                    let label = QuadricLabel {
                        form_indices: [idx[0], idx[1], idx[2]],
                        monomial: m.exponents().to_vec(),
                    };
                    let entry = raw
                        .entry(label)
                        .or_insert_with(|| vec![vec![Rational::zero(); dim]; dim]);
                    entry[i][j] += c;
                }
            }
        }
    }
    QuadricSystem::from_pair_coefficients(dim, raw)
}

/// `λᵀ M λ` for each stored quadric, in stored order.
pub fn eval_quadrics(q: &QuadricSystem, lambda: &[Rational]) -> Result<Vec<Rational>> {
    if lambda.len() != q.dim {
        return Err(Error::DimensionMismatch {
            expected: q.dim,
            got: lambda.len(),
        });
    }
    Ok(q.quadrics.iter().map(|m| m.eval(lambda)).collect())
}
