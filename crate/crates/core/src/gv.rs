//! Finite Godbillon–Vey sequences `(ω_0, .., ω_{i0})` and their development
//! `Ω = dz + Σ z^i/i! ω_i` on the space with one extra coordinate `z`.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{BiForm, MPoly, Rational};
use crate::error::{Error, Result};
use crate::exterior::PForm;
use crate::formspace::{is_integrable, CurveParam, FormSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVSequence {
    nvars: usize,
    forms: Vec<PForm>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl GVSequence {
    /// Trailing zero forms are dropped; a sequence of zero forms is rejected.
    pub fn new(mut forms: Vec<PForm>) -> Result<Self> {
        let Some(first) = forms.first() else {
            return Err(Error::InvalidParameter("empty sequence".into()));
        };
        let nvars = first.nvars();
        for f in &forms {
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
        while forms.last().is_some_and(PForm::is_zero) {
            forms.pop();
        }
        if forms.is_empty() {
            return Err(Error::AllZero);
        }
        Ok(GVSequence { nvars, forms })
    }

    /// `ω(z) = dF + g(F + z) dG`, expanded in `z`: `ω_0 = dF + g(F) dG` and
    /// `ω_i = g^(i)(F) dG`. Every such sequence is Godbillon–Vey, since with
    /// `u = F + z` the development is `du + g(u) dG`. `g` is given by its
    /// coefficients in increasing degree.
    pub fn from_potentials(f: &MPoly, g: &MPoly, poly: &[Rational]) -> Result<Self> {
        if f.nvars() != g.nvars() {
            return Err(Error::VarCountMismatch {
                left: f.nvars(),
                right: g.nvars(),
            });
        }
        let n = f.nvars();
        let df = PForm::function(f.clone()).ext_d();
        let dg = PForm::function(g.clone()).ext_d();
        let mut coeffs = poly.to_vec();
        let mut forms = Vec::new();
        let mut i = 0;
        while i == 0 || !coeffs.is_empty() {
            // Horner evaluation of the current derivative at F.
            let value = coeffs
                .iter()
                .rev()
                .fold(MPoly::zero(n), |acc, c| &(&acc * f) + &MPoly::constant(n, c.clone()));
            let mut w = dg.mul_function(&value)?;
            if i == 0 {
                w = w.add(&df)?;
            }
            forms.push(w);
            coeffs = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect();
            i += 1;
        }
        GVSequence::new(forms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn forms(&self) -> &[PForm] {
        &self.forms
    }

    /// Index of the last nonzero form.
    pub fn i0(&self) -> usize {
        self.forms.len() - 1
    }

    /// `Σ c^i/i! ω_i`.
    pub fn member_at(&self, c: &Rational) -> PForm {
        let mut out = PForm::zero(self.nvars, 1);
        let mut weight = Rational::one();
        for (i, w) in self.forms.iter().enumerate() {
            if i > 0 {
                weight = weight * c / Rational::from_integer(BigInt::from(i));
            }
            out = out.add(&w.scale(&weight)).expect("same variable count");
        }
        out
    }

    /// `dz + Σ z^i/i! ω_i` on `nvars + 1` variables, `z` last.
    pub fn develop(&self) -> PForm {
        let m = self.nvars + 1;
        let z = MPoly::var(m, self.nvars);
        let mut omega = PForm::dx(m, self.nvars);
        for (i, w) in self.forms.iter().enumerate() {
            let coeff = z
                .pow(i as u32)
                .scale(&Rational::new(BigInt::one(), factorial(i)));
            let lifted = w.with_nvars(m).expect("more variables");
            omega = omega
                .add(&lifted.mul_function(&coeff).expect("same variable count"))
                .expect("same variable count");
        }
        omega
    }

    /// The span of the forms, when they are linearly independent.
    pub fn span(&self) -> Result<FormSpace> {
        FormSpace::new(self.forms.clone())
    }
}

/// `Ω ∧ dΩ = 0` identically in `(x, z)`.
pub fn is_gv_sequence(seq: &GVSequence) -> bool {
    is_integrable(&seq.develop()).expect("develop yields a 1-form")
}

fn require_gv(seq: &GVSequence) -> Result<()> {
    if is_gv_sequence(seq) {
        Ok(())
    } else {
        Err(Error::NotGodbillonVey)
    }
}

/// The curve `c ↦ [Σ c^i/i! ω_i]` in `ℙ(W)`, `W` spanned by the forms, with
/// `c = t/s` and component `i` equal to `(i0!/i!) s^(i0−i) t^i`.
pub fn gv_curve(seq: &GVSequence) -> Result<CurveParam> {
    require_gv(seq)?;
    seq.span()?;
    let i0 = seq.i0();
    let top = factorial(i0);
    let comps = (0..=i0)
        .map(|i| BiForm::monomial(i0, i, Rational::from_integer(&top / factorial(i))))
        .collect();
    CurveParam::new(comps)
}

/// `ω_i ∧ ω_j = 0` for all `i, j ≥ 2`.
pub fn high_wedge_obstruction(seq: &GVSequence) -> Result<bool> {
    require_gv(seq)?;
    let high = seq.forms.get(2..).unwrap_or(&[]);
    for (a, wa) in high.iter().enumerate() {
        for wb in &high[a + 1..] {
            if !wa.wedge(wb)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rank of the span of the forms; dependent forms are allowed.
pub fn sequence_rank(seq: &GVSequence) -> usize {
    let mut basis: Vec<PForm> = Vec::new();
    for f in &seq.forms {
        let mut trial = basis.clone();
        trial.push(f.clone());
        if FormSpace::new(trial.clone()).is_ok() {
            basis = trial;
        }
    }
    FormSpace::new(basis).map_or(0, |w| w.rank())
}

/// Whether every sample `Σ c^i/i! ω_i`, `c` in `samples`, is integrable.
pub fn members_integrable(seq: &GVSequence, samples: &[Rational]) -> bool {
    samples.iter().all(|c| {
        let w = seq.member_at(c);
        w.is_zero() || is_integrable(&w).expect("1-form")
    })
}

impl GVSequence {
    /// Sequence `(ω_0, .., ω_k)` keeping the first `k + 1` forms.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        GVSequence::new(self.forms.iter().take(k + 1).cloned().collect())
    }
}

impl std::fmt::Display for GVSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "seq(")?;
        for (i, w) in self.forms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::formspace::{curve_in_iw, curve_is_rnc};

    fn dx(i: usize) -> PForm {
        PForm::dx(2, i)
    }

    #[test]
    fn develop_examples() {
        let one = GVSequence::new(vec![dx(0)]).unwrap();
        let expected = PForm::dx(3, 2).add(&PForm::dx(3, 0)).unwrap();
        assert_eq!(one.develop(), expected);

        let two = GVSequence::new(vec![dx(0), dx(0)]).unwrap();
        let one_plus_z = &MPoly::one(3) + &MPoly::var(3, 2);
        let expected = PForm::dx(3, 2)
            .add(&PForm::dx(3, 0).mul_function(&one_plus_z).unwrap())
            .unwrap();
        assert_eq!(two.develop(), expected);

        let three = GVSequence::new(vec![dx(0), dx(1), dx(1)]).unwrap();
        let z2 = crate::algebra::Monomial::from_exponents(vec![0, 0, 2]);
        assert_eq!(three.develop().component(&[1]).coeff(&z2), crate::algebra::rat(1, 2));
    }

    #[test]
    fn z_zero_recovers_omega_0() {
        let seq = GVSequence::new(vec![
            dx(0).mul_function(&MPoly::var(2, 1)).unwrap(),
            dx(1),
            dx(0),
        ])
        .unwrap();
        let rest = seq.develop().sub(&PForm::dx(3, 2)).unwrap();
        for (idx, p) in rest.components() {
            let at_zero = p
                .substitute(&[MPoly::var(2, 0), MPoly::var(2, 1), MPoly::zero(2)])
                .unwrap();
            assert_eq!(at_zero, seq.forms()[0].component(idx));
        }
    }

    #[test]
    fn recognition() {
        assert!(is_gv_sequence(&GVSequence::new(vec![dx(0), dx(0)]).unwrap()));
        assert!(!is_gv_sequence(&GVSequence::new(vec![dx(0), dx(1)]).unwrap()));
        assert!(is_gv_sequence(&GVSequence::new(vec![dx(1)]).unwrap()));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let s = GVSequence::new(vec![dx(0), PForm::zero(2, 1), PForm::zero(2, 1)]).unwrap();
        assert_eq!(s.i0(), 0);
        assert_eq!(GVSequence::new(vec![PForm::zero(2, 1)]), Err(Error::AllZero));
    }

    #[test]
    fn dependent_forms_are_reported() {
        let s = GVSequence::new(vec![dx(0), dx(0)]).unwrap();
        assert_eq!(gv_curve(&s), Err(Error::LinearlyDependent));
        let bad = GVSequence::new(vec![dx(0), dx(1)]).unwrap();
        assert_eq!(gv_curve(&bad), Err(Error::NotGodbillonVey));
    }

    #[test]
    fn quadratic_potential_gives_a_conic() {
        // F = x1, G = x0, g(u) = u^2
        let s = GVSequence::from_potentials(&MPoly::var(2, 1), &MPoly::var(2, 0), &[int(0), int(0), int(1)])
            .unwrap();
        assert_eq!(s.i0(), 2);
        let x1 = MPoly::var(2, 1);
        assert_eq!(s.forms()[0], dx(1).add(&dx(0).mul_function(&x1.pow(2)).unwrap()).unwrap());
        assert_eq!(s.forms()[1], dx(0).mul_function(&x1.scale(&int(2))).unwrap());
        assert_eq!(s.forms()[2], dx(0).scale(&int(2)));
        assert!(is_gv_sequence(&s));
        let c = gv_curve(&s).unwrap();
        let r = curve_is_rnc(&c);
        assert_eq!((r.span_dim, r.degree, r.is_rnc), (2, 2, true));
        assert!(curve_in_iw(&s.span().unwrap(), &c).unwrap());
        assert!(high_wedge_obstruction(&s).unwrap());
        assert!(members_integrable(&s, &[int(0), int(1), crate::algebra::rat(-3, 2)]));
    }

    #[test]
    fn cubic_potential_obstruction() {
        let n = 3;
        let f = &MPoly::var(n, 0) + &MPoly::var(n, 1).pow(2);
        let g = MPoly::var(n, 2);
        let s = GVSequence::from_potentials(&f, &g, &[int(1), int(0), int(0), int(1)]).unwrap();
        assert_eq!(s.i0(), 3);
        assert!(is_gv_sequence(&s));
        assert!(high_wedge_obstruction(&s).unwrap());
        assert!(s.forms()[2].wedge(&s.forms()[3]).unwrap().is_zero());
        assert!(sequence_rank(&s) <= 3);
        let c = gv_curve(&s).unwrap();
        assert_eq!(c.degree(), 3);
        assert!(curve_in_iw(&s.span().unwrap(), &c).unwrap());
    }

    #[test]
    fn non_gv_is_refused() {
        let n = 4;
        let s = GVSequence::new(vec![
            PForm::dx(n, 0),
            PForm::dx(n, 1),
            PForm::dx(n, 2),
            PForm::dx(n, 3),
        ])
        .unwrap();
        assert!(!s.forms()[2].wedge(&s.forms()[3]).unwrap().is_zero());
        assert_eq!(high_wedge_obstruction(&s), Err(Error::NotGodbillonVey));
    }

    #[test]
    fn curve_components_clear_factorials() {
        let s = GVSequence::from_potentials(&MPoly::var(2, 1), &MPoly::var(2, 0), &[int(0), int(0), int(1)])
            .unwrap();
        let c = gv_curve(&s).unwrap();
        // 2 s^2, 2 s t, t^2
        assert_eq!(c.components()[0].coeffs(), &[int(2), int(0), int(0)]);
        assert_eq!(c.components()[1].coeffs(), &[int(0), int(2), int(0)]);
        assert_eq!(c.components()[2].coeffs(), &[int(0), int(0), int(1)]);
    }
}
