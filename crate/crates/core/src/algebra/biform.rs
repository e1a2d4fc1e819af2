use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Homogeneous binary form of degree `d` in `(s, t)`.
///
/// `coeffs[k]` is the coefficient of `s^(d-k) t^k`, so the vector is also the
/// coefficient list of the dehomogenization `f(1, t)` padded to length `d + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiForm {
    coeffs: Vec<Rational>,
}

impl BiForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "a binary form needs at least one coefficient".into(),
            ));
        }
        Ok(BiForm { coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        BiForm {
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    pub fn constant(c: Rational) -> Self {
        BiForm { coeffs: vec![c] }
    }

    /// `c · s^(d-k) t^k`.
    pub fn monomial(degree: usize, k: usize, c: Rational) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[k] = c;
        f
    }

    /// The linear form `a·s + b·t`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        BiForm { coeffs: vec![a, b] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_degree(&self, other: &BiForm) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                got: other.degree(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &BiForm) -> Result<BiForm> {
        self.same_degree(other)?;
        Ok(BiForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &BiForm) -> Result<BiForm> {
        self.same_degree(other)?;
        Ok(BiForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &BiForm) -> BiForm {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BiForm { coeffs: out }
    }

    pub fn scale(&self, c: &Rational) -> BiForm {
        BiForm {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        let d = self.degree();
        let mut acc = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * num_traits::pow(s.clone(), d - k) * num_traits::pow(t.clone(), k);
        }
        acc
    }

    /// Substitutes `s ↦ a·s + b·t`, `t ↦ c·s + d·t`.
    pub fn reparameterize(&self, m: &[[Rational; 2]; 2]) -> BiForm {
        let sp = BiForm::linear(m[0][0].clone(), m[0][1].clone());
        let tp = BiForm::linear(m[1][0].clone(), m[1][1].clone());
        let d = self.degree();
        let mut out = BiForm::zero(d);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = sp.pow(d - k).mul(&tp.pow(k)).scale(c);
            out = out.add(&term).expect("same degree");
        }
        out
    }

    pub fn pow(&self, e: usize) -> BiForm {
        let mut out = BiForm::constant(Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Monic greatest common divisor (monic in the dehomogenized sense). The
    /// gcd of two zero forms is the zero form of degree 0.
    pub fn gcd(&self, other: &BiForm) -> BiForm {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (ua, sa) = dehomogenize(self);
        let (ub, sb) = dehomogenize(other);
        let g = uni_gcd(ua, ub);
        let spow = sa.min(sb);
        let mut coeffs = g;
        let deg = coeffs.len() - 1 + spow;
        coeffs.resize(deg + 1, Rational::zero());
        BiForm { coeffs }
    }

    fn monic(&self) -> BiForm {
        if self.is_zero() {
            return BiForm::zero(0);
        }
        let (u, _) = dehomogenize(self);
        let lead = u.last().unwrap().clone();
        self.scale(&(Rational::one() / lead))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &BiForm) -> Option<BiForm> {
        if divisor.is_zero() || divisor.degree() > self.degree() {
            return None;
        }
        let qdeg = self.degree() - divisor.degree();
        if self.is_zero() {
            return Some(BiForm::zero(qdeg));
        }
        let (ua, sa) = dehomogenize(self);
        let (ub, sb) = dehomogenize(divisor);
        if sb > sa {
            return None;
        }
        let (q, r) = uni_divrem(&ua, &ub);
        if !r.is_empty() {
            return None;
        }
        let mut coeffs = q;
        coeffs.resize(qdeg + 1, Rational::zero());
        Some(BiForm { coeffs })
    }

    /// For a nonzero linear form `a·s + b·t`, its unique root `(s:t) = (b : -a)`.
    pub fn linear_root(&self) -> Option<(Rational, Rational)> {
        if self.degree() != 1 || self.is_zero() {
            return None;
        }
        Some((self.coeffs[1].clone(), -self.coeffs[0].clone()))
    }
}

/// Splits `f = s^k · g(s,t)` and returns (coefficients of `g(1,t)` trimmed, k).
fn dehomogenize(f: &BiForm) -> (Vec<Rational>, usize) {
    let mut u = f.coeffs.clone();
    while u.len() > 1 && u.last().unwrap().is_zero() {
        u.pop();
    }
    let k = f.coeffs.len() - u.len();
    (u, k)
}

fn trim(mut u: Vec<Rational>) -> Vec<Rational> {
    while u.last().is_some_and(Zero::is_zero) {
        u.pop();
    }
    u
}

/// Univariate division, low-to-high coefficient order. The remainder is
/// returned trimmed (empty means zero).
fn uni_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lb = b.last().expect("division by zero polynomial").clone();
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        r = trim(r);
    }
    (q, r)
}

fn uni_gcd(a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
    let mut a = trim(a);
    let mut b = trim(b);
    while !b.is_empty() {
        let (_, r) = uni_divrem(&a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().unwrap().clone();
    a.iter().map(|c| c / &lead).collect()
}

impl fmt::Display for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match d - k {
                0 => {}
                1 => f.write_str("*s")?,
                e => write!(f, "*s^{e}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("*t")?,
                e => write!(f, "*t^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    fn bf(c: &[i64]) -> BiForm {
        BiForm::new(c.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(bf(&[0, 1, 0]).eval(&int(1), &int(1)), int(1));
        assert_eq!(bf(&[1, 0, -1]).eval(&int(1), &int(1)), int(0));
        assert_eq!(bf(&[1, 2, 1]).eval(&int(1), &int(2)), int(9));
    }

    #[test]
    fn gcd_tracks_powers_of_s() {
        // s^2 t and s t^2 share s t
        let a = bf(&[0, 1, 0, 0]);
        let b = bf(&[0, 0, 1, 0]);
        assert_eq!(a.gcd(&b), bf(&[0, 1, 0]));
        // (s - t)(s + t) and (s - t) s
        let c = bf(&[1, 0, -1]);
        let e = bf(&[1, -1, 0]);
        let g = c.gcd(&e);
        assert_eq!(g.degree(), 1);
        assert_eq!(g.linear_root(), Some((int(1), int(1))));
        assert_eq!(c.div_exact(&g).unwrap().mul(&g), c);
    }

    #[test]
    fn coprime_gcd_is_constant() {
        let g = bf(&[1, 0, 1]).gcd(&bf(&[0, 1, 0]));
        assert_eq!(g.degree(), 0);
    }

    #[test]
    fn inexact_division_is_rejected() {
        assert!(bf(&[1, 0, 1]).div_exact(&bf(&[1, 1])).is_none());
        assert!(bf(&[1, 0, 0]).div_exact(&bf(&[0, 1])).is_none());
    }

    #[test]
    fn reparameterize_swap() {
        let f = bf(&[1, 2, 3]);
        let swap = [[int(0), int(1)], [int(1), int(0)]];
        assert_eq!(f.reparameterize(&swap), bf(&[3, 2, 1]));
    }

    fn arb(deg: usize) -> impl Strategy<Value = BiForm> {
        prop::collection::vec((-6i64..7, 1i64..4), deg + 1)
            .prop_map(|v| BiForm::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(f in arb(2), g in arb(3), s in -5i64..6, t in -5i64..6) {
            let (s, t) = (int(s), int(t));
            prop_assert_eq!(f.mul(&g).eval(&s, &t), f.eval(&s, &t) * g.eval(&s, &t));
        }

        #[test]
        fn product_divides_back(f in arb(2), g in arb(2)) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!(f.mul(&g).div_exact(&g).unwrap(), f);
        }
    }
}
