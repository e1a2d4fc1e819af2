use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BiForm, MPoly, Rational};
use crate::error::{Error, Result};

/// Objects with finitely many rational coefficients that can be rescaled.
pub trait Projective: Sized {
    fn coefficients(&self) -> Vec<Rational>;
    /// The coefficient whose sign fixes the normalization, if nonzero.
    fn leading(&self) -> Option<Rational>;
    fn scaled(&self, c: &Rational) -> Self;
}

impl Projective for Rational {
    fn coefficients(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
    fn leading(&self) -> Option<Rational> {
        (!self.is_zero()).then(|| self.clone())
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Projective for MPoly {
    fn coefficients(&self) -> Vec<Rational> {
        self.terms().map(|(_, c)| c.clone()).collect()
    }
    fn leading(&self) -> Option<Rational> {
        self.leading_coeff().cloned()
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Projective for BiForm {
    fn coefficients(&self) -> Vec<Rational> {
        self.coeffs().to_vec()
    }
    fn leading(&self) -> Option<Rational> {
        self.coeffs().iter().find(|c| !c.is_zero()).cloned()
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Projective for Vec<Rational> {
    fn coefficients(&self) -> Vec<Rational> {
        self.clone()
    }
    fn leading(&self) -> Option<Rational> {
        self.iter().find(|c| !c.is_zero()).cloned()
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.iter().map(|x| x * c).collect()
    }
}

/// Canonical representative of the projective class of `v`: coefficients are
/// coprime integers and the first nonzero entry has a positive leading
/// coefficient.
pub fn primitive_normalize<T: Projective>(v: &[T]) -> Result<Vec<T>> {
    let coeffs: Vec<Rational> = v
        .iter()
        .flat_map(|x| x.coefficients())
        .filter(|c| !c.is_zero())
        .collect();
    if coeffs.is_empty() {
        return Err(Error::AllZero);
    }
    let lcm_den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let gcd_num = coeffs.iter().fold(BigInt::zero(), |acc, c| {
        let scaled = c.numer() * (&lcm_den / c.denom());
        acc.gcd(&scaled)
    });
    let mut factor = Rational::new(lcm_den, gcd_num);
    let lead = v.iter().find_map(|x| x.leading()).expect("nonzero entry exists");
    if lead.is_negative() {
        factor = -factor;
    }
    Ok(v.iter().map(|x| x.scaled(&factor)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(primitive_normalize(&ints(&[2, 4, 6])).unwrap(), ints(&[1, 2, 3]));
        assert_eq!(primitive_normalize(&ints(&[-1, -2])).unwrap(), ints(&[1, 2]));
        assert_eq!(
            primitive_normalize(&[rat(1, 2), rat(1, 3)]).unwrap(),
            ints(&[3, 2])
        );
        assert_eq!(primitive_normalize(&ints(&[0, -3, 6])).unwrap(), ints(&[0, 1, -2]));
    }

    #[test]
    fn all_zero_is_rejected() {
        assert_eq!(primitive_normalize(&ints(&[0, 0])), Err(Error::AllZero));
    }

    #[test]
    fn biform_vectors() {
        let v = vec![
            BiForm::new(vec![int(0), int(0)]).unwrap(),
            BiForm::new(vec![rat(-1, 2), int(3)]).unwrap(),
        ];
        let n = primitive_normalize(&v).unwrap();
        assert_eq!(n[1].coeffs(), &[int(1), int(-6)]);
    }

    proptest! {
        #[test]
        fn idempotent_and_scale_free(
            v in prop::collection::vec((-9i64..10, 1i64..6), 1..6),
            cn in 1i64..7, cd in 1i64..7, neg in any::<bool>(),
        ) {
            let v: Vec<Rational> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
            prop_assume!(v.iter().any(|x| !x.is_zero()));
            let once = primitive_normalize(&v).unwrap();
            prop_assert_eq!(&primitive_normalize(&once).unwrap(), &once);
            let c = if neg { -rat(cn, cd) } else { rat(cn, cd) };
            let scaled: Vec<Rational> = v.iter().map(|x| x * &c).collect();
            prop_assert_eq!(primitive_normalize(&scaled).unwrap(), once);
        }
    }
}
