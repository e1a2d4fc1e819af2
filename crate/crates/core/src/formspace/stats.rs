use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Codimension and degree of the component `R_n(d,d)` of the space of
/// foliations of degree `2d − 2` on `ℙ^n` (pencils of degree-`d`
/// hypersurfaces).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RnDdStats {
    pub n: u64,
    pub d: u64,
    /// `N_d = binom(n+d, d) − 1`.
    #[serde(serialize_with = "as_string")]
    pub n_d: BigUint,
    /// `(n+1)N_{2d−1} − N_{2d} + n − 1`.
    #[serde(serialize_with = "as_string")]
    pub ambient_dim: BigInt,
    /// `2N_d − 2`.
    #[serde(serialize_with = "as_string")]
    pub component_dim: BigInt,
    #[serde(serialize_with = "as_string")]
    pub codimension: BigInt,
    /// `binom(2N_d − 2, N_d) / (N_d − 1)`.
    #[serde(serialize_with = "as_string")]
    pub degree: BigUint,
}

fn as_string<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn binomial(n: &BigUint, k: &BigUint) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = std::cmp::min(k.clone(), n - k);
    let mut acc = BigUint::one();
    let mut i = BigUint::zero();
    while i < k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc * (n - &i) / (&i + 1u32);
        i += 1u32;
    }
    acc
}

fn n_k(n: u64, k: u64) -> BigUint {
    binomial(&BigUint::from(n + k), &BigUint::from(k)) - 1u32
}

pub fn rn_dd_stats(n: u64, d: u64) -> Result<RnDdStats> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")));
    }
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be at least 1, got {d}")));
    }
    let nd = n_k(n, d);
    if nd < BigUint::from(2u32) {
        return Err(Error::InvalidParameter("N_d must be at least 2".into()));
    }
    let ambient_dim = BigInt::from(n + 1) * BigInt::from(n_k(n, 2 * d - 1))
        - BigInt::from(n_k(n, 2 * d))
        + BigInt::from(n)
        - 1;
    let component_dim = BigInt::from(2u32) * BigInt::from(nd.clone()) - 2;
    let codimension = &ambient_dim - &component_dim;
    let top = binomial(&(BigUint::from(2u32) * &nd - 2u32), &nd);
    let divisor = &nd - 1u32;
    let (degree, rem) = top.div_rem(&divisor);
    if !rem.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "degree formula not integral for n={n}, d={d}"
        )));
    }
    Ok(RnDdStats {
        n,
        d,
        n_d: nd,
        ambient_dim,
        component_dim,
        codimension,
        degree,
    })
}
