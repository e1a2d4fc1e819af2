//! Seeded random generators for randomized checks of algebraic identities.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::linalg::{determinant, Matrix};
use crate::algebra::{int, rat, BiForm, MPoly, Rational};
use crate::exterior::{PForm, PVectorField};
use crate::formspace::general_position;
use num_traits::Zero;

pub struct Sampler {
    rng: StdRng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: StdRng::seed_from_u64(seed),
        }
    }

    /// Uniform in `lo..hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn small_int(&mut self, bound: i64) -> Rational {
        int(self.rng.gen_range(-bound..=bound))
    }

    /// Rational with numerator in `[-9, 9]` and denominator in `[1, 5]`.
    pub fn rational(&mut self) -> Rational {
        rat(self.rng.gen_range(-9..=9), self.rng.gen_range(1..=5))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn rationals(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }

    pub fn poly(&mut self, nvars: usize, max_degree: u32, max_terms: usize) -> MPoly {
        let nterms = self.rng.gen_range(0..=max_terms);
        let terms: Vec<(Vec<u32>, Rational)> = (0..nterms)
            .map(|_| {
                let mut e = vec![0u32; nvars];
                let deg = self.rng.gen_range(0..=max_degree);
                for _ in 0..deg {
                    let i = self.rng.gen_range(0..nvars);
                    e[i] += 1;
                }
                (e, self.rational())
            })
            .collect();
        MPoly::from_terms(nvars, terms).expect("consistent variable count")
    }

    /// Random `degree`-form; zero when `degree > nvars`.
    pub fn form(&mut self, nvars: usize, degree: usize, max_degree: u32, max_terms: usize) -> PForm {
        if degree > nvars {
            return PForm::zero(nvars, degree);
        }
        let nterms = self.rng.gen_range(1..=max_terms);
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let mut idx: Vec<usize> = (0..nvars).collect();
            // partial Fisher-Yates for a random subset of size `degree`
            for k in 0..degree.min(nvars) {
                let j = self.rng.gen_range(k..nvars);
                idx.swap(k, j);
            }
            idx.truncate(degree);
            terms.push((idx, self.poly(nvars, max_degree, 3)));
        }
        PForm::from_terms(nvars, degree, terms).expect("valid random form")
    }

    pub fn field(&mut self, nvars: usize, max_degree: u32, max_terms: usize) -> PVectorField {
        PVectorField::new(
            (0..nvars)
                .map(|_| self.poly(nvars, max_degree, max_terms))
                .collect(),
        )
        .expect("valid random field")
    }

    /// Random invertible integer matrix with entries in `[-2, 2]`.
    pub fn invertible_matrix(&mut self, n: usize) -> Matrix {
        loop {
            let m: Matrix = (0..n)
                .map(|_| (0..n).map(|_| self.small_int(2)).collect())
                .collect();
            if !determinant(&m).is_zero() {
                return m;
            }
        }
    }

    /// Random invertible 2×2 reparameterization of `(s, t)`.
    pub fn mobius(&mut self) -> [[Rational; 2]; 2] {
        loop {
            let m = [
                [self.small_int(3), self.small_int(3)],
                [self.small_int(3), self.small_int(3)],
            ];
            let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
            if !det.is_zero() {
                return m;
            }
        }
    }

    /// `count` integer points of `ℙ^n` in general position, coordinates in
    /// `[-bound, bound]`.
    pub fn general_points(&mut self, n: usize, count: usize, bound: i64) -> Vec<Vec<Rational>> {
        loop {
            let pts: Vec<Vec<Rational>> = (0..count)
                .map(|_| (0..=n).map(|_| self.small_int(bound)).collect())
                .collect();
            if pts.iter().all(|p| p.iter().any(|x| !x.is_zero()))
                && general_position(&pts).unwrap_or(false)
            {
                return pts;
            }
        }
    }

    pub fn biform(&mut self, degree: usize) -> BiForm {
        BiForm::new(self.rationals(degree + 1)).expect("nonempty")
    }
}
