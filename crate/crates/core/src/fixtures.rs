//! Worked examples shared by tests, the CLI demos and the acceptance suite.

use crate::algebra::{int, rat, MPoly, Rational};
use crate::exterior::PForm;
use crate::formspace::FormSpace;
use crate::gv::GVSequence;
use crate::lie::{BracketEntry, LieAlgebra};

/// `f_i = (i+1) + i·(x_0 + ⋯ + x_n)` on `n + 1` variables.
pub fn family_coefficient(n: usize, i: usize) -> MPoly {
    let m = n + 1;
    let s = (0..m).fold(MPoly::zero(m), |acc, k| &acc + &MPoly::var(m, k));
    &MPoly::constant(m, int(i as i64 + 1)) + &s.scale(&int(i as i64))
}

/// `ω_i = f_i dx_i` for `i = 0..n`.
pub fn family_forms(n: usize) -> Vec<PForm> {
    (0..=n)
        .map(|i| {
            PForm::dx(n + 1, i)
                .mul_function(&family_coefficient(n, i))
                .expect("same variable count")
        })
        .collect()
}

/// The space `W = span{ω_0, .., ω_n}` of the explicit family.
pub fn family_space(n: usize) -> FormSpace {
    FormSpace::new(family_forms(n)).expect("independent forms")
}

/// Coordinates of `ω_{n+1} = Σ_{i=0..n} ω_i`.
pub fn family_sum_coords(n: usize) -> Vec<Rational> {
    vec![int(1); n + 1]
}

/// Coordinates of `ω_{n+2} = Σ_{i=0..n} ω_i/(i+2)`.
pub fn family_weighted_coords(n: usize) -> Vec<Rational> {
    (0..=n).map(|i| rat(1, i as i64 + 2)).collect()
}

/// Coordinates of `Σ_{i=1..n} ω_i`, the reading of `ω_{n+1}` that omits
/// `ω_0`. It is not integrable for `n ≥ 2`.
pub fn family_sum_from_one_coords(n: usize) -> Vec<Rational> {
    (0..=n).map(|i| int(i64::from(i > 0))).collect()
}

/// Members `ω_0, .., ω_{n+2}` of the family, as coordinate vectors.
pub fn family_points(n: usize) -> Vec<Vec<Rational>> {
    let mut pts: Vec<Vec<Rational>> = (0..=n)
        .map(|i| (0..=n).map(|k| int(i64::from(k == i))).collect())
        .collect();
    pts.push(family_sum_coords(n));
    pts.push(family_weighted_coords(n));
    pts
}

/// `sl(2)` with `[e_0,e_1] = −e_0`, `[e_0,e_2] = −e_1`, `[e_1,e_2] = −e_2`,
/// so that on the dual basis `α, β, γ`:
/// `dα = α∧β`, `dβ = α∧γ`, `dγ = β∧γ`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        &[
            bracket(0, 1, &[-1, 0, 0]),
            bracket(0, 2, &[0, -1, 0]),
            bracket(1, 2, &[0, 0, -1]),
        ],
    )
    .expect("valid structure constants")
}

/// Heisenberg algebra with `[e_0, e_1] = −e_2`, so `dγ = α∧β`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[bracket(0, 1, &[0, 0, -1])]).expect("valid structure constants")
}

fn bracket(i: usize, j: usize, c: &[i64]) -> BracketEntry {
    BracketEntry {
        i,
        j,
        coeffs: c.iter().map(|&x| int(x)).collect(),
    }
}

/// Five points of the conic `y² = xz` in `ℙ²`, ordered for Steiner's
/// construction: `(1:0:0), (0:0:1), (1:1:1), (1:2:4), (1:3:9)`.
pub fn conic_points() -> Vec<Vec<Rational>> {
    [[1, 0, 0], [0, 0, 1], [1, 1, 1], [1, 2, 4], [1, 3, 9]]
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

/// `(dx_1 + x_1² dx_0, 2x_1 dx_0, 2 dx_0)` in two variables, from
/// `ω(z) = dx_1 + (x_1 + z)² dx_0`.
pub fn gv_conic() -> GVSequence {
    GVSequence::from_potentials(&MPoly::var(2, 1), &MPoly::var(2, 0), &[int(0), int(0), int(1)])
        .expect("valid potentials")
}

/// A sequence with `i0 = 3` in three variables, from
/// `ω(z) = d(x_0 + x_1²) + (1 + (x_0 + x_1² + z)³) dx_2`.
pub fn gv_cubic() -> GVSequence {
    let f = &MPoly::var(3, 0) + &MPoly::var(3, 1).pow(2);
    GVSequence::from_potentials(&f, &MPoly::var(3, 2), &[int(1), int(0), int(0), int(1)])
        .expect("valid potentials")
}

/// Godbillon–Vey sequences with `i0 = k` for each `k` in `3..=max`, built
/// from `g(u) = u^k + u` with varied potentials.
pub fn gv_high_family(max: usize) -> Vec<GVSequence> {
    (3..=max)
        .map(|k| {
            let n = 3;
            let f = &MPoly::var(n, 0) + &MPoly::var(n, 1).pow(2).scale(&int(k as i64));
            let g = &MPoly::var(n, 2) + &MPoly::var(n, 0);
            let mut poly = vec![int(0); k + 1];
            poly[1] = int(1);
            poly[k] = int(1);
            GVSequence::from_potentials(&f, &g, &poly).expect("valid potentials")
        })
        .collect()
}
