use iwforms_core::algebra::linalg::{self, Matrix};
use iwforms_core::algebra::{int, primitive_normalize, Rational};
use iwforms_core::fixtures::{heisenberg, sl2};
use iwforms_core::formspace::eval_quadrics;
use iwforms_core::lie::{d_squared_vanishes, is_integrable_covector, lie_iw, LieAlgebra};
use iwforms_core::testkit::Sampler;
use num_traits::Zero;
use proptest::prelude::*;

fn quadric_verdict(l: &LieAlgebra, lambda: &[Rational]) -> bool {
    eval_quadrics(&lie_iw(l).unwrap(), lambda)
        .unwrap()
        .iter()
        .all(Zero::is_zero)
}

fn kernel_is_subalgebra(l: &LieAlgebra, lambda: &[Rational]) -> bool {
    let ker = linalg::nullspace(&vec![lambda.to_vec()], lambda.len());
    l.is_subalgebra(&ker)
}

/// Points of `2xz = y²` and `z = 0` mixed with random ones.
fn sample(s: &mut Sampler, k: usize, heis: bool) -> Vec<Rational> {
    match (k % 3, heis) {
        (0, false) => {
            let (a, b) = (s.rational(), s.rational());
            vec![&a * &a * int(2), &a * &b * int(2), &b * &b]
        }
        (0, true) => vec![s.rational(), s.rational(), int(0)],
        _ => s.rationals(3),
    }
}

#[test]
fn quadrics_match_direct_check() {
    let mut s = Sampler::new(5);
    for (l, heis) in [(sl2(), false), (heisenberg(), true)] {
        let q = lie_iw(&l).unwrap();
        let mut hits = 0;
        for k in 0..200 {
            let lambda = sample(&mut s, k, heis);
            if lambda.iter().all(Zero::is_zero) {
                continue;
            }
            let by_q = eval_quadrics(&q, &lambda).unwrap().iter().all(Zero::is_zero);
            let direct = is_integrable_covector(&l, &lambda).unwrap();
            assert_eq!(by_q, direct, "λ = {lambda:?}");
            assert_eq!(direct, kernel_is_subalgebra(&l, &lambda));
            hits += usize::from(direct);
        }
        assert!(hits >= 60);
    }
}

fn random_constants(s: &mut Sampler, m: usize) -> Vec<Vec<Vec<Rational>>> {
    let mut c = vec![vec![vec![int(0); m]; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..m {
                let v = if s.coin() { s.small_int(1) } else { int(0) };
                c[j][i][k] = -v.clone();
                c[i][j][k] = v;
            }
        }
    }
    c
}

/// `P^{-T} M P^{-1}`, the quadric matrix in the dual coordinates of
/// `e'_a = Σ_b P_ab e_b`.
fn dual_transform(p: &Matrix, m: &Matrix) -> Matrix {
    let inv = linalg::inverse(p).unwrap();
    linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(&inv), m), &inv)
}

fn flat(m: &Matrix) -> Vec<Rational> {
    primitive_normalize(&m.concat()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_iff_d_squared(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let m = s.range(2, 5);
        let l = LieAlgebra::new(random_constants(&mut s, m)).unwrap();
        prop_assert_eq!(l.check_jacobi(), d_squared_vanishes(&l));
    }

    #[test]
    fn basis_change_moves_the_conic(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let p = s.invertible_matrix(3);
        for base in [sl2(), heisenberg()] {
            let moved = base.change_basis(&p).unwrap();
            prop_assert!(moved.check_jacobi());
            let q0 = lie_iw(&base).unwrap();
            let q1 = lie_iw(&moved).unwrap();
            prop_assert_eq!(q1.len(), 1);
            prop_assert_eq!(flat(&q1.quadrics[0].matrix), flat(&dual_transform(&p, &q0.quadrics[0].matrix)));
            for _ in 0..10 {
                let lambda = s.rationals(3);
                if lambda.iter().all(Zero::is_zero) {
                    continue;
                }
                prop_assert_eq!(quadric_verdict(&moved, &lambda), is_integrable_covector(&moved, &lambda).unwrap());
            }
        }
    }
}

#[test]
fn sl2_quadric_is_nondegenerate() {
    let q = lie_iw(&sl2()).unwrap();
    assert!(!linalg::determinant(&q.quadrics[0].matrix).is_zero());
    let h = lie_iw(&heisenberg()).unwrap();
    assert_eq!(linalg::rank(&h.quadrics[0].matrix), 1);
}
