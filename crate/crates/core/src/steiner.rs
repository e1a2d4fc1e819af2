//! Steiner's construction of the rational normal curve through `n + 3`
//! points of `ℙ^n` in general position, and the Veronese-web check that such
//! a curve through integrable classes stays inside `I_W`.
//!
//! Points are indexed from zero: `points[0..n]` play the role of
//! `p_1, .., p_n`, and `points[n]`, `points[n+1]`, `points[n+2]` are the three
//! points sent to the parameters `(0:1)`, `(1:0)` and `(1:1)`.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::linalg::{self, adjugate, cofactor_det, kernel_minors};
use crate::algebra::{primitive_normalize, BiForm, MPoly, Rational};
use crate::error::{Error, Result};
use crate::exterior::{involutivity_defect, PForm, PVectorField};
use crate::formspace::{curve_in_iw, general_position, is_integrable, CurveParam, FormSpace};

/// `n + 3` primitive-normalized points of `ℙ^n` in general position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointsPW {
    n: usize,
    points: Vec<Vec<Rational>>,
}

impl PointsPW {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidParameter("no points given".into()));
        };
        if first.len() < 2 {
            return Err(Error::InvalidParameter(
                "points must live in ℙ^n with n ≥ 1".into(),
            ));
        }
        let n = first.len() - 1;
        if points.len() != n + 3 {
            return Err(Error::DimensionMismatch {
                expected: n + 3,
                got: points.len(),
            });
        }
        if !general_position(&points)? {
            return Err(Error::GeneralPosition(
                "some n+1 of the points lie in a hyperplane".into(),
            ));
        }
        let points = points
            .iter()
            .map(|p| primitive_normalize(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointsPW { n, points })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }
}

/// The pencil `H(s:t) = { s·F + t·G = 0 }` of hyperplanes through one `Π_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilPair {
    #[serde(with = "crate::algebra::serde_rational::vec")]
    pub f: Vec<Rational>,
    #[serde(with = "crate::algebra::serde_rational::vec")]
    pub g: Vec<Rational>,
}

impl PencilPair {
    /// The linear form `s·F + t·G` evaluated at `point`.
    pub fn eval(&self, s: &Rational, t: &Rational, point: &[Rational]) -> Rational {
        self.f
            .iter()
            .zip(&self.g)
            .zip(point)
            .map(|((f, g), x)| (s * f + t * g) * x)
            .sum()
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Linear forms vanishing on all `rows`; fails unless the solution space is
/// one-dimensional.
fn unique_annihilator(rows: Vec<Vec<Rational>>, width: usize) -> Result<Vec<Rational>> {
    let ns = linalg::nullspace(&rows, width);
    match ns.len() {
        1 => Ok(ns.into_iter().next().unwrap()),
        k => Err(Error::GeneralPosition(format!(
            "expected a unique hyperplane, found a {k}-dimensional family"
        ))),
    }
}

/// The pencil of hyperplanes through `Π_i = span{p_j : j < n, j ≠ i}`, with
/// `G` vanishing at `points[n]`, `F` at `points[n+1]` and `F + G` at
/// `points[n+2]`. `(F, G)` is primitive-normalized jointly.
pub fn pencil_for_index(p: &PointsPW, i: usize) -> Result<PencilPair> {
    let n = p.n;
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let base: Vec<Vec<Rational>> = (0..n)
        .filter(|&j| j != i)
        .map(|j| p.points[j].clone())
        .collect();
    let with = |extra: &Vec<Rational>| {
        let mut rows = base.clone();
        rows.push(extra.clone());
        rows
    };
    let g = unique_annihilator(with(&p.points[n]), n + 1)?;
    let f = unique_annihilator(with(&p.points[n + 1]), n + 1)?;
    let last = &p.points[n + 2];
    let (fa, ga) = (dot(&f, last), dot(&g, last));
    if fa.is_zero() || ga.is_zero() {
        return Err(Error::GeneralPosition(
            "last point lies on a base hyperplane of the pencil".into(),
        ));
    }
    let factor = -(fa / ga);
    let g: Vec<Rational> = g.iter().map(|x| x * &factor).collect();
    let joint: Vec<Rational> = f.iter().chain(&g).cloned().collect();
    let joint = primitive_normalize(&joint)?;
    let (f, g) = joint.split_at(n + 1);
    Ok(PencilPair {
        f: f.to_vec(),
        g: g.to_vec(),
    })
}

pub fn pencils(p: &PointsPW) -> Result<Vec<PencilPair>> {
    (0..p.n).map(|i| pencil_for_index(p, i)).collect()
}

/// `(s:t) ↦ ⋂_i H_i(s:t)`, computed as the signed maximal minors of the
/// `n × (n+1)` matrix with rows `s·F_i + t·G_i`.
pub fn steiner_rnc(p: &PointsPW) -> Result<CurveParam> {
    let n = p.n;
    let rows: Vec<Vec<BiForm>> = pencils(p)?
        .into_iter()
        .map(|pp| {
            pp.f.into_iter()
                .zip(pp.g)
                .map(|(a, b)| BiForm::linear(a, b))
                .collect()
        })
        .collect();
    let comps: Vec<BiForm> = kernel_minors(&rows)
        .into_iter()
        .map(|c| if c.is_zero() { BiForm::zero(n) } else { c })
        .collect();
    let curve = CurveParam::new(comps)?;
    if curve.degree() != n {
        return Err(Error::GeneralPosition(format!(
            "pencil intersection degenerated to degree {}",
            curve.degree()
        )));
    }
    Ok(curve)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeroneseWebReport {
    /// Coordinates of the supplied forms in the basis of `W`.
    #[serde(skip)]
    pub points: Vec<Vec<Rational>>,
    pub curve: CurveParam,
    pub contained: bool,
}

/// Builds the rational normal curve through the classes of `forms` in
/// `ℙ(W)` and checks whether it lies in `I_W`. Requires `dim W = rank W`,
/// `dim W + 2` integrable forms of `W` in general position.
pub fn verify_veronese_web(w: &FormSpace, forms: &[PForm]) -> Result<VeroneseWebReport> {
    let dim = w.dim();
    if dim < 2 {
        return Err(Error::InvalidParameter(
            "a Veronese web needs dim W ≥ 2".into(),
        ));
    }
    let rank = w.rank();
    if rank != dim {
        return Err(Error::RankDeficient { rank, dim });
    }
    if forms.len() != dim + 2 {
        return Err(Error::DimensionMismatch {
            expected: dim + 2,
            got: forms.len(),
        });
    }
    let mut points = Vec::with_capacity(forms.len());
    for (k, f) in forms.iter().enumerate() {
        if !is_integrable(f)? {
            return Err(Error::NotIntegrable(k));
        }
        let lambda = w.coordinates(f)?.ok_or(Error::NotInSpace(k))?;
        points.push(lambda);
    }
    let pts = PointsPW::new(points.clone())?;
    let curve = steiner_rnc(&pts)?;
    let contained = curve_in_iw(w, &curve)?;
    Ok(VeroneseWebReport {
        points,
        curve,
        contained,
    })
}

/// Polynomial frames `ṽ_j` (columns of `adj A` for the coefficient matrix
/// `A` of the basis) with `ω_i(ṽ_j) = det(A)·δ_ij`. Requires
/// `dim W = nvars`. Returns `(det A, frames)`.
pub fn adjugate_frames(w: &FormSpace) -> Result<(MPoly, Vec<PVectorField>)> {
    let a = w.square_coefficients()?;
    let det = cofactor_det(&a);
    let adj = adjugate(&a);
    let n = w.nvars();
    let frames = (0..n)
        .map(|j| PVectorField::new((0..n).map(|k| adj[k][j].clone()).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok((det, frames))
}

/// The fields `ζ_i(s,t) = Σ_k (s F_i + t G_i)_k ṽ_k`. At a point of the Steiner
/// curve they span the kernel of the corresponding member of `W`.
pub fn pencil_frames(
    frames: &[PVectorField],
    pencils: &[PencilPair],
    s: &Rational,
    t: &Rational,
) -> Result<Vec<PVectorField>> {
    let Some(first) = frames.first() else {
        return Err(Error::InvalidParameter("no frames given".into()));
    };
    let nvars = first.nvars();
    pencils
        .iter()
        .map(|pp| {
            if pp.f.len() != frames.len() {
                return Err(Error::DimensionMismatch {
                    expected: frames.len(),
                    got: pp.f.len(),
                });
            }
            let mut z = PVectorField::zero(nvars);
            for (k, v) in frames.iter().enumerate() {
                let c = s * &pp.f[k] + t * &pp.g[k];
                if !c.is_zero() {
                    z = z.add(&v.scale(&c))?;
                }
            }
            Ok(z)
        })
        .collect()
}

/// Whether the pencil frames at `(s:t)` span an involutive distribution,
/// i.e. every `[ζ_i, ζ_j] ∧ ζ_1 ∧ ⋯ ∧ ζ_n` vanishes.
pub fn frames_involutive_at(
    w: &FormSpace,
    p: &PointsPW,
    s: &Rational,
    t: &Rational,
) -> Result<bool> {
    let (_, frames) = adjugate_frames(w)?;
    let zeta = pencil_frames(&frames, &pencils(p)?, s, t)?;
    Ok(involutivity_defect(&zeta)?
        .iter()
        .all(|(_, d)| d.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::formspace::curve_is_rnc;

    fn pts(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    fn proportional(a: &[Rational], b: &[Rational]) -> bool {
        (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
            && a.iter().any(|x| !x.is_zero())
            && b.iter().any(|x| !x.is_zero())
    }

    fn conic_points() -> PointsPW {
        PointsPW::new(pts(&[&[1, 0, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 4], &[1, 3, 9]])).unwrap()
    }

    #[test]
    fn pencils_satisfy_normalization() {
        let p = conic_points();
        for i in 0..p.n() {
            let pp = pencil_for_index(&p, i).unwrap();
            let n = p.n();
            for j in (0..n).filter(|&j| j != i) {
                assert!(dot(&pp.f, &p.points()[j]).is_zero());
                assert!(dot(&pp.g, &p.points()[j]).is_zero());
            }
            assert!(dot(&pp.g, &p.points()[n]).is_zero());
            assert!(dot(&pp.f, &p.points()[n + 1]).is_zero());
            assert!(pp.eval(&int(1), &int(1), &p.points()[n + 2]).is_zero());
        }
        assert!(pencil_for_index(&p, 2).is_err());
    }

    #[test]
    fn conic_pencils_are_lines_through_base_points() {
        // n = 2: Π_1 = {p_2}, Π_2 = {p_1}; each pencil is a kernel of a 1×3
        // system, so H_1 ∋ p_2 = (0:0:1) and H_2 ∋ p_1 = (1:0:0).
        let p = conic_points();
        let h1 = pencil_for_index(&p, 0).unwrap();
        assert!(h1.f[2].is_zero() && h1.g[2].is_zero());
        let h2 = pencil_for_index(&p, 1).unwrap();
        assert!(h2.f[0].is_zero() && h2.g[0].is_zero());
    }

    #[test]
    fn steiner_conic() {
        let p = conic_points();
        let c = steiner_rnc(&p).unwrap();
        assert_eq!(c.degree(), 2);
        // y^2 - xz vanishes identically on the parameterization
        let [x, y, z] = [&c.components()[0], &c.components()[1], &c.components()[2]];
        assert!(y.mul(y).sub(&x.mul(z)).unwrap().is_zero());
        let n = p.n();
        assert!(proportional(&c.eval(&int(0), &int(1)), &p.points()[n]));
        assert!(proportional(&c.eval(&int(1), &int(0)), &p.points()[n + 1]));
        assert!(proportional(&c.eval(&int(1), &int(1)), &p.points()[n + 2]));
        for i in 0..n {
            assert!(c.preimage(&p.points()[i]).unwrap().is_some());
        }
        let r = curve_is_rnc(&c);
        assert!(r.is_rnc && r.degree == 2);
    }

    #[test]
    fn degenerate_points_rejected() {
        let bad = pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 2, 3]]);
        assert!(matches!(PointsPW::new(bad), Err(Error::GeneralPosition(_))));
        let few = pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert!(matches!(PointsPW::new(few), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn projective_line_case() {
        // W = span{dx0, dx1}: every member is closed, the "curve" is ℙ(W)
        let w = FormSpace::new(vec![PForm::dx(2, 0), PForm::dx(2, 1)]).unwrap();
        let forms: Vec<PForm> = [[1, 0], [0, 1], [1, 1], [1, 2]]
            .iter()
            .map(|c| w.member(&[int(c[0]), int(c[1])]).unwrap())
            .collect();
        let r = verify_veronese_web(&w, &forms).unwrap();
        assert!(r.contained);
        assert_eq!(r.curve.degree(), 1);
    }

    #[test]
    fn preconditions_reported() {
        let x2 = MPoly::var(3, 2);
        let w = FormSpace::new(vec![
            PForm::dx(3, 0).mul_function(&x2).unwrap(),
            PForm::dx(3, 1),
            PForm::dx(3, 2),
        ])
        .unwrap();
        let mut forms: Vec<PForm> = (0..3)
            .map(|i| {
                let mut l = vec![int(0); 3];
                l[i] = int(1);
                w.member(&l).unwrap()
            })
            .collect();
        forms.push(w.member(&[int(1), int(1), int(1)]).unwrap());
        forms.push(w.member(&[int(1), int(2), int(3)]).unwrap());
        assert_eq!(verify_veronese_web(&w, &forms), Err(Error::NotIntegrable(3)));
        forms[3] = PForm::dx(3, 0);
        assert_eq!(verify_veronese_web(&w, &forms), Err(Error::NotInSpace(3)));
        assert!(matches!(
            verify_veronese_web(&w, &forms[..4]),
            Err(Error::DimensionMismatch { .. })
        ));
        let low = FormSpace::new(vec![
            PForm::dx(3, 0),
            PForm::dx(3, 0).mul_function(&x2).unwrap(),
            PForm::dx(3, 0).mul_function(&(&x2 * &x2)).unwrap(),
        ])
        .unwrap();
        assert_eq!(
            verify_veronese_web(&low, &forms),
            Err(Error::RankDeficient { rank: 1, dim: 3 })
        );
    }

    #[test]
    fn adjugate_frames_are_dual_up_to_det() {
        let x2 = MPoly::var(3, 2);
        let w = FormSpace::new(vec![
            PForm::dx(3, 0).mul_function(&x2).unwrap().add(&PForm::dx(3, 1)).unwrap(),
            PForm::dx(3, 1),
            PForm::dx(3, 2),
        ])
        .unwrap();
        let (det, frames) = adjugate_frames(&w).unwrap();
        assert_eq!(det, x2);
        for (i, wi) in w.basis().iter().enumerate() {
            for (j, v) in frames.iter().enumerate() {
                let c = wi.contract(v).unwrap().component(&[]);
                assert_eq!(c, if i == j { det.clone() } else { MPoly::zero(3) });
            }
        }
        // dropping frame 0 leaves the kernel of the non-integrable ω_0
        let d = involutivity_defect(&frames[1..]).unwrap();
        assert!(d.iter().any(|(_, p)| !p.is_zero()));
        // dropping frame 1 leaves the kernel of the closed ω_1
        let d = involutivity_defect(&[frames[0].clone(), frames[2].clone()]).unwrap();
        assert!(d.iter().all(|(_, p)| p.is_zero()));
    }
}
