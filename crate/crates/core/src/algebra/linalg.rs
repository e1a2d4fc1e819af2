//! Dense linear algebra over ℚ, plus cofactor determinants over polynomial
//! rings (used for Cramer minors and adjugate frames).

use num_traits::{One, Zero};

use super::{BiForm, MPoly, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : m·x = 0}`, one vector per free column.
pub fn nullspace(m: &Matrix, ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let delta = &f * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    det
}

/// Some solution of `m·x = b`, or `None` if the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.last().is_some_and(|&p| p >= n) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Commutative ring elements that know their own zero and one.
pub trait RingElement: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elt(&self) -> bool;
    fn add_elt(&self, other: &Self) -> Self;
    fn sub_elt(&self, other: &Self) -> Self;
    fn mul_elt(&self, other: &Self) -> Self;
}

impl RingElement for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn add_elt(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elt(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elt(&self, o: &Self) -> Self {
        self * o
    }
}

impl RingElement for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MPoly::one(self.nvars())
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn add_elt(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elt(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elt(&self, o: &Self) -> Self {
        self * o
    }
}

/// Binary forms of mixed degree are added only when one side is zero; the
/// determinant expansion below only adds homogeneous terms of equal degree.
impl RingElement for BiForm {
    fn zero_like(&self) -> Self {
        BiForm::zero(0)
    }
    fn one_like(&self) -> Self {
        BiForm::constant(Rational::one())
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn add_elt(&self, o: &Self) -> Self {
        match (self.is_zero(), o.is_zero()) {
            (true, _) => o.clone(),
            (_, true) => self.clone(),
            _ => self.add(o).expect("inhomogeneous binary form sum"),
        }
    }
    fn sub_elt(&self, o: &Self) -> Self {
        match (self.is_zero(), o.is_zero()) {
            (true, _) => o.scale(&-Rational::one()),
            (_, true) => self.clone(),
            _ => self.sub(o).expect("inhomogeneous binary form difference"),
        }
    }
    fn mul_elt(&self, o: &Self) -> Self {
        self.mul(o)
    }
}

/// Determinant by cofactor expansion along the first row. Intended for the
/// small matrices (at most 6×6) that arise here; zero entries are skipped.
pub fn cofactor_det<R: RingElement>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(n > 0, "determinant of an empty matrix");
    let cols: Vec<usize> = (0..n).collect();
    expand(m, 0, &cols)
}

fn expand<R: RingElement>(m: &[Vec<R>], row: usize, cols: &[usize]) -> R {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc: Option<R> = None;
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero_elt() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = expand(m, row + 1, &rest);
        if minor.is_zero_elt() {
            continue;
        }
        let term = entry.mul_elt(&minor);
        acc = Some(match acc {
            None if k % 2 == 0 => term,
            None => term.zero_like().sub_elt(&term),
            Some(a) if k % 2 == 0 => a.add_elt(&term),
            Some(a) => a.sub_elt(&term),
        });
    }
    acc.unwrap_or_else(|| m[row][cols[0]].zero_like())
}

/// Signed maximal minors of an `n × (n+1)` matrix: entry `k` is
/// `(-1)^k det(m without column k)`. The resulting vector spans the kernel
/// of `m` wherever `m` has full rank.
pub fn kernel_minors<R: RingElement>(m: &[Vec<R>]) -> Vec<R> {
    let n = m.len();
    let ncols = n + 1;
    (0..ncols)
        .map(|k| {
            let sub: Vec<Vec<R>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != k)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = cofactor_det(&sub);
            if k % 2 == 0 {
                d
            } else {
                d.zero_like().sub_elt(&d)
            }
        })
        .collect()
}

/// Adjugate (transposed cofactor matrix) of a square matrix, so that
/// `m · adj(m) = det(m) · I`.
pub fn adjugate<R: RingElement>(m: &[Vec<R>]) -> Vec<Vec<R>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![m[0][0].one_like()]];
    }
    let mut adj = vec![Vec::with_capacity(n); n];
    for (j, adj_row) in adj.iter_mut().enumerate() {
        for i in 0..n {
            // adj[j][i] = (-1)^(i+j) det(m without row i, column j)
            let sub: Vec<Vec<R>> = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = cofactor_det(&sub);
            adj_row.push(if (i + j) % 2 == 0 {
                d
            } else {
                d.zero_like().sub_elt(&d)
            });
        }
    }
    adj
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot: Rational = row.iter().zip(&ns[0]).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn elimination_matches_cofactors() {
        let a = m(&[&[2, -1, 0, 3], &[1, 1, 4, 0], &[0, 5, -2, 1], &[7, 0, 1, 1]]);
        assert_eq!(determinant(&a), cofactor_det(&a));
    }

    #[test]
    fn adjugate_identity() {
        let a = m(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        let adj = adjugate(&a);
        let det = determinant(&a);
        for i in 0..3 {
            for j in 0..3 {
                let v: Rational = (0..3).map(|k| &a[i][k] * &adj[k][j]).sum();
                assert_eq!(v, if i == j { det.clone() } else { int(0) });
            }
        }
    }

    #[test]
    fn kernel_minors_annihilate_rows() {
        let a = m(&[&[1, 2, 3, 4], &[0, 1, -1, 2], &[3, 0, 1, 1]]);
        let k = kernel_minors(&a);
        for row in &a {
            let dot: Rational = row.iter().zip(&k).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
        assert!(k.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[int(3), int(1)]), Some(vec![int(2), int(1)]));
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&b, &[int(1), int(3)]), None);
    }
}
