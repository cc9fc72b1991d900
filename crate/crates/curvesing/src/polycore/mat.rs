//! Dense matrices and the exact linear algebra used everywhere else.
//!
//! Over Q: reduced row echelon form, deterministic kernel bases, solving,
//! rank, and Gaussian determinants. Over Q[t]: determinants by evaluation
//! at deg+1 points plus Newton interpolation (the fast path) and by
//! fraction-free Bareiss elimination (the independent oracle path).
//! Generic builders for Sylvester and Cayley/Bezout matrices live here so
//! the same code serves rational, homogeneous-form, and symbolic entries.

use super::rat::Rat;
use super::unipoly::UniPoly;
use itertools::Itertools;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

/// Minimal coefficient-ring interface for the generic matrix builders.
pub trait Coeff: Clone {
    fn is_zero_elem(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Coeff for Rat {
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coeff for UniPoly {
    fn is_zero_elem(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coeff for super::bihom::BiHomPoly {
    fn is_zero_elem(&self) -> bool {
        super::bihom::BiHomPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        super::bihom::BiHomPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        super::bihom::BiHomPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        super::bihom::BiHomPoly::mul(self, other)
    }
}

impl Coeff for super::tripoly::TriPoly {
    fn is_zero_elem(&self) -> bool {
        super::tripoly::TriPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        super::tripoly::TriPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        super::tripoly::TriPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        super::tripoly::TriPoly::mul(self, other)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn filled(rows: usize, cols: usize, fill: T) -> Self {
        Mat {
            rows,
            cols,
            data: vec![fill; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|t| f(t)).collect(),
        }
    }

    pub fn submatrix(&self, keep_rows: &[usize], keep_cols: &[usize]) -> Mat<T> {
        Mat::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
            self[(keep_rows[i], keep_cols[j])].clone()
        })
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[ ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Coeff> Mat<T> {
    /// Matrix product (small sizes only).
    pub fn matmul(&self, other: &Mat<T>, zero: &T) -> Mat<T> {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                acc = acc.add(&self[(i, k)].mul(&other[(k, j)]));
            }
            acc
        })
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Q
// ---------------------------------------------------------------------------

/// Reduce to reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Mat<Rat>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        let Some(p) = (r..m.rows()).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = Rat::one() / m[(r, c)].clone();
        for j in c..m.cols() {
            let v = &m[(r, j)] * &inv;
            m[(r, j)] = v;
        }
        for i in 0..m.rows() {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                for j in c..m.cols() {
                    let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_rat(m: &Mat<Rat>) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Canonical kernel basis from the RREF: one vector per free column, with a
/// 1 in the free coordinate. Deterministic, which keeps downstream golden
/// values stable.
pub fn kernel_basis(m: &Mat<Rat>) -> Vec<Vec<Rat>> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let n = m.cols();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -w[(ri, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve A x = b exactly; `None` when inconsistent. If the system is
/// underdetermined the free coordinates are set to zero.
pub fn solve_rat(a: &Mat<Rat>, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len());
    let mut aug = Mat::from_fn(a.rows(), a.cols() + 1, |i, j| {
        if j < a.cols() {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.contains(&a.cols()) {
        return None;
    }
    let mut x = vec![Rat::zero(); a.cols()];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[(ri, a.cols())].clone();
    }
    Some(x)
}

/// Determinant over Q by Gaussian elimination.
pub fn det_rat(m: &Mat<Rat>) -> Rat {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut det = Rat::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
            return Rat::zero();
        };
        if p != k {
            a.swap_rows(k, p);
            det = -det;
        }
        let pivot = a[(k, k)].clone();
        det = det * &pivot;
        let inv = Rat::one() / pivot;
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] * &inv;
            for j in k..n {
                let v = &a[(i, j)] - &(&f * &a[(k, j)]);
                a[(i, j)] = v;
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// Determinants over Q[t]
// ---------------------------------------------------------------------------

/// Degree bound for the determinant: min of the row-wise and column-wise
/// sums of maximal entry degrees. `None` when some row or column is zero
/// (then the determinant is identically zero).
fn det_degree_bound(m: &Mat<UniPoly>) -> Option<usize> {
    let mut row_sum = 0usize;
    for i in 0..m.rows() {
        let d = (0..m.cols())
            .filter_map(|j| m[(i, j)].degree())
            .max()?;
        row_sum += d;
    }
    let mut col_sum = 0usize;
    for j in 0..m.cols() {
        let d = (0..m.rows())
            .filter_map(|i| m[(i, j)].degree())
            .max()?;
        col_sum += d;
    }
    Some(row_sum.min(col_sum))
}

/// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> UniPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    // Divided differences.
    let mut dd: Vec<Rat> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    let mut acc = UniPoly::zero();
    let mut basis = UniPoly::one();
    for i in 0..n {
        acc = &acc + &basis.scale(&dd[i]);
        basis = &basis * &UniPoly::from_coeffs(vec![-xs[i].clone(), Rat::one()]);
    }
    acc
}

/// Deterministic evaluation points 0, 1, -1, 2, -2, ...
pub fn eval_points(count: usize) -> Vec<Rat> {
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        if k == 0 {
            pts.push(Rat::zero());
        } else {
            pts.push(super::rat::rat_i(k));
            if pts.len() < count {
                pts.push(super::rat::rat_i(-k));
            }
        }
        k += 1;
    }
    pts
}

/// Determinant of a polynomial matrix by evaluation and interpolation.
/// This is the fast path; the Bareiss version below is the oracle.
pub fn det_interp(m: &Mat<UniPoly>) -> UniPoly {
    assert!(m.is_square());
    if m.rows() == 0 {
        return UniPoly::one();
    }
    let Some(bound) = det_degree_bound(m) else {
        return UniPoly::zero();
    };
    let xs = eval_points(bound + 1);
    let ys: Vec<Rat> = xs
        .iter()
        .map(|x| det_rat(&m.map(|p| p.eval(x))))
        .collect();
    interpolate(&xs, &ys)
}

/// Fraction-free Bareiss determinant over Q[t]. All intermediate divisions
/// are exact, which is the standard Bareiss invariant; a division failure
/// would mean corrupted input and panics.
pub fn det_bareiss(m: &Mat<UniPoly>) -> UniPoly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return UniPoly::one();
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return UniPoly::zero();
            };
            a.swap_rows(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[(k, k)] * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                a[(i, j)] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact");
            }
            a[(i, k)] = UniPoly::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// All k-element index subsets of 0..n, lexicographic.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

// ---------------------------------------------------------------------------
// Generic resultant-style builders
// ---------------------------------------------------------------------------

/// Sylvester matrix of f (declared degree df) and g (declared degree dg) in
/// the conventions used throughout: rows indexed by the monomials
/// s^(N-1), ..., s^0 v^(N-1) with N = df + dg (top row is the highest pure
/// power of the first variable), columns are dg shifted copies of f with the
/// lowest shift first, then df shifted copies of g.
pub fn sylvester_matrix<T: Coeff>(f: &[T], df: usize, g: &[T], dg: usize, zero: &T) -> Mat<T> {
    assert_eq!(f.len(), df + 1);
    assert_eq!(g.len(), dg + 1);
    let n = df + dg;
    Mat::from_fn(n, n, |row, col| {
        let mono = n - 1 - row; // exponent of the first variable
        let (coeffs, deg, shift) = if col < dg {
            (f, df, col)
        } else {
            (g, dg, col - dg)
        };
        if mono >= shift && mono - shift <= deg {
            coeffs[mono - shift].clone()
        } else {
            zero.clone()
        }
    })
}

/// Cayley/Bezout matrix of two coefficient lists of common declared degree
/// n: entries B[i][j] from the expansion of
/// (f(s) g(w) - f(w) g(s)) / (s - w) = sum B[i][j] s^i w^j.
pub fn cayley_bezout<T: Coeff>(f: &[T], g: &[T], zero: &T) -> Mat<T> {
    assert_eq!(f.len(), g.len(), "Bezout needs a common declared degree");
    let n = f.len() - 1;
    assert!(n >= 1);
    // Numerator coefficients: num[a][b] multiplies s^a w^b.
    let mut num = vec![vec![zero.clone(); n + 1]; n + 1];
    for a in 0..=n {
        for b in 0..=n {
            num[a][b] = f[a].mul(&g[b]).sub(&f[b].mul(&g[a]));
        }
    }
    // Synthetic division by (s - w) in the variable s: coefficients are
    // polynomials in w represented as vectors.
    let mut q: Vec<Vec<T>> = vec![vec![zero.clone(); n + 1]; n];
    q[n - 1] = num[n].clone();
    for a in (1..n).rev() {
        // q[a-1] = num[a] + w * q[a]
        let mut next = num[a].clone();
        for b in 0..n {
            next[b + 1] = next[b + 1].add(&q[a][b]);
        }
        q[a - 1] = next;
    }
    // Remainder num[0] + w * q[0] must vanish.
    let mut rem = num[0].clone();
    for b in 0..n {
        rem[b + 1] = rem[b + 1].add(&q[0][b]);
    }
    assert!(
        rem.iter().all(|c| c.is_zero_elem()),
        "Cayley quotient left a remainder"
    );
    Mat::from_fn(n, n, |i, j| q[i][j].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::{rat_frac, rat_i};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Mat<Rat> {
        Mat::from_rows(vec![vec![rat_i(a), rat_i(b)], vec![rat_i(c), rat_i(d)]])
    }

    #[test]
    fn det_and_rank() {
        assert_eq!(det_rat(&m2(1, 2, 3, 4)), rat_i(-2));
        assert_eq!(det_rat(&m2(1, 2, 2, 4)), rat_i(0));
        assert_eq!(rank_rat(&m2(1, 2, 2, 4)), 1);
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel_basis(&m2(1, 2, 2, 4));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![rat_i(-2), rat_i(1)]);
    }

    #[test]
    fn solve_exact() {
        let a = m2(2, 1, 1, 3);
        let x = solve_rat(&a, &[rat_i(5), rat_i(10)]).unwrap();
        assert_eq!(x, vec![rat_i(1), rat_i(3)]);
        let sing = m2(1, 2, 2, 4);
        assert!(solve_rat(&sing, &[rat_i(1), rat_i(3)]).is_none());
    }

    #[test]
    fn interpolation_recovers() {
        let p = UniPoly::from_i64(&[3, 0, -2, 5]);
        let xs = eval_points(4);
        let ys: Vec<Rat> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }

    #[test]
    fn poly_det_two_routes_agree() {
        let e = |v: &[i64]| UniPoly::from_i64(v);
        let m = Mat::from_rows(vec![
            vec![e(&[1, 1]), e(&[0, 0, 2]), e(&[3])],
            vec![e(&[0]), e(&[1, -1]), e(&[2, 1])],
            vec![e(&[5, 0, 1]), e(&[1]), e(&[0, 4])],
        ]);
        let a = det_interp(&m);
        let b = det_bareiss(&m);
        assert_eq!(a, b);
        // spot check at a point
        let x = rat_frac(3, 2);
        assert_eq!(a.eval(&x), det_rat(&m.map(|p| p.eval(&x))));
    }

    #[test]
    fn sylvester_resultant_of_linear_forms() {
        // Res(s - v, s + v) = 2 up to sign: 2x2 determinant.
        let f = vec![rat_i(-1), rat_i(1)]; // s - v as [v-coeff, s-coeff]
        let g = vec![rat_i(1), rat_i(1)];
        let m = sylvester_matrix(&f, 1, &g, 1, &Rat::zero());
        let d = det_rat(&m);
        assert!(d == rat_i(2) || d == rat_i(-2));
    }

    #[test]
    fn bezout_of_quadratics() {
        // f = s^2 - 1, g = s: Bezoutian (f(s)g(w) - f(w)g(s))/(s-w) = sw + 1... check det = -Res? Just
        // verify against the defining identity at sample points.
        let f = vec![rat_i(-1), rat_i(0), rat_i(1)];
        let g = vec![rat_i(0), rat_i(1), rat_i(0)];
        let b = cayley_bezout(&f, &g, &Rat::zero());
        let ev = |c: &[Rat], x: &Rat| {
            let mut acc = Rat::zero();
            for ci in c.iter().rev() {
                acc = acc * x + ci;
            }
            acc
        };
        for (sv, wv) in [(2i64, 3i64), (5, -1), (-2, 7)] {
            let s = rat_i(sv);
            let w = rat_i(wv);
            let lhs = (ev(&f, &s) * ev(&g, &w) - ev(&f, &w) * ev(&g, &s)) / (&s - &w);
            let mut rhs = Rat::zero();
            for i in 0..2 {
                for j in 0..2 {
                    rhs = rhs + &b[(i, j)] * s.pow(i as i32) * w.pow(j as i32);
                }
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bareiss_rank_deficient() {
        let e = |v: &[i64]| UniPoly::from_i64(v);
        // rows 0 and 2 proportional
        let m = Mat::from_rows(vec![
            vec![e(&[1, 1]), e(&[0, 1]), e(&[2])],
            vec![e(&[1]), e(&[3]), e(&[0, 0, 1])],
            vec![e(&[2, 2]), e(&[0, 2]), e(&[4])],
        ]);
        assert!(det_bareiss(&m).is_zero());
        assert!(det_interp(&m).is_zero());
    }
}
