//! Smith normal form over Q[t], determinantal divisor chains, and the
//! extraction of the homogeneous singular factors d_k(t, u).
//!
//! The normal form uses minimal-degree pivoting with Euclidean row and
//! column reduction; ties break on coefficient height, then position, so
//! the computation is deterministic. Row contents are stripped after every
//! update to keep rational coefficients small (a unit operation over Q[t]).
//!
//! Homogeneous factors are read off the invariant factors of the
//! dehomogenized matrix after a random invertible coordinate change on
//! (t, u), which moves every parameter of interest away from infinity; the
//! result is pulled back through the inverse change and certified by the
//! weighted degree sum, with a fresh draw on failure.

use crate::error::{Error, Result};
use crate::polycore::mat::{self, Mat};
use crate::polycore::rat::Rat;
use crate::polycore::{BiHomPoly, MoebiusChange, UniPoly, VarPair};
use crate::resmat::PolyMatrix;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Result of a Smith normal form computation: monic nonzero diagonal
/// entries in ascending divisibility order, then zeros; optional unimodular
/// transforms with left * A * right equal to the diagonal matrix.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diag: Vec<UniPoly>,
    pub left: Option<Mat<UniPoly>>,
    pub right: Option<Mat<UniPoly>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Products D_i = diag_1 * ... * diag_i (monic): the determinantal
    /// divisors.
    pub fn divisor_products(&self) -> Vec<UniPoly> {
        let mut out = Vec::with_capacity(self.diag.len());
        let mut acc = UniPoly::one();
        for d in &self.diag {
            acc = (&acc * d).monic();
            out.push(acc.clone());
        }
        out
    }
}

/// Pivot position in the trailing submatrix from (k, k): minimal degree,
/// ties by coefficient height, then row-major order.
fn find_pivot(m: &Mat<UniPoly>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let e = &m[(i, j)];
            if e.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    let b = &m[(bi, bj)];
                    let better = match e.deg_or0().cmp(&b.deg_or0()) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Greater => false,
                        std::cmp::Ordering::Equal => e.height() < b.height(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

struct Transforms {
    left: Option<Mat<UniPoly>>,
    right: Option<Mat<UniPoly>>,
}

impl Transforms {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if let Some(l) = &mut self.left {
            l.swap_rows(a, b);
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        if let Some(r) = &mut self.right {
            r.swap_cols(a, b);
        }
    }
}

fn row_op(m: &mut Mat<UniPoly>, t: &mut Transforms, dst: usize, src: usize, factor: &UniPoly) {
    // row_dst -= factor * row_src
    for j in 0..m.cols() {
        let v = &m[(dst, j)] - &(factor * &m[(src, j)]);
        m[(dst, j)] = v;
    }
    if let Some(l) = &mut t.left {
        for j in 0..l.cols() {
            let v = &l[(dst, j)] - &(factor * &l[(src, j)]);
            l[(dst, j)] = v;
        }
    }
}

fn col_op(m: &mut Mat<UniPoly>, t: &mut Transforms, dst: usize, src: usize, factor: &UniPoly) {
    for i in 0..m.rows() {
        let v = &m[(i, dst)] - &(factor * &m[(i, src)]);
        m[(i, dst)] = v;
    }
    if let Some(r) = &mut t.right {
        for i in 0..r.rows() {
            let v = &r[(i, dst)] - &(factor * &r[(i, src)]);
            r[(i, dst)] = v;
        }
    }
}

fn scale_row(m: &mut Mat<UniPoly>, t: &mut Transforms, i: usize, c: &Rat) {
    for j in 0..m.cols() {
        let v = m[(i, j)].scale(c);
        m[(i, j)] = v;
    }
    if let Some(l) = &mut t.left {
        for j in 0..l.cols() {
            let v = l[(i, j)].scale(c);
            l[(i, j)] = v;
        }
    }
}

fn scale_col(m: &mut Mat<UniPoly>, t: &mut Transforms, j: usize, c: &Rat) {
    for i in 0..m.rows() {
        let v = m[(i, j)].scale(c);
        m[(i, j)] = v;
    }
    if let Some(r) = &mut t.right {
        for i in 0..r.rows() {
            let v = r[(i, j)].scale(c);
            r[(i, j)] = v;
        }
    }
}

/// Divide a row by its rational content to bound coefficient growth
/// (a unit operation over Q[t]).
fn strip_row_content(m: &mut Mat<UniPoly>, t: &mut Transforms, i: usize) {
    let mut content: Option<Rat> = None;
    for j in 0..m.cols() {
        if !m[(i, j)].is_zero() {
            let c = m[(i, j)].content();
            content = Some(match content {
                None => c,
                // gcd of two positive rationals via the content of a pair
                Some(prev) => UniPoly::from_coeffs(vec![prev, c]).content(),
            });
        }
    }
    if let Some(c) = content {
        if !c.is_one() && !c.is_zero() {
            let inv = Rat::one() / c;
            scale_row(m, t, i, &inv);
        }
    }
}

fn strip_col_content(m: &mut Mat<UniPoly>, t: &mut Transforms, j: usize) {
    let mut content: Option<Rat> = None;
    for i in 0..m.rows() {
        if !m[(i, j)].is_zero() {
            let c = m[(i, j)].content();
            content = Some(match content {
                None => c,
                Some(prev) => UniPoly::from_coeffs(vec![prev, c]).content(),
            });
        }
    }
    if let Some(c) = content {
        if !c.is_one() && !c.is_zero() {
            let inv = Rat::one() / c;
            scale_col(m, t, j, &inv);
        }
    }
}

/// Smith normal form of a matrix over Q[t].
pub fn smith_normal_form(a: &Mat<UniPoly>, keep_transforms: bool) -> SmithForm {
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.clone();
    let mut t = Transforms {
        left: keep_transforms.then(|| identity(rows)),
        right: keep_transforms.then(|| identity(cols)),
    };
    // keep entries integer-primitive from the start
    for i in 0..rows {
        strip_row_content(&mut m, &mut t, i);
    }
    let steps = rows.min(cols);
    let mut k = 0;
    while k < steps {
        let Some((pi, pj)) = find_pivot(&m, k) else {
            break;
        };
        m.swap_rows(k, pi);
        t.swap_rows(k, pi);
        m.swap_cols(k, pj);
        t.swap_cols(k, pj);
        loop {
            // Clear the pivot column and row by pseudo-division (scaling a
            // row or column by a nonzero rational is a unit operation), so
            // everything stays in integer arithmetic with contents stripped
            // after each step. Leftover remainders shrink the degree and
            // re-enter pivot selection.
            let mut dirty = false;
            for i in k + 1..rows {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let (factor, q, r) = m[(i, k)].pseudo_div_rem(&m[(k, k)]);
                if !factor.is_one() {
                    scale_row(&mut m, &mut t, i, &factor);
                }
                row_op(&mut m, &mut t, i, k, &q);
                strip_row_content(&mut m, &mut t, i);
                if !r.is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if m[(k, j)].is_zero() {
                    continue;
                }
                let (factor, q, r) = m[(k, j)].pseudo_div_rem(&m[(k, k)]);
                if !factor.is_one() {
                    scale_col(&mut m, &mut t, j, &factor);
                }
                col_op(&mut m, &mut t, j, k, &q);
                strip_col_content(&mut m, &mut t, j);
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = find_pivot(&m, k).expect("nonzero entry survives");
                m.swap_rows(k, pi);
                t.swap_rows(k, pi);
                m.swap_cols(k, pj);
                t.swap_cols(k, pj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let mut witness = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !m[(i, j)].is_zero() && m[(i, j)].exact_div(&m[(k, k)]).is_none() {
                        witness = Some(i);
                        break 'scan;
                    }
                }
            }
            match witness {
                Some(i) => {
                    // fold the offending row into row k and restart
                    let minus_one = UniPoly::constant(-Rat::one());
                    row_op(&mut m, &mut t, k, i, &minus_one);
                    strip_row_content(&mut m, &mut t, k);
                }
                None => break,
            }
        }
        let lc = m[(k, k)].leading_coeff().cloned().unwrap();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            scale_row(&mut m, &mut t, k, &inv);
        }
        k += 1;
    }
    let diag = (0..steps).map(|i| m[(i, i)].clone()).collect::<Vec<_>>();
    debug_assert!(chain_is_consistent(&diag));
    SmithForm {
        diag,
        left: t.left,
        right: t.right,
    }
}

fn identity(n: usize) -> Mat<UniPoly> {
    Mat::from_fn(n, n, |i, j| if i == j { UniPoly::one() } else { UniPoly::zero() })
}

fn chain_is_consistent(diag: &[UniPoly]) -> bool {
    for w in diag.windows(2) {
        match (w[0].is_zero(), w[1].is_zero()) {
            (true, false) => return false,
            (false, true) | (true, true) => {}
            (false, false) => {
                if w[1].exact_div(&w[0]).is_none() {
                    return false;
                }
            }
        }
    }
    true
}

/// Determinantal divisor chain over Q[t] by exhaustive minor enumeration.
/// Entry i - 1 is the monic gcd of all i x i minors; the guard keeps the
/// combinatorial blow-up in check.
pub fn determinantal_divisors(a: &Mat<UniPoly>, guard: usize) -> Result<Vec<UniPoly>> {
    let size = a.rows().max(a.cols());
    if size > guard {
        return Err(Error::EnumGuard { size, guard });
    }
    let top = a.rows().min(a.cols());
    let mut out = Vec::with_capacity(top);
    for i in 1..=top {
        out.push(determinantal_divisor_at(a, i));
    }
    Ok(out)
}

/// Monic gcd of all i x i minors, any matrix size.
pub fn determinantal_divisor_at(a: &Mat<UniPoly>, i: usize) -> UniPoly {
    assert!(i >= 1 && i <= a.rows().min(a.cols()));
    let row_sets = mat::index_subsets(a.rows(), i);
    let col_sets = mat::index_subsets(a.cols(), i);
    let mut acc = UniPoly::zero();
    for rs in &row_sets {
        for cs in &col_sets {
            let d = mat::det_interp(&a.submatrix(rs, cs));
            acc = acc.gcd(&d);
            if acc.is_constant() && !acc.is_zero() {
                return UniPoly::one();
            }
        }
    }
    acc
}

/// Homogeneous determinantal divisor chain of a (t, u)-form matrix. Each
/// minor is computed dehomogenized and re-homogenized against its column
/// degree sums, then folded through homogeneous gcds; this is where factors
/// supported at infinity (powers of u) are picked up.
pub fn determinantal_divisors_hom(p: &PolyMatrix, guard: usize) -> Result<Vec<BiHomPoly>> {
    let a = &p.mat;
    let size = a.rows().max(a.cols());
    if size > guard {
        return Err(Error::EnumGuard { size, guard });
    }
    let top = a.rows().min(a.cols());
    let mut out = Vec::with_capacity(top);
    for i in 1..=top {
        out.push(hom_divisor_at(p, i)?);
    }
    Ok(out)
}

/// Homogeneous gcd of all i x i minors of a form matrix.
pub fn hom_divisor_at(p: &PolyMatrix, i: usize) -> Result<BiHomPoly> {
    let a = &p.mat;
    assert!(i >= 1 && i <= a.rows().min(a.cols()));
    let row_sets = mat::index_subsets(a.rows(), i);
    let col_sets = mat::index_subsets(a.cols(), i);
    let mut acc = BiHomPoly::zero(VarPair::TU);
    for rs in &row_sets {
        for cs in &col_sets {
            let sub = a.submatrix(rs, cs);
            let d = mat::det_interp(&sub.map(|e| e.dehom()));
            let minor = if d.is_zero() {
                BiHomPoly::zero(VarPair::TU)
            } else {
                let mut total = 0;
                for j in 0..sub.cols() {
                    total += (0..sub.rows()).map(|r| sub[(r, j)].degree()).max().unwrap();
                }
                BiHomPoly::homogenize(&d, total, VarPair::TU)
            };
            acc = acc.gcd(&minor)?;
            if !acc.is_zero() && acc.degree() == 0 {
                return Ok(BiHomPoly::one(VarPair::TU));
            }
        }
    }
    Ok(acc)
}

/// The singular factors d_k(t, u) of a parameterization, normalized
/// primitive, with d_k = 1 beyond n - mu; `reduced` is filled by the
/// singularity layer.
#[derive(Clone, Debug)]
pub struct SingularFactorSet {
    pub n: usize,
    pub mu: usize,
    pub factors: BTreeMap<usize, BiHomPoly>,
    pub reduced: Option<BTreeMap<usize, BiHomPoly>>,
}

impl SingularFactorSet {
    pub fn factor(&self, k: usize) -> &BiHomPoly {
        &self.factors[&k]
    }

    /// sum over k of (k - 1) deg d_k; equals (n-1)(n-2) for birational
    /// input.
    pub fn weighted_degree_sum(&self) -> usize {
        self.factors.iter().map(|(k, d)| (k - 1) * d.degree()).sum()
    }

    /// Product d_n^(n-1) ... d_2: the conductor form predicted by the
    /// factor set, normalized.
    pub fn delta_product(&self) -> BiHomPoly {
        let mut acc = BiHomPoly::one(VarPair::TU);
        for (k, d) in &self.factors {
            acc = acc.mul(&d.pow(k - 1));
        }
        acc.normalize_primitive()
    }

    pub fn equal_factors(&self, other: &SingularFactorSet) -> bool {
        self.n == other.n && (2..=self.n).all(|k| self.factor(k).eq_up_to_scalar(other.factor(k)))
    }
}

/// Read the singular factors off the invariant-factor chain of a resultant
/// matrix of the parameterization. The matrix may be any member of the
/// hybrid family (size n - j for j <= mu).
///
/// Procedure: draw a random invertible change of (t, u) coordinates from
/// the seed, transform entrywise, dehomogenize at u = 1, take the Smith
/// form, read d_k from consecutive diagonal ratios, homogenize each factor
/// to its own degree, pull back through the inverse change and normalize.
/// A draw is accepted only if the last diagonal entry is the single zero,
/// every d_k with k > n - mu is trivial, and the weighted degree sum equals
/// (n-1)(n-2); otherwise a fresh change is drawn (at most 5).
pub fn singular_factors(
    s: &PolyMatrix,
    n: usize,
    mu: usize,
    seed: u64,
) -> Result<SingularFactorSet> {
    let size = s.size();
    assert!(size >= 2 && size <= n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_err = String::new();
    for _ in 0..5 {
        let moeb = MoebiusChange::random(&mut rng);
        match extract_with_change(s, n, mu, &moeb) {
            Ok(set) => return Ok(set),
            Err(e) => last_err = e.to_string(),
        }
    }
    Err(Error::SingularFactors(format!(
        "persistent failure; non-birational or degenerate input ({})",
        last_err
    )))
}

fn extract_with_change(
    s: &PolyMatrix,
    n: usize,
    mu: usize,
    moeb: &MoebiusChange,
) -> Result<SingularFactorSet> {
    let size = s.size();
    let transformed = s.apply_moebius(moeb);
    let snf = smith_normal_form(&transformed.dehom(), false);
    let rank = snf.rank();
    if rank != size - 1 || !snf.diag[size - 1].is_zero() {
        return Err(Error::SingularFactors(format!(
            "rank {} instead of {}",
            rank,
            size - 1
        )));
    }
    // chain[i] = e_i with the convention e_0 = 1
    let chain: Vec<UniPoly> = std::iter::once(UniPoly::one())
        .chain(snf.diag[..size - 1].iter().cloned())
        .collect();
    let inv = moeb.inverse();
    let mut factors = BTreeMap::new();
    for k in 2..=n {
        let d = if k <= size {
            chain[size - k + 1].exact_div(&chain[size - k]).ok_or_else(|| {
                Error::SingularFactors("diagonal ratio is not an exact division".into())
            })?
        } else {
            UniPoly::one()
        };
        if k > n - mu && d.deg_or0() > 0 {
            return Err(Error::SingularFactors(format!(
                "factor d_{} should be trivial but has degree {}",
                k,
                d.deg_or0()
            )));
        }
        let hom = BiHomPoly::homogenize(&d, d.deg_or0(), VarPair::TU);
        factors.insert(k, inv.apply(&hom).normalize_primitive());
    }
    let set = SingularFactorSet {
        n,
        mu,
        factors,
        reduced: None,
    };
    let expected = (n - 1) * (n - 2);
    if set.weighted_degree_sum() != expected {
        return Err(Error::SingularFactors(format!(
            "weighted degree sum {} != {}",
            set.weighted_degree_sum(),
            expected
        )));
    }
    Ok(set)
}

/// Fitting-support checks on the Sylvester matrix of the moving forms: the
/// determinant vanishes identically, the product of the nonzero invariant
/// factors matches the conductor at u = 1, and the divisors below mu are
/// trivial.
#[derive(Clone, Debug)]
pub struct FittingReport {
    pub det_zero: bool,
    pub conductor_matches: bool,
    pub low_divisors_trivial: bool,
    pub failures: Vec<String>,
}

impl FittingReport {
    pub fn all_pass(&self) -> bool {
        self.det_zero && self.conductor_matches && self.low_divisors_trivial
    }
}

pub fn fitting_support_check(s: &PolyMatrix, mu: usize, delta: &BiHomPoly) -> FittingReport {
    let mut failures = Vec::new();
    let n = s.size();
    let det_zero = s.det().is_zero();
    if !det_zero {
        failures.push("det(S) != 0".into());
    }
    let snf = smith_normal_form(&s.dehom(), false);
    let products = snf.divisor_products();
    let conductor_matches = if snf.rank() == n - 1 {
        products[n - 2].eq_up_to_scalar(&delta.dehom())
    } else {
        false
    };
    if !conductor_matches {
        failures.push("product of invariant factors != Delta(t, 1)".into());
    }
    let low_divisors_trivial = (0..mu.saturating_sub(1)).all(|i| {
        let d = &snf.diag[i];
        !d.is_zero() && d.is_constant()
    });
    if !low_divisors_trivial {
        failures.push(format!("some divisor below index {} is nontrivial", mu));
    }
    FittingReport {
        det_zero,
        conductor_matches,
        low_divisors_trivial,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mubasis::compute_mu_basis;
    use crate::polycore::rat::rat_i;
    use crate::resmat::{build_moving_forms, build_sylvester};
    use crate::samples;
    use rand::Rng;

    fn upoly(v: &[i64]) -> UniPoly {
        UniPoly::from_i64(v)
    }

    #[test]
    fn identity_snf() {
        let m = identity(3);
        let snf = smith_normal_form(&m, true);
        assert!(snf.diag.iter().all(|d| d.is_constant() && !d.is_zero()));
        assert_eq!(snf.rank(), 3);
    }

    #[test]
    fn reorders_to_divisibility_chain() {
        // diag(t^2, t, 1) must come out as (1, t, t^2)
        let z = UniPoly::zero;
        let m = Mat::from_rows(vec![
            vec![upoly(&[0, 0, 1]), z(), z()],
            vec![z(), upoly(&[0, 1]), z()],
            vec![z(), z(), upoly(&[1])],
        ]);
        let snf = smith_normal_form(&m, true);
        assert_eq!(snf.diag[0], UniPoly::one());
        assert_eq!(snf.diag[1], upoly(&[0, 1]));
        assert_eq!(snf.diag[2], upoly(&[0, 0, 1]));
    }

    fn mat_mul(a: &Mat<UniPoly>, b: &Mat<UniPoly>) -> Mat<UniPoly> {
        Mat::from_fn(a.rows(), b.cols(), |i, j| {
            let mut acc = UniPoly::zero();
            for k in 0..a.cols() {
                acc = &acc + &(&a[(i, k)] * &b[(k, j)]);
            }
            acc
        })
    }

    #[test]
    fn transforms_reproduce_diagonal_and_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let m = Mat::from_fn(4, 4, |_, _| {
                UniPoly::from_coeffs(
                    (0..=rng.gen_range(0..=2))
                        .map(|_| rat_i(rng.gen_range(-4i64..=4)))
                        .collect(),
                )
            });
            let snf = smith_normal_form(&m, true);
            let l = snf.left.as_ref().unwrap();
            let r = snf.right.as_ref().unwrap();
            let dl = mat::det_interp(l);
            let dr = mat::det_interp(r);
            assert!(dl.is_constant() && !dl.is_zero());
            assert!(dr.is_constant() && !dr.is_zero());
            let prod = mat_mul(&mat_mul(l, &m), r);
            for i in 0..4 {
                for j in 0..4 {
                    if i == j {
                        assert_eq!(prod[(i, j)], snf.diag[i]);
                    } else {
                        assert!(prod[(i, j)].is_zero());
                    }
                }
            }
            assert!(chain_is_consistent(&snf.diag));
        }
    }

    #[test]
    fn snf_matches_minor_gcds_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..8 {
            let m = Mat::from_fn(4, 4, |_, _| {
                UniPoly::from_coeffs(
                    (0..=rng.gen_range(0..=2))
                        .map(|_| rat_i(rng.gen_range(-3i64..=3)))
                        .collect(),
                )
            });
            let snf = smith_normal_form(&m, false);
            let chain = determinantal_divisors(&m, 8).unwrap();
            let products = snf.divisor_products();
            for i in 0..4 {
                let both_zero = products[i].is_zero() && chain[i].is_zero();
                assert!(
                    both_zero || products[i].eq_up_to_scalar(&chain[i]),
                    "level {}",
                    i + 1
                );
            }
        }
    }

    #[test]
    fn divisor_guard() {
        let m = identity(9);
        assert!(matches!(
            determinantal_divisors(&m, 8),
            Err(Error::EnumGuard { .. })
        ));
    }

    #[test]
    fn cuspidal_singular_factors() {
        let phi = samples::cuspidal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let mf = build_moving_forms(&phi, &basis).unwrap();
        let s = build_sylvester(&mf);
        let set = singular_factors(&s, 3, 1, 0).unwrap();
        // d_2 = t^2 (cusp at t = 0), d_3 = 1
        let t2 = BiHomPoly::monomial(rat_i(1), 2, 2, VarPair::TU);
        assert!(set.factor(2).eq_up_to_scalar(&t2));
        assert_eq!(set.factor(3).degree(), 0);
        assert_eq!(set.weighted_degree_sum(), 2);
    }

    #[test]
    fn nodal_singular_factors() {
        let phi = samples::nodal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let mf = build_moving_forms(&phi, &basis).unwrap();
        let s = build_sylvester(&mf);
        let set = singular_factors(&s, 3, 1, 0).unwrap();
        // d_2 = t^2 - u^2 (node branches at t = 1 and t = -1)
        let expect = BiHomPoly::from_i64(&[-1, 0, 1], VarPair::TU);
        assert!(set.factor(2).eq_up_to_scalar(&expect));
    }

    #[test]
    fn seed_independence_on_cubics() {
        for phi in [samples::cuspidal_cubic(), samples::nodal_cubic()] {
            let basis = compute_mu_basis(&phi).unwrap();
            let mf = build_moving_forms(&phi, &basis).unwrap();
            let s = build_sylvester(&mf);
            let a = singular_factors(&s, 3, basis.mu, 1).unwrap();
            let b = singular_factors(&s, 3, basis.mu, 424243).unwrap();
            assert!(a.equal_factors(&b));
        }
    }

    #[test]
    fn fitting_support_cuspidal() {
        let phi = samples::cuspidal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let mf = build_moving_forms(&phi, &basis).unwrap();
        let s = build_sylvester(&mf);
        // the conductor of the cusp is t^2
        let delta = BiHomPoly::monomial(rat_i(1), 2, 2, VarPair::TU);
        let rep = fitting_support_check(&s, basis.mu, &delta);
        assert!(rep.all_pass(), "{:?}", rep.failures);
        // enumeration cross-check of the divisor chain at u = 1
        let chain = determinantal_divisors(&s.dehom(), 8).unwrap();
        assert!(chain[1].eq_up_to_scalar(&UniPoly::from_i64(&[0, 0, 1])));
        assert!(chain[2].is_zero());
    }
}
