//! Approximate complex roots, used only for display in reports.
//!
//! The exact pipeline never consumes these values. Multiplicities come from
//! the exact square-free decomposition; Aberth-Ehrlich iteration then runs
//! on each square-free factor. Non-convergence is flagged, never silent.
//! Rational roots are found by rounding numeric candidates and verifying
//! the linear factor exactly, so a reported rational root is always exact.

use super::rat::{rat_i, Rat};
use super::unipoly::UniPoly;
use crate::error::Result;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct ApproxRoot {
    pub value: Complex64,
    pub multiplicity: usize,
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct RootApproximation {
    pub roots: Vec<ApproxRoot>,
    /// False when some factor hit the iteration cap before meeting the
    /// tolerance; the partial values are still returned.
    pub converged: bool,
}

fn to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::MAX) / r.denom().to_f64().unwrap_or(1.0)
}

fn eval_c(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Aberth-Ehrlich on a square-free monic polynomial given by f64
/// coefficients. Returns the roots and whether the update step shrank
/// below the tolerance within the iteration cap.
fn aberth(coeffs: &[f64], tol: f64) -> (Vec<Complex64>, bool) {
    let n = coeffs.len() - 1;
    if n == 0 {
        return (Vec::new(), true);
    }
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();
    // Initial guesses on a circle scaled by a root bound.
    let bound = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / coeffs[n]).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(bound * 0.7, theta)
        })
        .collect();
    let cap = 200;
    for _ in 0..cap {
        let mut max_step = 0.0f64;
        let prev = z.clone();
        for i in 0..n {
            let p = eval_c(coeffs, prev[i]);
            let dp = eval_c(&deriv, prev[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex64::new(1e-12, 1e-12)
            } else {
                p / dp
            };
            let mut sum = Complex64::new(0.0, 0.0);
            for (j, zj) in prev.iter().enumerate() {
                if j != i {
                    sum += Complex64::new(1.0, 0.0) / (prev[i] - zj);
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * sum;
            let step = if denom.norm() == 0.0 { newton } else { newton / denom };
            z[i] = prev[i] - step;
            max_step = max_step.max(step.norm());
        }
        if max_step < tol {
            return (z, true);
        }
    }
    (z, false)
}

/// Approximate complex roots with exact multiplicities. The residual check
/// evaluates the monic square-free part at each root.
pub fn complex_roots_approx(f: &UniPoly, tol: &Rat) -> Result<RootApproximation> {
    assert!(
        f.degree().map_or(false, |d| d >= 1),
        "roots of a constant polynomial"
    );
    let tol_f = to_f64(tol).abs().max(1e-14);
    let mut roots = Vec::new();
    let mut converged = true;
    for (factor, mult) in f.squarefree_decomposition()? {
        let monic = factor.monic();
        let coeffs: Vec<f64> = monic.coeffs().iter().map(to_f64).collect();
        let (zs, ok) = aberth(&coeffs, tol_f * 1e-3);
        converged &= ok;
        for zv in zs {
            let residual = eval_c(&coeffs, zv).norm();
            converged &= residual <= tol_f;
            roots.push(ApproxRoot {
                value: zv,
                multiplicity: mult,
                residual,
            });
        }
    }
    roots.sort_by(|a, b| {
        (a.value.re, a.value.im)
            .partial_cmp(&(b.value.re, b.value.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(RootApproximation { roots, converged })
}

/// Continued-fraction rounding of a float to a small rational.
fn round_to_rational(x: f64, max_den: i64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i64;
        let (p2, q2) = (ai.checked_mul(p1)?.checked_add(p0)?, ai.checked_mul(q1)?.checked_add(q0)?);
        if q2.abs() > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    Some(Rat::new(p1.into(), q1.into()))
}

/// Exact rational roots of a nonzero polynomial, each verified by exact
/// division by the corresponding linear factor. Candidates come from the
/// numeric roots, so in pathological cases a rational root could be missed;
/// everything returned is exact.
pub fn rational_roots(f: &UniPoly) -> Vec<(Rat, usize)> {
    if f.is_zero() || f.is_constant() {
        return Vec::new();
    }
    let mut found: Vec<(Rat, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut push = |cand: Rat, f: &UniPoly, found: &mut Vec<(Rat, usize)>| {
        let key = super::rat::rat_to_string(&cand);
        if seen.contains(&key) {
            return;
        }
        if f.eval(&cand).is_zero() {
            // multiplicity by repeated exact division
            let lin = UniPoly::from_coeffs(vec![-cand.clone(), Rat::one()]);
            let m = f.multiplicity_of(&lin);
            found.push((cand, m));
        }
        seen.insert(key);
    };
    push(Rat::zero(), f, &mut found);
    push(rat_i(1), f, &mut found);
    push(rat_i(-1), f, &mut found);
    if let Ok(approx) = complex_roots_approx(f, &Rat::new(1.into(), 1_000_000.into())) {
        for r in approx.roots {
            if r.value.im.abs() < 1e-7 {
                if let Some(c) = round_to_rational(r.value.re, 1_000_000) {
                    push(c, f, &mut found);
                }
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::rat_frac;

    #[test]
    fn simple_pair_of_roots() {
        // t^2 - 1 -> +1 and -1, multiplicity 1
        let f = UniPoly::from_i64(&[-1, 0, 1]);
        let out = complex_roots_approx(&f, &rat_frac(1, 1_000_000)).unwrap();
        assert!(out.converged);
        assert_eq!(out.roots.len(), 2);
        let mut re: Vec<f64> = out.roots.iter().map(|r| r.value.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((re[0] + 1.0).abs() < 1e-6 && (re[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn high_multiplicity_cluster() {
        // (t+1)^6 -> single root -1 with multiplicity 6
        let f = UniPoly::from_i64(&[1, 1]).pow(6);
        let out = complex_roots_approx(&f, &rat_frac(1, 1_000_000)).unwrap();
        assert!(out.converged);
        assert_eq!(out.roots.len(), 1);
        assert_eq!(out.roots[0].multiplicity, 6);
        assert!((out.roots[0].value.re + 1.0).abs() < 1e-8);
    }

    #[test]
    fn residual_oracle_on_cubic() {
        let f = UniPoly::from_i64(&[-6, 11, -6, 1]); // (t-1)(t-2)(t-3)
        let out = complex_roots_approx(&f, &rat_frac(1, 1_000_000)).unwrap();
        assert!(out.converged);
        for r in &out.roots {
            assert!(r.residual < 1e-6);
        }
    }

    #[test]
    fn rational_roots_verified() {
        // roots 1/2 (double) and -3
        let f = UniPoly::from_i64(&[-1, 2]).pow(2) * UniPoly::from_i64(&[3, 1]);
        let roots = rational_roots(&f);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], (rat_i(-3), 1));
        assert_eq!(roots[1], (rat_frac(1, 2), 2));
    }
}
