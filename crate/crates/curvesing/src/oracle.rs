//! Independent brute-force verifiers used by the test suites. These run
//! algorithmically different code from the fast paths they check: Bareiss
//! elimination instead of interpolation determinants, raw minor
//! enumeration instead of Smith forms, and the diagonal-quotient resultant
//! instead of the subresultant minor. Never used on the fast path.

use crate::error::{Error, Result};
use crate::mubasis::MuBasis;
use crate::polycore::mat::{self, Mat};
use crate::polycore::rat::Rat;
use crate::polycore::{BiHomPoly, UniPoly};
use crate::resmat::{MovingForms, PolyMatrix};
use crate::smithlab::smith_normal_form;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub max_enum_size: usize,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_enum_size: 8,
            sample_count: 5,
            seed: 0,
        }
    }
}

/// Determinantal divisor chain by raw enumeration with fraction-free
/// Bareiss determinants (monic gcds). Independent of both the Smith form
/// and the interpolation determinant.
pub fn minor_gcd_chain(a: &Mat<UniPoly>, cfg: &OracleConfig) -> Result<Vec<UniPoly>> {
    let size = a.rows().max(a.cols());
    if size > cfg.max_enum_size {
        return Err(Error::EnumGuard {
            size,
            guard: cfg.max_enum_size,
        });
    }
    let top = a.rows().min(a.cols());
    let mut out = Vec::with_capacity(top);
    for i in 1..=top {
        let row_sets = mat::index_subsets(a.rows(), i);
        let col_sets = mat::index_subsets(a.cols(), i);
        let mut acc = UniPoly::zero();
        for rs in &row_sets {
            for cs in &col_sets {
                let d = mat::det_bareiss(&a.submatrix(rs, cs));
                acc = acc.gcd(&d);
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Rank deficiency of a form matrix specialized at the parameter (t0 : 1).
/// For the Sylvester matrix of a mu-basis this equals the multiplicity of
/// the image point.
pub fn corank_at_parameter(s: &PolyMatrix, t0: &Rat) -> usize {
    let m = s.eval_at(t0, &Rat::from_integer(1.into()));
    m.rows() - mat::rank_rat(&m)
}

fn divides_with_zero(a: &UniPoly, b: &UniPoly) -> bool {
    // a | b over Q[t]; everything divides 0, 0 divides only 0
    if b.is_zero() {
        return true;
    }
    if a.is_zero() {
        return false;
    }
    b.exact_div(a).is_some()
}

/// Probe Thompson's interlacing divisibilities for the invariant factors
/// of A, B and AB, over all index tuples of length 1 and 2. A full check
/// is combinatorial; these short tuples already pin the convention down.
pub fn thompson_divisibility_probe(a: &Mat<UniPoly>, b: &Mat<UniPoly>) -> bool {
    assert!(a.is_square() && b.is_square() && a.rows() == b.rows());
    let n = a.rows();
    let prod = Mat::from_fn(n, n, |i, j| {
        let mut acc = UniPoly::zero();
        for k in 0..n {
            acc = &acc + &(&a[(i, k)] * &b[(k, j)]);
        }
        acc
    });
    let alpha = smith_normal_form(a, false).diag;
    let beta = smith_normal_form(b, false).diag;
    let gamma = smith_normal_form(&prod, false).diag;
    // m = 1: alpha_i beta_j | gamma_(i+j-1)
    for i in 1..=n {
        for j in 1..=n {
            if i + j <= 1 + n {
                let lhs = &alpha[i - 1] * &beta[j - 1];
                if !divides_with_zero(&lhs, &gamma[i + j - 2]) {
                    return false;
                }
            }
        }
    }
    // m = 2
    for i1 in 1..=n {
        for i2 in i1 + 1..=n {
            for j1 in 1..=n {
                for j2 in j1 + 1..=n {
                    if i2 + j2 > 2 + n {
                        continue;
                    }
                    let lhs = &(&(&alpha[i1 - 1] * &alpha[i2 - 1]) * &beta[j1 - 1]) * &beta[j2 - 1];
                    let rhs = &gamma[i1 + j1 - 2] * &gamma[i2 + j2 - 3];
                    if !divides_with_zero(&lhs, &rhs) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The conductor form computed along the alternative route: the resultant
/// of the diagonal quotients of the moving forms (not of F and G, whose
/// quotient resultant carries extra factors).
pub fn delta_via_diagonal_resultant(mf: &MovingForms, _basis: &MuBasis) -> Result<BiHomPoly> {
    let p = mf.p_phi.divide_diagonal()?;
    let q = mf.q_phi.divide_diagonal()?;
    let r = crate::resmat::resultant_sv(&p, &q);
    if r.is_zero() {
        return Err(Error::SingularFactors(
            "diagonal-quotient resultant vanished; non-birational input".into(),
        ));
    }
    Ok(r.normalize_primitive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mubasis::compute_mu_basis;
    use crate::polycore::rat::rat_i;
    use crate::polycore::VarPair;
    use crate::resmat::{build_moving_forms, build_sylvester};
    use crate::samples;
    use crate::smithlab;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn chains_agree_with_interpolation_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        let cfg = OracleConfig::default();
        for _ in 0..10 {
            let m = Mat::from_fn(4, 4, |_, _| {
                UniPoly::from_coeffs(
                    (0..=rng.gen_range(0..=3))
                        .map(|_| rat_i(rng.gen_range(-3i64..=3)))
                        .collect(),
                )
            });
            let ours = minor_gcd_chain(&m, &cfg).unwrap();
            let fast = smithlab::determinantal_divisors(&m, 8).unwrap();
            for (x, y) in ours.iter().zip(&fast) {
                let both_zero = x.is_zero() && y.is_zero();
                assert!(both_zero || x.eq_up_to_scalar(y));
            }
        }
    }

    #[test]
    fn identity_chain_trivial() {
        let m = Mat::from_fn(4, 4, |i, j| {
            if i == j {
                UniPoly::one()
            } else {
                UniPoly::zero()
            }
        });
        let chain = minor_gcd_chain(&m, &OracleConfig::default()).unwrap();
        assert!(chain.iter().all(|d| d.is_constant() && !d.is_zero()));
    }

    #[test]
    fn rank_deficient_product_has_trailing_zeros() {
        // A 4x4 product with a rank-2 factor has zero divisors from level 3.
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let tall = Mat::from_fn(4, 2, |_, _| {
            UniPoly::from_i64(&[rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3)])
        });
        let wide = Mat::from_fn(2, 4, |_, _| {
            UniPoly::from_i64(&[rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3)])
        });
        let m = Mat::from_fn(4, 4, |i, j| {
            let mut acc = UniPoly::zero();
            for k in 0..2 {
                acc = &acc + &(&tall[(i, k)] * &wide[(k, j)]);
            }
            acc
        });
        let chain = minor_gcd_chain(&m, &OracleConfig::default()).unwrap();
        assert!(!chain[0].is_zero());
        assert!(chain[2].is_zero());
        assert!(chain[3].is_zero());
    }

    #[test]
    fn thompson_identity_and_diagonal() {
        let id = Mat::from_fn(3, 3, |i, j| {
            if i == j {
                UniPoly::one()
            } else {
                UniPoly::zero()
            }
        });
        assert!(thompson_divisibility_probe(&id, &id));
        let t = UniPoly::from_i64(&[0, 1]);
        let d1 = Mat::from_fn(3, 3, |i, j| {
            if i == j {
                t.pow(i)
            } else {
                UniPoly::zero()
            }
        });
        let d2 = Mat::from_fn(3, 3, |i, j| {
            if i == j {
                UniPoly::from_i64(&[1, 1]).pow(2 - i)
            } else {
                UniPoly::zero()
            }
        });
        assert!(thompson_divisibility_probe(&d1, &d2));
    }

    #[test]
    fn thompson_random_dense_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..10 {
            let draw = |rng: &mut ChaCha8Rng| {
                Mat::from_fn(3, 3, |_, _| {
                    UniPoly::from_coeffs(
                        (0..=rng.gen_range(0..=2))
                            .map(|_| rat_i(rng.gen_range(-4i64..=4)))
                            .collect(),
                    )
                })
            };
            let a = draw(&mut rng);
            let b = draw(&mut rng);
            assert!(thompson_divisibility_probe(&a, &b));
        }
    }

    #[test]
    fn corank_matches_multiplicity_on_cubics() {
        let phi = samples::cuspidal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let mf = build_moving_forms(&phi, &basis).unwrap();
        let s = build_sylvester(&mf);
        assert_eq!(corank_at_parameter(&s, &rat_i(0)), 2);
        assert_eq!(corank_at_parameter(&s, &rat_i(7)), 1);
    }

    #[test]
    fn delta_oracle_on_cubics() {
        // cusp: t^2; node: t^2 - u^2
        let phi = samples::cuspidal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let mf = build_moving_forms(&phi, &basis).unwrap();
        let d = delta_via_diagonal_resultant(&mf, &basis).unwrap();
        assert!(d.eq_up_to_scalar(&BiHomPoly::monomial(rat_i(1), 2, 2, VarPair::TU)));
        let phi = samples::nodal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let mf = build_moving_forms(&phi, &basis).unwrap();
        let d = delta_via_diagonal_resultant(&mf, &basis).unwrap();
        assert!(d.eq_up_to_scalar(&BiHomPoly::from_i64(&[-1, 0, 1], VarPair::TU)));
    }
}
