//! Sample parameterizations used in documentation and tests.

use crate::mubasis::Parameterization;
use crate::polycore::rat::rat_i;
use crate::polycore::{BiHomPoly, VarPair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sv(coeffs: &[i64]) -> BiHomPoly {
    BiHomPoly::from_i64(coeffs, VarPair::SV)
}

/// The cuspidal cubic (s^2 v : s^3 : v^3), a single cusp at (0 : 0 : 1)
/// reached at parameter t = 0.
pub fn cuspidal_cubic() -> Parameterization {
    Parameterization::new(
        BiHomPoly::monomial(rat_i(1), 2, 3, VarPair::SV),
        BiHomPoly::monomial(rat_i(1), 3, 3, VarPair::SV),
        BiHomPoly::monomial(rat_i(1), 0, 3, VarPair::SV),
    )
    .expect("valid cubic")
}

/// The nodal cubic (v(s^2 - v^2) : s(s^2 - v^2) : v^3), an ordinary double
/// point at (0 : 0 : 1) with branch parameters t = 1 and t = -1.
pub fn nodal_cubic() -> Parameterization {
    let s2mv2 = sv(&[-1, 0, 1]);
    let v = sv(&[1, 0]);
    let s = sv(&[0, 1]);
    Parameterization::new(
        v.mul(&s2mv2),
        s.mul(&s2mv2),
        BiHomPoly::monomial(rat_i(1), 0, 3, VarPair::SV),
    )
    .expect("valid cubic")
}

/// A degree-10 curve with a rich singularity structure: a multiplicity-6
/// point with an infinitely-near chain, a two-branch multiplicity-4 point,
/// and three ordinary double points.
///
/// a = s^2 (2s + v)^2 (s + v)^6
/// b = s^3 (2s + v)^5 (3s^2 + 2sv + v^2)
/// c = -(s + v)^10
pub fn degree10_multibranch() -> Parameterization {
    let s = sv(&[0, 1]);
    let sv1 = sv(&[1, 1]); // s + v
    let twos_v = sv(&[1, 2]); // 2s + v
    let quad = sv(&[1, 2, 3]); // 3s^2 + 2sv + v^2
    let a = s.pow(2).mul(&twos_v.pow(2)).mul(&sv1.pow(6));
    let b = s.pow(3).mul(&twos_v.pow(5)).mul(&quad);
    let c = sv1.pow(10).neg();
    Parameterization::new(a, b, c).expect("valid degree-10 input")
}

/// The published mu-basis generators for [`degree10_multibranch`]:
/// p = (s+v)^4 x1 + s^2 (2s+v)^2 x3,
/// q = s (3s^2 + 2sv + v^2)(2s+v)^3 x1 - (s+v)^6 x2.
pub fn degree10_reference_basis() -> ([BiHomPoly; 3], [BiHomPoly; 3]) {
    let s = sv(&[0, 1]);
    let sv1 = sv(&[1, 1]);
    let twos_v = sv(&[1, 2]);
    let quad = sv(&[1, 2, 3]);
    let zero4 = BiHomPoly::homogenize(&crate::polycore::UniPoly::zero(), 4, VarPair::SV);
    let zero6 = BiHomPoly::homogenize(&crate::polycore::UniPoly::zero(), 6, VarPair::SV);
    let p = [sv1.pow(4), zero4.clone(), s.pow(2).mul(&twos_v.pow(2))];
    let q = [
        s.mul(&quad).mul(&twos_v.pow(3)),
        sv1.pow(6).neg(),
        zero6,
    ];
    (p, q)
}

/// Expected singular factors of [`degree10_multibranch`] as (t, u)-forms,
/// normalized primitive, keyed by k (absent keys mean the factor is 1).
pub fn degree10_expected_factors() -> std::collections::BTreeMap<usize, BiHomPoly> {
    let tu = |c: &[i64]| BiHomPoly::from_i64(c, VarPair::TU);
    let t = tu(&[0, 1]);
    let t_u = tu(&[1, 1]); // t + u
    let twot_u = tu(&[1, 2]); // 2t + u
    let sextic = tu(&[1, 6, 21, 48, 71, 74, 43]);
    let mut m = std::collections::BTreeMap::new();
    m.insert(6, t_u.pow(6));
    m.insert(4, twot_u.pow(2).mul(&t_u.pow(4)).mul(&t.pow(2)));
    m.insert(3, twot_u.pow(2).mul(&t));
    m.insert(2, sextic.mul(&t_u.pow(6)));
    m
}

/// Random parameterization of the given degree with small integer
/// coefficients and gcd(a, b, c) = 1, deterministic in the seed. Returns
/// `None` when no valid triple shows up within the retry budget (does not
/// happen in practice).
pub fn random_curve(degree: usize, seed: u64) -> Option<Parameterization> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let mut draw = |rng: &mut ChaCha8Rng| {
            let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-9i64..=9)).collect();
            sv(&coeffs)
        };
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        if let Ok(phi) = Parameterization::new(a, b, c) {
            return Some(phi);
        }
    }
    None
}

/// Expected reduced singular factors of [`degree10_multibranch`].
pub fn degree10_expected_reduced() -> std::collections::BTreeMap<usize, BiHomPoly> {
    let tu = |c: &[i64]| BiHomPoly::from_i64(c, VarPair::TU);
    let t = tu(&[0, 1]);
    let t_u = tu(&[1, 1]);
    let twot_u = tu(&[1, 2]);
    let sextic = tu(&[1, 6, 21, 48, 71, 74, 43]);
    let mut m = std::collections::BTreeMap::new();
    m.insert(6, t_u.pow(6));
    m.insert(4, twot_u.pow(2).mul(&t.pow(2)));
    m.insert(2, sextic);
    m
}
