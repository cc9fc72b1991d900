//! Mu-bases of the syzygy module of a parameterization, and the pointwise
//! gcd invariant H_Q whose degree is the multiplicity of Q on the curve.
//!
//! The syzygy solver is plain exact linear algebra: for rising degree d it
//! assembles the linear system g1*a + g2*b + g3*c = 0 over the coefficients
//! of the unknown triple and takes the canonical RREF kernel. The first
//! degree with a nontrivial kernel is mu; the complementary generator of
//! degree n - mu is the first kernel vector independent of the multiples of
//! the low generator. Validation checks the syzygy identities and the
//! Hilbert-Burch minor identity exactly.

use crate::error::{Error, Result};
use crate::polycore::mat::{self, Mat};
use crate::polycore::rat::{rat_to_string, Rat};
use crate::polycore::{BiHomPoly, TriPoly, UniPoly, VarPair};
use num_traits::Zero;

/// A parameterization (a : b : c) by three forms of common degree n >= 3
/// with gcd(a, b, c) = 1.
#[derive(Clone, Debug)]
pub struct Parameterization {
    forms: [BiHomPoly; 3],
    n: usize,
}

impl Parameterization {
    pub fn new(a: BiHomPoly, b: BiHomPoly, c: BiHomPoly) -> Result<Self> {
        for f in [&a, &b, &c] {
            if f.vars() != VarPair::SV {
                return Err(Error::VarMismatch {
                    expected: "sv",
                    got: f.vars().label(),
                });
            }
        }
        let n = a.degree();
        if b.degree() != n || c.degree() != n {
            return Err(Error::BadParameterization(format!(
                "degrees differ: {} / {} / {}",
                a.degree(),
                b.degree(),
                c.degree()
            )));
        }
        if n < 3 {
            return Err(Error::BadParameterization(format!("degree {} < 3", n)));
        }
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::BadParameterization("all forms zero".into()));
        }
        let g = a.gcd(&b)?.gcd(&c)?;
        if g.degree() > 0 {
            return Err(Error::BadParameterization(format!(
                "gcd(a, b, c) = {} is not constant",
                g
            )));
        }
        Ok(Parameterization { forms: [a, b, c], n })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &BiHomPoly {
        &self.forms[0]
    }

    pub fn b(&self) -> &BiHomPoly {
        &self.forms[1]
    }

    pub fn c(&self) -> &BiHomPoly {
        &self.forms[2]
    }

    pub fn forms(&self) -> &[BiHomPoly; 3] {
        &self.forms
    }

    /// The same forms read in the parameter pair (t, u).
    pub fn forms_tu(&self) -> [BiHomPoly; 3] {
        [
            self.forms[0].retag(VarPair::TU),
            self.forms[1].retag(VarPair::TU),
            self.forms[2].retag(VarPair::TU),
        ]
    }

    /// Image point of the parameter (t0 : u0).
    pub fn eval_point(&self, t0: &Rat, u0: &Rat) -> PointP2 {
        PointP2::new([
            self.forms[0].eval(t0, u0),
            self.forms[1].eval(t0, u0),
            self.forms[2].eval(t0, u0),
        ])
        .expect("gcd(a,b,c)=1 keeps the image away from (0:0:0)")
    }
}

/// A point of the projective plane, stored by one representative.
#[derive(Clone, Debug)]
pub struct PointP2 {
    pub coords: [Rat; 3],
}

impl PointP2 {
    pub fn new(coords: [Rat; 3]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::BadInput("(0:0:0) is not a projective point".into()));
        }
        Ok(PointP2 { coords })
    }

    pub fn from_i64(c: [i64; 3]) -> Self {
        PointP2::new([
            crate::polycore::rat::rat_i(c[0]),
            crate::polycore::rat::rat_i(c[1]),
            crate::polycore::rat::rat_i(c[2]),
        ])
        .expect("nonzero representative")
    }

    /// Projective equality: all 2x2 minors of the coordinate pair vanish.
    pub fn same_point(&self, other: &PointP2) -> bool {
        for i in 0..3 {
            for j in i + 1..3 {
                if &self.coords[i] * &other.coords[j] != &self.coords[j] * &other.coords[i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_string_proj(&self) -> String {
        format!(
            "({} : {} : {})",
            rat_to_string(&self.coords[0]),
            rat_to_string(&self.coords[1]),
            rat_to_string(&self.coords[2])
        )
    }
}

/// A mu-basis: syzygies p (degree mu) and q (degree n - mu) generating the
/// full syzygy module, with mu <= n - mu.
#[derive(Clone, Debug)]
pub struct MuBasis {
    pub p: [BiHomPoly; 3],
    pub q: [BiHomPoly; 3],
    pub mu: usize,
    pub n: usize,
}

impl MuBasis {
    /// p contracted against a point: sum alpha_i p_i.
    pub fn p_at(&self, q: &PointP2) -> BiHomPoly {
        contract(&self.p, &q.coords)
    }

    pub fn q_at(&self, q: &PointP2) -> BiHomPoly {
        contract(&self.q, &q.coords)
    }

    /// Coefficient lists of p and q as forms in (s, v) with entries linear
    /// in (x1, x2, x3); index i is the coefficient of s^i v^(deg - i).
    pub fn symbolic_coeff_lists(&self) -> (Vec<TriPoly>, Vec<TriPoly>) {
        let lift = |triple: &[BiHomPoly; 3], deg: usize| {
            (0..=deg)
                .map(|i| {
                    TriPoly::linear(&[
                        triple[0].coeff(i),
                        triple[1].coeff(i),
                        triple[2].coeff(i),
                    ])
                })
                .collect::<Vec<_>>()
        };
        (lift(&self.p, self.mu), lift(&self.q, self.n - self.mu))
    }
}

fn contract(triple: &[BiHomPoly; 3], alpha: &[Rat; 3]) -> BiHomPoly {
    let mut acc = BiHomPoly::zero(VarPair::SV);
    for i in 0..3 {
        if !alpha[i].is_zero() {
            acc = acc.add(&triple[i].scale(&alpha[i]));
        }
    }
    if acc.is_zero() {
        BiHomPoly::homogenize(&UniPoly::zero(), triple[0].degree(), VarPair::SV)
    } else {
        acc
    }
}

/// Kernel of the map (g1, g2, g3) -> g1*a + g2*b + g3*c in degree d,
/// returned as canonical RREF kernel vectors of triples.
fn syzygy_kernel(phi: &Parameterization, d: usize) -> Vec<[BiHomPoly; 3]> {
    let n = phi.degree();
    let rows = n + d + 1;
    let cols = 3 * (d + 1);
    let m = Mat::from_fn(rows, cols, |r, col| {
        let var = col / (d + 1);
        let shift = col % (d + 1);
        if r >= shift && r - shift <= n {
            phi.forms[var].coeff(r - shift)
        } else {
            Rat::zero()
        }
    });
    mat::kernel_basis(&m)
        .into_iter()
        .map(|v| {
            let part = |var: usize| {
                BiHomPoly::from_coeffs(
                    v[var * (d + 1)..(var + 1) * (d + 1)].to_vec(),
                    VarPair::SV,
                )
            };
            [part(0), part(1), part(2)]
        })
        .collect()
}

/// Coefficient vector of a degree-d syzygy triple, matching the column
/// layout of `syzygy_kernel`.
fn triple_to_vec(triple: &[BiHomPoly; 3], d: usize) -> Vec<Rat> {
    let mut v = Vec::with_capacity(3 * (d + 1));
    for g in triple {
        for i in 0..=d {
            v.push(g.coeff(i));
        }
    }
    v
}

/// Compute a mu-basis. The returned basis always passes
/// [`validate_mu_basis`] when gcd(a, b, c) = 1.
pub fn compute_mu_basis(phi: &Parameterization) -> Result<MuBasis> {
    let n = phi.degree();
    let mut found = None;
    for d in 1..=n / 2 {
        let kern = syzygy_kernel(phi, d);
        if !kern.is_empty() {
            found = Some((d, kern.into_iter().next().unwrap()));
            break;
        }
    }
    let Some((mu, p)) = found else {
        return Err(Error::BadParameterization(
            "no syzygy of degree <= n/2; input is degenerate".into(),
        ));
    };
    let dq = n - mu;
    let kern = syzygy_kernel(phi, dq);
    // Span of the degree-dq multiples of p: s^i v^(n-2mu-i) * p.
    let shift = n - 2 * mu;
    let mut span_rows = Vec::new();
    for i in 0..=shift {
        let mono = BiHomPoly::monomial(crate::polycore::rat::rat_i(1), i, shift, VarPair::SV);
        let mult = [mono.mul(&p[0]), mono.mul(&p[1]), mono.mul(&p[2])];
        span_rows.push(triple_to_vec(&mult, dq));
    }
    let span_dim = span_rows.len();
    let q = kern
        .iter()
        .find(|cand| {
            let mut rows = span_rows.clone();
            rows.push(triple_to_vec(cand, dq));
            mat::rank_rat(&Mat::from_rows(rows)) > span_dim
        })
        .cloned()
        .ok_or(Error::NoSecondGenerator)?;
    let basis = MuBasis { p, q, mu, n };
    let report = validate_mu_basis(phi, &basis);
    if !report.is_valid() {
        return Err(Error::Internal(format!(
            "computed basis failed validation: {:?}",
            report.failures
        )));
    }
    Ok(basis)
}

/// Outcome of the exact mu-basis checks; each failed check is reported
/// separately.
#[derive(Clone, Debug, Default)]
pub struct ValidityReport {
    pub syzygy_p: bool,
    pub syzygy_q: bool,
    pub degrees: bool,
    pub minors: bool,
    pub failures: Vec<String>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.syzygy_p && self.syzygy_q && self.degrees && self.minors
    }
}

fn syzygy_holds(phi: &Parameterization, triple: &[BiHomPoly; 3]) -> bool {
    let mut acc = BiHomPoly::zero(VarPair::SV);
    for i in 0..3 {
        acc = acc.add(&triple[i].mul(&phi.forms[i]));
    }
    acc.is_zero()
}

/// Verify both syzygy identities, the degree split mu + (n - mu) = n, and
/// that the three 2x2 minors of the basis matrix reproduce (a, b, c) up to
/// one common nonzero scalar (minor(2,3) -> a, minor(3,1) -> b,
/// minor(1,2) -> c).
pub fn validate_mu_basis(phi: &Parameterization, basis: &MuBasis) -> ValidityReport {
    let mut rep = ValidityReport::default();
    rep.syzygy_p = syzygy_holds(phi, &basis.p);
    if !rep.syzygy_p {
        rep.failures.push("p is not a syzygy".into());
    }
    rep.syzygy_q = syzygy_holds(phi, &basis.q);
    if !rep.syzygy_q {
        rep.failures.push("q is not a syzygy".into());
    }
    let n = phi.degree();
    rep.degrees = basis.n == n
        && basis.mu >= 1
        && basis.mu <= n - basis.mu
        && basis.p.iter().all(|f| f.degree() == basis.mu)
        && basis.q.iter().all(|f| f.degree() == n - basis.mu);
    if !rep.degrees {
        rep.failures.push("degree bookkeeping is off".into());
    }
    // Hilbert-Burch: cross product of the basis rows equals lambda (a, b, c).
    let minors = [
        basis.p[1].mul(&basis.q[2]).sub(&basis.p[2].mul(&basis.q[1])),
        basis.p[2].mul(&basis.q[0]).sub(&basis.p[0].mul(&basis.q[2])),
        basis.p[0].mul(&basis.q[1]).sub(&basis.p[1].mul(&basis.q[0])),
    ];
    let mut lambda: Option<Rat> = None;
    for i in 0..3 {
        if !phi.forms[i].is_zero() {
            let j = phi.forms[i]
                .coeffs()
                .iter()
                .position(|c| !c.is_zero())
                .unwrap();
            lambda = Some(minors[i].coeff(j) / phi.forms[i].coeff(j));
            break;
        }
    }
    rep.minors = match lambda {
        None => false,
        Some(l) if l.is_zero() => false,
        Some(l) => (0..3).all(|i| minors[i].sub(&phi.forms[i].scale(&l)).is_zero()),
    };
    if !rep.minors {
        rep.failures
            .push("Hilbert-Burch minors do not reproduce (a, b, c)".into());
    }
    rep
}

/// Implicit equation of the curve as the resultant of p and q with respect
/// to (s, v): a homogeneous polynomial of degree n in (x1, x2, x3).
pub fn implicit_equation(basis: &MuBasis) -> TriPoly {
    let (pc, qc) = basis.symbolic_coeff_lists();
    let m = mat::sylvester_matrix(&pc, basis.mu, &qc, basis.n - basis.mu, &TriPoly::zero());
    det_tripoly_form(&m, basis.n).normalize_primitive()
}

/// Determinant of a matrix of x-polynomials whose value is known a priori
/// to be a form of the given total degree. Computed on a bivariate
/// evaluation grid at x3 = 1 with Newton interpolation in both variables,
/// then re-homogenized.
pub(crate) fn det_tripoly_form(m: &Mat<TriPoly>, degree: usize) -> TriPoly {
    let pts = mat::eval_points(degree + 1);
    let mut per_x2: Vec<UniPoly> = Vec::with_capacity(pts.len());
    for beta in &pts {
        let eval = m.map(|e| e.eval_partial23(beta, &Rat::from_integer(1.into())));
        per_x2.push(mat::det_interp(&eval));
    }
    let mut out = TriPoly::zero();
    for i in 0..=degree {
        let ys: Vec<Rat> = per_x2.iter().map(|p| p.coeff(i)).collect();
        let ci = mat::interpolate(&pts, &ys);
        for (j, c) in ci.coeffs().iter().enumerate() {
            if !c.is_zero() {
                assert!(
                    i + j <= degree,
                    "determinant is not homogeneous of the declared degree"
                );
                out = out.add(&TriPoly::term(
                    c.clone(),
                    [i as u32, j as u32, (degree - i - j) as u32],
                ));
            }
        }
    }
    out
}

/// H_Q: gcd of the two basis forms contracted at Q (gcd with a vanishing
/// contraction returns the other one). Its degree is the multiplicity of Q
/// on the curve: 0 off the curve, 1 at smooth points.
pub fn h_invariant(basis: &MuBasis, q: &PointP2) -> BiHomPoly {
    let pq = basis.p_at(q);
    let qq = basis.q_at(q);
    pq.gcd(&qq).expect("same variable pair")
}

pub fn multiplicity_at(basis: &MuBasis, q: &PointP2) -> usize {
    let h = h_invariant(basis, q);
    assert!(
        !h.is_zero(),
        "both mu-basis forms vanish at {}",
        q.to_string_proj()
    );
    h.degree()
}

/// The multiplicity window for points when the parameterization is
/// birational: 0 or 1 off/at smooth points, otherwise in [2, mu] or equal
/// to n - mu. A violation signals non-birational input.
pub fn multiplicity_range_check(basis: &MuBasis, q: &PointP2) -> bool {
    let m = multiplicity_at(basis, q);
    m <= 1 || (2..=basis.mu).contains(&m) || m == basis.n - basis.mu
}

/// Sample distinct rational parameter values for spot checks.
pub fn sample_parameters(count: usize) -> Vec<Rat> {
    (0..count)
        .map(|k| Rat::new((2 * k as i64 + 3).into(), (k as i64 + 1).into()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::{rat_frac, rat_i};
    use crate::samples;

    #[test]
    fn cuspidal_cubic_basis() {
        let phi = samples::cuspidal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        assert_eq!(basis.mu, 1);
        assert!(validate_mu_basis(&phi, &basis).is_valid());
        // the degree-1 syzygy space is one-dimensional: p = (s, -v, 0) up to scalar
        let expect = [
            BiHomPoly::from_i64(&[0, 1], VarPair::SV),
            BiHomPoly::from_i64(&[-1, 0], VarPair::SV),
            BiHomPoly::homogenize(&UniPoly::zero(), 1, VarPair::SV),
        ];
        let l = &basis.p[0].coeff(1) / &expect[0].coeff(1);
        for i in 0..3 {
            assert!(basis.p[i].sub(&expect[i].scale(&l)).is_zero());
        }
    }

    #[test]
    fn degree10_mu_is_4_and_module_matches() {
        let phi = samples::degree10_multibranch();
        let basis = compute_mu_basis(&phi).unwrap();
        assert_eq!(basis.mu, 4);
        assert!(validate_mu_basis(&phi, &basis).is_valid());
        let (p_ref, q_ref) = samples::degree10_reference_basis();
        assert!(syzygy_holds(&phi, &p_ref));
        assert!(syzygy_holds(&phi, &q_ref));
        // degree-4 syzygies are one-dimensional here, so p matches up to scalar
        let j = basis.p[0]
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .unwrap();
        let l = &p_ref[0].coeff(j) / &basis.p[0].coeff(j);
        for i in 0..3 {
            assert!(p_ref[i].sub(&basis.p[i].scale(&l)).is_zero());
        }
        // the reference basis also validates
        let reference = MuBasis {
            p: p_ref,
            q: q_ref,
            mu: 4,
            n: 10,
        };
        assert!(validate_mu_basis(&phi, &reference).is_valid());
    }

    #[test]
    fn perturbed_basis_fails() {
        let phi = samples::cuspidal_cubic();
        let mut basis = compute_mu_basis(&phi).unwrap();
        // elementary change keeps validity
        let mono = BiHomPoly::monomial(rat_i(1), 1, phi.degree() - 2 * basis.mu, VarPair::SV);
        let shifted = [
            basis.q[0].add(&mono.mul(&basis.p[0])),
            basis.q[1].add(&mono.mul(&basis.p[1])),
            basis.q[2].add(&mono.mul(&basis.p[2])),
        ];
        let changed = MuBasis {
            q: shifted,
            ..basis.clone()
        };
        assert!(validate_mu_basis(&phi, &changed).is_valid());
        // perturbing one coefficient breaks the syzygy identity
        basis.q[0] = basis.q[0].add(&BiHomPoly::monomial(
            rat_i(1),
            0,
            basis.n - basis.mu,
            VarPair::SV,
        ));
        let rep = validate_mu_basis(&phi, &basis);
        assert!(!rep.is_valid());
        assert!(!rep.syzygy_q);
    }

    #[test]
    fn implicit_equation_cuspidal() {
        let phi = samples::cuspidal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let f = implicit_equation(&basis);
        let expect = TriPoly::term(rat_i(1), [3, 0, 0]).sub(&TriPoly::term(rat_i(1), [0, 2, 1]));
        assert!(f.eq_up_to_scalar(&expect));
        for t in sample_parameters(5) {
            let p = phi.eval_point(&t, &rat_i(1));
            assert!(f.eval(&p.coords).is_zero());
        }
        // (1 : 1 : 2) is off the curve; (1 : 1 : 1) is phi(1 : 1)
        assert!(!f.eval(&[rat_i(1), rat_i(1), rat_i(2)]).is_zero());
        assert!(f.eval(&[rat_i(1), rat_i(1), rat_i(1)]).is_zero());
    }

    #[test]
    fn implicit_equation_degree10_vanishes_on_samples() {
        let phi = samples::degree10_multibranch();
        let basis = compute_mu_basis(&phi).unwrap();
        let f = implicit_equation(&basis);
        assert_eq!(f.total_degree(), Some(10));
        for t in sample_parameters(5) {
            let p = phi.eval_point(&t, &rat_i(1));
            assert!(f.eval(&p.coords).is_zero());
        }
        for off in [[1, 1, 1], [2, -1, 3], [0, 1, 5]] {
            let p = PointP2::from_i64(off);
            assert!(!f.eval(&p.coords).is_zero(), "off-curve point {:?}", off);
        }
    }

    #[test]
    fn h_invariant_cusp() {
        let phi = samples::cuspidal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let cusp = PointP2::from_i64([0, 0, 1]);
        let h = h_invariant(&basis, &cusp);
        assert_eq!(h.degree(), 2);
        assert!(h.eq_up_to_scalar(&BiHomPoly::monomial(rat_i(1), 2, 2, VarPair::SV)));
        assert!(multiplicity_range_check(&basis, &cusp));
        let off = PointP2::from_i64([1, 1, 2]);
        assert_eq!(multiplicity_at(&basis, &off), 0);
        // smooth point phi(1 : 1): H has degree 1, proportional to s - v
        let smooth = phi.eval_point(&rat_i(1), &rat_i(1));
        let h1 = h_invariant(&basis, &smooth);
        assert_eq!(h1.degree(), 1);
        assert!(h1.eq_up_to_scalar(&BiHomPoly::from_i64(&[-1, 1], VarPair::SV)));
    }

    #[test]
    fn h_degree_is_basis_independent() {
        let phi = samples::nodal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let mono = BiHomPoly::monomial(rat_i(1), 0, phi.degree() - 2 * basis.mu, VarPair::SV);
        let basis2 = MuBasis {
            q: [
                basis.q[0].add(&mono.mul(&basis.p[0])),
                basis.q[1].add(&mono.mul(&basis.p[1])),
                basis.q[2].add(&mono.mul(&basis.p[2])),
            ],
            ..basis.clone()
        };
        assert!(validate_mu_basis(&phi, &basis2).is_valid());
        let node = PointP2::from_i64([0, 0, 1]);
        assert_eq!(
            multiplicity_at(&basis, &node),
            multiplicity_at(&basis2, &node)
        );
        let smooth = phi.eval_point(&rat_frac(1, 2), &rat_i(1));
        assert_eq!(
            multiplicity_at(&basis, &smooth),
            multiplicity_at(&basis2, &smooth)
        );
    }

    #[test]
    fn preimage_count_matches_h_for_sampled_points() {
        let phi = samples::nodal_cubic();
        let basis = compute_mu_basis(&phi).unwrap();
        let (t0, u0) = (rat_frac(5, 2), rat_i(1));
        let pt = phi.eval_point(&t0, &u0);
        let h = h_invariant(&basis, &pt);
        let lin = BiHomPoly::linear(u0.clone(), -t0.clone(), VarPair::SV);
        assert!(h.eq_up_to_scalar(&lin));
        // node parameters 1 and -1 hit the same point; H has degree 2
        let node_pt = phi.eval_point(&rat_i(1), &rat_i(1));
        let also = phi.eval_point(&rat_i(-1), &rat_i(1));
        assert!(node_pt.same_point(&also));
        let h2 = h_invariant(&basis, &node_pt);
        assert_eq!(h2.degree(), 2);
        assert!(h2.eq_up_to_scalar(&BiHomPoly::from_i64(&[-1, 0, 1], VarPair::SV)));
    }

    #[test]
    fn squared_parameterization_behaves_as_double_cover() {
        // (s^4, s^2 v^2, v^4) factors through a conic: every image point
        // picks up two preimages, so H at a generic point has degree 2.
        let a = BiHomPoly::monomial(rat_i(1), 4, 4, VarPair::SV);
        let b = BiHomPoly::monomial(rat_i(1), 2, 4, VarPair::SV);
        let c = BiHomPoly::monomial(rat_i(1), 0, 4, VarPair::SV);
        let phi = Parameterization::new(a, b, c).unwrap();
        let basis = compute_mu_basis(&phi).unwrap();
        let pt = phi.eval_point(&rat_i(2), &rat_i(1));
        let h = h_invariant(&basis, &pt);
        assert_eq!(h.degree(), 2);
    }
}
