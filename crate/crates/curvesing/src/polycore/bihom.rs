//! Dense homogeneous forms in one variable pair, (s, v) or (t, u).
//!
//! A form of degree d stores d+1 coefficients; `coeffs[i]` multiplies
//! (first)^i (second)^(d-i). Homogeneity is structural: mixed-degree sums
//! are unrepresentable. The zero form of any declared degree is the
//! all-zero vector; `BiHomPoly::zero` is the canonical degree-0 zero, which
//! is absorbed by addition and annihilates multiplication, so the graded
//! type still behaves like a ring.
//!
//! Most computations dehomogenize (second variable = 1), work in Q[t], and
//! re-homogenize against a declared degree. That round trip is exact: a
//! form of degree d with dehomogenization f(t) of degree e equals
//! u^(d-e) * hom(f), the missing degree being the valuation at the point
//! at infinity (1 : 0).

use super::rat::Rat;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarPair {
    SV,
    TU,
}

impl VarPair {
    pub fn names(self) -> (&'static str, &'static str) {
        match self {
            VarPair::SV => ("s", "v"),
            VarPair::TU => ("t", "u"),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            VarPair::SV => "sv",
            VarPair::TU => "tu",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct BiHomPoly {
    vars: VarPair,
    coeffs: Vec<Rat>,
}

impl BiHomPoly {
    /// Canonical zero (degree tag 0).
    pub fn zero(vars: VarPair) -> Self {
        BiHomPoly {
            vars,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one(vars: VarPair) -> Self {
        BiHomPoly::constant(Rat::one(), vars)
    }

    pub fn constant(c: Rat, vars: VarPair) -> Self {
        BiHomPoly { vars, coeffs: vec![c] }
    }

    /// c * first^i * second^(d-i).
    pub fn monomial(c: Rat, i: usize, degree: usize, vars: VarPair) -> Self {
        assert!(i <= degree);
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[i] = c;
        BiHomPoly { vars, coeffs }
    }

    /// c1 * first + c0 * second.
    pub fn linear(c1: Rat, c0: Rat, vars: VarPair) -> Self {
        BiHomPoly {
            vars,
            coeffs: vec![c0, c1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>, vars: VarPair) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BiHomPoly { vars, coeffs }
    }

    pub fn from_i64(coeffs: &[i64], vars: VarPair) -> Self {
        BiHomPoly::from_coeffs(
            coeffs.iter().map(|&c| super::rat::rat_i(c)).collect(),
            vars,
        )
    }

    /// Homogenize a univariate polynomial to the given degree:
    /// p(t) of degree e becomes second^(d-e) * t-homogenization.
    pub fn homogenize(p: &UniPoly, degree: usize, vars: VarPair) -> Self {
        if p.is_zero() {
            return BiHomPoly {
                vars,
                coeffs: vec![Rat::zero(); degree + 1],
            };
        }
        assert!(
            p.deg_or0() <= degree,
            "degree {} exceeds homogenization target {}",
            p.deg_or0(),
            degree
        );
        let mut coeffs = vec![Rat::zero(); degree + 1];
        for (i, c) in p.coeffs().iter().enumerate() {
            coeffs[i] = c.clone();
        }
        BiHomPoly { vars, coeffs }
    }

    pub fn vars(&self) -> VarPair {
        self.vars
    }

    /// Declared degree (the grading), independent of vanishing coefficients.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_constant_form(&self) -> bool {
        !self.is_zero() && self.effective_degree() == 0
    }

    /// Degree of the nonzero support: highest minus lowest nonzero index
    /// after stripping pure powers of either variable. For factor counting;
    /// equals the declared degree for forms with full support.
    fn effective_degree(&self) -> usize {
        match (self.val_first(), self.val_second()) {
            (Some(a), Some(b)) => self.degree() - a - b,
            _ => 0,
        }
    }

    /// Valuation in the first variable (min index with nonzero coefficient).
    pub fn val_first(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Valuation in the second variable.
    pub fn val_second(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|i| self.degree() - i)
    }

    /// Set second variable to 1: a univariate polynomial in the first.
    pub fn dehom(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// Set first variable to 1: a univariate polynomial in the second.
    pub fn dehom_first(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn eval(&self, first: &Rat, second: &Rat) -> Rat {
        let d = self.degree();
        let mut fp = vec![Rat::one()];
        for _ in 0..d {
            fp.push(fp.last().unwrap() * first);
        }
        let mut sp = vec![Rat::one()];
        for _ in 0..d {
            sp.push(sp.last().unwrap() * second);
        }
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c * &fp[i] * &sp[d - i];
            }
        }
        acc
    }

    pub fn swap_vars(&self) -> BiHomPoly {
        BiHomPoly {
            vars: self.vars,
            coeffs: self.coeffs.iter().rev().cloned().collect(),
        }
    }

    pub fn retag(&self, vars: VarPair) -> BiHomPoly {
        BiHomPoly {
            vars,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rat) -> BiHomPoly {
        BiHomPoly {
            vars: self.vars,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> BiHomPoly {
        self.scale(&-Rat::one())
    }

    /// Graded addition. Degree mismatch is allowed only when one side is
    /// zero (the zero form belongs to every degree).
    pub fn add(&self, other: &BiHomPoly) -> BiHomPoly {
        assert_eq!(self.vars, other.vars, "variable pair mismatch");
        if self.is_zero() && self.degree() != other.degree() {
            return other.clone();
        }
        if other.is_zero() && self.degree() != other.degree() {
            return self.clone();
        }
        assert_eq!(self.degree(), other.degree(), "degree mismatch in graded add");
        BiHomPoly {
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &BiHomPoly) -> BiHomPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BiHomPoly) -> BiHomPoly {
        assert_eq!(self.vars, other.vars, "variable pair mismatch");
        if self.is_zero() || other.is_zero() {
            return BiHomPoly::zero(self.vars);
        }
        let d = self.degree() + other.degree();
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = v;
            }
        }
        BiHomPoly { vars: self.vars, coeffs }
    }

    pub fn pow(&self, e: usize) -> BiHomPoly {
        let mut acc = BiHomPoly::one(self.vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division in the graded ring, or `None` if not divisible.
    pub fn exact_div(&self, divisor: &BiHomPoly) -> Option<BiHomPoly> {
        assert_eq!(self.vars, divisor.vars, "variable pair mismatch");
        assert!(!divisor.is_zero(), "division by the zero form");
        if self.is_zero() {
            return Some(BiHomPoly::zero(self.vars));
        }
        if divisor.degree() > self.degree() {
            return None;
        }
        let (af, bf) = (self.val_first().unwrap(), self.val_second().unwrap());
        let (ag, bg) = (divisor.val_first().unwrap(), divisor.val_second().unwrap());
        if ag > af || bg > bf {
            return None;
        }
        let fh = self.dehom();
        let gh = divisor.dehom();
        // After the valuation screen the dehomogenized division carries all
        // the information: quotient = hom(fh/gh) padded to the right degree.
        let q = fh.exact_div(&gh)?;
        let dq = self.degree() - divisor.degree();
        if q.deg_or0() > dq && !q.is_zero() {
            return None;
        }
        Some(BiHomPoly::homogenize(&q, dq, self.vars))
    }

    pub fn divides(&self, other: &BiHomPoly) -> bool {
        other.exact_div(self).is_some()
    }

    /// Largest e with divisor^e dividing self; divisor nonconstant.
    pub fn multiplicity_of(&self, divisor: &BiHomPoly) -> usize {
        assert!(divisor.degree() > 0 && !divisor.is_zero());
        let mut e = 0;
        let mut rest = self.clone();
        if rest.is_zero() {
            return 0;
        }
        while let Some(q) = rest.exact_div(divisor) {
            rest = q;
            e += 1;
        }
        e
    }

    /// Homogeneous gcd, normalized primitive with positive highest nonzero
    /// coefficient. Pure powers of either variable (roots at 0 and at
    /// infinity) are handled by extracting valuations before dehomogenizing.
    /// Conventions: gcd with the zero form returns the other argument
    /// normalized; gcd of two zero forms is zero.
    pub fn gcd(&self, other: &BiHomPoly) -> Result<BiHomPoly> {
        if self.vars != other.vars {
            return Err(Error::VarMismatch {
                expected: self.vars.label(),
                got: other.vars.label(),
            });
        }
        if self.is_zero() {
            return Ok(if other.is_zero() {
                BiHomPoly::zero(self.vars)
            } else {
                other.normalize_primitive()
            });
        }
        if other.is_zero() {
            return Ok(self.normalize_primitive());
        }
        let a = self.val_first().unwrap().min(other.val_first().unwrap());
        let b = self.val_second().unwrap().min(other.val_second().unwrap());
        let g = self.dehom().gcd(&other.dehom());
        // g has nonzero constant term after stripping shared first-variable
        // valuation, so its homogenization to its own degree is the gcd of
        // the stripped parts; reattach the extracted monomial part.
        let g = g
            .exact_div(&UniPoly::x().pow(a.min(g.valuation_at_zero())))
            .unwrap();
        let core = BiHomPoly::homogenize(&g, g.deg_or0(), self.vars);
        let first = BiHomPoly::monomial(Rat::one(), 1, 1, self.vars);
        let second = BiHomPoly::monomial(Rat::one(), 0, 1, self.vars);
        Ok(first
            .pow(a)
            .mul(&second.pow(b))
            .mul(&core)
            .normalize_primitive())
    }

    /// Integer-primitive, positive highest nonzero coefficient; the
    /// canonical representative modulo nonzero scalars. Panics on zero.
    pub fn normalize_primitive(&self) -> BiHomPoly {
        assert!(!self.is_zero(), "cannot normalize the zero form");
        let top = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        let u = UniPoly::from_coeffs(self.coeffs.clone());
        let mut c = u.content();
        if self.coeffs[top].is_negative() {
            c = -c;
        }
        let inv = Rat::one() / c;
        self.scale(&inv)
    }

    pub fn eq_up_to_scalar(&self, other: &BiHomPoly) -> bool {
        if self.vars != other.vars {
            return false;
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (true, false) | (false, true) => false,
            _ => {
                self.degree() == other.degree()
                    && self.normalize_primitive() == other.normalize_primitive()
            }
        }
    }

    /// Square-free decomposition of a nonzero form: pure first/second
    /// variable powers appear as explicit factors, the rest comes from the
    /// dehomogenized Yun decomposition re-homogenized. Factors are
    /// pairwise coprime, square-free, normalized.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(BiHomPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroInput("squarefree decomposition of a form"));
        }
        let mut out = Vec::new();
        let a = self.val_first().unwrap();
        let b = self.val_second().unwrap();
        if a > 0 {
            out.push((BiHomPoly::monomial(Rat::one(), 1, 1, self.vars), a));
        }
        if b > 0 {
            out.push((BiHomPoly::monomial(Rat::one(), 0, 1, self.vars), b));
        }
        let core = self.dehom().exact_div(&UniPoly::x().pow(a)).unwrap();
        for (f, e) in core.squarefree_decomposition()? {
            let d = f.deg_or0();
            out.push((
                BiHomPoly::homogenize(&f, d, self.vars).normalize_primitive(),
                e,
            ));
        }
        Ok(out)
    }
}

impl fmt::Debug for BiHomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BiHomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0[deg {}]", self.degree());
        }
        let (x, y) = self.vars.names();
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            if i > 0 {
                write!(f, "*{}^{}", x, i)?;
            }
            if d - i > 0 {
                write!(f, "*{}^{}", y, d - i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::rat_i;

    fn sv(c: &[i64]) -> BiHomPoly {
        BiHomPoly::from_i64(c, VarPair::SV)
    }

    #[test]
    fn gcd_pure_powers() {
        // gcd(s^2 v, s^3) = s^2
        let f = BiHomPoly::monomial(rat_i(1), 2, 3, VarPair::SV);
        let g = BiHomPoly::monomial(rat_i(1), 3, 3, VarPair::SV);
        let got = f.gcd(&g).unwrap();
        assert!(got.eq_up_to_scalar(&BiHomPoly::monomial(rat_i(1), 2, 2, VarPair::SV)));
    }

    #[test]
    fn gcd_linear_factor() {
        // gcd((s+v)^2, (s+v)(s-v)) = s+v
        let sp = sv(&[1, 1]);
        let sm = sv(&[-1, 1]);
        let got = sp.pow(2).gcd(&sp.mul(&sm)).unwrap();
        assert!(got.eq_up_to_scalar(&sp));
    }

    #[test]
    fn gcd_var_mismatch_is_error() {
        let f = sv(&[1, 1]);
        let g = BiHomPoly::from_i64(&[1, 1], VarPair::TU);
        assert!(f.gcd(&g).is_err());
    }

    #[test]
    fn exact_division_and_valuations() {
        let f = sv(&[0, 0, 1]).mul(&sv(&[1, 2])); // s^2 (2s + v)
        let q = f.exact_div(&sv(&[0, 1])).unwrap(); // divide by s
        assert!(q.eq_up_to_scalar(&sv(&[0, 1]).mul(&sv(&[1, 2]))));
        assert!(f.exact_div(&sv(&[1, 0])).is_none()); // v does not divide
        assert!(f.exact_div(&sv(&[1, 1])).is_none());
    }

    #[test]
    fn normalize_scales_and_sign() {
        let f = sv(&[2, -4]).scale(&crate::polycore::rat::rat_frac(1, 6));
        let n = f.normalize_primitive();
        assert_eq!(n, sv(&[-1, 2]));
        assert!(f.eq_up_to_scalar(&f.scale(&rat_i(-9))));
    }

    #[test]
    fn squarefree_with_infinity_factor() {
        // s^2 v^3 (s+v)^2: factors s(2), v(3), s+v(2)
        let f = BiHomPoly::monomial(rat_i(1), 2, 5, VarPair::SV).mul(&sv(&[1, 1]).pow(2));
        let dec = f.squarefree_decomposition().unwrap();
        let mut prod = BiHomPoly::one(VarPair::SV);
        for (p, e) in &dec {
            prod = prod.mul(&p.pow(*e));
        }
        assert!(prod.eq_up_to_scalar(&f));
        assert_eq!(dec.len(), 3);
    }

    #[test]
    fn homogenize_dehom_round_trip() {
        let p = UniPoly::from_i64(&[1, 0, -3]);
        let h = BiHomPoly::homogenize(&p, 4, VarPair::TU);
        assert_eq!(h.dehom(), p);
        assert_eq!(h.val_second(), Some(2));
        assert_eq!(h.degree(), 4);
    }

    #[test]
    fn eval_matches_dehom() {
        let f = sv(&[3, -1, 2]);
        let t = crate::polycore::rat::rat_frac(5, 3);
        assert_eq!(f.eval(&t, &rat_i(1)), f.dehom().eval(&t));
        assert_eq!(f.eval(&rat_i(1), &t), f.dehom_first().eval(&t));
    }
}
