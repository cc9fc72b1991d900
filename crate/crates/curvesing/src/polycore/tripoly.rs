//! Sparse polynomials in the projective coordinates x1, x2, x3.
//!
//! Used for syzygies viewed as forms linear in x, for the symbolic
//! Sylvester and Bezout matrices, and for implicit equations. Terms are
//! kept in a BTreeMap keyed by exponent triples, so iteration order and
//! every derived normal form are deterministic.

use super::bihom::BiHomPoly;
use super::rat::Rat;
use super::unipoly::UniPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    terms: BTreeMap<[u32; 3], Rat>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        TriPoly::term(Rat::one(), [0, 0, 0])
    }

    pub fn term(c: Rat, exps: [u32; 3]) -> Self {
        let mut t = TriPoly::zero();
        if !c.is_zero() {
            t.terms.insert(exps, c);
        }
        t
    }

    /// c1*x1 + c2*x2 + c3*x3.
    pub fn linear(c: &[Rat; 3]) -> Self {
        let mut t = TriPoly::zero();
        for (i, ci) in c.iter().enumerate() {
            if !ci.is_zero() {
                let mut e = [0u32; 3];
                e[i] = 1;
                t.terms.insert(e, ci.clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max()
    }

    pub fn coeff(&self, exps: [u32; 3]) -> Rat {
        self.terms.get(&exps).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert_add(&mut self, exps: [u32; 3], c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rat::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert_add(
                    [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]],
                    ca * cb,
                );
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> TriPoly {
        if c.is_zero() {
            return TriPoly::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn eval(&self, x: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &ei) in e.iter().enumerate() {
                for _ in 0..ei {
                    term = term * &x[i];
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitute homogeneous forms for x1, x2, x3. Requires self to be
    /// homogeneous (all terms of one total degree, or zero) so the result
    /// is a form of degree (total degree) * (form degree).
    pub fn substitute_forms(&self, forms: &[BiHomPoly; 3]) -> BiHomPoly {
        let vars = forms[0].vars();
        if self.is_zero() {
            return BiHomPoly::zero(vars);
        }
        let d = self.total_degree().unwrap();
        assert!(
            self.terms.keys().all(|e| e[0] + e[1] + e[2] == d),
            "substitution requires a homogeneous polynomial"
        );
        let mut acc = BiHomPoly::zero(vars);
        for (e, c) in &self.terms {
            let mut term = BiHomPoly::constant(c.clone(), vars);
            for (i, &ei) in e.iter().enumerate() {
                term = term.mul(&forms[i].pow(ei as usize));
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Exact quotient by x3, or `None` when some term lacks it.
    pub fn div_x3(&self) -> Option<TriPoly> {
        let mut out = TriPoly::zero();
        for (e, c) in &self.terms {
            if e[2] == 0 {
                return None;
            }
            out.terms.insert([e[0], e[1], e[2] - 1], c.clone());
        }
        Some(out)
    }

    /// Integer-primitive, leading (lexicographically largest) term positive.
    pub fn normalize_primitive(&self) -> TriPoly {
        assert!(!self.is_zero(), "cannot normalize the zero polynomial");
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        let lead = self.terms.iter().next_back().unwrap().1;
        if lead.is_negative() {
            content = -content;
        }
        let inv = Rat::one() / content;
        self.scale(&inv)
    }

    pub fn eq_up_to_scalar(&self, other: &TriPoly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (true, false) | (false, true) => false,
            _ => self.normalize_primitive() == other.normalize_primitive(),
        }
    }

    /// Coefficients as a univariate polynomial in x1 after x2 -> a, x3 -> b.
    pub fn eval_partial23(&self, a: &Rat, b: &Rat) -> UniPoly {
        let d = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..e[1] {
                term = term * a;
            }
            for _ in 0..e[2] {
                term = term * b;
            }
            let i = e[0] as usize;
            coeffs[i] = &coeffs[i] + &term;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl fmt::Debug for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    write!(f, "*x{}^{}", i + 1, ei)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::bihom::VarPair;
    use crate::polycore::rat::rat_i;

    #[test]
    fn arithmetic_and_eval() {
        let p = TriPoly::linear(&[rat_i(1), rat_i(-2), rat_i(0)]); // x1 - 2 x2
        let q = TriPoly::linear(&[rat_i(0), rat_i(0), rat_i(1)]); // x3
        let prod = p.mul(&q);
        let x = [rat_i(3), rat_i(1), rat_i(5)];
        assert_eq!(prod.eval(&x), rat_i(5));
        assert_eq!(p.add(&p).eval(&x), rat_i(2));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn substitute_forms_degree() {
        // (x1 - x2) at (s^2, v^2, sv) -> s^2 - v^2
        let p = TriPoly::linear(&[rat_i(1), rat_i(-1), rat_i(0)]);
        let forms = [
            BiHomPoly::monomial(rat_i(1), 2, 2, VarPair::SV),
            BiHomPoly::monomial(rat_i(1), 0, 2, VarPair::SV),
            BiHomPoly::monomial(rat_i(1), 1, 2, VarPair::SV),
        ];
        let got = p.substitute_forms(&forms);
        assert_eq!(got.degree(), 2);
        assert!(got.eq_up_to_scalar(&BiHomPoly::from_i64(&[-1, 0, 1], VarPair::SV)));
    }

    #[test]
    fn x3_division() {
        let p = TriPoly::term(rat_i(2), [1, 0, 1]).add(&TriPoly::term(rat_i(-3), [0, 1, 2]));
        let q = p.div_x3().unwrap();
        assert_eq!(q.coeff([1, 0, 0]), rat_i(2));
        assert_eq!(q.coeff([0, 1, 1]), rat_i(-3));
        assert!(TriPoly::term(rat_i(1), [1, 0, 0]).div_x3().is_none());
    }

    #[test]
    fn normalization() {
        let p = TriPoly::term(crate::polycore::rat::rat_frac(-2, 3), [0, 0, 1])
            .add(&TriPoly::term(rat_i(-2), [1, 0, 0]));
        let n = p.normalize_primitive();
        // lex-largest term is x1; sign fixed positive
        assert_eq!(n.coeff([1, 0, 0]), rat_i(3));
        assert_eq!(n.coeff([0, 0, 1]), rat_i(1));
        assert!(p.eq_up_to_scalar(&p.scale(&rat_i(-4))));
    }
}
