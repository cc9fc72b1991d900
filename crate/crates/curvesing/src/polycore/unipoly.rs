//! Dense univariate polynomials over Q.
//!
//! Coefficients are stored ascending: `coeffs[i]` is the coefficient of t^i,
//! the highest-index coefficient is nonzero, and the zero polynomial is the
//! empty vector (its degree is `None`). The gcd runs a primitive polynomial
//! remainder sequence over integer-cleared coefficients to keep intermediate
//! growth under control; square-free decomposition is Yun's algorithm.

use super::rat::{height, rat_i, Rat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        UniPoly::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the convention deg 0 = 0; callers must handle zero first
    /// when the distinction matters.
    pub fn deg_or0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_i(i as i64))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by t^k.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = Rat::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Largest k with t^k dividing self; 0 for the zero polynomial.
    pub fn valuation_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let lc_inv = Rat::one() / divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let qd = rem.len() - 1 - dd;
        let mut quot = vec![Rat::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - &(dc * &c);
                    rem[k + i] = v;
                }
            }
            quot[k] = c;
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Pseudo-division: returns (factor, q, r) with factor * self = q * divisor + r,
    /// deg r < deg divisor and factor = lc(divisor)^(deg self - deg divisor + 1).
    /// Keeps integer inputs integral, unlike `div_rem`.
    pub fn pseudo_div_rem(&self, divisor: &UniPoly) -> (Rat, UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "pseudo-division by zero");
        let dg = divisor.deg_or0();
        if self.is_zero() || self.deg_or0() < dg {
            return (Rat::one(), UniPoly::zero(), self.clone());
        }
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut e = (self.deg_or0() - dg + 1) as i32;
        let factor = lc.pow(e);
        let mut r = self.clone();
        let mut q = UniPoly::zero();
        while !r.is_zero() && r.deg_or0() >= dg {
            let k = r.deg_or0() - dg;
            let head = UniPoly::monomial(r.leading_coeff().unwrap().clone(), k);
            q = &q.scale(&lc) + &head;
            r = &r.scale(&lc) - &(&head * divisor);
            e -= 1;
        }
        if e > 0 {
            let rest = lc.pow(e);
            q = q.scale(&rest);
            r = r.scale(&rest);
        }
        (factor, q, r)
    }

    /// Exact quotient, or `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &UniPoly) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }

    /// Rational content: the positive rational c such that self/c has
    /// coprime integer coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Integer-primitive form with positive leading coefficient. This is the
    /// canonical representative modulo nonzero rational scalars; all
    /// "equality up to a constant" tests downstream compare these.
    ///
    /// Panics on the zero polynomial (callers guard).
    pub fn normalize_primitive(&self) -> UniPoly {
        assert!(!self.is_zero(), "cannot normalize the zero polynomial");
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        let inv = Rat::one() / c;
        self.scale(&inv)
    }

    /// Equality modulo a nonzero rational scalar.
    pub fn eq_up_to_scalar(&self, other: &UniPoly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (true, false) | (false, true) => false,
            _ => self.normalize_primitive() == other.normalize_primitive(),
        }
    }

    /// Monic gcd via a primitive PRS on integer-cleared coefficients.
    /// gcd(0,0) = 0 and gcd(f,0) = monic(f).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut f = self.normalize_primitive();
        let mut g = other.normalize_primitive();
        if f.deg_or0() < g.deg_or0() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            if g.is_constant() {
                return UniPoly::one();
            }
            let r = pseudo_rem(&f, &g);
            f = g;
            g = if r.is_zero() { r } else { r.normalize_primitive() };
        }
        f.monic()
    }

    pub fn lcm(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(other);
        (self * other).exact_div(&g).expect("gcd divides product").monic()
    }

    /// Yun square-free decomposition: pairwise-coprime monic square-free
    /// factors with their exponents, whose weighted product is self up to a
    /// scalar. Factors of degree 0 are dropped.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroInput("squarefree decomposition"));
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut out = Vec::new();
        let mut c = f.exact_div(&g).expect("gcd divides");
        let mut d = df.exact_div(&g).expect("gcd divides derivative") - c.derivative();
        let mut i = 1usize;
        while !c.is_constant() {
            let p = c.gcd(&d);
            if p.deg_or0() > 0 {
                out.push((p.clone(), i));
            }
            c = c.exact_div(&p).expect("factor divides");
            d = d.exact_div(&p).expect("factor divides") - c.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Product of the distinct square-free factors (the radical), monic.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        let mut acc = UniPoly::one();
        for (p, _) in self.squarefree_decomposition()? {
            acc = &acc * &p;
        }
        Ok(acc)
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Largest e >= 0 with divisor^e dividing self. Divisor must be nonconstant.
    pub fn multiplicity_of(&self, divisor: &UniPoly) -> usize {
        assert!(divisor.deg_or0() > 0, "multiplicity of a constant divisor");
        let mut e = 0;
        let mut rest = self.clone();
        while let Some(q) = rest.exact_div(divisor) {
            if rest.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        e
    }

    /// Max coefficient height, for pivot tie-breaking.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(height)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Pseudo-remainder prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g.
fn pseudo_rem(f: &UniPoly, g: &UniPoly) -> UniPoly {
    let df = f.deg_or0();
    let dg = g.deg_or0();
    debug_assert!(df >= dg && !g.is_zero());
    let lc = g.leading_coeff().unwrap().clone();
    let mut r = f.scale(&lc.pow((df - dg + 1) as i32));
    while !r.is_zero() && r.deg_or0() >= dg {
        let k = r.deg_or0() - dg;
        let c = r.leading_coeff().unwrap() / &lc;
        r = r - g.scale(&c).shift_up(k);
    }
    r
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = v;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

fn fmt_poly(p: &UniPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "{}", c)?,
            1 => write!(f, "{}*t", c)?,
            _ => write!(f, "{}*t^{}", c, i)?,
        }
    }
    Ok(())
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}
