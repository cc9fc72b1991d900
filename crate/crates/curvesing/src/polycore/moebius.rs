//! Invertible linear changes of coordinates on P^1.
//!
//! A change is the 2x2 matrix (alpha beta / delta gamma) acting on a
//! variable pair by substitution: first -> alpha*first + beta*second,
//! second -> delta*first + gamma*second. Applying a change and then its
//! exact inverse is the identity on forms (not merely up to scalar, since
//! the inverse divides by the determinant).

use super::bihom::BiHomPoly;
use super::rat::{rat_i, Rat};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoebiusChange {
    pub alpha: Rat,
    pub beta: Rat,
    pub delta: Rat,
    pub gamma: Rat,
}

impl MoebiusChange {
    pub fn new(alpha: Rat, beta: Rat, delta: Rat, gamma: Rat) -> Result<Self> {
        let m = MoebiusChange { alpha, beta, delta, gamma };
        if m.det().is_zero() {
            return Err(Error::SingularMoebius);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        MoebiusChange {
            alpha: Rat::one(),
            beta: Rat::zero(),
            delta: Rat::zero(),
            gamma: Rat::one(),
        }
    }

    /// Swap of the two variables.
    pub fn swap() -> Self {
        MoebiusChange {
            alpha: Rat::zero(),
            beta: Rat::one(),
            delta: Rat::one(),
            gamma: Rat::zero(),
        }
    }

    pub fn det(&self) -> Rat {
        &self.alpha * &self.gamma - &self.beta * &self.delta
    }

    pub fn inverse(&self) -> MoebiusChange {
        let d = self.det();
        assert!(!d.is_zero());
        MoebiusChange {
            alpha: &self.gamma / &d,
            beta: -(&self.beta / &d),
            delta: -(&self.delta / &d),
            gamma: &self.alpha / &d,
        }
    }

    /// Draw integer entries uniformly from [-20, 20] until the determinant
    /// is nonzero. Deterministic for a fixed RNG state.
    pub fn random(rng: &mut impl Rng) -> MoebiusChange {
        loop {
            let m = MoebiusChange {
                alpha: rat_i(rng.gen_range(-20i64..=20)),
                beta: rat_i(rng.gen_range(-20i64..=20)),
                delta: rat_i(rng.gen_range(-20i64..=20)),
                gamma: rat_i(rng.gen_range(-20i64..=20)),
            };
            if !m.det().is_zero() {
                return m;
            }
        }
    }

    /// Substitute into a form: first -> alpha t' + beta u',
    /// second -> delta t' + gamma u'. Degree is preserved.
    pub fn apply(&self, f: &BiHomPoly) -> BiHomPoly {
        let vars = f.vars();
        if f.is_zero() {
            return f.clone();
        }
        let d = f.degree();
        let l1 = BiHomPoly::linear(self.alpha.clone(), self.beta.clone(), vars);
        let l2 = BiHomPoly::linear(self.delta.clone(), self.gamma.clone(), vars);
        // Precompute powers of both linear images.
        let mut p1 = vec![BiHomPoly::one(vars)];
        let mut p2 = vec![BiHomPoly::one(vars)];
        for i in 1..=d {
            p1.push(p1[i - 1].mul(&l1));
            p2.push(p2[i - 1].mul(&l2));
        }
        let mut acc = BiHomPoly::zero(vars);
        for i in 0..=d {
            let c = f.coeff(i);
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&p1[i].mul(&p2[d - i]).scale(&c));
        }
        if acc.is_zero() {
            // all-zero result of declared degree d
            BiHomPoly::homogenize(&super::unipoly::UniPoly::zero(), d, vars)
        } else {
            acc
        }
    }
}
