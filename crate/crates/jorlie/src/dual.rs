//! Dual-number scalar extensions: algebraic differentiation.
//!
//! `Dual<R>` is R[eps] with eps^2 = 0; evaluating a polynomial map at
//! `x + eps*v` yields the value and the directional derivative exactly.
//! `Dual2<R>` is R[eps1, eps2] with eps1^2 = eps2^2 = 0 and eps1*eps2
//! nonzero; its eps1*eps2 coefficient extracts second differentials.

use crate::error::{Error, Result};
use crate::scalar::Ring;
use std::fmt::Display;

/// a + eps*b with eps^2 = 0.
#[derive(Clone, PartialEq, Debug)]
pub struct Dual<R> {
    pub re: R,
    pub eps: R,
}

impl<R: Ring> Dual<R> {
    pub fn new(re: R, eps: R) -> Self {
        Dual { re, eps }
    }

    /// Embed a base scalar with zero eps part.
    pub fn constant(re: R) -> Self {
        let eps = re.ring_zero();
        Dual { re, eps }
    }
}

impl<R: Ring> Display for Dual<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + {}*eps", self.re, self.eps)
    }
}

impl<R: Ring> Ring for Dual<R> {
    fn add(&self, other: &Self) -> Self {
        Dual::new(self.re.add(&other.re), self.eps.add(&other.eps))
    }
    fn sub(&self, other: &Self) -> Self {
        Dual::new(self.re.sub(&other.re), self.eps.sub(&other.eps))
    }
    fn mul(&self, other: &Self) -> Self {
        // (a + eps b)(a' + eps b') = aa' + eps(ab' + a'b)
        Dual::new(
            self.re.mul(&other.re),
            self.re.mul(&other.eps).add(&self.eps.mul(&other.re)),
        )
    }
    fn neg(&self) -> Self {
        Dual::new(self.re.neg(), self.eps.neg())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }
    fn is_unit(&self) -> bool {
        // a + eps b is a unit iff a is
        self.re.is_unit()
    }
    fn inv(&self) -> Result<Self> {
        if !self.re.is_unit() {
            return Err(Error::NonUnit(format!("{self}")));
        }
        // (a + eps b)^{-1} = a^{-1} - eps b a^{-2}
        let ai = self.re.inv()?;
        let eps = self.eps.mul(&ai).mul(&ai).neg();
        Ok(Dual::new(ai, eps))
    }
    fn ring_zero(&self) -> Self {
        Dual::constant(self.re.ring_zero())
    }
    fn ring_one(&self) -> Self {
        Dual::constant(self.re.ring_one())
    }
    fn embed_i64(&self, n: i64) -> Self {
        Dual::constant(self.re.embed_i64(n))
    }
    fn parse(&self, s: &str) -> Result<Self> {
        Ok(Dual::constant(self.re.parse(s)?))
    }
}

/// a + eps1*b + eps2*c + eps1*eps2*d with eps1^2 = eps2^2 = 0.
#[derive(Clone, PartialEq, Debug)]
pub struct Dual2<R> {
    pub value: R,
    pub eps1: R,
    pub eps2: R,
    pub eps12: R,
}

impl<R: Ring> Dual2<R> {
    pub fn new(value: R, eps1: R, eps2: R, eps12: R) -> Self {
        Dual2 { value, eps1, eps2, eps12 }
    }

    pub fn constant(value: R) -> Self {
        let z = value.ring_zero();
        Dual2::new(value, z.clone(), z.clone(), z)
    }
}

impl<R: Ring> Display for Dual2<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} + {}*e1 + {}*e2 + {}*e1e2",
            self.value, self.eps1, self.eps2, self.eps12
        )
    }
}

impl<R: Ring> Ring for Dual2<R> {
    fn add(&self, other: &Self) -> Self {
        Dual2::new(
            self.value.add(&other.value),
            self.eps1.add(&other.eps1),
            self.eps2.add(&other.eps2),
            self.eps12.add(&other.eps12),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        Dual2::new(
            self.value.sub(&other.value),
            self.eps1.sub(&other.eps1),
            self.eps2.sub(&other.eps2),
            self.eps12.sub(&other.eps12),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        // Four-coefficient convolution truncated by eps_i^2 = 0.
        let (a, b, c, d) = (&self.value, &self.eps1, &self.eps2, &self.eps12);
        let (a2, b2, c2, d2) = (&other.value, &other.eps1, &other.eps2, &other.eps12);
        Dual2::new(
            a.mul(a2),
            a.mul(b2).add(&b.mul(a2)),
            a.mul(c2).add(&c.mul(a2)),
            a.mul(d2).add(&d.mul(a2)).add(&b.mul(c2)).add(&c.mul(b2)),
        )
    }
    fn neg(&self) -> Self {
        Dual2::new(self.value.neg(), self.eps1.neg(), self.eps2.neg(), self.eps12.neg())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.eps1.is_zero() && self.eps2.is_zero() && self.eps12.is_zero()
    }
    fn is_unit(&self) -> bool {
        self.value.is_unit()
    }
    fn inv(&self) -> Result<Self> {
        if !self.value.is_unit() {
            return Err(Error::NonUnit(format!("{self}")));
        }
        // a^{-1}(1 + n a^{-1})^{-1} with n the nilpotent part; n^2 = 2bc e1e2.
        let ai = self.value.inv()?;
        let ai2 = ai.mul(&ai);
        let ai3 = ai2.mul(&ai);
        let two = self.value.embed_i64(2);
        Ok(Dual2::new(
            ai.clone(),
            self.eps1.mul(&ai2).neg(),
            self.eps2.mul(&ai2).neg(),
            self.eps12.mul(&ai2).neg().add(&two.mul(&self.eps1).mul(&self.eps2).mul(&ai3)),
        ))
    }
    fn ring_zero(&self) -> Self {
        Dual2::constant(self.value.ring_zero())
    }
    fn ring_one(&self) -> Self {
        Dual2::constant(self.value.ring_one())
    }
    fn embed_i64(&self, n: i64) -> Self {
        Dual2::constant(self.value.embed_i64(n))
    }
    fn parse(&self, s: &str) -> Result<Self> {
        Ok(Dual2::constant(self.value.parse(s)?))
    }
}
