//! Scalar rings for exact computation.
//!
//! All algebraic structures in this crate are generic over a commutative
//! ring in which 2 and 3 are invertible: arbitrary-precision rationals,
//! prime fields GF(p) with p >= 5, dual-number extensions thereof, and a
//! 64-bit float for numeric geometry.
//!
//! Values are self-describing: a `GF(p)` element carries its modulus, so
//! constants are derived from an existing value of the ring (`ring_one`,
//! `embed_i64`) instead of from a bare type.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};

/// A commutative ring with decidable unit group and exact arithmetic.
pub trait Ring: Clone + PartialEq + Debug + Display + 'static {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// True iff `inv` would succeed.
    fn is_unit(&self) -> bool;

    /// Exact multiplicative inverse.
    fn inv(&self) -> Result<Self>;

    /// The zero of the ring this value lives in.
    fn ring_zero(&self) -> Self;

    /// The one of the ring this value lives in.
    fn ring_one(&self) -> Self;

    /// Canonical image of an integer in this ring.
    fn embed_i64(&self, n: i64) -> Self;

    /// Multiplication by 1/2 (2 is invertible in every supported ring).
    fn halve(&self) -> Self {
        self.mul(
            &self
                .embed_i64(2)
                .inv()
                .expect("2 must be invertible in the base ring"),
        )
    }

    /// Parse a scalar of the same ring as `self`.
    fn parse(&self, s: &str) -> Result<Self>;
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// Arbitrary-precision rational; numerator/denominator kept reduced with
/// positive denominator by `num_rational`.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

impl Ring for Rat {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::NonUnit("0".into()));
        }
        Ok(self.recip())
    }
    fn ring_zero(&self) -> Self {
        BigRational::zero()
    }
    fn ring_one(&self) -> Self {
        BigRational::one()
    }
    fn embed_i64(&self, n: i64) -> Self {
        rat_int(n)
    }
    fn parse(&self, s: &str) -> Result<Self> {
        parse_rat(s)
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::ParseError(format!("bad rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if Zero::is_zero(&d) {
            return Err(Error::ParseError(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

// ---------------------------------------------------------------------------
// Prime fields GF(p), p >= 5
// ---------------------------------------------------------------------------

/// Element of GF(p). The modulus travels with the value; `p = 5` is the
/// smallest allowed since 2 and 3 must be invertible.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    residue: u64,
    modulus: u64,
}

impl Fp {
    /// Construct the field witness `0 mod p`, checking the modulus.
    pub fn field(p: u64) -> Result<Fp> {
        if p == 2 || p == 3 {
            return Err(Error::ParseError(format!(
                "GF({p}) rejected: 2 and 3 must be invertible"
            )));
        }
        if p < 2 || !is_prime(p) {
            return Err(Error::ParseError(format!("GF({p}) rejected: not prime")));
        }
        Ok(Fp { residue: 0, modulus: p })
    }

    pub fn new(value: i64, p: u64) -> Result<Fp> {
        Ok(Fp::field(p)?.embed_i64(value))
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// All field elements, in residue order.
    pub fn all(&self) -> Vec<Fp> {
        (0..self.modulus)
            .map(|r| Fp { residue: r, modulus: self.modulus })
            .collect()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Debug for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Ring for Fp {
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp {
            residue: (self.residue + other.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp {
            residue: (self.residue + self.modulus - other.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp {
            residue: (self.residue * other.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            residue: (self.modulus - self.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn is_zero(&self) -> bool {
        self.residue == 0
    }
    fn is_unit(&self) -> bool {
        self.residue != 0
    }
    fn inv(&self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::NonUnit(format!("0 in GF({})", self.modulus)));
        }
        // Fermat: a^{p-2} mod p.
        let mut result = 1u64;
        let mut base = self.residue;
        let mut exp = self.modulus - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % self.modulus;
            }
            base = base * base % self.modulus;
            exp >>= 1;
        }
        Ok(Fp { residue: result, modulus: self.modulus })
    }
    fn ring_zero(&self) -> Self {
        Fp { residue: 0, modulus: self.modulus }
    }
    fn ring_one(&self) -> Self {
        Fp { residue: 1 % self.modulus, modulus: self.modulus }
    }
    fn embed_i64(&self, n: i64) -> Self {
        let p = self.modulus as i64;
        let r = n.rem_euclid(p) as u64;
        Fp { residue: r, modulus: self.modulus }
    }
    fn parse(&self, s: &str) -> Result<Self> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::ParseError(format!("bad GF element: {s:?}")))?;
        Ok(self.embed_i64(n))
    }
}

// ---------------------------------------------------------------------------
// 64-bit floats (numeric geometry only)
// ---------------------------------------------------------------------------

/// Finite 64-bit float scalar; NaN/Inf are rejected at the parse boundary.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct F64(pub f64);

impl F64 {
    pub fn new(v: f64) -> Result<F64> {
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite float {v}")));
        }
        Ok(F64(v))
    }
}

impl Display for F64 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for F64 {
    fn add(&self, other: &Self) -> Self {
        F64(self.0 + other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        F64(self.0 - other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        F64(self.0 * other.0)
    }
    fn neg(&self) -> Self {
        F64(-self.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
    fn is_unit(&self) -> bool {
        self.0 != 0.0 && self.0.is_finite()
    }
    fn inv(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NonUnit(format!("{}", self.0)));
        }
        Ok(F64(1.0 / self.0))
    }
    fn ring_zero(&self) -> Self {
        F64(0.0)
    }
    fn ring_one(&self) -> Self {
        F64(1.0)
    }
    fn embed_i64(&self, n: i64) -> Self {
        F64(n as f64)
    }
    fn parse(&self, s: &str) -> Result<Self> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::ParseError(format!("bad float: {s:?}")))?;
        F64::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf_construction_rules() {
        assert!(Fp::field(2).is_err());
        assert!(Fp::field(3).is_err());
        assert!(Fp::field(4).is_err());
        assert!(Fp::field(5).is_ok());
        assert!(Fp::field(7).is_ok());
    }

    #[test]
    fn gf_inverse() {
        // 2 * 4 = 8 = 1 mod 7
        let two = Fp::new(2, 7).unwrap();
        assert_eq!(two.inv().unwrap(), Fp::new(4, 7).unwrap());
        let zero = Fp::new(0, 5).unwrap();
        assert!(zero.inv().is_err());
        // 5 reduces to 0 in GF(5); 4 is a unit
        assert!(!Fp::new(5, 5).unwrap().is_unit());
        assert!(Fp::new(4, 5).unwrap().is_unit());
    }

    #[test]
    fn rational_parse_display() {
        let x = parse_rat("-3/6").unwrap();
        assert_eq!(x, rat(-1, 2));
        assert_eq!(format!("{x}"), "-1/2");
        assert_eq!(format!("{}", parse_rat("4/2").unwrap()), "2");
        assert!(parse_rat("1/0").is_err());
        assert!(rat(3, 5).is_unit());
    }

    #[test]
    fn halve_uses_value_ring() {
        let x = Fp::new(1, 5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(x.halve(), Fp::new(3, 5).unwrap());
        assert_eq!(rat_int(3).halve(), rat(3, 2));
    }

    #[test]
    fn float_rejects_non_finite() {
        assert!(F64::new(f64::NAN).is_err());
        assert!(F64::new(f64::INFINITY).is_err());
        assert!(F64::new(1.5).is_ok());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_rat() -> impl Strategy<Value = Rat> {
            (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
        }

        proptest! {
            #[test]
            fn rational_ring_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            }

            #[test]
            fn rational_inverse_round_trip(a in arb_rat()) {
                prop_assume!(!Ring::is_zero(&a));
                prop_assert_eq!(a.inv().unwrap().inv().unwrap(), a.clone());
                prop_assert_eq!(a.mul(&a.inv().unwrap()), a.ring_one());
            }
        }
    }
}
