//! Exact coefficient arithmetic: the rationals and prime fields F_p.
//!
//! Every operation is exact; there is no rounding anywhere in the kernel.
//! The field is a context object (it carries the modulus for F_p), and
//! elements are plain data without a back pointer.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// A coefficient field. Implementations must be exact.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    /// 0 for the rationals, p for F_p.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. Panics on zero; callers check `is_zero` first.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_integer(&self, n: i64) -> Self::Elem;

    /// Image of num/den. Errors when the denominator vanishes in this field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    /// Canonical text form, exact under `from_ratio`-based parsing.
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Uniform random element, for randomized identity checks.
    fn random_elem(&self, rng: &mut dyn rand::RngCore) -> Self::Elem;
}

/// The field of rational numbers with arbitrary-precision representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn from_integer(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn random_elem(&self, rng: &mut dyn rand::RngCore) -> BigRational {
        let n = (rng.next_u32() % 2001) as i64 - 1000;
        let d = (rng.next_u32() % 30) as i64 + 1;
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}

/// The prime field F_p for p < 2^31, elements stored as canonical residues.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) {
            return Err(Error::CharacteristicTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.sign() == Sign::Minus {
            r += &p;
        }
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1 % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // extended Euclid on (a, p)
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r): (i64, i64) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        if t < 0 {
            (t + self.p as i64) as u64
        } else {
            t as u64
        }
    }

    fn from_integer(&self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64);
        r as u64
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_bigint(den);
        if d == 0 {
            return Err(Error::DenominatorVanishes(den.to_string(), self.p));
        }
        let n = self.reduce_bigint(num);
        Ok(self.mul(&n, &self.inv(&d)))
    }

    fn format_elem(&self, a: &u64) -> String {
        // symmetric residue for readability; parsing maps it back exactly
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }

    fn random_elem(&self, rng: &mut dyn rand::RngCore) -> u64 {
        rng.next_u64() % self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The default working prime for experiments.
pub const DEFAULT_PRIME: u64 = 32003;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert_eq!(PrimeField::new(32004), Err(Error::NotPrime(32004)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(matches!(
            PrimeField::new(1 << 32),
            Err(Error::CharacteristicTooLarge(_))
        ));
    }

    #[test]
    fn prime_field_ops() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), 5);
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.from_integer(-1), 6);
        for a in 1..7u64 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn prime_field_ratio() {
        let f = PrimeField::new(32003).unwrap();
        let half = f
            .from_ratio(&BigInt::from(1), &BigInt::from(2))
            .unwrap();
        assert_eq!(f.mul(&half, &2), 1);
        assert!(f
            .from_ratio(&BigInt::from(1), &BigInt::from(32003))
            .is_err());
    }

    #[test]
    fn rational_format_roundtrip() {
        let q = Rationals;
        let x = q.from_ratio(&BigInt::from(-3), &BigInt::from(6)).unwrap();
        assert_eq!(q.format_elem(&x), "-1/2");
    }

    #[test]
    fn char_two_field_works() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(f.add(&1, &1), 0);
        assert_eq!(f.neg(&1), 1);
    }
}
