//! Prime fields `F_p` for small primes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 257;

/// A validated prime `2 <= p <= 257`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub const TWO: Prime = Prime(2);

    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_PRIME as u64 || !is_prime(p) {
            return Err(Error::UnsupportedPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// The residue of an arbitrary integer.
    pub fn element(self, value: i64) -> FieldElement {
        FieldElement {
            value: value.rem_euclid(self.0 as i64) as u32,
            modulus: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    /// Every element of the field, in increasing order of representative.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.0).map(move |v| FieldElement { value: v, modulus: self })
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// An element of `F_p`, stored as its canonical representative in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: Prime,
}

impl FieldElement {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse, computed as `x^(p-2)`.
    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.modulus.0 as u64 - 2))
    }

    /// `x^e` by square-and-multiply. `pow(0, 0) = 1`.
    pub fn pow(self, mut e: u64) -> Self {
        let p = self.modulus.0 as u64;
        let mut base = self.value as u64;
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        FieldElement {
            value: acc as u32,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.0;
        let s = self.value + rhs.value;
        FieldElement {
            value: if s >= p { s - p } else { s },
            modulus: self.modulus,
        }
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        let p = self.modulus.0;
        FieldElement {
            value: if self.value == 0 { 0 } else { p - self.value },
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FieldElement {
            value: self.value * rhs.value % self.modulus.0,
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes() -> Vec<Prime> {
        (2..=MAX_PRIME as u64).filter_map(|p| Prime::new(p).ok()).collect()
    }

    #[test]
    fn prime_validation() {
        assert_eq!(Prime::new(0), Err(Error::UnsupportedPrime(0)));
        assert_eq!(Prime::new(1), Err(Error::UnsupportedPrime(1)));
        assert_eq!(Prime::new(9), Err(Error::UnsupportedPrime(9)));
        assert_eq!(Prime::new(263), Err(Error::UnsupportedPrime(263)));
        assert_eq!(Prime::new(257).unwrap().get(), 257);
        assert_eq!(primes().len(), 55);
    }

    #[test]
    fn element_reduces_to_canonical() {
        let p = Prime::new(5).unwrap();
        assert_eq!(p.element(-1).value(), 4);
        assert_eq!(p.element(12).value(), 2);
    }

    #[test]
    fn inverse_examples() {
        let two = Prime::new(2).unwrap();
        assert_eq!(two.one().inv().unwrap().value(), 1);
        let three = Prime::new(3).unwrap();
        assert_eq!(three.element(2).inv().unwrap().value(), 2);
        let five = Prime::new(5).unwrap();
        // brute-force scan
        let expected = (0..5).find(|y| 3 * y % 5 == 1).unwrap();
        assert_eq!(expected, 2);
        assert_eq!(five.element(3).inv().unwrap().value(), expected);
        assert_eq!(five.zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn pow_examples() {
        let two = Prime::new(2).unwrap();
        assert_eq!(two.one().pow(100).value(), 1);
        let three = Prime::new(3).unwrap();
        assert_eq!(three.element(2).pow(2).value(), 1);
        let five = Prime::new(5).unwrap();
        let x = five.element(2);
        assert_eq!(x * x * x * x, five.one());
        assert_eq!(x.pow(4).value(), 1);
        assert_eq!(five.zero().pow(0).value(), 1);
        assert_eq!(five.zero().pow(3).value(), 0);
    }

    #[test]
    fn exhaustive_inverse_and_frobenius() {
        for p in primes() {
            for x in p.elements() {
                assert_eq!(x.pow(p.get() as u64), x, "frobenius p={p} x={x}");
                if !x.is_zero() {
                    let y = x.inv().unwrap();
                    assert_eq!(x * y, p.one());
                    assert_eq!(y.inv().unwrap(), x);
                }
                assert_eq!(x + (-x), p.zero());
                assert_eq!(x - x, p.zero());
            }
        }
    }
}
