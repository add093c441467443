//! Exact scalar rings: prime fields and arbitrary-precision rationals.
//!
//! Every scalar here is exact; there is no floating point anywhere in this
//! crate. A ring is a value (carrying e.g. the prime), and elements are plain
//! data operated on through the ring.

use std::fmt;
use std::hash::Hash;

use num::BigRational;
use num::{One, Signed, Zero};

use crate::error::FincatError;

/// A commutative ring with decidable equality on elements.
///
/// The shipped rings are fields, which is what makes invertibility of
/// matrices decidable by exact elimination.
pub trait Ring: Clone + fmt::Debug {
    type Elem: Clone + Eq + Hash + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for non-units.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    /// Parse an element from its textual form (used by description files).
    fn parse(&self, s: &str) -> Result<Self::Elem, FincatError>;
    /// Short tag identifying the ring, used in reports.
    fn tag(&self) -> String;
}

/// Rings whose element set can be enumerated, enabling exhaustive hom-set
/// enumeration in the matrix instance.
pub trait FiniteRing: Ring {
    fn elements(&self) -> Vec<Self::Elem>;
}

/// The prime field `F_p` with elements canonically represented in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Primality is checked by trial division; composite moduli are refused.
    pub fn new(p: u64) -> Result<Self, FincatError> {
        if !is_prime(p) {
            return Err(FincatError::InvalidInput(format!(
                "{p} is not prime; the matrix instance requires a prime modulus"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // p is at most 2^32 in practice; widen to avoid overflow anyway.
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a % self.p == 0 {
            return None;
        }
        // Fermat: a^(p-2) mod p.
        let mut base = *a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        Some(acc)
    }
    fn parse(&self, s: &str) -> Result<u64, FincatError> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| FincatError::InvalidInput(format!("`{s}` is not an integer mod {}", self.p)))?;
        Ok(self.from_int(n))
    }
    fn tag(&self) -> String {
        format!("F_{}", self.p)
    }
}

impl FiniteRing for PrimeField {
    fn elements(&self) -> Vec<u64> {
        (0..self.p).collect()
    }
}

/// Exact rational numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational, FincatError> {
        let t = s.trim();
        t.parse::<BigRational>()
            .map_err(|_| FincatError::InvalidInput(format!("`{s}` is not a rational (expected e.g. `3` or `3/4`)")))
    }
    fn tag(&self) -> String {
        "Q".to_string()
    }
}

/// Render a rational without a spurious denominator when it is integral.
pub fn rational_display(q: &BigRational) -> String {
    if q.denom().is_one() || q.denom().abs().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_division_accepts_primes_only() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert!(PrimeField::new(p).is_ok());
        }
        for n in [0u64, 1, 4, 6, 9, 15, 21] {
            assert!(PrimeField::new(n).is_err());
        }
    }

    #[test]
    fn fp_field_axioms_small() {
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for a in 0..p {
                for b in 0..p {
                    assert_eq!(f.add(&a, &b), (a + b) % p);
                    assert_eq!(f.mul(&a, &b), (a * b) % p);
                    assert_eq!(f.add(&a, &f.neg(&a)), 0);
                }
                if a != 0 {
                    let ai = f.inv(&a).unwrap();
                    assert_eq!(f.mul(&a, &ai), 1 % p);
                }
            }
            assert!(f.inv(&0).is_none());
        }
    }

    #[test]
    fn rationals_parse_and_invert() {
        let q = Rationals;
        let x = q.parse("3/4").unwrap();
        let y = q.parse("-2").unwrap();
        assert_eq!(q.mul(&x, &q.inv(&x).unwrap()), q.one());
        assert_eq!(rational_display(&q.add(&x, &y)), "-5/4");
        assert_eq!(rational_display(&q.parse("6/3").unwrap()), "2");
        assert!(q.parse("1.5").is_err());
    }
}
