//! Arithmetic in the prime field GF(p).
//!
//! Residues are stored as plain `u32` values in `0..p`; a [`Gf`] value carries
//! the modulus and performs every operation. It is `Copy` and cheap to pass
//! around, so matrices and vectors simply hold one next to their entries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted. Products of two residues must fit in a `u64`.
pub const MAX_PRIME: u32 = 1 << 31;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Gf {
    p: u32,
}

impl TryFrom<u32> for Gf {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Gf::new(p)
    }
}

impl From<Gf> for u32 {
    fn from(gf: Gf) -> u32 {
        gf.p
    }
}

impl Gf {
    pub fn new(p: u32) -> Result<Self> {
        if p >= MAX_PRIME || !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Gf { p })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `0..p`.
    #[inline]
    pub fn elem(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: `a^(p-2)`.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero(self.p));
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    /// Frobenius on a scalar. Over the prime field this is the identity, but
    /// call sites keep the `α^p` shape of the formulas they implement.
    #[inline]
    pub fn frob(self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    pub fn units(self) -> impl Iterator<Item = u32> {
        1..self.p
    }

    // Vector helpers. All slices are assumed reduced and of equal length.

    pub fn axpy(self, y: &mut [u32], a: u32, x: &[u32]) {
        if a == 0 {
            return;
        }
        for (yi, &xi) in y.iter_mut().zip(x) {
            *yi = self.mul_add(*yi, a, xi);
        }
    }

    pub fn scale(self, a: u32, x: &[u32]) -> Vec<u32> {
        x.iter().map(|&xi| self.mul(a, xi)).collect()
    }

    pub fn add_vec(self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.add(a, b)).collect()
    }

    pub fn sub_vec(self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.sub(a, b)).collect()
    }

    pub fn dot(self, x: &[u32], y: &[u32]) -> u32 {
        let p = self.p as u64;
        let mut acc = 0u64;
        for (&a, &b) in x.iter().zip(y) {
            acc = (acc + a as u64 * b as u64) % p;
        }
        acc as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(Gf::new(4).is_err());
        assert!(Gf::new(1).is_err());
        assert!(Gf::new(0).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(Gf::new(5).unwrap().inv(1).unwrap(), 1);
        assert_eq!(Gf::new(5).unwrap().inv(2).unwrap(), 3);
        assert_eq!(Gf::new(7).unwrap().inv(6).unwrap(), 6);
        assert_eq!(
            Gf::new(7).unwrap().inv(0),
            Err(Error::DivisionByZero(7))
        );
        for p in [2, 3, 5, 7, 11, 13, 31] {
            let gf = Gf::new(p).unwrap();
            for a in gf.units() {
                assert_eq!(gf.mul(a, gf.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn frobenius_is_identity() {
        for p in [2, 3, 5, 7, 11, 13] {
            let gf = Gf::new(p).unwrap();
            for a in gf.elements() {
                assert_eq!(gf.frob(a), a);
            }
        }
    }

    #[test]
    fn signed_representatives() {
        let gf = Gf::new(7).unwrap();
        assert_eq!(gf.signed(6), -1);
        assert_eq!(gf.signed(3), 3);
        assert_eq!(gf.signed(4), -3);
        assert_eq!(Gf::new(2).unwrap().signed(1), 1);
        assert_eq!(gf.elem(-8), 6);
    }
}
