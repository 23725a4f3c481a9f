//! Scalar arithmetic in the chain ring `Z/p^e` and its residue field `F_p`.
//!
//! The maximal ideal is generated by `p` itself, so the "gamma" of a chain
//! ring is always the residue characteristic here.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Largest modulus accepted; keeps every product of two residues in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 32;

/// The ring `Z/p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RingSpecRepr", into = "RingSpecRepr")]
pub struct RingSpec {
    p: u64,
    e: u32,
    modulus: u64,
}

#[derive(Serialize, Deserialize)]
struct RingSpecRepr {
    p: u64,
    e: u32,
}

impl TryFrom<RingSpecRepr> for RingSpec {
    type Error = Error;
    fn try_from(r: RingSpecRepr) -> Result<Self> {
        RingSpec::new(r.p, r.e)
    }
}

impl From<RingSpec> for RingSpecRepr {
    fn from(r: RingSpec) -> Self {
        RingSpecRepr { p: r.p, e: r.e }
    }
}

impl RingSpec {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidRing { p, e, reason: "p is not prime" });
        }
        if e == 0 {
            return Err(Error::InvalidRing { p, e, reason: "nilpotency index must be at least 1" });
        }
        let modulus = p.checked_pow(e).filter(|&m| m <= MAX_MODULUS).ok_or(Error::InvalidRing {
            p,
            e,
            reason: "modulus p^e exceeds 2^32",
        })?;
        Ok(RingSpec { p, e, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `p^e`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `p^k` for `k <= e`.
    pub fn gamma_pow(&self, k: u32) -> u64 {
        if k >= self.e {
            0
        } else {
            self.p.pow(k)
        }
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.modulus as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.modulus
    }

    pub fn pow(&self, a: u64, exp: u64) -> u64 {
        arith::pow_mod(a, exp, self.modulus)
    }

    pub fn is_unit(&self, a: u64) -> bool {
        !a.is_multiple_of(self.p)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        arith::inv_mod(a % self.modulus, self.modulus)
            .filter(|_| self.is_unit(a))
            .ok_or(Error::NotAUnit { value: a % self.modulus, ring: *self })
    }

    /// Largest `j <= e` with `p^j | a`; `e` for zero.
    pub fn valuation(&self, a: u64) -> u32 {
        let mut a = a % self.modulus;
        if a == 0 {
            return self.e;
        }
        let mut j = 0;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            j += 1;
        }
        j
    }

    /// Residue class modulo `p`.
    pub fn residue(&self, a: u64) -> u64 {
        a % self.p
    }

    pub fn elem(&self, value: i64) -> RElem {
        RElem { value: self.reduce(value), spec: *self }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "Z/{}", self.p)
        } else {
            write!(f, "Z/{}^{}", self.p, self.e)
        }
    }
}

/// An element of `Z/p^e` in canonical representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RElem {
    value: u64,
    spec: RingSpec,
}

impl RElem {
    pub fn new(value: u64, spec: RingSpec) -> Self {
        RElem { value: value % spec.modulus, spec }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    fn check(&self, other: &RElem) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.spec, other.spec))
        }
    }

    pub fn add(&self, other: &RElem) -> Result<RElem> {
        self.check(other)?;
        Ok(RElem { value: self.spec.add(self.value, other.value), spec: self.spec })
    }

    pub fn sub(&self, other: &RElem) -> Result<RElem> {
        self.check(other)?;
        Ok(RElem { value: self.spec.sub(self.value, other.value), spec: self.spec })
    }

    pub fn mul(&self, other: &RElem) -> Result<RElem> {
        self.check(other)?;
        Ok(RElem { value: self.spec.mul(self.value, other.value), spec: self.spec })
    }

    pub fn pow(&self, exp: u64) -> RElem {
        RElem { value: self.spec.pow(self.value, exp), spec: self.spec }
    }

    pub fn is_unit(&self) -> bool {
        self.spec.is_unit(self.value)
    }

    pub fn inverse(&self) -> Result<RElem> {
        Ok(RElem { value: self.spec.inv(self.value)?, spec: self.spec })
    }

    pub fn gamma_valuation(&self) -> u32 {
        self.spec.valuation(self.value)
    }
}

impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
