//! Polynomials over the prime field `F_p`, and the residue-field side of the
//! theory: cyclotomic cosets, the factorization of `x^n - 1`, and duadic
//! splittings.

mod cosets;
mod ext;
mod factor;
mod splitting;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

pub use cosets::{cyclotomic_cosets, CosetPartition};
pub use ext::ExtField;
pub use factor::{factor_xn_minus_1, factor_xn_minus_1_with_cosets, CosetFactor};
pub use splitting::{find_splittings, MuMinusOne, Splitting};

/// Dense polynomial over `F_p`, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FqPolyRepr", into = "FqPolyRepr")]
pub struct FqPoly {
    p: u64,
    coeffs: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct FqPolyRepr {
    p: u64,
    coeffs: Vec<u64>,
}

impl TryFrom<FqPolyRepr> for FqPoly {
    type Error = Error;
    fn try_from(r: FqPolyRepr) -> Result<Self> {
        if !arith::is_prime(r.p) || r.p >= crate::ring::MAX_MODULUS {
            return Err(Error::InvalidParameter(format!("{} is not a supported prime", r.p)));
        }
        if let Some(&c) = r.coeffs.iter().find(|&&c| c >= r.p) {
            return Err(Error::InvalidParameter(format!("coefficient {c} not reduced mod {}", r.p)));
        }
        Ok(FqPoly::new(r.p, r.coeffs))
    }
}

impl From<FqPoly> for FqPolyRepr {
    fn from(f: FqPoly) -> Self {
        FqPolyRepr { p: f.p, coeffs: f.coeffs }
    }
}

impl FqPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FqPoly { p, coeffs }
    }

    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
    }

    pub fn zero(p: u64) -> Self {
        FqPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn monomial(p: u64, c: u64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self::new(p, coeffs)
    }

    /// `x^n - 1`.
    pub fn xn_minus_one(p: u64, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = p - 1;
        coeffs[n] = 1;
        Self::new(p, coeffs)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    fn same_field(&self, other: &FqPoly) {
        assert_eq!(self.p, other.p, "polynomials over different fields");
    }

    pub fn add(&self, other: &FqPoly) -> FqPoly {
        self.same_field(other);
        let p = self.p;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| (self.coeff(i) + other.coeff(i)) % p).collect();
        FqPoly::new(p, coeffs)
    }

    pub fn sub(&self, other: &FqPoly) -> FqPoly {
        self.same_field(other);
        let p = self.p;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| (self.coeff(i) + p - other.coeff(i)) % p).collect();
        FqPoly::new(p, coeffs)
    }

    pub fn scale(&self, c: u64) -> FqPoly {
        let p = self.p;
        FqPoly::new(p, self.coeffs.iter().map(|&a| a * (c % p) % p).collect())
    }

    pub fn mul(&self, other: &FqPoly) -> FqPoly {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return FqPoly::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        FqPoly::new(p, out)
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn divmod(&self, divisor: &FqPoly) -> Result<(FqPoly, FqPoly)> {
        self.same_field(divisor);
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let inv_lead = arith::inv_mod(divisor.lead(), p).expect("nonzero in a field");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((FqPoly::zero(p), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * inv_lead % p;
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - c * d % p) % p;
            }
        }
        rem.truncate(dd);
        Ok((FqPoly::new(p, quot), FqPoly::new(p, rem)))
    }

    pub fn rem(&self, divisor: &FqPoly) -> Result<FqPoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self) -> FqPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = arith::inv_mod(self.lead(), self.p).expect("nonzero in a field");
        self.scale(inv)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FqPoly) -> FqPoly {
        self.ext_gcd(other).0
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic (or zero).
    pub fn ext_gcd(&self, other: &FqPoly) -> (FqPoly, FqPoly, FqPoly) {
        self.same_field(other);
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (FqPoly::one(p), FqPoly::zero(p));
        let (mut t0, mut t1) = (FqPoly::zero(p), FqPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = arith::inv_mod(r0.lead(), p).expect("nonzero in a field");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn mul_mod(&self, other: &FqPoly, modulus: &FqPoly) -> Result<FqPoly> {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, mut exp: u128, modulus: &FqPoly) -> Result<FqPoly> {
        let mut base = self.rem(modulus)?;
        let mut acc = FqPoly::one(self.p).rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            base = base.mul_mod(&base, modulus)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// `f(x^a) mod (x^n - 1)`, folding exponents modulo `n`.
    pub fn multiplier_mod(&self, a: u64, n: usize) -> FqPoly {
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let k = ((i as u128 * a as u128) % n as u128) as usize;
            out[k] = (out[k] + c) % self.p;
        }
        FqPoly::new(self.p, out)
    }

    /// Monic reciprocal `f(0)^{-1} x^deg f(1/x)`.
    pub fn reciprocal(&self) -> Result<FqPoly> {
        let c0 = self.coeff(0);
        if c0 == 0 {
            return Err(Error::NonUnitConstantTerm);
        }
        let rev: Vec<u64> = self.coeffs.iter().rev().copied().collect();
        Ok(FqPoly::new(self.p, rev).monic())
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % self.p)
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::r_poly::write_descending(f, &self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3(c: &[i64]) -> FqPoly {
        FqPoly::from_signed(3, c)
    }

    #[test]
    fn arithmetic_examples() {
        // (x - 1)(x + 1) = x^2 + 2
        assert_eq!(f3(&[-1, 1]).mul(&f3(&[1, 1])), f3(&[2, 0, 1]));
        assert_eq!(f3(&[2, 0, 1]).gcd(&f3(&[-1, 1])), f3(&[2, 1]));
        let (q, r) = f3(&[2, 0, 0, 1]).divmod(&f3(&[2, 1])).unwrap();
        assert_eq!(q, f3(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(f3(&[1, 1]).divmod(&FqPoly::zero(3)), Err(Error::DivisionByZero));
    }

    #[test]
    fn ext_gcd_certificate() {
        let a = FqPoly::xn_minus_one(5, 11);
        let b = FqPoly::from_signed(5, &[3, 0, 1, 4]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert!(g.is_monic());
    }

    #[test]
    fn multiplier_folds_exponents() {
        let f = FqPoly::new(3, vec![1, 1, 1]);
        assert_eq!(f.multiplier_mod(4, 5), FqPoly::new(3, vec![1, 0, 0, 1, 1]));
        assert_eq!(f.multiplier_mod(1, 5), f);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let f = FqPoly::new(3, vec![1, 0, 3, 0]);
        assert_eq!(f.coeffs(), &[1]);
        assert!(FqPoly::new(3, vec![0, 0]).is_zero());
        assert_eq!(FqPoly::zero(3).degree(), None);
    }

    #[test]
    fn json_shape() {
        let f = f3(&[2, 1]);
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"p":3,"coeffs":[2,1]}"#);
        assert!(serde_json::from_str::<FqPoly>(r#"{"p":3,"coeffs":[5]}"#).is_err());
    }
}
