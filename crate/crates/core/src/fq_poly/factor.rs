//! Factorization of `x^n - 1` over `F_p` through minimal polynomials of the
//! powers of a primitive `n`-th root of unity.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

use super::{cyclotomic_cosets, ExtField, FqPoly};

/// An irreducible factor of `x^n - 1` with its root-exponent set `T`:
/// `factor = prod_{i in T} (x - beta^i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetFactor {
    pub coset: Vec<u64>,
    pub factor: FqPoly,
}

/// A primitive `n`-th root of unity in `F_{p^s}`, `s = ord_n(p)`.
///
/// Scans field elements `y` in index order and takes the first
/// `y^((p^s - 1)/n)` whose order is exactly `n`.
pub(crate) fn primitive_nth_root(n: u64, p: u64) -> Result<(ExtField, FqPoly)> {
    let s = arith::ord_mod(n, p)? as usize;
    let field = ExtField::new(p, s)?;
    let cofactor = (field.order() - 1) / n as u128;
    let primes = arith::prime_divisors(n);
    for idx in 1..field.order() {
        let beta = field.pow(&field.element(idx), cofactor);
        if primes.iter().all(|&r| !field.pow(&beta, (n / r) as u128).is_one()) {
            return Ok((field, beta));
        }
    }
    unreachable!("the multiplicative group of F_(p^s) is cyclic of order divisible by n")
}

/// Monic irreducible factors of `x^n - 1` over `F_p`, one per `p`-cyclotomic
/// coset mod `n`, ordered by the minimal coset representative.
pub fn factor_xn_minus_1_with_cosets(n: u64, p: u64) -> Result<Vec<CosetFactor>> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("length must be positive".into()));
    }
    if n.is_multiple_of(p) {
        return Err(Error::NotCoprime { a: n, b: p });
    }
    let partition = cyclotomic_cosets(n, p)?;
    let (field, beta) = primitive_nth_root(n, p)?;

    // powers beta^0 .. beta^(n-1)
    let mut powers = Vec::with_capacity(n as usize);
    let mut acc = field.embed(1);
    for _ in 0..n {
        powers.push(acc.clone());
        acc = field.mul(&acc, &beta);
    }

    partition
        .cosets
        .into_iter()
        .map(|coset| {
            // product of (X - beta^i) with coefficients in the extension
            let mut poly: Vec<FqPoly> = vec![field.embed(1)];
            for &i in &coset {
                let root = &powers[i as usize];
                let mut next = vec![FqPoly::zero(p); poly.len() + 1];
                for (k, c) in poly.iter().enumerate() {
                    next[k + 1] = field.add(&next[k + 1], c);
                    next[k] = field.sub(&next[k], &field.mul(c, root));
                }
                poly = next;
            }
            let coeffs = poly
                .iter()
                .map(|c| match c.degree() {
                    None => Ok(0),
                    Some(0) => Ok(c.coeff(0)),
                    Some(_) => Err(Error::InvalidParameter("minimal polynomial left the prime field".into())),
                })
                .collect::<Result<Vec<u64>>>()?;
            Ok(CosetFactor { coset, factor: FqPoly::new(p, coeffs) })
        })
        .collect()
}

/// Monic irreducible factors of `x^n - 1` over `F_p`.
pub fn factor_xn_minus_1(n: u64, p: u64) -> Result<Vec<FqPoly>> {
    Ok(factor_xn_minus_1_with_cosets(n, p)?.into_iter().map(|cf| cf.factor).collect())
}
