//! Small integer number theory on machine words.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128 % m as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `q` modulo `n`.
pub fn ord_mod(n: u64, q: u64) -> Result<u64> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::NotCoprime { a: n, b: q });
    }
    if n == 1 {
        return Ok(1);
    }
    let mut l = 1u64;
    let mut acc = q % n;
    while acc != 1 {
        acc = ((acc as u128 * q as u128) % n as u128) as u64;
        l += 1;
    }
    Ok(l)
}

/// Whether `q` is a square in `(Z/n)*` for odd `n`.
///
/// Decided prime by prime with Euler's criterion; for odd prime powers a
/// unit is a square iff it is a square modulo the prime.
pub fn is_quadratic_residue(q: u64, n: u64) -> Result<bool> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("modulus {n} must be odd")));
    }
    if gcd(q, n) != 1 {
        return Err(Error::NotCoprime { a: q, b: n });
    }
    Ok(prime_divisors(n).into_iter().all(|r| pow_mod(q % r, (r - 1) / 2, r) == 1))
}

/// `e` such that `2^e = n`, if `n` is a power of two.
pub fn log2_exact(n: u64) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}
