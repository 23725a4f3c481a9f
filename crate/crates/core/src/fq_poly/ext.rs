//! The extension `F_{p^s} = F_p[y]/(m(y))` for the first irreducible `m` of
//! degree `s` in lexicographic order.

use crate::error::{Error, Result};

use super::FqPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    p: u64,
    degree: usize,
    modulus: FqPoly,
    order: u128,
}

impl ExtField {
    pub fn new(p: u64, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive".into()));
        }
        let order = (p as u128).checked_pow(degree as u32).filter(|&o| o < 1u128 << 64).ok_or(Error::TooLarge {
            what: "extension field",
            size: u128::MAX,
            limit: 1u128 << 64,
        })?;
        let modulus = first_irreducible(p, degree);
        Ok(ExtField { p, degree, modulus, order })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &FqPoly {
        &self.modulus
    }

    /// Number of elements `p^s`.
    pub fn order(&self) -> u128 {
        self.order
    }

    /// The element whose base-`p` digits (least significant first) are
    /// the coefficients; a bijection `0..p^s -> F_{p^s}`.
    pub fn element(&self, index: u128) -> FqPoly {
        let p = self.p as u128;
        let mut idx = index;
        let coeffs = (0..self.degree)
            .map(|_| {
                let d = (idx % p) as u64;
                idx /= p;
                d
            })
            .collect();
        FqPoly::new(self.p, coeffs).rem(&self.modulus).expect("nonzero modulus")
    }

    pub fn embed(&self, c: u64) -> FqPoly {
        FqPoly::constant(self.p, c).rem(&self.modulus).expect("nonzero modulus")
    }

    pub fn add(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        a.add(b)
    }

    pub fn sub(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        a.sub(b)
    }

    pub fn mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        a.mul_mod(b, &self.modulus).expect("nonzero modulus")
    }

    pub fn pow(&self, a: &FqPoly, exp: u128) -> FqPoly {
        a.pow_mod(exp, &self.modulus).expect("nonzero modulus")
    }
}

/// Ben-Or: `f` of degree `d` is irreducible iff `gcd(x^{p^i} - x, f) = 1`
/// for every `1 <= i <= d/2`.
pub(crate) fn is_irreducible(f: &FqPoly) -> bool {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    let p = f.p();
    let x = FqPoly::monomial(p, 1, 1);
    let mut power = x.rem(f).expect("nonzero");
    for _ in 1..=d / 2 {
        power = power.pow_mod(p as u128, f).expect("nonzero");
        if !power.sub(&x).gcd(f).is_one() {
            return false;
        }
    }
    true
}

fn first_irreducible(p: u64, degree: usize) -> FqPoly {
    let mut counter = vec![0u64; degree];
    loop {
        let mut coeffs = counter.clone();
        coeffs.push(1);
        let f = FqPoly::new(p, coeffs);
        if is_irreducible(&f) {
            return f;
        }
        // odometer over the low coefficients, least significant first
        let mut k = 0;
        loop {
            counter[k] += 1;
            if counter[k] < p {
                break;
            }
            counter[k] = 0;
            k += 1;
            assert!(k < degree, "an irreducible polynomial of every degree exists");
        }
    }
}
