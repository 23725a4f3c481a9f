//! Polynomials over `Z/p^e`: arithmetic, the monic reciprocal, the
//! substitution maps `f(x) -> f(lambda x)` and `f(x) -> f(x^a)`, Hensel
//! lifting of coprime factorizations of `x^n - 1`, and roots of unity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::fq_poly::{factor_xn_minus_1, FqPoly};
use crate::ring::{RElem, RingSpec};

/// Dense polynomial over `Z/p^e`, ascending canonical coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RPolyRepr", into = "RPolyRepr")]
pub struct RPoly {
    spec: RingSpec,
    coeffs: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RPolyRepr {
    ring: RingSpec,
    coeffs: Vec<u64>,
}

impl TryFrom<RPolyRepr> for RPoly {
    type Error = Error;
    fn try_from(r: RPolyRepr) -> Result<Self> {
        if let Some(&c) = r.coeffs.iter().find(|&&c| c >= r.ring.modulus()) {
            return Err(Error::InvalidParameter(format!("coefficient {c} not canonical in {}", r.ring)));
        }
        Ok(RPoly::new(r.ring, r.coeffs))
    }
}

impl From<RPoly> for RPolyRepr {
    fn from(f: RPoly) -> Self {
        RPolyRepr { ring: f.spec, coeffs: f.coeffs }
    }
}

impl RPoly {
    pub fn new(spec: RingSpec, mut coeffs: Vec<u64>) -> Self {
        let m = spec.modulus();
        for c in coeffs.iter_mut() {
            *c %= m;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        RPoly { spec, coeffs }
    }

    pub fn from_signed(spec: RingSpec, coeffs: &[i64]) -> Self {
        Self::new(spec, coeffs.iter().map(|&c| spec.reduce(c)).collect())
    }

    pub fn zero(spec: RingSpec) -> Self {
        RPoly { spec, coeffs: Vec::new() }
    }

    pub fn one(spec: RingSpec) -> Self {
        Self::constant(spec, 1)
    }

    pub fn constant(spec: RingSpec, c: u64) -> Self {
        Self::new(spec, vec![c])
    }

    pub fn monomial(spec: RingSpec, c: u64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self::new(spec, coeffs)
    }

    /// `x^n - 1`.
    pub fn xn_minus_one(spec: RingSpec, n: usize) -> Self {
        Self::xn_plus_c(spec, n, -1)
    }

    /// `x^n + c`.
    pub fn xn_plus_c(spec: RingSpec, n: usize, c: i64) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = spec.add(coeffs[0], spec.reduce(c));
        Self::new(spec, coeffs)
    }

    /// Coefficient-wise canonical lift of a residue polynomial.
    pub fn lift(spec: RingSpec, f: &FqPoly) -> Self {
        assert_eq!(spec.p(), f.p(), "residue field mismatch");
        Self::new(spec, f.coeffs().to_vec())
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
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

    /// Reduction of every coefficient modulo `p`.
    pub fn reduce(&self) -> FqPoly {
        FqPoly::new(self.spec.p(), self.coeffs.clone())
    }

    fn same_ring(&self, other: &RPoly) {
        assert_eq!(self.spec, other.spec, "polynomials over different rings");
    }

    pub fn add(&self, other: &RPoly) -> RPoly {
        self.same_ring(other);
        let s = self.spec;
        let len = self.coeffs.len().max(other.coeffs.len());
        RPoly::new(s, (0..len).map(|i| s.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &RPoly) -> RPoly {
        self.same_ring(other);
        let s = self.spec;
        let len = self.coeffs.len().max(other.coeffs.len());
        RPoly::new(s, (0..len).map(|i| s.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, c: u64) -> RPoly {
        let s = self.spec;
        RPoly::new(s, self.coeffs.iter().map(|&a| s.mul(a, c % s.modulus())).collect())
    }

    pub fn mul(&self, other: &RPoly) -> RPoly {
        self.same_ring(other);
        if self.is_zero() || other.is_zero() {
            return RPoly::zero(self.spec);
        }
        let m = self.spec.modulus();
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % m;
            }
        }
        RPoly::new(self.spec, out)
    }

    pub fn product<'a>(spec: RingSpec, factors: impl IntoIterator<Item = &'a RPoly>) -> RPoly {
        factors.into_iter().fold(RPoly::one(spec), |acc, f| acc.mul(f))
    }

    /// Euclidean division by a monic divisor.
    pub fn divmod_monic(&self, divisor: &RPoly) -> Result<(RPoly, RPoly)> {
        self.same_ring(divisor);
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let s = self.spec;
        let dd = divisor.degree().expect("monic is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((RPoly::zero(s), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = s.sub(rem[k + j], s.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((RPoly::new(s, quot), RPoly::new(s, rem)))
    }

    pub fn rem_monic(&self, divisor: &RPoly) -> Result<RPoly> {
        Ok(self.divmod_monic(divisor)?.1)
    }

    /// Exact quotient by a monic divisor; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &RPoly) -> Result<RPoly> {
        let (q, r) = self.divmod_monic(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor { n: self.degree().unwrap_or(0) })
        }
    }

    /// Scales by the inverse of the leading coefficient.
    pub fn monic(&self) -> Result<RPoly> {
        if self.is_zero() {
            return Err(Error::NotAUnit { value: 0, ring: self.spec });
        }
        Ok(self.scale(self.spec.inv(self.lead())?))
    }

    /// `f*(x) = f(0)^{-1} x^deg f f(1/x)`.
    pub fn reciprocal(&self) -> Result<RPoly> {
        let c0 = self.coeff(0);
        if !self.spec.is_unit(c0) {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv = self.spec.inv(c0)?;
        let rev: Vec<u64> = self.coeffs.iter().rev().copied().collect();
        Ok(RPoly::new(self.spec, rev).scale(inv))
    }

    /// `f(lambda x)`, optionally rescaled to be monic.
    pub fn substitute_scaled(&self, lambda: u64, normalize_monic: bool) -> Result<RPoly> {
        let s = self.spec;
        if !s.is_unit(lambda) {
            return Err(Error::NotAUnit { value: lambda % s.modulus(), ring: s });
        }
        let mut power = 1u64;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let v = s.mul(c, power);
                power = s.mul(power, lambda);
                v
            })
            .collect();
        let out = RPoly::new(s, coeffs);
        if normalize_monic && !out.is_zero() {
            out.monic()
        } else {
            Ok(out)
        }
    }

    /// `f(x^a) mod (x^n - 1)` for `gcd(a, n) = 1`; `a` may be negative.
    pub fn multiplier_mod(&self, a: i64, n: usize) -> Result<RPoly> {
        let a = a.rem_euclid(n as i64) as u64;
        if arith::gcd(a, n as u64) != 1 {
            return Err(Error::NotCoprime { a, b: n as u64 });
        }
        let s = self.spec;
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let k = ((i as u128 * a as u128) % n as u128) as usize;
            out[k] = s.add(out[k], c);
        }
        Ok(RPoly::new(s, out))
    }

    /// Reduction modulo `x^n - 1`.
    pub fn fold(&self, n: usize) -> RPoly {
        let s = self.spec;
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = s.add(out[i % n], c);
        }
        RPoly::new(s, out)
    }

    /// Coefficient list padded or folded to exactly `n` entries.
    pub fn to_word(&self, n: usize) -> Vec<u64> {
        let mut w = self.fold(n).coeffs;
        w.resize(n, 0);
        w
    }

    pub fn eval(&self, x: u64) -> u64 {
        let s = self.spec;
        self.coeffs.iter().rev().fold(0, |acc, &c| s.add(s.mul(acc, x), c))
    }

    /// Minimum gamma-valuation over the coefficients (`e` for zero).
    pub fn valuation(&self) -> u32 {
        self.coeffs.iter().map(|&c| self.spec.valuation(c)).min().unwrap_or(self.spec.e())
    }

    /// Parses `"x^5 + 7x^4 - x + 8"`-style text over `spec`.
    pub fn parse(text: &str, spec: RingSpec) -> Result<RPoly> {
        let terms = parse_terms(text)?;
        let deg = terms.iter().map(|&(_, d)| d).max().unwrap_or(0);
        let mut coeffs = vec![0u64; deg + 1];
        for (c, d) in terms {
            let v = spec.reduce((c % spec.modulus() as i128) as i64);
            coeffs[d] = spec.add(coeffs[d], v);
        }
        Ok(RPoly::new(spec, coeffs))
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_descending(f, &self.coeffs)
    }
}

/// Descending-degree text with canonical coefficients, e.g. `x^5 + 7x^4 + 8`.
pub(crate) fn write_descending(f: &mut fmt::Formatter<'_>, coeffs: &[u64]) -> fmt::Result {
    let mut first = true;
    for (d, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match (c, d) {
            (_, 0) => write!(f, "{c}")?,
            (1, 1) => f.write_str("x")?,
            (1, _) => write!(f, "x^{d}")?,
            (_, 1) => write!(f, "{c}x")?,
            _ => write!(f, "{c}x^{d}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn parse_terms(text: &str) -> Result<Vec<(i128, usize)>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let bad = |msg: &str| Error::Parse(format!("{msg} in {text:?}"));
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i128;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &s[start..i];
        if term.is_empty() {
            return Err(bad("dangling sign"));
        }
        let (coef, var) = match term.find('x') {
            None => (term, None),
            Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
        };
        let coef = coef.trim_end_matches('*');
        let c: i128 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad("bad coefficient"))? };
        let d = match var {
            None => 0,
            Some("") => 1,
            Some(rest) => {
                rest.strip_prefix('^').and_then(|e| e.parse::<usize>().ok()).ok_or_else(|| bad("bad exponent"))?
            }
        };
        terms.push((sign * c, d));
    }
    Ok(terms)
}

impl FromStr for RingSpec {
    type Err = Error;
    /// Accepts `p^e` or `p,e`.
    fn from_str(s: &str) -> Result<Self> {
        let (p, e) = s.split_once(['^', ',']).ok_or_else(|| Error::Parse(format!("ring {s:?}, expected p^e")))?;
        let p = p.trim().parse().map_err(|_| Error::Parse(format!("prime {p:?}")))?;
        let e = e.trim().parse().map_err(|_| Error::Parse(format!("exponent {e:?}")))?;
        RingSpec::new(p, e)
    }
}

/// Lifts a monic coprime factorization of `x^n - 1` over `F_p` to the
/// unique monic factorization over `Z/p^e` with the same reductions.
///
/// Linear lifting: with partial-fraction cofactors `s_i` satisfying
/// `sum s_i F/f_i = 1` over `F_p`, each step corrects the factors by the
/// next `p`-adic digit of the residual `F - prod G_i`.
pub fn hensel_lift_factorization(factors: &[FqPoly], n: usize, spec: RingSpec) -> Result<Vec<RPoly>> {
    let p = spec.p();
    if factors.iter().any(|f| f.p() != p || !f.is_monic()) {
        return Err(Error::InvalidParameter("factors must be monic over F_p".into()));
    }
    let target_bar = FqPoly::xn_minus_one(p, n);
    let product = factors.iter().fold(FqPoly::one(p), |acc, f| acc.mul(f));
    if product != target_bar {
        return Err(Error::ProductMismatch { n });
    }
    let cofactors = factors
        .iter()
        .map(|f| {
            let others = target_bar.divmod(f)?.0;
            let (g, s, _) = others.ext_gcd(f);
            if !g.is_one() {
                return Err(Error::FactorsNotCoprime);
            }
            Ok(s)
        })
        .collect::<Result<Vec<FqPoly>>>()?;

    let target = RPoly::xn_minus_one(spec, n);
    let mut lifted: Vec<RPoly> = factors.iter().map(|f| RPoly::lift(spec, f)).collect();
    for k in 1..spec.e() {
        let pk = spec.gamma_pow(k);
        let residual = target.sub(&RPoly::product(spec, &lifted));
        debug_assert!(residual.coeffs().iter().all(|&c| c % pk == 0));
        let digit = FqPoly::new(p, residual.coeffs().iter().map(|&c| c / pk).collect());
        for ((g, f), s) in lifted.iter_mut().zip(factors).zip(&cofactors) {
            let delta = digit.mul(s).rem(f)?;
            *g = g.add(&RPoly::lift(spec, &delta).scale(pk));
        }
    }
    if RPoly::product(spec, &lifted) != target {
        return Err(Error::ProductMismatch { n });
    }
    Ok(lifted)
}

/// Monic basic irreducible factors of `x^n - 1` over `Z/p^e`, ordered like
/// [`factor_xn_minus_1`].
pub fn basic_irreducible_factors(n: usize, spec: RingSpec) -> Result<Vec<RPoly>> {
    let residue = factor_xn_minus_1(n as u64, spec.p())?;
    hensel_lift_factorization(&residue, n, spec)
}

/// The unique monic divisor of `x^n - 1` over `Z/p^e` reducing to `d`.
pub fn lift_divisor(d: &FqPoly, n: usize, spec: RingSpec) -> Result<RPoly> {
    let d = d.monic();
    let (cofactor, r) = FqPoly::xn_minus_one(spec.p(), n).divmod(&d)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor { n });
    }
    Ok(hensel_lift_factorization(&[d, cofactor], n, spec)?.swap_remove(0))
}

/// Smallest primitive `order`-th root of unity in `Z/p^e`, `order = 2^a`.
///
/// Each primitive root in `F_p` has a unique Newton lift; the smallest of
/// the lifts is returned.
pub fn primitive_root_of_unity(order: u64, spec: RingSpec) -> Result<RElem> {
    if arith::log2_exact(order).is_none() {
        return Err(Error::InvalidParameter(format!("order {order} is not a power of two")));
    }
    let p = spec.p();
    if p == 2 || !(p - 1).is_multiple_of(order) {
        return Err(Error::NoSuchRoot { order, ring: spec });
    }
    let half = order / 2;
    let primitive_mod_p = |r: u64| arith::pow_mod(r, order, p) == 1 && (order == 1 || arith::pow_mod(r, half, p) != 1);
    (1..p)
        .filter(|&r| primitive_mod_p(r))
        .map(|r| newton_root_lift(r, order, spec))
        .min()
        .map(|v| RElem::new(v, spec))
        .ok_or(Error::NoSuchRoot { order, ring: spec })
}

/// Lifts a simple root `r` of `x^N - 1` mod `p` to `Z/p^e`.
fn newton_root_lift(r: u64, order: u64, spec: RingSpec) -> u64 {
    let mut x = r;
    for _ in 0..spec.e() {
        let fx = spec.sub(spec.pow(x, order), 1);
        if fx == 0 {
            break;
        }
        let dfx = spec.mul(order % spec.modulus(), spec.pow(x, order - 1));
        let step = spec.mul(fx, spec.inv(dfx).expect("derivative is a unit for odd p"));
        x = spec.sub(x, step);
    }
    x
}

/// All units `lambda` with `lambda^n = 1`, ascending.
pub fn nth_roots_of_unity(n: u64, spec: RingSpec) -> Vec<RElem> {
    let p = spec.p();
    let lifts = spec.modulus() / p;
    let mut out: Vec<u64> = (1..p)
        .filter(|&r| arith::pow_mod(r, n, p) == 1)
        .flat_map(|r| (0..lifts).map(move |t| r + p * t))
        .filter(|&v| spec.pow(v, n) == 1)
        .collect();
    out.sort_unstable();
    out.into_iter().map(|v| RElem::new(v, spec)).collect()
}
