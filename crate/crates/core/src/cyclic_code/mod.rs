//! Cyclic codes of length `n` over `Z/p^e`, `gcd(n, p) = 1`.
//!
//! A code is stored in its unique canonical form: pairwise coprime monic
//! `F_0, ..., F_e` with `F_0 ... F_e = x^n - 1` and
//! `C = <F^_1, p F^_2, ..., p^(e-1) F^_e>`, `F^_i = (x^n - 1)/F_i`.
//! Equivalently, on the component of each basic irreducible factor of
//! `x^n - 1` the code is `p^(i-1)` times that component when the factor
//! divides `F_i`, and zero when it divides `F_0`. Two codes are equal iff
//! their families are equal.

mod matrix;
mod weight;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::fq_poly::FqPoly;
use crate::r_poly::{basic_irreducible_factors, lift_divisor, nth_roots_of_unity, RPoly};
use crate::ring::{RElem, RingSpec};

pub use matrix::ModMatrix;
pub use weight::{Codewords, Strategy, WeightReport, DEFAULT_BUDGET, MAX_RESIDUE_WORDS};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CodeRepr", into = "CodeRepr")]
pub struct CyclicCode {
    spec: RingSpec,
    n: usize,
    family: Vec<RPoly>,
}

#[derive(Serialize, Deserialize)]
struct CodeRepr {
    ring: RingSpec,
    n: usize,
    #[serde(rename = "F")]
    family: Vec<RPoly>,
}

impl TryFrom<CodeRepr> for CyclicCode {
    type Error = Error;
    fn try_from(r: CodeRepr) -> Result<Self> {
        CyclicCode::new(r.ring, r.n, r.family)
    }
}

impl From<CyclicCode> for CodeRepr {
    fn from(c: CyclicCode) -> Self {
        CodeRepr { ring: c.spec, n: c.n, family: c.family }
    }
}

/// A word of `(Z/p^e)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Codeword {
    pub ring: RingSpec,
    pub entries: Vec<u64>,
}

impl Codeword {
    pub fn new(ring: RingSpec, entries: Vec<u64>) -> Self {
        let m = ring.modulus();
        Codeword { ring, entries: entries.into_iter().map(|v| v % m).collect() }
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&v| v != 0).count()
    }

    pub fn as_poly(&self) -> RPoly {
        RPoly::new(self.ring, self.entries.clone())
    }
}

/// A monomial map `c(x) -> c(lambda x)` after `c(x) -> c(x^a)`, witnessing
/// an equivalence between two cyclic codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Certificate {
    pub multiplier: i64,
    pub scaling: u64,
}

impl CyclicCode {
    /// Validates a canonical family.
    pub fn new(spec: RingSpec, n: usize, family: Vec<RPoly>) -> Result<Self> {
        check_length(n, spec)?;
        if family.len() != spec.e() as usize + 1 {
            return Err(Error::InvalidFamily(format!("expected {} polynomials, got {}", spec.e() + 1, family.len())));
        }
        if family.iter().any(|f| f.spec() != spec) {
            return Err(Error::InvalidFamily("family over a different ring".into()));
        }
        if family.iter().any(|f| !f.is_monic()) {
            return Err(Error::InvalidFamily("family members must be monic".into()));
        }
        if RPoly::product(spec, &family) != RPoly::xn_minus_one(spec, n) {
            return Err(Error::InvalidFamily(format!("product is not x^{n} - 1")));
        }
        let residues: Vec<FqPoly> = family.iter().map(RPoly::reduce).collect();
        for (i, a) in residues.iter().enumerate() {
            for b in &residues[i + 1..] {
                if !a.gcd(b).is_one() {
                    return Err(Error::InvalidFamily("family members are not coprime".into()));
                }
            }
        }
        Ok(CyclicCode { spec, n, family })
    }

    fn from_levels(spec: RingSpec, n: usize, factors: &[RPoly], levels: &[u32]) -> Self {
        let mut family = vec![RPoly::one(spec); spec.e() as usize + 1];
        for (phi, &level) in factors.iter().zip(levels) {
            let slot = if level >= spec.e() { 0 } else { level as usize + 1 };
            family[slot] = family[slot].mul(phi);
        }
        CyclicCode { spec, n, family }
    }

    /// The code generated by an arbitrary set of polynomials.
    ///
    /// On each basic irreducible component the ideal is `p^v`, `v` the
    /// smallest coefficient valuation of a generator reduced there.
    pub fn from_generators(spec: RingSpec, n: usize, generators: &[RPoly]) -> Result<Self> {
        check_length(n, spec)?;
        if generators.iter().any(|g| g.spec() != spec) {
            return Err(Error::RingMismatch(spec, generators[0].spec()));
        }
        let factors = basic_irreducible_factors(n, spec)?;
        let levels = factors
            .iter()
            .map(|phi| {
                generators
                    .iter()
                    .map(|g| g.rem_monic(phi).map(|r| r.valuation()))
                    .try_fold(spec.e(), |acc, v| v.map(|v| acc.min(v)))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Self::from_levels(spec, n, &factors, &levels))
    }

    /// The free code `<g>` for a monic divisor `g` of `x^n - 1`.
    pub fn from_generator(g: &RPoly, n: usize) -> Result<Self> {
        let spec = g.spec();
        check_length(n, spec)?;
        if !g.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let h = RPoly::xn_minus_one(spec, n).div_exact(g).map_err(|_| Error::NotADivisor { n })?;
        let mut family = vec![RPoly::one(spec); spec.e() as usize + 1];
        family[0] = g.clone();
        family[1] = h;
        Ok(CyclicCode { spec, n, family })
    }

    /// `<g_free, p^j g_torsion>` for monic divisors of `x^n - 1`, `1 <= j < e`.
    pub fn from_two_stage(g_free: &RPoly, g_torsion: &RPoly, j: u32, n: usize) -> Result<Self> {
        let spec = g_free.spec();
        check_length(n, spec)?;
        if j == 0 || j >= spec.e() {
            return Err(Error::InvalidParameter(format!("torsion exponent {j} must lie in 1..{}", spec.e())));
        }
        let xn1 = RPoly::xn_minus_one(spec, n);
        for g in [g_free, g_torsion] {
            if !g.is_monic() {
                return Err(Error::NonMonicDivisor);
            }
            xn1.div_exact(g).map_err(|_| Error::NotADivisor { n })?;
        }
        // components killed by both generators
        let common = lift_divisor(&g_free.reduce().gcd(&g_torsion.reduce()), n, spec)?;
        let mut family = vec![RPoly::one(spec); spec.e() as usize + 1];
        family[1] = xn1.div_exact(g_free)?;
        family[j as usize + 1] = g_free.div_exact(&common)?;
        family[0] = common;
        Ok(CyclicCode { spec, n, family })
    }

    /// `R^n`.
    pub fn whole_space(spec: RingSpec, n: usize) -> Result<Self> {
        Self::from_generator(&RPoly::one(spec), n)
    }

    /// `{0}`.
    pub fn zero_code(spec: RingSpec, n: usize) -> Result<Self> {
        check_length(n, spec)?;
        let mut family = vec![RPoly::one(spec); spec.e() as usize + 1];
        family[0] = RPoly::xn_minus_one(spec, n);
        Ok(CyclicCode { spec, n, family })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `[F_0, ..., F_e]`.
    pub fn family(&self) -> &[RPoly] {
        &self.family
    }

    /// `F^_i = (x^n - 1)/F_i`.
    pub fn hat(&self, i: usize) -> RPoly {
        RPoly::xn_minus_one(self.spec, self.n).div_exact(&self.family[i]).expect("family divides x^n - 1")
    }

    /// Nonzero generators `p^(i-1) F^_i`.
    pub fn generators(&self) -> Vec<RPoly> {
        (1..=self.spec.e() as usize)
            .filter(|&i| !self.family[i].is_one())
            .map(|i| self.hat(i).scale(self.spec.gamma_pow(i as u32 - 1)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.family[1..].iter().all(RPoly::is_one)
    }

    /// Free codes have `F_i = 1` for every `i >= 2`.
    pub fn is_free(&self) -> bool {
        self.family[2..].iter().all(RPoly::is_one)
    }

    /// The monic generator `g = F_0` of a free code.
    pub fn free_generator(&self) -> Option<RPoly> {
        self.is_free().then(|| self.family[0].clone())
    }

    /// `log_p |C| = sum_{i>=1} (e - i + 1) deg F_i`.
    pub fn cardinality_log(&self) -> u64 {
        let e = self.spec.e() as u64;
        (1..=e as usize).map(|i| (e - i as u64 + 1) * self.family[i].degree().unwrap_or(0) as u64).sum()
    }

    /// Dual code: `F'_1 = F_0*`, `F'_i = F_(e-i+2)*` for `2 <= i <= e`,
    /// `F'_0 = F_1*`.
    pub fn dual(&self) -> CyclicCode {
        let e = self.spec.e() as usize;
        let star = |f: &RPoly| f.reciprocal().expect("divisors of x^n - 1 have unit constant term");
        let mut family = Vec::with_capacity(e + 1);
        family.push(star(&self.family[1]));
        family.push(star(&self.family[0]));
        for i in 2..=e {
            family.push(star(&self.family[e - i + 2]));
        }
        CyclicCode { spec: self.spec, n: self.n, family }
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// Membership by reduction against each `F_i`.
    pub fn contains(&self, word: &Codeword) -> Result<bool> {
        if word.entries.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: word.entries.len() });
        }
        if word.ring != self.spec {
            return Err(Error::RingMismatch(self.spec, word.ring));
        }
        let w = word.as_poly();
        for (i, f) in self.family.iter().enumerate() {
            if f.is_one() {
                continue;
            }
            let r = w.rem_monic(f)?;
            let needed = if i == 0 { self.spec.e() } else { i as u32 - 1 };
            if r.valuation() < needed {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Rows `x^k p^(i-1) F^_i` for `0 <= k < deg F_i`.
    pub fn generator_matrix(&self) -> ModMatrix {
        let (rows, _) = self.structured_rows();
        ModMatrix::from_rows(self.spec, self.n, rows)
    }

    /// Generator rows with the additive order of each row (`p^(e-i+1)` in
    /// block `i`); every codeword is uniquely `sum d_k row_k`, `d_k < order_k`.
    pub(crate) fn structured_rows(&self) -> (Vec<Vec<u64>>, Vec<u64>) {
        let e = self.spec.e();
        let mut rows = Vec::new();
        let mut orders = Vec::new();
        for i in 1..=e as usize {
            let k = self.family[i].degree().unwrap_or(0);
            if k == 0 {
                continue;
            }
            let base = self.hat(i).scale(self.spec.gamma_pow(i as u32 - 1));
            let order = self.spec.p().pow(e - i as u32 + 1);
            for shift in 0..k {
                let mut row = vec![0u64; shift];
                row.extend_from_slice(base.coeffs());
                row.resize(self.n, 0);
                rows.push(row);
                orders.push(order);
            }
        }
        (rows, orders)
    }

    /// `{ c(lambda x) : c in C }` for a unit with `lambda^n = 1`.
    pub fn apply_scaling(&self, lambda: u64) -> Result<CyclicCode> {
        let spec = self.spec;
        if !spec.is_unit(lambda) || spec.pow(lambda, self.n as u64) != 1 {
            return Err(Error::InvalidParameter(format!("{lambda} is not an {}-th root of unity in {spec}", self.n)));
        }
        let family = self.family.iter().map(|f| f.substitute_scaled(lambda, true)).collect::<Result<Vec<_>>>()?;
        Ok(CyclicCode { spec, n: self.n, family })
    }

    /// `{ c(x^a) mod (x^n - 1) : c in C }`.
    pub fn apply_multiplier(&self, a: i64) -> Result<CyclicCode> {
        let gens = self.generators().iter().map(|g| g.multiplier_mod(a, self.n)).collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            let a_red = a.rem_euclid(self.n as i64) as u64;
            if arith::gcd(a_red, self.n as u64) != 1 {
                return Err(Error::NotCoprime { a: a_red, b: self.n as u64 });
            }
            return Ok(self.clone());
        }
        Self::from_generators(self.spec, self.n, &gens)
    }

    /// Applies `c(x) -> c(lambda x)` after `c(x) -> c(x^a)`.
    pub fn apply(&self, cert: Certificate) -> Result<CyclicCode> {
        self.apply_multiplier(cert.multiplier)?.apply_scaling(cert.scaling)
    }

    /// Searches `multipliers x {n-th roots of unity}` for a map taking
    /// `self` onto `target`.
    pub fn find_equivalence(&self, target: &CyclicCode, multipliers: &[i64]) -> Option<Certificate> {
        if self.spec != target.spec || self.n != target.n || self.cardinality_log() != target.cardinality_log() {
            return None;
        }
        let roots: Vec<RElem> = nth_roots_of_unity(self.n as u64, self.spec);
        for &a in multipliers {
            let Ok(moved) = self.apply_multiplier(a) else { continue };
            for lambda in &roots {
                if moved.apply_scaling(lambda.value()).ok().as_ref() == Some(target) {
                    return Some(Certificate { multiplier: a, scaling: lambda.value() });
                }
            }
        }
        None
    }

    /// A map `phi_lambda . mu_a`, `a in {1, -1}`, taking the code onto its
    /// dual. `None` does not prove the code is not isodual.
    pub fn certify_isodual(&self) -> Option<Certificate> {
        self.certify_isodual_with(&[])
    }

    /// As [`Self::certify_isodual`], also trying the extra multipliers.
    pub fn certify_isodual_with(&self, extra_multipliers: &[i64]) -> Option<Certificate> {
        let dual = self.dual();
        if dual == *self {
            return Some(Certificate { multiplier: 1, scaling: 1 });
        }
        let mut multipliers = vec![-1, 1];
        for &a in extra_multipliers {
            if !multipliers.contains(&a) {
                multipliers.push(a);
            }
        }
        self.find_equivalence(&dual, &multipliers)
    }
}

fn check_length(n: usize, spec: RingSpec) -> Result<()> {
    if n == 0 || (n as u64).is_multiple_of(spec.p()) {
        return Err(Error::NotCoprime { a: n as u64, b: spec.p() });
    }
    Ok(())
}

#[cfg(test)]
mod tests;
