//! Explicit isodual and self-dual cyclic codes.
//!
//! Lengths `2^a m` use a primitive `2^a`-th root of unity `alpha`; every
//! substituted factor `g(alpha^-k x)` is made monic before multiplying, so
//! all generators are monic divisors of `x^n - 1`. Comparisons with other
//! sources are therefore at the level of ideals.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclic_code::{Certificate, CyclicCode, Strategy, WeightReport, DEFAULT_BUDGET, MAX_RESIDUE_WORDS};
use crate::error::{Error, Result};
use crate::fq_poly::{factor_xn_minus_1_with_cosets, FqPoly, MuMinusOne, Splitting};
use crate::r_poly::{basic_irreducible_factors, lift_divisor, primitive_root_of_unity, RPoly};
use crate::ring::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Thm42,
    Thm44,
    Remark46,
    Duadic,
    Thm510,
}

/// A property a construction promises for one of its codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Claim {
    Isodual,
    SelfDual,
    /// The dual is exactly the labelled code.
    DualOf {
        label: String,
    },
    /// The dual is monomially equivalent to the labelled code.
    DualEquivalentTo {
        label: String,
    },
    EquivalentTo {
        label: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub construction: Kind,
    pub ring: RingSpec,
    pub m: u64,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub splitting: Option<Splitting>,
    /// `g_1, g_2` with `x^m - 1 = (x - 1) g_1 g_2`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factors: Option<[RPoly; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: Claim,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub checks: Vec<ClaimCheck>,
    /// `|C| = |R|^(n/2)`.
    pub half_rate: bool,
    /// Label of the emitted code equal to the dual, if any.
    pub dual_is: Option<String>,
    pub min_weight: Option<WeightReport>,
    /// Smallest weight seen when the exact computation was out of budget.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight_upper_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledCode {
    pub label: String,
    pub code: CyclicCode,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generator: Option<RPoly>,
    pub claims: Vec<Claim>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verified: Option<Verification>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub params: Params,
    pub codes: Vec<LabeledCode>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notices: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Compute minimum weights as well as the structural claims.
    pub weights: bool,
    pub strategy: Option<Strategy>,
    pub budget: u128,
    /// Cap on residue-code words (up to scalars) for free codes.
    pub residue_limit: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { weights: true, strategy: None, budget: DEFAULT_BUDGET, residue_limit: MAX_RESIDUE_WORDS }
    }
}

impl ConstructionResult {
    pub fn code(&self, label: &str) -> Option<&LabeledCode> {
        self.codes.iter().find(|c| c.label == label)
    }

    /// Checks every claim, filling in `verified`. Returns whether all hold.
    pub fn verify(&mut self, opts: VerifyOptions) -> bool {
        let multipliers = self.extra_multipliers();
        let checks: Vec<Verification> = self.codes.iter().map(|lc| self.verify_one(lc, &multipliers, opts)).collect();
        for (lc, v) in self.codes.iter_mut().zip(checks) {
            lc.verified = Some(v);
        }
        self.all_verified()
    }

    /// Whether every claim has been checked and holds.
    pub fn all_verified(&self) -> bool {
        self.codes.iter().all(|lc| lc.verified.as_ref().is_some_and(|v| v.checks.iter().all(|c| c.holds)))
    }

    fn extra_multipliers(&self) -> Vec<i64> {
        match &self.params.splitting {
            Some(s) => vec![s.a as i64, -(s.a as i64)],
            None => vec![],
        }
    }

    fn verify_one(&self, lc: &LabeledCode, multipliers: &[i64], opts: VerifyOptions) -> Verification {
        let code = &lc.code;
        let dual = code.dual();
        let all_multipliers: Vec<i64> = [1, -1].iter().chain(multipliers).copied().collect();
        let other = |label: &str| self.code(label).map(|o| &o.code);
        let checks = lc
            .claims
            .iter()
            .map(|claim| {
                let (holds, certificate) = match claim {
                    Claim::Isodual => match code.certify_isodual_with(multipliers) {
                        Some(c) => (true, Some(c)),
                        None => (false, None),
                    },
                    Claim::SelfDual => (dual == *code, None),
                    Claim::DualOf { label } => (other(label) == Some(&dual), None),
                    Claim::DualEquivalentTo { label } => {
                        match other(label).and_then(|o| dual.find_equivalence(o, &all_multipliers)) {
                            Some(c) => (true, Some(c)),
                            None => (false, None),
                        }
                    }
                    Claim::EquivalentTo { label } => {
                        match other(label).and_then(|o| code.find_equivalence(o, &all_multipliers)) {
                            Some(c) => (true, Some(c)),
                            None => (false, None),
                        }
                    }
                };
                ClaimCheck { claim: claim.clone(), holds, certificate }
            })
            .collect();
        let e = code.spec().e() as u64;
        let half_rate = 2 * code.cardinality_log() == e * code.len() as u64;
        let dual_is = self.codes.iter().find(|o| o.code == dual).map(|o| o.label.clone());
        let mut v =
            Verification { checks, half_rate, dual_is, min_weight: None, weight_upper_bound: None, weight_error: None };
        if opts.weights {
            match code.min_hamming_weight_limited(opts.strategy, opts.budget, opts.residue_limit) {
                Ok(w) => v.min_weight = Some(w),
                Err(err) => {
                    if matches!(err, Error::TooLarge { .. }) {
                        v.weight_upper_bound = code.weight_upper_bound(opts.budget);
                    }
                    v.weight_error = Some(err.to_string());
                }
            }
        }
        v
    }
}

fn half_order(a: u32) -> Result<usize> {
    if a == 0 || a > 20 {
        return Err(Error::InvalidParameter(format!("a = {a} must lie in 1..=20")));
    }
    Ok(1usize << (a - 1))
}

fn check_odd_length(m: u64, spec: RingSpec) -> Result<()> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("m = {m} must be odd")));
    }
    if m.is_multiple_of(spec.p()) {
        return Err(Error::NotCoprime { a: m, b: spec.p() });
    }
    Ok(())
}

/// `(alpha, alpha^-1)` for the primitive `2^a`-th root of unity.
fn root_pair(a: u32, spec: RingSpec) -> Result<(u64, u64)> {
    let alpha = primitive_root_of_unity(1u64 << a, spec)?;
    Ok((alpha.value(), alpha.inverse()?.value()))
}

/// `prod_k g(alpha_inv^k x)` over the exponents, each factor made monic.
fn scaled_product(g: &RPoly, alpha_inv: u64, exponents: impl IntoIterator<Item = usize>) -> Result<RPoly> {
    let spec = g.spec();
    exponents.into_iter().try_fold(RPoly::one(spec), |acc, k| {
        let lambda = spec.pow(alpha_inv, k as u64);
        Ok(acc.mul(&g.substitute_scaled(lambda, true)?))
    })
}

fn free_code(label: &str, g: RPoly, n: usize, claims: Vec<Claim>) -> Result<LabeledCode> {
    Ok(LabeledCode {
        label: label.to_string(),
        code: CyclicCode::from_generator(&g, n)?,
        generator: Some(g),
        claims,
        verified: None,
    })
}

fn label(s: &str) -> String {
    s.to_string()
}

/// The factors `x^(2^a) - 1` and `g(alpha^-k x)`, `1 <= k <= 2^a`, for every
/// basic irreducible `g != x - 1` dividing `x^m - 1`; their product is
/// `x^(2^a m) - 1`.
pub fn scaled_factorization(m: u64, a: u32, spec: RingSpec) -> Result<Vec<RPoly>> {
    check_odd_length(m, spec)?;
    let half = half_order(a)?;
    let (_, alpha_inv) = root_pair(a, spec)?;
    let x_minus_1 = RPoly::from_signed(spec, &[-1, 1]);
    let mut out = vec![RPoly::xn_minus_one(spec, 2 * half)];
    for g in basic_irreducible_factors(m as usize, spec)? {
        if g == x_minus_1 {
            continue;
        }
        for k in 1..=2 * half {
            out.push(scaled_product(&g, alpha_inv, [k])?);
        }
    }
    Ok(out)
}

/// The two free codes built from `f = (x^m - 1)/(x - 1)`:
/// `(x^h - 1) prod_{k<h} f(alpha^(-2k-1) x)` and
/// `(x^h + 1) prod_{1<=k<=h} f(alpha^(-2k) x)`, `h = 2^(a-1)`.
pub fn thm42_isodual(m: u64, a: u32, spec: RingSpec) -> Result<ConstructionResult> {
    check_odd_length(m, spec)?;
    let h = half_order(a)?;
    let (alpha, alpha_inv) = root_pair(a, spec)?;
    let n = 2 * h * m as usize;
    let f = RPoly::new(spec, vec![1; m as usize]);
    let g = RPoly::xn_plus_c(spec, h, -1).mul(&scaled_product(&f, alpha_inv, (0..h).map(|k| 2 * k + 1))?);
    let g2 = RPoly::xn_plus_c(spec, h, 1).mul(&scaled_product(&f, alpha_inv, (1..=h).map(|k| 2 * k))?);
    Ok(ConstructionResult {
        params: Params {
            construction: Kind::Thm42,
            ring: spec,
            m,
            n,
            a: Some(a),
            alpha: Some(alpha),
            splitting: None,
            factors: None,
        },
        codes: vec![free_code("C-", g, n, vec![Claim::Isodual])?, free_code("C+", g2, n, vec![Claim::Isodual])?],
        notices: vec![],
    })
}

/// Generators `(x^h -+ 1) prod_{1<=k<=h} g_i(alpha^(-2k) x) prod_{k<h} g_j(alpha^(-2k-1) x)`.
fn mixed_generators(g: [&RPoly; 2], h: usize, alpha_inv: u64) -> Result<Vec<(String, String, RPoly)>> {
    let spec = g[0].spec();
    let mut out = Vec::new();
    for (i, j) in [(0, 1), (1, 0)] {
        let core = scaled_product(g[i], alpha_inv, (1..=h).map(|k| 2 * k))?.mul(&scaled_product(
            g[j],
            alpha_inv,
            (0..h).map(|k| 2 * k + 1),
        )?);
        let tag = format!("{}{}", i + 1, j + 1);
        out.push((tag.clone(), "-".into(), RPoly::xn_plus_c(spec, h, -1).mul(&core)));
        out.push((tag, "+".into(), RPoly::xn_plus_c(spec, h, 1).mul(&core)));
    }
    Ok(out)
}

fn check_cofactors(m: u64, g1: &RPoly, g2: &RPoly) -> Result<()> {
    let spec = g1.spec();
    if g2.spec() != spec {
        return Err(Error::RingMismatch(spec, g2.spec()));
    }
    if !g1.is_monic() || !g2.is_monic() {
        return Err(Error::NonMonicDivisor);
    }
    if g1.degree() == Some(0) || g2.degree() == Some(0) {
        return Err(Error::InvalidParameter("g1 and g2 must be nonconstant".into()));
    }
    let product = RPoly::from_signed(spec, &[-1, 1]).mul(g1).mul(g2);
    if product != RPoly::xn_minus_one(spec, m as usize) {
        return Err(Error::ProductMismatch { n: m as usize });
    }
    Ok(())
}

/// Four free codes from `x^m - 1 = (x - 1) g_1 g_2`, labelled `C12-`,
/// `C12+`, `C21-`, `C21+`.
pub fn thm44_isodual(m: u64, a: u32, spec: RingSpec, g1: &RPoly, g2: &RPoly) -> Result<ConstructionResult> {
    check_odd_length(m, spec)?;
    if g1.spec() != spec {
        return Err(Error::RingMismatch(spec, g1.spec()));
    }
    check_cofactors(m, g1, g2)?;
    let h = half_order(a)?;
    let (alpha, alpha_inv) = root_pair(a, spec)?;
    let n = 2 * h * m as usize;
    let codes = mixed_generators([g1, g2], h, alpha_inv)?
        .into_iter()
        .map(|(ij, sign, g)| free_code(&format!("C{ij}{sign}"), g, n, vec![Claim::Isodual]))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConstructionResult {
        params: Params {
            construction: Kind::Thm44,
            ring: spec,
            m,
            n,
            a: Some(a),
            alpha: Some(alpha),
            splitting: None,
            factors: Some([g1.clone(), g2.clone()]),
        },
        codes,
        notices: vec![],
    })
}

/// The free code `<x^(n/2) - 1>`, `n = 2^a m`.
pub fn remark46_code(m: u64, a: u32, spec: RingSpec) -> Result<ConstructionResult> {
    check_odd_length(m, spec)?;
    let h = half_order(a)?;
    let (alpha, _) = root_pair(a, spec)?;
    let n = 2 * h * m as usize;
    let g = RPoly::xn_plus_c(spec, n / 2, -1);
    Ok(ConstructionResult {
        params: Params {
            construction: Kind::Remark46,
            ring: spec,
            m,
            n,
            a: Some(a),
            alpha: Some(alpha),
            splitting: None,
            factors: None,
        },
        codes: vec![free_code("C", g, n, vec![Claim::Isodual])?],
        notices: vec![],
    })
}

/// The residue generators `f_i = prod_{s in S_i} (x - beta^s)` of the
/// odd-like duadic codes.
pub fn duadic_residue_generators(splitting: &Splitting) -> Result<(FqPoly, FqPoly)> {
    let p = splitting.q;
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("q = {p} must be prime")));
    }
    let factors = factor_xn_minus_1_with_cosets(splitting.m, p)?;
    let mut f = [FqPoly::one(p), FqPoly::one(p)];
    for cf in factors {
        let rep = cf.coset[0];
        if rep == 0 {
            continue;
        }
        let slot = if splitting.s1.binary_search(&rep).is_ok() { 0 } else { 1 };
        f[slot] = f[slot].mul(&cf.factor);
    }
    let [f1, f2] = f;
    Ok((f1, f2))
}

/// Hensel lifts `g_1, g_2` of the duadic generators; `x^m - 1 = (x - 1) g_1 g_2`.
pub fn duadic_generators(splitting: &Splitting, spec: RingSpec) -> Result<(RPoly, RPoly)> {
    check_splitting(splitting, spec)?;
    let (f1, f2) = duadic_residue_generators(splitting)?;
    let m = splitting.m as usize;
    Ok((lift_divisor(&f1, m, spec)?, lift_divisor(&f2, m, spec)?))
}

fn check_splitting(splitting: &Splitting, spec: RingSpec) -> Result<()> {
    if splitting.q != spec.p() {
        return Err(Error::InvalidParameter(format!(
            "splitting is over F_{}, ring residue field is F_{}",
            splitting.q,
            spec.p()
        )));
    }
    let mut all: Vec<u64> = splitting.s1.iter().chain(&splitting.s2).copied().collect();
    all.sort_unstable();
    if all != (1..splitting.m).collect::<Vec<_>>() {
        return Err(Error::InvalidParameter("S_1 and S_2 must partition the nonzero residues".into()));
    }
    Ok(())
}

/// Lifted duadic codes of odd length `m`: `D'_i = <g_i>`, `C'_i = <(x-1) g_i>`
/// and, for even `e`, `E_i = <(x-1) g_i, p^(e/2) g_1 g_2>`.
pub fn duadic_lift(m: u64, spec: RingSpec, splitting: &Splitting) -> Result<ConstructionResult> {
    check_odd_length(m, spec)?;
    if splitting.m != m {
        return Err(Error::InvalidParameter(format!("splitting is modulo {}, not {m}", splitting.m)));
    }
    let (g1, g2) = duadic_generators(splitting, spec)?;
    let n = m as usize;
    let x1 = RPoly::from_signed(spec, &[-1, 1]);
    let mut codes = vec![
        free_code("D'1", g1.clone(), n, vec![Claim::EquivalentTo { label: label("D'2") }])?,
        free_code("D'2", g2.clone(), n, vec![Claim::EquivalentTo { label: label("D'1") }])?,
        free_code("C'1", x1.mul(&g1), n, vec![Claim::EquivalentTo { label: label("C'2") }])?,
        free_code("C'2", x1.mul(&g2), n, vec![Claim::EquivalentTo { label: label("C'1") }])?,
    ];
    let mut notices = Vec::new();
    if spec.e().is_multiple_of(2) {
        let j = spec.e() / 2;
        let both = g1.mul(&g2);
        for (i, g) in [(1, &g1), (2, &g2)] {
            let other = format!("E{}", 3 - i);
            let mut claims = vec![Claim::EquivalentTo { label: other.clone() }];
            match splitting.mu_minus1 {
                MuMinusOne::Swaps => claims.push(Claim::SelfDual),
                MuMinusOne::Fixes => {
                    claims.push(Claim::DualOf { label: other });
                    claims.push(Claim::Isodual);
                }
                MuMinusOne::Mixed => {}
            }
            codes.push(LabeledCode {
                label: format!("E{i}"),
                code: CyclicCode::from_two_stage(&x1.mul(g), &both, j, n)?,
                generator: None,
                claims,
                verified: None,
            });
        }
        if splitting.mu_minus1 == MuMinusOne::Mixed {
            notices.push("mu_-1 neither swaps nor fixes the splitting; no duality claimed for E1, E2".into());
        }
    } else {
        notices.push(format!("e = {} is odd; E1, E2 omitted", spec.e()));
    }
    Ok(ConstructionResult {
        params: Params {
            construction: Kind::Duadic,
            ring: spec,
            m,
            n,
            a: None,
            alpha: None,
            splitting: Some(splitting.clone()),
            factors: Some([g1, g2]),
        },
        codes,
        notices,
    })
}

/// Free codes of length `2^a m` from a duadic splitting mod `m`.
///
/// Always emits the four mixed codes `C12`, `C'12`, `C21`, `C'21`, and the
/// codes `C_i = <(x^h - 1) G_i>`, `C'_i = <(x^h + 1) G_i>` with
/// `G_i = prod_{1<=k<=2^a} g_i(alpha^-k x)`. The latter are claimed isodual
/// when `mu_-1` gives the splitting, and dual-equivalent to `C'_j` resp.
/// `C_j` when it fixes it.
pub fn thm510_isodual(m: u64, a: u32, spec: RingSpec, splitting: &Splitting) -> Result<ConstructionResult> {
    check_odd_length(m, spec)?;
    if splitting.m != m {
        return Err(Error::InvalidParameter(format!("splitting is modulo {}, not {m}", splitting.m)));
    }
    let h = half_order(a)?;
    let (alpha, alpha_inv) = root_pair(a, spec)?;
    let (g1, g2) = duadic_generators(splitting, spec)?;
    let n = 2 * h * m as usize;
    let mut codes = Vec::new();
    for (ij, sign, g) in mixed_generators([&g1, &g2], h, alpha_inv)? {
        let name = if sign == "-" { format!("C{ij}") } else { format!("C'{ij}") };
        codes.push(free_code(&name, g, n, vec![Claim::Isodual])?);
    }
    let mut notices = Vec::new();
    for (i, g) in [(1, &g1), (2, &g2)] {
        let big = scaled_product(g, alpha_inv, 1..=2 * h)?;
        let j = 3 - i;
        let (minus, plus) = match splitting.mu_minus1 {
            MuMinusOne::Swaps => (vec![Claim::Isodual], vec![Claim::Isodual]),
            MuMinusOne::Fixes => (
                vec![Claim::DualEquivalentTo { label: format!("C'{j}") }],
                vec![Claim::DualEquivalentTo { label: format!("C{j}") }],
            ),
            MuMinusOne::Mixed => (vec![], vec![]),
        };
        codes.push(free_code(&format!("C{i}"), RPoly::xn_plus_c(spec, h, -1).mul(&big), n, minus)?);
        codes.push(free_code(&format!("C'{i}"), RPoly::xn_plus_c(spec, h, 1).mul(&big), n, plus)?);
    }
    if splitting.mu_minus1 == MuMinusOne::Mixed {
        notices.push("mu_-1 neither swaps nor fixes the splitting; no claims for C1, C'1, C2, C'2".into());
    }
    Ok(ConstructionResult {
        params: Params {
            construction: Kind::Thm510,
            ring: spec,
            m,
            n,
            a: Some(a),
            alpha: Some(alpha),
            splitting: Some(splitting.clone()),
            factors: Some([g1, g2]),
        },
        codes,
        notices,
    })
}
