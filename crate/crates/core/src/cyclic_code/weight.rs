//! Codeword enumeration and minimum Hamming weight.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fq_poly::FqPoly;

use super::{Codeword, CyclicCode};

/// Default cap on codewords enumerated directly over `Z/p^e`.
pub const DEFAULT_BUDGET: u128 = 2_000_000;

/// Hard cap on residue-code words (up to scalars) for the residue route.
pub const MAX_RESIDUE_WORDS: u128 = 1_000_000_000;

/// Chunks handed to the thread pool per scan.
const PARALLEL_CHUNKS: u128 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Every codeword over `Z/p^e`.
    Direct,
    /// Free codes only: the residue code `<g mod p>` over `F_p`, which has
    /// the same minimum weight.
    Residue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub weight: usize,
    pub strategy: Strategy,
    /// Number of words visited.
    pub enumerated: u128,
}

/// Mixed-radix description of a module: every element is uniquely
/// `sum d_k rows[k]` with `0 <= d_k < orders[k]`, and `orders[k] * rows[k] = 0`.
struct Space<'a> {
    modulus: u64,
    n: usize,
    rows: &'a [Vec<u64>],
    supports: Vec<Vec<usize>>,
    orders: &'a [u64],
}

impl<'a> Space<'a> {
    fn new(modulus: u64, n: usize, rows: &'a [Vec<u64>], orders: &'a [u64]) -> Self {
        let supports =
            rows.iter().map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i).collect()).collect();
        Space { modulus, n, rows, supports, orders }
    }

    #[inline]
    fn add_row(&self, word: &mut [u64], weight: &mut usize, k: usize) {
        let row = &self.rows[k];
        for &i in &self.supports[k] {
            let old = word[i];
            let mut new = old + row[i];
            if new >= self.modulus {
                new -= self.modulus;
            }
            word[i] = new;
            match (old == 0, new == 0) {
                (true, false) => *weight += 1,
                (false, true) => *weight -= 1,
                _ => {}
            }
        }
    }

    /// Minimum nonzero weight over `base + span(rows[..low])` with the
    /// digits of `rows[low..]` fixed, and the number of words visited.
    fn scan_block(&self, base: &[u64], low: usize) -> (usize, u128) {
        let mut word = base.to_vec();
        let mut weight = word.iter().filter(|&&v| v != 0).count();
        let mut digits = vec![0u64; low];
        let mut best = usize::MAX;
        let mut count = 0u128;
        loop {
            if weight > 0 && weight < best {
                best = weight;
            }
            count += 1;
            let mut k = 0;
            loop {
                if k == low {
                    return (best, count);
                }
                self.add_row(&mut word, &mut weight, k);
                digits[k] += 1;
                if digits[k] < self.orders[k] {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }

    /// Parallel scan of `base + span(rows[..top])`.
    fn scan(&self, base: &[u64], top: usize) -> (usize, u128) {
        // split the most significant digits across chunks
        let mut split = top;
        let mut chunks = 1u128;
        while split > 0 && chunks < PARALLEL_CHUNKS {
            split -= 1;
            chunks *= self.orders[split] as u128;
        }
        (0..chunks)
            .into_par_iter()
            .map(|mut c| {
                let mut word = base.to_vec();
                let mut weight = word.iter().filter(|&&v| v != 0).count();
                for k in split..top {
                    let d = (c % self.orders[k] as u128) as u64;
                    c /= self.orders[k] as u128;
                    for _ in 0..d {
                        self.add_row(&mut word, &mut weight, k);
                    }
                }
                self.scan_block(&word, split)
            })
            .reduce(|| (usize::MAX, 0), |a, b| (a.0.min(b.0), a.1 + b.1))
    }

    fn min_weight_full(&self) -> (usize, u128) {
        self.scan(&vec![0; self.n], self.rows.len())
    }

    /// Over a field: only words whose last nonzero digit is 1.
    fn min_weight_projective(&self) -> (usize, u128) {
        (0..self.rows.len())
            .map(|t| self.scan(&self.rows[t], t))
            .fold((usize::MAX, 0), |a, b| (a.0.min(b.0), a.1 + b.1))
    }
}

fn pow_saturating(base: u64, exp: u64) -> u128 {
    let mut acc = 1u128;
    for _ in 0..exp {
        acc = match acc.checked_mul(base as u128) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}

/// Iterator over every codeword of a code, each exactly once.
pub struct Codewords {
    ring: crate::ring::RingSpec,
    rows: Vec<Vec<u64>>,
    orders: Vec<u64>,
    digits: Vec<u64>,
    word: Vec<u64>,
    done: bool,
}

impl Iterator for Codewords {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.done {
            return None;
        }
        let out = Codeword { ring: self.ring, entries: self.word.clone() };
        let mut k = 0;
        loop {
            if k == self.rows.len() {
                self.done = true;
                break;
            }
            for (w, &r) in self.word.iter_mut().zip(&self.rows[k]) {
                *w = self.ring.add(*w, r);
            }
            self.digits[k] += 1;
            if self.digits[k] < self.orders[k] {
                break;
            }
            self.digits[k] = 0;
            k += 1;
        }
        Some(out)
    }
}

impl CyclicCode {
    /// `|C|`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        pow_saturating(self.spec.p(), self.cardinality_log())
    }

    /// Streams every codeword; errors if `|C| > limit`.
    pub fn codewords(&self, limit: u128) -> Result<Codewords> {
        let size = self.size();
        if size > limit {
            return Err(Error::TooLarge { what: "code", size, limit });
        }
        let (rows, orders) = self.structured_rows();
        Ok(Codewords { ring: self.spec, digits: vec![0; rows.len()], word: vec![0; self.n], rows, orders, done: false })
    }

    pub fn enumerate(&self, limit: u128) -> Result<Vec<Codeword>> {
        Ok(self.codewords(limit)?.collect())
    }

    /// Minimum Hamming weight: direct enumeration when `|C| <= budget`,
    /// otherwise the residue route for free codes.
    pub fn min_hamming_weight(&self) -> Result<WeightReport> {
        self.min_hamming_weight_with(None, DEFAULT_BUDGET)
    }

    pub fn min_hamming_weight_with(&self, strategy: Option<Strategy>, budget: u128) -> Result<WeightReport> {
        self.min_hamming_weight_limited(strategy, budget, MAX_RESIDUE_WORDS)
    }

    /// As [`Self::min_hamming_weight_with`], capping the residue route at
    /// `residue_limit` words.
    pub fn min_hamming_weight_limited(
        &self,
        strategy: Option<Strategy>,
        budget: u128,
        residue_limit: u128,
    ) -> Result<WeightReport> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        match strategy {
            Some(Strategy::Direct) => self.min_weight_direct(budget),
            Some(Strategy::Residue) => self.min_weight_residue_limited(residue_limit),
            None if self.size() <= budget => self.min_weight_direct(budget),
            None if self.is_free() => self.min_weight_residue_limited(residue_limit),
            None => Err(Error::TooLarge { what: "code", size: self.size(), limit: budget }),
        }
    }

    pub fn min_weight_direct(&self, budget: u128) -> Result<WeightReport> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        let size = self.size();
        if size > budget {
            return Err(Error::TooLarge { what: "code", size, limit: budget });
        }
        let (rows, orders) = self.structured_rows();
        let space = Space::new(self.spec.modulus(), self.n, &rows, &orders);
        let (weight, enumerated) = space.min_weight_full();
        Ok(WeightReport { weight, strategy: Strategy::Direct, enumerated })
    }

    /// Minimum weight of the residue code `<g mod p>` of a free code `<g>`,
    /// enumerated up to nonzero scalars.
    pub fn min_weight_residue(&self) -> Result<WeightReport> {
        self.min_weight_residue_limited(MAX_RESIDUE_WORDS)
    }

    pub fn min_weight_residue_limited(&self, limit: u128) -> Result<WeightReport> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        let g = self
            .free_generator()
            .ok_or_else(|| Error::InvalidParameter("residue reduction applies to free codes only".into()))?;
        let p = self.spec.p();
        let (rows, orders) = residue_rows(&g.reduce(), self.n);
        let words = (pow_saturating(p, rows.len() as u64) - 1) / (p as u128 - 1).max(1);
        if words > limit {
            return Err(Error::TooLarge { what: "residue code", size: words, limit });
        }
        let space = Space::new(p, self.n, &rows, &orders);
        let (weight, enumerated) = space.min_weight_projective();
        Ok(WeightReport { weight, strategy: Strategy::Residue, enumerated })
    }

    /// Smallest nonzero weight among the first `budget` codewords.
    pub fn weight_upper_bound(&self, budget: u128) -> Option<usize> {
        let (rows, orders) = self.structured_rows();
        let it = Codewords {
            ring: self.spec,
            digits: vec![0; rows.len()],
            word: vec![0; self.n],
            rows,
            orders,
            done: false,
        };
        it.take(budget.min(usize::MAX as u128) as usize).map(|c| c.weight()).filter(|&w| w > 0).min()
    }
}

/// Shifts `x^k g` over `F_p`, `k < n - deg g`.
fn residue_rows(g: &FqPoly, n: usize) -> (Vec<Vec<u64>>, Vec<u64>) {
    let deg = g.degree().expect("nonzero generator");
    let rows: Vec<Vec<u64>> = (0..n - deg)
        .map(|k| {
            let mut row = vec![0u64; k];
            row.extend_from_slice(g.coeffs());
            row.resize(n, 0);
            row
        })
        .collect();
    let orders = vec![g.p(); rows.len()];
    (rows, orders)
}
