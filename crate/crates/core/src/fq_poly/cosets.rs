use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Partition of `Z_m` into `q`-cyclotomic cosets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetPartition {
    pub m: u64,
    pub q: u64,
    /// Sorted cosets, listed by their minimal element.
    pub cosets: Vec<Vec<u64>>,
}

impl CosetPartition {
    /// Index of the coset containing `i mod m`.
    pub fn index_of(&self, i: u64) -> usize {
        let i = i % self.m;
        self.cosets.iter().position(|c| c.binary_search(&i).is_ok()).expect("cosets cover Z_m")
    }

    /// Lookup table from residue to coset index.
    pub fn membership(&self) -> Vec<usize> {
        let mut table = vec![0; self.m as usize];
        for (k, c) in self.cosets.iter().enumerate() {
            for &i in c {
                table[i as usize] = k;
            }
        }
        table
    }
}

/// `Cl(i) = { i q^l mod m }` for every `i`.
pub fn cyclotomic_cosets(m: u64, q: u64) -> Result<CosetPartition> {
    if m == 0 || arith::gcd(m, q) != 1 {
        return Err(Error::NotCoprime { a: m, b: q });
    }
    let mut seen = vec![false; m as usize];
    let mut cosets = Vec::new();
    for i in 0..m {
        if seen[i as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = i;
        while !seen[j as usize] {
            seen[j as usize] = true;
            coset.push(j);
            j = ((j as u128 * q as u128) % m as u128) as u64;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(CosetPartition { m, q, cosets })
}
