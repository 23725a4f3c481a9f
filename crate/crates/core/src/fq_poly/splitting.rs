//! Splittings of `Z_m \ {0}` into two unions of `q`-cyclotomic cosets that a
//! multiplier swaps.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

use super::cyclotomic_cosets;

/// How `mu_{-1}` acts on a splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MuMinusOne {
    /// `-S_1 = S_2`: the splitting is given by `mu_{-1}`.
    Swaps,
    /// `-S_1 = S_1`: the splitting is invariant under `mu_{-1}`.
    Fixes,
    /// Neither; only possible for composite `m`.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Splitting {
    pub m: u64,
    pub q: u64,
    pub s1: Vec<u64>,
    pub s2: Vec<u64>,
    /// Smallest multiplier with `a S_1 = S_2` and `a S_2 = S_1`.
    pub a: u64,
    pub mu_minus1: MuMinusOne,
}

impl Splitting {
    pub fn given_by_mu_minus1(&self) -> bool {
        self.mu_minus1 == MuMinusOne::Swaps
    }

    pub fn invariant_under_mu_minus1(&self) -> bool {
        self.mu_minus1 == MuMinusOne::Fixes
    }

    /// The splitting with the two halves exchanged.
    pub fn swapped(&self) -> Splitting {
        Splitting { s1: self.s2.clone(), s2: self.s1.clone(), ..self.clone() }
    }
}

/// Maximum number of multiplier cycles on cosets explored per witness.
const MAX_CYCLES: usize = 20;

/// All splittings mod `m` over `F_q`, each with its smallest witness.
///
/// `S_1` always contains 1; the list is sorted lexicographically by `S_1`.
pub fn find_splittings(m: u64, q: u64) -> Result<Vec<Splitting>> {
    if m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("splitting modulus {m} must be odd")));
    }
    let partition = cyclotomic_cosets(m, q)?;
    let cosets: Vec<&Vec<u64>> = partition.cosets.iter().skip(1).collect();
    if cosets.is_empty() {
        return Err(Error::EmptyResult { m, q });
    }
    let table = partition.membership();
    let one = table[1 % m as usize] - 1;

    let mut found: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    for a in 1..m {
        if arith::gcd(a, m) != 1 {
            continue;
        }
        // multiplier action on nonzero coset indices
        let perm: Vec<usize> =
            cosets.iter().map(|c| table[((c[0] as u128 * a as u128) % m as u128) as usize] - 1).collect();
        let mut seen = vec![false; cosets.len()];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for start in 0..cosets.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = perm[k];
            }
            cycles.push(cycle);
        }
        if cycles.iter().any(|c| c.len() % 2 == 1) {
            continue;
        }
        if cycles.len() > MAX_CYCLES {
            return Err(Error::TooLarge {
                what: "splitting search space",
                size: 1u128 << cycles.len(),
                limit: 1u128 << MAX_CYCLES,
            });
        }
        // S_1 takes alternate cosets along each cycle
        for mask in 0u64..(1u64 << cycles.len()) {
            let mut in_s1 = vec![false; cosets.len()];
            for (bit, cycle) in cycles.iter().enumerate() {
                let parity = ((mask >> bit) & 1) as usize;
                for (pos, &k) in cycle.iter().enumerate() {
                    in_s1[k] = pos % 2 == parity;
                }
            }
            if !in_s1[one] {
                continue;
            }
            let mut s1: Vec<u64> =
                (0..cosets.len()).filter(|&k| in_s1[k]).flat_map(|k| cosets[k].iter().copied()).collect();
            s1.sort_unstable();
            found.entry(s1).or_insert(a);
        }
    }
    if found.is_empty() {
        return Err(Error::EmptyResult { m, q });
    }

    Ok(found
        .into_iter()
        .map(|(s1, a)| {
            let mut s2: Vec<u64> = (1..m).filter(|i| s1.binary_search(i).is_err()).collect();
            s2.sort_unstable();
            let mut neg: Vec<u64> = s1.iter().map(|&i| m - i).collect();
            neg.sort_unstable();
            let mu_minus1 = if neg == s2 {
                MuMinusOne::Swaps
            } else if neg == s1 {
                MuMinusOne::Fixes
            } else {
                MuMinusOne::Mixed
            };
            Splitting { m, q, s1, s2, a, mu_minus1 }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn times(a: u64, s: &[u64], m: u64) -> Vec<u64> {
        let mut v: Vec<u64> = s.iter().map(|&i| i * a % m).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn m11_q3() {
        let sp = find_splittings(11, 3).unwrap();
        assert_eq!(sp.len(), 1);
        assert_eq!(sp[0].s1, vec![1, 3, 4, 5, 9]);
        assert_eq!(sp[0].s2, vec![2, 6, 7, 8, 10]);
        assert_eq!(sp[0].a, 2);
        assert!(sp[0].given_by_mu_minus1());
    }

    #[test]
    fn m11_q5_given_by_mu_minus1() {
        let sp = find_splittings(11, 5).unwrap();
        assert!(!sp.is_empty());
        assert!(sp.iter().all(|s| s.given_by_mu_minus1()));
    }

    #[test]
    fn empty_cases() {
        assert_eq!(find_splittings(5, 3), Err(Error::EmptyResult { m: 5, q: 3 }));
        assert_eq!(find_splittings(1, 3), Err(Error::EmptyResult { m: 1, q: 3 }));
        assert!(find_splittings(10, 3).is_err());
        assert!(find_splittings(9, 3).is_err());
    }

    #[test]
    fn json_shape() {
        let sp = &find_splittings(11, 3).unwrap()[0];
        let v = serde_json::to_value(sp).unwrap();
        assert_eq!(v["mu_minus1"], "swaps");
        assert_eq!(v["a"], 2);
        let back: Splitting = serde_json::from_value(v).unwrap();
        assert_eq!(&back, sp);
    }

    #[test]
    fn splitting_invariants_and_existence() {
        for q in [2u64, 3, 4, 5, 7, 9] {
            for m in (3..=75u64).step_by(2) {
                if arith::gcd(m, q) != 1 {
                    continue;
                }
                let square = arith::is_quadratic_residue(q, m).unwrap();
                match find_splittings(m, q) {
                    Ok(list) => {
                        assert!(square, "splitting without q square: m={m} q={q}");
                        let mut prev: Option<&Vec<u64>> = None;
                        for s in &list {
                            assert_eq!(s.s1.len() as u64, (m - 1) / 2);
                            assert_eq!(s.s2.len() as u64, (m - 1) / 2);
                            assert!(s.s1.contains(&1));
                            assert_eq!(times(s.a, &s.s1, m), s.s2);
                            assert_eq!(times(s.a, &s.s2, m), s.s1);
                            let neg = times(m - 1, &s.s1, m);
                            assert_eq!(s.given_by_mu_minus1(), neg == s.s2);
                            assert_eq!(s.invariant_under_mu_minus1(), neg == s.s1);
                            if m <= 25 && (q == 3 || q == 5) {
                                assert_ne!(s.mu_minus1, MuMinusOne::Mixed);
                            }
                            if let Some(p) = prev {
                                assert!(p < &s.s1);
                            }
                            prev = Some(&s.s1);
                        }
                    }
                    Err(Error::EmptyResult { .. }) => assert!(!square, "m={m} q={q}"),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
}
