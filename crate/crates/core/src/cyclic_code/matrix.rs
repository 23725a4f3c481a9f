//! Dense matrices over `Z/p^e` with a Smith-form diagonalization, used to
//! count row spaces and to compute annihilators independently of the
//! polynomial description of a code.

use serde::{Serialize, Serializer};

use crate::ring::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    spec: RingSpec,
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

impl Serialize for ModMatrix {
    /// Row-major integer arrays.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// Result of diagonalizing `A`: pivot valuations and the column transform
/// `V` with `U A V = diag(p^v_0, p^v_1, ...)`.
struct Diagonal {
    valuations: Vec<u32>,
    transform: Vec<Vec<u64>>,
}

impl ModMatrix {
    pub fn from_rows(spec: RingSpec, ncols: usize, rows: Vec<Vec<u64>>) -> Self {
        let m = spec.modulus();
        let rows = rows
            .into_iter()
            .map(|mut r| {
                assert_eq!(r.len(), ncols, "row length");
                r.iter_mut().for_each(|v| *v %= m);
                r
            })
            .collect();
        ModMatrix { spec, ncols, rows }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn with_row_on_top(mut self, row: Vec<u64>) -> Self {
        assert_eq!(row.len(), self.ncols);
        self.rows.insert(0, row);
        self
    }

    pub fn with_row_below(mut self, row: Vec<u64>) -> Self {
        assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
        self
    }

    /// `log_p` of the size of the row space.
    pub fn row_space_log_cardinality(&self) -> u64 {
        let e = self.spec.e();
        self.diagonalize(false).valuations.iter().map(|&v| (e - v) as u64).sum()
    }

    /// Generators of `{ x : A x = 0 }`, i.e. of the code orthogonal to the
    /// row space under the standard inner product.
    pub fn right_kernel_generators(&self) -> Vec<Vec<u64>> {
        let spec = self.spec;
        let d = self.diagonalize(true);
        let v = &d.transform;
        let column = |j: usize, scale: u64| -> Vec<u64> { (0..self.ncols).map(|i| spec.mul(v[i][j], scale)).collect() };
        let mut out = Vec::new();
        for (j, &val) in d.valuations.iter().enumerate() {
            if val > 0 {
                out.push(column(j, spec.gamma_pow(spec.e() - val)));
            }
        }
        for j in d.valuations.len()..self.ncols {
            out.push(column(j, 1));
        }
        out
    }

    fn diagonalize(&self, track: bool) -> Diagonal {
        let spec = self.spec;
        let e = spec.e();
        let (nr, nc) = (self.rows.len(), self.ncols);
        let mut a = self.rows.clone();
        let mut v: Vec<Vec<u64>> =
            if track { (0..nc).map(|i| (0..nc).map(|j| u64::from(i == j)).collect()).collect() } else { Vec::new() };
        let mut valuations = Vec::new();
        let mut r = 0;
        while r < nr.min(nc) {
            // pivot of least valuation in the remaining block
            let mut best: Option<(u32, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(r) {
                for (j, &x) in row.iter().enumerate().skip(r) {
                    if x != 0 {
                        let val = spec.valuation(x);
                        if best.is_none_or(|(b, _, _)| val < b) {
                            best = Some((val, i, j));
                        }
                    }
                }
            }
            let Some((val, pi, pj)) = best else { break };
            a.swap(r, pi);
            if pj != r {
                for row in a.iter_mut() {
                    row.swap(r, pj);
                }
                for row in v.iter_mut() {
                    row.swap(r, pj);
                }
            }
            let pk = spec.gamma_pow(val).max(1);
            let unit = spec.inv(a[r][r] / pk).expect("pivot cofactor is a unit");
            for x in a[r].iter_mut() {
                *x = spec.mul(*x, unit);
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[r] == 0 {
                    continue;
                }
                let c = row[r] / pk;
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = spec.sub(*x, spec.mul(c, y));
                }
            }
            for j in r + 1..nc {
                if a[r][j] == 0 {
                    continue;
                }
                let c = a[r][j] / pk;
                for row in a.iter_mut() {
                    row[j] = spec.sub(row[j], spec.mul(c, row[r]));
                }
                for row in v.iter_mut() {
                    row[j] = spec.sub(row[j], spec.mul(c, row[r]));
                }
            }
            debug_assert!(val < e);
            valuations.push(val);
            r += 1;
        }
        Diagonal { valuations, transform: v }
    }
}
