use num_bigint::BigInt;

use super::matrix::{bareiss_det, IntMatrix};
use crate::error::{Error, Result};
use crate::par::{self, Execution};

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `k`-th exterior power (compound matrix) of a square matrix.
///
/// Rows and columns are indexed by `k`-subsets in lexicographic order; the
/// entry at `(R, C)` is the minor on rows `R` and columns `C`, both ascending.
pub fn exterior_power(a: &IntMatrix, k: usize) -> Result<IntMatrix> {
    exterior_power_with(a, k, Execution::default())
}

pub fn exterior_power_with(a: &IntMatrix, k: usize, exec: Execution) -> Result<IntMatrix> {
    a.require_square()?;
    let n = a.rows();
    if k > n {
        return Err(Error::DegreeOutOfRange {
            degree: k as i64,
            max: n,
        });
    }
    let subsets = k_subsets(n, k);
    let rows: Vec<Vec<BigInt>> = par::map_slice(exec, &subsets, |r| {
        subsets
            .iter()
            .map(|c| {
                let mut buf = Vec::with_capacity(k * k);
                for &i in r {
                    for &j in c {
                        buf.push(a.get(i, j).clone());
                    }
                }
                bareiss_det(k, buf)
            })
            .collect()
    });
    let dim = subsets.len();
    IntMatrix::new(dim, dim, rows.into_iter().flatten().collect())
}
