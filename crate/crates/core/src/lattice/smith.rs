use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form `U·A·V = D` with unimodular `U`, `V`.
///
/// `v_inv` is `V^{-1}`, tracked alongside `V` so that coordinates with respect
/// to the kernel basis can be read off without a second solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    rank: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_rank`.
    pub fn invariants(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Work {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.d, &mut self.u] {
            for c in 0..m.cols() {
                let a = m.get(i, c).clone();
                let b = std::mem::replace(m.get_mut(j, c), a);
                m.set(i, c, b);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.d, &mut self.v] {
            for r in 0..m.rows() {
                let a = m.get(r, i).clone();
                let b = std::mem::replace(m.get_mut(r, j), a);
                m.set(r, i, b);
            }
        }
        let n = self.v_inv.cols();
        for c in 0..n {
            let a = self.v_inv.get(i, c).clone();
            let b = std::mem::replace(self.v_inv.get_mut(j, c), a);
            self.v_inv.set(i, c, b);
        }
    }

    /// row_dst += k * row_src
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for m in [&mut self.d, &mut self.u] {
            for c in 0..m.cols() {
                let delta = k * m.get(src, c);
                *m.get_mut(dst, c) += delta;
            }
        }
    }

    /// col_dst += k * col_src
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for m in [&mut self.d, &mut self.v] {
            for r in 0..m.rows() {
                let delta = k * m.get(r, src);
                *m.get_mut(r, dst) += delta;
            }
        }
        // V^{-1} picks up the inverse elementary operation on the left.
        for c in 0..self.v_inv.cols() {
            let delta = k * self.v_inv.get(dst, c);
            *self.v_inv.get_mut(src, c) -= delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.d, &mut self.u] {
            for c in 0..m.cols() {
                let x = m.get_mut(i, c);
                *x = -std::mem::take(x);
            }
        }
    }
}

/// Computes the Smith normal form of any matrix, including empty ones.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work {
        d: a.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut rank = 0;

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_nonzero(&w.d, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            // Clear column t below the pivot and row t right of it.
            let pivot = w.d.get(t, t).clone();
            for i in t + 1..rows {
                let q = w.d.get(i, t).div_floor(&pivot);
                w.add_row(i, t, &-q);
            }
            for j in t + 1..cols {
                let q = w.d.get(t, j).div_floor(&pivot);
                w.add_col(j, t, &-q);
            }

            let residues = (t + 1..rows)
                .map(|i| (i, t))
                .chain((t + 1..cols).map(|j| (t, j)));
            if let Some((i, j)) = min_nonzero(&w.d, residues) {
                // A remainder smaller than the pivot survived; promote it.
                if j == t {
                    w.swap_rows(t, i);
                } else {
                    w.swap_cols(t, j);
                }
                continue;
            }

            let pivot = w.d.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !w.d.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }

        if w.d.get(t, t).is_negative() {
            w.negate_row(t);
        }
        rank += 1;
    }

    SmithForm {
        d: w.d,
        u: w.u,
        v: w.v,
        v_inv: w.v_inv,
        rank,
    }
}

fn min_nonzero<I: Iterator<Item = (usize, usize)>>(m: &IntMatrix, cells: I) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cells {
        let x = m.get(i, j);
        if x.is_zero() {
            continue;
        }
        let a = x.abs();
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            let done = a == BigInt::from(1);
            best = Some(((i, j), a));
            if done {
                break;
            }
        }
    }
    best.map(|(ij, _)| ij)
}
