use num_traits::{One, Signed, Zero};

use super::abelian::FinAbGroup;
use super::matrix::IntMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// Basis (as columns) of the saturated lattice `{x : A·x = 0}`.
pub fn kernel_saturated(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    s.v.columns_from(s.rank())
}

/// `Z^rows / colspan(A)`.
pub fn cokernel(a: &IntMatrix) -> FinAbGroup {
    let s = smith_normal_form(a);
    FinAbGroup::from_signed_orders(a.rows() - s.rank(), s.invariants().iter())
}

/// `ker(ker_of) / im(im_of)` for composable maps with `ker_of · im_of = 0`.
pub fn subquotient(ker_of: &IntMatrix, im_of: &IntMatrix) -> Result<FinAbGroup> {
    if ker_of.cols() != im_of.rows() {
        return Err(Error::DimensionMismatch(format!(
            "ker_of has {} columns but im_of has {} rows",
            ker_of.cols(),
            im_of.rows()
        )));
    }
    if !ker_of.checked_mul(im_of)?.is_zero() {
        return Err(Error::CompositionNotZero);
    }
    let s = smith_normal_form(ker_of);
    // In the basis given by the columns of V, the kernel is spanned by the
    // trailing coordinates; im_of lands there since D·V^{-1}·im_of = U·ker_of·im_of = 0.
    let coords = s.v_inv.checked_mul(im_of)?.rows_from(s.rank());
    Ok(cokernel(&coords))
}

/// Least `k` in `1..=bound` with `A^k = I`.
pub fn matrix_order(a: &IntMatrix, bound: u64) -> Result<u64> {
    a.require_square()?;
    let det = a.det()?;
    if !det.abs().is_one() {
        return Err(Error::NotInvertible { det: det.abs().to_string() });
    }
    let mut power = a.clone();
    for k in 1..=bound {
        if power.is_identity() {
            return Ok(k);
        }
        power = &power * a;
    }
    Err(Error::NotFiniteOrder { bound })
}

/// Rank of an integer matrix.
pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank()
}

pub(crate) fn is_unimodular(a: &IntMatrix) -> bool {
    a.det().map(|d| d.abs().is_one()).unwrap_or(false)
}

pub(crate) fn is_singular(a: &IntMatrix) -> bool {
    a.det().map(|d| d.is_zero()).unwrap_or(true)
}
