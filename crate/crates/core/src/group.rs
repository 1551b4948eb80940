use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{is_singular, is_unimodular, matrix_order, IntMatrix};

/// The split extension `Z^n ⋊ Z/m` with the generator of `Z/m` acting by `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrystalGroup {
    n: usize,
    m: u64,
    action: IntMatrix,
    faithful_order: u64,
}

impl CrystalGroup {
    /// Validates `(n, m, A)`: `A` is `n x n`, unimodular, and `A^m = I`.
    /// A non-faithful action (order of `A` strictly dividing `m`) is accepted.
    pub fn new(n: usize, m: u64, action: IntMatrix) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("lattice rank n must be >= 1".into()));
        }
        if m == 0 {
            return Err(Error::DimensionMismatch("cyclic order m must be >= 1".into()));
        }
        if action.rows() != n || action.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{}, expected {n}x{n}",
                action.rows(),
                action.cols()
            )));
        }
        if !is_unimodular(&action) {
            let det = action.det()?;
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        if !action.pow(m)?.is_identity() {
            return Err(Error::OrderMismatch { m });
        }
        let faithful_order = matrix_order(&action, m)?;
        Ok(CrystalGroup {
            n,
            m,
            action,
            faithful_order,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn faithful_order(&self) -> u64 {
        self.faithful_order
    }

    pub fn is_faithful(&self) -> bool {
        self.faithful_order == self.m
    }

    /// Same group with the action conjugated by a unimodular `u`: `u·A·u^{-1}`.
    pub fn conjugate(&self, u: &IntMatrix, u_inv: &IntMatrix) -> Result<Self> {
        let a = u.checked_mul(&self.action)?.checked_mul(u_inv)?;
        Self::new(self.n, self.m, a)
    }
}

/// Checks `det(A^k - I) != 0` for `1 <= k < m`: no nonzero vector of `R^n`
/// is fixed by a nontrivial element.
pub fn is_free_outside_origin(g: &CrystalGroup) -> bool {
    let mut power = IntMatrix::identity(g.n);
    for _ in 1..g.m {
        power = &power * &g.action;
        if is_singular(&power.minus_identity().expect("square")) {
            return false;
        }
    }
    true
}

/// Serializable description `{"name", "n", "m", "matrix"}` of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub m: u64,
    pub matrix: Vec<Vec<i64>>,
}

impl GroupDescriptor {
    pub fn to_group(&self) -> Result<CrystalGroup> {
        if self.matrix.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows, expected n = {}",
                self.matrix.len(),
                self.n
            )));
        }
        let a = IntMatrix::from_rows(&self.matrix)?;
        CrystalGroup::new(self.n, self.m, a)
    }

    /// Descriptor of a validated group; fails only if an entry exceeds `i64`.
    pub fn from_group(name: Option<String>, g: &CrystalGroup) -> Option<Self> {
        Some(GroupDescriptor {
            name,
            n: g.n(),
            m: g.m(),
            matrix: g.action().to_i64_rows()?,
        })
    }
}
