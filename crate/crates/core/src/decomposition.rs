//! Type `(r, s, t)` of a `Z/p`-lattice: multiplicities of the trivial lattice `Z`,
//! the regular lattice `Z[Z/p]` and the augmentation ideal `I` in a decomposition
//! of a finite-index sublattice of index prime to `p`.
//!
//! The multiplicities are read off conjugation-invariant data. Tate cohomology is
//! unchanged by passing to sublattices of index prime to `p`, and
//! `Ĥ^even(Z) = Z/p`, `Ĥ^odd(I) = Z/p`, while `Z[Z/p]` is cohomologically trivial.
//! So `r = dim Ĥ^even`, `t = dim Ĥ^odd`, and `s` is what remains of the rank of
//! the fixed lattice after the `r` trivial summands.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_square_free};
use crate::error::{Error, Result};
use crate::group::CrystalGroup;
use crate::homology::{tate_cohomology, LatticeModule, Parity};
use crate::lattice::{kernel_saturated, FinAbGroup, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecompositionType {
    pub p: u64,
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl DecompositionType {
    pub fn new(p: u64, r: usize, s: usize, t: usize) -> Self {
        DecompositionType { p, r, s, t }
    }

    /// `r + p·s + (p-1)·t`.
    pub fn rank(&self) -> usize {
        self.r + self.p as usize * self.s + (self.p as usize - 1) * self.t
    }
}

/// Restricts the action to the order-`p` subgroup of `Z/m`: generator `A^{m/p}`.
pub fn sylow_restriction(g: &CrystalGroup, p: u64) -> Result<LatticeModule> {
    let m = g.m();
    if p == 0 || !m.is_multiple_of(p) {
        return Err(Error::PrimeDoesNotDivideOrder { p, m });
    }
    if !is_square_free(m) {
        return Err(Error::NotSquareFree { m });
    }
    LatticeModule::new(g.action().pow(m / p)?, p)
}

fn elementary_dim(h: &FinAbGroup, p: u64, which: &str) -> Result<usize> {
    let pp = p.into();
    if h.free_rank != 0 || h.invariant_factors().iter().any(|f| *f != pp) {
        return Err(Error::InternalInconsistency(format!(
            "{which} Tate group {h} is not elementary abelian of exponent {p}"
        )));
    }
    Ok(h.invariant_factors().len())
}

/// Type `(r, s, t)` of a lattice with a `Z/p` action, `p` an odd prime.
pub fn decomposition_type(module: &LatticeModule) -> Result<DecompositionType> {
    let p = module.group_order();
    if !is_prime(p) {
        return Err(Error::OrderNotPrime { p });
    }
    if p == 2 {
        return Err(Error::NotOddPrime(2));
    }
    let r = elementary_dim(&tate_cohomology(module, Parity::Even)?, p, "even")?;
    let t = elementary_dim(&tate_cohomology(module, Parity::Odd)?, p, "odd")?;
    let fixed = kernel_saturated(&module.action().minus_identity()?).cols();
    let s = fixed.checked_sub(r).ok_or_else(|| {
        Error::InternalInconsistency(format!("fixed rank {fixed} smaller than r = {r}"))
    })?;
    let d = DecompositionType { p, r, s, t };
    if d.rank() != module.rank() {
        return Err(Error::InternalInconsistency(format!(
            "r + p*s + (p-1)*t = {} but the lattice has rank {}",
            d.rank(),
            module.rank()
        )));
    }
    Ok(d)
}

/// `Z^r ⊕ Z[Z/p]^s ⊕ I^t` as a block-diagonal action, blocks in that order.
pub fn build_module(d: &DecompositionType) -> LatticeModule {
    let p = d.p;
    let mut blocks = Vec::new();
    blocks.extend(std::iter::repeat_n(IntMatrix::identity(1), d.r));
    blocks.extend(std::iter::repeat_n(LatticeModule::regular(p).action().clone(), d.s));
    blocks.extend(std::iter::repeat_n(
        LatticeModule::augmentation_ideal(p).action().clone(),
        d.t,
    ));
    LatticeModule::new(IntMatrix::block_diag(&blocks), p).expect("blocks have order p")
}

/// A seeded random unimodular matrix with its inverse, built from at most 30
/// elementary row operations with multipliers in `[-3, 3]`.
pub fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut u_inv = IntMatrix::identity(n);
    if n == 0 {
        return (u, u_inv);
    }
    let steps = rng.random_range(0..=30);
    for _ in 0..steps {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i == j {
            // Sign flip: self-inverse.
            for c in 0..n {
                let x = -u.get(i, c).clone();
                u.set(i, c, x);
                let y = -u_inv.get(c, i).clone();
                u_inv.set(c, i, y);
            }
            continue;
        }
        let k: i64 = rng.random_range(-3..=3);
        if k == 0 {
            continue;
        }
        // u <- (I + k e_i e_j^T) u ; u_inv <- u_inv (I - k e_i e_j^T)
        for c in 0..n {
            let dr = u.get(j, c) * k;
            let x = u.get(i, c) + dr;
            u.set(i, c, x);
            let dc = u_inv.get(c, i) * k;
            let y = u_inv.get(c, j) - dc;
            u_inv.set(c, j, y);
        }
    }
    (u, u_inv)
}

/// `U·g·U^{-1}` for an explicit unimodular `U`.
pub fn conjugate_by(module: &LatticeModule, u: &IntMatrix, u_inv: &IntMatrix) -> Result<LatticeModule> {
    let a = u.checked_mul(module.action())?.checked_mul(u_inv)?;
    LatticeModule::new(a, module.group_order())
}

/// Conjugates by a random unimodular matrix determined by `seed`.
pub fn conjugate_random(module: &LatticeModule, seed: u64) -> LatticeModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (u, u_inv) = random_unimodular(module.rank(), &mut rng);
    conjugate_by(module, &u, &u_inv).expect("conjugate of a valid module")
}
