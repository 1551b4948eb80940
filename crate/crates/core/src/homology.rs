//! Homology and Tate cohomology of cyclic groups acting on lattices, computed
//! from the 2-periodic resolution `... -> Z[C] --N--> Z[C] --(g-1)--> Z[C] -> Z`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::CrystalGroup;
use crate::lattice::{binomial, cokernel, exterior_power, subquotient, FinAbGroup, IntMatrix};
use crate::par::{self, Execution};

/// `Z^rank` with a `Z/group_order` action given by the generator's matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeModule {
    action: IntMatrix,
    group_order: u64,
}

impl LatticeModule {
    pub fn new(action: IntMatrix, group_order: u64) -> Result<Self> {
        action.require_square()?;
        if group_order == 0 {
            return Err(Error::DimensionMismatch("group order must be >= 1".into()));
        }
        if !action.pow(group_order)?.is_identity() {
            return Err(Error::OrderMismatch { m: group_order });
        }
        Ok(LatticeModule { action, group_order })
    }

    /// `Z^rank` with trivial action.
    pub fn trivial(rank: usize, group_order: u64) -> Self {
        LatticeModule {
            action: IntMatrix::identity(rank),
            group_order,
        }
    }

    /// The regular representation `Z[Z/p]` (cyclic permutation of a basis).
    pub fn regular(p: u64) -> Self {
        LatticeModule {
            action: cyclic_permutation(p as usize),
            group_order: p,
        }
    }

    /// The augmentation ideal of `Z[Z/p]`, i.e. the companion lattice of
    /// `1 + x + ... + x^{p-1}`.
    pub fn augmentation_ideal(p: u64) -> Self {
        LatticeModule {
            action: cyclotomic_companion(p as usize),
            group_order: p,
        }
    }

    pub fn rank(&self) -> usize {
        self.action.rows()
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// Block-diagonal direct sum; both summands must share a group order.
    pub fn direct_sum(&self, other: &LatticeModule) -> Result<LatticeModule> {
        if self.group_order != other.group_order {
            return Err(Error::DimensionMismatch(format!(
                "group orders {} and {} differ",
                self.group_order, other.group_order
            )));
        }
        Ok(LatticeModule {
            action: IntMatrix::block_diag([&self.action, &other.action]),
            group_order: self.group_order,
        })
    }

    /// `Λ^k` of the lattice with the induced action.
    pub fn exterior_power(&self, k: usize) -> Result<LatticeModule> {
        Ok(LatticeModule {
            action: exterior_power(&self.action, k)?,
            group_order: self.group_order,
        })
    }

    fn g_minus_one(&self) -> IntMatrix {
        self.action.minus_identity().expect("square action")
    }
}

/// Cyclic permutation `e_i -> e_{i+1 mod n}`.
pub fn cyclic_permutation(n: usize) -> IntMatrix {
    let mut a = IntMatrix::zeros(n, n);
    for i in 0..n {
        a.set((i + 1) % n, i, 1.into());
    }
    a
}

/// Companion matrix of `1 + x + ... + x^{p-1}` (size `(p-1) x (p-1)`).
pub fn cyclotomic_companion(p: usize) -> IntMatrix {
    let n = p.saturating_sub(1);
    let mut a = IntMatrix::zeros(n, n);
    for i in 1..n {
        a.set(i, i - 1, 1.into());
    }
    for i in 0..n {
        a.set(i, n - 1, (-1).into());
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(i: i64) -> Parity {
        if i.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `1 + g + ... + g^{m-1}`.
pub fn norm_matrix(module: &LatticeModule) -> IntMatrix {
    let n = module.rank();
    let mut acc = IntMatrix::zeros(n, n);
    let mut power = IntMatrix::identity(n);
    for _ in 0..module.group_order {
        acc = &acc + &power;
        power = &power * &module.action;
    }
    acc
}

/// `H_i(Z/m; M)`: coinvariants for `i = 0`, then `ker(g-1)/im(N)` in odd
/// degrees and `ker(N)/im(g-1)` in positive even degrees.
pub fn group_homology(module: &LatticeModule, i: i64) -> Result<FinAbGroup> {
    if i < 0 {
        return Err(Error::NegativeDegree(i));
    }
    if i == 0 {
        return Ok(coinvariants(module));
    }
    // H_{2k-1} = Ĥ^{-2k} and H_{2k} = Ĥ^{-2k-1}.
    let parity = if i % 2 == 1 { Parity::Even } else { Parity::Odd };
    tate_cohomology(module, parity)
}

/// Tate cohomology: `Ĥ^even = ker(g-1)/im(N)`, `Ĥ^odd = ker(N)/im(g-1)`.
pub fn tate_cohomology(module: &LatticeModule, parity: Parity) -> Result<FinAbGroup> {
    let norm = norm_matrix(module);
    let g1 = module.g_minus_one();
    match parity {
        Parity::Even => subquotient(&g1, &norm),
        Parity::Odd => subquotient(&norm, &g1),
    }
}

/// `M / (g-1)M`.
pub fn coinvariants(module: &LatticeModule) -> FinAbGroup {
    cokernel(&module.g_minus_one())
}

/// `H_i(Γ; Z/2)` from integral homology by universal coefficients.
pub fn with_z2_coefficients(h_i: &FinAbGroup, h_i_minus_1: Option<&FinAbGroup>) -> FinAbGroup {
    let tor = h_i_minus_1.map(|h| h.tor_cyclic(2)).unwrap_or_default();
    h_i.tensor_cyclic(2).direct_sum(&tor)
}

/// One `E^2_{i,j} = H_i(Z/m; Λ^j Z^n)` summand of the collapsed
/// Lyndon–Hochschild–Serre spectral sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LhsSummand {
    pub i: usize,
    pub j: usize,
    pub group: FinAbGroup,
}

/// `H_k(Γ)` as the sum over `i + j = k` of `H_i(Z/m; Λ^j Z^n)`, assuming the
/// spectral sequence collapses (true for square-free `m`; not checked here).
pub fn lhs_total_homology(g: &CrystalGroup, k: i64) -> Result<FinAbGroup> {
    Ok(FinAbGroup::sum_all(
        lhs_summands(g, k, Execution::default())?.iter().map(|s| &s.group),
    ))
}

/// The individual summands behind [`lhs_total_homology`].
pub fn lhs_summands(g: &CrystalGroup, k: i64, exec: Execution) -> Result<Vec<LhsSummand>> {
    if k < 0 {
        return Err(Error::NegativeDegree(k));
    }
    let k = k as usize;
    let top = k.min(g.n());
    let module = LatticeModule {
        action: g.action().clone(),
        group_order: g.m(),
    };
    par::map_range(exec, top + 1, |j| {
        let group = group_homology(&module.exterior_power(j)?, (k - j) as i64)?;
        Ok(LhsSummand { i: k - j, j, group })
    })
    .into_iter()
    .collect()
}

/// `H_b(BZ/p)`: `Z` for `b = 0`, `Z/p` for odd `b`, zero otherwise.
pub fn lens_homology(p: u64, b: usize) -> FinAbGroup {
    match b {
        0 => FinAbGroup::free(1),
        b if b % 2 == 1 => FinAbGroup::cyclic(p),
        _ => FinAbGroup::trivial(),
    }
}

/// `H_k(T^r × BZ/p)` by Künneth; torus homology is free so no Tor terms appear.
pub fn homology_torus_lens(r: usize, p: u64, k: usize) -> FinAbGroup {
    let mut total = FinAbGroup::trivial();
    for a in 0..=k.min(r) {
        let copies = binomial(r, a);
        let h = lens_homology(p, k - a);
        for _ in 0..copies {
            total = total.direct_sum(&h);
        }
    }
    total
}
