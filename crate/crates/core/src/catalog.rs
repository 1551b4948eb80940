//! Bundled reference groups and a seeded sampler of random valid groups.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::decomposition::random_unimodular;
use crate::group::{CrystalGroup, GroupDescriptor};
use crate::homology::cyclic_permutation;
use crate::lattice::IntMatrix;

/// Coefficients (constant term first) of the `d`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(d: usize) -> Vec<i64> {
    assert!(d >= 1);
    // x^d - 1 divided by every Φ_e with e | d, e < d.
    let mut num = vec![0i64; d + 1];
    num[0] = -1;
    num[d] = 1;
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        num = exact_div(&num, &cyclotomic_polynomial(e));
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let qlen = num.len() - dd;
    let mut q = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd] / lead;
        q[k] = c;
        for (i, &b) in den.iter().enumerate() {
            rem[k + i] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

/// Companion matrix of a monic polynomial (coefficients constant term first).
pub fn companion(poly: &[i64]) -> IntMatrix {
    let n = poly.len() - 1;
    let mut a = IntMatrix::zeros(n, n);
    for i in 1..n {
        a.set(i, i - 1, 1.into());
    }
    for (i, c) in poly[..n].iter().enumerate() {
        a.set(i, n - 1, (-c).into());
    }
    a
}

/// An action of order exactly `d` whose only fixed vector is 0: the companion
/// matrix of `Φ_d`.
pub fn cyclotomic_block(d: usize) -> IntMatrix {
    companion(&cyclotomic_polynomial(d))
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn() -> (u64, IntMatrix),
}

impl CatalogEntry {
    pub fn group(&self) -> CrystalGroup {
        let (m, a) = (self.build)();
        CrystalGroup::new(a.rows(), m, a).expect("catalog entries are valid")
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::from_group(Some(self.name.to_string()), &self.group()).expect("small entries")
    }
}

fn ident_plus(extra: IntMatrix, ones: usize) -> IntMatrix {
    IntMatrix::block_diag([&IntMatrix::identity(ones), &extra])
}

pub static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "z4-x-z3",
        summary: "Z^4 x Z/3, trivial action (outside both criteria)",
        build: || (3, IntMatrix::identity(4)),
    },
    CatalogEntry {
        name: "free-z2-z3",
        summary: "Z^2 x| Z/3 by the order-3 rotation, free outside the origin",
        build: || (3, cyclotomic_block(3)),
    },
    CatalogEntry {
        name: "schick-like-z6-z3",
        summary: "Z^6 x| Z/3 with type (4,0,1): four trivial summands plus the augmentation ideal",
        build: || (3, ident_plus(cyclotomic_block(3), 4)),
    },
    CatalogEntry {
        name: "free-z6-z7",
        summary: "Z^6 x| Z/7 by the companion of 1 + x + ... + x^6, free outside the origin",
        build: || (7, cyclotomic_block(7)),
    },
    CatalogEntry {
        name: "regular-z3",
        summary: "Z^3 x| Z/3 by the cyclic permutation (regular representation)",
        build: || (3, cyclic_permutation(3)),
    },
    CatalogEntry {
        name: "free-z4-z5",
        summary: "Z^4 x| Z/5 by the companion of 1 + x + ... + x^4, free outside the origin",
        build: || (5, cyclotomic_block(5)),
    },
    CatalogEntry {
        name: "free-z8-z15",
        summary: "Z^8 x| Z/15 by the companion of the 15th cyclotomic polynomial",
        build: || (15, cyclotomic_block(15)),
    },
    CatalogEntry {
        name: "z4-plus-regular-z3",
        summary: "Z^7 x| Z/3 with type (4,1,0)",
        build: || (3, ident_plus(cyclic_permutation(3), 4)),
    },
    CatalogEntry {
        name: "schick-like-z6-z15",
        summary: "Z^6 x| Z/15 through a non-faithful order-3 action, type (4,0,1) at p = 3",
        build: || (15, ident_plus(cyclotomic_block(3), 4)),
    },
    CatalogEntry {
        name: "free-z6-z9",
        summary: "Z^6 x| Z/9 by the companion of the 9th cyclotomic polynomial (m not square-free)",
        build: || (9, cyclotomic_block(9)),
    },
    CatalogEntry {
        name: "sign-z1-z2",
        summary: "Z x| Z/2 by x -> -x (even order)",
        build: || (2, IntMatrix::from_i64(&[[-1]])),
    },
];

pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

const ORDERS: &[u64] = &[1, 2, 3, 3, 3, 5, 6, 7, 9, 15, 15, 21];
const MAX_RANK: usize = 10;

/// Candidate blocks whose order divides `m`.
fn blocks_for(m: u64) -> Vec<IntMatrix> {
    let mut out = vec![IntMatrix::identity(1)];
    for d in (2..=m as usize).filter(|d| m.is_multiple_of(*d as u64)) {
        let phi = cyclotomic_block(d);
        if phi.rows() <= MAX_RANK {
            out.push(phi);
        }
        if d <= MAX_RANK && crate::arith::is_prime(d as u64) {
            out.push(cyclic_permutation(d));
        }
    }
    out
}

/// A random valid group: a block sum of trivial, regular and cyclotomic
/// blocks with orders dividing `m`, conjugated by a random unimodular matrix.
pub fn random_group<R: Rng>(rng: &mut R) -> CrystalGroup {
    let m = *ORDERS.choose(rng).expect("nonempty");
    let candidates = blocks_for(m);
    let mut blocks: Vec<IntMatrix> = Vec::new();
    let mut n = 0;
    // Four trivial summands up front make the counterexample criterion reachable.
    if rng.random_bool(0.35) {
        blocks.push(IntMatrix::identity(4));
        n = 4;
    }
    let want = rng.random_range(1..=5);
    for _ in 0..want {
        let b = candidates.choose(rng).expect("nonempty");
        if n + b.rows() > MAX_RANK {
            continue;
        }
        n += b.rows();
        blocks.push(b.clone());
    }
    if blocks.is_empty() {
        blocks.push(IntMatrix::identity(1));
    }
    let a = IntMatrix::block_diag(&blocks);
    let (u, u_inv) = random_unimodular(a.rows(), rng);
    let a = &(&u * &a) * &u_inv;
    CrystalGroup::new(a.rows(), m, a).expect("block sum of finite-order blocks")
}
