use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finitely generated abelian group `Z^free_rank ⊕ Z/f_1 ⊕ ... ⊕ Z/f_k`
/// with `f_i >= 2` and `f_i | f_{i+1}`.
///
/// The representation is canonical, so structural equality is group isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FinAbGroup {
    pub free_rank: usize,
    #[serde(
        serialize_with = "ser_factors",
        deserialize_with = "de_factors"
    )]
    invariant_factors: Vec<BigUint>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// `Z/order`; order 0 gives `Z` and order 1 the trivial group.
    pub fn cyclic(order: u64) -> Self {
        Self::from_cyclic_orders(0, [BigUint::from(order)])
    }

    /// `(Z/order)^count`.
    pub fn elementary(order: u64, count: usize) -> Self {
        Self::from_cyclic_orders(0, std::iter::repeat_n(BigUint::from(order), count))
    }

    /// Normalizes an arbitrary direct sum of cyclic groups. Orders equal to 0
    /// contribute a free summand, orders equal to 1 vanish.
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigUint>>(free_rank: usize, orders: I) -> Self {
        let mut free_rank = free_rank;
        let mut torsion = Vec::new();
        for o in orders {
            if o.is_zero() {
                free_rank += 1;
            } else if !o.is_one() {
                torsion.push(o);
            }
        }
        FinAbGroup {
            free_rank,
            invariant_factors: normalize_chain(torsion),
        }
    }

    /// Builds a group from signed Smith-diagonal style entries (absolute values used).
    pub fn from_signed_orders<'a, I: IntoIterator<Item = &'a BigInt>>(free_rank: usize, orders: I) -> Self {
        Self::from_cyclic_orders(free_rank, orders.into_iter().map(|x| x.magnitude().clone()))
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.invariant_factors.iter().product()
    }

    /// Number of cyclic summands whose order is divisible by `p`
    /// (the `F_p`-dimension of `G/pG` minus the free rank, for prime `p`).
    pub fn p_rank(&self, p: u64) -> usize {
        let p = BigUint::from(p);
        self.invariant_factors
            .iter()
            .filter(|f| (*f % &p).is_zero())
            .count()
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        Self::from_cyclic_orders(
            self.free_rank + other.free_rank,
            self.invariant_factors
                .iter()
                .chain(&other.invariant_factors)
                .cloned(),
        )
    }

    pub fn sum_all<'a, I: IntoIterator<Item = &'a FinAbGroup>>(groups: I) -> FinAbGroup {
        groups
            .into_iter()
            .fold(FinAbGroup::trivial(), |acc, g| acc.direct_sum(g))
    }

    /// `G ⊗ Z/n`.
    pub fn tensor_cyclic(&self, n: u64) -> FinAbGroup {
        let n = BigUint::from(n);
        let orders = std::iter::repeat_n(n.clone(), self.free_rank)
            .chain(self.invariant_factors.iter().map(|f| f.gcd(&n)));
        Self::from_cyclic_orders(0, orders)
    }

    /// `Tor(G, Z/n)`.
    pub fn tor_cyclic(&self, n: u64) -> FinAbGroup {
        let n = BigUint::from(n);
        Self::from_cyclic_orders(0, self.invariant_factors.iter().map(|f| f.gcd(&n)))
    }
}

/// Turns a list of cyclic orders (each >= 2) into a divisibility chain by
/// repeated (gcd, lcm) exchanges.
fn normalize_chain(mut xs: Vec<BigUint>) -> Vec<BigUint> {
    xs.sort();
    let n = xs.len();
    for i in 0..n {
        for j in i + 1..n {
            if (&xs[j] % &xs[i]).is_zero() {
                continue;
            }
            let g = xs[i].gcd(&xs[j]);
            let l = &xs[i] / &g * &xs[j];
            xs[i] = g;
            xs[j] = l;
        }
    }
    xs.retain(|x| !x.is_one());
    xs
}

fn ser_factors<S: Serializer>(xs: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        match x.to_u64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FactorRepr {
    Num(u64),
    Str(String),
}

fn de_factors<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
    use serde::de::Error as _;
    let raw = Vec::<FactorRepr>::deserialize(d)?;
    let xs = raw
        .into_iter()
        .map(|r| match r {
            FactorRepr::Num(v) => Ok(BigUint::from(v)),
            FactorRepr::Str(s) => s.parse::<BigUint>().map_err(D::Error::custom),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if xs.iter().any(|x| *x < BigUint::from(2u8)) {
        return Err(D::Error::custom("invariant factors must be >= 2"));
    }
    if xs.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
        return Err(D::Error::custom("invariant factors must form a divisibility chain"));
    }
    Ok(xs)
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let x = &self.invariant_factors[i];
            let run = self.invariant_factors[i..].iter().take_while(|y| *y == x).count();
            if run == 1 {
                parts.push(format!("Z/{x}"));
            } else {
                parts.push(format!("(Z/{x})^{run}"));
            }
            i += run;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup({self})")
    }
}
