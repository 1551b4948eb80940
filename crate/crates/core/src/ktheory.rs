//! Coefficient tables of connective and periodic real K-theory, the `ko_*(BZ^n)`
//! module structure away from 2, and the Atiyah–Hirzebruch `E^2` page for `ko_*(BΓ)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_square_free};
use crate::error::{Error, Result};
use crate::group::CrystalGroup;
use crate::homology::{lhs_total_homology, tate_cohomology, with_z2_coefficients, LatticeModule, Parity};
use crate::lattice::FinAbGroup;
use crate::par::{self, Execution};

/// `ko_j(pt)`: `Z, Z/2, Z/2, 0, Z, 0, 0, 0` repeating with period 8; zero for `j < 0`.
pub fn ko_coeff(j: i64) -> FinAbGroup {
    if j < 0 {
        return FinAbGroup::trivial();
    }
    match j % 8 {
        0 | 4 => FinAbGroup::free(1),
        1 | 2 => FinAbGroup::cyclic(2),
        _ => FinAbGroup::trivial(),
    }
}

/// `KO_j(R[Z/p^s])` for an odd prime `p`, 8-periodic in `j`.
pub fn ko_real_group_algebra(p: u64, s: u32, j: i64) -> Result<FinAbGroup> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if s == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, max: 0 });
    }
    let order = p
        .checked_pow(s)
        .ok_or_else(|| Error::Overflow(format!("{p}^{s}")))?;
    let half = usize::try_from((order - 1) / 2).map_err(|_| Error::Overflow(format!("({p}^{s} - 1)/2")))?;
    Ok(match j.rem_euclid(8) {
        0 | 4 => FinAbGroup::free(1 + half),
        1 => FinAbGroup::cyclic(2),
        2 => FinAbGroup::cyclic(2).direct_sum(&FinAbGroup::free(half)),
        6 => FinAbGroup::free(half),
        _ => FinAbGroup::trivial(),
    })
}

/// One summand `Λ^{j-4l}(Z^n)` of `ko_j(BZ^n)` away from 2, with the action of
/// the order-`p` subgroup of `Z/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoBznSummand {
    pub l: usize,
    pub exterior_degree: usize,
    pub module: LatticeModule,
}

/// `ko_j(BZ^n) ≅ ⊕_{l} Λ^{j-4l}(Z^n)` (after inverting 2) as `Z/p`-modules.
pub fn ko_bzn_away_from_p(g: &CrystalGroup, j: usize, p: u64) -> Result<Vec<KoBznSummand>> {
    let m = g.m();
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if !m.is_multiple_of(p) {
        return Err(Error::PrimeDoesNotDivideOrder { p, m });
    }
    let base = LatticeModule::new(g.action().pow(m / p)?, p)?;
    (0..=j / 4)
        .filter(|l| j - 4 * l <= g.n())
        .map(|l| {
            let degree = j - 4 * l;
            Ok(KoBznSummand {
                l,
                exterior_degree: degree,
                module: base.exterior_power(degree)?,
            })
        })
        .collect()
}

/// `E^2_{i,j} = H_i(BΓ; ko_j(pt))` for `i + j <= max_total_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Page {
    pub max_total_degree: usize,
    entries: BTreeMap<(usize, usize), FinAbGroup>,
}

impl E2Page {
    pub fn get(&self, i: usize, j: usize) -> Option<&FinAbGroup> {
        self.entries.get(&(i, j))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &FinAbGroup)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for E2Page {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Grid<'a>(&'a BTreeMap<(usize, usize), FinAbGroup>);
        impl Serialize for Grid<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for ((i, j), g) in self.0 {
                    map.serialize_entry(&format!("{i},{j}"), g)?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("E2Page", 2)?;
        st.serialize_field("max_total_degree", &self.max_total_degree)?;
        st.serialize_field("entries", &Grid(&self.entries))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for E2Page {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct GridVisitor;
        impl<'de> Visitor<'de> for GridVisitor {
            type Value = BTreeMap<(usize, usize), FinAbGroup>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map keyed by \"i,j\"")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((key, group)) = access.next_entry::<String, FinAbGroup>()? {
                    let (i, j) = key
                        .split_once(',')
                        .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
                        .ok_or_else(|| de::Error::custom(format!("bad grid key {key:?}")))?;
                    out.insert((i, j), group);
                }
                Ok(out)
            }
        }
        struct Grid(BTreeMap<(usize, usize), FinAbGroup>);
        impl<'de> Deserialize<'de> for Grid {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                d.deserialize_map(GridVisitor).map(Grid)
            }
        }
        #[derive(Deserialize)]
        struct Raw {
            max_total_degree: usize,
            entries: Grid,
        }
        let raw = Raw::deserialize(d)?;
        Ok(E2Page {
            max_total_degree: raw.max_total_degree,
            entries: raw.entries.0,
        })
    }
}

/// Atiyah–Hirzebruch `E^2` page of `ko_*(BΓ)` up to total degree `bound`, with
/// integral homology from the collapsed LHS spectral sequence.
pub fn ahss_e2(g: &CrystalGroup, bound: i64) -> Result<E2Page> {
    ahss_e2_with(g, bound, Execution::default())
}

pub fn ahss_e2_with(g: &CrystalGroup, bound: i64, exec: Execution) -> Result<E2Page> {
    if bound < 0 {
        return Err(Error::NegativeBound(bound));
    }
    if !is_square_free(g.m()) {
        return Err(Error::NotSquareFree { m: g.m() });
    }
    let bound = bound as usize;
    let homology = par::map_range(exec, bound + 1, |i| lhs_total_homology(g, i as i64))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut entries = BTreeMap::new();
    for i in 0..=bound {
        let mod2 = with_z2_coefficients(&homology[i], i.checked_sub(1).map(|k| &homology[k]));
        for j in 0..=bound - i {
            let coeff = ko_coeff(j as i64);
            let group = if coeff.is_trivial() {
                FinAbGroup::trivial()
            } else if coeff.is_finite() {
                mod2.clone()
            } else {
                homology[i].clone()
            };
            entries.insert((i, j), group);
        }
    }
    Ok(E2Page {
        max_total_degree: bound,
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateEntry {
    /// The Tate degree is `i + 1`.
    pub i: usize,
    pub j: usize,
    pub group: FinAbGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateVanishingReport {
    pub p: u64,
    pub bound: usize,
    pub entries: Vec<TateEntry>,
    /// `Ĥ^{i+1}(Z/p; ko_j(BZ^n))` vanishes for every listed `i + j` even.
    pub vanishing_holds: bool,
}

impl TateVanishingReport {
    pub fn get(&self, i: usize, j: usize) -> Option<&FinAbGroup> {
        self.entries.iter().find(|e| e.i == i && e.j == j).map(|e| &e.group)
    }
}

/// `Ĥ^{i+1}(Z/p; ko_j(BZ^n))` for `i ∈ {0, 1}` and `0 <= j <= bound <= n`.
pub fn tate_vanishing_report(g: &CrystalGroup, p: u64, bound: usize) -> Result<TateVanishingReport> {
    if !g.m().is_multiple_of(p) {
        return Err(Error::PrimeDoesNotDivideOrder { p, m: g.m() });
    }
    if bound > g.n() {
        return Err(Error::DegreeOutOfRange {
            degree: bound as i64,
            max: g.n(),
        });
    }
    let per_j = par::map_range(Execution::default(), bound + 1, |j| -> Result<Vec<TateEntry>> {
        let summands = ko_bzn_away_from_p(g, j, p)?;
        [0usize, 1]
            .into_iter()
            .map(|i| {
                let parity = if i == 0 { Parity::Odd } else { Parity::Even };
                let groups = summands
                    .iter()
                    .map(|s| tate_cohomology(&s.module, parity))
                    .collect::<Result<Vec<_>>>()?;
                Ok(TateEntry {
                    i,
                    j,
                    group: FinAbGroup::sum_all(&groups),
                })
            })
            .collect()
    });
    let mut entries = Vec::new();
    for e in per_j {
        entries.extend(e?);
    }
    entries.sort_by_key(|e| (e.i, e.j));
    let vanishing_holds = entries
        .iter()
        .filter(|e| (e.i + e.j) % 2 == 0)
        .all(|e| e.group.is_trivial());
    Ok(TateVanishingReport {
        p,
        bound,
        entries,
        vanishing_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IntMatrix;

    fn free_z2_z3() -> CrystalGroup {
        CrystalGroup::new(2, 3, IntMatrix::from_i64(&[[0, -1], [1, -1]])).unwrap()
    }

    fn z4_x_z3() -> CrystalGroup {
        CrystalGroup::new(4, 3, IntMatrix::identity(4)).unwrap()
    }

    #[test]
    fn ko_coeff_examples() {
        assert_eq!(ko_coeff(0), FinAbGroup::free(1));
        assert_eq!(ko_coeff(2), FinAbGroup::cyclic(2));
        assert!(ko_coeff(11).is_trivial());
        assert!(ko_coeff(-4).is_trivial());
    }

    #[test]
    fn ko_group_algebra_examples() {
        assert_eq!(ko_real_group_algebra(3, 1, 0).unwrap(), FinAbGroup::free(2));
        assert!(ko_real_group_algebra(3, 1, 3).unwrap().is_trivial());
        assert_eq!(ko_real_group_algebra(5, 1, 6).unwrap(), FinAbGroup::free(2));
        assert_eq!(ko_real_group_algebra(2, 1, 0), Err(Error::NotOddPrime(2)));
        assert_eq!(ko_real_group_algebra(9, 1, 0), Err(Error::NotOddPrime(9)));
    }

    #[test]
    fn ko_bzn_examples() {
        let g = free_z2_z3();
        let s = ko_bzn_away_from_p(&g, 0, 3).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].l, s[0].exterior_degree, s[0].module.rank()), (0, 0, 1));

        let s = ko_bzn_away_from_p(&g, 4, 3).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].l, s[0].exterior_degree), (1, 0));

        let g6 = CrystalGroup::new(6, 3, IntMatrix::identity(6)).unwrap();
        let s = ko_bzn_away_from_p(&g6, 5, 3).unwrap();
        let shape: Vec<_> = s.iter().map(|x| (x.l, x.exterior_degree, x.module.rank())).collect();
        assert_eq!(shape, vec![(0, 5, 6), (1, 1, 6)]);
    }

    #[test]
    fn e2_examples() {
        let g = free_z2_z3();
        let page = ahss_e2(&g, 4).unwrap();
        assert_eq!(page.get(0, 0), Some(&FinAbGroup::free(1)));
        assert_eq!(page.get(1, 0), Some(&FinAbGroup::elementary(3, 2)));
        assert!(page.get(0, 3).unwrap().is_trivial());
        // H_0(Γ; Z/2) = Z/2
        assert_eq!(page.get(0, 1), Some(&FinAbGroup::cyclic(2)));
        assert_eq!(page.len(), 15);

        let only = ahss_e2(&g, 0).unwrap();
        assert_eq!(only.len(), 1);
        assert_eq!(ahss_e2(&g, -1), Err(Error::NegativeBound(-1)));
        let g9 = CrystalGroup::new(2, 9, IntMatrix::from_i64(&[[0, -1], [1, -1]])).unwrap();
        assert_eq!(ahss_e2(&g9, 2), Err(Error::NotSquareFree { m: 9 }));
    }

    #[test]
    fn e2_json_grid() {
        let page = ahss_e2(&free_z2_z3(), 2).unwrap();
        let v = serde_json::to_value(&page).unwrap();
        assert_eq!(v["entries"]["1,0"]["invariant_factors"], serde_json::json!([3, 3]));
        let back: E2Page = serde_json::from_value(v).unwrap();
        assert_eq!(back, page);
    }

    #[test]
    fn tate_report_examples() {
        let r = tate_vanishing_report(&free_z2_z3(), 3, 2).unwrap();
        assert!(r.vanishing_holds);
        for e in &r.entries {
            if (e.i + e.j) % 2 == 0 {
                assert!(e.group.is_trivial());
            }
        }

        let r = tate_vanishing_report(&z4_x_z3(), 3, 4).unwrap();
        assert!(!r.vanishing_holds);
        assert_eq!(r.get(1, 0), Some(&FinAbGroup::cyclic(3)));
        assert_eq!(r.get(1, 1), Some(&FinAbGroup::elementary(3, 4)));

        let r = tate_vanishing_report(&free_z2_z3(), 3, 0).unwrap();
        assert_eq!(r.entries.len(), 2);
        assert!(r.vanishing_holds);

        assert_eq!(
            tate_vanishing_report(&free_z2_z3(), 5, 1),
            Err(Error::PrimeDoesNotDivideOrder { p: 5, m: 3 })
        );
    }
}
