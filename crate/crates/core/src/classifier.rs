//! Positive and negative criteria for the Gromov–Lawson–Rosenberg conjecture on
//! split crystallographic groups `Z^n ⋊ Z/m`.
//!
//! * Positive: `m` odd, `m >= 3`, and the action is free outside the origin.
//!   Then every closed spin manifold of the relevant dimensions with this
//!   fundamental group and vanishing index obstruction carries positive scalar
//!   curvature.
//! * Negative: `m` odd and square-free, and some prime `p | m` gives a type
//!   `(r, s, t)` with `r >= 4` and `s + t >= 1`. Then the group is a counterexample.
//!
//! A counterexample verdict additionally needs four free classes in `H_1(Γ)`,
//! which the argument pairs with `p`-torsion to build a class in `H_5(Γ)`.
//!
//! Groups matching neither criterion are `Unknown`; results from the literature
//! outside these two criteria are never used for a verdict.

use serde::{Deserialize, Serialize};

use crate::arith::{is_square_free, prime_divisors};
use crate::decomposition::{decomposition_type, sylow_restriction, DecompositionType};
use crate::error::{Error, Result};
use crate::group::{is_free_outside_origin, CrystalGroup};
use crate::homology::{homology_torus_lens, lhs_total_homology};
use crate::lattice::FinAbGroup;
use crate::par::{self, Execution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    PositivePSC,
    Counterexample,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl HypothesisCheck {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        HypothesisCheck {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub p: u64,
    pub decomposition: DecompositionType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlrStatus {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub reasons: Vec<HypothesisCheck>,
}

/// Homological certificate attached to a counterexample at prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub p: u64,
    pub h1_free_rank: usize,
    pub h1_p_torsion_present: bool,
    /// `H_5(T^4 × BZ/p)`, which contains the product class `x_1 × ... × x_4 × y`.
    pub h5_torsion_certificate: FinAbGroup,
}

pub fn check_positive(g: &CrystalGroup) -> bool {
    g.m() % 2 == 1 && g.m() >= 3 && is_free_outside_origin(g)
}

fn qualifies(d: &DecompositionType) -> bool {
    d.r >= 4 && d.s + d.t >= 1
}

/// Types at every prime divisor of `m`, ascending; `None` when `m` is not odd
/// and square-free.
fn prime_types(g: &CrystalGroup, exec: Execution) -> Option<Vec<(u64, Result<DecompositionType>)>> {
    let m = g.m();
    if m.is_multiple_of(2) || !is_square_free(m) {
        return None;
    }
    let primes = prime_divisors(m);
    Some(
        par::map_slice(exec, &primes, |&p| {
            (p, sylow_restriction(g, p).and_then(|module| decomposition_type(&module)))
        }),
    )
}

/// First prime `p | m` (ascending) whose type has `r >= 4` and `s + t >= 1`.
pub fn check_counterexample(g: &CrystalGroup) -> Option<(u64, DecompositionType)> {
    prime_types(g, Execution::default())?
        .into_iter()
        .find_map(|(p, d)| d.ok().filter(qualifies).map(|d| (p, d)))
}

pub fn classify(g: &CrystalGroup) -> GlrStatus {
    classify_with(g, Execution::default())
}

pub fn classify_with(g: &CrystalGroup, exec: Execution) -> GlrStatus {
    let m = g.m();
    let odd = m % 2 == 1;
    let square_free = is_square_free(m);
    let free = is_free_outside_origin(g);

    let mut reasons = vec![
        HypothesisCheck::new("m is odd", odd, format!("m = {m}")),
        HypothesisCheck::new("m >= 3", m >= 3, format!("m = {m}")),
        HypothesisCheck::new(
            "m is square-free",
            square_free,
            format!("prime divisors {:?}", prime_divisors(m)),
        ),
        HypothesisCheck::new(
            "action free outside the origin",
            free,
            if free {
                "det(A^k - I) != 0 for 1 <= k < m".to_string()
            } else {
                "some A^k - I with 1 <= k < m is singular".to_string()
            },
        ),
    ];

    let mut hit = None;
    match prime_types(g, exec) {
        None => reasons.push(HypothesisCheck::new(
            "per-prime decomposition",
            false,
            "requires odd square-free m",
        )),
        Some(types) => {
            for (p, d) in types {
                let name = format!("type at p = {p} has r >= 4 and s + t >= 1");
                match d {
                    Ok(d) => {
                        let ok = qualifies(&d);
                        if ok && hit.is_none() {
                            hit = Some(Witness { p, decomposition: d });
                        }
                        reasons.push(HypothesisCheck::new(
                            name,
                            ok,
                            format!("(r, s, t) = ({}, {}, {})", d.r, d.s, d.t),
                        ));
                    }
                    Err(e) => reasons.push(HypothesisCheck::new(name, false, e.to_string())),
                }
            }
        }
    }

    // The counterexample argument builds classes from four free generators of
    // H_1(Γ); when Z/m acts nontrivially on the p-trivial part they may not exist.
    if let Some(w) = &hit {
        let passed = match lhs_total_homology(g, 1) {
            Ok(h1) => {
                let ok = h1.free_rank >= 4;
                reasons.push(HypothesisCheck::new(
                    "H_1(Γ) has free rank >= 4",
                    ok,
                    format!("H_1 = {h1}"),
                ));
                ok
            }
            Err(e) => {
                reasons.push(HypothesisCheck::new("H_1(Γ) has free rank >= 4", false, e.to_string()));
                false
            }
        };
        if !passed {
            reasons.push(HypothesisCheck::new(
                format!("witness classes at p = {}", w.p),
                false,
                "type condition holds but Z/m acts nontrivially on the trivial summands",
            ));
            hit = None;
        }
    }

    let positive = odd && m >= 3 && free;
    let (verdict, witness) = if positive {
        (Verdict::PositivePSC, None)
    } else if let Some(w) = hit {
        (Verdict::Counterexample, Some(w))
    } else {
        (Verdict::Unknown, None)
    };
    GlrStatus {
        verdict,
        witness,
        reasons,
    }
}

/// Classifies many groups; output order matches input order.
pub fn classify_batch(groups: &[CrystalGroup], exec: Execution) -> Vec<GlrStatus> {
    par::map_slice(exec, groups, |g| classify_with(g, Execution::Sequential))
}

pub fn counterexample_witness(g: &CrystalGroup, p: u64) -> Result<WitnessReport> {
    let found = prime_types(g, Execution::default())
        .and_then(|types| types.into_iter().find(|(q, _)| *q == p))
        .and_then(|(_, d)| d.ok())
        .filter(qualifies);
    if found.is_none() {
        return Err(Error::NotACounterexample { p });
    }
    let h1 = lhs_total_homology(g, 1)?;
    if h1.free_rank < 4 {
        return Err(Error::WitnessUnavailable {
            p,
            detail: format!("H_1 = {h1} has free rank below 4"),
        });
    }
    Ok(WitnessReport {
        p,
        h1_free_rank: h1.free_rank,
        h1_p_torsion_present: h1.p_rank(p) > 0,
        h5_torsion_certificate: homology_torus_lens(4, p, 5),
    })
}
