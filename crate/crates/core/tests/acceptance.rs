//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use glr_core::catalog::{self, random_group, CATALOG};
use glr_core::decomposition::random_unimodular;
use glr_core::homology::{tate_cohomology, LatticeModule, Parity};
use glr_core::lattice::{binomial, cokernel, exterior_power, kernel_saturated, smith_normal_form, subquotient};
use glr_core::{
    build_module, check_counterexample, check_positive, classify, conjugate_random, counterexample_witness,
    decomposition_type, homology_torus_lens, is_free_outside_origin, ko_coeff, ko_real_group_algebra,
    lhs_total_homology, CrystalGroup, DecompositionType, FinAbGroup, IntMatrix, Verdict,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

/// KO_*(R[Z/p^s]) cell by cell against the published table.
fn ac1_ko_table() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for (p, s) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2)] {
        let h = ((p.pow(s) - 1) / 2) as usize;
        let z2 = FinAbGroup::cyclic(2);
        let expected = [
            FinAbGroup::free(1 + h),
            z2.clone(),
            z2.direct_sum(&FinAbGroup::free(h)),
            FinAbGroup::trivial(),
            FinAbGroup::free(1 + h),
            FinAbGroup::trivial(),
            FinAbGroup::free(h),
            FinAbGroup::trivial(),
        ];
        for (deg, want) in expected.iter().enumerate() {
            let got = ko_real_group_algebra(p, s, deg as i64).map_err(|e| e.to_string())?;
            ensure(&got == want, || format!("KO_{deg}(R[Z/{p}^{s}]) = {got}, expected {want}"))?;
            cells += 1;
        }
    }
    ensure(cells == 32, || format!("{cells} cells"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{cells} cells exact in {:?}", start.elapsed()))
}

fn ac2_decomposition_round_trip() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut done = 0;
    while done < 100 {
        let p = [3u64, 5, 7][rng.random_range(0..3)];
        let d = DecompositionType::new(p, rng.random_range(0..=6), rng.random_range(0..=2), rng.random_range(0..=2));
        if !(1..=10).contains(&d.rank()) {
            continue;
        }
        let seed: u64 = rng.random();
        let m = conjugate_random(&build_module(&d), seed);
        let got = decomposition_type(&m).map_err(|e| format!("{d:?} seed {seed}: {e}"))?;
        ensure(got == d, || format!("seed {seed}: expected {d:?}, got {got:?}"))?;
        done += 1;
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{done} pairs exact in {:?}", start.elapsed()))
}

fn ac3_tate_vanishing() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for name in ["free-z2-z3", "free-z6-z7"] {
        let g = catalog::lookup(name).unwrap().group();
        ensure(is_free_outside_origin(&g), || format!("{name} not free"))?;
        let p = g.m();
        let base = LatticeModule::new(g.action().clone(), p).map_err(|e| e.to_string())?;
        for j in 0..=g.n() {
            let lam = base.exterior_power(j).map_err(|e| e.to_string())?;
            for i in 0..=1usize {
                if (i + j) % 2 != 0 {
                    continue;
                }
                // Ĥ^{i+1}: i = 0 is odd Tate degree, i = 1 is even.
                let parity = if i == 0 { Parity::Odd } else { Parity::Even };
                let h = tate_cohomology(&lam, parity).map_err(|e| e.to_string())?;
                ensure(h.is_trivial(), || format!("{name}: Ĥ^{}(Z/{p}; Λ^{j}) = {h}", i + 1))?;
                checked += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{checked} Tate groups vanish in {:?}", start.elapsed()))
}

fn test_groups(seed: u64, count: usize) -> Vec<(String, CrystalGroup)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    CATALOG
        .iter()
        .map(|e| (e.name.to_string(), e.group()))
        .chain((0..count).map(|k| (format!("random #{k}"), random_group(&mut rng))))
        .collect()
}

fn prime_divisors(m: u64) -> Vec<u64> {
    (2..=m).filter(|&p| m.is_multiple_of(p) && (2..p).all(|d| p % d != 0)).collect()
}

fn ac4_disjointness() -> Outcome {
    let groups = test_groups(404, 200);
    let mut free_count = 0;
    for (name, g) in &groups {
        ensure(!(check_positive(g) && check_counterexample(g).is_some()), || {
            format!("{name}: both criteria hold")
        })?;
        if !is_free_outside_origin(g) {
            continue;
        }
        free_count += 1;
        for p in prime_divisors(g.m()) {
            let action = g.action().pow(g.m() / p).map_err(|e| e.to_string())?;
            // fixed rank = r + s, so a zero fixed lattice means r = s = 0.
            let fixed = kernel_saturated(&action.minus_identity().unwrap()).cols();
            ensure(fixed == 0, || format!("{name}: fixed rank {fixed} at p = {p}"))?;
            if p % 2 == 1 {
                let d = decomposition_type(&LatticeModule::new(action, p).unwrap()).map_err(|e| e.to_string())?;
                ensure(d.r == 0 && d.s == 0, || format!("{name}: type {d:?} at p = {p}"))?;
            }
        }
    }
    Ok(format!("{} groups, {free_count} free, no overlap", groups.len()))
}

fn ac5_degree_one_oracle() -> Outcome {
    let groups = test_groups(505, 100);
    for (name, g) in &groups {
        // Abelianized presentation <e_1..e_n, t | t e t^-1 = A e, t^m = 1, [e_i, e_j]>:
        // relation matrix diag(A - I, m).
        let m = IntMatrix::from_rows(&[[g.m() as i64]]).unwrap();
        let relations = IntMatrix::block_diag([&g.action().minus_identity().unwrap(), &m]);
        let expected = cokernel(&relations);
        let got = lhs_total_homology(g, 1).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("{name}: H_1 = {got}, abelianization {expected}"))?;
    }
    Ok(format!("{} groups agree", groups.len()))
}

/// `H_k(T^r × BZ/p)` from the tensor product of cellular chain complexes.
fn kunneth_chain_oracle(r: usize, p: i64, k: usize) -> FinAbGroup {
    let blocks = |deg: usize| -> Vec<(usize, usize, usize)> {
        // (a, b, offset) with a + b = deg
        let mut out = Vec::new();
        let mut off = 0;
        for a in 0..=deg.min(r) {
            out.push((a, deg - a, off));
            off += binomial(r, a);
        }
        out
    };
    let dim = |deg: usize| blocks(deg).iter().map(|&(a, _, _)| binomial(r, a)).sum::<usize>();
    let boundary = |deg: usize| -> IntMatrix {
        if deg == 0 {
            return IntMatrix::zeros(0, dim(0));
        }
        let mut d = IntMatrix::zeros(dim(deg - 1), dim(deg));
        let targets = blocks(deg - 1);
        for (a, b, off) in blocks(deg) {
            // lens differential L_b -> L_{b-1}: 0 for odd b, p for even b >= 2
            if b == 0 || b % 2 == 1 {
                continue;
            }
            let &(_, _, toff) = targets.iter().find(|&&(ta, _, _)| ta == a).unwrap();
            let sign = if a % 2 == 0 { 1 } else { -1 };
            for x in 0..binomial(r, a) {
                d.set(toff + x, off + x, BigInt::from(sign * p));
            }
        }
        d
    };
    subquotient(&boundary(k), &boundary(k + 1)).unwrap()
}

fn ac6_witness() -> Outcome {
    let g = catalog::lookup("schick-like-z6-z3").unwrap().group();
    let status = classify(&g);
    ensure(status.verdict == Verdict::Counterexample, || format!("verdict {:?}", status.verdict))?;
    let w = status.witness.ok_or("missing witness")?;
    ensure(w.p == 3 && w.decomposition == DecompositionType::new(3, 4, 0, 1), || {
        format!("witness {w:?}")
    })?;
    let report = counterexample_witness(&g, 3).map_err(|e| e.to_string())?;
    ensure(report.h1_free_rank == 4, || format!("h1_free_rank {}", report.h1_free_rank))?;
    ensure(report.h1_p_torsion_present, || "no 3-torsion in H_1".into())?;
    let certificate = homology_torus_lens(4, 3, 5);
    let oracle = kunneth_chain_oracle(4, 3, 5);
    ensure(certificate == FinAbGroup::elementary(3, 8), || format!("certificate {certificate}"))?;
    ensure(certificate == oracle, || format!("certificate {certificate}, chain oracle {oracle}"))?;
    ensure(report.h5_torsion_certificate == certificate, || "report certificate differs".into())?;
    for k in 0..=8 {
        let (a, b) = (homology_torus_lens(4, 3, k), kunneth_chain_oracle(4, 3, k));
        ensure(a == b, || format!("H_{k}: Künneth {a}, chain oracle {b}"))?;
    }
    Ok(format!("Counterexample(3, (4,0,1)), H_1 free rank 4, H_5(T^4 × BZ/3) = {certificate}"))
}

fn ac7_smith_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    for k in 0..500 {
        let (r, c) = (rng.random_range(0..=8), rng.random_range(0..=8));
        let xs: Vec<BigInt> = (0..r * c).map(|_| BigInt::from(rng.random_range(-9i64..=9))).collect();
        let a = IntMatrix::new(r, c, xs).unwrap();
        let s = smith_normal_form(&a);
        ensure(&(&s.u * &a) * &s.v == s.d, || format!("matrix {k}: U·A·V != D"))?;
        ensure(s.u.det().unwrap().abs().is_one() && s.v.det().unwrap().abs().is_one(), || {
            format!("matrix {k}: not unimodular")
        })?;
        for i in 0..r {
            for j in 0..c {
                ensure(i == j || s.d.get(i, j).is_zero(), || format!("matrix {k}: off-diagonal"))?;
            }
        }
        let diag: Vec<BigInt> = (0..r.min(c)).map(|i| s.d.get(i, i).clone()).collect();
        ensure(diag.iter().all(|d| !d.is_negative()), || format!("matrix {k}: negative diagonal"))?;
        for w in diag.windows(2) {
            ensure(w[1].is_multiple_of(&w[0]) || w[0].is_zero() && w[1].is_zero(), || {
                format!("matrix {k}: divisibility chain broken at {} | {}", w[0], w[1])
            })?;
        }
    }
    for k in 0..50 {
        let n = rng.random_range(1..=6);
        let (a, _) = random_unimodular(n, &mut rng);
        let (b, _) = random_unimodular(n, &mut rng);
        for deg in 0..=n {
            let lhs = exterior_power(&(&a * &b), deg).unwrap();
            let rhs = &exterior_power(&a, deg).unwrap() * &exterior_power(&b, deg).unwrap();
            ensure(lhs == rhs, || format!("pair {k}: Λ^{deg} not functorial"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("500 Smith forms, 50 functoriality pairs in {:?}", start.elapsed()))
}

fn ac8_ko_coefficients() -> Outcome {
    for j in 0..32i64 {
        let expected = match j % 8 {
            3 | 5 | 6 | 7 => FinAbGroup::trivial(),
            0 | 4 => FinAbGroup::free(1),
            _ => FinAbGroup::cyclic(2),
        };
        let got = ko_coeff(j);
        ensure(got == expected, || format!("ko_{j} = {got}, expected {expected}"))?;
        ensure(got == ko_coeff(j + 8), || format!("ko_{j} != ko_{}", j + 8))?;
    }
    Ok("j = 0..31 exact, 8-periodic".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 KO table of R[Z/p^s]", ac1_ko_table),
        ("AC2 decomposition round trip", ac2_decomposition_round_trip),
        ("AC3 Tate vanishing for free actions", ac3_tate_vanishing),
        ("AC4 disjointness of verdicts", ac4_disjointness),
        ("AC5 degree-1 homology oracle", ac5_degree_one_oracle),
        ("AC6 counterexample witness certificate", ac6_witness),
        ("AC7 Smith form property suite", ac7_smith_suite),
        ("AC8 ko coefficient table", ac8_ko_coefficients),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
