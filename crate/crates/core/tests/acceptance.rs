//! Acceptance criteria for the toolkit, one line of output per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the verdict lines are
//! always printed; exits nonzero if any criterion fails.

use std::collections::{BTreeMap, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use qctw_core::code::{grey_rankin_bound, is_projective, is_self_complementary, is_two_weight};
use qctw_core::constructions::{
    build_self_complementary_minus, build_self_complementary_plus, build_two_weight,
    default_multipliers, gr_params, GrVariant, MultiplierSet,
};
use qctw_core::poly::{find_simplex_generators, simplex_length};
use qctw_core::qc::{circulant, circulant_of_product, row_shift_invariance_witness, CirculantSpec};
use qctw_core::{FieldSpec, LinearCode, Polynomial, WeightDistribution};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gf(q: u32) -> FieldSpec {
    FieldSpec::new(q).unwrap()
}

fn example1_g1() -> Polynomial {
    // x^4 + x^2 + x + 1
    Polynomial::from_coeffs(gf(2), &[1, 1, 1, 0, 1])
}

fn example2_g1() -> Polynomial {
    // x^10 - x^9 + x^8 - x^6 - x^5 + x^4 + x^3 + x^2 + 1
    Polynomial::from_coeffs(gf(3), &[1, 0, 1, 1, 1, -1, -1, 0, 1, -1, 1])
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let elapsed = start.elapsed();
    if elapsed > limit {
        return Err(format!("took {elapsed:?}, limit {limit:?}"));
    }
    Ok(format!("{:.3}s", elapsed.as_secs_f64()))
}

/// Every word a(x) g(x) mod x^m - 1 with deg a < k, by schoolbook
/// convolution; independent of the library's matrix and enumeration code.
fn cyclic_code_words(g: &[u8], m: usize, k: usize, q: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let total = (q as usize).pow(k as u32);
    for idx in 0..total {
        let mut a = vec![0u8; k];
        let mut rest = idx;
        for c in a.iter_mut() {
            *c = (rest % q as usize) as u8;
            rest /= q as usize;
        }
        let mut w = vec![0u8; m];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &gj) in g.iter().enumerate() {
                w[(i + j) % m] = ((w[(i + j) % m] as u16 + ai as u16 * gj as u16) % q as u16) as u8;
            }
        }
        out.push(w);
    }
    out
}

/// Weight distribution of the code {(A, A + B) : A, B in the cyclic code of g},
/// the two-block construction with multipliers (0, 1).
fn two_block_oracle(g: &[u8], m: usize, k: usize, q: u8) -> BTreeMap<usize, u64> {
    let words = cyclic_code_words(g, m, k, q);
    let mut seen = HashSet::new();
    let mut dist = BTreeMap::new();
    for a in &words {
        for b in &words {
            let mut w = a.clone();
            w.extend(a.iter().zip(b).map(|(&x, &y)| (x + y) % q));
            if seen.insert(w.clone()) {
                *dist.entry(w.iter().filter(|&&c| c != 0).count()).or_insert(0u64) += 1;
            }
        }
    }
    dist
}

fn criterion_table1() -> Outcome {
    let start = Instant::now();
    let f = gf(2);
    let rows: [(usize, usize, u32, usize, usize, usize); 13] = [
        (3, 7, 3, 8, 8, 12),
        (4, 7, 3, 12, 12, 16),
        (5, 7, 3, 16, 16, 20),
        (6, 7, 3, 20, 20, 24),
        (7, 7, 3, 24, 24, 28),
        (8, 7, 3, 28, 28, 32),
        (10, 15, 4, 72, 72, 80),
        (11, 15, 4, 80, 80, 88),
        (12, 15, 4, 88, 88, 96),
        (13, 15, 4, 96, 96, 104),
        (14, 15, 4, 104, 104, 112),
        (15, 15, 4, 112, 112, 120),
        (16, 15, 4, 120, 120, 128),
    ];
    let g1_k4 = find_simplex_generators(f, 4).map_err(|e| e.to_string())?.remove(0);
    for (p, m, k, d, w1, w2) in rows {
        let g1 = if k == 3 { example1_g1() } else { g1_k4.clone() };
        let code = build_two_weight(&g1, k, &default_multipliers(f, k, p).unwrap())
            .map_err(|e| format!("p={p}: {e}"))?;
        let dist = code.weight_distribution().unwrap();
        ensure!(code.length() == p * m, "p={p}: n = {} != {}", code.length(), p * m);
        ensure!(code.dimension() == 2 * k as usize, "p={p}: k = {}", code.dimension());
        ensure!(dist.min_nonzero() == Some(d), "p={p}: d = {:?} != {d}", dist.min_nonzero());
        ensure!(is_two_weight(&dist) == Some((w1, w2)), "p={p}: weights {:?}", dist.nonzero_weights());
    }
    within(Duration::from_secs(5), start).map(|t| format!("13/13 rows exact, {t}"))
}

fn criterion_example1() -> Outcome {
    let start = Instant::now();
    let f = gf(2);
    let g1 = example1_g1();
    let expected = [(14, 4, 8), (21, 8, 12), (28, 12, 16), (35, 16, 20), (42, 20, 24), (49, 24, 28), (56, 28, 32)];
    for (p, (n, w1, w2)) in (2..=8).zip(expected) {
        let code = build_two_weight(&g1, 3, &default_multipliers(f, 3, p).unwrap())
            .map_err(|e| format!("p={p}: {e}"))?;
        let dist = code.weight_distribution().unwrap();
        ensure!(
            (code.length(), code.dimension(), is_two_weight(&dist)) == (n, 6, Some((w1, w2))),
            "p={p}: measured n={} k={} weights {:?}",
            code.length(),
            code.dimension(),
            dist.nonzero_weights()
        );
    }
    // Frozen after confirming with the oracle below: 1 + 14 + 49 = 64.
    let frozen = WeightDistribution::from_counts([(0, 1), (4, 14), (8, 49)]);
    let oracle = two_block_oracle(&[1, 1, 1, 0, 1], 7, 3, 2);
    ensure!(oracle == *frozen.counts(), "oracle distribution {oracle:?} != frozen {frozen}");
    let code = build_two_weight(&g1, 3, &default_multipliers(f, 3, 2).unwrap()).unwrap();
    let dist = code.weight_distribution().unwrap();
    ensure!(dist == frozen, "[14, 6] distribution {dist} != {frozen}");
    within(Duration::from_secs(1), start).map(|t| format!("7/7 codes, [14,6] = {frozen}, {t}"))
}

fn criterion_example2() -> Outcome {
    let start = Instant::now();
    let f = gf(3);
    let g1 = example2_g1();
    let m = simplex_length(3, 3) as usize;
    let displayed = [("0;1,0", 26, 9, 18), ("0;1,0;2,0", 39, 18, 27)];
    for (spec, n, w1, w2) in displayed {
        let set = MultiplierSet::parse(f, m, spec).unwrap();
        let code = build_two_weight(&g1, 3, &set).map_err(|e| format!("{spec}: {e}"))?;
        let dist = code.weight_distribution().unwrap();
        ensure!(
            (code.length(), code.dimension(), is_two_weight(&dist)) == (n, 6, Some((w1, w2))),
            "{spec}: measured n={} k={} weights {:?}",
            code.length(),
            code.dimension(),
            dist.nonzero_weights()
        );
    }
    // Exact [26, 6] counts, frozen after the independent enumeration agreed.
    let frozen = WeightDistribution::from_counts([(0, 1), (9, 52), (18, 676)]);
    let oracle = two_block_oracle(example2_g1().coeffs(), m, 3, 3);
    ensure!(oracle == *frozen.counts(), "oracle {oracle:?} != frozen {frozen}");
    let code = build_two_weight(&g1, 3, &MultiplierSet::parse(f, m, "0;1,0").unwrap()).unwrap();
    ensure!(code.weight_distribution().unwrap() == frozen, "[26, 6] distribution mismatch");

    let mut used = Vec::new();
    for (p, n, d) in [(15, 195, 126), (16, 208, 135), (17, 221, 144)] {
        let set = default_multipliers(f, 3, p).unwrap();
        let code = build_two_weight(&g1, 3, &set).map_err(|e| format!("p={p} with {set}: {e}"))?;
        let dist = code.weight_distribution().unwrap();
        ensure!(
            (code.length(), code.dimension(), dist.min_nonzero()) == (n, 6, Some(d)),
            "p={p}: measured [{}, {}, {:?}]",
            code.length(),
            code.dimension(),
            dist.min_nonzero()
        );
        used.push(format!("p={p}:default"));
    }
    within(Duration::from_secs(2), start).map(|t| format!("5/5 codes ({}), {t}", used.join(" ")))
}

fn criterion_grey_rankin() -> Outcome {
    let start = Instant::now();
    let f = gf(2);
    let cases = [
        (GrVariant::Minus, 2, (6, 5, 2)),
        (GrVariant::Minus, 3, (28, 7, 12)),
        (GrVariant::Minus, 4, (120, 9, 56)),
        (GrVariant::Minus, 5, (496, 11, 240)),
        (GrVariant::Plus, 3, (36, 7, 16)),
        (GrVariant::Plus, 4, (136, 9, 64)),
        (GrVariant::Plus, 5, (528, 11, 256)),
    ];
    for (variant, t, (n, k, d)) in cases {
        ensure!(gr_params(t, variant) == (n as u64, k as u32, d as u64), "{variant} t={t}: formula mismatch");
        let g1 = find_simplex_generators(f, t).unwrap().remove(0);
        let code = match variant {
            GrVariant::Minus => build_self_complementary_minus(&g1, t),
            GrVariant::Plus => build_self_complementary_plus(&g1, t),
        }
        .map_err(|e| format!("{variant} t={t}: {e}"))?;
        let measured_d = code.min_distance().unwrap();
        ensure!(
            (code.length(), code.dimension(), measured_d) == (n, k, d),
            "{variant} t={t}: measured [{}, {}, {measured_d}]",
            code.length(),
            code.dimension()
        );
        ensure!(is_self_complementary(&code).unwrap(), "{variant} t={t}: not self-complementary");
        let bound = grey_rankin_bound(n, d).unwrap();
        // q^k * (n - (n - 2d)^2) == 8 d (n - d), exactly.
        ensure!(bound.met_by(code.size()), "{variant} t={t}: 2^{k} != {bound}");
    }
    println!("  NOTE plus t=4: construction length 136 vs cited length 135");
    within(Duration::from_secs(10), start).map(|t| format!("7/7 codes self-complementary and bound-tight, {t}"))
}

/// Counts monic g of degree m - k whose cyclic code (all a(x) g(x) mod
/// x^m - 1, deg a < k) has q^k distinct words, is shift-closed, and is
/// equidistant with weight q^(k-1).
fn brute_force_simplex_count(q: u32, k: u32) -> usize {
    let m = simplex_length(q, k) as usize;
    let deg = m - k as usize;
    let qq = q as u8;
    (0..(q as usize).pow(deg as u32))
        .filter(|&idx| {
            let mut g: Vec<u8> = (0..deg).map(|i| ((idx / (q as usize).pow(i as u32)) % q as usize) as u8).collect();
            g.push(1);
            let words = cyclic_code_words(&g, m, k as usize, qq);
            let set: HashSet<Vec<u8>> = words.iter().cloned().collect();
            let shift_closed = words.iter().all(|w| {
                let mut r = w.clone();
                r.rotate_right(1);
                set.contains(&r)
            });
            set.len() == words.len()
                && shift_closed
                && words
                    .iter()
                    .filter(|w| w.iter().any(|&c| c != 0))
                    .all(|w| w.iter().filter(|&&c| c != 0).count() == (q as usize).pow(k - 1))
        })
        .count()
}

fn criterion_simplex() -> Outcome {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for (q, k) in [(2u32, 2u32), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)] {
        let f = gf(q);
        let gens = match find_simplex_generators(f, k) {
            Ok(g) => g,
            Err(e) => {
                let witnesses = brute_force_simplex_count(q, k);
                failures.push(format!(
                    "(q={q}, k={k}): {e}; brute force over all monic degree-{} polynomials finds {witnesses} cyclic simplex generators",
                    simplex_length(q, k) - u64::from(k)
                ));
                continue;
            }
        };
        let m = simplex_length(q, k) as usize;
        let weight = (q as usize).pow(k - 1);
        for g in &gens {
            let code = LinearCode::from_generator(circulant(&CirculantSpec::new(g.clone(), m).unwrap())).unwrap();
            let dist = code.weight_distribution().unwrap();
            let want = WeightDistribution::from_counts([(0, 1), (weight, (q as u64).pow(k) - 1)]);
            if code.dimension() != k as usize || dist != want {
                failures.push(format!("(q={q}, k={k}): {} not equidistant: {dist}", g.to_text()));
            }
        }
        summary.push(format!("({q},{k}):{}", gens.len()));
    }
    let bin = find_simplex_generators(gf(2), 3).unwrap_or_default();
    if !bin.contains(&example1_g1()) {
        failures.push("x^4 + x^2 + x + 1 missing for (2, 3)".into());
    }
    let ter = find_simplex_generators(gf(3), 3).unwrap_or_default();
    if !ter.contains(&example2_g1()) {
        failures.push("ternary [13, 3, 9] generator missing for (3, 3)".into());
    }
    if failures.is_empty() {
        Ok(format!("generator counts {}", summary.join(" ")))
    } else {
        Err(format!("{} (found {})", failures.join("; "), summary.join(" ")))
    }
}

fn criterion_structural() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (
        prop::sample::select(vec![2u32, 3]),
        prop::collection::vec(0i64..3, 0..8),
        prop::collection::vec(0i64..3, 0..8),
        8usize..12,
    );
    runner
        .run(&strategy, |(q, c, d, m)| {
            let f = gf(q);
            let c = Polynomial::from_coeffs(f, &c);
            let d = Polynomial::from_coeffs(f, &d);
            let lhs = circulant(&CirculantSpec::new(c.clone(), m).unwrap())
                .mul(&circulant(&CirculantSpec::new(d.clone(), m).unwrap()))
                .unwrap();
            prop_assert_eq!(lhs, circulant_of_product(&c, &d, m).unwrap());
            Ok(())
        })
        .map_err(|e| format!("circulant homomorphism: {e}"))?;

    let f2 = gf(2);
    let f3 = gf(3);
    let mut built: Vec<(String, LinearCode, usize, bool)> = Vec::new();
    for p in 2..=8 {
        let code = build_two_weight(&example1_g1(), 3, &default_multipliers(f2, 3, p).unwrap()).unwrap();
        built.push((format!("binary t=3 p={p}"), code, 7, false));
    }
    let g1_k4 = find_simplex_generators(f2, 4).unwrap().remove(0);
    for p in 10..=16 {
        let code = build_two_weight(&g1_k4, 4, &default_multipliers(f2, 4, p).unwrap()).unwrap();
        built.push((format!("binary t=4 p={p}"), code, 15, false));
    }
    for p in [2, 3, 15, 16, 17] {
        let code = build_two_weight(&example2_g1(), 3, &default_multipliers(f3, 3, p).unwrap()).unwrap();
        built.push((format!("ternary p={p}"), code, 13, false));
    }
    for t in 2..=5 {
        let g1 = find_simplex_generators(f2, t).unwrap().remove(0);
        let m = simplex_length(2, t) as usize;
        built.push((format!("minus t={t}"), build_self_complementary_minus(&g1, t).unwrap(), m, true));
        if t >= 3 {
            built.push((format!("plus t={t}"), build_self_complementary_plus(&g1, t).unwrap(), m, true));
        }
    }
    for (label, code, m, selfc) in &built {
        let n = code.length();
        ensure!(row_shift_invariance_witness(code, *m, n / m), "{label}: not block-rotation invariant");
        let dist = code.weight_distribution().unwrap();
        ensure!(u128::from(dist.total()) == code.size(), "{label}: counts sum {}", dist.total());
        if *selfc {
            for (&w, &c) in dist.counts() {
                ensure!(dist.count(n - w) == c, "{label}: count({w}) != count({})", n - w);
            }
        }
    }

    // Projectivity on [14, 6]: column criterion vs dual minimum distance by brute force.
    let code = build_two_weight(&example1_g1(), 3, &default_multipliers(f2, 3, 2).unwrap()).unwrap();
    let rows: Vec<u32> = code
        .basis()
        .rows()
        .map(|r| r.iter().enumerate().fold(0u32, |acc, (i, &c)| acc | (u32::from(c) << i)))
        .collect();
    let dual: Vec<u32> = (1u32..1 << 14)
        .filter(|v| rows.iter().all(|r| (r & v).count_ones() % 2 == 0))
        .collect();
    ensure!(dual.len() == 255, "dual has {} nonzero words, expected 255", dual.len());
    let dual_d = dual.iter().map(|v| v.count_ones()).min().unwrap();
    ensure!(
        is_projective(&code) == (dual_d >= 3),
        "projective={} but dual distance {dual_d}",
        is_projective(&code)
    );
    Ok(format!(
        "{} constructed codes checked; [14,6] projective={} dual d={dual_d}",
        built.len(),
        is_projective(&code)
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 table1 reproduction", criterion_table1),
        ("2 example1 reproduction", criterion_example1),
        ("3 example2 reproduction", criterion_example2),
        ("4 Grey-Rankin suite", criterion_grey_rankin),
        ("5 simplex property suite", criterion_simplex),
        ("6 structural property suite", criterion_structural),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(reason) => {
                failed += 1;
                println!("criterion {name}: FAIL ({reason})");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", 6 - failed, 6);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
