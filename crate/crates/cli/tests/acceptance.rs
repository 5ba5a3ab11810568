//! Acceptance suite: every release criterion as one test, exact arithmetic
//! throughout, each with its wall-clock budget pinned in code. Run with
//! `cargo test -p charcomb-cli --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use charcomb::blocks::{block_stats, blocks_symmetric, check_block_bounds};
use charcomb::characters::{census_an, degree};
use charcomb::families::{alternating_families, validate_families};
use charcomb::padic::{dl_sylow_symmetric, mann_max_dl, primes_upto};
use charcomb::partition::partitions_of;
use charcomb::perm::PermGroup;
use charcomb::unipotent::{cyclotomic_eval, order_mod};
use charcomb_cli::runners;
use charcomb_cli::sporadic::{check_sporadic, parse_sporadic_table, EMBEDDED_TABLE};

/// Runs one criterion, printing a single pass/fail line with the elapsed
/// time, and enforcing the budget.
fn criterion(name: &str, budget: Duration, body: impl FnOnce() + std::panic::UnwindSafe) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) => {
            println!("criterion {name}: PASS in {elapsed:.2?} (budget {budget:.0?})");
            assert!(
                elapsed <= budget,
                "criterion {name} exceeded its {budget:.0?} budget: {elapsed:.2?}"
            );
        }
        Err(payload) => {
            println!("criterion {name}: FAIL after {elapsed:.2?}");
            std::panic::resume_unwind(payload);
        }
    }
}

fn single_threaded<T: Send>(body: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool")
        .install(body)
}

#[test]
fn criterion_01_s9_blocks_via_cli() {
    criterion("01 (S_9 block statistics via CLI)", Duration::from_secs(1), || {
        let output = Command::new(env!("CARGO_BIN_EXE_charcomb"))
            .args(["verify", "blocks", "--n-max", "9", "--primes", "2"])
            .output()
            .expect("binary runs");
        assert!(output.status.success(), "exit: {:?}", output.status);
        let stdout = String::from_utf8(output.stdout).unwrap();
        let mut literal = HashMap::new();
        for line in stdout.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["pass"], true, "failed check: {line}");
            let id = v["check_id"].as_str().unwrap().to_string();
            if id.starts_with("blocks_s9") {
                let key = format!("{id}/{}", v["instance"]["block"].as_str().unwrap_or("-"));
                literal.insert(key, v["lhs"].as_str().unwrap().to_string());
            }
        }
        let expect = [
            ("blocks_s9_block_count/-", "2"),
            ("blocks_s9_members/principal", "20"),
            ("blocks_s9_cd_size/principal", "10"),
            ("blocks_s9_np/principal", "12"),
            ("blocks_s9_members/b1", "10"),
            ("blocks_s9_cd_size/b1", "5"),
            ("blocks_s9_np/b1", "2"),
            ("blocks_s9_defect/b1", "4"),
        ];
        for (key, value) in expect {
            assert_eq!(
                literal.get(key).map(String::as_str),
                Some(value),
                "missing or wrong {key}"
            );
        }
    });
}

#[test]
fn criterion_02_sporadic_dataset() {
    criterion("02 (sporadic dataset consistency)", Duration::from_secs(1), || {
        let rows = parse_sporadic_table(EMBEDDED_TABLE).unwrap();
        let results = check_sporadic(&rows);
        for r in &results {
            assert!(r.pass, "{}: {r:?}", r.check_id);
        }
        let eq = results
            .iter()
            .find(|r| r.check_id == "sporadic_equality_unique")
            .unwrap();
        assert_eq!(eq.lhs, "1");
        assert!(eq.witness.as_ref().unwrap().contains("(M22, 2)"));
        // the largest instance: log_2 |P| = 46 gives a Mann bound of 6,
        // far below the 115 distinct even degrees
        assert_eq!(mann_max_dl(46), 6);
        let monster = rows.iter().find(|r| r.group == "M" && r.p == 2).unwrap();
        assert!(monster.dl.is_none() && monster.cdp == 115);
    });
}

#[test]
fn criterion_03_alternating_exact_regime() {
    criterion(
        "03 (dl(Syl_p(A_n)) ≤ n_p*(A_n), exact engine, 5 ≤ n ≤ 24)",
        Duration::from_secs(180),
        || {
            let results = single_threaded(|| runners::run_alternating(5, 24, None, 48));
            let mut main_checks = 0;
            let mut a6_checks = 0;
            for r in &results {
                assert!(r.pass, "{}: {r:?}", r.check_id);
                match r.check_id {
                    "alternating_dl_le_npstar" => {
                        main_checks += 1;
                        assert!(r.witness.as_deref().unwrap().contains("engine"));
                    }
                    "alternating_a6_cdp" => a6_checks += 1,
                    other => panic!("unexpected check {other}"),
                }
            }
            let expected: usize = (5..=24u32).map(|n| primes_upto(n).len()).sum();
            assert_eq!(main_checks, expected);
            assert_eq!(a6_checks, 3); // p = 2, 3, 5 at n = 6
        },
    );
}

#[test]
fn criterion_04_alternating_extended_regime() {
    criterion(
        "04 (closed-form dl ≤ n_p*(A_n), 25 ≤ n ≤ 45)",
        Duration::from_secs(300),
        || {
            for n in 25..=45u32 {
                for p in [2u32, 3, 5] {
                    if p != 2 && p * p > n {
                        continue;
                    }
                    let census = census_an(n, p).unwrap();
                    let lhs = dl_sylow_symmetric(n as u64, p) as u64;
                    if p == 2 {
                        // ⌊log2 n⌋ dominates dl(Syl_2(A_n))
                        assert!(
                            lhs <= census.np_star_an,
                            "n={n} p=2: bound {lhs} > {}",
                            census.np_star_an
                        );
                    } else {
                        // odd p: A_n and S_n share Sylow subgroups, dl = k exactly
                        assert!(
                            lhs <= census.np_star_an,
                            "n={n} p={p}: dl {lhs} > {}",
                            census.np_star_an
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_05_core_oracle_equivalence() {
    criterion(
        "05 (abacus core = iterated rim-hook removal, n ≤ 20)",
        Duration::from_secs(60),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
            for n in 0..=20u32 {
                for lambda in partitions_of(n) {
                    for p in [2u32, 3, 5, 7] {
                        let cw = lambda.p_core_and_weight(p);
                        // greedy order and two randomized orders
                        for order in 0..3 {
                            let mut current = lambda.clone();
                            let mut removed = 0u32;
                            loop {
                                let cells = current.rim_hook_cells(p);
                                if cells.is_empty() {
                                    break;
                                }
                                let pick = if order == 0 {
                                    0
                                } else {
                                    rng.gen_range(0..cells.len())
                                };
                                current = current.remove_rim_hook(cells[pick]).unwrap();
                                removed += 1;
                            }
                            assert_eq!(current, cw.core, "{lambda} p={p}");
                            assert_eq!(removed, cw.weight, "{lambda} p={p}");
                        }
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_06_degree_square_conservation() {
    criterion(
        "06 (Σ degree² = n! for n ≤ 30)",
        Duration::from_secs(120),
        || {
            for n in 1..=30u32 {
                let mut sum = BigUint::zero();
                for lambda in partitions_of(n) {
                    let d = degree(&lambda);
                    sum += &d * &d;
                }
                let mut fact = BigUint::one();
                for i in 2..=n as u64 {
                    fact *= BigUint::from(i);
                }
                assert_eq!(sum, fact, "n = {n}");
            }
        },
    );
}

#[test]
fn criterion_07_height_zero_biconditional() {
    criterion(
        "07 (n_p(B) = 0 ⟺ weight < p, n ≤ 30)",
        Duration::from_secs(120),
        || {
            for n in 1..=30u32 {
                for p in [2u32, 3, 5, 7] {
                    for block in blocks_symmetric(n, p) {
                        let stats = block_stats(&block);
                        assert_eq!(
                            stats.np_b == 0,
                            block.weight < p,
                            "n={n} p={p} core={}",
                            block.core
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_08_block_derived_length_bounds() {
    criterion(
        "08 (dl(D) ≤ |hei(B)| and dl(D) ≤ n_p(B)+1, n ≤ 30)",
        Duration::from_secs(120),
        || {
            for n in 1..=30u32 {
                for p in [2u32, 3, 5, 7] {
                    for block in blocks_symmetric(n, p) {
                        let checks = check_block_bounds(&block);
                        assert!(
                            checks.dl_le_heights && checks.dl_le_np1,
                            "n={n} p={p} core={}: {checks:?}",
                            block.core
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_09_unipotent_degree_families() {
    criterion(
        "09 (k+1 distinct p-divisible unipotent degrees)",
        Duration::from_secs(60),
        || {
            let results = runners::run_singular_family_grid();
            for r in &results {
                assert!(r.pass, "{}: {r:?}", r.check_id);
            }
            // towers (2,8),(2,16): 8 odd prime powers x 2 signs each;
            // (3,9),(3,27): 10 admissible (q, eps); (5,25): 5 — two checks per instance
            assert_eq!(results.len(), 2 * (16 + 16 + 10 + 10 + 5));
        },
    );
}

#[test]
fn criterion_10_cyclotomic_laws() {
    criterion("10 (cyclotomic product and divisibility laws)", Duration::from_secs(60), || {
        for m in 1..=40u32 {
            for q in 2..=20u64 {
                let mut product = BigUint::one();
                for d in 1..=m {
                    if m % d == 0 {
                        product *= cyclotomic_eval(d, q);
                    }
                }
                assert_eq!(product, BigUint::from(q).pow(m) - BigUint::one());
            }
        }
        // odd-p law: p | Φ_m(q) iff m = d_p(q)·p^t, with ν_p = 1 for t ≥ 1
        let mut cache: HashMap<(u32, u64), BigUint> = HashMap::new();
        for p in [3u32, 5, 7, 11, 13, 17, 19, 23, 29] {
            for q in 2..=20u64 {
                if q % p as u64 == 0 {
                    continue;
                }
                let d = order_mod(q as i64, p as u64).unwrap() as u32;
                for m in 1..=60u32 {
                    let value = cache
                        .entry((m, q))
                        .or_insert_with(|| cyclotomic_eval(m, q))
                        .clone();
                    let mut val = 0u32;
                    let mut rest = value;
                    while (&rest % p).is_zero() {
                        rest /= p;
                        val += 1;
                    }
                    // is m of the form d · p^t?
                    let t = if m % d == 0 {
                        let mut quot = m / d;
                        let mut t = Some(0u32);
                        while quot > 1 {
                            if !quot.is_multiple_of(p) {
                                t = None;
                                break;
                            }
                            quot /= p;
                            t = t.map(|x| x + 1);
                        }
                        t
                    } else {
                        None
                    };
                    match t {
                        None => assert_eq!(val, 0, "p={p} q={q} m={m}"),
                        Some(0) => {
                            // ν_p(Φ_d(q)) carries all of ν_p(q^d − 1)
                            let mut rest = BigUint::from(q).pow(d) - BigUint::one();
                            let mut expected = 0u32;
                            while (&rest % p).is_zero() {
                                rest /= p;
                                expected += 1;
                            }
                            assert_eq!(val, expected, "p={p} q={q} m={m}");
                        }
                        Some(_) => assert_eq!(val, 1, "p={p} q={q} m={m}"),
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_11_partition_families() {
    criterion(
        "11 (family validation, 25 ≤ n ≤ 200)",
        Duration::from_secs(180),
        || {
            // the two pinned instance counts
            assert_eq!(alternating_families(26, 5).unwrap().members.len(), 8);
            assert_eq!(alternating_families(25, 2).unwrap().members.len(), 15);

            for n in 25..=200u32 {
                for p in [2u32, 3, 5, 7, 11, 13] {
                    if (p as u64) * (p as u64) > n as u64 {
                        continue;
                    }
                    let spec = alternating_families(n, p).unwrap();
                    let report = validate_families(&spec);
                    assert!(
                        report.pass(),
                        "n={n} p={p} case={}: {:?}",
                        report.case_tag.as_str(),
                        report.witnesses
                    );
                    // the printed closed-form count bounds, exactly
                    let count = report.count;
                    let (p64, n64) = (p as u64, n as u64);
                    match report.case_tag.as_str() {
                        "P5_R1" => assert!(p64 * count >= n64 + p64 * p64 - 5 * p64),
                        "P5_R0" | "P3_S1" | "P3_S2" | "P3_S3" => {
                            assert!(p64 * count >= n64)
                        }
                        "P2_ODD" => assert!(count >= n64 - 12),
                        "P2_EVEN" => assert!(count >= n64 - 10),
                        other => panic!("unexpected case {other}"),
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_12_engine_matches_closed_form() {
    criterion(
        "12 (engine derived length = closed form, n ≤ 24)",
        Duration::from_secs(120),
        || {
            for n in 2..=24usize {
                for p in primes_upto(n as u32) {
                    let g = PermGroup::sylow_symmetric(n, p).unwrap();
                    assert_eq!(
                        g.derived_length(),
                        dl_sylow_symmetric(n as u64, p),
                        "n={n} p={p}"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_13_partition_growth() {
    criterion(
        "13 (p(n) > e^(2√n)/14 for n ≤ 200)",
        Duration::from_secs(1),
        || {
            let results = runners::run_growth(200);
            assert_eq!(results.len(), 200);
            for r in &results {
                assert!(r.pass, "{r:?}");
            }
        },
    );
}
