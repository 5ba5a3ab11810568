//! Verification suites. Each runner returns its checks in a deterministic
//! order; instance-level work is distributed over the rayon pool and
//! collected positionally, so reports do not depend on the worker count.

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde_json::json;

use charcomb::blocks::{block_stats, blocks_symmetric, check_block_bounds};
use charcomb::characters::census_an;
use charcomb::families::{alternating_families, validate_families};
use charcomb::padic::{dl_sylow_symmetric, primes_upto};
use charcomb::partition::count_partitions;
use charcomb::perm::PermGroup;
use charcomb::unipotent::verify_singular_family;
use charcomb::Sign;

use crate::checks::{inst, CheckResult};
use crate::sporadic::{check_sporadic, SporadicRow};

/// The engine handles Sylow towers up to this degree; past it the p = 2
/// instances fall back to the ⌊log₂ n⌋ bound.
pub const ENGINE_DEGREE_CAP: u32 = 48;

fn filter_primes(n: u32, primes: Option<&[u32]>) -> Vec<u32> {
    match primes {
        Some(list) => list.iter().copied().filter(|&p| p <= n).collect(),
        None => primes_upto(n),
    }
}

/// dl(Syl_p(A_n)) ≤ n_p*(A_n) over a rectangle of instances.
///
/// The left side is exact for n ≤ 24 (engine), for odd p (closed form,
/// since the Sylow subgroups of A_n and S_n agree), and for p = 2 up to
/// `exact_dl_max`; past that it degrades to the ⌊log₂ n⌋ bound, recorded
/// in the witness so a pass is never misread as an exact verification.
pub fn run_alternating(
    n_min: u32,
    n_max: u32,
    primes: Option<&[u32]>,
    exact_dl_max: u32,
) -> Vec<CheckResult> {
    let exact_cap = exact_dl_max.min(ENGINE_DEGREE_CAP);
    let mut instances = Vec::new();
    for n in n_min.max(5)..=n_max {
        for p in filter_primes(n, primes) {
            instances.push((n, p));
        }
    }
    instances
        .par_iter()
        .map(|&(n, p)| alternating_instance(n, p, exact_cap))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn engine_dl_alternating(n: u32, p: u32) -> u32 {
    PermGroup::sylow_symmetric(n as usize, p)
        .expect("p ≤ n ≤ 48")
        .even_part()
        .derived_length()
}

fn alternating_instance(n: u32, p: u32, exact_cap: u32) -> Vec<CheckResult> {
    let census = census_an(n, p).expect("census needs n ≥ 5");
    let rhs = census.np_star_an;
    let (lhs, provenance) = if n <= 24 {
        (engine_dl_alternating(n, p), "exact (engine)".to_string())
    } else if p != 2 {
        (
            dl_sylow_symmetric(n as u64, p),
            "exact (closed form; odd p shares Sylow subgroups with the symmetric group)".into(),
        )
    } else if n <= exact_cap {
        (engine_dl_alternating(n, 2), "exact (engine)".to_string())
    } else {
        (
            dl_sylow_symmetric(n as u64, 2),
            "bound (⌊log2 n⌋ dominates the derived length)".into(),
        )
    };

    let mut out = vec![CheckResult::le(
        "alternating_dl_le_npstar",
        inst(&[("n", json!(n)), ("p", json!(p))]),
        lhs,
        rhs,
    )
    .with_witness(provenance)];

    if n == 6 {
        // Aut(A_6) is larger than S_6, so the orbit census is checked
        // against the automorphism-invariant degree set as well
        let cd_an = census.cdp_an().len() as u64;
        out.push(
            CheckResult::le(
                "alternating_a6_cdp",
                inst(&[("n", json!(n)), ("p", json!(p))]),
                lhs,
                cd_an,
            )
            .with_witness("dl ≤ |cd_p(A_6)|, which is Aut-invariant"),
        );
    }
    out
}

/// Block-level checks for S_n: the height-zero biconditional and the two
/// derived-length bounds, plus the literal degree-9 reproduction at
/// (n, p) = (9, 2).
pub fn run_blocks(n_max: u32, primes: &[u32]) -> Vec<CheckResult> {
    let mut instances = Vec::new();
    for n in 1..=n_max {
        for &p in primes {
            instances.push((n, p));
        }
    }
    instances
        .par_iter()
        .map(|&(n, p)| blocks_instance(n, p))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn blocks_instance(n: u32, p: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let blocks = blocks_symmetric(n, p);
    for block in &blocks {
        let checks = check_block_bounds(block);
        let instance = inst(&[
            ("core", json!(block.core.to_string())),
            ("n", json!(n)),
            ("p", json!(p)),
        ]);
        out.push(
            CheckResult::iff(
                "block_bhz",
                instance.clone(),
                checks.np_b == 0,
                block.weight < p,
            )
            .with_witness(format!("np_B = {}, weight = {}", checks.np_b, block.weight)),
        );
        out.push(CheckResult::le(
            "block_dl_le_np1",
            instance.clone(),
            checks.dl_defect,
            checks.np_b + 1,
        ));
        out.push(CheckResult::le(
            "block_dl_le_heights",
            instance,
            checks.dl_defect,
            checks.heights_count,
        ));
    }
    if n == 9 && p == 2 {
        out.extend(s9_literal(&blocks));
    }
    out
}

/// The worked degree-9 example: two 2-blocks with the stated member
/// counts, degree-set sizes, positive-height counts and defect.
fn s9_literal(blocks: &[charcomb::blocks::Block]) -> Vec<CheckResult> {
    let instance = inst(&[("n", json!(9)), ("p", json!(2))]);
    let mut out = vec![CheckResult::eq(
        "blocks_s9_block_count",
        instance.clone(),
        blocks.len() as u32,
        2u32,
    )];
    let expectations: [(&str, u64, u64, u64, Option<u32>); 2] = [
        // (core, members, |cd|, np_B, defect)
        ("1", 20, 10, 12, None),
        ("2,1", 10, 5, 2, Some(4)),
    ];
    for (core, members, cd_size, np_b, defect) in expectations {
        let tag = if core == "1" { "principal" } else { "b1" };
        let block = blocks.iter().find(|b| b.core.to_string() == core);
        let Some(block) = block else {
            out.push(
                CheckResult::eq("blocks_s9_block_count", instance.clone(), 0u32, 1u32)
                    .with_witness(format!("missing block with core {core}")),
            );
            continue;
        };
        let stats = block_stats(block);
        let mk = |what: &'static str, lhs: u64, rhs: u64| {
            CheckResult::eq(
                what,
                inst(&[
                    ("block", json!(tag)),
                    ("core", json!(core)),
                    ("n", json!(9)),
                    ("p", json!(2)),
                ]),
                lhs,
                rhs,
            )
        };
        out.push(mk("blocks_s9_members", block.members.len() as u64, members));
        out.push(mk("blocks_s9_cd_size", stats.cd_b.len() as u64, cd_size));
        out.push(mk("blocks_s9_np", stats.np_b, np_b));
        if let Some(d) = defect {
            out.push(mk("blocks_s9_defect", block.d as u64, d as u64));
        }
    }
    out
}

/// p(n) > e^{2√n}/14 with the right side rounded upward before comparing.
pub fn run_growth(n_max: u32) -> Vec<CheckResult> {
    (1..=n_max)
        .map(|n| {
            let pn = count_partitions(n);
            let bound = (2.0 * (n as f64).sqrt()).exp() / 14.0;
            // round up, generously beyond any accumulated float error
            let bound_up = bound * (1.0 + 1e-9);
            // p(n) > bound_up ⟸ p(n) ≥ ⌊bound_up⌋ + 1, exactly
            let threshold = BigUint::from(bound_up.floor() as u128) + 1u32;
            CheckResult::le(
                "growth_maroti",
                inst(&[("n", json!(n))]),
                BigInt::from(threshold),
                BigInt::from(pn),
            )
            .with_witness(format!(
                "p(n) must exceed e^(2√n)/14 ≈ {bound_up:.6}, rounded upward"
            ))
        })
        .collect()
}

/// Generates and validates the partition families over a rectangle,
/// skipping (n, p) outside the nonabelian regime p² ≤ n.
pub fn run_families(n_min: u32, n_max: u32, primes: &[u32]) -> Vec<CheckResult> {
    let mut instances = Vec::new();
    for n in n_min.max(25)..=n_max {
        for &p in primes {
            if (p as u64) * (p as u64) <= n as u64 {
                instances.push((n, p));
            }
        }
    }
    instances
        .par_iter()
        .map(|&(n, p)| families_instance(n, p))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn families_instance(n: u32, p: u32) -> Vec<CheckResult> {
    let spec = alternating_families(n, p).expect("instances satisfy the preconditions");
    let report = validate_families(&spec);
    let instance = inst(&[
        ("case", json!(report.case_tag.as_str())),
        ("n", json!(n)),
        ("p", json!(p)),
    ]);
    let assertions = report.assertions;
    let passed = [
        assertions.partition_of_n,
        assertions.core_recovered,
        assertions.pairwise_distinct,
        assertions.conjugate_free,
        assertions.degree_divisibility,
        assertions.count_at_least_bound,
    ]
    .iter()
    .filter(|&&b| b)
    .count() as u32;
    let mut detail = CheckResult::eq("families_assertions", instance.clone(), passed, 6u32);
    if !report.witnesses.is_empty() {
        detail = detail.with_witness(report.witnesses.join("; "));
    } else if !report.self_conjugate.is_empty() {
        detail = detail.with_witness(format!(
            "self-conjugate members (split on restriction): {}",
            report
                .self_conjugate
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(" | ")
        ));
    }
    vec![
        CheckResult::le("families_count_bound", instance, report.bound, report.count),
        detail,
    ]
}

/// One unipotent-degree family instance: k+1 degrees, all divisible by p,
/// pairwise distinct.
pub fn run_singular_family(p: u32, k: u32, q: u64, eps: Sign) -> anyhow::Result<Vec<CheckResult>> {
    let report = verify_singular_family(p, k, q, eps)
        .map_err(|e| anyhow::anyhow!("lemma44 instance p={p} k={k} q={q} eps={eps}: {e}"))?;
    let instance = inst(&[
        ("eps", json!(eps.to_string())),
        ("k", json!(k)),
        ("p", json!(p)),
        ("q", json!(q)),
    ]);
    let degrees = report
        .degrees
        .iter()
        .map(|d| d.value.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let divisible = report
        .degrees
        .iter()
        .filter(|d| (&d.value % p) == BigUint::from(0u32))
        .count() as u32;
    let mut distinct: Vec<&BigUint> = report.degrees.iter().map(|d| &d.value).collect();
    distinct.sort();
    distinct.dedup();
    Ok(vec![
        CheckResult::eq("lemma44_divisible", instance.clone(), divisible, k + 1)
            .with_witness(format!("degrees: {degrees}")),
        CheckResult::eq(
            "lemma44_distinct",
            instance,
            distinct.len() as u32,
            k + 1,
        ),
    ])
}

/// The default unipotent-family grid: towers 8, 16, 9, 27, 25 against all
/// prime powers q ≤ 19 and both signs with p | (q − ε).
pub fn run_singular_family_grid() -> Vec<CheckResult> {
    let towers: [(u32, u32); 5] = [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)];
    let prime_powers: [u64; 12] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19];
    let mut out = Vec::new();
    for (p, k) in towers {
        for q in prime_powers {
            for eps in [Sign::Plus, Sign::Minus] {
                if (q as i64 - eps.val()).rem_euclid(p as i64) != 0 {
                    continue;
                }
                out.extend(
                    run_singular_family(p, k, q, eps)
                        .expect("grid instances satisfy p | q − ε"),
                );
            }
        }
    }
    out
}

/// The full default run: sporadic consistency, alternating groups 5..40,
/// blocks to 30, growth to 200, the unipotent grid, and families 25..200.
pub fn run_all(rows: &[SporadicRow]) -> Vec<CheckResult> {
    let mut out = check_sporadic(rows);
    out.extend(run_alternating(5, 40, None, ENGINE_DEGREE_CAP));
    out.extend(run_blocks(30, &[2, 3, 5, 7]));
    out.extend(run_growth(200));
    out.extend(run_singular_family_grid());
    out.extend(run_families(25, 200, &[2, 3, 5, 7, 11, 13]));
    out
}
