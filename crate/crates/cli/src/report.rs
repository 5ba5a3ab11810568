//! JSON views of censuses, blocks and families, plus the check-report
//! printer. Degrees are serialized as decimal strings; partitions in the
//! comma-separated text format; arrays are 0-based.

use std::io::Write;

use serde_json::{json, Value};

use charcomb::blocks::{block_stats, blocks_symmetric, check_block_bounds};
use charcomb::characters::{census_an, census_sn, OrbitCensus, OrbitKind};
use charcomb::families::{FamilyReport, FamilySpec};

use crate::checks::{csv_header, sort_for_output, CheckResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

/// Writes one line to stdout, exiting quietly when the reader went away
/// (e.g. the output is piped into `head`).
pub fn print_line(line: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {e}");
    }
}

/// Prints the report in deterministic order and returns the failure count.
pub fn emit_checks(mut results: Vec<CheckResult>, format: Format) -> usize {
    sort_for_output(&mut results);
    match format {
        Format::Jsonl => {
            for r in &results {
                print_line(&serde_json::to_string(r).expect("serializable"));
            }
        }
        Format::Csv => {
            print_line(csv_header());
            for r in &results {
                print_line(&r.to_csv_row());
            }
        }
    }
    results.iter().filter(|r| !r.pass).count()
}

pub fn census_sn_json(n: u32, p: u32) -> Value {
    let census = census_sn(n, p);
    json!({
        "n": n,
        "p": p,
        "np_sn": census.np_sn,
        "cdp_sn": census.cdp_sn.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    })
}

pub fn census_an_json(census: &OrbitCensus) -> Value {
    let records: Vec<Value> = census
        .records
        .iter()
        .map(|rec| {
            let label: Vec<String> = match (&rec.label.0, &rec.label.1) {
                (first, Some(second)) => vec![first.to_string(), second.to_string()],
                (first, None) => vec![first.to_string()],
            };
            json!({
                "label": label,
                "kind": if rec.kind == OrbitKind::Pair { "PAIR" } else { "SPLIT" },
                "degree": rec.degree_sn.to_string(),
                "p_singular": rec.p_singular_an,
            })
        })
        .collect();
    let mut value = json!({
        "n": census.n,
        "p": census.p,
        "np_sn": census.np_sn,
        "np_an": census.np_an,
        "np_star_an": census.np_star_an,
        "cdp_sn": census.cdp_sn.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "records": records,
    });
    if census.n == 6 {
        // Aut(A_6) exceeds S_6; orbit counts here are S_6-orbit counts
        value["aut_caveat"] = json!(true);
    }
    value
}

pub fn census_an_summary(n: u32, p: u32) -> anyhow::Result<String> {
    let census = census_an(n, p)?;
    Ok(format!(
        "n={} p={} np_sn={} np_an={} np_star_an={} |cdp_sn|={}",
        census.n,
        census.p,
        census.np_sn,
        census.np_an,
        census.np_star_an,
        census.cdp_sn.len()
    ))
}

pub fn blocks_json(n: u32, p: u32) -> Value {
    let blocks: Vec<Value> = blocks_symmetric(n, p)
        .iter()
        .map(|block| {
            let stats = block_stats(block);
            let checks = check_block_bounds(block);
            json!({
                "core": block.core.to_string(),
                "weight": block.weight,
                "defect": block.d,
                "a": block.a,
                "members": block.members.len(),
                "np_B": stats.np_b,
                "cd_B_size": stats.cd_b.len(),
                "heights": stats.heights.iter().copied().collect::<Vec<_>>(),
                "mh_B": stats.mh_b,
                "checks": {
                    "bhz": checks.bhz,
                    "dl_le_np1": checks.dl_le_np1,
                    "dl_le_heights": checks.dl_le_heights,
                },
            })
        })
        .collect();
    json!({ "n": n, "p": p, "blocks": blocks })
}

pub fn family_json(spec: &FamilySpec, report: &FamilyReport) -> Value {
    let members: Vec<Value> = spec
        .members
        .iter()
        .map(|(member, core_idx)| {
            json!([
                member.to_string(),
                spec.expected_cores[*core_idx].to_string()
            ])
        })
        .collect();
    let mut value = json!({
        "n": report.n,
        "p": report.p,
        "case": report.case_tag.as_str(),
        "count": report.count,
        "bound": report.bound,
        "assertions": report.assertions,
        "members": members,
    });
    if !report.self_conjugate.is_empty() {
        value["self_conjugate"] = json!(report
            .self_conjugate
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>());
    }
    value
}
