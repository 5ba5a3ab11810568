//! The sporadic-group dataset: derived lengths of Sylow p-subgroups and
//! p-singular character-degree counts, transcribed from the literature
//! (values computed there with GAP/MAGMA), plus consistency checks.
//!
//! For the five largest groups (Th, Ly, Fi24', B, M) no derived length is
//! recorded; for those rows the Mann bound on dl must already fall below
//! the degree count, which is exactly how the inequality is settled there.

use anyhow::{bail, Context};
use serde_json::json;

use charcomb::padic::mann_max_dl;

use crate::checks::{inst, CheckResult};

/// The dataset shipped with the binary; `load_sporadic_table` accepts a
/// file with the same layout.
pub const EMBEDDED_TABLE: &str = include_str!("../../../data/sporadic_table.csv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SporadicRow {
    pub group: String,
    pub p: u32,
    /// None when the derived length is not part of the dataset.
    pub dl: Option<u32>,
    /// |cd_p(G)|, the number of p-singular character degrees.
    pub cdp: u32,
    /// log_p of the Sylow p-subgroup order.
    pub logp_order: u32,
    pub provenance: String,
}

/// Parses the CSV: header `group,p,dl,cdp,logp_order` with an optional
/// trailing `provenance` column; an empty dl field means unknown.
pub fn parse_sporadic_table(text: &str) -> anyhow::Result<Vec<SporadicRow>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().context("empty table")?;
    let header_fields: Vec<&str> = header.trim().split(',').collect();
    if header_fields.len() < 5
        || header_fields[..5] != ["group", "p", "dl", "cdp", "logp_order"]
    {
        bail!("line 1: expected header group,p,dl,cdp,logp_order[,provenance]");
    }

    let mut rows = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() < 5 {
            bail!("line {line_no}: expected at least 5 fields, got {}", fields.len());
        }
        let group = fields[0].trim().to_string();
        if group.is_empty() {
            bail!("line {line_no}: empty group name");
        }
        let p: u32 = fields[1]
            .trim()
            .parse()
            .with_context(|| format!("line {line_no}: bad prime {:?}", fields[1]))?;
        let dl = match fields[2].trim() {
            "" => None,
            s => Some(
                s.parse::<u32>()
                    .with_context(|| format!("line {line_no}: bad dl {s:?}"))?,
            ),
        };
        let cdp: u32 = fields[3]
            .trim()
            .parse()
            .with_context(|| format!("line {line_no}: bad cdp {:?}", fields[3]))?;
        let logp_order: u32 = fields[4]
            .trim()
            .parse()
            .with_context(|| format!("line {line_no}: bad logp_order {:?}", fields[4]))?;
        if p < 2 || cdp == 0 || logp_order == 0 || dl == Some(0) {
            bail!("line {line_no}: fields must be positive");
        }
        if !seen.insert((group.clone(), p)) {
            bail!("line {line_no}: duplicate (group, p) = ({group}, {p})");
        }
        rows.push(SporadicRow {
            group,
            p,
            dl,
            cdp,
            logp_order,
            provenance: fields.get(5).map(|s| s.trim()).unwrap_or("").to_string(),
        });
    }
    Ok(rows)
}

pub fn load_sporadic_table(path: &std::path::Path) -> anyhow::Result<Vec<SporadicRow>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_sporadic_table(&text)
}

/// Consistency checks over the dataset:
/// - dl ≤ |cd_p| wherever dl is known, with equality exactly at (M22, 2);
/// - the Mann bound dominates every known dl;
/// - for rows without a dl, the Mann bound alone already beats |cd_p|.
pub fn check_sporadic(rows: &[SporadicRow]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut equalities = Vec::new();
    for row in rows {
        let instance = inst(&[("group", json!(row.group)), ("p", json!(row.p))]);
        let mann = mann_max_dl(row.logp_order);
        match row.dl {
            Some(dl) => {
                if dl == row.cdp {
                    equalities.push(format!("({}, {})", row.group, row.p));
                }
                out.push(CheckResult::le(
                    "sporadic_dl_le_cdp",
                    instance.clone(),
                    dl,
                    row.cdp,
                ));
                out.push(
                    CheckResult::le("sporadic_mann_dl", instance, dl, mann).with_witness(
                        format!("mann_max_dl({}) = {mann}", row.logp_order),
                    ),
                );
            }
            None => {
                out.push(
                    CheckResult::strict_lt("sporadic_mann_lt_cdp", instance, mann, row.cdp)
                        .with_witness(format!(
                            "dl unknown; mann_max_dl({}) = {mann} < |cd_p| = {}",
                            row.logp_order, row.cdp
                        )),
                );
            }
        }
    }
    out.push(
        CheckResult::eq(
            "sporadic_equality_unique",
            inst(&[("rows", json!(rows.len()))]),
            equalities.len() as u32,
            1u32,
        )
        .with_witness(format!("equalities at: {}", equalities.join(", "))),
    );
    out
}
