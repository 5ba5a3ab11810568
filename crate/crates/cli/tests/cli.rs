//! End-to-end checks of the binary: output shapes, exit codes, and
//! byte-determinism of reports.

use std::process::{Command, Output};

fn charcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charcomb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = charcomb(args);
    assert!(out.status.success(), "{:?}: {:?}", args, out);
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn core_accepts_exponent_shorthand_but_never_emits_it() {
    let out = stdout_of(&["core", "5,1^3", "--p", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["partition"], "5,1,1,1");
    // beta-set {8,3,2,1} pushes down to {3,2,1,0}: the empty 2-core
    assert_eq!(v["core"], "");
    assert_eq!(v["weight"], 4);
}

#[test]
fn core_rejects_increasing_parts() {
    let out = charcomb(&["core", "3,5", "--p", "2"]);
    assert_eq!(out.status.code(), Some(126));
}

#[test]
fn census_outputs() {
    let sn = stdout_of(&["census", "sn", "--n", "4", "--p", "2"]);
    let v: serde_json::Value = serde_json::from_str(&sn).unwrap();
    assert_eq!(v["np_sn"], 1);
    assert_eq!(v["cdp_sn"], serde_json::json!(["2"]));

    let an = stdout_of(&["census", "an", "--n", "6", "--p", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&an).unwrap();
    assert_eq!(v["np_star_an"], 1);
    assert_eq!(v["aut_caveat"], true);
    let records = v["records"].as_array().unwrap();
    assert!(records
        .iter()
        .any(|r| r["kind"] == "SPLIT" && r["degree"] == "16"));

    let summary = stdout_of(&["census", "an", "--n", "5", "--p", "2"]);
    assert!(summary.contains("np_star_an=1"), "{summary}");
}

#[test]
fn census_an_rejects_small_n() {
    let out = charcomb(&["census", "an", "--n", "4", "--p", "2"]);
    assert_eq!(out.status.code(), Some(126));
}

#[test]
fn blocks_output_shape() {
    let out = stdout_of(&["blocks", "--n", "5", "--p", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let blocks = v["blocks"].as_array().unwrap();
    let total: u64 = blocks.iter().map(|b| b["members"].as_u64().unwrap()).sum();
    assert_eq!(total, 7); // p(5)
    assert!(blocks
        .iter()
        .all(|b| b["checks"]["bhz"] == true && b["checks"]["dl_le_np1"] == true));
}

#[test]
fn sylow_dl_outputs() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout_of(&["sylow-dl", "--family", "sym", "--n", "9", "--p", "2"]))
            .unwrap();
    assert_eq!(v["dl"], 3);

    let v: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "sylow-dl", "--family", "gu", "--n", "2", "--q", "4", "--p", "5",
    ]))
    .unwrap();
    assert_eq!(v["dl"], 1);

    let v: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "sylow-dl", "--family", "so-even", "--n", "4", "--q", "3", "--p", "2",
    ]))
    .unwrap();
    assert_eq!(v["dl_lo"], 3);
    assert_eq!(v["dl_hi"], 4);

    // the Carter-Fong families are p = 2 only
    let out = charcomb(&["sylow-dl", "--family", "sp", "--n", "4", "--q", "3", "--p", "3"]);
    assert_eq!(out.status.code(), Some(126));
}

#[test]
fn verify_reports_are_deterministic_across_worker_counts() {
    let args = ["verify", "alternating", "--n-min", "5", "--n-max", "12"];
    let first = stdout_of(&args);
    let second = Command::new(env!("CARGO_BIN_EXE_charcomb"))
        .args(args)
        .env("SYLOW_CENSUS_THREADS", "2")
        .output()
        .expect("binary runs");
    assert!(second.status.success());
    assert_eq!(first, String::from_utf8(second.stdout).unwrap());
    assert!(first.lines().all(|l| l.contains("\"pass\":true")));
}

#[test]
fn default_full_run_is_all_green() {
    let rows =
        charcomb_cli::sporadic::parse_sporadic_table(charcomb_cli::sporadic::EMBEDDED_TABLE)
            .unwrap();
    let results = charcomb_cli::runners::run_all(&rows);
    assert!(results.len() > 10_000);
    for r in &results {
        assert!(r.pass, "{}: {r:?}", r.check_id);
    }
}

#[test]
fn alternating_smallest_instance_is_tight() {
    // A_5 at p = 2: the Sylow subgroup is V_4 (dl 1) and there is exactly
    // one orbit of even-degree characters (the degree-4 pair)
    let out = stdout_of(&["verify", "alternating", "--n-min", "5", "--n-max", "5", "--primes", "2"]);
    let v: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(v["check_id"], "alternating_dl_le_npstar");
    assert_eq!(v["lhs"], "1");
    assert_eq!(v["rhs"], "1");
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_csv_format() {
    let out = stdout_of(&["verify", "growth", "--n-max", "2", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "check_id,instance,lhs,rhs,relation,pass,witness"
    );
    assert_eq!(lines.count(), 2);
}

#[test]
fn verify_exit_code_counts_failures() {
    let dir = std::env::temp_dir().join("charcomb-bad-table.csv");
    std::fs::write(&dir, "group,p,dl,cdp,logp_order\nFake,2,5,3,20\n").unwrap();
    let out = charcomb(&["verify", "sporadic", "--data", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_lemma44_rejects_bad_hypothesis() {
    let out = charcomb(&["verify", "lemma44", "--p", "3", "--k", "2", "--q", "5", "--eps", "+1"]);
    assert_eq!(out.status.code(), Some(126));
    let out = charcomb(&["verify", "lemma44", "--p", "3", "--k", "2", "--q", "5", "--eps", "-1"]);
    assert!(out.status.success());
}

#[test]
fn families_subcommand_reports() {
    let out = stdout_of(&["families", "--n", "25", "--p", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["case"], "P2_ODD");
    assert_eq!(v["count"], 15);
    assert_eq!(v["members"].as_array().unwrap().len(), 15);
    assert_eq!(v["assertions"]["conjugate_free"], true);
}
