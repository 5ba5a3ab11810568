use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use charcomb::families::{alternating_families, validate_families};
use charcomb::padic::{
    dl_sylow_classical_p2, dl_sylow_gl, dl_sylow_symmetric, ClassicalFamily,
};
use charcomb::partition::Partition;
use charcomb::Sign;
use charcomb_cli::report::{
    blocks_json, census_an_json, census_an_summary, census_sn_json, emit_checks, family_json,
    print_line, Format,
};
use charcomb_cli::runners;
use charcomb_cli::sporadic::{load_sporadic_table, parse_sporadic_table, EMBEDDED_TABLE};

/// Exact character combinatorics of symmetric groups, with instance-level
/// verification of derived-length inequalities.
#[derive(Parser)]
#[command(name = "charcomb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// p-core and p-weight of a partition (e.g. "4,3" or "5,1^3")
    Core {
        partition: String,
        #[arg(long)]
        p: u32,
    },
    /// p-singular character census of S_n or A_n
    Census {
        #[arg(value_parser = ["sn", "an"])]
        group: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        /// emit the full JSON census instead of a one-line summary
        #[arg(long)]
        json: bool,
    },
    /// p-blocks of S_n with defects, heights and bound checks
    Blocks {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
    },
    /// closed-form derived lengths of Sylow subgroups
    SylowDl {
        /// sym | gl | gu | sp | so-odd | so-even
        #[arg(long, value_parser = ["sym", "gl", "gu", "sp", "so-odd", "so-even"])]
        family: String,
        #[arg(long)]
        n: u64,
        /// field size, for the Lie-type families
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        p: u32,
    },
    /// generate and validate one partition family for A_n
    Families {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
    },
    /// run verification suites; one check per output line, exit status =
    /// number of failures (clamped at 125)
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// consistency of the sporadic-group dataset
    Sporadic {
        /// CSV to check instead of the embedded dataset
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// dl(Syl_p(A_n)) ≤ n_p*(A_n) over a range of n
    Alternating {
        #[arg(long, default_value_t = 5)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        /// comma-separated primes; all p ≤ n when omitted
        #[arg(long)]
        primes: Option<String>,
        /// largest n at which the p = 2 derived length is computed exactly
        #[arg(long, default_value_t = runners::ENGINE_DEGREE_CAP)]
        exact_dl_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// height-zero and derived-length bounds on every p-block of S_n
    Blocks {
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        primes: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// the unipotent-degree family for one (p, k, q, ε)
    Lemma44 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, default_value = "+1")]
        eps: String,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// partition-family validation over a range of n
    Families {
        #[arg(long, default_value_t = 25)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        primes: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// the partition-count growth inequality p(n) > e^(2√n)/14
    Growth {
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// every suite at its default range
    All {
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
}

fn parse_primes(spec: Option<&str>) -> anyhow::Result<Option<Vec<u32>>> {
    let Some(spec) = spec else {
        return Ok(None);
    };
    let mut primes = Vec::new();
    for tok in spec.split(',') {
        let p: u32 = tok
            .trim()
            .parse()
            .with_context(|| format!("bad prime {tok:?}"))?;
        if !is_prime(p) {
            bail!("{p} is not prime");
        }
        primes.push(p);
    }
    primes.sort_unstable();
    primes.dedup();
    Ok(Some(primes))
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn init_thread_pool() {
    if let Ok(spec) = std::env::var("SYLOW_CENSUS_THREADS") {
        if let Ok(threads) = spec.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn main() {
    init_thread_pool();
    let cli = Cli::parse();
    match run(cli) {
        Ok(failures) => {
            if failures > 0 {
                eprintln!("{failures} check(s) failed");
            }
            std::process::exit(failures.min(125) as i32);
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(126);
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<usize> {
    match cli.command {
        Command::Core { partition, p } => {
            if p < 2 {
                bail!("p must be at least 2");
            }
            let lambda = Partition::from_str(&partition)?;
            let cw = lambda.p_core_and_weight(p);
            print_line(
                &serde_json::json!({
                    "partition": lambda.to_string(),
                    "p": p,
                    "core": cw.core.to_string(),
                    "weight": cw.weight,
                })
                .to_string(),
            );
            Ok(0)
        }
        Command::Census { group, n, p, json } => {
            require_prime(p)?;
            match group.as_str() {
                "sn" => print_line(&census_sn_json(n, p).to_string()),
                _ => {
                    if json {
                        let census = charcomb::characters::census_an(n, p)?;
                        print_line(&census_an_json(&census).to_string());
                    } else {
                        print_line(&census_an_summary(n, p)?);
                    }
                }
            }
            Ok(0)
        }
        Command::Blocks { n, p } => {
            require_prime(p)?;
            print_line(&blocks_json(n, p).to_string());
            Ok(0)
        }
        Command::SylowDl { family, n, q, p } => {
            require_prime(p)?;
            let value = match family.as_str() {
                "sym" => {
                    serde_json::json!({
                        "family": "sym", "n": n, "p": p,
                        "dl": dl_sylow_symmetric(n, p),
                    })
                }
                "gl" | "gu" => {
                    let q = q.context("--q is required for gl/gu")?;
                    let eps = if family == "gl" { Sign::Plus } else { Sign::Minus };
                    serde_json::json!({
                        "family": family, "n": n, "q": q, "eps": eps.to_string(), "p": p,
                        "dl": dl_sylow_gl(n, q, eps, p)?,
                    })
                }
                other => {
                    if p != 2 {
                        bail!(
                            "family {other} uses the Carter-Fong description, which is \
                             specific to p = 2; for odd p the Sylow subgroups agree with \
                             a general linear group (use --family gl)"
                        );
                    }
                    let q = q.context("--q is required for the classical families")?;
                    let fam = match other {
                        "sp" => ClassicalFamily::Sp,
                        "so-odd" => ClassicalFamily::SoOdd,
                        _ => ClassicalFamily::SoEven,
                    };
                    let range = dl_sylow_classical_p2(fam, n, q)?;
                    serde_json::json!({
                        "family": other, "n": n, "q": q, "p": p,
                        "dl_lo": range.lo, "dl_hi": range.hi,
                    })
                }
            };
            print_line(&value.to_string());
            Ok(0)
        }
        Command::Families { n, p } => {
            require_prime(p)?;
            let spec = alternating_families(n, p)?;
            let report = validate_families(&spec);
            print_line(&family_json(&spec, &report).to_string());
            Ok(usize::from(!report.pass()))
        }
        Command::Verify { suite } => run_verify(suite),
    }
}

fn require_prime(p: u32) -> anyhow::Result<()> {
    if !is_prime(p) {
        bail!("{p} is not prime");
    }
    Ok(())
}

fn run_verify(suite: VerifySuite) -> anyhow::Result<usize> {
    let (results, format) = match suite {
        VerifySuite::Sporadic { data, format } => {
            let rows = match data {
                Some(path) => load_sporadic_table(&path)?,
                None => parse_sporadic_table(EMBEDDED_TABLE)?,
            };
            (charcomb_cli::sporadic::check_sporadic(&rows), format)
        }
        VerifySuite::Alternating {
            n_min,
            n_max,
            primes,
            exact_dl_max,
            format,
        } => {
            if n_min < 5 || n_min > n_max {
                bail!("need 5 ≤ n_min ≤ n_max");
            }
            let primes = parse_primes(primes.as_deref())?;
            (
                runners::run_alternating(n_min, n_max, primes.as_deref(), exact_dl_max),
                format,
            )
        }
        VerifySuite::Blocks {
            n_max,
            primes,
            format,
        } => {
            if n_max > 40 {
                bail!("--n-max is capped at 40: block statistics need every degree exactly");
            }
            let primes =
                parse_primes(primes.as_deref())?.unwrap_or_else(|| vec![2, 3, 5, 7]);
            (runners::run_blocks(n_max, &primes), format)
        }
        VerifySuite::Lemma44 {
            p,
            k,
            q,
            eps,
            format,
        } => {
            require_prime(p)?;
            let eps = Sign::from_str(&eps)?;
            (runners::run_singular_family(p, k, q, eps)?, format)
        }
        VerifySuite::Families {
            n_min,
            n_max,
            primes,
            format,
        } => {
            let primes =
                parse_primes(primes.as_deref())?.unwrap_or_else(|| vec![2, 3, 5, 7, 11, 13]);
            (runners::run_families(n_min, n_max, &primes), format)
        }
        VerifySuite::Growth { n_max, format } => (runners::run_growth(n_max), format),
        VerifySuite::All { data, format } => {
            let rows = match data {
                Some(path) => load_sporadic_table(&path)?,
                None => parse_sporadic_table(EMBEDDED_TABLE)?,
            };
            (runners::run_all(&rows), format)
        }
    };
    Ok(emit_checks(results, format))
}
