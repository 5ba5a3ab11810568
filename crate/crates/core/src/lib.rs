//! Exact character combinatorics of symmetric groups.
//!
//! The crate computes, in exact integer arithmetic, the desk-scale invariants
//! that relate Sylow subgroups of symmetric and alternating groups to their
//! character degrees:
//!
//! - [`partition`] — partitions, hooks, conjugation, p-cores and p-weights
//!   (abacus and rim-hook removal), enumeration and counting;
//! - [`padic`] — p-adic digits and the closed-form derived lengths of Sylow
//!   subgroups of symmetric and classical groups, plus logarithmic bounds;
//! - [`characters`] — hook-length character degrees of S_n and the census of
//!   p-singular characters of S_n and A_n;
//! - [`blocks`] — p-blocks of S_n by Nakayama cores, with defects, heights
//!   and the block statistics n_p(B), cd(B), hei(B), mh(B);
//! - [`unipotent`] — cyclotomic values, orders mod m, and the q-analog hook
//!   formula for unipotent character degrees of GL_n(q) and GU_n(q);
//! - [`families`] — explicit partition families certifying lower bounds on
//!   the number of p-singular character orbits of A_n;
//! - [`perm`] — a small exact permutation-group engine (Schreier–Sims) for
//!   Sylow subgroups of S_n and A_n at degree ≤ 48.
//!
//! Everything is deterministic and side-effect free; values are immutable
//! after construction and safe to share across threads.

pub mod blocks;
pub mod characters;
pub mod families;
pub mod padic;
pub mod partition;
pub mod perm;
pub mod unipotent;

use std::fmt;

use serde::Serialize;

/// Errors returned by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cell ({0},{1}) lies outside the Young diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error("modulus {0} must be at least 2")]
    BadModulus(u64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("p = {p} divides q = {q}: defining characteristic is out of range here")]
    DefiningCharacteristic { p: u32, q: u64 },
    #[error("q = {0} must be odd")]
    EvenFieldSize(u64),
    #[error("e = {e} exceeds n = {n}")]
    OrderExceedsDimension { e: u64, n: u64 },
    #[error("n = {0} is below 5: the alternating group is not simple")]
    AlternatingTooSmall(u32),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree {0} exceeds the supported engine range")]
    DegreeTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

/// The sign ε distinguishing the linear (+1) from the unitary (−1) case of
/// GL_n(εq).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn val(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// ε^i as a sign.
    pub fn pow(self, i: u32) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => {
                if i.is_multiple_of(2) {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidPartition(format!(
                "expected +1 or -1, got {other:?}"
            ))),
        }
    }
}
