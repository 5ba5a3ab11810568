//! Character degrees of S_n and the census of p-singular characters.
//!
//! Degrees come from the hook length formula, n!/∏h, in exact big-integer
//! arithmetic; p-parts come from valuations alone, without any big-integer
//! division. Restriction to A_n follows the classical rule: χ^λ stays
//! irreducible when λ ≠ λ' (and λ, λ' restrict to the same character),
//! while a self-conjugate λ splits into two characters of degree χ^λ(1)/2.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::padic::vp_factorial;
use crate::partition::{partitions_of, Partition};
use crate::{Error, Result};

/// χ^λ(1) = |λ|! / ∏ hook lengths, exact.
pub fn degree(lambda: &Partition) -> BigUint {
    degree_given_factorial(lambda, &factorial(lambda.size()))
}

fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n as u64 {
        acc *= BigUint::from(i);
    }
    acc
}

fn degree_given_factorial(lambda: &Partition, n_factorial: &BigUint) -> BigUint {
    let hooks = lambda.hook_lengths().product();
    let (q, r) = num_integer_div_rem(n_factorial, &hooks);
    debug_assert!(num_traits::Zero::is_zero(&r), "hook product must divide |λ|!");
    let _ = r;
    q
}

fn num_integer_div_rem(a: &BigUint, b: &BigUint) -> (BigUint, BigUint) {
    use num_traits::Zero;
    let q = a / b;
    let r = a - &q * b;
    debug_assert!(r.is_zero() || &r < b);
    (q, r)
}

/// ν_p(χ^λ(1)) = ν_p(n!) − Σ_cells ν_p(h), computed without big integers.
pub fn degree_p_valuation(lambda: &Partition, p: u32) -> u32 {
    let a = vp_factorial(lambda.size() as u64, p);
    let hooks_val: u64 = lambda
        .hook_lengths()
        .rows()
        .iter()
        .flatten()
        .map(|&h| {
            let mut v = 0u64;
            let mut m = h;
            while m % p == 0 {
                m /= p;
                v += 1;
            }
            v
        })
        .sum();
    (a - hooks_val) as u32
}

/// How an S_n character behaves on restriction to A_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrbitKind {
    /// λ ≠ λ': χ^λ and χ^{λ'} restrict to one irreducible A_n character.
    #[serde(rename = "PAIR")]
    Pair,
    /// λ = λ': the restriction splits into two characters of equal degree.
    #[serde(rename = "SPLIT")]
    Split,
}

/// One S_n-orbit of irreducible A_n characters, labeled by {λ, λ'} or by a
/// self-conjugate λ.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    /// The orbit label: λ first (in enumeration order), then λ' when λ ≠ λ'.
    pub label: (Partition, Option<Partition>),
    pub kind: OrbitKind,
    /// χ^λ(1), the S_n degree.
    pub degree_sn: BigUint,
    /// Whether the A_n character(s) in this orbit have degree divisible by p.
    pub p_singular_an: bool,
}

impl OrbitRecord {
    /// Degrees of the A_n characters in the orbit: one value for a pair,
    /// two equal halves for a split.
    pub fn degrees_an(&self) -> Vec<BigUint> {
        match self.kind {
            OrbitKind::Pair => vec![self.degree_sn.clone()],
            OrbitKind::Split => {
                let half = &self.degree_sn / 2u32;
                vec![half.clone(), half]
            }
        }
    }
}

/// The p-singular census of S_n: the count and the degree set.
#[derive(Debug, Clone)]
pub struct SnCensus {
    pub np_sn: u64,
    pub cdp_sn: BTreeSet<BigUint>,
}

/// The full p-singular census of A_n, including the S_n counts.
#[derive(Debug, Clone)]
pub struct OrbitCensus {
    pub n: u32,
    pub p: u32,
    /// Number of p-singular irreducible characters of S_n.
    pub np_sn: u64,
    /// Number of p-singular irreducible characters of A_n.
    pub np_an: u64,
    /// Number of S_n-orbits of p-singular irreducible characters of A_n.
    pub np_star_an: u64,
    /// Degrees of the p-singular S_n characters.
    pub cdp_sn: BTreeSet<BigUint>,
    pub records: Vec<OrbitRecord>,
}

impl OrbitCensus {
    /// Degrees of the p-singular A_n characters (the set cd_p(A_n)).
    pub fn cdp_an(&self) -> BTreeSet<BigUint> {
        let mut set = BTreeSet::new();
        for rec in self.records.iter().filter(|r| r.p_singular_an) {
            for d in rec.degrees_an() {
                set.insert(d);
            }
        }
        set
    }
}

/// Counts the λ ⊢ n with p | χ^λ(1) and collects their degrees.
pub fn census_sn(n: u32, p: u32) -> SnCensus {
    let n_factorial = factorial(n);
    let mut np_sn = 0;
    let mut cdp_sn = BTreeSet::new();
    for lambda in partitions_of(n) {
        if degree_p_valuation(&lambda, p) >= 1 {
            np_sn += 1;
            cdp_sn.insert(degree_given_factorial(&lambda, &n_factorial));
        }
    }
    SnCensus { np_sn, cdp_sn }
}

/// Builds the A_n census for n ≥ 5: one record per unordered pair {λ, λ'}
/// and per self-conjugate λ.
///
/// A pair is p-singular iff p | χ^λ(1). A split is p-singular iff
/// p | χ^λ(1)/2: for odd p that is again p | χ^λ(1), while for p = 2 it
/// requires 4 | χ^λ(1). Orbits of pairs carry one A_n character; p-singular
/// splits carry two.
pub fn census_an(n: u32, p: u32) -> Result<OrbitCensus> {
    if n < 5 {
        return Err(Error::AlternatingTooSmall(n));
    }
    let n_factorial = factorial(n);
    let mut np_sn = 0;
    let mut np_an = 0;
    let mut np_star_an = 0;
    let mut cdp_sn = BTreeSet::new();
    let mut records = Vec::new();

    for lambda in partitions_of(n) {
        let conj = lambda.conjugate();
        let val = degree_p_valuation(&lambda, p);
        if val >= 1 {
            np_sn += 1;
            cdp_sn.insert(degree_given_factorial(&lambda, &n_factorial));
        }
        // visit each unordered pair once, at its enumeration-first member
        // (enumeration is reverse-lexicographic, i.e. descending in Ord)
        if conj > lambda {
            continue;
        }
        let deg = degree_given_factorial(&lambda, &n_factorial);
        let (kind, label, p_singular) = if lambda == conj {
            let singular = if p == 2 { val >= 2 } else { val >= 1 };
            (OrbitKind::Split, (lambda.clone(), None), singular)
        } else {
            (
                OrbitKind::Pair,
                (lambda.clone(), Some(conj.clone())),
                val >= 1,
            )
        };
        if p_singular {
            np_star_an += 1;
            np_an += match kind {
                OrbitKind::Pair => 1,
                OrbitKind::Split => 2,
            };
        }
        records.push(OrbitRecord {
            label,
            kind,
            degree_sn: deg,
            p_singular_an: p_singular,
        });
    }

    Ok(OrbitCensus {
        n,
        p,
        np_sn,
        np_an,
        np_star_an,
        cdp_sn,
        records,
    })
}
