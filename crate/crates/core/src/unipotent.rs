//! Cyclotomic values and unipotent character degrees of GL_n(εq).
//!
//! Φ_m(q) is evaluated through the divisor recurrence
//! Φ_m(q) = (q^m − 1) / ∏_{d|m, d<m} Φ_d(q), so that ∏_{d|m} Φ_d(q) = q^m − 1
//! holds exactly. Unipotent characters of GL_n(q) (ε = +1) and GU_n(q)
//! (ε = −1) are labeled by partitions of n with the q-analog hook formula
//!
//!   χ_λ(1) = q^{n(λ)} ∏_{i=1}^n (q^i − ε^i) / ∏_cells (q^h − ε^h),
//!
//! where n(λ) = Σ (i−1)λ_i. Every factor q^i − ε^i is positive for q ≥ 2,
//! so the whole quotient is a ratio of positive integers.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::partition::Partition;
use crate::{Error, Result, Sign};

/// The cyclotomic data attached to (p, q, ε): d = d_p(q) is the order of q
/// modulo p for odd p and modulo 4 for p = 2; e is the order of εq modulo p
/// (so e = 1 for p = 2, where every odd number is 1 mod 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CyclotomicContext {
    pub p: u32,
    pub q: u64,
    pub eps: Sign,
    pub d: u64,
    pub e: u64,
}

impl CyclotomicContext {
    pub fn new(p: u32, q: u64, eps: Sign) -> Result<Self> {
        if p < 2 {
            return Err(Error::BadModulus(p as u64));
        }
        if q.is_multiple_of(p as u64) {
            return Err(Error::DefiningCharacteristic { p, q });
        }
        let (d, e) = if p == 2 {
            (order_mod(q as i64, 4)?, 1)
        } else {
            (
                order_mod(q as i64, p as u64)?,
                order_mod(eps.val() * q as i64, p as u64)?,
            )
        };
        Ok(CyclotomicContext { p, q, eps, d, e })
    }
}

/// A unipotent character degree of GL_n(εq), labeled by λ ⊢ n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentDegree {
    pub lambda: Partition,
    /// n(λ) = Σ (i−1)λ_i, the exponent of the q-part of the degree.
    pub q_exponent: u64,
    pub value: BigUint,
}

/// Φ_m(q), exact, via the divisor recurrence.
pub fn cyclotomic_eval(m: u32, q: u64) -> BigUint {
    assert!(m >= 1 && q >= 2, "need m ≥ 1 and q ≥ 2");
    let mut values: BTreeMap<u32, BigUint> = BTreeMap::new();
    for d in divisors(m) {
        let mut numerator = pow(q, d) - BigUint::one();
        for (&dd, phi) in values.iter() {
            if d % dd == 0 {
                let (quot, rem) = div_rem(&numerator, phi);
                debug_assert!(rem.is_zero());
                let _ = rem;
                numerator = quot;
            }
        }
        values.insert(d, numerator);
    }
    values.remove(&m).unwrap()
}

/// Least t ≥ 1 with q^t ≡ 1 (mod m); q may be negative.
pub fn order_mod(q: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    let a = q.rem_euclid(m as i64) as u64;
    if gcd(a, m) != 1 {
        return Err(Error::NotCoprime(a, m));
    }
    let mut x = a % m;
    let mut t = 1;
    while x != 1 {
        x = x * (a % m) % m;
        t += 1;
    }
    Ok(t)
}

/// ν_p(Φ_m(q)) for odd p not dividing q.
///
/// The value is 0 unless m = d_p(q)·p^t; it equals ν_p(q^{d_p(q)} − 1) at
/// t = 0 and exactly 1 for t ≥ 1.
pub fn phi_p_valuation(m: u32, q: u64, p: u32) -> Result<u64> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::BadModulus(p as u64));
    }
    if q.is_multiple_of(p as u64) {
        return Err(Error::DefiningCharacteristic { p, q });
    }
    let mut value = cyclotomic_eval(m, q);
    let big_p = BigUint::from(p);
    let mut v = 0;
    loop {
        let (quot, rem) = div_rem(&value, &big_p);
        if !rem.is_zero() {
            break;
        }
        value = quot;
        v += 1;
    }
    Ok(v)
}

/// χ_λ(1) for the unipotent character of GL_n(εq) labeled by λ ⊢ n.
pub fn unipotent_degree_gl(lambda: &Partition, q: u64, eps: Sign) -> UnipotentDegree {
    assert!(q >= 2, "q must be at least 2");
    let n = lambda.size();
    let q_exponent: u64 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i0, &part)| i0 as u64 * part as u64)
        .sum();

    // q^i − ε^i > 0 for every i ≥ 1 and q ≥ 2
    let factor = |i: u32| -> BigUint {
        match eps.pow(i) {
            Sign::Plus => pow(q, i) - BigUint::one(),
            Sign::Minus => pow(q, i) + BigUint::one(),
        }
    };

    let mut numerator = pow(q, q_exponent as u32);
    for i in 1..=n {
        numerator *= factor(i);
    }
    let mut denominator = BigUint::one();
    for row in lambda.hook_lengths().rows() {
        for &h in row {
            denominator *= factor(h);
        }
    }
    let (value, rem) = div_rem(&numerator, &denominator);
    debug_assert!(rem.is_zero(), "unipotent degrees are integers");
    let _ = rem;
    UnipotentDegree {
        lambda: lambda.clone(),
        q_exponent,
        value,
    }
}

/// The explicit partitions of p^k labeling k+1 unipotent characters of
/// GL_{p^k}(εq) with distinct degrees divisible by p, whenever p | (q − ε).
///
/// Odd p (p^k ≥ 5): the two-row partitions (p^k − p^j − 1, p^j + 1) for
/// 0 ≤ j < k, plus (p^k − 3, 2, 1). p = 2 (2^k ≥ 8): (2^k − 2^j − 1, 2^j + 1)
/// for 0 ≤ j < k−1, plus (2^k − 3, 2, 1) and (2^k − 4, 2, 1, 1).
pub fn singular_degree_partitions(p: u32, k: u32) -> Result<Vec<Partition>> {
    let pk = (p as u64).checked_pow(k).and_then(|v| u32::try_from(v).ok());
    let pk = match pk {
        Some(v) => v,
        None => return Err(Error::HypothesisViolated("p^k out of range".into())),
    };
    if k < 1 || (p % 2 == 1 && pk < 5) || (p == 2 && pk < 8) {
        return Err(Error::HypothesisViolated(format!(
            "need k ≥ 1 and p^k ≥ 5 (≥ 8 for p = 2); got p^k = {pk}"
        )));
    }
    let mut out = Vec::with_capacity(k as usize + 1);
    if p % 2 == 1 {
        for j in 0..k {
            let pj = p.pow(j);
            out.push(Partition::new(vec![pk - pj - 1, pj + 1])?);
        }
        out.push(Partition::new(vec![pk - 3, 2, 1])?);
    } else {
        for j in 0..k - 1 {
            let pj = 2u32.pow(j);
            out.push(Partition::new(vec![pk - pj - 1, pj + 1])?);
        }
        out.push(Partition::new(vec![pk - 3, 2, 1])?);
        out.push(Partition::new(vec![pk - 4, 2, 1, 1])?);
    }
    Ok(out)
}

/// Report on the family of [`singular_degree_partitions`] evaluated at a
/// concrete (q, ε) with p | (q − ε).
#[derive(Debug, Clone)]
pub struct SingularFamilyReport {
    pub p: u32,
    pub k: u32,
    pub q: u64,
    pub eps: Sign,
    pub degrees: Vec<UnipotentDegree>,
    pub all_divisible: bool,
    pub all_distinct: bool,
}

impl SingularFamilyReport {
    pub fn pass(&self) -> bool {
        self.all_divisible && self.all_distinct
    }
}

/// Evaluates the degree family at (q, ε) and checks that all k+1 degrees are
/// divisible by p and pairwise distinct.
pub fn verify_singular_family(p: u32, k: u32, q: u64, eps: Sign) -> Result<SingularFamilyReport> {
    let diff = q as i64 - eps.val();
    if diff.rem_euclid(p as i64) != 0 {
        return Err(Error::HypothesisViolated(format!(
            "{p} does not divide q − ε = {diff}"
        )));
    }
    let labels = singular_degree_partitions(p, k)?;
    let degrees: Vec<UnipotentDegree> = labels
        .iter()
        .map(|lam| unipotent_degree_gl(lam, q, eps))
        .collect();
    let all_divisible = degrees
        .iter()
        .all(|d| (&d.value % p).is_zero());
    let mut values: Vec<&BigUint> = degrees.iter().map(|d| &d.value).collect();
    values.sort();
    let all_distinct = values.windows(2).all(|w| w[0] != w[1]);
    Ok(SingularFamilyReport {
        p,
        k,
        q,
        eps,
        degrees,
        all_divisible,
        all_distinct,
    })
}

fn pow(q: u64, e: u32) -> BigUint {
    BigUint::from(q).pow(e)
}

fn div_rem(a: &BigUint, b: &BigUint) -> (BigUint, BigUint) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn divisors(m: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}
