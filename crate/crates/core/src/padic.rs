//! p-adic digits and closed-form derived lengths of Sylow subgroups.
//!
//! For n with p-adic expansion a_0 + a_1 p + … + a_k p^k (a_k ≠ 0), the
//! Sylow p-subgroup of S_n is the direct product of iterated wreath towers
//! ∏ (P_{p^i})^{a_i}, so its derived length is exactly k (Kaloujnine);
//! the analogous wreath description of Weir and Carter–Fong gives k+1 for
//! GL_n(εq) in non-defining characteristic. The Mann bound on p-group
//! derived lengths and the logarithmic GL bounds round out the toolkit.

use serde::Serialize;

use crate::{Error, Result, Sign};

/// The base-p digits a_0..a_k of n, with a_k ≠ 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PadicExpansion {
    pub n: u64,
    pub p: u32,
    pub digits: Vec<u32>,
}

impl PadicExpansion {
    /// k = ⌊log_p n⌋, the index of the leading digit.
    pub fn k(&self) -> u32 {
        self.digits.len() as u32 - 1
    }
}

/// A derived-length value known only up to a two-element range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DlRange {
    pub lo: u32,
    pub hi: u32,
}

impl DlRange {
    pub fn exact(v: u32) -> Self {
        DlRange { lo: v, hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Classical-group families whose Sylow 2-subgroups are handled by the
/// Carter–Fong wreath description.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassicalFamily {
    /// Sp_{2n}(q)
    Sp,
    /// O_{2n+1}(q)
    SoOdd,
    /// O_{2n}^±(q)
    SoEven,
}

/// Base-p digits of n ≥ 1.
pub fn padic_digits(n: u64, p: u32) -> Result<PadicExpansion> {
    if n == 0 {
        return Err(Error::NotPositive("n"));
    }
    if p < 2 {
        return Err(Error::BadModulus(p as u64));
    }
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push((m % p as u64) as u32);
        m /= p as u64;
    }
    Ok(PadicExpansion { n, p, digits })
}

/// ⌊log_p n⌋ for n ≥ 1, and 0 for n = 0.
fn floor_log(n: u64, p: u32) -> u32 {
    let mut k = 0;
    let mut m = n;
    while m >= p as u64 {
        m /= p as u64;
        k += 1;
    }
    k
}

/// Derived length of a Sylow p-subgroup of S_n: the leading index k of the
/// p-adic expansion of n. For n < p the Sylow subgroup is trivial and the
/// value is 0; for p ≤ n < p² it is elementary abelian and the value is 1.
pub fn dl_sylow_symmetric(n: u64, p: u32) -> u32 {
    assert!(p >= 2, "p must be at least 2");
    floor_log(n, p)
}

/// Derived length of a Sylow p-subgroup of GL_n(εq), p not dividing q.
///
/// For odd p, write n = ew + r with e the order of εq modulo p; the Sylow
/// subgroup is a product of wreath towers C_{p^b} ≀ P_{p^i} over the p-adic
/// digits of w, of derived length k+1 where k is w's leading index (0 when
/// w = 0, i.e. the Sylow subgroup is trivial). For p = 2 the Carter–Fong
/// base groups (wreath C_{2^b} ≀ C_2 or semidihedral) both have derived
/// length 2 and the same tower formula applies directly to the 2-adic
/// digits of n.
pub fn dl_sylow_gl(n: u64, q: u64, eps: Sign, p: u32) -> Result<u32> {
    assert!(p >= 2, "p must be at least 2");
    if q.is_multiple_of(p as u64) {
        return Err(Error::DefiningCharacteristic { p, q });
    }
    if n == 0 {
        return Ok(0);
    }
    let w = if p == 2 {
        n
    } else {
        let eq = signed_mod(eps.val() * (q % p as u64) as i64, p as u64);
        let e = order_of(eq, p as u64);
        n / e
    };
    if w == 0 {
        Ok(0)
    } else {
        Ok(floor_log(w, p) + 1)
    }
}

/// Derived length of a Sylow 2-subgroup of a classical group, from the
/// leading index k of the 2-adic expansion of 2n: exactly k+1 for Sp_{2n}(q)
/// and O_{2n+1}(q), and {k, k+1} for O_{2n}^±(q), where the value is not
/// pinned down by the wreath description.
pub fn dl_sylow_classical_p2(family: ClassicalFamily, n: u64, q: u64) -> Result<DlRange> {
    if n == 0 {
        return Err(Error::NotPositive("n"));
    }
    if q.is_multiple_of(2) {
        return Err(Error::EvenFieldSize(q));
    }
    let k = floor_log(2 * n, 2);
    Ok(match family {
        ClassicalFamily::Sp | ClassicalFamily::SoOdd => DlRange::exact(k + 1),
        ClassicalFamily::SoEven => DlRange { lo: k, hi: k + 1 },
    })
}

/// The best derived-length bound for a p-group of order p^log_order: the
/// largest d = k+1 with 2^k + 2k − 2 ≤ log_order (Mann).
pub fn mann_max_dl(log_order: u32) -> u32 {
    assert!(log_order >= 1, "log_order must be positive");
    let mut k = 0u32;
    while (1u64 << (k + 1)) + 2 * (k as u64 + 1) - 2 <= log_order as u64 {
        k += 1;
    }
    k + 1
}

/// ⌊log₂ n⌋ + 1: derived-length bound for finite p-subgroups of GL_n over
/// any field.
pub fn dl_upper_log(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::NotPositive("n"));
    }
    Ok(floor_log(n, 2) + 1)
}

/// ⌊log₂(n/e)⌋ + 1, the refinement of [`dl_upper_log`] by the order e of q
/// modulo p; requires e ≤ n.
pub fn dl_upper_log_e(n: u64, e: u64) -> Result<u32> {
    if n == 0 || e == 0 {
        return Err(Error::NotPositive("n and e"));
    }
    if e > n {
        return Err(Error::OrderExceedsDimension { e, n });
    }
    // largest t with 2^t · e ≤ n, in integer arithmetic
    let mut t = 0;
    while (2u64 << t) * e <= n {
        t += 1;
    }
    Ok(t + 1)
}

/// The primes up to and including n, by sieve.
pub fn primes_upto(n: u32) -> Vec<u32> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// ν_p(n!) = Σ_{i≥1} ⌊n/p^i⌋ (Legendre).
pub fn vp_factorial(n: u64, p: u32) -> u64 {
    assert!(p >= 2, "p must be at least 2");
    let mut total = 0;
    let mut q = n / p as u64;
    while q > 0 {
        total += q;
        q /= p as u64;
    }
    total
}

fn signed_mod(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

/// Multiplicative order of a modulo m for gcd(a, m) = 1; callers guarantee
/// coprimality.
fn order_of(a: u64, m: u64) -> u64 {
    debug_assert!(m >= 2);
    let a = a % m;
    debug_assert!(a != 0, "a and m must be coprime");
    let mut x = a;
    let mut t = 1;
    while x != 1 {
        x = x * a % m;
        t += 1;
    }
    t
}
