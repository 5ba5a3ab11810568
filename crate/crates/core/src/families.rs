//! Explicit partition families certifying lower bounds on the number of
//! S_n-orbits of p-singular irreducible characters of A_n, for n ≥ 25 in
//! the nonabelian-Sylow regime p² ≤ n.
//!
//! Each family fixes one or more p-cores μ with |μ| ≥ p and lists
//! partitions of n whose p-core is μ and whose p-weight is positive. Since
//! |μ| ≥ p forces a − d ≥ 1, every such character degree is divisible by p
//! (and by 4 when p = 2 and |μ| ≥ 4, which covers the splits of
//! self-conjugate labels). [`validate_families`] re-derives all of this
//! numerically instead of trusting the construction.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::characters::degree_p_valuation;
use crate::padic::dl_sylow_symmetric;
use crate::partition::{from_beta_set, p_cores_of_size, Partition};
use crate::{Error, Result};

/// Which branch of the case analysis produced a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// p ≥ 5, n ≢ 0 (mod p)
    P5R1,
    /// p ≥ 5, p | n
    P5R0,
    /// p = 3, n ≡ 1 (mod 3)
    P3S1,
    /// p = 3, n ≡ 2 (mod 3)
    P3S2,
    /// p = 3, 3 | n
    P3S3,
    /// p = 2, n odd
    P2Odd,
    /// p = 2, n even
    P2Even,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::P5R1 => "P5_R1",
            CaseTag::P5R0 => "P5_R0",
            CaseTag::P3S1 => "P3_S1",
            CaseTag::P3S2 => "P3_S2",
            CaseTag::P3S3 => "P3_S3",
            CaseTag::P2Odd => "P2_ODD",
            CaseTag::P2Even => "P2_EVEN",
        }
    }
}

impl Serialize for CaseTag {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// A constructed family: the expected cores and the members, each tagged
/// with the index of its expected core.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub n: u32,
    pub p: u32,
    pub case_tag: CaseTag,
    pub expected_cores: Vec<Partition>,
    /// (member, index into expected_cores)
    pub members: Vec<(Partition, usize)>,
}

/// The six validation assertions, each independent of the construction.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FamilyAssertions {
    /// every member is a partition of n
    pub partition_of_n: bool,
    /// the abacus recovers the expected core, with positive weight
    pub core_recovered: bool,
    pub pairwise_distinct: bool,
    /// no member equals the conjugate of another member
    pub conjugate_free: bool,
    /// degrees divisible by p; self-conjugate members by 4 when p = 2
    pub degree_divisibility: bool,
    /// member count ≥ ⌊log_p n⌋
    pub count_at_least_bound: bool,
}

impl FamilyAssertions {
    pub fn all(&self) -> bool {
        self.partition_of_n
            && self.core_recovered
            && self.pairwise_distinct
            && self.conjugate_free
            && self.degree_divisibility
            && self.count_at_least_bound
    }
}

/// Validation outcome for one family.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub n: u32,
    pub p: u32,
    pub case_tag: CaseTag,
    pub count: u64,
    /// ⌊log_p n⌋, the derived-length bound the family must dominate.
    pub bound: u32,
    pub assertions: FamilyAssertions,
    /// Members equal to their own conjugate (legal; they restrict to splits).
    pub self_conjugate: Vec<Partition>,
    /// Human-readable descriptions of any failed assertion.
    pub witnesses: Vec<String>,
}

impl FamilyReport {
    pub fn pass(&self) -> bool {
        self.assertions.all()
    }
}

fn hook_shape(arm: u32, ones: u32) -> Vec<u32> {
    let mut parts = Vec::with_capacity(1 + ones as usize);
    parts.push(arm);
    parts.extend(std::iter::repeat_n(1, ones as usize));
    parts
}

/// Generates the family for (n, p); requires n ≥ 25 and p² ≤ n.
pub fn alternating_families(n: u32, p: u32) -> Result<FamilySpec> {
    if n < 25 {
        return Err(Error::HypothesisViolated(format!(
            "families start at n = 25; got n = {n}"
        )));
    }
    if (p as u64) * (p as u64) > n as u64 {
        return Err(Error::HypothesisViolated(format!(
            "need p² ≤ n for a nonabelian Sylow subgroup; got p = {p}, n = {n}"
        )));
    }

    let mut cores: Vec<Partition> = Vec::new();
    let mut members: Vec<(Partition, usize)> = Vec::new();
    let push = |parts: Vec<u32>, core_idx: usize, members: &mut Vec<(Partition, usize)>| -> Result<()> {
        members.push((Partition::new(parts)?, core_idx));
        Ok(())
    };

    let case_tag = match (p, n % p) {
        (2, 1) => {
            // n odd: hooks and two-row shapes over the core (2,1), plus
            // shapes over the staircase core (5,4,3,2,1)
            cores.push(Partition::new(vec![2, 1])?);
            cores.push(Partition::new(vec![5, 4, 3, 2, 1])?);
            for k in 0..=((n - 3) / 4 - 1) {
                push(hook_shape(n - 1 - 2 * k, 2 * k + 1), 0, &mut members)?;
            }
            for k in 1..=((n - 2) / 4) {
                push(vec![n - 1 - 2 * k, 2 * k + 1], 0, &mut members)?;
            }
            for l in 0..=((n - 15) / 4) {
                let mut parts = vec![n - 10 - 2 * l, 4, 3, 2];
                parts.extend(std::iter::repeat_n(1, (2 * l + 1) as usize));
                push(parts, 1, &mut members)?;
            }
            for l in 1..=((n - 14) / 4) {
                push(vec![n - 10 - 2 * l, 2 * l + 4, 3, 2, 1], 1, &mut members)?;
            }
            CaseTag::P2Odd
        }
        (2, 0) => {
            cores.push(Partition::new(vec![3, 2, 1])?);
            cores.push(Partition::new(vec![4, 3, 2, 1])?);
            for k in 0..=((n - 6) / 4) {
                let mut parts = vec![n - 3 - 2 * k, 2];
                parts.extend(std::iter::repeat_n(1, (2 * k + 1) as usize));
                push(parts, 0, &mut members)?;
            }
            for k in 1..=((n - 5) / 4) {
                push(vec![n - 3 - 2 * k, 2 * k + 2, 1], 0, &mut members)?;
            }
            for l in 0..=((n - 10) / 4) {
                let mut parts = vec![n - 6 - 2 * l, 3, 2];
                parts.extend(std::iter::repeat_n(1, (2 * l + 1) as usize));
                push(parts, 1, &mut members)?;
            }
            for l in 1..=((n - 9) / 4) {
                push(vec![n - 6 - 2 * l, 2 * l + 3, 2, 1], 1, &mut members)?;
            }
            CaseTag::P2Even
        }
        (3, 1) => {
            cores.push(Partition::new(vec![3, 1])?);
            for k in 0..=((n - 4) / 3) {
                push(hook_shape(n - 1 - 3 * k, 3 * k + 1), 0, &mut members)?;
            }
            for k in 1..=((n - 2) / 6) {
                push(vec![n - 1 - 3 * k, 3 * k + 1], 0, &mut members)?;
            }
            CaseTag::P3S1
        }
        (3, 2) => {
            cores.push(Partition::new(vec![3, 1, 1])?);
            cores.push(Partition::new(vec![4, 2, 1, 1])?);
            for k in 0..=((n - 4) / 6) {
                push(hook_shape(n - 2 - 3 * k, 3 * k + 2), 0, &mut members)?;
            }
            for k in 1..=((n - 3) / 6) {
                push(vec![n - 2 - 3 * k, 3 * k + 1, 1], 0, &mut members)?;
            }
            for l in 0..=((n - 8) / 6) {
                let mut parts = vec![n - 4 - 3 * l, 2];
                parts.extend(std::iter::repeat_n(1, (2 + 3 * l) as usize));
                push(parts, 1, &mut members)?;
            }
            CaseTag::P3S2
        }
        (3, 0) => {
            cores.push(Partition::new(vec![4, 2])?);
            for k in 0..=(n / 3 - 2) {
                let mut parts = vec![n - 2 - 3 * k, 2];
                parts.extend(std::iter::repeat_n(1, (3 * k) as usize));
                push(parts, 0, &mut members)?;
            }
            for k in 1..=((n - 4) / 6) {
                push(vec![n - 2 - 3 * k, 2 + 3 * k], 0, &mut members)?;
            }
            CaseTag::P3S3
        }
        (p, 0) => {
            // p ≥ 5, p | n: one core (p−2, 2)
            cores.push(Partition::new(vec![p - 2, 2])?);
            for k in 0..=(n / p - 1) {
                let mut parts = vec![n - 2 - p * k, 2];
                parts.extend(std::iter::repeat_n(1, (p * k) as usize));
                push(parts, 0, &mut members)?;
            }
            for k in 1..=((n - 4) / (2 * p)) {
                push(vec![n - 2 - p * k, 2 + p * k], 0, &mut members)?;
            }
            CaseTag::P5R0
        }
        (p, r) => {
            // p ≥ 5, 1 ≤ r ≤ p−1: hooks and near-hooks over μ_1 = (p, 1^r),
            // plus one long-row partition over a p-core of size pj + r for
            // each j = 2, …, p−1
            cores.push(Partition::new(hook_shape(p, r))?);
            for k in 0..=((n - 1 - 2 * r) / (2 * p)) {
                push(hook_shape(n - r - k * p, r + k * p), 0, &mut members)?;
            }
            for k in 1..=((n - 1 - r) / (2 * p)) {
                let mut parts = vec![n - r - p * k, 1 + p * k];
                parts.extend(std::iter::repeat_n(1, r as usize - 1));
                push(parts, 0, &mut members)?;
            }
            for j in 2..p {
                let mu = first_core_of_size(p * j + r, p);
                let mut parts = mu.parts().to_vec();
                parts[0] += n - r - p * j;
                let idx = cores.len();
                cores.push(mu);
                push(parts, idx, &mut members)?;
            }
            CaseTag::P5R1
        }
    };

    Ok(FamilySpec {
        n,
        p,
        case_tag,
        expected_cores: cores,
        members,
    })
}

/// Checks the six assertions on a family and reports witnesses for any
/// failure.
pub fn validate_families(spec: &FamilySpec) -> FamilyReport {
    let FamilySpec { n, p, .. } = *spec;
    let mut witnesses = Vec::new();

    let partition_of_n = spec.members.iter().all(|(m, _)| m.size() == n);
    if !partition_of_n {
        for (m, _) in spec.members.iter().filter(|(m, _)| m.size() != n) {
            witnesses.push(format!("{m} has size {} instead of {n}", m.size()));
        }
    }

    let mut core_recovered = true;
    for (m, idx) in &spec.members {
        let cw = m.p_core_and_weight(p);
        if cw.core != spec.expected_cores[*idx] || cw.weight == 0 {
            core_recovered = false;
            witnesses.push(format!(
                "{m}: core {} weight {} (expected core {})",
                cw.core, cw.weight, spec.expected_cores[*idx]
            ));
        }
    }

    let distinct: HashSet<&Partition> = spec.members.iter().map(|(m, _)| m).collect();
    let pairwise_distinct = distinct.len() == spec.members.len();
    if !pairwise_distinct {
        witnesses.push("members repeat".into());
    }

    let mut conjugate_free = true;
    let mut self_conjugate = Vec::new();
    for (i, (m, _)) in spec.members.iter().enumerate() {
        let conj = m.conjugate();
        if conj == *m {
            self_conjugate.push(m.clone());
            continue;
        }
        for (k, (other, _)) in spec.members.iter().enumerate() {
            if i != k && *other == conj {
                conjugate_free = false;
                witnesses.push(format!("{m} is conjugate to member {other}"));
            }
        }
    }

    let mut degree_divisibility = true;
    for (m, _) in &spec.members {
        let val = degree_p_valuation(m, p);
        let needed = if p == 2 && m.conjugate() == *m { 2 } else { 1 };
        if val < needed {
            degree_divisibility = false;
            witnesses.push(format!("{m}: ν_{p}(degree) = {val} < {needed}"));
        }
    }

    let bound = dl_sylow_symmetric(n as u64, p);
    let count = spec.members.len() as u64;
    let count_at_least_bound = count >= bound as u64;
    if !count_at_least_bound {
        witnesses.push(format!("count {count} below bound {bound}"));
    }

    FamilyReport {
        n,
        p,
        case_tag: spec.case_tag,
        count,
        bound,
        assertions: FamilyAssertions {
            partition_of_n,
            core_recovered,
            pairwise_distinct,
            conjugate_free,
            degree_divisibility,
            count_at_least_bound,
        },
        self_conjugate,
        witnesses,
    }
}

/// A deterministic p-core of size m (p ≥ 4; such a core always exists).
///
/// Small sizes take the first core in enumeration order. Past the point
/// where enumerating all partitions of m stops being cheap, the core is
/// built directly on the abacus from the lexicographically smallest runner
/// charge vector realizing m; only the size of the core matters to callers.
fn first_core_of_size(m: u32, p: u32) -> Partition {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Partition>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(m, p)) {
        return hit.clone();
    }
    let core = if m <= 54 {
        p_cores_of_size(m, p)
            .into_iter()
            .next()
            .expect("a p-core of every size exists for p ≥ 4")
    } else {
        abacus_core_of_size(m, p)
    };
    debug_assert!(core.is_p_core(p) && core.size() == m);
    cache.lock().unwrap().insert((m, p), core.clone());
    core
}

/// Builds a p-core of size m from runner charges.
///
/// A p-core corresponds to charges (c_0, …, c_{p−1}) with Σc_i = 0 and
/// |core| = (p/2)·Σc_i² + Σ i·c_i. Working in doubled units to stay in
/// integers, a memoized search finds the lexicographically smallest charge
/// vector hitting 2m, and the bead configuration it describes is read back
/// off the abacus.
fn abacus_core_of_size(m: u32, p: u32) -> Partition {
    assert!(p >= 4, "sizes can be missed for p < 4");
    let mut search = ChargeSearch::new(p as i64, 2 * m as i64);
    let charges = search.solve().unwrap_or_else(|| {
        panic!("no {p}-core of size {m} within the charge bound");
    });

    // read the partition off the abacus: runner i holds t_base + c_i beads
    let t_base = search.cmax + 1;
    let mut beta = Vec::new();
    for (i, &c) in charges.iter().enumerate() {
        for level in 0..(t_base + c) {
            beta.push(i as u32 + level as u32 * p);
        }
    }
    from_beta_set(beta)
}

struct ChargeSearch {
    p: i64,
    cmax: i64,
    target: i64,
    /// min/max total contribution achievable by runners i..p−1
    min_rest: Vec<i64>,
    max_rest: Vec<i64>,
    memo: HashMap<(i64, i64, i64), bool>,
}

impl ChargeSearch {
    fn new(p: i64, target: i64) -> Self {
        // a single |c| beyond cmax cannot be compensated by the others
        let mut cmax = 1i64;
        while p * cmax * cmax - 2 * (p - 1) * cmax <= target + (p - 1) * (p - 1) {
            cmax += 1;
        }
        let contrib = |i: i64, c: i64| p * c * c + 2 * i * c;
        let per_min: Vec<i64> = (0..p)
            .map(|i| (-cmax..=cmax).map(|c| contrib(i, c)).min().unwrap())
            .collect();
        let per_max: Vec<i64> = (0..p)
            .map(|i| (-cmax..=cmax).map(|c| contrib(i, c)).max().unwrap())
            .collect();
        let mut min_rest = vec![0i64; p as usize + 1];
        let mut max_rest = vec![0i64; p as usize + 1];
        for i in (0..p as usize).rev() {
            min_rest[i] = min_rest[i + 1] + per_min[i];
            max_rest[i] = max_rest[i + 1] + per_max[i];
        }
        ChargeSearch {
            p,
            cmax,
            target,
            min_rest,
            max_rest,
            memo: HashMap::new(),
        }
    }

    fn contrib(&self, i: i64, c: i64) -> i64 {
        self.p * c * c + 2 * i * c
    }

    /// Can runners i..p−1 contribute total charge s and doubled size z?
    fn feasible(&mut self, i: i64, s: i64, z: i64) -> bool {
        if i == self.p {
            return s == 0 && z == 0;
        }
        if s.abs() > (self.p - i) * self.cmax
            || z < self.min_rest[i as usize]
            || z > self.max_rest[i as usize]
        {
            return false;
        }
        if let Some(&hit) = self.memo.get(&(i, s, z)) {
            return hit;
        }
        let mut ok = false;
        for c in -self.cmax..=self.cmax {
            if self.feasible(i + 1, s - c, z - self.contrib(i, c)) {
                ok = true;
                break;
            }
        }
        self.memo.insert((i, s, z), ok);
        ok
    }

    /// The lexicographically smallest charge vector realizing the target.
    fn solve(&mut self) -> Option<Vec<i64>> {
        if !self.feasible(0, 0, self.target) {
            return None;
        }
        let mut charges = Vec::with_capacity(self.p as usize);
        let (mut s, mut z) = (0i64, self.target);
        for i in 0..self.p {
            let c = (-self.cmax..=self.cmax)
                .find(|&c| self.feasible(i + 1, s - c, z - self.contrib(i, c)))?;
            charges.push(c);
            s -= c;
            z -= self.contrib(i, c);
        }
        Some(charges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn family_26_5() {
        let spec = alternating_families(26, 5).unwrap();
        assert_eq!(spec.case_tag, CaseTag::P5R1);
        assert_eq!(spec.members.len(), 8);
        let members: Vec<&Partition> = spec.members.iter().map(|(m, _)| m).collect();
        assert_eq!(members[0], &p(&[25, 1]));
        assert_eq!(members[1], &p(&[20, 1, 1, 1, 1, 1, 1]));
        assert_eq!(members[2], &"15,1^11".parse().unwrap());
        assert_eq!(members[3], &p(&[20, 6]));
        assert_eq!(members[4], &p(&[15, 11]));
        // the three remaining members sit over cores of sizes 11, 16, 21
        assert_eq!(spec.expected_cores.len(), 4);
        assert_eq!(spec.expected_cores[1].size(), 11);
        assert_eq!(spec.expected_cores[2].size(), 16);
        assert_eq!(spec.expected_cores[3].size(), 21);
        let report = validate_families(&spec);
        assert!(report.pass(), "{:?}", report.witnesses);
        assert_eq!(report.bound, 2);
    }

    #[test]
    fn family_25_2() {
        let spec = alternating_families(25, 2).unwrap();
        assert_eq!(spec.case_tag, CaseTag::P2Odd);
        assert_eq!(spec.members.len(), 15);
        let report = validate_families(&spec);
        assert!(report.pass(), "{:?}", report.witnesses);
        assert_eq!(report.bound, 4);
    }

    #[test]
    fn family_27_3() {
        let spec = alternating_families(27, 3).unwrap();
        assert_eq!(spec.case_tag, CaseTag::P3S3);
        assert_eq!(spec.expected_cores, vec![p(&[4, 2])]);
        assert_eq!(spec.members.len(), 11);
        assert!(validate_families(&spec).pass());
    }

    #[test]
    fn family_25_3() {
        let spec = alternating_families(25, 3).unwrap();
        assert_eq!(spec.case_tag, CaseTag::P3S1);
        assert!(validate_families(&spec).pass());
    }

    #[test]
    fn preconditions() {
        assert!(alternating_families(24, 2).is_err());
        assert!(alternating_families(26, 7).is_err()); // 49 > 26
    }

    #[test]
    fn count_lower_bounds() {
        // closed-form bounds on the member count, as exact inequalities
        for n in 25..=80u32 {
            for prime in [2u32, 3, 5, 7] {
                if prime * prime > n {
                    continue;
                }
                let spec = alternating_families(n, prime).unwrap();
                let count = spec.members.len() as u64;
                match spec.case_tag {
                    CaseTag::P5R1 => {
                        assert!(prime as u64 * count >= n as u64 + (prime as u64) * (prime as u64) - 5 * prime as u64)
                    }
                    CaseTag::P5R0 | CaseTag::P3S1 | CaseTag::P3S2 | CaseTag::P3S3 => {
                        assert!(prime as u64 * count >= n as u64)
                    }
                    CaseTag::P2Odd => assert!(count >= n as u64 - 12),
                    CaseTag::P2Even => assert!(count >= n as u64 - 10),
                }
            }
        }
    }

    #[test]
    fn abacus_core_agrees_with_enumeration() {
        for m in 7..=30u32 {
            for prime in [5u32, 7, 11, 13] {
                let built = abacus_core_of_size(m, prime);
                assert_eq!(built.size(), m);
                assert!(built.is_p_core(prime), "{built} is not a {prime}-core");
            }
        }
    }

    #[test]
    fn large_core_sizes_work() {
        for prime in [11u32, 13] {
            for m in [60u32, 101, 157, 168] {
                let core = first_core_of_size(m, prime);
                assert_eq!(core.size(), m);
                assert!(core.is_p_core(prime));
            }
        }
    }
}
