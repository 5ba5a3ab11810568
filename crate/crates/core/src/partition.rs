//! Integer partitions, hooks and p-core combinatorics.
//!
//! A [`Partition`] stores weakly decreasing positive parts with no trailing
//! zeros; the empty partition is the unique partition of 0. Cells of the
//! Young diagram are addressed 1-based, matching the usual (i,j) notation.
//!
//! The p-core of a partition is computed two independent ways: the abacus
//! (beta-set) method in [`Partition::p_core_and_weight`], and literal
//! rim-hook removal in [`Partition::remove_rim_hook`], which the test suite
//! plays against each other in randomized orders.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting increasing runs, zeros and overflowing
    /// sizes.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        if parts.iter().map(|&x| x as u64).sum::<u64>() > u32::MAX as u64 {
            return Err(Error::InvalidPartition("partition too large".into()));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts (rows of the Young diagram).
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The conjugate partition λ', obtained by transposing the diagram:
    /// λ'_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut conj = vec![0u32; cols];
        for &part in &self.parts {
            for c in conj.iter_mut().take(part as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// True when the cell (i,j), 1-based, lies in the diagram.
    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.parts.len() && j <= self.parts[i - 1] as usize
    }

    /// Hook lengths h_{i,j} = λ_i − j + λ'_j − i + 1 for every cell.
    pub fn hook_lengths(&self) -> HookGrid {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i0, &len)| {
                (0..len as usize)
                    .map(|j0| len - j0 as u32 + conj.parts[j0] - i0 as u32 - 1)
                    .collect()
            })
            .collect();
        HookGrid { rows }
    }

    /// First-column hook lengths h_{i,1} = λ_i + r − i, a strictly
    /// decreasing sequence (the minimal beta-set of λ).
    pub fn first_column_hooks(&self) -> Vec<u32> {
        let r = self.parts.len() as u32;
        self.parts
            .iter()
            .enumerate()
            .map(|(i0, &part)| part + r - i0 as u32 - 1)
            .collect()
    }

    /// Removes the rim hook anchored at the 1-based cell (i,j).
    ///
    /// The rim hook is the border strip of cells (r,c) with r ≥ i, c ≥ j
    /// and (r+1,c+1) outside the diagram; deleting it shifts rows i..λ'_j
    /// and leaves a
    /// partition whose size dropped by exactly h_{i,j}.
    pub fn remove_rim_hook(&self, cell: (usize, usize)) -> Result<Partition> {
        let (i, j) = cell;
        if !self.contains_cell(i, j) {
            return Err(Error::CellOutsideDiagram(i, j));
        }
        let conj = self.conjugate();
        let s = conj.parts[j - 1] as usize; // last row meeting column j
        let mut parts = self.parts.clone();
        for r in i..s {
            parts[r - 1] = self.parts[r] - 1;
        }
        parts[s - 1] = j as u32 - 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Ok(Partition { parts })
    }

    /// All 1-based cells anchoring a rim hook of length exactly `len`.
    pub fn rim_hook_cells(&self, len: u32) -> Vec<(usize, usize)> {
        let grid = self.hook_lengths();
        let mut cells = Vec::new();
        for (i0, row) in grid.rows.iter().enumerate() {
            for (j0, &h) in row.iter().enumerate() {
                if h == len {
                    cells.push((i0 + 1, j0 + 1));
                }
            }
        }
        cells
    }

    /// The p-core and p-weight of λ, by the abacus.
    ///
    /// The beta-set is the first-column hook set padded with 0,1,…  so its
    /// size is the least multiple of p covering all parts; beads are
    /// distributed on p runners and pushed down, each one-step push
    /// accounting for one removed p-rim-hook. Only the core and weight are
    /// exposed, which are independent of the padding convention.
    ///
    /// ```
    /// use charcomb::partition::Partition;
    /// let lambda: Partition = "4,3".parse().unwrap();
    /// let cw = lambda.p_core_and_weight(2);
    /// assert_eq!(cw.core.to_string(), "2,1");
    /// assert_eq!(cw.weight, 2);
    /// ```
    pub fn p_core_and_weight(&self, p: u32) -> CoreWeight {
        assert!(p >= 2, "p must be at least 2");
        let r = self.parts.len();
        if r == 0 {
            return CoreWeight {
                core: Partition::empty(),
                weight: 0,
            };
        }
        let t = r.div_ceil(p as usize) * p as usize;
        // beta[i] = λ_{i+1} + t − (i+1) over i = 0..t, with λ_i = 0 past the end
        let beta: Vec<u32> = (0..t)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + (t - 1 - i) as u32)
            .collect();

        let mut runners: Vec<Vec<u32>> = vec![Vec::new(); p as usize];
        for &b in &beta {
            runners[(b % p) as usize].push(b / p);
        }

        let mut weight = 0u32;
        let mut new_beta = Vec::with_capacity(t);
        for (residue, mut levels) in runners.into_iter().enumerate() {
            levels.sort_unstable();
            for (rank, level) in levels.iter().enumerate() {
                weight += level - rank as u32;
                new_beta.push(residue as u32 + rank as u32 * p);
            }
        }

        let core = from_beta_set(new_beta);
        debug_assert_eq!(
            self.size(),
            core.size() + p * weight,
            "core size plus p times weight must recover |λ|"
        );
        CoreWeight { core, weight }
    }

    /// True iff no hook length of λ is divisible by p (equivalently, λ has
    /// p-weight 0).
    ///
    /// Uses the beta-set test: λ is a p-core iff for every first-column hook
    /// b ≥ p the value b − p is again a first-column hook.
    pub fn is_p_core(&self, p: u32) -> bool {
        assert!(p >= 2, "p must be at least 2");
        let hooks = self.first_column_hooks();
        let set: std::collections::HashSet<u32> = hooks.iter().copied().collect();
        hooks.iter().all(|&b| b < p || set.contains(&(b - p)))
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. `5,4,1`; the empty partition prints as
    /// the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for part in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `5,4,1` as well as the exponent shorthand `5,1^3`; the empty
    /// string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (value, mult) = match token.split_once('^') {
                Some((v, m)) => {
                    let mult: u32 = m
                        .trim()
                        .parse()
                        .map_err(|_| Error::InvalidPartition(format!("bad exponent in {token:?}")))?;
                    (v.trim(), mult)
                }
                None => (token, 1),
            };
            let value: u32 = value
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {token:?}")))?;
            for _ in 0..mult {
                parts.push(value);
            }
        }
        Partition::new(parts)
    }
}

/// Hook lengths of a partition, one row per row of the Young diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<u32>>,
}

impl HookGrid {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// h_{i,j} for a 1-based cell.
    pub fn at(&self, i: usize, j: usize) -> Option<u32> {
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    /// All hook lengths, sorted ascending.
    pub fn multiset(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Product of all hook lengths, exact.
    pub fn product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &h in self.rows.iter().flatten() {
            acc *= BigUint::from(h);
        }
        acc
    }
}

/// The p-core of a partition together with the number of p-hooks removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreWeight {
    pub core: Partition,
    pub weight: u32,
}

/// Iterator over all partitions of n in reverse-lexicographic order,
/// starting at (n) and ending at (1,1,…,1).
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = next_partition(&current);
        Some(Partition {
            parts: current,
        })
    }
}

fn next_partition(parts: &[u32]) -> Option<Vec<u32>> {
    // Find the last part exceeding 1, decrement it, and redistribute the
    // remainder greedily; all-ones is the final partition.
    let pivot = parts.iter().rposition(|&x| x > 1)?;
    let mut out: Vec<u32> = parts[..pivot].to_vec();
    let cap = parts[pivot] - 1;
    let mut rest: u32 = parts[pivot..].iter().sum::<u32>();
    while rest > 0 {
        let take = rest.min(cap);
        out.push(take);
        rest -= take;
    }
    Some(out)
}

/// Yields every partition of n exactly once, in reverse-lexicographic order.
pub fn partitions_of(n: u32) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// p(n), the number of partitions of n, by Euler's pentagonal-number
/// recurrence in exact arithmetic.
pub fn count_partitions(n: u32) -> BigUint {
    let n = n as usize;
    let mut table: Vec<num_bigint::BigInt> = Vec::with_capacity(n + 1);
    table.push(num_bigint::BigInt::one());
    for i in 1..=n {
        let mut acc = num_bigint::BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign_positive = k % 2 == 1;
            let mut term = table[i - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                term += &table[i - g2];
            }
            if sign_positive {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
        table.push(acc);
    }
    table
        .pop()
        .unwrap()
        .to_biguint()
        .expect("partition counts are non-negative")
}

/// All p-cores of size m, by filtering the enumeration of partitions of m.
pub fn p_cores_of_size(m: u32, p: u32) -> Vec<Partition> {
    partitions_of(m).filter(|mu| mu.is_p_core(p)).collect()
}

/// Reconstructs a partition from a beta-set of distinct values: sort
/// descending and subtract the staircase.
pub(crate) fn from_beta_set(mut beta: Vec<u32>) -> Partition {
    let t = beta.len();
    beta.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert!(beta.windows(2).all(|w| w[0] > w[1]), "beta values collide");
    let mut parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(idx, &b)| b - (t - 1 - idx) as u32)
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition { parts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(p(&[2, 2]).hook_lengths().rows(), &[vec![3, 2], vec![2, 1]]);
        assert_eq!(p(&[2, 1]).hook_lengths().rows(), &[vec![3, 1], vec![1]]);
        assert_eq!(p(&[1]).hook_lengths().rows(), &[vec![1]]);
    }

    #[test]
    fn rim_hook_removal_examples() {
        assert_eq!(p(&[4, 3]).remove_rim_hook((2, 2)).unwrap(), p(&[4, 1]));
        assert_eq!(p(&[1]).remove_rim_hook((1, 1)).unwrap(), Partition::empty());
        // the rim walk from (1,2) in (3,2) strips three cells
        let stripped = p(&[3, 2]).remove_rim_hook((1, 2)).unwrap();
        assert_eq!(stripped.size(), 2);
        assert_eq!(stripped, p(&[1, 1]));
        assert!(matches!(
            p(&[2, 1]).remove_rim_hook((3, 1)),
            Err(Error::CellOutsideDiagram(3, 1))
        ));
    }

    #[test]
    fn rim_hook_removal_drops_exactly_the_hook_length() {
        for lambda in partitions_of(9) {
            let grid = lambda.hook_lengths();
            for i in 1..=lambda.rows() {
                for j in 1..=lambda.parts()[i - 1] as usize {
                    let shrunk = lambda.remove_rim_hook((i, j)).unwrap();
                    assert_eq!(shrunk.size(), lambda.size() - grid.at(i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn core_and_weight_examples() {
        let cw = p(&[4, 3]).p_core_and_weight(2);
        assert_eq!(cw.core, p(&[2, 1]));
        assert_eq!(cw.weight, 2);

        let cw = p(&[3, 1]).p_core_and_weight(3);
        assert_eq!(cw.core, p(&[3, 1]));
        assert_eq!(cw.weight, 0);

        // a single row strips cleanly when p divides it
        let cw = p(&[12]).p_core_and_weight(3);
        assert_eq!(cw.core, Partition::empty());
        assert_eq!(cw.weight, 4);
    }

    #[test]
    fn is_p_core_examples() {
        assert!(p(&[2, 1]).is_p_core(2));
        assert!(!p(&[2, 2]).is_p_core(3));
        assert!(Partition::empty().is_p_core(5));
    }

    #[test]
    fn is_p_core_matches_hook_definition() {
        for n in 0..=12u32 {
            for lambda in partitions_of(n) {
                for p in [2u32, 3, 5, 7] {
                    let by_hooks = lambda
                        .hook_lengths()
                        .multiset()
                        .iter()
                        .all(|&h| h % p != 0);
                    assert_eq!(lambda.is_p_core(p), by_hooks, "{lambda} p={p}");
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            partitions_of(0).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        assert_eq!(
            partitions_of(4).collect::<Vec<_>>(),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(partitions_of(9).count(), 30);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_partitions(0), BigUint::from(1u32));
        assert_eq!(count_partitions(9), BigUint::from(30u32));
        assert_eq!(count_partitions(45), BigUint::from(89134u32));
    }

    #[test]
    fn enumeration_agrees_with_recurrence() {
        for n in 0..=28u32 {
            assert_eq!(
                BigUint::from(partitions_of(n).count()),
                count_partitions(n)
            );
        }
    }

    #[test]
    fn cores_of_size_examples() {
        assert_eq!(p_cores_of_size(3, 2), vec![p(&[2, 1])]);
        assert_eq!(p_cores_of_size(4, 3), vec![p(&[3, 1]), p(&[2, 1, 1])]);
        // m < p: every partition of m is a p-core
        assert_eq!(p_cores_of_size(4, 7).len(), 5);
    }

    #[test]
    fn text_format_round_trip() {
        let lambda: Partition = "5,4,1".parse().unwrap();
        assert_eq!(lambda, p(&[5, 4, 1]));
        assert_eq!(lambda.to_string(), "5,4,1");
        let shorthand: Partition = "5,1^3".parse().unwrap();
        assert_eq!(shorthand, p(&[5, 1, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,5".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
    }
}
