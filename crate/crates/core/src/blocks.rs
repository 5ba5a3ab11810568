//! p-blocks of symmetric groups.
//!
//! By Nakayama's conjecture (a theorem), two irreducible characters of S_n
//! lie in the same p-block iff their labels share a p-core. A block of
//! weight w has defect group a Sylow p-subgroup of S_{pw}, so its defect is
//! d = ν_p((pw)!) and its defect group's derived length is the closed form
//! for symmetric groups. Heights come from χ(1)_p = p^{a−d+he(χ)}.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::characters::{degree, degree_p_valuation};
use crate::padic::{dl_sylow_symmetric, vp_factorial};
use crate::partition::{partitions_of, Partition};

/// A p-block of S_n: the set of partitions of n sharing a p-core.
#[derive(Debug, Clone)]
pub struct Block {
    pub n: u32,
    pub p: u32,
    pub core: Partition,
    pub weight: u32,
    /// a = ν_p(n!), the p-exponent of |S_n|.
    pub a: u32,
    /// d = ν_p((pw)!), the defect.
    pub d: u32,
    /// Member partitions, in enumeration order.
    pub members: Vec<Partition>,
}

/// Statistics of a block: positive-height count, degree set, height set and
/// minimal positive height.
#[derive(Debug, Clone)]
pub struct BlockStats {
    /// n_p(B): number of characters of positive height.
    pub np_b: u64,
    /// cd(B): the set of full character degrees in the block.
    pub cd_b: BTreeSet<BigUint>,
    /// hei(B): the set of heights.
    pub heights: BTreeSet<u32>,
    /// mh(B): minimum positive height, None when every height is zero.
    pub mh_b: Option<u32>,
}

/// Outcome of the derived-length and height-zero checks on one block.
#[derive(Debug, Clone, Serialize)]
pub struct BlockChecks {
    /// Derived length of the defect group, dl(Syl_p(S_{pw})).
    pub dl_defect: u32,
    pub np_b: u64,
    pub heights_count: u64,
    /// Height-zero biconditional: n_p(B) = 0 ⟺ w < p.
    pub bhz: bool,
    /// dl(D) ≤ n_p(B) + 1.
    pub dl_le_np1: bool,
    /// dl(D) ≤ |hei(B)|.
    pub dl_le_heights: bool,
}

impl BlockChecks {
    pub fn all_pass(&self) -> bool {
        self.bhz && self.dl_le_np1 && self.dl_le_heights
    }
}

/// Partitions of n grouped into p-blocks, sorted by core size and then by
/// enumeration order of the core, so the principal block comes first.
///
/// ```
/// let blocks = charcomb::blocks::blocks_symmetric(9, 2);
/// assert_eq!(blocks.len(), 2);
/// assert_eq!(blocks[0].members.len(), 20); // principal block, core (1)
/// assert_eq!(blocks[1].d, 4);              // core (2,1), defect 4
/// ```
pub fn blocks_symmetric(n: u32, p: u32) -> Vec<Block> {
    let a = vp_factorial(n as u64, p) as u32;
    let mut by_core: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lambda in partitions_of(n) {
        let cw = lambda.p_core_and_weight(p);
        by_core.entry(cw.core).or_default().push(lambda);
    }
    let mut blocks: Vec<Block> = by_core
        .into_iter()
        .map(|(core, members)| {
            let weight = (n - core.size()) / p;
            Block {
                n,
                p,
                d: vp_factorial(p as u64 * weight as u64, p) as u32,
                a,
                core,
                weight,
                members,
            }
        })
        .collect();
    blocks.sort_by(|x, y| {
        x.core
            .size()
            .cmp(&y.core.size())
            .then_with(|| y.core.cmp(&x.core))
    });
    blocks
}

/// he(χ^λ) = ν_p(χ^λ(1)) − (a − d), where d is the defect of λ's block.
pub fn character_height(lambda: &Partition, p: u32) -> u32 {
    let n = lambda.size();
    let a = vp_factorial(n as u64, p) as u32;
    let weight = lambda.p_core_and_weight(p).weight;
    let d = vp_factorial(p as u64 * weight as u64, p) as u32;
    let val = degree_p_valuation(lambda, p);
    (val + d).checked_sub(a).expect("heights are non-negative")
}

/// Exact statistics of a block.
pub fn block_stats(block: &Block) -> BlockStats {
    let mut np_b = 0;
    let mut cd_b = BTreeSet::new();
    let mut heights = BTreeSet::new();
    for lambda in &block.members {
        let he = (degree_p_valuation(lambda, block.p) + block.d)
            .checked_sub(block.a)
            .expect("heights are non-negative");
        if he > 0 {
            np_b += 1;
        }
        heights.insert(he);
        cd_b.insert(degree(lambda));
    }
    let mh_b = heights.iter().copied().find(|&h| h > 0);
    BlockStats {
        np_b,
        cd_b,
        heights,
        mh_b,
    }
}

/// Runs the height-zero biconditional and the two derived-length bounds on
/// one block, with dl(D) computed as dl(Syl_p(S_{pw})).
pub fn check_block_bounds(block: &Block) -> BlockChecks {
    let stats = block_stats(block);
    let dl_defect = dl_sylow_symmetric(block.p as u64 * block.weight as u64, block.p);
    BlockChecks {
        dl_defect,
        np_b: stats.np_b,
        heights_count: stats.heights.len() as u64,
        bhz: (stats.np_b == 0) == (block.weight < block.p),
        dl_le_np1: (dl_defect as u64) <= stats.np_b + 1,
        dl_le_heights: (dl_defect as u64) <= stats.heights.len() as u64,
    }
}
