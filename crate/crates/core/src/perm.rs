//! A small exact permutation-group engine.
//!
//! Groups are given by generators on points 0..degree (serialized 1-based);
//! orders and membership come from a deterministically built base and
//! strong generating set (Schreier–Sims), derived subgroups from closing
//! the generator commutators under conjugation with membership sifting.
//! The engine targets the Sylow subgroups of S_n and A_n at degree ≤ 48;
//! it makes no claims of general-purpose performance beyond that.

use std::collections::VecDeque;
use std::sync::OnceLock;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::padic::padic_digits;
use crate::{Error, Result};

/// Hard cap on the supported degree; the Sylow towers the engine exists for
/// live on at most 48 points.
pub const MAX_DEGREE: usize = 128;

/// A permutation of 0..n−1 in image-list form. Products compose left to
/// right: (a·b)(x) = b(a(x)).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    /// Validates that `images` is a bijection on 0..len.
    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        if images.len() > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(images.len()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if (x as usize) >= images.len() || seen[x as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "image list is not a bijection: {images:?}"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    /// self followed by other.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    /// g⁻¹·self·g.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    /// a⁻¹·b⁻¹·a·b.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        a.inverse().then(&b.inverse()).then(a).then(b)
    }

    /// Sign: even iff degree minus the number of cycles is even.
    pub fn is_even(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
            }
        }
        (n - cycles).is_multiple_of(2)
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u8 != x)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

impl fmt::Display for Perm {
    /// 1-based image list, e.g. `[2,1,4,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x as usize + 1)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPermutation(format!("expected [..], got {s:?}")))?;
        let mut images = Vec::new();
        if !body.trim().is_empty() {
            for tok in body.split(',') {
                let v: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point {tok:?}")))?;
                if v == 0 || v > MAX_DEGREE {
                    return Err(Error::InvalidPermutation(format!("point {v} out of range")));
                }
                images.push((v - 1) as u8);
            }
        }
        Perm::from_images(images)
    }
}

/// A permutation group with a lazily built base and strong generating set.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    bsgs: OnceLock<Bsgs>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        Ok(PermGroup {
            degree,
            gens: gens.into_iter().filter(|g| !g.is_identity()).collect(),
            bsgs: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Generators of a Sylow p-subgroup of S_n: for each p-adic digit a_i
    /// of n, a_i disjoint wreath towers on p^i points. A tower on p^i
    /// points is generated by the block rotations x ↦ x + p^{j−1} (mod p^j)
    /// for j = 1..i.
    pub fn sylow_symmetric(n: usize, p: u32) -> Result<PermGroup> {
        if n > 48 {
            return Err(Error::DegreeTooLarge(n));
        }
        if p as usize > n {
            return Err(Error::HypothesisViolated(format!(
                "p = {p} exceeds n = {n}: the Sylow subgroup is trivial"
            )));
        }
        let digits = padic_digits(n as u64, p)?.digits;
        let mut gens = Vec::new();
        let mut offset = 0usize;
        for i in (1..digits.len()).rev() {
            let tower = (p as usize).pow(i as u32);
            for _ in 0..digits[i] {
                for j in 1..=i {
                    let block = (p as usize).pow(j as u32);
                    let step = block / p as usize;
                    let mut images: Vec<u8> = (0..n as u8).collect();
                    for x in 0..block {
                        images[offset + x] = (offset + (x + step) % block) as u8;
                    }
                    gens.push(Perm { images });
                }
                offset += tower;
            }
        }
        PermGroup::new(n, gens)
    }

    /// The kernel of the sign character on this group: index 1 when all
    /// generators are even, index 2 otherwise (Schreier generators over the
    /// transversal {1, t} for the first odd generator t).
    pub fn even_part(&self) -> PermGroup {
        let t = match self.gens.iter().find(|g| !g.is_even()) {
            None => return self.clone(),
            Some(t) => t.clone(),
        };
        let t_inv = t.inverse();
        let mut gens = Vec::new();
        for s in &self.gens {
            if s.is_even() {
                gens.push(s.clone());
                gens.push(t_inv.then(s).then(&t));
            } else {
                gens.push(s.then(&t_inv));
                gens.push(t.then(s));
            }
        }
        gens.retain(|g| !g.is_identity());
        gens.dedup();
        debug_assert!(gens.iter().all(|g| g.is_even()));
        PermGroup {
            degree: self.degree,
            gens,
            bsgs: OnceLock::new(),
        }
    }

    fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| {
            let mut b = Bsgs::new(self.degree);
            for g in &self.gens {
                b.add_generator(g.clone());
            }
            b
        })
    }

    /// Exact group order.
    pub fn order(&self) -> BigUint {
        self.bsgs().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty() || self.order() == BigUint::one()
    }

    /// Exact membership test by sifting.
    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.bsgs().contains(g)
    }

    /// [G, G]: the normal closure of the generator commutators, computed by
    /// conjugation closure with membership sifting.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut builder = Bsgs::new(self.degree);
        let mut sub_gens: Vec<Perm> = Vec::new();
        let mut queue: VecDeque<Perm> = VecDeque::new();

        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = Perm::commutator(a, b);
                if builder.add_generator(c.clone()) {
                    sub_gens.push(c.clone());
                    queue.push_back(c);
                }
            }
        }
        while let Some(h) = queue.pop_front() {
            for s in &self.gens {
                let c = h.conjugate_by(s);
                if builder.add_generator(c.clone()) {
                    sub_gens.push(c.clone());
                    queue.push_back(c);
                }
            }
        }

        let cell = OnceLock::new();
        let _ = cell.set(builder);
        PermGroup {
            degree: self.degree,
            gens: sub_gens,
            bsgs: cell,
        }
    }

    /// Length of the derived series: 0 for the trivial group, 1 for a
    /// nontrivial abelian group. Panics on non-solvable input (the series
    /// stabilizes above the trivial group).
    pub fn derived_length(&self) -> u32 {
        let mut current = self.clone();
        let mut len = 0;
        while !current.is_trivial() {
            let next = current.derived_subgroup();
            assert!(
                next.order() < current.order(),
                "derived series stabilized: the group is not solvable"
            );
            current = next;
            len += 1;
        }
        len
    }
}

/// Base and strong generating set with per-level transversals.
#[derive(Debug, Clone)]
struct Bsgs {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    /// levels[i]: orbit of base[i] (discovery order) and, per point, a
    /// representative u with base[i]^u = point, stored with its inverse.
    levels: Vec<Level>,
}

#[derive(Debug, Clone)]
struct Level {
    orbit: Vec<usize>,
    transversal: Vec<Option<(Perm, Perm)>>,
}

impl Bsgs {
    fn new(degree: usize) -> Bsgs {
        Bsgs {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for level in &self.levels {
            acc *= BigUint::from(level.orbit.len());
        }
        acc
    }

    fn contains(&self, g: &Perm) -> bool {
        self.strip(0, g.clone()).1.is_identity()
    }

    /// Sift g through levels from `from`; returns the level reached and the
    /// residue (identity iff g is a member, given g fixes base[..from]).
    fn strip(&self, from: usize, mut g: Perm) -> (usize, Perm) {
        for i in from..self.base.len() {
            let x = g.apply(self.base[i]);
            match &self.levels[i].transversal[x] {
                None => return (i, g),
                Some((_, u_inv)) => g = g.then(u_inv),
            }
        }
        (self.base.len(), g)
    }

    /// Strong generators fixing base[..level].
    fn gens_at(&self, level: usize) -> Vec<Perm> {
        self.strong
            .iter()
            .filter(|g| self.base[..level].iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect()
    }

    fn rebuild_level(&mut self, i: usize) {
        let gens = self.gens_at(i);
        let b = self.base[i];
        let mut orbit = vec![b];
        let mut transversal: Vec<Option<(Perm, Perm)>> = vec![None; self.degree];
        let id = Perm::identity(self.degree);
        transversal[b] = Some((id.clone(), id));
        let mut head = 0;
        while head < orbit.len() {
            let pt = orbit[head];
            head += 1;
            let u_pt = transversal[pt].as_ref().unwrap().0.clone();
            for s in &gens {
                let y = s.apply(pt);
                if transversal[y].is_none() {
                    let u = u_pt.then(s);
                    let u_inv = u.inverse();
                    transversal[y] = Some((u, u_inv));
                    orbit.push(y);
                }
            }
        }
        self.levels[i] = Level { orbit, transversal };
    }

    /// Adds a generator; returns false when it is already a member.
    fn add_generator(&mut self, g: Perm) -> bool {
        let (level, residue) = self.strip(0, g);
        if residue.is_identity() {
            return false;
        }
        self.insert_strong(level, residue);
        true
    }

    fn insert_strong(&mut self, level: usize, residue: Perm) {
        if level == self.base.len() {
            let b = residue
                .smallest_moved_point()
                .expect("non-identity residue moves a point");
            self.base.push(b);
            self.levels.push(Level {
                orbit: Vec::new(),
                transversal: vec![None; self.degree],
            });
        }
        self.strong.push(residue);
        self.verify_from(level);
    }

    /// Re-establishes the strong-generation invariant from `start` upward:
    /// every Schreier generator of level i must sift to the identity
    /// through the deeper levels.
    fn verify_from(&mut self, start: usize) {
        let mut i = start as isize;
        'levels: while i >= 0 {
            let iu = i as usize;
            self.rebuild_level(iu);
            let gens = self.gens_at(iu);
            for head in 0..self.levels[iu].orbit.len() {
                let pt = self.levels[iu].orbit[head];
                let u_pt = self.levels[iu].transversal[pt].as_ref().unwrap().0.clone();
                for s in &gens {
                    let y = s.apply(pt);
                    let u_y_inv = self.levels[iu].transversal[y].as_ref().unwrap().1.clone();
                    let schreier = u_pt.then(s).then(&u_y_inv);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (d, residue) = self.strip(iu + 1, schreier);
                    if !residue.is_identity() {
                        if d == self.base.len() {
                            let b = residue.smallest_moved_point().unwrap();
                            self.base.push(b);
                            self.levels.push(Level {
                                orbit: Vec::new(),
                                transversal: vec![None; self.degree],
                            });
                        }
                        self.strong.push(residue);
                        i = d as isize;
                        continue 'levels;
                    }
                }
            }
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{dl_sylow_symmetric, vp_factorial};

    fn perm(images: &[u8]) -> Perm {
        Perm::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn perm_basics() {
        let a = perm(&[1, 0, 2, 3]);
        let b = perm(&[0, 2, 1, 3]);
        assert_eq!(a.then(&b), perm(&[2, 0, 1, 3]));
        assert_eq!(a.inverse(), a);
        assert!(!a.is_even());
        assert!(a.then(&b).is_even());
        assert_eq!(a.to_string(), "[2,1,3,4]");
        assert_eq!("[2,1,4,3]".parse::<Perm>().unwrap(), perm(&[1, 0, 3, 2]));
        assert!("[2,2,1]".parse::<Perm>().is_err());
    }

    #[test]
    fn symmetric_group_order() {
        // S_4 from a transposition and a 4-cycle
        let g = PermGroup::new(4, vec![perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])]).unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        assert!(g.contains(&perm(&[3, 2, 1, 0])));
        let a4 = g.even_part();
        assert_eq!(a4.order(), BigUint::from(12u32));
        assert_eq!(a4.derived_length(), 2); // A_4 > V_4 > 1
        // the derived series of S_4 runs through A_4 and V_4
        let d1 = g.derived_subgroup();
        assert_eq!(d1.order(), BigUint::from(12u32));
        let d2 = d1.derived_subgroup();
        assert_eq!(d2.order(), BigUint::from(4u32));
        assert!(d2.derived_subgroup().is_trivial());
    }

    #[test]
    #[should_panic(expected = "not solvable")]
    fn derived_length_rejects_perfect_groups() {
        // A_5 is perfect: its derived series never reaches the identity
        let s5 = PermGroup::new(
            5,
            vec![perm(&[1, 0, 2, 3, 4]), perm(&[1, 2, 3, 4, 0])],
        )
        .unwrap();
        s5.even_part().derived_length();
    }

    #[test]
    fn sylow_orders_match_legendre() {
        for n in 2..=24usize {
            for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23] {
                if p as usize > n {
                    continue;
                }
                let g = PermGroup::sylow_symmetric(n, p).unwrap();
                let expected = BigUint::from(p).pow(vp_factorial(n as u64, p) as u32);
                assert_eq!(g.order(), expected, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn sylow_examples() {
        assert_eq!(
            PermGroup::sylow_symmetric(8, 2).unwrap().order(),
            BigUint::from(128u32)
        );
        assert_eq!(
            PermGroup::sylow_symmetric(9, 3).unwrap().order(),
            BigUint::from(81u32)
        );
        assert_eq!(
            PermGroup::sylow_symmetric(5, 5).unwrap().order(),
            BigUint::from(5u32)
        );
        assert!(PermGroup::sylow_symmetric(4, 5).is_err());
    }

    #[test]
    fn even_part_examples() {
        let d8 = PermGroup::sylow_symmetric(4, 2).unwrap();
        let v4 = d8.even_part();
        assert_eq!(v4.order(), BigUint::from(4u32));
        assert_eq!(v4.derived_length(), 1);

        let s8 = PermGroup::sylow_symmetric(8, 2).unwrap();
        assert_eq!(s8.even_part().order(), BigUint::from(64u32));

        // odd-order groups consist of even permutations
        let s9 = PermGroup::sylow_symmetric(9, 3).unwrap();
        assert_eq!(s9.even_part().order(), s9.order());
    }

    #[test]
    fn derived_length_examples() {
        assert_eq!(
            PermGroup::sylow_symmetric(8, 2).unwrap().derived_length(),
            3
        );
        assert_eq!(PermGroup::trivial(4).derived_length(), 0);
        let c3 = PermGroup::new(3, vec![perm(&[1, 2, 0])]).unwrap();
        assert_eq!(c3.derived_length(), 1);
    }

    #[test]
    fn derived_length_matches_closed_form_small() {
        for n in 2..=16usize {
            for p in [2u32, 3, 5, 7, 11, 13] {
                if p as usize > n {
                    continue;
                }
                let g = PermGroup::sylow_symmetric(n, p).unwrap();
                assert_eq!(
                    g.derived_length(),
                    dl_sylow_symmetric(n as u64, p),
                    "n={n} p={p}"
                );
            }
        }
    }

    #[test]
    fn even_part_index_at_most_two() {
        for n in 4..=12usize {
            for p in [2u32, 3] {
                let g = PermGroup::sylow_symmetric(n, p).unwrap();
                let h = g.even_part();
                let index = g.order() / h.order();
                assert!(index == BigUint::one() || index == BigUint::from(2u32));
                assert!(h.derived_length() <= g.derived_length());
            }
        }
    }

    #[test]
    fn big_even_part() {
        let g = PermGroup::sylow_symmetric(24, 2).unwrap();
        assert_eq!(g.order(), BigUint::from(2u64).pow(22));
        assert_eq!(g.even_part().order(), BigUint::from(2u64).pow(21));
    }
}
