//! Concrete finite groups: a validated multiplication table on dense
//! element indices with the identity fixed at index 0, plus the derived
//! structure (element orders, conjugacy classes, centralizers, power
//! maps) every other module consumes.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::perm::Perm;

/// Dense element index; 0 is always the identity.
pub type Elem = u16;

/// Orders up to this bound get exhaustive associativity checking at
/// construction; larger tables are spot-checked on random triples.
const EXHAUSTIVE_ASSOC_BOUND: usize = 256;
const RANDOM_ASSOC_TRIPLES: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not square: row {row} has length {len}, expected {order}")]
    TableShape { row: usize, len: usize, order: usize },
    #[error("table entry at ({x}, {y}) is {value}, out of range 0..{order}")]
    EntryRange { x: usize, y: usize, value: usize, order: usize },
    #[error("index 0 is not a two-sided identity: fails at element {x}")]
    NoIdentity { x: usize },
    #[error("element {x} has no two-sided inverse")]
    NoInverse { x: usize },
    #[error("not associative at triple ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("row or column {x} of the table is not a permutation")]
    NotCancellative { x: usize },
    #[error("closure exceeded the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
}

/// A finite group given by its full multiplication table.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: `table[a * order + b] = a * b`.
    table: Vec<Elem>,
    inverse: Vec<Elem>,
    element_order: Vec<u32>,
    exponent: u32,
    conjugacy: OnceLock<ConjugacyData>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            order: self.order,
            table: self.table.clone(),
            inverse: self.inverse.clone(),
            element_order: self.element_order.clone(),
            exponent: self.exponent,
            conjugacy: OnceLock::new(),
        }
    }
}

impl FiniteGroup {
    /// Build and validate a group from a full multiplication table.
    /// Index 0 must be the identity.
    pub fn from_table(table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
        let order = table.len();
        assert!(order > 0, "empty table");
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::TableShape { row, len: r.len(), order });
            }
        }
        let mut flat = vec![0 as Elem; order * order];
        for (x, row) in table.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryRange { x, y, value: v, order });
                }
                flat[x * order + y] = v as Elem;
            }
        }
        Self::from_flat_table(order, flat)
    }

    fn from_flat_table(order: usize, table: Vec<Elem>) -> Result<FiniteGroup, GroupError> {
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        // Identity.
        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(GroupError::NoIdentity { x });
            }
        }
        // Latin property: rows and columns are permutations.
        for x in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for y in 0..order {
                if std::mem::replace(&mut seen_row[at(x, y)], true)
                    || std::mem::replace(&mut seen_col[at(y, x)], true)
                {
                    return Err(GroupError::NotCancellative { x });
                }
            }
        }
        // Two-sided inverses.
        let mut inverse = vec![0 as Elem; order];
        for x in 0..order {
            match (0..order).find(|&y| at(x, y) == 0 && at(y, x) == 0) {
                Some(y) => inverse[x] = y as Elem,
                None => return Err(GroupError::NoInverse { x }),
            }
        }
        // Associativity: exhaustive at desk scale, sampled above it.
        if order <= EXHAUSTIVE_ASSOC_BOUND {
            for x in 0..order {
                for y in 0..order {
                    let xy = at(x, y);
                    for z in 0..order {
                        if at(xy, z) != at(x, at(y, z)) {
                            return Err(GroupError::NotAssociative { x, y, z });
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64 ^ (order as u64);
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..RANDOM_ASSOC_TRIPLES {
                let x = (next() % order as u64) as usize;
                let y = (next() % order as u64) as usize;
                let z = (next() % order as u64) as usize;
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return Err(GroupError::NotAssociative { x, y, z });
                }
            }
        }
        // Element orders and the exponent.
        let mut element_order = vec![0u32; order];
        let mut exponent = 1u64;
        for x in 0..order {
            let mut p = x;
            let mut k = 1u32;
            while p != 0 {
                p = at(p, x);
                k += 1;
            }
            element_order[x] = k;
            exponent = num_integer::lcm(exponent, k as u64);
        }
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            element_order,
            exponent: exponent as u32,
            conjugacy: OnceLock::new(),
        })
    }

    /// Closure of a set of permutations under composition, as a group on
    /// dense indices; fails when the closure exceeds `cap`. Returns the
    /// group together with the permutation realizing each index.
    pub fn from_permutations(
        degree: usize,
        generators: &[Perm],
        cap: usize,
    ) -> Result<(FiniteGroup, Vec<Perm>), GroupError> {
        for g in generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let mut elements: Vec<Perm> = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, Elem> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut queue = 0usize;
        while queue < elements.len() {
            let current = elements[queue].clone();
            queue += 1;
            for g in generators {
                let next = current.compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len() as Elem);
                    elements.push(next);
                }
            }
        }
        let order = elements.len();
        let mut table = vec![0 as Elem; order * order];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                table[a * order + b] = index[&pa.compose(pb)];
            }
        }
        let group = Self::from_flat_table(order, table)?;
        Ok((group, elements))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    /// `by^-1 * x * by`.
    #[inline]
    pub fn conj(&self, x: Elem, by: Elem) -> Elem {
        self.mul(self.inv(by), self.mul(x, by))
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let m = self.element_order[a as usize] as i64;
        let mut k = k.rem_euclid(m) as u32;
        let mut base = a;
        let mut acc = 0 as Elem;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn elem_order(&self, a: Elem) -> u32 {
        self.element_order[a as usize]
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order as Elem).map(|x| x)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as Elem)
            .all(|a| (0..self.order as Elem).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<Elem> {
        (0..self.order as Elem)
            .filter(|&a| (0..self.order as Elem).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut members = vec![0 as Elem];
        let mut queue = 0usize;
        while queue < members.len() {
            let current = members[queue];
            queue += 1;
            for &g in gens {
                let next = self.mul(current, g);
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    members.push(next);
                }
            }
        }
        members.sort_unstable();
        members
    }

    pub fn generates(&self, gens: &[Elem]) -> bool {
        self.closure(gens).len() == self.order
    }

    /// Conjugacy classes, centralizer orders and power maps; computed
    /// once and cached.
    pub fn conjugacy(&self) -> &ConjugacyData {
        self.conjugacy.get_or_init(|| ConjugacyData::compute(self))
    }

    /// Multiset of element orders, a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<(u32, usize)> {
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for x in 0..self.order {
            *counts.entry(self.element_order[x]).or_default() += 1;
        }
        let mut out: Vec<(u32, usize)> = counts.into_iter().collect();
        out.sort_unstable();
        out
    }
}

/// The conjugacy structure of a group: a partition of the elements with
/// centralizer orders and the induced power maps on classes.
#[derive(Debug, Clone)]
pub struct ConjugacyData {
    /// Element -> class index; class 0 is the class of the identity.
    pub class_of: Vec<u32>,
    /// Classes as sorted element lists, ordered by least member.
    pub classes: Vec<Vec<Elem>>,
    /// Least element of each class.
    pub representatives: Vec<Elem>,
    pub centralizer_order: Vec<usize>,
    /// `power[c][k] = class of rep(c)^k` for `k` in `0..exponent`.
    power: Vec<Vec<u32>>,
    exponent: u32,
}

impl ConjugacyData {
    fn compute(g: &FiniteGroup) -> ConjugacyData {
        let n = g.order();
        const UNSEEN: u32 = u32::MAX;
        let mut class_of = vec![UNSEEN; n];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        let mut representatives: Vec<Elem> = Vec::new();
        let mut centralizer_order: Vec<usize> = Vec::new();
        for x in 0..n as Elem {
            if class_of[x as usize] != UNSEEN {
                continue;
            }
            let c = classes.len() as u32;
            let mut members = Vec::new();
            for by in 0..n as Elem {
                let y = g.conj(x, by);
                if class_of[y as usize] == UNSEEN {
                    class_of[y as usize] = c;
                    members.push(y);
                }
            }
            members.sort_unstable();
            let centralizer = (0..n as Elem)
                .filter(|&b| g.mul(b, x) == g.mul(x, b))
                .count();
            classes.push(members);
            representatives.push(x);
            centralizer_order.push(centralizer);
        }
        let exponent = g.exponent();
        let power = representatives
            .iter()
            .map(|&rep| {
                (0..exponent)
                    .map(|k| class_of[g.pow(rep, k as i64) as usize])
                    .collect()
            })
            .collect();
        ConjugacyData {
            class_of,
            classes,
            representatives,
            centralizer_order,
            power,
            exponent,
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Class of `rep(c)^k` for any integer `k`.
    pub fn power_map(&self, c: usize, k: i64) -> usize {
        let k = k.rem_euclid(self.exponent as i64) as usize;
        self.power[c][k] as usize
    }

    /// Multiset of (element order of rep, class size), per class and
    /// sorted: a relabeling-invariant fingerprint.
    pub fn class_profile(&self, g: &FiniteGroup) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = self
            .representatives
            .iter()
            .zip(&self.classes)
            .map(|(&rep, members)| (g.elem_order(rep), members.len()))
            .collect();
        out.sort_unstable();
        out
    }
}

/// A subgroup of a fixed parent group, stored as its sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub members: Vec<Elem>,
    pub is_normal: bool,
}

impl Subgroup {
    pub fn from_generators(g: &FiniteGroup, gens: &[Elem]) -> Subgroup {
        let members = g.closure(gens);
        let is_normal = is_normal_in(g, &members);
        Subgroup { members, is_normal }
    }

    pub fn trivial() -> Subgroup {
        Subgroup { members: vec![0], is_normal: true }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

pub fn is_normal_in(g: &FiniteGroup, members: &[Elem]) -> bool {
    members.iter().all(|&x| {
        (0..g.order() as Elem).all(|by| members.binary_search(&g.conj(x, by)).is_ok())
    })
}

/// A homomorphism between two groups, stored as the image of every
/// source element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupMap {
    pub image: Vec<Elem>,
}

impl GroupMap {
    pub fn identity(order: usize) -> GroupMap {
        GroupMap { image: (0..order as Elem).collect() }
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x as usize]
    }

    /// Full multiplicativity check.
    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.image.len() != source.order() || self.image[0] != 0 {
            return false;
        }
        for a in 0..source.order() as Elem {
            for b in 0..source.order() as Elem {
                if self.apply(source.mul(a, b)) != target.mul(self.apply(a), self.apply(b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.image.len();
        let mut seen = vec![false; n];
        for &i in &self.image {
            if (i as usize) >= n || std::mem::replace(&mut seen[i as usize], true) {
                return false;
            }
        }
        true
    }

    /// `self` after `first`: `(self . first)(x) = self(first(x))`.
    pub fn compose(&self, first: &GroupMap) -> GroupMap {
        GroupMap {
            image: first.image.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> GroupMap {
        let mut image = vec![0 as Elem; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y as usize] = x as Elem;
        }
        GroupMap { image }
    }

    /// The inner automorphism `x -> by^-1 x by`.
    pub fn inner(g: &FiniteGroup, by: Elem) -> GroupMap {
        GroupMap {
            image: (0..g.order() as Elem).map(|x| g.conj(x, by)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn z2_from_table() {
        let g = FiniteGroup::from_table(&cyclic_table(2)).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.elem_order(0), 1);
        assert_eq!(g.elem_order(1), 2);
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn bad_tables_name_the_witness() {
        // Identity fails.
        let err = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NoIdentity { x: 0 });
        // Latin square but not associative: a quasigroup on 5 points.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_table(&t) {
            Err(GroupError::NotAssociative { .. }) | Err(GroupError::NoInverse { .. }) => {}
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn z2_from_permutations() {
        let (g, _) =
            FiniteGroup::from_permutations(2, &[Perm::from_cycles(2, &[vec![1, 2]]).unwrap()], 100)
                .unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn a4_from_permutations() {
        let gens = [
            Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
            Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
        ];
        let (g, _) = FiniteGroup::from_permutations(4, &gens, 10_000).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.exponent(), 6);
        let conj = g.conjugacy();
        assert_eq!(conj.class_count(), 4);
        let mut sizes: Vec<usize> = conj.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
    }

    #[test]
    fn closure_cap() {
        let gens = [Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap()];
        let err = FiniteGroup::from_permutations(5, &gens, 3).unwrap_err();
        assert_eq!(err, GroupError::OrderCapExceeded { cap: 3 });
    }

    #[test]
    fn abelian_conjugacy_is_singletons() {
        let g = FiniteGroup::from_table(&cyclic_table(6)).unwrap();
        let conj = g.conjugacy();
        assert_eq!(conj.class_count(), 6);
        assert!(conj.centralizer_order.iter().all(|&c| c == 6));
    }

    #[test]
    fn class_equation_and_power_map() {
        let gens = [
            Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
            Perm::from_cycles(3, &[vec![1, 2]]).unwrap(),
        ];
        let (g, _) = FiniteGroup::from_permutations(3, &gens, 100).unwrap();
        assert_eq!(g.order(), 6);
        let conj = g.conjugacy();
        let total: usize = conj.classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, 6);
        for c in 0..conj.class_count() {
            assert_eq!(g.order() % conj.class_size(c), 0);
            assert_eq!(
                conj.class_size(c) * conj.centralizer_order[c],
                g.order()
            );
            assert_eq!(conj.power_map(c, 1), c);
            assert_eq!(conj.power_map(c, g.exponent() as i64), 0);
        }
    }

    #[test]
    fn pow_and_inverse() {
        let g = FiniteGroup::from_table(&cyclic_table(12)).unwrap();
        assert_eq!(g.pow(5, 3), 3);
        assert_eq!(g.pow(5, -1), g.inv(5));
        assert_eq!(g.pow(5, 0), 0);
    }

    #[test]
    fn lagrange_for_element_orders() {
        let gens = [
            Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap(),
            Perm::from_cycles(4, &[vec![1, 3]]).unwrap(),
        ];
        let (g, _) = FiniteGroup::from_permutations(4, &gens, 100).unwrap();
        assert_eq!(g.order(), 8);
        for x in g.elements() {
            assert_eq!(g.order() as u32 % g.elem_order(x), 0);
        }
        assert_eq!(g.order() as u32 % g.exponent(), 0);
    }
}
