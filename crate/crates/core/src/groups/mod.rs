//! Finite groups stored as Cayley tables, with builders, subgroups and quotients.

mod abelian;
mod build;
mod characters;
mod irreps;
mod iso;

pub use abelian::{
    abelian_invariants, abelianization, dual_group, linear_characters, smith_normal_form,
    AbelianGroup, DualGroup, LinearCharacter, Presentation,
};
pub use build::{parse_cycles, perm_label, Matrix};
pub use characters::{character_table, conjugacy_and_center, CharacterTable, ClassData};
pub use irreps::{matrix_irreps, MatrixIrrep};
pub use iso::{is_isomorphic_small, Isomorphism};

use crate::config::Caps;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Where a group came from; used to parse element names in input files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Cayley,
    Perm { degree: usize },
    MatMod { dim: usize, modulus: u64 },
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
    source: GroupSource,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.identity == other.identity
    }
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table and validates the group axioms.
    pub fn from_cayley(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        caps: &Caps,
        seed: u64,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has length {}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!("entry {x} out of range in row {i}")));
                }
                flat.push(x as u32);
            }
        }
        let g = Self::from_flat(n, flat, labels, GroupSource::Cayley)?;
        g.check_associative(caps, seed)?;
        Ok(g)
    }

    /// Builds a group from a multiplication law on `0..n`. Identity, inverses and
    /// closure are checked; associativity is the caller's responsibility
    /// (see [`FiniteGroup::check_associative`]).
    pub fn from_law(
        n: usize,
        labels: Option<Vec<String>>,
        law: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = law(a, b);
                if c >= n {
                    return Err(Error::InvalidGroup(format!("product {a}*{b} = {c} out of range")));
                }
                flat.push(c as u32);
            }
        }
        Self::from_flat(n, flat, labels, GroupSource::Cayley)
    }

    pub(crate) fn from_flat(
        n: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
        source: GroupSource,
    ) -> Result<Self> {
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = at(a, b);
                if seen[c] {
                    return Err(Error::InvalidGroup(format!("row {a} is not a permutation")));
                }
                seen[c] = true;
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| at(a, b) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            if at(inverse[a], a) != identity {
                return Err(Error::InvalidGroup(format!("left and right inverse of {a} differ")));
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::InvalidGroup(format!(
                        "{} labels for {n} elements",
                        l.len()
                    )));
                }
                let mut seen = std::collections::HashSet::new();
                for s in &l {
                    if !seen.insert(s.as_str()) {
                        return Err(Error::InvalidGroup(format!("duplicate label {s}")));
                    }
                }
                l
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(Self {
            order: n,
            table,
            inverse,
            identity,
            labels,
            source,
        })
    }

    /// Exhaustive associativity check up to the configured order, sampled above it.
    pub fn check_associative(&self, caps: &Caps, seed: u64) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::InvalidGroup(format!(
                    "associativity fails at ({}, {}, {})",
                    self.labels[a], self.labels[b], self.labels[c]
                )));
            }
            Ok(())
        };
        if n <= caps.exhaustive_associativity {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..caps.sampled_triples {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn source(&self) -> &GroupSource {
        &self.source
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidGroup("label count mismatch".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut result = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &x in elems {
            if x >= self.order {
                return false;
            }
            inside[x] = true;
        }
        inside[self.identity]
            && elems
                .iter()
                .all(|&a| inside[self.inv(a)] && elems.iter().all(|&b| inside[self.mul(a, b)]))
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &x in elems {
            inside[x] = true;
        }
        self.elements()
            .all(|g| elems.iter().all(|&n| inside[self.conj(g, n)]))
    }

    /// The subgroup on `elems` (in the given order) as a group in its own right.
    /// Returns the group and the embedding into `self`.
    pub fn restrict(&self, elems: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(elems) {
            return Err(Error::InvalidGroup("element set is not a subgroup".into()));
        }
        let mut index = HashMap::with_capacity(elems.len());
        for (i, &x) in elems.iter().enumerate() {
            if index.insert(x, i).is_some() {
                return Err(Error::InvalidGroup("repeated element in subgroup".into()));
            }
        }
        let m = elems.len();
        let mut flat = Vec::with_capacity(m * m);
        for &a in elems {
            for &b in elems {
                flat.push(index[&self.mul(a, b)] as u32);
            }
        }
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let g = Self::from_flat(m, flat, Some(labels), self.source.clone())?;
        Ok((g, elems.to_vec()))
    }

    /// Quotient by a normal subgroup. Returns the quotient and the projection.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(normal) || !self.is_normal(normal) {
            return Err(Error::InvalidGroup("quotient by a non-normal subset".into()));
        }
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset[g] == usize::MAX {
                let c = reps.len();
                reps.push(g);
                for &n in normal {
                    coset[self.mul(g, n)] = c;
                }
            }
        }
        let m = reps.len();
        let mut flat = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                flat.push(coset[self.mul(a, b)] as u32);
            }
        }
        let labels = reps.iter().map(|&r| format!("{}N", self.labels[r])).collect();
        let q = Self::from_flat(m, flat, Some(labels), GroupSource::Cayley)?;
        Ok((q, coset))
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms: Vec<usize> = Vec::new();
        let mut seen = vec![false; self.order];
        for a in self.elements() {
            for b in self.elements() {
                let c = self.commutator(a, b);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.subgroup_closure(&comms)
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Elements commuting with every element of `subset`.
    pub fn centralizer(&self, subset: &[usize]) -> Vec<usize> {
        self.elements()
            .filter(|&z| subset.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// A short generating set, chosen greedily by decreasing element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = self.elements().collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut count = 1;
        for a in by_order {
            if count == self.order {
                break;
            }
            if !inside[a] {
                gens.push(a);
                let sub = self.subgroup_closure(&gens);
                count = sub.len();
                for x in sub {
                    inside[x] = true;
                }
            }
        }
        gens
    }

    /// Checks that `perm` is an automorphism.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.order {
            return false;
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            if p >= self.order || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        self.elements().all(|a| {
            self.elements()
                .all(|b| perm[self.mul(a, b)] == self.mul(perm[a], perm[b]))
        })
    }

    /// Minimal word length of every element with respect to `gens` (and inverses).
    pub fn word_lengths(&self, gens: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[self.identity] = Some(0);
        let mut queue = std::collections::VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &g in gens {
                for s in [g, self.inv(g)] {
                    let y = self.mul(x, s);
                    if dist[y].is_none() {
                        dist[y] = Some(d + 1);
                        queue.push_back(y);
                    }
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests;
