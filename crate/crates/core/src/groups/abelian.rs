//! Abelian invariants: Smith normal form of presentations, abelianization of
//! finite groups, and the dual group of linear characters.

use super::FiniteGroup;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::f64::consts::PI;

/// Finitely presented group: generators `0..n_generators`, relators as exponent
/// vectors (only their images in the abelianization matter).
#[derive(Debug, Clone)]
pub struct Presentation {
    pub n_generators: usize,
    pub relators: Vec<Vec<i64>>,
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | d_2 | ... | d_k`, all `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub invariant_factors: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianGroup {
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.invariant_factors.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Product of cyclic groups; `None` when the group is infinite.
    pub fn to_finite_group(&self) -> Option<FiniteGroup> {
        if self.free_rank > 0 {
            return None;
        }
        Some(
            self.invariant_factors
                .iter()
                .fold(FiniteGroup::trivial(), |acc, &d| {
                    FiniteGroup::direct_product(&acc, &FiniteGroup::cyclic(d as usize))
                }),
        )
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.free_rank));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Diagonal of the Smith normal form of an integer matrix (nonnegative,
/// each entry dividing the next, zeros last).
pub fn smith_normal_form(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..nrows {
            if !m[i][t].is_zero() {
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..ncols {
                    let sub = &q * &m[t][j];
                    m[i][j] -= sub;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..ncols {
            if !m[t][j].is_zero() {
                let q = m[t][j].div_floor(&m[t][t]);
                for i in t..nrows {
                    let sub = &q * &m[i][t];
                    m[i][j] -= sub;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // The pivot must divide the whole trailing block.
        let bad = (t + 1..nrows)
            .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_multiple_of(&m[t][t]));
        if let Some((i, _)) = bad {
            for j in t..ncols {
                let add = m[i][j].clone();
                m[t][j] += add;
            }
            continue;
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Abelian invariants of a finitely presented group.
pub fn abelian_invariants(p: &Presentation) -> Result<AbelianGroup> {
    for (k, r) in p.relators.iter().enumerate() {
        if r.len() != p.n_generators {
            return Err(Error::ValidationError {
                invariant: format!(
                    "relator {k} has {} exponents for {} generators",
                    r.len(),
                    p.n_generators
                ),
            });
        }
    }
    let diag = smith_normal_form(&p.relators);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let mut invariant_factors = Vec::new();
    for d in diag.iter().filter(|d| !d.is_zero()) {
        let v = d.to_u64().ok_or_else(|| Error::ValidationError {
            invariant: format!("invariant factor {d} exceeds 64 bits"),
        })?;
        if v > 1 {
            invariant_factors.push(v);
        }
    }
    Ok(AbelianGroup {
        invariant_factors,
        free_rank: p.n_generators - rank,
    })
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog(mut n: usize, p: usize) -> usize {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

/// Invariant factors of a finite abelian group, read off from the sizes of its
/// `p^k`-torsion subgroups.
fn abelian_structure(q: &FiniteGroup) -> AbelianGroup {
    let n = q.order() as u64;
    let mut columns: Vec<Vec<u64>> = Vec::new();
    for p in prime_factors(n) {
        let mut f = Vec::new();
        let mut prev = 0usize;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = q.elements().filter(|&a| q.pow(a, pk) == q.identity()).count();
            let l = ilog(count, p as usize);
            if l == prev {
                break;
            }
            f.push(l - prev);
            prev = l;
            k += 1;
        }
        // f[k-1] = number of cyclic p-parts of exponent >= k.
        let mut exps = Vec::new();
        for (k, &cnt) in f.iter().enumerate() {
            let next = f.get(k + 1).copied().unwrap_or(0);
            for _ in 0..cnt - next {
                exps.push(k as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        columns.push(exps.into_iter().map(|e| p.pow(e)).collect());
    }
    let len = columns.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|i| columns.iter().map(|c| c.get(i).copied().unwrap_or(1)).product())
        .collect();
    factors.reverse();
    AbelianGroup {
        invariant_factors: factors,
        free_rank: 0,
    }
}

/// `G/[G,G]` of a finite group.
pub fn abelianization(g: &FiniteGroup) -> AbelianGroup {
    let derived = g.derived_subgroup();
    let (q, _) = g.quotient(&derived).expect("derived subgroup is normal");
    abelian_structure(&q)
}

/// Homomorphism to the circle: `χ(g) = exp(2πi · values[g] / modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinearCharacter {
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl LinearCharacter {
    pub fn value(&self, g: usize) -> Complex64 {
        let theta = 2.0 * PI * self.values[g] as f64 / self.modulus as f64;
        Complex64::from_polar(1.0, theta)
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Self {
            modulus: self.modulus,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a + b) % self.modulus)
                .collect(),
        }
    }

    /// `χ ∘ f` for a map `f` on the underlying set.
    pub fn compose(&self, f: &[usize]) -> Self {
        Self {
            modulus: self.modulus,
            values: f.iter().map(|&x| self.values[x]).collect(),
        }
    }
}

/// All linear characters of `g`, trivial first, then in lexicographic order of values.
pub fn linear_characters(g: &FiniteGroup) -> Vec<LinearCharacter> {
    let derived = g.derived_subgroup();
    let (q, proj) = g.quotient(&derived).expect("derived subgroup is normal");
    let e = q.exponent() as u64;
    let gens = q.generators();
    let orders: Vec<u64> = gens.iter().map(|&x| q.element_order(x) as u64).collect();
    let mut found = Vec::new();
    let mut assignment = vec![0u64; gens.len()];
    loop {
        if let Some(vals) = extend_character(&q, &gens, &assignment, e) {
            found.push(LinearCharacter {
                modulus: e,
                values: proj.iter().map(|&c| vals[c]).collect(),
            });
        }
        // Next assignment; each generator image must have order dividing the generator's.
        let mut k = 0;
        loop {
            if k == gens.len() {
                found.sort_by(|a, b| (!a.is_trivial(), &a.values).cmp(&(!b.is_trivial(), &b.values)));
                return found;
            }
            assignment[k] += 1;
            while assignment[k] < e && !(assignment[k] * orders[k]).is_multiple_of(e) {
                assignment[k] += 1;
            }
            if assignment[k] < e {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

fn extend_character(q: &FiniteGroup, gens: &[usize], imgs: &[u64], e: u64) -> Option<Vec<u64>> {
    let mut vals: Vec<Option<u64>> = vec![None; q.order()];
    vals[q.identity()] = Some(0);
    let mut queue = vec![q.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        let vx = vals[x]?;
        for (k, &g) in gens.iter().enumerate() {
            let y = q.mul(x, g);
            let vy = (vx + imgs[k]) % e;
            match vals[y] {
                None => {
                    vals[y] = Some(vy);
                    queue.push(y);
                }
                Some(v) if v != vy => return None,
                _ => {}
            }
        }
        i += 1;
    }
    vals.into_iter().collect()
}

/// The dual group `Sp(G)` of linear characters, as an abstract group under
/// pointwise multiplication together with its abelian invariants.
#[derive(Debug, Clone)]
pub struct DualGroup {
    pub invariants: AbelianGroup,
    pub characters: Vec<LinearCharacter>,
    pub group: FiniteGroup,
}

impl DualGroup {
    pub fn index_of(&self, chi: &LinearCharacter) -> Option<usize> {
        self.characters.iter().position(|c| c == chi)
    }
}

pub fn dual_group(g: &FiniteGroup) -> DualGroup {
    let characters = linear_characters(g);
    let index: HashMap<&LinearCharacter, usize> =
        characters.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let labels = (0..characters.len()).map(|i| format!("chi{i}")).collect();
    let group = FiniteGroup::from_law(characters.len(), Some(labels), |a, b| {
        index[&characters[a].mul(&characters[b])]
    })
    .expect("characters form a group");
    DualGroup {
        invariants: abelianization(g),
        characters,
        group,
    }
}
