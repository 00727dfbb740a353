//! Fusion rings on finite (or truncated) label sets, actions on them, and the
//! crossed fusion ring `Γ × labels`.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::groups::{character_table, CharacterTable, FiniteGroup};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Labels `0..len` with unit, duality, dimensions and sparse multiplicities
/// `N(x, y, z) = dim Mor(z, x ⊗ y)`.
#[derive(Debug, Clone)]
pub struct FusionRing {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    pub dims: Vec<f64>,
    /// `(x, y) ↦ [(z, N(x, y, z))]` with `N > 0`, sorted by `z`.
    pub products: BTreeMap<(usize, usize), Vec<(usize, u64)>>,
    /// Products whose result would leave the label set are absent.
    pub truncated: bool,
    /// Exact dimensions when they are integers.
    pub exact_dims: Option<Vec<BigInt>>,
    /// For truncated rings, the in-range part of products that overflow.
    pub partial: BTreeMap<(usize, usize), Vec<(usize, u64)>>,
}

impl FusionRing {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `x ⊗ y` as a list of `(z, multiplicity)`.
    pub fn fuse(&self, x: usize, y: usize) -> Result<Vec<(usize, u64)>> {
        match self.products.get(&(x, y)) {
            Some(v) => Ok(v.clone()),
            None if self.truncated => Err(Error::TruncationOverflow {
                left: self.labels[x].clone(),
                right: self.labels[y].clone(),
                cutoff: self.len() - 1,
            }),
            None => Ok(Vec::new()),
        }
    }

    /// Like [`FusionRing::fuse`] but silently dropping outputs past the cutoff.
    pub fn fuse_truncated(&self, x: usize, y: usize) -> Vec<(usize, u64)> {
        match self.products.get(&(x, y)) {
            Some(v) => v.clone(),
            None if self.truncated => self.partial.get(&(x, y)).cloned().unwrap_or_default(),
            None => Vec::new(),
        }
    }

    pub fn n(&self, x: usize, y: usize, z: usize) -> Option<u64> {
        if let Some(v) = self.products.get(&(x, y)) {
            return Some(v.iter().find(|(w, _)| *w == z).map_or(0, |(_, m)| *m));
        }
        if self.truncated {
            None
        } else {
            Some(0)
        }
    }

    /// Checks the unit, duality and Frobenius laws, multiplicativity of the
    /// dimension and associativity, over all products available in the ring.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        let fail = |what: String| Err(Error::InvalidRing(what));
        if self.dual.len() != n || self.dims.len() != n || self.unit >= n {
            return fail("label data has inconsistent lengths".into());
        }
        for x in 0..n {
            if self.dual[self.dual[x]] != x {
                return fail(format!("dual is not an involution at {}", self.labels[x]));
            }
            if !(self.dims[x] > 0.0) {
                return fail(format!("dimension of {} is not positive", self.labels[x]));
            }
            for (a, b) in [(x, self.unit), (self.unit, x)] {
                if let Some(v) = self.products.get(&(a, b)) {
                    if v != &vec![(x, 1)] {
                        return fail(format!("unit law fails at {}", self.labels[x]));
                    }
                }
            }
        }
        for (&(x, y), out) in &self.products {
            let has_unit = out.iter().find(|(z, _)| *z == self.unit).map_or(0, |(_, m)| *m);
            if has_unit != u64::from(y == self.dual[x]) {
                return fail(format!(
                    "{} (x) {} contains the unit {has_unit} times",
                    self.labels[x], self.labels[y]
                ));
            }
            for &(z, m) in out {
                if let Some(m2) = self.n(z, self.dual[y], x) {
                    if m2 != m {
                        return fail(format!(
                            "Frobenius reciprocity fails at ({}, {}, {})",
                            self.labels[x], self.labels[y], self.labels[z]
                        ));
                    }
                }
            }
            if !self.truncated {
                let lhs = self.dims[x] * self.dims[y];
                let rhs: f64 = out.iter().map(|&(z, m)| m as f64 * self.dims[z]).sum();
                if (lhs - rhs).abs() > 1e-9 * lhs.max(1.0) {
                    return fail(format!(
                        "dimension is not multiplicative on {} (x) {}",
                        self.labels[x], self.labels[y]
                    ));
                }
            }
        }
        self.check_associative()
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                let Ok(ab) = self.fuse(a, b) else { continue };
                for c in 0..n {
                    let Ok(bc) = self.fuse(b, c) else { continue };
                    let mut left: BTreeMap<usize, u64> = BTreeMap::new();
                    let mut right: BTreeMap<usize, u64> = BTreeMap::new();
                    let mut complete = true;
                    for &(w, m) in &ab {
                        match self.fuse(w, c) {
                            Ok(out) => out.iter().for_each(|&(d, k)| *left.entry(d).or_default() += m * k),
                            Err(_) => complete = false,
                        }
                    }
                    for &(w, m) in &bc {
                        match self.fuse(a, w) {
                            Ok(out) => out.iter().for_each(|&(d, k)| *right.entry(d).or_default() += m * k),
                            Err(_) => complete = false,
                        }
                    }
                    if complete && left != right {
                        return Err(Error::InvalidRing(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The fusion ring of a finite group: labels are elements, `g ⊗ h = gh`.
pub fn group_ring(g: &FiniteGroup) -> FusionRing {
    let mut products = BTreeMap::new();
    for a in g.elements() {
        for b in g.elements() {
            products.insert((a, b), vec![(g.mul(a, b), 1)]);
        }
    }
    FusionRing {
        name: "group".into(),
        labels: g.labels().to_vec(),
        unit: g.identity(),
        dual: g.elements().map(|a| g.inv(a)).collect(),
        dims: vec![1.0; g.order()],
        products,
        truncated: false,
        exact_dims: Some(vec![BigInt::from(1); g.order()]),
        partial: BTreeMap::new(),
    }
}

/// `Irr(G)` with the tensor-product fusion rules from the character table.
pub fn dual_group_ring(g: &FiniteGroup, caps: &Caps, seed: u64) -> Result<(FusionRing, CharacterTable)> {
    let table = character_table(g, caps, seed)?;
    Ok((ring_of_table(&table), table))
}

/// `Irr(G)` for an already computed character table.
pub fn ring_of_table(table: &CharacterTable) -> FusionRing {
    let r = table.len();
    let mut products = BTreeMap::new();
    for x in 0..r {
        for y in 0..r {
            let out: Vec<(usize, u64)> = (0..r)
                .filter_map(|z| {
                    let m = table.fusion(x, y, z) as u64;
                    (m > 0).then_some((z, m))
                })
                .collect();
            products.insert((x, y), out);
        }
    }
    FusionRing {
        name: "dual-group".into(),
        labels: (0..r).map(|x| format!("x{x}")).collect(),
        unit: 0,
        dual: (0..r).map(|x| table.dual(x)).collect(),
        dims: table.dims.iter().map(|&d| d as f64).collect(),
        products,
        truncated: false,
        exact_dims: Some(table.dims.iter().map(|&d| BigInt::from(d)).collect()),
        partial: BTreeMap::new(),
    }
}

/// `P_0 = 1, P_1 = X, X P_k = P_{k+1} + P_{k-1}` evaluated exactly at an integer.
pub fn chebyshev_dims(n: i64, cutoff: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(1), BigInt::from(n)];
    while p.len() <= cutoff {
        let k = p.len();
        let next = BigInt::from(n) * &p[k - 1] - &p[k - 2];
        p.push(next);
    }
    p.truncate(cutoff + 1);
    p
}

/// Irreducibles `0..=cutoff` of the free orthogonal quantum group with
/// `k ⊗ l = |k−l| ⊕ (|k−l|+2) ⊕ … ⊕ (k+l)`. Products reaching past the cutoff are
/// left out of the table.
pub fn free_orthogonal(n: i64, cutoff: usize) -> Result<FusionRing> {
    if n < 2 {
        return Err(Error::InvalidRing(format!("free orthogonal ring needs N >= 2, got {n}")));
    }
    let exact = chebyshev_dims(n, cutoff);
    let mut products = BTreeMap::new();
    let mut partial = BTreeMap::new();
    for k in 0..=cutoff {
        for l in 0..=cutoff {
            let lo = k.abs_diff(l);
            let out: Vec<(usize, u64)> = (lo..=k + l).step_by(2).map(|m| (m, 1)).collect();
            if k + l <= cutoff {
                products.insert((k, l), out);
            } else {
                partial.insert((k, l), out.into_iter().filter(|&(m, _)| m <= cutoff).collect());
            }
        }
    }
    Ok(FusionRing {
        name: format!("free-orthogonal:N={n},cutoff={cutoff}"),
        labels: (0..=cutoff).map(|k| k.to_string()).collect(),
        unit: 0,
        dual: (0..=cutoff).collect(),
        dims: exact.iter().map(|d| d.to_f64().unwrap_or(f64::INFINITY)).collect(),
        products,
        truncated: true,
        exact_dims: Some(exact),
        partial,
    })
}

/// Checks the recursion `N · P_k = P_{k+1} + P_{k-1}` on the exact dimensions.
pub fn chebyshev_recursion_holds(ring: &FusionRing, n: i64) -> bool {
    let Some(d) = &ring.exact_dims else { return false };
    d.first().is_some_and(|p| p == &BigInt::from(1))
        && d.windows(3)
            .all(|w| (BigInt::from(n) * &w[1] - &w[2] - &w[0]).is_zero())
}

/// A group acting on the labels of a fusion ring by permutations.
#[derive(Debug, Clone)]
pub struct RingAction {
    pub group: FiniteGroup,
    /// `perms[γ][x]`.
    pub perms: Vec<Vec<usize>>,
}

impl RingAction {
    pub fn trivial(group: FiniteGroup, ring: &FusionRing) -> Self {
        let perms = vec![(0..ring.len()).collect(); group.order()];
        Self { group, perms }
    }

    pub fn act(&self, gamma: usize, x: usize) -> usize {
        self.perms[gamma][x]
    }

    /// The action must be a homomorphism into the automorphisms of the ring.
    pub fn validate(&self, ring: &FusionRing) -> Result<()> {
        let g = &self.group;
        let fail = |w: String| Err(Error::ActionNotCompatible(w));
        if self.perms.len() != g.order() || self.perms.iter().any(|p| p.len() != ring.len()) {
            return fail("permutation table has the wrong shape".into());
        }
        for a in g.elements() {
            let p = &self.perms[a];
            let mut seen = vec![false; p.len()];
            for &x in p {
                if x >= seen.len() || std::mem::replace(&mut seen[x], true) {
                    return fail(format!("{} does not act by a permutation", g.label(a)));
                }
            }
            if p[ring.unit] != ring.unit {
                return fail(format!("{} moves the unit", g.label(a)));
            }
            for x in 0..ring.len() {
                if p[ring.dual[x]] != ring.dual[p[x]] {
                    return fail(format!("{} does not commute with duality", g.label(a)));
                }
                if (ring.dims[p[x]] - ring.dims[x]).abs() > 1e-9 * ring.dims[x] {
                    return fail(format!("{} changes the dimension of {}", g.label(a), ring.labels[x]));
                }
            }
            for (&(x, y), out) in &ring.products {
                let mapped: BTreeMap<usize, u64> = out.iter().map(|&(z, m)| (p[z], m)).collect();
                let Some(target) = ring.products.get(&(p[x], p[y])) else {
                    return fail(format!("{} leaves the truncated table", g.label(a)));
                };
                let target: BTreeMap<usize, u64> = target.iter().copied().collect();
                if mapped != target {
                    return fail(format!(
                        "{} does not preserve {} (x) {}",
                        g.label(a),
                        ring.labels[x],
                        ring.labels[y]
                    ));
                }
            }
            for b in g.elements() {
                let ab = g.mul(a, b);
                if (0..ring.len()).any(|x| self.perms[ab][x] != p[self.perms[b][x]]) {
                    return fail(format!("not a homomorphism at ({}, {})", g.label(a), g.label(b)));
                }
            }
        }
        Ok(())
    }
}

/// Labels `(γ, x)` indexed `γ · |labels| + x`, with
/// `(r, x) ⊗ (s, y) = rs · (α_{s⁻¹}(x) ⊗ y)` and `dual(γ, x) = (γ⁻¹, α_γ(x̄))`.
#[derive(Debug, Clone)]
pub struct CrossedFusionRing {
    pub base: FusionRing,
    pub action: RingAction,
}

impl CrossedFusionRing {
    pub fn len(&self) -> usize {
        self.action.group.order() * self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, gamma: usize, x: usize) -> usize {
        gamma * self.base.len() + x
    }

    pub fn split(&self, label: usize) -> (usize, usize) {
        (label / self.base.len(), label % self.base.len())
    }

    pub fn label(&self, i: usize) -> String {
        let (r, x) = self.split(i);
        format!("{}.{}", self.action.group.label(r), self.base.labels[x])
    }

    pub fn unit(&self) -> usize {
        self.index(self.action.group.identity(), self.base.unit)
    }

    pub fn dual(&self, i: usize) -> usize {
        let g = &self.action.group;
        let (r, x) = self.split(i);
        self.index(g.inv(r), self.action.act(r, self.base.dual[x]))
    }

    pub fn dim(&self, i: usize) -> f64 {
        self.base.dims[self.split(i).1]
    }

    pub fn fuse(&self, a: usize, b: usize) -> Result<Vec<(usize, u64)>> {
        let g = &self.action.group;
        let ((r, x), (s, y)) = (self.split(a), self.split(b));
        let rs = g.mul(r, s);
        let moved = self.action.act(g.inv(s), x);
        Ok(self
            .base
            .fuse(moved, y)?
            .into_iter()
            .map(|(z, m)| (self.index(rs, z), m))
            .collect())
    }

    pub fn n(&self, a: usize, b: usize, c: usize) -> Result<u64> {
        Ok(self.fuse(a, b)?.into_iter().find(|(z, _)| *z == c).map_or(0, |(_, m)| m))
    }

    /// The crossed ring as a plain fusion ring (for validation and reports).
    pub fn flatten(&self) -> FusionRing {
        let n = self.len();
        let mut products = BTreeMap::new();
        let mut partial = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                match self.fuse(a, b) {
                    Ok(v) => {
                        products.insert((a, b), v);
                    }
                    Err(_) => {
                        let g = &self.action.group;
                        let ((r, x), (s, y)) = (self.split(a), self.split(b));
                        let moved = self.action.act(g.inv(s), x);
                        let rs = g.mul(r, s);
                        let v = self
                            .base
                            .fuse_truncated(moved, y)
                            .into_iter()
                            .map(|(z, m)| (self.index(rs, z), m))
                            .collect();
                        partial.insert((a, b), v);
                    }
                }
            }
        }
        FusionRing {
            name: format!("crossed({})", self.base.name),
            labels: (0..n).map(|i| self.label(i)).collect(),
            unit: self.unit(),
            dual: (0..n).map(|i| self.dual(i)).collect(),
            dims: (0..n).map(|i| self.dim(i)).collect(),
            products,
            truncated: self.base.truncated,
            exact_dims: self.base.exact_dims.as_ref().map(|d| (0..n).map(|i| d[self.split(i).1].clone()).collect()),
            partial,
        }
    }
}

/// Builds the crossed ring after checking that the action is compatible.
pub fn crossed_ring(base: FusionRing, action: RingAction) -> Result<CrossedFusionRing> {
    action.validate(&base)?;
    Ok(CrossedFusionRing { base, action })
}

/// The action of `Γ` on `Irr(G)` induced by `α`: `χ_{γ·x} = χ_x ∘ α_{γ⁻¹}`.
pub fn irrep_action(
    gamma: &FiniteGroup,
    g: &FiniteGroup,
    alpha: impl Fn(usize, usize) -> usize,
    table: &CharacterTable,
) -> RingAction {
    let perms = gamma
        .elements()
        .map(|r| {
            let f: Vec<usize> = g.elements().map(|x| alpha(gamma.inv(r), x)).collect();
            (0..table.len()).map(|x| table.compose_automorphism(x, &f)).collect()
        })
        .collect();
    RingAction {
        group: gamma.clone(),
        perms,
    }
}
