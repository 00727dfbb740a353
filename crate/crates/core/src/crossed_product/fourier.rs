//! Fourier transform on the discrete dual of a finite group and the
//! Sobolev-0 norm of finitely supported dual elements.

use crate::config::Caps;
use crate::error::Result;
use crate::groups::{character_table, matrix_irreps, CharacterTable, FiniteGroup, MatrixIrrep};
use crate::linalg::CMat;
use num_complex::Complex64;
use rand::Rng;
use std::collections::BTreeMap;

/// Finitely many blocks `label ↦ a_label`, each square of the label's dimension.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DualElement {
    pub blocks: BTreeMap<usize, CMat>,
}

impl DualElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(label: usize, block: CMat) -> Self {
        let mut blocks = BTreeMap::new();
        blocks.insert(label, block);
        Self { blocks }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut blocks = self.blocks.clone();
        for (k, b) in &other.blocks {
            blocks
                .entry(*k)
                .and_modify(|m| *m += b)
                .or_insert_with(|| b.clone());
        }
        Self { blocks }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            blocks: self.blocks.iter().map(|(k, b)| (*k, b * c)).collect(),
        }
    }

    /// Largest entrywise difference over the union of supports.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for k in self.blocks.keys().chain(other.blocks.keys()) {
            let d = match (self.blocks.get(k), other.blocks.get(k)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            };
            worst = worst.max(d.iter().fold(0.0, |m, z| m.max(z.norm())));
        }
        worst
    }

    /// Random blocks with entries uniform in the unit square.
    pub fn random(labels: &[(usize, usize)], rng: &mut impl Rng) -> Self {
        let blocks = labels
            .iter()
            .map(|&(label, d)| {
                let m = CMat::from_fn(d, d, |_, _| {
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                });
                (label, m)
            })
            .collect();
        Self { blocks }
    }
}

/// Matrix irreps of a finite group with a `Q_x` slot per label.
#[derive(Debug, Clone)]
pub struct FourierContext {
    pub group: FiniteGroup,
    pub table: CharacterTable,
    pub irreps: Vec<MatrixIrrep>,
    /// Identity in the Kac case; other values are accepted but experimental.
    pub q: Vec<CMat>,
}

impl FourierContext {
    pub fn new(group: &FiniteGroup, caps: &Caps, seed: u64) -> Result<Self> {
        let table = character_table(group, caps, seed)?;
        let irreps = matrix_irreps(group, &table, seed)?;
        Ok(Self::from_irreps(group.clone(), table, irreps))
    }

    pub fn from_irreps(group: FiniteGroup, table: CharacterTable, irreps: Vec<MatrixIrrep>) -> Self {
        let q = irreps.iter().map(|u| CMat::identity(u.dim, u.dim)).collect();
        Self {
            group,
            table,
            irreps,
            q,
        }
    }

    pub fn dim(&self, x: usize) -> usize {
        self.irreps[x].dim
    }

    pub fn labels_with_dims(&self) -> Vec<(usize, usize)> {
        (0..self.irreps.len()).map(|x| (x, self.dim(x))).collect()
    }

    /// `p_x`: the identity in block `x`.
    pub fn projection(&self, x: usize) -> DualElement {
        DualElement::single(x, CMat::identity(self.dim(x), self.dim(x)))
    }

    /// The identity in every block.
    pub fn identity(&self) -> DualElement {
        (0..self.irreps.len())
            .map(|x| self.projection(x))
            .fold(DualElement::zero(), |a, b| a.add(&b))
    }
}

/// `F(a)(g) = Σ_x dim(x) Tr(Q_x U^x(g) a_x)`, as a function on the group.
pub fn fourier_transform(ctx: &FourierContext, a: &DualElement) -> Vec<Complex64> {
    ctx.group
        .elements()
        .map(|g| {
            a.blocks
                .iter()
                .map(|(&x, ax)| {
                    let d = ctx.dim(x) as f64;
                    (&ctx.q[x] * &ctx.irreps[x].matrices[g] * ax).trace() * d
                })
                .sum()
        })
        .collect()
}

/// Inverse of [`fourier_transform`] for `Q = 1`: `a_x = mean_g f(g) U^x(g)*`.
pub fn inverse_fourier(ctx: &FourierContext, f: &[Complex64]) -> DualElement {
    let n = ctx.group.order() as f64;
    let blocks = (0..ctx.irreps.len())
        .map(|x| {
            let d = ctx.dim(x);
            let mut m = CMat::zeros(d, d);
            for g in ctx.group.elements() {
                m += ctx.irreps[x].matrices[g].adjoint() * f[g];
            }
            (x, m / Complex64::new(n, 0.0))
        })
        .collect();
    DualElement { blocks }
}

/// `‖a‖₀² = Σ_x dim(x) Tr(Q_x* a_x* a_x Q_x)`; returns the norm.
pub fn sobolev0_norm(ctx: &FourierContext, a: &DualElement) -> f64 {
    a.blocks
        .iter()
        .map(|(&x, ax)| {
            let q = &ctx.q[x];
            ctx.dim(x) as f64 * (q.adjoint() * ax.adjoint() * ax * q).trace().re
        })
        .sum::<f64>()
        .sqrt()
}

/// `sqrt(mean_g |f(g)|²)`.
pub fn haar_l2(f: &[Complex64]) -> f64 {
    (f.iter().map(|z| z.norm_sqr()).sum::<f64>() / f.len() as f64).sqrt()
}
