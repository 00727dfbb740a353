//! Branching of irreducibles along a surjection onto a quantum subgroup, and
//! Kazhdan pairs as metadata.

use super::catalog::IrrepCatalog;
use super::corep::{mor_dim_haar, Corep};
use crate::bicrossed::{AlgebraMorphism, KacAlgebra};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;

/// `(id ⊗ ρ)(u)`.
pub fn push_corep(rho: &AlgebraMorphism, u: &Corep) -> Corep {
    Corep {
        dim: u.dim,
        entries: u.entries.iter().map(|e| rho.apply(e)).collect(),
        label: format!("rho({})", u.label),
    }
}

/// Multiplicities `m[x][y] = dim Mor(v^y, (id ⊗ ρ)(u^x))`, source canonical
/// irreps by row and target canonical irreps by column.
pub fn branching_matrix(
    source: &KacAlgebra,
    source_catalog: &IrrepCatalog,
    rho: &AlgebraMorphism,
    target_catalog: &IrrepCatalog,
    tol: f64,
) -> Result<Vec<Vec<usize>>> {
    rho.validate(source, tol)?;
    let t = &rho.target;
    source_catalog
        .canonical
        .iter()
        .map(|u| {
            let pushed = push_corep(rho, u);
            target_catalog
                .canonical
                .iter()
                .map(|v| mor_dim_haar(t, v, &pushed, 1e-6))
                .collect()
        })
        .collect()
}

/// `N_y^ρ`: the source irreps whose image under `ρ` contains `v^y`.
pub fn branching_sets(
    source: &KacAlgebra,
    source_catalog: &IrrepCatalog,
    rho: &AlgebraMorphism,
    target_catalog: &IrrepCatalog,
    y: usize,
    tol: f64,
) -> Result<Vec<usize>> {
    if y >= target_catalog.canonical.len() {
        return Err(Error::NotAMorphism(format!("target has no irrep {y}")));
    }
    let m = branching_matrix(source, source_catalog, rho, target_catalog, tol)?;
    Ok((0..m.len()).filter(|&x| m[x][y] > 0).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchingCheck {
    /// `Σ_y |N_y|`.
    pub total_incidences: usize,
    /// Every source irrep splits with `Σ_y m[x][y] dim(y) = dim(x)`.
    pub dimensions_match: bool,
    /// Every target irrep occurs in some source irrep.
    pub covers_target: bool,
}

pub fn branching_consistency(
    source_catalog: &IrrepCatalog,
    target_catalog: &IrrepCatalog,
    m: &[Vec<usize>],
) -> BranchingCheck {
    let ty = target_catalog.dims();
    let dimensions_match = source_catalog
        .canonical
        .iter()
        .zip(m)
        .all(|(u, row)| row.iter().zip(&ty).map(|(k, d)| k * d).sum::<usize>() == u.dim);
    let covers_target = (0..ty.len()).all(|y| m.iter().any(|row| row[y] > 0));
    BranchingCheck {
        total_incidences: m.iter().flatten().filter(|&&k| k > 0).count(),
        dimensions_match,
        covers_target,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KazhdanPair {
    pub set: BTreeSet<String>,
    pub delta: f64,
}

impl KazhdanPair {
    pub fn new(set: impl IntoIterator<Item = String>, delta: f64) -> Result<Self> {
        if !(delta > 0.0) {
            return Err(Error::DomainError(format!("Kazhdan constant must be positive, got {delta}")));
        }
        Ok(Self {
            set: set.into_iter().collect(),
            delta,
        })
    }
}

/// Union of the sets, minimum of the constants.
pub fn kazhdan_combine(p1: &KazhdanPair, p2: &KazhdanPair) -> KazhdanPair {
    KazhdanPair {
        set: p1.set.union(&p2.set).cloned().collect(),
        delta: p1.delta.min(p2.delta),
    }
}
