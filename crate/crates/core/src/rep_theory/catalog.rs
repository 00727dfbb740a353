//! The honest catalog of irreducible corepresentations: candidates
//! `V^{γ·G} ⊗ v^x` are decomposed through their endomorphism algebras and the
//! pieces deduplicated by intertwiner dimension.

use super::corep::{function_corep, intertwiners, mor_dim_haar, orbit_corep, tensor, Corep, SOLVER_TOL};
use crate::bicrossed::KacAlgebra;
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::groups::{character_table, matrix_irreps, CharacterTable, MatrixIrrep};
use crate::linalg::{cluster_gap, eigen_clusters, hermitian_eigen, CMat};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct Candidate {
    pub orbit: usize,
    pub irrep: usize,
    pub corep: Corep,
}

#[derive(Debug, Clone)]
pub struct IrrepCatalog {
    pub orbits: Vec<Vec<usize>>,
    pub g_table: CharacterTable,
    pub g_irreps: Vec<MatrixIrrep>,
    pub orbit_coreps: Vec<Corep>,
    pub function_coreps: Vec<Corep>,
    pub candidates: Vec<Candidate>,
    pub canonical: Vec<Corep>,
    /// For each candidate, `(canonical index, multiplicity)` pairs.
    pub decomposition: Vec<Vec<(usize, usize)>>,
}

impl IrrepCatalog {
    pub fn dims(&self) -> Vec<usize> {
        self.canonical.iter().map(|c| c.dim).collect()
    }

    /// Sorted canonical dimensions.
    pub fn dim_multiset(&self) -> Vec<usize> {
        let mut d = self.dims();
        d.sort_unstable();
        d
    }

    pub fn peter_weyl_sum(&self) -> usize {
        self.canonical.iter().map(|c| c.dim * c.dim).sum()
    }

    pub fn candidate_index(&self, orbit: usize, irrep: usize) -> Option<usize> {
        self.candidates
            .iter()
            .position(|c| c.orbit == orbit && c.irrep == irrep)
    }

    /// Indices of the one-dimensional canonical irreps.
    pub fn one_dimensional(&self) -> Vec<usize> {
        (0..self.canonical.len())
            .filter(|&i| self.canonical[i].dim == 1)
            .collect()
    }
}

const SPLIT_ATTEMPTS: usize = 16;

/// Splits a unitary corepresentation into irreducible pieces.
pub fn decompose(u: &Corep, rng: &mut ChaCha8Rng) -> Result<Vec<Corep>> {
    let end = intertwiners(u, u, SOLVER_TOL);
    if end.len() <= 1 {
        return Ok(vec![u.clone()]);
    }
    for _ in 0..SPLIT_ATTEMPTS {
        // A generic Hermitian element of End(u) has the irreducible pieces as eigenspaces.
        let mut h = CMat::zeros(u.dim, u.dim);
        for t in &end {
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            h += t * c;
        }
        let h = &h + h.adjoint();
        let (vals, vecs) = hermitian_eigen(&h);
        let spread = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let clusters = eigen_clusters(&vals, 1e-7 * spread);
        if clusters.len() == 1 || cluster_gap(&vals, &clusters) < 1e-4 * spread {
            continue;
        }
        let mut out = Vec::new();
        for (k, (s, e)) in clusters.into_iter().enumerate() {
            let w = vecs.columns(s, e - s).into_owned();
            let piece = u.compress(&w, format!("{}[{k}]", u.label));
            out.extend(decompose(&piece, rng)?);
        }
        return Ok(out);
    }
    Err(Error::NotACorepresentation(format!(
        "{} did not split after {SPLIT_ATTEMPTS} attempts",
        u.label
    )))
}

/// Enumerates `Irr` of the algebra from the candidates `V^{γ·G} ⊗ v^x`.
pub fn enumerate_irreps(a: &KacAlgebra, cfg: &RunConfig) -> Result<IrrepCatalog> {
    let tol = cfg.tolerances;
    let mp = a.pair();
    let g_table = character_table(mp.g(), &cfg.caps, cfg.seed)?;
    let g_irreps = matrix_irreps(mp.g(), &g_table, cfg.seed)?;
    let orbits = mp.orbits();
    let orbit_coreps: Vec<Corep> = orbits.iter().map(|o| orbit_corep(a, o)).collect();
    let function_coreps: Vec<Corep> = g_irreps
        .iter()
        .enumerate()
        .map(|(x, u)| function_corep(a, u, format!("v{x}")))
        .collect();
    let mut candidates = Vec::new();
    for (o, vo) in orbit_coreps.iter().enumerate() {
        for (x, vx) in function_coreps.iter().enumerate() {
            candidates.push(Candidate {
                orbit: o,
                irrep: x,
                corep: tensor(a, vo, vx),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut canonical: Vec<Corep> = Vec::new();
    let mut decomposition = Vec::with_capacity(candidates.len());
    for c in &candidates {
        let pieces = decompose(&c.corep, &mut rng)?;
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for p in pieces {
            let mut found = None;
            for (k, q) in canonical.iter().enumerate() {
                if q.dim == p.dim && mor_dim_haar(a, &p, q, tol.integer_residual)? > 0 {
                    found = Some(k);
                    break;
                }
            }
            let k = found.unwrap_or_else(|| {
                canonical.push(p);
                canonical.len() - 1
            });
            match counts.iter_mut().find(|(i, _)| *i == k) {
                Some(entry) => entry.1 += 1,
                None => counts.push((k, 1)),
            }
        }
        counts.sort_unstable();
        decomposition.push(counts);
    }
    let catalog = IrrepCatalog {
        orbits,
        g_table,
        g_irreps,
        orbit_coreps,
        function_coreps,
        candidates,
        canonical,
        decomposition,
    };
    let sum = catalog.peter_weyl_sum();
    if sum != a.dim() {
        return Err(Error::PeterWeylMismatch {
            found: sum,
            expected: a.dim(),
        });
    }
    let span = coefficient_rank(a, &catalog.canonical);
    if span != a.dim() {
        return Err(Error::PeterWeylMismatch {
            found: span,
            expected: a.dim(),
        });
    }
    Ok(catalog)
}

/// Rank of the span of all matrix coefficients.
pub fn coefficient_rank(a: &KacAlgebra, coreps: &[Corep]) -> usize {
    let cols: Vec<&crate::bicrossed::Element> = coreps.iter().flat_map(|c| c.entries.iter()).collect();
    let m = CMat::from_fn(a.dim(), cols.len(), |i, j| cols[j].coeff(i));
    crate::linalg::rank(&m, 1e-10)
}
