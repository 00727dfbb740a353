//! Unitary matrix realizations of the irreducible characters.

use super::{CharacterTable, FiniteGroup};
use crate::error::{Error, Result};
use crate::linalg::{cluster_gap, eigen_clusters, frobenius, hermitian_eigen, orthonormalize, CMat, CVec};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `g ↦ U(g)` for one irreducible character; `matrices[g]` is unitary.
#[derive(Debug, Clone)]
pub struct MatrixIrrep {
    pub character: usize,
    pub dim: usize,
    pub matrices: Vec<CMat>,
}

impl MatrixIrrep {
    pub fn entry(&self, g: usize, i: usize, j: usize) -> Complex64 {
        self.matrices[g][(i, j)]
    }

    /// Largest Frobenius defect of `U(a)U(b) = U(ab)`.
    pub fn multiplicativity_defect(&self, g: &FiniteGroup) -> f64 {
        let mut worst = 0.0f64;
        for a in g.elements() {
            for b in g.elements() {
                let d = &self.matrices[a] * &self.matrices[b] - &self.matrices[g.mul(a, b)];
                worst = worst.max(frobenius(&d));
            }
        }
        worst
    }
}

const MAX_ATTEMPTS: usize = 16;
const MULTIPLICATIVITY_TOL: f64 = 1e-7;

/// One matrix irrep per row of `table`, in the same order.
///
/// Each irreducible subspace is cut out of the regular representation: project
/// onto the isotypic component, then split it with a random Hermitian element of
/// the commuting right-regular action.
pub fn matrix_irreps(g: &FiniteGroup, table: &CharacterTable, seed: u64) -> Result<Vec<MatrixIrrep>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..table.len())
        .map(|x| {
            let irrep = if table.dims[x] == 1 {
                MatrixIrrep {
                    character: x,
                    dim: 1,
                    matrices: g
                        .elements()
                        .map(|e| CMat::from_element(1, 1, table.value(x, e)))
                        .collect(),
                }
            } else {
                extract(g, table, x, &mut rng)?
            };
            verify(g, table, &irrep)?;
            Ok(irrep)
        })
        .collect()
}

fn extract(
    g: &FiniteGroup,
    table: &CharacterTable,
    x: usize,
    rng: &mut ChaCha8Rng,
) -> Result<MatrixIrrep> {
    let n = g.order();
    let d = table.dims[x];
    let scale = d as f64 / n as f64;
    // Columns of the isotypic projection: P e_b = Σ_a (d/n) conj χ(a b⁻¹) e_a.
    let columns: Vec<CVec> = g
        .elements()
        .map(|b| {
            CVec::from_fn(n, |a, _| {
                table.value(x, g.mul(a, g.inv(b))).conj() * scale
            })
        })
        .collect();
    let q = orthonormalize(&columns, 1e-9);
    if q.len() != d * d {
        return Err(Error::ExtractionFailed {
            irrep: x,
            reason: format!("isotypic component has dimension {} not {}", q.len(), d * d),
        });
    }
    let qm = CMat::from_columns(&q);
    for _ in 0..MAX_ATTEMPTS {
        // B = Σ_g c_g ρ(g) + conj(c_g) ρ(g⁻¹), with (ρ(g) v)(a) = v(a g).
        let coeffs: Vec<Complex64> = g
            .elements()
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let bq = CMat::from_fn(n, d * d, |a, col| {
            let mut s = Complex64::new(0.0, 0.0);
            for h in g.elements() {
                s += coeffs[h] * qm[(g.mul(a, h), col)];
                s += coeffs[h].conj() * qm[(g.mul(a, g.inv(h)), col)];
            }
            s
        });
        let small = qm.adjoint() * bq;
        let (vals, vecs) = hermitian_eigen(&small);
        let spread = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let clusters = eigen_clusters(&vals, 1e-7 * spread);
        if clusters.len() != d
            || clusters.iter().any(|(s, e)| e - s != d)
            || cluster_gap(&vals, &clusters) < 1e-4 * spread
        {
            continue;
        }
        let (start, end) = clusters[clusters.len() - 1];
        let basis = &qm * vecs.columns(start, end - start);
        let matrices = g
            .elements()
            .map(|e| {
                CMat::from_fn(d, d, |i, j| {
                    let mut s = Complex64::new(0.0, 0.0);
                    for h in g.elements() {
                        s += basis[(g.mul(e, h), i)].conj() * basis[(h, j)];
                    }
                    s
                })
            })
            .collect();
        return Ok(MatrixIrrep {
            character: x,
            dim: d,
            matrices,
        });
    }
    Err(Error::ExtractionFailed {
        irrep: x,
        reason: format!("no splitting element found in {MAX_ATTEMPTS} attempts"),
    })
}

fn verify(g: &FiniteGroup, table: &CharacterTable, u: &MatrixIrrep) -> Result<()> {
    let defect = u.multiplicativity_defect(g);
    if defect > MULTIPLICATIVITY_TOL {
        return Err(Error::ExtractionFailed {
            irrep: u.character,
            reason: format!("multiplicativity defect {defect:e}"),
        });
    }
    for e in g.elements() {
        let m = &u.matrices[e];
        let unit = frobenius(&(m.adjoint() * m - CMat::identity(u.dim, u.dim)));
        let tr = (m.trace() - table.value(u.character, e)).norm();
        if unit > MULTIPLICATIVITY_TOL || tr > MULTIPLICATIVITY_TOL {
            return Err(Error::ExtractionFailed {
                irrep: u.character,
                reason: format!("unitarity defect {unit:e}, trace defect {tr:e}"),
            });
        }
    }
    Ok(())
}
