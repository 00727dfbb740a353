//! Conjugacy classes and character tables by simultaneous diagonalization of
//! class-sum multiplication.

use super::FiniteGroup;
use crate::config::{Caps, Tolerances};
use crate::error::{Error, Result};
use crate::linalg::{cluster_gap, eigen_clusters, hermitian_eigen, CMat};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ClassData {
    /// Classes as sorted element lists; the identity class comes first.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub center: Vec<usize>,
}

impl ClassData {
    pub fn representative(&self, k: usize) -> usize {
        self.classes[k][0]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn conjugacy_and_center(g: &FiniteGroup) -> ClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = vec![g.identity()];
    order.extend(g.elements().filter(|&x| x != g.identity()));
    for x in order {
        if class_of[x] != usize::MAX {
            continue;
        }
        let k = classes.len();
        let mut cls: Vec<usize> = g.elements().map(|h| g.conj(h, x)).collect();
        cls.sort_unstable();
        cls.dedup();
        for &y in &cls {
            class_of[y] = k;
        }
        classes.push(cls);
    }
    let center = classes
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect::<Vec<_>>();
    let mut center = center;
    center.sort_unstable();
    ClassData {
        classes,
        class_of,
        center,
    }
}

/// Irreducible characters, one row per irrep, one column per class.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub classes: ClassData,
    #[serde(skip)]
    pub values: Vec<Vec<Complex64>>,
    pub dims: Vec<usize>,
    pub group_order: usize,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Character value of irrep `x` at element `g`.
    pub fn value(&self, x: usize, g: usize) -> Complex64 {
        self.values[x][self.classes.class_of[g]]
    }

    /// `⟨f, χ_x⟩ = (1/|G|) Σ_g f(g) conj(χ_x(g))` for a class function given per class.
    pub fn inner(&self, f: &[Complex64], x: usize) -> Complex64 {
        let s: Complex64 = self
            .classes
            .classes
            .iter()
            .enumerate()
            .map(|(k, c)| f[k] * self.values[x][k].conj() * c.len() as f64)
            .sum();
        s / self.group_order as f64
    }

    /// Index of the complex-conjugate irrep.
    pub fn dual(&self, x: usize) -> usize {
        let target: Vec<Complex64> = self.values[x].iter().map(|z| z.conj()).collect();
        (0..self.len())
            .find(|&y| {
                self.values[y]
                    .iter()
                    .zip(&target)
                    .all(|(a, b)| (a - b).norm() < 1e-6)
            })
            .expect("conjugate of an irreducible character is irreducible")
    }

    /// Irrep whose character is `χ_x ∘ f` for an automorphism `f`.
    pub fn compose_automorphism(&self, x: usize, f: &[usize]) -> usize {
        let target: Vec<Complex64> = self
            .classes
            .classes
            .iter()
            .map(|c| self.value(x, f[c[0]]))
            .collect();
        (0..self.len())
            .find(|&y| {
                self.values[y]
                    .iter()
                    .zip(&target)
                    .all(|(a, b)| (a - b).norm() < 1e-6)
            })
            .expect("twisted character is irreducible")
    }

    /// Tensor multiplicity `⟨χ_x χ_y, χ_z⟩`, rounded.
    pub fn fusion(&self, x: usize, y: usize, z: usize) -> usize {
        let prod: Vec<Complex64> = (0..self.classes.len())
            .map(|k| self.values[x][k] * self.values[y][k])
            .collect();
        self.inner(&prod, z).re.round() as usize
    }
}

const MAX_ATTEMPTS: usize = 16;
/// Minimum relative gap between distinct eigenvalues of the splitting element.
const SEPARATION: f64 = 1e-4;

/// Character table of `g`. Central characters are the joint eigenvectors of the
/// class-sum multiplication operators; a seeded random Hermitian combination
/// separates them.
pub fn character_table(g: &FiniteGroup, caps: &Caps, seed: u64) -> Result<CharacterTable> {
    let n = g.order();
    if n > caps.character_table {
        return Err(Error::SizeBound {
            order: n,
            bound: caps.character_table,
        });
    }
    let tol = Tolerances::default();
    let cd = conjugacy_and_center(g);
    let r = cd.len();
    let sizes: Vec<f64> = cd.classes.iter().map(|c| c.len() as f64).collect();
    // c[j][i][k] = #{(a, b) in C_j x C_i : ab = rep_k}
    let mut c = vec![vec![vec![0u32; r]; r]; r];
    for (j, cls) in cd.classes.iter().enumerate() {
        for &a in cls {
            let ai = g.inv(a);
            for k in 0..r {
                let b = g.mul(ai, cd.representative(k));
                c[j][cd.class_of[b]][k] += 1;
            }
        }
    }
    // Left multiplication by C_j in the orthonormal basis C_i / sqrt|C_i|.
    let ops: Vec<CMat> = (0..r)
        .map(|j| {
            CMat::from_fn(r, r, |k, i| {
                Complex64::new(c[j][i][k] as f64 * (sizes[k] / sizes[i]).sqrt(), 0.0)
            })
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..MAX_ATTEMPTS {
        let mut h = CMat::zeros(r, r);
        for op in &ops {
            let a: f64 = rng.gen_range(-1.0..1.0);
            let b: f64 = rng.gen_range(-1.0..1.0);
            let adj = op.adjoint();
            h += (op + &adj) * Complex64::new(a, 0.0);
            h += (op - &adj) * Complex64::new(0.0, b);
        }
        let (vals, vecs) = hermitian_eigen(&h);
        let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let clusters = eigen_clusters(&vals, 1e-7 * scale);
        // Close eigenvalues make the eigenvectors inaccurate; draw again.
        if clusters.len() != r || cluster_gap(&vals, &clusters) < SEPARATION * scale {
            continue;
        }
        let mut rows = Vec::with_capacity(r);
        let mut dims = Vec::with_capacity(r);
        for col in 0..r {
            let v0 = vecs[(0, col)];
            if v0.norm() < 1e-12 {
                return Err(Error::SeedDegenerate { attempts: MAX_ATTEMPTS });
            }
            let ratios: Vec<Complex64> = (0..r)
                .map(|k| (vecs[(k, col)] / v0).conj() / sizes[k].sqrt())
                .collect();
            let norm: f64 = (0..r).map(|k| sizes[k] * ratios[k].norm_sqr()).sum();
            let d = (n as f64 / norm).sqrt();
            let dr = d.round();
            if (d - dr).abs() > tol.integer_residual || dr < 1.0 {
                return Err(Error::NonIntegral {
                    value: d,
                    tol: tol.integer_residual,
                });
            }
            rows.push(ratios.iter().map(|z| z * dr).collect::<Vec<_>>());
            dims.push(dr as usize);
        }
        let mut table = CharacterTable {
            classes: cd.clone(),
            values: rows,
            dims,
            group_order: n,
        };
        sort_irreps(&mut table);
        verify_table(&table, &tol)?;
        return Ok(table);
    }
    Err(Error::SeedDegenerate {
        attempts: MAX_ATTEMPTS,
    })
}

/// Trivial character first, then by dimension, then by rounded values.
fn sort_irreps(t: &mut CharacterTable) {
    let key = |x: usize| -> (bool, usize, Vec<(i64, i64)>) {
        let trivial = t.values[x].iter().all(|z| (z - 1.0).norm() < 1e-6);
        let vals = t.values[x]
            .iter()
            .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
            .collect();
        (!trivial, t.dims[x], vals)
    };
    let mut idx: Vec<usize> = (0..t.len()).collect();
    idx.sort_by_key(|&x| key(x));
    t.values = idx.iter().map(|&x| t.values[x].clone()).collect();
    t.dims = idx.iter().map(|&x| t.dims[x]).collect();
}

fn verify_table(t: &CharacterTable, tol: &Tolerances) -> Result<()> {
    let sum_sq: usize = t.dims.iter().map(|d| d * d).sum();
    if sum_sq != t.group_order {
        return Err(Error::PeterWeylMismatch {
            found: sum_sq,
            expected: t.group_order,
        });
    }
    for x in 0..t.len() {
        for y in 0..t.len() {
            let ip = t.inner(&t.values[x], y);
            let expected = if x == y { 1.0 } else { 0.0 };
            if (ip - expected).norm() > tol.equality {
                return Err(Error::IdentityViolated {
                    what: format!("row orthogonality of irreps {x} and {y}"),
                    residual: (ip - expected).norm(),
                });
            }
        }
    }
    Ok(())
}
