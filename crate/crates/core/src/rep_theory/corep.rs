//! Finite-dimensional corepresentations: matrices of algebra elements `w_ij`
//! with `Δ(w_ij) = Σ_k w_ik ⊗ w_kj`.

use crate::bicrossed::{Element, KacAlgebra, Tensor2};
use crate::error::{Error, Result};
use crate::groups::MatrixIrrep;
use crate::linalg::{kernel_from_gram, CMat};
use num_complex::Complex64;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct Corep {
    pub dim: usize,
    /// Row-major entries.
    pub entries: Vec<Element>,
    pub label: String,
}

impl Corep {
    pub fn entry(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.dim + j]
    }

    pub fn character(&self) -> Element {
        (0..self.dim).map(|i| self.entry(i, i).clone()).sum()
    }

    /// `W* u W` for a matrix `W` of shape `dim × k`.
    pub fn compress(&self, w: &CMat, label: String) -> Corep {
        let k = w.ncols();
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let mut e = Element::zero();
                for p in 0..self.dim {
                    for q in 0..self.dim {
                        let c = w[(p, i)].conj() * w[(q, j)];
                        if c.norm() > 1e-15 {
                            e = e.add(&self.entry(p, q).scale(c));
                        }
                    }
                }
                entries.push(e);
            }
        }
        Corep {
            dim: k,
            entries,
            label,
        }
    }
}

/// `V^{γ·G}` on an orbit `r_0, r_1, ...`: entries `u_{r_i} 1_{A_{r_i, r_j}}`.
pub fn orbit_corep(a: &KacAlgebra, orbit: &[usize]) -> Corep {
    let mp = a.pair();
    let m = orbit.len();
    let mut entries = Vec::with_capacity(m * m);
    for &r in orbit {
        for &s in orbit {
            let mut e = Element::zero();
            for x in mp.a_set(r, s) {
                e.add_term(a.index(r, x), Complex64::new(1.0, 0.0));
            }
            entries.push(e);
        }
    }
    let labels: Vec<&str> = orbit.iter().map(|&r| mp.gamma().label(r)).collect();
    Corep {
        dim: m,
        entries,
        label: format!("V{{{}}}", labels.join(",")),
    }
}

/// `v^x = (id ⊗ α)(u^x)`: entries `Σ_g U^x(g)_{ij} u_e δ_g`.
pub fn function_corep(a: &KacAlgebra, irrep: &MatrixIrrep, label: String) -> Corep {
    let d = irrep.dim;
    let g = a.pair().g();
    let mut entries = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let f: Vec<Complex64> = g.elements().map(|x| irrep.entry(x, i, j)).collect();
            entries.push(a.function(&f));
        }
    }
    Corep {
        dim: d,
        entries,
        label,
    }
}

/// `u ⊗ w` with entries `u_ij w_kl` at `((i,k), (j,l))`.
pub fn tensor(a: &KacAlgebra, u: &Corep, w: &Corep) -> Corep {
    let d = u.dim * w.dim;
    let mut entries = Vec::with_capacity(d * d);
    for i in 0..u.dim {
        for k in 0..w.dim {
            for j in 0..u.dim {
                for l in 0..w.dim {
                    entries.push(a.mul(u.entry(i, j), w.entry(k, l)));
                }
            }
        }
    }
    // entries were pushed in order (i,k,j,l); rows are (i,k), columns (j,l).
    Corep {
        dim: d,
        entries,
        label: format!("{}x{}", u.label, w.label),
    }
}

/// Checks the coaction identity and unitarity; returns the largest residual.
pub fn corep_defect(a: &KacAlgebra, u: &Corep) -> f64 {
    let d = u.dim;
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let lhs = a.coproduct(u.entry(i, j));
            let mut rhs = Tensor2::zero();
            for k in 0..d {
                rhs = rhs.add(&a.tensor(u.entry(i, k), u.entry(k, j)));
            }
            worst = worst.max(lhs.distance(&rhs));
            let delta = if i == j { a.unit() } else { Element::zero() };
            let mut uu = Element::zero();
            let mut uu2 = Element::zero();
            for k in 0..d {
                uu = uu.add(&a.mul(u.entry(i, k), &a.star(u.entry(j, k))));
                uu2 = uu2.add(&a.mul(&a.star(u.entry(k, i)), u.entry(k, j)));
            }
            worst = worst.max(uu.distance(&delta)).max(uu2.distance(&delta));
        }
    }
    worst
}

pub fn check_corep(a: &KacAlgebra, u: &Corep, tol: f64) -> Result<()> {
    let defect = corep_defect(a, u);
    if defect > tol {
        return Err(Error::NotACorepresentation(format!(
            "{} has defect {defect:e}",
            u.label
        )));
    }
    Ok(())
}

fn round_integral(v: Complex64, tol: f64) -> Result<usize> {
    let r = v.re.round();
    if (v - Complex64::new(r, 0.0)).norm() > tol || r < 0.0 {
        return Err(Error::NonIntegral { value: v.re, tol });
    }
    Ok(r as usize)
}

/// `dim Mor(u, w) = h(χ(u)* χ(w))`.
pub fn mor_dim_haar(a: &KacAlgebra, u: &Corep, w: &Corep, tol: f64) -> Result<usize> {
    let v = a.haar(&a.mul(&a.star(&u.character()), &w.character()));
    round_integral(v, tol)
}

/// Orthonormal basis (Frobenius inner product) of `{T : (T ⊗ 1)u = w(T ⊗ 1)}`,
/// each `T` of shape `dim w × dim u`.
pub fn intertwiners(u: &Corep, w: &Corep, tol: f64) -> Vec<CMat> {
    let (du, dw) = (u.dim, w.dim);
    let n = du * dw;
    let mut rows: BTreeMap<(usize, usize, usize), Vec<(usize, Complex64)>> = BTreeMap::new();
    for i in 0..dw {
        for j in 0..du {
            for k in 0..du {
                for (&b, &c) in &u.entry(k, j).coeffs {
                    rows.entry((i, j, b)).or_default().push((i * du + k, c));
                }
            }
            for k in 0..dw {
                for (&b, &c) in &w.entry(i, k).coeffs {
                    rows.entry((i, j, b)).or_default().push((k * du + j, -c));
                }
            }
        }
    }
    let mut gram = CMat::zeros(n, n);
    for row in rows.values() {
        let mut merged: BTreeMap<usize, Complex64> = BTreeMap::new();
        for &(p, c) in row {
            *merged.entry(p).or_default() += c;
        }
        for (&p, &cp) in &merged {
            for (&q, &cq) in &merged {
                gram[(p, q)] += cp.conj() * cq;
            }
        }
    }
    let (kernel, _) = kernel_from_gram(&gram, tol);
    kernel
        .into_iter()
        .map(|v| CMat::from_fn(dw, du, |i, k| v[i * du + k]))
        .collect()
}

/// `dim Mor(u, w)` from the linear system, independent of the Haar state.
pub fn mor_dim_solver(u: &Corep, w: &Corep) -> usize {
    intertwiners(u, w, SOLVER_TOL).len()
}

/// Relative eigenvalue threshold for the intertwiner null space.
pub const SOLVER_TOL: f64 = 1e-9;
