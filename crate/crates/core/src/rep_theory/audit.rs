//! Audits of the closed-form claims about candidates and fusion rules against
//! intertwiner spaces computed from the linear system.

use super::catalog::IrrepCatalog;
use super::corep::{intertwiners, mor_dim_haar, mor_dim_solver, tensor, Corep, SOLVER_TOL};
use crate::bicrossed::KacAlgebra;
use crate::error::Result;
use crate::linalg::CMat;
use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AuditStatus {
    #[serde(rename = "AUDIT-AGREE")]
    Agree,
    #[serde(rename = "AUDIT-DISAGREE")]
    Disagree,
}

impl std::fmt::Display for AuditStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AuditStatus::Agree => write!(f, "AUDIT-AGREE"),
            AuditStatus::Disagree => write!(f, "AUDIT-DISAGREE"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditEntry {
    pub claim: String,
    pub status: AuditStatus,
    pub predicted: String,
    pub computed: String,
    pub witness: Option<String>,
}

/// Scales an intertwiner so its largest entry is real and positive with modulus 1.
pub fn normalize_phase(t: &CMat) -> CMat {
    let pivot = t
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(Complex64::new(1.0, 0.0));
    if pivot.norm() == 0.0 {
        return t.clone();
    }
    t / pivot
}

pub fn format_matrix(t: &CMat) -> String {
    let rows: Vec<String> = (0..t.nrows())
        .map(|i| {
            let r: Vec<String> = (0..t.ncols()).map(|j| format_complex(t[(i, j)])).collect();
            format!("[{}]", r.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn format_complex(z: Complex64) -> String {
    let clean = |v: f64| if v.abs() < 5e-10 { 0.0 } else { v };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{im:+.6}i")
    }
}

fn candidate_name(c: &IrrepCatalog, i: usize) -> String {
    let cand = &c.candidates[i];
    format!("{} (x) v{}", c.orbit_coreps[cand.orbit].label, cand.irrep)
}

/// Each candidate is claimed irreducible and distinct candidates inequivalent.
pub fn audit_candidates(catalog: &IrrepCatalog) -> Vec<AuditEntry> {
    let n = catalog.candidates.len();
    let mut out = Vec::new();
    for i in 0..n {
        let u = &catalog.candidates[i].corep;
        let d = mor_dim_solver(u, u);
        out.push(AuditEntry {
            claim: format!("{} is irreducible", candidate_name(catalog, i)),
            status: if d == 1 { AuditStatus::Agree } else { AuditStatus::Disagree },
            predicted: "dim End = 1".into(),
            computed: format!("dim End = {d}"),
            witness: None,
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            let u = &catalog.candidates[i].corep;
            let w = &catalog.candidates[j].corep;
            let basis = intertwiners(u, w, SOLVER_TOL);
            let status = if basis.is_empty() { AuditStatus::Agree } else { AuditStatus::Disagree };
            out.push(AuditEntry {
                claim: format!(
                    "{} and {} are inequivalent",
                    candidate_name(catalog, i),
                    candidate_name(catalog, j)
                ),
                status,
                predicted: "dim Mor = 0".into(),
                computed: format!("dim Mor = {}", basis.len()),
                witness: basis.first().map(|t| format_matrix(&normalize_phase(t))),
            });
        }
    }
    out
}

/// Closed-form value of `dim Mor(γ·G ⊗ x, r·G ⊗ s·G)`:
/// `Σ_{s' ∈ s·G, r' ∈ r·G} [r's' ∈ γ·G] (1/|G|) Σ_{g ∈ B_{r',s'}} conj χ_x(g)`.
pub fn fusion_formula(a: &KacAlgebra, catalog: &IrrepCatalog, gamma_orbit: usize, x: usize, r_orbit: usize, s_orbit: usize) -> f64 {
    let mp = a.pair();
    let (gm, g) = (mp.gamma(), mp.g());
    let target = &catalog.orbits[gamma_orbit];
    let mut total = Complex64::new(0.0, 0.0);
    for &s in &catalog.orbits[s_orbit] {
        for &r in &catalog.orbits[r_orbit] {
            if !target.contains(&gm.mul(r, s)) {
                continue;
            }
            let integral: Complex64 = mp
                .b_set(r, s)
                .into_iter()
                .map(|y| catalog.g_table.value(x, y).conj())
                .sum();
            total += integral / g.order() as f64;
        }
    }
    total.re
}

pub fn audit_fusion_formula(a: &KacAlgebra, catalog: &IrrepCatalog) -> Vec<AuditEntry> {
    let no = catalog.orbits.len();
    let mut pairs: Vec<((usize, usize), Corep)> = Vec::new();
    for r in 0..no {
        for s in 0..no {
            pairs.push(((r, s), tensor(a, &catalog.orbit_coreps[r], &catalog.orbit_coreps[s])));
        }
    }
    let mut out = Vec::new();
    for (i, cand) in catalog.candidates.iter().enumerate() {
        for ((r, s), rs) in &pairs {
            let predicted = fusion_formula(a, catalog, cand.orbit, cand.irrep, *r, *s);
            let computed = mor_dim_solver(&cand.corep, rs);
            let agree = (predicted - computed as f64).abs() < 1e-6;
            out.push(AuditEntry {
                claim: format!(
                    "dim Mor({}, {} (x) {})",
                    candidate_name(catalog, i),
                    catalog.orbit_coreps[*r].label,
                    catalog.orbit_coreps[*s].label
                ),
                status: if agree { AuditStatus::Agree } else { AuditStatus::Disagree },
                predicted: format!("{predicted:.6}"),
                computed: computed.to_string(),
                witness: None,
            });
        }
    }
    out
}

/// Each `V^{γ·G} ⊗ v^x` is claimed equivalent to some `v^{x'} ⊗ V^{γ'·G}`.
pub fn audit_flip(a: &KacAlgebra, catalog: &IrrepCatalog, tol: f64) -> Result<Vec<AuditEntry>> {
    let mut flipped: Vec<((usize, usize), Corep)> = Vec::new();
    for (x, vx) in catalog.function_coreps.iter().enumerate() {
        for (o, vo) in catalog.orbit_coreps.iter().enumerate() {
            flipped.push(((x, o), tensor(a, vx, vo)));
        }
    }
    let mut out = Vec::new();
    for (i, cand) in catalog.candidates.iter().enumerate() {
        let mut matches = Vec::new();
        let self_dim = mor_dim_haar(a, &cand.corep, &cand.corep, tol)?;
        for ((x, o), w) in &flipped {
            if w.dim != cand.corep.dim {
                continue;
            }
            // Equivalent exactly when the multiplicity vectors coincide.
            if mor_dim_haar(a, &cand.corep, w, tol)? == self_dim
                && mor_dim_haar(a, w, w, tol)? == self_dim
            {
                matches.push(format!("v{x} (x) {}", catalog.orbit_coreps[*o].label));
            }
        }
        out.push(AuditEntry {
            claim: format!("{} is equivalent to a flipped product", candidate_name(catalog, i)),
            status: if matches.is_empty() { AuditStatus::Disagree } else { AuditStatus::Agree },
            predicted: "some v^x' (x) V^o'".into(),
            computed: if matches.is_empty() { "none".into() } else { matches.join("; ") },
            witness: None,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyCheck {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl ConsistencyCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the linear-system and character values of `dim Mor(c1, c2 ⊗ c3)`
/// over candidate triples (at most `limit` of them, in lexicographic order).
pub fn fusion_consistency(a: &KacAlgebra, catalog: &IrrepCatalog, tol: f64, limit: usize) -> Result<ConsistencyCheck> {
    let n = catalog.candidates.len();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    'outer: for j in 0..n {
        for k in 0..n {
            let t = tensor(a, &catalog.candidates[j].corep, &catalog.candidates[k].corep);
            for i in 0..n {
                if checked >= limit {
                    break 'outer;
                }
                let u = &catalog.candidates[i].corep;
                let haar = mor_dim_haar(a, u, &t, tol)?;
                let solver = mor_dim_solver(u, &t);
                if haar != solver {
                    mismatches.push(format!("({i}, {j}, {k}): character {haar}, solver {solver}"));
                }
                checked += 1;
            }
        }
    }
    Ok(ConsistencyCheck { checked, mismatches })
}
