//! Exhaustive verification of the Hopf *-algebra axioms on the basis.

use super::{Element, KacAlgebra, Sparse, Tensor2, Tensor3};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, CMat};
use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub residual: f64,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub tolerance: f64,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.residual <= self.tolerance)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().fold(0.0, |m, c| m.max(c.residual))
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.residual > self.tolerance)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Tracks the worst residual seen for one axiom, with the first witness at that level.
struct Worst {
    axiom: &'static str,
    residual: f64,
    witness: Option<String>,
}

impl Worst {
    fn new(axiom: &'static str) -> Self {
        Self {
            axiom,
            residual: 0.0,
            witness: None,
        }
    }

    fn see(&mut self, residual: f64, witness: impl FnOnce() -> String) {
        if residual > self.residual {
            self.residual = residual;
            self.witness = Some(witness());
        }
    }

    fn done(self) -> AxiomCheck {
        AxiomCheck {
            axiom: self.axiom,
            residual: self.residual,
            witness: self.witness,
        }
    }
}

fn opt_label(a: &KacAlgebra, b: Option<usize>) -> String {
    b.map_or_else(|| "0".to_string(), |x| a.basis_label(x))
}

impl KacAlgebra {
    /// Runs every axiom check and returns the full report.
    pub fn axiom_report(&self, tol: f64) -> AxiomReport {
        let n = self.dim();
        let lab = |b: usize| self.basis_label(b);
        let one = Complex64::new(1.0, 0.0);

        let mut assoc = Worst::new("associativity");
        let mut star_anti = Worst::new("star is an anti-multiplicative involution");
        let mut trace = Worst::new("Haar state is a trace");
        let mut counit_mult = Worst::new("counit is multiplicative");
        for a in 0..n {
            for b in 0..n {
                let ab = self.basis_mul(a, b);
                let ba = self.basis_mul(b, a);
                for c in 0..n {
                    let left = ab.and_then(|x| self.basis_mul(x, c));
                    let right = self.basis_mul(b, c).and_then(|x| self.basis_mul(a, x));
                    if left != right {
                        assoc.see(1.0, || {
                            format!("({}, {}, {}): {} vs {}", lab(a), lab(b), lab(c), opt_label(self, left), opt_label(self, right))
                        });
                    }
                }
                let lhs = ab.map(|x| self.basis_star(x));
                let rhs = self.basis_mul(self.basis_star(b), self.basis_star(a));
                if lhs != rhs {
                    star_anti.see(1.0, || format!("({}, {})", lab(a), lab(b)));
                }
                let hab = ab.map_or(0.0, |x| self.basis_haar(x));
                let hba = ba.map_or(0.0, |x| self.basis_haar(x));
                trace.see((hab - hba).abs(), || format!("({}, {})", lab(a), lab(b)));
                let e_ab = ab.map_or(0.0, |x| self.basis_counit(x));
                counit_mult.see((e_ab - self.basis_counit(a) * self.basis_counit(b)).abs(), || {
                    format!("({}, {})", lab(a), lab(b))
                });
            }
            if self.basis_star(self.basis_star(a)) != a {
                star_anti.see(1.0, || format!("{} ** != itself", lab(a)));
            }
        }

        let unit = self.unit();
        let mut unit_check = Worst::new("unit");
        for b in 0..n {
            let eb = Element::basis(b);
            let r = self.mul(&unit, &eb).distance(&eb).max(self.mul(&eb, &unit).distance(&eb));
            unit_check.see(r, || lab(b));
        }
        let d1 = self.coproduct(&unit);
        unit_check.see(d1.distance(&self.tensor(&unit, &unit)), || "coproduct of the unit".into());
        unit_check.see((self.counit(&unit) - one).norm(), || "counit of the unit".into());

        let mut coassoc = Worst::new("coassociativity");
        let mut counit_law = Worst::new("counit law");
        let mut antipode = Worst::new("antipode");
        let mut s2 = Worst::new("antipode squares to the identity");
        let mut haar_inv = Worst::new("Haar state is bi-invariant");
        let mut delta_star = Worst::new("coproduct preserves the star");
        let deltas: Vec<Vec<(usize, usize)>> = (0..n).map(|b| self.basis_coproduct(b)).collect();
        for b in 0..n {
            let eb = Element::basis(b);
            let delta = &deltas[b];
            let mut left = Tensor3::zero();
            let mut right = Tensor3::zero();
            for &(x, y) in delta {
                for &(x1, x2) in &deltas[x] {
                    left.add_term((x1, x2, y), one);
                }
                for &(y1, y2) in &deltas[y] {
                    right.add_term((x, y1, y2), one);
                }
            }
            coassoc.see(left.distance(&right), || lab(b));

            let mut l = Element::zero();
            let mut r = Element::zero();
            let mut ml = Element::zero();
            let mut mr = Element::zero();
            let mut hl = Element::zero();
            let mut hr = Element::zero();
            let mut starred = Tensor2::zero();
            for &(x, y) in delta {
                l.add_term(y, Complex64::new(self.basis_counit(x), 0.0));
                r.add_term(x, Complex64::new(self.basis_counit(y), 0.0));
                if let Some(z) = self.basis_mul(self.basis_antipode(x), y) {
                    ml.add_term(z, one);
                }
                if let Some(z) = self.basis_mul(x, self.basis_antipode(y)) {
                    mr.add_term(z, one);
                }
                hl.add_term(y, Complex64::new(self.basis_haar(x), 0.0));
                hr.add_term(x, Complex64::new(self.basis_haar(y), 0.0));
                starred.add_term((self.basis_star(x), self.basis_star(y)), one);
            }
            counit_law.see(l.distance(&eb).max(r.distance(&eb)), || lab(b));
            let eps1 = unit.scale(Complex64::new(self.basis_counit(b), 0.0));
            antipode.see(ml.distance(&eps1).max(mr.distance(&eps1)), || lab(b));
            if self.basis_antipode(self.basis_antipode(b)) != b {
                s2.see(1.0, || lab(b));
            }
            let h1 = unit.scale(Complex64::new(self.basis_haar(b), 0.0));
            haar_inv.see(hl.distance(&h1).max(hr.distance(&h1)), || lab(b));
            let ds = Sparse::<(usize, usize)> {
                coeffs: deltas[self.basis_star(b)]
                    .iter()
                    .map(|&t| (t, one))
                    .collect(),
            };
            delta_star.see(ds.distance(&starred), || lab(b));
        }

        let mut delta_mult = Worst::new("coproduct is multiplicative");
        for a in 0..n {
            let da = Tensor2 {
                coeffs: deltas[a].iter().map(|&t| (t, one)).collect(),
            };
            for b in 0..n {
                let db = Tensor2 {
                    coeffs: deltas[b].iter().map(|&t| (t, one)).collect(),
                };
                let prod = self.tensor_mul(&da, &db);
                let expected = match self.basis_mul(a, b) {
                    Some(c) => Tensor2 {
                        coeffs: deltas[c].iter().map(|&t| (t, one)).collect(),
                    },
                    None => Tensor2::zero(),
                };
                delta_mult.see(prod.distance(&expected), || format!("({}, {})", lab(a), lab(b)));
            }
        }

        // Gram matrix of the Haar state on the basis must be positive definite.
        let mut positivity = Worst::new("Haar state is faithful and positive");
        let gram = CMat::from_fn(n, n, |i, j| {
            let v = self
                .basis_mul(self.basis_star(i), j)
                .map_or(0.0, |z| self.basis_haar(z));
            Complex64::new(v, 0.0)
        });
        let (vals, _) = hermitian_eigen(&gram);
        let min = vals.first().copied().unwrap_or(0.0);
        let herm = (&gram - gram.adjoint()).iter().fold(0.0f64, |m, z| m.max(z.norm()));
        positivity.see(herm, || "Gram matrix is not Hermitian".into());
        if min <= tol {
            positivity.see(tol - min + f64::EPSILON, || format!("smallest Gram eigenvalue {min:e}"));
        }

        AxiomReport {
            tolerance: tol,
            checks: vec![
                assoc.done(),
                unit_check.done(),
                star_anti.done(),
                coassoc.done(),
                counit_law.done(),
                counit_mult.done(),
                delta_mult.done(),
                delta_star.done(),
                antipode.done(),
                s2.done(),
                haar_inv.done(),
                positivity.done(),
                trace.done(),
            ],
        }
    }

    /// All axioms within `tol`, or the first violated axiom with its witness.
    pub fn check_axioms(&self, tol: f64) -> Result<AxiomReport> {
        let report = self.axiom_report(tol);
        if let Some(f) = report.first_failure() {
            return Err(Error::AxiomViolation {
                axiom: f.axiom.to_string(),
                residual: f.residual,
                witness: f.witness.clone().unwrap_or_default(),
            });
        }
        Ok(report)
    }
}
