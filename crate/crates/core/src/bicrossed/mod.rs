//! The Kac algebra `C(G) ⋊ Γ` of a matched pair, on the basis `u_γ δ_g`.
//!
//! Products: `(u_r δ_g)(u_s δ_h) = [α_{s⁻¹}(g) = h] u_{rs} δ_h`.
//! Coproduct: `Δ(u_γ δ_g) = Σ_a u_γ δ_a ⊗ u_{β_a(γ)} δ_{a⁻¹g}`.
//! Counit `ε(u_γ δ_g) = [g = e]`, Haar state `h(u_γ δ_g) = [γ = e] / |G|`.

mod axioms;
mod coset;
mod element;

pub use axioms::{AxiomCheck, AxiomReport};
pub use coset::AlgebraMorphism;
pub use element::{Element, Sparse, Tensor2, Tensor3};

use crate::matched_pair::MatchedPair;
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct KacAlgebra {
    pair: MatchedPair,
}

impl KacAlgebra {
    /// The algebra of a pair. The pair is not revalidated, so a pair built with
    /// [`MatchedPair::from_tables_unchecked`] yields an algebra whose axioms can fail.
    pub fn new(pair: MatchedPair) -> Self {
        Self { pair }
    }

    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    pub fn dim(&self) -> usize {
        self.pair.dimension()
    }

    #[inline]
    pub fn index(&self, gamma: usize, g: usize) -> usize {
        gamma * self.pair.g().order() + g
    }

    #[inline]
    pub fn split(&self, b: usize) -> (usize, usize) {
        let n = self.pair.g().order();
        (b / n, b % n)
    }

    pub fn basis_label(&self, b: usize) -> String {
        let (r, g) = self.split(b);
        format!(
            "u[{}]d[{}]",
            self.pair.gamma().label(r),
            self.pair.g().label(g)
        )
    }

    pub fn basis_mul(&self, a: usize, b: usize) -> Option<usize> {
        let gm = self.pair.gamma();
        let (r, x) = self.split(a);
        let (s, y) = self.split(b);
        (self.pair.alpha(gm.inv(s), x) == y).then(|| self.index(gm.mul(r, s), y))
    }

    /// `(u_γ δ_g)* = u_{γ⁻¹} δ_{α_γ(g)}`.
    pub fn basis_star(&self, b: usize) -> usize {
        let (r, x) = self.split(b);
        self.index(self.pair.gamma().inv(r), self.pair.alpha(r, x))
    }

    /// Terms `(b1, b2)` of `Δ(b)`, each with coefficient 1.
    pub fn basis_coproduct(&self, b: usize) -> Vec<(usize, usize)> {
        let g = self.pair.g();
        let (r, x) = self.split(b);
        g.elements()
            .map(|a| {
                (
                    self.index(r, a),
                    self.index(self.pair.beta(a, r), g.mul(g.inv(a), x)),
                )
            })
            .collect()
    }

    pub fn basis_counit(&self, b: usize) -> f64 {
        let (_, x) = self.split(b);
        if x == self.pair.g().identity() {
            1.0
        } else {
            0.0
        }
    }

    /// `S(u_γ δ_g) = u_{ρ⁻¹} δ_{α_ρ(g⁻¹)}` with `ρ = β_g(γ)`.
    pub fn basis_antipode(&self, b: usize) -> usize {
        let (gm, g) = (self.pair.gamma(), self.pair.g());
        let (r, x) = self.split(b);
        let rho = self.pair.beta(x, r);
        self.index(gm.inv(rho), self.pair.alpha(rho, g.inv(x)))
    }

    pub fn basis_haar(&self, b: usize) -> f64 {
        let (r, _) = self.split(b);
        if r == self.pair.gamma().identity() {
            1.0 / self.pair.g().order() as f64
        } else {
            0.0
        }
    }

    pub fn unit(&self) -> Element {
        let e = self.pair.gamma().identity();
        let mut out = Element::zero();
        for x in self.pair.g().elements() {
            out.add_term(self.index(e, x), Complex64::new(1.0, 0.0));
        }
        out
    }

    /// `u_γ = Σ_g u_γ δ_g`.
    pub fn u(&self, gamma: usize) -> Element {
        let mut out = Element::zero();
        for x in self.pair.g().elements() {
            out.add_term(self.index(gamma, x), Complex64::new(1.0, 0.0));
        }
        out
    }

    /// `α(F) = Σ_g F(g) u_e δ_g` for a function on `G`.
    pub fn function(&self, f: &[Complex64]) -> Element {
        let e = self.pair.gamma().identity();
        let mut out = Element::zero();
        for (x, &c) in f.iter().enumerate() {
            out.add_term(self.index(e, x), c);
        }
        out
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (&x, &cx) in &a.coeffs {
            for (&y, &cy) in &b.coeffs {
                if let Some(z) = self.basis_mul(x, y) {
                    out.add_term(z, cx * cy);
                }
            }
        }
        out
    }

    pub fn star(&self, a: &Element) -> Element {
        let mut out = Element::zero();
        for (&x, &c) in &a.coeffs {
            out.add_term(self.basis_star(x), c.conj());
        }
        out
    }

    pub fn coproduct(&self, a: &Element) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&x, &c) in &a.coeffs {
            for t in self.basis_coproduct(x) {
                out.add_term(t, c);
            }
        }
        out
    }

    pub fn counit(&self, a: &Element) -> Complex64 {
        a.coeffs.iter().map(|(&x, &c)| c * self.basis_counit(x)).sum()
    }

    pub fn antipode(&self, a: &Element) -> Element {
        let mut out = Element::zero();
        for (&x, &c) in &a.coeffs {
            out.add_term(self.basis_antipode(x), c);
        }
        out
    }

    pub fn haar(&self, a: &Element) -> Complex64 {
        a.coeffs.iter().map(|(&x, &c)| c * self.basis_haar(x)).sum()
    }

    /// `h(b* a)`, the GNS inner product.
    pub fn inner(&self, a: &Element, b: &Element) -> Complex64 {
        self.haar(&self.mul(&self.star(b), a))
    }

    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&(x1, x2), &cx) in &a.coeffs {
            for (&(y1, y2), &cy) in &b.coeffs {
                if let (Some(z1), Some(z2)) = (self.basis_mul(x1, y1), self.basis_mul(x2, y2)) {
                    out.add_term((z1, z2), cx * cy);
                }
            }
        }
        out
    }

    pub fn tensor(&self, a: &Element, b: &Element) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&x, &cx) in &a.coeffs {
            for (&y, &cy) in &b.coeffs {
                out.add_term((x, y), cx * cy);
            }
        }
        out
    }

    /// Matrix of left multiplication by `a` on the basis (columns are images).
    pub fn left_multiplication(&self, a: &Element) -> crate::linalg::CMat {
        let n = self.dim();
        let mut m = crate::linalg::CMat::zeros(n, n);
        for (&x, &c) in &a.coeffs {
            for y in 0..n {
                if let Some(z) = self.basis_mul(x, y) {
                    m[(z, y)] += c;
                }
            }
        }
        m
    }

    /// Group-like elements among the `u_γ`: `Δ(u_γ) = u_γ ⊗ u_γ` exactly when `γ ∈ Γ^β`.
    pub fn group_subalgebra_check(&self) -> GroupSubalgebraReport {
        let gm = self.pair.gamma();
        let mut group_like = Vec::new();
        let mut multiplicative = true;
        let mut coproduct_formula = true;
        for r in gm.elements() {
            let ur = self.u(r);
            for s in gm.elements() {
                if self.mul(&ur, &self.u(s)).distance(&self.u(gm.mul(r, s))) > 0.0 {
                    multiplicative = false;
                }
            }
            let delta = self.coproduct(&ur);
            if delta.distance(&self.tensor(&ur, &ur)) == 0.0 {
                group_like.push(r);
            }
            // Δ(u_γ) = Σ_{t ∈ γ·G} u_γ 1_{A_{γ,t}} ⊗ u_t
            let mut expected = Tensor2::zero();
            for orbit in self.pair.orbits().iter().filter(|o| o.contains(&r)) {
                for &t in orbit {
                    let mut left = Element::zero();
                    for x in self.pair.a_set(r, t) {
                        left.add_term(self.index(r, x), Complex64::new(1.0, 0.0));
                    }
                    expected = expected.add(&self.tensor(&left, &self.u(t)));
                }
            }
            if delta.distance(&expected) > 0.0 {
                coproduct_formula = false;
            }
        }
        let unit_ok = self.u(gm.identity()).distance(&self.unit()) == 0.0;
        let fixed = self.pair.gamma_fixed();
        GroupSubalgebraReport {
            group_like_matches_fixed_points: group_like == fixed,
            group_like,
            multiplicative,
            coproduct_formula,
            unit_ok,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct GroupSubalgebraReport {
    pub group_like: Vec<usize>,
    pub group_like_matches_fixed_points: bool,
    pub multiplicative: bool,
    pub coproduct_formula: bool,
    pub unit_ok: bool,
}

impl GroupSubalgebraReport {
    pub fn passed(&self) -> bool {
        self.group_like_matches_fixed_points
            && self.multiplicative
            && self.coproduct_formula
            && self.unit_ok
    }
}

#[cfg(test)]
mod tests;
