//! Morphisms onto quantum subgroups and the dimension of the coset space.

use super::{Element, KacAlgebra, Tensor2};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{rational_rank, CMat};
use crate::matched_pair::MatchedPair;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

/// A linear map between algebras given on the source basis.
#[derive(Debug, Clone)]
pub struct AlgebraMorphism {
    pub target: KacAlgebra,
    pub images: Vec<Element>,
}

impl AlgebraMorphism {
    pub fn identity(a: &KacAlgebra) -> Self {
        Self {
            target: a.clone(),
            images: (0..a.dim()).map(Element::basis).collect(),
        }
    }

    /// The counit, as a map onto the one-dimensional algebra.
    pub fn counit(a: &KacAlgebra) -> Self {
        let triv = FiniteGroup::trivial();
        let pair = MatchedPair::from_tables(triv.clone(), triv, vec![vec![0]], vec![vec![0]])
            .expect("trivial pair");
        let images = (0..a.dim())
            .map(|b| Element::basis(0).scale(Complex64::new(a.basis_counit(b), 0.0)))
            .collect();
        Self {
            target: KacAlgebra::new(pair),
            images,
        }
    }

    /// Restriction `C(G) ⋊ Γ → C(G₀) ⋊ Γ` for an `α`-stable subgroup `G₀ ≤ ker β`,
    /// given by its elements (numbered in the order listed).
    pub fn restriction(a: &KacAlgebra, g0_elems: &[usize]) -> Result<Self> {
        let mp = a.pair();
        let ker = mp.beta_kernel();
        if let Some(x) = g0_elems.iter().find(|x| !ker.contains(x)) {
            return Err(Error::NotAMorphism(format!(
                "{} is not in the kernel of beta",
                mp.g().label(*x)
            )));
        }
        let (g0, _) = mp.g().restrict(g0_elems)?;
        let pos = |x: usize| g0_elems.iter().position(|&y| y == x);
        let mut alpha = Vec::new();
        for r in mp.gamma().elements() {
            let row: Option<Vec<usize>> = g0_elems.iter().map(|&x| pos(mp.alpha(r, x))).collect();
            alpha.push(row.ok_or_else(|| {
                Error::NotAMorphism("subgroup is not stable under alpha".into())
            })?);
        }
        let beta = vec![(0..mp.gamma().order()).collect(); g0.order()];
        let pair = MatchedPair::from_tables(mp.gamma().clone(), g0, alpha, beta)
            .map_err(|e| Error::NotAMorphism(format!("restricted pair is invalid: {e}")))?;
        let target = KacAlgebra::new(pair);
        let images = (0..a.dim())
            .map(|b| {
                let (r, x) = a.split(b);
                match pos(x) {
                    Some(i) => Element::basis(target.index(r, i)),
                    None => Element::zero(),
                }
            })
            .collect();
        Ok(Self { target, images })
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (&b, &c) in &x.coeffs {
            out = out.add(&self.images[b].scale(c));
        }
        out
    }

    fn apply_right(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&(x, y), &c) in &t.coeffs {
            for (&z, &d) in &self.images[y].coeffs {
                out.add_term((x, z), c * d);
            }
        }
        out
    }

    /// Checks that the map is a unital, surjective *-homomorphism intertwining
    /// the coproducts.
    pub fn validate(&self, source: &KacAlgebra, tol: f64) -> Result<()> {
        let t = &self.target;
        let fail = |what: &str, w: String| Err(Error::NotAMorphism(format!("{what} fails at {w}")));
        if self.images.len() != source.dim() {
            return fail("one image per basis element", format!("{} images", self.images.len()));
        }
        if self.apply(&source.unit()).distance(&t.unit()) > tol {
            return fail("unitality", "1".into());
        }
        for a in 0..source.dim() {
            let ra = &self.images[a];
            if self.apply(&Element::basis(source.basis_star(a))).distance(&t.star(ra)) > tol {
                return fail("star", source.basis_label(a));
            }
            let mut lhs = Tensor2::zero();
            for (x, y) in source.basis_coproduct(a) {
                for (&p, &cp) in &self.images[x].coeffs {
                    for (&q, &cq) in &self.images[y].coeffs {
                        lhs.add_term((p, q), cp * cq);
                    }
                }
            }
            if lhs.distance(&t.coproduct(ra)) > tol {
                return fail("coproduct intertwining", source.basis_label(a));
            }
            for b in 0..source.dim() {
                let img = match source.basis_mul(a, b) {
                    Some(c) => self.images[c].clone(),
                    None => Element::zero(),
                };
                if img.distance(&t.mul(ra, &self.images[b])) > tol {
                    return fail(
                        "multiplicativity",
                        format!("({}, {})", source.basis_label(a), source.basis_label(b)),
                    );
                }
            }
        }
        let m = CMat::from_fn(t.dim(), source.dim(), |i, j| self.images[j].coeff(i));
        if crate::linalg::rank(&m, 1e-10) != t.dim() {
            return fail("surjectivity", "image rank".into());
        }
        Ok(())
    }
}

fn as_rational(c: Complex64) -> Option<BigRational> {
    // Exact path only for real coefficients of the form k / 2^j.
    if c.im != 0.0 {
        return None;
    }
    BigRational::from_float(c.re)
}

impl KacAlgebra {
    /// `dim {a : (id ⊗ ρ)Δ(a) = a ⊗ 1}`, the algebra of functions on the coset space.
    pub fn coset_space_dimension(&self, rho: &AlgebraMorphism, tol: f64) -> Result<usize> {
        rho.validate(self, tol)?;
        let one_b = rho.target.unit();
        let m = rho.target.dim();
        let columns: Vec<Tensor2> = (0..self.dim())
            .map(|b| {
                let lhs = rho.apply_right(&self.coproduct(&Element::basis(b)));
                lhs.sub(&self.tensor_with_target(b, &one_b))
            })
            .collect();
        let exact: Option<Vec<Vec<BigRational>>> = columns
            .iter()
            .map(|col| {
                let mut row = vec![BigRational::zero(); self.dim() * m];
                for (&(x, y), &c) in &col.coeffs {
                    row[x * m + y] = as_rational(c)?;
                }
                Some(row)
            })
            .collect();
        let rank = match exact {
            Some(mut rows) => rational_rank(&mut rows),
            None => {
                let mat = CMat::from_fn(self.dim() * m, self.dim(), |k, j| {
                    columns[j].coeff((k / m, k % m))
                });
                crate::linalg::rank(&mat, 1e-10)
            }
        };
        Ok(self.dim() - rank)
    }

    fn tensor_with_target(&self, b: usize, y: &Element) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&k, &c) in &y.coeffs {
            out.add_term((b, k), c);
        }
        out
    }
}
