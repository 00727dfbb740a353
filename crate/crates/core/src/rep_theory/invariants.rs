//! The intrinsic group (one-dimensional corepresentations) and the spectrum
//! (characters of the algebra), computed directly and compared with explicit
//! semidirect-product models.

use super::catalog::IrrepCatalog;
use crate::bicrossed::{Element, KacAlgebra};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::groups::{dual_group, is_isomorphic_small, FiniteGroup, LinearCharacter};
use crate::matched_pair::MatchedPair;
use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct IntrinsicGroup {
    /// The group-like unitaries, one per one-dimensional irrep.
    pub elements: Vec<Element>,
    pub group: FiniteGroup,
}

impl IntrinsicGroup {
    pub fn find(&self, x: &Element, tol: f64) -> Option<usize> {
        self.elements.iter().position(|e| e.distance(x) <= tol)
    }
}

/// One-dimensional irreps of the catalog under the tensor product.
pub fn intrinsic_group(a: &KacAlgebra, catalog: &IrrepCatalog, tol: f64) -> Result<IntrinsicGroup> {
    let elements: Vec<Element> = catalog
        .one_dimensional()
        .into_iter()
        .map(|k| catalog.canonical[k].entries[0].clone())
        .collect();
    for e in &elements {
        let d = a.coproduct(e).distance(&a.tensor(e, e));
        let un = a.mul(e, &a.star(e)).distance(&a.unit());
        if d > tol || un > tol {
            return Err(Error::NotACorepresentation(format!(
                "one-dimensional irrep is not a group-like unitary (defects {d:e}, {un:e})"
            )));
        }
    }
    let mut table = vec![vec![0usize; elements.len()]; elements.len()];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            let p = a.mul(x, y);
            table[i][j] = elements.iter().position(|e| e.distance(&p) <= tol).ok_or_else(|| {
                Error::IdentityViolated {
                    what: "product of one-dimensional irreps is not in the catalog".into(),
                    residual: 1.0,
                }
            })?;
        }
    }
    let group = FiniteGroup::from_law(elements.len(), None, |i, j| table[i][j])?;
    Ok(IntrinsicGroup { elements, group })
}

/// A character `φ(u_γ δ_h) = μ(γ) [h = g]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumPoint {
    pub point: usize,
    pub character: usize,
}

#[derive(Debug, Clone)]
pub struct Spectrum {
    pub points: Vec<SpectrumPoint>,
    pub gamma_characters: Vec<LinearCharacter>,
    pub group: FiniteGroup,
}

fn functional(a: &KacAlgebra, p: &SpectrumPoint, chars: &[LinearCharacter]) -> Vec<Complex64> {
    (0..a.dim())
        .map(|b| {
            let (r, x) = a.split(b);
            if x == p.point {
                chars[p.character].value(r)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect()
}

/// All *-characters of the algebra. Restricted to the functions on `G` a
/// character is evaluation at a point, and restricted to the unitaries `u_γ` it
/// is a linear character of `Γ`; every such pair is tested for multiplicativity
/// on the whole basis.
pub fn spectrum(a: &KacAlgebra, tol: f64) -> Result<Spectrum> {
    let mp = a.pair();
    let chars = crate::groups::linear_characters(mp.gamma());
    let n = a.dim();
    let mut points = Vec::new();
    let mut funcs = Vec::new();
    for x in mp.g().elements() {
        for c in 0..chars.len() {
            let p = SpectrumPoint { point: x, character: c };
            let f = functional(a, &p, &chars);
            let mut ok = true;
            'check: for b1 in 0..n {
                if (f[a.basis_star(b1)] - f[b1].conj()).norm() > tol {
                    ok = false;
                    break;
                }
                for b2 in 0..n {
                    let lhs = a.basis_mul(b1, b2).map_or(Complex64::new(0.0, 0.0), |z| f[z]);
                    if (lhs - f[b1] * f[b2]).norm() > tol {
                        ok = false;
                        break 'check;
                    }
                }
            }
            if ok {
                points.push(p);
                funcs.push(f);
            }
        }
    }
    let conv = |f: &[Complex64], g: &[Complex64]| -> Vec<Complex64> {
        (0..n)
            .map(|b| {
                a.basis_coproduct(b)
                    .into_iter()
                    .map(|(x, y)| f[x] * g[y])
                    .sum()
            })
            .collect()
    };
    let find = |h: &[Complex64]| {
        funcs.iter().position(|f| {
            f.iter().zip(h).all(|(u, v)| (u - v).norm() <= tol)
        })
    };
    let mut table = vec![vec![0usize; funcs.len()]; funcs.len()];
    for i in 0..funcs.len() {
        for j in 0..funcs.len() {
            table[i][j] = find(&conv(&funcs[i], &funcs[j])).ok_or_else(|| Error::IdentityViolated {
                what: "convolution of characters is not a character".into(),
                residual: 1.0,
            })?;
        }
    }
    let labels = points
        .iter()
        .map(|p| format!("({},mu{})", mp.g().label(p.point), p.character))
        .collect();
    let group = FiniteGroup::from_law(points.len(), Some(labels), |i, j| table[i][j])?;
    Ok(Spectrum {
        points,
        gamma_characters: chars,
        group,
    })
}

/// `Sp(G) ⋊ Γ^β` with `(ω, γ)(ω', γ') = ((ω ∘ α_{γ'}) ω', γγ')`, realized by
/// `(ω, γ) ↦ u_γ α(ω)`. Elements are indexed `ω * |Γ^β| + k`.
pub fn intrinsic_model(mp: &MatchedPair) -> Result<(FiniteGroup, Vec<(LinearCharacter, usize)>)> {
    let dual = dual_group(mp.g());
    let fixed = mp.gamma_fixed();
    let (gm, g) = (mp.gamma(), mp.g());
    let nf = fixed.len();
    let alpha_of = |r: usize| -> Vec<usize> { g.elements().map(|x| mp.alpha(r, x)).collect() };
    let pos = |r: usize| fixed.iter().position(|&f| f == r).expect("closed under products");
    let group = FiniteGroup::from_law(dual.characters.len() * nf, None, |p, q| {
        let (w, k) = (p / nf, p % nf);
        let (w2, k2) = (q / nf, q % nf);
        let twisted = dual.characters[w].compose(&alpha_of(fixed[k2]));
        let prod = twisted.mul(&dual.characters[w2]);
        dual.index_of(&prod).expect("twisted character is linear") * nf + pos(gm.mul(fixed[k], fixed[k2]))
    })?;
    let labels = (0..group.order())
        .map(|p| (dual.characters[p / nf].clone(), fixed[p % nf]))
        .collect();
    Ok((group, labels))
}

/// `G^α ⋉ Sp(Γ)` with `(g, ω)(h, μ) = (gh, ω · (μ ∘ β_g))`. Elements are indexed
/// `k * |Sp(Γ)| + ω`.
pub fn spectrum_model(mp: &MatchedPair) -> Result<(FiniteGroup, Vec<(usize, LinearCharacter)>)> {
    let dual = dual_group(mp.gamma());
    let fixed = mp.g_fixed();
    let (gm, g) = (mp.gamma(), mp.g());
    let nd = dual.characters.len();
    let beta_of = |x: usize| -> Vec<usize> { gm.elements().map(|r| mp.beta(x, r)).collect() };
    let pos = |x: usize| fixed.iter().position(|&f| f == x).expect("closed under products");
    let group = FiniteGroup::from_law(fixed.len() * nd, None, |p, q| {
        let (k, w) = (p / nd, p % nd);
        let (k2, w2) = (q / nd, q % nd);
        let twisted = dual.characters[w2].compose(&beta_of(fixed[k]));
        let prod = dual.characters[w].mul(&twisted);
        pos(g.mul(fixed[k], fixed[k2])) * nd + dual.index_of(&prod).expect("twisted character is linear")
    })?;
    let labels = (0..group.order())
        .map(|p| (fixed[p / nd], dual.characters[p % nd].clone()))
        .collect();
    Ok((group, labels))
}

/// For a pair with trivial `β`: `Γ ⋉ Sp(G)` with
/// `(γ, ω)(γ', ω') = (γγ', ω · (ω' ∘ α_{γ⁻¹}))`.
pub fn crossed_intrinsic_model(mp: &MatchedPair) -> Result<FiniteGroup> {
    if !mp.is_beta_trivial() {
        return Err(Error::DeformationPrecondition("crossed model needs a trivial beta".into()));
    }
    let dual = dual_group(mp.g());
    let (gm, g) = (mp.gamma(), mp.g());
    let nd = dual.characters.len();
    FiniteGroup::from_law(gm.order() * nd, None, |p, q| {
        let (r, w) = (p / nd, p % nd);
        let (r2, w2) = (q / nd, q % nd);
        let ainv: Vec<usize> = g.elements().map(|x| mp.alpha(gm.inv(r), x)).collect();
        let prod = dual.characters[w].mul(&dual.characters[w2].compose(&ainv));
        gm.mul(r, r2) * nd + dual.index_of(&prod).expect("twisted character is linear")
    })
}

/// For a pair with trivial `β`: `G^α × Sp(Γ)`.
pub fn crossed_spectrum_model(mp: &MatchedPair) -> Result<FiniteGroup> {
    if !mp.is_beta_trivial() {
        return Err(Error::DeformationPrecondition("crossed model needs a trivial beta".into()));
    }
    let (fixed, _) = mp.g().restrict(&mp.g_fixed())?;
    Ok(FiniteGroup::direct_product(&fixed, &dual_group(mp.gamma()).group))
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub intrinsic_order: usize,
    pub spectrum_order: usize,
    pub intrinsic_model_order: usize,
    pub spectrum_model_order: usize,
    /// `(ω, γ) ↦ u_γ α(ω)` is a bijective homomorphism onto the computed group.
    pub intrinsic_map_ok: bool,
    /// The convolution of characters matches the model law pointwise.
    pub spectrum_map_ok: bool,
    pub intrinsic_isomorphic: bool,
    pub spectrum_isomorphic: bool,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.intrinsic_map_ok && self.spectrum_map_ok && self.intrinsic_isomorphic && self.spectrum_isomorphic
    }
}

pub struct InvariantGroups {
    pub intrinsic: IntrinsicGroup,
    pub spectrum: Spectrum,
    pub report: InvariantReport,
}

pub fn invariant_groups(a: &KacAlgebra, catalog: &IrrepCatalog, cfg: &RunConfig) -> Result<InvariantGroups> {
    let tol = cfg.tolerances.equality;
    let mp = a.pair();
    let intrinsic = intrinsic_group(a, catalog, tol)?;
    let spec = spectrum(a, tol)?;
    let (int_model, int_labels) = intrinsic_model(mp)?;
    let (spec_model, spec_labels) = spectrum_model(mp)?;

    // Explicit realization of the intrinsic model inside the algebra.
    let images: Vec<Option<usize>> = int_labels
        .iter()
        .map(|(w, r)| {
            let f: Vec<Complex64> = mp.g().elements().map(|x| w.value(x)).collect();
            let e = a.mul(&a.u(*r), &a.function(&f));
            intrinsic.find(&e, tol)
        })
        .collect();
    let intrinsic_map_ok = images.len() == intrinsic.elements.len()
        && images.iter().all(|i| i.is_some())
        && {
            let im: Vec<usize> = images.iter().map(|i| i.unwrap_or(0)).collect();
            let mut sorted = im.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == im.len()
                && int_model.elements().all(|p| {
                    int_model
                        .elements()
                        .all(|q| im[int_model.mul(p, q)] == intrinsic.group.mul(im[p], im[q]))
                })
        };

    let spec_images: Vec<Option<usize>> = spec_labels
        .iter()
        .map(|(x, w)| {
            let c = spec.gamma_characters.iter().position(|c| c == w)?;
            spec.points
                .iter()
                .position(|p| p.point == *x && p.character == c)
        })
        .collect();
    let spectrum_map_ok = spec_images.len() == spec.points.len()
        && spec_images.iter().all(|i| i.is_some())
        && {
            let im: Vec<usize> = spec_images.iter().map(|i| i.unwrap_or(0)).collect();
            spec_model.elements().all(|p| {
                spec_model
                    .elements()
                    .all(|q| im[spec_model.mul(p, q)] == spec.group.mul(im[p], im[q]))
            })
        };

    let intrinsic_isomorphic = is_isomorphic_small(&intrinsic.group, &int_model, &cfg.caps)?.is_some();
    let spectrum_isomorphic = is_isomorphic_small(&spec.group, &spec_model, &cfg.caps)?.is_some();
    let report = InvariantReport {
        intrinsic_order: intrinsic.group.order(),
        spectrum_order: spec.group.order(),
        intrinsic_model_order: int_model.order(),
        spectrum_model_order: spec_model.order(),
        intrinsic_map_ok,
        spectrum_map_ok,
        intrinsic_isomorphic,
        spectrum_isomorphic,
    };
    Ok(InvariantGroups {
        intrinsic,
        spectrum: spec,
        report,
    })
}
