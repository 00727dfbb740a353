//! Crossed products `C(G) ⋊ Γ` of finite groups: the algebra, its crossed
//! fusion ring, the Fourier decomposition along `Γ`, and the rapid-decay
//! sampling harness.

use super::fourier::{fourier_transform, sobolev0_norm, DualElement, FourierContext};
use super::length::LengthFunction;
use super::ring::{crossed_ring, irrep_action, ring_of_table, CrossedFusionRing};
use crate::bicrossed::{Element, KacAlgebra};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::groups::{is_isomorphic_small, FiniteGroup};
use crate::linalg::{frobenius, hermitian_eigen, CMat};
use crate::matched_pair::MatchedPair;
use crate::rep_theory::{
    crossed_intrinsic_model, crossed_spectrum_model, enumerate_irreps, intertwiners, invariant_groups,
    mor_dim_haar, Corep, InvariantGroups, SOLVER_TOL,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct CrossedInstance {
    pub algebra: KacAlgebra,
    pub fourier: FourierContext,
    pub ring: CrossedFusionRing,
}

impl CrossedInstance {
    /// `C(G) ⋊_α Γ` from a pair whose `β` is trivial.
    pub fn from_pair(mp: MatchedPair, cfg: &RunConfig) -> Result<Self> {
        if !mp.is_beta_trivial() {
            return Err(Error::InvalidPair(
                "a crossed product needs the right action to be trivial".into(),
            ));
        }
        let fourier = FourierContext::new(mp.g(), &cfg.caps, cfg.seed)?;
        let base = ring_of_table(&fourier.table);
        let action = irrep_action(mp.gamma(), mp.g(), |r, x| mp.alpha(r, x), &fourier.table);
        let ring = crossed_ring(base, action)?;
        Ok(Self {
            algebra: KacAlgebra::new(mp),
            fourier,
            ring,
        })
    }

    pub fn new(gamma: FiniteGroup, g: FiniteGroup, alpha: Vec<Vec<usize>>, cfg: &RunConfig) -> Result<Self> {
        Self::from_pair(MatchedPair::from_action(gamma, g, alpha)?, cfg)
    }

    /// `u^{γ·x} = u_γ α(u^x)`.
    pub fn corep(&self, label: usize) -> Corep {
        let (r, x) = self.ring.split(label);
        let u = &self.fourier.irreps[x];
        let a = &self.algebra;
        let mut entries = Vec::with_capacity(u.dim * u.dim);
        for i in 0..u.dim {
            for j in 0..u.dim {
                let mut e = Element::zero();
                for g in a.pair().g().elements() {
                    e.add_term(a.index(r, g), u.entry(g, i, j));
                }
                entries.push(e);
            }
        }
        Corep {
            dim: u.dim,
            entries,
            label: self.ring.label(label),
        }
    }

    /// `F(a) = Σ dim(γ·x) Tr(u^{γ·x} a_{γ·x})` with blocks indexed by crossed labels.
    pub fn fourier_transform(&self, a: &DualElement) -> Element {
        let mut out = Element::zero();
        for (&label, block) in &a.blocks {
            let w = self.corep(label);
            out = out.add(&transform_block(&w, block));
        }
        out
    }

    /// `‖a‖₀` over crossed labels.
    pub fn sobolev0_norm(&self, a: &DualElement) -> f64 {
        a.blocks
            .iter()
            .map(|(&l, b)| self.ring.dim(l) * (b.adjoint() * b).trace().re)
            .sum::<f64>()
            .sqrt()
    }

    /// `u_γ α(f)` for a function `f` on `G`.
    pub fn u_alpha(&self, gamma: usize, f: &[Complex64]) -> Element {
        let a = &self.algebra;
        let mut e = Element::zero();
        for g in a.pair().g().elements() {
            e.add_term(a.index(gamma, g), f[g]);
        }
        e
    }
}

fn transform_block(w: &Corep, block: &CMat) -> Element {
    let d = w.dim as f64;
    let mut out = Element::zero();
    for i in 0..w.dim {
        for j in 0..w.dim {
            let c = block[(j, i)] * d;
            if c.norm() > 0.0 {
                out = out.add(&w.entry(i, j).scale(c));
            }
        }
    }
    out
}

/// `C(G) ⋊ Γ` for `Γ ≤ G` acting by conjugation.
pub fn conj_action_builder(g: &FiniteGroup, gamma_elems: &[usize], cfg: &RunConfig) -> Result<CrossedInstance> {
    CrossedInstance::from_pair(MatchedPair::conjugation(g, gamma_elems)?, cfg)
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossedInvariantReport {
    pub intrinsic_order: usize,
    pub spectrum_order: usize,
    /// Against `Γ ⋉ Sp(G)`.
    pub intrinsic_matches: bool,
    /// Against `G^α × Sp(Γ)`.
    pub spectrum_matches: bool,
}

pub fn crossed_invariant_groups(inst: &CrossedInstance, cfg: &RunConfig) -> Result<(InvariantGroups, CrossedInvariantReport)> {
    let catalog = enumerate_irreps(&inst.algebra, cfg)?;
    let inv = invariant_groups(&inst.algebra, &catalog, cfg)?;
    let mp = inst.algebra.pair();
    let int_model = crossed_intrinsic_model(mp)?;
    let spec_model = crossed_spectrum_model(mp)?;
    let report = CrossedInvariantReport {
        intrinsic_order: inv.intrinsic.group.order(),
        spectrum_order: inv.spectrum.group.order(),
        intrinsic_matches: is_isomorphic_small(&inv.intrinsic.group, &int_model, &cfg.caps)?.is_some(),
        spectrum_matches: is_isomorphic_small(&inv.spectrum.group, &spec_model, &cfg.caps)?.is_some(),
    };
    Ok((inv, report))
}

fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    let a = CMat::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let (_, v) = hermitian_eigen(&(&a + a.adjoint()));
    v
}

/// Canonical irreducibles of the crossed product, each conjugated by a random
/// unitary, together with the label they realize and the unitary `V` with
/// `w = V u^{γ·x} V*`.
#[derive(Debug, Clone)]
pub struct Realization {
    pub corep: Corep,
    pub label: usize,
    pub v: CMat,
}

pub fn realize_irreps(inst: &CrossedInstance, cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Realization>> {
    let catalog = enumerate_irreps(&inst.algebra, cfg)?;
    let tol = cfg.tolerances.integer_residual;
    let standard: Vec<Corep> = (0..inst.ring.len()).map(|l| inst.corep(l)).collect();
    let mut out = Vec::new();
    for w in &catalog.canonical {
        let u = random_unitary(w.dim, rng);
        let w = w.compress(&u, w.label.clone());
        let mut found = None;
        for (l, s) in standard.iter().enumerate() {
            if s.dim == w.dim && mor_dim_haar(&inst.algebra, s, &w, tol)? == 1 {
                found = Some(l);
                break;
            }
        }
        let label = found.ok_or_else(|| Error::IdentityViolated {
            what: format!("{} matches no crossed label", w.label),
            residual: 1.0,
        })?;
        let t = intertwiners(&standard[label], &w, SOLVER_TOL)
            .into_iter()
            .next()
            .ok_or_else(|| Error::IdentityViolated {
                what: format!("no intertwiner onto {}", w.label),
                residual: 1.0,
            })?;
        let v = &t * Complex64::new((w.dim as f64).sqrt() / frobenius(&t), 0.0);
        out.push(Realization { corep: w, label, v });
    }
    if out.len() != inst.ring.len() {
        return Err(Error::IdentityViolated {
            what: format!("{} irreducibles for {} crossed labels", out.len(), inst.ring.len()),
            residual: 1.0,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct FourierLemmaReport {
    pub draws: usize,
    /// Largest coefficient deviation of `F(a) = Σ_γ u_γ α(F_G(a_γ))`.
    pub transform_deviation: f64,
    /// Largest deviation of `‖a‖₀² = Σ_γ ‖a_γ‖₀²`.
    pub norm_deviation: f64,
}

/// Checks the decomposition of the Fourier transform and of the Sobolev-0 norm
/// along `Γ` on `draws` random dual elements, written in randomly rotated
/// irreducibles.
pub fn check_lemma_fourier(inst: &CrossedInstance, cfg: &RunConfig, draws: usize, tol: f64) -> Result<FourierLemmaReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let reals = realize_irreps(inst, cfg, &mut rng)?;
    let ng = inst.algebra.pair().gamma().order();
    let mut report = FourierLemmaReport {
        draws,
        transform_deviation: 0.0,
        norm_deviation: 0.0,
    };
    for draw in 0..draws {
        // Random blocks on a random nonempty subset of the irreducibles.
        let mut blocks = Vec::new();
        for (k, r) in reals.iter().enumerate() {
            if rng.gen_bool(0.6) || (k == reals.len() - 1 && blocks.is_empty()) {
                blocks.push((k, r.corep.dim));
            }
        }
        let a = DualElement::random(&blocks, &mut rng);
        let mut lhs = Element::zero();
        let mut lhs_norm = 0.0;
        let mut slices = vec![DualElement::zero(); ng];
        for (&k, block) in &a.blocks {
            let r = &reals[k];
            lhs = lhs.add(&transform_block(&r.corep, block));
            lhs_norm += r.corep.dim as f64 * (block.adjoint() * block).trace().re;
            let (gamma, x) = inst.ring.split(r.label);
            let moved = r.v.adjoint() * block * &r.v;
            slices[gamma] = slices[gamma].add(&DualElement::single(x, moved));
        }
        let mut rhs = Element::zero();
        let mut rhs_norm = 0.0;
        for (gamma, s) in slices.iter().enumerate() {
            if s.blocks.is_empty() {
                continue;
            }
            rhs = rhs.add(&inst.u_alpha(gamma, &fourier_transform(&inst.fourier, s)));
            rhs_norm += sobolev0_norm(&inst.fourier, s).powi(2);
        }
        let dt = lhs.distance(&rhs);
        let dn = (lhs_norm - rhs_norm).abs();
        report.transform_deviation = report.transform_deviation.max(dt);
        report.norm_deviation = report.norm_deviation.max(dn);
        if dt > tol || dn > tol {
            return Err(Error::IdentityViolated {
                what: format!("Fourier decomposition on draw {draw} (blocks {:?})", a.blocks.keys().collect::<Vec<_>>()),
                residual: dt.max(dn),
            });
        }
    }
    Ok(report)
}

/// `P(k) = Σ_i c_i k^i`.
pub fn eval_poly(coeffs: &[f64], k: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * k + c)
}

/// Largest singular value of left multiplication by `x`.
pub fn operator_norm(a: &KacAlgebra, x: &Element) -> f64 {
    let m = a.left_multiplication(x);
    let (vals, _) = hermitian_eigen(&(m.adjoint() * m));
    vals.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

#[derive(Debug, Clone, Serialize)]
pub struct RdSample {
    pub band: usize,
    pub operator_norm: f64,
    pub sobolev_norm: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RdReport {
    pub samples: Vec<RdSample>,
    pub max_ratio: f64,
    pub passed: bool,
}

/// Samples `a` supported in a length band `[k, k+1)` and compares
/// `‖F(a)‖_op` with `P(k) ‖a‖₀`.
pub fn rd_inequality_sample(
    inst: &CrossedInstance,
    l0: &LengthFunction,
    p: &[f64],
    samples: usize,
    seed: u64,
) -> Result<RdReport> {
    if l0.values.len() != inst.ring.len() {
        return Err(Error::InvalidLength("length table does not match the crossed ring".into()));
    }
    let mut bands: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (label, &l) in l0.values.iter().enumerate() {
        bands.entry(l.floor() as usize).or_default().push(label);
    }
    let keys: Vec<usize> = bands.keys().copied().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let k = keys[rng.gen_range(0..keys.len())];
        let members = &bands[&k];
        let mut chosen: Vec<(usize, usize)> = members
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .map(|&l| (l, inst.ring.dim(l) as usize))
            .collect();
        if chosen.is_empty() {
            let l = members[rng.gen_range(0..members.len())];
            chosen.push((l, inst.ring.dim(l) as usize));
        }
        let a = DualElement::random(&chosen, &mut rng);
        let f = inst.fourier_transform(&a);
        let op = operator_norm(&inst.algebra, &f);
        let sob = inst.sobolev0_norm(&a);
        let ratio = op / (eval_poly(p, k as f64) * sob);
        out.push(RdSample {
            band: k,
            operator_norm: op,
            sobolev_norm: sob,
            ratio,
        });
    }
    let max_ratio = out.iter().map(|s| s.ratio).fold(0.0, f64::max);
    Ok(RdReport {
        samples: out,
        max_ratio,
        passed: max_ratio <= 1.0 + 1e-9,
    })
}
