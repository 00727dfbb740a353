//! Deformations of matched pairs by crossed homomorphisms, and the two standard
//! families that produce them.

use super::MatchedPair;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

pub(super) fn by_chi_g(mp: &MatchedPair, chi: &[usize], caps: &Caps, seed: u64) -> Result<MatchedPair> {
    let (gm, g) = (mp.gamma(), mp.g());
    if !mp.is_beta_trivial() {
        return Err(Error::DeformationPrecondition(
            "deforming by chi: G -> Gamma needs a trivial beta".into(),
        ));
    }
    if chi.len() != g.order() || chi.iter().any(|&c| c >= gm.order()) {
        return Err(Error::NotCrossedHom("chi must map every element of G into Gamma".into()));
    }
    if chi[g.identity()] != gm.identity() {
        return Err(Error::NotCrossedHom("chi(e) != e".into()));
    }
    for x in g.elements() {
        for y in g.elements() {
            let rhs = gm.mul(chi[x], chi[mp.alpha(gm.inv(chi[x]), y)]);
            if chi[g.mul(x, y)] != rhs {
                return Err(Error::NotCrossedHom(format!(
                    "chi(gh) != chi(g) chi(alpha_(chi(g)^-1)(h)) at g={}, h={}",
                    g.label(x),
                    g.label(y)
                )));
            }
        }
    }
    let new_g = FiniteGroup::from_law(g.order(), Some(g.labels().to_vec()), |x, y| {
        g.mul(x, mp.alpha(chi[x], y))
    })?;
    new_g.check_associative(caps, seed)?;
    let alpha = mp.alpha_table();
    let beta = g
        .elements()
        .map(|x| {
            gm.elements()
                .map(|r| gm.mul(gm.mul(gm.inv(chi[mp.alpha(r, x)]), r), chi[x]))
                .collect()
        })
        .collect();
    MatchedPair::from_tables(gm.clone(), new_g, alpha, beta)
}

pub(super) fn by_chi_gamma(
    mp: &MatchedPair,
    chi: &[usize],
    caps: &Caps,
    seed: u64,
) -> Result<MatchedPair> {
    let (gm, g) = (mp.gamma(), mp.g());
    if !mp.is_alpha_trivial() {
        return Err(Error::DeformationPrecondition(
            "deforming by chi: Gamma -> G needs a trivial alpha".into(),
        ));
    }
    if chi.len() != gm.order() || chi.iter().any(|&c| c >= g.order()) {
        return Err(Error::NotCrossedHom("chi must map every element of Gamma into G".into()));
    }
    if chi[gm.identity()] != g.identity() {
        return Err(Error::NotCrossedHom("chi(e) != e".into()));
    }
    for r in gm.elements() {
        for s in gm.elements() {
            let rhs = g.mul(chi[mp.beta(g.inv(chi[s]), r)], chi[s]);
            if chi[gm.mul(r, s)] != rhs {
                return Err(Error::NotCrossedHom(format!(
                    "chi(rs) != chi(beta_(chi(s)^-1)(r)) chi(s) at r={}, s={}",
                    gm.label(r),
                    gm.label(s)
                )));
            }
        }
    }
    let new_gamma = FiniteGroup::from_law(gm.order(), Some(gm.labels().to_vec()), |r, s| {
        gm.mul(mp.beta(chi[s], r), s)
    })?;
    new_gamma.check_associative(caps, seed)?;
    let alpha = gm
        .elements()
        .map(|r| {
            g.elements()
                .map(|x| g.mul(g.mul(chi[r], x), g.inv(chi[mp.beta(x, r)])))
                .collect()
        })
        .collect();
    MatchedPair::from_tables(new_gamma, g.clone(), alpha, mp.beta_table())
}

/// Given `Γ` acting on `G` by automorphisms and a subgroup `Λ ≤ Γ`, returns the
/// pair `(Γ, Λ × G)` with `α_γ(λ, g) = (λ, α_γ(g))` and trivial `β`, together with
/// the crossed homomorphism `χ(λ, g) = λ`. Elements of `Λ × G` are indexed
/// `λ * |G| + g`, with `λ` numbered in the order of `lambda_elems`.
pub fn lambda_instance(
    gamma: &FiniteGroup,
    g: &FiniteGroup,
    alpha: &[Vec<usize>],
    lambda_elems: &[usize],
) -> Result<(MatchedPair, Vec<usize>)> {
    let (lambda, emb) = gamma.restrict(lambda_elems)?;
    let gl = FiniteGroup::direct_product(&lambda, g);
    let ng = g.order();
    let alpha_l = gamma
        .elements()
        .map(|r| (0..gl.order()).map(|k| (k / ng) * ng + alpha[r][k % ng]).collect())
        .collect();
    let chi = (0..gl.order()).map(|k| emb[k / ng]).collect();
    let base = MatchedPair::from_action(gamma.clone(), gl, alpha_l)?;
    Ok((base, chi))
}

/// Given a homomorphism `q: Γ₀ → G` (as an index map), returns the pair
/// `(Γ₀ × G, G)` with trivial `α` and `β_g(γ, h) = (γ, g⁻¹hg)`, together with the
/// crossed homomorphism `χ(γ, h) = q(γ)`. Elements of `Γ₀ × G` are indexed
/// `γ * |G| + h`.
pub fn quotient_instance(
    gamma0: &FiniteGroup,
    g: &FiniteGroup,
    q: &[usize],
) -> Result<(MatchedPair, Vec<usize>)> {
    if q.len() != gamma0.order()
        || gamma0
            .elements()
            .any(|a| gamma0.elements().any(|b| q[gamma0.mul(a, b)] != g.mul(q[a], q[b])))
    {
        return Err(Error::ValidationError {
            invariant: "q is a homomorphism Gamma_0 -> G".into(),
        });
    }
    let gamma = FiniteGroup::direct_product(gamma0, g);
    let ng = g.order();
    let alpha = vec![g.elements().collect(); gamma.order()];
    let beta = g
        .elements()
        .map(|x| {
            (0..gamma.order())
                .map(|k| (k / ng) * ng + g.mul(g.mul(g.inv(x), k % ng), x))
                .collect()
        })
        .collect();
    let chi = (0..gamma.order()).map(|k| q[k / ng]).collect();
    let base = MatchedPair::from_tables(gamma, g.clone(), alpha, beta)?;
    Ok((base, chi))
}
