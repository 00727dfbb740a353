//! Matched pairs of finite groups: the actions `α: Γ ↷ G` (left) and `β: G ↶ Γ`
//! (right) read off from an exact factorization `H = ΓG`.

mod deform;
mod magic;

pub use deform::{lambda_instance, quotient_instance};
pub use magic::{MagicUnitary, RelationCheck};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

#[derive(Debug, Clone)]
pub struct MatchedPair {
    gamma: FiniteGroup,
    g: FiniteGroup,
    /// `alpha[r * |G| + x] = α_r(x)`
    alpha: Vec<usize>,
    /// `beta[x * |Γ| + r] = β_x(r)`
    beta: Vec<usize>,
}

impl MatchedPair {
    /// Builds a pair from explicit action tables (`alpha[r][x] = α_r(x)`,
    /// `beta[x][r] = β_x(r)`) and validates every relation.
    pub fn from_tables(
        gamma: FiniteGroup,
        g: FiniteGroup,
        alpha: Vec<Vec<usize>>,
        beta: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mp = Self::from_tables_unchecked(gamma, g, alpha, beta)?;
        mp.validate()?;
        Ok(mp)
    }

    /// Like [`MatchedPair::from_tables`] but only checks table shapes. Meant for
    /// negative controls that need a deliberately broken pair.
    pub fn from_tables_unchecked(
        gamma: FiniteGroup,
        g: FiniteGroup,
        alpha: Vec<Vec<usize>>,
        beta: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let (ng, nx) = (gamma.order(), g.order());
        let shape_ok = alpha.len() == ng
            && alpha.iter().all(|r| r.len() == nx && r.iter().all(|&v| v < nx))
            && beta.len() == nx
            && beta.iter().all(|r| r.len() == ng && r.iter().all(|&v| v < ng));
        if !shape_ok {
            return Err(Error::InvalidPair(format!(
                "action tables must be {ng}x{nx} (alpha) and {nx}x{ng} (beta) with entries in range"
            )));
        }
        Ok(Self {
            gamma,
            g,
            alpha: alpha.into_iter().flatten().collect(),
            beta: beta.into_iter().flatten().collect(),
        })
    }

    /// Pair with trivial `β`, i.e. `Γ` acting on `G` by automorphisms.
    pub fn from_action(gamma: FiniteGroup, g: FiniteGroup, alpha: Vec<Vec<usize>>) -> Result<Self> {
        let beta = vec![(0..gamma.order()).collect(); g.order()];
        Self::from_tables(gamma, g, alpha, beta)
    }

    /// `Γ ≤ G` acting on `G` by conjugation, `α_γ(g) = γgγ⁻¹`, with `β` trivial.
    /// `gamma_elems` lists the elements of the subgroup inside `g`.
    pub fn conjugation(g: &FiniteGroup, gamma_elems: &[usize]) -> Result<Self> {
        let (gamma, emb) = g.restrict(gamma_elems)?;
        let alpha = emb
            .iter()
            .map(|&r| g.elements().map(|x| g.conj(r, x)).collect())
            .collect();
        Self::from_action(gamma, g.clone(), alpha)
    }

    /// Reads the actions off an exact factorization: `Γ` and `G` are subgroups of
    /// `h` (given as element lists) with `Γ ∩ G = {e}` and `|Γ||G| = |H|`; then
    /// `γg = α_γ(g) β_g(γ)` defines both actions.
    pub fn derive_actions(h: &FiniteGroup, gamma_elems: &[usize], g_elems: &[usize]) -> Result<Self> {
        for (name, elems) in [("Gamma", gamma_elems), ("G", g_elems)] {
            if !h.is_subgroup(elems) {
                return Err(Error::NotMatched(format!("{name} is not a subgroup")));
            }
        }
        let common: Vec<usize> = gamma_elems.iter().filter(|x| g_elems.contains(x)).copied().collect();
        if common != [h.identity()] {
            return Err(Error::NotMatched(format!(
                "intersection has {} elements",
                common.len()
            )));
        }
        if gamma_elems.len() * g_elems.len() != h.order() {
            return Err(Error::NotMatched(format!(
                "|Gamma||G| = {} but |H| = {}",
                gamma_elems.len() * g_elems.len(),
                h.order()
            )));
        }
        let (gamma, _) = h.restrict(gamma_elems)?;
        let (g, _) = h.restrict(g_elems)?;
        // factor[h] = (i, j) with h = g_elems[i] * gamma_elems[j]
        let mut factor = vec![(usize::MAX, usize::MAX); h.order()];
        for (i, &x) in g_elems.iter().enumerate() {
            for (j, &r) in gamma_elems.iter().enumerate() {
                factor[h.mul(x, r)] = (i, j);
            }
        }
        let mut alpha = vec![vec![0; g_elems.len()]; gamma_elems.len()];
        let mut beta = vec![vec![0; gamma_elems.len()]; g_elems.len()];
        for (j, &r) in gamma_elems.iter().enumerate() {
            for (i, &x) in g_elems.iter().enumerate() {
                let (a, b) = factor[h.mul(r, x)];
                alpha[j][i] = a;
                beta[i][j] = b;
            }
        }
        Self::from_tables(gamma, g, alpha, beta)
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    /// `|Γ||G|`, the dimension of the associated algebra.
    pub fn dimension(&self) -> usize {
        self.gamma.order() * self.g.order()
    }

    #[inline]
    pub fn alpha(&self, r: usize, x: usize) -> usize {
        self.alpha[r * self.g.order() + x]
    }

    #[inline]
    pub fn beta(&self, x: usize, r: usize) -> usize {
        self.beta[x * self.gamma.order() + r]
    }

    pub fn alpha_table(&self) -> Vec<Vec<usize>> {
        self.alpha.chunks(self.g.order()).map(|c| c.to_vec()).collect()
    }

    pub fn beta_table(&self) -> Vec<Vec<usize>> {
        self.beta.chunks(self.gamma.order()).map(|c| c.to_vec()).collect()
    }

    pub fn is_alpha_trivial(&self) -> bool {
        self.gamma
            .elements()
            .all(|r| self.g.elements().all(|x| self.alpha(r, x) == x))
    }

    pub fn is_beta_trivial(&self) -> bool {
        self.g
            .elements()
            .all(|x| self.gamma.elements().all(|r| self.beta(x, r) == r))
    }

    /// Checks every defining relation, reporting the first violation with a witness.
    pub fn validate(&self) -> Result<()> {
        let (gm, g) = (&self.gamma, &self.g);
        let fail = |what: &str, witness: String| Err(Error::InvalidPair(format!("{what} fails at {witness}")));
        for r in gm.elements() {
            let mut seen = vec![false; g.order()];
            for x in g.elements() {
                if std::mem::replace(&mut seen[self.alpha(r, x)], true) {
                    return fail("alpha_r is a bijection", format!("r={}", gm.label(r)));
                }
            }
            if self.alpha(r, g.identity()) != g.identity() {
                return fail("alpha_r(e) = e", format!("r={}", gm.label(r)));
            }
        }
        for x in g.elements() {
            let mut seen = vec![false; gm.order()];
            for r in gm.elements() {
                if std::mem::replace(&mut seen[self.beta(x, r)], true) {
                    return fail("beta_g is a bijection", format!("g={}", g.label(x)));
                }
            }
            if self.beta(x, gm.identity()) != gm.identity() {
                return fail("beta_g(e) = e", format!("g={}", g.label(x)));
            }
        }
        for x in g.elements() {
            if self.alpha(gm.identity(), x) != x {
                return fail("alpha_e = id", format!("g={}", g.label(x)));
            }
        }
        for r in gm.elements() {
            if self.beta(g.identity(), r) != r {
                return fail("beta_e = id", format!("r={}", gm.label(r)));
            }
        }
        for r in gm.elements() {
            for s in gm.elements() {
                let rs = gm.mul(r, s);
                for x in g.elements() {
                    if self.alpha(rs, x) != self.alpha(r, self.alpha(s, x)) {
                        return fail(
                            "alpha is a left action",
                            format!("r={}, s={}, g={}", gm.label(r), gm.label(s), g.label(x)),
                        );
                    }
                    // β_x(rs) = β_{α_s(x)}(r) β_x(s)
                    let rhs = gm.mul(self.beta(self.alpha(s, x), r), self.beta(x, s));
                    if self.beta(x, rs) != rhs {
                        return fail(
                            "beta_g(rs) = beta_{alpha_s(g)}(r) beta_g(s)",
                            format!("r={}, s={}, g={}", gm.label(r), gm.label(s), g.label(x)),
                        );
                    }
                }
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                for r in gm.elements() {
                    if self.beta(xy, r) != self.beta(y, self.beta(x, r)) {
                        return fail(
                            "beta is a right action",
                            format!("g={}, h={}, r={}", g.label(x), g.label(y), gm.label(r)),
                        );
                    }
                    // α_r(xy) = α_r(x) α_{β_x(r)}(y)
                    let rhs = g.mul(self.alpha(r, x), self.alpha(self.beta(x, r), y));
                    if self.alpha(r, xy) != rhs {
                        return fail(
                            "alpha_r(gh) = alpha_r(g) alpha_{beta_g(r)}(h)",
                            format!("r={}, g={}, h={}", gm.label(r), g.label(x), g.label(y)),
                        );
                    }
                }
            }
        }
        Ok(())
    }

    /// The Zappa-Szép product `Γ ⋈ G` on pairs `(r, g)` (index `r * |G| + g`) with
    /// `(r,g)(s,h) = (β_h(r)s, g α_r(h))`. Inside it `(γ,e)(e,g) = (e,α_γ(g))(β_g(γ),e)`.
    pub fn zappa_szep(&self, caps: &Caps, seed: u64) -> Result<FiniteGroup> {
        let (gm, g) = (&self.gamma, &self.g);
        let ng = g.order();
        let labels = (0..self.dimension())
            .map(|k| format!("({},{})", gm.label(k / ng), g.label(k % ng)))
            .collect();
        let h = FiniteGroup::from_law(self.dimension(), Some(labels), |a, b| {
            let (r, x) = (a / ng, a % ng);
            let (s, y) = (b / ng, b % ng);
            gm.mul(self.beta(y, r), s) * ng + g.mul(x, self.alpha(r, y))
        })?;
        h.check_associative(caps, seed)?;
        Ok(h)
    }

    /// Elements of `Γ` and of `G` inside the Zappa-Szép product.
    pub fn zappa_szep_factors(&self) -> (Vec<usize>, Vec<usize>) {
        let ng = self.g.order();
        let gamma = self.gamma.elements().map(|r| r * ng + self.g.identity()).collect();
        let g = self.g.elements().map(|x| self.gamma.identity() * ng + x).collect();
        (gamma, g)
    }

    /// `β`-orbits `γ·G`, each sorted, ordered by their smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.gamma.order()];
        let mut out = Vec::new();
        for r in self.gamma.elements() {
            if seen[r] {
                continue;
            }
            let mut orbit: Vec<usize> = self.g.elements().map(|x| self.beta(x, r)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &s in &orbit {
                seen[s] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Index of the orbit containing each element of `Γ`.
    pub fn orbit_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.gamma.order()];
        for (k, o) in self.orbits().iter().enumerate() {
            for &r in o {
                idx[r] = k;
            }
        }
        idx
    }

    /// `G_r = {g : β_g(r) = r}`.
    pub fn stabilizer(&self, r: usize) -> Vec<usize> {
        self.g.elements().filter(|&x| self.beta(x, r) == r).collect()
    }

    /// `Γ^β = {γ : β_g(γ) = γ for all g}`.
    pub fn gamma_fixed(&self) -> Vec<usize> {
        self.gamma
            .elements()
            .filter(|&r| self.g.elements().all(|x| self.beta(x, r) == r))
            .collect()
    }

    /// `G^α = {g : α_γ(g) = g for all γ}`.
    pub fn g_fixed(&self) -> Vec<usize> {
        self.g
            .elements()
            .filter(|&x| self.gamma.elements().all(|r| self.alpha(r, x) == x))
            .collect()
    }

    /// `ker β = {g : β_g = id}`, a normal subgroup of `G`.
    pub fn beta_kernel(&self) -> Vec<usize> {
        self.g
            .elements()
            .filter(|&x| self.gamma.elements().all(|r| self.beta(x, r) == r))
            .collect()
    }

    /// `A_{r,s} = {g : β_g(r) = s}`.
    pub fn a_set(&self, r: usize, s: usize) -> Vec<usize> {
        self.g.elements().filter(|&x| self.beta(x, r) == s).collect()
    }

    /// `B_{r,s} = {g : β_{α_s(g)}(r) = r and β_g(s) = s}`.
    pub fn b_set(&self, r: usize, s: usize) -> Vec<usize> {
        self.g
            .elements()
            .filter(|&x| self.beta(self.alpha(s, x), r) == r && self.beta(x, s) == s)
            .collect()
    }

    pub fn magic_unitary(&self, orbit: &[usize]) -> MagicUnitary {
        MagicUnitary::new(self, orbit)
    }

    /// Deformation of a pair with trivial `β` by `χ: G → Γ` with
    /// `χ(gh) = χ(g) χ(α_{χ(g)⁻¹}(h))`. The new law on `G` is `g*h = g α_{χ(g)}(h)`
    /// and the new right action is `β_g(γ) = χ(α_γ(g))⁻¹ γ χ(g)`.
    pub fn deform_by_chi_g(&self, chi: &[usize], caps: &Caps, seed: u64) -> Result<Self> {
        deform::by_chi_g(self, chi, caps, seed)
    }

    /// Deformation of a pair with trivial `α` by `χ: Γ → G` with
    /// `χ(rs) = χ(β_{χ(s)⁻¹}(r)) χ(s)`. The new law on `Γ` is `r*s = β_{χ(s)}(r) s`
    /// and the new left action is `α_γ(g) = χ(γ) g χ(β_g(γ))⁻¹`.
    pub fn deform_by_chi_gamma(&self, chi: &[usize], caps: &Caps, seed: u64) -> Result<Self> {
        deform::by_chi_gamma(self, chi, caps, seed)
    }
}

#[cfg(test)]
mod tests;
