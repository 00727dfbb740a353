//! Probability measures on finite groups with exact rational weights.

use crate::crossed_product::{DualElement, FourierContext};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{hermitian_eigen, CMat};
use crate::matched_pair::MatchedPair;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMeasure {
    pub weights: Vec<BigRational>,
}

impl FiniteMeasure {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidMeasure(format!("negative weight {w}")));
        }
        let total: BigRational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidMeasure(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { weights })
    }

    pub fn dirac(n: usize, g: usize) -> Self {
        let mut weights = vec![BigRational::zero(); n];
        weights[g] = BigRational::one();
        Self { weights }
    }

    pub fn uniform(n: usize) -> Self {
        let w = BigRational::new(BigInt::one(), BigInt::from(n));
        Self { weights: vec![w; n] }
    }

    /// Parses weights such as `"7/10"` or `"0.3"`.
    pub fn from_strs(weights: &[&str]) -> Result<Self> {
        let parsed = weights
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| Error::InvalidMeasure(format!("cannot parse weight {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parsed)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, g: usize) -> &BigRational {
        &self.weights[g]
    }
}

/// Exact rational from `"p/q"`, an integer, or a finite decimal.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        return (!q.is_zero()).then(|| BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let int_part: BigInt = if int.is_empty() || int == "-" { BigInt::zero() } else { int.parse().ok()? };
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let den = BigInt::from(10).pow(frac.len() as u32);
        let num: BigInt = frac.parse().ok()?;
        let f = BigRational::new(num, den);
        let i = BigRational::from_integer(int_part);
        return Some(if neg { i - f } else { i + f });
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// `(α_γ μ)(α_γ(g)) = μ(g)`.
pub fn pushforward(mu: &FiniteMeasure, gamma: usize, mp: &MatchedPair) -> FiniteMeasure {
    let mut weights = vec![BigRational::zero(); mu.len()];
    for g in mp.g().elements() {
        weights[mp.alpha(gamma, g)] = mu.weights[g].clone();
    }
    FiniteMeasure { weights }
}

/// `Σ_g |μ(g) − ν(g)|`, the norm of `μ − ν` as a functional.
pub fn tv_distance(mu: &FiniteMeasure, nu: &FiniteMeasure) -> BigRational {
    mu.weights
        .iter()
        .zip(&nu.weights)
        .map(|(a, b)| (a - b).abs())
        .sum()
}

/// `(μ * ν)(g) = Σ_{ab = g} μ(a) ν(b)`.
pub fn convolution(g: &FiniteGroup, mu: &FiniteMeasure, nu: &FiniteMeasure) -> FiniteMeasure {
    let mut weights = vec![BigRational::zero(); g.order()];
    for a in g.elements() {
        if mu.weights[a].is_zero() {
            continue;
        }
        for b in g.elements() {
            weights[g.mul(a, b)] += &mu.weights[a] * &nu.weights[b];
        }
    }
    FiniteMeasure { weights }
}

/// `Σ_γ f(γ) α_γ(μ)` for a probability vector `f` on `Γ`.
pub fn smooth(mu: &FiniteMeasure, f: &FiniteMeasure, mp: &MatchedPair) -> FiniteMeasure {
    let mut weights = vec![BigRational::zero(); mu.len()];
    for gamma in mp.gamma().elements() {
        if f.weights[gamma].is_zero() {
            continue;
        }
        let pushed = pushforward(mu, gamma, mp);
        for (w, p) in weights.iter_mut().zip(&pushed.weights) {
            *w += &f.weights[gamma] * p;
        }
    }
    FiniteMeasure { weights }
}

/// `μ̂_x = Σ_g μ(g) U^x(g)` in every block.
pub fn measure_fourier(ctx: &FourierContext, mu: &FiniteMeasure) -> DualElement {
    let blocks = (0..ctx.irreps.len())
        .map(|x| {
            let d = ctx.dim(x);
            let mut m = CMat::zeros(d, d);
            for g in ctx.group.elements() {
                let w = mu.weights[g].to_f64().unwrap_or(f64::NAN);
                if w != 0.0 {
                    m += &ctx.irreps[x].matrices[g] * Complex64::new(w, 0.0);
                }
            }
            (x, m)
        })
        .collect();
    DualElement { blocks }
}

/// Operator norm of each block, in label order.
pub fn block_norms(a: &DualElement) -> Vec<(usize, f64)> {
    a.blocks
        .iter()
        .map(|(&x, m)| {
            let (vals, _) = hermitian_eigen(&(m.adjoint() * m));
            (x, vals.last().copied().unwrap_or(0.0).max(0.0).sqrt())
        })
        .collect()
}
