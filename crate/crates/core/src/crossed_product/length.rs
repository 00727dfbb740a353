//! Length functions on fusion-ring labels.

use super::ring::{CrossedFusionRing, FusionRing, RingAction};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

#[derive(Debug, Clone, PartialEq)]
pub struct LengthFunction {
    pub values: Vec<f64>,
}

impl LengthFunction {
    pub fn zero(len: usize) -> Self {
        Self { values: vec![0.0; len] }
    }

    /// Checks `l(1) = 0`, `l(x̄) = l(x)` and `l(x) ≤ l(y) + l(z)` whenever
    /// `x ⊂ y ⊗ z`, over the products present in the ring.
    pub fn validate(&self, ring: &FusionRing) -> Result<()> {
        let fail = |w: String| Err(Error::InvalidLength(w));
        if self.values.len() != ring.len() {
            return fail("length table has the wrong size".into());
        }
        if self.values[ring.unit] != 0.0 {
            return fail("length of the unit is not zero".into());
        }
        for x in 0..ring.len() {
            if self.values[x] < 0.0 {
                return fail(format!("negative length at {}", ring.labels[x]));
            }
            if self.values[ring.dual[x]] != self.values[x] {
                return fail(format!("length is not symmetric at {}", ring.labels[x]));
            }
        }
        for (&(y, z), out) in &ring.products {
            for &(x, _) in out {
                if self.values[x] > self.values[y] + self.values[z] + 1e-12 {
                    return fail(format!(
                        "triangle inequality fails: {} inside {} (x) {}",
                        ring.labels[x], ring.labels[y], ring.labels[z]
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn is_invariant(&self, action: &RingAction) -> bool {
        action
            .perms
            .iter()
            .all(|p| (0..self.values.len()).all(|x| self.values[p[x]] == self.values[x]))
    }
}

/// Word length on a finite group for the given generators.
pub fn word_length(g: &FiniteGroup, gens: &[usize]) -> Result<LengthFunction> {
    let lens = g.word_lengths(gens);
    let values = lens
        .into_iter()
        .enumerate()
        .map(|(x, l)| {
            l.map(|v| v as f64)
                .ok_or_else(|| Error::InvalidLength(format!("{} is not generated", g.label(x))))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(LengthFunction { values })
}

/// `l_α(x) = max_γ l(α_γ(x))`, provided every orbit has at most `bound` labels.
pub fn invariantize(l: &LengthFunction, action: &RingAction, labels: &[String], bound: usize) -> Result<LengthFunction> {
    let mut values = l.values.clone();
    for x in 0..values.len() {
        let mut orbit: Vec<usize> = action.perms.iter().map(|p| p[x]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        if orbit.len() > bound {
            return Err(Error::OrbitInfinite {
                label: labels[x].clone(),
                bound,
            });
        }
        values[x] = orbit.iter().map(|&y| l.values[y]).fold(0.0, f64::max);
    }
    Ok(LengthFunction { values })
}

/// `l_0(γ·x) = l_Γ(γ) + l(x)` on the crossed ring; `l` must be invariant.
pub fn length_l0(ring: &CrossedFusionRing, l_gamma: &LengthFunction, l: &LengthFunction) -> Result<LengthFunction> {
    if l_gamma.values.len() != ring.action.group.order() || l.values.len() != ring.base.len() {
        return Err(Error::InvalidLength("length tables do not match the ring".into()));
    }
    if !l.is_invariant(&ring.action) {
        return Err(Error::InvalidLength(
            "base length is not invariant under the action; invariantize it first".into(),
        ));
    }
    let values = (0..ring.len())
        .map(|i| {
            let (r, x) = ring.split(i);
            l_gamma.values[r] + l.values[x]
        })
        .collect();
    Ok(LengthFunction { values })
}
