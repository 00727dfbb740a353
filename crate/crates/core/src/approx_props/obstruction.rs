//! Over a finite group no sequence of probability measures can avoid the
//! identity and still converge to `δ_e`: every `μ` with `μ(e) = 0` sits at
//! distance exactly 2 from `δ_e`.

use super::measure::{tv_distance, FiniteMeasure};
use crate::groups::FiniteGroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub group_order: usize,
    pub grid_denominator: u64,
    /// Grid measures checked against `‖μ − δ_e‖ = 2(1 − μ(e))`.
    pub grid_checked: usize,
    /// How many of them had `μ(e) = 0`.
    pub avoiding_identity: usize,
    pub sampled: usize,
    pub identity_holds: bool,
    /// Smallest distance to `δ_e` among measures with `μ(e) = 0`.
    pub min_distance_avoiding: String,
}

impl ObstructionReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.min_distance_avoiding == "2"
    }
}

fn compositions(total: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut dyn FnMut(&[u64])) {
    if parts == 1 {
        prefix.push(total);
        out(prefix);
        prefix.pop();
        return;
    }
    for k in 0..=total {
        prefix.push(k);
        compositions(total - k, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Exhaustive over all measures with weights in `(1/m) Z`, plus `samples`
/// seeded random rational measures.
pub fn rel_t_obstruction(g: &FiniteGroup, m: u64, samples: usize, seed: u64) -> ObstructionReport {
    let n = g.order();
    let e = g.identity();
    let delta = FiniteMeasure::dirac(n, e);
    let two = BigRational::from_integer(BigInt::from(2));
    let mut checked = 0;
    let mut avoiding = 0;
    let mut holds = true;
    let mut min_avoid: Option<BigRational> = None;
    let mut check = |mu: &FiniteMeasure| {
        let d = tv_distance(mu, &delta);
        if d != &two * (BigRational::one() - &mu.weights[e]) {
            holds = false;
        }
        if mu.weights[e].is_zero() {
            avoiding += 1;
            if min_avoid.as_ref().is_none_or(|x| &d < x) {
                min_avoid = Some(d);
            }
        }
    };
    let den = BigInt::from(m);
    compositions(m, n, &mut Vec::with_capacity(n), &mut |parts| {
        let weights = parts
            .iter()
            .map(|&k| BigRational::new(BigInt::from(k), den.clone()))
            .collect();
        check(&FiniteMeasure { weights });
        checked += 1;
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let raw: Vec<u64> = (0..n)
            .map(|i| if i == e && s % 2 == 0 { 0 } else { rng.gen_range(0..1000) })
            .collect();
        let total: u64 = raw.iter().sum::<u64>().max(1);
        let weights = raw
            .iter()
            .map(|&k| BigRational::new(BigInt::from(k), BigInt::from(total)))
            .collect::<Vec<_>>();
        if raw.iter().all(|&k| k == 0) {
            continue;
        }
        check(&FiniteMeasure { weights });
    }
    ObstructionReport {
        group_order: n,
        grid_denominator: m,
        grid_checked: checked,
        avoiding_identity: avoiding,
        sampled: samples,
        identity_holds: holds,
        min_distance_avoiding: min_avoid.map_or_else(|| "none".into(), |d| d.to_string()),
    }
}
