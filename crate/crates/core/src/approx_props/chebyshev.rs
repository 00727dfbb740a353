//! The states `ω_t(u^k_ij) = P_k(t)/P_k(N) δ_ij` on the free orthogonal
//! quantum group, evaluated exactly.

use crate::crossed_product::RingAction;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevState {
    pub n: i64,
    pub t: BigRational,
    /// `P_k(t)/P_k(N)` for `k = 0..=cutoff`.
    pub values: Vec<BigRational>,
}

/// `P_0..=P_cutoff` at a rational point.
pub fn chebyshev_values(x: &BigRational, cutoff: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::one(), x.clone()];
    while p.len() <= cutoff {
        let k = p.len();
        let next = x * &p[k - 1] - &p[k - 2];
        p.push(next);
    }
    p.truncate(cutoff + 1);
    p
}

pub fn chebyshev_state(n: i64, t: &BigRational, cutoff: usize) -> Result<ChebyshevState> {
    let big_n = BigRational::from_integer(BigInt::from(n));
    if n < 2 {
        return Err(Error::DomainError(format!("N must be at least 2, got {n}")));
    }
    if t <= &BigRational::zero() || t >= &big_n {
        return Err(Error::DomainError(format!("t = {t} is outside (0, {n})")));
    }
    let num = chebyshev_values(t, cutoff);
    let den = chebyshev_values(&big_n, cutoff);
    let values = num.iter().zip(&den).map(|(a, b)| a / b).collect();
    Ok(ChebyshevState { n, t: t.clone(), values })
}

impl ChebyshevState {
    /// `X P_k = P_{k+1} + P_{k-1}` rewritten for the ratios.
    pub fn recursion_holds(&self) -> bool {
        let den = chebyshev_values(&BigRational::from_integer(BigInt::from(self.n)), self.values.len().saturating_sub(1));
        let num: Vec<BigRational> = self.values.iter().zip(&den).map(|(v, d)| v * d).collect();
        self.values.first().is_some_and(|v| v.is_one())
            && num.windows(3).all(|w| &self.t * &w[1] == &w[2] + &w[0])
    }

    pub fn strictly_decreasing_from_one(&self) -> bool {
        self.values.windows(2).skip(1).all(|w| w[1] < w[0])
    }

    /// First `k` with `|value| < eps`, if any within the cutoff.
    pub fn c0_profile(&self, eps: &BigRational) -> Option<usize> {
        self.values.iter().position(|v| {
            let a = if v < &BigRational::zero() { -v.clone() } else { v.clone() };
            &a < eps
        })
    }

    /// The state is scalar on each block, so it is invariant under any
    /// action that fixes the block dimensions.
    pub fn invariant_under(&self, action: &RingAction) -> bool {
        action
            .perms
            .iter()
            .all(|p| (0..self.values.len().min(p.len())).all(|k| self.values[p[k]] == self.values[k]))
    }
}
