//! The magic unitary of indicator functions attached to a `β`-orbit.

use super::MatchedPair;
use crate::groups::FiniteGroup;
use serde::Serialize;

/// `entries[i][j]` is the support of `1_{A_{r_i, r_j}}`, `A_{r,s} = {g : β_g(r) = s}`,
/// for the orbit `r_0, r_1, ...`.
#[derive(Debug, Clone, Serialize)]
pub struct MagicUnitary {
    pub orbit: Vec<usize>,
    pub entries: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

impl MagicUnitary {
    pub(super) fn new(mp: &MatchedPair, orbit: &[usize]) -> Self {
        let entries = orbit
            .iter()
            .map(|&r| orbit.iter().map(|&s| mp.a_set(r, s)).collect())
            .collect();
        Self {
            orbit: orbit.to_vec(),
            entries,
        }
    }

    fn indicator(&self, i: usize, j: usize, n: usize) -> Vec<u8> {
        let mut v = vec![0u8; n];
        for &x in &self.entries[i][j] {
            v[x] = 1;
        }
        v
    }

    /// Checks, exactly on indicator functions:
    /// column orthogonality, row orthogonality, row sums, column sums and
    /// `Δ(1_{A_{s,r}}) = Σ_t 1_{A_{s,t}} ⊗ 1_{A_{t,r}}`.
    pub fn check_relations(&self, g: &FiniteGroup) -> Vec<RelationCheck> {
        let n = g.order();
        let m = self.orbit.len();
        let ind: Vec<Vec<Vec<u8>>> = (0..m)
            .map(|i| (0..m).map(|j| self.indicator(i, j, n)).collect())
            .collect();
        let mut out = Vec::new();
        let mut record = |relation: &'static str, witness: Option<String>| {
            out.push(RelationCheck {
                relation,
                holds: witness.is_none(),
                witness,
            })
        };
        // 1_{A_{s,r}} 1_{A_{t,r}} = δ_{t,s} 1_{A_{s,r}}
        let mut w = None;
        'col: for r in 0..m {
            for s in 0..m {
                for t in 0..m {
                    for x in 0..n {
                        let prod = ind[s][r][x] * ind[t][r][x];
                        let rhs = if s == t { ind[s][r][x] } else { 0 };
                        if prod != rhs {
                            w = Some(format!("s={s}, t={t}, r={r}, g={}", g.label(x)));
                            break 'col;
                        }
                    }
                }
            }
        }
        record("column orthogonality", w);
        // 1_{A_{s,r}} 1_{A_{s,t}} = δ_{r,t} 1_{A_{s,r}}
        let mut w = None;
        'row: for s in 0..m {
            for r in 0..m {
                for t in 0..m {
                    for x in 0..n {
                        let prod = ind[s][r][x] * ind[s][t][x];
                        let rhs = if r == t { ind[s][r][x] } else { 0 };
                        if prod != rhs {
                            w = Some(format!("s={s}, r={r}, t={t}, g={}", g.label(x)));
                            break 'row;
                        }
                    }
                }
            }
        }
        record("row orthogonality", w);
        let mut w = None;
        for s in 0..m {
            for x in 0..n {
                let total: u32 = (0..m).map(|r| ind[s][r][x] as u32).sum();
                if total != 1 && w.is_none() {
                    w = Some(format!("row {s}, g={}", g.label(x)));
                }
            }
        }
        record("row sums equal 1", w);
        let mut w = None;
        for r in 0..m {
            for x in 0..n {
                let total: u32 = (0..m).map(|s| ind[s][r][x] as u32).sum();
                if total != 1 && w.is_none() {
                    w = Some(format!("column {r}, g={}", g.label(x)));
                }
            }
        }
        record("column sums equal 1", w);
        let mut w = None;
        'co: for s in 0..m {
            for r in 0..m {
                for x in 0..n {
                    for y in 0..n {
                        let lhs = ind[s][r][g.mul(x, y)] as u32;
                        let rhs: u32 = (0..m).map(|t| (ind[s][t][x] * ind[t][r][y]) as u32).sum();
                        if lhs != rhs {
                            w = Some(format!(
                                "s={s}, r={r}, (g,h)=({},{})",
                                g.label(x),
                                g.label(y)
                            ));
                            break 'co;
                        }
                    }
                }
            }
        }
        record("coproduct", w);
        out
    }
}
