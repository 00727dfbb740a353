//! Group builders: permutations, matrices mod m, cyclic, symmetric, products.

use super::{FiniteGroup, GroupSource};
use crate::config::Caps;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::hash::Hash;

/// Closure of `gens` under a multiplication, identity first. Returns the elements
/// and the flattened Cayley table.
fn closure<T: Clone + Eq + Hash>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    cap: usize,
) -> Result<(Vec<T>, Vec<u32>)> {
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut elems = vec![identity.clone()];
    index.insert(identity, 0);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = mul(&elems[i], g);
            if !index.contains_key(&y) {
                if elems.len() >= cap {
                    return Err(Error::ClosureTooLarge { cap });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            table.push(index[&mul(a, b)] as u32);
        }
    }
    Ok((elems, table))
}

/// Cycle notation with 1-based points, `()` for the identity.
pub fn perm_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses cycle notation such as `(1 2 3)(4 5)` or `(1,2)` into a permutation of
/// `0..degree`.
pub fn parse_cycles(s: &str, degree: usize) -> std::result::Result<Vec<usize>, String> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let t = s.trim();
    if t.is_empty() || t == "e" || t == "id" || t == "()" {
        return Ok(perm);
    }
    let mut rest = t;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| format!("expected '(' in {s:?}"))?;
        if !rest[..open].trim().is_empty() {
            return Err(format!("unexpected text before '(' in {s:?}"));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| format!("unclosed cycle in {s:?}"))?;
        let body = &rest[open + 1..close];
        let points: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty())
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| format!("bad point {w:?} in {s:?}"))
            })
            .collect::<std::result::Result<_, _>>()?;
        if points.iter().any(|&p| p == 0 || p > degree) {
            return Err(format!("point out of range 1..={degree} in {s:?}"));
        }
        let mut distinct = points.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != points.len() {
            return Err(format!("repeated point in cycle of {s:?}"));
        }
        // Cycles compose right to left, like the group product.
        let mut cyc: Vec<usize> = (0..degree).collect();
        for k in 0..points.len() {
            cyc[points[k] - 1] = points[(k + 1) % points.len()] - 1;
        }
        perm = compose(&perm, &cyc);
        rest = &rest[close + 1..];
        rest = rest.trim_start();
    }
    Ok(perm)
}

/// `(p q)(x) = p(q(x))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

/// Square matrix with entries reduced modulo a fixed modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub dim: usize,
    pub entries: Vec<u64>,
}

impl Matrix {
    pub fn new(rows: &[Vec<i64>], modulus: u64) -> std::result::Result<Self, String> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err("matrix is not square".into());
        }
        let m = modulus as i64;
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(m) as u64)
            .collect();
        Ok(Self { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self { dim, entries }
    }

    fn mul(&self, other: &Self, modulus: u64) -> Self {
        let d = self.dim;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut s = 0u64;
                for k in 0..d {
                    s = (s + self.entries[i * d + k] * other.entries[k * d + j]) % modulus;
                }
                entries[i * d + j] = s;
            }
        }
        Self { dim: d, entries }
    }

    fn det(&self, modulus: u64) -> u64 {
        // Laplace expansion; only used on small generators.
        fn rec(m: &[i128], d: usize, md: i128) -> i128 {
            if d == 1 {
                return m[0].rem_euclid(md);
            }
            let mut total = 0i128;
            for c in 0..d {
                let minor: Vec<i128> = (1..d)
                    .flat_map(|r| (0..d).filter(move |&k| k != c).map(move |k| (r, k)))
                    .map(|(r, k)| m[r * d + k])
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                total = (total + sign * m[c] * rec(&minor, d - 1, md)).rem_euclid(md);
            }
            total
        }
        let m: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        rec(&m, self.dim, modulus as i128) as u64
    }

    pub fn label(&self) -> String {
        let d = self.dim;
        let rows: Vec<String> = (0..d)
            .map(|i| {
                let r: Vec<String> = (0..d).map(|j| self.entries[i * d + j].to_string()).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl FiniteGroup {
    /// Permutation group on `0..degree` generated by `gens`.
    pub fn from_permutations(gens: &[Vec<usize>], degree: usize, caps: &Caps) -> Result<Self> {
        for g in gens {
            let mut sorted = g.clone();
            sorted.sort_unstable();
            if g.len() != degree || sorted != (0..degree).collect::<Vec<_>>() {
                return Err(Error::InvalidGroup(format!(
                    "generator {g:?} is not a permutation of degree {degree}"
                )));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let (elems, table) = closure(id, gens, |a, b| compose(a, b), caps.closure)?;
        let labels = elems.iter().map(|p| perm_label(p)).collect();
        Self::from_flat(elems.len(), table, Some(labels), GroupSource::Perm { degree })
    }

    /// Matrix group modulo `modulus` generated by invertible `gens`.
    pub fn from_matrices_mod(gens: &[Matrix], modulus: u64, caps: &Caps) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidGroup("modulus must be at least 2".into()));
        }
        let dim = gens.first().map_or(1, |g| g.dim);
        for g in gens {
            if g.dim != dim {
                return Err(Error::InvalidGroup("generators of different sizes".into()));
            }
            if num_integer::gcd(g.det(modulus), modulus) != 1 {
                return Err(Error::InvalidGroup(format!(
                    "generator {} is not invertible mod {modulus}",
                    g.label()
                )));
            }
        }
        let (elems, table) = closure(
            Matrix::identity(dim),
            gens,
            |a, b| a.mul(b, modulus),
            caps.closure,
        )?;
        let labels = elems.iter().map(|m| m.label()).collect();
        Self::from_flat(
            elems.len(),
            table,
            Some(labels),
            GroupSource::MatMod { dim, modulus },
        )
    }

    /// `SL_n(F_p)` generated by the elementary transvections.
    pub fn special_linear(n: usize, p: u64, caps: &Caps) -> Result<Self> {
        let mut gens = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut m = Matrix::identity(n);
                    m.entries[i * n + j] = 1;
                    gens.push(m);
                }
            }
        }
        if gens.is_empty() {
            return Ok(Self::trivial());
        }
        Self::from_matrices_mod(&gens, p, caps)
    }

    /// Relabels elements by a permutation: element `i` of `self` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut labels = vec![String::new(); n];
        for i in 0..n {
            labels[perm[i]] = self.label(i).to_string();
        }
        Self::from_law(n, Some(labels), |a, b| perm[self.mul(inv[a], inv[b])])
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Cyclic group of order `n` with elements `0..n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let n = n.max(1);
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_flat(n, table, Some(labels), GroupSource::Cayley)
            .expect("cyclic table is a group")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Self::from_permutations(&gens, n, &Caps::default()).expect("symmetric group")
    }

    /// Dihedral group of order `2n` as permutations of the `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(&[r, s], n, &Caps::default()).expect("dihedral group")
    }

    /// Direct product with elements indexed `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let nb = b.order();
        let n = a.order() * nb;
        let table = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                (a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)) as u32
            })
            .collect();
        let labels = (0..n)
            .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
            .collect();
        Self::from_flat(n, table, Some(labels), GroupSource::Cayley).expect("direct product")
    }

    /// `N ⋊ Q` with law `(n,q)(n',q') = (n·act_q(n'), qq')`, elements indexed `n * |Q| + q`.
    /// `action[q]` is the automorphism of `N` attached to `q`.
    pub fn semidirect_product(
        n_group: &FiniteGroup,
        q_group: &FiniteGroup,
        action: &[Vec<usize>],
    ) -> Result<FiniteGroup> {
        if action.len() != q_group.order() {
            return Err(Error::NotAnAction(format!(
                "{} automorphisms for a group of order {}",
                action.len(),
                q_group.order()
            )));
        }
        for (q, phi) in action.iter().enumerate() {
            if !n_group.is_automorphism(phi) {
                return Err(Error::NotAnAction(format!(
                    "image of {} is not an automorphism",
                    q_group.label(q)
                )));
            }
        }
        for q1 in q_group.elements() {
            for q2 in q_group.elements() {
                let q12 = q_group.mul(q1, q2);
                if n_group
                    .elements()
                    .any(|x| action[q12][x] != action[q1][action[q2][x]])
                {
                    return Err(Error::NotAnAction(format!(
                        "act({}·{}) differs from act({})∘act({})",
                        q_group.label(q1),
                        q_group.label(q2),
                        q_group.label(q1),
                        q_group.label(q2)
                    )));
                }
            }
        }
        let nq = q_group.order();
        let n = n_group.order() * nq;
        let labels = (0..n)
            .map(|x| format!("({},{})", n_group.label(x / nq), q_group.label(x % nq)))
            .collect();
        FiniteGroup::from_law(n, Some(labels), |x, y| {
            let (n1, q1) = (x / nq, x % nq);
            let (n2, q2) = (y / nq, y % nq);
            n_group.mul(n1, action[q1][n2]) * nq + q_group.mul(q1, q2)
        })
    }
}
