//! Sparse elements of an algebra and of its tensor powers.

use num_complex::Complex64;
use std::collections::BTreeMap;

const DROP: f64 = 1e-14;

/// Sparse vector over a basis indexed by `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sparse<K: Ord + Copy> {
    pub coeffs: BTreeMap<K, Complex64>,
}

/// Element of the algebra, keyed by basis index `γ * |G| + g` for `u_γ δ_g`.
pub type Element = Sparse<usize>;
/// Element of the algebraic tensor square.
pub type Tensor2 = Sparse<(usize, usize)>;
/// Element of the algebraic tensor cube.
pub type Tensor3 = Sparse<(usize, usize, usize)>;

impl<K: Ord + Copy> Default for Sparse<K> {
    fn default() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Copy> Sparse<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        let mut s = Self::zero();
        s.coeffs.insert(k, Complex64::new(1.0, 0.0));
        s
    }

    pub fn add_term(&mut self, k: K, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(Complex64::new(0.0, 0.0));
        *e += c;
        if e.norm() < DROP {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &c) in &other.coeffs {
            out.add_term(k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = Self::zero();
        for (&k, &v) in &self.coeffs {
            out.add_term(k, v * c);
        }
        out
    }

    pub fn coeff(&self, k: K) -> Complex64 {
        self.coeffs.get(&k).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.values().fold(0.0, |m, c| m.max(c.norm()))
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn support(&self) -> impl Iterator<Item = (&K, &Complex64)> {
        self.coeffs.iter()
    }
}

impl<K: Ord + Copy> std::iter::Sum for Sparse<K> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc.add(&x))
    }
}
