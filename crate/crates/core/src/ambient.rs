//! Signed ambient vectors of pseudo-Euclidean 3- and 4-space.
//!
//! Every embedded model space in this crate lives in `R^n` or `R^n_nu` with
//! n in {3, 4}. `AmbientVector` carries its components together with a
//! `Signature` so the signed scalar product is total and checked.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{GeomError, Result};

/// Metric signature (p, q): the first `plus` slots enter the scalar product
/// with `+`, the trailing `minus` slots with `-`. `plus + minus` is 3 or 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub plus: u8,
    pub minus: u8,
}

impl Signature {
    /// Euclidean R^3.
    pub const EUCLIDEAN_3: Signature = Signature { plus: 3, minus: 0 };
    /// Euclidean R^4.
    pub const EUCLIDEAN_4: Signature = Signature { plus: 4, minus: 0 };
    /// Minkowski R^3_1, ordered (+, +, -).
    pub const LORENTZ_3: Signature = Signature { plus: 2, minus: 1 };
    /// Pseudo-Euclidean R^4_2, ordered (+, +, -, -).
    pub const ULTRA_4: Signature = Signature { plus: 2, minus: 2 };

    /// Total dimension.
    pub fn dim(&self) -> usize {
        (self.plus + self.minus) as usize
    }

    /// Sign of slot `i`: +1.0 or -1.0.
    pub fn sign(&self, i: usize) -> f64 {
        if i < self.plus as usize {
            1.0
        } else {
            -1.0
        }
    }
}

/// A vector of R^3, R^4, R^3_1 or R^4_2. Unused trailing components are zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmbientVector {
    components: [f64; 4],
    signature: Signature,
}

impl AmbientVector {
    pub fn new3(signature: Signature, x: f64, y: f64, z: f64) -> Self {
        debug_assert_eq!(signature.dim(), 3);
        AmbientVector { components: [x, y, z, 0.0], signature }
    }

    pub fn new4(signature: Signature, x: f64, y: f64, z: f64, w: f64) -> Self {
        debug_assert_eq!(signature.dim(), 4);
        AmbientVector { components: [x, y, z, w], signature }
    }

    pub fn zero(signature: Signature) -> Self {
        AmbientVector { components: [0.0; 4], signature }
    }

    pub fn from_slice(signature: Signature, s: &[f64]) -> Self {
        debug_assert_eq!(signature.dim(), s.len());
        let mut components = [0.0; 4];
        components[..s.len()].copy_from_slice(s);
        AmbientVector { components, signature }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn dim(&self) -> usize {
        self.signature.dim()
    }

    /// Active components as a slice of length 3 or 4.
    pub fn components(&self) -> &[f64] {
        &self.components[..self.dim()]
    }

    /// Component `i` (0-based).
    pub fn get(&self, i: usize) -> f64 {
        self.components[i]
    }

    /// Signed scalar product `sum_+ u^i v^i - sum_- u^j v^j`.
    ///
    /// Errors with [`GeomError::SignatureMismatch`] unless both vectors share
    /// a signature.
    pub fn dot(&self, other: &AmbientVector) -> Result<f64> {
        if self.signature != other.signature {
            return Err(GeomError::SignatureMismatch);
        }
        let mut acc = 0.0;
        for i in 0..self.dim() {
            acc += self.signature.sign(i) * self.components[i] * other.components[i];
        }
        Ok(acc)
    }

    /// Signed squared norm `<v, v>` (may be negative in indefinite signatures).
    pub fn norm_sq(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim() {
            acc += self.signature.sign(i) * self.components[i] * self.components[i];
        }
        acc
    }

    /// Euclidean norm of the raw component tuple, ignoring the signature.
    pub fn euclidean_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim() {
            acc += self.components[i] * self.components[i];
        }
        acc.sqrt()
    }

    pub fn add(&self, other: &AmbientVector) -> AmbientVector {
        debug_assert_eq!(self.signature, other.signature);
        let mut components = [0.0; 4];
        for i in 0..self.dim() {
            components[i] = self.components[i] + other.components[i];
        }
        AmbientVector { components, signature: self.signature }
    }

    pub fn sub(&self, other: &AmbientVector) -> AmbientVector {
        debug_assert_eq!(self.signature, other.signature);
        let mut components = [0.0; 4];
        for i in 0..self.dim() {
            components[i] = self.components[i] - other.components[i];
        }
        AmbientVector { components, signature: self.signature }
    }

    pub fn scale(&self, s: f64) -> AmbientVector {
        let mut components = [0.0; 4];
        for i in 0..self.dim() {
            components[i] = s * self.components[i];
        }
        AmbientVector { components, signature: self.signature }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, s: f64, other: &AmbientVector) -> AmbientVector {
        debug_assert_eq!(self.signature, other.signature);
        let mut components = [0.0; 4];
        for i in 0..self.dim() {
            components[i] = self.components[i] + s * other.components[i];
        }
        AmbientVector { components, signature: self.signature }
    }

    /// Component of `self` orthogonal (w.r.t. the signed product) to the
    /// normal direction `n`, assuming `<n, n> != 0`.
    pub fn reject_along(&self, n: &AmbientVector) -> AmbientVector {
        let nn = n.norm_sq();
        let sn = self.dot(n).expect("signature checked by caller");
        self.add_scaled(-sn / nn, n)
    }

    /// Maximum absolute componentwise difference.
    pub fn max_abs_diff(&self, other: &AmbientVector) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.dim() {
            m = m.max((self.components[i] - other.components[i]).abs());
        }
        m
    }
}
