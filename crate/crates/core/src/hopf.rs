//! The group-theoretic bridge between 3-dimensional model spaces and unit
//! tangent bundles of surfaces.
//!
//! The unit 3-sphere is carried to `SU(2)` and unit anti-de Sitter 3-space to
//! `SU(1,1)`; the adjoint representation covers `SO(3)` resp. the restricted
//! Lorentz group `SO+(1,2)` two-to-one; and reading the rotation columns as a
//! (base point, fibre vector) pair lands in the unit tangent bundle of the
//! 2-sphere resp. the hyperbolic plane. Composed with the homothety from
//! curvature `c/4` onto the unit model, this is the covering map whose
//! projection to the base is the (hyperbolic) Hopf map.
//!
//! Both the rotation matrix and the differential of the covering map come in
//! two arithmetic routes: explicit polynomial entries in the complex
//! coordinates, and conjugation in the Lie algebra. The routes are kept
//! deliberately separate so tests can cross-check one against the other.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use num_complex::Complex64;

use crate::ambient::{AmbientVector, Signature};
use crate::bundle::{BundlePoint, BundleTangent, CurveDerivative};
use crate::error::{GeomError, Result};
use crate::spaces::ModelSpace;

/// Tolerance on the defining norm constraint of a group element.
const GROUP_TOL: f64 = 1e-9;

/// Which unitary group a [`GroupElement`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Su2,
    Su11,
}

/// 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2c(pub [[Complex64; 2]; 2]);

impl Mat2c {
    pub fn mul(&self, other: &Mat2c) -> Mat2c {
        let a = &self.0;
        let b = &other.0;
        Mat2c([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }

    pub fn scale(&self, s: Complex64) -> Mat2c {
        let a = &self.0;
        Mat2c([[s * a[0][0], s * a[0][1]], [s * a[1][0], s * a[1][1]]])
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn sub(&self, other: &Mat2c) -> Mat2c {
        let a = &self.0;
        let b = &other.0;
        Mat2c([[a[0][0] - b[0][0], a[0][1] - b[0][1]], [a[1][0] - b[1][0], a[1][1] - b[1][1]]])
    }
}

/// The fixed basis `(e1, e2, e3)` of the Lie algebra, together with its
/// scalar product. Under `<X, Y> = -(1/2) Re Tr(XY)` (su(2)) resp.
/// `+(1/2) Re Tr(XY)` (su(1,1)) the basis Gram matrix is `diag(1,1,1)` resp.
/// `diag(1,1,-1)`, matching the ambient coordinate conventions: `e1 <->
/// (1,0,0)`, `e2 <-> (0,1,0)`, `e3 <-> (0,0,1)`.
#[derive(Debug, Clone, Copy)]
pub struct LieBasis {
    pub kind: GroupKind,
}

const I: Complex64 = Complex64::new(0.0, 1.0);

impl LieBasis {
    pub fn new(kind: GroupKind) -> Self {
        LieBasis { kind }
    }

    pub fn e(&self, i: usize) -> Mat2c {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        match (self.kind, i) {
            (GroupKind::Su2, 0) => Mat2c([[z, I], [I, z]]),
            (GroupKind::Su2, 1) => Mat2c([[z, -one], [one, z]]),
            (GroupKind::Su11, 0) => Mat2c([[z, -I], [I, z]]),
            (GroupKind::Su11, 1) => Mat2c([[z, one], [one, z]]),
            (_, 2) => Mat2c([[I, z], [z, -I]]),
            _ => panic!("basis index out of range"),
        }
    }

    /// The invariant scalar product on the algebra.
    pub fn scalar(&self, x: &Mat2c, y: &Mat2c) -> f64 {
        let tr = x.mul(y).trace().re;
        match self.kind {
            GroupKind::Su2 => -0.5 * tr,
            GroupKind::Su11 => 0.5 * tr,
        }
    }

    /// Coordinates of an algebra element in the `(e1, e2, e3)` basis, read
    /// off the matrix entries (`x^3 = Im X_11`, `x^1 = Im X_21`,
    /// `x^2 = Re X_21` in both algebras).
    pub fn coordinates(&self, x: &Mat2c) -> [f64; 3] {
        [x.0[1][0].im, x.0[1][0].re, x.0[0][0].im]
    }
}

/// An element of `SU(2)` or `SU(1,1)`, stored by the complex pair `(a, b)` of
/// its first column; the full matrix is materialized on demand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub a: Complex64,
    pub b: Complex64,
    pub kind: GroupKind,
}

impl GroupElement {
    /// Validates the defining norm constraint `|a|^2 + |b|^2 = 1` (SU(2))
    /// resp. `|a|^2 - |b|^2 = 1` (SU(1,1)).
    pub fn new(a: Complex64, b: Complex64, kind: GroupKind) -> Result<Self> {
        let g = GroupElement { a, b, kind };
        if g.norm_residual() > GROUP_TOL {
            return Err(GeomError::Domain("group element violates its norm constraint"));
        }
        Ok(g)
    }

    pub fn identity(kind: GroupKind) -> Self {
        GroupElement { a: Complex64::new(1.0, 0.0), b: Complex64::new(0.0, 0.0), kind }
    }

    /// `| |a|^2 +/- |b|^2 - 1 |`.
    pub fn norm_residual(&self) -> f64 {
        let (na, nb) = (self.a.norm_sqr(), self.b.norm_sqr());
        match self.kind {
            GroupKind::Su2 => (na + nb - 1.0).abs(),
            GroupKind::Su11 => (na - nb - 1.0).abs(),
        }
    }

    /// The identification of the unit model space with the group: a point of
    /// the unit 3-sphere maps to the matrix with first column
    /// `(z1, z2) = (x1 + i x2, x3 + i x4)`, a point of unit anti-de Sitter
    /// space to `sqrt(-1) * ((conj z2, -z1), (conj z1, -z2))`.
    pub fn from_model_point(x: &AmbientVector) -> Result<Self> {
        let z1 = Complex64::new(x.get(0), x.get(1));
        let z2 = Complex64::new(x.get(2), x.get(3));
        match x.signature() {
            Signature::EUCLIDEAN_4 => {
                if (x.norm_sq() - 1.0).abs() > GROUP_TOL {
                    return Err(GeomError::OffManifold);
                }
                Ok(GroupElement { a: z1, b: z2, kind: GroupKind::Su2 })
            }
            Signature::ULTRA_4 => {
                if (x.norm_sq() + 1.0).abs() > GROUP_TOL {
                    return Err(GeomError::OffManifold);
                }
                Ok(GroupElement { a: I * z2.conj(), b: I * z1.conj(), kind: GroupKind::Su11 })
            }
            _ => Err(GeomError::WrongSpaceKind),
        }
    }

    /// The complex pair `(z1, z2)` of the model-space point this element
    /// represents (inverse of [`GroupElement::from_model_point`]).
    pub fn model_coordinates(&self) -> (Complex64, Complex64) {
        match self.kind {
            GroupKind::Su2 => (self.a, self.b),
            GroupKind::Su11 => (I * self.b.conj(), I * self.a.conj()),
        }
    }

    pub fn matrix(&self) -> Mat2c {
        match self.kind {
            GroupKind::Su2 => Mat2c([[self.a, -self.b.conj()], [self.b, self.a.conj()]]),
            GroupKind::Su11 => Mat2c([[self.a, self.b.conj()], [self.b, self.a.conj()]]),
        }
    }

    /// Inverse via the adjugate; both groups have determinant one.
    pub fn inverse_matrix(&self) -> Mat2c {
        match self.kind {
            GroupKind::Su2 => Mat2c([[self.a.conj(), self.b.conj()], [-self.b, self.a]]),
            GroupKind::Su11 => Mat2c([[self.a.conj(), -self.b.conj()], [-self.b, self.a]]),
        }
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.kind != other.kind {
            return Err(GeomError::Domain("cannot multiply elements of different groups"));
        }
        let m = self.matrix().mul(&other.matrix());
        Ok(GroupElement { a: m.0[0][0], b: m.0[1][0], kind: self.kind })
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement { a: -self.a, b: -self.b, kind: self.kind }
    }

    /// Conjugation `A e_i A^{-1}` expressed in ambient coordinates: the
    /// adjoint-representation route to the rotation columns.
    pub fn adjoint_column(&self, i: usize) -> [f64; 3] {
        let basis = LieBasis::new(self.kind);
        let conj = self.matrix().mul(&basis.e(i)).mul(&self.inverse_matrix());
        basis.coordinates(&conj)
    }

    /// The rotation matrix of this element under the covering homomorphism,
    /// by the explicit polynomial entries (see
    /// [`RotationMatrix::from_group`]).
    pub fn rotation(&self) -> RotationMatrix {
        RotationMatrix::from_group(self)
    }
}

/// Which rotation group a matrix belongs to, with its preserved bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationKind {
    So3,
    So12Plus,
}

impl RotationKind {
    /// Diagonal of the preserved form `J` in the basis order `(e1, e2, e3)`.
    pub fn j_diag(&self) -> [f64; 3] {
        match self {
            RotationKind::So3 => [1.0, 1.0, 1.0],
            RotationKind::So12Plus => [1.0, 1.0, -1.0],
        }
    }
}

/// A matrix of `SO(3)` or `SO+(1,2)`, columns being the images of the Lie
/// basis under the adjoint action.
#[derive(Debug, Clone, Copy)]
pub struct RotationMatrix {
    pub entries: [[f64; 3]; 3],
    pub kind: RotationKind,
}

impl RotationMatrix {
    /// Explicit entries of the covering homomorphism in the complex
    /// coordinates `(z1, z2)` of the underlying model-space point.
    pub fn from_group(g: &GroupElement) -> RotationMatrix {
        let (z1, z2) = g.model_coordinates();
        let z1s = z1 * z1;
        let z2s = z2 * z2;
        let z12 = z1 * z2;
        let z1z2c = z1 * z2.conj();
        match g.kind {
            GroupKind::Su2 => {
                let c1 = z1s - z2s.conj();
                let c2 = z1s.conj() + z2s;
                RotationMatrix {
                    entries: [
                        [c1.re, c2.im, 2.0 * z1z2c.re],
                        [c1.im, c2.re, 2.0 * z1z2c.im],
                        [-2.0 * z12.re, 2.0 * z12.im, z1.norm_sqr() - z2.norm_sqr()],
                    ],
                    kind: RotationKind::So3,
                }
            }
            GroupKind::Su11 => {
                let p = z1s + z2s.conj();
                let q = z1s - z2s.conj();
                RotationMatrix {
                    entries: [
                        [-p.re, -q.im, 2.0 * z1z2c.re],
                        [-p.im, q.re, 2.0 * z1z2c.im],
                        [-2.0 * z12.re, -2.0 * z12.im, z1.norm_sqr() + z2.norm_sqr()],
                    ],
                    kind: RotationKind::So12Plus,
                }
            }
        }
    }

    pub fn identity(kind: RotationKind) -> RotationMatrix {
        RotationMatrix {
            entries: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            kind,
        }
    }

    pub fn column(&self, j: usize) -> [f64; 3] {
        [self.entries[0][j], self.entries[1][j], self.entries[2][j]]
    }

    pub fn mul(&self, other: &RotationMatrix) -> RotationMatrix {
        let mut entries = [[0.0; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    *v += self.entries[i][k] * other.entries[k][j];
                }
            }
        }
        RotationMatrix { entries, kind: self.kind }
    }

    pub fn max_abs_diff(&self, other: &RotationMatrix) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                m = m.max((self.entries[i][j] - other.entries[i][j]).abs());
            }
        }
        m
    }

    /// Residual of `M^T J M = J`.
    pub fn j_orthogonality_residual(&self) -> f64 {
        let j = self.kind.j_diag();
        let mut worst: f64 = 0.0;
        for a in 0..3 {
            for b in 0..3 {
                let mut acc = 0.0;
                for k in 0..3 {
                    acc += self.entries[k][a] * j[k] * self.entries[k][b];
                }
                let target = if a == b { j[a] } else { 0.0 };
                worst = worst.max((acc - target).abs());
            }
        }
        worst
    }

    pub fn det(&self) -> f64 {
        let m = &self.entries;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Time orientation of `SO+(1,2)`: the `(3,3)` entry stays positive.
    pub fn preserves_time_orientation(&self) -> bool {
        match self.kind {
            RotationKind::So3 => true,
            RotationKind::So12Plus => self.entries[2][2] > 0.0,
        }
    }

    /// Interpret the columns as a unit-tangent-bundle point: base point
    /// `c3 / sqrt(c)`, fibre vector `c1`; the target surface is the 2-sphere
    /// (SO(3)) or the hyperbolic plane (SO+(1,2)) of curvature scale `c`.
    pub fn to_unit_tangent(&self, c: f64) -> Result<BundlePoint> {
        let (space, sig) = match self.kind {
            RotationKind::So3 => (ModelSpace::sphere2(c)?, Signature::EUCLIDEAN_3),
            RotationKind::So12Plus => (ModelSpace::hyperbolic_plane(c)?, Signature::LORENTZ_3),
        };
        let c3 = self.column(2);
        let c1 = self.column(0);
        let x = AmbientVector::from_slice(sig, &c3).scale(1.0 / c.sqrt());
        let e = AmbientVector::from_slice(sig, &c1);
        BundlePoint::unit(space, x, e)
    }
}

/// The source model space of the covering map for a given ambient signature:
/// the 3-sphere or anti-de Sitter space of curvature scale `c/4`.
pub fn covering_source(signature: Signature, c: f64) -> Result<ModelSpace> {
    match signature {
        Signature::EUCLIDEAN_4 => ModelSpace::sphere3(c / 4.0),
        Signature::ULTRA_4 => ModelSpace::anti_de_sitter3(c / 4.0),
        _ => Err(GeomError::WrongSpaceKind),
    }
}

fn unit_model_of(signature: Signature) -> Result<ModelSpace> {
    match signature {
        Signature::EUCLIDEAN_4 => ModelSpace::sphere3(1.0),
        Signature::ULTRA_4 => ModelSpace::anti_de_sitter3(1.0),
        _ => Err(GeomError::WrongSpaceKind),
    }
}

/// Rescale a covering-source point onto the unit model (the homothety of the
/// covering composition) and retract to kill accumulated rounding.
fn to_unit_model(p: &AmbientVector, c: f64) -> Result<AmbientVector> {
    let source = covering_source(p.signature(), c)?;
    if !source.contains(p)? {
        return Err(GeomError::OffManifold);
    }
    let unit = unit_model_of(p.signature())?;
    Ok(unit.retract(&p.scale(c.sqrt() / 2.0)))
}

/// The two-to-one covering map from the curvature-`c/4` model space onto the
/// unit tangent bundle of the curvature-`c` surface: rescale to the unit
/// model, pass to the group, apply the covering homomorphism, and read the
/// rotation columns as a bundle point.
pub fn covering_map(p: &AmbientVector, c: f64) -> Result<BundlePoint> {
    let x_unit = to_unit_model(p, c)?;
    GroupElement::from_model_point(&x_unit)?.rotation().to_unit_tangent(c)
}

/// The (hyperbolic) Hopf map: the covering map followed by the bundle
/// projection. In complex coordinates of the rescaled point,
/// `(1/sqrt(c)) (2 Re z1 conj(z2), 2 Im z1 conj(z2), |z1|^2 -/+ |z2|^2)`
/// with `-` on the sphere and `+` on anti-de Sitter space.
pub fn hopf_map(p: &AmbientVector, c: f64) -> Result<AmbientVector> {
    let x_unit = to_unit_model(p, c)?;
    let z1 = Complex64::new(x_unit.get(0), x_unit.get(1));
    let z2 = Complex64::new(x_unit.get(2), x_unit.get(3));
    let w = z1 * z2.conj();
    let inv_sc = 1.0 / c.sqrt();
    Ok(match p.signature() {
        Signature::EUCLIDEAN_4 => AmbientVector::new3(
            Signature::EUCLIDEAN_3,
            inv_sc * 2.0 * w.re,
            inv_sc * 2.0 * w.im,
            inv_sc * (z1.norm_sqr() - z2.norm_sqr()),
        ),
        Signature::ULTRA_4 => AmbientVector::new3(
            Signature::LORENTZ_3,
            inv_sc * 2.0 * w.re,
            inv_sc * 2.0 * w.im,
            inv_sc * (z1.norm_sqr() + z2.norm_sqr()),
        ),
        _ => unreachable!("to_unit_model already rejected other signatures"),
    })
}

/// The images of the rescaled frame basis under the differential of the
/// covering map, together with the raw curve-derivative pairs they come from.
pub struct BasisImages {
    /// Image bundle point `(x_tilde, e)`, built along the adjoint route.
    pub at: BundlePoint,
    /// Split images of the basis `{2 x_i / sqrt(c)}`, i = 1, 2, 3.
    pub split: [BundleTangent; 3],
    /// Raw `(dx/dt, de/dt)` pairs of the same three images, as produced by
    /// differentiating the matrix curves directly (before splitting).
    pub raw: [CurveDerivative; 3],
    /// The fibre vector `e` and its orthogonal partner `f` at the image.
    pub e: AmbientVector,
    pub f: AmbientVector,
}

/// Compute the closed-form differential data of the covering map at `p`.
///
/// The three conjugates `k_i = A e_i A^{-1}` are evaluated by actual matrix
/// conjugation (not the polynomial entry formulas), so comparisons against
/// [`covering_map`] genuinely cross two arithmetic routes. The split images
/// are
///
/// ```text
/// image(2 x1 / sqrt(c)) = ((2/sqrt(c)) f, 0)        f = -k2
/// image(2 x2 / sqrt(c)) = ((2/sqrt(c)) e, 0)        e = k1
/// image(2 x3 / sqrt(c)) = (0, -2 f)
/// ```
///
/// while the raw pairs keep the fibre-velocity term `-/+ 2 k3` of the second
/// image that the connection map annihilates.
pub fn basis_images(p: &AmbientVector, c: f64) -> Result<BasisImages> {
    let x_unit = to_unit_model(p, c)?;
    let g = GroupElement::from_model_point(&x_unit)?;
    let (sig3, space) = match g.kind {
        GroupKind::Su2 => (Signature::EUCLIDEAN_3, ModelSpace::sphere2(c)?),
        GroupKind::Su11 => (Signature::LORENTZ_3, ModelSpace::hyperbolic_plane(c)?),
    };
    let k1 = AmbientVector::from_slice(sig3, &g.adjoint_column(0));
    let k2 = AmbientVector::from_slice(sig3, &g.adjoint_column(1));
    let k3 = AmbientVector::from_slice(sig3, &g.adjoint_column(2));
    let sc = c.sqrt();
    let x_tilde = k3.scale(1.0 / sc);
    let e = k1;
    let f = k2.scale(-1.0);
    let at = BundlePoint::unit(space, x_tilde, e)?;
    let zero = AmbientVector::zero(sig3);
    let two_over_sc = 2.0 / sc;

    // split forms
    let s1 = BundleTangent { at, horizontal: f.scale(two_over_sc), vertical: zero };
    let s2 = BundleTangent { at, horizontal: e.scale(two_over_sc), vertical: zero };
    let s3 = BundleTangent { at, horizontal: zero, vertical: f.scale(-2.0) };

    // raw curve-derivative pairs; the second carries the fibre velocity
    // -2 k3 (sphere) / +2 k3 (anti-de Sitter), which is normal to the base.
    let k3_sign = match g.kind {
        GroupKind::Su2 => -2.0,
        GroupKind::Su11 => 2.0,
    };
    let r1 = CurveDerivative { x_dot: k2.scale(-two_over_sc), e_dot: zero };
    let r2 = CurveDerivative { x_dot: k1.scale(two_over_sc), e_dot: k3.scale(k3_sign) };
    let r3 = CurveDerivative { x_dot: zero, e_dot: k2.scale(2.0) };

    Ok(BasisImages { at, split: [s1, s2, s3], raw: [r1, r2, r3], e, f })
}

/// Closed-form differential of the covering map applied to a tangent `v` at
/// `p`: expand `v` in the frame `{2 x_i / sqrt(c)}` of the source space and
/// push the basis through [`basis_images`].
pub fn covering_differential(p: &AmbientVector, c: f64, v: &AmbientVector) -> Result<BundleTangent> {
    if p.dot(v)?.abs() > 1e-8 * (1.0 + p.norm_sq().abs()) {
        return Err(GeomError::NotTangent);
    }
    let source = covering_source(p.signature(), c)?;
    let frame = source.frame_fields(p)?.frame;
    let images = basis_images(p, c)?;
    let sc = c.sqrt();
    let mut result = BundleTangent::zero(images.at);
    for i in 0..3 {
        // Gram of {2 x_i / sqrt(c)} is (4/c) diag(1, 1, +/-1); invert it on
        // the coefficients.
        let sign = if p.signature() == Signature::ULTRA_4 && i == 2 { -1.0 } else { 1.0 };
        let coeff = sign * (sc / 2.0) * v.dot(&frame[i])?;
        result = result.add(&images.split[i].scale(coeff));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_point(x: f64, y: f64, z: f64, w: f64) -> AmbientVector {
        AmbientVector::new4(Signature::EUCLIDEAN_4, x, y, z, w)
    }

    fn ads_point(x: f64, y: f64, z: f64, w: f64) -> AmbientVector {
        AmbientVector::new4(Signature::ULTRA_4, x, y, z, w)
    }

    #[test]
    fn group_identification_examples() {
        let id = GroupElement::from_model_point(&s3_point(1.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(id.a, Complex64::new(1.0, 0.0));
        assert_eq!(id.b, Complex64::new(0.0, 0.0));

        // x = (0,1,0,0) maps to the matrix e3 = diag(i, -i)
        let g = GroupElement::from_model_point(&s3_point(0.0, 1.0, 0.0, 0.0)).unwrap();
        let e3 = LieBasis::new(GroupKind::Su2).e(2);
        assert_eq!(g.matrix(), e3);

        // unit anti-de Sitter point (0,0,1,0) maps to e3 of su(1,1)
        let h = GroupElement::from_model_point(&ads_point(0.0, 0.0, 1.0, 0.0)).unwrap();
        let e3h = LieBasis::new(GroupKind::Su11).e(2);
        assert_eq!(h.matrix(), e3h);
        assert!(h.norm_residual() < 1e-15);
    }

    #[test]
    fn model_coordinates_roundtrip() {
        let p = ads_point(0.3, -0.4, 1.1, 0.2759);
        // not exactly on the quadric; retract first
        let ads = ModelSpace::anti_de_sitter3(1.0).unwrap();
        let p = ads.retract(&p);
        let g = GroupElement::from_model_point(&p).unwrap();
        let (z1, z2) = g.model_coordinates();
        assert!((z1.re - p.get(0)).abs() < 1e-15);
        assert!((z1.im - p.get(1)).abs() < 1e-15);
        assert!((z2.re - p.get(2)).abs() < 1e-15);
        assert!((z2.im - p.get(3)).abs() < 1e-15);
    }

    #[test]
    fn lie_basis_gram_matrices() {
        for kind in [GroupKind::Su2, GroupKind::Su11] {
            let basis = LieBasis::new(kind);
            let target = match kind {
                GroupKind::Su2 => [1.0, 1.0, 1.0],
                GroupKind::Su11 => [1.0, 1.0, -1.0],
            };
            for i in 0..3 {
                for j in 0..3 {
                    let want = if i == j { target[i] } else { 0.0 };
                    assert_eq!(basis.scalar(&basis.e(i), &basis.e(j)), want, "{kind:?} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn rotation_of_identity_and_negation() {
        for kind in [GroupKind::Su2, GroupKind::Su11] {
            let id = GroupElement::identity(kind);
            let r = id.rotation();
            assert!(r.max_abs_diff(&RotationMatrix::identity(r.kind)) < 1e-15);
            assert!(id.neg().rotation().max_abs_diff(&r) < 1e-15);
        }
    }

    #[test]
    fn rotation_explicit_example() {
        let g = GroupElement::from_model_point(&s3_point(0.0, 1.0, 0.0, 0.0)).unwrap();
        let r = g.rotation();
        let want = [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((r.entries[i][j] - want[i][j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn explicit_entries_match_adjoint_columns() {
        let pts = [
            s3_point(0.5, -0.5, 0.5, 0.5),
            s3_point(0.36, 0.48, 0.6, -0.52),
        ];
        let s3 = ModelSpace::sphere3(1.0).unwrap();
        for p in pts {
            let p = s3.retract(&p);
            let g = GroupElement::from_model_point(&p).unwrap();
            let r = g.rotation();
            for j in 0..3 {
                let col = g.adjoint_column(j);
                for i in 0..3 {
                    assert!((r.entries[i][j] - col[i]).abs() < 1e-13);
                }
            }
        }
        let ads = ModelSpace::anti_de_sitter3(1.0).unwrap();
        let p = ads.retract(&ads_point(0.3, 0.2, 1.05, 0.1));
        let g = GroupElement::from_model_point(&p).unwrap();
        let r = g.rotation();
        for j in 0..3 {
            let col = g.adjoint_column(j);
            for i in 0..3 {
                assert!((r.entries[i][j] - col[i]).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn column_reading_examples() {
        let id3 = RotationMatrix::identity(RotationKind::So3);
        let bp = id3.to_unit_tangent(4.0).unwrap();
        assert!(bp.x.max_abs_diff(&AmbientVector::new3(Signature::EUCLIDEAN_3, 0.0, 0.0, 0.5)) == 0.0);
        assert!(bp.e.max_abs_diff(&AmbientVector::new3(Signature::EUCLIDEAN_3, 1.0, 0.0, 0.0)) == 0.0);

        let flip = RotationMatrix {
            entries: [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]],
            kind: RotationKind::So3,
        };
        let bp = flip.to_unit_tangent(4.0).unwrap();
        assert!(bp.e.max_abs_diff(&AmbientVector::new3(Signature::EUCLIDEAN_3, -1.0, 0.0, 0.0)) == 0.0);

        let idh = RotationMatrix::identity(RotationKind::So12Plus);
        let bp = idh.to_unit_tangent(1.0).unwrap();
        assert!(bp.x.max_abs_diff(&AmbientVector::new3(Signature::LORENTZ_3, 0.0, 0.0, 1.0)) == 0.0);
    }

    #[test]
    fn covering_map_examples() {
        // c = 4: the source sphere has radius 1, so (1,0,0,0) is on it.
        let bp = covering_map(&s3_point(1.0, 0.0, 0.0, 0.0), 4.0).unwrap();
        assert!(bp.x.max_abs_diff(&AmbientVector::new3(Signature::EUCLIDEAN_3, 0.0, 0.0, 0.5)) < 1e-15);
        assert!(bp.e.max_abs_diff(&AmbientVector::new3(Signature::EUCLIDEAN_3, 1.0, 0.0, 0.0)) < 1e-15);

        let bph = covering_map(&ads_point(0.0, 0.0, 1.0, 0.0), 4.0).unwrap();
        assert!((bph.x.get(2) - 0.5).abs() < 1e-15);
        assert!(bph.e.max_abs_diff(&AmbientVector::new3(Signature::LORENTZ_3, -1.0, 0.0, 0.0)) < 1e-15);
    }

    #[test]
    fn hopf_examples() {
        let h = hopf_map(&s3_point(1.0, 0.0, 0.0, 0.0), 4.0).unwrap();
        assert!(h.max_abs_diff(&AmbientVector::new3(Signature::EUCLIDEAN_3, 0.0, 0.0, 0.5)) < 1e-15);

        let hh = hopf_map(&ads_point(0.0, 0.0, 1.0, 0.0), 4.0).unwrap();
        assert!(hh.max_abs_diff(&AmbientVector::new3(Signature::LORENTZ_3, 0.0, 0.0, 0.5)) < 1e-15);
    }

    #[test]
    fn hopf_is_phase_invariant() {
        let s3 = ModelSpace::sphere3(1.0).unwrap();
        let p = s3.retract(&s3_point(0.3, -0.1, 0.8, 0.5));
        let h0 = hopf_map(&p, 4.0).unwrap();
        for t in [core::f64::consts::PI / 3.0, 1.0] {
            let (ct, st) = (t.cos(), t.sin());
            // multiply (z1, z2) by e^{it}
            let q = s3_point(
                ct * p.get(0) - st * p.get(1),
                st * p.get(0) + ct * p.get(1),
                ct * p.get(2) - st * p.get(3),
                st * p.get(2) + ct * p.get(3),
            );
            let h1 = hopf_map(&q, 4.0).unwrap();
            assert!(h0.max_abs_diff(&h1) < 1e-14);
        }
    }

    #[test]
    fn projection_of_covering_is_hopf() {
        let s3 = ModelSpace::sphere3(0.25).unwrap();
        let p = s3.retract(&s3_point(0.6, -1.0, 1.2, 0.9));
        let bp = covering_map(&p, 1.0).unwrap();
        let h = hopf_map(&p, 1.0).unwrap();
        assert!(bp.x.max_abs_diff(&h) < 1e-14);
    }

    #[test]
    fn covering_identifies_antipodes() {
        let s3 = ModelSpace::sphere3(1.0).unwrap();
        let p = s3.retract(&s3_point(0.2, 0.9, -0.3, 0.4));
        let a = covering_map(&p, 4.0).unwrap();
        let b = covering_map(&p.scale(-1.0), 4.0).unwrap();
        assert!(a.x.max_abs_diff(&b.x) < 1e-14);
        assert!(a.e.max_abs_diff(&b.e) < 1e-14);
    }

    #[test]
    fn differential_basis_examples() {
        let p = s3_point(1.0, 0.0, 0.0, 0.0);
        let c = 4.0;
        let source = ModelSpace::sphere3(1.0).unwrap();
        let frame = source.frame_fields(&p).unwrap().frame;

        // image of x3 is ((0,0,0), (0,2,0))
        let d3 = covering_differential(&p, c, &frame[2]).unwrap();
        assert!(d3.horizontal.euclidean_norm() < 1e-15);
        assert!(d3.vertical.max_abs_diff(&AmbientVector::new3(Signature::EUCLIDEAN_3, 0.0, 2.0, 0.0)) < 1e-15);

        // image of x1 is ((0,-1,0), (0,0,0))
        let d1 = covering_differential(&p, c, &frame[0]).unwrap();
        assert!(d1.horizontal.max_abs_diff(&AmbientVector::new3(Signature::EUCLIDEAN_3, 0.0, -1.0, 0.0)) < 1e-15);
        assert!(d1.vertical.euclidean_norm() < 1e-15);

        // zero maps to zero
        let d0 = covering_differential(&p, c, &AmbientVector::zero(Signature::EUCLIDEAN_4)).unwrap();
        assert_eq!(d0.horizontal.euclidean_norm(), 0.0);
        assert_eq!(d0.vertical.euclidean_norm(), 0.0);
    }

    #[test]
    fn rotation_invariants_hold_for_group_products() {
        let s3 = ModelSpace::sphere3(1.0).unwrap();
        let ads = ModelSpace::anti_de_sitter3(1.0).unwrap();
        let a = GroupElement::from_model_point(&s3.retract(&s3_point(0.1, 0.7, -0.4, 0.2))).unwrap();
        let b = GroupElement::from_model_point(&s3.retract(&s3_point(-0.3, 0.2, 0.5, 0.9))).unwrap();
        let ab = a.mul(&b).unwrap();
        assert!(ab.rotation().max_abs_diff(&a.rotation().mul(&b.rotation())) < 1e-14);

        let ah = GroupElement::from_model_point(&ads.retract(&ads_point(0.4, -0.2, 1.2, 0.3))).unwrap();
        let bh = GroupElement::from_model_point(&ads.retract(&ads_point(-0.1, 0.5, 0.8, 0.9))).unwrap();
        let abh = ah.mul(&bh).unwrap();
        let r = abh.rotation();
        assert!(r.max_abs_diff(&ah.rotation().mul(&bh.rotation())) < 1e-13);
        assert!(r.j_orthogonality_residual() < 1e-13);
        assert!((r.det() - 1.0).abs() < 1e-13);
        assert!(r.preserves_time_orientation());
    }
}
