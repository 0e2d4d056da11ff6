//! Tangent-bundle points, horizontal/vertical lifts, the connection map, and
//! the two-parameter metric family on tangent bundles.
//!
//! A tangent of `TM` at `(x, e)` is stored *already split* as a pair
//! `(X, Y)` meaning `X^h + Y^v`. Raw curve derivatives `(dx/dt, de/dt)` enter
//! only through [`connection_split`], which applies the definition of the
//! connection map `K` (parallel transport toward the base point, translate by
//! `-e`, exponentiate, differentiate) using the closed forms of
//! [`crate::spaces`]. Everything downstream of the split is exact arithmetic.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::ambient::AmbientVector;
use crate::error::{GeomError, Result};
use crate::spaces::{ModelSpace, INPUT_TOL};

/// Tolerance for identifying two bundle points produced along different
/// arithmetic routes (explicit matrix entries vs. adjoint conjugation).
const SAME_POINT_TOL: f64 = 1e-9;

/// A point `(x, e)` of the tangent bundle of a model space: `x` on the space
/// and `e` tangent at `x`. `unit` records membership in the unit bundle,
/// i.e. `<e, e> = 1`.
#[derive(Debug, Clone, Copy)]
pub struct BundlePoint {
    pub base: ModelSpace,
    pub x: AmbientVector,
    pub e: AmbientVector,
    pub unit: bool,
}

impl BundlePoint {
    /// A point of `TM`; the fibre vector may have any (spacelike) length.
    pub fn new(base: ModelSpace, x: AmbientVector, e: AmbientVector) -> Result<Self> {
        if !base.contains(&x)? {
            return Err(GeomError::OffManifold);
        }
        if x.dot(&e)?.abs() > INPUT_TOL {
            return Err(GeomError::NotTangent);
        }
        let unit = (e.norm_sq() - 1.0).abs() <= 1e-12;
        Ok(BundlePoint { base, x, e, unit })
    }

    /// A point of the unit tangent bundle; requires `<e, e> = 1`.
    pub fn unit(base: ModelSpace, x: AmbientVector, e: AmbientVector) -> Result<Self> {
        let bp = Self::new(base, x, e)?;
        if (bp.e.norm_sq() - 1.0).abs() > INPUT_TOL {
            return Err(GeomError::NotUnit);
        }
        Ok(BundlePoint { unit: true, ..bp })
    }

    /// Whether two bundle points agree within the route-identification
    /// tolerance.
    pub fn same_point(&self, other: &BundlePoint) -> bool {
        self.base == other.base
            && self.x.max_abs_diff(&other.x) <= SAME_POINT_TOL
            && self.e.max_abs_diff(&other.e) <= SAME_POINT_TOL
    }
}

/// A tangent vector of `TM` at `at`, split as `X^h + Y^v` with both data
/// tangent to the base at `at.x`.
#[derive(Debug, Clone, Copy)]
pub struct BundleTangent {
    pub at: BundlePoint,
    /// Horizontal datum: `d(pi)` image.
    pub horizontal: AmbientVector,
    /// Vertical datum: connection-map image.
    pub vertical: AmbientVector,
}

impl BundleTangent {
    pub fn new(at: BundlePoint, horizontal: AmbientVector, vertical: AmbientVector) -> Result<Self> {
        if at.x.dot(&horizontal)?.abs() > INPUT_TOL || at.x.dot(&vertical)?.abs() > INPUT_TOL {
            return Err(GeomError::NotTangent);
        }
        Ok(BundleTangent { at, horizontal, vertical })
    }

    pub fn zero(at: BundlePoint) -> Self {
        let z = AmbientVector::zero(at.x.signature());
        BundleTangent { at, horizontal: z, vertical: z }
    }

    /// Tangent to the unit bundle: the vertical datum must be orthogonal to
    /// the fibre vector.
    pub fn is_unit_bundle_tangent(&self) -> bool {
        self.at.unit
            && self
                .vertical
                .dot(&self.at.e)
                .map(|d| d.abs() <= INPUT_TOL)
                .unwrap_or(false)
    }

    pub fn add(&self, other: &BundleTangent) -> BundleTangent {
        BundleTangent {
            at: self.at,
            horizontal: self.horizontal.add(&other.horizontal),
            vertical: self.vertical.add(&other.vertical),
        }
    }

    pub fn scale(&self, s: f64) -> BundleTangent {
        BundleTangent {
            at: self.at,
            horizontal: self.horizontal.scale(s),
            vertical: self.vertical.scale(s),
        }
    }

    /// Max componentwise difference over both data slots.
    pub fn max_abs_diff(&self, other: &BundleTangent) -> f64 {
        self.horizontal
            .max_abs_diff(&other.horizontal)
            .max(self.vertical.max_abs_diff(&other.vertical))
    }
}

/// Horizontal lift of a base tangent `x_dot`: the tangent of the parallel
/// curve `(gamma(t), e(t))`, `e` parallel along `gamma`, in split form.
pub fn horizontal_lift(bp: &BundlePoint, x_dot: &AmbientVector) -> Result<BundleTangent> {
    let z = AmbientVector::zero(bp.x.signature());
    BundleTangent::new(*bp, *x_dot, z)
}

/// Vertical lift of a base tangent `y`: the tangent of a fibre curve with
/// connection-map image `y`, in split form.
pub fn vertical_lift(bp: &BundlePoint, y: &AmbientVector) -> Result<BundleTangent> {
    let z = AmbientVector::zero(bp.x.signature());
    BundleTangent::new(*bp, z, *y)
}

/// The canonical vertical field `U(x, e) = e^v`.
pub fn canonical_vertical(bp: &BundlePoint) -> BundleTangent {
    let z = AmbientVector::zero(bp.x.signature());
    BundleTangent { at: *bp, horizontal: z, vertical: bp.e }
}

/// Raw derivative data of a curve `t -> (x(t), e(t))` in `TM` at `t = 0`:
/// the ambient derivatives `(dx/dt, de/dt)(0)`.
///
/// Validity at `(x, e)` requires `dx/dt` tangent at `x` and
/// `<x, de/dt> + <dx/dt, e> = 0` (derivative of the tangency constraint).
#[derive(Debug, Clone, Copy)]
pub struct CurveDerivative {
    pub x_dot: AmbientVector,
    pub e_dot: AmbientVector,
}

/// Finite-difference step for the connection map.
const K_STEP: f64 = 1e-5;

/// Split a raw curve derivative at `bp` into `(X, Y)` with `X^h + Y^v` the
/// same tangent of `TM`.
///
/// `X = dpi(Z) = dx/dt`. `Y = K(Z)` is obtained by differentiating
/// `exp_x . R_{-e} . tau` along a curve with the given derivative: the curve
/// is reconstructed by retraction (`x(t) = retract(x + t dx/dt)`, fibre
/// projected tangentially), `tau` transports the fibre back to `x` along the
/// connecting geodesic, and the derivative is a central difference with step
/// `1e-5`. The inverse of `(X, Y) -> X^h + Y^v` within about `1e-6`.
pub fn connection_split(bp: &BundlePoint, z: &CurveDerivative) -> Result<(AmbientVector, AmbientVector)> {
    let space = bp.base;
    let x_dot = z.x_dot;
    let e_dot = z.e_dot;
    if bp.x.dot(&x_dot)?.abs() > 1e-6 * (1.0 + bp.x.norm_sq().abs()) {
        return Err(GeomError::InvalidCurveData);
    }
    let constraint = bp.x.dot(&e_dot)? + x_dot.dot(&bp.e)?;
    if constraint.abs() > 1e-6 * (1.0 + bp.e.euclidean_norm()) {
        return Err(GeomError::InvalidCurveData);
    }

    let phi = |t: f64| -> Result<AmbientVector> {
        let xt = space.retract(&bp.x.add_scaled(t, &x_dot));
        let et_raw = bp.e.add_scaled(t, &e_dot);
        let et = space.project_tangent(&xt, &et_raw);
        let back = space.transport_between(&xt, &et, &bp.x)?;
        let w = back.sub(&bp.e);
        space.exp_map(&bp.x, &space.project_tangent(&bp.x, &w))
    };
    let plus = phi(K_STEP)?;
    let minus = phi(-K_STEP)?;
    let y = plus.sub(&minus).scale(1.0 / (2.0 * K_STEP));
    // the difference quotient of points on M is tangent at x up to O(h^2)
    let y = space.project_tangent(&bp.x, &y);
    Ok((x_dot, y))
}

/// Selects the spherical (positive-definite) or hyperbolic (indefinite)
/// fibre sign of the metric family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberSign {
    Definite,
    Indefinite,
}

/// Parameters `(m, r, c)` of the generalized Cheeger-Gromoll family
/// `h_{m,r}` on the tangent bundle of a curvature-`c` base, with the fibre
/// sign distinguishing the definite and indefinite variants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricParams {
    pub m: f64,
    pub r: f64,
    pub c: f64,
    pub fiber_sign: FiberSign,
}

impl MetricParams {
    pub fn definite(m: f64, r: f64, c: f64) -> Result<Self> {
        Self::check(m, r, c)?;
        Ok(MetricParams { m, r, c, fiber_sign: FiberSign::Definite })
    }

    pub fn indefinite(m: f64, r: f64, c: f64) -> Result<Self> {
        Self::check(m, r, c)?;
        Ok(MetricParams { m, r, c, fiber_sign: FiberSign::Indefinite })
    }

    fn check(_m: f64, r: f64, c: f64) -> Result<()> {
        if r < 0.0 {
            return Err(GeomError::Domain("metric parameter r must be nonnegative"));
        }
        if !(c > 0.0) {
            return Err(GeomError::Domain("curvature scale c must be positive"));
        }
        Ok(())
    }

    /// The metric value `h_{m,r}(Z1, Z2)`:
    ///
    /// ```text
    /// h(X1^h, X2^h) = <X1, X2>        h(X^h, Y^v) = 0
    /// h(Y1^v, Y2^v) = +/- w^m (<Y1, Y2> + r <Y1, e> <Y2, e>),  w = 1/(1 + |e|^2)
    /// ```
    ///
    /// with `-` exactly in the indefinite variant. In the indefinite case the
    /// fibre weight `w` is undefined once `1 + <e, e> <= 0`; such fibres are a
    /// domain error (the family is only ever evaluated on and near the unit
    /// bundle, where `<e, e> = 1`).
    pub fn inner(&self, z1: &BundleTangent, z2: &BundleTangent) -> Result<f64> {
        if !z1.at.same_point(&z2.at) {
            return Err(GeomError::BasePointMismatch);
        }
        let e = &z1.at.e;
        let fiber2 = e.norm_sq();
        let denom = 1.0 + fiber2;
        if denom <= 0.0 {
            return Err(GeomError::Domain("indefinite fibre weight undefined: 1 + <e,e> <= 0"));
        }
        let omega = 1.0 / denom;
        let sign = match self.fiber_sign {
            FiberSign::Definite => 1.0,
            FiberSign::Indefinite => -1.0,
        };
        let horiz = z1.horizontal.dot(&z2.horizontal)?;
        let y1y2 = z1.vertical.dot(&z2.vertical)?;
        let y1e = z1.vertical.dot(e)?;
        let y2e = z2.vertical.dot(e)?;
        Ok(horiz + sign * omega.powf(self.m) * (y1y2 + self.r * y1e * y2e))
    }
}

/// The left-invariant metric on the unit 3-sphere that makes
/// `{x1, x2, eps * x3}` orthonormal, evaluated on tangents `v, w` at `x`.
pub fn berger_metric(
    epsilon: f64,
    space: &ModelSpace,
    x: &AmbientVector,
    v: &AmbientVector,
    w: &AmbientVector,
) -> Result<f64> {
    if !(epsilon > 0.0) {
        return Err(GeomError::Domain("Berger parameter must be positive"));
    }
    let fp = space.frame_fields(x)?;
    if x.dot(v)?.abs() > INPUT_TOL || x.dot(w)?.abs() > INPUT_TOL {
        return Err(GeomError::NotTangent);
    }
    let mut acc = 0.0;
    for (i, xi) in fp.frame.iter().enumerate() {
        let vi = v.dot(xi)?;
        let wi = w.dot(xi)?;
        let weight = if i == 2 { 1.0 / (epsilon * epsilon) } else { 1.0 };
        acc += weight * vi * wi;
    }
    Ok(acc)
}
