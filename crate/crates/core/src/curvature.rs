//! Closed-form curvature data of the tangent bundle of a curvature-`c`
//! surface carrying the metric family `h_{m,r}`.
//!
//! The curvature sign convention is fixed so that the 2-sphere of scale `c`
//! has sectional curvature `+c`, i.e. `R(X, Y)Z = c (<Y,Z> X - <X,Z> Y)`;
//! the hyperbolic plane gets the opposite sign. All connection and second
//! fundamental form evaluations use the pointwise device of extending the
//! second argument by parallel transport along the first, so base-derivative
//! terms vanish identically. Closed forms are only exposed for the definite
//! (spherical) family; the indefinite bundle is handled by pullback
//! computations elsewhere.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::ambient::AmbientVector;
use crate::bundle::{canonical_vertical, BundlePoint, BundleTangent, FiberSign, MetricParams};
use crate::error::{GeomError, Result};
use crate::spaces::{ModelSpace, INPUT_TOL};

/// Curvature tensor of a 2-dimensional model space:
/// `R(X, Y)Z = +/- c (<Y,Z> X - <X,Z> Y)`, `+` on the sphere.
pub fn base_curvature(
    space: &ModelSpace,
    x: &AmbientVector,
    xv: &AmbientVector,
    yv: &AmbientVector,
    zv: &AmbientVector,
) -> Result<AmbientVector> {
    if space.dim() != 2 {
        return Err(GeomError::WrongSpaceKind);
    }
    if !space.contains(x)? {
        return Err(GeomError::OffManifold);
    }
    for w in [xv, yv, zv] {
        if x.dot(w)?.abs() > INPUT_TOL {
            return Err(GeomError::NotTangent);
        }
    }
    let sign = if space.is_spherical() { 1.0 } else { -1.0 };
    let yz = yv.dot(zv)?;
    let xz = xv.dot(zv)?;
    Ok(xv.scale(sign * space.c * yz).add_scaled(-sign * space.c * xz, yv))
}

/// Which block of the bundle connection to evaluate: the first letter is the
/// lift type of the direction, the second that of the differentiated field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectionCase {
    Hh,
    Hv,
    Vh,
    Vv,
}

fn require_definite(params: &MetricParams) -> Result<()> {
    if params.fiber_sign != FiberSign::Definite {
        return Err(GeomError::UnsupportedParams(
            "closed forms cover the definite (spherical) family only",
        ));
    }
    Ok(())
}

fn check_base(params: &MetricParams, bp: &BundlePoint) -> Result<ModelSpace> {
    if (params.c - bp.base.c).abs() > 1e-12 * params.c {
        return Err(GeomError::UnsupportedParams("metric parameters and base space disagree on c"));
    }
    Ok(bp.base)
}

/// Pointwise Levi-Civita connection of `(TM, h_{m,r})` on lifted fields,
/// evaluated with the parallel-extension device (`nabla_X Y = 0` at the
/// point):
///
/// ```text
/// hh: ( 0,                -(1/2) R(X, Y) e )
/// hv: ( (w^m/2) R(e,Y)X,   0 )
/// vh: ( (w^m/2) R(e,X)Y,   0 )
/// vv: ( 0,  -m w [<X,e> Y + <Y,e> X] + ((m w + r) w_r <X,Y>
///             + m r w w_r <X,e><Y,e>) e )
/// ```
///
/// with `w = 1/(1+|e|^2)` and `w_r = 1/(1+r|e|^2)`. The vv block has no
/// horizontal part, so the fibres are totally geodesic.
pub fn levi_civita_lift(
    params: &MetricParams,
    case: ConnectionCase,
    xv: &AmbientVector,
    yv: &AmbientVector,
    bp: &BundlePoint,
) -> Result<BundleTangent> {
    require_definite(params)?;
    let space = check_base(params, bp)?;
    for w in [xv, yv] {
        if bp.x.dot(w)?.abs() > INPUT_TOL {
            return Err(GeomError::NotTangent);
        }
    }
    let e = &bp.e;
    let e2 = e.norm_sq();
    let omega = 1.0 / (1.0 + e2);
    let omega_r = 1.0 / (1.0 + params.r * e2);
    let wm = omega.powf(params.m);
    let zero = AmbientVector::zero(bp.x.signature());
    let (h, v) = match case {
        ConnectionCase::Hh => {
            let r = base_curvature(&space, &bp.x, xv, yv, e)?;
            (zero, r.scale(-0.5))
        }
        ConnectionCase::Hv => {
            let r = base_curvature(&space, &bp.x, e, yv, xv)?;
            (r.scale(0.5 * wm), zero)
        }
        ConnectionCase::Vh => {
            let r = base_curvature(&space, &bp.x, e, xv, yv)?;
            (r.scale(0.5 * wm), zero)
        }
        ConnectionCase::Vv => {
            let xe = xv.dot(e)?;
            let ye = yv.dot(e)?;
            let xy = xv.dot(yv)?;
            let sym = yv.scale(xe).add_scaled(ye, xv);
            let u_coef = (params.m * omega + params.r) * omega_r * xy
                + params.m * params.r * omega * omega_r * xe * ye;
            let v = sym.scale(-params.m * omega).add_scaled(u_coef, e);
            (zero, v)
        }
    };
    BundleTangent::new(*bp, h, v)
}

/// The unit normal of the unit tangent bundle inside the full bundle: a
/// positive multiple of the canonical vertical field, with normalization
/// factor `alpha = sqrt(2^m / (1 + r))`.
#[derive(Debug, Clone, Copy)]
pub struct NormalData {
    pub alpha: f64,
    pub n: BundleTangent,
}

pub fn normal_field(params: &MetricParams, bp: &BundlePoint) -> Result<NormalData> {
    check_base(params, bp)?;
    if (bp.e.norm_sq() - 1.0).abs() > INPUT_TOL {
        return Err(GeomError::NotUnit);
    }
    let alpha = (2.0f64.powf(params.m) / (1.0 + params.r)).sqrt();
    let n = canonical_vertical(bp).scale(alpha);
    Ok(NormalData { alpha, n })
}

/// Second fundamental form of the unit bundle in the full bundle, as the
/// coefficient of the unit normal:
///
/// ```text
/// B(X^h, Y^h) = B(X^h, Y^v) = B(X^v, Y^h) = 0
/// B(X^v, Y^v) = alpha (m/2 + r)/(1 + r) <X, Y>
/// ```
///
/// Inputs must be tangent to the unit bundle (vertical data orthogonal to
/// the fibre vector). Horizontal blocks vanish by exact arithmetic, so
/// mixed-argument pairs return literally `0.0`.
pub fn second_fundamental(
    params: &MetricParams,
    z1: &BundleTangent,
    z2: &BundleTangent,
) -> Result<f64> {
    require_definite(params)?;
    if !z1.at.same_point(&z2.at) {
        return Err(GeomError::BasePointMismatch);
    }
    let bp = &z1.at;
    check_base(params, bp)?;
    if (bp.e.norm_sq() - 1.0).abs() > INPUT_TOL {
        return Err(GeomError::NotUnit);
    }
    for z in [z1, z2] {
        if z.vertical.dot(&bp.e)?.abs() > INPUT_TOL {
            return Err(GeomError::NotTangent);
        }
    }
    let alpha = (2.0f64.powf(params.m) / (1.0 + params.r)).sqrt();
    let coef = (params.m / 2.0 + params.r) / (1.0 + params.r);
    Ok(alpha * coef * z1.vertical.dot(&z2.vertical)?)
}

/// The three tangent 2-planes of the unit bundle spanned by the adapted
/// frame `{e^h, f^h, f^v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftPlane {
    /// `e^h` and `f^h`.
    Hh,
    /// `e^h` and `f^v`.
    HvE,
    /// `f^h` and `f^v` (horizontal and vertical lift of the same vector).
    HvF,
}

impl LiftPlane {
    pub const ALL: [LiftPlane; 3] = [LiftPlane::Hh, LiftPlane::HvE, LiftPlane::HvF];

    pub fn label(&self) -> &'static str {
        match self {
            LiftPlane::Hh => "HH",
            LiftPlane::HvE => "HV_e",
            LiftPlane::HvF => "HV_f",
        }
    }
}

/// Sectional curvatures of the unit tangent bundle of the curvature-`c`
/// sphere under the restricted metric:
///
/// ```text
/// K(HH)   = c - 3 c^2 / 2^(m+2)
/// K(HV_e) = K(HV_f) = c^2 / 2^(m+2)
/// ```
///
/// Both values collapse to `c/4` at `m = log2(c)`, and
/// `K(HH) + 3 K(HV) = c` identically.
pub fn unit_bundle_sectional(params: &MetricParams, plane: LiftPlane) -> Result<f64> {
    require_definite(params)?;
    let c = params.c;
    let pow = 2.0f64.powf(params.m + 2.0);
    Ok(match plane {
        LiftPlane::Hh => c - 3.0 * c * c / pow,
        LiftPlane::HvE | LiftPlane::HvF => c * c / pow,
    })
}

/// Sectional curvature values of the Berger metric on the unit 3-sphere:
/// `(4 - 3/eps^2, 1/eps^2)`, the first attained on the plane of the two
/// non-fibre frame directions, the second on planes containing the fibre
/// direction.
pub fn berger_sectional(epsilon: f64) -> Result<(f64, f64)> {
    if !(epsilon > 0.0) {
        return Err(GeomError::Domain("Berger parameter must be positive"));
    }
    let inv = 1.0 / (epsilon * epsilon);
    Ok((4.0 - 3.0 * inv, inv))
}

/// Curvature-positivity thresholds of the full tangent bundle metric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivityThresholds {
    /// Largest `c` with positive sectional curvature, when the classification
    /// applies to `(m, r)`.
    pub sec_threshold: Option<f64>,
    /// Largest `c` with positive scalar curvature, when applicable.
    pub scal_threshold: Option<f64>,
}

/// `m^m / (m-1)^(m-1)` with the limit convention `(m-1)^(m-1) -> 1` as
/// `m -> 1` (IEEE `powf(0, 0) = 1` realizes it directly).
fn m_ratio(m: f64) -> f64 {
    m.powf(m) / (m - 1.0).powf(m - 1.0)
}

/// Threshold predicates for positive sectional / scalar curvature of the
/// full bundle metric:
///
/// * sectional: `c <= (4/3) m^m/(m-1)^(m-1)` when `r = 0, m >= 1`, or
///   `c <= 4/3` when `r > 0, m = 1`; otherwise no threshold applies;
/// * scalar: `c <= 4 m^m/(m-1)^(m-1)` when `r = 0, 1 <= m <= 2`, or
///   `c <= 4` when `r > 0, m = 1`.
pub fn positivity_thresholds(m: f64, r: f64) -> Result<PositivityThresholds> {
    if r < 0.0 {
        return Err(GeomError::Domain("metric parameter r must be nonnegative"));
    }
    let sec_threshold = if r == 0.0 && m >= 1.0 {
        Some(4.0 / 3.0 * m_ratio(m))
    } else if r > 0.0 && m == 1.0 {
        Some(4.0 / 3.0)
    } else {
        None
    };
    let scal_threshold = if r == 0.0 && (1.0..=2.0).contains(&m) {
        Some(4.0 * m_ratio(m))
    } else if r > 0.0 && m == 1.0 {
        Some(4.0)
    } else {
        None
    };
    Ok(PositivityThresholds { sec_threshold, scal_threshold })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::Signature;
    use crate::bundle::{horizontal_lift, vertical_lift};

    fn sphere_bp(c: f64) -> (BundlePoint, AmbientVector, AmbientVector) {
        let s2 = ModelSpace::sphere2(c).unwrap();
        let x = AmbientVector::new3(Signature::EUCLIDEAN_3, 0.0, 0.0, 1.0 / c.sqrt());
        let e = AmbientVector::new3(Signature::EUCLIDEAN_3, 1.0, 0.0, 0.0);
        let f = AmbientVector::new3(Signature::EUCLIDEAN_3, 0.0, 1.0, 0.0);
        (BundlePoint::unit(s2, x, e).unwrap(), e, f)
    }

    #[test]
    fn curvature_tensor_closed_form() {
        let (bp, e, f) = sphere_bp(1.0);
        let space = bp.base;
        // antisymmetry
        let r_xx = base_curvature(&space, &bp.x, &e, &e, &f).unwrap();
        assert_eq!(r_xx.euclidean_norm(), 0.0);
        // |R(e,f)f|^2 = 1 on the unit sphere
        let r = base_curvature(&space, &bp.x, &e, &f, &f).unwrap();
        assert!((r.norm_sq() - 1.0).abs() < 1e-15);
        // |R(e,f)f|^2 = c^2 in general
        let (bp4, e4, f4) = sphere_bp(4.0);
        let r4 = base_curvature(&bp4.base, &bp4.x, &e4, &f4, &f4).unwrap();
        assert!((r4.norm_sq() - 16.0).abs() < 1e-12);
    }

    #[test]
    fn hyperbolic_curvature_sign() {
        let h2 = ModelSpace::hyperbolic_plane(1.0).unwrap();
        let x = AmbientVector::new3(Signature::LORENTZ_3, 0.0, 0.0, 1.0);
        let e = AmbientVector::new3(Signature::LORENTZ_3, 1.0, 0.0, 0.0);
        let f = AmbientVector::new3(Signature::LORENTZ_3, 0.0, 1.0, 0.0);
        let r = base_curvature(&h2, &x, &e, &f, &f).unwrap();
        // sectional curvature <R(e,f)f, e> = -1
        assert!((r.dot(&e).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn connection_vv_block() {
        let (bp, _e, f) = sphere_bp(4.0);
        let params = MetricParams::definite(2.0, 0.0, 4.0).unwrap();
        // <X,e> = <Y,e> = 0, |e| = 1, m = 2, r = 0: result is <X,Y> U
        let got = levi_civita_lift(&params, ConnectionCase::Vv, &f, &f, &bp).unwrap();
        assert_eq!(got.horizontal.euclidean_norm(), 0.0);
        assert!(got.vertical.max_abs_diff(&bp.e.scale(f.norm_sq())) < 1e-15);

        // vv never has a horizontal part
        let params_r = MetricParams::definite(1.3, 2.0, 4.0).unwrap();
        let mixed = f.add_scaled(0.7, &bp.e);
        let got = levi_civita_lift(&params_r, ConnectionCase::Vv, &mixed, &f, &bp).unwrap();
        assert_eq!(got.horizontal.euclidean_norm(), 0.0);
    }

    #[test]
    fn connection_hh_antisymmetry() {
        let (bp, e, _f) = sphere_bp(4.0);
        let params = MetricParams::definite(2.0, 1.0, 4.0).unwrap();
        let got = levi_civita_lift(&params, ConnectionCase::Hh, &e, &e, &bp).unwrap();
        assert_eq!(got.vertical.euclidean_norm(), 0.0);
        assert_eq!(got.horizontal.euclidean_norm(), 0.0);
    }

    #[test]
    fn connection_rejects_indefinite() {
        let params = MetricParams::indefinite(2.0, 0.0, 4.0).unwrap();
        let (bp, e, _f) = sphere_bp(4.0);
        assert!(matches!(
            levi_civita_lift(&params, ConnectionCase::Hh, &e, &e, &bp),
            Err(GeomError::UnsupportedParams(_))
        ));
    }

    #[test]
    fn normal_factor_values() {
        let (bp, _e, _f) = sphere_bp(4.0);
        let sasaki = MetricParams::definite(0.0, 0.0, 4.0).unwrap();
        assert!((normal_field(&sasaki, &bp).unwrap().alpha - 1.0).abs() < 1e-15);

        let params = MetricParams::definite(2.0, 0.0, 4.0).unwrap();
        let nd = normal_field(&params, &bp).unwrap();
        assert!((nd.alpha - 2.0).abs() < 1e-15);

        // the normal is metric-unit and orthogonal to horizontals
        assert!((params.inner(&nd.n, &nd.n).unwrap() - 1.0).abs() < 1e-15);
        let f = AmbientVector::new3(Signature::EUCLIDEAN_3, 0.0, 1.0, 0.0);
        let fh = horizontal_lift(&bp, &f).unwrap();
        assert_eq!(params.inner(&nd.n, &fh).unwrap(), 0.0);
    }

    #[test]
    fn indefinite_normal_is_timelike() {
        let h2 = ModelSpace::hyperbolic_plane(4.0).unwrap();
        let x = AmbientVector::new3(Signature::LORENTZ_3, 0.0, 0.0, 0.5);
        let e = AmbientVector::new3(Signature::LORENTZ_3, 1.0, 0.0, 0.0);
        let bp = BundlePoint::unit(h2, x, e).unwrap();
        let params = MetricParams::indefinite(2.0, 0.0, 4.0).unwrap();
        let nd = normal_field(&params, &bp).unwrap();
        assert!((params.inner(&nd.n, &nd.n).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn second_fundamental_values() {
        let (bp, e, f) = sphere_bp(4.0);
        let eh = horizontal_lift(&bp, &e).unwrap();
        let fh = horizontal_lift(&bp, &f).unwrap();
        let fv = vertical_lift(&bp, &f).unwrap();

        let params = MetricParams::definite(2.0, 0.0, 4.0).unwrap();
        assert_eq!(second_fundamental(&params, &eh, &fh).unwrap(), 0.0);
        assert_eq!(second_fundamental(&params, &eh, &fv).unwrap(), 0.0);
        assert!((second_fundamental(&params, &fv, &fv).unwrap() - 2.0).abs() < 1e-15);

        // the Sasaki unit bundle is totally geodesic: coefficient m/2 + r = 0
        let sasaki = MetricParams::definite(0.0, 0.0, 4.0).unwrap();
        assert_eq!(second_fundamental(&sasaki, &fv, &fv).unwrap(), 0.0);
    }

    #[test]
    fn sectional_closed_forms() {
        let p42 = MetricParams::definite(2.0, 0.0, 4.0).unwrap();
        assert!((unit_bundle_sectional(&p42, LiftPlane::Hh).unwrap() - 1.0).abs() < 1e-15);
        assert!((unit_bundle_sectional(&p42, LiftPlane::HvE).unwrap() - 1.0).abs() < 1e-15);

        let sasaki = MetricParams::definite(0.0, 0.0, 1.0).unwrap();
        for plane in LiftPlane::ALL {
            assert!((unit_bundle_sectional(&sasaki, plane).unwrap() - 0.25).abs() < 1e-15);
        }

        // m = log2(c) flattens everything to c/4
        for c in [1.5f64, 2.0, 9.0] {
            let params = MetricParams::definite(c.log2(), 0.0, c).unwrap();
            for plane in LiftPlane::ALL {
                assert!((unit_bundle_sectional(&params, plane).unwrap() - c / 4.0).abs() < 1e-13);
            }
        }

        let indef = MetricParams::indefinite(2.0, 0.0, 4.0).unwrap();
        assert!(matches!(
            unit_bundle_sectional(&indef, LiftPlane::Hh),
            Err(GeomError::UnsupportedParams(_))
        ));
    }

    #[test]
    fn berger_values() {
        assert_eq!(berger_sectional(1.0).unwrap(), (1.0, 1.0));
        assert_eq!(berger_sectional(2.0).unwrap(), (13.0 / 4.0, 0.25));

        // same pair as the unit-bundle closed forms at m = log2(eps^2) + 2
        for eps in [0.5f64, 1.0, 2.0] {
            let m = (eps * eps).log2() + 2.0;
            let params = MetricParams::definite(m, 0.0, 4.0).unwrap();
            let (khh, khv) = berger_sectional(eps).unwrap();
            assert!((unit_bundle_sectional(&params, LiftPlane::Hh).unwrap() - khh).abs() < 1e-12);
            assert!((unit_bundle_sectional(&params, LiftPlane::HvF).unwrap() - khv).abs() < 1e-12);
        }
    }

    #[test]
    fn threshold_predicates() {
        let t = positivity_thresholds(1.0, 0.0).unwrap();
        assert!((t.sec_threshold.unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((t.scal_threshold.unwrap() - 4.0).abs() < 1e-15);

        let t = positivity_thresholds(2.0, 0.0).unwrap();
        assert!((t.sec_threshold.unwrap() - 16.0 / 3.0).abs() < 1e-15);
        assert!((t.scal_threshold.unwrap() - 16.0).abs() < 1e-15);

        let t = positivity_thresholds(0.5, 0.0).unwrap();
        assert_eq!(t.sec_threshold, None);
        assert_eq!(t.scal_threshold, None);

        let t = positivity_thresholds(1.0, 3.0).unwrap();
        assert!((t.sec_threshold.unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((t.scal_threshold.unwrap() - 4.0).abs() < 1e-15);

        let t = positivity_thresholds(3.0, 1.0).unwrap();
        assert_eq!(t.sec_threshold, None);

        assert!(positivity_thresholds(1.0, -0.1).is_err());
    }
}
