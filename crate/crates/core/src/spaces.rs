//! Embedded constant-curvature model spaces.
//!
//! Four quadrics are supported, each realized in the flat (pseudo-)Euclidean
//! space of its signature:
//!
//! * `Sphere2`, `Sphere3`: `<x, x> = 1/c` in R^3 / R^4, sectional curvature `+c`;
//! * `HyperbolicPlane`: `<x, x> = -1/c`, `x^3 > 0` in R^3_1, curvature `-c`;
//! * `AntiDeSitter3`: `<x, x> = -1/c` in R^4_2, curvature `-c`.
//!
//! Geodesics, exponential maps and parallel transport all have closed forms
//! because every space is a symmetric quadric; those closed forms are what the
//! finite-difference machinery in [`crate::fd`] differentiates.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::ambient::{AmbientVector, Signature};
use crate::error::{GeomError, Result};

/// Absolute tolerance on the defining quadratic form for membership tests.
pub const CONTAINS_TOL: f64 = 1e-12;

/// Looser tolerance used to validate tangency / unit-length of *inputs*, so
/// that vectors produced by numeric differentiation are not rejected.
pub(crate) const INPUT_TOL: f64 = 1e-8;

/// Which of the four model quadrics a [`ModelSpace`] denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    Sphere2,
    Sphere3,
    HyperbolicPlane,
    AntiDeSitter3,
}

/// A model space of curvature `+c` (spheres) or `-c` (hyperbolic kinds), `c > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSpace {
    pub kind: SpaceKind,
    pub c: f64,
}

/// A point of a 3-dimensional model space together with the global
/// (pseudo-)orthonormal frame evaluated there. The frame Gram matrix is
/// `diag(1,1,1)` on the 3-sphere and `diag(1,1,-1)` on anti-de Sitter space,
/// in the order `(x1, x2, x3)`.
#[derive(Debug, Clone, Copy)]
pub struct FramePoint {
    pub x: AmbientVector,
    pub frame: [AmbientVector; 3],
}

impl ModelSpace {
    pub fn new(kind: SpaceKind, c: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(GeomError::Domain("curvature scale c must be positive"));
        }
        Ok(ModelSpace { kind, c })
    }

    pub fn sphere2(c: f64) -> Result<Self> {
        Self::new(SpaceKind::Sphere2, c)
    }

    pub fn sphere3(c: f64) -> Result<Self> {
        Self::new(SpaceKind::Sphere3, c)
    }

    pub fn hyperbolic_plane(c: f64) -> Result<Self> {
        Self::new(SpaceKind::HyperbolicPlane, c)
    }

    pub fn anti_de_sitter3(c: f64) -> Result<Self> {
        Self::new(SpaceKind::AntiDeSitter3, c)
    }

    /// Ambient signature housing this space.
    pub fn signature(&self) -> Signature {
        match self.kind {
            SpaceKind::Sphere2 => Signature::EUCLIDEAN_3,
            SpaceKind::Sphere3 => Signature::EUCLIDEAN_4,
            SpaceKind::HyperbolicPlane => Signature::LORENTZ_3,
            SpaceKind::AntiDeSitter3 => Signature::ULTRA_4,
        }
    }

    /// Intrinsic dimension (2 or 3).
    pub fn dim(&self) -> usize {
        match self.kind {
            SpaceKind::Sphere2 | SpaceKind::HyperbolicPlane => 2,
            SpaceKind::Sphere3 | SpaceKind::AntiDeSitter3 => 3,
        }
    }

    pub fn is_spherical(&self) -> bool {
        matches!(self.kind, SpaceKind::Sphere2 | SpaceKind::Sphere3)
    }

    /// Target value of `<x, x>` on the quadric: `+1/c` or `-1/c`.
    pub fn quadric_value(&self) -> f64 {
        if self.is_spherical() {
            1.0 / self.c
        } else {
            -1.0 / self.c
        }
    }

    /// Membership test: `<x, x>` equals the quadric value within `1e-12`,
    /// and `x^3 > 0` on the hyperbolic plane (time orientation).
    pub fn contains(&self, x: &AmbientVector) -> Result<bool> {
        if x.signature() != self.signature() {
            return Err(GeomError::SignatureMismatch);
        }
        let on_quadric = (x.norm_sq() - self.quadric_value()).abs() <= CONTAINS_TOL;
        let oriented = match self.kind {
            SpaceKind::HyperbolicPlane => x.get(2) > 0.0,
            _ => true,
        };
        Ok(on_quadric && oriented)
    }

    /// Rescale a numerically perturbed point back onto the quadric.
    ///
    /// Spheres divide by `sqrt(c) * |y|`; hyperbolic kinds rescale by
    /// `1/sqrt(c * |<y,y>|)`, which preserves the time orientation.
    pub fn retract(&self, y: &AmbientVector) -> AmbientVector {
        if self.is_spherical() {
            let n = y.euclidean_norm();
            y.scale(1.0 / (self.c.sqrt() * n))
        } else {
            let q = y.norm_sq().abs();
            y.scale(1.0 / (self.c * q).sqrt())
        }
    }

    /// Tangential projection at `x` on this space (signed rejection along the
    /// quadric normal, which is `x` itself).
    pub fn project_tangent(&self, x: &AmbientVector, w: &AmbientVector) -> AmbientVector {
        w.reject_along(x)
    }

    fn check_point(&self, x: &AmbientVector) -> Result<()> {
        if !self.contains(x)? {
            return Err(GeomError::OffManifold);
        }
        Ok(())
    }

    fn check_tangent(&self, x: &AmbientVector, w: &AmbientVector) -> Result<()> {
        let d = x.dot(w)?;
        // <x, w> is compared against the scale of x itself.
        if d.abs() > INPUT_TOL * (1.0 + x.norm_sq().abs()) {
            return Err(GeomError::NotTangent);
        }
        Ok(())
    }

    fn check_unit_spacelike(&self, v: &AmbientVector) -> Result<()> {
        if (v.norm_sq() - 1.0).abs() > INPUT_TOL {
            return Err(GeomError::NotUnit);
        }
        Ok(())
    }

    /// The global frame `(x1, x2, x3)` of the unit 3-sphere or unit anti-de
    /// Sitter space, evaluated at the rescaling of `x` onto the unit model.
    ///
    /// On `Sphere3` the three fields are orthonormal; on `AntiDeSitter3` they
    /// are pseudo-orthonormal with `<x3, x3> = -1`. In both cases `x3` is
    /// tangent to the fibres of the (hyperbolic) Hopf map.
    pub fn frame_fields(&self, x: &AmbientVector) -> Result<FramePoint> {
        match self.kind {
            SpaceKind::Sphere3 | SpaceKind::AntiDeSitter3 => {}
            _ => return Err(GeomError::WrongSpaceKind),
        }
        self.check_point(x)?;
        let u = x.scale(self.c.sqrt());
        let sig = self.signature();
        let (x1, x2, x3, x4) = (u.get(0), u.get(1), u.get(2), u.get(3));
        let f3 = AmbientVector::new4(sig, -x2, x1, -x4, x3);
        let (f1, f2) = match self.kind {
            SpaceKind::Sphere3 => (
                AmbientVector::new4(sig, -x4, -x3, x2, x1),
                AmbientVector::new4(sig, -x3, x4, x1, -x2),
            ),
            SpaceKind::AntiDeSitter3 => (
                AmbientVector::new4(sig, x4, x3, x2, x1),
                AmbientVector::new4(sig, x3, -x4, x1, -x2),
            ),
            _ => unreachable!(),
        };
        Ok(FramePoint { x: *x, frame: [f1, f2, f3] })
    }

    /// Unit-speed geodesic through `x` with spacelike unit initial vector `v`,
    /// evaluated at arc parameter `t`.
    pub fn geodesic(&self, x: &AmbientVector, v: &AmbientVector, t: f64) -> Result<AmbientVector> {
        self.check_point(x)?;
        self.check_tangent(x, v)?;
        self.check_unit_spacelike(v)?;
        let sc = self.c.sqrt();
        Ok(if self.is_spherical() {
            x.scale((sc * t).cos()).add_scaled((sc * t).sin() / sc, v)
        } else {
            x.scale((sc * t).cosh()).add_scaled((sc * t).sinh() / sc, v)
        })
    }

    /// Velocity of [`ModelSpace::geodesic`] at parameter `t` (unit spacelike).
    pub fn geodesic_velocity(
        &self,
        x: &AmbientVector,
        v: &AmbientVector,
        t: f64,
    ) -> Result<AmbientVector> {
        self.check_point(x)?;
        self.check_tangent(x, v)?;
        self.check_unit_spacelike(v)?;
        let sc = self.c.sqrt();
        Ok(if self.is_spherical() {
            x.scale(-sc * (sc * t).sin()).add_scaled((sc * t).cos(), v)
        } else {
            x.scale(sc * (sc * t).sinh()).add_scaled((sc * t).cosh(), v)
        })
    }

    /// Exponential map of the 2-dimensional spaces: the geodesic from `x`
    /// with initial vector `w` (any length, including zero) at parameter 1.
    ///
    /// Below `|w| = 1e-8` the coefficient `sin(sqrt(c) s)/(sqrt(c) s)` and its
    /// hyperbolic analogue switch to their degree-4 series, which keeps the
    /// map C^2-smooth through `w = 0` for finite differencing.
    pub fn exp_map(&self, x: &AmbientVector, w: &AmbientVector) -> Result<AmbientVector> {
        match self.kind {
            SpaceKind::Sphere2 | SpaceKind::HyperbolicPlane => {}
            _ => return Err(GeomError::WrongSpaceKind),
        }
        self.check_point(x)?;
        self.check_tangent(x, w)?;
        let c = self.c;
        let s2 = w.norm_sq().max(0.0);
        let s = s2.sqrt();
        let (a, b) = if s < 1e-8 {
            let cs2 = c * s2;
            if self.is_spherical() {
                (1.0 - cs2 / 2.0 + cs2 * cs2 / 24.0, 1.0 - cs2 / 6.0 + cs2 * cs2 / 120.0)
            } else {
                (1.0 + cs2 / 2.0 + cs2 * cs2 / 24.0, 1.0 + cs2 / 6.0 + cs2 * cs2 / 120.0)
            }
        } else {
            let sc = c.sqrt();
            if self.is_spherical() {
                ((sc * s).cos(), (sc * s).sin() / (sc * s))
            } else {
                ((sc * s).cosh(), (sc * s).sinh() / (sc * s))
            }
        };
        Ok(x.scale(a).add_scaled(b, w))
    }

    /// Parallel transport of `w` along the geodesic `geodesic(x, v, .)` to
    /// parameter `t`.
    ///
    /// The component of `w` along `v` rides with the geodesic velocity; the
    /// complement is orthogonal to the ambient 2-plane of the motion and stays
    /// constant. Preserves `<w, w>` and `<w, velocity>`.
    pub fn parallel_transport(
        &self,
        x: &AmbientVector,
        v: &AmbientVector,
        w: &AmbientVector,
        t: f64,
    ) -> Result<AmbientVector> {
        self.check_point(x)?;
        self.check_tangent(x, v)?;
        self.check_unit_spacelike(v)?;
        self.check_tangent(x, w)?;
        let a = w.dot(v)?;
        let perp = w.add_scaled(-a, v);
        let vel = self.geodesic_velocity(x, v, t)?;
        Ok(perp.add_scaled(a, &vel))
    }

    /// Parallel transport of `w` from `y` to `x` along the unique geodesic
    /// arc joining them (the tau map of the connection construction).
    ///
    /// Evaluated without inverse trigonometry: the arc data enters only
    /// through `c <y, x>` and the norm of the tangential part of `x` at `y`,
    /// so the map stays accurate for arbitrarily short arcs.
    pub fn transport_between(
        &self,
        y: &AmbientVector,
        w: &AmbientVector,
        x: &AmbientVector,
    ) -> Result<AmbientVector> {
        self.check_point(y)?;
        self.check_point(x)?;
        self.check_tangent(y, w)?;
        let c = self.c;
        let p = self.project_tangent(y, x);
        let pn2 = p.norm_sq();
        if pn2 <= 0.0 || pn2.sqrt() < 1e-14 / c.sqrt() {
            return Ok(*w);
        }
        let pn = pn2.sqrt();
        let u = p.scale(1.0 / pn);
        // cos(sqrt(c) d) = c <y, x> on spheres; cosh(sqrt(c) d) = -c <y, x>
        // on hyperbolic kinds; sin/sinh(sqrt(c) d) = sqrt(c) |P| in both.
        let (cosd, y_coef) = if self.is_spherical() {
            (c * y.dot(x)?, -c * pn)
        } else {
            (-c * y.dot(x)?, c * pn)
        };
        let vel_at_x = y.scale(y_coef).add_scaled(cosd, &u);
        let a = w.dot(&u)?;
        let perp = w.add_scaled(-a, &u);
        Ok(perp.add_scaled(a, &vel_at_x))
    }

    /// Inverse stereographic projection onto `Sphere2` or `HyperbolicPlane`,
    /// composed with the homothety onto curvature scale `c`.
    ///
    /// The sphere chart projects from the north pole of the unit sphere; the
    /// hyperbolic chart is defined on the open unit disc `|zeta| < 1`.
    pub fn stereographic_inverse(&self, zeta_re: f64, zeta_im: f64) -> Result<AmbientVector> {
        let r2 = zeta_re * zeta_re + zeta_im * zeta_im;
        let inv_sc = 1.0 / self.c.sqrt();
        match self.kind {
            SpaceKind::Sphere2 => {
                let d = r2 + 1.0;
                Ok(AmbientVector::new3(
                    self.signature(),
                    inv_sc * 2.0 * zeta_re / d,
                    inv_sc * 2.0 * zeta_im / d,
                    inv_sc * (r2 - 1.0) / d,
                ))
            }
            SpaceKind::HyperbolicPlane => {
                if r2 >= 1.0 {
                    return Err(GeomError::Domain("stereographic chart requires |zeta| < 1"));
                }
                let d = 1.0 - r2;
                Ok(AmbientVector::new3(
                    self.signature(),
                    inv_sc * 2.0 * zeta_re / d,
                    inv_sc * 2.0 * zeta_im / d,
                    inv_sc * (1.0 + r2) / d,
                ))
            }
            _ => Err(GeomError::WrongSpaceKind),
        }
    }
}
