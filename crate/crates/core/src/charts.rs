//! Concrete charts for the finite-difference oracle.
//!
//! Five chart families cover everything the oracle needs:
//!
//! * stereographic charts of the 2-sphere and the hyperbolic plane;
//! * a frame chart `(u1, u2, theta)` of the unit tangent bundle, with fibre
//!   `e = cos(theta) E1 + sin(theta) E2` over a Gram-Schmidt frame `E` of the
//!   stereographic coordinate vectors;
//! * a 4-dimensional chart `(u1, u2, v1, v2)` of the full tangent bundle with
//!   `e = v1 E1 + v2 E2`;
//! * a pole-free two-angles-plus-fibre-angle chart of the 3-sphere built on
//!   the complex pair `(z1, z2) = (sin(eta) e^{i xi1}, cos(eta) e^{i xi2})`;
//! * a flat chart for calibration.
//!
//! Coordinate tangents of an embedding are differentiated by a fourth-order
//! (Richardson-extrapolated) central difference of the closed-form embedding;
//! bundle coordinate vectors are split into horizontal and vertical data by
//! the ambient identity `K = ` tangential part of `de/dt`, which agrees with
//! the definition-level connection map and is cross-checked against it in
//! tests. No Christoffel symbols of the charted metric enter anywhere, so
//! curvature comparisons against closed forms are genuine.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;

use crate::ambient::AmbientVector;
use crate::bundle::{BundlePoint, BundleTangent, CurveDerivative, MetricParams};
use crate::error::{GeomError, Result};
use crate::linalg::SmallMat;
use crate::spaces::{ModelSpace, SpaceKind};
use crate::bundle::berger_metric;

/// Step for first derivatives of closed-form embeddings (Richardson pairs at
/// `h` and `h/2` give fourth-order accuracy).
pub(crate) const EMBED_STEP: f64 = 1e-3;

/// Image of a chart evaluation.
#[derive(Debug, Clone, Copy)]
pub enum ChartPoint {
    Base(AmbientVector),
    Bundle(BundlePoint),
}

impl ChartPoint {
    pub fn base(&self) -> Result<AmbientVector> {
        match self {
            ChartPoint::Base(x) => Ok(*x),
            ChartPoint::Bundle(_) => Err(GeomError::WrongSpaceKind),
        }
    }

    pub fn bundle(&self) -> Result<BundlePoint> {
        match self {
            ChartPoint::Bundle(bp) => Ok(*bp),
            ChartPoint::Base(_) => Err(GeomError::WrongSpaceKind),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum ChartRecipe {
    /// Stereographic chart of a 2-dimensional model space.
    Stereographic(ModelSpace),
    /// `(u1, u2, theta)` frame chart of the unit tangent bundle.
    UnitBundle(ModelSpace),
    /// `(u1, u2, v1, v2)` chart of the full tangent bundle.
    TangentBundle(ModelSpace),
    /// Two angles plus fibre angle on the 3-sphere of curvature `cc`.
    Sphere3Angles(ModelSpace),
    /// Identity chart of flat space (calibration).
    Flat(usize),
}

/// A smooth parametrization of (part of) a manifold, with an explicit open
/// domain box. All evaluations must stay in the interior of the box.
#[derive(Debug, Clone)]
pub struct Chart {
    pub dim: usize,
    pub domain: Vec<(f64, f64)>,
    recipe: ChartRecipe,
}

impl Chart {
    /// Stereographic chart of `Sphere2` or `HyperbolicPlane`. The hyperbolic
    /// box keeps `|zeta| < 0.88` so the chart stays well inside the disc.
    pub fn stereographic(space: ModelSpace) -> Result<Chart> {
        let half = match space.kind {
            SpaceKind::Sphere2 => 1.2,
            SpaceKind::HyperbolicPlane => 0.62,
            _ => return Err(GeomError::WrongSpaceKind),
        };
        Ok(Chart {
            dim: 2,
            domain: alloc::vec![(-half, half); 2],
            recipe: ChartRecipe::Stereographic(space),
        })
    }

    /// Frame chart `(u1, u2, theta)` of the unit tangent bundle over a
    /// 2-dimensional base.
    pub fn unit_bundle(base: ModelSpace) -> Result<Chart> {
        let mut domain = Chart::stereographic(base)?.domain;
        domain.push((-core::f64::consts::PI, core::f64::consts::PI));
        Ok(Chart { dim: 3, domain, recipe: ChartRecipe::UnitBundle(base) })
    }

    /// Chart `(u1, u2, v1, v2)` of the full tangent bundle over a
    /// 2-dimensional base; the fibre box covers lengths well past the unit
    /// bundle in every direction.
    pub fn tangent_bundle(base: ModelSpace) -> Result<Chart> {
        let mut domain = Chart::stereographic(base)?.domain;
        domain.push((-1.7, 1.7));
        domain.push((-1.7, 1.7));
        Ok(Chart { dim: 4, domain, recipe: ChartRecipe::TangentBundle(base) })
    }

    /// Angle chart of the 3-sphere of curvature `cc`, restricted to an
    /// interior box that avoids the `eta in {0, pi/2}` poles.
    pub fn sphere3_angles(cc: f64) -> Result<Chart> {
        let space = ModelSpace::sphere3(cc)?;
        Ok(Chart {
            dim: 3,
            domain: alloc::vec![
                (0.2, core::f64::consts::FRAC_PI_2 - 0.2),
                (-2.9, 2.9),
                (-2.9, 2.9),
            ],
            recipe: ChartRecipe::Sphere3Angles(space),
        })
    }

    /// Identity chart of flat Euclidean space, `dim` 2 or 3.
    pub fn flat(dim: usize) -> Result<Chart> {
        if !(2..=3).contains(&dim) {
            return Err(GeomError::Domain("flat chart supports dimension 2 or 3"));
        }
        Ok(Chart { dim, domain: alloc::vec![(-2.0, 2.0); dim], recipe: ChartRecipe::Flat(dim) })
    }

    /// The base manifold of a bundle chart, or the target space of a base
    /// chart (flat charts have none).
    pub fn space(&self) -> Option<ModelSpace> {
        match self.recipe {
            ChartRecipe::Stereographic(s)
            | ChartRecipe::UnitBundle(s)
            | ChartRecipe::TangentBundle(s)
            | ChartRecipe::Sphere3Angles(s) => Some(s),
            ChartRecipe::Flat(_) => None,
        }
    }

    pub fn is_bundle(&self) -> bool {
        matches!(self.recipe, ChartRecipe::UnitBundle(_) | ChartRecipe::TangentBundle(_))
    }

    /// Distance from `u` to the boundary of the domain box (negative outside).
    pub fn boundary_margin(&self, u: &[f64]) -> f64 {
        let mut m = f64::INFINITY;
        for (ui, (lo, hi)) in u.iter().zip(self.domain.iter()) {
            m = m.min(ui - lo).min(hi - ui);
        }
        m
    }

    fn check_dim(&self, u: &[f64]) -> Result<()> {
        if u.len() != self.dim {
            return Err(GeomError::Domain("parameter tuple has the wrong length"));
        }
        Ok(())
    }

    /// Evaluate the embedding.
    pub fn embed(&self, u: &[f64]) -> Result<ChartPoint> {
        self.check_dim(u)?;
        match self.recipe {
            ChartRecipe::Stereographic(space) => {
                Ok(ChartPoint::Base(space.stereographic_inverse(u[0], u[1])?))
            }
            ChartRecipe::Flat(dim) => {
                let mut c = [0.0; 3];
                c[..dim].copy_from_slice(u);
                Ok(ChartPoint::Base(AmbientVector::new3(
                    crate::ambient::Signature::EUCLIDEAN_3,
                    c[0],
                    c[1],
                    c[2],
                )))
            }
            ChartRecipe::Sphere3Angles(space) => {
                let (eta, xi1, xi2) = (u[0], u[1], u[2]);
                let inv = 1.0 / space.c.sqrt();
                Ok(ChartPoint::Base(AmbientVector::new4(
                    space.signature(),
                    inv * eta.sin() * xi1.cos(),
                    inv * eta.sin() * xi1.sin(),
                    inv * eta.cos() * xi2.cos(),
                    inv * eta.cos() * xi2.sin(),
                )))
            }
            ChartRecipe::UnitBundle(base) => {
                let (x, frame) = base_frame(&base, &u[..2])?;
                let e = frame[0].scale(u[2].cos()).add_scaled(u[2].sin(), &frame[1]);
                Ok(ChartPoint::Bundle(BundlePoint::unit(base, x, e)?))
            }
            ChartRecipe::TangentBundle(base) => {
                let (x, frame) = base_frame(&base, &u[..2])?;
                let e = frame[0].scale(u[2]).add_scaled(u[3], &frame[1]);
                Ok(ChartPoint::Bundle(BundlePoint::new(base, x, e)?))
            }
        }
    }

    /// Coordinate tangents of a *base* chart by fourth-order differencing of
    /// the embedding, projected onto the tangent space when it is known.
    pub fn coordinate_tangents(&self, u: &[f64]) -> Result<Vec<AmbientVector>> {
        self.check_dim(u)?;
        let x = self.embed(u)?.base()?;
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let f = |t: f64| -> Result<AmbientVector> {
                let mut uu = [0.0; 4];
                uu[..self.dim].copy_from_slice(u);
                uu[i] += t;
                self.embed(&uu[..self.dim])?.base()
            };
            let d = richardson(&f, EMBED_STEP)?;
            out.push(match self.space() {
                Some(space) => space.project_tangent(&x, &d),
                None => d,
            });
        }
        Ok(out)
    }

    /// Bundle point and the exact horizontal/vertical splits of the
    /// coordinate vectors of a *bundle* chart.
    ///
    /// The horizontal datum of a coordinate vector is the base derivative of
    /// the embedding; the vertical datum is the tangential part of the fibre
    /// derivative, which is the connection-map image of the coordinate curve.
    pub fn coordinate_splits(&self, u: &[f64]) -> Result<(BundlePoint, Vec<BundleTangent>)> {
        self.check_dim(u)?;
        let bp = self.embed(u)?.bundle()?;
        let base = bp.base;
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let fx = |t: f64| -> Result<AmbientVector> {
                let mut uu = [0.0; 4];
                uu[..self.dim].copy_from_slice(u);
                uu[i] += t;
                Ok(self.embed(&uu[..self.dim])?.bundle()?.x)
            };
            let fe = |t: f64| -> Result<AmbientVector> {
                let mut uu = [0.0; 4];
                uu[..self.dim].copy_from_slice(u);
                uu[i] += t;
                Ok(self.embed(&uu[..self.dim])?.bundle()?.e)
            };
            let x_dot = base.project_tangent(&bp.x, &richardson(&fx, EMBED_STEP)?);
            let e_dot = richardson(&fe, EMBED_STEP)?;
            let vertical = base.project_tangent(&bp.x, &e_dot);
            out.push(BundleTangent::new(bp, x_dot, vertical)?);
        }
        Ok((bp, out))
    }

    /// Raw curve-derivative pairs of the coordinate vectors of a bundle
    /// chart (no split applied).
    pub fn coordinate_raw(&self, u: &[f64]) -> Result<(BundlePoint, Vec<CurveDerivative>)> {
        self.check_dim(u)?;
        let bp = self.embed(u)?.bundle()?;
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let fx = |t: f64| -> Result<AmbientVector> {
                let mut uu = [0.0; 4];
                uu[..self.dim].copy_from_slice(u);
                uu[i] += t;
                Ok(self.embed(&uu[..self.dim])?.bundle()?.x)
            };
            let fe = |t: f64| -> Result<AmbientVector> {
                let mut uu = [0.0; 4];
                uu[..self.dim].copy_from_slice(u);
                uu[i] += t;
                Ok(self.embed(&uu[..self.dim])?.bundle()?.e)
            };
            out.push(CurveDerivative {
                x_dot: richardson(&fx, EMBED_STEP)?,
                e_dot: richardson(&fe, EMBED_STEP)?,
            });
        }
        Ok((bp, out))
    }

    /// The Gram-Schmidt frame of a bundle chart's base point (`E1, E2`).
    pub fn base_frame(&self, u: &[f64]) -> Result<(AmbientVector, [AmbientVector; 2])> {
        match self.recipe {
            ChartRecipe::UnitBundle(base) | ChartRecipe::TangentBundle(base) => {
                base_frame(&base, &u[..2])
            }
            _ => Err(GeomError::WrongSpaceKind),
        }
    }
}

/// Fourth-order central difference: `(4 D_{h/2} - D_h) / 3` with
/// `D_s = (f(s) - f(-s)) / (2 s)`.
fn richardson(f: &dyn Fn(f64) -> Result<AmbientVector>, h: f64) -> Result<AmbientVector> {
    let d = |s: f64| -> Result<AmbientVector> {
        Ok(f(s)?.sub(&f(-s)?).scale(1.0 / (2.0 * s)))
    };
    let dh = d(h)?;
    let dh2 = d(h / 2.0)?;
    Ok(dh2.scale(4.0 / 3.0).add_scaled(-1.0 / 3.0, &dh))
}

/// Stereographic base point and orthonormal tangent frame.
///
/// The stereographic charts are conformal with factor
/// `lambda = 2 / (sqrt(c) (1 +/- |u|^2))` and orthogonal coordinate vectors,
/// so Gram-Schmidt reduces to `E_i = d_i x / lambda`, which has the closed
/// forms below. Keeping the frame analytic matters: a frame built from
/// numeric derivatives would be differentiated twice more on the way to
/// curvature and its rounding noise would dominate the result.
fn base_frame(base: &ModelSpace, u: &[f64]) -> Result<(AmbientVector, [AmbientVector; 2])> {
    let x = base.stereographic_inverse(u[0], u[1])?;
    let sig = base.signature();
    let (u1, u2) = (u[0], u[1]);
    let r2 = u1 * u1 + u2 * u2;
    let frame = match base.kind {
        SpaceKind::Sphere2 => {
            let d = 1.0 + r2;
            [
                AmbientVector::new3(sig, 1.0 - 2.0 * u1 * u1 / d, -2.0 * u1 * u2 / d, 2.0 * u1 / d),
                AmbientVector::new3(sig, -2.0 * u1 * u2 / d, 1.0 - 2.0 * u2 * u2 / d, 2.0 * u2 / d),
            ]
        }
        SpaceKind::HyperbolicPlane => {
            let d = 1.0 - r2;
            [
                AmbientVector::new3(sig, 1.0 + 2.0 * u1 * u1 / d, 2.0 * u1 * u2 / d, 2.0 * u1 / d),
                AmbientVector::new3(sig, 2.0 * u1 * u2 / d, 1.0 + 2.0 * u2 * u2 / d, 2.0 * u2 / d),
            ]
        }
        _ => return Err(GeomError::WrongSpaceKind),
    };
    Ok((x, frame))
}

/// Which metric is laid over a chart.
#[derive(Debug, Clone, Copy)]
pub enum MetricKind {
    /// Metric induced by the ambient scalar product on coordinate tangents.
    Induced,
    /// The bundle metric family evaluated on split coordinate lifts.
    Bundle(MetricParams),
    /// Berger metric with parameter `eps` (on a 3-sphere chart).
    Berger(f64),
}

/// A chart together with a rule producing the metric component matrix at any
/// interior point.
#[derive(Debug, Clone)]
pub struct MetricField {
    pub chart: Chart,
    pub kind: MetricKind,
}

impl MetricField {
    pub fn induced(chart: Chart) -> MetricField {
        MetricField { chart, kind: MetricKind::Induced }
    }

    pub fn bundle(chart: Chart, params: MetricParams) -> Result<MetricField> {
        if !chart.is_bundle() {
            return Err(GeomError::WrongSpaceKind);
        }
        Ok(MetricField { chart, kind: MetricKind::Bundle(params) })
    }

    pub fn berger(chart: Chart, epsilon: f64) -> Result<MetricField> {
        if !(epsilon > 0.0) {
            return Err(GeomError::Domain("Berger parameter must be positive"));
        }
        match chart.space().map(|s| s.kind) {
            Some(SpaceKind::Sphere3) => {}
            _ => return Err(GeomError::WrongSpaceKind),
        }
        Ok(MetricField { chart, kind: MetricKind::Berger(epsilon) })
    }

    /// Raw component matrix `g_ij(u)` (no boundary checking; see
    /// [`crate::fd::metric_components`] for the checked entry point).
    pub fn eval(&self, u: &[f64]) -> Result<SmallMat> {
        let n = self.chart.dim;
        let mut g = SmallMat::zeros(n);
        match self.kind {
            MetricKind::Induced => {
                let t = self.chart.coordinate_tangents(u)?;
                for i in 0..n {
                    for j in i..n {
                        let v = t[i].dot(&t[j])?;
                        g.set(i, j, v);
                        g.set(j, i, v);
                    }
                }
            }
            MetricKind::Berger(eps) => {
                let space = self.chart.space().ok_or(GeomError::WrongSpaceKind)?;
                let x = self.chart.embed(u)?.base()?;
                let t = self.chart.coordinate_tangents(u)?;
                for i in 0..n {
                    for j in i..n {
                        let v = berger_metric(eps, &space, &x, &t[i], &t[j])?;
                        g.set(i, j, v);
                        g.set(j, i, v);
                    }
                }
            }
            MetricKind::Bundle(params) => {
                let (_bp, splits) = self.chart.coordinate_splits(u)?;
                for i in 0..n {
                    for j in i..n {
                        let v = params.inner(&splits[i], &splits[j])?;
                        g.set(i, j, v);
                        g.set(j, i, v);
                    }
                }
            }
        }
        Ok(g)
    }
}
