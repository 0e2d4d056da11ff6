//! Chart-based tensor calculus by central finite differences: metric
//! components, Christoffel symbols, the Riemann tensor, sectional curvature,
//! and numeric pullbacks.
//!
//! This module is the brute-force oracle against which every closed form in
//! the crate is tested. It deliberately never consults
//! [`crate::curvature`]: coordinate tangents are split by the definition of
//! the connection map, metric components come from the metric family itself,
//! and all derivative structure is finite differencing of those evaluations.


use crate::ambient::AmbientVector;
use crate::bundle::{connection_split, BundlePoint, BundleTangent, CurveDerivative, MetricParams};
use crate::charts::{Chart, MetricField};
use crate::error::{GeomError, Result};
use crate::hopf::{covering_map, covering_source};
use crate::linalg::SmallMat;
use crate::spaces::{ModelSpace, SpaceKind};

/// Default step for second-derivative paths (Christoffel and Riemann).
pub const DEFAULT_SECOND_ORDER_STEP: f64 = 1e-3;
/// Default step for first-derivative paths (differentials and pullbacks).
pub const DEFAULT_FIRST_ORDER_STEP: f64 = 1e-5;

/// Finite-difference configuration.
#[derive(Debug, Clone, Copy)]
pub struct FDConfig {
    pub step: f64,
    pub richardson: bool,
}

impl Default for FDConfig {
    fn default() -> Self {
        FDConfig { step: DEFAULT_SECOND_ORDER_STEP, richardson: true }
    }
}

impl FDConfig {
    pub fn second_order() -> Self {
        Self::default()
    }

    pub fn first_order() -> Self {
        FDConfig { step: DEFAULT_FIRST_ORDER_STEP, richardson: false }
    }

    pub fn with_step(step: f64) -> Self {
        FDConfig { step, richardson: true }
    }

    fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.step < 1e-1) {
            return Err(GeomError::Domain("finite-difference step must lie in (0, 0.1)"));
        }
        Ok(())
    }
}

/// Christoffel symbols `gamma[k][i][j]`, symmetric in `(i, j)`.
#[derive(Debug, Clone, Copy)]
pub struct Christoffel {
    pub n: usize,
    pub gamma: [[[f64; 4]; 4]; 4],
}

/// Curvature tensor `r[l][i][j][k]` with
/// `R(d_i, d_j) d_k = r[l][i][j][k] d_l`, antisymmetric in `(i, j)`.
#[derive(Debug, Clone)]
pub struct Riemann {
    pub n: usize,
    pub r: [[[[f64; 4]; 4]; 4]; 4],
}

fn check_interior(field: &MetricField, u: &[f64], step: f64) -> Result<()> {
    if field.chart.boundary_margin(u) < 10.0 * step {
        return Err(GeomError::BoundaryProximity);
    }
    Ok(())
}

/// Metric component matrix `g_ij(u)`, validated symmetric and nondegenerate.
/// Coordinate vectors of bundle charts are split into horizontal and
/// vertical lifts before the metric family is applied.
pub fn metric_components(field: &MetricField, u: &[f64]) -> Result<SmallMat> {
    check_interior(field, u, DEFAULT_SECOND_ORDER_STEP)?;
    let g = field.eval(u)?;
    if g.symmetry_residual() > 1e-13 {
        return Err(GeomError::Domain("metric evaluation lost symmetry"));
    }
    if g.det().abs() <= 1e-10 {
        return Err(GeomError::SingularMetric);
    }
    Ok(g)
}

/// Partial derivative of the metric matrix in direction `i`.
fn metric_derivative(field: &MetricField, u: &[f64], i: usize, cfg: &FDConfig) -> Result<SmallMat> {
    let n = field.chart.dim;
    let diff = |s: f64| -> Result<SmallMat> {
        let mut up = [0.0; 4];
        up[..n].copy_from_slice(u);
        up[i] += s;
        let gp = field.eval(&up[..n])?;
        up[i] -= 2.0 * s;
        let gm = field.eval(&up[..n])?;
        let mut d = SmallMat::zeros(n);
        for a in 0..n {
            for b in 0..n {
                d.set(a, b, (gp.get(a, b) - gm.get(a, b)) / (2.0 * s));
            }
        }
        Ok(d)
    };
    let dh = diff(cfg.step)?;
    if !cfg.richardson {
        return Ok(dh);
    }
    let dh2 = diff(cfg.step / 2.0)?;
    let mut out = SmallMat::zeros(n);
    for a in 0..n {
        for b in 0..n {
            out.set(a, b, (4.0 * dh2.get(a, b) - dh.get(a, b)) / 3.0);
        }
    }
    Ok(out)
}

/// Christoffel symbols of the charted metric by central differences:
/// `gamma^k_ij = (1/2) g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)`.
pub fn christoffel_fd(field: &MetricField, u: &[f64], cfg: &FDConfig) -> Result<Christoffel> {
    cfg.validate()?;
    check_interior(field, u, cfg.step)?;
    let n = field.chart.dim;
    let g = metric_components(field, u)?;
    let ginv = g.inverse()?;
    let mut dg = [SmallMat::zeros(n); 4];
    for (i, d) in dg.iter_mut().enumerate().take(n) {
        *d = metric_derivative(field, u, i, cfg)?;
    }
    let mut gamma = [[[0.0; 4]; 4]; 4];
    for k in 0..n {
        for i in 0..n {
            for j in i..n {
                let mut acc = 0.0;
                for l in 0..n {
                    acc += ginv.get(k, l)
                        * (dg[i].get(j, l) + dg[j].get(i, l) - dg[l].get(i, j));
                }
                gamma[k][i][j] = 0.5 * acc;
                gamma[k][j][i] = gamma[k][i][j];
            }
        }
    }
    Ok(Christoffel { n, gamma })
}

/// Curvature tensor by differencing the Christoffel symbols:
/// `R^l_ijk = d_i gamma^l_jk - d_j gamma^l_ik
///           + gamma^l_im gamma^m_jk - gamma^l_jm gamma^m_ik`.
pub fn riemann_fd(field: &MetricField, u: &[f64], cfg: &FDConfig) -> Result<Riemann> {
    cfg.validate()?;
    check_interior(field, u, cfg.step)?;
    let n = field.chart.dim;
    let gamma0 = christoffel_fd(field, u, cfg)?;

    // first derivatives of gamma, one direction at a time
    let dgamma = |i: usize| -> Result<[[[f64; 4]; 4]; 4]> {
        let diff = |s: f64| -> Result<[[[f64; 4]; 4]; 4]> {
            let mut up = [0.0; 4];
            up[..n].copy_from_slice(u);
            up[i] += s;
            let gp = christoffel_fd(field, &up[..n], cfg)?;
            up[i] -= 2.0 * s;
            let gm = christoffel_fd(field, &up[..n], cfg)?;
            let mut d = [[[0.0; 4]; 4]; 4];
            for k in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        d[k][a][b] = (gp.gamma[k][a][b] - gm.gamma[k][a][b]) / (2.0 * s);
                    }
                }
            }
            Ok(d)
        };
        let dh = diff(cfg.step)?;
        if !cfg.richardson {
            return Ok(dh);
        }
        let dh2 = diff(cfg.step / 2.0)?;
        let mut out = [[[0.0; 4]; 4]; 4];
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    out[k][a][b] = (4.0 * dh2[k][a][b] - dh[k][a][b]) / 3.0;
                }
            }
        }
        Ok(out)
    };

    let mut dg = [[[[0.0; 4]; 4]; 4]; 4];
    for (i, d) in dg.iter_mut().enumerate().take(n) {
        *d = dgamma(i)?;
    }

    let mut r = [[[[0.0; 4]; 4]; 4]; 4];
    for l in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = dg[i][l][j][k] - dg[j][l][i][k];
                    for m in 0..n {
                        acc += gamma0.gamma[l][i][m] * gamma0.gamma[m][j][k]
                            - gamma0.gamma[l][j][m] * gamma0.gamma[m][i][k];
                    }
                    r[l][i][j][k] = acc;
                }
            }
        }
    }
    Ok(Riemann { n, r })
}

/// Sectional curvature of the coordinate-expressed plane `(v, w)`:
/// `K = <R(v, w) w, v> / (g(v,v) g(w,w) - g(v,w)^2)`.
///
/// Degenerate (lightlike) planes are rejected, not regularized.
pub fn sectional_fd(
    field: &MetricField,
    u: &[f64],
    v: &[f64],
    w: &[f64],
    cfg: &FDConfig,
) -> Result<f64> {
    let n = field.chart.dim;
    let g = metric_components(field, u)?;
    let pair = |a: &[f64], b: &[f64]| -> f64 {
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += g.get(i, j) * a[i] * b[j];
            }
        }
        acc
    };
    let denom = pair(v, v) * pair(w, w) - pair(v, w) * pair(v, w);
    if denom.abs() <= 1e-8 {
        return Err(GeomError::DegeneratePlane);
    }
    let riem = riemann_fd(field, u, cfg)?;
    // lowered tensor low[i][j][k][m] = <R(d_i, d_j) d_k, d_m>
    let mut low = [[[[0.0; 4]; 4]; 4]; 4];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut acc = 0.0;
                    for l in 0..n {
                        acc += g.get(m, l) * riem.r[l][i][j][k];
                    }
                    low[i][j][k][m] = acc;
                }
            }
        }
    }
    // Project onto the algebraic curvature symmetry class (antisymmetric in
    // each index pair, symmetric under pair exchange). The true tensor is
    // fixed by this projection; finite-difference noise in the complementary
    // subspace would otherwise break exact plane invariance.
    let sym = |i: usize, j: usize, k: usize, m: usize| -> f64 {
        (low[i][j][k][m] - low[j][i][k][m] - low[i][j][m][k] + low[j][i][m][k]
            + low[k][m][i][j]
            - low[m][k][i][j]
            - low[k][m][j][i]
            + low[m][k][j][i])
            / 8.0
    };
    let mut numer = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    numer += sym(i, j, k, m) * v[i] * w[j] * w[k] * v[m];
                }
            }
        }
    }
    Ok(numer / denom)
}

/// Numeric pullback of the bundle metric under a map from a base chart into
/// a tangent bundle: `(F* h)_ij(u) = h(dF d_i, dF d_j)` with `dF` computed by
/// central differences of the composed map and split by the connection map.
pub fn pullback_fd(
    chart: &Chart,
    map: &dyn Fn(&AmbientVector) -> Result<BundlePoint>,
    params: &MetricParams,
    u: &[f64],
    cfg: &FDConfig,
) -> Result<SmallMat> {
    cfg.validate()?;
    if chart.boundary_margin(u) < 10.0 * cfg.step {
        return Err(GeomError::BoundaryProximity);
    }
    let n = chart.dim;
    let bp0 = map(&chart.embed(u)?.base()?)?;
    let mut images = [BundleTangent::zero(bp0); 4];
    for (i, img) in images.iter_mut().enumerate().take(n) {
        let at = |s: f64| -> Result<BundlePoint> {
            let mut up = [0.0; 4];
            up[..n].copy_from_slice(u);
            up[i] += s;
            map(&chart.embed(&up[..n])?.base()?)
        };
        let p = at(cfg.step)?;
        let m = at(-cfg.step)?;
        let raw = CurveDerivative {
            x_dot: p.x.sub(&m.x).scale(1.0 / (2.0 * cfg.step)),
            e_dot: p.e.sub(&m.e).scale(1.0 / (2.0 * cfg.step)),
        };
        let (x, y) = connection_split(&bp0, &raw)?;
        *img = BundleTangent::new(bp0, x, y)?;
    }
    let mut g = SmallMat::zeros(n);
    for i in 0..n {
        for j in i..n {
            let v = params.inner(&images[i], &images[j])?;
            g.set(i, j, v);
            g.set(j, i, v);
        }
    }
    Ok(g)
}

/// Numeric differential of the covering map along `v` at `p`: central
/// differences on the ambient curve `retract(p + t v)` with step `1e-5`,
/// split by the connection map at `covering_map(p)`.
pub fn covering_differential_numeric(
    p: &AmbientVector,
    c: f64,
    v: &AmbientVector,
) -> Result<BundleTangent> {
    let source = covering_source(p.signature(), c)?;
    let bp0 = covering_map(p, c)?;
    let h = DEFAULT_FIRST_ORDER_STEP;
    let at = |s: f64| -> Result<BundlePoint> {
        covering_map(&source.retract(&p.add_scaled(s, v)), c)
    };
    let plus = at(h)?;
    let minus = at(-h)?;
    let raw = CurveDerivative {
        x_dot: plus.x.sub(&minus.x).scale(1.0 / (2.0 * h)),
        e_dot: plus.e.sub(&minus.e).scale(1.0 / (2.0 * h)),
    };
    let (x, y) = connection_split(&bp0, &raw)?;
    BundleTangent::new(bp0, x, y)
}

/// Which differential route a Gram assembly uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferentialRoute {
    Closed,
    Numeric,
}

/// Gram matrix of the covering differential on the global frame of the
/// source space under the bundle metric: entry `(i, j)` is
/// `h(dF x_i, dF x_j)`.
pub fn covering_frame_gram(
    p: &AmbientVector,
    c: f64,
    params: &MetricParams,
    route: DifferentialRoute,
) -> Result<SmallMat> {
    let source = covering_source(p.signature(), c)?;
    let frame = source.frame_fields(p)?.frame;
    let mut images = [BundleTangent::zero(covering_map(p, c)?); 3];
    for (i, img) in images.iter_mut().enumerate() {
        *img = match route {
            DifferentialRoute::Closed => crate::hopf::covering_differential(p, c, &frame[i])?,
            DifferentialRoute::Numeric => covering_differential_numeric(p, c, &frame[i])?,
        };
    }
    let mut g = SmallMat::zeros(3);
    for i in 0..3 {
        for j in i..3 {
            let v = params.inner(&images[i], &images[j])?;
            g.set(i, j, v);
            g.set(j, i, v);
        }
    }
    Ok(g)
}

/// Chart coordinates of a split bundle tangent at `u`: solves
/// `sum_k a^k Z_k = z` against the coordinate splits `Z_k` by least squares
/// in the base frame (the residual vanishes for genuine tangents).
pub fn lift_in_chart_coordinates(chart: &Chart, u: &[f64], z: &BundleTangent) -> Result<[f64; 4]> {
    let n = chart.dim;
    let (bp, splits) = chart.coordinate_splits(u)?;
    if !bp.same_point(&z.at) {
        return Err(GeomError::BasePointMismatch);
    }
    let (_x, frame) = chart.base_frame(u)?;
    // rows: horizontal and vertical data against the two frame vectors
    let row = |t: &BundleTangent| -> Result<[f64; 4]> {
        Ok([
            t.horizontal.dot(&frame[0])?,
            t.horizontal.dot(&frame[1])?,
            t.vertical.dot(&frame[0])?,
            t.vertical.dot(&frame[1])?,
        ])
    };
    let mut cols = [[0.0; 4]; 4];
    for (k, s) in splits.iter().enumerate() {
        cols[k] = row(s)?;
    }
    let b = row(z)?;
    // normal equations M^T M a = M^T b with M[r][k] = cols[k][r]
    let mut mtm = SmallMat::zeros(n);
    let mut rhs = [0.0; 4];
    for k in 0..n {
        for l in 0..n {
            let mut acc = 0.0;
            for r in 0..4 {
                acc += cols[k][r] * cols[l][r];
            }
            mtm.set(k, l, acc);
        }
        let mut acc = 0.0;
        for r in 0..4 {
            acc += cols[k][r] * b[r];
        }
        rhs[k] = acc;
    }
    mtm.solve(&rhs[..n])
}

/// Finite-difference evaluation of the bundle connection
/// `nabla_{X^(h|v)} (lift of Y)` at a chart point, where `Y` is extended by
/// parallel transport from the base point (so its base derivative vanishes
/// there, matching the pointwise closed forms).
///
/// The directional term differences the chart coordinates of the extended
/// lift field along the direction; the Christoffel term contracts
/// [`christoffel_fd`]. Nothing here touches the closed-form connection.
pub fn connection_fd(
    field: &MetricField,
    u: &[f64],
    direction_vertical: bool,
    field_vertical: bool,
    x: &AmbientVector,
    y: &AmbientVector,
    cfg: &FDConfig,
) -> Result<BundleTangent> {
    let chart = &field.chart;
    let n = chart.dim;
    let (bp, splits) = chart.coordinate_splits(u)?;
    let base = bp.base;
    let zero = AmbientVector::zero(bp.x.signature());

    let direction = if direction_vertical {
        BundleTangent::new(bp, zero, *x)?
    } else {
        BundleTangent::new(bp, *x, zero)?
    };
    let a = lift_in_chart_coordinates(chart, u, &direction)?;

    // chart coordinates of the extended lift field at u'
    let coords_at = |up: &[f64]| -> Result<[f64; 4]> {
        let bpp = chart.embed(up)?.bundle()?;
        let ext = base.transport_between(&bp.x, y, &bpp.x)?;
        let lift = if field_vertical {
            BundleTangent::new(bpp, zero, ext)?
        } else {
            BundleTangent::new(bpp, ext, zero)?
        };
        lift_in_chart_coordinates(chart, up, &lift)
    };

    let h = DEFAULT_FIRST_ORDER_STEP;
    let shift = |t: f64| -> Result<[f64; 4]> {
        let mut up = [0.0; 4];
        up[..n].copy_from_slice(u);
        for i in 0..n {
            up[i] += t * a[i];
        }
        coords_at(&up[..n])
    };
    let bp_coords = coords_at(u)?;
    let plus = shift(h)?;
    let minus = shift(-h)?;

    let gamma = christoffel_fd(field, u, cfg)?;
    let mut out = BundleTangent::zero(bp);
    for k in 0..n {
        let deriv = (plus[k] - minus[k]) / (2.0 * h);
        let mut gterm = 0.0;
        for i in 0..n {
            for j in 0..n {
                gterm += a[i] * bp_coords[j] * gamma.gamma[k][i][j];
            }
        }
        out = out.add(&splits[k].scale(deriv + gterm));
    }
    Ok(out)
}

/// Analytic Christoffel symbols of the stereographic charts (conformal
/// metric `lambda^2 delta` with `lambda = (2/sqrt(c)) / (1 +/- |u|^2)`).
/// Calibration reference for [`christoffel_fd`].
pub fn stereographic_christoffel_exact(space: &ModelSpace, u: &[f64]) -> Result<Christoffel> {
    let r2 = u[0] * u[0] + u[1] * u[1];
    // phi = ln lambda: -ln(1 + r2) on the sphere, -ln(1 - r2) hyperbolic
    let (num_sign, den) = match space.kind {
        SpaceKind::Sphere2 => (-1.0, 1.0 + r2),
        SpaceKind::HyperbolicPlane => (1.0, 1.0 - r2),
        _ => return Err(GeomError::WrongSpaceKind),
    };
    let phi = [num_sign * 2.0 * u[0] / den, num_sign * 2.0 * u[1] / den];
    let mut gamma = [[[0.0; 4]; 4]; 4];
    for k in 0..2 {
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = 0.0;
                if i == k {
                    acc += phi[j];
                }
                if j == k {
                    acc += phi[i];
                }
                if i == j {
                    acc -= phi[k];
                }
                gamma[k][i][j] = acc;
            }
        }
    }
    Ok(Christoffel { n: 2, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charts::MetricField;

    #[test]
    fn flat_chart_is_flat() {
        let field = MetricField::induced(Chart::flat(3).unwrap());
        let cfg = FDConfig::default();
        let u = [0.2, -0.3, 0.5];
        let gamma = christoffel_fd(&field, &u, &cfg).unwrap();
        let mut worst: f64 = 0.0;
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    worst = worst.max(gamma.gamma[k][i][j].abs());
                }
            }
        }
        assert!(worst < 1e-10, "flat Christoffels = {worst:e}");

        let riem = riemann_fd(&field, &u, &cfg).unwrap();
        let mut worst: f64 = 0.0;
        for l in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        worst = worst.max(riem.r[l][i][j][k].abs());
                    }
                }
            }
        }
        assert!(worst < 1e-8, "flat Riemann = {worst:e}");
    }

    #[test]
    fn stereographic_christoffels_match_conformal_formula() {
        for space in [
            ModelSpace::sphere2(1.0).unwrap(),
            ModelSpace::hyperbolic_plane(1.0).unwrap(),
        ] {
            let field = MetricField::induced(Chart::stereographic(space).unwrap());
            let cfg = FDConfig::default();
            let u = [0.31, -0.22];
            let fd = christoffel_fd(&field, &u, &cfg).unwrap();
            let exact = stereographic_christoffel_exact(&space, &u).unwrap();
            for k in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        let err = (fd.gamma[k][i][j] - exact.gamma[k][i][j]).abs();
                        assert!(err < 1e-6, "{space:?} gamma[{k}][{i}][{j}] err {err:e}");
                    }
                }
            }
        }
    }

    #[test]
    fn base_sectional_curvatures() {
        let cfg = FDConfig::default();
        for (space, want) in [
            (ModelSpace::sphere2(4.0).unwrap(), 4.0),
            (ModelSpace::sphere2(1.0).unwrap(), 1.0),
            (ModelSpace::hyperbolic_plane(4.0).unwrap(), -4.0),
            (ModelSpace::hyperbolic_plane(1.0).unwrap(), -1.0),
        ] {
            let field = MetricField::induced(Chart::stereographic(space).unwrap());
            let k = sectional_fd(&field, &[0.2, -0.1], &[1.0, 0.0], &[0.0, 1.0], &cfg).unwrap();
            assert!((k - want).abs() < 1e-5, "{space:?}: K = {k}, want {want}");
        }
    }

    #[test]
    fn riemann_constant_curvature_pattern() {
        // lowered tensor equals c (g_ik g_jl - g_il g_jk) on the sphere
        let space = ModelSpace::sphere2(2.0).unwrap();
        let field = MetricField::induced(Chart::stereographic(space).unwrap());
        let cfg = FDConfig::default();
        let u = [0.15, 0.4];
        let g = metric_components(&field, &u).unwrap();
        let riem = riemann_fd(&field, &u, &cfg).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        // R_{lijk} = g_lm R^m_ijk; constant-curvature model:
                        // <R(d_i, d_j) d_k, d_l> = c (g_jk g_il - g_ik g_jl)
                        let mut lowered = 0.0;
                        for m in 0..2 {
                            lowered += g.get(l, m) * riem.r[m][i][j][k];
                        }
                        let want = 2.0 * (g.get(j, k) * g.get(i, l) - g.get(i, k) * g.get(j, l));
                        assert!(
                            (lowered - want).abs() < 1e-5,
                            "R_({l}{i}{j}{k}) = {lowered}, want {want}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sectional_is_plane_invariant() {
        let base = ModelSpace::sphere2(4.0).unwrap();
        let params = MetricParams::definite(1.3, 0.7, 4.0).unwrap();
        let field = MetricField::bundle(Chart::unit_bundle(base).unwrap(), params).unwrap();
        let cfg = FDConfig::default();
        let u = [0.2, 0.1, 0.4];
        let v = [1.0, 0.3, -0.2];
        let w = [0.1, -0.8, 0.5];
        let k1 = sectional_fd(&field, &u, &v, &w, &cfg).unwrap();
        // replace by (2v + w, -v + 3w)
        let v2 = [2.0 * v[0] + w[0], 2.0 * v[1] + w[1], 2.0 * v[2] + w[2]];
        let w2 = [-v[0] + 3.0 * w[0], -v[1] + 3.0 * w[1], -v[2] + 3.0 * w[2]];
        let k2 = sectional_fd(&field, &u, &v2, &w2, &cfg).unwrap();
        assert!((k1 - k2).abs() < 1e-8, "plane invariance broke: {k1} vs {k2}");
    }

    #[test]
    fn degenerate_plane_rejected() {
        let field = MetricField::induced(Chart::flat(2).unwrap());
        let cfg = FDConfig::default();
        assert!(matches!(
            sectional_fd(&field, &[0.0, 0.0], &[1.0, 0.0], &[1.0, 0.0], &cfg),
            Err(GeomError::DegeneratePlane)
        ));
    }

    #[test]
    fn boundary_proximity_rejected() {
        let field = MetricField::induced(Chart::flat(2).unwrap());
        assert!(matches!(
            metric_components(&field, &[1.9999, 0.0]),
            Err(GeomError::BoundaryProximity)
        ));
    }

    #[test]
    fn christoffel_halving_converges_at_second_order() {
        let space = ModelSpace::sphere2(1.0).unwrap();
        let field = MetricField::induced(Chart::stereographic(space).unwrap());
        let u = [0.31, -0.22];
        let exact = stereographic_christoffel_exact(&space, &u).unwrap();
        let err_at = |h: f64| -> f64 {
            let cfg = FDConfig { step: h, richardson: false };
            let fd = christoffel_fd(&field, &u, &cfg).unwrap();
            let mut worst: f64 = 0.0;
            for k in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        worst = worst.max((fd.gamma[k][i][j] - exact.gamma[k][i][j]).abs());
                    }
                }
            }
            worst
        };
        let e1 = err_at(2e-3);
        let e2 = err_at(1e-3);
        assert!(
            e1 > 3.0 * e2 || e2 < 1e-9,
            "halving the step should cut the error at least 3x: {e1:e} -> {e2:e}"
        );
    }
}
