//! Seeded random sampling of model-space points and tangents.
//!
//! All verification runs draw from a ChaCha8 generator seeded with a 64-bit
//! integer, so identical seeds reproduce identical samples on every platform.
//! Spheres are sampled by normalizing Gaussian tuples; the quadrics with
//! circle factors sample the spacelike slots Gaussian, draw an angle for the
//! timelike pair, and solve the defining constraint.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ambient::AmbientVector;
use crate::hopf::{GroupElement, GroupKind};
use crate::spaces::{ModelSpace, SpaceKind};

/// The generator every sampler in this crate uses.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard normal deviate by the Box-Muller transform.
pub fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
}

/// A random point of the model space.
pub fn sample_point<R: Rng>(space: &ModelSpace, rng: &mut R) -> AmbientVector {
    let sig = space.signature();
    let scale = 1.0 / space.c.sqrt();
    match space.kind {
        SpaceKind::Sphere2 | SpaceKind::Sphere3 => loop {
            let mut comps = [0.0; 4];
            for c in comps.iter_mut().take(space.dim() + 1) {
                *c = standard_normal(rng);
            }
            let v = AmbientVector::from_slice(sig, &comps[..space.dim() + 1]);
            if v.euclidean_norm() > 1e-3 {
                return space.retract(&v);
            }
        },
        SpaceKind::HyperbolicPlane => {
            let x1 = scale * standard_normal(rng);
            let x2 = scale * standard_normal(rng);
            let x3 = (x1 * x1 + x2 * x2 + scale * scale).sqrt();
            AmbientVector::new3(sig, x1, x2, x3)
        }
        SpaceKind::AntiDeSitter3 => {
            let x1 = scale * standard_normal(rng);
            let x2 = scale * standard_normal(rng);
            let s = (x1 * x1 + x2 * x2 + scale * scale).sqrt();
            let phi = core::f64::consts::TAU * (rng.gen::<f64>() - 0.5);
            AmbientVector::new4(sig, x1, x2, s * phi.cos(), s * phi.sin())
        }
    }
}

/// A random group element. SU(2) is drawn uniformly (normalized Gaussian
/// 4-tuple). SU(1,1) is drawn with the boost part uniform in a radius-0.8
/// disc: unbounded boosts make rotation entries grow quadratically and push
/// products of pairs past machine-precision identity checks, so group-law
/// tests use this bounded distribution.
pub fn sample_group_element<R: Rng>(kind: GroupKind, rng: &mut R) -> GroupElement {
    let point = match kind {
        GroupKind::Su2 => {
            let unit = ModelSpace::sphere3(1.0).expect("c > 0");
            sample_point(&unit, rng)
        }
        GroupKind::Su11 => {
            let rho = 0.8 * rng.gen::<f64>().sqrt();
            let psi = core::f64::consts::TAU * (rng.gen::<f64>() - 0.5);
            let (x1, x2) = (rho * psi.cos(), rho * psi.sin());
            let s = (rho * rho + 1.0).sqrt();
            let phi = core::f64::consts::TAU * (rng.gen::<f64>() - 0.5);
            AmbientVector::new4(
                crate::ambient::Signature::ULTRA_4,
                x1,
                x2,
                s * phi.cos(),
                s * phi.sin(),
            )
        }
    };
    GroupElement::from_model_point(&point).expect("sampled point is on the unit model")
}

/// A random tangent vector at `x` (ambient Gaussian projected tangentially;
/// not normalized, may be timelike on anti-de Sitter space).
pub fn sample_tangent<R: Rng>(space: &ModelSpace, x: &AmbientVector, rng: &mut R) -> AmbientVector {
    let sig = space.signature();
    let mut comps = [0.0; 4];
    for c in comps.iter_mut().take(x.dim()) {
        *c = standard_normal(rng);
    }
    let v = AmbientVector::from_slice(sig, &comps[..x.dim()]);
    space.project_tangent(x, &v)
}

/// A random *spacelike unit* tangent at `x`, drawn as a random combination of
/// the spacelike frame directions on 3-dimensional spaces, or by normalizing
/// a projected Gaussian on surfaces (where every tangent is spacelike).
pub fn sample_unit_spacelike_tangent<R: Rng>(
    space: &ModelSpace,
    x: &AmbientVector,
    rng: &mut R,
) -> AmbientVector {
    match space.kind {
        SpaceKind::Sphere2 | SpaceKind::HyperbolicPlane => loop {
            let v = sample_tangent(space, x, rng);
            let n2 = v.norm_sq();
            if n2 > 1e-6 {
                return v.scale(1.0 / n2.sqrt());
            }
        },
        SpaceKind::Sphere3 | SpaceKind::AntiDeSitter3 => {
            let fp = space.frame_fields(x).expect("x on a 3-dimensional space");
            // combinations of the two spacelike frame legs are spacelike
            let phi = core::f64::consts::TAU * (rng.gen::<f64>() - 0.5);
            fp.frame[0].scale(phi.cos()).add_scaled(phi.sin(), &fp.frame[1])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_points_lie_on_their_spaces() {
        let mut rng = rng_from_seed(7);
        for space in [
            ModelSpace::sphere2(4.0).unwrap(),
            ModelSpace::sphere3(0.25).unwrap(),
            ModelSpace::hyperbolic_plane(2.0).unwrap(),
            ModelSpace::anti_de_sitter3(0.5).unwrap(),
        ] {
            for _ in 0..200 {
                let p = sample_point(&space, &mut rng);
                assert!(space.contains(&p).unwrap(), "{space:?}: {p:?}");
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let space = ModelSpace::anti_de_sitter3(1.0).unwrap();
        let mut a = rng_from_seed(42);
        let mut b = rng_from_seed(42);
        for _ in 0..50 {
            let pa = sample_point(&space, &mut a);
            let pb = sample_point(&space, &mut b);
            assert_eq!(pa, pb);
        }
    }

    #[test]
    fn tangents_are_tangent() {
        let space = ModelSpace::anti_de_sitter3(1.0).unwrap();
        let mut rng = rng_from_seed(3);
        for _ in 0..100 {
            let p = sample_point(&space, &mut rng);
            let v = sample_tangent(&space, &p, &mut rng);
            assert!(p.dot(&v).unwrap().abs() < 1e-12);
            let u = sample_unit_spacelike_tangent(&space, &p, &mut rng);
            assert!((u.norm_sq() - 1.0).abs() < 1e-12);
            assert!(p.dot(&u).unwrap().abs() < 1e-12);
        }
    }
}
