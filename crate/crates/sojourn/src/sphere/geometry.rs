//! Points on S^{d-1}, spherical coordinates and the theta-first order.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::processes::Seed;

use super::SphereError;

/// How far a coordinate vector's norm may stray from 1.
const UNIT_NORM_TOLERANCE: f64 = 1e-12;

/// A point on the unit sphere S^{d-1} in Cartesian coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint {
    coords: Vec<f64>,
}

impl SpherePoint {
    /// Wraps a coordinate vector after checking dimension, finiteness and
    /// unit norm (within 1e-12).
    pub fn new(coords: Vec<f64>) -> Result<Self, SphereError> {
        if coords.len() < 2 {
            return Err(SphereError::InvalidDimension { d: coords.len() });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(SphereError::InvalidCoordinates {
                reason: "coordinates must be finite",
            });
        }
        let norm = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > UNIT_NORM_TOLERANCE {
            return Err(SphereError::NotUnitNorm { norm });
        }
        Ok(Self { coords })
    }

    /// Ambient dimension d.
    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    /// Cartesian coordinates, length d.
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// The north pole e_d = (0, ..., 0, 1), the conventional field origin;
    /// its azimuth is 0.
    pub fn north_pole(d: usize) -> Result<Self, SphereError> {
        if d < 2 {
            return Err(SphereError::InvalidDimension { d });
        }
        let mut coords = vec![0.0; d];
        coords[d - 1] = 1.0;
        Ok(Self { coords })
    }

    /// Euclidean dot product with another point of the same dimension.
    pub fn dot(&self, other: &SpherePoint) -> Result<f64, SphereError> {
        if self.dimension() != other.dimension() {
            return Err(SphereError::DimensionMismatch {
                left: self.dimension(),
                right: other.dimension(),
            });
        }
        Ok(dot_slices(&self.coords, &other.coords))
    }
}

/// Spherical coordinates of a point: d-2 polar angles in [0, pi) and an
/// azimuth in [0, 2 pi).
///
/// The flag marks degenerate points, where the azimuthal plane projection
/// vanishes and the representation is a convention (theta reported as 0,
/// vanished polar angles reported as 0) rather than an inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalAngles {
    phis: Vec<f64>,
    theta: f64,
    degenerate: bool,
}

impl SphericalAngles {
    /// Builds an angle vector for dimension phis.len() + 2, validating the
    /// ranges phi in [0, pi) and theta in [0, 2 pi).
    pub fn new(phis: Vec<f64>, theta: f64) -> Result<Self, SphereError> {
        if phis.iter().any(|p| !p.is_finite() || !(0.0..PI).contains(p)) {
            return Err(SphereError::InvalidAngles {
                reason: "polar angles must lie in [0, pi)",
            });
        }
        if !theta.is_finite() || !(0.0..TAU).contains(&theta) {
            return Err(SphereError::InvalidAngles {
                reason: "azimuth must lie in [0, 2 pi)",
            });
        }
        let degenerate = phis.contains(&0.0);
        Ok(Self {
            phis,
            theta,
            degenerate,
        })
    }

    /// Polar angles phi_1, ..., phi_{d-2}.
    pub fn phis(&self) -> &[f64] {
        &self.phis
    }

    /// Azimuth theta in [0, 2 pi).
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Ambient dimension these angles describe.
    pub fn dimension(&self) -> usize {
        self.phis.len() + 2
    }

    /// Whether the angles are a convention for a degenerate point rather
    /// than a faithful chart value.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        self.theta.total_cmp(&other.theta).then_with(|| {
            for (a, b) in self.phis.iter().zip(&other.phis) {
                match a.total_cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

/// Spherical angles of an arbitrary nonzero vector, without normalizing it.
///
/// The angles of x and of cx agree for every c > 0, which is what makes
/// normalizing a Gaussian vector a uniform sample with uniform azimuth.
/// The zero vector (and, in dimension >= 3, any vector whose last two
/// coordinates both vanish) is degenerate and comes back flagged.
pub fn vector_angles(coords: &[f64]) -> Result<SphericalAngles, SphereError> {
    let d = coords.len();
    if d < 2 {
        return Err(SphereError::InvalidDimension { d });
    }
    if coords.iter().any(|c| !c.is_finite()) {
        return Err(SphereError::InvalidCoordinates {
            reason: "coordinates must be finite",
        });
    }

    // suffix_sq[k] = x_k^2 + ... + x_{d-1}^2 (0-based)
    let mut suffix_sq = vec![0.0; d + 1];
    for k in (0..d).rev() {
        suffix_sq[k] = coords[k] * coords[k] + suffix_sq[k + 1];
    }
    let degenerate = suffix_sq[d - 2] == 0.0;

    let mut phis = Vec::with_capacity(d.saturating_sub(2));
    for k in 0..d - 2 {
        let tail = suffix_sq[k + 1].sqrt();
        let mut phi = tail.atan2(coords[k]);
        if phi >= PI {
            // only reachable when the whole tail vanishes; part of the
            // degenerate convention
            phi = 0.0;
        }
        phis.push(phi);
    }

    let theta = if degenerate {
        0.0
    } else {
        let raw = coords[d - 2].atan2(coords[d - 1]);
        if raw < 0.0 {
            raw + TAU
        } else {
            raw
        }
    };

    Ok(SphericalAngles {
        phis,
        theta,
        degenerate,
    })
}

/// Spherical angles of a point on the sphere.
pub fn to_spherical(p: &SpherePoint) -> SphericalAngles {
    vector_angles(p.coords()).expect("sphere points always have computable angles")
}

/// The point with the given spherical angles in dimension d.
pub fn from_spherical(a: &SphericalAngles, d: usize) -> Result<SpherePoint, SphereError> {
    if a.dimension() != d {
        return Err(SphereError::DimensionMismatch {
            left: a.dimension(),
            right: d,
        });
    }
    let mut coords = vec![0.0; d];
    let mut sine_product = 1.0;
    for (k, &phi) in a.phis.iter().enumerate() {
        coords[k] = phi.cos() * sine_product;
        sine_product *= phi.sin();
    }
    coords[d - 2] = a.theta.sin() * sine_product;
    coords[d - 1] = a.theta.cos() * sine_product;
    Ok(SpherePoint { coords })
}

/// n independent uniform points on S^{d-1}, as normalized Gaussian vectors.
pub fn uniform_sphere_sample(
    d: usize,
    n: usize,
    seed: Seed,
) -> Result<Vec<SpherePoint>, SphereError> {
    if d < 2 {
        return Err(SphereError::InvalidDimension { d });
    }
    if n == 0 {
        return Err(SphereError::EmptyPointList);
    }
    let mut rng = seed.rng();
    Ok((0..n).map(|_| sample_unit_point(d, &mut rng)).collect())
}

pub(crate) fn sample_unit_point(d: usize, rng: &mut ChaCha8Rng) -> SpherePoint {
    let mut coords = vec![0.0; d];
    fill_unit_vector(rng, &mut coords);
    SpherePoint { coords }
}

// Overwrites the buffer with a uniform point of dimension buffer length.
pub(crate) fn fill_unit_vector(rng: &mut ChaCha8Rng, out: &mut [f64]) {
    loop {
        let mut norm_sq = 0.0;
        for v in out.iter_mut() {
            let z: f64 = rng.sample(StandardNormal);
            *v = z;
            norm_sq += z * z;
        }
        // a redraw guard against the astronomically unlikely underflow
        if norm_sq > 1e-280 {
            let inv = 1.0 / norm_sq.sqrt();
            for v in out.iter_mut() {
                *v *= inv;
            }
            return;
        }
    }
}

/// Indices of the points sorted by azimuth, ties broken lexicographically
/// on the polar angles. The sort is stable, so exactly equal points keep
/// their input order.
pub fn theta_order(points: &[SpherePoint]) -> Result<Vec<usize>, SphereError> {
    let first = points.first().ok_or(SphereError::EmptyPointList)?;
    let d = first.dimension();
    for p in points {
        if p.dimension() != d {
            return Err(SphereError::DimensionMismatch {
                left: d,
                right: p.dimension(),
            });
        }
    }
    let angles: Vec<SphericalAngles> = points.iter().map(to_spherical).collect();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| angles[i].lex_cmp(&angles[j]));
    Ok(order)
}

/// Geodesic (great-circle) distance between two points, in [0, pi].
pub fn geodesic(p: &SpherePoint, q: &SpherePoint) -> Result<f64, SphereError> {
    Ok(geodesic_from_dot(p.dot(q)?))
}

pub(crate) fn geodesic_from_dot(dot: f64) -> f64 {
    dot.clamp(-1.0, 1.0).acos()
}

pub(crate) fn dot_slices(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn construction_validates_inputs() {
        assert!(SpherePoint::new(vec![1.0]).is_err());
        assert!(SpherePoint::new(vec![0.5, 0.5]).is_err());
        assert!(SpherePoint::new(vec![f64::NAN, 1.0]).is_err());
        assert!(SpherePoint::new(vec![0.0, 1.0 + 5e-13]).is_ok());
        assert!(SpherePoint::new(vec![0.6, 0.8]).is_ok());
        assert!(SphericalAngles::new(vec![PI], 0.0).is_err());
        assert!(SphericalAngles::new(vec![-0.1], 0.0).is_err());
        assert!(SphericalAngles::new(vec![1.0], TAU).is_err());
        assert!(SphericalAngles::new(vec![1.0], 1.0).is_ok());
    }

    #[test]
    fn circle_case_round_trips_the_azimuth() {
        for theta in [0.1f64, 2.0, 5.5] {
            let p = SpherePoint::new(vec![theta.sin(), theta.cos()]).unwrap();
            let a = to_spherical(&p);
            assert!(a.phis().is_empty());
            assert!(!a.is_degenerate());
            assert!((a.theta() - theta).abs() < 1e-12, "theta = {theta}");
            let q = from_spherical(&a, 2).unwrap();
            assert!(max_abs_diff(p.coords(), q.coords()) < 1e-14);
        }
    }

    #[test]
    fn random_points_round_trip_through_angles() {
        for d in [2usize, 3, 4, 5] {
            let points = uniform_sphere_sample(d, 2000, Seed::new(d as u64)).unwrap();
            let mut worst = 0.0;
            for p in &points {
                let a = to_spherical(p);
                assert!(!a.is_degenerate());
                assert_eq!(a.dimension(), d);
                for &phi in a.phis() {
                    assert!((0.0..PI).contains(&phi));
                }
                assert!((0.0..TAU).contains(&a.theta()));
                let q = from_spherical(&a, d).unwrap();
                worst = f64::max(worst, max_abs_diff(p.coords(), q.coords()));
            }
            assert!(worst < 1e-10, "d = {d}: worst round-trip error {worst}");
        }
    }

    #[test]
    fn angles_ignore_positive_scaling() {
        let mut rng = Seed::new(77).rng();
        for _ in 0..200 {
            let x: Vec<f64> = (0..4).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
            let scaled: Vec<f64> = x.iter().map(|v| 2.5 * v).collect();
            let a = vector_angles(&x).unwrap();
            let b = vector_angles(&scaled).unwrap();
            assert!((a.theta() - b.theta()).abs() < 1e-12);
            for (p, q) in a.phis().iter().zip(b.phis()) {
                assert!((p - q).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn degenerate_points_are_flagged_with_zeroed_angles() {
        let east = SpherePoint::new(vec![1.0, 0.0, 0.0]).unwrap();
        let a = to_spherical(&east);
        assert!(a.is_degenerate());
        assert_eq!(a.theta(), 0.0);
        assert_eq!(a.phis(), &[0.0]);

        let west = SpherePoint::new(vec![-1.0, 0.0, 0.0]).unwrap();
        let b = to_spherical(&west);
        assert!(b.is_degenerate());
        assert_eq!(b.phis(), &[0.0]);

        // the south pole projects onto the azimuthal plane: not degenerate
        let south = SpherePoint::new(vec![0.0, 0.0, -1.0]).unwrap();
        let c = to_spherical(&south);
        assert!(!c.is_degenerate());
        assert!((c.theta() - PI).abs() < 1e-15);
        assert!((c.phis()[0] - PI / 2.0).abs() < 1e-15);

        let zero = vector_angles(&[0.0, 0.0]).unwrap();
        assert!(zero.is_degenerate());
        assert_eq!(zero.theta(), 0.0);
    }

    #[test]
    fn north_pole_has_zero_azimuth() {
        for d in [2, 3, 4, 7] {
            let o = SpherePoint::north_pole(d).unwrap();
            let a = to_spherical(&o);
            assert_eq!(a.theta(), 0.0);
            assert!(!a.is_degenerate());
        }
        assert!(SpherePoint::north_pole(1).is_err());
    }

    #[test]
    fn theta_order_sorts_by_azimuth() {
        let from_theta = |theta: f64| SpherePoint::new(vec![theta.sin(), theta.cos()]).unwrap();
        let sorted: Vec<SpherePoint> = [0.3, 1.1, 2.0, 4.4].map(from_theta).into();
        assert_eq!(theta_order(&sorted).unwrap(), vec![0, 1, 2, 3]);

        let reversed: Vec<SpherePoint> = [4.4, 2.0, 1.1, 0.3].map(from_theta).into();
        assert_eq!(theta_order(&reversed).unwrap(), vec![3, 2, 1, 0]);

        let points = uniform_sphere_sample(3, 64, Seed::new(5)).unwrap();
        let order = theta_order(&points).unwrap();
        let mut seen = vec![false; 64];
        for &i in &order {
            seen[i] = true;
        }
        assert!(seen.iter().all(|&s| s));
        let thetas: Vec<f64> = order
            .iter()
            .map(|&i| to_spherical(&points[i]).theta())
            .collect();
        assert!(thetas.windows(2).all(|w| w[0] <= w[1]));

        assert!(theta_order(&[]).is_err());
    }

    #[test]
    fn geodesic_is_the_great_circle_distance() {
        let p = SpherePoint::new(vec![0.6, 0.8]).unwrap();
        assert_eq!(geodesic(&p, &p).unwrap(), 0.0);

        let q = SpherePoint::new(vec![-0.6, -0.8]).unwrap();
        assert!((geodesic(&p, &q).unwrap() - PI).abs() < 1e-12);

        let a = SpherePoint::new(vec![1.2f64.sin(), 1.2f64.cos()]).unwrap();
        let b = SpherePoint::new(vec![1.9f64.sin(), 1.9f64.cos()]).unwrap();
        assert!((geodesic(&a, &b).unwrap() - 0.7).abs() < 1e-12);

        let r3 = SpherePoint::north_pole(3).unwrap();
        assert!(geodesic(&p, &r3).is_err());
    }

    #[test]
    fn geodesic_satisfies_the_triangle_inequality() {
        let points = uniform_sphere_sample(3, 300, Seed::new(31)).unwrap();
        for w in points.chunks_exact(3) {
            let ab = geodesic(&w[0], &w[1]).unwrap();
            let bc = geodesic(&w[1], &w[2]).unwrap();
            let ac = geodesic(&w[0], &w[2]).unwrap();
            assert!(ac <= ab + bc + 1e-12);
        }
    }

    #[test]
    fn uniform_samples_sit_on_the_sphere_with_centered_coordinates() {
        let n = 20_000;
        let points = uniform_sphere_sample(3, n, Seed::new(44)).unwrap();
        for p in &points {
            let norm = p.coords().iter().map(|c| c * c).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() <= 1e-12);
        }
        // each coordinate of a uniform point has mean 0 and variance 1/d
        let se = (1.0 / 3.0 / n as f64).sqrt();
        for k in 0..3 {
            let mean = points.iter().map(|p| p.coords()[k]).sum::<f64>() / n as f64;
            assert!(mean.abs() < 4.0 * se, "coordinate {k}: mean = {mean}");
        }
    }

    #[test]
    fn azimuth_of_uniform_samples_is_uniform() {
        use crate::analysis::ks_statistic;

        let n = 20_000;
        let points = uniform_sphere_sample(3, n, Seed::new(45)).unwrap();
        let mut thetas: Vec<f64> = points.iter().map(|p| to_spherical(p).theta()).collect();
        thetas.sort_by(f64::total_cmp);
        let d = ks_statistic(&thetas, |t| t / TAU).unwrap();
        assert!(d < 0.015, "KS distance {d}");
    }

    #[test]
    fn sorted_azimuth_gaps_share_a_common_mean() {
        // gaps of m sorted uniform azimuths, closed up with the origin at
        // both ends, are Dirichlet(1, ..., 1) after rescaling by 2 pi: each
        // of the m + 1 gaps has mean 1 / (m + 1)
        let m = 4;
        let trials = 5_000;
        let mut rng = Seed::new(46).rng();
        let mut sums = vec![0.0; m + 1];
        let mut thetas = vec![0.0; m];
        let mut buf = vec![0.0; 3];
        for _ in 0..trials {
            for t in thetas.iter_mut() {
                fill_unit_vector(&mut rng, &mut buf);
                *t = vector_angles(&buf).unwrap().theta();
            }
            thetas.sort_by(f64::total_cmp);
            let mut prev = 0.0;
            for (k, &t) in thetas.iter().enumerate() {
                sums[k] += (t - prev) / TAU;
                prev = t;
            }
            sums[m] += (TAU - prev) / TAU;
        }
        let want = 1.0 / (m as f64 + 1.0);
        // marginal gaps are Beta(1, m)
        let var = m as f64 / ((m as f64 + 1.0).powi(2) * (m as f64 + 2.0));
        let se = (var / trials as f64).sqrt();
        for (k, s) in sums.iter().enumerate() {
            let mean = s / trials as f64;
            assert!((mean - want).abs() < 4.0 * se, "gap {k}: mean = {mean}");
        }
    }

    #[test]
    fn consecutive_geodesic_gaps_are_exchangeable() {
        // distances between theta-consecutive order statistics of m uniform
        // points, with the origin prepended and appended, form an
        // exchangeable vector: every position has the same marginal law;
        // position means and second moments are compared against the
        // position-averaged values
        let m = 5;
        let trials = 30_000;
        let mut rng = Seed::new(47).rng();
        let origin = SpherePoint::north_pole(3).unwrap();
        let mut sums = vec![0.0; m + 1];
        let mut sums_sq = vec![0.0; m + 1];
        for _ in 0..trials {
            let points: Vec<SpherePoint> = (0..m).map(|_| sample_unit_point(3, &mut rng)).collect();
            let order = theta_order(&points).unwrap();
            let mut prev = &origin;
            for (k, &i) in order.iter().enumerate() {
                let g = geodesic(prev, &points[i]).unwrap();
                sums[k] += g;
                sums_sq[k] += g * g;
                prev = &points[i];
            }
            let g = geodesic(prev, &origin).unwrap();
            sums[m] += g;
            sums_sq[m] += g * g;
        }
        let t = trials as f64;
        let grand_mean = sums.iter().sum::<f64>() / (t * (m as f64 + 1.0));
        for k in 0..=m {
            let mean = sums[k] / t;
            let var = (sums_sq[k] / t - mean * mean).max(0.0);
            let se = (var / t).sqrt();
            assert!(
                (mean - grand_mean).abs() < 5.0 * se,
                "gap {k}: mean {mean} vs pooled {grand_mean}"
            );
        }
    }

    #[test]
    fn mismatched_dimensions_are_rejected_in_ordering() {
        let a = SpherePoint::north_pole(3).unwrap();
        let b = SpherePoint::north_pole(4).unwrap();
        assert!(theta_order(&[a, b]).is_err());
    }
}
