//! Sampled image of the Bloch ball under a qubit map.
//!
//! Drawing states uniformly from the ball (or its surface) and pushing them
//! through the affine action a ↦ T a + t gives a point cloud of the image
//! ellipsoid — good for eyeballing how a channel deforms state space and
//! for checking that outputs stay inside the ball.

use crate::error::Result;
use crate::qubit::{affine_from_channel, BlochVector};
use crate::random;
use crate::rep::Channel;

/// Where inputs are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// Uniform on the sphere ‖a‖ = 1 (pure states).
    Surface,
    /// Uniform in the closed ball ‖a‖ ≤ 1 (all states).
    Ball,
}

/// Point cloud of a channel's action on the Bloch ball.
#[derive(Debug, Clone)]
pub struct BlochImage {
    pairs: Vec<(BlochVector, BlochVector)>,
    max_output_norm: f64,
    centroid: BlochVector,
}

impl BlochImage {
    /// (input, output) Bloch vector pairs, in sampling order.
    pub fn pairs(&self) -> &[(BlochVector, BlochVector)] {
        &self.pairs
    }

    /// Largest output norm seen — > 1 means some output left the ball.
    pub fn max_output_norm(&self) -> f64 {
        self.max_output_norm
    }

    /// Mean of the output vectors; for ball or surface sampling this
    /// estimates the translation t.
    pub fn centroid(&self) -> BlochVector {
        self.centroid
    }
}

/// Sample `n_samples` inputs with the given seed and mode and push them
/// through the channel's affine action. Errors on non-qubit channels.
pub fn bloch_image_sample(
    ch: &Channel,
    n_samples: usize,
    seed: u64,
    mode: SampleMode,
) -> Result<BlochImage> {
    let aff = affine_from_channel(ch)?;
    let mut rng = random::rng_from_seed(seed);
    let mut pairs = Vec::with_capacity(n_samples);
    let mut max_output_norm = 0.0f64;
    let mut sum = [0.0f64; 3];
    for _ in 0..n_samples {
        let a = match mode {
            SampleMode::Surface => random::bloch_on_sphere(&mut rng),
            SampleMode::Ball => random::bloch_in_ball(&mut rng),
        };
        let b = aff.map_bloch(&a);
        max_output_norm = max_output_norm.max(b.norm());
        sum[0] += b.x;
        sum[1] += b.y;
        sum[2] += b.z;
        pairs.push((a, b));
    }
    let m = n_samples.max(1) as f64;
    Ok(BlochImage {
        pairs,
        max_output_norm,
        centroid: BlochVector::new(sum[0] / m, sum[1] / m, sum[2] / m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::zoo;
    use crate::qubit::{bloch_from_density, density_from_bloch};

    #[test]
    fn unitary_images_stay_on_sphere() {
        let img = bloch_image_sample(&zoo::identity_channel(), 500, 1, SampleMode::Surface).unwrap();
        assert!((img.max_output_norm() - 1.0).abs() < 1e-12);
        for (a, b) in img.pairs() {
            assert!((a.norm() - 1.0).abs() < 1e-12);
            assert!((b.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn depolarizing_shrinks_image() {
        let p = 0.6;
        let ch = zoo::depolarizing(p).unwrap();
        let img = bloch_image_sample(&ch, 2000, 2, SampleMode::Surface).unwrap();
        // Image of the sphere is the sphere of radius 1-p.
        assert!((img.max_output_norm() - (1.0 - p)).abs() < 1e-10);
        assert!(img.centroid().norm() < 0.05);
    }

    #[test]
    fn centroid_estimates_translation() {
        let p = 0.5;
        let ch = zoo::amplitude_damping(p).unwrap();
        let img = bloch_image_sample(&ch, 4000, 3, SampleMode::Ball).unwrap();
        let c = img.centroid();
        assert!(c.x.abs() < 0.05 && c.y.abs() < 0.05);
        assert!((c.z - p).abs() < 0.05);
    }

    /// Affine sampling agrees with applying the channel to density
    /// matrices.
    #[test]
    fn pairs_agree_with_density_path() {
        let ch = zoo::pancake_ncp();
        let img = bloch_image_sample(&ch, 64, 4, SampleMode::Ball).unwrap();
        for (a, b) in img.pairs() {
            let rho = density_from_bloch(a).unwrap();
            let direct = bloch_from_density(&ch.apply(&rho).unwrap()).unwrap();
            assert!((b.x - direct.x).abs() < 1e-12);
            assert!((b.y - direct.y).abs() < 1e-12);
            assert!((b.z - direct.z).abs() < 1e-12);
        }
    }

    #[test]
    fn same_seed_same_cloud() {
        let ch = zoo::phase_damping(0.3).unwrap();
        let a = bloch_image_sample(&ch, 128, 9, SampleMode::Ball).unwrap();
        let b = bloch_image_sample(&ch, 128, 9, SampleMode::Ball).unwrap();
        assert_eq!(a.pairs(), b.pairs());
        let c = bloch_image_sample(&ch, 128, 10, SampleMode::Ball).unwrap();
        assert_ne!(a.pairs(), c.pairs());
    }

    #[test]
    fn non_qubit_rejected() {
        let ch = zoo::unitary_channel(crate::mat::ComplexMatrix::identity(3)).unwrap();
        assert!(bloch_image_sample(&ch, 8, 0, SampleMode::Ball).is_err());
    }
}
