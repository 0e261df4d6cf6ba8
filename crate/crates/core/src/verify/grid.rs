use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Deterministic polar sampling of the closed disk `|z| <= r_max`: the
/// origin plus `angular_count` equally spaced points on each radius.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiskGrid {
    radii: Vec<f64>,
    angular_count: usize,
}

impl DiskGrid {
    pub const DEFAULT_RMAX: f64 = 0.99;
    pub const DEFAULT_RADII: usize = 40;
    pub const DEFAULT_ANGLES: usize = 720;
    pub const MIN_ANGLES: usize = 8;

    pub fn new(radii: Vec<f64>, angular_count: usize) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::InvalidParameter("grid needs at least one radius".into()));
        }
        if angular_count < Self::MIN_ANGLES {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least {} angles, got {angular_count}",
                Self::MIN_ANGLES
            )));
        }
        if radii.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
            return Err(Error::InvalidParameter("grid radii must lie in (0, 1)".into()));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("grid radii must increase strictly".into()));
        }
        Ok(Self { radii, angular_count })
    }

    /// `count` radii whose distances to the unit circle form a geometric
    /// sequence ending at `1 - r_max`, so circles crowd toward the boundary.
    pub fn geometric(r_max: f64, count: usize, angular_count: usize) -> Result<Self> {
        if !(r_max > 0.0 && r_max < 1.0) || count == 0 {
            return Err(Error::InvalidParameter(format!("bad grid: r_max {r_max}, {count} radii")));
        }
        let gap = 1.0 - r_max;
        let radii = (1..=count).map(|i| 1.0 - gap.powf(i as f64 / count as f64)).collect();
        Self::new(radii, angular_count)
    }

    /// A single circle.
    pub fn circle(r: f64, angular_count: usize) -> Result<Self> {
        Self::new(vec![r], angular_count)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
    }

    pub fn r_max(&self) -> f64 {
        *self.radii.last().expect("non-empty")
    }

    pub fn angle(&self, j: usize) -> f64 {
        std::f64::consts::TAU * j as f64 / self.angular_count as f64
    }

    /// Origin first, then circle by circle.
    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        std::iter::once(Complex64::new(0.0, 0.0)).chain(self.radii.iter().flat_map(move |&r| {
            (0..self.angular_count).map(move |j| Complex64::from_polar(r, self.angle(j)))
        }))
    }

    /// Minimum of `value` over the grid, with the point attaining it.
    /// Circles are scanned in parallel; ties resolve to the first point in
    /// [`Self::points`] order, so the result does not depend on scheduling.
    pub(crate) fn minimize<F>(&self, include_origin: bool, value: F) -> Result<(f64, Complex64)>
    where
        F: Fn(Complex64) -> Result<f64> + Sync,
    {
        let per_circle: Vec<Result<(f64, Complex64)>> = self
            .radii
            .par_iter()
            .map(|&r| {
                let mut best = (f64::INFINITY, Complex64::new(r, 0.0));
                for j in 0..self.angular_count {
                    let z = Complex64::from_polar(r, self.angle(j));
                    let v = value(z)?;
                    if v < best.0 || v.is_nan() {
                        best = (v, z);
                        if v.is_nan() {
                            break;
                        }
                    }
                }
                Ok(best)
            })
            .collect();
        let mut best = if include_origin {
            let z = Complex64::new(0.0, 0.0);
            (value(z)?, z)
        } else {
            (f64::INFINITY, Complex64::new(0.0, 0.0))
        };
        for item in per_circle {
            let (v, z) = item?;
            if v < best.0 || (v.is_nan() && !best.0.is_nan()) {
                best = (v, z);
            }
        }
        Ok(best)
    }
}

impl Default for DiskGrid {
    fn default() -> Self {
        Self::geometric(Self::DEFAULT_RMAX, Self::DEFAULT_RADII, Self::DEFAULT_ANGLES).expect("valid defaults")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_shape() {
        let g = DiskGrid::default();
        assert_eq!(g.radii().len(), 40);
        assert!((g.r_max() - 0.99).abs() < 1e-15);
        assert!(g.radii()[0] > 0.0);
        assert_eq!(g.points().count(), 1 + 40 * 720);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(DiskGrid::new(vec![0.5, 0.4], 16).is_err());
        assert!(DiskGrid::new(vec![0.5, 1.0], 16).is_err());
        assert!(DiskGrid::new(vec![0.5], 4).is_err());
        assert!(DiskGrid::geometric(1.0, 4, 16).is_err());
    }

    #[test]
    fn minimize_finds_the_lowest_point() {
        let g = DiskGrid::geometric(0.9, 5, 64).unwrap();
        let (v, z) = g.minimize(true, |z| Ok(z.re)).unwrap();
        assert!((v + 0.9).abs() < 1e-12);
        assert!((z - Complex64::new(-0.9, 0.0)).norm() < 1e-12);
    }
}
