//! Planar harmonic mappings `f = h + conj(g)` on the unit disk, represented
//! by truncated power series.
//!
//! The crate builds maps by shearing conformal maps, convolves them
//! coefficientwise, certifies univalence and convexity in one direction on
//! compact subdisks, and renders images of polar meshes.
//!
//! ```
//! use harmconv::gallery::{make_entry, GalleryName};
//!
//! let gamma1 = make_entry(GalleryName::Gamma(1), 64).unwrap();
//! let f = make_entry(GalleryName::Ex2_10, 64).unwrap();
//! let conv = gamma1.series.convolve(&f.series).unwrap();
//! assert!((conv.h().coeff(2).re - 1.0 / 16.0).abs() < 1e-15);
//! ```

pub mod cli;
mod csvio;
pub mod error;
pub mod gallery;
pub mod geometry;
pub mod harmonic;
pub mod numfmt;
pub mod render;
pub mod series;
pub mod verify;

use std::sync::Arc;

use num_complex::Complex64;

pub use error::{Error, Result};
pub use harmonic::{ClassKind, ClassTag, Direction, HarmonicMap};
pub use series::AnalyticSeries;

/// Anything that maps points of the disk into the plane.
pub trait PlaneMap: Sync {
    fn try_eval(&self, z: Complex64) -> Result<Complex64>;
}

impl<F> PlaneMap for F
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    fn try_eval(&self, z: Complex64) -> Result<Complex64> {
        Ok(self(z))
    }
}

impl PlaneMap for HarmonicMap {
    fn try_eval(&self, z: Complex64) -> Result<Complex64> {
        self.evaluate(z)
    }
}

impl PlaneMap for AnalyticSeries {
    fn try_eval(&self, z: Complex64) -> Result<Complex64> {
        self.evaluate(z)
    }
}

/// A shareable pointwise evaluator, typically a closed-form expression.
#[derive(Clone)]
pub struct ClosedForm(Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>);

impl ClosedForm {
    pub fn new(f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self(Arc::new(f))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.0)(z)
    }
}

impl std::fmt::Debug for ClosedForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("ClosedForm(..)")
    }
}

impl PlaneMap for ClosedForm {
    fn try_eval(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.eval(z))
    }
}
