//! Harmonic maps `f = h + conj(g)` on the unit disk and the operations the
//! convolution theorems are phrased in: harmonic convolution, dilatation,
//! Jacobian, shear construction, the `h - g = phi` / `h + g = phi` class
//! residuals and the positive harmonic Alexander operator.

use std::fmt;
use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numfmt::g17;
use crate::series::{AnalyticSeries, COEFF_TOL};

/// Direction of convexity, and of the shear that produces it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Direction {
    /// Horizontal lines meet the image in intervals; sheared with `h - g = phi`.
    RealAxis,
    /// Vertical lines meet the image in intervals; sheared with `h + g = phi`.
    ImagAxis,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::RealAxis => "real axis",
            Direction::ImagAxis => "imaginary axis",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// `h - g = phi`
    Minus,
    /// `h + g = phi`
    Plus,
}

/// Membership target `W_H^-(phi)` or `W_H^+(phi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassTag {
    kind: ClassKind,
    target: AnalyticSeries,
}

impl ClassTag {
    pub fn new(kind: ClassKind, target: AnalyticSeries) -> Result<Self> {
        if !target.is_normalized(COEFF_TOL) {
            return Err(Error::NotNormalized("class target needs phi(0) = 0 and phi'(0) = 1".into()));
        }
        Ok(Self { kind, target })
    }

    pub fn minus(target: AnalyticSeries) -> Result<Self> {
        Self::new(ClassKind::Minus, target)
    }

    pub fn plus(target: AnalyticSeries) -> Result<Self> {
        Self::new(ClassKind::Plus, target)
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn target(&self) -> &AnalyticSeries {
        &self.target
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.kind {
            ClassKind::Minus => '-',
            ClassKind::Plus => '+',
        };
        write!(f, "W_H^{sign}(phi)")
    }
}

/// `f = h + conj(g)` with both parts truncated at the same order.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicMap {
    h: AnalyticSeries,
    g: AnalyticSeries,
}

impl HarmonicMap {
    pub fn new(h: AnalyticSeries, g: AnalyticSeries) -> Result<Self> {
        if h.order() != g.order() {
            return Err(Error::OrderMismatch { left: h.order(), right: g.order() });
        }
        Ok(Self { h, g })
    }

    /// An analytic map viewed as a harmonic one (`g = 0`).
    pub fn analytic(h: AnalyticSeries) -> Self {
        let g = AnalyticSeries::zero(h.order());
        Self { h, g }
    }

    pub fn identity(order: usize) -> Self {
        Self::analytic(AnalyticSeries::identity(order))
    }

    /// `e(z) = z/(1-z) + conj(z^2/(1-z))`, the unit of harmonic convolution.
    pub fn convolution_identity(order: usize) -> Self {
        let h = AnalyticSeries::half_plane(order);
        let g = AnalyticSeries::from_real_fn(order.max(1), |k| if k >= 2 { 1.0 } else { 0.0 })
            .expect("finite");
        Self { h, g }
    }

    pub fn h(&self) -> &AnalyticSeries {
        &self.h
    }

    pub fn g(&self) -> &AnalyticSeries {
        &self.g
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    pub fn resized(&self, order: usize) -> Result<Self> {
        Ok(Self { h: self.h.resized(order)?, g: self.g.resized(order)? })
    }

    /// `f(0) = 0 = f_z(0) - 1 = f_{conj z}(0)` within `tol`.
    pub fn is_normalized(&self, tol: f64) -> bool {
        self.h.is_normalized(tol) && self.g.coeff(0).norm() <= tol && self.g.coeff(1).norm() <= tol
    }

    fn ensure_normalized(&self) -> Result<()> {
        if self.is_normalized(COEFF_TOL) {
            Ok(())
        } else {
            Err(Error::NotNormalized(format!(
                "h(0) = {}, h'(0) = {}, g(0) = {}, g'(0) = {}",
                self.h.coeff(0),
                self.h.coeff(1),
                self.g.coeff(0),
                self.g.coeff(1)
            )))
        }
    }

    /// `h(z) + conj(g(z))` on the closed unit disk.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() > 1.0 {
            return Err(Error::Domain(z));
        }
        Ok(self.value_at(z))
    }

    /// Evaluation without the domain check.
    pub fn value_at(&self, z: Complex64) -> Complex64 {
        self.h.horner(z) + self.g.horner(z).conj()
    }

    /// `(h'(z), g'(z))`.
    pub fn derivatives_at(&self, z: Complex64) -> (Complex64, Complex64) {
        (self.h.derivative_at(z), self.g.derivative_at(z))
    }

    /// Harmonic convolution `h*H + conj(g*G)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        Ok(Self { h: self.h.hadamard(&other.h)?, g: self.g.hadamard(&other.g)? })
    }

    /// Dilatation `g'/h'` as a series, exact up to index `N - 1`.
    pub fn dilatation(&self) -> Result<AnalyticSeries> {
        self.g.differentiate().divide(&self.h.differentiate())
    }

    /// Pointwise dilatation, free of the truncated-division error of [`Self::dilatation`].
    pub fn dilatation_at(&self, z: Complex64) -> Complex64 {
        let (dh, dg) = self.derivatives_at(z);
        dg / dh
    }

    /// `J_f = |h'|^2 - |g'|^2` at an interior point.
    pub fn jacobian_at(&self, z: Complex64) -> Result<f64> {
        if z.norm() >= 1.0 {
            return Err(Error::Domain(z));
        }
        let (dh, dg) = self.derivatives_at(z);
        Ok(dh.norm_sqr() - dg.norm_sqr())
    }

    /// Shears the normalized conformal map `phi` along `direction` with
    /// dilatation `w`: `h' = phi'/(1 - w)`, `g' = w h'` for the real axis and
    /// `h' = phi'/(1 + w)`, `g' = w h'` for the imaginary axis. Both parts
    /// vanish at the origin, so `h - g = phi` (resp. `h + g = phi`).
    pub fn shear(phi: &AnalyticSeries, w: &AnalyticSeries, direction: Direction) -> Result<Self> {
        if !phi.is_normalized(COEFF_TOL) {
            return Err(Error::NotNormalized("shear target needs phi(0) = 0 and phi'(0) = 1".into()));
        }
        let one = AnalyticSeries::constant(Complex64::new(1.0, 0.0), phi.order());
        let denom = match direction {
            Direction::RealAxis => one.sub(w)?,
            Direction::ImagAxis => one.add(w)?,
        };
        let dphi = phi.differentiate();
        let dh = dphi.divide(&denom)?;
        // w h' rewritten through the shear relation so the class identity holds
        // to rounding at every order.
        let dg = match direction {
            Direction::RealAxis => dh.sub(&dphi)?,
            Direction::ImagAxis => dphi.sub(&dh)?,
        };
        Ok(Self { h: dh.integrate(), g: dg.integrate() })
    }

    /// `(h - g) - phi` or `(h + g) - phi`; the zero series iff `f` is in the class.
    pub fn class_residual(&self, tag: &ClassTag) -> Result<AnalyticSeries> {
        let combined = match tag.kind {
            ClassKind::Minus => self.h.sub(&self.g)?,
            ClassKind::Plus => self.h.add(&self.g)?,
        };
        combined.sub(&tag.target)
    }

    /// Residual bound used for membership: `COEFF_TOL` scaled by the largest
    /// coefficient involved, so fast-growing maps are judged by relative error.
    pub fn membership_tolerance(&self, tag: &ClassTag) -> f64 {
        let scale = self.h.max_abs().max(self.g.max_abs()).max(tag.target.max_abs());
        COEFF_TOL * scale.max(1.0)
    }

    pub fn is_in_class(&self, tag: &ClassTag) -> Result<bool> {
        Ok(self.class_residual(tag)?.max_abs() < self.membership_tolerance(tag))
    }

    /// Positive harmonic Alexander operator: `a_n -> a_n/n`, `b_n -> b_n/n`.
    pub fn alexander(&self) -> Result<Self> {
        self.ensure_normalized()?;
        let divide = |s: &AnalyticSeries| {
            AnalyticSeries::from_fn(s.order(), |k| if k == 0 { s.coeff(0) } else { s.coeff(k) / k as f64 })
        };
        Ok(Self { h: divide(&self.h)?, g: divide(&self.g)? })
    }

    /// Writes the `k,re_h,im_h,re_g,im_g` table.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "k,re_h,im_h,re_g,im_g")?;
        for k in 0..=self.order() {
            let (a, b) = (self.h.coeff(k), self.g.coeff(k));
            writeln!(out, "{},{},{},{},{}", k, g17(a.re), g17(a.im), g17(b.re), g17(b.im))?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn read_csv<R: BufRead>(input: R) -> Result<Self> {
        let rows = crate::csvio::read_rows(input, &["k", "re_h", "im_h", "re_g", "im_g"])?;
        let h = AnalyticSeries::new(rows.iter().map(|r| Complex64::new(r[0], r[1])).collect())?;
        let g = AnalyticSeries::new(rows.iter().map(|r| Complex64::new(r[2], r[3])).collect())?;
        Self::new(h, g)
    }
}
