//! Grid checks of pointwise inequalities: real parts of ratios, sense
//! preservation, full convexity and the two classical lemmas.

use num_complex::Complex64;

use super::{CheckReport, DiskGrid};
use crate::error::{Error, Result};
use crate::harmonic::HarmonicMap;
use crate::series::AnalyticSeries;
use crate::PlaneMap;

/// Denominators below this modulus count as vanishing.
pub const VANISHING: f64 = 1e-13;

/// Angular step for the full-convexity finite differences.
pub const CONVEXITY_STEP: f64 = std::f64::consts::TAU / 4096.0;

/// `min Re(num'(z) / den'(z)) - threshold` over the grid.
pub fn check_re_ratio_derivative(
    num: &AnalyticSeries,
    den: &AnalyticSeries,
    threshold: f64,
    grid: &DiskGrid,
) -> Result<CheckReport> {
    let (margin, witness) = grid.minimize(true, |z| {
        let d = den.derivative_at(z);
        if d.norm() <= VANISHING {
            return Ok(f64::NEG_INFINITY);
        }
        Ok((num.derivative_at(z) / d).re - threshold)
    })?;
    let mut report = CheckReport::new("re_ratio_derivative", margin, witness, grid.clone());
    if margin == f64::NEG_INFINITY {
        report = report.with_note("denominator derivative vanishes at the witness");
    }
    Ok(report)
}

/// `num(z)/den(z)`, with the derivative limit where both vanish.
pub fn value_ratio(num: &AnalyticSeries, den: &AnalyticSeries, z: Complex64) -> Option<Complex64> {
    let (a, b) = (num.horner(z), den.horner(z));
    if b.norm() > VANISHING {
        return Some(a / b);
    }
    if a.norm() > VANISHING {
        return None;
    }
    let db = den.derivative_at(z);
    (db.norm() > VANISHING).then(|| num.derivative_at(z) / db)
}

/// `min Re(num(z) / den(z)) - threshold` over the grid, origin included.
pub fn check_re_ratio_values(
    num: &AnalyticSeries,
    den: &AnalyticSeries,
    threshold: f64,
    grid: &DiskGrid,
) -> Result<CheckReport> {
    let (margin, witness) = grid.minimize(true, |z| {
        Ok(value_ratio(num, den, z).map_or(f64::NEG_INFINITY, |r| r.re - threshold))
    })?;
    let mut report = CheckReport::new("re_ratio_values", margin, witness, grid.clone());
    if margin == f64::NEG_INFINITY {
        report = report.with_note("denominator vanishes at the witness");
    }
    Ok(report)
}

/// `min |h'(z)| - |g'(z)|` over the grid.
pub fn check_sense_preserving(f: &HarmonicMap, grid: &DiskGrid) -> Result<CheckReport> {
    let (margin, witness) = grid.minimize(true, |z| {
        let (dh, dg) = f.derivatives_at(z);
        Ok(dh.norm() - dg.norm())
    })?;
    Ok(CheckReport::new("sense_preserving", margin, witness, grid.clone()))
}

/// Rate of turning of the tangent of `theta -> f(r e^{i theta})`, by nested
/// centered differences with step [`CONVEXITY_STEP`]. `None` when the
/// tangent degenerates.
pub fn tangent_turning_rate<M: PlaneMap + ?Sized>(f: &M, z: Complex64) -> Result<Option<f64>> {
    let h = CONVEXITY_STEP;
    let rot = Complex64::from_polar(1.0, 2.0 * h);
    let (ahead, here, behind) = (f.try_eval(z * rot)?, f.try_eval(z)?, f.try_eval(z / rot)?);
    let t_plus = (ahead - here) / (2.0 * h);
    let t_minus = (here - behind) / (2.0 * h);
    if t_plus.norm() <= VANISHING || t_minus.norm() <= VANISHING {
        return Ok(None);
    }
    Ok(Some((t_plus / t_minus).arg() / (2.0 * h)))
}

/// `min d/dtheta arg(d/dtheta f(r e^{i theta}))` over the grid circles;
/// positive everywhere means every circle maps onto a convex curve.
pub fn check_fully_convex<M: PlaneMap + ?Sized>(f: &M, grid: &DiskGrid) -> Result<CheckReport> {
    let (margin, witness) =
        grid.minimize(false, |z| Ok(tangent_turning_rate(f, z)?.unwrap_or(f64::NEG_INFINITY)))?;
    let mut report = CheckReport::new("fully_convex", margin, witness, grid.clone());
    if margin == f64::NEG_INFINITY {
        report = report.with_note("tangent vector vanishes at the witness");
    }
    Ok(report)
}

/// Hypothesis and conclusion of the Silverman bound
/// `Re(z p'' + p') > 1/2  =>  Re p' > log 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct SilvermanReport {
    pub hypothesis: CheckReport,
    pub conclusion: CheckReport,
}

impl SilvermanReport {
    pub fn passed(&self) -> bool {
        self.hypothesis.passed && self.conclusion.passed
    }

    /// Single report with the smaller margin.
    pub fn combined(&self) -> CheckReport {
        let worst = if self.hypothesis.min_margin <= self.conclusion.min_margin {
            &self.hypothesis
        } else {
            &self.conclusion
        };
        CheckReport::new("silverman", worst.min_margin, worst.witness, worst.grid.clone()).with_note(format!(
            "hypothesis margin {:.6e}, conclusion margin {:.6e}",
            self.hypothesis.min_margin, self.conclusion.min_margin
        ))
    }
}

pub fn check_silverman(p: &AnalyticSeries, grid: &DiskGrid) -> Result<SilvermanReport> {
    // z p'' + p' = (z p')'
    let zp = p.differentiate().shift_up();
    let (h_margin, h_witness) = grid.minimize(true, |z| Ok(zp.derivative_at(z).re - 0.5))?;
    let (c_margin, c_witness) = grid.minimize(true, |z| Ok(p.derivative_at(z).re - std::f64::consts::LN_2))?;
    Ok(SilvermanReport {
        hypothesis: CheckReport::new("silverman_hypothesis", h_margin, h_witness, grid.clone()),
        conclusion: CheckReport::new("silverman_conclusion", c_margin, c_witness, grid.clone()),
    })
}

/// `min Re h(z)/z - 1/2`; the value at the origin is `h'(0)`.
pub fn check_marx_strohhacker(h: &AnalyticSeries, grid: &DiskGrid) -> Result<CheckReport> {
    let z = AnalyticSeries::identity(h.order());
    let mut report = check_re_ratio_values(h, &z, 0.5, grid)?;
    report.criterion = "marx_strohhacker".into();
    Ok(report)
}

/// Radius in `[lo, hi]` where the Jacobian vanishes along the ray of the
/// given angle, by bisection down to `tol`.
pub fn jacobian_zero_on_ray(f: &HarmonicMap, angle: f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let jac = |r: f64| f.jacobian_at(Complex64::from_polar(r, angle));
    let (mut a, mut b) = (lo, hi);
    let (mut ja, jb) = (jac(a)?, jac(b)?);
    if ja == 0.0 {
        return Ok(a);
    }
    if jb == 0.0 {
        return Ok(b);
    }
    if ja.signum() == jb.signum() {
        return Err(Error::InvalidParameter(format!("Jacobian does not change sign on [{lo}, {hi}]")));
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        let jm = jac(m)?;
        if jm == 0.0 {
            return Ok(m);
        }
        if jm.signum() == ja.signum() {
            a = m;
            ja = jm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}
