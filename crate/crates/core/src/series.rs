//! Truncated complex power series `c_0 + c_1 z + ... + c_N z^N`.
//!
//! Every analytic function in the crate (the parts `h` and `g` of a harmonic
//! map, the shear targets, dilatations) lives in an [`AnalyticSeries`].
//! Operations between two series demand equal truncation orders; use
//! [`AnalyticSeries::resized`] to change the order explicitly.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numfmt::g17;

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 64;

/// Absolute tolerance for coefficientwise identities at moderate orders.
pub const COEFF_TOL: f64 = 1e-12;

/// Smallest constant term [`AnalyticSeries::reciprocal`] accepts.
pub const MIN_CONSTANT: f64 = 1e-13;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticSeries {
    coeffs: Vec<Complex64>,
    /// Highest index whose coefficient is still exact for the underlying
    /// function. Differentiation lowers it by one.
    usable: usize,
}

impl AnalyticSeries {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::ZeroOrder);
        }
        if let Some(k) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(k));
        }
        let usable = coeffs.len() - 1;
        Ok(Self { coeffs, usable })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Result<Self> {
        Self::new((0..=order).map(f).collect())
    }

    /// Real coefficients from a closure, e.g. `|k| 1.0 / k as f64`.
    pub fn from_real_fn(order: usize, mut f: impl FnMut(usize) -> f64) -> Result<Self> {
        Self::from_fn(order, |k| Complex64::new(f(k), 0.0))
    }

    pub fn zero(order: usize) -> Self {
        Self::monomial_scaled(ZERO, 0, order)
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        Self::monomial_scaled(c, 0, order)
    }

    /// The identity map `z`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, order)
    }

    /// `z^k`; the zero series when `k` exceeds the order.
    pub fn monomial(k: usize, order: usize) -> Self {
        Self::monomial_scaled(ONE, k, order)
    }

    fn monomial_scaled(c: Complex64, k: usize, order: usize) -> Self {
        let order = order.max(1);
        let mut coeffs = vec![ZERO; order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { coeffs, usable: order }
    }

    /// `1/(1-z) = 1 + z + z^2 + ...`
    pub fn geometric(order: usize) -> Self {
        let order = order.max(1);
        Self { coeffs: vec![ONE; order + 1], usable: order }
    }

    /// Right half-plane map `l(z) = z/(1-z)`, the identity for the Hadamard product.
    pub fn half_plane(order: usize) -> Self {
        let mut s = Self::geometric(order);
        s.coeffs[0] = ZERO;
        s
    }

    /// Koebe function `z/(1-z)^2`.
    pub fn koebe(order: usize) -> Self {
        Self::from_real_fn(order.max(1), |k| k as f64).expect("finite")
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest index that is exact after lossy operations such as differentiation.
    pub fn usable_order(&self) -> usize {
        self.usable
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// Zero-pads or truncates to `order`.
    pub fn resized(&self, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, ZERO);
        Ok(Self { coeffs, usable: self.usable.min(order) })
    }

    /// Horner evaluation on the closed unit disk.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() > 1.0 {
            return Err(Error::Domain(z));
        }
        Ok(self.horner(z))
    }

    /// Horner evaluation without the domain check.
    pub fn horner(&self, z: Complex64) -> Complex64 {
        self.nonzero_prefix().iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Coefficients up to the last nonzero one.
    fn nonzero_prefix(&self) -> &[Complex64] {
        let end = self.coeffs.iter().rposition(|c| *c != ZERO).map_or(0, |i| i + 1);
        &self.coeffs[..end]
    }

    /// Value of the derivative at `z`, without building the derived series.
    pub fn derivative_at(&self, z: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for (k, &c) in self.nonzero_prefix().iter().enumerate().skip(1).rev() {
            acc = acc * z + c * k as f64;
        }
        acc
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f(a, b)).collect();
        Ok(Self { coeffs, usable: self.usable.min(other.usable) })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
            usable: self.usable,
        }
    }

    /// Coefficientwise (Hadamard) product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    /// `c'_k = (k+1) c_{k+1}`, zero-padded back to the same order.
    pub fn differentiate(&self) -> Self {
        let n = self.order();
        let mut coeffs: Vec<Complex64> =
            (0..n).map(|k| self.coeffs[k + 1] * (k + 1) as f64).collect();
        coeffs.push(ZERO);
        Self { coeffs, usable: self.usable.saturating_sub(1) }
    }

    /// Antiderivative vanishing at the origin; the top coefficient is dropped.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(ZERO);
        coeffs.extend((0..n).map(|k| self.coeffs[k] / (k + 1) as f64));
        Self { coeffs, usable: (self.usable + 1).min(n) }
    }

    /// Pointwise product of the two functions, truncated at the common order.
    pub fn cauchy_product(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let a = &self.coeffs;
        let b = &other.coeffs;
        // Skip leading zeros of either factor; shears multiply by sparse monomials.
        let a_lo = a.iter().position(|c| *c != ZERO).unwrap_or(n + 1);
        let b_lo = b.iter().position(|c| *c != ZERO).unwrap_or(n + 1);
        let mut coeffs = vec![ZERO; n + 1];
        for (i, &ai) in a.iter().enumerate().skip(a_lo) {
            if ai == ZERO {
                continue;
            }
            for (j, &bj) in b.iter().enumerate().take(n + 1 - i).skip(b_lo) {
                coeffs[i + j] += ai * bj;
            }
        }
        Ok(Self { coeffs, usable: self.usable.min(other.usable) })
    }

    /// Multiplicative inverse via `r_0 = 1/c_0`, `r_k = -(1/c_0) sum_{i=1..k} c_i r_{k-i}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.norm() <= MIN_CONSTANT {
            return Err(Error::NearZeroConstant(c0));
        }
        let n = self.order();
        let inv = c0.inv();
        // Only nonzero entries of the input contribute; most shear inputs are sparse.
        let support: Vec<usize> = (1..=n).filter(|&i| self.coeffs[i] != ZERO).collect();
        let mut r = vec![ZERO; n + 1];
        r[0] = inv;
        for k in 1..=n {
            let mut acc = ZERO;
            for &i in support.iter().take_while(|&&i| i <= k) {
                acc += self.coeffs[i] * r[k - i];
            }
            r[k] = -acc * inv;
        }
        if let Some(k) = r.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(k));
        }
        Ok(Self { coeffs: r, usable: self.usable })
    }

    /// `self / other` as reciprocal followed by a Cauchy product.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        self.cauchy_product(&other.reciprocal()?)
    }

    /// Multiplies by `z`, dropping the top coefficient.
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs[..n]);
        Self { coeffs, usable: self.usable }
    }

    /// Divides by `z`; the constant term must vanish.
    pub fn shift_down(&self) -> Result<Self> {
        if self.coeffs[0].norm() > COEFF_TOL {
            return Err(Error::NotNormalized(format!(
                "cannot divide by z with constant term {}",
                self.coeffs[0]
            )));
        }
        let mut coeffs = self.coeffs[1..].to_vec();
        coeffs.push(ZERO);
        Ok(Self { coeffs, usable: self.usable.saturating_sub(1) })
    }

    /// `c_0 = 0` and `c_1 = 1` within `tol`.
    pub fn is_normalized(&self, tol: f64) -> bool {
        self.coeffs[0].norm() <= tol && (self.coeffs[1] - ONE).norm() <= tol
    }

    /// `max_k |c_k|`.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.max_abs())
    }

    /// Writes the `k,re,im` coefficient table.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "k,re,im")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(out, "{},{},{}", k, g17(c.re), g17(c.im))?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn read_csv<R: BufRead>(input: R) -> Result<Self> {
        let rows = crate::csvio::read_rows(input, &["k", "re", "im"])?;
        Self::new(rows.iter().map(|r| Complex64::new(r[0], r[1])).collect())
    }
}
