#![allow(dead_code)]

use harmconv::{AnalyticSeries, ClassTag, Direction, HarmonicMap};
use num_complex::Complex64;
use proptest::prelude::*;

/// Series with `|c_k| <= 1/k^2` and `c_0 = 0`.
pub fn decaying(order: usize) -> impl Strategy<Value = AnalyticSeries> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order + 1).prop_map(move |v| {
        AnalyticSeries::from_fn(order, |k| {
            if k == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                let (a, b) = v[k];
                Complex64::new(a, b) / (k * k) as f64
            }
        })
        .unwrap()
    })
}

/// Normalized series: `c_0 = 0`, `c_1 = 1`, then `|c_k| <= 1/k^2`.
pub fn normalized(order: usize) -> impl Strategy<Value = AnalyticSeries> {
    decaying(order).prop_map(move |s| {
        AnalyticSeries::from_fn(order, |k| if k == 1 { Complex64::new(1.0, 0.0) } else { s.coeff(k) }).unwrap()
    })
}

/// Dilatation-like series with `w(0)` small.
pub fn small(order: usize) -> impl Strategy<Value = AnalyticSeries> {
    decaying(order).prop_map(|s| s.scale(Complex64::new(0.5, 0.0)))
}

/// A random member of `W_H^-(phi)` (real axis) or `W_H^+(phi)` (imaginary axis),
/// built from a random normalized co-analytic part.
pub fn member(phi: &AnalyticSeries, direction: Direction, g: &AnalyticSeries) -> HarmonicMap {
    let g = AnalyticSeries::from_fn(phi.order(), |k| if k < 2 { Complex64::new(0.0, 0.0) } else { g.coeff(k) }).unwrap();
    let h = match direction {
        Direction::RealAxis => phi.add(&g).unwrap(),
        Direction::ImagAxis => phi.sub(&g).unwrap(),
    };
    HarmonicMap::new(h, g).unwrap()
}

pub fn residual(f: &HarmonicMap, tag: &ClassTag) -> f64 {
    f.class_residual(tag).unwrap().max_abs()
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
