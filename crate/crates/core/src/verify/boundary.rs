//! Topological checks on the image of a circle `|z| = r`.
//!
//! A univalent map sends the circle to a simple closed curve that winds
//! once around the image of every interior point. Convexity in a direction
//! shows up as a coordinate that rises once and falls once along the curve.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use super::{CheckReport, DiskGrid};
use crate::error::{Error, Result};
use crate::geometry::{closed_self_intersections, distance_to_closed, winding_number};
use crate::harmonic::Direction;
use crate::PlaneMap;

pub const DEFAULT_RADIUS: f64 = 0.99;
pub const DEFAULT_SAMPLES: usize = 4096;
pub const MIN_CONVEXITY_SAMPLES: usize = 64;

/// Differences below this are treated as flat when counting turns.
pub const PLATEAU_TOL: f64 = 1e-12;

/// Fractions of `r` at which interior probes are placed, four angles each.
const PROBE_FRACTIONS: [f64; 4] = [0.3, 0.6, 0.85, 0.97];

/// Images of `samples` equally spaced points of `|z| = r`.
pub fn sample_circle<M: PlaneMap + ?Sized>(f: &M, r: f64, samples: usize) -> Result<Vec<Complex64>> {
    (0..samples)
        .into_par_iter()
        .map(|j| f.try_eval(circle_point(r, samples, j)))
        .collect()
}

fn circle_point(r: f64, samples: usize, j: usize) -> Complex64 {
    Complex64::from_polar(r, TAU * j as f64 / samples as f64)
}

/// The sixteen interior points whose images must lie inside the curve.
pub fn probe_points(r: f64) -> Vec<Complex64> {
    PROBE_FRACTIONS
        .iter()
        .flat_map(|&frac| {
            let offset = if frac > 0.5 { FRAC_PI_4 } else { 0.0 };
            (0..4).map(move |m| Complex64::from_polar(r * frac, m as f64 * FRAC_PI_2 + offset))
        })
        .collect()
}

/// Passes iff the image of `|z| = r` is a simple closed polyline winding
/// exactly once around the image of each probe point.
///
/// Margin: the smallest probe-to-curve distance when passing, minus the
/// number of defects (crossings plus bad windings) when failing.
pub fn check_univalent_boundary<M: PlaneMap + ?Sized>(f: &M, r: f64, samples: usize) -> Result<CheckReport> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidParameter(format!("boundary radius {r} outside (0, 1)")));
    }
    let grid = DiskGrid::circle(r, samples)?;
    let curve = sample_circle(f, r, samples)?;
    if let Some(i) = (0..samples).find(|&i| curve[i] == curve[(i + 1) % samples]) {
        return Err(Error::DegenerateCurve(i, (i + 1) % samples));
    }

    let crossings = closed_self_intersections(&curve);
    let probes = probe_points(r);
    let mut bad = Vec::new();
    let mut nearest = (f64::INFINITY, probes[0]);
    for &z in &probes {
        let w = f.try_eval(z)?;
        if winding_number(&curve, w) != 1 {
            bad.push(z);
        } else {
            let d = distance_to_closed(&curve, w);
            if d < nearest.0 {
                nearest = (d, z);
            }
        }
    }

    let report = if crossings.is_empty() && bad.is_empty() {
        CheckReport::new("univalent_boundary", nearest.0, nearest.1, grid)
    } else {
        let defects = (crossings.len() + bad.len()) as f64;
        let (witness, note) = match crossings.first() {
            Some(&(i, j)) => (
                circle_point(r, samples, i),
                format!("{} self-intersections, first between segments {i} and {j}", crossings.len()),
            ),
            None => (bad[0], format!("{} probe images not enclosed exactly once", bad.len())),
        };
        CheckReport::new("univalent_boundary", -defects, witness, grid).with_note(note)
    };
    Ok(report)
}

/// Number of sign changes of the cyclic differences of `values`, ignoring
/// differences smaller than [`PLATEAU_TOL`], plus the index where the third
/// turn happens (if any).
fn turning_points(values: &[f64]) -> (usize, Option<usize>) {
    let n = values.len();
    let steps: Vec<(usize, f64)> = (0..n)
        .map(|i| (i, values[(i + 1) % n] - values[i]))
        .filter(|(_, d)| d.abs() >= PLATEAU_TOL)
        .collect();
    let mut changes = 0;
    let mut third = None;
    for k in 0..steps.len() {
        let (prev, cur) = (steps[(k + steps.len() - 1) % steps.len()], steps[k]);
        if prev.1.signum() != cur.1.signum() {
            changes += 1;
            if changes == 3 {
                third = Some(cur.0);
            }
        }
    }
    (changes, third)
}

/// Discrete convexity in `direction`: along the image of `|z| = r` the
/// imaginary part (real axis) or real part (imaginary axis) has one run of
/// increase and one of decrease. Margin is `3 - sign changes`.
pub fn check_convex_in_direction<M: PlaneMap + ?Sized>(
    f: &M,
    r: f64,
    direction: Direction,
    samples: usize,
) -> Result<CheckReport> {
    if samples < MIN_CONVEXITY_SAMPLES {
        return Err(Error::InvalidParameter(format!(
            "direction convexity needs at least {MIN_CONVEXITY_SAMPLES} samples, got {samples}"
        )));
    }
    let grid = DiskGrid::circle(r, samples)?;
    let curve = sample_circle(f, r, samples)?;
    let values: Vec<f64> = curve
        .iter()
        .map(|w| match direction {
            Direction::RealAxis => w.im,
            Direction::ImagAxis => w.re,
        })
        .collect();
    let (changes, third) = turning_points(&values);
    let witness_index = third.unwrap_or_else(|| {
        (0..samples).max_by(|&a, &b| values[a].total_cmp(&values[b])).expect("non-empty")
    });
    let criterion = match direction {
        Direction::RealAxis => "convex_real_axis",
        Direction::ImagAxis => "convex_imag_axis",
    };
    Ok(CheckReport::new(criterion, 3.0 - changes as f64, circle_point(r, samples, witness_index), grid)
        .with_note(format!("{changes} turning points")))
}
