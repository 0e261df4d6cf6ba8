//! End-to-end certification of the convolution theorems: class membership
//! of the inputs, the coefficient identity for the convolution, the
//! analytic hypotheses, and univalence plus directional convexity of the
//! result.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::boundary::{check_convex_in_direction, check_univalent_boundary, DEFAULT_RADIUS, DEFAULT_SAMPLES};
use super::pointwise::{
    check_fully_convex, check_marx_strohhacker, check_re_ratio_derivative, check_re_ratio_values,
    check_sense_preserving,
};
use super::{CheckReport, DiskGrid};
use crate::error::{Error, Result};
use crate::gallery::{make_entry, GalleryName};
use crate::harmonic::{ClassKind, ClassTag, Direction, HarmonicMap};
use crate::series::{AnalyticSeries, COEFF_TOL};

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pipeline {
    Thm2_1,
    Thm2_6,
    Thm2_14,
    Thm3_1,
    Cor2_2,
    Cor2_8i,
    Cor2_8ii,
    Cor2_8iii,
    Cor2_9,
    Cor2_11,
    Cor3_2,
    Cor3_5,
}

impl Pipeline {
    pub const ALL: [Pipeline; 12] = [
        Pipeline::Thm2_1,
        Pipeline::Thm2_6,
        Pipeline::Thm2_14,
        Pipeline::Thm3_1,
        Pipeline::Cor2_2,
        Pipeline::Cor2_8i,
        Pipeline::Cor2_8ii,
        Pipeline::Cor2_8iii,
        Pipeline::Cor2_9,
        Pipeline::Cor2_11,
        Pipeline::Cor3_2,
        Pipeline::Cor3_5,
    ];

    /// Number of user-supplied maps. Single-input pipelines convolve with `gamma1`.
    pub fn arity(&self) -> usize {
        self.shape().first.map_or(1, |_| 2)
    }

    fn shape(&self) -> Shape {
        use ClassKind::{Minus, Plus};
        use Direction::{ImagAxis, RealAxis};
        use Pipeline::*;
        let two = |first, second, phi, conclusion, direction| Shape {
            first: Some(first),
            second,
            phi,
            conclusion,
            direction,
            hypothesis: Hypothesis::DerivativeRatio,
        };
        let one = |second, phi, conclusion, direction, hypothesis| Shape {
            first: None,
            second,
            phi,
            conclusion,
            direction,
            hypothesis,
        };
        match self {
            Thm2_1 => two(Minus, Minus, PhiRule::FromInput, Minus, RealAxis),
            Cor2_2 => two(Minus, Minus, PhiRule::Identity, Minus, RealAxis),
            Thm2_14 => two(Plus, Plus, PhiRule::FromInput, Minus, RealAxis),
            Thm3_1 => two(Minus, Plus, PhiRule::FromInput, Plus, ImagAxis),
            Cor3_2 => two(Minus, Plus, PhiRule::Identity, Plus, ImagAxis),
            Thm2_6 => one(Minus, PhiRule::FromInput, Minus, RealAxis, Hypothesis::ValueRatio),
            Cor2_8i => one(Minus, PhiRule::Identity, Minus, RealAxis, Hypothesis::ValueRatio),
            Cor2_8ii => one(Minus, PhiRule::HalfPlane, Minus, RealAxis, Hypothesis::ValueRatio),
            Cor2_8iii => one(Minus, PhiRule::Koebe, Minus, RealAxis, Hypothesis::ValueRatio),
            Cor2_9 => one(Minus, PhiRule::Identity, Minus, RealAxis, Hypothesis::FullyConvexInput),
            Cor2_11 => one(Minus, PhiRule::Identity, Minus, RealAxis, Hypothesis::ConvexAnalyticPart),
            Cor3_5 => one(Plus, PhiRule::FromInput, Plus, ImagAxis, Hypothesis::ValueRatio),
        }
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Pipeline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pipeline::ALL
            .into_iter()
            .find(|p| p.to_string() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
enum PhiRule {
    /// Given explicitly, or read off the last input as `h -+ g`.
    FromInput,
    Identity,
    HalfPlane,
    Koebe,
}

#[derive(Clone, Copy, Debug)]
enum Hypothesis {
    /// `Re (h1*h2)'/(h1*phi)' > 1/2`
    DerivativeRatio,
    /// `Re h/phi > 1/2`
    ValueRatio,
    /// Input sense-preserving and fully convex, then `Re h/z > 1/2`.
    FullyConvexInput,
    /// `h` convex, then the Marx-Strohhacker bound `Re h/z > 1/2`.
    ConvexAnalyticPart,
}

#[derive(Clone, Copy, Debug)]
struct Shape {
    /// Class of the first factor (with target `z`); `None` means `gamma1`.
    first: Option<ClassKind>,
    second: ClassKind,
    phi: PhiRule,
    conclusion: ClassKind,
    direction: Direction,
    hypothesis: Hypothesis,
}

/// Sampling used by [`run_theorem`].
#[derive(Clone, Debug, PartialEq)]
pub struct TheoremSettings {
    pub grid: DiskGrid,
    pub boundary_radius: f64,
    pub boundary_samples: usize,
}

impl Default for TheoremSettings {
    fn default() -> Self {
        Self { grid: DiskGrid::default(), boundary_radius: DEFAULT_RADIUS, boundary_samples: DEFAULT_SAMPLES }
    }
}

fn class_label(kind: ClassKind, target: &str) -> String {
    let sign = match kind {
        ClassKind::Minus => '-',
        ClassKind::Plus => '+',
    };
    format!("W_H^{sign}({target})")
}

/// Runs `pipeline` on named inputs. `phi` overrides the target read off the
/// last input for pipelines whose target is not fixed.
///
/// Reports come in order: class membership, coefficient identity,
/// hypotheses, conclusions. An input outside its class aborts with
/// [`Error::ClassMembership`].
pub fn run_theorem(
    pipeline: Pipeline,
    inputs: &[(String, HarmonicMap)],
    phi: Option<&AnalyticSeries>,
    settings: &TheoremSettings,
) -> Result<Vec<CheckReport>> {
    let shape = pipeline.shape();
    if inputs.len() != pipeline.arity() {
        return Err(Error::InvalidParameter(format!(
            "{pipeline} takes {} input map(s), got {}",
            pipeline.arity(),
            inputs.len()
        )));
    }
    let order = inputs[0].1.order();
    if let Some((name, f)) = inputs.iter().find(|(_, f)| f.order() != order) {
        return Err(Error::InvalidParameter(format!("{name} has order {}, expected {order}", f.order())));
    }
    let grid = &settings.grid;
    let tag = |stage: &str, mut r: CheckReport| {
        r.criterion = format!("{pipeline}.{stage}.{}", r.criterion);
        r
    };
    let origin = Complex64::new(0.0, 0.0);
    let mut reports = Vec::new();

    let (second_name, f2) = inputs.last().expect("arity >= 1");
    let z = AnalyticSeries::identity(order);
    let (phi, phi_label) = match shape.phi {
        PhiRule::Identity => (z.clone(), "z"),
        PhiRule::HalfPlane => (AnalyticSeries::half_plane(order), "z/(1-z)"),
        PhiRule::Koebe => (AnalyticSeries::koebe(order), "z/(1-z)^2"),
        PhiRule::FromInput => match phi {
            Some(p) => (p.resized(order)?, "phi"),
            None => {
                let p = match shape.second {
                    ClassKind::Minus => f2.h().sub(f2.g())?,
                    ClassKind::Plus => f2.h().add(f2.g())?,
                };
                (p, "phi")
            }
        },
    };
    if !phi.is_normalized(COEFF_TOL) {
        return Err(Error::NotNormalized(format!("{pipeline}: target phi must satisfy phi(0) = 0, phi'(0) = 1")));
    }

    // Stage 1: class membership.
    let gamma1;
    let (first_name, f1): (&str, &HarmonicMap) = match shape.first {
        Some(kind) => {
            let (name, f1) = &inputs[0];
            let class = ClassTag::new(kind, z.clone())?;
            reports.push(membership(pipeline, name, f1, &class, &class_label(kind, "z"), grid)?);
            (name.as_str(), f1)
        }
        None => {
            gamma1 = make_entry(GalleryName::Gamma(1), order)?.series;
            ("gamma1", &gamma1)
        }
    };
    let class = ClassTag::new(shape.second, phi.clone())?;
    reports.push(membership(pipeline, second_name, f2, &class, &class_label(shape.second, phi_label), grid)?);

    // Stage 2: the convolution lands in the class of h1*phi.
    let conv = f1.convolve(f2)?;
    let target = f1.h().hadamard(&phi)?;
    let conclusion_class = ClassTag::new(shape.conclusion, target.clone())?;
    let residual = conv.class_residual(&conclusion_class)?.max_abs();
    let tol = conv.membership_tolerance(&conclusion_class);
    reports.push(
        CheckReport::new(format!("{pipeline}.identity.{first_name}*{second_name}"), tol - residual, origin, grid.clone())
            .with_note(format!(
                "convolution in {} with max residual {residual:.3e}",
                class_label(shape.conclusion, "h1*phi")
            )),
    );

    // Stage 3: hypotheses.
    match shape.hypothesis {
        Hypothesis::DerivativeRatio => {
            let num = f1.h().hadamard(f2.h())?;
            reports.push(tag("hypothesis", check_re_ratio_derivative(&num, &target, 0.5, grid)?));
        }
        Hypothesis::ValueRatio => {
            reports.push(tag("hypothesis", check_re_ratio_values(f2.h(), &phi, 0.5, grid)?));
        }
        Hypothesis::FullyConvexInput => {
            reports.push(tag("hypothesis", check_sense_preserving(f2, grid)?));
            reports.push(tag("hypothesis", check_fully_convex(f2, grid)?));
            reports.push(tag("hypothesis", check_re_ratio_values(f2.h(), &phi, 0.5, grid)?));
        }
        Hypothesis::ConvexAnalyticPart => {
            reports.push(tag("hypothesis", check_fully_convex(f2.h(), grid)?));
            reports.push(tag("hypothesis", check_marx_strohhacker(f2.h(), grid)?));
        }
    }
    let (r, n) = (settings.boundary_radius, settings.boundary_samples);
    reports.push(tag("hypothesis.h1*phi", check_univalent_boundary(&target, r, n)?));
    reports.push(tag("hypothesis.h1*phi", check_convex_in_direction(&target, r, shape.direction, n)?));

    // Stage 4: conclusions on the convolution.
    reports.push(tag("conclusion", check_sense_preserving(&conv, grid)?));
    reports.push(tag("conclusion", check_univalent_boundary(&conv, r, n)?));
    reports.push(tag("conclusion", check_convex_in_direction(&conv, r, shape.direction, n)?));
    Ok(reports)
}

fn membership(
    pipeline: Pipeline,
    name: &str,
    f: &HarmonicMap,
    class: &ClassTag,
    label: &str,
    grid: &DiskGrid,
) -> Result<CheckReport> {
    let residual = f.class_residual(class)?.max_abs();
    let tol = f.membership_tolerance(class);
    if residual >= tol {
        return Err(Error::ClassMembership { input: name.to_string(), class: label.to_string(), residual });
    }
    Ok(CheckReport::new(
        format!("{pipeline}.class.{name}"),
        tol - residual,
        Complex64::new(0.0, 0.0),
        grid.clone(),
    )
    .with_note(format!("{name} in {label}, max residual {residual:.3e}")))
}
