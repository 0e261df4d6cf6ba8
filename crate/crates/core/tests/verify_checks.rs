use harmconv::gallery::{closed_form_convolution, make_entry, GalleryName};
use harmconv::verify::{
    check_convex_in_direction, check_fully_convex, check_marx_strohhacker, check_re_ratio_derivative,
    check_re_ratio_values, check_sense_preserving, check_silverman, check_univalent_boundary, run_theorem, value_ratio, DiskGrid,
    Pipeline, TheoremSettings,
};
use harmconv::{AnalyticSeries, Direction, Error, HarmonicMap};
use num_complex::Complex64;

/// Order at which the gallery tails are negligible at radius 0.99.
const DEEP: usize = 2048;

fn entry(name: GalleryName, order: usize) -> HarmonicMap {
    make_entry(name, order).unwrap().series
}

fn mu(k: usize, order: usize) -> AnalyticSeries {
    entry(GalleryName::Gamma(k), order).h().clone()
}

fn grid() -> DiskGrid {
    DiskGrid::default()
}

#[test]
fn derivative_ratio_examples() {
    let z = AnalyticSeries::identity(16);
    let same = check_re_ratio_derivative(&z, &z, 0.5, &grid()).unwrap();
    assert!(same.passed && (same.min_margin - 0.5).abs() < 1e-15);

    for n in 2..=6 {
        let u = entry(GalleryName::P(n), 16).h().clone();
        let r = check_re_ratio_derivative(&u.hadamard(&u).unwrap(), &z, 0.5, &grid()).unwrap();
        assert!(r.passed, "n = {n}");
        assert!(r.min_margin + 0.5 >= 1.0 - 1.0 / n as f64 - 1e-9, "n = {n}: {}", r.min_margin);
    }

    // (mu1*h)'/(mu1*phi)' = h/phi = 1/(1-z) for the ex2_7 data; both parts
    // vanish at -1, so the quotient needs a longer series near the boundary
    let f = entry(GalleryName::Ex2_7, 2 * DEEP);
    let phi = f.h().sub(f.g()).unwrap();
    let m = mu(1, 2 * DEEP);
    let r = check_re_ratio_derivative(&m.hadamard(f.h()).unwrap(), &m.hadamard(&phi).unwrap(), 0.5, &grid()).unwrap();
    assert!(r.passed);
    assert!((r.min_margin - (1.0 / 1.99 - 0.5)).abs() < 1e-6, "{}", r.min_margin);
}

#[test]
fn value_ratio_examples() {
    let z = AnalyticSeries::identity(DEEP);
    let same = check_re_ratio_values(&z, &z, 0.5, &grid()).unwrap();
    assert!(same.passed && (same.min_margin - 0.5).abs() < 1e-15);

    let f = entry(GalleryName::F, DEEP);
    let r = check_re_ratio_values(f.h(), &AnalyticSeries::half_plane(DEEP), 0.75, &grid()).unwrap();
    assert!(r.passed, "{r}");

    let f = entry(GalleryName::Ex3_6, DEEP);
    let phi = f.h().add(f.g()).unwrap();
    let r = check_re_ratio_values(f.h(), &phi, 0.5, &grid()).unwrap();
    assert!(r.passed, "{r}");
}

#[test]
fn sense_preservation_examples() {
    let id = check_sense_preserving(&HarmonicMap::identity(8), &grid()).unwrap();
    assert!(id.passed && (id.min_margin - 1.0).abs() < 1e-15);
    for k in 1..=5 {
        assert!(check_sense_preserving(&entry(GalleryName::Gamma(k), DEEP), &grid()).unwrap().passed);
    }
    let p2 = entry(GalleryName::P(2), 8);
    let r = check_sense_preserving(&p2, &grid()).unwrap();
    assert!(!r.passed);
    let (dh, dg) = p2.derivatives_at(r.witness);
    assert!((dh.norm() - dg.norm() - r.min_margin).abs() < 1e-10);
    assert!(r.witness.norm() > (Complex64::new(1.0, 0.0) + r.witness).norm());
}

#[test]
fn boundary_univalence_examples() {
    let id = |z: Complex64| z;
    assert!(check_univalent_boundary(&id, 0.9, 4096).unwrap().passed);
    let pp = closed_form_convolution("p2*p2").unwrap();
    assert!(check_univalent_boundary(&pp, 0.99, 4096).unwrap().passed);
    for n in 2..=4 {
        for name in [GalleryName::P(n), GalleryName::Q(n)] {
            let r = check_univalent_boundary(&entry(name, 8), 0.99, 4096).unwrap();
            assert!(!r.passed, "{name}");
        }
    }
}

#[test]
fn direction_convexity_examples() {
    let id = |z: Complex64| z;
    for dir in [Direction::RealAxis, Direction::ImagAxis] {
        assert!(check_convex_in_direction(&id, 0.99, dir, 4096).unwrap().passed);
    }
    let gg = closed_form_convolution("gamma1*gamma1").unwrap();
    assert!(check_convex_in_direction(&gg, 0.99, Direction::RealAxis, 4096).unwrap().passed);
    let gp = closed_form_convolution("gamma1*psi1").unwrap();
    assert!(check_convex_in_direction(&gp, 0.99, Direction::ImagAxis, 4096).unwrap().passed);
    assert!(matches!(
        check_convex_in_direction(&id, 0.9, Direction::RealAxis, 16),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn full_convexity_examples() {
    let id = check_fully_convex(&HarmonicMap::identity(8), &grid()).unwrap();
    assert!(id.passed && (id.min_margin - 1.0).abs() < 1e-6, "{id}");
    assert!(check_fully_convex(&entry(GalleryName::Ex2_10, 8), &grid()).unwrap().passed);
    let k = check_fully_convex(&make_entry(GalleryName::K, 8).unwrap().closed_form, &grid()).unwrap();
    assert!(!k.passed);
}

#[test]
fn full_convexity_fails_for_p2_star_p2() {
    // expected failure: the convolution is not fully convex
    let pp = closed_form_convolution("p2*p2").unwrap();
    let r = check_fully_convex(&pp, &grid()).unwrap();
    assert!(!r.passed, "{r}");
}

#[test]
fn silverman_examples() {
    let m1 = mu(1, DEEP);
    let r = check_silverman(&m1.hadamard(&m1).unwrap(), &grid()).unwrap();
    assert!(r.passed(), "{:?}", r);
    for k in 1..=4 {
        let gamma = entry(GalleryName::Psi(k), DEEP).h().clone();
        let p = mu(k, DEEP).hadamard(&gamma).unwrap();
        assert!(check_silverman(&p, &grid()).unwrap().hypothesis.passed, "k = {k}");
    }
    assert!(check_silverman(&AnalyticSeries::identity(8), &grid()).unwrap().passed());
}

#[test]
fn marx_strohhacker_examples() {
    let r = check_marx_strohhacker(&AnalyticSeries::identity(8), &grid()).unwrap();
    assert!((r.min_margin - 0.5).abs() < 1e-15);
    assert!(check_marx_strohhacker(&mu(1, DEEP), &grid()).unwrap().passed);
    let k = check_marx_strohhacker(&AnalyticSeries::koebe(DEEP), &grid()).unwrap();
    assert!(!k.passed);
    // the witness reproduces the margin, and the exact value there violates too
    let w = k.witness;
    let again = value_ratio(&AnalyticSeries::koebe(DEEP), &AnalyticSeries::identity(DEEP), w).unwrap().re - 0.5;
    assert!((again - k.min_margin).abs() <= 1e-10 * k.min_margin.abs());
    let exact = (1.0 / (Complex64::new(1.0, 0.0) - w).powu(2)).re - 0.5;
    assert!(exact < 0.0);
}

#[test]
fn mu1_convolution_inverts_z_derivative() {
    // z (mu1 * h)' = h for normalized h
    let h = entry(GalleryName::Ex2_7, 64).h().clone();
    let lhs = mu(1, 64).hadamard(&h).unwrap().differentiate().shift_up();
    assert!(lhs.max_abs_diff(&h).unwrap() < 1e-12 * h.max_abs());
}

#[test]
fn dilatation_equivalence_on_the_grid() {
    let small = DiskGrid::geometric(0.95, 8, 64).unwrap();
    let cases = [(GalleryName::Gamma(1), GalleryName::Ex2_7), (GalleryName::P(3), GalleryName::P(3)), (GalleryName::Gamma(2), GalleryName::Gamma(2))];
    for (a, b) in cases {
        let (f1, f2) = (entry(a, DEEP), entry(b, DEEP));
        let phi = f2.h().sub(f2.g()).unwrap();
        let conv = f1.convolve(&f2).unwrap();
        let num = f1.h().hadamard(f2.h()).unwrap();
        let den = f1.h().hadamard(&phi).unwrap();
        for z in small.points().skip(1) {
            let w = conv.dilatation_at(z);
            let one = Complex64::new(1.0, 0.0);
            let lhs = ((one + w) / (one - w)).re;
            let rhs = 2.0 * (num.derivative_at(z) / den.derivative_at(z)).re - 1.0;
            assert!((lhs - rhs).abs() < 1e-10 * (1.0 + lhs.abs()), "{a}*{b} at {z}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn refining_a_grid_never_raises_the_margin() {
    let coarse = DiskGrid::geometric(0.99, 20, 90).unwrap();
    let fine = DiskGrid::new(coarse.radii().to_vec(), 360).unwrap();
    let f = entry(GalleryName::Ex2_7, DEEP);
    let a = check_sense_preserving(&f, &coarse).unwrap();
    let b = check_sense_preserving(&f, &fine).unwrap();
    assert!(b.min_margin <= a.min_margin + 1e-12);
}

#[test]
fn pipelines_on_gallery_examples() {
    let s = TheoremSettings::default();
    let named = |names: &[GalleryName]| names.iter().map(|&n| (n.to_string(), entry(n, DEEP))).collect::<Vec<_>>();

    let reports = run_theorem(Pipeline::Thm2_1, &named(&[GalleryName::P(2), GalleryName::P(2)]), None, &s).unwrap();
    assert!(reports.iter().all(|r| r.passed), "{reports:#?}");
    assert!(reports.iter().any(|r| r.criterion.starts_with("Thm2_1.conclusion.univalent_boundary")));

    let reports = run_theorem(Pipeline::Thm2_6, &named(&[GalleryName::Ex2_7]), None, &s).unwrap();
    assert!(reports.iter().all(|r| r.passed), "{reports:#?}");

    for n in 2..=4 {
        let inputs = named(&[GalleryName::P(n), GalleryName::Q(n)]);
        let reports = run_theorem(Pipeline::Cor3_2, &inputs, None, &s).unwrap();
        assert!(reports.iter().all(|r| r.passed), "n = {n}: {reports:#?}");
        let conv = inputs[0].1.convolve(&inputs[1].1).unwrap();
        let inv = 1.0 / (n * n) as f64;
        assert_eq!(conv.h().coeff(1).re, 1.0);
        assert_eq!(conv.h().coeff(n).re, -inv);
        assert_eq!(conv.g().coeff(n).re, inv);
    }

    let err = run_theorem(Pipeline::Cor2_2, &named(&[GalleryName::P(2), GalleryName::Q(2)]), None, &s).unwrap_err();
    assert!(matches!(err, Error::ClassMembership { .. }), "{err}");
    assert!(run_theorem(Pipeline::Cor2_2, &named(&[GalleryName::P(2)]), None, &s).is_err());
}

#[test]
fn every_pipeline_name_parses() {
    for p in Pipeline::ALL {
        assert_eq!(p.to_string().parse::<Pipeline>().unwrap(), p);
    }
    assert!("Thm9_9".parse::<Pipeline>().is_err());
}
