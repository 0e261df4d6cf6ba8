//! Shearing conformal maps into harmonic ones.
//!
//! Builds the shears of the identity with dilatation `z^k` in both
//! directions and the harmonic Koebe function from `z/(1-z)^2`.
//!
//! ```not_rust
//! cargo run -p harmconv --example shear_construction
//! ```

use harmconv::gallery::{make_entry, GalleryName};
use harmconv::{AnalyticSeries, ClassTag, Direction, HarmonicMap, Result};
use num_complex::Complex64;

fn main() -> Result<()> {
    let n = 64;
    let z = AnalyticSeries::identity(n);
    let probe = Complex64::new(0.4, 0.3);

    for k in 1..=4 {
        let w = AnalyticSeries::monomial(k, n);
        let gamma = HarmonicMap::shear(&z, &w, Direction::RealAxis)?;
        let psi = HarmonicMap::shear(&z, &w, Direction::ImagAxis)?;
        let minus = gamma.is_in_class(&ClassTag::minus(z.clone())?)?;
        let plus = psi.is_in_class(&ClassTag::plus(z.clone())?)?;
        println!(
            "k={k}: h-g=z {minus}, h+g=z {plus}, dilatation at {probe} = {:.6} (z^k = {:.6})",
            gamma.dilatation_at(probe),
            probe.powu(k as u32)
        );
    }

    let koebe = HarmonicMap::shear(&AnalyticSeries::koebe(n), &z, Direction::RealAxis)?;
    let explicit = make_entry(GalleryName::K, n)?.series;
    println!(
        "harmonic Koebe by shear vs explicit parts: max difference {:.2e}",
        koebe.h().max_abs_diff(explicit.h())?.max(koebe.g().max_abs_diff(explicit.g())?)
    );
    println!("K(0.5) = {:.6}", koebe.evaluate(Complex64::new(0.5, 0.0))?);

    match HarmonicMap::shear(&z, &AnalyticSeries::constant(Complex64::new(1.0, 0.0), n), Direction::RealAxis) {
        Ok(_) => println!("unexpected: shear with |w(0)| = 1 succeeded"),
        Err(e) => println!("shear with |w(0)| = 1 is rejected: {e}"),
    }
    Ok(())
}
