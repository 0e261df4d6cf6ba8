//! Truncated power series: arithmetic, products and evaluation.
//!
//! ```not_rust
//! cargo run -p harmconv --example series_arithmetic
//! ```

use harmconv::series::AnalyticSeries;
use harmconv::Result;
use num_complex::Complex64;

fn main() -> Result<()> {
    let n = 64;
    let one_over = AnalyticSeries::geometric(n); // 1/(1-z)
    let mu1 = one_over.integrate(); // -log(1-z)
    let z = AnalyticSeries::identity(n);

    println!("mu1 coefficients: {:?}", &mu1.coeffs()[..5].iter().map(|c| c.re).collect::<Vec<_>>());
    let nu1 = mu1.sub(&z)?;
    println!("nu1 = mu1 - z starts {:?}", &nu1.coeffs()[..5].iter().map(|c| c.re).collect::<Vec<_>>());

    for x in [0.5, -0.5] {
        let w = mu1.evaluate(Complex64::new(x, 0.0))?;
        println!("mu1({x}) = {:.12}   -log(1-z) = {:.12}", w.re, -(1.0 - x as f64).ln());
    }

    let square = one_over.cauchy_product(&one_over)?;
    println!("1/(1-z)^2 coefficients: {:?}", &square.coeffs()[..6].iter().map(|c| c.re).collect::<Vec<_>>());

    let one_minus_z = AnalyticSeries::constant(Complex64::new(1.0, 0.0), n).sub(&z)?;
    let back = one_minus_z.reciprocal()?;
    println!("reciprocal of 1-z equals 1/(1-z): {}", back.max_abs_diff(&one_over)? == 0.0);

    let hadamard = mu1.hadamard(&mu1)?;
    println!("mu1 * mu1 (Hadamard) coefficient 7: {} = 1/49", hadamard.coeff(7).re);

    let l = AnalyticSeries::half_plane(n);
    println!("z/(1-z) is the Hadamard unit: {}", mu1.hadamard(&l)? == mu1);

    print!("{}", AnalyticSeries::koebe(4).to_csv_string());
    Ok(())
}
