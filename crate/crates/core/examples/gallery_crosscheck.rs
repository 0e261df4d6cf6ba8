//! Every gallery entry against its closed form, and the explicit
//! convolution formulas against series convolution.
//!
//! ```not_rust
//! cargo run -p harmconv --example gallery_crosscheck
//! ```

use harmconv::gallery::{make_entry, ConvolutionDisplay, GalleryName};
use harmconv::Result;
use num_complex::Complex64;

fn main() -> Result<()> {
    let points: Vec<Complex64> = (0..24).map(|j| Complex64::from_polar(0.5, j as f64 * 0.2618)).collect();

    println!("{:<8} {:>12} {:>12}  description", "name", "max error", "tail bound");
    for name in GalleryName::catalogue() {
        let e = make_entry(name, 64)?;
        let err = points
            .iter()
            .map(|&z| e.series.evaluate(z).map(|w| (w - e.closed_form.eval(z)).norm()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("{:<8} {:>12.2e} {:>12.2e}  {}", name.to_string(), err, e.tail_bound(0.5), e.description);
    }

    println!();
    for d in ConvolutionDisplay::catalogue().into_iter().take(6) {
        let (a, b) = d.factors();
        let conv = make_entry(a, 256)?.series.convolve(&make_entry(b, 256)?.series)?;
        let closed = d.closed_form();
        let err = points.iter().map(|&z| (conv.value_at(z) - closed.eval(z)).norm()).fold(0.0, f64::max);
        println!("{d:<14} series vs formula {err:.2e}");
    }
    Ok(())
}
