//! The Alexander operator `a_n -> a_n / n` is convolution with `gamma1`.
//!
//! ```not_rust
//! cargo run -p harmconv --example alexander_operator
//! ```

use harmconv::gallery::{closed_form_convolution, make_entry, GalleryName};
use harmconv::Result;
use num_complex::Complex64;

fn main() -> Result<()> {
    let n = 256;
    let gamma1 = make_entry(GalleryName::Gamma(1), n)?.series;
    for name in [GalleryName::L, GalleryName::K, GalleryName::F, GalleryName::Ex3_6] {
        let f = make_entry(name, n)?.series;
        let a = f.alexander()?;
        let b = f.convolve(&gamma1)?;
        let diff = a.h().max_abs_diff(b.h())?.max(a.g().max_abs_diff(b.g())?);
        println!("{name:<6} alexander vs gamma1 convolution: {diff:.2e}");
    }

    let l = make_entry(GalleryName::L, n)?.series.alexander()?;
    let closed = closed_form_convolution("alexander(L)")?;
    for z in [Complex64::new(0.3, 0.0), Complex64::new(-0.2, 0.4), Complex64::new(0.0, -0.45)] {
        println!("Λ[L]({z}) = {:.12}   formula {:.12}", l.evaluate(z)?, closed.eval(z));
    }
    Ok(())
}
