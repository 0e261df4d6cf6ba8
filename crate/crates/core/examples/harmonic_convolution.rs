//! Harmonic convolution of gallery maps and the class it lands in.
//!
//! ```not_rust
//! cargo run -p harmconv --example harmonic_convolution
//! ```

use harmconv::gallery::{make_entry, GalleryName};
use harmconv::{ClassTag, Result};

fn main() -> Result<()> {
    let n = 64;
    let get = |name| make_entry(name, n).map(|e| e.series);

    for m in 2..=4 {
        let p = get(GalleryName::P(m))?;
        let q = get(GalleryName::Q(m))?;
        let pp = p.convolve(&p)?;
        let pq = p.convolve(&q)?;
        println!(
            "p{m}*p{m}: h_{m} = {}, g_{m} = {};  p{m}*q{m}: h_{m} = {}, g_{m} = {}",
            pp.h().coeff(m).re,
            pp.g().coeff(m).re,
            pq.h().coeff(m).re,
            pq.g().coeff(m).re
        );
    }

    let gamma1 = get(GalleryName::Gamma(1))?;
    let f = get(GalleryName::Ex2_7)?;
    let conv = gamma1.convolve(&f)?;
    let phi = f.h().sub(f.g())?;
    let target = gamma1.h().hadamard(&phi)?;
    let tag = ClassTag::minus(target)?;
    println!("gamma1*ex2_7 lies in {tag}: residual {:.2e}", conv.class_residual(&tag)?.max_abs());

    let e = get(GalleryName::E)?;
    let k = get(GalleryName::K)?;
    let ke = k.convolve(&e)?;
    println!("K*e == K: {}", ke.h() == k.h() && ke.g() == k.g());

    print!("{}", gamma1.convolve(&get(GalleryName::Ex2_10)?)?.resized(3)?.to_csv_string());
    Ok(())
}
