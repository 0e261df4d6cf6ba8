//! Running theorem pipelines: class membership, the coefficient identity,
//! hypotheses and conclusions, each with a margin and a witness.
//!
//! ```not_rust
//! cargo run -p harmconv --release --example verify_theorems
//! ```

use harmconv::gallery::{make_entry, GalleryName};
use harmconv::verify::{run_theorem, DiskGrid, Pipeline, TheoremSettings};
use harmconv::{Error, Result};

fn main() -> Result<()> {
    let order = 2048;
    let settings = TheoremSettings { grid: DiskGrid::geometric(0.99, 20, 360)?, ..TheoremSettings::default() };
    let named = |names: &[GalleryName]| -> Result<Vec<_>> {
        names.iter().map(|&n| Ok((n.to_string(), make_entry(n, order)?.series))).collect()
    };

    let runs = [
        (Pipeline::Cor2_2, vec![GalleryName::P(3), GalleryName::P(3)]),
        (Pipeline::Thm2_6, vec![GalleryName::Ex2_7]),
        (Pipeline::Cor2_8ii, vec![GalleryName::F]),
        (Pipeline::Cor3_2, vec![GalleryName::Gamma(2), GalleryName::Psi(2)]),
        (Pipeline::Cor2_2, vec![GalleryName::P(2), GalleryName::Q(2)]),
    ];
    for (pipeline, inputs) in runs {
        println!("== {pipeline} {:?}", inputs.iter().map(|n| n.to_string()).collect::<Vec<_>>());
        match run_theorem(pipeline, &named(&inputs)?, None, &settings) {
            Ok(reports) => {
                for r in &reports {
                    println!("{r}");
                }
                println!("all passed: {}", reports.iter().all(|r| r.passed));
            }
            Err(e @ Error::ClassMembership { .. }) => println!("rejected: {e}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
