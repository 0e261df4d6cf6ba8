//! Images of polar meshes: one map to SVG and CSV, then the whole figure set.
//!
//! ```not_rust
//! cargo run -p harmconv --release --example render_figures -- out/
//! ```

use std::path::PathBuf;

use harmconv::gallery::named_closed_form;
use harmconv::render::{emit_csv, emit_svg, figure_catalogue, mesh_crossings, panels_svg_string, render_figure, sample_polar_mesh, MeshSpec};
use harmconv::Result;

fn main() -> Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;

    let spec = MeshSpec::default();
    let koebe = sample_polar_mesh(&named_closed_form("gamma1*K")?, &spec)?;
    emit_svg(&koebe, dir.join("gamma1_K.svg"))?;
    emit_csv(&koebe, dir.join("gamma1_K.csv"))?;
    println!("gamma1*K: {} polylines, {} points", koebe.curves.len(), koebe.point_count());

    for fig in figure_catalogue() {
        let panels = render_figure(&fig, &spec)?;
        std::fs::write(dir.join(fig.file_name()), panels_svg_string(&panels, fig.columns()))?;
        let crossings: Vec<String> = fig
            .panels
            .iter()
            .zip(&panels)
            .map(|(p, (title, scene))| format!("{title}: {}{}", mesh_crossings(scene).len(), if p.univalent { "" } else { " (not univalent)" }))
            .collect();
        println!("{} crossing pairs  {}", fig.file_name(), crossings.join(", "));
    }
    Ok(())
}
