//! Images of polar meshes (concentric circles and radial segments) under a
//! map, written as SVG or CSV.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::pair_intersections;
use crate::numfmt::g17;
use crate::PlaneMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    /// Image of `t e^{i alpha}`, `0 <= t <= r_max`; `param` is `alpha`.
    Radial,
    /// Image of `rho e^{i t}`, `0 <= t <= 2 pi`; `param` is `rho`.
    Circular,
}

impl CurveKind {
    fn as_str(&self) -> &'static str {
        match self {
            CurveKind::Radial => "radial",
            CurveKind::Circular => "circular",
        }
    }
}

/// One polyline of the mesh. Clipping may split a mesh curve into several
/// pieces sharing the same `id`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeshCurve {
    pub id: usize,
    pub kind: CurveKind,
    pub param: f64,
    /// Curve parameter of each point.
    pub ts: Vec<f64>,
    pub points: Vec<Complex64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ViewBox {
    pub min_x: f64,
    pub min_y: f64,
    pub width: f64,
    pub height: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderScene {
    pub curves: Vec<MeshCurve>,
    pub viewbox: ViewBox,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeshSpec {
    pub circles: usize,
    pub segments: usize,
    pub points_per_curve: usize,
    pub r_max: f64,
    /// Points farther than this from the origin are cut out of their curve.
    pub clip: Option<f64>,
}

impl Default for MeshSpec {
    fn default() -> Self {
        Self { circles: 8, segments: 16, points_per_curve: 256, r_max: 0.97, clip: Some(20.0) }
    }
}

impl MeshSpec {
    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.circles < 1 {
            return bad("mesh needs at least one circle".into());
        }
        if self.segments < 2 {
            return bad("mesh needs at least two radial segments".into());
        }
        if self.points_per_curve < 16 {
            return bad(format!("mesh needs at least 16 points per curve, got {}", self.points_per_curve));
        }
        if !(self.r_max > 0.0 && self.r_max < 1.0) {
            return bad(format!("mesh radius {} outside (0, 1)", self.r_max));
        }
        if matches!(self.clip, Some(c) if !(c > 0.0)) {
            return bad("clip magnitude must be positive".into());
        }
        Ok(())
    }
}

impl RenderScene {
    pub fn point_count(&self) -> usize {
        self.curves.iter().map(|c| c.points.len()).sum()
    }

    fn from_curves(curves: Vec<MeshCurve>) -> Self {
        let viewbox = bounding_box(curves.iter().flat_map(|c| c.points.iter().copied()));
        Self { curves, viewbox }
    }
}

fn bounding_box(points: impl Iterator<Item = Complex64>) -> ViewBox {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    if x0 > x1 {
        return ViewBox { min_x: -1.0, min_y: -1.0, width: 2.0, height: 2.0 };
    }
    let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1e-9);
    ViewBox { min_x: x0 - pad, min_y: y0 - pad, width: x1 - x0 + 2.0 * pad, height: y1 - y0 + 2.0 * pad }
}

/// Splits a sampled curve into runs of finite, unclipped points.
fn clip_runs(id: usize, kind: CurveKind, param: f64, ts: &[f64], pts: &[Complex64], clip: Option<f64>) -> Vec<MeshCurve> {
    let keep = |w: &Complex64| w.is_finite() && clip.map_or(true, |c| w.norm() <= c);
    let mut out = Vec::new();
    let mut start = None;
    for i in 0..=pts.len() {
        let inside = i < pts.len() && keep(&pts[i]);
        match (start, inside) {
            (None, true) => start = Some(i),
            (Some(s), false) => {
                if i - s >= 2 {
                    out.push(MeshCurve { id, kind, param, ts: ts[s..i].to_vec(), points: pts[s..i].to_vec() });
                }
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// Samples the images of `circles` concentric circles (radii `j r_max / circles`)
/// and `segments` equally spaced radii, `points_per_curve` points each.
pub fn sample_polar_mesh<M: PlaneMap + ?Sized>(f: &M, spec: &MeshSpec) -> Result<RenderScene> {
    spec.validate()?;
    let n = spec.points_per_curve;
    let mut jobs: Vec<(usize, CurveKind, f64)> = (1..=spec.circles)
        .map(|j| (j - 1, CurveKind::Circular, spec.r_max * j as f64 / spec.circles as f64))
        .collect();
    jobs.extend((0..spec.segments).map(|m| (spec.circles + m, CurveKind::Radial, TAU * m as f64 / spec.segments as f64)));

    let pieces: Vec<Result<Vec<MeshCurve>>> = jobs
        .par_iter()
        .map(|&(id, kind, param)| {
            let ts: Vec<f64> = (0..n)
                .map(|i| {
                    let s = i as f64 / (n - 1) as f64;
                    match kind {
                        CurveKind::Circular => TAU * s,
                        CurveKind::Radial => spec.r_max * s,
                    }
                })
                .collect();
            let pts = ts
                .iter()
                .map(|&t| {
                    let z = match kind {
                        CurveKind::Circular => Complex64::from_polar(param, t),
                        CurveKind::Radial => Complex64::from_polar(t, param),
                    };
                    f.try_eval(z)
                })
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Curve {
                    curve: format!("{} curve {id} (parameter {param})", kind.as_str()),
                    source: Box::new(e),
                })?;
            Ok(clip_runs(id, kind, param, &ts, &pts, spec.clip))
        })
        .collect();
    let mut curves = Vec::new();
    for p in pieces {
        curves.extend(p?);
    }
    Ok(RenderScene::from_curves(curves))
}

fn svg_paths(scene: &RenderScene, out: &mut String) {
    let vb = scene.viewbox;
    let stroke = 0.005 * vb.width.max(vb.height);
    for c in &scene.curves {
        let color = match c.kind {
            CurveKind::Circular => "#1f4e9c",
            CurveKind::Radial => "#b03a2e",
        };
        let mut d = String::new();
        for (i, p) in c.points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            // flip y so the picture has the mathematical orientation
            let _ = write!(d, "{cmd}{} {} ", g17(p.re), g17(-p.im));
        }
        let _ = writeln!(
            out,
            r#"<path d="{}" fill="none" stroke="{color}" stroke-width="{}"/>"#,
            d.trim_end(),
            g17(stroke)
        );
    }
}

fn flipped_viewbox(vb: &ViewBox) -> String {
    format!("{} {} {} {}", g17(vb.min_x), g17(-(vb.min_y + vb.height)), g17(vb.width), g17(vb.height))
}

/// SVG document for a single scene.
pub fn svg_string(scene: &RenderScene) -> String {
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" height="{}" viewBox="{}">"#,
        (600.0 * scene.viewbox.height / scene.viewbox.width).round().max(1.0),
        flipped_viewbox(&scene.viewbox)
    );
    svg_paths(scene, &mut out);
    out.push_str("</svg>\n");
    out
}

pub fn emit_svg(scene: &RenderScene, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, svg_string(scene))?;
    Ok(())
}

/// Several titled scenes side by side, `columns` per row.
pub fn panels_svg_string(panels: &[(String, RenderScene)], columns: usize) -> String {
    let columns = columns.max(1);
    let (cell_w, cell_h, title_h) = (360.0, 300.0, 24.0);
    let rows = panels.len().div_ceil(columns);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}">"#,
        cell_w * columns.min(panels.len().max(1)) as f64,
        (cell_h + title_h) * rows as f64
    );
    for (i, (title, scene)) in panels.iter().enumerate() {
        let (x, y) = (cell_w * (i % columns) as f64, (cell_h + title_h) * (i / columns) as f64);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="serif" font-size="16" text-anchor="middle">{}</text>"#,
            x + cell_w / 2.0,
            y + 18.0,
            xml_escape(title)
        );
        let _ = writeln!(
            out,
            r#"<svg x="{x}" y="{}" width="{cell_w}" height="{cell_h}" viewBox="{}" preserveAspectRatio="xMidYMid meet">"#,
            y + title_h,
            flipped_viewbox(&scene.viewbox)
        );
        svg_paths(scene, &mut out);
        out.push_str("</svg>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// `curve_id,kind,param,t,re,im`, one row per point.
pub fn write_csv<W: Write>(scene: &RenderScene, mut out: W) -> Result<()> {
    writeln!(out, "curve_id,kind,param,t,re,im")?;
    for c in &scene.curves {
        for (t, p) in c.ts.iter().zip(&c.points) {
            writeln!(out, "{},{},{},{},{},{}", c.id, c.kind.as_str(), g17(c.param), g17(*t), g17(p.re), g17(p.im))?;
        }
    }
    Ok(())
}

pub fn emit_csv(scene: &RenderScene, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    write_csv(scene, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

/// Reads a mesh CSV back. Consecutive rows with the same id and a
/// decreasing-free parameter continue one polyline.
pub fn read_csv<R: BufRead>(input: R) -> Result<RenderScene> {
    let mut lines = input.lines();
    match lines.next() {
        Some(Ok(h)) if h.trim() == "curve_id,kind,param,t,re,im" => {}
        _ => return Err(Error::Parse { line: 1, message: "expected mesh CSV header".into() }),
    }
    let mut curves: Vec<MeshCurve> = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let lineno = i + 2;
        let f: Vec<&str> = line.trim().split(',').collect();
        if f.len() != 6 {
            return Err(Error::Parse { line: lineno, message: "expected 6 fields".into() });
        }
        let num = |s: &str| s.parse::<f64>().map_err(|_| Error::Parse { line: lineno, message: format!("bad number `{s}`") });
        let id: usize = f[0].parse().map_err(|_| Error::Parse { line: lineno, message: "bad curve id".into() })?;
        let kind = match f[1] {
            "radial" => CurveKind::Radial,
            "circular" => CurveKind::Circular,
            other => return Err(Error::Parse { line: lineno, message: format!("bad kind `{other}`") }),
        };
        let (param, t, p) = (num(f[2])?, num(f[3])?, Complex64::new(num(f[4])?, num(f[5])?));
        match curves.last_mut() {
            Some(c) if c.id == id && c.ts.last().map_or(true, |&last| last < t) => {
                c.ts.push(t);
                c.points.push(p);
            }
            _ => curves.push(MeshCurve { id, kind, param, ts: vec![t], points: vec![p] }),
        }
    }
    Ok(RenderScene::from_curves(curves))
}

/// Pairs of distinct mesh curves that meet where a univalent map cannot
/// make them meet: two circles touching, two radial segments meeting away
/// from the origin, or a circle and a radius crossing more than once.
/// Returns `(id_a, id_b)` pairs.
pub fn mesh_crossings(scene: &RenderScene) -> Vec<(usize, usize)> {
    let curves = &scene.curves;
    let pairs: Vec<(usize, usize)> = (0..curves.len())
        .flat_map(|i| (i + 1..curves.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| curves[i].id != curves[j].id)
        .collect();
    let mut bad: Vec<(usize, usize)> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let (a, b) = (&curves[i], &curves[j]);
            let hits = pair_intersections(&a.points, &b.points);
            let violates = match (a.kind, b.kind) {
                (CurveKind::Circular, CurveKind::Circular) => !hits.is_empty(),
                (CurveKind::Radial, CurveKind::Radial) => {
                    let from_origin = a.ts[0] == 0.0 && b.ts[0] == 0.0;
                    hits.iter().any(|&h| !(from_origin && h == (0, 0)))
                }
                _ => distinct_crossings(a, b, &hits) > 1,
            };
            violates.then(|| (a.id.min(b.id), a.id.max(b.id)))
        })
        .collect();
    bad.sort_unstable();
    bad.dedup();
    bad
}

fn distinct_crossings(a: &MeshCurve, b: &MeshCurve, hits: &[(usize, usize)]) -> usize {
    let mut points: Vec<Complex64> = Vec::new();
    for &(i, j) in hits {
        let p = crate::geometry::crossing_point(a.points[i], a.points[i + 1], b.points[j], b.points[j + 1]);
        let scale = 1e-9 * (1.0 + p.norm());
        if points.iter().all(|q| (q - p).norm() > scale) {
            points.push(p);
        }
    }
    points.len()
}

/// One panel of a gallery figure: a title and the map spec it draws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigurePanel {
    pub title: String,
    /// Gallery name (`gamma1`) or named convolution (`gamma1*K`).
    pub map: String,
    /// Whether the map is known to be univalent, so its mesh must not cross.
    pub univalent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure {
    pub number: usize,
    pub panels: Vec<FigurePanel>,
}

impl Figure {
    pub fn file_name(&self) -> String {
        format!("fig{}.svg", self.number)
    }

    /// Panel file stem such as `fig1a`, or `fig3` for single-panel figures.
    pub fn panel_stem(&self, index: usize) -> String {
        if self.panels.len() == 1 {
            format!("fig{}", self.number)
        } else {
            format!("fig{}{}", self.number, (b'a' + index as u8) as char)
        }
    }

    pub fn columns(&self) -> usize {
        if self.panels.len() >= 6 { 3 } else { self.panels.len().max(1) }
    }
}

fn panel(title: &str, map: &str, univalent: bool) -> FigurePanel {
    FigurePanel { title: title.to_string(), map: map.to_string(), univalent }
}

/// The ten gallery figures.
pub fn figure_catalogue() -> Vec<Figure> {
    let f1 = (2..=4)
        .flat_map(|n| [panel(&format!("p{n}"), &format!("p{n}"), false), panel(&format!("p{n}*p{n}"), &format!("p{n}*p{n}"), true)])
        .collect();
    let f2 = (1..=3)
        .flat_map(|k| {
            [panel(&format!("gamma{k}"), &format!("gamma{k}"), true), panel(&format!("gamma{k}*gamma{k}"), &format!("gamma{k}*gamma{k}"), true)]
        })
        .collect();
    let mut f7: Vec<FigurePanel> = (2..=4).map(|n| panel(&format!("q{n}"), &format!("q{n}"), false)).collect();
    f7.extend((2..=4).map(|n| panel(&format!("p{n}*q{n}"), &format!("p{n}*q{n}"), true)));
    let mut f8: Vec<FigurePanel> = (1..=3).map(|k| panel(&format!("psi{k}"), &format!("psi{k}"), true)).collect();
    f8.extend((1..=3).map(|k| panel(&format!("gamma{k}*psi{k}"), &format!("gamma{k}*psi{k}"), true)));
    let panels = vec![
        f1,
        f2,
        vec![panel("gamma1*ex2_7", "gamma1*ex2_7", true)],
        vec![panel("ex2_10", "ex2_10", true), panel("gamma1*ex2_10", "gamma1*ex2_10", true)],
        vec![panel("F", "F", true), panel("gamma1*F", "gamma1*F", true)],
        vec![panel("gamma1*K", "gamma1*K", true)],
        f7,
        f8,
        vec![panel("gamma1*ex3_6", "gamma1*ex3_6", true)],
        vec![panel("gamma1*L", "gamma1*L", true)],
    ];
    panels.into_iter().enumerate().map(|(i, panels)| Figure { number: i + 1, panels }).collect()
}

/// Samples every panel of `figure` through its closed form.
pub fn render_figure(figure: &Figure, spec: &MeshSpec) -> Result<Vec<(String, RenderScene)>> {
    figure
        .panels
        .iter()
        .map(|p| {
            let f = crate::gallery::named_closed_form(&p.map)?;
            Ok((p.title.clone(), sample_polar_mesh(&f, spec)?))
        })
        .collect()
}
