//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 1 when a check fails, 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::gallery::{make_entry, named_closed_form, GalleryName};
use crate::render::{self, MeshSpec};
use crate::series::DEFAULT_ORDER;
use crate::verify::{run_theorem, CheckReport, DiskGrid, Pipeline, TheoremSettings};
use crate::{AnalyticSeries, ClosedForm, Direction, HarmonicMap, PlaneMap};

/// Environment variable overriding the default truncation order.
pub const ORDER_ENV: &str = "HARMCONV_ORDER";

/// Default order for sampled checks and renders, where tails at radius 0.99
/// must be negligible.
pub const SAMPLING_ORDER: usize = 2048;

#[derive(Parser, Debug)]
#[command(name = "harmconv", version, about = "Harmonic mappings by shear and convolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump the coefficients of a map as CSV.
    Coeffs {
        map: String,
        #[arg(long)]
        order: Option<usize>,
        /// Which analytic part to dump; `both` uses the harmonic map format.
        #[arg(long, value_enum, default_value_t = Part::H)]
        part: Part,
    },
    /// Shear a conformal map with a given dilatation.
    Construct {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        dilatation: String,
        #[arg(long, value_enum)]
        direction: Axis,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Harmonic convolution of two maps.
    Convolve {
        a: String,
        b: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Run a theorem pipeline and print its reports.
    Check {
        pipeline: String,
        /// Comma-separated maps.
        #[arg(long, value_delimiter = ',', required = true)]
        inputs: Vec<String>,
        #[arg(long, default_value_t = DiskGrid::DEFAULT_RMAX)]
        rmax: f64,
        #[arg(long, default_value_t = DiskGrid::DEFAULT_RADII)]
        radii: usize,
        #[arg(long, default_value_t = DiskGrid::DEFAULT_ANGLES)]
        angles: usize,
        #[arg(long)]
        order: Option<usize>,
        /// Target conformal map for pipelines that take one.
        #[arg(long)]
        phi: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw the image of a polar mesh.
    Render {
        map: String,
        #[arg(long)]
        out: PathBuf,
        /// Also write the sampled points as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        mesh: MeshArgs,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Regenerate the ten gallery figures.
    Figures {
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        mesh: MeshArgs,
    },
}

#[derive(Args, Debug)]
struct MeshArgs {
    #[arg(long, default_value_t = 8)]
    circles: usize,
    #[arg(long, default_value_t = 16)]
    segments: usize,
    #[arg(long, default_value_t = 256)]
    points: usize,
    #[arg(long = "mesh-rmax", default_value_t = 0.97)]
    mesh_rmax: f64,
    /// Points beyond this magnitude are cut out; 0 disables clipping.
    #[arg(long, default_value_t = 20.0)]
    clip: f64,
}

impl MeshArgs {
    fn spec(&self) -> MeshSpec {
        MeshSpec {
            circles: self.circles,
            segments: self.segments,
            points_per_curve: self.points,
            r_max: self.mesh_rmax,
            clip: (self.clip != 0.0).then_some(self.clip),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Part {
    H,
    G,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Axis {
    Real,
    Imag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownName(_) | Error::InvalidParameter(_) | Error::Parse { .. } | Error::Io(_) | Error::ZeroOrder => 2,
        _ => 1,
    }
}

fn default_order(fallback: usize) -> Result<usize> {
    match std::env::var(ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::InvalidParameter(format!("{ORDER_ENV}={v} is not a positive integer"))),
        Err(_) => Ok(fallback),
    }
}

fn order_or(order: Option<usize>, fallback: usize) -> Result<usize> {
    match order {
        Some(0) => Err(Error::ZeroOrder),
        Some(n) => Ok(n),
        None => default_order(fallback),
    }
}

/// Resolves a map spec: a gallery name, `conv:a,b`, `alexander:a`, or a
/// path to a harmonic map CSV.
pub fn resolve_map(spec: &str, order: usize) -> Result<HarmonicMap> {
    if let Some(rest) = spec.strip_prefix("conv:") {
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| Error::InvalidParameter(format!("`{spec}`: expected conv:a,b")))?;
        return resolve_map(a, order)?.convolve(&resolve_map(b, order)?);
    }
    if let Some(rest) = spec.strip_prefix("alexander:") {
        return resolve_map(rest, order)?.alexander();
    }
    if let Ok(name) = spec.parse::<GalleryName>() {
        return Ok(make_entry(name, order)?.series);
    }
    if Path::new(spec).is_file() {
        let f = HarmonicMap::read_csv(BufReader::new(fs::File::open(spec)?))?;
        return f.resized(order);
    }
    Err(Error::UnknownName(spec.to_string()))
}

/// Resolves an analytic function: `z`, a gallery map with vanishing
/// co-analytic part, or a `k,re,im` CSV file.
pub fn resolve_analytic(spec: &str, order: usize) -> Result<AnalyticSeries> {
    if spec == "z" {
        return Ok(AnalyticSeries::identity(order));
    }
    if let Ok(name) = spec.parse::<GalleryName>() {
        let f = make_entry(name, order)?.series;
        if f.g().max_abs() != 0.0 {
            return Err(Error::InvalidParameter(format!("{spec} is not analytic")));
        }
        return Ok(f.h().clone());
    }
    if Path::new(spec).is_file() {
        let s = AnalyticSeries::read_csv(BufReader::new(fs::File::open(spec)?))?;
        return s.resized(order);
    }
    Err(Error::UnknownName(spec.to_string()))
}

/// Dilatation spec: `z^k`, `monomial:k`, `monomial k`, or an analytic spec.
fn resolve_dilatation(spec: &str, order: usize) -> Result<AnalyticSeries> {
    let power = spec
        .strip_prefix("z^")
        .or_else(|| spec.strip_prefix("monomial:"))
        .or_else(|| spec.strip_prefix("monomial "));
    match power {
        Some(k) => {
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad dilatation exponent in `{spec}`")))?;
            Ok(AnalyticSeries::monomial(k, order))
        }
        None => resolve_analytic(spec, order),
    }
}

/// Pointwise evaluator for rendering: the closed form when one is known,
/// else the series.
fn resolve_evaluator(spec: &str, order: usize) -> Result<Box<dyn PlaneMap>> {
    let named = match spec.strip_prefix("conv:") {
        Some(rest) => rest.replacen(',', "*", 1),
        None => spec.to_string(),
    };
    if let Ok(f) = named_closed_form(&named) {
        return Ok(Box::new(f) as Box<dyn PlaneMap>);
    }
    if let Some(inner) = spec.strip_prefix("alexander:") {
        if let Ok(f) = named_closed_form(&format!("gamma1*{inner}")) {
            return Ok(Box::<ClosedForm>::new(f));
        }
    }
    Ok(Box::new(resolve_map(spec, order)?))
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Coeffs { map, order, part } => {
            let f = resolve_map(&map, order_or(order, DEFAULT_ORDER)?)?;
            match part {
                Part::H => f.h().write_csv(out)?,
                Part::G => f.g().write_csv(out)?,
                Part::Both => f.write_csv(out)?,
            }
            Ok(0)
        }
        Command::Construct { phi, dilatation, direction, order } => {
            let order = order_or(order, DEFAULT_ORDER)?;
            let phi = resolve_analytic(&phi, order)?;
            let w = resolve_dilatation(&dilatation, order)?;
            let direction = match direction {
                Axis::Real => Direction::RealAxis,
                Axis::Imag => Direction::ImagAxis,
            };
            HarmonicMap::shear(&phi, &w, direction)?.write_csv(out)?;
            Ok(0)
        }
        Command::Convolve { a, b, order } => {
            let order = order_or(order, DEFAULT_ORDER)?;
            resolve_map(&a, order)?.convolve(&resolve_map(&b, order)?)?.write_csv(out)?;
            Ok(0)
        }
        Command::Check { pipeline, inputs, rmax, radii, angles, order, phi, format } => {
            let pipeline: Pipeline = pipeline.parse()?;
            let order = order_or(order, SAMPLING_ORDER)?;
            let settings = TheoremSettings { grid: DiskGrid::geometric(rmax, radii, angles)?, ..TheoremSettings::default() };
            let maps = inputs
                .iter()
                .map(|s| Ok((s.clone(), resolve_map(s, order)?)))
                .collect::<Result<Vec<_>>>()?;
            let phi = phi.map(|p| resolve_analytic(&p, order)).transpose()?;
            let reports = run_theorem(pipeline, &maps, phi.as_ref(), &settings)?;
            print_reports(&reports, format, out)?;
            let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed).collect();
            for r in &failed {
                writeln!(err, "failed: {}", r.criterion)?;
            }
            Ok(if failed.is_empty() { 0 } else { 1 })
        }
        Command::Render { map, out: path, csv, mesh, order } => {
            let f = resolve_evaluator(&map, order_or(order, SAMPLING_ORDER)?)?;
            let scene = render::sample_polar_mesh(f.as_ref(), &mesh.spec())?;
            render::emit_svg(&scene, &path)?;
            if let Some(csv) = csv {
                render::emit_csv(&scene, csv)?;
            }
            writeln!(out, "{}", path.display())?;
            Ok(0)
        }
        Command::Figures { out: dir, mesh } => {
            fs::create_dir_all(&dir)?;
            let spec = mesh.spec();
            for figure in render::figure_catalogue() {
                let panels = render::render_figure(&figure, &spec)?;
                let path = dir.join(figure.file_name());
                fs::write(&path, render::panels_svg_string(&panels, figure.columns()))?;
                writeln!(out, "{}", path.display())?;
            }
            Ok(0)
        }
    }
}

fn print_reports(reports: &[CheckReport], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
                if let Some(note) = &r.note {
                    writeln!(out, "  {note}")?;
                }
            }
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(reports)
                .map_err(|e| Error::InvalidParameter(format!("cannot serialize reports: {e}")))?;
            writeln!(out, "{text}")?;
        }
    }
    Ok(())
}
