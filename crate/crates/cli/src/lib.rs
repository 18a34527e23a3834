//! Command-line front end for spotlight tilings.
//!
//! Exit status: 0 on success, 1 when a verification or `--check` comparison
//! fails, 2 on bad arguments or unreadable input.

pub mod render;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use spotlight_core::formulas::{self, format_decimal};
use spotlight_core::verify::{self, oeis_prefix, render_reports};
use spotlight_core::{
    enumerate_tilings, Corner, CornerSet, Ensemble, Region, RegionFamily, TilingRecord,
};

pub use render::{render_ascii, render_svg, render_svg_gallery};

/// `MxN` rectangle dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dims {
    pub m: u32,
    pub n: u32,
}

impl FromStr for Dims {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (m, n) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected MxN, got `{s}`"))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad dimension `{v}`: {e}"))
        };
        let dims = Dims {
            m: parse(m)?,
            n: parse(n)?,
        };
        if dims.m == 0 || dims.n == 0 {
            return Err(format!("dimensions must be positive, got `{s}`"));
        }
        Ok(dims)
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// Family name accepted by `family --name`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Rect,
    Corners,
    Frame,
    CornerRegion,
    Trimmed,
}

/// Parse a compact family description: `rect:MxN`, `frame:MxN`,
/// `corners:MxN:NW,SE`, `corner-region:MxN:SE`, `trimmed:MxN:R`.
pub fn parse_family_spec(spec: &str) -> Result<RegionFamily, String> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default().trim();
    let dims: Dims = parts
        .next()
        .ok_or_else(|| format!("`{spec}` is missing MxN"))?
        .parse()?;
    let extra = parts.next().map(str::trim);
    if parts.next().is_some() {
        return Err(format!("too many fields in `{spec}`"));
    }
    let need_extra = |what: &str| extra.ok_or_else(|| format!("`{spec}` needs a {what} field"));
    let Dims { m, n } = dims;
    let family = match name {
        "rect" => RegionFamily::Rectangle { m, n },
        "frame" => RegionFamily::Frame { m, n },
        "corners" => RegionFamily::RectMinusCorners {
            m,
            n,
            corners: need_extra("corner list")?
                .parse()
                .map_err(|e| format!("{e}"))?,
        },
        "corner-region" => RegionFamily::CornerRegion {
            m,
            n,
            corner: need_extra("corner")?.parse().map_err(|e| format!("{e}"))?,
        },
        "trimmed" => RegionFamily::TrimmedRectangle {
            m,
            n,
            r: need_extra("r")?
                .parse()
                .map_err(|e| format!("bad r: {e}"))?,
        },
        other => return Err(format!("unknown family `{other}`")),
    };
    if extra.is_some() && matches!(name, "rect" | "frame") {
        return Err(format!("`{name}` takes no extra field"));
    }
    family.validate().map_err(|e| e.to_string())?;
    Ok(family)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DrawFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Parser)]
#[command(
    name = "spotlight",
    version,
    about = "Count, enumerate and draw spotlight tilings of grid regions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
#[group(required = true, multiple = false)]
pub struct RegionSource {
    /// Rectangle with M rows and N columns.
    #[arg(long, value_name = "MxN")]
    pub rect: Option<Dims>,
    /// Region grid file: `#` for cells, `.` for gaps, one line per row.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

impl RegionSource {
    fn load(&self) -> Result<Region> {
        if let Some(d) = self.rect {
            return Ok(Region::rectangle(d.m, d.n));
        }
        let path = self.file.as_ref().expect("clap enforces one source");
        read_region(path)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of tilings.
    #[command(group(clap::ArgGroup::new("source").required(true).multiple(false)))]
    Count {
        /// Rectangle with M rows and N columns (closed form).
        #[arg(long, value_name = "MxN", group = "source")]
        rect: Option<Dims>,
        /// Region grid file (enumerated).
        #[arg(long, value_name = "PATH", group = "source")]
        file: Option<PathBuf>,
        /// Built-in family such as `frame:3x4` or `corners:4x5:NW,SE` (closed form).
        #[arg(long, value_name = "SPEC", group = "source", value_parser = parse_family_spec)]
        family: Option<RegionFamily>,
        /// Also enumerate and fail unless the two counts agree.
        #[arg(long)]
        check: bool,
    },
    /// Print every tiling in canonical order.
    Enumerate {
        #[command(flatten)]
        source: RegionSource,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        /// Stop after K tilings.
        #[arg(long, value_name = "K")]
        limit: Option<usize>,
    },
    /// Draw one tiling stored as JSON.
    Render {
        #[arg(long, value_name = "PATH")]
        tiling: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: DrawFormat,
    },
    /// Size distribution and exact mean size of a rectangle.
    Dist {
        #[arg(long, value_name = "MxN")]
        rect: Dims,
    },
    /// Direction generating function of a rectangle, one term per line.
    Gf {
        #[arg(long, value_name = "MxN")]
        rect: Dims,
    },
    /// Evaluate a family closed form.
    Family {
        #[arg(long, value_enum)]
        name: FamilyName,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Removed corners for `corners`, e.g. `NW,SE`.
        #[arg(long, value_name = "LIST")]
        corners: Option<CornerSet>,
        /// Corner for `corner-region`.
        #[arg(long, value_name = "D")]
        dir: Option<Corner>,
        /// Trimmed cells for `trimmed`.
        #[arg(long, value_name = "R")]
        r: Option<u32>,
    },
    /// Cross-check enumeration, closed forms and reference tables.
    Verify {
        #[arg(long, value_name = "S", default_value_t = 10)]
        max_sum: u32,
        #[arg(long, value_name = "D", default_value_t = 5)]
        max_dim: u32,
    },
    /// Emit an OEIS array read by antidiagonals.
    Oeis {
        #[arg(long, value_name = "ID")]
        id: verify::Sequence,
        #[arg(long, value_name = "K")]
        count: usize,
    },
}

/// An error caused by the invocation itself.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn read_region(path: &PathBuf) -> Result<Region> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Region::parse_grid(&text).with_context(|| format!("parsing {}", path.display()))
}

fn enumerate(region: &Region) -> Result<Ensemble> {
    enumerate_tilings(region).map_err(|e| usage(e.to_string()))
}

fn family_from_args(
    name: FamilyName,
    m: u32,
    n: u32,
    corners: Option<CornerSet>,
    dir: Option<Corner>,
    r: Option<u32>,
) -> Result<RegionFamily> {
    let family = match name {
        FamilyName::Rect => RegionFamily::Rectangle { m, n },
        FamilyName::Frame => RegionFamily::Frame { m, n },
        FamilyName::Corners => RegionFamily::RectMinusCorners {
            m,
            n,
            corners: corners.ok_or_else(|| usage("--name corners needs --corners"))?,
        },
        FamilyName::CornerRegion => RegionFamily::CornerRegion {
            m,
            n,
            corner: dir.ok_or_else(|| usage("--name corner-region needs --dir"))?,
        },
        FamilyName::Trimmed => RegionFamily::TrimmedRectangle {
            m,
            n,
            r: r.ok_or_else(|| usage("--name trimmed needs --r"))?,
        },
    };
    Ok(family)
}

/// Run one parsed command, writing results to `out`. Returns the exit code
/// for completed commands; errors map to exit code 2.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Count {
            rect,
            file,
            family,
            check,
        } => {
            let (formula, region) = match (rect, file, family) {
                (Some(d), _, _) => (
                    Some(formulas::rect_count(d.m, d.n)),
                    Region::rectangle(d.m, d.n),
                ),
                (_, Some(path), _) => (None, read_region(&path)?),
                (_, _, Some(f)) => {
                    let value = formulas::family_count(&f).map_err(|e| usage(e.to_string()))?;
                    (Some(value), f.build()?)
                }
                _ => unreachable!("clap requires exactly one source"),
            };
            match formula {
                None => writeln!(out, "{}", enumerate(&region)?.len())?,
                Some(value) => {
                    writeln!(out, "{value}")?;
                    if check {
                        let enumerated = BigUint::from(enumerate(&region)?.len());
                        if enumerated != value {
                            writeln!(out, "check failed: enumeration gives {enumerated}")?;
                            return Ok(1);
                        }
                    }
                }
            }
        }
        Command::Enumerate {
            source,
            format,
            limit,
        } => {
            let region = source.load()?;
            let ensemble = enumerate(&region)?;
            let shown = &ensemble.tilings()[..limit.unwrap_or(usize::MAX).min(ensemble.len())];
            match format {
                Format::Ascii => {
                    for (i, t) in shown.iter().enumerate() {
                        if i > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "{}", render_ascii(t))?;
                    }
                }
                Format::Json => {
                    for t in shown {
                        writeln!(out, "{}", TilingRecord::new(&region, t).to_json())?;
                    }
                }
                Format::Svg => out.write_all(render_svg_gallery(shown, &region, 8).as_bytes())?,
            }
        }
        Command::Render { tiling, format } => {
            let text = std::fs::read_to_string(&tiling)
                .with_context(|| format!("reading {}", tiling.display()))?;
            let record = TilingRecord::from_json(&text)?;
            let (region, t) = record.to_tiling()?;
            match format {
                DrawFormat::Ascii => writeln!(out, "{}", render_ascii(&t))?,
                DrawFormat::Svg => out.write_all(render_svg(&t, &region).as_bytes())?,
            }
        }
        Command::Dist { rect } => {
            let ensemble = enumerate(&Region::rectangle(rect.m, rect.n))?;
            for (size, count) in ensemble.size_distribution() {
                writeln!(out, "{size} {count}")?;
            }
            let mean = ensemble.mean_size().expect("rectangles have tilings");
            writeln!(out, "mean {mean} = {}", format_decimal(&mean, 3))?;
        }
        Command::Gf { rect } => {
            let poly = formulas::rect_hv_gf(rect.m, rect.n);
            if poly.is_zero() {
                writeln!(out, "0")?;
            }
            for (a, b, c) in poly.terms() {
                writeln!(out, "{c}·H^{a}·V^{b}")?;
            }
        }
        Command::Family {
            name,
            m,
            n,
            corners,
            dir,
            r,
        } => {
            let family = family_from_args(name, m, n, corners, dir, r)?;
            let value = formulas::family_count(&family).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "{value}")?;
        }
        Command::Verify { max_sum, max_dim } => {
            let reports = verify::run_all(max_sum, max_dim);
            out.write_all(render_reports(&reports).as_bytes())?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(1);
            }
        }
        Command::Oeis { id, count } => {
            for value in oeis_prefix(id.id(), count)? {
                writeln!(out, "{value}")?;
            }
        }
    }
    Ok(0)
}

/// Parse `argv` (program name first) and run it. Usage text and error
/// messages go to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let mut rendered = e.render().to_string();
            if code == 2 && !rendered.contains("Usage:") {
                rendered.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}\n\n{}", Cli::command().render_usage());
            2
        }
    }
}
