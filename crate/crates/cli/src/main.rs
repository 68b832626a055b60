use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use multifold_cli::acceptance;
use multifold_cli::io::{read_polygon, write_document, write_polygon, write_text, IoError};
use multifold_cli::render::{write_svg, RenderSpec};
use multifold_core::bolle::check_bolle;
use multifold_core::families::{
    decagon_from_vertex, hexagon_tile, octagon_a, octagon_b, parallelogram_tile, region_w, FamilyError,
};
use multifold_core::format::{format_polygon, PolygonDocument};
use multifold_core::oracle::{verify_multiplicity, OracleFailure};
use multifold_core::search::decagon::search_decagon_frames;
use multifold_core::search::octagon::{search_octagon_configs, OctagonFamily};
use multifold_core::{q, CsPolygon, Lattice2, Point2, Rational, Vec2};

#[derive(Parser)]
#[command(name = "multifold", version, about = "Exact tools for multiple lattice tilings by convex polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run Bolle's criterion on a polygon file (`-` reads stdin)
    Check { file: String },
    /// Count coverage of P + L at seeded random points
    Oracle(OracleArgs),
    /// Write a member of a tile family in the polygon file format
    Family {
        #[command(subcommand)]
        family: Family,
        /// output file, `-` for stdout
        #[arg(short, long, default_value = "-", global = true)]
        output: String,
    },
    /// Write the region W of admissible first decagon vertices
    RegionW {
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Exhaustive searches for five-fold lattice tiles
    Enumerate {
        #[command(subcommand)]
        target: Target,
    },
    /// Draw a patch of the arrangement P + L as SVG
    Render(RenderArgs),
    /// Run the acceptance suite
    Selftest {
        /// run only these criteria
        #[arg(long = "criterion", value_name = "N")]
        criteria: Vec<u32>,
    },
}

#[derive(Args)]
struct OracleArgs {
    file: String,
    /// expected multiplicity; defaults to the Bolle multiplicity, else area/det rounded
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// print every sample
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Family {
    /// (-a,-3/2),(1-a,-3/2),(1+a,-1/2),(1-a,1/2) and negatives, 0 < a < 1/4
    OctagonA {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha: Rational,
    },
    /// the second five-fold octagon family, 1/4 < b < 1/3
    OctagonB {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: Rational,
    },
    /// the five-fold decagon with first vertex v1 inside W
    Decagon {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        v1: Point2,
    },
    /// the hexagon with half-vertices v1, v2, v3 (give --v three times)
    Hexagon {
        #[arg(long = "v", value_parser = parse_point, allow_hyphen_values = true, required = true, num_args = 1)]
        v: Vec<Point2>,
    },
    /// the parallelogram with vertices +-(b1+b2)/2, +-(b2-b1)/2
    Parallelogram {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        b1: Vec2,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        b2: Vec2,
    },
}

#[derive(Subcommand)]
enum Target {
    /// decagon midpoint frames up to an area bound
    Decagons {
        #[arg(long, default_value_t = 19)]
        max_area: i64,
        #[arg(long, value_enum, default_value_t = Report::Classes)]
        report: Report,
    },
    /// octagon configurations of area 5
    Octagons {
        #[arg(long, value_enum, default_value_t = Report::Classes)]
        report: Report,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    /// one row per class
    Classes,
    /// classes followed by every pruned branch
    Pruned,
}

#[derive(Args)]
struct RenderArgs {
    file: String,
    #[arg(short, long, default_value = "-")]
    output: String,
    /// x0,y0,x1,y1 in exact rationals
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<(Point2, Point2)>,
    /// pixels per unit
    #[arg(long)]
    scale: Option<f64>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("bad rational {s:?}: {e}"))
}

fn parse_list(s: &str, n: usize) -> Result<Vec<Rational>, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(format!("expected {n} comma-separated rationals, got {s:?}"));
    }
    parts.into_iter().map(parse_rational).collect()
}

fn parse_point(s: &str) -> Result<Point2, String> {
    let v = parse_list(s, 2)?;
    Ok(Vec2::new(v[0].clone(), v[1].clone()))
}

fn parse_window(s: &str) -> Result<(Point2, Point2), String> {
    let v = parse_list(s, 4)?;
    if v[0] >= v[2] || v[1] >= v[3] {
        return Err("window needs x0 < x1 and y0 < y1".into());
    }
    Ok((Vec2::new(v[0].clone(), v[1].clone()), Vec2::new(v[2].clone(), v[3].clone())))
}

/// Exit status with a message for stderr.
struct Failure(u8, String);

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        Failure(2, e.to_string())
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Failure {
        Failure(2, e.to_string())
    }
}

fn out(text: &str) -> Result<(), Failure> {
    write_text("-", text).map_err(Failure::from)
}

fn check(file: &str) -> Result<u8, Failure> {
    let (p, lattice) = read_polygon(file)?;
    let report = check_bolle(&p, &lattice).map_err(|e| Failure(2, e.to_string()))?;
    out(&report.to_string())?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn default_k(p: &CsPolygon, lattice: &Lattice2) -> u32 {
    match check_bolle(p, lattice) {
        Ok(r) if r.passed() => r.multiplicity.unwrap_or(1) as u32,
        Ok(r) => (&r.area_ratio + q(1, 2)).floor().to_i64().unwrap_or(1).max(1) as u32,
        Err(_) => 1,
    }
}

fn oracle(args: &OracleArgs) -> Result<u8, Failure> {
    let (p, lattice) = read_polygon(&args.file)?;
    let k = args.k.unwrap_or_else(|| default_k(&p, &lattice));
    let v = verify_multiplicity(&p, &lattice, k, args.samples, args.seed).map_err(|e| Failure(2, e.to_string()))?;
    let mut s = String::new();
    if args.verbose {
        for x in &v.samples {
            s.push_str(&format!("sample {} count {}\n", x.sample.point, x.sample.open));
        }
        for b in &v.boundary {
            s.push_str(&format!(
                "boundary {} open {} closed {}{}\n",
                b.sample.point,
                b.sample.open,
                b.sample.closed,
                if b.ok { "" } else { " violated" }
            ));
        }
    }
    s.push_str(&format!("{} samples, {} boundary points\n", v.samples.len(), v.boundary.len()));
    match &v.failure {
        None => s.push_str(&format!("PASS k={k}\n")),
        Some(OracleFailure::Count(c)) => s.push_str(&format!("FAIL k={k}: count {} at {}\n", c.open, c.point)),
        Some(OracleFailure::Boundary(c)) => s.push_str(&format!(
            "FAIL k={k}: boundary point {} has open {} and closed {}\n",
            c.point, c.open, c.closed
        )),
    }
    out(&s)?;
    Ok(if v.passed() { 0 } else { 1 })
}

fn family(f: &Family, output: &str) -> Result<u8, Failure> {
    let p = match f {
        Family::OctagonA { alpha } => octagon_a(alpha)?,
        Family::OctagonB { beta } => octagon_b(beta)?,
        Family::Decagon { v1 } => decagon_from_vertex(v1)?,
        Family::Hexagon { v } => match v.as_slice() {
            [a, b, c] => hexagon_tile(a, b, c)?,
            _ => return Err(Failure(2, format!("hexagon needs exactly three --v values, got {}", v.len()))),
        },
        Family::Parallelogram { b1, b2 } => parallelogram_tile(b1, b2)?,
    };
    write_polygon(&p, &Lattice2::integer(), output)?;
    Ok(0)
}

fn vertices_row(p: &CsPolygon) -> String {
    let doc = format_polygon(p, &Lattice2::integer());
    doc.lines().next().unwrap_or_default().to_string()
}

fn enumerate(target: &Target) -> Result<u8, Failure> {
    let mut s = String::new();
    match target {
        Target::Decagons { max_area, report } => {
            let r = search_decagon_frames(*max_area);
            s.push_str(&format!("# decagon midpoint frames with area <= {max_area}: {} class(es)\n", r.classes.len()));
            for (i, c) in r.classes.iter().enumerate() {
                let frames: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
                s.push_str(&format!("# class {}: area {}, {} frame(s): {}\n", i + 1, c.area, c.members.len(), frames.join(" | ")));
                s.push_str(&vertices_row(&c.canonical));
                s.push('\n');
            }
            if *report == Report::Pruned {
                for line in r.pruned_lines() {
                    s.push_str(&format!("# {line}\n"));
                }
            }
        }
        Target::Octagons { report } => {
            let r = search_octagon_configs();
            s.push_str(&format!("# octagon configurations of area 5: {} class(es)\n", r.classes.len()));
            for c in &r.classes {
                let name = match c.family {
                    Some(OctagonFamily::A) => "family A",
                    Some(OctagonFamily::B) => "family B",
                    None => "unmatched",
                };
                s.push_str(&format!("# {name}: {}\n", c.representative));
                s.push_str(&vertices_row(&c.representative.sample_polygon()));
                s.push('\n');
            }
            if *report == Report::Pruned {
                for line in r.pruned_lines() {
                    s.push_str(&format!("# {line}\n"));
                }
            }
        }
    }
    out(&s)?;
    Ok(0)
}

fn render(args: &RenderArgs) -> Result<u8, Failure> {
    let (p, lattice) = read_polygon(&args.file)?;
    let mut spec = match &args.window {
        Some((lo, hi)) => RenderSpec::with_window(lo.clone(), hi.clone()),
        None => RenderSpec::for_polygon(&p),
    };
    if let Some(scale) = args.scale {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Failure(2, format!("scale must be positive, got {scale}")));
        }
        spec.scale = scale;
    }
    write_svg(&p, &lattice, &spec, &args.output)?;
    Ok(0)
}

fn selftest(criteria: &[u32]) -> Result<u8, Failure> {
    let results = if criteria.is_empty() {
        acceptance::run_all()
    } else {
        let mut v = Vec::new();
        for &id in criteria {
            v.push(acceptance::run_one(id).ok_or_else(|| Failure(2, format!("no criterion {id}")))?);
        }
        v
    };
    let mut failed = 0;
    for r in &results {
        out(&format!("{r}\n"))?;
        failed += usize::from(!r.passed);
    }
    out(&format!("{} of {} criteria passed\n", results.len() - failed, results.len()))?;
    Ok(if failed == 0 { 0 } else { 1 })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Check { file } => check(file),
        Command::Oracle(args) => oracle(args),
        Command::Family { family: f, output } => family(f, output),
        Command::RegionW { output } => {
            let w = region_w();
            write_document(&PolygonDocument { vertices: w.vertices().to_vec(), lattice: Lattice2::integer() }, output)?;
            Ok(0)
        }
        Command::Enumerate { target } => enumerate(target),
        Command::Render(args) => render(args),
        Command::Selftest { criteria } => selftest(criteria),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
