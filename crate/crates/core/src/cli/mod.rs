//! The `zigzag` command-line tool.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad input file, failed
//! validation, oracle disagreement), 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::geometry2d::Point2;
use crate::mesh::{parse_off, HalfEdgeId, Mesh, MeshFile};
use crate::meshgen::{generate, GenKind, GenSpec};
use crate::walk::{locate, TieBreakPolicy, WalkConfig, WalkResult};

pub mod bench;
pub mod svg;

#[derive(Debug, Parser)]
#[command(name = "zigzag", version, about = "Zig-zag point location in planar triangulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a mesh and write it as JSON.
    Gen(GenArgs),
    /// Locate a point by walking from a start half-edge.
    Locate(LocateArgs),
    /// Render a mesh and a walk trace as SVG.
    Svg(SvgArgs),
    /// Run random queries per policy and report step statistics as CSV.
    Bench(BenchArgs),
    /// Check a mesh file for structural problems.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Grid,
    Delaunay,
    Fan,
    Strip,
}

#[derive(Debug, Clone, Args)]
pub struct GenFlags {
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    /// Grid side, point count, or triangle count depending on `--kind`.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Width-to-height ratio of strip triangles.
    #[arg(long, default_value_t = 1000.0)]
    pub aspect: f64,
    /// Total apex angle of a fan, in radians.
    #[arg(long, default_value_t = 0.25)]
    pub angle: f64,
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
}

impl GenFlags {
    pub fn spec(&self) -> Option<GenSpec> {
        let kind = match self.kind? {
            Kind::Grid => GenKind::Grid { nx: self.n, ny: self.n },
            Kind::Delaunay => GenKind::RandomDelaunay { n_points: self.n, seed: self.seed, bbox: [0.0, 0.0, 1.0, 1.0] },
            Kind::Fan => GenKind::Fan { n: self.n, apex_angle: self.angle },
            Kind::Strip => GenKind::ThinStrip { n: self.n, aspect: self.aspect },
        };
        Some(GenSpec { kind, scale: self.scale })
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    flags: GenFlags,
    /// Output path; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyName {
    Right,
    Left,
    Random,
}

impl PolicyName {
    pub fn policy(self, seed: u64) -> TieBreakPolicy {
        match self {
            PolicyName::Right => TieBreakPolicy::RightFirst,
            PolicyName::Left => TieBreakPolicy::LeftFirst,
            PolicyName::Random => TieBreakPolicy::RandomSeeded(seed),
        }
    }
}

#[derive(Debug, Args)]
struct LocateArgs {
    /// Mesh file (JSON, or OFF by extension).
    mesh: PathBuf,
    #[arg(long, default_value_t = 0)]
    start: u32,
    /// Target as `x,y`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
    point: Point2,
    #[arg(long, value_enum, default_value_t = PolicyName::Right)]
    policy: PolicyName,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the walk trace as JSON to this path.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Verify the half-space and monotonicity properties at every step.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args)]
struct SvgArgs {
    mesh: PathBuf,
    trace: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Baseline {
    Visibility,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Mesh file; alternatively generate one with `--kind` and friends.
    mesh: Option<PathBuf>,
    #[command(flatten)]
    gen: GenFlags,
    #[arg(long, default_value_t = 100)]
    queries: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [PolicyName::Right, PolicyName::Left, PolicyName::Random])]
    policies: Vec<PolicyName>,
    #[arg(long, value_enum)]
    baseline: Option<Baseline>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    mesh: PathBuf,
}

fn parse_point(s: &str) -> Result<Point2, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let x: f64 = x.trim().parse().map_err(|e| format!("bad x coordinate: {e}"))?;
    let y: f64 = y.trim().parse().map_err(|e| format!("bad y coordinate: {e}"))?;
    Point2::try_new(x, y).map_err(|e| e.to_string())
}

/// Reads a mesh, as OFF if the extension says so and as JSON otherwise.
pub fn load_mesh(path: &Path) -> Result<Mesh> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_off = path.extension().is_some_and(|x| x.eq_ignore_ascii_case("off"));
    let file = if is_off {
        parse_off(&text).with_context(|| format!("parsing {}", path.display()))?
    } else {
        MeshFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))?
    };
    file.build().with_context(|| format!("building mesh from {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn cmd_gen(args: &GenArgs) -> Result<()> {
    let Some(spec) = args.flags.spec() else { bail!("--kind is required") };
    let mesh = generate(&spec)?;
    emit(args.out.as_deref(), &MeshFile::from(&mesh).to_json())
}

fn cmd_locate(args: &LocateArgs) -> Result<()> {
    let mesh = load_mesh(&args.mesh)?;
    let mut cfg = WalkConfig::with_policy(args.policy.policy(args.seed));
    cfg.record_trace = args.trace.is_some();
    cfg.check_invariants = args.check;
    let walk = locate(&mesh, HalfEdgeId(args.start), args.point, &cfg)?;
    if let (Some(path), Some(trace)) = (&args.trace, &walk.trace) {
        fs::write(path, trace.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    match &walk.result {
        WalkResult::Found { face, steps } => println!("FOUND face={face} steps={steps}"),
        WalkResult::Boundary { edge, steps } => println!("BOUNDARY edge={edge} steps={steps}"),
        WalkResult::Aborted { reason, steps } => {
            println!("ABORTED reason={reason:?} steps={steps}");
            bail!("walk aborted");
        }
    }
    Ok(())
}

fn cmd_svg(args: &SvgArgs) -> Result<()> {
    let mesh = load_mesh(&args.mesh)?;
    let text = fs::read_to_string(&args.trace).with_context(|| format!("reading {}", args.trace.display()))?;
    let trace =
        crate::walk::WalkTrace::from_json(&text).with_context(|| format!("parsing {}", args.trace.display()))?;
    emit(args.out.as_deref(), &svg::render(&mesh, &trace)?)
}

fn cmd_bench(args: &BenchArgs) -> Result<()> {
    let mesh = match (&args.mesh, args.gen.spec()) {
        (Some(path), None) => load_mesh(path)?,
        (None, Some(spec)) => generate(&spec)?,
        (Some(_), Some(_)) => bail!("give either a mesh file or --kind, not both"),
        (None, None) => bail!("a mesh file or --kind is required"),
    };
    let opts = bench::BenchOptions {
        queries: args.queries,
        seed: args.gen.seed,
        policies: args.policies.clone(),
        baseline: args.baseline,
    };
    let report = bench::run(&mesh, &opts)?;
    emit(args.out.as_deref(), &report.to_csv()?)?;
    let bad: Vec<_> = report.rows.iter().filter(|r| r.oracle_agreement != r.queries).collect();
    if !bad.is_empty() {
        for r in bad {
            eprintln!("oracle disagreement for {}: {}/{}", r.policy, r.oracle_agreement, r.queries);
        }
        bail!("oracle disagreement");
    }
    Ok(())
}

fn cmd_validate(args: &ValidateArgs) -> Result<()> {
    let mesh = load_mesh(&args.mesh)?;
    let violations = mesh.validate();
    if violations.is_empty() {
        println!("OK vertices={} faces={} half_edges={}", mesh.num_vertices(), mesh.num_faces(), mesh.num_half_edges());
        return Ok(());
    }
    for v in &violations {
        println!("{v}");
    }
    bail!("{} violation(s)", violations.len())
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Locate(a) => cmd_locate(a),
        Command::Svg(a) => cmd_svg(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Validate(a) => cmd_validate(a),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
