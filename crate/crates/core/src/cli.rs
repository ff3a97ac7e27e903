//! The `regmap` command line.
//!
//! Exit codes: 0 success, 1 negative answer, 2 usage or I/O error, 3 invalid
//! map, 4 ambiguous involution.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    antiprism, crosspolytope_realization, cube, cuboctahedron, grunbaum, grunbaum_mirror, grunbaum_relative,
    octahedron, overlapping_variant, prism, tetrahedron, toroidal_antiprismatic, toroidal_prism_variant,
    ConstructionError,
};
use crate::geom::validate_polyhedron;
use crate::io::{export, read_model, to_json_string, ExportFormat, IoError, Model};
use crate::report::analyze;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_MAP: i32 = 3;
pub const EXIT_AMBIGUOUS: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "regmap", version, about = "Build and check polyhedral realizations of regular maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Builder {
    Grunbaum,
    GrunbaumRelative,
    GrunbaumMirror,
    GrunbaumOverlap,
    Prism,
    Antiprism,
    TorusAntiprismatic,
    TorusPrism,
    #[value(name = "crosspolytope-12d")]
    Crosspolytope12d,
    Tetrahedron,
    Cube,
    Octahedron,
    Cuboctahedron,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Off,
    Obj,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a model file for a named construction.
    Build {
        name: Builder,
        /// Ring size for the prism and torus families.
        #[arg(long)]
        n: Option<usize>,
        /// Shuffle vertex labels with this seed.
        #[arg(long)]
        relabel: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the analysis report as JSON.
    Analyze { file: PathBuf },
    /// Check map invariants and the embedding.
    Verify { file: PathBuf },
    /// Decide isomorphism and print a vertex bijection.
    Isomorphic { a: PathBuf, b: PathBuf },
    /// Quotient by a fixed-point-free central involution.
    Quotient {
        file: PathBuf,
        /// `auto` or an index into the list of candidate involutions.
        #[arg(long, default_value = "auto")]
        involution: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export to a mesh format.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A failed command: exit code and message for the error stream.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        let code = match e {
            IoError::Map(_) => EXIT_INVALID_MAP,
            _ => EXIT_USAGE,
        };
        fail(code, e.to_string())
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_NEGATIVE,
        };
        fail(code, e.to_string())
    }
}

fn need_n(n: Option<usize>) -> Result<usize, Failure> {
    n.ok_or_else(|| fail(EXIT_USAGE, "this builder needs --n"))
}

pub fn build(name: Builder, n: Option<usize>) -> Result<Model, Failure> {
    Ok(match name {
        Builder::Grunbaum => Model::Exact(grunbaum()?),
        Builder::GrunbaumRelative => Model::Exact(grunbaum_relative()?),
        Builder::GrunbaumMirror => Model::Exact(grunbaum_mirror()?),
        Builder::GrunbaumOverlap => Model::Exact(overlapping_variant()?),
        Builder::Prism => Model::Float(prism(need_n(n)?)?),
        Builder::Antiprism => Model::Float(antiprism(need_n(n)?)?),
        Builder::TorusAntiprismatic => Model::Float(toroidal_antiprismatic(need_n(n)?, None)?),
        Builder::TorusPrism => Model::Float(toroidal_prism_variant(need_n(n)?, None)?),
        Builder::Crosspolytope12d => {
            let p = grunbaum()?;
            let gammas = p.map().central_involutions();
            let gamma = gammas.first().ok_or_else(|| fail(EXIT_NEGATIVE, "no central involution"))?;
            Model::Exact(crosspolytope_realization(p.map(), gamma)?)
        }
        Builder::Tetrahedron => Model::Exact(tetrahedron()?),
        Builder::Cube => Model::Exact(cube()?),
        Builder::Octahedron => Model::Exact(octahedron()?),
        Builder::Cuboctahedron => Model::Exact(cuboctahedron()?),
    })
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| fail(EXIT_USAGE, e.to_string())),
    }
}

fn verify(model: &Model, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = match model {
        Model::Exact(e) if e.dim() == 3 => validate_polyhedron(e),
        Model::Float(e) if e.dim() == 3 => validate_polyhedron(e),
        Model::Map(_) => return Err(fail(EXIT_USAGE, "verify needs a model with coordinates")),
        _ => return Err(fail(EXIT_USAGE, "verify needs 3-dimensional coordinates")),
    };
    let summary = serde_json::json!({
        "valid": report.valid,
        "planar_faces": report.planar_faces,
        "convex_faces": report.convex_faces,
        "adjacent_noncoplanar": report.adjacent_noncoplanar,
        "intersection_violations": report.intersection_violations,
        "coplanar_adjacent": report.coplanar_adjacent,
        "pair_counts": {
            "disjoint": report.pair_counts.disjoint,
            "shared_vertex": report.pair_counts.shared_vertex,
            "shared_edge": report.pair_counts.shared_edge,
        },
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&summary).unwrap()).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn isomorphic(a: &Model, b: &Model, out: &mut dyn Write) -> Result<i32, Failure> {
    let (ma, mb) = (a.map(), b.map());
    let Some(iso) = ma.isomorphism(mb) else {
        writeln!(out, "not isomorphic").map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
        return Ok(EXIT_NEGATIVE);
    };
    // Vertex v of the first model goes to the vertex of the image of any flag at v.
    let mut bijection = vec![usize::MAX; ma.vertex_count()];
    for x in 0..ma.flag_count() {
        bijection[ma.vertex_of(x)] = mb.vertex_of(iso.apply(x));
    }
    let text = serde_json::json!({ "vertex_bijection": bijection });
    writeln!(out, "{text}").map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
    Ok(EXIT_OK)
}

fn quotient(model: &Model, selector: &str) -> Result<Model, Failure> {
    let m = model.map();
    let gammas = m.central_involutions();
    if gammas.is_empty() {
        return Err(fail(EXIT_NEGATIVE, "no fixed-point-free central involution"));
    }
    let gamma = if selector == "auto" {
        if gammas.len() > 1 {
            return Err(fail(
                EXIT_AMBIGUOUS,
                format!("{} candidate involutions; choose one with --involution INDEX", gammas.len()),
            ));
        }
        &gammas[0]
    } else {
        let i: usize = selector
            .parse()
            .map_err(|_| fail(EXIT_USAGE, format!("--involution expects auto or an index, got {selector}")))?;
        gammas
            .get(i)
            .ok_or_else(|| fail(EXIT_USAGE, format!("index {i} out of range, {} candidates", gammas.len())))?
    };
    let q = m
        .quotient_by_involution(gamma)
        .map_err(|e| fail(EXIT_INVALID_MAP, e.to_string()))?;
    Ok(Model::Map(q))
}

fn relabelled(model: Model, seed: Option<u64>) -> Result<Model, Failure> {
    let Some(seed) = seed else { return Ok(model) };
    let mut perm: Vec<usize> = (0..model.map().vertex_count()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Ok(model.relabel_vertices(&perm)?)
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Build {
            name,
            n,
            relabel,
            output,
        } => {
            let model = relabelled(build(name, n)?, relabel)?;
            emit(out, output.as_ref(), &to_json_string(&model))?;
            Ok(EXIT_OK)
        }
        Command::Analyze { file } => {
            let report = analyze(&read_model(&file)?);
            let text = serde_json::to_string_pretty(&report).unwrap() + "\n";
            emit(out, None, &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify { file } => verify(&read_model(&file)?, out),
        Command::Isomorphic { a, b } => isomorphic(&read_model(&a)?, &read_model(&b)?, out),
        Command::Quotient {
            file,
            involution,
            output,
        } => {
            let q = quotient(&read_model(&file)?, &involution)?;
            emit(out, output.as_ref(), &to_json_string(&q))?;
            Ok(EXIT_OK)
        }
        Command::Export { file, format, output } => {
            let format = match format {
                Format::Off => ExportFormat::Off,
                Format::Obj => ExportFormat::Obj,
            };
            let text = export(&read_model(&file)?, format)?;
            emit(out, output.as_ref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(cli, &mut lock) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("regmap: {}", f.message);
            f.code
        }
    }
}
