//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a negative mathematical answer (no solution, a
//! failed axiom check, a non-invertible element), 2 bad usage or input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dring_core::gateaux::{
    jacobian_to_standard, numerical_jacobian, round_components, round_jacobian, BuiltinMap, DiffConfig,
    DISPLAY_MAX_DENOMINATOR,
};
use dring_core::linear_maps::{coords_to_standard, standard_to_coords, ConversionSolution};
use dring_core::linsys::{solve_rcd, solve_sandwich, RcdSystem, SandwichEquation};
use dring_core::literal::format_element;
use dring_core::quaternion::rotate;
use dring_core::tensor::canonicalize;
use dring_core::{
    Algebra, Element, LinearMapMatrix, Matrix, Rational, Side, StandardComponents, Tensor2, Vector3,
};

use crate::formats::{
    read_json, to_json_text, AlgebraRef, AlgebraSource, ComponentsFile, DeriveReport, ElementRepr, FormatError,
    JsonScalar, MapFile, MapKind, RotateReport, ScalarKind, SolutionFile, SolveFile, TensorFile, UnitReport,
    VerifyReport, ViolationReport,
};

#[derive(Debug, Parser)]
#[command(name = "dring", version, about = "Linear algebra over algebras given by structural constants")]
pub struct Cli {
    /// Scalar backend; defaults to the algebra file's, else rational.
    #[arg(long, global = true, value_enum)]
    pub scalar: Option<ScalarKind>,
    /// Absolute tolerance for float comparisons.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// `H`, `C`, `R`, `E(a,b)` or a path to an algebra file. Overrides the
    /// algebra named inside input files.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check associativity and the unit of an algebra.
    Verify { file: Option<PathBuf> },
    /// Convert a map between coordinate matrix and standard components.
    Convert {
        file: PathBuf,
        /// Target representation; defaults to the other one.
        #[arg(long, value_enum)]
        to: Option<MapKind>,
    },
    /// Solve a sandwich equation or a right-coefficient system.
    Solve { file: PathBuf },
    /// Numerical Jacobian of a built-in map and its standard components.
    Derive {
        /// conj, sqr, norm_sq or inv.
        map: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Standard components of a tensor.
    Canon { file: PathBuf },
    /// Rotate a 3-vector by a quaternion: `q v q^-1`.
    Rotate {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Negative(dring_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Negative(_) => 1,
            _ => 2,
        }
    }
}

impl From<dring_core::Error> for CliError {
    fn from(e: dring_core::Error) -> Self {
        use dring_core::Error as E;
        match e {
            E::NoSolution | E::NotInvertible | E::NonRealProduct => CliError::Negative(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Whether a command that ran to completion reports success.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Negative,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Negative => 1,
        }
    }
}

type CliResult = Result<Outcome, CliError>;

macro_rules! dispatch {
    ($kind:expr, $f:ident($($arg:expr),*)) => {
        match $kind {
            ScalarKind::Rational => $f::<Rational>($($arg),*),
            ScalarKind::Float => $f::<f64>($($arg),*),
        }
    };
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult {
    if let Some(tol) = cli.tol {
        if !(tol.is_finite() && tol >= 0.0) {
            return Err(CliError::Usage(format!("tolerance must be a nonnegative number, got {tol}")));
        }
    }
    match &cli.command {
        Command::Verify { file } => {
            let src = match (file, &cli.algebra) {
                (Some(path), _) => AlgebraSource::File(read_json(path)?),
                (None, Some(_)) => cli.source(None, None)?,
                (None, None) => return Err(CliError::Usage("verify needs a file or --algebra".into())),
            };
            dispatch!(cli.backend(&src), verify(cli, &src, out))
        }
        Command::Convert { file, to } => {
            let map: MapFile = read_json(file)?;
            let src = cli.source(map.algebra.as_ref(), file.parent())?;
            let to = to.unwrap_or(match map.kind {
                MapKind::Coords => MapKind::Standard,
                MapKind::Standard => MapKind::Coords,
            });
            if to == map.kind {
                return Err(CliError::Usage(format!("map is already in {to:?} form").to_lowercase()));
            }
            dispatch!(cli.backend(&src), convert(cli, &src, &map, out))
        }
        Command::Solve { file } => {
            let sys: SolveFile = read_json(file)?;
            let src = cli.source(sys.algebra(), file.parent())?;
            dispatch!(cli.backend(&src), solve(cli, &src, &sys, out))
        }
        Command::Derive { map, point } => {
            let map: BuiltinMap = map.parse()?;
            let src = cli.source_or_hamilton()?;
            derive(cli, &src, map, point, out)
        }
        Command::Canon { file } => {
            let t: TensorFile = read_json(file)?;
            let src = cli.source(t.algebra.as_ref(), file.parent())?;
            dispatch!(cli.backend(&src), canon(cli, &src, &t, out))
        }
        Command::Rotate { q, v } => {
            let src = cli.source_or_hamilton()?;
            dispatch!(cli.backend(&src), rotate_cmd(cli, &src, q, v, out))
        }
    }
}

impl Cli {
    fn source(&self, from_file: Option<&AlgebraRef>, base: Option<&Path>) -> Result<AlgebraSource, FormatError> {
        match (&self.algebra, from_file) {
            (Some(name), _) => AlgebraSource::resolve(&AlgebraRef::Name(name.clone()), None),
            (None, Some(r)) => AlgebraSource::resolve(r, base),
            (None, None) => Err(FormatError::MissingAlgebra),
        }
    }

    fn source_or_hamilton(&self) -> Result<AlgebraSource, FormatError> {
        match &self.algebra {
            Some(_) => self.source(None, None),
            None => Ok(AlgebraSource::Builtin("H".into())),
        }
    }

    fn backend(&self, src: &AlgebraSource) -> ScalarKind {
        self.scalar.or(src.scalar()).unwrap_or_default()
    }

    fn build<S: JsonScalar>(&self, src: &AlgebraSource) -> Result<Algebra<S>, FormatError> {
        let alg = src.build()?;
        Ok(match self.tol {
            Some(tol) if !S::EXACT => alg.with_tolerance(tol),
            _ => alg,
        })
    }

    fn json(&self) -> bool {
        self.format == OutputFormat::Json
    }
}

fn verify<S: JsonScalar>(cli: &Cli, src: &AlgebraSource, out: &mut dyn Write) -> CliResult {
    let alg: Algebra<S> = cli.build(src)?;
    let assoc = alg.check_associativity().err();
    let unit = alg.check_unit().err();
    let report = VerifyReport {
        associative: assoc.is_none(),
        violation: assoc.as_ref().map(ViolationReport::new),
        unital: unit.is_none(),
        unit_violation: unit.as_ref().map(|u| UnitReport {
            side: match u.side {
                Side::Left => "left".into(),
                Side::Right => "right".into(),
            },
            j: u.j,
            k: u.k,
        }),
    };
    if cli.json() {
        out.write_all(to_json_text(&report).as_bytes())?;
    } else {
        match &assoc {
            None => writeln!(out, "associativity: ok")?,
            Some(v) => {
                let [i, j, k, l] = v.indices;
                writeln!(
                    out,
                    "associativity: fails at ({i},{j},{k},{l}): ((e{i} e{j}) e{k})^{l} = {}, (e{i} (e{j} e{k}))^{l} = {}",
                    v.left, v.right
                )?;
            }
        }
        match &report.unit_violation {
            None => writeln!(out, "unit: ok")?,
            Some(u) => writeln!(out, "unit: fails on the {} at e{}, coordinate {}", u.side, u.j, u.k)?,
        }
    }
    Ok(if report.associative && report.unital { Outcome::Success } else { Outcome::Negative })
}

fn convert<S: JsonScalar>(cli: &Cli, src: &AlgebraSource, map: &MapFile, out: &mut dyn Write) -> CliResult {
    let alg: Algebra<S> = cli.build(src)?;
    let entries = crate::formats::matrix_from_json::<S>(&map.entries, alg.dim())?;
    let (result, kernel) = match map.kind {
        MapKind::Coords => {
            let ConversionSolution { particular, kernel_basis } =
                coords_to_standard(&alg, &LinearMapMatrix::new(entries))?;
            let kernel = kernel_basis.iter().map(|z| z.comps().clone()).collect();
            (particular.comps().clone(), kernel)
        }
        MapKind::Standard => {
            let m = standard_to_coords(&alg, &StandardComponents::new(entries))?;
            (m.entries().clone(), Vec::new())
        }
    };
    let kind = match map.kind {
        MapKind::Coords => MapKind::Standard,
        MapKind::Standard => MapKind::Coords,
    };
    if cli.json() {
        let file = MapFile {
            algebra: cli.algebra.clone().map(AlgebraRef::Name).or_else(|| map.algebra.clone()),
            kind,
            entries: crate::formats::matrix_to_json(&result),
            kernel: kernel.iter().map(crate::formats::matrix_to_json).collect(),
        };
        out.write_all(to_json_text(&file).as_bytes())?;
    } else {
        let title = match kind {
            MapKind::Standard => "standard components",
            MapKind::Coords => "coordinate matrix",
        };
        writeln!(out, "{title}:")?;
        write_matrix(out, &result)?;
        if !kernel.is_empty() {
            writeln!(out, "representations of zero ({}):", kernel.len())?;
            for (n, z) in kernel.iter().enumerate() {
                if n > 0 {
                    writeln!(out)?;
                }
                write_matrix(out, z)?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn solve<S: JsonScalar>(cli: &Cli, src: &AlgebraSource, sys: &SolveFile, out: &mut dyn Write) -> CliResult {
    let alg: Algebra<S> = cli.build(src)?;
    match sys {
        SolveFile::Sandwich { terms, rhs, .. } => {
            let terms = terms
                .iter()
                .map(|(a, b)| Ok((a.to_element(&alg)?, b.to_element(&alg)?)))
                .collect::<Result<Vec<_>, FormatError>>()?;
            let sol = solve_sandwich(&alg, &SandwichEquation::new(terms, rhs.to_element(&alg)?))?;
            if cli.json() {
                let file = SolutionFile {
                    particular: ElementRepr::from_element(&sol.particular),
                    kernel: sol.kernel_basis.iter().map(ElementRepr::from_element).collect(),
                };
                out.write_all(to_json_text(&file).as_bytes())?;
            } else {
                writeln!(out, "x = {}", format_element(&alg, &sol.particular))?;
                let kernel: Vec<String> = sol.kernel_basis.iter().map(|z| format_element(&alg, z)).collect();
                writeln!(out, "kernel ({}): {}", kernel.len(), kernel.join(", "))?;
            }
        }
        SolveFile::Rcd { matrix, rhs } => {
            let a = matrix.to_dmatrix(&alg)?;
            let rhs = rhs.iter().map(|b| b.to_element(&alg)).collect::<Result<Vec<_>, _>>()?;
            let sys = RcdSystem::new(a, rhs)?;
            let sol = solve_rcd(&alg, &sys)?;
            let repr = |v: &[Element<S>]| v.iter().map(ElementRepr::from_element).collect::<Vec<_>>();
            if cli.json() {
                let file = SolutionFile {
                    particular: repr(&sol.particular),
                    kernel: sol.kernel_basis.iter().map(|z| repr(z)).collect(),
                };
                out.write_all(to_json_text(&file).as_bytes())?;
            } else {
                for (n, x) in sol.particular.iter().enumerate() {
                    writeln!(out, "x{n} = {}", format_element(&alg, x))?;
                }
                writeln!(out, "kernel ({}):", sol.kernel_dim())?;
                for z in &sol.kernel_basis {
                    let parts: Vec<String> = z.iter().map(|x| format_element(&alg, x)).collect();
                    writeln!(out, "  ({})", parts.join(", "))?;
                }
            }
        }
    }
    Ok(Outcome::Success)
}

/// The Jacobian is computed in floats; its standard components are solved
/// exactly and shown rounded to denominators at most 2^20.
fn derive(cli: &Cli, src: &AlgebraSource, map: BuiltinMap, point: &str, out: &mut dyn Write) -> CliResult {
    let falg: Algebra<f64> = cli.build(src)?;
    let qalg: Algebra<Rational> = cli.build(src)?;
    let x0 = dring_core::literal::parse_element(&falg, point).map_err(FormatError::from)?;
    map.eval(&falg, &x0)?;
    let f = map.black_box(&falg);
    let jac = numerical_jacobian(&falg, &f, &x0, &DiffConfig::default())?;
    let jac = LinearMapMatrix::new(jac.entries().map(|v| if *v == 0.0 { 0.0 } else { *v }));
    let solution = match jacobian_to_standard(&qalg, &jac) {
        Err(dring_core::Error::NoSolution) => coords_to_standard(&qalg, &round_jacobian(&jac, DISPLAY_MAX_DENOMINATOR)),
        other => other,
    };
    let solution = match solution {
        Ok(s) => Some(s),
        Err(dring_core::Error::NoSolution) => None,
        Err(e) => return Err(e.into()),
    };
    let rounded = |s: &StandardComponents<Rational>| round_components(s, DISPLAY_MAX_DENOMINATOR).comps().clone();
    let standard = solution.as_ref().map(|s| rounded(&s.particular));
    let kernel: Vec<Matrix<Rational>> =
        solution.as_ref().map_or_else(Vec::new, |s| s.kernel_basis.iter().map(rounded).collect());
    if cli.json() {
        let report = DeriveReport {
            map: map.name().into(),
            point: x0.coords().iter().map(JsonScalar::to_json).collect(),
            jacobian: crate::formats::matrix_to_json(jac.entries()),
            standard: standard.as_ref().map(crate::formats::matrix_to_json),
            kernel: kernel.iter().map(crate::formats::matrix_to_json).collect(),
        };
        out.write_all(to_json_text(&report).as_bytes())?;
    } else {
        writeln!(out, "jacobian of {} at {}:", map.name(), format_element(&falg, &x0))?;
        write_matrix(out, jac.entries())?;
        match &standard {
            Some(s) => {
                writeln!(out, "standard components:")?;
                write_matrix(out, s)?;
                if !kernel.is_empty() {
                    writeln!(out, "representations of zero: {}", kernel.len())?;
                }
            }
            None => writeln!(out, "standard components: no solution")?,
        }
    }
    Ok(if standard.is_some() { Outcome::Success } else { Outcome::Negative })
}

fn canon<S: JsonScalar>(cli: &Cli, src: &AlgebraSource, t: &TensorFile, out: &mut dyn Write) -> CliResult {
    let alg: Algebra<S> = cli.build(src)?;
    let terms = t
        .terms
        .iter()
        .map(|(a, b)| Ok((a.to_element(&alg)?, b.to_element(&alg)?)))
        .collect::<Result<Vec<_>, FormatError>>()?;
    let comps = canonicalize(&alg, &Tensor2::new(terms))?;
    let zero = comps.is_zero_tol(alg.tol());
    if cli.json() {
        let file = ComponentsFile {
            components: crate::formats::matrix_to_json(comps.comps()),
            zero,
        };
        out.write_all(to_json_text(&file).as_bytes())?;
    } else {
        write_matrix(out, comps.comps())?;
        if zero {
            writeln!(out, "zero tensor")?;
        }
    }
    Ok(Outcome::Success)
}

fn rotate_cmd<S: JsonScalar>(cli: &Cli, src: &AlgebraSource, q: &str, v: &str, out: &mut dyn Write) -> CliResult {
    let alg: Algebra<S> = cli.build(src)?;
    let q = dring_core::literal::parse_element(&alg, q).map_err(FormatError::from)?;
    let v = parse_vector3::<S>(v)?;
    let r = rotate(&alg, &q, &v)?;
    if cli.json() {
        let report = RotateReport {
            vector: [r.x.to_json(), r.y.to_json(), r.z.to_json()],
        };
        out.write_all(to_json_text(&report).as_bytes())?;
    } else {
        writeln!(out, "({}, {}, {})", r.x, r.y, r.z)?;
    }
    Ok(Outcome::Success)
}

/// `[x,y,z]` or `(x,y,z)`.
fn parse_vector3<S: JsonScalar>(text: &str) -> Result<Vector3<S>, FormatError> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
        .unwrap_or(t);
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(FormatError::Shape(format!("expected three coordinates, got `{text}`")));
    }
    let c = parts
        .iter()
        .map(|p| S::parse(p).ok_or_else(|| FormatError::Scalar((*p).to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Vector3::new(c[0].clone(), c[1].clone(), c[2].clone()))
}

fn write_matrix<S: dring_core::Scalar>(out: &mut dyn Write, m: &Matrix<S>) -> std::io::Result<()> {
    let cells: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "  {}", line.join("  "))?;
    }
    Ok(())
}
