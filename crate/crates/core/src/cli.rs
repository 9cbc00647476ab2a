//! JSON job runner behind the `pstrata` binary.
//!
//! Every subcommand reads one JSON document and writes one report
//!
//! ```json
//! {"command": "...", "input": {...}, "result": {...}, "version": "..."}
//! ```
//!
//! with keys sorted, pretty-printed and terminated by a single LF. `input`
//! echoes the validated request with defaults filled in, so feeding it back
//! reproduces the same report. Rationals are always strings `"n"` or
//! `"n/d"`. In sweep mode `codim` emits one compact report per line.
//!
//! Exit codes: 0 success, 1 internal error, 2 usage or validation error
//! (nothing is written to stdout).

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cover::{cover_genus, pushforward, CoverSpec};
use crate::eigenflag::{
    check_parabolic_morphism, descend, fixed_point_shape, nested_eigenbasis, FlagAutomorphism,
    MorphismConvention, WeightedFlag,
};
use crate::exact::{Cyclotomic, ExactMatrix, Rational};
use crate::flagcoh::{
    flag_poincare, kunneth_report, levi_components, pic_rank_flag, weyl_poincare, CartanType,
    ParabolicSubset,
};
use crate::parabolic::{
    is_generic, par_degree, par_slope, Genericity, ParabolicDatum, PointWeights,
};
use crate::strata::{
    codim_report, matrix_to_multiplicity_system, moduli_dimension, strata, sweep_configurations,
    ModuliSpec, MultiplicityMatrix, SweepRange,
};

/// Reported in every job as `version`.
pub const VERSION: &str = concat!("pstrata ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JobKind {
    Dim,
    Generic,
    Strata,
    Codim,
    Pushforward,
    Descend,
    Flagcoh,
}

impl JobKind {
    fn name(self) -> &'static str {
        match self {
            JobKind::Dim => "dim",
            JobKind::Generic => "generic",
            JobKind::Strata => "strata",
            JobKind::Codim => "codim",
            JobKind::Pushforward => "pushforward",
            JobKind::Descend => "descend",
            JobKind::Flagcoh => "flagcoh",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Strict,
    NonStrict,
}

impl From<ConventionArg> for MorphismConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Strict => MorphismConvention::Strict,
            ConventionArg::NonStrict => MorphismConvention::NonStrict,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pstrata",
    version,
    about = "Exact computations for parabolic bundles and fixed-point strata"
)]
struct Args {
    /// Job to run.
    #[arg(value_enum)]
    command: JobKind,
    /// Input document (default: stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Treat the `codim` input as a sweep range and stream one line per configuration.
    #[arg(long)]
    sweep: bool,
    /// Weight comparison used for morphism checks in `descend`.
    #[arg(long, value_enum)]
    convention: Option<ConventionArg>,
    /// Rank of the Picard group of the base stack in `flagcoh`.
    #[arg(long = "pic-rank-qg")]
    pic_rank_qg: Option<u32>,
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl Outcome {
    fn ok(stdout: Vec<u8>) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: Vec::new(),
        }
    }

    fn fail(code: i32, msg: &str) -> Self {
        Outcome {
            code,
            stdout: Vec::new(),
            stderr: format!("error: {msg}\n").into_bytes(),
        }
    }
}

enum Failure {
    Invalid(String),
    Internal(String),
}

type JobResult<T> = Result<T, Failure>;

fn invalid(context: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(format!("{context}: {e}"))
}

/// Runs one invocation. `argv[0]` is the program name, as in
/// `std::env::args`.
pub fn run_command<S: AsRef<str>>(argv: &[S], stdin: &[u8]) -> Outcome {
    let args = match Args::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: Vec::new(),
                    stderr: text.into_bytes(),
                }
            } else {
                Outcome::ok(text.into_bytes())
            };
        }
    };
    let input = match &args.input {
        Some(path) => match std::fs::read(path) {
            Ok(bytes) => bytes,
            Err(e) => return Outcome::fail(2, &format!("cannot read {}: {e}", path.display())),
        },
        None => stdin.to_vec(),
    };
    let produced = catch_unwind(AssertUnwindSafe(|| produce(&args, &input)));
    let body = match produced {
        Ok(Ok(body)) => body,
        Ok(Err(Failure::Invalid(msg))) => return Outcome::fail(2, &msg),
        Ok(Err(Failure::Internal(msg))) => return Outcome::fail(1, &msg),
        Err(_) => return Outcome::fail(1, "internal error"),
    };
    match &args.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome::ok(Vec::new()),
            Err(e) => Outcome::fail(1, &format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(body),
    }
}

/// Entry point for the binary: real argv, stdin and stdout.
pub fn main_with_env() -> i32 {
    use std::io::Write;
    let argv: Vec<String> = std::env::args().collect();
    let mut stdin = Vec::new();
    let wants_stdin = !argv
        .iter()
        .any(|a| a == "--input" || a.starts_with("--input="))
        && !argv
            .iter()
            .any(|a| ["-h", "--help", "-V", "--version"].contains(&a.as_str()));
    if wants_stdin && argv.len() > 1 {
        if let Err(e) = std::io::stdin().read_to_end(&mut stdin) {
            eprintln!("error: cannot read stdin: {e}");
            return 2;
        }
    }
    let out = run_command(&argv, &stdin);
    let _ = std::io::stdout().write_all(&out.stdout);
    let _ = std::io::stderr().write_all(&out.stderr);
    out.code
}

fn produce(args: &Args, input: &[u8]) -> JobResult<Vec<u8>> {
    if args.sweep {
        if args.command != JobKind::Codim {
            return Err(Failure::Invalid("--sweep only applies to codim".into()));
        }
        return run_sweep(input);
    }
    let (echo, result) = match args.command {
        JobKind::Dim => job_dim(parse(input)?)?,
        JobKind::Generic => job_generic(parse(input)?)?,
        JobKind::Strata => job_strata(parse(input)?)?,
        JobKind::Codim => job_codim(parse(input)?)?,
        JobKind::Pushforward => job_pushforward(parse(input)?)?,
        JobKind::Descend => job_descend(parse(input)?, args.convention.map(Into::into))?,
        JobKind::Flagcoh => job_flagcoh(parse(input)?, args.pic_rank_qg)?,
    };
    let report = job_report(args.command, echo, result)?;
    let mut text = serde_json::to_string_pretty(&report).map_err(internal)?;
    text.push('\n');
    Ok(text.into_bytes())
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn to_value<T: Serialize>(x: &T) -> JobResult<Value> {
    serde_json::to_value(x).map_err(internal)
}

fn job_report(kind: JobKind, input: Value, result: Value) -> JobResult<Value> {
    Ok(json!({
        "command": kind.name(),
        "input": input,
        "result": result,
        "version": VERSION,
    }))
}

/// Deserializes a request, naming the offending field on failure.
fn parse<T: DeserializeOwned>(input: &[u8]) -> JobResult<T> {
    let de = &mut serde_json::Deserializer::from_slice(input);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        if path == "." {
            Failure::Invalid(format!("invalid input: {}", e.inner()))
        } else {
            Failure::Invalid(format!("field `{path}`: {}", e.inner()))
        }
    })
}

// ---------------------------------------------------------------------------
// shared schema pieces

/// A marked point: weights as rational strings with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub weights: Vec<Rational>,
    pub mults: Vec<u32>,
}

impl PointInput {
    fn from_weights(id: Option<String>, w: &PointWeights) -> Self {
        PointInput {
            id,
            weights: w.weights(),
            mults: w.multiplicities(),
        }
    }
}

/// Validates points, naming unnamed ones `p1, p2, ...` by position.
fn point_map(
    points: &[PointInput],
) -> JobResult<(BTreeMap<String, PointWeights>, Vec<PointInput>)> {
    let mut map = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        let id = p.id.clone().unwrap_or_else(|| format!("p{}", i + 1));
        let w = PointWeights::from_parts(p.weights.clone(), p.mults.clone())
            .map_err(|e| invalid(&format!("points[{i}]"), e))?;
        if map.insert(id.clone(), w).is_some() {
            return Err(invalid(
                &format!("points[{i}]"),
                format!("duplicate id {id}"),
            ));
        }
    }
    let echo = map
        .iter()
        .map(|(id, w)| PointInput::from_weights(Some(id.clone()), w))
        .collect();
    Ok((map, echo))
}

fn points_out(map: &BTreeMap<String, PointWeights>) -> Vec<PointInput> {
    map.iter()
        .map(|(id, w)| PointInput::from_weights(Some(id.clone()), w))
        .collect()
}

// ---------------------------------------------------------------------------
// dim

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DimInput {
    g: u32,
    r: u32,
    #[serde(default)]
    points: Vec<PointInput>,
}

fn job_dim(req: DimInput) -> JobResult<(Value, Value)> {
    let (map, echo) = point_map(&req.points)?;
    let spec = ModuliSpec::new(req.g, req.r, 0, map).map_err(|e| invalid("input", e))?;
    Ok((
        json!({"g": req.g, "r": req.r, "points": to_value(&echo)?}),
        json!({"dimension": moduli_dimension(&spec)}),
    ))
}

// ---------------------------------------------------------------------------
// generic

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GenericInput {
    rank: u32,
    degree: i64,
    #[serde(default)]
    points: Vec<PointInput>,
}

fn job_generic(req: GenericInput) -> JobResult<(Value, Value)> {
    let (map, echo) = point_map(&req.points)?;
    let datum = ParabolicDatum::new(req.rank, req.degree, map).map_err(|e| invalid("input", e))?;
    let mut result = json!({
        "par_degree": to_value(&par_degree(&datum))?,
        "par_slope": to_value(&par_slope(&datum))?,
    });
    match is_generic(&datum) {
        Genericity::Generic => result["generic"] = json!(true),
        Genericity::NonGeneric(w) => {
            result["generic"] = json!(false);
            result["witness"] = to_value(&w)?;
        }
    }
    Ok((
        json!({"rank": req.rank, "degree": req.degree, "points": to_value(&echo)?}),
        result,
    ))
}

// ---------------------------------------------------------------------------
// strata and codim

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuliInput {
    g: u32,
    r: u32,
    d: u32,
    #[serde(default)]
    xi_degree: i64,
    #[serde(default)]
    points: Vec<PointInput>,
}

fn moduli_spec(req: &ModuliInput) -> JobResult<(ModuliSpec, Value)> {
    let (map, echo) = point_map(&req.points)?;
    let spec =
        ModuliSpec::new(req.g, req.r, req.xi_degree, map).map_err(|e| invalid("input", e))?;
    Ok((
        spec,
        moduli_echo(req.g, req.r, req.d, req.xi_degree, &echo)?,
    ))
}

fn moduli_echo(g: u32, r: u32, d: u32, xi: i64, points: &[PointInput]) -> JobResult<Value> {
    Ok(json!({"g": g, "r": r, "d": d, "xi_degree": xi, "points": to_value(&points)?}))
}

fn job_strata(req: ModuliInput) -> JobResult<(Value, Value)> {
    let (spec, echo) = moduli_spec(&req)?;
    let dim_m = moduli_dimension(&spec);
    let mut list = Vec::new();
    for st in strata(&spec, req.d).map_err(|e| invalid("input", e))? {
        let mut index = BTreeMap::new();
        let mut fibers = BTreeMap::new();
        for (id, t) in &st.index.0 {
            let w = &spec.points()[id];
            let weights = w.weights();
            let subsets: Vec<Vec<Rational>> =
                t.0.iter()
                    .map(|lambda| lambda.iter().map(|&k| weights[k].clone()).collect())
                    .collect();
            index.insert(id.clone(), subsets);
            let systems = matrix_to_multiplicity_system(&st.matrices[id], w).map_err(internal)?;
            let systems: Vec<PointInput> = systems
                .iter()
                .map(|s| PointInput::from_weights(None, s))
                .collect();
            fibers.insert(id.clone(), systems);
        }
        list.push(json!({
            "index": to_value(&index)?,
            "matrices": to_value(&st.matrices)?,
            "fibers": to_value(&fibers)?,
            "dimension": st.dimension,
            "codim": dim_m - st.dimension,
        }));
    }
    Ok((
        echo,
        json!({"dim_M": dim_m, "count": list.len(), "strata": list}),
    ))
}

fn job_codim(req: ModuliInput) -> JobResult<(Value, Value)> {
    let (spec, echo) = moduli_spec(&req)?;
    let report = codim_report(&spec, req.d).map_err(|e| invalid("input", e))?;
    Ok((echo, to_value(&report)?))
}

fn default_max_length() -> usize {
    3
}

fn default_max_points() -> usize {
    2
}

/// Sweep request: `g` is an inclusive range, `d` defaults to every divisor
/// `>= 2` of each rank.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepInput {
    g: (u32, u32),
    r: Vec<u32>,
    #[serde(default)]
    d: Option<Vec<u32>>,
    #[serde(default = "default_max_length")]
    max_length: usize,
    #[serde(default = "default_max_points")]
    max_points: usize,
}

fn run_sweep(input: &[u8]) -> JobResult<Vec<u8>> {
    let req: SweepInput = parse(input)?;
    if req.g.0 < 2 || req.g.0 > req.g.1 {
        return Err(Failure::Invalid("field `g`: need 2 <= lo <= hi".into()));
    }
    if req.r.contains(&0) {
        return Err(Failure::Invalid("field `r`: ranks must be positive".into()));
    }
    let range = SweepRange {
        genus: req.g,
        ranks: req.r,
        degrees: req.d,
        max_length: req.max_length,
        max_points: req.max_points,
    };
    let mut out = String::new();
    for (spec, d) in sweep_configurations(&range) {
        let report = codim_report(&spec, d).map_err(internal)?;
        let echo = moduli_echo(
            spec.genus(),
            spec.rank(),
            d,
            spec.xi_degree(),
            &points_out(spec.points()),
        )?;
        let line = job_report(JobKind::Codim, echo, to_value(&report)?)?;
        out.push_str(&serde_json::to_string(&line).map_err(internal)?);
        out.push('\n');
    }
    Ok(out.into_bytes())
}

// ---------------------------------------------------------------------------
// pushforward

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FiberInput {
    base: String,
    points: Vec<WeightsInput>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightsInput {
    weights: Vec<Rational>,
    mults: Vec<u32>,
}

/// Parabolic data on the cover: fibre `j` of base point `p` is named `p.j`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PushforwardInput {
    d: u32,
    rank: u32,
    degree: i64,
    #[serde(default)]
    g: Option<u32>,
    #[serde(default)]
    fibers: Vec<FiberInput>,
}

fn job_pushforward(req: PushforwardInput) -> JobResult<(Value, Value)> {
    let bases: Vec<&str> = req.fibers.iter().map(|f| f.base.as_str()).collect();
    let cover = CoverSpec::standard(req.d, &bases).map_err(|e| invalid("fibers", e))?;
    let mut points = BTreeMap::new();
    let mut echo_fibers = Vec::new();
    for (fi, fiber) in req.fibers.iter().enumerate() {
        let names = cover
            .fiber(&fiber.base)
            .expect("cover built from these bases");
        if fiber.points.len() != names.len() {
            return Err(invalid(
                &format!("fibers[{fi}].points"),
                format!(
                    "expected {} points, found {}",
                    names.len(),
                    fiber.points.len()
                ),
            ));
        }
        let mut echoed = Vec::new();
        for (j, (name, w)) in names.iter().zip(&fiber.points).enumerate() {
            let pw = PointWeights::from_parts(w.weights.clone(), w.mults.clone())
                .map_err(|e| invalid(&format!("fibers[{fi}].points[{j}]"), e))?;
            echoed.push(WeightsInput {
                weights: pw.weights(),
                mults: pw.multiplicities(),
            });
            points.insert(name.clone(), pw);
        }
        echo_fibers.push((fiber.base.clone(), echoed));
    }
    echo_fibers.sort_by(|a, b| a.0.cmp(&b.0));
    let echo_fibers: Vec<FiberInput> = echo_fibers
        .into_iter()
        .map(|(base, points)| FiberInput { base, points })
        .collect();
    let upstairs =
        ParabolicDatum::new(req.rank, req.degree, points).map_err(|e| invalid("input", e))?;
    let down = pushforward(&cover, &upstairs).map_err(|e| invalid("input", e))?;
    let mut result = json!({
        "rank": down.rank(),
        "degree": down.degree(),
        "points": to_value(&points_out(down.points()))?,
        "par_degree": to_value(&par_degree(&down))?,
        "par_slope": to_value(&par_slope(&down))?,
        "cover_par_degree": to_value(&par_degree(&upstairs))?,
    });
    let mut echo = json!({
        "d": req.d,
        "rank": req.rank,
        "degree": req.degree,
        "fibers": to_value(&echo_fibers)?,
    });
    if let Some(g) = req.g {
        echo["g"] = json!(g);
        result["cover_genus"] = json!(cover_genus(g, req.d));
    }
    Ok((echo, result))
}

// ---------------------------------------------------------------------------
// descend

/// A field element: a rational string, or power-basis coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryInput {
    Rational(Rational),
    Coeffs(Vec<Rational>),
}

impl EntryInput {
    fn to_field(&self, order: u32) -> Result<Cyclotomic, crate::exact::ExactError> {
        match self {
            EntryInput::Rational(q) => Cyclotomic::from_rational(order, q.clone()),
            EntryInput::Coeffs(c) => Cyclotomic::from_coeffs(order, c.clone()),
        }
    }

    fn from_field(x: &Cyclotomic) -> Self {
        match x.as_rational() {
            Some(q) => EntryInput::Rational(q),
            None => EntryInput::Coeffs(x.coeffs().to_vec()),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DescendInput {
    d: u32,
    /// Rows of the automorphism.
    phi: Vec<Vec<EntryInput>>,
    /// Spanning vectors of each flag step, largest first.
    flag: Vec<Vec<Vec<EntryInput>>>,
    weights: Vec<Rational>,
    #[serde(default)]
    convention: Option<MorphismConvention>,
}

fn job_descend(
    req: DescendInput,
    flag_convention: Option<MorphismConvention>,
) -> JobResult<(Value, Value)> {
    let d = req.d;
    if d == 0 {
        return Err(Failure::Invalid("field `d`: must be positive".into()));
    }
    let convention = flag_convention.or(req.convention).unwrap_or_default();
    let lift = |v: &[EntryInput], ctx: &str| -> JobResult<Vec<Cyclotomic>> {
        v.iter()
            .map(|e| e.to_field(d).map_err(|err| invalid(ctx, err)))
            .collect()
    };
    let rows = req
        .phi
        .iter()
        .enumerate()
        .map(|(i, r)| lift(r, &format!("phi[{i}]")))
        .collect::<JobResult<Vec<_>>>()?;
    let zero = Cyclotomic::zero(d).map_err(|e| invalid("d", e))?;
    let matrix = ExactMatrix::from_rows(rows, zero).map_err(|e| invalid("phi", e))?;
    if matrix.rows() != matrix.cols() {
        return Err(Failure::Invalid("field `phi`: must be square".into()));
    }
    let phi = FlagAutomorphism::new(matrix, d).map_err(|e| invalid("phi", e))?;
    let subspaces = req
        .flag
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.iter()
                .enumerate()
                .map(|(j, v)| lift(v, &format!("flag[{i}][{j}]")))
                .collect::<JobResult<Vec<_>>>()
        })
        .collect::<JobResult<Vec<_>>>()?;
    let flag = WeightedFlag::new(phi.dim(), d, subspaces, req.weights.clone())
        .map_err(|e| invalid("flag", e))?;
    let basis = nested_eigenbasis(&phi, &flag).map_err(|e| invalid("input", e))?;
    let res = descend(&phi, &flag, d).map_err(|e| invalid("input", e))?;
    let r = phi.dim() as u32;
    let shape = fixed_point_shape(&res, r, d);
    let margins = shape
        && MultiplicityMatrix(res.matrix.clone()).satisfies_margins(r / d, &flag.multiplicities());
    let endo = check_parabolic_morphism(&flag, &flag, phi.matrix(), convention)
        .map_err(|e| invalid("input", e))?;

    let levels: Vec<Vec<Value>> = basis
        .levels
        .iter()
        .map(|lvl| {
            lvl.iter()
                .map(|ev| {
                    let v: Vec<EntryInput> = ev.vector.iter().map(EntryInput::from_field).collect();
                    json!({"exponent": ev.exponent, "vector": v})
                })
                .collect()
        })
        .collect();
    let fibers: Vec<Value> = res
        .fibers
        .iter()
        .map(|f| {
            json!({
                "index": f.index,
                "eigenspace_dim": f.eigenspace_dim,
                "weights": f.weights.weights(),
                "mults": f.weights.multiplicities(),
            })
        })
        .collect();
    let echo_rows: Vec<Vec<EntryInput>> = phi
        .matrix()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(EntryInput::from_field).collect())
        .collect();
    let echo_flag: Vec<Vec<Vec<EntryInput>>> = (0..flag.len())
        .map(|i| {
            flag.subspace(i)
                .iter()
                .map(|v| v.iter().map(EntryInput::from_field).collect())
                .collect()
        })
        .collect();
    Ok((
        json!({
            "d": d,
            "phi": to_value(&echo_rows)?,
            "flag": to_value(&echo_flag)?,
            "weights": to_value(&flag.weights())?,
            "convention": to_value(&convention)?,
        }),
        json!({
            "eigenbasis": levels,
            "fibers": fibers,
            "matrix": res.matrix,
            "fixed_point_shape": shape,
            "margins_hold": margins,
            "parabolic_endomorphism": endo,
        }),
    ))
}

// ---------------------------------------------------------------------------
// flagcoh

fn default_b2_mg() -> u32 {
    1
}

/// `parabolics` lists, per factor `G/P_i`, the 1-based Levi roots of `P_i`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagcohInput {
    #[serde(rename = "type")]
    cartan: CartanType,
    parabolics: Vec<BTreeSet<usize>>,
    #[serde(default)]
    pic_rank_qg: Option<u32>,
    #[serde(default = "default_b2_mg")]
    b2_mg: u32,
}

fn job_flagcoh(req: FlagcohInput, flag_pic: Option<u32>) -> JobResult<(Value, Value)> {
    let t = &req.cartan;
    if t.rank() == 0 {
        return Err(Failure::Invalid("field `type`: empty Cartan type".into()));
    }
    let pic_rank_qg = flag_pic.or(req.pic_rank_qg).unwrap_or(1);
    let subsets = req
        .parabolics
        .iter()
        .enumerate()
        .map(|(i, idx)| {
            let idx: Vec<usize> = idx.iter().copied().collect();
            ParabolicSubset::from_global(t, &idx)
                .map_err(|e| invalid(&format!("parabolics[{i}]"), e))
        })
        .collect::<JobResult<Vec<_>>>()?;
    let report =
        kunneth_report(t, &subsets, pic_rank_qg, req.b2_mg).map_err(|e| invalid("input", e))?;
    let factors = subsets
        .iter()
        .map(|p| {
            Ok(json!({
                "levi": to_value(&levi_components(t, p).map_err(internal)?)?,
                "poincare": to_value(&flag_poincare(t, p).map_err(internal)?)?,
                "pic_rank": pic_rank_flag(t, p).map_err(internal)?,
            }))
        })
        .collect::<JobResult<Vec<_>>>()?;
    let weyl = weyl_poincare(t);
    let mut result = to_value(&report)?;
    result["factors"] = Value::Array(factors);
    result["weyl_poincare"] = to_value(&weyl)?;
    result["weyl_order"] = json!(weyl.eval(1) as u64);
    Ok((
        json!({
            "type": t.to_string(),
            "parabolics": to_value(&req.parabolics)?,
            "pic_rank_qg": pic_rank_qg,
            "b2_mg": req.b2_mg,
        }),
        result,
    ))
}
