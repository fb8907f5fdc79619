//! Command-line front end: orbit tables, apparent distances, BCH
//! construction and bounds, dimension multiplication, oracle verification
//! and highest-dimension search. Machine-readable JSON goes to stdout (or
//! --output), human-readable summaries to stderr.

use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use abelian_codes::algebra::{apply_multiplier, gcd, orbit_partition, Index, Shape};
use abelian_codes::codes::{
    apparent_distance_alpha, apparent_distance_code, bch_bound, bch_code, bch_dimension_bound,
    hd_search, multiply_dimension, AbelianCode,
};
use abelian_codes::hypermatrix::OrbitHypermatrix;
use abelian_codes::json::{
    ApdistJson, BchBoundJson, BchBuildJson, BchSpecJson, ClassApdistJson, ClassValueJson,
    CodeJson, DimensionBoundJson, MultiplyJson, OrbitJson, OrbitsJson, SearchHdEntryJson,
    SearchHdJson, TraceJson, VerifyJson,
};
use abelian_codes::mad::mad;
use abelian_codes::oracle::{
    generator_matrix, mad_bruteforce, min_distance_bruteforce, DEFAULT_DISTANCE_BUDGET,
    DEFAULT_MAD_ORBIT_BUDGET, EXTENDED_DISTANCE_BUDGET,
};
use abelian_codes::Error;

const EXIT_INTERNAL: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_MISMATCH: u8 = 4;
const EXIT_PRECONDITION: u8 = 5;

#[derive(Parser)]
#[command(
    name = "abelian-codes",
    version,
    about = "Apparent distance and BCH tooling for abelian (multivariate cyclic) codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArgs {
    /// Field size q (a prime power; oracles require a prime).
    #[arg(long)]
    q: u64,
    /// Comma-separated coordinate orders r_1,...,r_s, each coprime to q.
    #[arg(long, value_delimiter = ',', required = true)]
    r: Vec<u32>,
}

impl ShapeArgs {
    fn to_shape(&self) -> Result<Shape, CliError> {
        Ok(Shape::new(self.q, self.r.clone())?)
    }
}

#[derive(Args)]
struct IoArgs {
    /// Read the input JSON from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the output JSON to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-orbit partition of the index set.
    Orbits {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Write the output JSON to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apparent distance of a code across all root classes.
    Apdist {
        #[command(flatten)]
        io: IoArgs,
        /// Include the minimum-apparent-distance trace in the output.
        #[arg(long)]
        trace: bool,
        /// Evaluate one root class only, given as a unit multiplier a1,...,as.
        #[arg(long, value_name = "a1,...,as", value_delimiter = ',')]
        root_class: Option<Vec<u32>>,
    },
    /// Multivariate BCH construction and bounds.
    Bch {
        #[command(subcommand)]
        action: BchAction,
    },
    /// Extend a cyclic code to n times its dimension in A_q(n, r).
    Multiply {
        #[command(flatten)]
        io: IoArgs,
        /// The new leading coordinate order; must be coprime to q.
        #[arg(long)]
        n: u32,
    },
    /// Compare engine values against the brute-force oracles.
    Verify {
        #[command(flatten)]
        io: IoArgs,
        /// Codeword enumeration budget for the minimum distance oracle.
        #[arg(long)]
        budget: Option<u64>,
        /// Use the extended enumeration budget (2^28) instead of 2^24.
        #[arg(long)]
        extended: bool,
    },
    /// Highest-dimension codes for a target apparent distance.
    SearchHd {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Smallest acceptable apparent distance.
        #[arg(long)]
        target: u64,
        /// Cap on candidate defining sets evaluated.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Write the output JSON to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BchAction {
    /// Construct the code and report it with its bounds.
    Build {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Report the designed distance and dimension bounds only.
    Bound {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        io: IoArgs,
    },
}

/// An error plus the exit status it maps to.
struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn validation(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: EXIT_VALIDATION,
        }
    }

    fn precondition(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: EXIT_PRECONDITION,
        }
    }

    fn mismatch(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: EXIT_MISMATCH,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> CliError {
        let code = match err {
            Error::InvalidShape(_) | Error::InvalidArgument(_) | Error::NotOrbitClosed(_) => {
                EXIT_VALIDATION
            }
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::ZeroHypercolumn { .. } | Error::Internal(_) => EXIT_INTERNAL,
        };
        CliError {
            message: err.to_string(),
            code,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> CliError {
        CliError::validation(format!("invalid JSON: {err}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> CliError {
        CliError::validation(format!("io error: {err}"))
    }
}

fn read_input(input: &Option<PathBuf>) -> Result<String, CliError> {
    match input {
        Some(path) => Ok(fs::read_to_string(path)?),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn emit<T: Serialize>(output: &Option<PathBuf>, payload: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(payload).expect("serializable payload");
    match output {
        Some(path) => fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn load_code(input: &Option<PathBuf>) -> Result<AbelianCode, CliError> {
    let text = read_input(input)?;
    let json: CodeJson = serde_json::from_str(&text)?;
    Ok(json.to_code()?)
}

fn reject_zero_code(c: &AbelianCode) -> Result<(), CliError> {
    if c.is_zero() {
        return Err(CliError::precondition(
            "the defining set covers every index: this is the zero code",
        ));
    }
    Ok(())
}

fn reps_text(reps: &[Vec<u32>]) -> String {
    let rows: Vec<String> = reps
        .iter()
        .map(|r| {
            let coords: Vec<String> = r.iter().map(u32::to_string).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    rows.join(" ")
}

fn cmd_orbits(shape: &Shape, output: &Option<PathBuf>) -> Result<(), CliError> {
    let partition = orbit_partition(shape, 1)?;
    let orbits: Vec<OrbitJson> = partition
        .orbits
        .iter()
        .map(|o| OrbitJson {
            members: o.members.iter().map(|m| m.coords.clone()).collect(),
            rep: o.rep.coords.clone(),
            size: o.size(),
        })
        .collect();
    eprintln!(
        "{} orbits of Z_{} under multiplication by {}",
        orbits.len(),
        shape
            .r()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" x Z_"),
        shape.q()
    );
    for o in &orbits {
        eprintln!(
            "  rep {:<12} size {:>3}  members {}",
            reps_text(std::slice::from_ref(&o.rep)),
            o.size,
            reps_text(&o.members)
        );
    }
    emit(
        output,
        &OrbitsJson {
            orbits,
            q: shape.q(),
            r: shape.r().to_vec(),
        },
    )
}

fn class_matrix(c: &AbelianCode, multiplier: &Index) -> Result<OrbitHypermatrix, CliError> {
    let shape = c.shape();
    let defining = c.matrix().defining_bits();
    let mapped: Vec<Index> = defining
        .iter_ones()
        .map(|linear| apply_multiplier(shape, multiplier, &shape.index_at(linear)))
        .collect();
    Ok(OrbitHypermatrix::afford(shape, 1, &mapped)?)
}

fn cmd_apdist(
    io: &IoArgs,
    trace: bool,
    root_class: &Option<Vec<u32>>,
) -> Result<(), CliError> {
    let code = load_code(&io.input)?;
    reject_zero_code(&code)?;
    let shape = code.shape().clone();

    if let Some(coords) = root_class {
        if coords.len() != shape.s() {
            return Err(CliError::validation(format!(
                "--root-class needs {} coordinates, got {}",
                shape.s(),
                coords.len()
            )));
        }
        for (&a, &rj) in coords.iter().zip(shape.r()) {
            if a >= rj || gcd(a as u64, rj as u64) != 1 {
                return Err(CliError::validation(format!(
                    "{a} is not a unit modulo {rj}"
                )));
            }
        }
        let multiplier = Index::new(coords.clone());
        let matrix = class_matrix(&code, &multiplier)?;
        let run = mad(&matrix)?;
        eprintln!(
            "d* under class ({}) = {}   dim = {}",
            coords
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(","),
            run.value(),
            code.dimension()
        );
        return emit(
            &io.output,
            &ClassApdistJson {
                class: coords.clone(),
                d_star: run.value(),
                dimension: code.dimension(),
                q: shape.q(),
                r: shape.r().to_vec(),
                trace: trace.then(|| TraceJson::from_trace(&run)),
            },
        );
    }

    let alpha_run = mad(code.matrix())?;
    let result = apparent_distance_code(&code)?;
    let bound = bch_bound(&code)?;
    eprintln!(
        "d*_alpha = {}   d*(C) = {}   dim = {}   bch bound = {}",
        alpha_run.value(),
        result.value,
        code.dimension(),
        bound
    );
    for (class, v) in &result.per_class {
        eprintln!("  class {:<12} d* = {v}", reps_text(&[class.multiplier.coords.clone()]));
    }
    emit(
        &io.output,
        &ApdistJson {
            bch_bound: bound,
            d_star_alpha: alpha_run.value(),
            d_star_code: result.value,
            dimension: code.dimension(),
            optimized_root_classes: result
                .optimized_roots
                .iter()
                .map(|c| c.multiplier.coords.clone())
                .collect(),
            per_class: result
                .per_class
                .iter()
                .map(|(class, v)| ClassValueJson {
                    class: class.multiplier.coords.clone(),
                    d_star: *v,
                })
                .collect(),
            q: shape.q(),
            r: shape.r().to_vec(),
            trace: trace.then(|| TraceJson::from_trace(&alpha_run)),
        },
    )
}

fn cmd_bch(action: &BchAction) -> Result<(), CliError> {
    let (shape_args, io, build) = match action {
        BchAction::Build { shape, io } => (shape, io, true),
        BchAction::Bound { shape, io } => (shape, io, false),
    };
    let shape = shape_args.to_shape()?;
    let text = read_input(&io.input)?;
    let spec_json: BchSpecJson = serde_json::from_str(&text)?;
    let spec = spec_json.to_spec()?;
    spec.validate_for(&shape)?;

    let code = bch_code(&shape, &spec)?;
    let designed: u64 = spec.gamma().iter().map(|&k| spec.delta(k) as u64).product();
    let dim_bound = bch_dimension_bound(&shape, &spec)?;
    if code.is_zero() {
        return Err(CliError::precondition(
            "orbit closure swallowed every index; the construction is the zero code",
        ));
    }
    let bound = bch_bound(&code)?;
    eprintln!(
        "designed distance = {designed}   bch bound = {bound}   dim = {}   dim bound = {}{}",
        code.dimension(),
        dim_bound.value,
        if dim_bound.vacuous { " (vacuous)" } else { "" }
    );
    if build {
        emit(
            &io.output,
            &BchBuildJson {
                bch_bound: bound,
                defining_set_orbit_reps: code
                    .defining_orbit_reps()
                    .into_iter()
                    .map(|i| i.coords)
                    .collect(),
                designed_distance: designed,
                dimension: code.dimension(),
                dimension_bound: DimensionBoundJson::from_bound(dim_bound),
                q: shape.q(),
                r: shape.r().to_vec(),
            },
        )
    } else {
        emit(
            &io.output,
            &BchBoundJson {
                bch_bound: bound,
                designed_distance: designed,
                dimension: code.dimension(),
                dimension_bound: DimensionBoundJson::from_bound(dim_bound),
                q: shape.q(),
                r: shape.r().to_vec(),
            },
        )
    }
}

fn cmd_multiply(io: &IoArgs, n: u32) -> Result<(), CliError> {
    let code = load_code(&io.input)?;
    reject_zero_code(&code)?;
    let product = multiply_dimension(&code, n)?;
    let result = apparent_distance_code(&product)?;
    eprintln!(
        "extended to shape ({})   dim = {}   d*(C) = {}",
        product
            .shape()
            .r()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(","),
        product.dimension(),
        result.value
    );
    emit(
        &io.output,
        &MultiplyJson {
            d_star_code: result.value,
            defining_set_orbit_reps: product
                .defining_orbit_reps()
                .into_iter()
                .map(|i| i.coords)
                .collect(),
            dimension: product.dimension(),
            n,
            q: product.shape().q(),
            r: product.shape().r().to_vec(),
        },
    )
}

fn cmd_verify(io: &IoArgs, budget: Option<u64>, extended: bool) -> Result<(), CliError> {
    let code = load_code(&io.input)?;
    reject_zero_code(&code)?;
    let shape = code.shape().clone();
    let distance_budget = budget.map(u128::from).unwrap_or(if extended {
        EXTENDED_DISTANCE_BUDGET
    } else {
        DEFAULT_DISTANCE_BUDGET
    });

    let d_star_alpha = apparent_distance_alpha(&code)?;
    let d_star_code = apparent_distance_code(&code)?.value;
    let mad_oracle = mad_bruteforce(code.matrix(), DEFAULT_MAD_ORBIT_BUDGET)?;
    let gm = generator_matrix(code.matrix())?;
    let dimension_oracle = gm.dimension();
    let d_oracle = min_distance_bruteforce(&gm, distance_budget)?;

    let camion_ok = d_star_code <= d_oracle;
    let ok = d_star_alpha == mad_oracle && code.dimension() == dimension_oracle && camion_ok;
    let report = VerifyJson {
        camion_ok,
        d_oracle,
        d_star_alpha,
        d_star_code,
        dimension: code.dimension(),
        dimension_oracle,
        mad_oracle,
        ok,
        q: shape.q(),
        r: shape.r().to_vec(),
    };
    eprintln!(
        "engine: d*_alpha = {d_star_alpha}, d*(C) = {d_star_code}, dim = {}",
        code.dimension()
    );
    eprintln!(
        "oracle: mad = {mad_oracle}, dim = {dimension_oracle}, d(C) = {d_oracle}"
    );
    emit(&io.output, &report)?;
    if !ok {
        return Err(CliError::mismatch(
            "engine and oracle disagree; see the report above",
        ));
    }
    Ok(())
}

fn cmd_search_hd(
    shape: &Shape,
    target: u64,
    budget: usize,
    output: &Option<PathBuf>,
) -> Result<(), CliError> {
    let winners = hd_search(shape, target, budget)?;
    let mut entries = Vec::with_capacity(winners.len());
    for code in &winners {
        let value = apparent_distance_code(code)?.value;
        entries.push(SearchHdEntryJson {
            d_star_code: value,
            defining_set_orbit_reps: code
                .defining_orbit_reps()
                .into_iter()
                .map(|i| i.coords)
                .collect(),
            dimension: code.dimension(),
        });
    }
    match entries.first() {
        Some(best) => eprintln!(
            "{} code(s) of dimension {} with d*(C) >= {target}",
            entries.len(),
            best.dimension
        ),
        None => eprintln!("no code reaches d*(C) >= {target}"),
    }
    for e in &entries {
        eprintln!(
            "  dim {:>3}  d* {:>3}  D = {}",
            e.dimension,
            e.d_star_code,
            reps_text(&e.defining_set_orbit_reps)
        );
    }
    emit(
        output,
        &SearchHdJson {
            budget,
            codes: entries,
            q: shape.q(),
            r: shape.r().to_vec(),
            target,
        },
    )
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Orbits { shape, output } => cmd_orbits(&shape.to_shape()?, output),
        Command::Apdist {
            io,
            trace,
            root_class,
        } => cmd_apdist(io, *trace, root_class),
        Command::Bch { action } => cmd_bch(action),
        Command::Multiply { io, n } => cmd_multiply(io, *n),
        Command::Verify {
            io,
            budget,
            extended,
        } => cmd_verify(io, *budget, *extended),
        Command::SearchHd {
            shape,
            target,
            budget,
            output,
        } => cmd_search_hd(&shape.to_shape()?, *target, *budget, output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
