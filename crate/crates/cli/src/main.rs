use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::{BigRational, Rational64};
use serde::Serialize;
use serde_json::{json, Value};

use verlinde::fusion::{brane_quantize, fuse, fusion_table_with, multiply};
use verlinde::modular::modular_data_with;
use verlinde::nsc::{classify_irreps, invariance_defects, modular_invariant, virasoro_character};
use verlinde::repro::run_repro;
use verlinde::tensor::tensor_decompose;
use verlinde::{Error, ErrorKind, Execution, GroupSpec, Limits, RootDatum, Series, Weight};

mod render;

const BASIS_ENV: &str = "VERLINDE_MAX_BASIS";

#[derive(Parser)]
#[command(name = "verlinde", version, about = "Verlinde fusion rings, center actions and simple-current invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct Group {
    /// Group spec such as A2, A1/Z2 or D4/Z2{v}
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct AtLevel {
    #[command(flatten)]
    group: Group,
    #[arg(long)]
    level: u32,
}

#[derive(Args)]
struct Pair {
    /// Comma-separated Dynkin labels
    #[arg(long, allow_hyphen_values = true)]
    lhs: String,
    #[arg(long, allow_hyphen_values = true)]
    rhs: String,
    /// Read lhs and rhs as SU(2) spins j (label 2j), e.g. 1/2
    #[arg(long)]
    spin: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Dominant weights of level at most k
    Weights(AtLevel),
    /// Decompose a tensor product of irreducibles
    Tensor {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        pair: Pair,
    },
    /// Fusion product of two level-k weights
    Fuse {
        #[command(flatten)]
        at: AtLevel,
        #[command(flatten)]
        pair: Pair,
    },
    /// Full fusion table at level k
    Table(AtLevel),
    /// Modular S and T data at level k
    Smatrix(AtLevel),
    /// Center orbits at level k, grouped by character
    Orbits {
        #[command(flatten)]
        at: AtLevel,
        /// Restrict to one character (flat index or one exponent per generator)
        #[arg(long = "char")]
        character: Option<String>,
    },
    /// Basic, multiplicative and fundamental levels of a quotient
    Levels(Group),
    /// Irreducible representations of the extension with a given character
    Classify {
        #[command(flatten)]
        at: AtLevel,
        #[arg(long = "char")]
        character: String,
    },
    /// Simple-current modular invariant and its commutation checks
    Invariant {
        #[command(flatten)]
        at: AtLevel,
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
    },
    /// Quantize conjugacy-class branes, optionally multiplying two of them
    Brane {
        #[command(flatten)]
        at: AtLevel,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: Option<String>,
    },
    /// Reproduce the SO(3) and SU(3)/Z3 tables
    Repro {
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
    },
}

#[derive(Serialize)]
struct Envelope {
    command: &'static str,
    group: Option<String>,
    level: Option<u32>,
    payload: Value,
    tool_version: &'static str,
}

/// A failure before or outside the library: bad flags or environment.
enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<(Envelope, bool), Failure>;

fn limits() -> std::result::Result<Limits, Failure> {
    let mut l = Limits::default();
    if let Ok(v) = std::env::var(BASIS_ENV) {
        l.max_basis = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BASIS_ENV} must be a non-negative integer, got {v:?}")))?;
    }
    Ok(l)
}

fn parse_group(g: &Group) -> std::result::Result<GroupSpec, Failure> {
    Ok(g.group.parse()?)
}

fn simply_connected(g: &GroupSpec) -> std::result::Result<RootDatum, Failure> {
    Ok(g.datum()?)
}

fn parse_labels(d: &RootDatum, s: &str) -> std::result::Result<Weight, Failure> {
    let labels = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Parse { what: "weight", input: s.to_string() })?;
    let w = Weight::new(labels);
    d.check_weight(&w)?;
    Ok(w)
}

fn parse_spin(d: &RootDatum, s: &str) -> std::result::Result<Weight, Failure> {
    let ty = d.simple_type();
    if ty.series() != Series::A || ty.rank() != 1 {
        return Err(Failure::Usage(format!("--spin is only meaningful for A1, not {ty}")));
    }
    let bad = || Error::Parse { what: "spin", input: s.to_string() };
    let j: Rational64 = s.trim().parse().map_err(|_| bad())?;
    let two_j = j * 2;
    if !two_j.is_integer() || two_j < Rational64::from_integer(0) {
        return Err(bad().into());
    }
    Ok(Weight::new(vec![two_j.to_integer()]))
}

fn parse_pair(d: &RootDatum, p: &Pair) -> std::result::Result<(Weight, Weight), Failure> {
    let one = |s: &str| if p.spin { parse_spin(d, s) } else { parse_labels(d, s) };
    Ok((one(&p.lhs)?, one(&p.rhs)?))
}

fn ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn turns(r: &Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn envelope(command: &'static str, group: Option<&GroupSpec>, level: Option<u32>, payload: Value) -> Envelope {
    Envelope {
        command,
        group: group.map(ToString::to_string),
        level,
        payload,
        tool_version: env!("CARGO_PKG_VERSION"),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload serializes")
}

fn run(cmd: &Command) -> Outcome {
    let exec = Execution::default();
    let ok = |e: Envelope| Ok((e, true));
    match cmd {
        Command::Weights(at) => {
            let g = parse_group(&at.group)?;
            let d = simply_connected(&g)?;
            let ws = d.enumerate_level_weights(at.level);
            ok(envelope("weights", Some(&g), Some(at.level), json!({ "count": ws.len(), "weights": ws })))
        }
        Command::Tensor { group, pair } => {
            let g = parse_group(group)?;
            let d = simply_connected(&g)?;
            let (a, b) = parse_pair(&d, pair)?;
            let t = tensor_decompose(&d, &a, &b)?;
            let components: Vec<Value> = t
                .components
                .iter()
                .map(|(w, m)| json!({ "weight": w, "mult": m }))
                .collect();
            ok(envelope("tensor", Some(&g), None, json!({ "lhs": a, "rhs": b, "components": components })))
        }
        Command::Fuse { at, pair } => {
            let g = parse_group(&at.group)?;
            let d = simply_connected(&g)?;
            let (a, b) = parse_pair(&d, pair)?;
            let f = fuse(&d, at.level, &a, &b)?;
            ok(envelope("fuse", Some(&g), Some(at.level), to_value(&f)))
        }
        Command::Table(at) => {
            let g = parse_group(&at.group)?;
            let d = simply_connected(&g)?;
            let t = fusion_table_with(&d, at.level, exec, &limits()?)?;
            let payload = json!({
                "group": g.to_string(),
                "level": t.level(),
                "basis": t.basis(),
                "N": t.entries(),
            });
            ok(envelope("table", Some(&g), Some(at.level), payload))
        }
        Command::Smatrix(at) => {
            let g = parse_group(&at.group)?;
            let d = simply_connected(&g)?;
            let md = modular_data_with(&d, at.level, exec, &limits()?)?;
            let re: Vec<Vec<f64>> = md.s().iter().map(|r| r.iter().map(|x| x.re).collect()).collect();
            let im: Vec<Vec<f64>> = md.s().iter().map(|r| r.iter().map(|x| x.im).collect()).collect();
            let phase: Vec<String> = md.t_phase().iter().map(ratio).collect();
            let payload = json!({
                "basis": md.basis(),
                "S_re": re,
                "S_im": im,
                "T_phase": phase,
                "c": ratio(md.central_charge()),
            });
            ok(envelope("smatrix", Some(&g), Some(at.level), payload))
        }
        Command::Orbits { at, character } => {
            let g = parse_group(&at.group)?;
            let cd = g.center()?;
            let k = at.level;
            let wanted = character.as_deref().map(|c| cd.parse_character(c)).transpose()?;
            let mut sectors = Vec::new();
            for (chi, orbits) in cd.partition_by_character(k)? {
                if wanted.as_ref().is_some_and(|w| *w != chi) {
                    continue;
                }
                let list: Vec<Value> = orbits
                    .iter()
                    .map(|o| json!({ "members": o.members, "stabilizer_order": o.stabilizer.len() }))
                    .collect();
                let values: Vec<String> = chi.values().iter().map(turns).collect();
                sectors.push(json!({
                    "character": cd.character_index(&chi)?,
                    "values": values,
                    "orbits": list,
                }));
            }
            ok(envelope("orbits", Some(&g), Some(k), Value::Array(sectors)))
        }
        Command::Levels(group) => {
            let g = parse_group(group)?;
            let cd = g.center()?;
            let fundamental = match cd.fundamental_level() {
                Ok(l) => Some(l),
                Err(Error::UnknownFundamentalLevel(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let payload = json!({
                "basic": cd.basic_level(),
                "multiplicative": cd.multiplicative_level(),
                "fundamental": fundamental,
            });
            ok(envelope("levels", Some(&g), None, payload))
        }
        Command::Classify { at, character } => {
            let g = parse_group(&at.group)?;
            let cd = g.center()?;
            let chi = cd.parse_character(character)?;
            let mut items = Vec::new();
            for label in classify_irreps(&cd, at.level, &chi)? {
                let vir = virasoro_character(&cd, &label)?;
                let terms: Vec<Value> = vir.coefficients().iter().map(|(w, c)| json!([w, c])).collect();
                items.push(json!({
                    "orbit": label.orbit.members,
                    "stabilizer_order": label.stabilizer_order(),
                    "rho": label.rho,
                    "virasoro": terms,
                }));
            }
            ok(envelope("classify", Some(&g), Some(at.level), Value::Array(items)))
        }
        Command::Invariant { at, tolerance } => {
            let g = parse_group(&at.group)?;
            let cd = g.center()?;
            let lim = limits()?;
            let md = modular_data_with(cd.datum(), at.level, exec, &lim)?;
            let mi = modular_invariant(&cd, at.level)?;
            let (ds, dt) = invariance_defects(&mi, &md)?;
            let payload = json!({
                "basis": mi.basis,
                "M": mi.m,
                "commutes_S": ds < *tolerance,
                "commutes_T": dt < *tolerance,
                "defect_S": ds,
                "defect_T": dt,
            });
            ok(envelope("invariant", Some(&g), Some(at.level), payload))
        }
        Command::Brane { at, lhs, rhs } => {
            let g = parse_group(&at.group)?;
            let d = simply_connected(&g)?;
            let k = at.level;
            let mut e = brane_quantize(&d, k, &parse_labels(&d, lhs)?)?;
            if let Some(r) = rhs {
                e = multiply(&d, &e, &brane_quantize(&d, k, &parse_labels(&d, r)?)?)?;
            }
            ok(envelope("brane", Some(&g), Some(k), to_value(&e)))
        }
        Command::Repro { tolerance } => {
            let lines = run_repro(*tolerance)?;
            let all = lines.iter().all(|l| l.passed);
            Ok((envelope("repro", None, None, to_value(&lines)), all))
        }
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Usage(_) => 2,
        Failure::Lib(e) => match e.kind() {
            ErrorKind::Malformed => 2,
            ErrorKind::Unsupported => 3,
            ErrorKind::Resource => 4,
            ErrorKind::Internal => 70,
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("error[usage]: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(&cli.command) {
        Ok((env, passed)) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string(&env).expect("envelope serializes"),
                Format::Table => render::table(&env.command, env.group.as_deref(), env.level, &env.payload),
            };
            println!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error[usage]: {msg}"),
                Failure::Lib(e) => eprintln!("error[{}]: {e}", e.tag()),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}
