//! Command-line front end. `run` is kept separate from argument parsing so the
//! binary and the tests share one code path.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::betti::{
    betti, cactus_betti, dual_min_distance, dual_min_distance_from_betti, hilbert_check,
    hochster_betti, invert_cactus_betti, Algorithm, BettiTable, CycleProfile,
};
use crate::complex::PrimeField;
use crate::error::Error;
use crate::graphs::{is_cactus, Fixture, Graph};
use crate::json::{betti_to_json, parse_matroid, BettiJson, SCHEMA_VERSION};
use crate::matroid::Matroid;
use crate::verify;
use crate::weights::{cactus_weights, weight_hierarchy, weights_via_blocks, weights_via_circuits, WeightHierarchy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONTRACT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "matroid-betti", version, about = "Betti numbers of matroidal facet ideals and higher weight hierarchies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded Betti numbers of the facet ideal.
    Betti {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: AlgorithmArg,
        /// Characteristic of the coefficient field.
        #[arg(long, default_value_t = 2)]
        field: u32,
        /// Include the fine (per-subset) table; Hochster only.
        #[arg(long)]
        fine: bool,
        #[arg(long)]
        crosscheck: bool,
        /// Expected global Betti numbers; a difference exits with status 3.
        #[arg(long, value_delimiter = ',')]
        expect: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Higher weight hierarchy.
    Weights {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        crosscheck: bool,
        /// Expected hierarchy `d_1,d_2,..`; a difference exits with status 3.
        #[arg(long, value_delimiter = ',')]
        expect: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Block decomposition.
    Blocks {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Cactus recognition and closed forms, from a graph or a cycle-length profile.
    Cactus {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated cycle lengths (1 = loop).
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["input", "fixture"])]
        profile: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Recover cycle lengths from cactus Betti numbers.
    Invert {
        /// Comma-separated global Betti numbers.
        #[arg(long, value_delimiter = ',', required = true)]
        betti: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        loops: usize,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Minimum distance d_1 of the dual matroid.
    #[command(name = "dual-d1")]
    DualD1 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        crosscheck: bool,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Reproduce the outerplanar counterexamples and the cactus results.
    #[command(name = "verify-paper")]
    VerifyPaper {
        #[arg(long, value_enum, default_value = "text")]
        output: OutputFormat,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Matroid or graph: a JSON/edge-list file, `-` for standard input, or inline JSON.
    #[arg(long, conflicts_with = "fixture")]
    pub input: Option<String>,
    /// A bundled fixture graph.
    #[arg(long, value_parser = ["g1", "g2", "g3", "g4"])]
    pub fixture: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Auto,
    Hochster,
    Blocks,
    Cactus,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Auto => Algorithm::Auto,
            AlgorithmArg::Hochster => Algorithm::Hochster,
            AlgorithmArg::Blocks => Algorithm::Blocks,
            AlgorithmArg::Cactus => Algorithm::Cactus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

/// Exit status plus what to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Outcome { code, stdout, stderr }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GroundTooLarge(_) | Error::OutOfRange { .. } | Error::InvalidInput(_) | Error::Parse(_) => {
            EXIT_INPUT
        }
        Error::NotAMatroid(_)
        | Error::ZeroIdeal
        | Error::NotACactus(_)
        | Error::NotCactusBetti(_)
        | Error::DualIsFree
        | Error::Contract(_) => EXIT_CONTRACT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, String::new(), text)
            }
        }
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match dispatch(cli, stdin) {
        Ok(out) => out,
        Err(e) => Outcome::fail(exit_code(&e), String::new(), format!("error: {e}\n")),
    }
}

fn load(input: &InputArgs, stdin: &mut dyn Read) -> Result<Matroid, Error> {
    if let Some(name) = &input.fixture {
        return Matroid::graphic(&Fixture::parse(name)?.graph());
    }
    let Some(src) = &input.input else {
        return Err(Error::invalid("no input: pass --input or --fixture"));
    };
    let text = if src == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        buf
    } else if src.trim_start().starts_with('{') {
        src.clone()
    } else {
        let path = PathBuf::from(src);
        std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    parse_input_text(&text)
}

/// JSON documents start with `{`; anything else is read as a plain edge list.
fn parse_input_text(text: &str) -> Result<Matroid, Error> {
    if text.trim_start().starts_with('{') {
        parse_matroid(text)
    } else {
        Matroid::graphic(&Graph::parse_edge_list(text)?)
    }
}

fn to_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

fn with_schema(mut v: serde_json::Value) -> serde_json::Value {
    if let Some(obj) = v.as_object_mut() {
        obj.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    v
}

fn betti_value(t: &BettiTable) -> serde_json::Value {
    serde_json::to_value(BettiJson::from(t)).expect("tables serialize")
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Betti { input, algorithm, field, fine, crosscheck, expect, output } => {
            let m = load(input, stdin)?;
            let fld = PrimeField::new(*field)?;
            let alg = Algorithm::from(*algorithm);
            if *fine && alg != Algorithm::Hochster {
                return Err(Error::invalid("--fine needs --algorithm hochster"));
            }
            let table = if *fine { hochster_betti(&m, fld, true)? } else { betti(&m, alg, fld)? };
            let text = match output {
                OutputFormat::Json => {
                    let mut s = betti_to_json(&table);
                    s.push('\n');
                    s
                }
                OutputFormat::Text => {
                    format!("{}\nglobal: {:?}\n", table.resolution_string(), table.global)
                }
            };
            let mut report = expectation(expect.as_deref(), &table.global);
            if *crosscheck {
                report.push_str(&crosscheck_betti(&m, &table, fld)?);
            }
            if !report.is_empty() {
                return Ok(Outcome::fail(EXIT_MISMATCH, text, report));
            }
            Ok(Outcome::ok(text))
        }
        Command::Weights { input, crosscheck, expect, output } => {
            let m = load(input, stdin)?;
            let h = weight_hierarchy(&m);
            let text = match output {
                OutputFormat::Json => to_line(&json!({"schema": SCHEMA_VERSION, "d": h.d})),
                OutputFormat::Text => format!("d = {:?}\n", h.d),
            };
            let mut report = expectation(expect.as_deref(), &h.d);
            if *crosscheck {
                report.push_str(&crosscheck_weights(&m, &h)?);
            }
            if !report.is_empty() {
                return Ok(Outcome::fail(EXIT_MISMATCH, text, report));
            }
            Ok(Outcome::ok(text))
        }
        Command::Blocks { input, output } => {
            let m = load(input, stdin)?;
            let parts = m.blocks();
            let text = match output {
                OutputFormat::Json => {
                    let blocks: Vec<_> = parts
                        .iter()
                        .map(|b| json!({"elements": b.elements.to_vec(), "rank": b.matroid.full_rank()}))
                        .collect();
                    to_line(&json!({"schema": SCHEMA_VERSION, "blocks": blocks}))
                }
                OutputFormat::Text => {
                    let mut s = String::new();
                    for (k, b) in parts.iter().enumerate() {
                        let _ = writeln!(s, "block {k}: {} rank {}", b.elements, b.matroid.full_rank());
                    }
                    s
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Cactus { input, profile, output } => {
            let (profile, extra) = match profile {
                Some(lengths) => (CycleProfile::new(lengths.clone())?, json!({})),
                None => {
                    let m = load(input, stdin)?;
                    let g = m.graph().ok_or_else(|| Error::NotACactus("input is not a graph".into()))?;
                    let cert = is_cactus(g).map_err(|e| Error::NotACactus(e.to_string()))?;
                    let p = cert.profile()?;
                    let extra = json!({
                        "cycles": cert.cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
                        "bridges": cert.bridges,
                    });
                    (p, extra)
                }
            };
            let table = cactus_betti(&profile)?;
            let w = cactus_weights(&profile);
            let text = match output {
                OutputFormat::Json => {
                    let mut v = json!({
                        "profile": profile.lengths(),
                        "loops": profile.loops(),
                        "sigma": profile.sigma().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        "betti": betti_value(&table),
                        "weights": w.d,
                    });
                    if let (Some(obj), Some(more)) = (v.as_object_mut(), extra.as_object()) {
                        obj.extend(more.clone());
                    }
                    to_line(&with_schema(v))
                }
                OutputFormat::Text => format!(
                    "profile: {:?}\n{}\nglobal: {:?}\nd = {:?}\n",
                    profile.lengths(),
                    table.resolution_string(),
                    table.global,
                    w.d
                ),
            };
            Ok(Outcome::ok(text))
        }
        Command::Invert { betti: global, loops, output } => {
            let p = invert_cactus_betti(global, *loops)?;
            let w = cactus_weights(&p);
            let text = match output {
                OutputFormat::Json => to_line(&json!({
                    "schema": SCHEMA_VERSION,
                    "lengths": p.lengths(),
                    "loops": loops,
                    "weights": w.d,
                })),
                OutputFormat::Text => format!("cycle lengths: {:?}\nd = {:?}\n", p.lengths(), w.d),
            };
            Ok(Outcome::ok(text))
        }
        Command::DualD1 { input, crosscheck, output } => {
            let m = load(input, stdin)?;
            let d1 = dual_min_distance(&m)?;
            let text = match output {
                OutputFormat::Json => to_line(&json!({"schema": SCHEMA_VERSION, "d1": d1})),
                OutputFormat::Text => format!("d_1(M*) = {d1}\n"),
            };
            if *crosscheck {
                let mut report = String::new();
                let via_weights = weight_hierarchy(&m.dual()).get(1);
                if via_weights != Some(d1) {
                    let _ = writeln!(report, "mismatch: weight hierarchy of the dual gives {via_weights:?}");
                }
                let t = betti(&m, Algorithm::Auto, PrimeField::GF2)?;
                let via_betti = dual_min_distance_from_betti(&t)?;
                if via_betti != d1 {
                    let _ = writeln!(report, "mismatch: Betti numbers give {via_betti}");
                }
                if !report.is_empty() {
                    return Ok(Outcome::fail(EXIT_MISMATCH, text, report));
                }
            }
            Ok(Outcome::ok(text))
        }
        Command::VerifyPaper { output } => {
            let checks = verify::run_all();
            let all = checks.iter().all(|c| c.pass);
            let text = match output {
                OutputFormat::Json => to_line(&json!({
                    "schema": SCHEMA_VERSION,
                    "all_pass": all,
                    "checks": checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>(),
                })),
                OutputFormat::Text => verify::render_table(&checks),
            };
            Ok(if all { Outcome::ok(text) } else { Outcome::fail(EXIT_MISMATCH, text, "verification failed\n".into()) })
        }
    }
}

fn expectation<T: PartialEq + std::fmt::Debug>(expected: Option<&[T]>, got: &[T]) -> String {
    match expected {
        Some(e) if e != got => format!("mismatch: expected {e:?}, got {got:?}\n"),
        _ => String::new(),
    }
}

/// Runs every applicable algorithm and field; returns a description of each
/// disagreement (empty when all agree).
fn crosscheck_betti(m: &Matroid, table: &BettiTable, fld: PrimeField) -> Result<String, Error> {
    let mut report = String::new();
    let mut algorithms = vec![Algorithm::Hochster, Algorithm::Blocks];
    if m.graph().is_some_and(|g| g.is_connected() && is_cactus(g).is_ok_and(|c| c.is_cactus)) {
        algorithms.push(Algorithm::Cactus);
    }
    for alg in algorithms {
        let other = betti(m, alg, fld)?;
        if !other.same_graded(table) {
            let _ = writeln!(report, "mismatch: {alg} gives {:?}, expected {:?}", other.global, table.global);
        }
    }
    let other_field = if fld.characteristic() == 2 { PrimeField::new(3)? } else { PrimeField::GF2 };
    let t2 = hochster_betti(m, other_field, false)?;
    if !t2.same_graded(table) {
        let _ = writeln!(report, "mismatch: {other_field:?} gives {:?}", t2.global);
    }
    if !table.is_linear() {
        let _ = writeln!(report, "mismatch: table is not linear");
    }
    if !hilbert_check(table, m) {
        let _ = writeln!(report, "mismatch: Hilbert series check failed");
    }
    Ok(report)
}

fn crosscheck_weights(m: &Matroid, h: &WeightHierarchy) -> Result<String, Error> {
    let mut report = String::new();
    let mut others = vec![("circuits", weights_via_circuits(m)), ("blocks", weights_via_blocks(m))];
    if let Some(g) = m.graph() {
        if let Ok(cert) = is_cactus(g) {
            if cert.is_cactus {
                others.push(("cactus", cactus_weights(&cert.profile()?)));
            }
        }
    }
    for (name, other) in others {
        if &other != h {
            let _ = writeln!(report, "mismatch: {name} gives {:?}, expected {:?}", other.d, h.d);
        }
    }
    if !h.is_strictly_increasing() {
        let _ = writeln!(report, "mismatch: hierarchy is not strictly increasing");
    }
    Ok(report)
}
