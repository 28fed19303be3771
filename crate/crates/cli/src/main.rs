//! `nie`: inspect chain rings, constacyclic codes with non-invertible shift
//! constants, their duals, and codes over product rings.

mod output;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nie_core::algebra::{make_algebra, parse_algebra, Algebra, SPoly};
use nie_core::code::{Code, SCHEMA_VERSION};
use nie_core::duality::dual;
use nie_core::pir::{crt_code, optimal_construction, parse_pir, OptimalKind, PirAlgebra, PirCode};
use nie_core::ring::{make_ring, ChainRingSpec};
use nie_core::sweep::SweepConfig;
use nie_core::verify::{self, Suite};
use nie_core::{Elem, Error, Result};
use serde_json::{json, Value};

use output::Format;

#[derive(Parser)]
#[command(name = "nie", version, about = "Constacyclic codes over finite chain rings and PIRs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, Teichmüller set and γ of a chain ring.
    RingInfo {
        #[arg(long)]
        ring: String,
    },
    /// Unit structure and maximal-ideal classification of R[x]/⟨x^n − λ⟩.
    AlgebraClassify(ClassifyArgs),
    /// Torsional degrees, cardinality and canonical representation of a code.
    CodeRepr(CodeArgs),
    /// Minimum distance of a code, with a weight-one codeword when one exists.
    CodeDistance(CodeArgs),
    /// Annihilator, dual and dual-constacyclicity verdict of a code.
    CodeDual(CodeArgs),
    /// Assemble a code over a product ring from component generators.
    PirBuild(PirArgs),
    /// Minimum distance of a code over a product ring.
    PirDistance(PirArgs),
    /// Optimal codes over products of fields or Galois rings.
    PirOptimal(OptimalArgs),
    /// Run verification suites over swept algebras and their ideals.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Full algebra spec, e.g. "Z(4);n=3;lambda=2".
    #[arg(long, conflicts_with_all = ["ring", "n", "lambdas"])]
    algebra: Option<String>,
    #[arg(long, requires_all = ["n", "lambdas"])]
    ring: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated λ codes; one report per value.
    #[arg(long)]
    lambdas: Option<String>,
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    algebra: String,
    /// Generators separated by ';', e.g. "[0,1];[2,0]".
    #[arg(long, default_value = "")]
    gens: String,
}

#[derive(Args)]
struct PirArgs {
    /// Product ring, e.g. "Z(4) x F(5)".
    #[arg(long)]
    pir: String,
    #[arg(long)]
    n: usize,
    /// λ per factor, comma-separated.
    #[arg(long)]
    lambdas: String,
    /// Generators per factor: factors separated by '|', generators by ';'.
    #[arg(long, default_value = "")]
    gens: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum OptimalKindArg {
    Rs,
    Galois,
}

#[derive(Args)]
struct OptimalArgs {
    #[arg(long, value_enum)]
    kind: OptimalKindArg,
    /// Field size (rs).
    #[arg(long, required_if_eq("kind", "rs"))]
    q: Option<u32>,
    #[arg(long)]
    k: usize,
    /// Number of factors.
    #[arg(long)]
    s: usize,
    #[arg(long, required_if_eq("kind", "galois"))]
    p: Option<u32>,
    #[arg(long, required_if_eq("kind", "galois"))]
    t: Option<u32>,
    #[arg(long, required_if_eq("kind", "galois"))]
    m: Option<u32>,
    /// Code length (galois).
    #[arg(long, required_if_eq("kind", "galois"))]
    n: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 512)]
    max_ring_size: u32,
    #[arg(long, default_value_t = 4096)]
    max_algebra_size: u128,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command);
    let (report, code) = match result {
        Ok((value, ok)) => (value, if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }),
        Err(e) => (
            json!({"schema": SCHEMA_VERSION, "error": {"kind": e.kind(), "message": e.to_string()}}),
            ExitCode::from(1),
        ),
    };
    let text = output::render(&report, cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("nie: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    code
}

/// Returns the report and whether the run counts as a success.
fn run(command: &Command) -> Result<(Value, bool)> {
    let value = match command {
        Command::RingInfo { ring } => ring_info(ring)?,
        Command::AlgebraClassify(args) => classify(args)?,
        Command::CodeRepr(args) => {
            let code = parse_code(args)?;
            to_value(code.report())
        }
        Command::CodeDistance(args) => {
            let code = parse_code(args)?;
            let witness = code.weight_one_witness().ok().flatten();
            json!({
                "schema": SCHEMA_VERSION,
                "algebra": code.algebra().to_string(),
                "generators": code.generators(),
                "cardinality": code.cardinality().to_string(),
                "distance": code.min_distance()?,
                "weight_one_witness": witness,
            })
        }
        Command::CodeDual(args) => to_value(dual(&parse_code(args)?)?.to_json()),
        Command::PirBuild(args) => to_value(parse_pir_code(args)?.report()),
        Command::PirDistance(args) => {
            let code = parse_pir_code(args)?;
            let enumerated = match code.brute_force_distance() {
                Ok(d) => Some(d),
                Err(Error::TooLarge { .. }) => None,
                Err(e) => return Err(e),
            };
            let nie = code.nie_distance_check()?;
            json!({
                "schema": SCHEMA_VERSION,
                "pir": code.algebra().pir().to_string(),
                "n": code.n(),
                "cardinality": code.cardinality().to_string(),
                "distance": code.min_distance()?,
                "enumerated_distance": enumerated,
                "nie_witness": nie.map(|(_, w)| w),
            })
        }
        Command::PirOptimal(args) => {
            let kind = match args.kind {
                OptimalKindArg::Rs => {
                    OptimalKind::ReedSolomon { q: args.q.expect("required by clap"), k: args.k, s: args.s }
                }
                OptimalKindArg::Galois => OptimalKind::GaloisMds {
                    p: args.p.expect("required by clap"),
                    t: args.t.expect("required by clap"),
                    m: args.m.expect("required by clap"),
                    n: args.n.expect("required by clap"),
                    k: args.k,
                    s: args.s,
                },
            };
            let (code, cert) = optimal_construction(kind)?;
            let mut v = to_value(cert);
            v["code"] = to_value(code.report());
            v
        }
        Command::Verify(args) => {
            let suite: Suite = args.suite.parse()?;
            let cfg = SweepConfig {
                max_ring_size: args.max_ring_size,
                max_algebra_size: args.max_algebra_size,
                seed: args.seed,
            };
            let report = verify::run(suite, &cfg)?;
            let ok = report.all_passed;
            let mut v = to_value(&report);
            v["table"] = Value::String(verify::render_table(&report));
            return Ok((v, ok));
        }
    };
    Ok((value, true))
}

fn to_value(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn ring_info(spec: &str) -> Result<Value> {
    let ring = make_ring(&ChainRingSpec::parse(spec)?)?;
    let residue = ring.residue_field();
    Ok(json!({
        "schema": SCHEMA_VERSION,
        "ring": ring.spec().to_string(),
        "p": ring.p(),
        "m": ring.m(),
        "q": ring.q(),
        "e": ring.e(),
        "size": ring.size(),
        "gamma": ring.gamma(),
        "zeta": ring.zeta(),
        "teichmuller": ring.teichmuller_set(),
        "residue_field": residue.spec().to_string(),
    }))
}

fn classify_one(alg: &Arc<Algebra>) -> Result<Value> {
    let nie = alg.is_nie();
    Ok(json!({
        "algebra": alg.to_string(),
        "nie": nie,
        "lambda_nilpotency": alg.lambda_nilpotency(),
        "x_nilpotency": if nie { Some(alg.x_nilpotency()?) } else { None },
        "classification": if nie { Some(alg.classify()?.to_string()) } else { None },
        "size": alg.size().to_string(),
    }))
}

fn classify(args: &ClassifyArgs) -> Result<Value> {
    let algebras: Vec<Arc<Algebra>> = match (&args.algebra, &args.ring) {
        (Some(spec), _) => vec![parse_algebra(spec)?],
        (None, Some(ring)) => {
            let ring = make_ring(&ChainRingSpec::parse(ring)?)?;
            let n = args.n.expect("required by clap");
            let lambdas = args.lambdas.as_deref().expect("required by clap");
            lambdas
                .split(',')
                .map(|l| {
                    let code = l.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad λ {l:?}")))?;
                    make_algebra(ring.clone(), n, ring.elem(code)?)
                })
                .collect::<Result<_>>()?
        }
        (None, None) => return Err(Error::BadParameters("give --algebra or --ring with --n and --lambdas".into())),
    };
    let reports = algebras.iter().map(classify_one).collect::<Result<Vec<_>>>()?;
    Ok(json!({"schema": SCHEMA_VERSION, "algebras": reports}))
}

fn parse_gens(alg: &Algebra, text: &str) -> Result<Vec<SPoly>> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty()).map(|s| alg.parse_element(s)).collect()
}

fn parse_code(args: &CodeArgs) -> Result<Code> {
    let alg = parse_algebra(&args.algebra)?;
    let gens = parse_gens(&alg, &args.gens)?;
    Code::from_generators(&alg, &gens)
}

fn parse_pir_code(args: &PirArgs) -> Result<PirCode> {
    let pir = parse_pir(&args.pir)?;
    let lambdas: Vec<Elem> = args
        .lambdas
        .split(',')
        .map(|l| l.trim().parse::<u32>().map(Elem).map_err(|_| Error::Parse(format!("bad λ {l:?}"))))
        .collect::<Result<_>>()?;
    let alg = PirAlgebra::new(&pir, args.n, &lambdas)?;
    let parts: Vec<&str> = if args.gens.trim().is_empty() { vec![""; pir.s()] } else { args.gens.split('|').collect() };
    if parts.len() != pir.s() {
        return Err(Error::ComponentMismatch(format!("{} generator groups for {} factors", parts.len(), pir.s())));
    }
    let comps = alg
        .components()
        .iter()
        .zip(parts)
        .map(|(a, text)| Code::from_generators(a, &parse_gens(a, text)?))
        .collect::<Result<Vec<_>>>()?;
    crt_code(&alg, comps)
}
