use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use freealg::{parse_poly, parse_word, poly_to_json, tensor2_to_json, Letter, Poly, Word};
use postlie::Triangle;
use verifier::{verify_axioms, verify_duality, verify_hopf, Config, VerificationReport};

const DEFAULT_WEIGHT_BOUND: u64 = 24;

/// Exact symbolic engine for triangle structures on the free Lie algebra.
#[derive(Parser)]
#[command(name = "postlie", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single algebraic operation
    Compute {
        #[command(subcommand)]
        op: ComputeOp,
    },
    /// Run a verification suite and print its reports
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureName {
    Ihara,
    Ari,
    Uri,
}

impl StructureName {
    fn as_str(self) -> &'static str {
        match self {
            StructureName::Ihara => "ihara",
            StructureName::Ari => "ari",
            StructureName::Uri => "uri",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BimouldMap {
    /// monomial map on the composite alphabet
    C,
    /// composition-series map
    D,
}

#[derive(Args)]
struct StructArgs {
    /// Triangle structure acting in the operation
    #[arg(long = "struct", value_enum, default_value = "ari")]
    structure: StructureName,
    /// Letters of the distinguished index set, comma separated
    #[arg(long, default_value = "0")]
    v0: String,
}

#[derive(Args)]
struct BinaryArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    #[command(flatten)]
    structure: StructArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Reject inputs above this weight (default from POSTLIE_MAX_WEIGHT)
    #[arg(long)]
    max_weight: Option<u64>,
}

#[derive(Args)]
struct UnaryArgs {
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    max_weight: Option<u64>,
}

#[derive(Subcommand)]
enum ComputeOp {
    /// Concatenation product of two polynomials
    Conc(BinaryArgs),
    /// Shuffle product of two polynomials
    Shuffle(BinaryArgs),
    /// Unshuffle coproduct of a polynomial
    Coprod(UnaryArgs),
    /// Shuffle Hopf antipode of a polynomial
    Antipode(UnaryArgs),
    /// Triangle action left <| right
    Tr(BinaryArgs),
    /// Induced associative product of two polynomials
    Glp(BinaryArgs),
    /// Coproduct dual to the induced product, on one word
    Dualcoprod {
        #[arg(long)]
        word: String,
        #[command(flatten)]
        structure: StructArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        max_weight: Option<u64>,
    },
    /// Image of a polynomial under a bimould map
    Bimould {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "c")]
        map: BimouldMap,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        max_weight: Option<u64>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// axioms, hopf, duality, threshold, depth-graded, embeddings,
    /// bimould-iso, golden, oracles, combinatorial, filtration, or all
    suite: String,
    /// Restrict a structure-indexed suite to one structure
    #[arg(long = "struct", value_enum)]
    structure: Option<StructureName>,
    #[arg(long)]
    max_weight: Option<u64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum CliError {
    Parse(String),
    OverWeight(u64, u64),
}

impl CliError {
    fn exit(&self) -> ExitCode {
        match self {
            CliError::Parse(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::OverWeight(w, bound) => {
                eprintln!("error: input weight {w} exceeds the bound {bound}");
                ExitCode::from(3)
            }
        }
    }
}

fn weight_bound(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("POSTLIE_MAX_WEIGHT")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_WEIGHT_BOUND)
}

fn poly_weight(p: &Poly) -> u64 {
    p.terms().map(|(w, _)| w.weight()).max().unwrap_or(0)
}

fn check_weight(w: u64, bound: u64) -> Result<(), CliError> {
    if w > bound {
        Err(CliError::OverWeight(w, bound))
    } else {
        Ok(())
    }
}

fn parse(input: &str) -> Result<Poly, CliError> {
    parse_poly(input).map_err(|e| CliError::Parse(e.to_string()))
}

fn parse_v0(s: &str) -> Result<BTreeSet<Letter>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Letter>()
                .map_err(|_| CliError::Parse(format!("bad letter index in --v0: {t:?}")))
        })
        .collect()
}

fn triangle(args: &StructArgs) -> Result<Triangle, CliError> {
    Ok(match args.structure {
        StructureName::Ihara => Triangle::ihara(parse_v0(&args.v0)?),
        StructureName::Ari => Triangle::ari(),
        StructureName::Uri => Triangle::uri(),
    })
}

fn print_poly(p: &Poly, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", poly_to_json(p)),
    }
}

fn binary_inputs(args: &BinaryArgs) -> Result<(Poly, Poly), CliError> {
    let left = parse(&args.left)?;
    let right = parse(&args.right)?;
    let bound = weight_bound(args.max_weight);
    check_weight(poly_weight(&left) + poly_weight(&right), bound)?;
    Ok((left, right))
}

fn unary_input(args: &UnaryArgs) -> Result<Poly, CliError> {
    let p = parse(&args.input)?;
    check_weight(poly_weight(&p), weight_bound(args.max_weight))?;
    Ok(p)
}

fn run_compute(op: &ComputeOp) -> Result<(), CliError> {
    match op {
        ComputeOp::Conc(args) => {
            let (l, r) = binary_inputs(args)?;
            print_poly(&l.conc(&r), args.format);
        }
        ComputeOp::Shuffle(args) => {
            let (l, r) = binary_inputs(args)?;
            print_poly(&l.shuffle(&r), args.format);
        }
        ComputeOp::Coprod(args) => {
            let p = unary_input(args)?;
            let t = p.coproduct_sh();
            match args.format {
                Format::Text => println!("{t}"),
                Format::Json => println!("{}", tensor2_to_json(&t)),
            }
        }
        ComputeOp::Antipode(args) => {
            let p = unary_input(args)?;
            print_poly(&p.antipode(), args.format);
        }
        ComputeOp::Tr(args) => {
            let (l, r) = binary_inputs(args)?;
            let tri = triangle(&args.structure)?;
            print_poly(&tri.tr(&l, &r), args.format);
        }
        ComputeOp::Glp(args) => {
            let (l, r) = binary_inputs(args)?;
            let tri = triangle(&args.structure)?;
            print_poly(&glhopf::glp(&tri, &l, &r), args.format);
        }
        ComputeOp::Dualcoprod {
            word,
            structure,
            format,
            max_weight,
        } => {
            let w: Word = parse_word(word).map_err(|e| CliError::Parse(e.to_string()))?;
            check_weight(w.weight(), weight_bound(*max_weight))?;
            let tri = triangle(structure)?;
            let t = glhopf::coprod_dual(&tri, &w);
            match format {
                Format::Text => println!("{t}"),
                Format::Json => println!("{}", tensor2_to_json(&t)),
            }
        }
        ComputeOp::Bimould {
            input,
            map,
            format,
            max_weight,
        } => {
            let p = parse(input)?;
            check_weight(poly_weight(&p), weight_bound(*max_weight))?;
            let c = bimould::v_to_c(&p).map_err(CliError::Parse)?;
            let b = match map {
                BimouldMap::C => bimould::rho_cbi(&c),
                BimouldMap::D => bimould::rho_dbi(&c),
            };
            match format {
                Format::Text => println!("{b}"),
                Format::Json => println!("{}", b.to_json()),
            }
        }
    }
    Ok(())
}

fn structure_suite(suite: &str, name: &str, weight: u64) -> VerificationReport {
    match suite {
        "axioms" => verify_axioms(name, weight),
        "hopf" => verify_hopf(name, weight),
        _ => verify_duality(name, weight),
    }
}

fn run_verify(args: &VerifyArgs) -> Result<Vec<VerificationReport>, CliError> {
    let cfg = Config {
        max_weight: args.max_weight,
        seed: args.seed,
    };
    let bound = weight_bound(None);
    if let Some(w) = args.max_weight {
        if w > bound {
            return Err(CliError::OverWeight(w, bound));
        }
    }
    match (&args.structure, args.suite.as_str()) {
        (Some(s), suite @ ("axioms" | "hopf" | "duality")) => {
            let default = if suite != "axioms" && s.as_str() == "uri" {
                6
            } else {
                7
            };
            Ok(vec![structure_suite(
                suite,
                s.as_str(),
                args.max_weight.unwrap_or(default),
            )])
        }
        (Some(_), other) => Err(CliError::Parse(format!(
            "--struct does not apply to suite {other}"
        ))),
        (None, suite) => verifier::run_suite(suite, cfg).map_err(CliError::Parse),
    }
}

fn verify_exit(reports: &[VerificationReport]) -> ExitCode {
    let proved_failure = reports
        .iter()
        .any(|r| !r.is_conjecture() && !r.failures.is_empty());
    if proved_failure {
        return ExitCode::from(1);
    }
    if reports.iter().any(|r| r.is_conjecture()) {
        return ExitCode::from(4);
    }
    ExitCode::SUCCESS
}

fn print_reports(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Json => {
            let all: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            println!("{}", serde_json::Value::Array(all));
        }
        Format::Text => {
            for r in reports {
                println!(
                    "{} {}: {} ({} checks, {} failures, {} ms, seed {})",
                    r.suite,
                    r.params,
                    r.status,
                    r.count,
                    r.failures.len(),
                    r.elapsed_ms,
                    r.seed
                );
                for f in &r.failures {
                    println!("  {} expected {} got {}", f.params, f.expected, f.actual);
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute { op } => match run_compute(&op) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => e.exit(),
        },
        Command::Verify(args) => {
            if let Some(jobs) = args.jobs {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs.max(1))
                    .build_global();
            }
            match run_verify(&args) {
                Ok(reports) => {
                    print_reports(&reports, args.format);
                    verify_exit(&reports)
                }
                Err(e) => e.exit(),
            }
        }
    }
}
