//! Command-line front end.
//!
//! Exit codes: 0 for success or a "yes" verdict, 1 for a "no" verdict
//! (including "non-realizable, certificate attached"), 2 for malformed or
//! rejected input, 3 for internal failures.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bfp::{certify, verify_certificate, CertifyError};
use crate::biquadratic::enumerate_system;
use crate::chirotope::{AxiomViolation, Chirotope, VectorConfiguration};
use crate::generate::{moment_curve, random_chirotope, unit_cube};
use crate::io::{
    self, certificate_to_json, load_certificate, load_chirotope, write_chirotope,
    write_configuration, IoError,
};
use crate::lp::{bfp_from_farkas, dump_lp, encode_system, solve_feasibility, SolveOutcome};
use crate::omp::{decide_euclidean, EuclideanDecision};
use crate::sign::ElementId;

#[derive(Parser)]
#[command(
    name = "omcert",
    version,
    about = "Pivot cycles, final polynomials, and realizability certificates for chirotopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Chirotope file: a `n r` header line, then the sign string over sorted
    /// r-subsets in lexicographic order
    chirotope: PathBuf,
    /// Reject inputs with more than this many elements
    #[arg(long)]
    max_n: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the chirotope axioms and report each violation
    Axioms(InputArgs),
    /// Report whether every bracket is nonzero
    Uniform(InputArgs),
    /// Print the biquadratic inequality/equation system
    System {
        #[command(flatten)]
        input: InputArgs,
        /// Write the system here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search every program for a monotone pivot cycle
    Euclidean {
        #[command(flatten)]
        input: InputArgs,
        /// Write the cycle witness here instead of stdout
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Turn a pivot cycle into a non-realizability certificate
    Certify {
        #[command(flatten)]
        input: InputArgs,
        /// Write the certificate here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Derive a certificate from exact linear-programming infeasibility
    LpCertify {
        #[command(flatten)]
        input: InputArgs,
        /// Write the certificate here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the encoded model in LP format
        #[arg(long)]
        emit_lp: Option<PathBuf>,
    },
    /// Check a certificate against a chirotope
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Certificate file produced by `certify` or `lp-certify`
        certificate: PathBuf,
    },
    /// Generate example chirotopes and configurations
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
}

#[derive(Args)]
struct GenOutput {
    /// Write the chirotope here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the generating configuration
    #[arg(long)]
    config_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Points on the moment curve: uniform, all-positive chirotope
    Moment {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        r: u32,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Homogenized vertices of the 3-cube: rank 4, 8 elements, planar faces
    Cube {
        #[command(flatten)]
        out: GenOutput,
    },
    /// Chirotope of a random full-rank rational configuration
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenOutput,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

fn input_io(path: &Path, e: IoError) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn load_input(input: &InputArgs) -> Result<Chirotope, Failure> {
    let chi = load_chirotope(&input.chirotope).map_err(|e| input_io(&input.chirotope, e))?;
    if let Some(limit) = input.max_n {
        if chi.n() > limit {
            return Err(Failure::Input(format!(
                "{}: n={} exceeds --max-n {limit}",
                input.chirotope.display(),
                chi.n()
            )));
        }
    }
    Ok(chi)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Failure::Internal(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn ids_text(v: &[ElementId]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn describe_violation(v: &AxiomViolation) -> String {
    match v {
        AxiomViolation::AllZero => "every bracket is zero".to_string(),
        AxiomViolation::ExchangeFailure { basis_a, basis_b, removed } => format!(
            "exchange fails between [{}] and [{}] removing {removed}",
            ids_text(basis_a),
            ids_text(basis_b)
        ),
        AxiomViolation::GpSignFailure { tau, lambda, products } => format!(
            "three-term signs unbalanced at tau=[{}] lambda=[{}]: ({}, {}, {})",
            ids_text(tau),
            ids_text(lambda),
            products.0.as_char(),
            products.1.as_char(),
            products.2.as_char()
        ),
    }
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn cmd_axioms(input: &InputArgs) -> Result<u8, Failure> {
    let chi = load_input(input)?;
    let report = chi.check_axioms();
    println!("alternating: {}", flag(report.alternating_ok));
    println!("nonzero: {}", flag(report.nonzero_ok));
    println!("exchange: {}", flag(report.exchange_ok));
    println!("three-term: {}", flag(report.gp_ok));
    for violation in &report.violations {
        println!("violation: {}", describe_violation(violation));
    }
    Ok(u8::from(!report.all_ok()))
}

fn cmd_uniform(input: &InputArgs) -> Result<u8, Failure> {
    let chi = load_input(input)?;
    let uniform = chi.is_uniform();
    println!("uniform: {}", if uniform { "yes" } else { "no" });
    Ok(u8::from(!uniform))
}

fn cmd_system(input: &InputArgs, output: Option<&Path>) -> Result<u8, Failure> {
    let chi = load_input(input)?;
    let system = enumerate_system(&chi).map_err(|e| {
        Failure::Input(format!("{}: {e}", input.chirotope.display()))
    })?;
    emit(output, &system.dump())?;
    Ok(0)
}

fn cmd_euclidean(input: &InputArgs, witness: Option<&Path>) -> Result<u8, Failure> {
    let chi = load_input(input)?;
    match decide_euclidean(&chi) {
        EuclideanDecision::Euclidean => {
            println!("euclidean: yes");
            Ok(0)
        }
        EuclideanDecision::NonEuclidean { f, g, cycle } => {
            println!("euclidean: no");
            emit(witness, &cycle.dump(f, g))?;
            Ok(1)
        }
    }
}

fn cmd_certify(input: &InputArgs, output: Option<&Path>) -> Result<u8, Failure> {
    let chi = load_input(input)?;
    match certify(&chi) {
        Ok(outcome) => {
            let types: Vec<String> =
                outcome.certification.types.iter().map(ToString::to_string).collect();
            eprintln!(
                "non-realizable: {}-pivot cycle at f={} g={} (types {}, group {})",
                outcome.cycle.len(),
                outcome.f,
                outcome.g,
                types.join(" "),
                outcome.certification.group.as_str()
            );
            emit(output, &certificate_to_json(&chi, &outcome.certification.certificate))?;
            Ok(1)
        }
        Err(CertifyError::NoCycle) => {
            println!("no monotone cycle in any program; no certificate produced");
            Ok(0)
        }
        Err(CertifyError::Unclassifiable { f, g }) => {
            eprintln!(
                "warning: cycles exist (first at f={f} g={g}) but none converts to a \
                 certificate; try `lp-certify`"
            );
            Ok(0)
        }
    }
}

fn cmd_lp_certify(
    input: &InputArgs,
    output: Option<&Path>,
    emit_lp: Option<&Path>,
) -> Result<u8, Failure> {
    let chi = load_input(input)?;
    let source = input.chirotope.display();
    let system =
        enumerate_system(&chi).map_err(|e| Failure::Input(format!("{source}: {e}")))?;
    let ls = encode_system(&chi, &system)
        .map_err(|e| Failure::Input(format!("{source}: {e}")))?;
    if let Some(path) = emit_lp {
        emit(Some(path), &dump_lp(&ls))?;
    }
    match solve_feasibility(&ls) {
        SolveOutcome::Feasible(_) => {
            println!("feasible: the system admits a positive solution; no certificate");
            Ok(0)
        }
        SolveOutcome::Infeasible(farkas) => {
            let certificate = bfp_from_farkas(&system, &farkas)
                .map_err(|e| Failure::Internal(format!("multiplier extraction failed: {e}")))?;
            let report = verify_certificate(&chi, &certificate)
                .map_err(|e| Failure::Internal(format!("re-enumeration failed: {e}")))?;
            if !report.valid {
                return Err(Failure::Internal(format!(
                    "derived certificate failed verification: {report}"
                )));
            }
            eprintln!(
                "infeasible: certificate with {} inequality uses",
                certificate.total_inequality_uses()
            );
            emit(output, &certificate_to_json(&chi, &certificate))?;
            Ok(1)
        }
    }
}

fn cmd_verify(input: &InputArgs, certificate: &Path) -> Result<u8, Failure> {
    let chi = load_input(input)?;
    let cert = load_certificate(&chi, certificate).map_err(|e| input_io(certificate, e))?;
    let report = verify_certificate(&chi, &cert).map_err(|e| {
        Failure::Input(format!("{}: {e}", input.chirotope.display()))
    })?;
    println!("{report}");
    Ok(u8::from(!report.valid))
}

fn gen_emit(config: &VectorConfiguration, out: &GenOutput) -> Result<u8, Failure> {
    let chi = Chirotope::from_configuration(config)
        .map_err(|e| Failure::Input(format!("configuration rejected: {e}")))?;
    emit(out.output.as_deref(), &write_chirotope(&chi))?;
    if let Some(path) = &out.config_out {
        emit(Some(path), &write_configuration(config))?;
    }
    Ok(0)
}

fn check_gen_shape(n: u32, r: u32) -> Result<(), Failure> {
    if r == 0 || r > n || n > 20 {
        return Err(Failure::Input(format!(
            "unsupported shape n={n} r={r}: need 1 <= r <= n <= 20"
        )));
    }
    Ok(())
}

fn cmd_gen(what: &GenCommand) -> Result<u8, Failure> {
    match what {
        GenCommand::Moment { n, r, out } => {
            check_gen_shape(*n, *r)?;
            gen_emit(&moment_curve(*n, *r), out)
        }
        GenCommand::Cube { out } => gen_emit(&unit_cube(), out),
        GenCommand::Random { n, r, seed, out } => {
            check_gen_shape(*n, *r)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let (chi, config) = random_chirotope(&mut rng, *n, *r);
            emit(out.output.as_deref(), &io::write_chirotope(&chi))?;
            if let Some(path) = &out.config_out {
                emit(Some(path), &write_configuration(&config))?;
            }
            Ok(0)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Axioms(input) => cmd_axioms(input),
        Command::Uniform(input) => cmd_uniform(input),
        Command::System { input, output } => cmd_system(input, output.as_deref()),
        Command::Euclidean { input, witness } => cmd_euclidean(input, witness.as_deref()),
        Command::Certify { input, output } => cmd_certify(input, output.as_deref()),
        Command::LpCertify { input, output, emit_lp } => {
            cmd_lp_certify(input, output.as_deref(), emit_lp.as_deref())
        }
        Command::Verify { input, certificate } => cmd_verify(input, certificate),
        Command::Gen { what } => cmd_gen(what),
    }
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(message)) => {
            eprintln!("internal error: {message}");
            ExitCode::from(3)
        }
    }
}
