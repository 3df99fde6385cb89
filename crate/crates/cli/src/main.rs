//! Command-line front end for the exact representation/Hodge engine:
//! descriptor ingestion, command dispatch, machine-readable reports.

mod descriptor;
mod report;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lefrep_core::characters::{irr_character, shape_constituent, shape_dim};
use lefrep_core::hodgemotive::{
    beauville_weight, binomial, kleiman_projectors, molien_holomorphic_invariants,
    poly_to_string, HodgeError,
};
use lefrep_core::lefschetz::{
    coniveau_report, validate, GhcCertificate, LefschetzError, Violation,
};
use lefrep_core::partitions::Partition;
use lefrep_core::weylconstruct::{
    hodge_profile, s_lambda_space, FormKind, HodgeProfile, StandardRep, WeylError,
};

use descriptor::DescriptorFile;
use report::{
    emit, emit_tsv, fail, ReportEnvelope, Status, EXIT_OK, EXIT_REFUSED, EXIT_RESOURCE,
    EXIT_USAGE, EXIT_VIOLATION, ENGINE_VERSION,
};

#[derive(Parser)]
#[command(
    name = "lefrep",
    version,
    about = "Exact computations for classical-group tensor invariants and \
             Hodge-theoretic bookkeeping of abelian varieties"
)]
struct Cli {
    /// Worker threads for engine-internal parallelism (weyl dual-route
    /// evaluation); 1 disables it.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and Hodge profile of a Weyl-construction constituent, with
    /// the independent character oracle cross-check.
    Weyl(WeylArgs),
    /// Coniveau certificate for H^k(A^m) from a descriptor file.
    Coniveau(ConiveauArgs),
    /// Vanishing of the holomorphic row of a super power of h^{2g-i}(A).
    Symvanish(SymvanishArgs),
    /// Invariant holomorphic-form counts on generalized Kummer quotients.
    Molien(MolienArgs),
    /// Graded projector family on the exterior-algebra model of H^*(A).
    Projectors(ProjectorsArgs),
    /// Multiplication-by-n eigenvalue exponents of a Chow piece.
    Beauville(BeauvilleArgs),
    /// Classification check of a descriptor file.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct WeylArgs {
    /// Group kind: sp or o.
    #[arg(long)]
    kind: String,
    /// Rank n of the group Sp(2n) or O(2n).
    #[arg(long)]
    n: usize,
    /// Partition as comma-separated parts, e.g. 2,1; empty for the trivial
    /// shape.
    #[arg(long, default_value = "")]
    lambda: String,
    /// Emit the Hodge profile as TSV instead of JSON.
    #[arg(long)]
    tsv: bool,
}

#[derive(Args)]
struct ConiveauArgs {
    /// Path to the descriptor JSON file.
    #[arg(long)]
    descriptor: String,
    /// Power of the abelian variety.
    #[arg(long)]
    m: u32,
    /// Cohomological degree.
    #[arg(long)]
    k: u32,
    /// Emit the coniveau table as TSV instead of JSON.
    #[arg(long)]
    tsv: bool,
}

#[derive(Args)]
struct SymvanishArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    i: u32,
    /// Power to test; defaults to C(g,i) + 1.
    #[arg(long = "N")]
    n: Option<usize>,
}

#[derive(Args)]
struct MolienArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    n: u32,
    /// Emit coefficients as TSV instead of JSON.
    #[arg(long)]
    tsv: bool,
}

#[derive(Args)]
struct ProjectorsArgs {
    #[arg(long)]
    g: u32,
    /// Emit the rank table as TSV instead of JSON.
    #[arg(long)]
    tsv: bool,
}

#[derive(Args)]
struct BeauvilleArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    i: u32,
    #[arg(long, allow_hyphen_values = true)]
    j: i64,
}

#[derive(Args)]
struct ValidateArgs {
    /// Path to the descriptor JSON file.
    #[arg(long)]
    descriptor: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Weyl(args) => cmd_weyl(args, cli.threads),
        Command::Coniveau(args) => cmd_coniveau(args),
        Command::Symvanish(args) => cmd_symvanish(args),
        Command::Molien(args) => cmd_molien(args),
        Command::Projectors(args) => cmd_projectors(args),
        Command::Beauville(args) => cmd_beauville(args),
        Command::Validate(args) => cmd_validate(args),
    };
    ExitCode::from(code as u8)
}

// ---------------------------------------------------------------------------
// weyl
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct WeylInputs {
    kind: String,
    n: usize,
    lambda: Vec<u32>,
}

#[derive(Serialize)]
struct WeylResult {
    dim: u64,
    hodge_profile: BTreeMap<i64, u64>,
    oracle_dim: u64,
    oracle_agree: bool,
    vanishes: bool,
}

fn parse_kind(s: &str) -> Option<FormKind> {
    match s {
        "sp" => Some(FormKind::Symplectic),
        "o" => Some(FormKind::Orthogonal),
        _ => None,
    }
}

fn parse_partition(s: &str) -> Option<Partition> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Some(Partition::empty());
    }
    let parts: Option<Vec<u32>> = trimmed
        .split(',')
        .map(|p| p.trim().parse::<u32>().ok())
        .collect();
    Partition::new(parts?).ok()
}

fn profile_map(profile: &HodgeProfile) -> BTreeMap<i64, u64> {
    profile.counts().iter().map(|(k, v)| (*k, *v)).collect()
}

fn cmd_weyl(args: WeylArgs, threads: usize) -> i32 {
    let Some(kind) = parse_kind(&args.kind) else {
        return fail(&format!("unknown kind {:?}, expected sp|o", args.kind), EXIT_USAGE);
    };
    let Some(shape) = parse_partition(&args.lambda) else {
        return fail(&format!("invalid partition {:?}", args.lambda), EXIT_USAGE);
    };
    let rep = match StandardRep::new(kind, args.n) {
        Ok(rep) => rep,
        Err(e @ (WeylError::OrthogonalRankTooSmall | WeylError::ZeroRank)) => {
            return fail(&e.to_string(), EXIT_USAGE);
        }
        Err(e) => return fail(&e.to_string(), EXIT_RESOURCE),
    };

    // Tensor route and character route are independent; with threads > 1
    // they run concurrently and are joined deterministically.
    let tensor_route = || -> Result<(u64, HodgeProfile), WeylError> {
        let space = s_lambda_space(&rep, &shape)?;
        let profile = hodge_profile(&rep, &space, shape.size() as usize);
        Ok((space.dim() as u64, profile))
    };
    let oracle_route = || -> (u64, HodgeProfile) {
        let dim = shape_dim(kind, args.n, &shape);
        let profile = match shape_constituent(kind, args.n, &shape) {
            Some(w) => irr_character(kind, args.n, &w).hodge_specialize(),
            None => HodgeProfile::new(),
        };
        (dim, profile)
    };
    let (tensor, oracle) = if threads > 1 {
        std::thread::scope(|scope| {
            let oracle_handle = scope.spawn(oracle_route);
            let tensor = tensor_route();
            (tensor, oracle_handle.join().expect("oracle thread"))
        })
    } else {
        (tensor_route(), oracle_route())
    };
    let (dim, profile) = match tensor {
        Ok(v) => v,
        Err(WeylError::ResourceLimit { dim }) => {
            return fail(
                &format!("tensor space dimension {dim} exceeds the guard"),
                EXIT_RESOURCE,
            );
        }
        Err(e) => return fail(&e.to_string(), EXIT_USAGE),
    };
    let (oracle_dim, oracle_profile) = oracle;
    let envelope = ReportEnvelope {
        command: "weyl",
        inputs: WeylInputs {
            kind: args.kind,
            n: args.n,
            lambda: shape.parts().to_vec(),
        },
        status: Status::Ok,
        result: WeylResult {
            dim,
            hodge_profile: profile_map(&profile),
            oracle_dim,
            oracle_agree: dim == oracle_dim && profile == oracle_profile,
            vanishes: dim == 0,
        },
        engine_version: ENGINE_VERSION,
    };
    if args.tsv {
        let rows: Vec<Vec<String>> = envelope
            .result
            .hodge_profile
            .iter()
            .map(|(m, d)| vec![m.to_string(), d.to_string()])
            .collect();
        emit_tsv(&["p_minus_q", "dim"], &rows, EXIT_OK)
    } else {
        emit(&envelope, EXIT_OK)
    }
}

// ---------------------------------------------------------------------------
// coniveau and validate
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct DescriptorInputs {
    descriptor: String,
    m: u32,
    k: u32,
}

#[derive(Serialize)]
struct LabelJson {
    coords: Vec<u64>,
    paired: bool,
}

#[derive(Serialize)]
struct ConstituentJson {
    labels: Vec<LabelJson>,
    multiplicity: u64,
    dim: u64,
    level: u64,
    coniveau: u64,
}

#[derive(Serialize)]
struct CertificateJson {
    total_dim: u64,
    constituents: Vec<ConstituentJson>,
    table: BTreeMap<u32, u64>,
}

#[derive(Serialize)]
struct ViolationJson {
    rule: &'static str,
    message: String,
}

#[derive(Serialize)]
struct RefusalJson {
    rule: &'static str,
    message: String,
}

fn violations_json(violations: &[Violation]) -> Vec<ViolationJson> {
    violations
        .iter()
        .map(|v| ViolationJson {
            rule: v.rule,
            message: v.message.clone(),
        })
        .collect()
}

fn certificate_json(cert: &GhcCertificate) -> CertificateJson {
    CertificateJson {
        total_dim: cert.total_dim,
        constituents: cert
            .constituents
            .iter()
            .map(|c| ConstituentJson {
                labels: c
                    .labels
                    .iter()
                    .map(|l| LabelJson {
                        coords: l.coords().to_vec(),
                        paired: l.paired(),
                    })
                    .collect(),
                multiplicity: c.multiplicity,
                dim: c.dim,
                level: c.level,
                coniveau: c.coniveau,
            })
            .collect(),
        table: cert.table.entries().map(|(n, d)| (*n, *d)).collect(),
    }
}

fn load_descriptor(path: &str) -> Result<lefrep_core::lefschetz::AbelianDescriptor, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?;
    DescriptorFile::parse(&text)?.to_descriptor()
}

fn cmd_coniveau(args: ConiveauArgs) -> i32 {
    let inputs = DescriptorInputs {
        descriptor: args.descriptor.clone(),
        m: args.m,
        k: args.k,
    };
    let desc = match load_descriptor(&args.descriptor) {
        Ok(d) => d,
        Err(e) => return fail(&e, EXIT_USAGE),
    };
    match coniveau_report(&desc, args.m, args.k) {
        Ok(cert) => {
            if args.tsv {
                let rows: Vec<Vec<String>> = cert
                    .table
                    .entries()
                    .map(|(n, d)| vec![n.to_string(), d.to_string()])
                    .collect();
                emit_tsv(&["coniveau", "dim"], &rows, EXIT_OK)
            } else {
                let envelope = ReportEnvelope {
                    command: "coniveau",
                    inputs,
                    status: Status::Ok,
                    result: certificate_json(&cert),
                    engine_version: ENGINE_VERSION,
                };
                emit(&envelope, EXIT_OK)
            }
        }
        Err(LefschetzError::Invalid(violations)) => {
            let envelope = ReportEnvelope {
                command: "coniveau",
                inputs,
                status: Status::Violation,
                result: violations_json(&violations),
                engine_version: ENGINE_VERSION,
            };
            emit(&envelope, EXIT_VIOLATION)
        }
        Err(e @ LefschetzError::TypeIvUnsupported) => {
            let envelope = ReportEnvelope {
                command: "coniveau",
                inputs,
                status: Status::Refused,
                result: RefusalJson {
                    rule: "albert.type_iv.coniveau_unsupported",
                    message: e.to_string(),
                },
                engine_version: ENGINE_VERSION,
            };
            emit(&envelope, EXIT_REFUSED)
        }
        Err(e @ LefschetzError::ResourceLimit) => {
            let envelope = ReportEnvelope {
                command: "coniveau",
                inputs,
                status: Status::Refused,
                result: RefusalJson {
                    rule: "engine.resource_guard",
                    message: e.to_string(),
                },
                engine_version: ENGINE_VERSION,
            };
            emit(&envelope, EXIT_RESOURCE)
        }
    }
}

#[derive(Serialize)]
struct ValidateInputs {
    descriptor: String,
}

#[derive(Serialize)]
struct ValidateResult {
    valid: bool,
    violations: Vec<ViolationJson>,
}

fn cmd_validate(args: ValidateArgs) -> i32 {
    let inputs = ValidateInputs {
        descriptor: args.descriptor.clone(),
    };
    let desc = match load_descriptor(&args.descriptor) {
        Ok(d) => d,
        Err(e) => return fail(&e, EXIT_USAGE),
    };
    let violations = validate(&desc);
    let valid = violations.is_empty();
    let envelope = ReportEnvelope {
        command: "validate",
        inputs,
        status: if valid { Status::Ok } else { Status::Violation },
        result: ValidateResult {
            valid,
            violations: violations_json(&violations),
        },
        engine_version: ENGINE_VERSION,
    };
    emit(&envelope, if valid { EXIT_OK } else { EXIT_VIOLATION })
}

// ---------------------------------------------------------------------------
// symvanish, molien, projectors, beauville
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SymvanishInputs {
    g: u32,
    i: u32,
    #[serde(rename = "N")]
    n: usize,
}

#[derive(Serialize)]
struct SymvanishResult {
    vanishes: bool,
    parity_rule: &'static str,
}

fn cmd_symvanish(args: SymvanishArgs) -> i32 {
    if args.i > args.g {
        return fail("i must satisfy 0 <= i <= g", EXIT_USAGE);
    }
    let n = args
        .n
        .unwrap_or(binomial(args.g as u64, args.i as u64) as usize + 1);
    if n == 0 {
        return fail("N must be at least 1", EXIT_USAGE);
    }
    let vanishes = lefrep_core::hodgemotive::sym_vanishing_check(args.g, args.i, n);
    let envelope = ReportEnvelope {
        command: "symvanish",
        inputs: SymvanishInputs {
            g: args.g,
            i: args.i,
            n,
        },
        status: Status::Ok,
        result: SymvanishResult {
            vanishes,
            parity_rule: if args.i % 2 == 1 {
                "symmetric power (odd weight)"
            } else {
                "exterior power (even weight)"
            },
        },
        engine_version: ENGINE_VERSION,
    };
    emit(&envelope, EXIT_OK)
}

#[derive(Serialize)]
struct MolienInputs {
    g: u32,
    n: u32,
}

#[derive(Serialize)]
struct MolienResult {
    coefficients: Vec<u64>,
    polynomial: String,
    odd_coefficients_vanish: bool,
}

fn cmd_molien(args: MolienArgs) -> i32 {
    match molien_holomorphic_invariants(args.g, args.n) {
        Ok(coefficients) => {
            let odd_zero = coefficients
                .iter()
                .enumerate()
                .all(|(k, &c)| k % 2 == 0 || c == 0);
            if args.tsv {
                let rows: Vec<Vec<String>> = coefficients
                    .iter()
                    .enumerate()
                    .map(|(k, c)| vec![k.to_string(), c.to_string()])
                    .collect();
                return emit_tsv(&["degree", "coefficient"], &rows, EXIT_OK);
            }
            let envelope = ReportEnvelope {
                command: "molien",
                inputs: MolienInputs {
                    g: args.g,
                    n: args.n,
                },
                status: Status::Ok,
                result: MolienResult {
                    polynomial: poly_to_string(&coefficients),
                    coefficients,
                    odd_coefficients_vanish: odd_zero,
                },
                engine_version: ENGINE_VERSION,
            };
            emit(&envelope, EXIT_OK)
        }
        Err(HodgeError::ResourceLimit) => {
            fail("factorial guard exceeded (or g, n not positive)", EXIT_RESOURCE)
        }
        Err(e) => fail(&e.to_string(), EXIT_USAGE),
    }
}

#[derive(Serialize)]
struct ProjectorsInputs {
    g: u32,
}

#[derive(Serialize)]
struct RankJson {
    k: u32,
    r: u32,
    rank: u64,
}

#[derive(Serialize)]
struct ProjectorsResult {
    idempotent_ok: bool,
    orthogonal_ok: bool,
    sum_is_identity: bool,
    hard_lefschetz_ok: bool,
    all_ok: bool,
    ranks: Vec<RankJson>,
}

fn cmd_projectors(args: ProjectorsArgs) -> i32 {
    match kleiman_projectors(args.g) {
        Ok(family) => {
            let verdict = family.verify();
            let ranks: Vec<RankJson> = verdict
                .ranks
                .iter()
                .map(|((k, r), rank)| RankJson {
                    k: *k,
                    r: *r,
                    rank: *rank,
                })
                .collect();
            if args.tsv {
                let rows: Vec<Vec<String>> = ranks
                    .iter()
                    .map(|r| vec![r.k.to_string(), r.r.to_string(), r.rank.to_string()])
                    .collect();
                return emit_tsv(&["k", "r", "rank"], &rows, EXIT_OK);
            }
            let all_ok = verdict.idempotent_ok
                && verdict.orthogonal_ok
                && verdict.sum_is_identity
                && verdict.hard_lefschetz_ok;
            let envelope = ReportEnvelope {
                command: "projectors",
                inputs: ProjectorsInputs { g: args.g },
                status: Status::Ok,
                result: ProjectorsResult {
                    idempotent_ok: verdict.idempotent_ok,
                    orthogonal_ok: verdict.orthogonal_ok,
                    sum_is_identity: verdict.sum_is_identity,
                    hard_lefschetz_ok: verdict.hard_lefschetz_ok,
                    all_ok,
                    ranks,
                },
                engine_version: ENGINE_VERSION,
            };
            emit(&envelope, EXIT_OK)
        }
        Err(HodgeError::ResourceLimit) => fail("projector model limited to g <= 4", EXIT_RESOURCE),
        Err(e) => fail(&e.to_string(), EXIT_USAGE),
    }
}

#[derive(Serialize)]
struct BeauvilleInputs {
    g: u32,
    i: u32,
    j: i64,
}

#[derive(Serialize)]
struct BeauvilleResult {
    motive_degree: i64,
    pullback_exponent: i64,
    pushforward_exponent_zero_cycles: i64,
}

fn cmd_beauville(args: BeauvilleArgs) -> i32 {
    let w = beauville_weight(args.i, args.j, args.g);
    let envelope = ReportEnvelope {
        command: "beauville",
        inputs: BeauvilleInputs {
            g: args.g,
            i: args.i,
            j: args.j,
        },
        status: Status::Ok,
        result: BeauvilleResult {
            motive_degree: w.motive_degree,
            pullback_exponent: w.pullback_exponent,
            pushforward_exponent_zero_cycles: w.pushforward_exponent_zero_cycles,
        },
        engine_version: ENGINE_VERSION,
    };
    emit(&envelope, EXIT_OK)
}
