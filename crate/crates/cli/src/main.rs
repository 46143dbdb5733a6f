use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use srd_modular::ccalgebra::{
    build_cc, commutator_quotient_dim, corner_algebra, fp_algebra_from_sc, quiver, radical, radical_subspace,
    special_element_u, structure_constants, wedderburn, Arithmetic, Fiber,
};
use srd_modular::exactla::{PrimeModulus, Subspace};
use srd_modular::incidence::{
    block_graph, check_srd, gen_doily, gen_grid, parse_incidence, point_graph, srg_params_of,
    verify_matrix_identities, write_incidence, IncidenceStructure,
};
use srd_modular::pgtheory::{
    bad_primes, classify_prime, frame_as, frame_from_spectrum, generic_prank, pg_spectrum, symbolic_radical,
    PgParams,
};

#[derive(Parser)]
#[command(name = "srdmod", version, about = "Modular adjacency algebras of strongly regular designs")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Partial geometry arithmetic.
    Pg {
        #[command(subcommand)]
        command: PgCommand,
    },
    /// Write a built-in incidence structure.
    Gen {
        #[command(subcommand)]
        which: GenCommand,
    },
    /// Strongly regular design checks.
    Srd {
        #[command(subcommand)]
        command: SrdCommand,
    },
    /// Coherent configuration algebras.
    Cc {
        #[command(subcommand)]
        command: CcCommand,
    },
    /// p-rank of the point-graph adjacency matrix.
    Prank(PrankArgs),
}

#[derive(Subcommand)]
enum PgCommand {
    Info {
        #[command(flatten)]
        params: PgArgs,
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(Args)]
struct PgArgs {
    #[arg(long, allow_negative_numbers = true)]
    s: i64,
    #[arg(long, allow_negative_numbers = true)]
    t: i64,
    #[arg(long, allow_negative_numbers = true)]
    alpha: i64,
}

#[derive(Subcommand)]
enum GenCommand {
    Doily,
    Grid {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum SrdCommand {
    Check { path: PathBuf },
}

#[derive(Subcommand)]
enum CcCommand {
    Modular {
        path: PathBuf,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Args)]
struct PrankArgs {
    /// Incidence file; alternatively give --s, --t and --alpha.
    path: Option<PathBuf>,
    #[arg(long, requires_all = ["t", "alpha"], conflicts_with = "path")]
    s: Option<i64>,
    #[arg(long)]
    t: Option<i64>,
    #[arg(long)]
    alpha: Option<i64>,
    #[arg(long)]
    p: u64,
    #[arg(long, value_enum, default_value_t = PrankMode::Generic)]
    mode: PrankMode,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum PrankMode {
    Generic,
    Direct,
}

#[derive(Debug, Error)]
enum CliError {
    /// Bad flags, unreadable or malformed input, invalid parameters.
    #[error("{0}")]
    Input(String),
    /// Well-formed input that fails a mathematical requirement.
    #[error("{0}")]
    Rejected(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Rejected(_) => 3,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// What a command produced: a JSON report, or raw text (incidence files).
enum Output {
    Report(Value),
    Raw(String),
}

/// A report plus the exit code it should be delivered with.
struct Delivered {
    output: Output,
    code: u8,
}

fn ok(v: Value) -> Result<Delivered, CliError> {
    Ok(Delivered {
        output: Output::Report(v),
        code: 0,
    })
}

fn report(command: &str, digest_source: &[u8], result: Value) -> Value {
    json!({
        "command": command,
        "input_digest": hex_digest(digest_source),
        "version": env!("CARGO_PKG_VERSION"),
        "result": result,
    })
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::new(), |mut s, b| {
        write!(s, "{:02x}", b).unwrap();
        s
    })
}

fn prime(p: u64) -> Result<PrimeModulus, CliError> {
    PrimeModulus::new(p).map_err(input)
}

fn read_design(path: &Path) -> Result<(String, IncidenceStructure), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))?;
    let d = parse_incidence(&text).map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))?;
    Ok((text, d))
}

fn pg_info(args: &PgArgs, p: Option<u64>) -> Result<Delivered, CliError> {
    let canonical = match p {
        Some(p) => format!("pg info --s {} --t {} --alpha {} --p {}", args.s, args.t, args.alpha, p),
        None => format!("pg info --s {} --t {} --alpha {}", args.s, args.t, args.alpha),
    };
    let params = PgParams::new(args.s, args.t, args.alpha).map_err(input)?;
    let sp = pg_spectrum(&params).map_err(input)?;
    let frame = frame_as(&params).map_err(input)?;
    let spectral = frame_from_spectrum(sp.v, sp.k, sp.f, sp.g).map_err(input)?;
    let mut result = json!({
        "params": params,
        "spectrum": sp,
        "srg": sp.srg(),
        "frame": frame,
        "frame_from_spectrum": spectral.to_string(),
        "bad_primes": bad_primes(&params).map_err(input)?,
        "trace_identities": sp.trace_identities_hold(),
    });
    if let Some(p) = p {
        let f = prime(p)?;
        let prank = generic_prank(&params, f).map_err(input)?;
        result["prime"] = json!({
            "p": p,
            "case": classify_prime(&params, f).map_err(input)?,
            "radical": symbolic_radical(&params, f).map_err(input)?,
            "generic_prank": prank,
            "prank_exceptional": prank.is_exceptional(),
        });
    }
    ok(report(&canonical, canonical.as_bytes(), result))
}

fn gen(which: &GenCommand) -> Result<Delivered, CliError> {
    let d = match which {
        GenCommand::Doily => gen_doily(),
        GenCommand::Grid { n } => gen_grid(*n).map_err(input)?,
    };
    Ok(Delivered {
        output: Output::Raw(write_incidence(&d)),
        code: 0,
    })
}

fn srd_check(path: &Path) -> Result<Delivered, CliError> {
    let (text, d) = read_design(path)?;
    let command = "srd check";
    match check_srd(&d) {
        Ok(params) => {
            let pg = PgParams::from_srd(&params).ok();
            let result = json!({
                "n1": d.n1(),
                "n2": d.n2(),
                "params": params,
                "params_tuple": params.as_array(),
                "matrix_identities": verify_matrix_identities(&d, &params),
                "point_graph": srg_params_of(&point_graph(&d, &params)).ok(),
                "block_graph": srg_params_of(&block_graph(&d, &params)).ok(),
                "partial_geometry": pg,
            });
            ok(report(command, text.as_bytes(), result))
        }
        Err(v) => Ok(Delivered {
            output: Output::Report(report(command, text.as_bytes(), json!({ "violation": v }))),
            code: 3,
        }),
    }
}

fn cc_modular(path: &Path, p: u64) -> Result<Delivered, CliError> {
    let f = prime(p)?;
    let (text, d) = read_design(path)?;
    let params = check_srd(&d).map_err(|v| CliError::Rejected(v.to_string()))?;
    let cc = build_cc(&d, &params);
    let sc = structure_constants(&cc).map_err(|e| CliError::Rejected(e.to_string()))?;
    let alg = fp_algebra_from_sc(&sc, f).map_err(|e| CliError::Rejected(e.to_string()))?;
    let rad = radical(&alg);
    let w = wedderburn(&alg).map_err(|e| CliError::Rejected(e.to_string()))?;
    let q = quiver(&alg).map_err(|e| CliError::Rejected(e.to_string()))?;

    let mut corners = serde_json::Map::new();
    for (name, fiber, idx) in [("point", Fiber::Point, 0), ("block", Fiber::Block, 3)] {
        let corner = corner_algebra(&alg, fiber).map_err(|e| CliError::Rejected(e.to_string()))?;
        let corner_rad = radical_subspace(&corner);
        let e = alg.basis_vector(idx);
        let e_rad_e = alg.corner_space(&e, &e, &rad.subspace);
        corners.insert(
            name.to_string(),
            json!({
                "radical_dim": corner_rad.dim(),
                "identity_holds": corner.to_parent(&corner_rad).as_ref() == Some(&e_rad_e),
            }),
        );
    }

    let mut result = json!({
        "p": p,
        "params": params,
        "structure_constants": sc.to_dense(),
        "radical": rad,
        "wedderburn": w,
        "quiver": q,
        "commutator_quotient": {
            "rational": commutator_quotient_dim(&sc, Arithmetic::Rational),
            "mod_p": commutator_quotient_dim(&sc, Arithmetic::Modular(f)),
        },
        "corner_radicals": corners,
    });
    if p == 2 {
        let u = special_element_u(&sc, f);
        let fiber = Subspace::span(f, alg.dim(), (0..3).map(|i| alg.basis_vector(i)));
        result["special_element"] = json!({
            "coordinates": u,
            "nonzero": u.iter().any(|&c| c != 0),
            "square_zero": alg.mul(&u, &u).iter().all(|&c| c == 0),
            "outside_point_fiber": !fiber.contains(&u),
            "in_radical": rad.subspace.contains(&u),
        });
    }
    ok(report(&format!("cc modular --p {}", p), text.as_bytes(), result))
}

fn prank(args: &PrankArgs) -> Result<Delivered, CliError> {
    let f = prime(args.p)?;
    let mode_name = match args.mode {
        PrankMode::Generic => "generic",
        PrankMode::Direct => "direct",
    };
    let (design, digest_source, params) = match (&args.path, args.s, args.t, args.alpha) {
        (Some(path), _, _, _) => {
            let (text, d) = read_design(path)?;
            let srd = check_srd(&d).map_err(|v| CliError::Rejected(v.to_string()))?;
            let pg = PgParams::from_srd(&srd).ok();
            (Some((d, srd)), text.into_bytes(), pg)
        }
        (None, Some(s), Some(t), Some(alpha)) => {
            let pg = PgParams::new(s, t, alpha).map_err(input)?;
            let canonical = format!("--s {} --t {} --alpha {}", s, t, alpha);
            (None, canonical.into_bytes(), Some(pg))
        }
        _ => return Err(CliError::Input("give an incidence file or all of --s, --t, --alpha".into())),
    };
    let command = format!("prank --p {} --mode {}", args.p, mode_name);

    let result = match args.mode {
        PrankMode::Generic => {
            let params = params.ok_or_else(|| {
                CliError::Input("generic mode needs a partial geometry (any two points on at most one block)".into())
            })?;
            pg_spectrum(&params).map_err(input)?;
            let predicted = generic_prank(&params, f).map_err(input)?;
            let mut r = json!({
                "mode": args.mode,
                "p": args.p,
                "params": params,
                "prediction": predicted,
                "rank": predicted.predicted_rank(),
            });
            if predicted.is_exceptional() {
                r["note"] = json!("exceptional prime: the generic formula does not apply, use --mode direct");
            }
            r
        }
        PrankMode::Direct => {
            let (d, srd) = design.ok_or_else(|| CliError::Input("direct mode needs an incidence file".into()))?;
            let a = point_graph(&d, &srd).adjacency_matrix().to_gf(f);
            json!({
                "mode": args.mode,
                "p": args.p,
                "v": d.n1(),
                "rank": a.rank(),
            })
        }
    };
    ok(report(&command, &digest_source, result))
}

/// `key.path = value` lines with array indices as path components.
fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{}.{}", prefix, k) };
                flatten(&key, child, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, child) in items.iter().enumerate() {
                flatten(&format!("{}.{}", prefix, i), child, out);
            }
        }
        other => {
            writeln!(out, "{} = {}", prefix, other).unwrap();
        }
    }
}

fn render(output: &Output, format: Format) -> String {
    match (output, format) {
        (Output::Raw(text), _) => text.clone(),
        (Output::Report(v), Format::Json) => {
            let mut s = serde_json::to_string_pretty(v).expect("value serializes");
            s.push('\n');
            s
        }
        (Output::Report(v), Format::Text) => {
            let mut s = String::new();
            flatten("", v, &mut s);
            s
        }
    }
}

fn run(cli: &Cli) -> Result<Delivered, CliError> {
    match &cli.command {
        Command::Pg {
            command: PgCommand::Info { params, p },
        } => pg_info(params, *p),
        Command::Gen { which } => gen(which),
        Command::Srd {
            command: SrdCommand::Check { path },
        } => srd_check(path),
        Command::Cc {
            command: CcCommand::Modular { path, p },
        } => cc_modular(path, *p),
        Command::Prank(args) => prank(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let delivered = match run(&cli) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(e.exit_code());
        }
    };
    let text = render(&delivered.output, cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: {}: {}", path.display(), e);
                return ExitCode::from(2);
            }
        }
        None => print!("{}", text),
    }
    ExitCode::from(delivered.code)
}
