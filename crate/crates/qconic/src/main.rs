//! `qconic`: exact classification of conics in quantum projective planes.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qconic::{
    cmd_c_algebra, cmd_center, cmd_classify, cmd_dual, cmd_geometry, entry_by_name, report_to_json,
    report_to_text, spec_from_json, spec_from_parts, CliError,
};
use qconic_core::classify::{verify_tables, ConicSpec};

#[derive(Parser)]
#[command(
    name = "qconic",
    about = "Exact-arithmetic classification of conics in quantum projective planes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// Path to a JSON spec file (`-` reads standard input)
    #[arg(long)]
    spec: Option<String>,
    /// Family name: commutative | tl | skew | sklyanin
    #[arg(long)]
    family: Option<String>,
    /// Named parameter, e.g. `--param alpha=1` (repeatable)
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Coefficients of f as three comma-separated literals, e.g. `--f 1,1,-4`
    #[arg(long, value_name = "A,B,C")]
    f: Option<String>,
    /// Optional explicit linear form with g^2 proportional to f
    #[arg(long, value_name = "A,B,C")]
    g: Option<String>,
    /// Emit machine-readable JSON (the default; accepted for symmetry)
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a conic and print its invariant record as JSON
    Classify(SpecArgs),
    /// Run the verification battery over the built-in classification tables
    VerifyTables {
        /// Emit the machine-readable report
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit the human-readable report (default)
        #[arg(long)]
        text: bool,
        /// Corrupt the built-in data first (negative-control hook)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print a degree-1 or degree-2 center basis of the ambient algebra
    Center {
        #[command(flatten)]
        spec: SpecArgs,
        /// Center degree (1 or 2)
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Print the quadratic dual relations and the dual conic presentation
    Dual(SpecArgs),
    /// Print the invariant algebra with structure constants and minimal polynomial
    CAlgebra(SpecArgs),
    /// Intersect a line with the point variety of a catalog entry
    Geometry {
        /// Catalog row name: P, S1, S3, S', T, T', NC, CC, TL, WL, EC
        #[arg(long)]
        entry: String,
        /// Named parameter, e.g. `--param lambda=2` (repeatable)
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        /// Linear form, e.g. `x + y`
        #[arg(long)]
        line: String,
    },
}

fn split_params(raw: &[String]) -> Result<Vec<(String, String)>, CliError> {
    raw.iter()
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| CliError::parse(format!("parameter `{p}` is not NAME=VALUE")))
        })
        .collect()
}

fn split_triple(raw: &str) -> Result<[String; 3], CliError> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::parse(format!(
            "`{raw}` must be three comma-separated literals"
        )));
    }
    Ok([
        parts[0].trim().to_string(),
        parts[1].trim().to_string(),
        parts[2].trim().to_string(),
    ])
}

fn build_spec(args: &SpecArgs) -> Result<ConicSpec, CliError> {
    if let Some(path) = &args.spec {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::parse(format!("reading standard input: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::parse(format!("reading `{path}`: {e}")))?
        };
        return spec_from_json(&text);
    }
    let family = args
        .family
        .as_deref()
        .ok_or_else(|| CliError::validation("missing --family (or --spec)"))?;
    let f = args
        .f
        .as_deref()
        .ok_or_else(|| CliError::validation("missing --f"))?;
    let f = split_triple(f)?;
    let g = args.g.as_deref().map(split_triple).transpose()?;
    spec_from_parts(family, &split_params(&args.params)?, &f, g.as_ref())
}

fn run() -> Result<(String, i32), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify(args) => {
            let spec = build_spec(&args)?;
            let value = cmd_classify(&spec)?;
            Ok((serde_json::to_string_pretty(&value).unwrap(), 0))
        }
        Command::VerifyTables {
            json,
            text: _,
            inject_fault,
        } => {
            let report = verify_tables(inject_fault);
            let rendered = if json {
                serde_json::to_string_pretty(&report_to_json(&report)).unwrap()
            } else {
                report_to_text(&report)
            };
            let code = if report.passed() { 0 } else { 3 };
            Ok((rendered, code))
        }
        Command::Center { spec, degree } => {
            let spec = build_spec(&spec)?;
            let value = cmd_center(&spec, degree)?;
            Ok((serde_json::to_string_pretty(&value).unwrap(), 0))
        }
        Command::Dual(args) => {
            let spec = build_spec(&args)?;
            let value = cmd_dual(&spec)?;
            Ok((serde_json::to_string_pretty(&value).unwrap(), 0))
        }
        Command::CAlgebra(args) => {
            let spec = build_spec(&args)?;
            let value = cmd_c_algebra(&spec)?;
            Ok((serde_json::to_string_pretty(&value).unwrap(), 0))
        }
        Command::Geometry {
            entry,
            params,
            line,
        } => {
            let entry = entry_by_name(&entry, &split_params(&params)?)?;
            let value = cmd_geometry(&entry, &line)?;
            Ok((serde_json::to_string_pretty(&value).unwrap(), 0))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok((output, code)) => {
            println!("{output}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("{}", serde_json::to_string(&e.to_json()).unwrap());
            ExitCode::from(e.exit_code as u8)
        }
    }
}
