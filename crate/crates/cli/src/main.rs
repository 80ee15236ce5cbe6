//! `consta`: count, enumerate and verify (δ + αu^2)-constacyclic codes.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use constacyclic::{Error, Exec, FieldCtx, Params};

mod commands;

#[derive(Debug, Parser)]
#[command(name = "consta", version)]
#[command(about = "Enumerate constacyclic codes over F_{2^m}[u]/<u^{2 lambda}>")]
struct Cli {
    /// Worker threads; 1 runs everything sequentially. Defaults to all cores.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct ParamArgs {
    /// Field degree: codes live over F_{2^m}.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Odd part of the code length 2^k·n.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    /// The ring is F_{2^m}[u]/<u^{2 lambda}>.
    #[arg(long, default_value_t = 2)]
    pub lambda: usize,
    /// delta as the bit pattern of a field element (decimal or 0x hex).
    #[arg(long, default_value = "1", value_parser = parse_u32)]
    pub delta: u32,
    /// alpha as the bit pattern of a field element (decimal or 0x hex).
    #[arg(long, default_value = "1", value_parser = parse_u32)]
    pub alpha: u32,
    /// Reduction polynomial of F_{2^m}, including the x^m bit. Defaults to a built-in primitive one.
    #[arg(long, value_parser = parse_u32)]
    pub reduction: Option<u32>,
    /// Seed of the randomized equal-degree factorization step.
    #[arg(long, default_value_t = constacyclic::factor::DEFAULT_SEED)]
    pub seed: u64,
}

impl ParamArgs {
    pub fn build(&self) -> Result<Params, Error> {
        let field = FieldCtx::new(self.m, self.reduction)?;
        Params::new(field.into(), self.n, self.k, self.lambda, self.delta, self.alpha)
    }
}

#[derive(Debug, Args, Clone)]
pub struct Caps {
    /// Largest code that may be listed word by word.
    #[arg(long, env = "CONSTA_MAX_CODEWORDS", default_value_t = constacyclic::ambient::DEFAULT_MAX_CODEWORDS)]
    pub max_codewords: u64,
    /// Largest F_2-dimension of the ambient ring the brute-force oracle accepts.
    #[arg(long, env = "CONSTA_ORACLE_MAX_DIM", default_value_t = constacyclic::ambient::DEFAULT_ORACLE_MAX_DIM)]
    pub oracle_max_dim: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor x^n + delta0 and print the primitive idempotents.
    Factor {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Count all codes, by both the sum and the closed form.
    Count {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Stream code descriptors in canonical order.
    Enumerate {
        #[command(flatten)]
        params: ParamArgs,
        /// Index of the first code to print.
        #[arg(long, default_value = "0", value_parser = parse_big)]
        offset: BigUint,
        /// Maximum number of codes to print.
        #[arg(long)]
        limit: Option<u64>,
        /// Include generators lifted to R[x]/<x^N - gamma> (JSON only).
        #[arg(long)]
        generators: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Find every ideal by brute force and compare with the enumeration.
    Oracle {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        caps: Caps,
        /// Also list each ideal with its dimension, size and generators.
        #[arg(long)]
        list_ideals: bool,
    },
    /// List the self-dual codes of length 4 (lambda = k = 2, n = 1, delta = 1).
    Selfdual {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        caps: Caps,
        /// Skip the dual-code verification.
        #[arg(long)]
        no_verify: bool,
        /// Also compute the dual of every enumerated code and compare.
        #[arg(long)]
        scan: bool,
    },
}

fn parse_u32(s: &str) -> Result<u32, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u32::from_str_radix(hex, 16),
        None => s.parse(),
    };
    r.map_err(|e| format!("{s:?}: {e}"))
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    s.parse().map_err(|e| format!("{s:?}: {e}"))
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Ok,
    Mismatch,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidParams(_) | Error::NotIrreducible(_) | Error::CapExceeded { .. } => 2,
        _ => 1,
    }
}

fn setup_threads(threads: Option<usize>) -> Result<Exec, String> {
    match threads {
        Some(0) => Err("--threads must be positive".into()),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(t) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .map_err(|e| e.to_string())?;
            Ok(Exec::Parallel)
        }
        _ => Ok(Exec::Parallel),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = match setup_threads(cli.threads) {
        Ok(e) => e,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let sink: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let res = match cli.command {
        Command::Factor { params } => commands::factor(&params, &mut out),
        Command::Count { params } => commands::count(&params, &mut out),
        Command::Enumerate { params, offset, limit, generators, format } => {
            commands::enumerate(&params, &offset, limit, generators, format, &mut out)
        }
        Command::Oracle { params, caps, list_ideals } => {
            commands::oracle(&params, &caps, list_ideals, exec, &mut out)
        }
        Command::Selfdual { params, caps, no_verify, scan } => {
            commands::selfdual(&params, &caps, !no_verify, scan, exec, &mut out)
        }
    };
    let flushed = out.flush();
    match res {
        Ok(Outcome::Ok) => {
            if let Err(e) = flushed {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(commands::CmdError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(commands::CmdError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
