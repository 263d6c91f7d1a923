use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use repdim_cli::{with_field, Certificate, FieldArg, GroupSpec, Options};

#[derive(Parser, Debug)]
#[command(name = "repdim", version, about = "Exact certificates for representation-dimension bounds")]
struct Cli {
    /// Q, Fp:<p> or cyclotomic:<m>
    #[arg(long, global = true, default_value = "Q")]
    field: FieldArg,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Syzygy steps before a projective dimension is reported as a lower bound.
    #[arg(long, global = true, default_value_t = 20)]
    cutoff: usize,
    /// Write the certificate here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Block table of the Hecke algebra of S_n with repdim bounds.
    Blocks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Auslander generator of the Brauer line algebra has gldim End = 2.
    VerifyAuslander {
        #[arg(long)]
        ell: usize,
    },
    /// Induction/restriction and separable-equivalence witnesses for a C2 action.
    VerifySkew {
        #[arg(long)]
        ell: usize,
        /// trivial or sign
        #[arg(long, default_value = "sign")]
        group: GroupSpec,
    },
    /// Upper bound for the wreath product with S_w.
    VerifyUpper {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        w: usize,
    },
    /// Complexity of the semisimple top over the w-th tensor power.
    Complexity {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        w: usize,
        #[arg(long, default_value_t = 12)]
        steps: usize,
    },
    /// Block cross-check of the Hecke algebra H_q(S_n).
    Hecke {
        #[arg(long)]
        n: usize,
        /// A rational, or `zeta` over a cyclotomic field.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

fn run(cli: &Cli) -> Result<Certificate> {
    let opts = Options { seed: cli.seed, cutoff: cli.cutoff };
    match &cli.command {
        Command::Blocks { n, ell } => repdim_cli::blocks(cli.field, *n, *ell, opts),
        Command::VerifyAuslander { ell } => with_field!(cli.field, k => repdim_cli::verify_auslander(k, *ell, opts)),
        Command::VerifySkew { ell, group } => {
            with_field!(cli.field, k => repdim_cli::verify_skew(k, *ell, *group, opts))
        }
        Command::VerifyUpper { ell, w } => with_field!(cli.field, k => repdim_cli::verify_upper(k, *ell, *w, opts)),
        Command::Complexity { ell, w, steps } => {
            with_field!(cli.field, k => repdim_cli::complexity(k, *ell, *w, *steps, opts))
        }
        Command::Hecke { n, q } => with_field!(cli.field, k => repdim_cli::hecke(k, *n, q, opts)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cert = match run(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&cert.to_json()).expect("json")),
        Format::Table => cert.render_table(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if cert.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
