mod cache;
mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use langdual::Weight;

/// Exact characters, tensor products and Langlands-dual branching for finite
/// root data.
#[derive(Parser, Debug)]
#[command(name = "langdual", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
enum Command {
    /// Full weight multiplicities of an irreducible character.
    Char(CharArgs),
    /// Decompose a tensor product of two irreducibles.
    Tensor(TensorArgs),
    /// Branching multiplicities of the ℓ-projection of a character.
    Branch(BranchArgs),
    /// Run the identity battery over all small highest weights.
    Verify(VerifyArgs),
    /// Show a datum: Cartan matrix, symmetrizers, l_i, positive roots and the
    /// root-scaling map.
    Datum(DatumCmdArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct DatumArgs {
    /// Type such as B2, F4, E8.
    #[arg(required_unless_present = "cartan", conflicts_with = "cartan")]
    pub cartan_type: Option<String>,
    /// JSON file with {"matrix": [[..]], "symmetrizers": [..]} instead of a type.
    #[arg(long, value_name = "FILE")]
    pub cartan: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Do not read or write the on-disk character cache.
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Tensor,
    Closed,
    All,
}

#[derive(Args, Debug, Serialize)]
pub struct CharArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    /// Highest weight, comma-separated fundamental coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Weight,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct TensorArgs {
    /// [TYPE] WEIGHT1 WEIGHT2; omit TYPE when --cartan is given. Put weights
    /// with a leading minus after `--`.
    #[arg(num_args = 2..=3, required = true, value_name = "ARGS")]
    pub args: Vec<String>,
    #[arg(long, value_name = "FILE")]
    pub cartan: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct BranchArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    /// Defaults to the largest symmetrizer d.
    #[arg(long)]
    pub ell: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Weight,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    #[arg(long)]
    pub ell: Option<i64>,
    /// Largest coordinate of the highest weights checked.
    #[arg(long, default_value_t = 2)]
    pub bound: i64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct DatumCmdArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    #[arg(long)]
    pub ell: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    /// An identity did not hold (exit 1).
    Verification(String),
    /// Bad input (exit 2).
    Usage(String),
}

impl From<langdual::Error> for Failure {
    fn from(e: langdual::Error) -> Self {
        if e.is_internal() {
            Failure::Verification(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<langdual::Error>() {
            Ok(e) => e.into(),
            Err(e) => Failure::Usage(format!("{e:#}")),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_classes() {
        let violation: Failure = langdual::Error::TheoremViolation("negative".into()).into();
        assert!(matches!(violation, Failure::Verification(_)));
        let bad: Failure = langdual::Error::NonPositiveEll(0).into();
        assert!(matches!(bad, Failure::Usage(_)));
        let wrapped: Failure = anyhow::Error::new(langdual::Error::Internal("x".into())).into();
        assert!(matches!(wrapped, Failure::Verification(_)));
    }
}
