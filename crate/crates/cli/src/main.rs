//! Command-line front end: computes graded cellular data of a cyclotomic
//! Hecke algebra and checks the identities it is expected to satisfy.
//!
//! Exit status is 0 when every check passes, 1 when an identity fails
//! (a JSON diagnostic naming it goes to stderr) and 2 for an invalid
//! configuration.

mod commands;
mod config;
mod error;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gradhecke::scalars::{FieldKind, Fp, Rational};
use serde_json::json;

use commands::Command;
use config::Flags;
use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "gradhecke", version, about = "Graded cellular structure of cyclotomic Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Shapes and standard tableaux with residues, degrees and positivity.
    Tableaux(Flags),
    /// Graded dimensions of Specht modules, blocks and the algebra.
    Gdim {
        #[command(flatten)]
        flags: Flags,
        /// Also build the psi basis and compare its degree census.
        #[arg(long)]
        census: bool,
    },
    /// Blocks with their defects and shapes.
    Blocks(Flags),
    /// The KLR idempotents e(i), cross-checked against the seminormal route.
    Idempotents(Flags),
    /// The KLR relation suite.
    Relations(Flags),
    /// Degrees of the psi basis and the psi and psi' transition matrices.
    Basis(Flags),
    /// Graded Gram matrices of the Specht modules.
    Gram(Flags),
    /// Graded decomposition and Cartan matrices per block.
    Decomp(Flags),
    /// The psi/psi' pairing, the symmetrizing form and Specht duality.
    Pairing(Flags),
    /// The elements z_n^(+-,s) and their normal form.
    AppendixZ(Flags),
    /// The elements z_lambda and their degrees.
    Zlambda(Flags),
}

impl Sub {
    fn split(self) -> (Command, Flags) {
        match self {
            Sub::Tableaux(f) => (Command::Tableaux, f),
            Sub::Gdim { flags, census } => (Command::Gdim { census }, flags),
            Sub::Blocks(f) => (Command::Blocks, f),
            Sub::Idempotents(f) => (Command::Idempotents, f),
            Sub::Relations(f) => (Command::Relations, f),
            Sub::Basis(f) => (Command::Basis, f),
            Sub::Gram(f) => (Command::Gram, f),
            Sub::Decomp(f) => (Command::Decomp, f),
            Sub::Pairing(f) => (Command::Pairing, f),
            Sub::AppendixZ(f) => (Command::AppendixZ, f),
            Sub::Zlambda(f) => (Command::Zlambda, f),
        }
    }
}

fn dispatch(cmd: Command, flags: &Flags) -> Result<i32, CliError> {
    let cfg = flags.resolve()?;
    let report = match cfg.field {
        FieldKind::Prime(_) => commands::run::<Fp>(cmd, &cfg)?,
        FieldKind::Rationals => commands::run::<Rational>(cmd, &cfg)?,
    };
    let text = report.render(cfg.format);
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{}", text),
    }
    if report.passed() {
        Ok(0)
    } else {
        let failed: Vec<_> = report
            .failed()
            .into_iter()
            .map(|c| json!({"identity": c.name, "detail": c.detail}))
            .collect();
        eprintln!("{}", json!({"status": "fail", "command": cmd.name(), "failed": failed}));
        Ok(1)
    }
}

fn main() -> ExitCode {
    let (cmd, flags) = Cli::parse().command.split();
    let code = dispatch(cmd, &flags).unwrap_or_else(|err| {
        eprintln!("{}", err.diagnostic());
        err.exit_code()
    });
    ExitCode::from(code as u8)
}
