use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use localities::io::{self, FunctorSource, GroupSource, LocalitySpec};
use localities::{Error, Locality, Result};

#[derive(Parser)]
#[command(name = "localities", about = "Finite localities, Alperin decompositions, transporter limits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group commands.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Locality commands.
    #[command(subcommand)]
    Locality(LocalityCmd),
    /// List the essential subgroups.
    Essentials(Common),
    /// Decompose an element into a certificate.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: String,
    },
    /// Verify a certificate file.
    VerifyCert {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cert: String,
    },
    /// Transporter category commands.
    #[command(subcommand)]
    Transporter(TransporterCmd),
    /// Inverse limits over T and its essential subcategory.
    Limit {
        #[command(flatten)]
        common: Common,
        /// fixed-points, h0, h1, h2, or a functor JSON file
        #[arg(long, default_value = "fixed-points")]
        functor: String,
        /// trivial, permutation, or a module JSON file
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        essential_only: bool,
    },
    /// H^n(G; M) against the limits over T_S(G) and its essential subcategory.
    Cohomology {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: Option<String>,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    Info(Common),
}

#[derive(Subcommand)]
enum LocalityCmd {
    Build(Common),
    Verify(Common),
}

#[derive(Subcommand)]
enum TransporterCmd {
    Info(Common),
}

#[derive(Args)]
struct Common {
    /// Locality (or, for `group info`, group) spec as JSON
    #[arg(long = "in")]
    input: Option<String>,
    /// Built-in group name, used instead of --in
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    /// all or nontrivial; overrides the spec
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, default_value_t = 1)]
    degree: usize,
    #[arg(long, default_value_t = 3)]
    maxlen: usize,
    #[arg(long)]
    out: Option<String>,
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
}

impl Common {
    fn locality_spec(&self) -> Result<LocalitySpec> {
        let mut spec: LocalitySpec = match (&self.input, &self.group) {
            (Some(path), _) => io::parse_json(&read(path)?)?,
            (None, Some(name)) => LocalitySpec {
                group: GroupSource::Builtin(name.clone()),
                p: self.p.ok_or_else(|| Error::InvalidInput("--p is required with --group".into()))?,
                s: None,
                delta: io::DeltaSource::Keyword("all".into()),
            },
            (None, None) => return Err(Error::InvalidInput("give --in or --group".into())),
        };
        if let Some(p) = self.p {
            spec.p = p;
        }
        if let Some(d) = &self.delta {
            spec.delta = io::DeltaSource::Keyword(d.clone());
        }
        Ok(spec)
    }

    fn locality(&self) -> Result<Locality> {
        io::build_locality(&self.locality_spec()?)
    }

    fn emit(&self, v: &Value) -> Result<()> {
        let text = serde_json::to_string_pretty(v).expect("json") + "\n";
        match &self.out {
            Some(path) => std::fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{path}: {e}"))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

/// Optional text argument that may name a file.
fn file_or_word(arg: &Option<String>) -> Result<Option<String>> {
    match arg.as_deref() {
        None => Ok(None),
        Some(w @ ("trivial" | "permutation")) => Ok(Some(w.to_string())),
        Some(path) => read(path).map(Some),
    }
}

/// Runs a command; `Ok(false)` means a verification ran and failed.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Group(GroupCmd::Info(c)) => {
            let source = match (&c.input, &c.group) {
                (Some(path), _) => io::parse_json(&read(path)?)?,
                (None, Some(name)) => GroupSource::Builtin(name.clone()),
                (None, None) => return Err(Error::InvalidInput("give --in or --group".into())),
            };
            c.emit(&io::cmd_group_info(&io::build_group(&source)?))?;
        }
        Command::Locality(LocalityCmd::Build(c)) => c.emit(&io::cmd_locality_build(&c.locality()?))?,
        Command::Locality(LocalityCmd::Verify(c)) => {
            let (v, ok) = io::cmd_locality_verify(&c.locality()?, c.maxlen);
            c.emit(&v)?;
            return Ok(ok);
        }
        Command::Essentials(c) => c.emit(&io::cmd_essentials(&c.locality()?))?,
        Command::Decompose { common, element } => {
            common.emit(&io::cmd_decompose(Arc::new(common.locality()?), &element)?)?
        }
        Command::VerifyCert { common, cert } => {
            let cert = io::parse_json(&read(&cert)?)?;
            let (v, ok) = io::cmd_verify_cert(Arc::new(common.locality()?), &cert)?;
            common.emit(&v)?;
            return Ok(ok);
        }
        Command::Transporter(TransporterCmd::Info(c)) => c.emit(&io::cmd_transporter_info(Arc::new(c.locality()?))?)?,
        Command::Limit { common, functor, module, essential_only } => {
            let module = file_or_word(&module)?;
            let json_text = match functor.as_str() {
                "fixed-points" | "h0" | "h1" | "h2" => None,
                path => Some(read(path)?),
            };
            let source = FunctorSource::parse(&functor, json_text.as_deref(), module.as_deref())?;
            common.emit(&io::cmd_limit(Arc::new(common.locality()?), source, essential_only)?)?;
        }
        Command::Cohomology { common, module } => {
            let module = file_or_word(&module)?;
            common.emit(&io::cmd_cohomology(&common.locality()?, common.degree, module.as_deref())?)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("{}", io::error_json(&e));
            ExitCode::from(io::exit_code(&e) as u8)
        }
    }
}
