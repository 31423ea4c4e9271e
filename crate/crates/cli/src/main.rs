mod commands;
mod format;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fbc_core::dsl::{parse, GraphMapDocument};
use fbc_core::homology::PresentationOptions;
use fbc_core::Error;
use serde_json::json;

use commands::{Output, Settings};

const EXIT_VALIDATION: u8 = 2;
const EXIT_THEORY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fbc",
    version,
    about = "Invariants of free-by-cyclic groups from graph maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Tolerance for numeric comparisons in reports; exact checks ignore it.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tolerance: f64,
    /// Cohomology class as comma-separated integers; may be repeated.
    #[arg(long, global = true, value_name = "C1,...,CB", allow_hyphen_values = true, value_parser = parse_class)]
    class: Vec<Vec<i64>>,
    /// Basepoint of the spanning tree (default: name-smallest vertex).
    #[arg(long, global = true)]
    basepoint: Option<String>,
    /// Spanning tree as comma-separated edge names (default: BFS tree).
    #[arg(long, global = true, value_delimiter = ',')]
    tree: Option<Vec<String>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Graph map file.
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a graph map; report irreducibility and train-track data.
    Validate(Input),
    /// Orientability class and the matching spectral identity.
    Orient(Input),
    /// Geometric and homological stretch factors.
    Stretch(Input),
    /// The splitting H = K + <z>, edge classes and vertex cycles.
    Homology(Input),
    /// Alexander polynomial.
    Alexander(Input),
    /// McMullen polynomial.
    Mcmullen(Input),
    /// Vertex polynomial.
    Vertexpoly(Input),
    /// Cone of sections.
    Cone(Input),
    /// Stretch factors and specializations at --class (default: u0).
    Specialize(Input),
    /// Orientability of --class (default: u0).
    Classify(Input),
    /// Run every exact check on the map.
    Verify(Input),
    /// SVG picture of a rank-two cone.
    PlotCone(Input),
}

fn parse_class(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("`{x}`: {e}")))
        .collect()
}

/// On failure, the error code and message.
fn load(path: &Path) -> Result<GraphMapDocument, (&'static str, String)> {
    let text =
        std::fs::read_to_string(path).map_err(|e| ("io", format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e: Error| (e.code(), format!("{}: {e}", path.display())))
}

fn emit(cli: &Cli, body: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn fail(cli: &Cli, code: &str, message: &str, exit: u8) -> ExitCode {
    if cli.format == Format::Json {
        let v = json!({ "error": { "code": code, "message": message } });
        println!("{}", serde_json::to_string_pretty(&v).unwrap_or_default());
    } else {
        eprintln!("error: {message}");
    }
    ExitCode::from(exit)
}

fn run(cli: &Cli, doc: &GraphMapDocument) -> fbc_core::Result<Output> {
    let settings = Settings {
        options: PresentationOptions {
            basepoint: cli.basepoint.clone(),
            tree: cli.tree.clone(),
        },
        classes: cli.class.clone(),
        tolerance: cli.tolerance,
    };
    let s = &settings;
    match &cli.command {
        Command::Validate(_) => commands::validate(doc),
        Command::Orient(_) => commands::orient(doc),
        Command::Stretch(_) => commands::stretch(doc),
        Command::Homology(_) => commands::homology(doc, s),
        Command::Alexander(_) => commands::polynomial(doc, s, "alexander"),
        Command::Mcmullen(_) => commands::polynomial(doc, s, "mcmullen"),
        Command::Vertexpoly(_) => commands::polynomial(doc, s, "vertex"),
        Command::Cone(_) => commands::cone(doc, s),
        Command::Specialize(_) => commands::specialize(doc, s),
        Command::Classify(_) => commands::classify(doc, s),
        Command::Verify(_) => commands::verify(doc, s),
        Command::PlotCone(_) => commands::plot(doc, s),
    }
}

fn input(cmd: &Command) -> &Path {
    match cmd {
        Command::Validate(i)
        | Command::Orient(i)
        | Command::Stretch(i)
        | Command::Homology(i)
        | Command::Alexander(i)
        | Command::Mcmullen(i)
        | Command::Vertexpoly(i)
        | Command::Cone(i)
        | Command::Specialize(i)
        | Command::Classify(i)
        | Command::Verify(i)
        | Command::PlotCone(i) => &i.file,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let doc = match load(input(&cli.command)) {
        Ok(d) => d,
        Err((code, message)) => return fail(&cli, code, &message, EXIT_VALIDATION),
    };
    let out = match run(&cli, &doc) {
        Ok(out) => out,
        Err(e) => {
            let exit = if e.is_theory_violation() {
                EXIT_THEORY
            } else {
                EXIT_VALIDATION
            };
            return fail(&cli, e.code(), &e.to_string(), exit);
        }
    };
    let body = match cli.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&out.json).unwrap_or_default()
        ),
        Format::Text => out.text.clone(),
    };
    if let Err(message) = emit(&cli, &body) {
        return fail(&cli, "io", &message, EXIT_VALIDATION);
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_THEORY)
    }
}
