use std::env;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, ValueEnum};
use proxheat_core::output::{self, PlotFormat};
use proxheat_core::{run_scenario, Error, MaterialDb, MechanismRegistry, Scenario};

const MATERIALS_ENV: &str = "PROXHEAT_MATERIALS";

/// Heating rates of trapped particles near thermal surfaces, swept over
/// distance, trap frequency or temperature.
#[derive(Debug, Parser)]
#[command(name = "proxheat", version)]
#[command(group(ArgGroup::new("scenario").required(true).args(["preset", "config"])))]
#[command(after_help = "Presets: fig2-ion-ag, fig3-spin-phonon.\n\
Set PROXHEAT_MATERIALS to a TOML material database to add or override materials.\n\
Exit codes: 1 config error, 2 I/O error, 3 no applicable mechanism.")]
struct Cli {
    /// Compiled-in scenario name
    #[arg(long)]
    preset: Option<String>,

    /// Scenario file (TOML)
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Write the CSV table here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Log-log plot: a `.svg` path, any other path for text, or `ascii` for the terminal
    #[arg(long, value_name = "FILE|ascii")]
    plot: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Suppress notices on stderr
    #[arg(long)]
    quiet: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
}

fn fail(category: &str, message: impl std::fmt::Display, code: u8) -> ExitCode {
    eprintln!("error[{category}]: {message}");
    ExitCode::from(code)
}

/// Prefixes I/O errors with the offending path.
fn at(path: &Path, e: impl Into<Error>) -> Error {
    match e.into() {
        Error::Io(io) => Error::Io(io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
        other => other,
    }
}

fn material_db() -> Result<MaterialDb, Error> {
    let mut db = MaterialDb::builtin();
    if let Some(path) = env::var_os(MATERIALS_ENV).filter(|p| !p.is_empty()) {
        let path = Path::new(&path);
        db.merge(MaterialDb::load(path).map_err(|e| at(path, e))?);
    }
    Ok(db)
}

fn run(cli: &Cli) -> Result<(), Error> {
    let db = material_db()?;
    let scenario = match (&cli.preset, &cli.config) {
        (Some(name), _) => Scenario::from_preset(name, &db)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| at(path, e))?;
            Scenario::from_toml_str(&text, &db)?
        }
        (None, None) => unreachable!("clap requires one of --preset/--config"),
    };
    let table = run_scenario(&scenario, MechanismRegistry::builtin())?;

    match cli.format {
        Format::Csv => match &cli.out {
            Some(path) => output::emit_csv(&table, path).map_err(|e| at(path, e))?,
            None => {
                let mut stdout = io::stdout().lock();
                output::write_csv(&table, &mut stdout)?;
                stdout.flush()?;
            }
        },
    }

    let notices = match cli.plot.as_deref() {
        None => Vec::new(),
        Some("ascii") => {
            let rendered = output::render_ascii(&table, 80)?;
            // keep stdout parseable when the CSV is going there
            if cli.out.is_some() {
                print!("{}", rendered.text);
            } else {
                eprint!("{}", rendered.text);
            }
            rendered.notices
        }
        Some(path) => {
            let path = Path::new(path);
            output::emit_plot(&table, path, PlotFormat::from_path(path)).map_err(|e| at(path, e))?
        }
    };
    if !cli.quiet {
        for n in notices {
            eprintln!("note: {n}");
        }
        let flagged = table.warnings.iter().filter(|w| !w.is_empty()).count();
        if flagged > 0 {
            eprintln!(
                "note: {flagged} of {} rows carry validity warnings (see the warnings column)",
                table.rows()
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let detail: Vec<&str> = msg
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            return fail("config", detail.join(" ").trim_start_matches("error: "), 1);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let cat = e.category();
            fail(cat.as_str(), e, cat.exit_code() as u8)
        }
    }
}
