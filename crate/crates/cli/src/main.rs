use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ciext_cli::commands::EngineCommand;
use ciext_cli::report::{Output, Status};
use ciext_cli::{check_script, parse_script, printer, run_script, CliError};

/// Hilbert series, Ext asymptotics and cohomology operators over graded complete intersections.
#[derive(Parser, Debug)]
#[command(name = "ciext", version)]
struct Cli {
    /// Emit JSON reports instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Script with ring and module declarations.
    #[arg(long, short, global = true)]
    script: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Top,
}

#[derive(Subcommand, Debug)]
enum Top {
    /// Runs every command statement in a script.
    Run { file: PathBuf },
    /// Parses and binds a script without running commands.
    Check { file: PathBuf },
    /// Prints a script in canonical form.
    Fmt { file: PathBuf },
    #[command(flatten)]
    Engine(EngineCommand),
}

fn read(path: &PathBuf) -> Result<(String, String), CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok((src, path.display().to_string()))
}

fn emit(out: &Output, json: bool) {
    let mut stdout = std::io::stdout().lock();
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = match (&out.csv, json) {
        (Some(csv), false) => write!(stdout, "{csv}"),
        (_, true) => writeln!(
            stdout,
            "{}",
            serde_json::to_string_pretty(&out.json).expect("reports serialize")
        ),
        (None, false) => writeln!(stdout, "{}", out.text),
    };
}

fn real_main(cli: Cli) -> Result<Status, CliError> {
    let json = cli.json;
    let mut status = Status::Ok;
    let mut sink = |o: &Output| {
        status = status.max(o.status);
        emit(o, json || o.prefer_json);
    };
    match &cli.cmd {
        Top::Run { file } => {
            let (src, name) = read(file)?;
            run_script(&src, &name, None, &mut sink)?;
        }
        Top::Check { file } => {
            let (src, name) = read(file)?;
            check_script(&src, &name)?;
            println!("{name}: ok");
        }
        Top::Fmt { file } => {
            let (src, name) = read(file)?;
            print!("{}", printer::print_script(&parse_script(&src, &name)?));
        }
        Top::Engine(cmd) => {
            let (src, name) = match &cli.script {
                Some(p) => read(p)?,
                None => (String::new(), "<none>".into()),
            };
            run_script(&src, &name, Some(cmd), &mut sink)?;
        }
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(s) => ExitCode::from(s.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
