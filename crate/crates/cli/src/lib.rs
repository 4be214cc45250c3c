//! Session-script front end for the `ciext` engine: lexer, parser, pretty-printer,
//! binder and command execution.

pub mod ast;
pub mod commands;
pub mod diag;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod report;
pub mod session;

use ciext::{Field, PrimeField, Rationals};
use thiserror::Error;

use crate::ast::{FieldSpec, Script, Stmt};
use crate::commands::{parse_words, EngineCommand, Executor};
use crate::diag::{DiagKind, Diagnostic};
use crate::report::Output;
use crate::session::Session;

#[derive(Debug, Error)]
pub enum CliError {
    /// Rendered script diagnostic.
    #[error("{0}")]
    Script(String),
    #[error("{0}")]
    Engine(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn script_error(d: Diagnostic, file: &str, src: &str) -> CliError {
    CliError::Script(d.render(file, src))
}

/// Parses a script, reporting diagnostics against `file`.
pub fn parse_script(src: &str, file: &str) -> Result<Script, CliError> {
    parser::parse(src).map_err(|d| script_error(d, file, src))
}

/// Coefficient field shared by every ring declaration, or rationals when there are none.
fn script_field(script: &Script) -> Result<Option<(u64, ast::Span)>, Diagnostic> {
    let mut found: Option<Option<(u64, ast::Span)>> = None;
    for st in &script.stmts {
        if let Stmt::Ring(r) = st {
            let this = match &r.field {
                FieldSpec::Rationals => None,
                FieldSpec::Gf { p, span } => Some((*p, *span)),
            };
            match &found {
                None => found = Some(this),
                Some(prev) if prev.map(|x| x.0) != this.map(|x| x.0) => {
                    return Err(Diagnostic::new(
                        DiagKind::Binding,
                        r.name.span,
                        "rings in one script must share a coefficient field",
                    )
                    .hint("declare every ring over the same field"));
                }
                _ => {}
            }
        }
    }
    Ok(found.flatten())
}

/// Binds declarations and runs command statements in order. With `extra`, the script only
/// supplies declarations and `extra` is the single command run.
/// `on_output` sees each command's output as soon as it is ready.
pub fn run_script(
    src: &str,
    file: &str,
    extra: Option<&EngineCommand>,
    on_output: &mut dyn FnMut(&Output),
) -> Result<Vec<Output>, CliError> {
    let mode = match extra {
        Some(cmd) => Mode::Only(cmd),
        None => Mode::Script,
    };
    dispatch(src, file, mode, on_output)
}

/// Parses and binds every declaration and checks command syntax without running anything.
pub fn check_script(src: &str, file: &str) -> Result<(), CliError> {
    dispatch(src, file, Mode::Check, &mut |_| {}).map(|_| ())
}

#[derive(Clone, Copy)]
enum Mode<'a> {
    Script,
    Check,
    Only(&'a EngineCommand),
}

fn dispatch(
    src: &str,
    file: &str,
    mode: Mode<'_>,
    on_output: &mut dyn FnMut(&Output),
) -> Result<Vec<Output>, CliError> {
    let script = parse_script(src, file)?;
    match script_field(&script).map_err(|d| script_error(d, file, src))? {
        None => execute(&script, Rationals, src, file, mode, on_output),
        Some((p, span)) => {
            let field = u32::try_from(p)
                .ok()
                .and_then(|p| PrimeField::new(p).ok())
                .filter(|f| f.modulus() > 2)
                .ok_or_else(|| {
                    script_error(
                        Diagnostic::new(
                            DiagKind::Binding,
                            span,
                            format!("gf({p}) is not an odd prime field"),
                        )
                        .hint("use an odd prime below 2^31, e.g. gf(32003)"),
                        file,
                        src,
                    )
                })?;
            execute(&script, field, src, file, mode, on_output)
        }
    }
}

fn execute<F: Field>(
    script: &Script,
    field: F,
    src: &str,
    file: &str,
    mode: Mode<'_>,
    on_output: &mut dyn FnMut(&Output),
) -> Result<Vec<Output>, CliError> {
    let mut exec = Executor::new(Session::new(field));
    let mut outs = Vec::new();
    for st in &script.stmts {
        match st {
            Stmt::Command(_) if matches!(mode, Mode::Only(_)) => {}
            Stmt::Command(c) => {
                let cmd = parse_words(&c.words).map_err(|m| {
                    script_error(
                        Diagnostic::new(DiagKind::Syntax, c.span, m)
                            .hint("run `ciext <command> --help` for the accepted flags"),
                        file,
                        src,
                    )
                })?;
                if matches!(mode, Mode::Check) {
                    continue;
                }
                let out = exec.run(&cmd)?;
                on_output(&out);
                outs.push(out);
            }
            _ => exec
                .session
                .declare(st, src)
                .map_err(|d| script_error(d, file, src))?,
        }
    }
    if let Mode::Only(cmd) = mode {
        let out = exec.run(cmd)?;
        on_output(&out);
        outs.push(out);
    }
    Ok(outs)
}
