//! The `gorenstein-kit` command-line tool as a library: argument types, the
//! JSON schema, and [`run`], which turns parsed arguments into output text and
//! an exit code without touching the process.

pub mod args;
pub mod commands;
pub mod schema;

use serde::Serialize;
use thiserror::Error;

pub use args::{Cli, Command};
pub use commands::Context;

/// Environment variable overriding the group-order cap.
pub const MAX_ORDER_ENV: &str = "GORENSTEIN_KIT_MAX_ORDER";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("IoError: cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("UnknownFixture: no bundled {kind} named {key:?}")]
    UnknownFixture { kind: &'static str, key: String },
    #[error("InvalidEnvironment: {MAX_ORDER_ENV}={0:?} is not a positive integer")]
    InvalidEnvironment(String),
    #[error(transparent)]
    Core(#[from] gorenstein_core::Error),
}

impl CliError {
    /// 2 for unusable input, 1 for a failed computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(gorenstein_core::Error::Parse(_)) => 2,
            CliError::Core(_) => 1,
            _ => 2,
        }
    }
}

impl Context {
    /// Reads the order cap from [`MAX_ORDER_ENV`], if set.
    pub fn from_env() -> Result<Self, CliError> {
        let max_order = match std::env::var(MAX_ORDER_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(n) if n > 0 => n,
                _ => return Err(CliError::InvalidEnvironment(v)),
            },
            Err(_) => gorenstein_core::invariants::DEFAULT_ORDER_CAP,
        };
        Ok(Self { max_order })
    }
}

impl Default for Context {
    fn default() -> Self {
        Self {
            max_order: gorenstein_core::invariants::DEFAULT_ORDER_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn emit<T: Serialize>(doc: &T, json: bool, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
        s.push('\n');
        s
    } else {
        text(doc)
    }
}

fn dispatch(cli: &Cli, ctx: &Context) -> Result<(String, bool), CliError> {
    use commands as c;
    let json = cli.json;
    Ok(match &cli.command {
        Command::Hilbert { ring, max_degree } => {
            let p = c::load_ring(ring)?;
            (
                emit(&c::hilbert(&p, *max_degree), json, c::render_hilbert),
                true,
            )
        }
        Command::Shift { ring } => {
            let doc = c::shift(&c::load_ring(ring)?);
            (emit(&doc, json, c::render_shift), doc.agree)
        }
        Command::Duality { ring, max_degree } => {
            let p = c::load_ring(ring)?;
            (
                emit(&c::duality(&p, *max_degree)?, json, c::render_duality),
                true,
            )
        }
        Command::Molien {
            ring,
            group,
            twist,
            max_degree,
        } => {
            let p = c::load_ring(ring)?;
            let g = c::load_group(group, &p, ctx)?;
            let t = c::parse_twist(twist, &g)?;
            (
                emit(&c::molien(&p, &g, &t, *max_degree)?, json, c::render_molien),
                true,
            )
        }
        Command::Sympow { ring, group, n } => {
            let p = c::load_ring(ring)?;
            let g = c::load_group(group, &p, ctx)?;
            (emit(&c::sympow(&g, *n)?, json, c::render_sympow), true)
        }
        Command::Invgen {
            ring,
            group,
            degree,
        } => {
            let p = c::load_ring(ring)?;
            let g = c::load_group(group, &p, ctx)?;
            (
                emit(&c::invgen(&p, &g, *degree)?, json, c::render_invgen),
                true,
            )
        }
        Command::Descent { ring, group } => {
            let p = c::load_ring(ring)?;
            let g = c::load_group(group, &p, ctx)?;
            (emit(&c::descent(&p, &g)?, json, c::render_descent), true)
        }
        Command::Table => {
            let doc = c::table();
            (emit(&doc, json, c::render_table), doc.all_pass)
        }
    })
}

/// Runs one command. Exit code 0 iff nothing failed and every check passed.
pub fn run(cli: &Cli, ctx: &Context) -> Outcome {
    match dispatch(cli, ctx) {
        Ok((stdout, ok)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
