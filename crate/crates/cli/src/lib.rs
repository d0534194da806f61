//! File formats, oracles and the command-line front end for
//! [`frobsplit_core`].

pub mod cli;
pub mod commands;
pub mod document;
pub mod error;
pub mod oracle;
pub mod parallel;
pub mod parse;
pub mod probe;
pub mod session;

pub use commands::{cmd_enumerate, cmd_probe, cmd_verify, RunOptions};
pub use document::{to_dot, LatticeDocument};
pub use error::CliError;
pub use oracle::{cmd_oracle, monomial_oracle, OracleReport};
pub use parallel::RayonExecutor;
pub use parse::{parse_polynomial, ParseError};
pub use probe::{probe, ProbeConfig, ProbeReport};
pub use session::{parse_session, CountConvention, SessionSpec};
