//! File formats, polynomial parsing, reports and the acceptance suite behind
//! the `toric-cobordism` binary.

pub mod acceptance;
pub mod cli;
pub mod error;
pub mod fanfile;
pub mod oracle;
pub mod parse;
pub mod report;

pub use error::{CliError, CliResult};
