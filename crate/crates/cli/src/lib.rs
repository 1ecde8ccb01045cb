//! Library surface of the CLI: the structured report document and the
//! subcommand implementations, shared between the binary and its tests.

pub mod commands;
pub mod report;
