//! Command-line front end: text formats, DOT export, subcommand dispatch.

pub mod commands;
pub mod dot;
pub mod format;
