//! Command-line driver, text and JSON output, and DOT export for
//! [`ucycle_core`].

pub mod cli;
pub mod dot;
pub mod record;
pub mod search;
pub mod text;
