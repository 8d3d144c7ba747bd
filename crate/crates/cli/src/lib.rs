//! Document formats and commands behind the `gl2` binary.

pub mod commands;
pub mod format;
