//! Command builders and the output record behind the `motzkin` binary.

pub mod commands;
pub mod record;
