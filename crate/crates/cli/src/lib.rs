//! Command-line front end for `cubmatch`: the fixture corpus, report
//! builders for each subcommand and the verification catalog.

pub mod commands;
pub mod corpus;
pub mod verify;
