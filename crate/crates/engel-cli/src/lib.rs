//! Library surface of the command-line tool, split out so integration
//! tests can drive the parser, record store, commands and the claim
//! registry directly.

pub mod commands;
pub mod parser;
pub mod record;
pub mod store;
pub mod verify;
