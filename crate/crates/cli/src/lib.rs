//! Command-line front end and HTTP game server for `hda-core`.

pub mod commands;
pub mod server;
