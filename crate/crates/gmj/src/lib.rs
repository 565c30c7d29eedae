//! Command-line front end, JSON formats, cache and verification suites
//! for the `gmj-core` engine.

pub mod cache;
pub mod cli;
pub mod fixtures;
pub mod json;
pub mod verify;
