//! File formats and command-line front end for `etgrs-core`.

pub mod cli;
pub mod json;
