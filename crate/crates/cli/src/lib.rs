//! Report types and rendering for the `legendre-verify` command line tool.

pub mod report;
