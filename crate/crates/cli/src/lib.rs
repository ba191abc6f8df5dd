//! File formats, instance generators, solver dispatch and benchmarks for
//! `edp-core`. The `edp` binary is a thin clap front end over this crate.

pub mod bench;
pub mod enumerate;
pub mod format;
pub mod generate;
pub mod solve;
