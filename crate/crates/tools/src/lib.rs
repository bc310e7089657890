//! Standard-library companion to `coalition-core`: graph file formats, the
//! theorem verification harness, the scaling benchmark and the `ccoal` CLI.

pub mod cli;
pub mod formats;
pub mod harness;
pub mod scaling;
