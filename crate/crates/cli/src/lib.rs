//! Certificate pipelines over `repdim-core`, shared by the `repdim` binary
//! and the acceptance suite.

pub mod certificate;
pub mod pipelines;

pub use certificate::{Certificate, Check, SCHEMA};
pub use pipelines::{
    block_params, blocks, complexity, hecke, parse_scalar, verify_auslander, verify_skew, verify_upper, FieldArg,
    GroupSpec, Options,
};
pub use repdim_core;
