//! Command-line driver for `nqf-core`: configuration, the on-disk basis
//! cache, the verification suite and table dumps.

pub mod cache;
pub mod config;
pub mod dump;
pub mod render;
pub mod report;
pub mod suite;

pub use config::{EngineConfig, Format};
pub use report::{CheckReport, Status};
pub use suite::{run_suite, Engine};

#[derive(Debug, thiserror::Error)]
pub enum NqfError {
    #[error(transparent)]
    Core(#[from] nqf_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    Usage(String),
}
