//! Library half of the `longseg` binary: argument-independent command
//! implementations that read from any `BufRead` and write to any `Write`.

pub mod commands;
pub mod numbers;

use std::process::ExitCode;

use longseg::bio::BioError;
use longseg::SegmentError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Bio(#[from] BioError),
    #[error(transparent)]
    Segment(#[from] SegmentError),
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// A segment was found (or every record had a region).
    Found,
    /// No segment, or at least one record without a region.
    NotFound,
}

impl Status {
    pub fn exit_code(self) -> ExitCode {
        match self {
            Status::Found => ExitCode::SUCCESS,
            Status::NotFound => ExitCode::from(1),
        }
    }
}

/// Exit status for errors; matches clap's usage-error code.
pub const ERROR_EXIT: u8 = 2;
