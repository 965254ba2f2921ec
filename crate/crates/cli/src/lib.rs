//! Library side of the `uas` workbench: the ideal-spec language, run
//! configuration, result cache and verification suites.

pub mod cache;
pub mod commands;
pub mod config;
pub mod report;
pub mod spec;
pub mod verify;
