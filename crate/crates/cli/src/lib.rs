//! Verification suites and report types behind the `pdim` binary.

pub mod report;
pub mod suites;
