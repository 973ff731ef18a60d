//! Curve parsing, bound verification and report rendering on top of `ffmin-core`.

pub mod cli;
pub mod parse;
pub mod report;
pub mod verify;
