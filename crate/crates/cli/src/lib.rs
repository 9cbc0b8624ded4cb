//! File formats, analysis pipeline and command-line front end for
//! `orbit-rank`.

pub mod analyze;
pub mod cli;
pub mod filtration_format;
pub mod lie_file;
pub mod report;
