//! Formats, property suites and the command-line front end for
//! [`zbraid_core`].

pub mod cli;
pub mod format;
pub mod memo;
pub mod suites;
