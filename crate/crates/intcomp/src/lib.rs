//! File formats, corpora, test suites and the command-line front end built
//! on `intcomp-core`.

pub mod cli;
pub mod config;
pub mod corpus;
pub mod io;
pub mod suite;
