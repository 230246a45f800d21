//! Run-wide settings shared by all subcommands. Every field has a flag and
//! an environment variable; the flag wins.

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Args)]
pub struct Config {
    /// Refuse input graphs with more vertices than this.
    #[arg(long, global = true, env = "INTCOMP_VERTEX_CAP", default_value_t = 64,
          value_parser = clap::value_parser!(u64).range(1..=64))]
    pub vertex_cap: u64,

    /// Refuse oracle runs that would test more fill sets than this.
    #[arg(long, global = true, env = "INTCOMP_ORACLE_CAP", default_value_t = 50_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub oracle_cap: u64,

    /// States with at most this many events are solved by exact search in
    /// the DP. Defaults to a value derived from k.
    #[arg(long, global = true, env = "INTCOMP_EVENT_CAP", value_parser = clap::value_parser!(u64).range(1..))]
    pub event_cap: Option<u64>,

    /// Seed for everything random.
    #[arg(long, global = true, env = "INTCOMP_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for suites; 0 uses all cores.
    #[arg(long, global = true, env = "INTCOMP_THREADS", default_value_t = 0)]
    pub threads: usize,

    #[arg(long, global = true, env = "INTCOMP_FORMAT", value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config { vertex_cap: 64, oracle_cap: 50_000_000, event_cap: None, seed: 0, threads: 0, format: Format::Json }
    }
}
