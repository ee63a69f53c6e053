//! File formats, exports and command implementations for the `dcpo` binary.

pub mod caps;
pub mod cli;
pub mod commands;
pub mod dot;
pub mod error;
pub mod format;

pub use cli::{Cli, Command, RunConfig};
pub use commands::run;
pub use error::{exit, ParseError, ToolError};
pub use format::{parse_poset, write_poset, PosetFile};
