//! Library surface of the command-line tool: argument parsers and the
//! frozen verification suites, shared with the integration tests.

pub mod util;
pub mod verify;
