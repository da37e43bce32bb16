//! Script front end for `sphere-forge`: parsing, checking, execution and
//! reports.

pub mod certs;
pub mod exec;
pub mod report;
pub mod script;

pub use exec::{execute, Options};
pub use report::{Report, Verdict};
pub use script::{parse_script, Script, ScriptError};
