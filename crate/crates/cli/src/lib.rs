//! Command-line front end for the `isoword` library: expression parsing,
//! reports and seeded batch verification.

pub mod app;
pub mod expr;
pub mod report;

pub use app::{run, Outcome};
