//! Document schema and rendering helpers behind the `triarc` binary.

pub mod args;
pub mod document;
pub mod render;
