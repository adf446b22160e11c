//! Report types and rendering shared by the `iboson` binary and its tests.

pub mod render;
pub mod report;
