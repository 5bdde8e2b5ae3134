//! File formats, verification harness and command line support for
//! `hyperindep-core`.

pub mod compare;
pub mod config;
pub mod corpus;
pub mod hg;
pub mod json;
pub mod verify;
