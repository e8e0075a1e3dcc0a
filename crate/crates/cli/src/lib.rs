//! Command-line front end: expression evaluation, propriety reports,
//! sampling, plotting, shortest paths and a self-check.

pub mod commands;
pub mod demo;
pub mod document;
pub mod error;
pub mod expr;
pub mod plot;
pub mod render;
