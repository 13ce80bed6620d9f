pub mod cli;
pub mod constructors;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod json;
pub mod mfunction;
pub mod secular;
pub mod spectrum;
pub mod poly;
pub mod search;

pub use error::{Error, Result};
