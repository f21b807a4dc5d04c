//! Library side of the `pretzel` command: fixture catalogue from the
//! published case analyses, the regression verifier, and output formatting.

pub mod fixtures;
pub mod output;
pub mod verify;
