pub mod error;
pub mod cw;
pub mod graph;
pub mod lattice;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
