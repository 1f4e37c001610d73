pub mod bounds;
pub mod error;
pub mod graph;
pub mod harness;
pub mod oracle;
