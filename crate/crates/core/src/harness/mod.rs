//! Chain verification over single graphs, whole corpora and the named
//! constructions.

mod catalog;
mod report;
mod scan;

pub use catalog::{reproduce_examples, ExampleResult, ExampleValue, Provenance};
pub use report::{
    verify_domination_chain, verify_independence_chain, BoundReport, ChainCheck, ChainOptions,
};
pub use scan::{corpus_scan, corpus_scan_collect, ScanConfig, ScanSummary, Violation};
