use super::report::{
    verify_domination_chain, verify_independence_chain, BoundReport, ChainOptions,
};
use crate::error::HarnessError;
use crate::oracle::{labeled_graph, labeled_graph_count, OracleConfig};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub order: usize,
    pub js: Vec<usize>,
    pub domination: bool,
    pub claw_p: Option<usize>,
    pub oracle: OracleConfig,
}

impl ScanConfig {
    pub fn new(order: usize, js: Vec<usize>) -> Self {
        ScanConfig {
            order,
            js,
            domination: false,
            claw_p: None,
            oracle: OracleConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub j: usize,
    pub check: String,
    pub left: i64,
    pub right: i64,
}

/// Aggregate over every labeled graph of one order. All maps are ordered, so
/// the summary is identical whatever the thread count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub order: usize,
    pub graphs: u64,
    pub reports: u64,
    pub checks: u64,
    pub failures: u64,
    pub failures_by_check: BTreeMap<String, u64>,
    pub tightness: BTreeMap<String, u64>,
    /// All violations, sorted by graph6 then `j`.
    #[serde(skip)]
    pub violations: Vec<Violation>,
}

impl ScanSummary {
    fn merge(mut self, other: ScanSummary) -> ScanSummary {
        self.graphs += other.graphs;
        self.reports += other.reports;
        self.checks += other.checks;
        self.failures += other.failures;
        for (k, v) in other.failures_by_check {
            *self.failures_by_check.entry(k).or_default() += v;
        }
        for (k, v) in other.tightness {
            *self.tightness.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        self
    }

    fn absorb(&mut self, r: &BoundReport) {
        self.reports += 1;
        self.checks += r.checks.len() as u64;
        for c in &r.checks {
            if !c.pass {
                self.failures += 1;
                *self
                    .failures_by_check
                    .entry(c.name.to_string())
                    .or_default() += 1;
                self.violations.push(Violation {
                    graph6: r.graph6.clone(),
                    j: r.j,
                    check: c.name.to_string(),
                    left: c.left,
                    right: c.right,
                });
            }
        }
        let mut tally = |name: &str, hit: bool| {
            if hit {
                *self
                    .tightness
                    .entry(format!("j={}:{name}", r.j))
                    .or_default() += 1;
            }
        };
        if let Some(alpha) = r.alpha_j {
            tally("alpha_j==a_j", r.a_j == Some(alpha));
            tally("alpha_j==c_j", r.c_j == Some(alpha));
            tally("a_j<a", r.a_j < r.a);
            tally("chrom_bound<a_weak", r.chrom_bound < r.a_weak);
            tally("claw_free", r.claw_free == Some(true));
        }
        if let Some(gamma) = r.gamma_j {
            tally("gamma_j==z_j", r.z_j == Some(gamma));
            tally("gamma_j==w_j", r.w_j == Some(gamma));
        }
    }

    /// Fails with the first violation in sorted order.
    pub fn ensure_clean(&self) -> Result<(), HarnessError> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(HarnessError::ChainViolation {
                graph6: v.graph6.clone(),
                j: v.j,
                check: v.check.clone(),
                failures: self.failures as usize,
            }),
        }
    }
}

/// Runs every requested chain on every labeled graph of `cfg.order` vertices,
/// collecting violations instead of stopping at the first.
pub fn corpus_scan_collect(cfg: &ScanConfig) -> Result<ScanSummary, HarnessError> {
    let count = labeled_graph_count(cfg.order)?;
    let opts = ChainOptions {
        oracle: cfg.oracle,
        claw_p: cfg.claw_p,
        planar: None,
    };
    let mut summary = (0..count)
        .into_par_iter()
        .map(|mask| -> Result<ScanSummary, HarnessError> {
            let g = labeled_graph(cfg.order, mask)?;
            let mut s = ScanSummary {
                graphs: 1,
                ..Default::default()
            };
            for &j in &cfg.js {
                s.absorb(&verify_independence_chain(&g, j, &opts)?);
                if cfg.domination {
                    s.absorb(&verify_domination_chain(&g, j, &cfg.oracle)?);
                }
            }
            Ok(s)
        })
        .try_reduce(ScanSummary::default, |a, b| Ok(a.merge(b)))?;
    summary.order = cfg.order;
    summary.violations.sort();
    Ok(summary)
}

/// Like [`corpus_scan_collect`], but any violation is an error naming the
/// first offending graph.
pub fn corpus_scan(cfg: &ScanConfig) -> Result<ScanSummary, HarnessError> {
    let summary = corpus_scan_collect(cfg)?;
    summary.ensure_clean()?;
    Ok(summary)
}
