//! The extremal-index primitive every bound is built from.
//!
//! An upper index is the largest `k` whose `k` smallest degrees, plus a
//! `k`-dependent offset, stay at or below `m(G)`; a lower index is the smallest
//! `k` whose `k` largest degrees plus offset reach `m(G)`. Inequalities are
//! evaluated with both sides doubled so half-integer offsets stay integral.

use crate::error::BoundError;
use crate::graph::DegreeSequence;

/// Offset term of an index inequality, already multiplied by two.
pub trait OffsetFunction {
    fn doubled(&self, k: usize) -> i64;
}

impl<F: Fn(usize) -> i64> OffsetFunction for F {
    fn doubled(&self, k: usize) -> i64 {
        self(k)
    }
}

fn check_consistent(seq: &DegreeSequence, m: usize) -> Result<(), BoundError> {
    if seq.total() != 2 * m as u64 {
        Err(BoundError::InconsistentSequence {
            total: seq.total(),
            m,
        })
    } else {
        Ok(())
    }
}

/// `max { k in 0..=n : 2·(d_1 + ... + d_k) + offset2(k) <= 2m }`.
///
/// Every `k` is tested; offsets need not be monotone.
pub fn dsi_upper_index<F: OffsetFunction>(
    seq: &DegreeSequence,
    offset2: F,
    m: usize,
) -> Result<usize, BoundError> {
    check_consistent(seq, m)?;
    let target = 2 * m as i64;
    (0..=seq.len())
        .rev()
        .find(|&k| 2 * seq.bottom_sum(k) as i64 + offset2.doubled(k) <= target)
        .ok_or(BoundError::NoIndex { n: seq.len() })
}

/// `min { k in 0..=n : 2·(d_n + ... + d_{n-k+1}) + offset2(k) >= 2m }`.
pub fn dsi_lower_index<F: OffsetFunction>(
    seq: &DegreeSequence,
    offset2: F,
    m: usize,
) -> Result<usize, BoundError> {
    check_consistent(seq, m)?;
    let target = 2 * m as i64;
    (0..=seq.len())
        .find(|&k| 2 * seq.top_sum(k) as i64 + offset2.doubled(k) >= target)
        .ok_or(BoundError::NoIndex { n: seq.len() })
}
