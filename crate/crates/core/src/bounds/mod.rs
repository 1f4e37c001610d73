//! Degree-sequence index bounds on `alpha_j` and `gamma_j`.
//!
//! Each bound below is one call to [`dsi_upper_index`] or [`dsi_lower_index`]
//! with its own doubled offset. The ones that need the optimal family `F`
//! take [`FStats`] from the oracle; the rest read only the degree sequence.

mod index;
mod rational;

pub use index::{dsi_lower_index, dsi_upper_index, OffsetFunction};
pub use rational::RationalBound;

use crate::error::BoundError;
use crate::graph::{Graph, PlanarCertificate};
use crate::oracle::{FStats, SetKind};

fn expect_stats(stats: &FStats, kind: SetKind, j: usize) -> Result<(), BoundError> {
    if stats.kind != kind || stats.j != j {
        Err(BoundError::MismatchedStats {
            expected: format!("{kind:?} with j={j}"),
            found: format!("{:?} with j={}", stats.kind, stats.j),
        })
    } else {
        Ok(())
    }
}

fn require_j(j: usize) -> Result<(), BoundError> {
    if j == 0 {
        Err(BoundError::Precondition("j >= 1".into()))
    } else {
        Ok(())
    }
}

/// Annihilation number `a(G)`: largest `k` with `d_1 + ... + d_k <= m`.
pub fn annihilation(g: &Graph) -> usize {
    dsi_upper_index(&g.degree_sequence(), |_| 0, g.size()).expect("k = 0 always qualifies")
}

/// Upper j-annihilation number `a_j`, offset `max over F of m[V-S] - m[S]`.
pub fn upper_j_annihilation(g: &Graph, j: usize, stats: &FStats) -> Result<usize, BoundError> {
    expect_stats(stats, SetKind::Independence, j)?;
    let off = 2 * stats.max_diff;
    dsi_upper_index(&g.degree_sequence(), move |_| off, g.size())
}

/// Lower j-annihilation number `c_j`, offset `min over F of m[V-S] - m[S]`.
pub fn lower_j_annihilation(g: &Graph, j: usize, stats: &FStats) -> Result<usize, BoundError> {
    expect_stats(stats, SetKind::Independence, j)?;
    let off = 2 * stats.min_diff;
    dsi_lower_index(&g.degree_sequence(), move |_| off, g.size())
}

/// Weak upper j-annihilation number `a'_j`: offset `-k(j-1)/2`.
///
/// Equals [`annihilation`] at `j = 1`.
pub fn weak_upper(g: &Graph, j: usize) -> Result<usize, BoundError> {
    require_j(j)?;
    let slack = (j - 1) as i64;
    dsi_upper_index(
        &g.degree_sequence(),
        move |k: usize| -(k as i64) * slack,
        g.size(),
    )
}

/// Weak lower annihilation number `c'`.
///
/// The offset is half the sum of `d - 1` over the `n - k` *largest* degrees,
/// taken literally; it does not depend on `j`.
pub fn weak_lower(g: &Graph) -> usize {
    let seq = g.degree_sequence();
    let n = seq.len();
    let off = |k: usize| seq.top_sum(n - k) as i64 - (n - k) as i64;
    dsi_lower_index(&seq, off, g.size()).expect("k = n always qualifies")
}

/// Upper index with offset `C(chi-1, 2) - k(j-1)/2`, where `chi` is `chi_j(G)`.
pub fn chromatic_dsi_bound(g: &Graph, j: usize, chi: usize) -> Result<usize, BoundError> {
    require_j(j)?;
    if chi == 0 {
        return Err(BoundError::Precondition("chi >= 1".into()));
    }
    let pairs2 = ((chi - 1) * chi.saturating_sub(2)) as i64;
    let slack = (j - 1) as i64;
    dsi_upper_index(
        &g.degree_sequence(),
        move |k: usize| pairs2 - k as i64 * slack,
        g.size(),
    )
}

/// `w(G)` for `K_{1,p}`-free graphs: offset
/// `(d_{k+1} + ... + d_n)/2 - (n-k)(p-1)/2`.
///
/// Computable for any graph; it bounds `a_1` only when `G` is `K_{1,p}`-free.
pub fn claw_w(g: &Graph, p: usize) -> Result<usize, BoundError> {
    if p < 3 {
        return Err(BoundError::Precondition("p >= 3".into()));
    }
    let seq = g.degree_sequence();
    let n = seq.len();
    let total = seq.total() as i64;
    let off = |k: usize| (total - seq.bottom_sum(k) as i64) - ((n - k) * (p - 1)) as i64;
    dsi_upper_index(&seq, off, g.size())
}

/// `(2n - 4) / (delta - j + 1)` for maximal planar graphs with `delta <= 5`.
pub fn planar_bound(
    g: &Graph,
    j: usize,
    _planar: PlanarCertificate,
) -> Result<RationalBound, BoundError> {
    let n = g.order();
    let delta = g.min_degree();
    if n < 3 || g.size() != 3 * n - 6 {
        return Err(BoundError::Precondition(format!(
            "m = 3n - 6 (n = {n}, m = {})",
            g.size()
        )));
    }
    if delta > 5 {
        return Err(BoundError::Precondition(format!(
            "delta <= 5 (delta = {delta})"
        )));
    }
    if j == 0 || j > delta {
        return Err(BoundError::Precondition(format!(
            "1 <= j <= delta (j = {j}, delta = {delta})"
        )));
    }
    Ok(RationalBound::new(2 * n as i64 - 4, (delta - j + 1) as i64))
}

/// `j(p-1)n / (j(p-1) + delta - (j-1))`, valid on `K_{1,p}`-free graphs with `delta >= j-1`.
pub fn k1p_free_bound(g: &Graph, j: usize, p: usize) -> Result<RationalBound, BoundError> {
    require_j(j)?;
    if p < 3 {
        return Err(BoundError::Precondition("p >= 3".into()));
    }
    let delta = g.min_degree();
    if delta + 1 < j {
        return Err(BoundError::Precondition(format!(
            "delta >= j - 1 (delta = {delta}, j = {j})"
        )));
    }
    let jp = (j * (p - 1)) as i64;
    Ok(RationalBound::new(
        jp * g.order() as i64,
        jp + delta as i64 - (j as i64 - 1),
    ))
}

/// `(p-1)n / (delta + p - 1)` for `K_{1,p}`-free graphs.
pub fn faudree_bound(g: &Graph, p: usize) -> Result<RationalBound, BoundError> {
    if p < 3 {
        return Err(BoundError::Precondition("p >= 3".into()));
    }
    Ok(RationalBound::new(
        ((p - 1) * g.order()) as i64,
        (g.min_degree() + p - 1) as i64,
    ))
}

/// `z_j`: upper index over the family of minimum j-dominating sets.
pub fn dom_upper_z(g: &Graph, j: usize, stats: &FStats) -> Result<usize, BoundError> {
    expect_stats(stats, SetKind::Domination, j)?;
    let off = 2 * stats.max_diff;
    dsi_upper_index(&g.degree_sequence(), move |_| off, g.size())
}

/// `w_j`: lower index over the family of minimum j-dominating sets.
pub fn dom_lower_w(g: &Graph, j: usize, stats: &FStats) -> Result<usize, BoundError> {
    expect_stats(stats, SetKind::Domination, j)?;
    let off = 2 * stats.min_diff;
    dsi_lower_index(&g.degree_sequence(), move |_| off, g.size())
}

/// `w'_j`: offset is half the sum of `d - j` over the `n - k` *smallest*
/// degrees (those not among the top `k`).
pub fn dom_weak_lower(g: &Graph, j: usize) -> Result<usize, BoundError> {
    require_j(j)?;
    let seq = g.degree_sequence();
    let n = seq.len();
    let off = |k: usize| seq.bottom_sum(n - k) as i64 - (j * (n - k)) as i64;
    dsi_lower_index(&seq, off, g.size())
}
