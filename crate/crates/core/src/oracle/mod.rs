//! Exact, exhaustive computation of the invariants the bounds are measured
//! against. Everything here is a subset scan over machine words, so every
//! entry point enforces a configurable order guard instead of running for
//! hours on a graph that is too large.

mod chromatic;
mod corpus;

pub use chromatic::chi_j;
pub use corpus::{enumerate_labeled_graphs, labeled_graph, labeled_graph_count, MAX_CORPUS_ORDER};

use crate::error::OracleError;
use crate::graph::{Graph, VertexSet};
use serde::Serialize;

/// Per-operation order limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Single optimum (`alpha_j`, `gamma_j`).
    pub optimum_guard: usize,
    /// Full enumeration of the optimal family and of annihilating sets.
    pub family_guard: usize,
    /// `chi_j`.
    pub chromatic_guard: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            optimum_guard: 20,
            family_guard: 16,
            chromatic_guard: 16,
        }
    }
}

impl OracleConfig {
    /// Guards large enough for every named construction used in the example catalog.
    pub fn wide() -> Self {
        OracleConfig {
            optimum_guard: 24,
            family_guard: 24,
            chromatic_guard: 24,
        }
    }

    fn check(&self, operation: &'static str, g: &Graph, guard: usize) -> Result<(), OracleError> {
        if g.order() > guard {
            Err(OracleError::Capacity {
                operation,
                order: g.order(),
                guard,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    /// Maximum j-independent sets.
    Independence,
    /// Minimum j-dominating sets.
    Domination,
}

/// Statistics over the family `F` of all optimal sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FStats {
    pub kind: SetKind,
    pub j: usize,
    pub optimum: usize,
    /// `max over F of m[V-S] - m[S]`.
    pub max_diff: i64,
    /// `min over F of m[V-S] - m[S]`.
    pub min_diff: i64,
    pub family_size: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    pub witness: VertexSet,
    pub stats: Option<FStats>,
}

/// Every vertex of `s` has fewer than `j` neighbors inside `s`.
pub fn is_j_independent(g: &Graph, s: VertexSet, j: usize) -> bool {
    s.iter().all(|v| (g.neighbors(v).intersection(s)).len() < j)
}

/// Every vertex outside `s` has at least `j` neighbors inside `s`.
pub fn is_j_dominating(g: &Graph, s: VertexSet, j: usize) -> bool {
    s.complement(g.order())
        .iter()
        .all(|v| g.neighbors(v).intersection(s).len() >= j)
}

fn admits(g: &Graph, s: VertexSet, j: usize, kind: SetKind) -> bool {
    match kind {
        SetKind::Independence => is_j_independent(g, s, j),
        SetKind::Domination => is_j_dominating(g, s, j),
    }
}

/// All `k`-subsets of `0..n` in increasing numeric order (Gosper's hack).
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit = 1u64 << n;
    let mut next = if k > n {
        None
    } else {
        Some(if k == 0 { 0 } else { (1u64 << k) - 1 })
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < limit).then_some(succ)
        };
        Some(VertexSet(cur))
    })
}

/// Scans sizes in the direction that reaches the optimum first.
fn optimum(g: &Graph, j: usize, kind: SetKind) -> (usize, VertexSet) {
    let n = g.order();
    let sizes: Box<dyn Iterator<Item = usize>> = match kind {
        SetKind::Independence => Box::new((0..=n).rev()),
        SetKind::Domination => Box::new(0..=n),
    };
    for k in sizes {
        if let Some(s) = k_subsets(n, k).find(|&s| admits(g, s, j, kind)) {
            return (k, s);
        }
    }
    unreachable!("the empty set is j-independent and V is j-dominating")
}

fn solve(
    g: &Graph,
    j: usize,
    kind: SetKind,
    cfg: &OracleConfig,
    operation: &'static str,
) -> Result<OracleResult, OracleError> {
    if j == 0 {
        return Err(OracleError::ZeroJ);
    }
    cfg.check(operation, g, cfg.optimum_guard)?;
    let (value, witness) = optimum(g, j, kind);
    Ok(OracleResult {
        value,
        witness,
        stats: None,
    })
}

/// `alpha_j(G)`: order of a largest j-independent set.
pub fn alpha_j(g: &Graph, j: usize, cfg: &OracleConfig) -> Result<OracleResult, OracleError> {
    solve(g, j, SetKind::Independence, cfg, "alpha_j")
}

/// `gamma_j(G)`: order of a smallest j-dominating set.
pub fn gamma_j(g: &Graph, j: usize, cfg: &OracleConfig) -> Result<OracleResult, OracleError> {
    solve(g, j, SetKind::Domination, cfg, "gamma_j")
}

/// Optimum, witness, and the extremal edge differences over every optimal set.
///
/// The witness is the first optimal set in subset order.
pub fn optimum_with_stats(
    g: &Graph,
    j: usize,
    kind: SetKind,
    cfg: &OracleConfig,
) -> Result<OracleResult, OracleError> {
    if j == 0 {
        return Err(OracleError::ZeroJ);
    }
    cfg.check("f_stats", g, cfg.family_guard)?;
    let n = g.order();
    let (opt, witness) = optimum(g, j, kind);
    let mut max_diff = i64::MIN;
    let mut min_diff = i64::MAX;
    let mut family_size = 0u64;
    for s in k_subsets(n, opt).filter(|&s| admits(g, s, j, kind)) {
        let diff = g.induced_edge_count(s.complement(n)) as i64 - g.induced_edge_count(s) as i64;
        max_diff = max_diff.max(diff);
        min_diff = min_diff.min(diff);
        family_size += 1;
    }
    Ok(OracleResult {
        value: opt,
        witness,
        stats: Some(FStats {
            kind,
            j,
            optimum: opt,
            max_diff,
            min_diff,
            family_size,
        }),
    })
}

pub fn f_stats(
    g: &Graph,
    j: usize,
    kind: SetKind,
    cfg: &OracleConfig,
) -> Result<FStats, OracleError> {
    Ok(optimum_with_stats(g, j, kind, cfg)?
        .stats
        .expect("optimum_with_stats always fills stats"))
}

/// No vertex has `p` pairwise non-adjacent neighbors.
pub fn is_k1p_free(g: &Graph, p: usize) -> Result<bool, OracleError> {
    if p < 2 {
        return Err(OracleError::StarTooSmall);
    }
    Ok((0..g.order()).all(|v| !has_independent_subset(g, g.neighbors(v).bits(), p)))
}

fn has_independent_subset(g: &Graph, candidates: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < need {
        return false;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & (candidates - 1);
    has_independent_subset(g, rest & !g.rows()[v], need - 1)
        || has_independent_subset(g, rest, need)
}

/// `sum of deg over A + max_diff <= m`.
pub fn is_upper_annihilating(g: &Graph, a: VertexSet, stats: &FStats) -> bool {
    g.degree_sum(a) as i64 + stats.max_diff <= g.size() as i64
}

/// `sum of deg over A + min_diff >= m`.
pub fn is_lower_annihilating(g: &Graph, a: VertexSet, stats: &FStats) -> bool {
    g.degree_sum(a) as i64 + stats.min_diff >= g.size() as i64
}

/// Largest upper annihilating set, by scanning every vertex subset.
pub fn max_upper_annihilating_size(
    g: &Graph,
    stats: &FStats,
    cfg: &OracleConfig,
) -> Result<usize, OracleError> {
    cfg.check("max_upper_annihilating_size", g, cfg.family_guard)?;
    Ok(all_subsets(g)
        .filter(|&s| is_upper_annihilating(g, s, stats))
        .map(VertexSet::len)
        .max()
        .expect("the empty set is upper annihilating"))
}

/// Smallest lower annihilating set, by scanning every vertex subset.
pub fn min_lower_annihilating_size(
    g: &Graph,
    stats: &FStats,
    cfg: &OracleConfig,
) -> Result<usize, OracleError> {
    cfg.check("min_lower_annihilating_size", g, cfg.family_guard)?;
    Ok(all_subsets(g)
        .filter(|&s| is_lower_annihilating(g, s, stats))
        .map(VertexSet::len)
        .min()
        .expect("V is lower annihilating"))
}

fn all_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    (0..=VertexSet::full(g.order()).bits()).map(VertexSet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn fam(s: &str) -> Graph {
        s.parse::<Family>().unwrap().build().unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    /// Independent reference: scan every subset, no size ordering.
    fn brute_optimum(g: &Graph, j: usize, kind: SetKind) -> usize {
        let sizes = all_subsets(g)
            .filter(|&s| admits(g, s, j, kind))
            .map(VertexSet::len);
        match kind {
            SetKind::Independence => sizes.max().unwrap(),
            SetKind::Domination => sizes.min().unwrap(),
        }
    }

    #[test]
    fn k_subsets_counts() {
        for n in 0..=10usize {
            for k in 0..=n + 1 {
                let subsets: Vec<_> = k_subsets(n, k).collect();
                let binom = if k > n {
                    0
                } else {
                    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
                };
                assert_eq!(subsets.len(), binom, "n={n} k={k}");
                assert!(subsets.iter().all(|s| s.len() == k && s.bits() >> n == 0));
                assert!(subsets.windows(2).all(|w| w[0] < w[1]));
            }
        }
        assert_eq!(k_subsets(63, 63).count(), 1);
    }

    #[test]
    fn membership_predicates() {
        let c5 = fam("cycle:5");
        let k4 = fam("complete:4");
        assert!(is_j_independent(&c5, set(&[0, 2]), 1));
        assert!(is_j_independent(&c5, set(&[0, 1, 3]), 2));
        assert!(!is_j_independent(&k4, set(&[0, 1]), 1));
        assert!(is_j_dominating(&k4, k4.vertices(), 7));
        assert!(is_j_dominating(&c5, set(&[0, 1, 3]), 2));
        assert!(!is_j_dominating(&c5, set(&[0]), 1));
    }

    #[test]
    fn small_optima() {
        let c5 = fam("cycle:5");
        assert_eq!(alpha_j(&c5, 1, &cfg()).unwrap().value, 2);
        assert_eq!(gamma_j(&c5, 1, &cfg()).unwrap().value, 2);
        let g2 = gamma_j(&c5, 2, &cfg()).unwrap();
        assert_eq!(g2.value, 3);
        assert!(is_j_dominating(&c5, g2.witness, 2));
        assert_eq!(
            alpha_j(&fam("clique_union_join:2"), 2, &cfg())
                .unwrap()
                .value,
            4
        );
        assert_eq!(alpha_j(&fam("dodecahedron"), 1, &cfg()).unwrap().value, 8);
    }

    #[test]
    fn zero_j_and_guards() {
        let c5 = fam("cycle:5");
        assert_eq!(alpha_j(&c5, 0, &cfg()), Err(OracleError::ZeroJ));
        let big = fam("path:21");
        assert!(matches!(
            alpha_j(&big, 1, &cfg()),
            Err(OracleError::Capacity { guard: 20, .. })
        ));
        assert!(f_stats(&fam("path:17"), 1, SetKind::Independence, &cfg()).is_err());
        let relaxed = OracleConfig {
            optimum_guard: 21,
            ..cfg()
        };
        assert_eq!(alpha_j(&big, 1, &relaxed).unwrap().value, 11);
    }

    #[test]
    fn stats_examples() {
        let s = f_stats(&fam("complete:4"), 1, SetKind::Independence, &cfg()).unwrap();
        assert_eq!(
            (s.optimum, s.max_diff, s.min_diff, s.family_size),
            (1, 3, 3, 4)
        );

        let e2k6 = Graph::empty(2).unwrap().union(&fam("complete:6")).unwrap();
        let s = f_stats(&e2k6, 1, SetKind::Independence, &cfg()).unwrap();
        assert_eq!(
            (s.optimum, s.max_diff, s.min_diff, s.family_size),
            (3, 10, 10, 6)
        );

        let split = fam("complete_split:4:2");
        let s = f_stats(&split, 1, SetKind::Independence, &cfg()).unwrap();
        assert_eq!(
            (s.optimum, s.max_diff, s.min_diff, s.family_size),
            (4, 1, 1, 1)
        );

        let s = f_stats(&fam("cycle:5"), 1, SetKind::Independence, &cfg()).unwrap();
        assert_eq!((s.optimum, s.min_diff, s.family_size), (2, 1, 5));

        let s = f_stats(&fam("complete:4"), 1, SetKind::Domination, &cfg()).unwrap();
        assert_eq!(
            (s.optimum, s.max_diff, s.min_diff, s.family_size),
            (1, 3, 3, 4)
        );
    }

    #[test]
    fn k1p_freeness() {
        assert!(is_k1p_free(&fam("cycle:5"), 3).unwrap());
        let star = Family::CompleteSplit {
            empty: 3,
            clique: 1,
        }
        .build()
        .unwrap();
        assert!(!is_k1p_free(&star, 3).unwrap());
        assert!(is_k1p_free(&star, 4).unwrap());
        assert!(!is_k1p_free(&fam("double_hub_wheel:2"), 3).unwrap());
        assert!(is_k1p_free(&fam("complete:5"), 2).unwrap());
        assert_eq!(is_k1p_free(&star, 1), Err(OracleError::StarTooSmall));
    }

    #[test]
    fn annihilating_sets() {
        let k4 = fam("complete:4");
        let s = f_stats(&k4, 1, SetKind::Independence, &cfg()).unwrap();
        assert!(is_upper_annihilating(&k4, set(&[2]), &s));
        assert!(!is_upper_annihilating(&k4, set(&[0, 3]), &s));
        assert!(is_upper_annihilating(&k4, VertexSet::EMPTY, &s));
        assert_eq!(max_upper_annihilating_size(&k4, &s, &cfg()).unwrap(), 1);
        assert_eq!(min_lower_annihilating_size(&k4, &s, &cfg()).unwrap(), 1);

        let e2k6 = Graph::empty(2).unwrap().union(&fam("complete:6")).unwrap();
        let s = f_stats(&e2k6, 1, SetKind::Independence, &cfg()).unwrap();
        assert_eq!(max_upper_annihilating_size(&e2k6, &s, &cfg()).unwrap(), 3);

        let prism = fam("matched_cliques:3");
        let s = f_stats(&prism, 1, SetKind::Independence, &cfg()).unwrap();
        assert_eq!(max_upper_annihilating_size(&prism, &s, &cfg()).unwrap(), 2);
    }

    #[test]
    fn corpus_properties_up_to_five() {
        for n in 1..=5 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                let delta = g.max_degree();
                let mut prev_alpha = 0;
                let mut prev_gamma = 0;
                for j in 1..=4 {
                    let a = alpha_j(&g, j, &cfg()).unwrap();
                    assert!(is_j_independent(&g, a.witness, j));
                    assert_eq!(a.witness.len(), a.value);
                    assert_eq!(a.value, brute_optimum(&g, j, SetKind::Independence));
                    assert!(a.value >= prev_alpha);
                    if j > delta {
                        assert_eq!(a.value, n);
                    }
                    prev_alpha = a.value;

                    let d = gamma_j(&g, j, &cfg()).unwrap();
                    assert!(is_j_dominating(&g, d.witness, j));
                    assert_eq!(d.value, brute_optimum(&g, j, SetKind::Domination));
                    assert!(d.value >= prev_gamma && d.value <= n);
                    prev_gamma = d.value;

                    let s = f_stats(&g, j, SetKind::Independence, &cfg()).unwrap();
                    let m = g.size() as i64;
                    assert!(s.family_size >= 1);
                    assert!(s.min_diff <= s.max_diff && s.max_diff <= m && s.min_diff >= -m);
                    for opt in k_subsets(n, s.optimum).filter(|&x| is_j_independent(&g, x, j)) {
                        assert!(2 * g.induced_edge_count(opt) <= s.optimum * (j - 1));
                        assert!(n - s.optimum <= g.degree_sum(opt));
                    }
                }
            }
        }
    }
}
