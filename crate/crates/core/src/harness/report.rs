use crate::bounds::{
    self, annihilation, chromatic_dsi_bound, claw_w, dom_lower_w, dom_upper_z, dom_weak_lower,
    faudree_bound, k1p_free_bound, lower_j_annihilation, upper_j_annihilation, weak_lower,
    weak_upper, RationalBound,
};
use crate::error::HarnessError;
use crate::graph::{to_graph6, Graph, PlanarCertificate};
use crate::oracle::{
    chi_j, is_j_dominating, is_j_independent, is_k1p_free, max_upper_annihilating_size,
    min_lower_annihilating_size, optimum_with_stats, OracleConfig, SetKind,
};
use serde::Serialize;

/// One comparison in an inequality chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub name: &'static str,
    pub left: i64,
    pub right: i64,
    pub pass: bool,
}

impl ChainCheck {
    fn le(name: &'static str, left: impl Into<i64>, right: impl Into<i64>) -> Self {
        let (left, right) = (left.into(), right.into());
        ChainCheck {
            name,
            left,
            right,
            pass: left <= right,
        }
    }

    fn eq(name: &'static str, left: impl Into<i64>, right: impl Into<i64>) -> Self {
        let (left, right) = (left.into(), right.into());
        ChainCheck {
            name,
            left,
            right,
            pass: left == right,
        }
    }
}

/// Every invariant and bound computed for one `(graph, j, p)` triple.
///
/// Independence and domination runs fill disjoint field groups; absent
/// fields are omitted from the JSON form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub j: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_weak: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_weak: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chrom_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claw_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claw_w: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faudree: Option<RationalBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1p_bound: Option<RationalBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub planar_bound: Option<RationalBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_weak: Option<usize>,
    pub checks: Vec<ChainCheck>,
}

impl BoundReport {
    fn new(g: &Graph, j: usize) -> Self {
        BoundReport {
            graph6: to_graph6(g),
            n: g.order(),
            m: g.size(),
            j,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ChainCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Optional extras for [`verify_independence_chain`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ChainOptions {
    pub oracle: OracleConfig,
    /// Check the `K_{1,p}`-free chain when the graph is `K_{1,p}`-free.
    pub claw_p: Option<usize>,
    /// Check the planar bound when its degree/size preconditions hold.
    pub planar: Option<PlanarCertificate>,
}

/// Computes every independence quantity and checks
/// `c' <= c_j <= alpha_j <= a_j <= chromatic bound <= a'_j`, `a'_1 = a`,
/// and that the brute-force extremal annihilating-set orders equal `a_j`, `c_j`.
pub fn verify_independence_chain(
    g: &Graph,
    j: usize,
    opts: &ChainOptions,
) -> Result<BoundReport, HarnessError> {
    let cfg = &opts.oracle;
    let solved = optimum_with_stats(g, j, SetKind::Independence, cfg)?;
    let stats = solved.stats.expect("stats requested");
    let alpha = solved.value;
    let a = annihilation(g);
    let a_j = upper_j_annihilation(g, j, &stats)?;
    let c_j = lower_j_annihilation(g, j, &stats)?;
    let a_weak = weak_upper(g, j)?;
    let c_weak = weak_lower(g);
    let chi = chi_j(g, j, cfg)?;
    let chrom = chromatic_dsi_bound(g, j, chi)?;
    let max_upper = max_upper_annihilating_size(g, &stats, cfg)?;
    let min_lower = min_lower_annihilating_size(g, &stats, cfg)?;

    let mut r = BoundReport::new(g, j);
    r.p = opts.claw_p;
    r.alpha_j = Some(alpha);
    r.a = Some(a);
    r.a_j = Some(a_j);
    r.c_j = Some(c_j);
    r.a_weak = Some(a_weak);
    r.c_weak = Some(c_weak);
    r.chrom_bound = Some(chrom);
    r.chi_j = Some(chi);

    let witness_ok = is_j_independent(g, solved.witness, j) && solved.witness.len() == alpha;
    let n = |x: usize| x as i64;
    r.checks = vec![
        ChainCheck::eq("witness_valid", witness_ok as i64, 1),
        ChainCheck::le("c_weak<=c_j", n(c_weak), n(c_j)),
        ChainCheck::le("c_j<=alpha_j", n(c_j), n(alpha)),
        ChainCheck::le("alpha_j<=a_j", n(alpha), n(a_j)),
        ChainCheck::le("a_j<=chrom_bound", n(a_j), n(chrom)),
        ChainCheck::le("chrom_bound<=a_weak", n(chrom), n(a_weak)),
        ChainCheck::eq("a_weak_1==a", n(weak_upper(g, 1)?), n(a)),
        ChainCheck::eq("max_upper_annihilating==a_j", n(max_upper), n(a_j)),
        ChainCheck::eq("min_lower_annihilating==c_j", n(min_lower), n(c_j)),
    ];

    if let Some(p) = opts.claw_p {
        let free = is_k1p_free(g, p)?;
        r.claw_free = Some(free);
        let w = claw_w(g, p)?;
        r.claw_w = Some(w);
        let faudree = faudree_bound(g, p)?;
        r.faudree = Some(faudree);
        let k1p = k1p_free_bound(g, j, p).ok();
        r.k1p_bound = k1p;
        if free {
            if j == 1 {
                r.checks.extend([
                    ChainCheck::le("alpha<=a_1", n(alpha), n(a_j)),
                    ChainCheck::le("a_1<=claw_w", n(a_j), n(w)),
                    ChainCheck::le("claw_w<=faudree_floor", n(w), faudree.floor()),
                ]);
            }
            if let Some(b) = k1p {
                r.checks
                    .push(ChainCheck::le("alpha_j<=k1p_floor", n(alpha), b.floor()));
            }
        }
    }

    if let Some(cert) = opts.planar {
        if let Ok(b) = bounds::planar_bound(g, j, cert) {
            r.planar_bound = Some(b);
            r.checks
                .push(ChainCheck::le("alpha_j<=planar_floor", n(alpha), b.floor()));
        }
    }
    Ok(r)
}

/// Computes `gamma_j`, `z_j`, `w_j`, `w'_j` and checks
/// `w_j <= gamma_j <= z_j` and `w'_j <= gamma_j`.
pub fn verify_domination_chain(
    g: &Graph,
    j: usize,
    cfg: &OracleConfig,
) -> Result<BoundReport, HarnessError> {
    let solved = optimum_with_stats(g, j, SetKind::Domination, cfg)?;
    let stats = solved.stats.expect("stats requested");
    let gamma = solved.value;
    let z = dom_upper_z(g, j, &stats)?;
    let w = dom_lower_w(g, j, &stats)?;
    let w_weak = dom_weak_lower(g, j)?;

    let mut r = BoundReport::new(g, j);
    r.gamma_j = Some(gamma);
    r.z_j = Some(z);
    r.w_j = Some(w);
    r.w_weak = Some(w_weak);
    let witness_ok = is_j_dominating(g, solved.witness, j) && solved.witness.len() == gamma;
    let n = |x: usize| x as i64;
    r.checks = vec![
        ChainCheck::eq("witness_valid", witness_ok as i64, 1),
        ChainCheck::le("w_j<=gamma_j", n(w), n(gamma)),
        ChainCheck::le("gamma_j<=z_j", n(gamma), n(z)),
        ChainCheck::le("w_weak_j<=gamma_j", n(w_weak), n(gamma)),
    ];
    Ok(r)
}
