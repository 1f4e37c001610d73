use super::{alpha_j, OracleConfig};
use crate::error::OracleError;
use crate::graph::Graph;

/// Fewest j-independent parts that partition `V`.
///
/// Iterative deepening from `ceil(n / alpha_j)`; vertices are placed in index
/// order and a vertex may open at most one new part, which removes the
/// relabelings of part indices from the search.
pub fn chi_j(g: &Graph, j: usize, cfg: &OracleConfig) -> Result<usize, OracleError> {
    if j == 0 {
        return Err(OracleError::ZeroJ);
    }
    if g.order() > cfg.chromatic_guard {
        return Err(OracleError::Capacity {
            operation: "chi_j",
            order: g.order(),
            guard: cfg.chromatic_guard,
        });
    }
    let n = g.order();
    let alpha = alpha_j(
        g,
        j,
        &OracleConfig {
            optimum_guard: cfg.chromatic_guard,
            ..*cfg
        },
    )?
    .value;
    let mut parts = Vec::with_capacity(n);
    for k in n.div_ceil(alpha)..=n {
        parts.clear();
        if place(g, j, 0, k, &mut parts) {
            return Ok(k);
        }
    }
    unreachable!("singletons always form a partition")
}

fn place(g: &Graph, j: usize, v: usize, limit: usize, parts: &mut Vec<u64>) -> bool {
    if v == g.order() {
        return true;
    }
    let rows = g.rows();
    let nbrs = rows[v];
    for i in 0..parts.len() {
        let part = parts[i];
        if ((nbrs & part).count_ones() as usize) >= j {
            continue;
        }
        let mut touched = nbrs & part;
        let mut ok = true;
        while touched != 0 {
            let u = touched.trailing_zeros() as usize;
            touched &= touched - 1;
            if (rows[u] & part).count_ones() as usize + 1 >= j {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        parts[i] |= 1 << v;
        if place(g, j, v + 1, limit, parts) {
            return true;
        }
        parts[i] = part;
    }
    if parts.len() < limit {
        parts.push(1 << v);
        if place(g, j, v + 1, limit, parts) {
            return true;
        }
        parts.pop();
    }
    false
}
