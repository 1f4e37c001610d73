//! Every labeled simple graph on `n` vertices.
//!
//! Bit `i` of an edge mask is the `i`-th vertex pair in graph6 order
//! `(0,1), (0,2), (1,2), (0,3), ...`, and graphs are produced by ascending mask.

use crate::error::OracleError;
use crate::graph::Graph;

pub const MAX_CORPUS_ORDER: usize = 7;

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn check(n: usize) -> Result<(), OracleError> {
    if n == 0 || n > MAX_CORPUS_ORDER {
        Err(OracleError::Capacity {
            operation: "enumerate_labeled_graphs",
            order: n,
            guard: MAX_CORPUS_ORDER,
        })
    } else {
        Ok(())
    }
}

/// `2^(n(n-1)/2)`.
pub fn labeled_graph_count(n: usize) -> Result<u64, OracleError> {
    check(n)?;
    Ok(1 << pair_count(n))
}

/// The graph with edge mask `mask`; lets callers partition the mask range.
pub fn labeled_graph(n: usize, mask: u64) -> Result<Graph, OracleError> {
    check(n)?;
    let mut adj = vec![0u64; n];
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, OracleError> {
    let count = labeled_graph_count(n)?;
    Ok((0..count).map(move |mask| labeled_graph(n, mask).expect("order checked above")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(6).unwrap().count(), 32768);
        assert_eq!(labeled_graph_count(7).unwrap(), 1 << 21);
        assert!(enumerate_labeled_graphs(8).is_err());
        assert!(enumerate_labeled_graphs(0).is_err());
    }

    #[test]
    fn each_graph_exactly_once_in_mask_order() {
        let graphs: Vec<_> = enumerate_labeled_graphs(5).unwrap().collect();
        let distinct: HashSet<_> = graphs.iter().cloned().collect();
        assert_eq!(distinct.len(), graphs.len());
        for (mask, g) in graphs.iter().enumerate() {
            assert_eq!(g.size(), (mask as u64).count_ones() as usize);
        }
        assert_eq!(graphs[0].size(), 0);
        assert!(graphs[1].has_edge(0, 1));
        assert!(graphs[4].has_edge(1, 2));
    }
}
