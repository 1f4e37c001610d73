//! Named graph families with fixed vertex labelings.
//!
//! Every generator lays its vertices out in a documented order so the graph6
//! output of a family is stable across releases. Constructions with a known
//! order, size or degree profile check it before returning.

use super::{Graph, VertexSet, MAX_ORDER};
use crate::error::GraphError;
use std::fmt;
use std::str::FromStr;

/// Dodecahedral graph: a 20-vertex, 3-regular planar graph.
const DODECAHEDRON_EDGES: [(usize, usize); 30] = [
    (0, 1),
    (0, 10),
    (0, 19),
    (1, 2),
    (1, 8),
    (2, 3),
    (2, 6),
    (3, 4),
    (3, 19),
    (4, 5),
    (4, 17),
    (5, 6),
    (5, 15),
    (6, 7),
    (7, 8),
    (7, 14),
    (8, 9),
    (9, 10),
    (9, 13),
    (10, 11),
    (11, 12),
    (11, 18),
    (12, 13),
    (12, 16),
    (13, 14),
    (14, 15),
    (15, 16),
    (16, 17),
    (17, 18),
    (18, 19),
];

/// Graph families reachable by name, e.g. `matched_cliques:3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `K_r`.
    Complete(usize),
    /// `E_r`.
    Empty(usize),
    /// `P_r`, vertices in path order.
    Path(usize),
    /// `C_r`, vertices in cyclic order.
    Cycle(usize),
    /// `E_p + K_q`: empty part on `0..p`, clique on `p..p+q`.
    CompleteSplit {
        empty: usize,
        clique: usize,
    },
    /// Two copies of `K_p` on `0..p` and `p..2p` with the matching `i ~ p+i`.
    MatchedCliques(usize),
    /// `(j K_j) + (j K_j)`: two sides of `j` disjoint `K_j`'s each, sides
    /// fully joined. Side one is `0..j²`, cliques in consecutive blocks.
    CliqueUnionJoin(usize),
    /// `(p K_{p²}) + ((p+1) K_j)`: the large cliques first, then the small ones.
    CliqueFamilyJoin {
        p: usize,
        j: usize,
    },
    /// `K_q` on `0..q`, followed by `q` copies of `(p K_r) + ((p+1) K_j)`;
    /// copy `i` is fully joined to hub vertex `i`.
    HubAttachedCopies {
        p: usize,
        q: usize,
        r: usize,
        j: usize,
    },
    /// Cycle on `0..3p`, plus hubs `3p` and `3p+1` each joined to the whole cycle.
    DoubleHubWheel(usize),
    /// Maximal planar graph with minimum degree 5 built from three paths:
    /// `a_1..a_r` on `0..r`, `b_1..b_r` on `r..2r`, `c_1..c_{r-1}` on
    /// `2r..3r-1`, then `u = 3r-1` over the `a` path and `v = 3r` under the
    /// `b` path.
    Delta5Triangulation(usize),
    Dodecahedron,
}

/// Token attesting that a graph is planar by construction.
///
/// Only the generators of planar families issue one; callers holding a planar
/// graph from elsewhere can vouch for it with [`PlanarCertificate::vouch`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlanarCertificate(());

impl PlanarCertificate {
    pub fn vouch() -> Self {
        PlanarCertificate(())
    }
}

struct Builder {
    adj: Vec<u64>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { adj: vec![0; n] }
    }

    fn edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn clique(&mut self, start: usize, len: usize) {
        for v in start..start + len {
            for u in start..v {
                self.edge(u, v);
            }
        }
    }

    fn path(&mut self, start: usize, len: usize) {
        for v in start + 1..start + len {
            self.edge(v - 1, v);
        }
    }

    fn join_sets(&mut self, a: VertexSet, b: VertexSet) {
        for u in a.iter() {
            for v in b.iter() {
                self.edge(u, v);
            }
        }
    }

    fn finish(self) -> Graph {
        Graph::from_rows(self.adj)
    }
}

fn range_set(start: usize, len: usize) -> VertexSet {
    VertexSet(VertexSet::full(len).0 << start)
}

fn check_order(family: &str, n: usize) -> Result<(), GraphError> {
    if n == 0 || n > MAX_ORDER {
        Err(GraphError::param(
            family,
            format!("order {n} outside 1..={MAX_ORDER}"),
        ))
    } else {
        Ok(())
    }
}

fn is_regular(g: &Graph, d: usize) -> bool {
    (0..g.order()).all(|v| g.degree(v) == d)
}

/// `(blocks K_size)` starting at `start`.
fn clique_blocks(b: &mut Builder, start: usize, blocks: usize, size: usize) {
    for i in 0..blocks {
        b.clique(start + i * size, size);
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::CompleteSplit { .. } => "complete_split",
            Family::MatchedCliques(_) => "matched_cliques",
            Family::CliqueUnionJoin(_) => "clique_union_join",
            Family::CliqueFamilyJoin { .. } => "clique_family_join",
            Family::HubAttachedCopies { .. } => "hub_attached_copies",
            Family::DoubleHubWheel(_) => "double_hub_wheel",
            Family::Delta5Triangulation(_) => "delta5_triangulation",
            Family::Dodecahedron => "dodecahedron",
        }
    }

    fn params(&self) -> Vec<usize> {
        match *self {
            Family::Complete(r)
            | Family::Empty(r)
            | Family::Path(r)
            | Family::Cycle(r)
            | Family::MatchedCliques(r)
            | Family::CliqueUnionJoin(r)
            | Family::DoubleHubWheel(r)
            | Family::Delta5Triangulation(r) => vec![r],
            Family::CompleteSplit { empty, clique } => vec![empty, clique],
            Family::CliqueFamilyJoin { p, j } => vec![p, j],
            Family::HubAttachedCopies { p, q, r, j } => vec![p, q, r, j],
            Family::Dodecahedron => vec![],
        }
    }

    /// Planarity certificate for families that are planar for every valid parameter.
    pub fn planar_certificate(&self) -> Option<PlanarCertificate> {
        match *self {
            Family::Empty(_)
            | Family::Path(_)
            | Family::Cycle(_)
            | Family::DoubleHubWheel(_)
            | Family::Delta5Triangulation(_)
            | Family::Dodecahedron => Some(PlanarCertificate(())),
            Family::Complete(r) if r <= 4 => Some(PlanarCertificate(())),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        let name = self.name();
        let g = match *self {
            Family::Complete(r) => {
                check_order(name, r)?;
                let mut b = Builder::new(r);
                b.clique(0, r);
                b.finish()
            }
            Family::Empty(r) => {
                check_order(name, r)?;
                Builder::new(r).finish()
            }
            Family::Path(r) => {
                check_order(name, r)?;
                let mut b = Builder::new(r);
                b.path(0, r);
                b.finish()
            }
            Family::Cycle(r) => {
                if r < 3 {
                    return Err(GraphError::param(name, "a cycle needs at least 3 vertices"));
                }
                check_order(name, r)?;
                let mut b = Builder::new(r);
                b.path(0, r);
                b.edge(r - 1, 0);
                b.finish()
            }
            Family::CompleteSplit { empty, clique } => {
                check_order(name, empty + clique)?;
                let mut b = Builder::new(empty + clique);
                b.clique(empty, clique);
                b.join_sets(range_set(0, empty), range_set(empty, clique));
                b.finish()
            }
            Family::MatchedCliques(p) => {
                if p < 1 {
                    return Err(GraphError::param(name, "p must be at least 1"));
                }
                check_order(name, 2 * p)?;
                let mut b = Builder::new(2 * p);
                b.clique(0, p);
                b.clique(p, p);
                for i in 0..p {
                    b.edge(i, p + i);
                }
                let g = b.finish();
                assert!(is_regular(&g, p) && g.size() == p * p);
                g
            }
            Family::CliqueUnionJoin(j) => {
                if j < 1 {
                    return Err(GraphError::param(name, "j must be at least 1"));
                }
                let side = j * j;
                check_order(name, 2 * side)?;
                let mut b = Builder::new(2 * side);
                clique_blocks(&mut b, 0, j, j);
                clique_blocks(&mut b, side, j, j);
                b.join_sets(range_set(0, side), range_set(side, side));
                let g = b.finish();
                assert!(is_regular(&g, j * j + j - 1));
                g
            }
            Family::CliqueFamilyJoin { p, j } => {
                if p < 1 || j < 1 {
                    return Err(GraphError::param(name, "p and j must be at least 1"));
                }
                if j >= p * p {
                    return Err(GraphError::param(name, "requires j < p²"));
                }
                let large = p * p * p;
                let small = j * (p + 1);
                check_order(name, large + small)?;
                let mut b = Builder::new(large + small);
                clique_blocks(&mut b, 0, p, p * p);
                clique_blocks(&mut b, large, p + 1, j);
                b.join_sets(range_set(0, large), range_set(large, small));
                let g = b.finish();
                assert!((0..large).all(|v| g.degree(v) == p * p + p * j + j - 1));
                assert!((large..large + small).all(|v| g.degree(v) == large + j - 1));
                g
            }
            Family::HubAttachedCopies { p, q, r, j } => {
                if p < 1 || q < 1 || r < 1 || j < 1 {
                    return Err(GraphError::param(name, "all parameters must be at least 1"));
                }
                let copy = p * r + (p + 1) * j;
                let n = q * (1 + copy);
                check_order(name, n)?;
                let mut b = Builder::new(n);
                b.clique(0, q);
                for hub in 0..q {
                    let start = q + hub * copy;
                    clique_blocks(&mut b, start, p, r);
                    clique_blocks(&mut b, start + p * r, p + 1, j);
                    b.join_sets(
                        range_set(start, p * r),
                        range_set(start + p * r, (p + 1) * j),
                    );
                    b.join_sets(VertexSet::singleton(hub), range_set(start, copy));
                }
                let g = b.finish();
                let half_copy = p * r * (r - 1) + (p + 1) * j * (j - 1);
                assert_eq!(
                    2 * g.size(),
                    q * (q - 1) + q * (half_copy + 2 * p * r * (p + 1) * j + 2 * copy)
                );
                g
            }
            Family::DoubleHubWheel(p) => {
                if p < 2 {
                    return Err(GraphError::param(name, "p must be at least 2"));
                }
                let cycle = 3 * p;
                check_order(name, cycle + 2)?;
                let mut b = Builder::new(cycle + 2);
                b.path(0, cycle);
                b.edge(cycle - 1, 0);
                b.join_sets(range_set(cycle, 2), range_set(0, cycle));
                let g = b.finish();
                assert!(g.size() == 9 * p && g.size() == 3 * g.order() - 6);
                assert_eq!(g.min_degree(), 4);
                g
            }
            Family::Delta5Triangulation(r) => {
                if r < 5 {
                    return Err(GraphError::param(name, "r must be at least 5"));
                }
                check_order(name, 3 * r + 1)?;
                let a = |i: usize| i - 1;
                let bv = |i: usize| r + i - 1;
                let c = |i: usize| 2 * r + i - 1;
                let (u, v) = (3 * r - 1, 3 * r);
                let mut b = Builder::new(3 * r + 1);
                b.path(a(1), r);
                b.path(bv(1), r);
                b.path(c(1), r - 1);
                b.edge(a(1), bv(1));
                b.edge(a(r), bv(r));
                for i in 1..r {
                    for w in [a(i), a(i + 1), bv(i), bv(i + 1)] {
                        b.edge(c(i), w);
                    }
                }
                b.join_sets(VertexSet::singleton(u), range_set(a(1), r));
                b.join_sets(VertexSet::singleton(v), range_set(bv(1), r));
                b.edge(a(1), a(r));
                b.edge(bv(1), bv(r));
                b.edge(a(1), bv(r));
                let g = b.finish();
                assert_eq!(g.size(), 3 * g.order() - 6);
                assert_eq!(g.min_degree(), 5);
                g
            }
            Family::Dodecahedron => {
                let g = Graph::from_edge_list(20, &DODECAHEDRON_EDGES)?;
                assert!(g.size() == 30 && is_regular(&g, 3));
                g
            }
        };
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for p in self.params() {
            write!(f, ":{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses `name:p1:p2...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let params = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| GraphError::param(name, format!("`{p}` is not a count")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(GraphError::param(
                    name,
                    format!("expected {k} parameter(s), got {}", params.len()),
                ))
            }
        };
        let family = match name {
            "complete" => arity(1).map(|_| Family::Complete(params[0])),
            "empty" => arity(1).map(|_| Family::Empty(params[0])),
            "path" => arity(1).map(|_| Family::Path(params[0])),
            "cycle" => arity(1).map(|_| Family::Cycle(params[0])),
            "complete_split" => arity(2).map(|_| Family::CompleteSplit {
                empty: params[0],
                clique: params[1],
            }),
            "matched_cliques" => arity(1).map(|_| Family::MatchedCliques(params[0])),
            "clique_union_join" => arity(1).map(|_| Family::CliqueUnionJoin(params[0])),
            "clique_family_join" => arity(2).map(|_| Family::CliqueFamilyJoin {
                p: params[0],
                j: params[1],
            }),
            "hub_attached_copies" => arity(4).map(|_| Family::HubAttachedCopies {
                p: params[0],
                q: params[1],
                r: params[2],
                j: params[3],
            }),
            "double_hub_wheel" => arity(1).map(|_| Family::DoubleHubWheel(params[0])),
            "delta5_triangulation" => arity(1).map(|_| Family::Delta5Triangulation(params[0])),
            "dodecahedron" => arity(0).map(|_| Family::Dodecahedron),
            other => Err(GraphError::UnknownFamily(other.to_string())),
        }?;
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::to_graph6;

    fn build(s: &str) -> Graph {
        s.parse::<Family>().unwrap().build().unwrap()
    }

    fn degree_multiset(g: &Graph) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for d in g.degrees() {
            *counts.entry(d).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    #[test]
    fn matched_cliques_three_is_the_prism() {
        let g = build("matched_cliques:3");
        assert_eq!((g.order(), g.size()), (6, 9));
        assert!(is_regular(&g, 3));
    }

    #[test]
    fn clique_union_join_two() {
        let g = build("clique_union_join:2");
        assert_eq!((g.order(), g.size()), (8, 20));
        assert!(is_regular(&g, 5));
    }

    #[test]
    fn double_hub_wheel_two() {
        let g = build("double_hub_wheel:2");
        assert_eq!((g.order(), g.size(), g.min_degree()), (8, 18, 4));
        assert_eq!(g.size(), 3 * g.order() - 6);
    }

    #[test]
    fn dodecahedron_shape() {
        let g = build("dodecahedron");
        assert_eq!((g.order(), g.size()), (20, 30));
        assert!(is_regular(&g, 3));
    }

    #[test]
    fn delta5_triangulation_shape() {
        for r in 5..=8 {
            let g = Family::Delta5Triangulation(r).build().unwrap();
            assert_eq!(g.order(), 3 * r + 1);
            assert_eq!(g.size(), 9 * r - 3);
            assert_eq!(g.min_degree(), 5);
        }
    }

    #[test]
    fn clique_family_join_degree_profile() {
        for (p, j) in [(2, 1), (2, 2), (2, 3), (3, 1)] {
            let g = Family::CliqueFamilyJoin { p, j }.build().unwrap();
            let mut expected = std::collections::BTreeMap::new();
            *expected.entry(p * p + p * j + j - 1).or_insert(0) += p * p * p;
            *expected.entry(p * p * p + j - 1).or_insert(0) += j * (p + 1);
            let expected: Vec<_> = expected.into_iter().collect();
            assert_eq!(degree_multiset(&g), expected, "p={p} j={j}");
        }
        let g = Family::CliqueFamilyJoin { p: 2, j: 1 }.build().unwrap();
        assert_eq!(g.size(), 36);
    }

    #[test]
    fn hub_attached_copies_degree_profile_at_p2() {
        // G(p, p², p², j) for p = 2, j = 1: degrees (p²+pj+j)^{p⁵},
        // (p³+j)^{(p+1)p²j}, (p³+p²+pj+j-1)^{p²}.
        let (p, j) = (2, 1);
        let g = Family::HubAttachedCopies {
            p,
            q: p * p,
            r: p * p,
            j,
        }
        .build()
        .unwrap();
        let mut expected = vec![
            (p * p + p * j + j, p.pow(5)),
            (p.pow(3) + j, (p + 1) * p * p * j),
            (p.pow(3) + p * p + p * j + j - 1, p * p),
        ];
        expected.sort();
        assert_eq!(degree_multiset(&g), expected);
        assert_eq!(g.order(), 48);
    }

    #[test]
    fn complete_split_is_empty_join_clique() {
        let g = build("complete_split:4:2");
        let h = Graph::empty(4)
            .unwrap()
            .join(&Family::Complete(2).build().unwrap())
            .unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            Family::MatchedCliques(0).build(),
            Err(GraphError::InvalidParameter { .. })
        ));
        assert!(Family::Delta5Triangulation(4).build().is_err());
        assert!(Family::DoubleHubWheel(1).build().is_err());
        assert!(Family::CliqueFamilyJoin { p: 1, j: 1 }.build().is_err());
        assert!(Family::Complete(64).build().is_err());
        assert!(Family::Cycle(2).build().is_err());
        assert!("nope:3".parse::<Family>().is_err());
        assert!("complete".parse::<Family>().is_err());
        assert!("complete:x".parse::<Family>().is_err());
    }

    #[test]
    fn names_round_trip_and_output_is_stable() {
        for s in [
            "complete:4",
            "complete_split:2:3",
            "hub_attached_copies:1:2:2:1",
            "dodecahedron",
        ] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert_eq!(to_graph6(&build("cycle:5")), "Dhc");
        assert_eq!(to_graph6(&build("complete:4")), "C~");
    }
}
