//! Named constructions with published or independently computed values.

use super::report::{verify_independence_chain, ChainOptions};
use crate::bounds::{planar_bound, RationalBound};
use crate::error::HarnessError;
use crate::graph::{Family, Graph};
use crate::oracle::{f_stats, OracleConfig, SetKind};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the literature.
    Published,
    /// Computed here by an independent brute-force oracle and frozen.
    Computed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ExampleValue {
    Int(i64),
    Rational(RationalBound),
    Text(String),
}

impl fmt::Display for ExampleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExampleValue::Int(v) => write!(f, "{v}"),
            ExampleValue::Rational(r) => write!(f, "{}/{}", r.numerator(), r.denominator()),
            ExampleValue::Text(s) => f.write_str(s),
        }
    }
}

impl From<usize> for ExampleValue {
    fn from(v: usize) -> Self {
        ExampleValue::Int(v as i64)
    }
}

impl From<i64> for ExampleValue {
    fn from(v: i64) -> Self {
        ExampleValue::Int(v)
    }
}

impl From<RationalBound> for ExampleValue {
    fn from(v: RationalBound) -> Self {
        ExampleValue::Rational(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleResult {
    pub name: String,
    pub quantity: String,
    pub expected: ExampleValue,
    pub actual: ExampleValue,
    pub provenance: Provenance,
    pub pass: bool,
}

struct Catalog {
    cfg: OracleConfig,
    out: Vec<ExampleResult>,
}

impl Catalog {
    fn push(
        &mut self,
        name: &str,
        quantity: &str,
        expected: impl Into<ExampleValue>,
        actual: impl Into<ExampleValue>,
        provenance: Provenance,
    ) {
        let (expected, actual) = (expected.into(), actual.into());
        self.out.push(ExampleResult {
            name: name.to_string(),
            quantity: quantity.to_string(),
            pass: expected == actual,
            expected,
            actual,
            provenance,
        });
    }

    fn chain(&self, g: &Graph, j: usize) -> Result<super::BoundReport, HarnessError> {
        let opts = ChainOptions {
            oracle: self.cfg,
            ..Default::default()
        };
        verify_independence_chain(g, j, &opts)
    }
}

fn degree_profile(g: &Graph) -> String {
    let mut counts = BTreeMap::new();
    for d in g.degrees() {
        *counts.entry(d).or_insert(0usize) += 1;
    }
    counts
        .iter()
        .map(|(d, c)| format!("{d}^{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Recomputes every catalog entry.
pub fn reproduce_examples() -> Result<Vec<ExampleResult>, HarnessError> {
    use Provenance::{Computed, Published};
    let mut c = Catalog {
        cfg: OracleConfig::wide(),
        out: Vec::new(),
    };

    // E_p ∪ K_{n-p} and E_p + K_{n-p}: a_1 is exact while a overshoots
    for (p, n, union_a, join_a) in [(2usize, 8usize, 5usize, 4usize), (3, 10, 6, 5)] {
        let clique = Family::Complete(n - p).build()?;
        let union = Graph::empty(p)?.union(&clique)?;
        let name = format!("union_empty_clique(p={p},n={n})");
        let r = c.chain(&union, 1)?;
        c.push(&name, "alpha", p + 1, r.alpha_j.unwrap(), Published);
        c.push(&name, "a_1", p + 1, r.a_j.unwrap(), Published);
        c.push(&name, "a", union_a, r.a.unwrap(), Computed);

        let join = Family::CompleteSplit {
            empty: p,
            clique: n - p,
        }
        .build()?;
        let name = format!("join_empty_clique(p={p},n={n})");
        let r = c.chain(&join, 1)?;
        c.push(&name, "alpha", p, r.alpha_j.unwrap(), Published);
        c.push(&name, "a_1", p, r.a_j.unwrap(), Published);
        c.push(&name, "a", join_a, r.a.unwrap(), Computed);
    }

    for p in 3..=5 {
        let name = format!("matched_cliques(p={p})");
        let r = c.chain(&Family::MatchedCliques(p).build()?, 1)?;
        c.push(&name, "alpha", 2usize, r.alpha_j.unwrap(), Published);
        c.push(&name, "a_1", 2usize, r.a_j.unwrap(), Published);
        c.push(&name, "a", p, r.a.unwrap(), Published);
    }

    for j in 1..=2 {
        let name = format!("clique_union_join(j={j})");
        let r = c.chain(&Family::CliqueUnionJoin(j).build()?, j)?;
        c.push(&name, "c_j", j * j, r.c_j.unwrap(), Published);
        c.push(&name, "alpha_j", j * j, r.alpha_j.unwrap(), Published);
        c.push(&name, "a_j", j * j, r.a_j.unwrap(), Published);
    }

    {
        let (p, j) = (2usize, 1usize);
        let g = Family::CliqueFamilyJoin { p, j }.build()?;
        let name = format!("clique_family_join(p={p},j={j})");
        let r = c.chain(&g, j)?;
        let stats = f_stats(&g, j, SetKind::Independence, &c.cfg)?;
        let m = p * p * p * (p * p - 1) / 2 + (p + 1) * j * (j - 1) / 2 + p * p * p * (p + 1) * j;
        let min_diff = (p * p * p * (p * p - 1) / 2 - j * (j - 1) * (p + 1) / 2) as i64;
        c.push(&name, "m", m, r.m, Published);
        c.push(&name, "min_diff", min_diff, stats.min_diff, Published);
        c.push(&name, "c_j", j * (p + 1), r.c_j.unwrap(), Published);
        c.push(&name, "alpha_j", j * (p + 1), r.alpha_j.unwrap(), Published);
        c.push(&name, "a_j", 4usize, r.a_j.unwrap(), Computed);
    }

    {
        let p = 2usize;
        let g = Family::CompleteSplit {
            empty: p * p,
            clique: p,
        }
        .build()?;
        let name = format!("join_empty_clique(p={},n={})", p * p, p * p + p);
        let r = c.chain(&g, 1)?;
        let stats = f_stats(&g, 1, SetKind::Independence, &c.cfg)?;
        c.push(
            &name,
            "max_diff",
            (p * (p - 1) / 2) as i64,
            stats.max_diff,
            Published,
        );
        c.push(&name, "c_1", p, r.c_j.unwrap(), Published);
        c.push(&name, "alpha", p * p, r.alpha_j.unwrap(), Published);
        c.push(&name, "a_1", p * p, r.a_j.unwrap(), Published);
    }

    {
        // the degree profile is stated for q = r = p²
        let (p, j) = (2usize, 1usize);
        let g = Family::HubAttachedCopies {
            p,
            q: p * p,
            r: p * p,
            j,
        }
        .build()?;
        let name = format!("hub_attached_copies(p={p},q={},r={},j={j})", p * p, p * p);
        let expected = format!(
            "{}^{} {}^{} {}^{}",
            p * p + p * j + j,
            p.pow(5),
            p.pow(3) + j,
            (p + 1) * p * p * j,
            p.pow(3) + p * p + p * j + j - 1,
            p * p,
        );
        c.push(
            &name,
            "degree_profile",
            ExampleValue::Text(expected),
            ExampleValue::Text(degree_profile(&g)),
            Published,
        );

        let (p, q, r, j) = (1usize, 2usize, 2usize, 1usize);
        let g = Family::HubAttachedCopies { p, q, r, j }.build()?;
        let name = format!("hub_attached_copies(p={p},q={q},r={r},j={j})");
        let rep = c.chain(&g, j)?;
        c.push(&name, "alpha_j", 4usize, rep.alpha_j.unwrap(), Computed);
        let sandwich = rep.c_j <= rep.alpha_j && rep.alpha_j <= rep.a_j;
        c.push(&name, "c_j<=alpha_j<=a_j", 1i64, sandwich as i64, Computed);
    }

    for p in 2..=3 {
        let family = Family::DoubleHubWheel(p);
        let g = family.build()?;
        let cert = family.planar_certificate().expect("wheel is planar");
        let n = 3 * p + 2;
        for (j, alpha, prov) in [
            (
                1,
                (n - 2) / 2,
                if n % 2 == 0 { Published } else { Computed },
            ),
            (2, 2 * p, Published),
            (3, 3 * p, Published),
        ] {
            let name = format!("double_hub_wheel(p={p},j={j})");
            let r = c.chain(&g, j)?;
            let bound = planar_bound(&g, j, cert)?;
            c.push(&name, "alpha_j", alpha, r.alpha_j.unwrap(), prov);
            c.push(
                &name,
                "planar_floor",
                alpha as i64,
                bound.floor(),
                Published,
            );
        }
    }

    {
        let (r, j) = (5usize, 3usize);
        let family = Family::Delta5Triangulation(r);
        let g = family.build()?;
        let cert = family
            .planar_certificate()
            .expect("triangulation is planar");
        let name = format!("delta5_triangulation(r={r},j={j})");
        let alpha = crate::oracle::alpha_j(&g, j, &c.cfg)?.value;
        let bound = planar_bound(&g, j, cert)?;
        let expected = RationalBound::new(6 * r as i64 - 2, 3);
        c.push(&name, "alpha_j", 2 * r - 2, alpha, Published);
        c.push(&name, "planar_bound", expected, bound, Published);
        c.push(
            &name,
            "gap",
            expected.minus(2 * r as i64 - 2),
            bound.minus(alpha as i64),
            Published,
        );
    }

    {
        let g = Family::Dodecahedron.build()?;
        let name = "dodecahedron";
        let r = c.chain(&g, 1)?;
        c.push(name, "n", 20usize, r.n, Published);
        c.push(name, "m", 30usize, r.m, Published);
        c.push(name, "alpha", 8usize, r.alpha_j.unwrap(), Published);
        c.push(name, "c_1", 8usize, r.c_j.unwrap(), Published);
    }

    Ok(c.out)
}
