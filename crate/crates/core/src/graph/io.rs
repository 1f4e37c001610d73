//! graph6 and plain edge-list text formats.
//!
//! graph6 stores the order in one byte (`n + 63`, or `~` followed by three
//! bytes for larger orders), then the upper triangle of the adjacency matrix
//! column by column (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte,
//! most significant bit first, each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::GraphError;

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::parse(
                base + i,
                format!("byte {b} outside the graph6 range 63..=126"),
            ));
        }
    }
    let (n, data_start) = match body.first() {
        None => return Err(GraphError::parse(base, "empty graph6 string")),
        Some(126) => {
            if body.len() < 4 {
                return Err(GraphError::parse(
                    base + body.len(),
                    "truncated order field",
                ));
            }
            if body[1] == 126 {
                return Err(GraphError::Capacity(usize::MAX));
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::Capacity(n));
    }
    let pairs = n * (n - 1) / 2;
    let needed = pairs.div_ceil(6);
    let data = &body[data_start..];
    if data.len() < needed {
        return Err(GraphError::parse(
            base + body.len(),
            format!(
                "truncated edge data: expected {needed} bytes, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > needed {
        return Err(GraphError::parse(
            base + data_start + needed,
            "trailing bytes after edge data",
        ));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

/// `n m` on the first line, then one `u v` pair per line (0-indexed).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| GraphError::parse(0, "missing `n m` header"))?;
    let [n, m] = parse_pair(header, 0)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let [u, v] = parse_pair(line, line_no)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::parse(
            0,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str, line_no: usize) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::parse(
            line_no,
            format!("expected two integers on line {}", line_no + 1),
        ));
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| {
            GraphError::parse(line_no, format!("`{field}` is not a non-negative integer"))
        })?;
    }
    Ok(out)
}
