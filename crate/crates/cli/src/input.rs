use dsi_bounds::graph::{parse_edge_list, parse_graph6, Family, Graph, PlanarCertificate};
use std::io::Read;
use std::path::PathBuf;

/// A graph to work on, plus a planarity certificate when its origin implies one.
#[derive(Debug)]
pub struct Loaded {
    pub graph: Graph,
    pub planar: Option<PlanarCertificate>,
}

pub enum Source {
    Generator(Family),
    File(PathBuf),
    Stdin,
}

impl Source {
    pub fn new(generator: Option<Family>, input: Option<PathBuf>) -> Source {
        match (generator, input) {
            (Some(f), _) => Source::Generator(f),
            (None, Some(path)) if path.as_os_str() != "-" => Source::File(path),
            _ => Source::Stdin,
        }
    }

    pub fn load(&self, vouch_planar: bool, stdin: &mut dyn Read) -> Result<Vec<Loaded>, String> {
        let vouched = vouch_planar.then(PlanarCertificate::vouch);
        match self {
            Source::Generator(f) => {
                let graph = f.build().map_err(|e| e.to_string())?;
                Ok(vec![Loaded {
                    graph,
                    planar: f.planar_certificate().or(vouched),
                }])
            }
            Source::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                parse_text(&text, vouched)
            }
            Source::Stdin => {
                let mut text = String::new();
                stdin
                    .read_to_string(&mut text)
                    .map_err(|e| format!("stdin: {e}"))?;
                parse_text(&text, vouched)
            }
        }
    }
}

/// An edge list starts with an `n m` header; anything else is one graph6 string per line.
/// Graph6 never contains whitespace, so the header is unambiguous.
fn parse_text(text: &str, planar: Option<PlanarCertificate>) -> Result<Vec<Loaded>, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((_, first)) = lines.clone().next() else {
        return Err("input contains no graph".into());
    };
    if first.trim().contains(char::is_whitespace) {
        let graph = parse_edge_list(text).map_err(|e| format!("edge list: {e}"))?;
        return Ok(vec![Loaded { graph, planar }]);
    }
    lines
        .by_ref()
        .map(|(i, line)| {
            parse_graph6(line.trim())
                .map(|graph| Loaded { graph, planar })
                .map_err(|e| format!("line {}: {e}", i + 1))
        })
        .collect()
}
