use serde::{Deserialize, Serialize};

use super::{Clutter, Graph};
use crate::error::{invalid, Result};

/// Wire form of graphs and clutters: `{"n": 5, "edges": [[1,2], ...]}`
/// with 1-based vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(i, j)| vec![i, j]).collect(),
        }
    }
}

impl From<&Clutter> for GraphJson {
    fn from(c: &Clutter) -> Self {
        GraphJson {
            n: c.n(),
            edges: c.edge_lists(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        let mut pairs = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            match e.as_slice() {
                [i, j] => pairs.push((*i, *j)),
                _ => return Err(invalid(format!("graph edge {e:?} must have two vertices"))),
            }
        }
        Graph::new(self.n, &pairs)
    }

    pub fn to_clutter(&self) -> Result<Clutter> {
        Clutter::new(self.n, &self.edges)
    }
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| invalid(format!("graph JSON: {e}")))?;
    raw.to_graph()
}

pub fn parse_clutter_json(text: &str) -> Result<Clutter> {
    let raw: GraphJson =
        serde_json::from_str(text).map_err(|e| invalid(format!("clutter JSON: {e}")))?;
    raw.to_clutter()
}

/// Plain edge list: one `i j` pair per line. Blank lines and `#` comments
/// are skipped; the vertex count is the largest label seen.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    let mut n = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| invalid(format!("line {}: {e}", lineno + 1)))?;
        match nums.as_slice() {
            [i, j] => {
                n = n.max(*i).max(*j);
                pairs.push((*i, *j));
            }
            _ => return Err(invalid(format!("line {}: expected two vertices", lineno + 1))),
        }
    }
    // Graph::new rejects repeats in either orientation
    Graph::new(n, &pairs)
}

/// JSON when the text starts with `{`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_graph_text(text)
    }
}
