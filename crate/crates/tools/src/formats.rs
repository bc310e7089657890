//! Text formats: graph6, edge lists, partition JSON and the matrix dump.

use std::fmt::Write;
use std::path::Path;

use coalition_core::enumerate::pairs;
use coalition_core::matrix::{edge_domination_matrix_ordered, EdgeOrder};
use coalition_core::{CcPartition, Graph, Partition};

/// Largest order handled by the single-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("graph6: empty line")]
    EmptyGraph6,
    #[error("graph6: byte {byte} at offset {offset} is outside 63..=126")]
    MalformedByte { byte: u8, offset: usize },
    #[error("graph6: orders above {GRAPH6_MAX_ORDER} are not supported")]
    Graph6TooLarge,
    #[error("graph6: payload truncated, expected {expected} bytes after the header, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: {extra} trailing byte(s) after the payload")]
    TrailingGarbage { extra: usize },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("partition JSON: {0}")]
    PartitionJson(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] coalition_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    #[value(alias = "g6")]
    Graph6,
    Edgelist,
}

impl InputFormat {
    /// `.g6` means graph6 and the usual edge-list extensions mean edge list;
    /// anything else (including standard input) is sniffed from the content.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => Some(InputFormat::Graph6),
            Some("el" | "edges" | "edgelist" | "txt") => Some(InputFormat::Edgelist),
            _ => None,
        }
    }

    /// An edge list starts with a bare integer; no graph6 line can, since
    /// digits fall outside the graph6 byte range.
    pub fn sniff(text: &str) -> Self {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with(">>graph6<<"));
        match first {
            Some(l) if l.parse::<usize>().is_ok() => InputFormat::Edgelist,
            _ => InputFormat::Graph6,
        }
    }
}

pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (&header, payload) = bytes.split_first().ok_or(FormatError::EmptyGraph6)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::MalformedByte { byte, offset });
        }
    }
    if header == 126 {
        return Err(FormatError::Graph6TooLarge);
    }
    let n = (header - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(FormatError::TrailingGarbage {
            extra: payload.len() - expected,
        });
    }
    let edges = pairs(n).into_iter().enumerate().filter(|(k, _)| {
        let byte = payload[k / 6] - 63;
        byte >> (5 - k % 6) & 1 == 1
    });
    Ok(Graph::from_edges(n, edges.map(|(_, p)| p))?)
}

pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::Graph6TooLarge);
    }
    let pairs = pairs(n);
    let mut out = String::with_capacity(1 + pairs.len().div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in pairs.chunks(6) {
        let mut byte = 0u8;
        for (i, &(u, v)) in chunk.iter().enumerate() {
            if g.has_edge(u, v) {
                byte |= 1 << (5 - i);
            }
        }
        out.push((byte + 63) as char);
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(FormatError::EdgeList {
        line: 0,
        reason: "missing vertex count".into(),
    })?;
    let n: usize = first.parse().map_err(|_| FormatError::EdgeList {
        line,
        reason: format!("expected a vertex count, found {first:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => edges.push((u, v)),
            _ => {
                return Err(FormatError::EdgeList {
                    line,
                    reason: format!("expected \"u v\", found {l:?}"),
                })
            }
        }
    }
    Graph::from_edges(n, edges).map_err(|e| FormatError::EdgeList {
        line: 0,
        reason: e.to_string(),
    })
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// Reads one graph per non-blank graph6 line, or a single edge-list graph.
pub fn read_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>, FormatError> {
    match format {
        InputFormat::Edgelist => Ok(vec![parse_edge_list(text)?]),
        InputFormat::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect(),
    }
}

pub fn parse_partition(graph_order: usize, json: &str) -> Result<CcPartition, FormatError> {
    let lists: Vec<Vec<usize>> = serde_json::from_str(json)?;
    Ok(Partition::from_lists(graph_order, &lists)?)
}

pub fn emit_partition(p: &Partition) -> String {
    serde_json::to_string(&p.to_lists()).expect("plain integer lists")
}

/// The edge-domination matrix in its text dump form.
pub fn dump_matrix(g: &Graph, order: EdgeOrder) -> Result<String, FormatError> {
    Ok(edge_domination_matrix_ordered(g, order)?.dump())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coalition_core::generators::{complete, cycle};

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("E???").unwrap(), Graph::empty(6));
        assert_eq!(emit_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        let c6 = cycle(6);
        assert_eq!(parse_graph6(&emit_graph6(&c6).unwrap()).unwrap(), c6);
        // K_4 = "C~" in nauty's tables
        assert_eq!(emit_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), complete(4));
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(FormatError::EmptyGraph6)));
        assert!(matches!(
            parse_graph6("E?? ?"),
            Err(FormatError::MalformedByte { byte: b' ', offset: 3 })
        ));
        assert!(matches!(
            parse_graph6("E??"),
            Err(FormatError::Truncated { expected: 3, found: 2 })
        ));
        assert!(matches!(
            parse_graph6("E????"),
            Err(FormatError::TrailingGarbage { extra: 1 })
        ));
        assert!(matches!(parse_graph6("~??"), Err(FormatError::Graph6TooLarge)));
        assert!(emit_graph6(&Graph::empty(63)).is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# square\n4\n0 1\n1 2\n\n2 3\n3 0\n1 0\n").unwrap();
        assert_eq!(g, cycle(4));
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3\n0 1 2\n").is_err());
        assert!(parse_edge_list("3\n0 3\n").is_err());
        assert!(parse_edge_list("x\n").is_err());
        assert!(parse_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn sniffing() {
        assert_eq!(InputFormat::sniff("# c\n4\n0 1\n"), InputFormat::Edgelist);
        assert_eq!(InputFormat::sniff("E???\n"), InputFormat::Graph6);
        assert_eq!(InputFormat::from_path(Path::new("x.g6")), Some(InputFormat::Graph6));
        assert_eq!(InputFormat::from_path(Path::new("-")), None);
    }

    #[test]
    fn partitions() {
        let p = parse_partition(5, "[[0,1],[2,3],[4]]").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(emit_partition(&p), "[[0,1],[2,3],[4]]");
        assert!(parse_partition(5, "[[0,1],[1,2,3,4]]").is_err());
        assert!(parse_partition(5, "[[0,1]").is_err());
    }
}
