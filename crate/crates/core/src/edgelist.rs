//! Plain-text edge lists: one undirected edge per line as two
//! whitespace-separated non-negative integer ids, `#` starts a comment line.

use std::collections::BTreeSet;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{Graph, LinkKind, NodeId};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Writes every edge once, smaller id first, in lexicographic order.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}

/// Edge list as a string, mostly useful for comparisons.
pub fn to_edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge lists are ASCII")
}

/// Summary of what [`read_edge_list`] dropped while loading.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IngestStats {
    pub self_loops: usize,
    pub duplicates: usize,
}

/// Reads an edge list into a [`Graph`].
///
/// Ids need not be dense: distinct ids are relabelled `0..N` in ascending
/// order, which is the identity for files written by [`write_edge_list`].
/// Measurement data frequently lists both directions of a link or carries
/// self-loops, so duplicates and self-loops are skipped and counted rather
/// than rejected. All edges are recorded as [`LinkKind::Seed`].
pub fn read_edge_list<R: BufRead>(input: R) -> Result<(Graph, IngestStats), EdgeListError> {
    let mut raw = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<u64, EdgeListError> {
            let tok = tok.ok_or_else(|| EdgeListError::Parse {
                line: lineno,
                message: format!("expected two node ids, got {trimmed:?}"),
            })?;
            tok.parse().map_err(|_| EdgeListError::Parse {
                line: lineno,
                message: format!("invalid node id {tok:?}"),
            })
        };
        let u = parse(fields.next())?;
        let v = parse(fields.next())?;
        if let Some(extra) = fields.next() {
            return Err(EdgeListError::Parse {
                line: lineno,
                message: format!("unexpected trailing field {extra:?}"),
            });
        }
        raw.push((u, v));
    }

    let ids: Vec<u64> = raw
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let dense = |id: u64| -> NodeId { ids.binary_search(&id).expect("id was collected") };

    let mut g = Graph::with_nodes(ids.len());
    let mut stats = IngestStats::default();
    for (u, v) in raw {
        if u == v {
            stats.self_loops += 1;
            continue;
        }
        if g.add_edge(dense(u), dense(v), LinkKind::Seed).is_err() {
            stats.duplicates += 1;
        }
    }
    Ok((g, stats))
}
