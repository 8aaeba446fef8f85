//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n m [directed | weighted | nodes]
//! ```
//!
//! followed by `m` records, one per line:
//!
//! * undirected: `u v`
//! * weighted (AOCM): `u v w_uv w_vu`
//! * directed: `u v`, arc from `u` to `v`
//! * nodes (node-weighted graph): first `n` lines `v w`, one per node, then
//!   `m` lines `u v`
//!
//! Without a kind token, two fields per record mean undirected and four mean
//! weighted. Node ids are 0-based. Blank lines and lines starting with `#` are
//! skipped.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{AocmInstance, Digraph, UndirectedGraph};
use crate::reductions::{ArcRole, ConflictGraph, GadgetInstance};
use crate::scalar::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Undirected,
    Weighted,
    Directed,
    NodeWeighted,
}

impl FileKind {
    fn token(self) -> Option<&'static str> {
        match self {
            FileKind::Undirected => None,
            FileKind::Weighted => Some("weighted"),
            FileKind::Directed => Some("directed"),
            FileKind::NodeWeighted => Some("nodes"),
        }
    }
}

/// A graph with one weight per node.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeWeightedGraph<W> {
    pub weights: Vec<W>,
    pub graph: UndirectedGraph,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EdgeListFile<W> {
    Undirected(UndirectedGraph),
    Weighted(AocmInstance<W>),
    /// Self-loops in the file are dropped; `self_loops_dropped` counts them
    /// together with repeated arcs.
    Directed {
        digraph: Digraph,
        self_loops_dropped: usize,
    },
    NodeWeighted(NodeWeightedGraph<W>),
}

impl<W> EdgeListFile<W> {
    pub fn kind(&self) -> FileKind {
        match self {
            EdgeListFile::Undirected(_) => FileKind::Undirected,
            EdgeListFile::Weighted(_) => FileKind::Weighted,
            EdgeListFile::Directed { .. } => FileKind::Directed,
            EdgeListFile::NodeWeighted(_) => FileKind::NodeWeighted,
        }
    }
}

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::input(format!("line {line}: {msg}"))
}

fn field<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| err(line, format!("cannot parse {what} {token:?}")))
}

pub fn parse_edge_list<W: Weight>(text: &str) -> Result<EdgeListFile<W>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| Error::input("empty file"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let explicit = match head.as_slice() {
        [_, _] => None,
        [_, _, "directed"] => Some(FileKind::Directed),
        [_, _, "weighted"] => Some(FileKind::Weighted),
        [_, _, "nodes"] => Some(FileKind::NodeWeighted),
        [_, _, other] => return Err(err(hline, format!("unknown kind {other:?}"))),
        _ => return Err(err(hline, "header must be `n m [kind]`")),
    };
    let n: usize = field(hline, head[0], "node count")?;
    let m: usize = field(hline, head[1], "record count")?;

    let records: Vec<(usize, Vec<&str>)> = lines.map(|(i, l)| (i, l.split_whitespace().collect())).collect();
    let expected = if explicit == Some(FileKind::NodeWeighted) { n + m } else { m };
    if records.len() != expected {
        let at = records.get(expected).map_or(hline, |r| r.0);
        return Err(err(at, format!("expected {expected} records, found {}", records.len())));
    }

    let kind = explicit.unwrap_or(match records.first() {
        Some((_, f)) if f.len() == 4 => FileKind::Weighted,
        _ => FileKind::Undirected,
    });
    let arity = if kind == FileKind::Weighted { 4 } else { 2 };
    let node = |line: usize, t: &str| -> Result<usize> {
        let v: usize = field(line, t, "node id")?;
        if v >= n {
            return Err(err(line, format!("node id {v} out of range for {n} nodes")));
        }
        Ok(v)
    };

    let (node_lines, edge_lines) = if kind == FileKind::NodeWeighted {
        records.split_at(n)
    } else {
        records.split_at(0)
    };
    let mut pairs = Vec::with_capacity(m);
    let mut weighted = Vec::new();
    for (line, f) in edge_lines {
        let line = *line;
        if f.len() != arity {
            return Err(err(line, format!("expected {arity} fields, found {}", f.len())));
        }
        let (u, v) = (node(line, f[0])?, node(line, f[1])?);
        if u == v && kind != FileKind::Directed {
            return Err(err(line, format!("self-loop on node {u}")));
        }
        if kind == FileKind::Weighted {
            let w_uv: W = field(line, f[2], "weight")?;
            let w_vu: W = field(line, f[3], "weight")?;
            if !w_uv.is_finite_weight() || !w_vu.is_finite_weight() {
                return Err(err(line, "non-finite weight"));
            }
            weighted.push((u, v, w_uv, w_vu));
        }
        pairs.push((u, v));
    }

    Ok(match kind {
        FileKind::Undirected => EdgeListFile::Undirected(UndirectedGraph::new(n, &pairs)?),
        FileKind::Weighted => EdgeListFile::Weighted(AocmInstance::from_weighted_edges(n, &weighted)?),
        FileKind::Directed => {
            let (digraph, self_loops_dropped) = Digraph::simplified(n, &pairs)?;
            EdgeListFile::Directed {
                digraph,
                self_loops_dropped,
            }
        }
        FileKind::NodeWeighted => {
            let mut weights: Vec<Option<W>> = vec![None; n];
            for (line, f) in node_lines {
                let line = *line;
                if f.len() != 2 {
                    return Err(err(line, format!("expected `v w`, found {} fields", f.len())));
                }
                let v = node(line, f[0])?;
                let w: W = field(line, f[1], "weight")?;
                if !w.is_finite_weight() {
                    return Err(err(line, "non-finite weight"));
                }
                if weights[v].replace(w).is_some() {
                    return Err(err(line, format!("node {v} weighted twice")));
                }
            }
            EdgeListFile::NodeWeighted(NodeWeightedGraph {
                weights: weights.into_iter().map(|w| w.expect("n distinct in-range ids")).collect(),
                graph: UndirectedGraph::new(n, &pairs)?,
            })
        }
    })
}

pub fn read_edge_list<W: Weight>(path: &Path) -> Result<EdgeListFile<W>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
}

fn header(out: &mut String, n: usize, m: usize, kind: FileKind) {
    match kind.token() {
        Some(t) => writeln!(out, "{n} {m} {t}"),
        None => writeln!(out, "{n} {m}"),
    }
    .expect("writing to a String");
}

pub fn write_undirected(g: &UndirectedGraph) -> String {
    let mut out = String::new();
    header(&mut out, g.node_count(), g.edge_count(), FileKind::Undirected);
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Always carries the `weighted` token so edgeless instances read back as
/// weighted.
pub fn write_weighted<W: Weight>(inst: &AocmInstance<W>) -> String {
    let mut out = String::new();
    header(&mut out, inst.node_count(), inst.edge_count(), FileKind::Weighted);
    for (i, &(u, v)) in inst.graph().edges().iter().enumerate() {
        let [a, b] = inst.edge_weights(i);
        writeln!(out, "{u} {v} {a} {b}").unwrap();
    }
    out
}

pub fn write_directed(d: &Digraph) -> String {
    use crate::graph::ArcSet;
    let mut out = String::new();
    header(&mut out, d.node_count(), d.arc_count(), FileKind::Directed);
    for &(u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_node_weighted<W: Weight>(g: &NodeWeightedGraph<W>) -> String {
    let mut out = String::new();
    header(&mut out, g.graph.node_count(), g.graph.edge_count(), FileKind::NodeWeighted);
    for (v, w) in g.weights.iter().enumerate() {
        writeln!(out, "{v} {w}").unwrap();
    }
    for &(u, v) in g.graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// The conflict graph as a node-weighted file, with a comment naming the arc
/// behind each node.
pub fn write_conflict_graph<W: Weight>(cg: &ConflictGraph<W>) -> String {
    let mut out = String::new();
    for i in 0..cg.node_count() {
        let (u, v) = cg.arc(i);
        writeln!(out, "# node {i} = arc {u} {v}").unwrap();
    }
    let graph = UndirectedGraph::new(cg.node_count(), cg.edges()).expect("conflict edges are valid");
    out += &write_node_weighted(&NodeWeightedGraph {
        weights: cg.weights().to_vec(),
        graph,
    });
    out
}

/// The host instance of a gadget, preceded by one comment per unit-weight arc
/// giving its role and vertex.
pub fn write_gadget<W: Weight>(gi: &GadgetInstance<W>) -> String {
    let mut out = String::new();
    for &((u, v), assoc) in gi.unit_arcs() {
        let role = match assoc.role {
            ArcRole::EdgeArc => "edge-arc",
            ArcRole::NodeArc => "node-arc",
        };
        writeln!(out, "# arc {u} {v} {role} vertex {}", assoc.vertex).unwrap();
    }
    out += &write_weighted(gi.host());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let g = parse_edge_list::<f64>("# c3\n3 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g, EdgeListFile::Undirected(UndirectedGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()));

        let w = parse_edge_list::<f64>("2 1\n0 1 5 2\n").unwrap();
        let EdgeListFile::Weighted(inst) = w else { panic!() };
        assert_eq!(inst.weight(0, 1), Some(5.0));
        assert_eq!(inst.weight(1, 0), Some(2.0));

        let d = parse_edge_list::<f64>("3 4 directed\n0 1\n1 2\n2 0\n1 1\n").unwrap();
        let EdgeListFile::Directed { digraph, self_loops_dropped } = d else { panic!() };
        assert_eq!(digraph.arc_count(), 3);
        assert_eq!(self_loops_dropped, 1);

        let nw = parse_edge_list::<i64>("2 1 nodes\n1 4\n0 3\n0 1\n").unwrap();
        let EdgeListFile::NodeWeighted(nw) = nw else { panic!() };
        assert_eq!(nw.weights, vec![3, 4]);
    }

    #[test]
    fn reversed_record_keeps_direction() {
        let EdgeListFile::Weighted(inst) = parse_edge_list::<i64>("2 1\n1 0 5 2\n").unwrap() else { panic!() };
        assert_eq!(inst.weight(1, 0), Some(5));
        assert_eq!(inst.edge_weights(0), [2, 5]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("", "empty file"),
            ("2 1\n0 5\n", "line 2"),
            ("# x\n2 2\n0 1\n", "line 2"),
            ("2 1\n0 0\n", "self-loop"),
            ("2 1 sideways\n0 1\n", "unknown kind"),
            ("2 1\n0 1 x 2\n", "line 2: cannot parse weight"),
            ("2 1\n0 1 nan 2\n", "non-finite"),
            ("3 2\n0 1 1 1\n1 2\n", "line 3: expected 4 fields"),
            ("2 1 nodes\n0 1\n0 2\n0 1\n", "weighted twice"),
        ];
        for (text, needle) in cases {
            let e = parse_edge_list::<f64>(text).unwrap_err().to_string();
            assert!(e.contains(needle), "{text:?}: {e}");
        }
    }

    #[test]
    fn edgeless_weighted_round_trip() {
        let inst = AocmInstance::<f64>::new(UndirectedGraph::empty(3), vec![]).unwrap();
        assert_eq!(parse_edge_list::<f64>(&write_weighted(&inst)).unwrap(), EdgeListFile::Weighted(inst));
    }
}
