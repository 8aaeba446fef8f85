//! Directed 3-cycle cover to AOCM.
//!
//! Original arcs weigh 1, the added reverse directions weigh 0. The instance
//! reaches value `n` exactly when the digraph has a cover by vertex-disjoint
//! directed cycles of length at least three: a value-`n` matching uses `n`
//! original arcs, and orientations contain no 2-cycles.

use crate::aocm::AocmSolution;
use crate::control_matching::is_control_matching;
use crate::error::{Error, Result};
use crate::graph::{AocmInstance, ArcSet, Digraph, UndirectedGraph};
use crate::scalar::Weight;

/// Vertex-disjoint directed cycles. Each cycle starts at its smallest node and
/// cycles are ordered by that node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCover {
    cycles: Vec<Vec<usize>>,
}

impl CycleCover {
    /// Rotates each cycle to its smallest node and sorts the cycles. Does not
    /// validate; see [`CycleCover::is_valid_for`].
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        let mut cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|mut c| {
                let start = c.iter().enumerate().min_by_key(|&(_, v)| v).map(|(i, _)| i).unwrap();
                c.rotate_left(start);
                c
            })
            .collect();
        cycles.sort();
        CycleCover { cycles }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Disjoint, covering every node of `d`, each cycle of length at least
    /// three, every consecutive pair an arc of `d`.
    pub fn is_valid_for(&self, d: &Digraph) -> bool {
        let n = d.node_count();
        let mut seen = vec![false; n];
        let mut covered = 0;
        for cycle in &self.cycles {
            if cycle.len() < 3 {
                return false;
            }
            for (i, &v) in cycle.iter().enumerate() {
                if v >= n || seen[v] {
                    return false;
                }
                seen[v] = true;
                covered += 1;
                let next = cycle[(i + 1) % cycle.len()];
                if !d.has_arc(v, next) {
                    return false;
                }
            }
        }
        covered == n
    }
}

/// Symmetric weighted instance: weight 1 on each arc of `d`, 0 on directions
/// absent from `d`.
pub fn dcc3_to_aocm<W: Weight>(d: &Digraph) -> AocmInstance<W> {
    let pairs: Vec<_> = d.arcs().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let graph = UndirectedGraph::new(d.node_count(), &pairs).expect("digraph arcs are valid");
    let indicator = |u, v| if d.has_arc(u, v) { W::one() } else { W::zero() };
    let weights = graph
        .edges()
        .iter()
        .map(|&(u, v)| [indicator(u, v), indicator(v, u)])
        .collect();
    AocmInstance::new(graph, weights).expect("0/1 weights are finite")
}

/// Reads a 3-cycle cover off a solution of `dcc3_to_aocm(d)`. Returns `None`
/// when the solution's value is below `n`.
pub fn extract_cycle_cover<W: Weight>(d: &Digraph, sol: &AocmSolution<W>) -> Result<Option<CycleCover>> {
    let n = d.node_count();
    if !sol.value.approx_eq(W::from_count(n)) {
        return Ok(None);
    }
    let arcs = sol.matching.arcs();
    if arcs.len() != n || !is_control_matching(n, arcs) {
        return Err(Error::contract(
            "value-n solution does not carry n matching arcs with unit in/out degree",
        ));
    }
    if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| !d.has_arc(u, v)) {
        return Err(Error::contract(format!("matching arc ({u},{v}) is not in the digraph")));
    }
    let mut successor = vec![usize::MAX; n];
    for &(u, v) in arcs {
        successor[u] = v;
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v);
            v = successor[v];
        }
        if cycle.len() < 3 {
            return Err(Error::contract("matching closes a cycle shorter than three"));
        }
        cycles.push(cycle);
    }
    Ok(Some(CycleCover::new(cycles)))
}
