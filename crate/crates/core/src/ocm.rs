//! Exact OCM: with uniform weights the best orientation comes from a maximum
//! simple 2-matching. Its paths and cycles are oriented head to tail and every
//! other edge is oriented arbitrarily (here: low id to high id).

use crate::blossom::maximum_matching;
use crate::control_matching::ControlMatching;
use crate::error::{Error, Result};
use crate::graph::{Arc, ArcSet, Orientation, UndirectedGraph};

/// Edge subset of a host graph with every node incident to at most two edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoMatching {
    edges: Vec<(usize, usize)>,
}

/// A connected piece of a 2-matching, as an ordered node walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component {
    /// Nodes in order from the lower-id endpoint. A lone node is a path of length 0.
    Path(Vec<usize>),
    /// Nodes in traversal order starting from the lowest id; the closing arc
    /// returns to the first node.
    Cycle(Vec<usize>),
}

impl TwoMatching {
    /// Checks that `edges` are edges of `g` with degree at most two everywhere.
    pub fn new(g: &UndirectedGraph, edges: &[(usize, usize)]) -> Result<Self> {
        let mut canonical: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        canonical.sort_unstable();
        canonical.dedup();
        let mut degree = vec![0u8; g.node_count()];
        for &(u, v) in &canonical {
            if !g.has_edge(u, v) {
                return Err(Error::contract(format!("{{{u},{v}}} is not a host edge")));
            }
            degree[u] += 1;
            degree[v] += 1;
            if degree[u] > 2 || degree[v] > 2 {
                return Err(Error::contract("node incident to more than two matched edges"));
            }
        }
        Ok(TwoMatching { edges: canonical })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Decomposes into node-disjoint paths and cycles covering all `node_count` nodes.
    pub fn components(&self, node_count: usize) -> Vec<Component> {
        let mut adj = vec![Vec::with_capacity(2); node_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut visited = vec![false; node_count];
        let mut out = Vec::new();

        let walk = |start: usize, first: Option<usize>, visited: &mut Vec<bool>| {
            let mut nodes = vec![start];
            visited[start] = true;
            let mut prev = start;
            let mut cur = first;
            while let Some(c) = cur {
                if visited[c] {
                    break;
                }
                visited[c] = true;
                nodes.push(c);
                cur = adj[c].iter().copied().find(|&w| w != prev && !visited[w]);
                prev = c;
            }
            nodes
        };

        for v in 0..node_count {
            if !visited[v] && adj[v].len() <= 1 {
                out.push(Component::Path(walk(v, adj[v].first().copied(), &mut visited)));
            }
        }
        for v in 0..node_count {
            if !visited[v] {
                // Every remaining node has degree two, so this closes a cycle.
                out.push(Component::Cycle(walk(v, Some(adj[v][0]), &mut visited)));
            }
        }
        out
    }
}

/// Maximum-cardinality simple 2-matching.
///
/// Each node `v` becomes two copies; each edge `e = {u, v}` becomes a pair of
/// adjacent subdivision nodes `a_e`, `b_e`, with `a_e` joined to both copies of
/// `u` and `b_e` to both copies of `v`. In a maximum matching of that graph
/// every edge gadget contributes one matched pair, or two when both `a_e` and
/// `b_e` are matched into copies; the latter edges form a maximum 2-matching
/// and the auxiliary optimum is `|E| + |2-matching|`.
pub fn max_simple_two_matching(g: &UndirectedGraph) -> TwoMatching {
    let n = g.node_count();
    let m = g.edge_count();
    let copy = |v: usize, k: usize| 2 * v + k;
    let near = |i: usize, side: usize| 2 * n + 2 * i + side;
    let mut adj = vec![Vec::new(); 2 * n + 2 * m];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        link(near(i, 0), near(i, 1), &mut adj);
        for k in 0..2 {
            link(near(i, 0), copy(u, k), &mut adj);
            link(near(i, 1), copy(v, k), &mut adj);
        }
    }
    let mate = maximum_matching(&adj);
    let is_copy = |x: Option<usize>| x.is_some_and(|x| x < 2 * n);
    let edges: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| is_copy(mate[near(i, 0)]) && is_copy(mate[near(i, 1)]))
        .map(|(_, &e)| e)
        .collect();
    debug_assert_eq!(
        mate.iter().flatten().count() / 2,
        m + edges.len(),
        "auxiliary matching size relation"
    );
    TwoMatching { edges }
}

/// Orients each path of `tm` away from its lower-id endpoint and each cycle
/// from its lowest node towards that node's lower-id cycle neighbour; every
/// other edge runs low id to high id. Also returns the oriented `tm` arcs,
/// which form a control matching on the orientation.
pub fn two_matching_to_orientation(
    g: &UndirectedGraph,
    tm: &TwoMatching,
) -> Result<(Orientation, Vec<Arc>)> {
    let tm = TwoMatching::new(g, tm.edges())?;
    let mut directed = Vec::with_capacity(tm.len());
    for component in tm.components(g.node_count()) {
        match component {
            Component::Path(nodes) => directed.extend(nodes.windows(2).map(|w| (w[0], w[1]))),
            Component::Cycle(nodes) => {
                if nodes.len() < 3 {
                    return Err(Error::contract("2-matching cycle shorter than three"));
                }
                directed.extend(nodes.windows(2).map(|w| (w[0], w[1])));
                directed.push((nodes[nodes.len() - 1], nodes[0]));
            }
        }
    }
    let mut reversed = vec![false; g.edge_count()];
    for &(u, v) in &directed {
        let idx = g.edge_index(u, v).expect("validated 2-matching edge");
        reversed[idx] = u > v;
    }
    directed.sort_unstable();
    Ok((Orientation::from_fn(g, |i| reversed[i]), directed))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OcmSolution {
    pub two_matching: TwoMatching,
    pub orientation: Orientation,
    pub matching: ControlMatching<usize>,
}

impl OcmSolution {
    pub fn driver_count(&self) -> usize {
        (self.orientation.node_count() - self.matching.len()).max(1)
    }
}

/// Optimal orientation for uniform weights together with a maximum control
/// matching on it.
pub fn solve_ocm(g: &UndirectedGraph) -> OcmSolution {
    let two_matching = max_simple_two_matching(g);
    let (orientation, arcs) =
        two_matching_to_orientation(g, &two_matching).expect("solver output is a valid 2-matching");
    let size = arcs.len();
    OcmSolution {
        two_matching,
        orientation,
        matching: ControlMatching::new(arcs, size),
    }
}
