//! Graph representations shared by the solvers and reductions.
//!
//! All types are immutable once built. Undirected edges are stored as `(u, v)`
//! with `u < v`, sorted lexicographically; the position of an edge in that list
//! is its *edge index*, which orientations and weight tables are keyed by.

use crate::error::{Error, Result};
use crate::scalar::Weight;

/// An ordered node pair `(tail, head)`.
pub type Arc = (usize, usize);

/// Anything that exposes a node count and a list of arcs.
pub trait ArcSet {
    fn node_count(&self) -> usize;
    fn arcs(&self) -> &[Arc];
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// Result of [`build_undirected`]: the canonical graph plus how many duplicate
/// input edges were folded away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltGraph {
    pub graph: UndirectedGraph,
    pub duplicates_collapsed: usize,
}

/// Builds a canonical undirected graph. Self-loops and out-of-range ids are
/// rejected; duplicate edges (in either direction) are collapsed and counted.
pub fn build_undirected(node_count: usize, raw_edges: &[(usize, usize)]) -> Result<BuiltGraph> {
    let mut edges = Vec::with_capacity(raw_edges.len());
    for &(u, v) in raw_edges {
        check_endpoint(node_count, u)?;
        check_endpoint(node_count, v)?;
        if u == v {
            return Err(Error::input(format!("self-loop on node {u}")));
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    let duplicates_collapsed = before - edges.len();
    Ok(BuiltGraph {
        graph: UndirectedGraph::from_canonical(node_count, edges),
        duplicates_collapsed,
    })
}

fn check_endpoint(node_count: usize, v: usize) -> Result<()> {
    if v >= node_count {
        Err(Error::input(format!(
            "node id {v} out of range for {node_count} nodes"
        )))
    } else {
        Ok(())
    }
}

impl UndirectedGraph {
    /// Shorthand for [`build_undirected`] that drops the duplicate count.
    pub fn new(node_count: usize, raw_edges: &[(usize, usize)]) -> Result<Self> {
        build_undirected(node_count, raw_edges).map(|b| b.graph)
    }

    pub fn empty(node_count: usize) -> Self {
        Self::from_canonical(node_count, Vec::new())
    }

    // `edges` must already be canonical, sorted and deduplicated.
    fn from_canonical(node_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        UndirectedGraph {
            node_count,
            edges,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.node_count
    }

    /// True when no two members of `set` are adjacent.
    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

/// True iff every node has degree exactly 3.
pub fn is_cubic(g: &UndirectedGraph) -> bool {
    (0..g.node_count()).all(|v| g.degree(v) == 3)
}

/// A simple digraph: no self-loops, no duplicate arcs; 2-cycles allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    node_count: usize,
    arcs: Vec<Arc>,
}

impl Digraph {
    /// Rejects self-loops, collapses duplicate arcs.
    pub fn new(node_count: usize, raw_arcs: &[Arc]) -> Result<Self> {
        if let Some(&(u, _)) = raw_arcs.iter().find(|(u, v)| u == v) {
            return Err(Error::input(format!("self-loop on node {u}")));
        }
        Self::simplified(node_count, raw_arcs).map(|(d, _)| d)
    }

    /// Drops self-loops and duplicate arcs instead of rejecting them. Returns
    /// the digraph and the number of dropped input arcs.
    pub fn simplified(node_count: usize, raw_arcs: &[Arc]) -> Result<(Self, usize)> {
        let mut arcs = Vec::with_capacity(raw_arcs.len());
        for &(u, v) in raw_arcs {
            check_endpoint(node_count, u)?;
            check_endpoint(node_count, v)?;
            if u != v {
                arcs.push((u, v));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        let dropped = raw_arcs.len() - arcs.len();
        Ok((Digraph { node_count, arcs }, dropped))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// The underlying simple undirected graph.
    pub fn underlying(&self) -> UndirectedGraph {
        let pairs: Vec<_> = self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        build_undirected(self.node_count, &pairs)
            .expect("arcs already validated")
            .graph
    }
}

impl ArcSet for Digraph {
    fn node_count(&self) -> usize {
        self.node_count
    }

    fn arcs(&self) -> &[Arc] {
        &self.arcs
    }
}

/// An undirected graph with a weight for each of the two directions of every
/// edge. Implicitly this is the symmetric digraph whose arcs are all ordered
/// pairs with a defined weight.
#[derive(Debug, Clone, PartialEq)]
pub struct AocmInstance<W> {
    graph: UndirectedGraph,
    // [w(lo, hi), w(hi, lo)] per edge index
    weights: Vec<[W; 2]>,
}

impl<W: Weight> AocmInstance<W> {
    /// `weights[i]` holds `[w(u, v), w(v, u)]` for canonical edge `i = (u, v)`, `u < v`.
    pub fn new(graph: UndirectedGraph, weights: Vec<[W; 2]>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(Error::input(format!(
                "{} weight pairs for {} edges",
                weights.len(),
                graph.edge_count()
            )));
        }
        if let Some(i) = weights
            .iter()
            .position(|pair| !pair.iter().all(|w| w.is_finite_weight()))
        {
            return Err(Error::input(format!("non-finite weight on edge {i}")));
        }
        Ok(AocmInstance { graph, weights })
    }

    /// Builds from `(u, v, w_uv, w_vu)` records. A repeated edge is accepted
    /// only when it repeats the same two directional weights.
    pub fn from_weighted_edges(node_count: usize, records: &[(usize, usize, W, W)]) -> Result<Self> {
        let pairs: Vec<_> = records.iter().map(|&(u, v, _, _)| (u, v)).collect();
        let graph = build_undirected(node_count, &pairs)?.graph;
        let mut weights: Vec<Option<[W; 2]>> = vec![None; graph.edge_count()];
        for &(u, v, w_uv, w_vu) in records {
            let idx = graph.edge_index(u, v).expect("edge was just inserted");
            let pair = if u < v { [w_uv, w_vu] } else { [w_vu, w_uv] };
            match weights[idx] {
                Some(prev) if prev != pair => {
                    return Err(Error::input(format!(
                        "edge {{{u},{v}}} repeated with different weights"
                    )))
                }
                _ => weights[idx] = Some(pair),
            }
        }
        Self::new(graph, weights.into_iter().map(Option::unwrap).collect())
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// `[w(u, v), w(v, u)]` for canonical edge `idx = (u, v)`.
    pub fn edge_weights(&self, idx: usize) -> [W; 2] {
        self.weights[idx]
    }

    /// Weight of directing the edge `{u, v}` from `u` to `v`, if the edge exists.
    pub fn weight(&self, u: usize, v: usize) -> Option<W> {
        let idx = self.graph.edge_index(u, v)?;
        Some(self.weights[idx][usize::from(u > v)])
    }

    /// All `2|E|` ordered arcs with their weights, lexicographically sorted.
    pub fn ordered_arcs(&self) -> Vec<(Arc, W)> {
        let mut arcs: Vec<(Arc, W)> = self
            .graph
            .edges()
            .iter()
            .zip(&self.weights)
            .flat_map(|(&(u, v), &[fw, bw])| [((u, v), fw), ((v, u), bw)])
            .collect();
        arcs.sort_by_key(|&(a, _)| a);
        arcs
    }

    /// True when every directional weight is equal (an OCM instance).
    pub fn is_uniform(&self) -> bool {
        let mut all = self.weights.iter().flatten();
        match all.next() {
            None => true,
            Some(&first) => all.all(|&w| w == first),
        }
    }
}

/// Every direction of every edge gets weight 1.
pub fn uniform_instance<W: Weight>(g: &UndirectedGraph) -> AocmInstance<W> {
    AocmInstance {
        graph: g.clone(),
        weights: vec![[W::one(), W::one()]; g.edge_count()],
    }
}

/// One chosen direction per undirected edge; `arcs()[i]` is the direction of
/// edge index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    node_count: usize,
    arcs: Vec<Arc>,
}

impl Orientation {
    /// Wraps raw directions without checking them; see [`validate_orientation`].
    pub fn from_arcs(node_count: usize, arcs: Vec<Arc>) -> Self {
        Orientation { node_count, arcs }
    }

    /// Edge `i` is reversed (high id to low id) iff `reversed(i)`.
    pub fn from_fn(g: &UndirectedGraph, mut reversed: impl FnMut(usize) -> bool) -> Self {
        let arcs = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if reversed(i) { (v, u) } else { (u, v) })
            .collect();
        Orientation {
            node_count: g.node_count(),
            arcs,
        }
    }

    /// Bit `i` of `mask` set means edge `i` points from its higher to its lower id.
    pub fn from_mask(g: &UndirectedGraph, mask: u64) -> Self {
        Self::from_fn(g, |i| mask >> i & 1 == 1)
    }

    /// Every edge directed from lower to higher id.
    pub fn low_to_high(g: &UndirectedGraph) -> Self {
        Self::from_fn(g, |_| false)
    }

    /// Per-edge bits, `true` where the edge points from higher to lower id.
    pub fn encoding(&self) -> Vec<bool> {
        self.arcs.iter().map(|&(u, v)| u > v).collect()
    }

    pub fn direction(&self, edge_index: usize) -> Arc {
        self.arcs[edge_index]
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

impl ArcSet for Orientation {
    fn node_count(&self) -> usize {
        self.node_count
    }

    fn arcs(&self) -> &[Arc] {
        &self.arcs
    }
}

/// True iff `o` assigns exactly one legal direction to every edge of `g`, in
/// edge-index order.
pub fn validate_orientation(g: &UndirectedGraph, o: &Orientation) -> bool {
    o.node_count == g.node_count()
        && o.arcs.len() == g.edge_count()
        && o
            .arcs
            .iter()
            .zip(g.edges())
            .all(|(&(a, b), &(u, v))| (a, b) == (u, v) || (a, b) == (v, u))
}

pub(crate) fn check_orientation(g: &UndirectedGraph, o: &Orientation) -> Result<()> {
    if validate_orientation(g, o) {
        Ok(())
    } else {
        Err(Error::contract("orientation does not match the instance's edges"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> UndirectedGraph {
        UndirectedGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn builds_triangle() {
        let g = c3();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn collapses_reverse_duplicate() {
        let b = build_undirected(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(b.graph.edges(), &[(0, 1)]);
        assert_eq!(b.duplicates_collapsed, 1);
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert!(matches!(build_undirected(1, &[(0, 0)]), Err(Error::Input(_))));
        assert!(matches!(build_undirected(2, &[(0, 2)]), Err(Error::Input(_))));
    }

    #[test]
    fn rebuild_is_identity() {
        let g = UndirectedGraph::new(5, &[(4, 1), (2, 3), (0, 4), (3, 1)]).unwrap();
        let again = UndirectedGraph::new(5, g.edges()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn uniform_weights() {
        let inst: AocmInstance<f64> = uniform_instance(&c3());
        assert_eq!(inst.ordered_arcs().len(), 6);
        assert!(inst.ordered_arcs().iter().all(|&(_, w)| w == 1.0));
        assert!(inst.is_uniform());

        let empty: AocmInstance<f64> = uniform_instance(&UndirectedGraph::empty(0));
        assert!(empty.ordered_arcs().is_empty());

        let p3 = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let inst: AocmInstance<i64> = uniform_instance(&p3);
        assert_eq!(inst.ordered_arcs().len(), 4);
        assert_eq!(inst.weight(1, 0), inst.weight(0, 1));
        assert_eq!(inst.weight(0, 2), None);
    }

    #[test]
    fn cubic_detection() {
        let k4 = UndirectedGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_cubic(&k4));
        assert!(!is_cubic(&c3()));
        let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        assert!(is_cubic(&UndirectedGraph::new(6, &k33).unwrap()));
    }

    #[test]
    fn orientation_validation() {
        let g = c3();
        let cyclic = Orientation::from_arcs(3, vec![(0, 1), (2, 0), (1, 2)]);
        assert!(validate_orientation(&g, &cyclic));

        let p3 = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let missing = Orientation::from_arcs(3, vec![(0, 1)]);
        assert!(!validate_orientation(&p3, &missing));

        let single = UndirectedGraph::new(3, &[(0, 1)]).unwrap();
        let wrong = Orientation::from_arcs(3, vec![(1, 2)]);
        assert!(!validate_orientation(&single, &wrong));
    }

    #[test]
    fn weighted_edges_are_canonicalised() {
        let inst = AocmInstance::from_weighted_edges(2, &[(1, 0, 2.0, 5.0)]).unwrap();
        assert_eq!(inst.weight(0, 1), Some(5.0));
        assert_eq!(inst.weight(1, 0), Some(2.0));
        assert!(AocmInstance::from_weighted_edges(2, &[(0, 1, 1.0, 2.0), (0, 1, 2.0, 2.0)]).is_err());
        assert!(AocmInstance::from_weighted_edges(2, &[(0, 1, f64::NAN, 2.0)]).is_err());
    }

    #[test]
    fn mask_orientation_has_no_two_cycles() {
        let g = c3();
        for mask in 0..8 {
            let o = Orientation::from_mask(&g, mask);
            assert!(validate_orientation(&g, &o));
            assert_eq!(o.len(), g.edge_count());
            for &(u, v) in o.arcs() {
                assert!(!o.arcs().contains(&(v, u)));
            }
        }
    }
}
