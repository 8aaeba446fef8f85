//! Control matchings: arc sets in which every node is the head of at most one
//! arc and the tail of at most one arc.
//!
//! A control matching of a digraph is exactly a matching of its bipartite
//! representation (an "out" copy and an "in" copy of every node, one bipartite
//! edge per arc). Cardinality matchings use Hopcroft-Karp on that
//! representation; weighted ones use a dense assignment solver.
//!
//! Ties are broken towards the lexicographically smallest sorted arc list.

use std::collections::VecDeque;

use crate::assignment::max_profit_assignment;
use crate::error::Result;
use crate::graph::{check_orientation, Arc, ArcSet, AocmInstance, Orientation};
use crate::scalar::Weight;

/// A control matching with its value: cardinality for unweighted matchings,
/// total weight otherwise. Arcs are kept sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlMatching<V> {
    arcs: Vec<Arc>,
    value: V,
}

impl<V: Copy> ControlMatching<V> {
    pub fn new(mut arcs: Vec<Arc>, value: V) -> Self {
        arcs.sort_unstable();
        ControlMatching { arcs, value }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn value(&self) -> V {
        self.value
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, arc: Arc) -> bool {
        self.arcs.binary_search(&arc).is_ok()
    }

    /// Matched nodes are the heads of matching arcs.
    pub fn matched_nodes(&self) -> Vec<usize> {
        let mut heads: Vec<usize> = self.arcs.iter().map(|&(_, h)| h).collect();
        heads.sort_unstable();
        heads
    }
}

/// True iff every node heads at most one arc and tails at most one arc.
pub fn is_control_matching(node_count: usize, arcs: &[Arc]) -> bool {
    let mut tail = vec![false; node_count];
    let mut head = vec![false; node_count];
    for &(u, v) in arcs {
        if u >= node_count || v >= node_count || tail[u] || head[v] {
            return false;
        }
        tail[u] = true;
        head[v] = true;
    }
    true
}

#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteEdge<W> {
    /// Node on the left ("out") side, the arc's tail.
    pub out: usize,
    /// Node on the right ("in") side, the arc's head.
    pub into: usize,
    pub weight: W,
    /// Position of the arc in the host's arc list.
    pub arc_index: usize,
}

/// Left and right copies of the node set, one edge per host arc.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteRepresentation<W> {
    pub side_size: usize,
    pub edges: Vec<BipartiteEdge<W>>,
}

impl<W> BipartiteRepresentation<W> {
    pub fn arc(&self, edge: usize) -> Arc {
        let e = &self.edges[edge];
        (e.out, e.into)
    }

    /// Inverse of the `arc_index` back-reference.
    pub fn edge_for_arc_index(&self, arc_index: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.arc_index == arc_index)
    }
}

/// Unweighted bipartite representation (every edge weight 1).
pub fn bipartite_representation<S: ArcSet + ?Sized>(d: &S) -> BipartiteRepresentation<usize> {
    BipartiteRepresentation {
        side_size: d.node_count(),
        edges: d
            .arcs()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| BipartiteEdge {
                out: u,
                into: v,
                weight: 1,
                arc_index: i,
            })
            .collect(),
    }
}

/// Bipartite representation of an oriented instance, carrying arc weights.
pub fn weighted_bipartite_representation<W: Weight>(
    inst: &AocmInstance<W>,
    o: &Orientation,
) -> Result<BipartiteRepresentation<W>> {
    check_orientation(inst.graph(), o)?;
    Ok(BipartiteRepresentation {
        side_size: inst.node_count(),
        edges: o
            .arcs()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| BipartiteEdge {
                out: u,
                into: v,
                weight: inst.edge_weights(i)[usize::from(u > v)],
                arc_index: i,
            })
            .collect(),
    })
}

/// Maximum-cardinality control matching; among maximum matchings the
/// lexicographically smallest sorted arc list is returned.
pub fn max_control_matching<S: ArcSet + ?Sized>(d: &S) -> ControlMatching<usize> {
    let n = d.node_count();
    let mut arcs: Vec<Arc> = d.arcs().to_vec();
    arcs.sort_unstable();
    arcs.dedup();
    let mut out_adj = vec![Vec::new(); n];
    for &(u, v) in &arcs {
        out_adj[u].push(v);
    }

    let mut state = MatchState::new(n);
    hopcroft_karp(&out_adj, &mut state);

    // Lock in arcs in canonical order whenever some maximum matching extends
    // the locked set with them.
    let mut locked_out = vec![false; n];
    let mut locked_in = vec![false; n];
    for &(u, v) in &arcs {
        if locked_out[u] || locked_in[v] {
            continue;
        }
        if state.mate_out[u] == Some(v) {
            locked_out[u] = true;
            locked_in[v] = true;
            continue;
        }
        let saved = state.clone();
        let prev_head = state.mate_out[u];
        let prev_tail = state.mate_in[v];
        if let Some(x) = prev_head {
            state.mate_in[x] = None;
        }
        if let Some(y) = prev_tail {
            state.mate_out[y] = None;
        }
        state.mate_out[u] = Some(v);
        state.mate_in[v] = Some(u);
        locked_out[u] = true;
        locked_in[v] = true;
        let restored_size = match (prev_head, prev_tail) {
            (Some(_), Some(_)) => augment_once(&out_adj, &mut state, &locked_in),
            // One endpoint was free: swapping keeps the size.
            _ => true,
        };
        if !restored_size {
            state = saved;
            locked_out[u] = false;
            locked_in[v] = false;
        }
    }

    let chosen: Vec<Arc> = (0..n)
        .filter_map(|u| state.mate_out[u].map(|v| (u, v)))
        .collect();
    let size = chosen.len();
    ControlMatching::new(chosen, size)
}

/// `max(1, n - |maximum control matching|)`.
pub fn driver_count<S: ArcSet + ?Sized>(d: &S) -> usize {
    let matched = max_control_matching(d).len();
    (d.node_count() - matched).max(1)
}

/// Maximum-weight control matching over the arcs of an orientation. Arcs of
/// non-positive weight never enter the matching. Among optimal matchings the
/// lexicographically smallest sorted arc list is returned.
pub fn max_weight_control_matching<W: Weight>(
    inst: &AocmInstance<W>,
    o: &Orientation,
) -> Result<ControlMatching<W>> {
    check_orientation(inst.graph(), o)?;
    let n = inst.node_count();
    let mut arcs = profitable_arcs(inst, o);
    arcs.sort_unstable_by_key(|&(a, _)| a);

    let mut tail_free = vec![true; n];
    let mut head_free = vec![true; n];
    let mut remaining = restricted_optimum(n, &arcs, &tail_free, &head_free);
    let mut chosen = Vec::new();
    for &((u, v), w) in &arcs {
        if !remaining.is_profitable() {
            break;
        }
        if !tail_free[u] || !head_free[v] {
            continue;
        }
        tail_free[u] = false;
        head_free[v] = false;
        let rest = restricted_optimum(n, &arcs, &tail_free, &head_free);
        if (w + rest).approx_ge(remaining) {
            chosen.push(((u, v), w));
            remaining = rest;
        } else {
            tail_free[u] = true;
            head_free[v] = true;
        }
    }
    let value = chosen.iter().map(|&(_, w)| w).sum();
    Ok(ControlMatching::new(
        chosen.into_iter().map(|(a, _)| a).collect(),
        value,
    ))
}

/// Value of a maximum-weight control matching on `o`, without constructing the
/// canonical arc set.
pub fn max_weight_matching_value<W: Weight>(inst: &AocmInstance<W>, o: &Orientation) -> Result<W> {
    check_orientation(inst.graph(), o)?;
    Ok(matching_value_unchecked(inst, o))
}

pub(crate) fn matching_value_unchecked<W: Weight>(inst: &AocmInstance<W>, o: &Orientation) -> W {
    let arcs = profitable_arcs(inst, o);
    if arcs.is_empty() {
        return W::zero();
    }
    let n = inst.node_count();
    restricted_optimum(n, &arcs, &vec![true; n], &vec![true; n])
}

fn profitable_arcs<W: Weight>(inst: &AocmInstance<W>, o: &Orientation) -> Vec<(Arc, W)> {
    o.arcs()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| ((u, v), inst.edge_weights(i)[usize::from(u > v)]))
        .filter(|&(_, w)| w.is_profitable())
        .collect()
}

// Optimum over arcs whose tail and head are both still free, solved on the
// compressed matrix of nodes that carry at least one usable arc.
fn restricted_optimum<W: Weight>(
    n: usize,
    arcs: &[(Arc, W)],
    tail_free: &[bool],
    head_free: &[bool],
) -> W {
    let usable: Vec<&(Arc, W)> = arcs
        .iter()
        .filter(|((u, v), _)| tail_free[*u] && head_free[*v])
        .collect();
    if usable.is_empty() {
        return W::zero();
    }
    let mut row_id = vec![usize::MAX; n];
    let mut col_id = vec![usize::MAX; n];
    let (mut rows, mut cols) = (0, 0);
    for ((u, v), _) in &usable {
        if row_id[*u] == usize::MAX {
            row_id[*u] = rows;
            rows += 1;
        }
        if col_id[*v] == usize::MAX {
            col_id[*v] = cols;
            cols += 1;
        }
    }
    let size = rows.max(cols);
    let mut profit = vec![vec![W::zero(); size]; size];
    for &&((u, v), w) in &usable {
        profit[row_id[u]][col_id[v]] = w;
    }
    max_profit_assignment(&profit).0
}

#[derive(Debug, Clone)]
struct MatchState {
    mate_out: Vec<Option<usize>>,
    mate_in: Vec<Option<usize>>,
}

impl MatchState {
    fn new(n: usize) -> Self {
        MatchState {
            mate_out: vec![None; n],
            mate_in: vec![None; n],
        }
    }
}

fn hopcroft_karp(out_adj: &[Vec<usize>], state: &mut MatchState) {
    let n = out_adj.len();
    const UNREACHED: usize = usize::MAX;
    let mut dist = vec![UNREACHED; n];
    loop {
        // Layer the free tails, then alternate through matched heads.
        let mut queue = VecDeque::new();
        for u in 0..n {
            if state.mate_out[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = UNREACHED;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &out_adj[u] {
                match state.mate_in[v] {
                    None => found = true,
                    Some(w) if dist[w] == UNREACHED => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; n];
        for u in 0..n {
            if state.mate_out[u].is_none() {
                layered_dfs(u, out_adj, state, &mut dist, &mut next);
            }
        }
    }
}

fn layered_dfs(
    u: usize,
    out_adj: &[Vec<usize>],
    state: &mut MatchState,
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[u] < out_adj[u].len() {
        let v = out_adj[u][next[u]];
        next[u] += 1;
        let ok = match state.mate_in[v] {
            None => true,
            Some(w) => {
                dist[w] == dist[u].wrapping_add(1) && layered_dfs(w, out_adj, state, dist, next)
            }
        };
        if ok {
            state.mate_out[u] = Some(v);
            state.mate_in[v] = Some(u);
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

// One BFS augmenting path avoiding locked heads (locked tails are matched to
// locked heads, so they are unreachable too).
fn augment_once(out_adj: &[Vec<usize>], state: &mut MatchState, locked_in: &[bool]) -> bool {
    let n = out_adj.len();
    let mut parent_of_head: Vec<Option<usize>> = vec![None; n];
    let mut seen_tail = vec![false; n];
    let mut queue = VecDeque::new();
    for u in 0..n {
        if state.mate_out[u].is_none() {
            seen_tail[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in &out_adj[u] {
            if locked_in[v] || parent_of_head[v].is_some() {
                continue;
            }
            parent_of_head[v] = Some(u);
            match state.mate_in[v] {
                None => {
                    let mut head = v;
                    loop {
                        let tail = parent_of_head[head].expect("on path");
                        let next_head = state.mate_out[tail];
                        state.mate_out[tail] = Some(head);
                        state.mate_in[head] = Some(tail);
                        match next_head {
                            Some(h) => head = h,
                            None => return true,
                        }
                    }
                }
                Some(w) => {
                    if !seen_tail[w] {
                        seen_tail[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Digraph, UndirectedGraph};

    fn digraph(n: usize, arcs: &[Arc]) -> Digraph {
        Digraph::new(n, arcs).unwrap()
    }

    #[test]
    fn path_triangle_star() {
        let m = max_control_matching(&digraph(3, &[(0, 1), (1, 2)]));
        assert_eq!(m.arcs(), &[(0, 1), (1, 2)]);
        assert_eq!(max_control_matching(&digraph(3, &[(0, 1), (1, 2), (2, 0)])).len(), 3);
        assert_eq!(max_control_matching(&digraph(4, &[(0, 1), (0, 2), (0, 3)])).len(), 1);
    }

    #[test]
    fn star_tie_break_is_lexicographic() {
        let m = max_control_matching(&digraph(4, &[(0, 3), (0, 2), (0, 1)]));
        assert_eq!(m.arcs(), &[(0, 1)]);
    }

    #[test]
    fn lexicographic_needs_rearrangement() {
        // Node 0 is never a head, so the optimum is 3; two optima exist.
        let d = digraph(4, &[(0, 1), (0, 2), (1, 3), (2, 1), (3, 2)]);
        let m = max_control_matching(&d);
        assert_eq!(m.arcs(), &[(0, 1), (1, 3), (3, 2)]);
        assert!(is_control_matching(4, m.arcs()));
    }

    #[test]
    fn drivers() {
        assert_eq!(driver_count(&digraph(3, &[(0, 1), (1, 2)])), 1);
        assert_eq!(driver_count(&digraph(3, &[])), 3);
        assert_eq!(driver_count(&digraph(3, &[(0, 1), (1, 2), (2, 0)])), 1);
        assert_eq!(driver_count(&digraph(0, &[])), 1);
    }

    #[test]
    fn bipartite_shapes() {
        let tri = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let b = bipartite_representation(&tri);
        assert_eq!(b.side_size, 3);
        assert_eq!(b.edges.len(), 3);
        for (i, &arc) in tri.arcs().iter().enumerate() {
            let e = b.edge_for_arc_index(i).unwrap();
            assert_eq!(b.arc(e), arc);
        }
        assert!(bipartite_representation(&digraph(0, &[])).edges.is_empty());
        let two = bipartite_representation(&digraph(2, &[(0, 1), (1, 0)]));
        assert_eq!(two.edges.len(), 2);
        assert_eq!((two.edges[0].out, two.edges[0].into), (0, 1));
        assert_eq!((two.edges[1].out, two.edges[1].into), (1, 0));
    }

    #[test]
    fn weighted_examples() {
        let inst = AocmInstance::from_weighted_edges(2, &[(0, 1, 5.0, 2.0)]).unwrap();
        let o = Orientation::low_to_high(inst.graph());
        assert_eq!(max_weight_control_matching(&inst, &o).unwrap().value(), 5.0);

        let c3 = UndirectedGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let inst = crate::graph::uniform_instance::<i64>(&c3);
        let cyc = Orientation::from_arcs(3, vec![(0, 1), (2, 0), (1, 2)]);
        assert_eq!(max_weight_control_matching(&inst, &cyc).unwrap().value(), 3);

        let p3 = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = crate::graph::uniform_instance::<i64>(&p3);
        let inward = Orientation::from_arcs(3, vec![(0, 1), (2, 1)]);
        let m = max_weight_control_matching(&inst, &inward).unwrap();
        assert_eq!(m.value(), 1);
        assert_eq!(m.arcs(), &[(0, 1)]);
    }

    #[test]
    fn weighted_rejects_bad_orientation() {
        let inst = AocmInstance::from_weighted_edges(3, &[(0, 1, 1.0, 1.0)]).unwrap();
        let bad = Orientation::from_arcs(3, vec![(1, 2)]);
        assert!(max_weight_control_matching(&inst, &bad).is_err());
    }

    #[test]
    fn negative_and_zero_arcs_are_skipped() {
        let inst =
            AocmInstance::from_weighted_edges(3, &[(0, 1, -3.0, -1.0), (1, 2, 0.0, 0.0)]).unwrap();
        let o = Orientation::low_to_high(inst.graph());
        let m = max_weight_control_matching(&inst, &o).unwrap();
        assert!(m.is_empty());
        assert_eq!(m.value(), 0.0);
    }
}
