//! Exhaustive reference implementations for verification.
//!
//! Nothing here calls into the solvers: each oracle enumerates its whole search
//! space (pruning only candidates that violate the constraint being enumerated)
//! and works from the plain graph types. Size caps are hard errors.

use crate::control_matching::ControlMatching;
use crate::error::{Error, Result};
use crate::graph::{AocmInstance, Arc, ArcSet, Digraph, Orientation, UndirectedGraph};
use crate::reductions::CycleCover;
use crate::scalar::Weight;

pub const CONTROL_MATCHING_ARC_CAP: usize = 20;
pub const TWO_MATCHING_EDGE_CAP: usize = 20;
pub const MWIS_NODE_CAP: usize = 26;
pub const DCC_NODE_CAP: usize = 9;
pub const ORIENTATION_EDGE_CAP: usize = 24;

fn cap_check(what: &str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::cap(format!("{what} oracle over {size}"), cap as u64))
    } else {
        Ok(())
    }
}

/// Maximum-cardinality control matching by enumerating every arc subset in
/// which each node is the tail of at most one arc and the head of at most one.
/// Subsets are generated tail by tail (each tail picks one out-arc or none),
/// which visits exactly the subsets satisfying the tail rule.
pub fn brute_control_matching<S: ArcSet + ?Sized>(d: &S) -> Result<ControlMatching<usize>> {
    let weighted: Vec<(Arc, usize)> = d.arcs().iter().map(|&a| (a, 1)).collect();
    let (arcs, value) = enumerate_matchings(d.node_count(), &weighted, 0usize)?;
    Ok(ControlMatching::new(arcs, value))
}

/// Maximum-weight control matching over the arcs of `o` (weights from `inst`).
pub fn brute_weighted_control_matching<W: Weight>(
    inst: &AocmInstance<W>,
    o: &Orientation,
) -> Result<ControlMatching<W>> {
    let weighted: Vec<(Arc, W)> = o
        .arcs()
        .iter()
        .map(|&(u, v)| {
            inst.weight(u, v)
                .map(|w| ((u, v), w))
                .ok_or_else(|| Error::contract(format!("({u},{v}) is not an instance arc")))
        })
        .collect::<Result<_>>()?;
    let (arcs, value) = enumerate_matchings(o.node_count(), &weighted, W::zero())?;
    Ok(ControlMatching::new(arcs, value))
}

fn enumerate_matchings<V>(n: usize, arcs: &[(Arc, V)], zero: V) -> Result<(Vec<Arc>, V)>
where
    V: Copy + PartialOrd + std::ops::Add<Output = V>,
{
    cap_check("control matching", arcs.len(), CONTROL_MATCHING_ARC_CAP)?;
    let mut by_tail: Vec<Vec<(Arc, V)>> = vec![Vec::new(); n];
    for &(a, w) in arcs {
        by_tail[a.0].push((a, w));
    }

    struct Walk<'a, V> {
        by_tail: &'a [Vec<(Arc, V)>],
        head_used: Vec<bool>,
        current: Vec<Arc>,
        best: (Vec<Arc>, V),
    }

    fn visit<V: Copy + PartialOrd + std::ops::Add<Output = V>>(w: &mut Walk<'_, V>, tail: usize, value: V) {
        if tail == w.by_tail.len() {
            if value > w.best.1 {
                w.best = (w.current.clone(), value);
            }
            return;
        }
        visit(w, tail + 1, value);
        for &((u, v), weight) in &w.by_tail[tail] {
            if !w.head_used[v] {
                w.head_used[v] = true;
                w.current.push((u, v));
                visit(w, tail + 1, value + weight);
                w.current.pop();
                w.head_used[v] = false;
            }
        }
    }

    let mut walk = Walk {
        by_tail: &by_tail,
        head_used: vec![false; n],
        current: Vec::new(),
        best: (Vec::new(), zero),
    };
    visit(&mut walk, 0, zero);
    Ok(walk.best)
}

/// Size of a maximum simple 2-matching, by enumerating edge subsets with every
/// degree at most two.
pub fn brute_2matching(g: &UndirectedGraph) -> Result<usize> {
    cap_check("2-matching", g.edge_count(), TWO_MATCHING_EDGE_CAP)?;
    fn visit(edges: &[(usize, usize)], i: usize, degree: &mut [u8], size: usize, best: &mut usize) {
        if i == edges.len() {
            *best = (*best).max(size);
            return;
        }
        visit(edges, i + 1, degree, size, best);
        let (u, v) = edges[i];
        if degree[u] < 2 && degree[v] < 2 {
            degree[u] += 1;
            degree[v] += 1;
            visit(edges, i + 1, degree, size + 1, best);
            degree[u] -= 1;
            degree[v] -= 1;
        }
    }
    let mut best = 0;
    visit(g.edges(), 0, &mut vec![0; g.node_count()], 0, &mut best);
    Ok(best)
}

/// Maximum-weight independent set by enumerating all independent sets.
/// Returns the sorted set and its weight; the empty set (weight 0) is allowed.
/// Ties go to the lexicographically smallest set.
pub fn brute_mwis<W: Weight>(weights: &[W], edges: &[(usize, usize)]) -> Result<(Vec<usize>, W)> {
    let n = weights.len();
    cap_check("independent set", n, MWIS_NODE_CAP)?;
    let mut adjacent = vec![0u32; n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::input(format!("edge ({u},{v}) out of range")));
        }
        adjacent[u] |= 1 << v;
        adjacent[v] |= 1 << u;
    }
    fn visit<W: Weight>(weights: &[W], adjacent: &[u32], i: usize, set: u32, value: W, best: &mut (u32, W)) {
        if i == weights.len() {
            if value > best.1 {
                *best = (set, value);
            }
            return;
        }
        if adjacent[i] & set == 0 {
            visit(weights, adjacent, i + 1, set | 1 << i, value + weights[i], best);
        }
        visit(weights, adjacent, i + 1, set, value, best);
    }
    let mut best = (0u32, W::zero());
    visit(weights, &adjacent, 0, 0, W::zero(), &mut best);
    let set = (0..n).filter(|&v| best.0 >> v & 1 == 1).collect();
    Ok((set, best.1))
}

/// Searches every successor assignment (a permutation with no fixed points and
/// no 2-cycles, along arcs of `d`) for a cover by directed cycles of length at
/// least three.
pub fn brute_3dcc(d: &Digraph) -> Result<Option<CycleCover>> {
    let n = d.node_count();
    cap_check("3-cycle cover", n, DCC_NODE_CAP)?;
    let mut out = vec![Vec::new(); n];
    for &(u, v) in d.arcs() {
        out[u].push(v);
    }
    fn visit(out: &[Vec<usize>], v: usize, succ: &mut [usize], has_pred: &mut [bool]) -> bool {
        if v == out.len() {
            return true;
        }
        for &w in &out[v] {
            if has_pred[w] || succ[w] == v {
                continue;
            }
            succ[v] = w;
            has_pred[w] = true;
            if visit(out, v + 1, succ, has_pred) {
                return true;
            }
            has_pred[w] = false;
            succ[v] = usize::MAX;
        }
        false
    }
    let mut succ = vec![usize::MAX; n];
    if !visit(&out, 0, &mut succ, &mut vec![false; n]) {
        return Ok(None);
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if !seen[start] {
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = succ[v];
            }
            cycles.push(cycle);
        }
    }
    Ok(Some(CycleCover::new(cycles)))
}

/// All `2^|E|` orientations in counter order (bit `i` set: edge `i` runs high
/// to low).
pub fn enumerate_orientations(g: &UndirectedGraph) -> Result<impl Iterator<Item = Orientation> + '_> {
    cap_check("orientation", g.edge_count(), ORIENTATION_EDGE_CAP)?;
    Ok((0u64..1 << g.edge_count()).map(move |mask| Orientation::from_mask(g, mask)))
}
