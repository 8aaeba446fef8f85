//! AOCM solvers: exhaustive orientation enumeration, exact search through the
//! conflict-graph independent-set formulation, and a greedy heuristic.

use rayon::prelude::*;

use crate::control_matching::{is_control_matching, matching_value_unchecked, max_weight_control_matching, ControlMatching};
use crate::error::{Error, Result};
use crate::graph::{validate_orientation, AocmInstance, Arc, ArcSet, Orientation};
use crate::mwis::{solve_mwis, DEFAULT_NODE_BUDGET};
use crate::reductions::conflict::{aocm_to_wis, wis_to_aocm_solution};
use crate::scalar::Weight;

/// An orientation, a control matching on it, and the matching's weight.
#[derive(Debug, Clone, PartialEq)]
pub struct AocmSolution<W> {
    pub orientation: Orientation,
    pub matching: ControlMatching<W>,
    pub value: W,
}

impl<W: Weight> AocmSolution<W> {
    /// Pairs `o` with its canonical maximum-weight control matching.
    pub fn from_orientation(inst: &AocmInstance<W>, o: Orientation) -> Result<Self> {
        let matching = max_weight_control_matching(inst, &o)?;
        Ok(AocmSolution {
            value: matching.value(),
            orientation: o,
            matching,
        })
    }

    /// Checks the orientation, that the matching uses only oriented arcs and
    /// satisfies the degree rule, and that `value` is its weight.
    pub fn is_consistent(&self, inst: &AocmInstance<W>) -> bool {
        if !validate_orientation(inst.graph(), &self.orientation)
            || !is_control_matching(inst.node_count(), self.matching.arcs())
        {
            return false;
        }
        let mut total = W::zero();
        for &(u, v) in self.matching.arcs() {
            let Some(idx) = inst.graph().edge_index(u, v) else {
                return false;
            };
            if self.orientation.direction(idx) != (u, v) {
                return false;
            }
            total = total + inst.weight(u, v).expect("edge exists");
        }
        total.approx_eq(self.value) && self.value.approx_eq(self.matching.value())
    }
}

/// Default edge cap for [`solve_aocm_brute`].
pub const DEFAULT_BRUTE_EDGE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    pub edge_cap: usize,
    /// Number of contiguous counter ranges evaluated in parallel. The result
    /// does not depend on this.
    pub partitions: usize,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            edge_cap: DEFAULT_BRUTE_EDGE_CAP,
            partitions: 64,
        }
    }
}

/// Tries all `2^|E|` orientations. Among optimal ones, returns the one whose
/// per-edge encoding (edge 0 first, `false` = low to high) is lexicographically
/// smallest.
pub fn solve_aocm_brute<W: Weight>(inst: &AocmInstance<W>) -> Result<AocmSolution<W>> {
    solve_aocm_brute_with(inst, &BruteOptions::default())
}

pub fn solve_aocm_brute_with<W: Weight>(
    inst: &AocmInstance<W>,
    options: &BruteOptions,
) -> Result<AocmSolution<W>> {
    let m = inst.edge_count();
    let cap = options.edge_cap.min(63);
    if m > cap {
        return Err(Error::cap(
            format!("orientation enumeration over {m} edges"),
            cap as u64,
        ));
    }
    let total: u64 = 1 << m;
    let g = inst.graph();
    // Counter k maps to the orientation whose edge 0 is k's top bit, so
    // increasing k is increasing lexicographic encoding.
    let orientation_at = |k: u64| {
        let mask = if m == 0 { 0 } else { k.reverse_bits() >> (64 - m) };
        Orientation::from_mask(g, mask)
    };
    let ranges = partition(total, options.partitions.max(1));

    let best = ranges
        .par_iter()
        .map(|&(lo, hi)| {
            (lo..hi)
                .map(|k| matching_value_unchecked(inst, &orientation_at(k)))
                .fold(W::zero(), W::max_of)
        })
        .reduce(W::zero, W::max_of);

    let first = ranges
        .par_iter()
        .filter_map(|&(lo, hi)| {
            (lo..hi).find(|&k| matching_value_unchecked(inst, &orientation_at(k)).approx_ge(best))
        })
        .min()
        .expect("the maximum is attained");

    AocmSolution::from_orientation(inst, orientation_at(first))
}

fn partition(total: u64, parts: usize) -> Vec<(u64, u64)> {
    let parts = (parts as u64).min(total).max(1);
    let step = total.div_ceil(parts);
    (0..parts)
        .map(|p| (p * step, ((p + 1) * step).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

/// Exact AOCM through the conflict-graph reduction: a maximum-weight
/// independent set of arcs is a maximum-weight control matching over the best
/// orientation.
pub fn solve_aocm_exact<W: Weight>(inst: &AocmInstance<W>) -> Result<AocmSolution<W>> {
    solve_aocm_exact_with_budget(inst, DEFAULT_NODE_BUDGET)
}

pub fn solve_aocm_exact_with_budget<W: Weight>(
    inst: &AocmInstance<W>,
    node_budget: u64,
) -> Result<AocmSolution<W>> {
    let cg = aocm_to_wis(inst);
    let greedy = solve_aocm_greedy(inst);
    let seed: Vec<usize> = greedy
        .matching
        .arcs()
        .iter()
        .filter_map(|&a| cg.node_of_arc(a))
        .collect();
    let adjacency: Vec<Vec<usize>> = (0..cg.node_count()).map(|v| cg.neighbors(v).to_vec()).collect();
    let mwis = solve_mwis(cg.weights(), &adjacency, Some(&seed), node_budget)?;
    wis_to_aocm_solution(&cg, &mwis.set)
}

/// Greedy heuristic: take profitable directions heaviest first (ties in arc
/// order) while the reverse is unchosen and the head and tail slots are free,
/// orient the remaining edges low to high, then match optimally on the result.
pub fn solve_aocm_greedy<W: Weight>(inst: &AocmInstance<W>) -> AocmSolution<W> {
    let n = inst.node_count();
    let g = inst.graph();
    let mut arcs: Vec<(Arc, W)> = inst
        .ordered_arcs()
        .into_iter()
        .filter(|&(_, w)| w.is_profitable())
        .collect();
    arcs.sort_by(|(a, wa), (b, wb)| {
        wb.partial_cmp(wa)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(b))
    });

    let mut reversed: Vec<Option<bool>> = vec![None; g.edge_count()];
    let mut tail_used = vec![false; n];
    let mut head_used = vec![false; n];
    for ((u, v), _) in arcs {
        let idx = g.edge_index(u, v).expect("instance arc");
        if reversed[idx].is_some() || tail_used[u] || head_used[v] {
            continue;
        }
        reversed[idx] = Some(u > v);
        tail_used[u] = true;
        head_used[v] = true;
    }
    let o = Orientation::from_fn(g, |i| reversed[i].unwrap_or(false));
    debug_assert_eq!(o.node_count(), n);
    AocmSolution::from_orientation(inst, o).expect("orientation built from the instance")
}
