//! Conflict graph: one node per ordered arc of the symmetric digraph, weighted
//! like the arc. Two nodes conflict when their arcs are reverses of each other,
//! share a head, or share a tail. Independent sets are exactly the control
//! matchings that fit in some orientation.

use crate::aocm::AocmSolution;
use crate::control_matching::ControlMatching;
use crate::error::{Error, Result};
use crate::graph::{AocmInstance, Arc, Orientation};
use crate::scalar::Weight;

#[derive(Debug, Clone, PartialEq)]
pub struct ConflictGraph<W> {
    instance: AocmInstance<W>,
    // node i stands for arcs[i]; sorted lexicographically
    arcs: Vec<Arc>,
    weights: Vec<W>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Builds the conflict graph of `inst`.
pub fn aocm_to_wis<W: Weight>(inst: &AocmInstance<W>) -> ConflictGraph<W> {
    let (arcs, weights): (Vec<Arc>, Vec<W>) = inst.ordered_arcs().into_iter().unzip();
    let n = inst.node_count();
    let mut by_tail = vec![Vec::new(); n];
    let mut by_head = vec![Vec::new(); n];
    for (i, &(u, v)) in arcs.iter().enumerate() {
        by_tail[u].push(i);
        by_head[v].push(i);
    }
    let mut edges = Vec::new();
    for (i, &(u, v)) in arcs.iter().enumerate() {
        let reverse = arcs.binary_search(&(v, u)).expect("symmetric digraph");
        if i < reverse {
            edges.push((i, reverse));
        }
    }
    for group in by_tail.iter().chain(&by_head) {
        for (a, &i) in group.iter().enumerate() {
            for &j in &group[a + 1..] {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let mut adjacency = vec![Vec::new(); arcs.len()];
    for &(i, j) in &edges {
        adjacency[i].push(j);
        adjacency[j].push(i);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    ConflictGraph {
        instance: inst.clone(),
        arcs,
        weights,
        adjacency,
        edges,
    }
}

impl<W: Weight> ConflictGraph<W> {
    pub fn instance(&self) -> &AocmInstance<W> {
        &self.instance
    }

    pub fn node_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[W] {
        &self.weights
    }

    /// The arc that conflict node `i` stands for.
    pub fn arc(&self, i: usize) -> Arc {
        self.arcs[i]
    }

    pub fn node_of_arc(&self, arc: Arc) -> Option<usize> {
        self.arcs.binary_search(&arc).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().all(|&i| i < self.node_count())
            && set.iter().enumerate().all(|(a, &i)| {
                set[a + 1..]
                    .iter()
                    .all(|&j| i != j && self.adjacency[i].binary_search(&j).is_err())
            })
    }

    pub fn set_weight(&self, set: &[usize]) -> W {
        set.iter().map(|&i| self.weights[i]).sum()
    }
}

/// Maps an independent set back to an AOCM solution: its arcs form the
/// matching and fix their edges' directions; other edges run low to high.
pub fn wis_to_aocm_solution<W: Weight>(cg: &ConflictGraph<W>, set: &[usize]) -> Result<AocmSolution<W>> {
    if !cg.is_independent(set) {
        return Err(Error::contract("vertex set is not independent in the conflict graph"));
    }
    let g = cg.instance.graph();
    let mut reversed = vec![false; g.edge_count()];
    let arcs: Vec<Arc> = set.iter().map(|&i| cg.arcs[i]).collect();
    for &(u, v) in &arcs {
        reversed[g.edge_index(u, v).expect("instance arc")] = u > v;
    }
    let value = cg.set_weight(set);
    Ok(AocmSolution {
        orientation: Orientation::from_fn(g, |i| reversed[i]),
        matching: ControlMatching::new(arcs, value),
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{uniform_instance, ArcSet, UndirectedGraph};

    #[test]
    fn single_edge() {
        let inst = AocmInstance::from_weighted_edges(2, &[(0, 1, 5.0, 2.0)]).unwrap();
        let cg = aocm_to_wis(&inst);
        assert_eq!(cg.node_count(), 2);
        assert_eq!(cg.edges(), &[(0, 1)]);
        let i = cg.node_of_arc((0, 1)).unwrap();
        let sol = wis_to_aocm_solution(&cg, &[i]).unwrap();
        assert_eq!(sol.value, 5.0);
        assert_eq!(sol.orientation.arcs(), &[(0, 1)]);
        assert!(wis_to_aocm_solution(&cg, &[0, 1]).is_err());
    }

    #[test]
    fn path_conflicts() {
        let p3 = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cg = aocm_to_wis(&uniform_instance::<i64>(&p3));
        assert_eq!(cg.node_count(), 4);
        // arcs: (0,1) (1,0) (1,2) (2,1)
        // reverse pairs {0,1},{2,3}; shared tail 1: (1,0),(1,2); shared head 1: (0,1),(2,1)
        assert_eq!(cg.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn empty_set_orients_low_to_high() {
        let c3 = UndirectedGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let cg = aocm_to_wis(&uniform_instance::<i64>(&c3));
        let sol = wis_to_aocm_solution(&cg, &[]).unwrap();
        assert_eq!(sol.value, 0);
        assert!(sol.matching.is_empty());
        assert_eq!(sol.orientation.arcs(), c3.edges());
    }

    #[test]
    fn cyclic_triple() {
        let c3 = UndirectedGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = uniform_instance::<i64>(&c3);
        let cg = aocm_to_wis(&inst);
        let set: Vec<usize> = [(0, 1), (1, 2), (2, 0)]
            .iter()
            .map(|&a| cg.node_of_arc(a).unwrap())
            .collect();
        let sol = wis_to_aocm_solution(&cg, &set).unwrap();
        assert_eq!(sol.value, 3);
        assert_eq!(sol.orientation.arcs(), &[(0, 1), (2, 0), (1, 2)]);
        assert!(sol.is_consistent(&inst));
    }
}
