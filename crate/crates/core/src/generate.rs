//! Named graphs and seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{AocmInstance, Arc, Digraph, Orientation, UndirectedGraph};
use crate::scalar::Weight;

pub fn complete_graph(n: usize) -> UndirectedGraph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    UndirectedGraph::new(n, &edges).expect("valid")
}

/// Parts `0..a` and `a..a + b`.
pub fn complete_bipartite(a: usize, b: usize) -> UndirectedGraph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    UndirectedGraph::new(a + b, &edges).expect("valid")
}

pub fn cycle_graph(n: usize) -> UndirectedGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    UndirectedGraph::new(n, &edges).expect("n >= 3")
}

pub fn path_graph(n: usize) -> UndirectedGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    UndirectedGraph::new(n, &edges).expect("valid")
}

/// Centre 0 with leaves `1..=leaves`.
pub fn star_graph(leaves: usize) -> UndirectedGraph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    UndirectedGraph::new(leaves + 1, &edges).expect("valid")
}

/// Triangular prism: two triangles `0 1 2` and `3 4 5` joined by `i -- i + 3`.
pub fn prism_graph() -> UndirectedGraph {
    UndirectedGraph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).expect("valid")
}

/// The 3-cube: nodes are 3-bit words, edges join words differing in one bit.
pub fn cube_graph() -> UndirectedGraph {
    let edges: Vec<_> = (0..8usize)
        .flat_map(|u| (0..3).map(move |b| (u, u ^ 1 << b)))
        .filter(|&(u, v)| u < v)
        .collect();
    UndirectedGraph::new(8, &edges).expect("valid")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i + 5`.
pub fn petersen_graph() -> UndirectedGraph {
    let edges: Vec<_> = (0..5)
        .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)])
        .collect();
    UndirectedGraph::new(10, &edges).expect("valid")
}

/// Connected graph on `n` nodes: a random spanning tree plus random extra
/// edges, at most `max_edges` in total (never fewer than `n - 1`).
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, max_edges: usize) -> UndirectedGraph {
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent.min(order[i]), parent.max(order[i])));
    }
    let mut extra: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    extra.shuffle(rng);
    let room = max_edges.saturating_sub(edges.len());
    let take = rng.gen_range(0..=room.min(extra.len()));
    edges.extend_from_slice(&extra[..take]);
    UndirectedGraph::new(n, &edges).expect("valid")
}

/// Each ordered pair becomes an arc with probability `p`.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let arcs: Vec<Arc> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, &arcs).expect("valid")
}

/// Random graph with up to `max_edges` edges and integer weights drawn
/// uniformly from `lo..=hi` for each direction.
pub fn random_instance<W: Weight, R: Rng>(
    rng: &mut R,
    n: usize,
    max_edges: usize,
    lo: i64,
    hi: i64,
) -> AocmInstance<W> {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_edges.min(pairs.len()));
    let g = UndirectedGraph::new(n, &pairs[..m]).expect("valid");
    let mut draw = || W::from_i64(rng.gen_range(lo..=hi)).expect("weight in range");
    let weights = (0..g.edge_count()).map(|_| [draw(), draw()]).collect();
    AocmInstance::new(g, weights).expect("finite")
}

pub fn random_orientation<R: Rng>(rng: &mut R, g: &UndirectedGraph) -> Orientation {
    Orientation::from_fn(g, |_| rng.gen_bool(0.5))
}

/// Every simple digraph on `n` labelled nodes (`2^(n(n-1))` of them).
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let slots: Vec<Arc> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .collect();
    assert!(slots.len() < 64, "too many digraphs to enumerate");
    (0u64..1 << slots.len()).map(move |mask| {
        let arcs: Vec<Arc> = slots
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect();
        Digraph::new(n, &arcs).expect("valid")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn named_graphs() {
        assert_eq!(complete_graph(4).edge_count(), 6);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(cycle_graph(5).edge_count(), 5);
        assert_eq!(path_graph(3).edges(), &[(0, 1), (1, 2)]);
        assert_eq!(star_graph(3).degree(0), 3);
        for g in [prism_graph(), cube_graph(), petersen_graph()] {
            assert!(crate::graph::is_cubic(&g));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn random_graphs_are_connected_and_bounded() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for _ in 0..200 {
            let n = rng.gen_range(1..=7);
            let g = random_connected_graph(&mut rng, n, 12);
            assert!(g.is_connected());
            assert!(g.edge_count() <= 12.max(n.saturating_sub(1)));
        }
    }

    #[test]
    fn digraph_enumeration_size() {
        assert_eq!(all_digraphs(3).count(), 64);
    }
}
