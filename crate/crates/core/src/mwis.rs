//! Exact maximum-weight independent set by branch and bound.
//!
//! Branches on a maximum-degree candidate (include, then exclude). The bound is
//! a greedy clique cover of the candidates: an independent set takes at most
//! one vertex per clique, so the sum of per-clique maxima bounds what remains.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::scalar::Weight;

/// Default cap on explored search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct MwisSolution<W> {
    /// Sorted vertex ids.
    pub set: Vec<usize>,
    pub weight: W,
    pub nodes_explored: u64,
}

/// Solves MWIS on the graph given by symmetric `adjacency`. `incumbent`, if
/// given, must be independent and seeds the lower bound. Vertices of
/// non-positive weight are never selected.
pub fn solve_mwis<W: Weight>(
    weights: &[W],
    adjacency: &[Vec<usize>],
    incumbent: Option<&[usize]>,
    node_budget: u64,
) -> Result<MwisSolution<W>> {
    let n = weights.len();
    if adjacency.len() != n {
        return Err(Error::contract("adjacency and weight lengths differ"));
    }
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (v, list) in adjacency.iter().enumerate() {
        for &w in list {
            if w >= n || w == v {
                return Err(Error::contract(format!("bad adjacency entry {v}-{w}")));
            }
            adj[v].insert(w);
            adj[w].insert(v);
        }
    }

    let mut search = Search {
        weights,
        adj,
        best_weight: W::zero(),
        best_set: Vec::new(),
        nodes: 0,
        budget: node_budget,
    };
    if let Some(seed) = incumbent {
        let mut seed: Vec<usize> = seed.iter().copied().filter(|&v| weights[v].is_profitable()).collect();
        seed.sort_unstable();
        seed.dedup();
        if !search.is_independent(&seed) {
            return Err(Error::contract("incumbent is not an independent set"));
        }
        search.best_weight = seed.iter().map(|&v| weights[v]).sum();
        search.best_set = seed;
    }

    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.extend((0..n).filter(|&v| weights[v].is_profitable()));
    let mut chosen = Vec::new();
    search.branch(candidates, W::zero(), &mut chosen)?;

    Ok(MwisSolution {
        set: search.best_set,
        weight: search.best_weight,
        nodes_explored: search.nodes,
    })
}

struct Search<'a, W> {
    weights: &'a [W],
    adj: Vec<FixedBitSet>,
    best_weight: W,
    best_set: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<W: Weight> Search<'_, W> {
    fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.adj[u].contains(v)))
    }

    fn branch(&mut self, mut cand: FixedBitSet, mut current: W, chosen: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Resource {
                what: "branch-and-bound search nodes".into(),
                limit: self.budget,
                best_lower_bound: self.best_weight.to_f64(),
            });
        }
        let mark = chosen.len();

        // Candidates with no conflicts left are always worth taking.
        let isolated: Vec<usize> = cand
            .ones()
            .filter(|&v| self.adj[v].intersection(&cand).next().is_none())
            .collect();
        for v in isolated {
            cand.set(v, false);
            chosen.push(v);
            current = current + self.weights[v];
        }

        if cand.is_clear() {
            if current.definitely_gt(self.best_weight) {
                self.best_weight = current;
                self.best_set = chosen.clone();
                self.best_set.sort_unstable();
            }
            chosen.truncate(mark);
            return Ok(());
        }

        if !(current + self.clique_cover_bound(&cand)).definitely_gt(self.best_weight) {
            chosen.truncate(mark);
            return Ok(());
        }

        let pivot = cand
            .ones()
            .max_by_key(|&v| (self.adj[v].intersection(&cand).count(), std::cmp::Reverse(v)))
            .expect("non-empty candidates");

        let mut with = cand.clone();
        with.difference_with(&self.adj[pivot]);
        with.set(pivot, false);
        chosen.push(pivot);
        self.branch(with, current + self.weights[pivot], chosen)?;
        chosen.pop();

        cand.set(pivot, false);
        self.branch(cand, current, chosen)?;
        chosen.truncate(mark);
        Ok(())
    }

    fn clique_cover_bound(&self, cand: &FixedBitSet) -> W {
        let mut order: Vec<usize> = cand.ones().collect();
        order.sort_by(|&a, &b| {
            self.weights[b]
                .partial_cmp(&self.weights[a])
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
        // (vertices adjacent to every member, heaviest member weight)
        let mut cliques: Vec<(FixedBitSet, W)> = Vec::new();
        for v in order {
            match cliques.iter_mut().find(|(common, _)| common.contains(v)) {
                Some((common, _)) => common.intersect_with(&self.adj[v]),
                None => cliques.push((self.adj[v].clone(), self.weights[v])),
            }
        }
        cliques.into_iter().map(|(_, w)| w).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    fn brute(weights: &[i64], edges: &[(usize, usize)]) -> i64 {
        let n = weights.len();
        (0u32..1 << n)
            .filter(|m| edges.iter().all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).map(|v| weights[v]).sum())
            .max()
            .unwrap()
    }

    #[test]
    fn small_cases() {
        let sol = solve_mwis(&[5i64, 2], &adjacency(2, &[(0, 1)]), None, 1000).unwrap();
        assert_eq!((sol.set, sol.weight), (vec![0], 5));

        let k4: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let sol = solve_mwis(&[1i64; 4], &adjacency(4, &k4), None, 1000).unwrap();
        assert_eq!(sol.weight, 1);

        let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let sol = solve_mwis(&[1i64; 6], &adjacency(6, &k33), None, 1000).unwrap();
        assert_eq!(sol.weight, 3);
    }

    #[test]
    fn random_against_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(1..=14);
            let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..10)).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let sol = solve_mwis(&weights, &adjacency(n, &edges), None, 1_000_000).unwrap();
            assert_eq!(sol.weight, brute(&weights, &edges).max(0));
            let total: i64 = sol.set.iter().map(|&v| weights[v]).sum();
            assert_eq!(total, sol.weight);
            for &(u, v) in &edges {
                assert!(!(sol.set.contains(&u) && sol.set.contains(&v)));
            }
        }
    }

    #[test]
    fn budget_exhaustion_reports_bound() {
        let n = 40;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let err = solve_mwis(&vec![1.0f64; n], &adjacency(n, &edges), Some(&[0, 2]), 2).unwrap_err();
        match err {
            Error::Resource { best_lower_bound, .. } => assert!(best_lower_bound.unwrap() >= 2.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_dependent_incumbent() {
        assert!(solve_mwis(&[1i64, 1], &adjacency(2, &[(0, 1)]), Some(&[0, 1]), 10).is_err());
    }
}
