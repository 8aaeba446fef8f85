//! Cubic independent set to AOCM.
//!
//! For a cubic graph `G` the host `H = f(G)` has two nodes per edge of `G`
//! joined by a symmetric pair of *edge-arcs*, one associated with each
//! endpoint. Node `t(u, v)` is the head of the `v`-associated edge-arc on edge
//! `{u, v}`, so the `u`-associated edge-arc on that edge runs
//! `t(u, v) -> t(v, u)`.
//!
//! With `u`'s neighbours in ascending order `v1 < v2 < v3`, its two
//! *node-arcs* are `t(u, v1) -> t(v2, u)` and `t(u, v2) -> t(v3, u)`. The five
//! arcs of `u` form a chain `e1, n1, e2, n2, e3` in which consecutive arcs share
//! an endpoint in the same role (a tail or a head). All these arcs weigh 1;
//! node-arc reverses are added with weight 0.
//!
//! The decoder `g` maps an orientation to the vertices whose three edge-arcs
//! all lie in its maximum matching. Per vertex at most two associated arcs fit
//! in a matching unless all three edge-arcs do, which bounds any orientation's
//! value by `2n + |V3|`.

use crate::aocm::{solve_aocm_exact, AocmSolution};
use crate::control_matching::{is_control_matching, max_weight_control_matching, ControlMatching};
use crate::error::{Error, Result};
use crate::graph::{is_cubic, AocmInstance, Arc, Orientation, UndirectedGraph};
use crate::oracles::brute_mwis;
use crate::scalar::Weight;

/// Optimum scaling constant: `OPT_AOCM(f(G)) <= 12 * OPT_IS(G)` on cubic graphs.
pub const ALPHA: u32 = 12;
/// Solution-gap constant: `|OPT_IS - |g(y)|| <= 1 * |OPT_AOCM - v(y)|`.
pub const BETA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcRole {
    EdgeArc,
    NodeArc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcAssociation {
    pub role: ArcRole,
    /// The vertex of `G` the arc belongs to.
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GadgetInstance<W> {
    source: UndirectedGraph,
    host: AocmInstance<W>,
    // per vertex: [e1, n1, e2, n2, e3]
    chains: Vec<[Arc; 5]>,
    // unit-weight arcs, sorted
    roles: Vec<(Arc, ArcAssociation)>,
    t_labels: Vec<(usize, usize)>,
}

fn t_node(g: &UndirectedGraph, u: usize, v: usize) -> usize {
    2 * g.edge_index(u, v).expect("adjacent pair") + usize::from(u > v)
}

/// Builds `f(g)` for a cubic graph.
pub fn build_gadget_f<W: Weight>(g: &UndirectedGraph) -> Result<GadgetInstance<W>> {
    if !is_cubic(g) {
        return Err(Error::input("gadget construction needs a cubic graph"));
    }
    let n = g.node_count();
    let host_nodes = 2 * g.edge_count();

    let mut t_labels = vec![(0, 0); host_nodes];
    for &(u, v) in g.edges() {
        t_labels[t_node(g, u, v)] = (u, v);
        t_labels[t_node(g, v, u)] = (v, u);
    }

    let mut chains = Vec::with_capacity(n);
    let mut roles = Vec::with_capacity(5 * n);
    for u in 0..n {
        let nb = g.neighbors(u);
        let edge_arc = |v: usize| (t_node(g, u, v), t_node(g, v, u));
        let (e1, e2, e3) = (edge_arc(nb[0]), edge_arc(nb[1]), edge_arc(nb[2]));
        let n1 = (t_node(g, u, nb[0]), t_node(g, nb[1], u));
        let n2 = (t_node(g, u, nb[1]), t_node(g, nb[2], u));
        chains.push([e1, n1, e2, n2, e3]);
        for (arc, role) in [
            (e1, ArcRole::EdgeArc),
            (n1, ArcRole::NodeArc),
            (e2, ArcRole::EdgeArc),
            (n2, ArcRole::NodeArc),
            (e3, ArcRole::EdgeArc),
        ] {
            roles.push((arc, ArcAssociation { role, vertex: u }));
        }
    }
    roles.sort_unstable_by_key(|&(a, _)| a);

    let mut records = Vec::with_capacity(g.edge_count() + 2 * n);
    for &(u, v) in g.edges() {
        let (p, q) = (t_node(g, u, v), t_node(g, v, u));
        records.push((p, q, W::one(), W::one()));
    }
    for chain in &chains {
        for &(a, b) in [chain[1], chain[3]].iter() {
            records.push((a, b, W::one(), W::zero()));
        }
    }
    let host = AocmInstance::from_weighted_edges(host_nodes, &records)?;

    let gadget = GadgetInstance {
        source: g.clone(),
        host,
        chains,
        roles,
        t_labels,
    };
    gadget.assert_structure();
    Ok(gadget)
}

impl<W: Weight> GadgetInstance<W> {
    fn assert_structure(&self) {
        let n = self.source.node_count();
        assert_eq!(self.host.node_count(), 3 * n, "|W| = 3n");
        assert_eq!(self.roles.len(), 5 * n, "5n unit arcs");
        assert!(self.roles.windows(2).all(|w| w[0].0 != w[1].0), "unit arcs are distinct");
        assert_eq!(
            self.host.edge_count(),
            3 * n / 2 + 2 * n,
            "no parallel host edges"
        );
        let mut edge_arc_heads = vec![0u8; self.host.node_count()];
        for (&(_, head), assoc) in self.roles.iter().map(|(a, s)| (a, s)) {
            if assoc.role == ArcRole::EdgeArc {
                edge_arc_heads[head] += 1;
            }
        }
        assert!(edge_arc_heads.iter().all(|&c| c == 1), "each host node heads one edge-arc");
        for &(a, b) in self.roles.iter().map(|(arc, _)| arc) {
            assert!(self.host.weight(a, b) == Some(W::one()));
        }
    }

    pub fn source(&self) -> &UndirectedGraph {
        &self.source
    }

    /// The weighted symmetric host `H = f(G)`.
    pub fn host(&self) -> &AocmInstance<W> {
        &self.host
    }

    /// `[e1, n1, e2, n2, e3]` for vertex `u`.
    pub fn chain(&self, u: usize) -> [Arc; 5] {
        self.chains[u]
    }

    pub fn edge_arcs(&self, u: usize) -> [Arc; 3] {
        let c = self.chains[u];
        [c[0], c[2], c[4]]
    }

    pub fn node_arcs(&self, u: usize) -> [Arc; 2] {
        let c = self.chains[u];
        [c[1], c[3]]
    }

    /// Role and vertex of a unit-weight arc; `None` for zero-weight arcs.
    pub fn association(&self, arc: Arc) -> Option<ArcAssociation> {
        self.roles
            .binary_search_by_key(&arc, |&(a, _)| a)
            .ok()
            .map(|i| self.roles[i].1)
    }

    /// All unit-weight arcs with their associations, sorted by arc.
    pub fn unit_arcs(&self) -> &[(Arc, ArcAssociation)] {
        &self.roles
    }

    /// `(u, v)` such that host node `x` is `t(u, v)`.
    pub fn t_label(&self, x: usize) -> (usize, usize) {
        self.t_labels[x]
    }
}

/// Vertices of `G` whose three edge-arcs are all in the canonical maximum
/// matching of `o`. Always an independent set of `G`.
pub fn decode_g<W: Weight>(gi: &GadgetInstance<W>, o: &Orientation) -> Result<Vec<usize>> {
    let m = max_weight_control_matching(&gi.host, o)?;
    Ok(decode_matching(gi, &m))
}

/// The decoder applied to a given matching.
pub fn decode_matching<W: Weight, V: Copy>(gi: &GadgetInstance<W>, m: &ControlMatching<V>) -> Vec<usize> {
    (0..gi.source.node_count())
        .filter(|&u| gi.edge_arcs(u).iter().all(|&a| m.contains(a)))
        .collect()
}

/// Per-vertex configuration of associated arcs in a matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexCase {
    /// No edge-arc in the matching; up to both node-arcs fit.
    A,
    /// Only the central edge-arc; it blocks both node-arcs.
    BCentral,
    /// Only an outer edge-arc; the far node-arc still fits.
    BOuter,
    /// Two edge-arcs; no node-arc fits.
    C,
    /// All three edge-arcs.
    D,
}

impl VertexCase {
    pub fn label(self) -> &'static str {
        match self {
            VertexCase::A => "a",
            VertexCase::BCentral => "b(i)",
            VertexCase::BOuter => "b(ii)",
            VertexCase::C => "c",
            VertexCase::D => "d",
        }
    }

    /// Most associated arcs a matching can hold in this case.
    pub fn arc_bound(self) -> usize {
        match self {
            VertexCase::D => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCasePartition {
    pub cases: Vec<VertexCase>,
    /// Associated arcs of each vertex present in the matching.
    pub arcs_in_matching: Vec<usize>,
    /// `sets[i]` holds the vertices with exactly `i` edge-arcs in the matching.
    pub sets: [Vec<usize>; 4],
}

impl VertexCasePartition {
    pub fn v3(&self) -> &[usize] {
        &self.sets[3]
    }
}

/// Tags every vertex of `G` by how many (and which) of its edge-arcs appear in
/// `m`, and checks the per-case arc bound.
pub fn classify_vertex_cases<W: Weight, V: Copy>(
    gi: &GadgetInstance<W>,
    m: &ControlMatching<V>,
) -> Result<VertexCasePartition> {
    let host = &gi.host;
    if !is_control_matching(host.node_count(), m.arcs())
        || m.arcs().iter().any(|&(a, b)| host.weight(a, b).is_none())
    {
        return Err(Error::contract("not a control matching on the gadget host"));
    }
    let n = gi.source.node_count();
    let mut cases = Vec::with_capacity(n);
    let mut arcs_in_matching = Vec::with_capacity(n);
    let mut sets: [Vec<usize>; 4] = Default::default();
    for u in 0..n {
        let [e1, e2, e3] = gi.edge_arcs(u).map(|a| m.contains(a));
        let edge_count = [e1, e2, e3].iter().filter(|&&x| x).count();
        let node_count = gi.node_arcs(u).iter().filter(|&&a| m.contains(a)).count();
        let case = match edge_count {
            0 => VertexCase::A,
            1 if e2 => VertexCase::BCentral,
            1 => VertexCase::BOuter,
            2 => VertexCase::C,
            _ => VertexCase::D,
        };
        let total = edge_count + node_count;
        let node_arcs_allowed = match case {
            VertexCase::A => 2,
            VertexCase::BOuter => 1,
            _ => 0,
        };
        if node_count > node_arcs_allowed || total > case.arc_bound() {
            return Err(Error::contract(format!(
                "vertex {u} in case {} holds {total} associated arcs",
                case.label()
            )));
        }
        cases.push(case);
        arcs_in_matching.push(total);
        sets[edge_count].push(u);
    }
    Ok(VertexCasePartition {
        cases,
        arcs_in_matching,
        sets,
    })
}

/// Value of an orientation against the per-vertex bound `2n + |V3|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma3Check<W> {
    pub value: W,
    /// `2n + |V3|`.
    pub rhs: W,
    pub v3: usize,
    pub bound_holds: bool,
    /// `value == rhs`; required whenever the orientation is optimal.
    pub tight: bool,
    /// `2n + 2|V3|`, kept only so reports can show which constant the data
    /// supports.
    pub doubled_rhs: W,
}

impl<W: Weight> Lemma3Check<W> {
    /// False only when the orientation is optimal but the bound is not tight.
    pub fn consistent_with_optimum(&self, optimum: W) -> bool {
        !self.value.approx_eq(optimum) || self.tight
    }
}

pub fn check_lemma3<W: Weight>(gi: &GadgetInstance<W>, o: &Orientation) -> Result<Lemma3Check<W>> {
    let m = max_weight_control_matching(&gi.host, o)?;
    lemma3_for_matching(gi, &m)
}

fn lemma3_for_matching<W: Weight>(gi: &GadgetInstance<W>, m: &ControlMatching<W>) -> Result<Lemma3Check<W>> {
    let partition = classify_vertex_cases(gi, m)?;
    let n = gi.source.node_count();
    let v3 = partition.v3().len();
    let value = m.value();
    let rhs = W::from_count(2 * n + v3);
    Ok(Lemma3Check {
        value,
        rhs,
        v3,
        bound_holds: rhs.approx_ge(value),
        tight: value.approx_eq(rhs),
        doubled_rhs: W::from_count(2 * n + 2 * v3),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct LReductionReport<W> {
    pub opt_is: usize,
    pub opt_aocm: W,
    /// `v(y)`: the maximum matching value of the tested orientation.
    pub solution_value: W,
    /// `|g(y)|`.
    pub decoded_value: usize,
    pub alpha: u32,
    pub beta: u32,
    pub alpha_holds: bool,
    pub beta_holds: bool,
    /// `opt_aocm == 2n + opt_is`.
    pub optimum_identity_holds: bool,
    /// `4 * opt_is >= n`, the cubic-graph independent-set lower bound.
    pub cubic_bound_holds: bool,
    /// For an optimal `y`: whether `|g(y)| == opt_is`. `None` otherwise.
    pub optimal_decoding_holds: Option<bool>,
}

impl<W> LReductionReport<W> {
    pub fn all_hold(&self) -> bool {
        self.alpha_holds
            && self.beta_holds
            && self.optimum_identity_holds
            && self.cubic_bound_holds
            && self.optimal_decoding_holds != Some(false)
    }
}

/// Computes the source and target optima once, then checks any number of
/// orientations of `f(G)`.
#[derive(Debug, Clone)]
pub struct LReductionChecker<W> {
    gadget: GadgetInstance<W>,
    opt_is: usize,
    opt_is_set: Vec<usize>,
    optimum: AocmSolution<W>,
}

impl<W: Weight> LReductionChecker<W> {
    /// `OPT_IS` comes from the exhaustive oracle, `OPT_AOCM` from the exact solver.
    pub fn new(g: &UndirectedGraph) -> Result<Self> {
        let gadget = build_gadget_f::<W>(g)?;
        let (opt_is_set, opt_is) = brute_mwis(&vec![1i64; g.node_count()], g.edges())?;
        let optimum = solve_aocm_exact(&gadget.host)?;
        Ok(LReductionChecker {
            gadget,
            opt_is: opt_is as usize,
            opt_is_set,
            optimum,
        })
    }

    pub fn gadget(&self) -> &GadgetInstance<W> {
        &self.gadget
    }

    pub fn opt_is(&self) -> usize {
        self.opt_is
    }

    pub fn opt_is_witness(&self) -> &[usize] {
        &self.opt_is_set
    }

    pub fn optimum(&self) -> &AocmSolution<W> {
        &self.optimum
    }

    pub fn check(&self, y: &Orientation) -> Result<LReductionReport<W>> {
        let m = max_weight_control_matching(&self.gadget.host, y)?;
        let decoded_value = decode_matching(&self.gadget, &m).len();
        let n = self.gadget.source.node_count();
        let opt_aocm = self.optimum.value;
        let v = m.value();
        let is_gap = W::from_count(self.opt_is.abs_diff(decoded_value));
        let aocm_gap = (opt_aocm - v).abs();
        let optimal = v.approx_eq(opt_aocm);
        Ok(LReductionReport {
            opt_is: self.opt_is,
            opt_aocm,
            solution_value: v,
            decoded_value,
            alpha: ALPHA,
            beta: BETA,
            alpha_holds: W::from_count(ALPHA as usize * self.opt_is).approx_ge(opt_aocm),
            beta_holds: (W::from_count(BETA as usize) * aocm_gap).approx_ge(is_gap),
            optimum_identity_holds: opt_aocm.approx_eq(W::from_count(2 * n + self.opt_is)),
            cubic_bound_holds: 4 * self.opt_is >= n,
            optimal_decoding_holds: optimal.then_some(decoded_value == self.opt_is),
        })
    }
}

/// One-shot version of [`LReductionChecker`].
pub fn check_lreduction<W: Weight>(g: &UndirectedGraph, y: &Orientation) -> Result<LReductionReport<W>> {
    LReductionChecker::new(g)?.check(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, complete_graph};
    use crate::graph::ArcSet;

    #[test]
    fn k4_counts() {
        let gi = build_gadget_f::<i64>(&complete_graph(4)).unwrap();
        assert_eq!(gi.host().node_count(), 12);
        assert_eq!(gi.host().edge_count(), 14);
        let unit = gi.unit_arcs();
        assert_eq!(unit.len(), 20);
        assert_eq!(unit.iter().filter(|(_, a)| a.role == ArcRole::EdgeArc).count(), 12);
        assert_eq!(unit.iter().filter(|(_, a)| a.role == ArcRole::NodeArc).count(), 8);
    }

    #[test]
    fn k33_counts() {
        let gi = build_gadget_f::<i64>(&complete_bipartite(3, 3)).unwrap();
        assert_eq!(gi.host().node_count(), 18);
        let unit = gi.unit_arcs();
        assert_eq!(unit.iter().filter(|(_, a)| a.role == ArcRole::EdgeArc).count(), 18);
        assert_eq!(unit.iter().filter(|(_, a)| a.role == ArcRole::NodeArc).count(), 12);
    }

    #[test]
    fn non_cubic_rejected() {
        let c3 = UndirectedGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(build_gadget_f::<f64>(&c3), Err(Error::Input(_))));
    }

    #[test]
    fn chain_shares_endpoints() {
        let gi = build_gadget_f::<i64>(&complete_graph(4)).unwrap();
        for u in 0..4 {
            let [e1, n1, e2, n2, e3] = gi.chain(u);
            assert_eq!(n1.0, e1.0);
            assert_eq!(n1.1, e2.1);
            assert_eq!(n2.0, e2.0);
            assert_eq!(n2.1, e3.1);
            for a in [e1, e2, e3] {
                let (tail, head) = a;
                let (x, y) = gi.t_label(head);
                // head of u's edge-arc on {u, v} is t(v, u)
                assert_eq!(y, u);
                assert_eq!(gi.t_label(tail), (u, x));
            }
        }
    }

    #[test]
    fn node_arc_reverses_weigh_zero() {
        let gi = build_gadget_f::<i64>(&complete_graph(4)).unwrap();
        for u in 0..4 {
            for (a, b) in gi.node_arcs(u) {
                assert_eq!(gi.host().weight(a, b), Some(1));
                assert_eq!(gi.host().weight(b, a), Some(0));
            }
            for (a, b) in gi.edge_arcs(u) {
                assert_eq!(gi.host().weight(b, a), Some(1));
                let rev = gi.association((b, a)).unwrap();
                assert_eq!(rev.role, ArcRole::EdgeArc);
                assert_ne!(rev.vertex, u);
            }
        }
    }

    #[test]
    fn case_tags() {
        let gi = build_gadget_f::<i64>(&complete_graph(4)).unwrap();
        let empty = ControlMatching::new(vec![], 0i64);
        let p = classify_vertex_cases(&gi, &empty).unwrap();
        assert!(p.cases.iter().all(|&c| c == VertexCase::A));
        assert_eq!(p.sets[0], vec![0, 1, 2, 3]);

        let d = ControlMatching::new(gi.edge_arcs(0).to_vec(), 3i64);
        let p = classify_vertex_cases(&gi, &d).unwrap();
        assert_eq!(p.cases[0], VertexCase::D);
        assert_eq!(p.v3(), &[0]);
        assert_eq!(p.arcs_in_matching[0], 3);

        let central = ControlMatching::new(vec![gi.chain(0)[2]], 1i64);
        let p = classify_vertex_cases(&gi, &central).unwrap();
        assert_eq!(p.cases[0], VertexCase::BCentral);
        assert_eq!(p.arcs_in_matching[0], 1);

        let outer = ControlMatching::new(vec![gi.chain(0)[0], gi.chain(0)[3]], 2i64);
        let p = classify_vertex_cases(&gi, &outer).unwrap();
        assert_eq!(p.cases[0], VertexCase::BOuter);
        assert_eq!(p.arcs_in_matching[0], 2);
    }

    #[test]
    fn classify_rejects_non_matching() {
        let gi = build_gadget_f::<i64>(&complete_graph(4)).unwrap();
        let [e1, n1, ..] = gi.chain(0);
        assert!(classify_vertex_cases(&gi, &ControlMatching::new(vec![e1, n1], 2i64)).is_err());
    }

    #[test]
    fn vertex_zero_edge_arcs_absent() {
        let gi = build_gadget_f::<i64>(&complete_graph(4)).unwrap();
        let host = gi.host();
        // Every edge-arc pair points the way of the neighbour's arc.
        let o = Orientation::from_fn(host.graph(), |i| {
            let arc = host.graph().edges()[i];
            matches!(gi.association(arc), Some(a) if a.role == ArcRole::EdgeArc && a.vertex == 0)
        });
        let decoded = decode_g(&gi, &o).unwrap();
        assert!(!decoded.contains(&0));
        assert!(decoded.len() <= 1);
    }

    #[test]
    fn node_arcs_reversed_leaves_edge_arcs_only() {
        let gi = build_gadget_f::<i64>(&complete_graph(4)).unwrap();
        let host = gi.host();
        // Edge-arc pairs weigh 1 both ways, so only node-arcs can be turned
        // onto a zero-weight direction; the six edge-arcs stay disjoint.
        let o = Orientation::from_fn(host.graph(), |i| host.edge_weights(i) == [1, 0]);
        let check = check_lemma3(&gi, &o).unwrap();
        assert_eq!(check.value, 6);
        assert!(check.bound_holds);
        assert_eq!(o.node_count(), 12);
    }

    #[test]
    fn k4_reduction_report() {
        let checker = LReductionChecker::<i64>::new(&complete_graph(4)).unwrap();
        assert_eq!(checker.opt_is(), 1);
        assert_eq!(checker.optimum().value, 9);
        let report = checker.check(&checker.optimum().orientation).unwrap();
        assert_eq!(report.decoded_value, 1);
        assert_eq!(report.optimal_decoding_holds, Some(true));
        assert!(report.all_hold());
        let lemma3 = check_lemma3(checker.gadget(), &checker.optimum().orientation).unwrap();
        assert!(lemma3.tight);
        assert_eq!(lemma3.rhs, 9);
    }
}
