use std::path::Path;

use ocm_core::aocm::{solve_aocm_brute_with, solve_aocm_exact_with_budget, BruteOptions};
use ocm_core::graph::uniform_instance;
use ocm_core::io::{read_edge_list, write_conflict_graph, write_gadget, write_weighted, EdgeListFile};
use ocm_core::reductions::{aocm_to_wis, build_gadget_f, dcc3_to_aocm};
use ocm_core::{solve_aocm_greedy, ArcSet, Error, ExactInstance, Instance, Solution, Weight};

use crate::{CliError, Mode, ReduceKind, RunReport};

pub(crate) fn read(path: &Path) -> Result<EdgeListFile<f64>, CliError> {
    Ok(read_edge_list(path)?)
}

pub(crate) fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn mismatch(path: &Path, expected: &str) -> CliError {
    Error::Input(format!("{}: expected {expected}", path.display())).into()
}

pub(crate) fn weighted_or_uniform(path: &Path, file: EdgeListFile<f64>) -> Result<Instance, CliError> {
    match file {
        EdgeListFile::Weighted(inst) => Ok(inst),
        EdgeListFile::Undirected(g) => Ok(uniform_instance(&g)),
        _ => Err(mismatch(path, "an undirected or weighted edge list")),
    }
}

pub(crate) fn solve_ocm(path: &Path) -> Result<RunReport, CliError> {
    let EdgeListFile::Undirected(g) = read(path)? else {
        return Err(mismatch(path, "an undirected edge list"));
    };
    let sol = ocm_core::solve_ocm(&g);
    let mut r = RunReport::new(format!("solve-ocm {}", path.display()));
    r.field("n", g.node_count())
        .field("edges", g.edge_count())
        .field("two_matching", sol.two_matching.len())
        .field("value", sol.matching.len())
        .field("drivers", sol.driver_count())
        .arcs("orientation", sol.orientation.arcs())
        .arcs("matching", sol.matching.arcs());
    Ok(r)
}

pub(crate) fn solve_aocm(
    path: &Path,
    mode: Mode,
    partitions: usize,
    edge_cap: usize,
    node_budget: u64,
) -> Result<RunReport, CliError> {
    let inst = weighted_or_uniform(path, read(path)?)?;
    let mode_name = match mode {
        Mode::Brute => "brute",
        Mode::Exact => "exact",
        Mode::Greedy => "greedy",
    };
    let mut r = RunReport::new(format!("solve-aocm --mode {mode_name} {}", path.display()));
    r.field("n", inst.node_count()).field("edges", inst.edge_count());

    let sol: Solution = match mode {
        Mode::Brute => solve_aocm_brute_with(&inst, &BruteOptions { edge_cap, partitions })?,
        Mode::Exact => solve_aocm_exact_with_budget(&inst, node_budget)?,
        Mode::Greedy => solve_aocm_greedy(&inst),
    };
    r.field("value", sol.value).field("matched_arcs", sol.matching.len());
    if mode == Mode::Greedy {
        match solve_aocm_exact_with_budget(&inst, node_budget) {
            Ok(best) => {
                r.field("optimum", best.value)
                    .field("optimal", sol.value.approx_ge(best.value));
            }
            Err(Error::Resource { .. }) => {
                r.field("optimal", "unknown");
            }
            Err(e) => return Err(e.into()),
        }
    }
    r.arcs("orientation", sol.orientation.arcs())
        .arcs("matching", sol.matching.arcs());
    Ok(r)
}

pub(crate) fn reduce(kind: ReduceKind, input: &Path, output: &Path) -> Result<RunReport, CliError> {
    let file = read(input)?;
    let name = match kind {
        ReduceKind::Dcc3 => "3dcc",
        ReduceKind::Wis => "wis",
        ReduceKind::Is3 => "is3",
    };
    let mut r = RunReport::new(format!("reduce {name} {} {}", input.display(), output.display()));
    let text = match (kind, file) {
        (
            ReduceKind::Dcc3,
            EdgeListFile::Directed {
                digraph,
                self_loops_dropped,
            },
        ) => {
            let inst: ExactInstance = dcc3_to_aocm(&digraph);
            r.field("input_nodes", digraph.node_count())
                .field("input_arcs", digraph.arc_count())
                .field("dropped_arcs", self_loops_dropped)
                .field("output_nodes", inst.node_count())
                .field("output_edges", inst.edge_count());
            write_weighted(&inst)
        }
        (ReduceKind::Dcc3, _) => return Err(mismatch(input, "a directed edge list")),
        (ReduceKind::Wis, file) => {
            let inst = weighted_or_uniform(input, file)?;
            let cg = aocm_to_wis(&inst);
            r.field("input_nodes", inst.node_count())
                .field("input_edges", inst.edge_count())
                .field("output_nodes", cg.node_count())
                .field("output_edges", cg.edge_count());
            write_conflict_graph(&cg)
        }
        (ReduceKind::Is3, EdgeListFile::Undirected(g)) => {
            let gi = build_gadget_f::<i64>(&g)?;
            r.field("input_nodes", g.node_count())
                .field("input_edges", g.edge_count())
                .field("output_nodes", gi.host().node_count())
                .field("output_edges", gi.host().edge_count())
                .field("unit_arcs", gi.unit_arcs().len());
            write_gadget(&gi)
        }
        (ReduceKind::Is3, _) => return Err(mismatch(input, "an undirected cubic graph")),
    };
    write(output, &text)?;
    Ok(r)
}
