//! Graphviz output. Matching arcs are drawn bold red, zero-weight directions
//! dashed, and gadget arcs take the colour of the vertex they belong to.

use std::fmt::Write as _;
use std::path::Path;

use ocm_core::aocm::solve_aocm_exact;
use ocm_core::io::EdgeListFile;
use ocm_core::reductions::{build_gadget_f, ArcRole, GadgetInstance};
use ocm_core::{max_control_matching, solve_aocm_greedy, Arc, ArcSet, Error, Instance, Solution};

use crate::commands::{read, write};
use crate::{CliError, RunReport};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#d62728",
];

struct Drawing {
    out: String,
    arcs: usize,
    highlighted: usize,
}

impl Drawing {
    fn new(n: usize) -> Self {
        let mut out = String::from("digraph G {\n");
        for v in 0..n {
            writeln!(out, "  {v};").unwrap();
        }
        Drawing {
            out,
            arcs: 0,
            highlighted: 0,
        }
    }

    fn arc(&mut self, (u, v): Arc, attrs: &[String], highlighted: bool) {
        let mut attrs = attrs.to_vec();
        if highlighted {
            // A colour list draws parallel strokes, keeping any vertex colour.
            match attrs.iter().position(|a| a.starts_with("color=")) {
                Some(i) => {
                    let base = attrs[i]["color=".len()..].trim_matches('"').to_owned();
                    attrs[i] = format!("color=\"red:{base}\"");
                }
                None => attrs.push("color=red".into()),
            }
            attrs.push("penwidth=3".into());
            self.highlighted += 1;
        }
        self.arcs += 1;
        if attrs.is_empty() {
            writeln!(self.out, "  {u} -> {v};").unwrap();
        } else {
            writeln!(self.out, "  {u} -> {v} [{}];", attrs.join(", ")).unwrap();
        }
    }

    fn finish(mut self) -> (String, usize, usize) {
        self.out.push_str("}\n");
        (self.out, self.arcs, self.highlighted)
    }
}

fn solve_weighted(inst: &Instance) -> Result<Solution, CliError> {
    match solve_aocm_exact(inst) {
        Err(Error::Resource { .. }) => Ok(solve_aocm_greedy(inst)),
        other => Ok(other?),
    }
}

/// Both directions of every edge, labelled with their weights.
fn draw_weighted(inst: &Instance, sol: &Solution, gadget: Option<&GadgetInstance<f64>>) -> Drawing {
    let mut d = Drawing::new(inst.node_count());
    for (arc, w) in inst.ordered_arcs() {
        let mut attrs = vec![format!("label=\"{w}\"")];
        if w == 0.0 {
            attrs.push("style=dashed".into());
        }
        match gadget.and_then(|gi| gi.association(arc)) {
            Some(a) => {
                let role = match a.role {
                    ArcRole::EdgeArc => "edge",
                    ArcRole::NodeArc => "node",
                };
                attrs.push(format!("color=\"{}\"", PALETTE[a.vertex % PALETTE.len()]));
                attrs.push(format!("tooltip=\"{role}-arc of vertex {}\"", a.vertex));
            }
            None if w == 0.0 => attrs.push("color=gray".into()),
            None => {}
        }
        d.arc(arc, &attrs, sol.matching.contains(arc));
    }
    d
}

pub(crate) fn export(input: &Path, output: &Path, gadget: bool) -> Result<RunReport, CliError> {
    let file = read(input)?;
    let flag = if gadget { " --gadget" } else { "" };
    let mut r = RunReport::new(format!("export-dot{flag} {} {}", input.display(), output.display()));
    let (text, arcs, highlighted, n) = match file {
        EdgeListFile::Undirected(g) if gadget => {
            let gi = build_gadget_f::<f64>(&g)?;
            let sol = solve_weighted(gi.host())?;
            r.field("value", sol.value);
            let (t, a, h) = draw_weighted(gi.host(), &sol, Some(&gi)).finish();
            (t, a, h, gi.host().node_count())
        }
        _ if gadget => return Err(Error::Input(format!("{}: --gadget needs a cubic graph", input.display())).into()),
        EdgeListFile::Undirected(g) => {
            let sol = ocm_core::solve_ocm(&g);
            r.field("value", sol.matching.len());
            let mut d = Drawing::new(g.node_count());
            for &arc in sol.orientation.arcs() {
                d.arc(arc, &[], sol.matching.contains(arc));
            }
            let (t, a, h) = d.finish();
            (t, a, h, g.node_count())
        }
        EdgeListFile::Weighted(inst) => {
            let sol = solve_weighted(&inst)?;
            r.field("value", sol.value);
            let (t, a, h) = draw_weighted(&inst, &sol, None).finish();
            (t, a, h, inst.node_count())
        }
        EdgeListFile::Directed { digraph, .. } => {
            let m = max_control_matching(&digraph);
            r.field("value", m.len());
            let mut d = Drawing::new(digraph.node_count());
            for &arc in digraph.arcs() {
                d.arc(arc, &[], m.contains(arc));
            }
            let (t, a, h) = d.finish();
            (t, a, h, digraph.node_count())
        }
        EdgeListFile::NodeWeighted(nw) => {
            let mut out = String::from("graph G {\n");
            for (v, w) in nw.weights.iter().enumerate() {
                writeln!(out, "  {v} [label=\"{v}:{w}\"];").unwrap();
            }
            for (u, v) in nw.graph.edges() {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
            out.push_str("}\n");
            (out, nw.graph.edge_count(), 0, nw.graph.node_count())
        }
    };
    write(output, &text)?;
    r.field("nodes", n).field("arcs", arcs).field("highlighted", highlighted);
    Ok(r)
}
