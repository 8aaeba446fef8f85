//! Invariant suites run from the command line. Random cases are drawn up
//! front from a seeded generator and checked in parallel; results are
//! collected in case order so the report does not depend on thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use ocm_core::generate::{
    all_digraphs, complete_bipartite, complete_graph, cube_graph, petersen_graph, prism_graph, random_digraph,
    random_instance, random_orientation,
};
use ocm_core::oracles::{brute_3dcc, brute_mwis, enumerate_orientations};
use ocm_core::reductions::{
    aocm_to_wis, check_lemma3, classify_vertex_cases, dcc3_to_aocm, decode_g, extract_cycle_cover,
    wis_to_aocm_solution, LReductionChecker, ALPHA, BETA,
};
use ocm_core::{
    max_weight_control_matching, solve_aocm_brute, ArcSet, Digraph, ExactGadget, ExactInstance, Orientation,
    UndirectedGraph,
};

use crate::{CliError, RunReport, Suite};

type Outcome = Result<(), String>;

pub(crate) fn run(suite: Suite, seed: u64, max_n: Option<usize>, samples: Option<usize>) -> Result<RunReport, CliError> {
    let (name, default_max_n) = match suite {
        Suite::Lemma1 => ("lemma1", 6),
        Suite::Lemma2 => ("lemma2", 4),
        Suite::Lemma3 => ("lemma3", 6),
        Suite::Lreduction => ("lreduction", 6),
    };
    let max_n = max_n.unwrap_or(default_max_n);
    let mut r = RunReport::new(format!("verify {name} --seed {seed} --max-n {max_n}"));
    let mut failures = Vec::new();
    match suite {
        Suite::Lemma1 => lemma1(&mut r, &mut failures, seed, max_n, samples.unwrap_or(200))?,
        Suite::Lemma2 => lemma2(&mut r, &mut failures, seed, max_n, samples.unwrap_or(100))?,
        Suite::Lemma3 => lemma3(&mut r, &mut failures, seed, max_n, samples.unwrap_or(1000))?,
        Suite::Lreduction => lreduction(&mut r, &mut failures, seed, max_n, samples.unwrap_or(1000))?,
    }
    r.field("failures", failures.len());
    r.block("counterexamples", failures.clone());
    r.field("status", if failures.is_empty() { "pass" } else { "fail" });
    if failures.is_empty() {
        Ok(r)
    } else {
        Err(CliError::Verification(r))
    }
}

fn collect(outcomes: Vec<Result<Outcome, ocm_core::Error>>, failures: &mut Vec<String>) -> Result<(), CliError> {
    for o in outcomes {
        if let Err(msg) = o? {
            failures.push(msg);
        }
    }
    Ok(())
}

fn describe_instance(inst: &ExactInstance) -> String {
    let edges: Vec<String> = inst
        .graph()
        .edges()
        .iter()
        .enumerate()
        .map(|(i, (u, v))| {
            let [a, b] = inst.edge_weights(i);
            format!("{u}-{v}:{a}/{b}")
        })
        .collect();
    format!("n={} [{}]", inst.node_count(), edges.join(" "))
}

fn describe_digraph(d: &Digraph) -> String {
    let arcs: Vec<String> = d.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect();
    format!("n={} [{}]", d.node_count(), arcs.join(" "))
}

fn lemma1(r: &mut RunReport, failures: &mut Vec<String>, seed: u64, max_n: usize, samples: usize) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<ExactInstance> = (0..samples)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            random_instance(&mut rng, n, 10, 0, 10)
        })
        .collect();
    let outcomes = cases
        .par_iter()
        .map(|inst| -> Result<Outcome, ocm_core::Error> {
            let cg = aocm_to_wis(inst);
            let (set, wis) = brute_mwis(cg.weights(), cg.edges())?;
            let aocm = solve_aocm_brute(inst)?.value;
            let lifted = wis_to_aocm_solution(&cg, &set)?;
            Ok(if wis == aocm && lifted.is_consistent(inst) && lifted.value == wis {
                Ok(())
            } else {
                Err(format!("{} wis={wis} aocm={aocm}", describe_instance(inst)))
            })
        })
        .collect();
    collect(outcomes, failures)?;
    r.field("cases", samples);
    Ok(())
}

fn lemma2_case(d: &Digraph) -> Result<Outcome, ocm_core::Error> {
    let cover = brute_3dcc(d)?;
    let sol = solve_aocm_brute(&dcc3_to_aocm::<i64>(d))?;
    let reaches_n = sol.value == d.node_count() as i64;
    let extracted = extract_cycle_cover(d, &sol)?;
    let ok = cover.is_some() == reaches_n && extracted.as_ref().map_or(!reaches_n, |c| c.is_valid_for(d));
    Ok(if ok {
        Ok(())
    } else {
        Err(format!(
            "{} cover={} value={}",
            describe_digraph(d),
            cover.is_some(),
            sol.value
        ))
    })
}

fn lemma2(r: &mut RunReport, failures: &mut Vec<String>, seed: u64, max_n: usize, samples: usize) -> Result<(), CliError> {
    let exhaustive_n = max_n.min(4);
    let exhaustive: Vec<Digraph> = (1..=exhaustive_n).flat_map(all_digraphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = Vec::new();
    if max_n > exhaustive_n {
        for _ in 0..samples {
            let n = rng.gen_range(exhaustive_n + 1..=max_n);
            random.push(random_digraph(&mut rng, n, 0.35));
        }
    }
    let outcomes = exhaustive.par_iter().chain(random.par_iter()).map(lemma2_case).collect();
    collect(outcomes, failures)?;
    r.field("exhaustive_cases", exhaustive.len()).field("random_cases", random.len());
    Ok(())
}

fn cubic_graphs(max_n: usize) -> Vec<(&'static str, UndirectedGraph)> {
    [
        ("K4", complete_graph(4)),
        ("K33", complete_bipartite(3, 3)),
        ("prism", prism_graph()),
        ("cube", cube_graph()),
        ("petersen", petersen_graph()),
    ]
    .into_iter()
    .filter(|(_, g)| g.node_count() <= max_n)
    .collect()
}

/// All orientations when the host has at most this many edges.
const EXHAUSTIVE_HOST_EDGES: usize = 16;

fn sample_orientations(gi: &ExactGadget, rng: &mut ChaCha8Rng, samples: usize) -> (bool, Vec<Orientation>) {
    let host = gi.host().graph();
    if host.edge_count() <= EXHAUSTIVE_HOST_EDGES {
        (true, enumerate_orientations(host).expect("small host").collect())
    } else {
        (false, (0..samples).map(|_| random_orientation(rng, host)).collect())
    }
}

fn lemma3(r: &mut RunReport, failures: &mut Vec<String>, seed: u64, max_n: usize, samples: usize) -> Result<(), CliError> {
    r.field("rhs", "2n+|V3|").field("proof_text_rhs", "2n+2|V3|");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in cubic_graphs(max_n) {
        let checker = LReductionChecker::<i64>::new(&g)?;
        let gi = checker.gadget();
        let n = g.node_count() as i64;
        let (exhaustive, mut ys) = sample_orientations(gi, &mut rng, samples);
        ys.push(checker.optimum().orientation.clone());
        let outcomes: Vec<Result<(Outcome, i64), ocm_core::Error>> = ys
            .par_iter()
            .map(|y| {
                let check = check_lemma3(gi, y)?;
                let decoded = decode_g(gi, y)?;
                let m = max_weight_control_matching(gi.host(), y)?;
                let v3 = classify_vertex_cases(gi, &m)?.v3().len();
                let ok = check.bound_holds && g.is_independent_set(&decoded) && decoded.len() == v3;
                let verdict = if ok {
                    Ok(())
                } else {
                    Err(format!(
                        "{name} y={:?} value={} rhs={} decoded={:?} v3={v3}",
                        y.encoding().iter().map(|&b| u8::from(b)).collect::<Vec<_>>(),
                        check.value,
                        check.rhs,
                        decoded
                    ))
                };
                Ok((verdict, check.value))
            })
            .collect();
        let mut max_value = 0;
        for o in outcomes {
            let (verdict, value) = o?;
            max_value = max_value.max(value);
            if let Err(msg) = verdict {
                failures.push(msg);
            }
        }
        let optimum = checker.optimum().value;
        let at_opt = check_lemma3(gi, &checker.optimum().orientation)?;
        let key = |k: &str| format!("{name}.{k}");
        r.field(&key("orientations"), ys.len())
            .field(&key("exhaustive"), exhaustive)
            .field(&key("max_value"), max_value)
            .field(&key("optimum"), optimum)
            .field(&key("rhs_at_optimum"), at_opt.rhs)
            .field(&key("proof_text_rhs_at_optimum"), at_opt.doubled_rhs)
            .field(&key("tight_at_optimum"), at_opt.tight);
        if exhaustive && max_value != optimum {
            failures.push(format!("{name}: exhaustive maximum {max_value} differs from exact optimum {optimum}"));
        }
        if optimum != 2 * n + checker.opt_is() as i64 {
            failures.push(format!("{name}: optimum {optimum} is not 2n + OPT_IS"));
        }
    }
    Ok(())
}

fn lreduction(
    r: &mut RunReport,
    failures: &mut Vec<String>,
    seed: u64,
    max_n: usize,
    samples: usize,
) -> Result<(), CliError> {
    r.field("alpha", ALPHA).field("beta", BETA);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, g) in cubic_graphs(max_n) {
        let checker = LReductionChecker::<i64>::new(&g)?;
        let host = checker.gadget().host().graph();
        let mut ys: Vec<Orientation> = (0..samples).map(|_| random_orientation(&mut rng, host)).collect();
        ys.push(checker.optimum().orientation.clone());
        let reports: Vec<_> = ys.par_iter().map(|y| checker.check(y)).collect::<Result<_, _>>()?;
        for (y, rep) in ys.iter().zip(&reports) {
            if !rep.all_hold() {
                failures.push(format!(
                    "{name} y={:?} {rep:?}",
                    y.encoding().iter().map(|&b| u8::from(b)).collect::<Vec<_>>()
                ));
            }
        }
        let at_opt = reports.last().expect("optimum appended");
        let key = |k: &str| format!("{name}.{k}");
        r.field(&key("opt_is"), checker.opt_is())
            .field(&key("opt_aocm"), checker.optimum().value)
            .field(&key("alpha_bound"), ALPHA as usize * checker.opt_is())
            .field(&key("orientations"), ys.len())
            .field(&key("alpha_holds"), reports.iter().all(|x| x.alpha_holds))
            .field(&key("beta_holds"), reports.iter().all(|x| x.beta_holds))
            .field(&key("optimum_identity_holds"), at_opt.optimum_identity_holds)
            .field(&key("decoded_at_optimum"), at_opt.decoded_value)
            .field(&key("optimal_decoding_holds"), at_opt.optimal_decoding_holds == Some(true));
        if at_opt.optimal_decoding_holds != Some(true) {
            failures.push(format!("{name}: decoding the optimum gives {} not {}", at_opt.decoded_value, checker.opt_is()));
        }
    }
    Ok(())
}
