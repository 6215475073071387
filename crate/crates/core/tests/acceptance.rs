//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails or exceeds its time budget.
//!
//! Run with `cargo test -p partition-graph --test acceptance -- --nocapture`.

mod common;

use std::time::{Duration, Instant};

use partition_graph::atlas::{layout, render_atlas, PanelMode};
use partition_graph::local_invariants::{local_simplex_dimension, neighborhood_graph, LocalInvariants};
use partition_graph::morphology::{main_chain, side_edges};
use partition_graph::{Analysis, AnalysisOptions, Partition, PartitionGraph};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn analyses(range: std::ops::RangeInclusive<u32>) -> Vec<Analysis> {
    let opts = AnalysisOptions { radii: vec![0, 1, 2, 3, 4], ..AnalysisOptions::default() };
    range.map(|n| Analysis::compute(n, &opts).unwrap()).collect()
}

// (n, p(n), |E|, |SC_n|, |F_n|)
const TABLE_1: [(u32, usize, usize, usize, usize); 12] = [
    (1, 1, 0, 1, 1),
    (2, 2, 1, 0, 2),
    (3, 3, 2, 1, 3),
    (4, 5, 5, 1, 5),
    (5, 7, 9, 1, 7),
    (6, 11, 17, 1, 10),
    (7, 15, 28, 1, 11),
    (8, 22, 47, 2, 14),
    (9, 30, 73, 2, 15),
    (10, 42, 114, 2, 18),
    (11, 56, 170, 2, 19),
    (12, 77, 253, 3, 22),
];

// (n, max degree, max dim_loc)
const TABLE_2: [(u32, usize, usize); 12] = [
    (1, 0, 0),
    (2, 1, 1),
    (3, 2, 1),
    (4, 3, 2),
    (5, 4, 2),
    (6, 6, 2),
    (7, 7, 3),
    (8, 8, 3),
    (9, 8, 3),
    (10, 12, 3),
    (11, 13, 4),
    (12, 14, 4),
];

// (n, |C^(1)|, |C^(2)|, |V(Sp_n)|, |V \ F_n|)
const TABLE_3: [(u32, usize, usize, usize, usize); 12] = [
    (1, 0, 0, 1, 0),
    (2, 0, 0, 0, 0),
    (3, 0, 0, 1, 0),
    (4, 0, 0, 1, 0),
    (5, 0, 0, 1, 0),
    (6, 1, 1, 1, 1),
    (7, 2, 4, 1, 4),
    (8, 8, 8, 6, 8),
    (9, 5, 15, 12, 15),
    (10, 16, 24, 6, 24),
    (11, 11, 27, 12, 37),
    (12, 21, 45, 11, 55),
];

fn table_1() -> Outcome {
    for (a, &(n, p, e, sc, f)) in analyses(1..=12).iter().zip(&TABLE_1) {
        let got = (
            a.n(),
            a.graph.vertex_count(),
            a.graph.edge_count(),
            a.morphology.axis.len(),
            a.morphology.framework.members.len(),
        );
        check(got == (n, p, e, sc, f), || format!("n={n}: got {got:?}, expected {:?}", (n, p, e, sc, f)))?;
    }
    Ok(())
}

fn table_2() -> Outcome {
    for (a, &(n, deg, dim)) in analyses(1..=12).iter().zip(&TABLE_2) {
        let got = (a.invariants.max_degree(), a.invariants.max_dim_loc());
        check(got == (deg, dim), || format!("n={n}: got {got:?}, expected {:?}", (deg, dim)))?;
    }
    Ok(())
}

fn table_3() -> Outcome {
    for (a, &(n, c1, c2, sp, int)) in analyses(1..=12).iter().zip(&TABLE_3) {
        let m = &a.morphology;
        let got =
            (m.central_region(1).len(), m.central_region(2).len(), m.spine.vertices.len(), m.framework.interior.len());
        check(got == (c1, c2, sp, int), || format!("n={n}: got {got:?}, expected {:?}", (c1, c2, sp, int)))?;
    }
    Ok(())
}

fn staircase_law() -> Outcome {
    for t in 2..=6u32 {
        let n = t * (t + 1) / 2;
        let g = PartitionGraph::build(n).map_err(|e| e.to_string())?;
        let delta = Partition::staircase(t).unwrap();
        let v = g.index_of(&delta).ok_or("staircase missing")?;
        let dim = local_simplex_dimension(&g, v).map_err(|e| e.to_string())?;
        let (t, got_deg) = (t as usize, g.degree(v));
        check(got_deg == t * (t - 1) && dim == t - 1, || {
            format!("t={t}: degree {got_deg} (want {}), dim_loc {dim} (want {})", t * (t - 1), t - 1)
        })?;
    }
    Ok(())
}

fn structural_propositions() -> Outcome {
    for n in 2..=25u32 {
        let g = PartitionGraph::build(n).map_err(|e| e.to_string())?;
        let count = g.vertex_count();

        let leaves: Vec<usize> = (0..count).filter(|&v| g.degree(v) == 1).collect();
        let antennae = vec![
            g.index_of(&Partition::single_row(n).unwrap()).unwrap(),
            g.index_of(&Partition::single_column(n).unwrap()).unwrap(),
        ];
        check(leaves == antennae, || format!("n={n}: degree-one vertices {leaves:?}"))?;

        for u in 0..count {
            let cu = g.conjugate_of(u);
            check(g.conjugate_of(cu) == u, || format!("n={n}: conjugation not involutive at {u}"))?;
            for w in 0..count {
                let same = g.are_adjacent(u, w) == g.are_adjacent(cu, g.conjugate_of(w));
                check(same, || format!("n={n}: adjacency not preserved for ({u},{w})"))?;
            }
        }

        let chain: Vec<usize> = main_chain(n).unwrap().iter().map(|p| g.index_of(p).unwrap()).collect();
        check(chain.len() == n as usize, || format!("n={n}: chain length"))?;
        for w in chain.windows(2) {
            check(g.are_adjacent(w[0], w[1]), || format!("n={n}: chain not a path"))?;
        }
        let dist = g.distances_from(&[antennae[0]]).map_err(|e| e.to_string())?;
        check(dist[antennae[1]] == n - 1, || format!("n={n}: antenna distance {}", dist[antennae[1]]))?;

        let (left, _) = side_edges(n).unwrap();
        let chain_parts = main_chain(n).unwrap();
        let meet: Vec<&Partition> = left.iter().filter(|p| chain_parts.contains(p)).collect();
        check(meet == vec![&Partition::hook(n, 1).unwrap()], || format!("n={n}: L∩M = {meet:?}"))?;

        check(common::component_count(&g) == 1, || format!("n={n}: not connected"))?;
    }
    Ok(())
}

fn clique_oracle() -> Outcome {
    for n in 1..=10u32 {
        let g = PartitionGraph::build(n).map_err(|e| e.to_string())?;
        let inv = LocalInvariants::compute(&g).map_err(|e| e.to_string())?;
        for v in 0..g.vertex_count() {
            let hood = neighborhood_graph(&g, v).map_err(|e| e.to_string())?;
            let oracle = common::brute_force_clique(&hood.graph);
            check(inv.dim_loc(v) == oracle, || {
                format!("n={n} {}: {} vs oracle {oracle}", g.vertex(v), inv.dim_loc(v))
            })?;
        }
    }
    Ok(())
}

fn containment() -> Outcome {
    for a in analyses(1..=12) {
        let n = a.n();
        let m = &a.morphology;
        for s in &m.axis {
            check(m.spine.contains(*s), || format!("n={n}: SC vertex {s} not on spine"))?;
        }
        check(m.spine.is_empty() == m.axis.is_empty(), || format!("n={n}: spine/axis emptiness differ"))?;
        for r in 0..=3 {
            let inner = m.central_region(r);
            let outer = m.central_region(r + 1);
            check(inner.iter().all(|v| outer.contains(v)), || format!("n={n}: C^({r}) ⊄ C^({})", r + 1))?;
            check(inner.iter().all(|&v| !m.in_framework(v)), || format!("n={n}: C^({r}) meets F_n"))?;
        }
    }
    Ok(())
}

fn atlas_geometry() -> Outcome {
    let all = analyses(1..=12);
    let modes = PanelMode::ALL;
    let first = render_atlas(&all, &modes).map_err(|e| e.to_string())?;
    let second = render_atlas(&analyses(1..=12), &modes).map_err(|e| e.to_string())?;
    check(first.len() == 13, || format!("{} documents, expected 13", first.len()))?;
    check(first == second, || "atlas output differs between runs".into())?;
    for doc in &first {
        roxmltree::Document::parse(&doc.svg).map_err(|e| format!("{}: {e}", doc.name))?;
    }
    for a in &all {
        let l = layout(&a.graph);
        for v in 0..a.graph.vertex_count() {
            let x = l.positions[v].x;
            let c = a.graph.conjugate_of(v);
            check(l.positions[c].x == -x, || format!("n={}: x not mirrored at {}", a.n(), a.graph.vertex(v)))?;
            if c == v {
                check(x == 0, || format!("n={}: self-conjugate {} off axis", a.n(), a.graph.vertex(v)))?;
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("Table 1 reproduction", Duration::from_secs(5), table_1),
        ("Table 2 reproduction", Duration::from_secs(10), table_2),
        ("Table 3 reproduction", Duration::from_secs(10), table_3),
        ("Staircase law t=2..6", Duration::from_secs(60), staircase_law),
        ("Structural propositions n=2..25", Duration::from_secs(120), structural_propositions),
        ("Clique oracle equivalence n<=10", Duration::MAX, clique_oracle),
        ("Containment suite n<=12, r=0..3", Duration::MAX, containment),
        ("Atlas determinism and geometry", Duration::MAX, atlas_geometry),
    ];
    let mut failures = Vec::new();
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| check(elapsed < budget, || format!("took {elapsed:?}, budget {budget:?}")));
        match &outcome {
            Ok(()) => println!("PASS  {name}  ({:.2}s)", elapsed.as_secs_f64()),
            Err(msg) => {
                println!("FAIL  {name}  ({:.2}s): {msg}", elapsed.as_secs_f64());
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
