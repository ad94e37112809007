//! Verification suite: every closed-form claim checked against a
//! direct computation on concrete graphs, each within an exhaustive size
//! window.

use std::time::Instant;

use serde::Serialize;

use crate::adjacency::{
    ag_adjacent, gamma_adjacent, wgamma_adjacent, wgamma_adjacent_by_search,
    wgamma_same_class_adjacent,
};
use crate::coloring::{
    chromatic_certificate, color_classes_are_chains, exact_chromatic, expected_palette,
    first_conflict, greedy_chain_coloring, lift_to_blowup, symmetric_chain_coloring,
    verify_coloring,
};
use crate::error::ModelError;
use crate::graph::{closed_form_edge_count, BlowUpGraph, Graph, ReducedGraph};
use crate::metrics::{
    clique_number, common_neighbor_exists, cycle_through_pair, dominating_number, eccentricities,
    girth, is_complemented, is_hypertriangulated, is_orthogonal, is_triangulated,
    is_uniquely_complemented, middle_layer_size, predicted_common_neighbor, predicted_degree,
    predicted_orthogonal, predicted_pair_cycle, Distance,
};
use crate::model::{enumerate_vertices, GraphKind, SpaceModel};

/// Outcome of one check at one size.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    /// The statement being verified, in mathematical notation.
    pub claim: &'static str,
    pub n: u32,
    pub kind: Option<GraphKind>,
    pub m: Option<usize>,
    pub pass: bool,
    /// Counterexample or confirming witness, when one is worth showing.
    pub witness: Option<String>,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub checks: Vec<CheckRecord>,
}

impl SuiteResult {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Recorder {
    n: u32,
    checks: Vec<CheckRecord>,
}

impl Recorder {
    fn run(
        &mut self,
        name: &'static str,
        claim: &'static str,
        kind: Option<GraphKind>,
        m: Option<usize>,
        f: impl FnOnce() -> (bool, Option<String>),
    ) {
        let start = Instant::now();
        let (pass, witness) = f();
        self.checks.push(CheckRecord {
            name,
            claim,
            n: self.n,
            kind,
            m,
            pass,
            witness,
            millis: start.elapsed().as_millis(),
        });
    }
}

/// Knobs for a suite run.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Copies per class wherever a blow-up is involved.
    pub m: usize,
    /// Upper bound for the exhaustive dominating-set search; the expected
    /// answer is 2, so the default only guards against bugs.
    pub domination_cap: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            m: 3,
            domination_cap: 4,
        }
    }
}

/// Runs every claim whose window contains `n`, for each requested `n`.
pub fn run_suite(ns: &[u32], opts: SuiteOptions) -> Result<SuiteResult, ModelError> {
    let mut checks = Vec::new();
    for &n in ns {
        SpaceModel::finite(n)?;
        let mut rec = Recorder { n, checks };
        size_checks(&mut rec, n, opts)?;
        checks = rec.checks;
    }
    Ok(SuiteResult { checks })
}

fn size_checks(rec: &mut Recorder, n: u32, opts: SuiteOptions) -> Result<(), ModelError> {
    let SuiteOptions { m, domination_cap } = opts;
    use GraphKind::*;

    if n <= 16 {
        let ag = ReducedGraph::build(n, Annihilator)?;
        rec.run("vertex_count", "|V| = 2^n - 2", None, None, || {
            let want = (1u64 << n) - 2;
            let got = ag.vertex_count() as u64;
            (got == want, Some(format!("{got} vertices")))
        });
    }

    if n <= 10 {
        let verts = enumerate_vertices(n)?;
        for kind in GraphKind::ALL {
            let g = ReducedGraph::build(n, kind)?;
            rec.run(
                "edge_count_closed_form",
                "edge count matches the per-level sum",
                Some(kind),
                None,
                || {
                    let want = closed_form_edge_count(n, kind);
                    let got = g.edge_count();
                    (got == want, Some(format!("{got} edges")))
                },
            );
        }
        rec.run(
            "hierarchy",
            "E(Gamma) ⊆ E(AG) ⊆ E(WGamma)",
            None,
            None,
            || {
                for (i, &a) in verts.iter().enumerate() {
                    for &b in &verts[i + 1..] {
                        let (z, g, w) = (
                            gamma_adjacent(a, b),
                            ag_adjacent(a, b),
                            wgamma_adjacent(a, b),
                        );
                        if (z && !g) || (g && !w) {
                            return (false, Some(format!("pair ({a}, {b})")));
                        }
                    }
                }
                (true, None)
            },
        );
        rec.run(
            "coincide_iff_two_points",
            "the three graphs coincide iff n = 2",
            None,
            None,
            || {
                let mut separating = None;
                'outer: for (i, &a) in verts.iter().enumerate() {
                    for &b in &verts[i + 1..] {
                        if gamma_adjacent(a, b) != wgamma_adjacent(a, b) {
                            separating = Some(format!("pair ({a}, {b})"));
                            break 'outer;
                        }
                    }
                }
                (separating.is_none() == (n == 2), separating)
            },
        );
    }

    if n <= 8 {
        let verts = enumerate_vertices(n)?;
        rec.run(
            "weak_adjacency_witness_search",
            "the weak adjacency rule matches the annihilator witness search",
            Some(WeaklyZeroDivisor),
            None,
            || {
                for &a in &verts {
                    if wgamma_same_class_adjacent(a) != wgamma_adjacent_by_search(a, a) {
                        return (false, Some(format!("class {a}")));
                    }
                }
                for (i, &a) in verts.iter().enumerate() {
                    for &b in &verts[i + 1..] {
                        if wgamma_adjacent(a, b) != wgamma_adjacent_by_search(a, b) {
                            return (false, Some(format!("pair ({a}, {b})")));
                        }
                    }
                }
                (true, None)
            },
        );
    }

    if (3..=10).contains(&n) {
        let ag = ReducedGraph::build(n, Annihilator)?;
        rec.run(
            "degree_formula",
            "deg 1_A = 2^n - 2^|A| - 2^(n-|A|) + 1",
            Some(Annihilator),
            None,
            || {
                let bad = (0..ag.vertex_count())
                    .find(|&u| ag.degree(u) as u64 != predicted_degree(ag.vertex(u)));
                match bad {
                    Some(u) => (false, Some(format!("vertex {}", ag.label(u)))),
                    None => (true, None),
                }
            },
        );
    }

    if (3..=8).contains(&n) {
        let ag = ReducedGraph::build(n, Annihilator)?;
        let blow = BlowUpGraph::build(n, Annihilator, m)?;
        rec.run(
            "eccentricity_two",
            "ecc(v) = 2 for every v, hence diam = rad = 2",
            Some(Annihilator),
            Some(m),
            || {
                let ok = eccentricities(&ag)
                    .into_iter()
                    .chain(eccentricities(&blow))
                    .all(|e| e == Distance::Finite(2));
                (ok, None)
            },
        );
        rec.run("girth_three", "gr = 3", Some(Annihilator), Some(m), || {
            let (a, b) = (girth(&ag), girth(&blow));
            (
                a == Some(3) && b == Some(3),
                Some(format!("reduced {a:?}, blow-up {b:?}")),
            )
        });
    }

    if (3..=7).contains(&n) {
        let ag = ReducedGraph::build(n, Annihilator)?;
        rec.run(
            "triangulated",
            "every vertex lies on a triangle",
            Some(Annihilator),
            None,
            || (is_triangulated(&ag), None),
        );
        rec.run(
            "not_hypertriangulated",
            "some edge lies on no triangle",
            Some(Annihilator),
            None,
            || (!is_hypertriangulated(&ag), None),
        );
        rec.run(
            "complemented_iff_three_points",
            "complemented iff n = 3",
            Some(Annihilator),
            None,
            || (is_complemented(&ag) == (n == 3), None),
        );
        rec.run(
            "uniquely_complemented_iff_three_points",
            "uniquely complemented iff n = 3",
            Some(Annihilator),
            None,
            || (is_uniquely_complemented(&ag) == (n == 3), None),
        );

        let blow = BlowUpGraph::build(n, Annihilator, m)?;
        rec.run(
            "domination_two",
            "dt = dt_t = 2",
            Some(Annihilator),
            None,
            || match domination_pair(&ag, domination_cap) {
                Ok(witness) => (true, Some(witness)),
                Err(witness) => (false, Some(witness)),
            },
        );
        rec.run(
            "domination_two",
            "dt = dt_t = 2",
            Some(Annihilator),
            Some(m),
            || match domination_pair(&blow, domination_cap) {
                Ok(witness) => (true, Some(witness)),
                Err(witness) => (false, Some(witness)),
            },
        );
    }

    if (3..=6).contains(&n) {
        let ag = ReducedGraph::build(n, Annihilator)?;
        let blow = BlowUpGraph::build(n, Annihilator, m)?;
        rec.run(
            "pair_cycle_table",
            "the smallest cycle through a pair follows the 3/4 case split",
            Some(Annihilator),
            Some(m),
            || {
                for u in 0..blow.vertex_count() {
                    for v in u + 1..blow.vertex_count() {
                        let want = predicted_pair_cycle(blow.support_of(u), blow.support_of(v));
                        let got = cycle_through_pair(&blow, u, v);
                        if got.length() != Some(want) {
                            return (
                                false,
                                Some(format!(
                                    "pair ({}, {}) gives {:?}",
                                    blow.label(u),
                                    blow.label(v),
                                    got.length()
                                )),
                            );
                        }
                    }
                }
                (true, None)
            },
        );
        rec.run(
            "common_neighbor_rule",
            "common neighbors exist exactly per the intersection rule",
            Some(Annihilator),
            Some(m),
            || {
                for u in 0..ag.vertex_count() {
                    for v in u + 1..ag.vertex_count() {
                        let want = predicted_common_neighbor(ag.vertex(u), ag.vertex(v));
                        if common_neighbor_exists(&ag, u, v) != want {
                            return (false, Some(format!("reduced pair ({u}, {v})")));
                        }
                    }
                }
                for u in 0..blow.vertex_count() {
                    for v in u + 1..blow.vertex_count() {
                        let want =
                            predicted_common_neighbor(blow.support_of(u), blow.support_of(v));
                        if common_neighbor_exists(&blow, u, v) != want {
                            return (false, Some(format!("blow-up pair ({u}, {v})")));
                        }
                    }
                }
                (true, None)
            },
        );
        rec.run(
            "orthogonality_rule",
            "u ⊥ v iff supports are disjoint with a singleton complement side",
            Some(Annihilator),
            Some(m),
            || {
                for u in 0..ag.vertex_count() {
                    for v in u + 1..ag.vertex_count() {
                        let want = predicted_orthogonal(ag.vertex(u), ag.vertex(v));
                        if is_orthogonal(&ag, u, v) != want {
                            return (false, Some(format!("reduced pair ({u}, {v})")));
                        }
                    }
                }
                for u in 0..blow.vertex_count() {
                    for v in u + 1..blow.vertex_count() {
                        let same = blow.support_of(u) == blow.support_of(v);
                        let want =
                            !same && predicted_orthogonal(blow.support_of(u), blow.support_of(v));
                        if is_orthogonal(&blow, u, v) != want {
                            return (false, Some(format!("blow-up pair ({u}, {v})")));
                        }
                    }
                }
                (true, None)
            },
        );
        rec.run(
            "clique_middle_layer",
            "cl = C(n, floor(n/2))",
            Some(Annihilator),
            None,
            || {
                let r = clique_number(&ag, 1 << 26);
                let want = middle_layer_size(n) as usize;
                (
                    r.exact && r.size == want,
                    Some(format!("found {} (exact: {})", r.size, r.exact)),
                )
            },
        );
    }

    if (3..=5).contains(&n) {
        let blow = BlowUpGraph::build(n, Annihilator, m)?;
        rec.run(
            "blowup_clique_middle_layer",
            "cl of the blow-up stays C(n, floor(n/2))",
            Some(Annihilator),
            Some(m),
            || {
                let r = clique_number(&blow, 1 << 26);
                let want = middle_layer_size(n) as usize;
                (
                    r.exact && r.size == want,
                    Some(format!("found {} (exact: {})", r.size, r.exact)),
                )
            },
        );
    }

    if n <= 12 {
        let ag = ReducedGraph::build(n, Annihilator)?;
        rec.run(
            "two_phase_coloring",
            "the two-phase greedy coloring is proper with palette C(n, floor(n/2)) and chain color classes",
            Some(Annihilator),
            None,
            || match greedy_chain_coloring(n) {
                Ok(c) => {
                    let report = match verify_coloring(&ag, &c) {
                        Ok(r) => r,
                        Err(e) => return (false, Some(e.to_string())),
                    };
                    let ok = report.proper
                        && report.palette == expected_palette(n)
                        && color_classes_are_chains(&c);
                    (ok, Some(format!("palette {}", report.palette)))
                }
                Err(e) => (false, Some(e.to_string())),
            },
        );
        rec.run(
            "chromatic_certificate",
            "chi = cl = C(n, floor(n/2)) by matching bounds",
            Some(Annihilator),
            None,
            || match chromatic_certificate(n) {
                Ok((lower, upper)) => {
                    let want = expected_palette(n);
                    (
                        lower == want && upper == want,
                        Some(format!("bounds ({lower}, {upper})")),
                    )
                }
                Err(e) => (false, Some(e.to_string())),
            },
        );
    }

    if n <= 8 {
        let ag = ReducedGraph::build(n, Annihilator)?;
        rec.run(
            "chain_decomposition_agreement",
            "the bracket-matching decomposition colors properly with the same palette",
            Some(Annihilator),
            None,
            || match symmetric_chain_coloring(n) {
                Ok(c) => {
                    let report = match verify_coloring(&ag, &c) {
                        Ok(r) => r,
                        Err(e) => return (false, Some(e.to_string())),
                    };
                    let ok = report.proper
                        && report.palette == expected_palette(n)
                        && color_classes_are_chains(&c);
                    (ok, Some(format!("palette {}", report.palette)))
                }
                Err(e) => (false, Some(e.to_string())),
            },
        );
        let blow = BlowUpGraph::build(n, Annihilator, m)?;
        rec.run(
            "blowup_coloring_lift",
            "copying colors across copies stays proper, so chi does not grow under blow-up",
            Some(Annihilator),
            Some(m),
            || match greedy_chain_coloring(n).and_then(|c| lift_to_blowup(&c, &blow)) {
                Ok(colors) => match first_conflict(&blow, &colors) {
                    None => (true, None),
                    Some((u, v)) => (
                        false,
                        Some(format!("conflict ({}, {})", blow.label(u), blow.label(v))),
                    ),
                },
                Err(e) => (false, Some(e.to_string())),
            },
        );
    }

    if n <= 4 {
        let ag = ReducedGraph::build(n, Annihilator)?;
        rec.run(
            "exact_chromatic_small",
            "exhaustive search confirms chi on small sizes",
            Some(Annihilator),
            None,
            || {
                let want = expected_palette(n) as u32;
                match exact_chromatic(&ag, want) {
                    Some(k) => (k == want, Some(format!("chi = {k}"))),
                    None => (false, Some("no proper coloring within the bound".into())),
                }
            },
        );
    }

    Ok(())
}

/// Checks `dt = dt_t = 2` on one graph; returns the plain witness on
/// success and a diagnostic on failure.
fn domination_pair(g: &impl Graph, cap: usize) -> Result<String, String> {
    let plain = dominating_number(g, false, cap).map_err(|e| e.to_string())?;
    let total = dominating_number(g, true, cap).map_err(|e| e.to_string())?;
    if plain.number != Some(2) || total.number != Some(2) {
        return Err(format!(
            "dt = {:?}, dt_t = {:?}",
            plain.number, total.number
        ));
    }
    let names: Vec<String> = plain.witness.iter().map(|&u| g.label(u)).collect();
    Ok(format!("{{{}}}", names.join(", ")))
}
