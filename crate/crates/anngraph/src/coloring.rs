//! Optimal coloring of the reduced annihilator graph.
//!
//! The two-phase greedy coloring gives every middle-level vertex its own
//! color and then propagates colors level by level, downward and upward, so
//! that each color class forms a chain in the subset order. Chains are
//! pairwise comparable, hence independent, so the palette size
//! `C(n, floor(n/2))` is optimal against the middle-level clique.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{ColoringError, ModelError, Phase};
use crate::graph::{BlowUpGraph, Graph, ReducedGraph};
use crate::model::{binomial, enumerate_vertices, level, PointSet};

/// Largest `n` the coloring routines accept.
pub const COLORING_CAP: u32 = 16;

/// Assignment from class supports to color indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    n: u32,
    assignment: BTreeMap<u64, u32>,
}

impl Coloring {
    pub fn new(n: u32, assignment: BTreeMap<u64, u32>) -> Self {
        Coloring { n, assignment }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn color_of(&self, a: PointSet) -> Option<u32> {
        self.assignment.get(&a.bits()).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<u64, u32> {
        &self.assignment
    }

    /// Number of distinct colors in use.
    pub fn palette_size(&self) -> u64 {
        let mut colors: Vec<u32> = self.assignment.values().copied().collect();
        colors.sort_unstable();
        colors.dedup();
        colors.len() as u64
    }
}

fn check_coloring_bounds(n: u32) -> Result<(), ColoringError> {
    if n > COLORING_CAP {
        return Err(ColoringError::Model(ModelError::TooLarge {
            n,
            cap: COLORING_CAP,
        }));
    }
    Ok(())
}

/// Two-phase greedy coloring.
///
/// The base level `floor(n/2)` receives fresh colors in lexicographic
/// order. Going down one level at a time, each set takes the color of
/// `A ∪ {x_j}` for the smallest point `x_j ∉ A` whose superset has not been
/// used as a source on this level yet. Going up, each set takes the color
/// of `A` minus its largest removable element whose subset is still unused
/// on this level. A level that runs out of unused sources reports which
/// candidates were exhausted instead of falling back to anything else.
pub fn greedy_chain_coloring(n: u32) -> Result<Coloring, ColoringError> {
    check_coloring_bounds(n)?;
    let base = n / 2;
    let size = 1usize << n;
    let mut color = vec![u32::MAX; size];

    for (c, a) in level(n, base)?.into_iter().enumerate() {
        color[a.bits() as usize] = c as u32;
    }

    let mut used = vec![false; size];
    for k in (1..base).rev() {
        used.iter_mut().for_each(|u| *u = false);
        for a in level(n, k)? {
            let bits = a.bits();
            let mut source = None;
            for j in 0..n {
                if bits >> j & 1 == 0 {
                    let sup = bits | 1 << j;
                    if !used[sup as usize] {
                        source = Some(sup);
                        break;
                    }
                }
            }
            match source {
                Some(sup) => {
                    color[bits as usize] = color[sup as usize];
                    used[sup as usize] = true;
                }
                None => {
                    return Err(starved(Phase::Downward, k, a, n));
                }
            }
        }
    }

    for k in base + 1..n {
        used.iter_mut().for_each(|u| *u = false);
        for a in level(n, k)? {
            let bits = a.bits();
            let mut source = None;
            for &p in a.points().iter().rev() {
                let sub = bits & !(1 << (p - 1));
                if !used[sub as usize] {
                    source = Some(sub);
                    break;
                }
            }
            match source {
                Some(sub) => {
                    color[bits as usize] = color[sub as usize];
                    used[sub as usize] = true;
                }
                None => {
                    return Err(starved(Phase::Upward, k, a, n));
                }
            }
        }
    }

    let assignment = enumerate_vertices(n)?
        .into_iter()
        .map(|v| (v.bits(), color[v.bits() as usize]))
        .collect();
    Ok(Coloring::new(n, assignment))
}

fn starved(phase: Phase, k: u32, a: PointSet, n: u32) -> ColoringError {
    let tried = match phase {
        Phase::Downward => (0..n)
            .filter(|j| a.bits() >> j & 1 == 0)
            .filter_map(|j| PointSet::new(a.bits() | 1 << j, n).ok())
            .collect(),
        Phase::Upward => a
            .points()
            .iter()
            .filter_map(|&p| PointSet::new(a.bits() & !(1 << (p - 1)), n).ok())
            .collect(),
    };
    ColoringError::Starved {
        phase,
        level: k,
        element: a,
        tried,
    }
}

/// Baseline coloring from the bracket-matching symmetric chain
/// decomposition: reading points left to right, members of the set close
/// and non-members open; sets with identical matched pairs lie on one chain
/// and share a color.
pub fn symmetric_chain_coloring(n: u32) -> Result<Coloring, ColoringError> {
    check_coloring_bounds(n)?;
    let mut chain_ids: BTreeMap<Vec<(u32, u32)>, u32> = BTreeMap::new();
    let mut assignment = BTreeMap::new();
    for v in enumerate_vertices(n)? {
        let bits = v.bits();
        let mut stack = Vec::new();
        let mut pairs = Vec::new();
        for p in 1..=n {
            if bits >> (p - 1) & 1 == 0 {
                stack.push(p);
            } else if let Some(open) = stack.pop() {
                pairs.push((open, p));
            }
        }
        pairs.sort_unstable();
        let next = chain_ids.len() as u32;
        let id = *chain_ids.entry(pairs).or_insert(next);
        assignment.insert(bits, id);
    }
    Ok(Coloring::new(n, assignment))
}

/// Verification outcome for a coloring against a concrete graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub proper: bool,
    pub palette: u64,
    /// First edge found with equal endpoint colors.
    pub violation: Option<(PointSet, PointSet)>,
}

/// Checks coverage and properness of a class coloring on a reduced graph.
///
/// # Errors
/// Coverage failures (uncolored vertices or colored keys outside the graph)
/// are errors; an improper coloring is reported in the result.
pub fn verify_coloring(g: &ReducedGraph, c: &Coloring) -> Result<VerifyReport, ColoringError> {
    let missing = g
        .vertices()
        .iter()
        .filter(|v| c.color_of(**v).is_none())
        .count();
    let extra = c
        .assignment()
        .keys()
        .filter(|&&bits| {
            PointSet::new(bits, g.n())
                .ok()
                .and_then(|v| g.index_of(v))
                .is_none()
        })
        .count();
    if missing > 0 || extra > 0 {
        return Err(ColoringError::Coverage { missing, extra });
    }
    for u in 0..g.vertex_count() {
        for v in g.neighbors(u) {
            if v > u && c.color_of(g.vertex(u)) == c.color_of(g.vertex(v)) {
                return Ok(VerifyReport {
                    proper: false,
                    palette: c.palette_size(),
                    violation: Some((g.vertex(u), g.vertex(v))),
                });
            }
        }
    }
    Ok(VerifyReport {
        proper: true,
        palette: c.palette_size(),
        violation: None,
    })
}

/// Checks that every color class is a chain: any two vertices sharing a
/// color are comparable. Chains are independent in the annihilator graph,
/// so this alone certifies properness there.
pub fn color_classes_are_chains(c: &Coloring) -> bool {
    let mut classes: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    for (&bits, &col) in c.assignment() {
        classes.entry(col).or_default().push(bits);
    }
    classes.values().all(|members| {
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| a & b == a || a & b == b))
    })
}

/// Clique and coloring bounds on the chromatic number of the reduced
/// annihilator graph: the middle level is a clique (lower bound) and the
/// greedy chain coloring is verified chain-structured, hence proper (upper
/// bound). Equal bounds pin the chromatic number exactly.
pub fn chromatic_certificate(n: u32) -> Result<(u64, u64), ColoringError> {
    check_coloring_bounds(n)?;
    let layer = level(n, n / 2)?;
    for (i, &a) in layer.iter().enumerate() {
        for &b in &layer[i + 1..] {
            assert!(
                a.is_incomparable(b),
                "middle level must be pairwise incomparable"
            );
        }
    }
    let lower = layer.len() as u64;

    let coloring = greedy_chain_coloring(n)?;
    let covered = coloring.assignment().len() as u64 == (1u64 << n) - 2;
    if !covered {
        return Err(ColoringError::Coverage {
            missing: ((1u64 << n) - 2) as usize - coloring.assignment().len(),
            extra: 0,
        });
    }
    assert!(
        color_classes_are_chains(&coloring),
        "chain coloring produced a non-chain color class"
    );
    let upper = coloring.palette_size();
    Ok((lower, upper))
}

/// Expected optimal palette size.
pub fn expected_palette(n: u32) -> u64 {
    binomial(n, n / 2)
}

/// Copies a class coloring onto every scalar copy in a blow-up. Returns one
/// color per vertex in the blow-up's index order.
///
/// Copies of one class are never adjacent in the zero-divisor and
/// annihilator blow-ups, so the lift preserves properness there.
pub fn lift_to_blowup(c: &Coloring, g: &BlowUpGraph) -> Result<Vec<u32>, ColoringError> {
    let mut missing = 0;
    let mut colors = Vec::with_capacity(g.vertex_count());
    for u in 0..g.vertex_count() {
        match c.color_of(g.support_of(u)) {
            Some(col) => colors.push(col),
            None => missing += 1,
        }
    }
    if missing > 0 {
        return Err(ColoringError::Coverage { missing, extra: 0 });
    }
    Ok(colors)
}

/// First edge whose endpoints share a color, or `None` when the
/// vertex-indexed coloring is proper.
pub fn first_conflict(g: &impl Graph, colors: &[u32]) -> Option<(usize, usize)> {
    assert_eq!(colors.len(), g.vertex_count());
    for u in 0..g.vertex_count() {
        for v in g.neighbors(u) {
            if v > u && colors[u] == colors[v] {
                return Some((u, v));
            }
        }
    }
    None
}

/// Exact chromatic number by backtracking, seeded with a maximum clique
/// whose vertices are pre-colored to break symmetry. Returns `None` when
/// more than `max_colors` colors would be needed.
pub fn exact_chromatic(g: &impl Graph, max_colors: u32) -> Option<u32> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(0);
    }
    let clique = crate::metrics::clique_number(g, 1 << 22);
    let lower = clique.size.max(1) as u32;

    let mut order: Vec<usize> = (0..n).filter(|u| !clique.witness.contains(u)).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(g.degree(u)));

    let neighbors: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u)).collect();

    fn feasible(
        k: u32,
        order: &[usize],
        pos: usize,
        colors: &mut Vec<Option<u32>>,
        neighbors: &[Vec<usize>],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        let mut banned = 0u128;
        for &v in &neighbors[u] {
            if let Some(c) = colors[v] {
                banned |= 1 << c;
            }
        }
        for c in 0..k {
            if banned >> c & 1 == 0 {
                colors[u] = Some(c);
                if feasible(k, order, pos + 1, colors, neighbors) {
                    return true;
                }
                colors[u] = None;
            }
        }
        false
    }

    for k in lower..=max_colors.min(127) {
        let mut colors: Vec<Option<u32>> = vec![None; n];
        for (i, &u) in clique.witness.iter().enumerate() {
            colors[u] = Some(i as u32);
        }
        if feasible(k, &order, 0, &mut colors, &neighbors) {
            return Some(k);
        }
    }
    None
}
