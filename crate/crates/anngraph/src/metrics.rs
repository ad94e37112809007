//! Graph parameters computed by direct search, together with the closed
//! forms they are checked against.

use std::collections::VecDeque;
use std::fmt;

use crate::error::ModelError;
use crate::graph::Graph;
use crate::model::{binomial, level, PointSet};

/// Distance in an unweighted graph; `Infinite` when no path exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// One adjacency bitset per vertex; lets layered searches move 64 vertices
/// per word operation.
fn adjacency_rows(g: &impl Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; n];
    for (u, row) in rows.iter_mut().enumerate() {
        for v in g.neighbors(u) {
            row[v / 64] |= 1 << (v % 64);
        }
    }
    rows
}

fn bfs_rows(rows: &[Vec<u64>], start: usize) -> Vec<Option<u32>> {
    let n = rows.len();
    let words = n.div_ceil(64);
    let mut dist = vec![None; n];
    let mut visited = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    dist[start] = Some(0);
    visited[start / 64] |= 1 << (start % 64);
    frontier[start / 64] |= 1 << (start % 64);
    let mut d = 0;
    loop {
        d += 1;
        let mut next = vec![0u64; words];
        for (w, &word) in frontier.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let u = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for (nw, &row) in next.iter_mut().zip(&rows[u]) {
                    *nw |= row;
                }
            }
        }
        let mut any = false;
        for w in 0..words {
            next[w] &= !visited[w];
            visited[w] |= next[w];
            any |= next[w] != 0;
        }
        if !any {
            return dist;
        }
        for (w, &bits) in next.iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                dist[v] = Some(d);
            }
        }
        frontier = next;
    }
}

pub fn distance(g: &impl Graph, u: usize, v: usize) -> Distance {
    match bfs_rows(&adjacency_rows(g), u)[v] {
        Some(d) => Distance::Finite(d),
        None => Distance::Infinite,
    }
}

/// Eccentricity of every vertex.
pub fn eccentricities(g: &impl Graph) -> Vec<Distance> {
    let rows = adjacency_rows(g);
    (0..g.vertex_count())
        .map(|u| {
            let dist = bfs_rows(&rows, u);
            if dist.iter().any(|d| d.is_none()) {
                Distance::Infinite
            } else {
                Distance::Finite(dist.iter().map(|d| d.unwrap()).max().unwrap_or(0))
            }
        })
        .collect()
}

pub fn diameter(g: &impl Graph) -> Distance {
    eccentricities(g)
        .into_iter()
        .max()
        .unwrap_or(Distance::Finite(0))
}

pub fn radius(g: &impl Graph) -> Distance {
    eccentricities(g)
        .into_iter()
        .min()
        .unwrap_or(Distance::Finite(0))
}

/// Vertices whose eccentricity equals the radius.
pub fn center(g: &impl Graph) -> Vec<usize> {
    let ecc = eccentricities(g);
    let r = ecc.iter().min().copied().unwrap_or(Distance::Finite(0));
    (0..g.vertex_count()).filter(|&u| ecc[u] == r).collect()
}

/// Length of a shortest cycle, or `None` in a forest.
pub fn girth(g: &impl Graph) -> Option<u32> {
    let mut best: Option<u32> = None;
    for root in 0..g.vertex_count() {
        let mut dist = vec![u32::MAX; g.vertex_count()];
        let mut parent = vec![usize::MAX; g.vertex_count()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for v in g.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if v != parent[u] {
                    let cycle = dist[u] + dist[v] + 1;
                    if best.is_none_or(|b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
        }
        if best == Some(3) {
            break;
        }
    }
    best
}

/// Whether a third vertex is adjacent to both `u` and `v`.
pub fn common_neighbor_exists(g: &impl Graph, u: usize, v: usize) -> bool {
    (0..g.vertex_count()).any(|w| w != u && w != v && g.adjacent(w, u) && g.adjacent(w, v))
}

/// Orthogonality: an edge whose endpoints have no common neighbor.
pub fn is_orthogonal(g: &impl Graph, u: usize, v: usize) -> bool {
    g.adjacent(u, v) && !common_neighbor_exists(g, u, v)
}

/// Every vertex lies on a triangle.
pub fn is_triangulated(g: &impl Graph) -> bool {
    (0..g.vertex_count()).all(|u| {
        let nb = g.neighbors(u);
        nb.iter()
            .enumerate()
            .any(|(i, &a)| nb[i + 1..].iter().any(|&b| g.adjacent(a, b)))
    })
}

/// Every edge lies on a triangle.
pub fn is_hypertriangulated(g: &impl Graph) -> bool {
    for u in 0..g.vertex_count() {
        for v in g.neighbors(u) {
            if v > u && !common_neighbor_exists(g, u, v) {
                return false;
            }
        }
    }
    true
}

/// Every vertex has an orthogonal partner.
pub fn is_complemented(g: &impl Graph) -> bool {
    (0..g.vertex_count()).all(|u| (0..g.vertex_count()).any(|v| v != u && is_orthogonal(g, u, v)))
}

/// Complemented, and all orthogonal partners of a vertex share one
/// neighborhood.
pub fn is_uniquely_complemented(g: &impl Graph) -> bool {
    for u in 0..g.vertex_count() {
        let partners: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| v != u && is_orthogonal(g, u, v))
            .collect();
        if partners.is_empty() {
            return false;
        }
        let first = g.neighbors(partners[0]);
        for &p in &partners[1..] {
            if g.neighbors(p) != first {
                return false;
            }
        }
    }
    true
}

/// Shortest cycle through a fixed pair of vertices, searched among lengths
/// 3 and 4, which are the only lengths that occur here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairCycle {
    Found { length: u32, cycle: Vec<usize> },
    NoneFound,
}

impl PairCycle {
    pub fn length(&self) -> Option<u32> {
        match self {
            PairCycle::Found { length, .. } => Some(*length),
            PairCycle::NoneFound => None,
        }
    }
}

/// Searches for a shortest cycle containing both `u` and `v`.
///
/// A triangle needs the edge `uv` plus a common neighbor. A 4-cycle places
/// the pair either opposite (two distinct common neighbors) or consecutive
/// (the edge `uv` plus an edge between a neighbor of `v` and a neighbor of
/// `u`). Longer cycles never occur in these graphs, so anything else
/// reports `NoneFound`.
pub fn cycle_through_pair(g: &impl Graph, u: usize, v: usize) -> PairCycle {
    assert!(u != v, "a cycle through a pair needs two distinct vertices");
    let adjacent = g.adjacent(u, v);
    let common: Vec<usize> = (0..g.vertex_count())
        .filter(|&w| w != u && w != v && g.adjacent(w, u) && g.adjacent(w, v))
        .collect();
    if adjacent {
        if let Some(&w) = common.first() {
            return PairCycle::Found {
                length: 3,
                cycle: vec![u, v, w],
            };
        }
    }
    if common.len() >= 2 {
        return PairCycle::Found {
            length: 4,
            cycle: vec![u, common[0], v, common[1]],
        };
    }
    if adjacent {
        for a in g.neighbors(v) {
            if a == u {
                continue;
            }
            for b in g.neighbors(u) {
                if b != v && b != a && g.adjacent(a, b) {
                    return PairCycle::Found {
                        length: 4,
                        cycle: vec![u, v, a, b],
                    };
                }
            }
        }
    }
    PairCycle::NoneFound
}

/// Checks that a vertex sequence really is a cycle of `g`.
pub fn is_cycle(g: &impl Graph, cycle: &[usize]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut seen = cycle.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != cycle.len() {
        return false;
    }
    (0..cycle.len()).all(|i| g.adjacent(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// Closed form for the degree in the reduced annihilator graph:
/// `2^n - 2^|A| - 2^(n-|A|) + 1`.
pub fn predicted_degree(a: PointSet) -> u64 {
    let n = a.point_count();
    (1u64 << n) - (1u64 << a.len()) - (1u64 << (n - a.len())) + 1
}

/// Closed form for the shortest cycle length through two classes of the
/// annihilator blow-up: 3 when they meet and are incomparable, or are
/// disjoint with both complements of size at least 2; otherwise 4.
/// Two copies of one class (`a == b`) always sit on a 4-cycle.
pub fn predicted_pair_cycle(a: PointSet, b: PointSet) -> u32 {
    if a != b && a.is_incomparable(b) && !a.is_disjoint(b) {
        return 3;
    }
    if a != b && a.is_disjoint(b) && a.complement().len() >= 2 && b.complement().len() >= 2 {
        return 3;
    }
    4
}

/// Closed form: the classes meet, or are disjoint with both complements of
/// size at least 2.
pub fn predicted_common_neighbor(a: PointSet, b: PointSet) -> bool {
    !a.is_disjoint(b) || (a.complement().len() >= 2 && b.complement().len() >= 2)
}

/// Closed form: disjoint classes, one of which is the complement of a
/// single point.
pub fn predicted_orthogonal(a: PointSet, b: PointSet) -> bool {
    a.is_disjoint(b) && (a.complement().len() == 1 || b.complement().len() == 1)
}

/// Outcome of the exhaustive domination search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    /// Smallest dominating set size, or `None` when every size up to the
    /// cap fails.
    pub number: Option<usize>,
    pub witness: Vec<usize>,
    pub total: bool,
    pub cap: usize,
}

/// Smallest (total) dominating set by exhaustive search over sizes
/// `1..=cap`. In a total search every vertex needs a neighbor in the set;
/// otherwise set members count as covered.
pub fn dominating_number(
    g: &impl Graph,
    total: bool,
    cap: usize,
) -> Result<DominationResult, ModelError> {
    if cap < 1 {
        return Err(ModelError::BadCap(cap));
    }
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut cover: Vec<Vec<u64>> = Vec::with_capacity(n);
    for u in 0..n {
        let mut row = vec![0u64; words];
        for v in g.neighbors(u) {
            row[v / 64] |= 1 << (v % 64);
        }
        if !total {
            row[u / 64] |= 1 << (u % 64);
        }
        cover.push(row);
    }
    let full: Vec<u64> = (0..words)
        .map(|w| {
            let bits = n - w * 64;
            if bits >= 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            }
        })
        .collect();

    fn search(
        cover: &[Vec<u64>],
        full: &[u64],
        chosen: &mut Vec<usize>,
        start: usize,
        left: usize,
        acc: &[u64],
    ) -> bool {
        if acc == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        for u in start..cover.len() {
            let mut next = acc.to_vec();
            for (w, bits) in next.iter_mut().zip(&cover[u]) {
                *w |= bits;
            }
            chosen.push(u);
            if search(cover, full, chosen, u + 1, left - 1, &next) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let empty = vec![0u64; words];
    for size in 1..=cap {
        let mut chosen = Vec::new();
        if search(&cover, &full, &mut chosen, 0, size, &empty) {
            return Ok(DominationResult {
                number: Some(chosen.len()),
                witness: chosen,
                total,
                cap,
            });
        }
    }
    Ok(DominationResult {
        number: None,
        witness: Vec::new(),
        total,
        cap,
    })
}

/// Whether `set` (total-)dominates the whole graph.
pub fn dominates(g: &impl Graph, set: &[usize], total: bool) -> bool {
    (0..g.vertex_count())
        .all(|w| (!total && set.contains(&w)) || set.iter().any(|&s| g.adjacent(s, w)))
}

/// Outcome of the branch-and-bound clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<usize>,
    /// `false` when the node budget ran out, making `size` only a lower
    /// bound.
    pub exact: bool,
}

/// Maximum clique by branch and bound with a greedy-coloring upper bound.
/// Vertices are explored in index order; `budget` caps the number of
/// expanded search nodes.
pub fn clique_number(g: &impl Graph, budget: u64) -> CliqueResult {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut adj: Vec<Vec<u64>> = vec![vec![0u64; words]; n];
    for (u, row) in adj.iter_mut().enumerate() {
        for v in g.neighbors(u) {
            row[v / 64] |= 1 << (v % 64);
        }
    }

    struct Search<'a> {
        adj: &'a [Vec<u64>],
        words: usize,
        best: Vec<usize>,
        current: Vec<usize>,
        nodes: u64,
        budget: u64,
        exact: bool,
    }

    impl Search<'_> {
        fn candidates(&self, set: &[u64]) -> Vec<usize> {
            let mut out = Vec::new();
            for (w, &word) in set.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    out.push(w * 64 + bits.trailing_zeros() as usize);
                    bits &= bits - 1;
                }
            }
            out
        }

        /// Greedy coloring of the candidate set; returns vertices paired
        /// with 1-based color numbers, colors ascending.
        fn color_sort(&self, cands: &[usize]) -> Vec<(usize, usize)> {
            let mut class_bits: Vec<Vec<u64>> = Vec::new();
            let mut class_members: Vec<Vec<usize>> = Vec::new();
            for &v in cands {
                let mut c = 0;
                while c < class_bits.len() {
                    if class_bits[c]
                        .iter()
                        .zip(&self.adj[v])
                        .all(|(a, b)| a & b == 0)
                    {
                        break;
                    }
                    c += 1;
                }
                if c == class_bits.len() {
                    class_bits.push(vec![0u64; self.words]);
                    class_members.push(Vec::new());
                }
                class_bits[c][v / 64] |= 1 << (v % 64);
                class_members[c].push(v);
            }
            let mut out = Vec::with_capacity(cands.len());
            for (c, members) in class_members.iter().enumerate() {
                for &v in members {
                    out.push((v, c + 1));
                }
            }
            out
        }

        fn expand(&mut self, set: &mut [u64]) {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exact = false;
                return;
            }
            let cands = self.candidates(set);
            if cands.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
                return;
            }
            let ordered = self.color_sort(&cands);
            for &(v, color) in ordered.iter().rev() {
                if self.current.len() + color <= self.best.len() {
                    return;
                }
                let mut next: Vec<u64> = set.iter().zip(&self.adj[v]).map(|(a, b)| a & b).collect();
                self.current.push(v);
                self.expand(&mut next);
                self.current.pop();
                if !self.exact {
                    return;
                }
                set[v / 64] &= !(1 << (v % 64));
            }
        }
    }

    let mut full: Vec<u64> = vec![0u64; words];
    for v in 0..n {
        full[v / 64] |= 1 << (v % 64);
    }
    let mut s = Search {
        adj: &adj,
        words,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
        exact: true,
    };
    s.expand(&mut full);
    let mut witness = s.best.clone();
    witness.sort_unstable();
    CliqueResult {
        size: s.best.len(),
        witness,
        exact: s.exact,
    }
}

/// The middle level of the subset lattice: a clique of size
/// `C(n, floor(n/2))` in the annihilator graph, since equal-sized distinct
/// sets are incomparable.
pub fn middle_layer_clique(n: u32) -> Result<Vec<PointSet>, ModelError> {
    level(n, n / 2)
}

/// Size the middle layer is expected to have.
pub fn middle_layer_size(n: u32) -> u64 {
    binomial(n, n / 2)
}
