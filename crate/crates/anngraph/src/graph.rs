//! Concrete graphs over the support vertices: the reduced graph with one
//! vertex per class, the blow-up with `m` scalar copies per class, and a
//! plain dense graph for rebuilt or relabeled inputs.

use crate::adjacency::{adjacent, same_class_adjacent};
use crate::error::ModelError;
use crate::model::{binomial, enumerate_vertices, GraphKind, PointSet};

/// Largest `n` for which adjacency rows are materialized bit by bit.
/// Above this the reduced graph answers queries from the predicate alone.
pub const MATERIALIZE_CAP: u32 = 14;
/// Largest `n` accepted when building a reduced graph.
pub const REDUCED_CAP: u32 = 20;
/// Largest `n` accepted when building a blow-up.
pub const BLOWUP_CAP: u32 = 14;

/// Square symmetric bit matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(rows: usize) -> Self {
        let words = rows.div_ceil(64);
        BitMatrix {
            words,
            data: vec![0; rows * words],
        }
    }

    pub(crate) fn set_pair(&mut self, u: usize, v: usize) {
        self.data[u * self.words + v / 64] |= 1 << (v % 64);
        self.data[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn get(&self, u: usize, v: usize) -> bool {
        self.data[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.data[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn row_ones(&self, u: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.row(u).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    pub(crate) fn count_row(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Common interface of the three graph representations.
pub trait Graph {
    fn vertex_count(&self) -> usize;

    fn adjacent(&self, u: usize, v: usize) -> bool;

    /// Human-readable vertex name, used in witnesses and reports.
    fn label(&self, u: usize) -> String;

    fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| v != u && self.adjacent(u, v))
            .collect()
    }

    fn degree(&self, u: usize) -> usize {
        self.neighbors(u).len()
    }

    fn edge_count(&self) -> u64 {
        let mut total: u64 = 0;
        for u in 0..self.vertex_count() {
            total += self.degree(u) as u64;
        }
        total / 2
    }
}

/// One vertex per function class, adjacency by the chosen kind.
///
/// Vertices sit in the canonical order of [`enumerate_vertices`]. For
/// `n <= MATERIALIZE_CAP` adjacency rows are stored; above that queries fall
/// back to the predicate.
pub struct ReducedGraph {
    n: u32,
    kind: GraphKind,
    verts: Vec<PointSet>,
    index: Vec<u32>,
    adj: Option<BitMatrix>,
}

impl ReducedGraph {
    pub fn build(n: u32, kind: GraphKind) -> Result<Self, ModelError> {
        if n > REDUCED_CAP {
            return Err(ModelError::TooLarge {
                n,
                cap: REDUCED_CAP,
            });
        }
        let verts = enumerate_vertices(n)?;
        let mut index = vec![u32::MAX; 1 << n];
        for (i, v) in verts.iter().enumerate() {
            index[v.bits() as usize] = i as u32;
        }
        let adj = (n <= MATERIALIZE_CAP).then(|| {
            let mut m = BitMatrix::new(verts.len());
            for i in 0..verts.len() {
                for j in i + 1..verts.len() {
                    if adjacent(kind, verts[i], verts[j]) {
                        m.set_pair(i, j);
                    }
                }
            }
            m
        });
        Ok(ReducedGraph {
            n,
            kind,
            verts,
            index,
            adj,
        })
    }

    #[cfg(test)]
    pub(crate) fn build_unmaterialized(n: u32, kind: GraphKind) -> Result<Self, ModelError> {
        let mut g = ReducedGraph::build(n, kind)?;
        g.adj = None;
        Ok(g)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertices(&self) -> &[PointSet] {
        &self.verts
    }

    pub fn vertex(&self, u: usize) -> PointSet {
        self.verts[u]
    }

    pub fn index_of(&self, a: PointSet) -> Option<usize> {
        if a.point_count() != self.n {
            return None;
        }
        let i = self.index[a.bits() as usize];
        (i != u32::MAX).then_some(i as usize)
    }

    pub fn is_materialized(&self) -> bool {
        self.adj.is_some()
    }
}

impl Graph for ReducedGraph {
    fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        match &self.adj {
            Some(m) => m.get(u, v),
            None => adjacent(self.kind, self.verts[u], self.verts[v]),
        }
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        match &self.adj {
            Some(m) => m.row_ones(u),
            None => (0..self.verts.len())
                .filter(|&v| v != u && adjacent(self.kind, self.verts[u], self.verts[v]))
                .collect(),
        }
    }

    fn degree(&self, u: usize) -> usize {
        match &self.adj {
            Some(m) => m.count_row(u),
            None => self.neighbors(u).len(),
        }
    }

    fn edge_count(&self) -> u64 {
        match &self.adj {
            Some(m) => {
                (0..self.verts.len())
                    .map(|u| m.count_row(u) as u64)
                    .sum::<u64>()
                    / 2
            }
            None => closed_form_edge_count(self.n, self.kind),
        }
    }

    fn label(&self, u: usize) -> String {
        self.verts[u].to_string()
    }
}

/// Edge count of the reduced graph from per-level counting, used when rows
/// are not materialized. Matches the bit-counted value on every materialized
/// size (checked in tests).
pub fn closed_form_edge_count(n: u32, kind: GraphKind) -> u64 {
    let verts = (1u64 << n) - 2;
    match kind {
        GraphKind::WeaklyZeroDivisor => verts * (verts - 1) / 2,
        GraphKind::ZeroDivisor => {
            (1..n)
                .map(|k| binomial(n, k) * ((1u64 << (n - k)) - 1))
                .sum::<u64>()
                / 2
        }
        GraphKind::Annihilator => {
            (1..n)
                .map(|k| binomial(n, k) * ((1u64 << n) - (1u64 << k) - (1u64 << (n - k)) + 1))
                .sum::<u64>()
                / 2
        }
    }
}

/// `m` scalar-multiple copies of every class. Copies of one class are
/// adjacent only in the weak graph, and there only when the complement of
/// the class has at least two points; across classes adjacency is decided by
/// the classes alone.
pub struct BlowUpGraph {
    n: u32,
    kind: GraphKind,
    m: usize,
    classes: Vec<PointSet>,
    class_adj: BitMatrix,
    intra: Vec<bool>,
}

impl BlowUpGraph {
    pub fn build(n: u32, kind: GraphKind, m: usize) -> Result<Self, ModelError> {
        if m < 2 {
            return Err(ModelError::Multiplicity(m));
        }
        if n > BLOWUP_CAP {
            return Err(ModelError::TooLarge { n, cap: BLOWUP_CAP });
        }
        let classes = enumerate_vertices(n)?;
        let mut class_adj = BitMatrix::new(classes.len());
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                if adjacent(kind, classes[i], classes[j]) {
                    class_adj.set_pair(i, j);
                }
            }
        }
        let intra = classes
            .iter()
            .map(|&a| same_class_adjacent(kind, a))
            .collect();
        Ok(BlowUpGraph {
            n,
            kind,
            m,
            classes,
            class_adj,
            intra,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn multiplicity(&self) -> usize {
        self.m
    }

    pub fn classes(&self) -> &[PointSet] {
        &self.classes
    }

    /// Class index and copy index of a vertex.
    pub fn class_of(&self, u: usize) -> (usize, usize) {
        (u / self.m, u % self.m)
    }

    pub fn vertex_id(&self, class_idx: usize, copy: usize) -> usize {
        debug_assert!(copy < self.m);
        class_idx * self.m + copy
    }

    pub fn support_of(&self, u: usize) -> PointSet {
        self.classes[u / self.m]
    }

    pub fn class_adjacent(&self, ci: usize, cj: usize) -> bool {
        ci != cj && self.class_adj.get(ci, cj)
    }

    pub fn intra_adjacent(&self, ci: usize) -> bool {
        self.intra[ci]
    }
}

impl Graph for BlowUpGraph {
    fn vertex_count(&self) -> usize {
        self.classes.len() * self.m
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let (ci, _) = self.class_of(u);
        let (cj, _) = self.class_of(v);
        if ci == cj {
            self.intra[ci]
        } else {
            self.class_adj.get(ci, cj)
        }
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        let (ci, copy) = self.class_of(u);
        let mut out = Vec::new();
        for cj in self.class_adj.row_ones(ci) {
            for c in 0..self.m {
                out.push(self.vertex_id(cj, c));
            }
        }
        if self.intra[ci] {
            for c in 0..self.m {
                if c != copy {
                    out.push(self.vertex_id(ci, c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn degree(&self, u: usize) -> usize {
        let (ci, _) = self.class_of(u);
        let cross = self.class_adj.count_row(ci) * self.m;
        let intra = if self.intra[ci] { self.m - 1 } else { 0 };
        cross + intra
    }

    fn edge_count(&self) -> u64 {
        let m = self.m as u64;
        let cross_pairs: u64 = (0..self.classes.len())
            .map(|ci| self.class_adj.count_row(ci) as u64)
            .sum::<u64>()
            / 2;
        let intra_classes = self.intra.iter().filter(|&&b| b).count() as u64;
        cross_pairs * m * m + intra_classes * m * (m - 1) / 2
    }

    fn label(&self, u: usize) -> String {
        let (ci, copy) = self.class_of(u);
        format!("{}*1_{}", copy + 1, self.classes[ci])
    }
}

/// Explicit adjacency-matrix graph, for rebuilt exports, relabeled copies
/// and hand-made fixtures.
pub struct DenseGraph {
    verts: usize,
    adj: BitMatrix,
    labels: Vec<String>,
}

impl DenseGraph {
    pub fn new(verts: usize) -> Self {
        DenseGraph {
            verts,
            adj: BitMatrix::new(verts),
            labels: (0..verts).map(|u| u.to_string()).collect(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.verts && v < self.verts);
        self.adj.set_pair(u, v);
    }

    pub fn set_label(&mut self, u: usize, label: String) {
        self.labels[u] = label;
    }

    pub fn from_graph(g: &impl Graph) -> Self {
        let mut out = DenseGraph::new(g.vertex_count());
        for u in 0..g.vertex_count() {
            out.labels[u] = g.label(u);
            for v in g.neighbors(u) {
                if v > u {
                    out.adj.set_pair(u, v);
                }
            }
        }
        out
    }

    /// Copy of `g` with vertex `u` renamed to `perm[u]`.
    pub fn permuted(g: &impl Graph, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), g.vertex_count());
        let mut out = DenseGraph::new(g.vertex_count());
        for u in 0..g.vertex_count() {
            out.labels[perm[u]] = g.label(u);
            for v in g.neighbors(u) {
                if v > u {
                    out.adj.set_pair(perm[u], perm[v]);
                }
            }
        }
        out
    }
}

impl Graph for DenseGraph {
    fn vertex_count(&self) -> usize {
        self.verts
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.adj.get(u, v)
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        self.adj.row_ones(u)
    }

    fn degree(&self, u: usize) -> usize {
        self.adj.count_row(u)
    }

    fn label(&self, u: usize) -> String {
        self.labels[u].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_edge_counts_for_three_points() {
        let cases = [
            (GraphKind::ZeroDivisor, 6),
            (GraphKind::Annihilator, 9),
            (GraphKind::WeaklyZeroDivisor, 15),
        ];
        for (kind, want) in cases {
            let g = ReducedGraph::build(3, kind).unwrap();
            assert_eq!(g.vertex_count(), 6);
            assert_eq!(g.edge_count(), want, "{kind}");
        }
    }

    #[test]
    fn two_points_give_a_single_edge_for_every_kind() {
        for kind in GraphKind::ALL {
            let g = ReducedGraph::build(2, kind).unwrap();
            assert_eq!(g.vertex_count(), 2);
            assert_eq!(g.edge_count(), 1);
            assert!(g.adjacent(0, 1));
        }
    }

    #[test]
    fn blowup_edge_counts_for_three_points() {
        let g = BlowUpGraph::build(3, GraphKind::Annihilator, 2).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 36);

        let g = BlowUpGraph::build(3, GraphKind::ZeroDivisor, 3).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 54);

        let g = BlowUpGraph::build(3, GraphKind::WeaklyZeroDivisor, 2).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 63);
    }

    #[test]
    fn blowup_edge_count_matches_pair_scan() {
        for kind in GraphKind::ALL {
            for m in [2usize, 3] {
                let g = BlowUpGraph::build(4, kind, m).unwrap();
                let mut scanned = 0u64;
                for u in 0..g.vertex_count() {
                    for v in u + 1..g.vertex_count() {
                        if g.adjacent(u, v) {
                            scanned += 1;
                        }
                    }
                }
                assert_eq!(g.edge_count(), scanned, "{kind} m={m}");
            }
        }
    }

    #[test]
    fn copies_are_adjacent_only_in_the_weak_graph() {
        for kind in GraphKind::ALL {
            let g = BlowUpGraph::build(3, kind, 3).unwrap();
            for ci in 0..g.classes().len() {
                let a = g.classes()[ci];
                let u = g.vertex_id(ci, 0);
                let v = g.vertex_id(ci, 1);
                let want = kind == GraphKind::WeaklyZeroDivisor && a.complement().len() >= 2;
                assert_eq!(g.adjacent(u, v), want, "{kind} {a}");
                assert!(!g.adjacent(u, u));
            }
        }
    }

    #[test]
    fn blowup_rejects_multiplicity_below_two() {
        assert_eq!(
            BlowUpGraph::build(3, GraphKind::Annihilator, 1).err(),
            Some(ModelError::Multiplicity(1))
        );
        assert!(BlowUpGraph::build(3, GraphKind::Annihilator, 0).is_err());
    }

    #[test]
    fn build_caps() {
        assert!(matches!(
            ReducedGraph::build(21, GraphKind::Annihilator),
            Err(ModelError::TooLarge { n: 21, cap: 20 })
        ));
        assert!(matches!(
            BlowUpGraph::build(15, GraphKind::Annihilator, 2),
            Err(ModelError::TooLarge { n: 15, cap: 14 })
        ));
        assert!(ReducedGraph::build(1, GraphKind::Annihilator).is_err());
    }

    #[test]
    fn vertex_order_and_index_roundtrip() {
        let g = ReducedGraph::build(4, GraphKind::Annihilator).unwrap();
        assert_eq!(g.vertices(), &enumerate_vertices(4).unwrap()[..]);
        for (i, &v) in g.vertices().iter().enumerate() {
            assert_eq!(g.index_of(v), Some(i));
        }
        let foreign = PointSet::new(1, 5).unwrap();
        assert_eq!(g.index_of(foreign), None);
    }

    #[test]
    fn unmaterialized_graph_answers_the_same_queries() {
        for kind in GraphKind::ALL {
            let dense = ReducedGraph::build(6, kind).unwrap();
            let virt = ReducedGraph::build_unmaterialized(6, kind).unwrap();
            assert!(dense.is_materialized());
            assert!(!virt.is_materialized());
            assert_eq!(dense.edge_count(), virt.edge_count(), "{kind}");
            for u in 0..dense.vertex_count() {
                assert_eq!(dense.neighbors(u), virt.neighbors(u));
                assert_eq!(dense.degree(u), virt.degree(u));
                for v in 0..dense.vertex_count() {
                    assert_eq!(dense.adjacent(u, v), virt.adjacent(u, v));
                }
            }
        }
    }

    #[test]
    fn blowup_vertex_indexing() {
        let g = BlowUpGraph::build(3, GraphKind::Annihilator, 3).unwrap();
        for u in 0..g.vertex_count() {
            let (ci, copy) = g.class_of(u);
            assert_eq!(g.vertex_id(ci, copy), u);
            assert_eq!(g.support_of(u), g.classes()[ci]);
        }
        assert_eq!(g.label(4), "2*1_{x2}");
    }

    #[test]
    fn blowup_degrees_match_neighbor_lists() {
        for kind in GraphKind::ALL {
            let g = BlowUpGraph::build(4, kind, 2).unwrap();
            for u in 0..g.vertex_count() {
                assert_eq!(g.degree(u), g.neighbors(u).len(), "{kind} u={u}");
            }
        }
    }

    #[test]
    fn permuted_dense_copy_preserves_structure() {
        let g = ReducedGraph::build(3, GraphKind::Annihilator).unwrap();
        let perm: Vec<usize> = (0..6).rev().collect();
        let h = DenseGraph::permuted(&g, &perm);
        assert_eq!(h.edge_count(), g.edge_count());
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(g.adjacent(u, v), h.adjacent(perm[u], perm[v]));
            }
        }
        assert_eq!(h.label(perm[0]), g.label(0));
    }
}
