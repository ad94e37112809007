//! Isomorphisms between the graphs, their restriction from blow-ups to
//! classes and their extension from classes to blow-ups.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{IsoError, ModelError};
use crate::graph::{BlowUpGraph, Graph, ReducedGraph};
use crate::model::{enumerate_vertices, Cardinal, PointSet, SpaceModel};

/// Validated vertex bijection preserving adjacency in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphIso {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl GraphIso {
    /// Validates that `forward` maps `g1` onto `g2` edge for edge.
    pub fn new(g1: &impl Graph, g2: &impl Graph, forward: Vec<usize>) -> Result<Self, IsoError> {
        let n = g1.vertex_count();
        if n != g2.vertex_count() {
            return Err(IsoError::VertexCountMismatch(n, g2.vertex_count()));
        }
        if forward.len() != n {
            return Err(IsoError::NotBijective);
        }
        let mut inverse = vec![usize::MAX; n];
        for (u, &v) in forward.iter().enumerate() {
            if v >= n || inverse[v] != usize::MAX {
                return Err(IsoError::NotBijective);
            }
            inverse[v] = u;
        }
        for u in 0..n {
            for v in u + 1..n {
                if g1.adjacent(u, v) != g2.adjacent(forward[u], forward[v]) {
                    return Err(IsoError::NotPreserving(u, v));
                }
            }
        }
        Ok(GraphIso { forward, inverse })
    }

    pub fn map(&self, u: usize) -> usize {
        self.forward[u]
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }
}

/// Outcome of the backtracking search.
#[derive(Debug)]
pub enum IsoSearch {
    Found(GraphIso),
    NotIsomorphic,
    /// The node budget ran out before the search space was exhausted.
    Inconclusive,
}

impl IsoSearch {
    pub fn found(&self) -> Option<&GraphIso> {
        match self {
            IsoSearch::Found(iso) => Some(iso),
            _ => None,
        }
    }
}

/// Degree-refined vertex invariants: two rounds of hashing each vertex's
/// degree together with the sorted invariants of its neighbors.
fn refine(g: &impl Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut inv: Vec<u32> = (0..n).map(|u| g.degree(u) as u32).collect();
    for _ in 0..2 {
        let mut keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|u| {
                let mut nb: Vec<u32> = g.neighbors(u).iter().map(|&v| inv[v]).collect();
                nb.sort_unstable();
                (inv[u], nb)
            })
            .collect();
        let mut ids: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        for (i, k) in sorted.into_iter().enumerate() {
            ids.insert(k, i as u32);
        }
        inv = keys.drain(..).map(|k| ids[&k]).collect();
    }
    inv
}

/// Backtracking isomorphism search with invariant-class candidate filtering
/// and incremental consistency checks. `budget` caps the number of
/// tentative vertex assignments.
pub fn find_isomorphism(g1: &impl Graph, g2: &impl Graph, budget: u64) -> IsoSearch {
    let n = g1.vertex_count();
    if n != g2.vertex_count() {
        return IsoSearch::NotIsomorphic;
    }
    if n == 0 {
        return IsoSearch::Found(GraphIso {
            forward: Vec::new(),
            inverse: Vec::new(),
        });
    }
    let inv1 = refine(g1);
    let inv2 = refine(g2);
    let mut hist1: BTreeMap<u32, usize> = BTreeMap::new();
    let mut hist2: BTreeMap<u32, usize> = BTreeMap::new();
    for &i in &inv1 {
        *hist1.entry(i).or_default() += 1;
    }
    for &i in &inv2 {
        *hist2.entry(i).or_default() += 1;
    }
    if hist1 != hist2 {
        return IsoSearch::NotIsomorphic;
    }

    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&v| inv2[v] == inv1[u]).collect())
        .collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (candidates[u].len(), std::cmp::Reverse(g1.degree(u))));

    struct Search<'a, G1: Graph, G2: Graph> {
        g1: &'a G1,
        g2: &'a G2,
        order: &'a [usize],
        candidates: &'a [Vec<usize>],
        forward: Vec<usize>,
        used: Vec<bool>,
        nodes: u64,
        budget: u64,
        exhausted: bool,
    }

    impl<G1: Graph, G2: Graph> Search<'_, G1, G2> {
        fn run(&mut self, pos: usize) -> bool {
            if pos == self.order.len() {
                return true;
            }
            let u = self.order[pos];
            for &v in &self.candidates[u] {
                if self.used[v] {
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    self.exhausted = true;
                    return false;
                }
                let ok = self.order[..pos]
                    .iter()
                    .all(|&w| self.g1.adjacent(u, w) == self.g2.adjacent(v, self.forward[w]));
                if !ok {
                    continue;
                }
                self.forward[u] = v;
                self.used[v] = true;
                if self.run(pos + 1) {
                    return true;
                }
                self.forward[u] = usize::MAX;
                self.used[v] = false;
                if self.exhausted {
                    return false;
                }
            }
            false
        }
    }

    let mut search = Search {
        g1,
        g2,
        order: &order,
        candidates: &candidates,
        forward: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        budget,
        exhausted: false,
    };
    if search.run(0) {
        let forward = search.forward.clone();
        let iso = GraphIso::new(g1, g2, forward).expect("search returned an invalid mapping");
        IsoSearch::Found(iso)
    } else if search.exhausted {
        IsoSearch::Inconclusive
    } else {
        IsoSearch::NotIsomorphic
    }
}

/// Number of scalar copies of every class, as a cardinal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMultiplicity {
    counts: BTreeMap<u64, Cardinal>,
}

impl ClassMultiplicity {
    pub fn uniform(n: u32, card: Cardinal) -> Result<Self, ModelError> {
        let counts = enumerate_vertices(n)?
            .into_iter()
            .map(|v| (v.bits(), card))
            .collect();
        Ok(ClassMultiplicity { counts })
    }

    pub fn of_blowup(g: &BlowUpGraph) -> Self {
        let counts = g
            .classes()
            .iter()
            .map(|v| (v.bits(), Cardinal::Finite(g.multiplicity() as u64)))
            .collect();
        ClassMultiplicity { counts }
    }

    pub fn get(&self, a: PointSet) -> Option<Cardinal> {
        self.counts.get(&a.bits()).copied()
    }
}

/// Checks the extension hypothesis: each matched class pair must carry the
/// same number of copies on both sides.
pub fn extension_compatible(
    matched: &[(PointSet, PointSet)],
    left: &ClassMultiplicity,
    right: &ClassMultiplicity,
) -> Result<(), IsoError> {
    for &(a, b) in matched {
        let la = left.get(a);
        let rb = right.get(b);
        if la != rb {
            return Err(IsoError::MultiplicityMismatch {
                class: a,
                left: la.map_or("absent".into(), |c| c.to_string()),
                right: rb.map_or("absent".into(), |c| c.to_string()),
            });
        }
    }
    Ok(())
}

/// Collapses a blow-up isomorphism to the classes.
///
/// Requires every copy of a class to land inside a single target class;
/// scattering means no class-level map exists. The returned isomorphism
/// acts on the reduced graphs of the blow-ups' sizes and kinds, whose
/// vertex order equals the blow-ups' class order.
pub fn restrict_isomorphism(
    psi: &GraphIso,
    b1: &BlowUpGraph,
    b2: &BlowUpGraph,
) -> Result<GraphIso, IsoError> {
    if psi.forward().len() != b1.vertex_count() || b1.vertex_count() != b2.vertex_count() {
        return Err(IsoError::VertexCountMismatch(
            b1.vertex_count(),
            b2.vertex_count(),
        ));
    }
    let mut class_map = vec![usize::MAX; b1.classes().len()];
    for (ci, &class) in b1.classes().iter().enumerate() {
        let mut targets: Vec<usize> = (0..b1.multiplicity())
            .map(|c| b2.class_of(psi.map(b1.vertex_id(ci, c))).0)
            .collect();
        targets.sort_unstable();
        targets.dedup();
        if targets.len() != 1 {
            return Err(IsoError::CopiesScattered {
                class,
                target_classes: targets.len(),
            });
        }
        class_map[ci] = targets[0];
    }
    let r1 = ReducedGraph::build(b1.n(), b1.kind())?;
    let r2 = ReducedGraph::build(b2.n(), b2.kind())?;
    GraphIso::new(&r1, &r2, class_map)
}

/// How the scalar copies are paired when a class isomorphism is extended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopyPairing {
    /// Copy `i` goes to copy `i`.
    Identity,
    /// Each class gets its own seeded random copy bijection.
    Seeded(u64),
}

/// Extends a class isomorphism to the blow-ups, sending the copies of each
/// class onto the copies of its image.
///
/// # Errors
/// Fails when the matched classes carry different numbers of copies.
pub fn extend_isomorphism(
    phi: &GraphIso,
    b1: &BlowUpGraph,
    b2: &BlowUpGraph,
    pairing: CopyPairing,
) -> Result<GraphIso, IsoError> {
    if phi.forward().len() != b1.classes().len() {
        return Err(IsoError::VertexCountMismatch(
            phi.forward().len(),
            b1.classes().len(),
        ));
    }
    let matched: Vec<(PointSet, PointSet)> = b1
        .classes()
        .iter()
        .enumerate()
        .map(|(ci, &a)| (a, b2.classes()[phi.map(ci)]))
        .collect();
    extension_compatible(
        &matched,
        &ClassMultiplicity::of_blowup(b1),
        &ClassMultiplicity::of_blowup(b2),
    )?;

    let m = b1.multiplicity();
    let mut forward = vec![usize::MAX; b1.vertex_count()];
    for ci in 0..b1.classes().len() {
        let sigma: Vec<usize> = match pairing {
            CopyPairing::Identity => (0..m).collect(),
            CopyPairing::Seeded(seed) => {
                let mut perm: Vec<usize> = (0..m).collect();
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(ci as u64));
                perm.shuffle(&mut rng);
                perm
            }
        };
        for (copy, &target_copy) in sigma.iter().enumerate() {
            forward[b1.vertex_id(ci, copy)] = b2.vertex_id(phi.map(ci), target_copy);
        }
    }
    GraphIso::new(b1, b2, forward)
}

/// Two rings of this family are isomorphic exactly when their spaces have
/// the same shape, finite sizes included.
pub fn are_equivalent(s1: SpaceModel, s2: SpaceModel) -> bool {
    s1 == s2
}
