//! Undirected graphs, vertex sets, ordered clique covers, the edge-gap
//! length of a cover, and the restriction measure induced by a clique
//! partition.

use std::collections::VecDeque;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a set from ids that are already strictly increasing.
    pub fn from_sorted(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        Self(ids)
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Keeps sorted adjacency lists for iteration and a dense bit matrix for
/// constant-time adjacency queries.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            bits: vec![0; n * words],
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g.finish();
        g
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// Builds a graph by evaluating a symmetric predicate on every pair.
    pub fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g.finish();
        g
    }

    fn insert(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn is_clique(&self, members: &[usize]) -> bool {
        self.clique_violation(members).is_none()
    }

    /// First non-adjacent pair inside `members`, if any.
    pub fn clique_violation(&self, members: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_independent(&self, members: &[usize]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// True when every edge of `self` is also an edge of `other`.
    pub fn is_edge_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.as_slice().last() {
            Some(&v) if v >= self.n => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }
}

/// An induced subgraph together with the map from its ids back to the parent.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub to_parent: Vec<usize>,
}

impl InducedSubgraph {
    pub fn parent_set(&self, local: impl IntoIterator<Item = usize>) -> VertexSet {
        local.into_iter().map(|v| self.to_parent[v]).collect()
    }
}

pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
    g.check_set(s)?;
    let mut local = vec![usize::MAX; g.n];
    for (i, v) in s.iter().enumerate() {
        local[v] = i;
    }
    let mut h = Graph::empty(s.len());
    for (i, v) in s.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = local[w];
            if j != usize::MAX && i < j {
                h.insert(i, j);
            }
        }
    }
    h.finish();
    Ok(InducedSubgraph {
        graph: h,
        to_parent: s.as_slice().to_vec(),
    })
}

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..g.n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(VertexSet(comp));
    }
    out
}

/// Components of the subgraph induced by `subset`, in parent ids.
pub fn components_within(g: &Graph, subset: &[usize]) -> Vec<Vec<usize>> {
    let mut mark = vec![false; g.n];
    for &v in subset {
        mark[v] = true;
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for &start in subset {
        if !mark[start] {
            continue;
        }
        mark[start] = false;
        stack.push(start);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if mark[w] {
                    mark[w] = false;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_by_key(|c| c[0]);
    out
}

/// A partition of the vertices into an ordered sequence of groups.
///
/// Whether the groups are cliques depends on the host graph, which is
/// checked separately by [`verify_clique_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedCliqueCover {
    parts: Vec<VertexSet>,
    index_of: Vec<usize>,
}

impl OrderedCliqueCover {
    /// Builds a cover of `0..n` from its parts; empty parts are dropped.
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self, GraphError> {
        let mut index_of = vec![usize::MAX; n];
        let mut kept = Vec::with_capacity(parts.len());
        for part in parts.into_iter().filter(|p| !p.is_empty()) {
            let idx = kept.len();
            for v in part.iter() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if index_of[v] != usize::MAX {
                    return Err(GraphError::OverlappingParts(v));
                }
                index_of[v] = idx;
            }
            kept.push(part);
        }
        if let Some(v) = index_of.iter().position(|&i| i == usize::MAX) {
            return Err(GraphError::Uncovered(v));
        }
        Ok(Self {
            parts: kept,
            index_of,
        })
    }

    /// Builds a cover from per-vertex integer labels; parts are ordered by
    /// label and labels need not be contiguous.
    pub fn from_labels(labels: &[i64]) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by_key(|&v| (labels[v], v));
        let mut parts: Vec<Vec<usize>> = Vec::new();
        let mut last = None;
        for v in order {
            if last != Some(labels[v]) {
                parts.push(Vec::new());
                last = Some(labels[v]);
            }
            parts.last_mut().unwrap().push(v);
        }
        let parts = parts.into_iter().map(VertexSet::from_sorted).collect();
        Self::new(labels.len(), parts).expect("labels always form a partition")
    }

    pub fn singletons(n: usize) -> Self {
        Self::new(n, (0..n).map(|v| VertexSet::from_sorted(vec![v])).collect()).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.index_of.len()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &VertexSet {
        &self.parts[i]
    }

    pub fn index_of(&self, v: usize) -> usize {
        self.index_of[v]
    }

    pub fn reversed(&self) -> Self {
        let parts: Vec<VertexSet> = self.parts.iter().rev().cloned().collect();
        Self::new(self.vertex_count(), parts).unwrap()
    }

    /// The cover induced on `local -> parent` ids of an induced subgraph,
    /// keeping the relative part order.
    pub fn restrict(&self, to_parent: &[usize]) -> Self {
        let labels: Vec<i64> = to_parent.iter().map(|&v| self.index_of[v] as i64).collect();
        Self::from_labels(&labels)
    }
}

/// Why a cover fails to be a clique cover of its host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverCheck {
    Valid,
    SizeMismatch { cover: usize, host: usize },
    NotAdjacent { part: usize, u: usize, v: usize },
}

impl CoverCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CoverCheck::Valid)
    }
}

/// Checks that every part of `cover` is a clique of `host`.
///
/// Disjointness and coverage are enforced when the cover is built.
pub fn verify_clique_cover(cover: &OrderedCliqueCover, host: &Graph) -> CoverCheck {
    if cover.vertex_count() != host.vertex_count() {
        return CoverCheck::SizeMismatch {
            cover: cover.vertex_count(),
            host: host.vertex_count(),
        };
    }
    for (i, part) in cover.parts().iter().enumerate() {
        if let Some((u, v)) = host.clique_violation(part.as_slice()) {
            return CoverCheck::NotAdjacent { part: i, u, v };
        }
    }
    CoverCheck::Valid
}

/// Largest index gap spanned by an edge of `G` under an ordered cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthReport {
    pub value: usize,
    pub witness_edge: Option<(usize, usize)>,
}

pub fn cover_length(g: &Graph, cover: &OrderedCliqueCover) -> Result<LengthReport, GraphError> {
    if cover.vertex_count() != g.vertex_count() {
        return Err(GraphError::Uncovered(cover.vertex_count().min(g.vertex_count())));
    }
    let mut report = LengthReport {
        value: 0,
        witness_edge: None,
    };
    for (u, v) in g.edges() {
        let gap = cover.index_of(u).abs_diff(cover.index_of(v));
        if report.witness_edge.is_none() || gap > report.value {
            report = LengthReport {
                value: gap,
                witness_edge: Some((u, v)),
            };
        }
    }
    Ok(report)
}

/// `mu(F)` = number of parts of a fixed clique partition of `G` meeting `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionMeasure {
    cover: OrderedCliqueCover,
}

impl RestrictionMeasure {
    /// Fails unless every part is a clique of `g`.
    pub fn new(g: &Graph, cover: OrderedCliqueCover) -> Result<Self, GraphError> {
        match verify_clique_cover(&cover, g) {
            CoverCheck::Valid => Ok(Self { cover }),
            CoverCheck::SizeMismatch { .. } => Err(GraphError::Uncovered(cover.vertex_count())),
            CoverCheck::NotAdjacent { u, v, .. } => Err(GraphError::NotAClique(u, v)),
        }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            cover: OrderedCliqueCover::singletons(n),
        }
    }

    pub fn cover(&self) -> &OrderedCliqueCover {
        &self.cover
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.cover.index_of(v)
    }

    pub fn total(&self) -> usize {
        self.cover.part_count()
    }

    /// Measure of an arbitrary vertex list (duplicates allowed).
    pub fn of(&self, vertices: &[usize]) -> usize {
        let mut touched: Vec<usize> = vertices.iter().map(|&v| self.cover.index_of(v)).collect();
        touched.sort_unstable();
        touched.dedup();
        touched.len()
    }

    pub fn restrict(&self, to_parent: &[usize]) -> Self {
        Self {
            cover: self.cover.restrict(to_parent),
        }
    }
}

pub fn measure(mu: &RestrictionMeasure, s: &VertexSet) -> usize {
    mu.of(s.as_slice())
}

/// Which measure axiom failed, with the offending sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    Monotonicity { smaller: VertexSet, larger: VertexSet },
    Subadditivity { a: VertexSet, b: VertexSet },
    Additivity { a: VertexSet, b: VertexSet },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub monotonicity_checks: usize,
    pub subadditivity_checks: usize,
    pub additivity_checks: usize,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn total_checks(&self) -> usize {
        self.monotonicity_checks + self.subadditivity_checks + self.additivity_checks
    }
}

/// Samples `trials` rounds of set pairs and checks monotonicity,
/// subadditivity, and additivity across edgeless splits.
pub fn check_measure_axioms(mu: &RestrictionMeasure, g: &Graph, trials: usize, seed: u64) -> AxiomReport {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport::default();
    let random_subset = |rng: &mut ChaCha8Rng, pool: &[usize]| -> VertexSet {
        let p: f64 = rng.random();
        pool.iter().copied().filter(|_| rng.random_bool(p)).collect()
    };
    let everything: Vec<usize> = (0..n).collect();
    for _ in 0..trials {
        let larger = random_subset(&mut rng, &everything);
        let smaller = random_subset(&mut rng, larger.as_slice());
        report.monotonicity_checks += 1;
        if measure(mu, &smaller) > measure(mu, &larger) {
            report.violation = Some(AxiomViolation::Monotonicity { smaller, larger });
            return report;
        }

        let a = random_subset(&mut rng, &everything);
        let b = random_subset(&mut rng, &everything);
        report.subadditivity_checks += 1;
        if measure(mu, &a.union(&b)) > measure(mu, &a) + measure(mu, &b) {
            report.violation = Some(AxiomViolation::Subadditivity { a, b });
            return report;
        }

        // Grow `a` from a random seed set, then draw `b` from vertices that
        // are neither in `a` nor adjacent to it.
        let mut shuffled = everything.clone();
        shuffled.shuffle(&mut rng);
        let take = if n == 0 { 0 } else { rng.random_range(0..=n) };
        let a = VertexSet::from_iter(shuffled[..take].iter().copied());
        let mut blocked = vec![false; n];
        for v in a.iter() {
            blocked[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
        let free: Vec<usize> = (0..n).filter(|&v| !blocked[v]).collect();
        let b = random_subset(&mut rng, &free);
        report.additivity_checks += 1;
        if measure(mu, &a.union(&b)) != measure(mu, &a) + measure(mu, &b) {
            report.violation = Some(AxiomViolation::Additivity { a, b });
            return report;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn induced_subgraph_cases() {
        let tri = Graph::complete(3);
        let h = induced_subgraph(&tri, &set(&[0, 1])).unwrap();
        assert_eq!(h.graph.edge_count(), 1);
        assert_eq!(h.to_parent, vec![0, 1]);

        let h = induced_subgraph(&tri, &VertexSet::new()).unwrap();
        assert_eq!(h.graph.vertex_count(), 0);

        let h = induced_subgraph(&path(3), &set(&[0, 2])).unwrap();
        assert_eq!(h.graph.vertex_count(), 2);
        assert_eq!(h.graph.edge_count(), 0);

        assert!(matches!(
            induced_subgraph(&tri, &set(&[0, 5])),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&path(5)), vec![set(&[0, 1, 2, 3, 4])]);
        assert_eq!(connected_components(&Graph::empty(3)).len(), 3);
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = connected_components(&two);
        assert_eq!(comps, vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        assert_eq!(components_within(&two, &[5, 2, 0]), vec![vec![0, 2], vec![5]]);
    }

    #[test]
    fn clique_cover_verification() {
        let tri = Graph::complete(3);
        let c = OrderedCliqueCover::new(3, vec![set(&[0, 1, 2])]).unwrap();
        assert!(verify_clique_cover(&c, &tri).is_valid());

        let p = path(3);
        let bad = OrderedCliqueCover::new(3, vec![set(&[0, 2]), set(&[1])]).unwrap();
        assert_eq!(
            verify_clique_cover(&bad, &p),
            CoverCheck::NotAdjacent { part: 0, u: 0, v: 2 }
        );
        let good = OrderedCliqueCover::new(3, vec![set(&[0, 1]), set(&[2])]).unwrap();
        assert!(verify_clique_cover(&good, &p).is_valid());
    }

    #[test]
    fn cover_construction_errors() {
        assert_eq!(
            OrderedCliqueCover::new(3, vec![set(&[0, 1]), set(&[1, 2])]),
            Err(GraphError::OverlappingParts(1))
        );
        assert_eq!(OrderedCliqueCover::new(3, vec![set(&[0, 1])]), Err(GraphError::Uncovered(2)));
    }

    #[test]
    fn lengths() {
        let k4 = Graph::complete(4);
        let one = OrderedCliqueCover::new(4, vec![VertexSet::full(4)]).unwrap();
        assert_eq!(cover_length(&k4, &one).unwrap().value, 0);

        let p = path(3);
        let c = OrderedCliqueCover::new(3, vec![set(&[0, 1]), set(&[2])]).unwrap();
        assert_eq!(
            cover_length(&p, &c).unwrap(),
            LengthReport {
                value: 1,
                witness_edge: Some((1, 2))
            }
        );

        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = OrderedCliqueCover::new(4, vec![set(&[0, 1]), set(&[2, 3])]).unwrap();
        assert_eq!(cover_length(&c4, &c).unwrap().value, 1);

        let none = cover_length(&Graph::empty(2), &OrderedCliqueCover::singletons(2)).unwrap();
        assert_eq!(none.witness_edge, None);
        assert_eq!(none.value, 0);
    }

    #[test]
    fn measure_examples() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let cover = OrderedCliqueCover::new(5, vec![set(&[0, 1]), set(&[2]), set(&[3, 4])]).unwrap();
        let mu = RestrictionMeasure::new(&g, cover).unwrap();
        assert_eq!(measure(&mu, &VertexSet::new()), 0);
        assert_eq!(measure(&mu, &VertexSet::full(5)), 3);
        assert_eq!(measure(&mu, &set(&[1, 4])), 2);
        assert_eq!(measure(&mu, &set(&[0, 1])), 1);
    }

    #[test]
    fn measure_rejects_non_clique_parts() {
        let p = path(3);
        let cover = OrderedCliqueCover::new(3, vec![set(&[0, 2]), set(&[1])]).unwrap();
        assert_eq!(RestrictionMeasure::new(&p, cover), Err(GraphError::NotAClique(0, 2)));
    }

    #[test]
    fn axioms_on_singletons_and_triangles() {
        let g = path(12);
        let report = check_measure_axioms(&RestrictionMeasure::singletons(12), &g, 300, 1);
        assert!(report.passed(), "{report:?}");

        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let cover = OrderedCliqueCover::new(6, vec![set(&[0, 1, 2]), set(&[3, 4, 5])]).unwrap();
        let mu = RestrictionMeasure::new(&two, cover).unwrap();
        let (a, b) = (set(&[0, 1, 2]), set(&[3, 4, 5]));
        assert_eq!(measure(&mu, &a.union(&b)), measure(&mu, &a) + measure(&mu, &b));
        assert_eq!(measure(&mu, &a.union(&b)), 2);
    }

    #[test]
    fn axioms_on_random_twenty_vertex_instance() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let g = Graph::from_predicate(20, |_, _| rng.random_bool(0.3));
        // Greedy clique partition as the measure cover.
        let mut label = vec![-1i64; 20];
        let mut next = 0;
        for v in 0..20 {
            if label[v] >= 0 {
                continue;
            }
            let mut part = vec![v];
            for w in v + 1..20 {
                if label[w] < 0 && part.iter().all(|&u| g.has_edge(u, w)) {
                    part.push(w);
                }
            }
            for u in part {
                label[u] = next;
            }
            next += 1;
        }
        let mu = RestrictionMeasure::new(&g, OrderedCliqueCover::from_labels(&label)).unwrap();
        let report = check_measure_axioms(&mu, &g, 500, 9);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.total_checks(), 1500);
    }

    #[test]
    fn restricted_cover_keeps_order() {
        let cover = OrderedCliqueCover::new(5, vec![set(&[3]), set(&[0, 4]), set(&[1, 2])]).unwrap();
        let r = cover.restrict(&[0, 1, 3]);
        assert_eq!(r.parts(), &[set(&[2]), set(&[0]), set(&[1])]);
    }
}
