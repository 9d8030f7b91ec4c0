//! Balanced separators for `G` given a length-bounded ordered cover and a
//! chordal supergraph.
//!
//! Two routes produce candidates. The chordal route removes a maximal
//! clique of the chordal supergraph and groups it by cover part. The
//! length-window route removes a window of consecutive cover parts; since
//! no edge spans more than `l` parts, a window of `l` parts blocks every
//! edge between the parts before and after it. The cheaper valid candidate
//! wins.

use thiserror::Error;

use crate::chordal::{balanced_clique_candidates, mcs_order, within_two_thirds};
use crate::error::GraphError;
use crate::graphcore::{cover_length, Graph, OrderedCliqueCover, RestrictionMeasure, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// Members are pairwise adjacent in `G`.
    GClique,
    /// Members fit in a unit square.
    UnitBox,
    /// Members lie in one part of the measure cover.
    MeasurePart,
}

impl Certificate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certificate::GClique => "g-clique",
            Certificate::UnitBox => "unit-box",
            Certificate::MeasurePart => "measure-part",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverUnit {
    pub members: VertexSet,
    pub certificate: Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Chordal,
    LengthWindow,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Chordal => "chordal",
            Route::LengthWindow => "length-window",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorResult {
    pub s: VertexSet,
    pub units: Vec<CoverUnit>,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub route: Route,
    pub cost: usize,
}

impl SeparatorResult {
    /// Rewrites every vertex id through `to_parent`.
    pub fn map_ids(&self, to_parent: &[usize]) -> SeparatorResult {
        let map = |s: &VertexSet| -> VertexSet { s.iter().map(|v| to_parent[v]).collect() };
        SeparatorResult {
            s: map(&self.s),
            units: self
                .units
                .iter()
                .map(|u| CoverUnit {
                    members: map(&u.members),
                    certificate: u.certificate,
                })
                .collect(),
            side_a: map(&self.side_a),
            side_b: map(&self.side_b),
            route: self.route,
            cost: self.cost,
        }
    }
}

/// Everything needed to reproduce a failed separation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorDiagnostic {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub g1_parts: Vec<VertexSet>,
    pub measure_parts: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparatorError {
    #[error("no balanced separator found on {} vertices", .0.vertex_count)]
    NoSeparatorFound(Box<SeparatorDiagnostic>),
    #[error("G has an edge ({0}, {1}) missing from the chordal supergraph")]
    NotSubgraph(usize, usize),
    #[error("the measure of G is zero")]
    EmptyMeasure,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Classifies a group of chordal-separator vertices sharing one cover part.
pub type Certifier<'a> = dyn Fn(&[usize]) -> Certificate + 'a;

fn check_inputs(
    g: &Graph,
    g1_cover: &OrderedCliqueCover,
    g2: &Graph,
    mu: &RestrictionMeasure,
) -> Result<(), SeparatorError> {
    let n = g.vertex_count();
    if g1_cover.vertex_count() != n || g2.vertex_count() != n || mu.cover().vertex_count() != n {
        return Err(GraphError::Uncovered(n).into());
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !g2.has_edge(u, v)) {
        return Err(SeparatorError::NotSubgraph(u, v));
    }
    if mu.total() == 0 {
        return Err(SeparatorError::EmptyMeasure);
    }
    Ok(())
}

/// Best balanced maximal clique of `g2`, grouped by `g1_cover` part.
///
/// Among balanced cliques the one with the fewest groups is returned; ties
/// go to the smaller larger side, then enumeration order.
pub fn chordal_route(
    g: &Graph,
    g2: &Graph,
    g1_cover: &OrderedCliqueCover,
    mu: &RestrictionMeasure,
    certifier: &Certifier<'_>,
) -> Result<Option<SeparatorResult>, SeparatorError> {
    if !mcs_order(g2).chordal {
        return Err(GraphError::NotChordal.into());
    }
    let candidates = balanced_clique_candidates(g2, g, mu)?;
    let groups_of = |clique: &VertexSet| -> Vec<Vec<usize>> {
        let mut by_part: Vec<(usize, usize)> = clique.iter().map(|v| (g1_cover.index_of(v), v)).collect();
        by_part.sort_unstable();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut last = usize::MAX;
        for (p, v) in by_part {
            if p != last {
                groups.push(Vec::new());
                last = p;
            }
            groups.last_mut().unwrap().push(v);
        }
        groups
    };
    let best = candidates
        .into_iter()
        .enumerate()
        .map(|(i, c)| (groups_of(&c.clique).len(), c.larger, i, c))
        .min_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    Ok(best.map(|(_, _, _, c)| {
        let units: Vec<CoverUnit> = groups_of(&c.clique)
            .into_iter()
            .map(|members| CoverUnit {
                certificate: certifier(&members),
                members: VertexSet::from(members),
            })
            .collect();
        SeparatorResult {
            cost: units.len(),
            s: c.clique,
            units,
            side_a: c.side_a,
            side_b: c.side_b,
            route: Route::Chordal,
        }
    }))
}

struct PartCounter {
    count: Vec<usize>,
    distinct: usize,
}

impl PartCounter {
    fn new(parts: usize) -> Self {
        Self {
            count: vec![0; parts],
            distinct: 0,
        }
    }

    fn add(&mut self, p: usize) {
        if self.count[p] == 0 {
            self.distinct += 1;
        }
        self.count[p] += 1;
    }

    fn remove(&mut self, p: usize) {
        self.count[p] -= 1;
        if self.count[p] == 0 {
            self.distinct -= 1;
        }
    }
}

/// Cheapest balanced window of consecutive cover parts.
///
/// Windows of width `l` are tried first (width 0 when `l = 0`), widening
/// one part at a time until some window balances; the full range always
/// does. Cost is the measure of the window.
pub fn length_window_route(
    g: &Graph,
    g1_cover: &OrderedCliqueCover,
    mu: &RestrictionMeasure,
) -> Result<Option<SeparatorResult>, SeparatorError> {
    let l = cover_length(g, g1_cover)?.value;
    let k = g1_cover.part_count();
    let whole = mu.total();
    if k == 0 {
        return Ok(None);
    }
    let measure_parts_of = |range: std::ops::Range<usize>| -> Vec<usize> {
        range
            .flat_map(|i| g1_cover.part(i).iter())
            .map(|v| mu.part_of(v))
            .collect()
    };
    // prefix[i] = mu(parts 0..i), suffix[i] = mu(parts i..k), both exact.
    let mut prefix = vec![0; k + 1];
    let mut counter = PartCounter::new(whole);
    for i in 0..k {
        for v in g1_cover.part(i).iter() {
            counter.add(mu.part_of(v));
        }
        prefix[i + 1] = counter.distinct;
    }
    let mut suffix = vec![0; k + 1];
    let mut counter = PartCounter::new(whole);
    for i in (0..k).rev() {
        for v in g1_cover.part(i).iter() {
            counter.add(mu.part_of(v));
        }
        suffix[i] = counter.distinct;
    }

    for width in l..=k {
        let mut window = PartCounter::new(whole);
        for p in measure_parts_of(0..width) {
            window.add(p);
        }
        let mut best: Option<(usize, usize, usize)> = None; // (cost, larger, start)
        for start in 0..=k - width {
            if start > 0 {
                for p in measure_parts_of(start + width - 1..start + width) {
                    window.add(p);
                }
                for p in measure_parts_of(start - 1..start) {
                    window.remove(p);
                }
            }
            let (a, b) = (prefix[start], suffix[start + width]);
            if within_two_thirds(a, whole) && within_two_thirds(b, whole) {
                let key = (window.distinct, a.max(b), start);
                if best.is_none_or(|cur| key < cur) {
                    best = Some(key);
                }
            }
        }
        if let Some((cost, _, start)) = best {
            let collect = |range: std::ops::Range<usize>| -> VertexSet {
                range.flat_map(|i| g1_cover.part(i).iter()).collect()
            };
            let s = collect(start..start + width);
            let mut grouped: Vec<(usize, usize)> = s.iter().map(|v| (mu.part_of(v), v)).collect();
            grouped.sort_unstable();
            let mut units: Vec<CoverUnit> = Vec::new();
            let mut last = usize::MAX;
            for (p, v) in grouped {
                if p != last {
                    units.push(CoverUnit {
                        members: VertexSet::new(),
                        certificate: Certificate::MeasurePart,
                    });
                    last = p;
                }
                let u = units.last_mut().unwrap();
                u.members = u.members.union(&VertexSet::from_sorted(vec![v]));
            }
            debug_assert_eq!(units.len(), cost);
            return Ok(Some(SeparatorResult {
                s,
                units,
                side_a: collect(0..start),
                side_b: collect(start + width..k),
                route: Route::LengthWindow,
                cost,
            }));
        }
    }
    Ok(None)
}

/// Runs both routes and returns the cheaper valid candidate.
///
/// Ties prefer the smaller separator, then the chordal route.
pub fn separate(
    g: &Graph,
    g1_cover: &OrderedCliqueCover,
    g2: &Graph,
    mu: &RestrictionMeasure,
    certifier: &Certifier<'_>,
) -> Result<SeparatorResult, SeparatorError> {
    check_inputs(g, g1_cover, g2, mu)?;
    let chordal = chordal_route(g, g2, g1_cover, mu, certifier)?;
    let window = length_window_route(g, g1_cover, mu)?;
    let pick = match (chordal, window) {
        (Some(c), Some(w)) => {
            if (w.cost, w.s.len()) < (c.cost, c.s.len()) {
                Some(w)
            } else {
                Some(c)
            }
        }
        (c, w) => c.or(w),
    };
    pick.ok_or_else(|| {
        SeparatorError::NoSeparatorFound(Box::new(SeparatorDiagnostic {
            vertex_count: g.vertex_count(),
            edges: g.edges().collect(),
            g1_parts: g1_cover.parts().to_vec(),
            measure_parts: mu.cover().parts().to_vec(),
        }))
    })
}

/// A broken separator contract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparatorViolation {
    NotAPartition,
    CrossingEdge(usize, usize),
    Unbalanced { side: usize, whole: usize },
    UnitsDoNotCoverSeparator,
    BadCertificate(usize),
    CostMismatch,
}

/// Checks every separator invariant against `g` and `mu`.
///
/// `unit_box` decides whether a [`Certificate::UnitBox`] unit really fits
/// a unit square; it needs the geometry, which this module does not have.
pub fn validate(
    result: &SeparatorResult,
    g: &Graph,
    mu: &RestrictionMeasure,
    unit_box: &dyn Fn(&[usize]) -> bool,
) -> Result<(), SeparatorViolation> {
    let n = g.vertex_count();
    let mut owner = vec![0u8; n];
    for (tag, set) in [(1u8, &result.s), (2, &result.side_a), (3, &result.side_b)] {
        for v in set.iter() {
            if v >= n || owner[v] != 0 {
                return Err(SeparatorViolation::NotAPartition);
            }
            owner[v] = tag;
        }
    }
    if owner.contains(&0) {
        return Err(SeparatorViolation::NotAPartition);
    }
    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| owner[u] * owner[v] == 6)
    {
        return Err(SeparatorViolation::CrossingEdge(u, v));
    }
    let whole = mu.total();
    for side in [&result.side_a, &result.side_b] {
        let m = mu.of(side.as_slice());
        if !within_two_thirds(m, whole) {
            return Err(SeparatorViolation::Unbalanced { side: m, whole });
        }
    }
    let mut covered: Vec<usize> = result.units.iter().flat_map(|u| u.members.iter()).collect();
    covered.sort_unstable();
    if covered != result.s.as_slice() {
        return Err(SeparatorViolation::UnitsDoNotCoverSeparator);
    }
    for (i, unit) in result.units.iter().enumerate() {
        let ok = match unit.certificate {
            Certificate::GClique => g.is_clique(unit.members.as_slice()),
            Certificate::UnitBox => unit_box(unit.members.as_slice()),
            Certificate::MeasurePart => mu.of(unit.members.as_slice()) == 1,
        };
        if !ok || unit.members.is_empty() {
            return Err(SeparatorViolation::BadCertificate(i));
        }
    }
    if result.cost != result.units.len() {
        return Err(SeparatorViolation::CostMismatch);
    }
    Ok(())
}
