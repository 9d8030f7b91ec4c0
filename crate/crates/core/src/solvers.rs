//! Divide-and-conquer solvers for maximum independent set of unit-height
//! rectangles, piercing them, and covering points with unit-diameter discs.
//!
//! Every solver works on vertex subsets of one [`Decomposition`], which
//! holds `G`, the chordal supergraph `G2`, the strip order of the length
//! cover, and the measure partition. Subproblems are split into connected
//! components first; a component is either small enough for a leaf solver
//! or separated and recursed on.

use std::collections::HashMap;

use thiserror::Error;

use crate::geometry::{
    candidate_discs_within, candidate_pierce_points_within, fits_unit_box,
    greedy_cover_and_is_rects, helly_point, quarter_cell_cover, rect_intersection_graph, strip_cover_rects,
    unit_distance_graph, vertical_strip_cover_points, x_chordal_graph, y_chordal_graph_points,
    Candidate, Disc, GridFrame, PointSite, Rect,
};
use crate::graphcore::{components_within, induced_subgraph, Graph, OrderedCliqueCover, RestrictionMeasure, VertexSet};
use crate::separator::{self, Certificate, Route, SeparatorError, SeparatorResult, SeparatorViolation};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Separator(#[from] SeparatorError),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveConfig {
    /// Approximation parameter, strictly between 0 and 1.
    pub epsilon: f64,
    /// Exact solvers switch to leaf enumeration at or below this measure.
    pub base_threshold: usize,
    /// Approximation leaves stop at measure `<= ptas_leaf_constant / epsilon^2`.
    pub ptas_leaf_constant: f64,
    /// Branching width of the speculative first pass in branch and bound.
    pub enum_budget_factor: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            epsilon: 0.5,
            base_threshold: 4,
            ptas_leaf_constant: 3.0,
            enum_budget_factor: 3,
        }
    }
}

impl SolveConfig {
    pub fn with_epsilon(epsilon: f64) -> Self {
        Self {
            epsilon,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), SolveError> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(SolveError::InvalidConfig(format!("epsilon {} not in (0, 1)", self.epsilon)));
        }
        if self.base_threshold < 1 {
            return Err(SolveError::InvalidConfig("base threshold must be at least 1".into()));
        }
        if !(self.ptas_leaf_constant >= 1.0) {
            return Err(SolveError::InvalidConfig("leaf constant must be at least 1".into()));
        }
        if self.enum_budget_factor < 1 {
            return Err(SolveError::InvalidConfig("branching budget must be at least 1".into()));
        }
        Ok(())
    }

    /// Largest measure handed to the exact solver inside an approximation run.
    pub fn ptas_leaf_measure(&self) -> usize {
        (self.ptas_leaf_constant / (self.epsilon * self.epsilon) + 1e-9).floor() as usize
    }
}

/// One separator call observed during a solve.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceEvent {
    pub depth: usize,
    pub n: usize,
    pub mu: usize,
    pub length: usize,
    pub route: Route,
    pub cost: usize,
    /// Outcome of the full contract check, when the tracer asked for one.
    pub contract: Option<Result<(), SeparatorViolation>>,
}

pub trait Tracer {
    fn record(&mut self, event: &TraceEvent);

    /// Whether every separator should be checked against its contract
    /// before being recorded.
    fn validates(&self) -> bool {
        false
    }
}

impl<F: FnMut(&TraceEvent)> Tracer for F {
    fn record(&mut self, event: &TraceEvent) {
        self(event)
    }
}

/// Discards every event.
pub struct NoTrace;

impl Tracer for NoTrace {
    fn record(&mut self, _: &TraceEvent) {}
}

/// Keeps every event, optionally with contract checks.
#[derive(Clone, Debug, Default)]
pub struct Recorder {
    pub validate: bool,
    pub events: Vec<TraceEvent>,
}

impl Recorder {
    pub fn validating() -> Self {
        Self {
            validate: true,
            events: Vec::new(),
        }
    }

    pub fn violations(&self) -> usize {
        self.events.iter().filter(|e| matches!(e.contract, Some(Err(_)))).count()
    }
}

impl Tracer for Recorder {
    fn record(&mut self, event: &TraceEvent) {
        self.events.push(event.clone());
    }

    fn validates(&self) -> bool {
        self.validate
    }
}

#[derive(Clone, Debug)]
enum Geometry {
    Rects,
    Points(Vec<PointSite>),
}

/// `G`, `G2`, the strip order and the measure partition of one instance.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub g: Graph,
    pub g2: Graph,
    strip: Vec<i64>,
    mu: RestrictionMeasure,
    geometry: Geometry,
}

impl Decomposition {
    /// Strips are the lowest stabbing lines; the measure is the greedy
    /// per-line clique cover.
    pub fn for_rects(rects: &[Rect]) -> Self {
        let g = rect_intersection_graph(rects);
        let cover = strip_cover_rects(rects);
        let strip = (0..rects.len()).map(|v| cover.index_of(v) as i64).collect();
        let greedy = greedy_cover_and_is_rects(rects);
        let mu = RestrictionMeasure::new(&g, greedy.cover).expect("greedy parts share a common point");
        Self {
            g2: x_chordal_graph(rects),
            g,
            strip,
            mu,
            geometry: Geometry::Rects,
        }
    }

    /// Strips are vertical grid strips; the measure is the half-unit cell
    /// partition.
    pub fn for_points(points: &[PointSite]) -> Self {
        let frame = GridFrame::for_points(points);
        let g = unit_distance_graph(points);
        let cover = vertical_strip_cover_points(points, &frame).expect("frame avoids every point");
        let strip = (0..points.len()).map(|v| cover.index_of(v) as i64).collect();
        let mu = RestrictionMeasure::new(&g, quarter_cell_cover(points, &frame)).expect("half-unit cells are cliques");
        Self {
            g2: y_chordal_graph_points(points),
            g,
            strip,
            mu,
            geometry: Geometry::Points(points.to_vec()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.g.vertex_count()
    }

    pub fn measure(&self) -> &RestrictionMeasure {
        &self.mu
    }

    pub fn strip_cover(&self) -> OrderedCliqueCover {
        OrderedCliqueCover::from_labels(&self.strip)
    }

    pub fn measure_of(&self, subset: &[usize]) -> usize {
        self.mu.of(subset)
    }

    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        components_within(&self.g, subset)
    }

    /// Separates the subgraph induced by a sorted `subset`; ids in the
    /// result are global. Also returns the cover length of the subset.
    pub fn separate(&self, subset: &[usize]) -> Result<(SeparatorResult, usize), SeparatorError> {
        let set = VertexSet::from_sorted(subset.to_vec());
        let local_g = induced_subgraph(&self.g, &set)?;
        let local_g2 = induced_subgraph(&self.g2, &set)?;
        let labels: Vec<i64> = subset.iter().map(|&v| self.strip[v]).collect();
        let g1_cover = OrderedCliqueCover::from_labels(&labels);
        let mu = self.mu.restrict(subset);
        let length = crate::graphcore::cover_length(&local_g.graph, &g1_cover)?.value;
        let certificate = match self.geometry {
            Geometry::Rects => Certificate::GClique,
            Geometry::Points(_) => Certificate::UnitBox,
        };
        let res = separator::separate(&local_g.graph, &g1_cover, &local_g2.graph, &mu, &|_| certificate)?;
        Ok((res.map_ids(subset), length))
    }

    /// Checks a global-id separator of `subset` against the full contract.
    pub fn validate(&self, subset: &[usize], result: &SeparatorResult) -> Result<(), SeparatorViolation> {
        let set = VertexSet::from_sorted(subset.to_vec());
        let local = induced_subgraph(&self.g, &set).expect("subset in range");
        let mut to_local = HashMap::new();
        for (i, &v) in subset.iter().enumerate() {
            to_local.insert(v, i);
        }
        let map = |s: &VertexSet| -> VertexSet {
            s.iter().map(|v| to_local.get(&v).copied().unwrap_or(usize::MAX)).collect()
        };
        let local_res = SeparatorResult {
            s: map(&result.s),
            units: result
                .units
                .iter()
                .map(|u| separator::CoverUnit {
                    members: map(&u.members),
                    certificate: u.certificate,
                })
                .collect(),
            side_a: map(&result.side_a),
            side_b: map(&result.side_b),
            route: result.route,
            cost: result.cost,
        };
        let mu = self.mu.restrict(subset);
        let unit_box = |members: &[usize]| -> bool {
            match &self.geometry {
                Geometry::Points(points) => {
                    let global: Vec<usize> = members.iter().map(|&v| subset[v]).collect();
                    fits_unit_box(points, &global)
                }
                Geometry::Rects => false,
            }
        };
        separator::validate(&local_res, &local.graph, &mu, &unit_box)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisSolution {
    pub chosen: VertexSet,
    pub certified_independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PierceSolution {
    pub points: Vec<PointSite>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    pub discs: Vec<Disc>,
}

/// No two chosen rectangles intersect.
pub fn verify_independent(rects: &[Rect], chosen: &[usize]) -> bool {
    chosen.iter().all(|&i| i < rects.len())
        && chosen
            .iter()
            .enumerate()
            .all(|(k, &i)| chosen[k + 1..].iter().all(|&j| i != j && !rects[i].intersects(&rects[j])))
}

/// Every rectangle contains some point.
pub fn verify_piercing(rects: &[Rect], points: &[PointSite]) -> bool {
    rects.iter().all(|r| points.iter().any(|p| r.contains(p)))
}

/// Every point lies in some disc.
pub fn verify_disc_cover(points: &[PointSite], discs: &[Disc]) -> bool {
    points.iter().all(|p| discs.iter().any(|d| d.contains(p)))
}

struct Ctx<'a> {
    dec: &'a Decomposition,
    cfg: SolveConfig,
    tracer: &'a mut dyn Tracer,
}

impl Ctx<'_> {
    fn separate(&mut self, comp: &[usize], depth: usize) -> Result<SeparatorResult, SolveError> {
        let (res, length) = self.dec.separate(comp)?;
        let contract = self.tracer.validates().then(|| self.dec.validate(comp, &res));
        self.tracer.record(&TraceEvent {
            depth,
            n: comp.len(),
            mu: self.dec.measure_of(comp),
            length,
            route: res.route,
            cost: res.cost,
            contract,
        });
        Ok(res)
    }
}

fn minus(set: &[usize], drop: &[bool]) -> Vec<usize> {
    set.iter().copied().filter(|&v| !drop[v]).collect()
}

struct MisExact<'a, 'b> {
    ctx: &'b mut Ctx<'a>,
    memo: HashMap<Vec<usize>, Vec<usize>>,
}

impl MisExact<'_, '_> {
    fn solve(&mut self, subset: &[usize], depth: usize) -> Result<Vec<usize>, SolveError> {
        let mut out = Vec::new();
        for comp in self.ctx.dec.components(subset) {
            out.extend(self.solve_component(comp, depth)?);
        }
        out.sort_unstable();
        Ok(out)
    }

    fn solve_component(&mut self, comp: Vec<usize>, depth: usize) -> Result<Vec<usize>, SolveError> {
        if let Some(hit) = self.memo.get(&comp) {
            return Ok(hit.clone());
        }
        let dec = self.ctx.dec;
        let mu = dec.measure_of(&comp);
        let best = if mu <= self.ctx.cfg.base_threshold {
            leaf_transversal(dec, &comp)
        } else {
            let sep = self.ctx.separate(&comp, depth)?;
            let choices = independent_choices(&dec.g, &sep);
            let n = dec.vertex_count();
            let mut in_s = vec![false; n];
            for v in sep.s.iter() {
                in_s[v] = true;
            }
            let mut best: Vec<usize> = Vec::new();
            let mut blocked = vec![false; n];
            for chosen in choices {
                blocked.copy_from_slice(&in_s);
                for &v in &chosen {
                    for &w in dec.g.neighbors(v) {
                        blocked[w] = true;
                    }
                }
                let residual = minus(&comp, &blocked);
                if chosen.len() + dec.measure_of(&residual) <= best.len() {
                    continue;
                }
                let mut candidate = self.solve(&residual, depth + 1)?;
                candidate.extend(chosen.iter().copied());
                if candidate.len() > best.len() {
                    candidate.sort_unstable();
                    best = candidate;
                }
            }
            best
        };
        self.memo.insert(comp, best.clone());
        Ok(best)
    }
}

/// Maximum independent set choosing at most one vertex per measure part.
fn leaf_transversal(dec: &Decomposition, comp: &[usize]) -> Vec<usize> {
    let mut parts: HashMap<usize, Vec<usize>> = HashMap::new();
    for &v in comp {
        parts.entry(dec.mu.part_of(v)).or_default().push(v);
    }
    let mut parts: Vec<Vec<usize>> = parts.into_values().collect();
    parts.sort();
    fn go(g: &Graph, parts: &[Vec<usize>], i: usize, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() + (parts.len() - i) <= best.len() {
            return;
        }
        if i == parts.len() {
            *best = cur.clone();
            return;
        }
        for &v in &parts[i] {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                go(g, parts, i + 1, cur, best);
                cur.pop();
            }
        }
        go(g, parts, i + 1, cur, best);
    }
    let mut best = Vec::new();
    go(&dec.g, &parts, 0, &mut Vec::new(), &mut best);
    best.sort_unstable();
    best
}

/// Every independent subset of the separator taking at most one vertex
/// from each clique unit; other units contribute any independent subset.
fn independent_choices(g: &Graph, sep: &SeparatorResult) -> Vec<Vec<usize>> {
    let mut slots: Vec<Vec<usize>> = Vec::new();
    for unit in &sep.units {
        if unit.certificate == Certificate::GClique {
            slots.push(unit.members.as_slice().to_vec());
        } else {
            slots.extend(unit.members.iter().map(|v| vec![v]));
        }
    }
    let mut out = Vec::new();
    fn go(g: &Graph, slots: &[Vec<usize>], i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == slots.len() {
            out.push(cur.clone());
            return;
        }
        for &v in &slots[i] {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                go(g, slots, i + 1, cur, out);
                cur.pop();
            }
        }
        go(g, slots, i + 1, cur, out);
    }
    go(g, &slots, 0, &mut Vec::new(), &mut out);
    out
}

fn mis_exact_in(ctx: &mut Ctx<'_>, subset: &[usize], depth: usize) -> Result<Vec<usize>, SolveError> {
    let mut solver = MisExact {
        ctx,
        memo: HashMap::new(),
    };
    solver.solve(subset, depth)
}

fn mis_ptas_in(ctx: &mut Ctx<'_>, subset: &[usize], depth: usize) -> Result<Vec<usize>, SolveError> {
    let leaf = ctx.cfg.ptas_leaf_measure();
    let mut out = Vec::new();
    for comp in ctx.dec.components(subset) {
        if ctx.dec.measure_of(&comp) <= leaf {
            out.extend(mis_exact_in(ctx, &comp, depth)?);
        } else {
            let sep = ctx.separate(&comp, depth)?;
            out.extend(mis_ptas_in(ctx, sep.side_a.as_slice(), depth + 1)?);
            out.extend(mis_ptas_in(ctx, sep.side_b.as_slice(), depth + 1)?);
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn mis_solution(rects: &[Rect], chosen: Vec<usize>) -> MisSolution {
    MisSolution {
        certified_independent: verify_independent(rects, &chosen),
        chosen: VertexSet::from_sorted(chosen),
    }
}

pub fn mis_exact(rects: &[Rect], cfg: &SolveConfig) -> Result<MisSolution, SolveError> {
    mis_exact_traced(rects, cfg, &mut NoTrace)
}

pub fn mis_exact_traced(rects: &[Rect], cfg: &SolveConfig, tracer: &mut dyn Tracer) -> Result<MisSolution, SolveError> {
    cfg.validate()?;
    let dec = Decomposition::for_rects(rects);
    let all: Vec<usize> = (0..rects.len()).collect();
    let mut ctx = Ctx { dec: &dec, cfg: *cfg, tracer };
    Ok(mis_solution(rects, mis_exact_in(&mut ctx, &all, 0)?))
}

pub fn mis_ptas(rects: &[Rect], cfg: &SolveConfig) -> Result<MisSolution, SolveError> {
    mis_ptas_traced(rects, cfg, &mut NoTrace)
}

pub fn mis_ptas_traced(rects: &[Rect], cfg: &SolveConfig, tracer: &mut dyn Tracer) -> Result<MisSolution, SolveError> {
    cfg.validate()?;
    let dec = Decomposition::for_rects(rects);
    let all: Vec<usize> = (0..rects.len()).collect();
    let mut ctx = Ctx { dec: &dec, cfg: *cfg, tracer };
    Ok(mis_solution(rects, mis_ptas_in(&mut ctx, &all, 0)?))
}

/// Candidate objects of a component with coverage over the component.
type CandidateGen<'a, O> = dyn Fn(&[usize]) -> Vec<Candidate<O>> + 'a;

/// Bitset over the elements of one component.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(m: usize) -> Self {
        Bits(vec![0; m.div_ceil(64)])
    }

    fn full(m: usize) -> Self {
        let mut b = Self::empty(m);
        for i in 0..m {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }
}

/// Exact minimum hitting set over per-component candidates, guided by
/// separators on large components.
struct HitExact<'a, 'b, O: Clone> {
    ctx: &'b mut Ctx<'a>,
    gen: &'b CandidateGen<'b, O>,
    memo: HashMap<Vec<usize>, Vec<O>>,
}

/// Search state for one component.
struct Search<'s> {
    elems: &'s [usize],
    covers: &'s [Bits],
    by_elem: &'s [Vec<usize>],
    g: &'s Graph,
    /// Local indices the search must hit before handing off the residual;
    /// `None` means hit everything.
    focus: Option<&'s [usize]>,
    width_cap: Option<usize>,
    best_len: usize,
    best: Option<Vec<usize>>,
}

impl<O: Clone> HitExact<'_, '_, O> {
    fn solve(&mut self, subset: &[usize], depth: usize) -> Result<Vec<O>, SolveError> {
        let mut out = Vec::new();
        for comp in self.ctx.dec.components(subset) {
            out.extend(self.solve_component(comp, depth)?);
        }
        Ok(out)
    }

    fn solve_component(&mut self, comp: Vec<usize>, depth: usize) -> Result<Vec<O>, SolveError> {
        if let Some(hit) = self.memo.get(&comp) {
            return Ok(hit.clone());
        }
        let dec = self.ctx.dec;
        let mu = dec.measure_of(&comp);
        let cands = (self.gen)(&comp);
        let m = comp.len();
        let local: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let covers: Vec<Bits> = cands
            .iter()
            .map(|c| {
                let mut b = Bits::empty(m);
                for v in &c.covers {
                    b.set(local[v]);
                }
                b
            })
            .collect();
        let mut by_elem = vec![Vec::new(); m];
        for (ci, b) in covers.iter().enumerate() {
            for e in b.iter() {
                by_elem[e].push(ci);
            }
        }

        let focus: Option<Vec<usize>> = if mu <= self.ctx.cfg.base_threshold {
            None
        } else {
            let sep = self.ctx.separate(&comp, depth)?;
            Some(sep.s.iter().map(|v| local[&v]).collect())
        };

        let mut search = Search {
            elems: &comp,
            covers: &covers,
            by_elem: &by_elem,
            g: &dec.g,
            focus: focus.as_deref(),
            width_cap: Some(self.ctx.cfg.enum_budget_factor),
            // The measure partition yields a hitting set of size mu.
            best_len: mu + 1,
            best: None,
        };
        self.run(&mut search, depth)?;
        search.width_cap = None;
        self.run(&mut search, depth)?;
        let picked = search.best.expect("a hitting set of size at most mu exists");

        let mut out: Vec<O> = Vec::with_capacity(picked.len());
        let (own, residual): (Vec<usize>, Vec<usize>) = picked.into_iter().partition(|&c| c < cands.len());
        out.extend(own.iter().map(|&c| cands[c].object.clone()));
        if !residual.is_empty() {
            // Residual marker: recompute the handed-off part of the solution.
            let mut hit = Bits::empty(m);
            for &c in &own {
                hit = Bits(hit.0.iter().zip(&covers[c].0).map(|(a, b)| a | b).collect());
            }
            let rest: Vec<usize> = (0..m).filter(|&i| !hit.get(i)).map(|i| comp[i]).collect();
            out.extend(self.solve(&rest, depth + 1)?);
        }
        self.memo.insert(comp, out.clone());
        Ok(out)
    }

    fn run(&mut self, st: &mut Search<'_>, depth: usize) -> Result<(), SolveError> {
        let m = st.elems.len();
        let mut chosen = Vec::new();
        self.branch(st, &Bits::full(m), &mut chosen, depth)
    }

    fn branch(&mut self, st: &mut Search<'_>, unhit: &Bits, chosen: &mut Vec<usize>, depth: usize) -> Result<(), SolveError> {
        if chosen.len() + lower_bound(st, unhit) >= st.best_len {
            return Ok(());
        }
        let target = match st.focus {
            Some(focus) => focus.iter().copied().find(|&e| unhit.get(e)),
            None => unhit
                .iter()
                .min_by_key(|&e| (st.by_elem[e].len(), e)),
        };
        let Some(e) = target else {
            // Separator fully hit: the residual splits across the sides.
            let rest: Vec<usize> = unhit.iter().map(|i| st.elems[i]).collect();
            let extra = if rest.is_empty() { 0 } else { self.solve(&rest, depth + 1)?.len() };
            if chosen.len() + extra < st.best_len {
                st.best_len = chosen.len() + extra;
                let mut sol = chosen.clone();
                // Encode the residual's share as out-of-range markers.
                sol.extend(std::iter::repeat_n(usize::MAX, extra));
                st.best = Some(sol);
            }
            return Ok(());
        };
        let mut options: Vec<(usize, Bits, usize)> = st.by_elem[e]
            .iter()
            .map(|&c| {
                let gain = st.covers[c].and(unhit);
                (gain.count(), gain, c)
            })
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.2.cmp(&b.2)));
        let mut kept: Vec<(usize, Bits, usize)> = Vec::with_capacity(options.len());
        for opt in options {
            if !kept.iter().any(|k| opt.1.is_subset(&k.1)) {
                kept.push(opt);
            }
        }
        if let Some(cap) = st.width_cap {
            kept.truncate(cap);
        }
        for (_, gain, c) in kept {
            chosen.push(c);
            let next = unhit.and_not(&gain);
            self.branch(st, &next, chosen, depth)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Size of a greedy family of pairwise non-adjacent unhit elements. Every
/// candidate covers a clique of `G`, so each family member needs its own.
fn lower_bound(st: &Search<'_>, unhit: &Bits) -> usize {
    let mut picked: Vec<usize> = Vec::new();
    for i in unhit.iter() {
        let v = st.elems[i];
        if picked.iter().all(|&u| !st.g.has_edge(u, v)) {
            picked.push(v);
        }
    }
    picked.len()
}

fn hit_exact_in<O: Clone>(
    ctx: &mut Ctx<'_>,
    gen: &CandidateGen<'_, O>,
    subset: &[usize],
    depth: usize,
) -> Result<Vec<O>, SolveError> {
    let mut solver = HitExact {
        ctx,
        gen,
        memo: HashMap::new(),
    };
    solver.solve(subset, depth)
}

/// Objects hitting the whole separator, each with the component elements it
/// hits.
type SeparatorObjects<'a, O> =
    dyn Fn(&mut Ctx<'_>, &[usize], &SeparatorResult, usize) -> Result<Vec<(O, Vec<usize>)>, SolveError> + 'a;

/// Per component: exact at the leaves, otherwise hit the separator outright
/// and recurse on what remains of each side.
fn hit_ptas_in<O: Clone>(
    ctx: &mut Ctx<'_>,
    gen: &CandidateGen<'_, O>,
    separator_objects: &SeparatorObjects<'_, O>,
    subset: &[usize],
    depth: usize,
) -> Result<Vec<O>, SolveError> {
    let leaf = ctx.cfg.ptas_leaf_measure();
    let n = ctx.dec.vertex_count();
    let mut out = Vec::new();
    for comp in ctx.dec.components(subset) {
        if ctx.dec.measure_of(&comp) <= leaf {
            out.extend(hit_exact_in(ctx, gen, &comp, depth)?);
            continue;
        }
        let sep = ctx.separate(&comp, depth)?;
        let mut hit = vec![false; n];
        for (obj, covered) in separator_objects(ctx, &comp, &sep, depth + 1)? {
            for v in covered {
                hit[v] = true;
            }
            out.push(obj);
        }
        for side in [&sep.side_a, &sep.side_b] {
            let rest = minus(side.as_slice(), &hit);
            out.extend(hit_ptas_in(ctx, gen, separator_objects, &rest, depth + 1)?);
        }
    }
    Ok(out)
}

fn pierce_gen<'a>(rects: &'a [Rect], g: &'a Graph) -> impl Fn(&[usize]) -> Vec<Candidate<PointSite>> + 'a {
    move |subset| candidate_pierce_points_within(rects, g, subset)
}

fn disc_gen<'a>(points: &'a [PointSite], g: &'a Graph) -> impl Fn(&[usize]) -> Vec<Candidate<Disc>> + 'a {
    move |subset| candidate_discs_within(points, g, subset)
}

fn dedup_points(mut points: Vec<PointSite>) -> Vec<PointSite> {
    points.sort_unstable();
    points.dedup();
    points
}

pub fn pierce_exact(rects: &[Rect], cfg: &SolveConfig) -> Result<PierceSolution, SolveError> {
    pierce_exact_traced(rects, cfg, &mut NoTrace)
}

pub fn pierce_exact_traced(rects: &[Rect], cfg: &SolveConfig, tracer: &mut dyn Tracer) -> Result<PierceSolution, SolveError> {
    cfg.validate()?;
    let dec = Decomposition::for_rects(rects);
    let all: Vec<usize> = (0..rects.len()).collect();
    let gen = pierce_gen(rects, &dec.g);
    let mut ctx = Ctx { dec: &dec, cfg: *cfg, tracer };
    let points = hit_exact_in(&mut ctx, &gen, &all, 0)?;
    Ok(PierceSolution {
        points: dedup_points(points),
    })
}

pub fn pierce_ptas(rects: &[Rect], cfg: &SolveConfig) -> Result<PierceSolution, SolveError> {
    pierce_ptas_traced(rects, cfg, &mut NoTrace)
}

pub fn pierce_ptas_traced(rects: &[Rect], cfg: &SolveConfig, tracer: &mut dyn Tracer) -> Result<PierceSolution, SolveError> {
    cfg.validate()?;
    let dec = Decomposition::for_rects(rects);
    let all: Vec<usize> = (0..rects.len()).collect();
    let gen = pierce_gen(rects, &dec.g);
    // One Helly point per unit: clique and measure-part units are both
    // pairwise intersecting.
    let separator_objects = |_: &mut Ctx<'_>, comp: &[usize], sep: &SeparatorResult, _| {
        Ok(sep
            .units
            .iter()
            .map(|unit| {
                let members: Vec<Rect> = unit.members.iter().map(|v| rects[v]).collect();
                let p = helly_point(&members).expect("unit rectangles pairwise intersect");
                let covered = comp.iter().copied().filter(|&v| rects[v].contains(&p)).collect();
                (p, covered)
            })
            .collect())
    };
    let mut ctx = Ctx { dec: &dec, cfg: *cfg, tracer };
    let points = hit_ptas_in(&mut ctx, &gen, &separator_objects, &all, 0)?;
    Ok(PierceSolution {
        points: dedup_points(points),
    })
}

pub fn disccover_exact(points: &[PointSite], cfg: &SolveConfig) -> Result<CoverSolution, SolveError> {
    disccover_exact_traced(points, cfg, &mut NoTrace)
}

pub fn disccover_exact_traced(
    points: &[PointSite],
    cfg: &SolveConfig,
    tracer: &mut dyn Tracer,
) -> Result<CoverSolution, SolveError> {
    cfg.validate()?;
    let dec = Decomposition::for_points(points);
    let all: Vec<usize> = (0..points.len()).collect();
    let gen = disc_gen(points, &dec.g);
    let mut ctx = Ctx { dec: &dec, cfg: *cfg, tracer };
    Ok(CoverSolution {
        discs: hit_exact_in(&mut ctx, &gen, &all, 0)?,
    })
}

pub fn disccover_ptas(points: &[PointSite], cfg: &SolveConfig) -> Result<CoverSolution, SolveError> {
    disccover_ptas_traced(points, cfg, &mut NoTrace)
}

pub fn disccover_ptas_traced(
    points: &[PointSite],
    cfg: &SolveConfig,
    tracer: &mut dyn Tracer,
) -> Result<CoverSolution, SolveError> {
    cfg.validate()?;
    let dec = Decomposition::for_points(points);
    let all: Vec<usize> = (0..points.len()).collect();
    let gen = disc_gen(points, &dec.g);
    // Every unit fits in a unit box, so an exact cover of the separator
    // uses at most four discs per unit.
    let separator_objects = |ctx: &mut Ctx<'_>, comp: &[usize], sep: &SeparatorResult, depth| {
        let discs = hit_exact_in(ctx, &gen, sep.s.as_slice(), depth)?;
        Ok(discs
            .into_iter()
            .map(|d| {
                let covered = comp.iter().copied().filter(|&v| d.contains(&points[v])).collect();
                (d, covered)
            })
            .collect())
    };
    let mut ctx = Ctx { dec: &dec, cfg: *cfg, tracer };
    Ok(CoverSolution {
        discs: hit_ptas_in(&mut ctx, &gen, &separator_objects, &all, 0)?,
    })
}
