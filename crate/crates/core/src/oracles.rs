//! Exhaustive ground truth for small instances.
//!
//! Nothing here calls into the separator or the solvers; the only shared
//! code is the graph container and the exact geometric predicates.

use std::collections::HashSet;

use crate::error::OracleError;
use crate::geometry::{PointSite, Rect, SCALE};
use crate::graphcore::{cover_length, Graph, OrderedCliqueCover, VertexSet};

fn check_size(n: usize, limit: usize) -> Result<(), OracleError> {
    if n > limit {
        Err(OracleError::TooLarge { n, limit })
    } else {
        Ok(())
    }
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Optimal value together with one optimal solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnessed<T> {
    pub size: usize,
    pub witness: T,
}

/// Maximum independent set (`n <= 24`).
pub fn brute_mis(g: &Graph) -> Result<Witnessed<VertexSet>, OracleError> {
    let n = g.vertex_count();
    check_size(n, 24)?;
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();

    // Number of greedy cliques covering `rest`, an upper bound on its
    // independence number.
    let clique_bound = |mut rest: u64| -> usize {
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let mut clique = 1u64 << v;
            let mut cand = rest & adj[v];
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                clique |= 1 << w;
                cand &= adj[w];
            }
            rest &= !clique;
            count += 1;
        }
        count
    };

    fn go(adj: &[u64], rest: u64, cur: u64, best: &mut u64, bound: &dyn Fn(u64) -> usize) {
        if rest != 0 && cur.count_ones() as usize + bound(rest) <= best.count_ones() as usize {
            return;
        }
        if rest == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        let v = rest.trailing_zeros() as usize;
        go(adj, rest & !(1 << v) & !adj[v], cur | 1 << v, best, bound);
        go(adj, rest & !(1 << v), cur, best, bound);
    }

    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    go(&adj, full, 0, &mut best, &clique_bound);
    Ok(Witnessed {
        size: best.count_ones() as usize,
        witness: VertexSet::from_sorted(mask_to_vec(best)),
    })
}

/// Smallest family of masks from `sets` whose union is `full`, found by
/// breadth-first search over covered sets, so sizes are tried in order.
fn min_union_cover(sets: &[u64], full: u64) -> Option<Vec<usize>> {
    if full == 0 {
        return Some(Vec::new());
    }
    let mut parent: std::collections::HashMap<u64, (u64, usize)> = std::collections::HashMap::new();
    let mut frontier = vec![0u64];
    parent.insert(0, (0, usize::MAX));
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &state in &frontier {
            for (i, &s) in sets.iter().enumerate() {
                let t = state | s;
                if t == state || parent.contains_key(&t) {
                    continue;
                }
                parent.insert(t, (state, i));
                if t == full {
                    let mut picks = Vec::new();
                    let mut cur = t;
                    while cur != 0 {
                        let (prev, i) = parent[&cur];
                        picks.push(i);
                        cur = prev;
                    }
                    picks.reverse();
                    return Some(picks);
                }
                next.push(t);
            }
        }
        frontier = next;
    }
    None
}

/// Minimum number of points hitting all rectangles (`n <= 14`). Candidate
/// points are all `(x_hi(i), y_hi(j))`; any piercing point can slide up
/// and right onto one of them.
pub fn brute_pierce(rects: &[Rect]) -> Result<Witnessed<Vec<PointSite>>, OracleError> {
    let n = rects.len();
    check_size(n, 14)?;
    let mut seen = HashSet::new();
    let mut masks = Vec::new();
    let mut points = Vec::new();
    for a in rects {
        for b in rects {
            let p = PointSite::new(a.x_hi, b.y_hi());
            let mask = rects
                .iter()
                .enumerate()
                .filter(|(_, r)| r.contains(&p))
                .fold(0u64, |m, (k, _)| m | 1 << k);
            if mask != 0 && seen.insert(mask) {
                masks.push(mask);
                points.push(p);
            }
        }
    }
    let full = (1u64 << n) - 1;
    let picks = min_union_cover(&masks, full).expect("each rectangle contains its own top-right corner");
    let mut witness: Vec<PointSite> = picks.into_iter().map(|i| points[i]).collect();
    witness.sort_unstable();
    Ok(Witnessed {
        size: witness.len(),
        witness,
    })
}

/// Whether three points fit in a closed disc of unit diameter.
fn triple_fits(a: &PointSite, b: &PointSite, c: &PointSite) -> bool {
    let s2 = (SCALE as i128) * (SCALE as i128);
    let (x, y, z) = (b.dist2(c), a.dist2(c), a.dist2(b));
    let longest = x.max(y).max(z);
    if longest > s2 {
        return false;
    }
    if 2 * longest >= x + y + z {
        // Right or obtuse (or degenerate): the longest side is a diameter.
        return true;
    }
    // Acute: the circumradius is at most one half.
    let sixteen_area2 = 2 * (x * y + y * z + z * x) - (x * x + y * y + z * z);
    4 * x * y * z <= s2 * sixteen_area2
}

/// Minimum number of unit-diameter discs covering the points (`n <= 10`),
/// with each disc given as the group of point indices it covers. A group
/// fits in one disc iff all its triples do.
pub fn brute_disccover(points: &[PointSite]) -> Result<Witnessed<Vec<VertexSet>>, OracleError> {
    let n = points.len();
    check_size(n, 10)?;
    let fits = |mask: u64| -> bool {
        let v = mask_to_vec(mask);
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if points[v[i]].dist2(&points[v[j]]) > (SCALE as i128) * (SCALE as i128) {
                    return false;
                }
                for k in j + 1..v.len() {
                    if !triple_fits(&points[v[i]], &points[v[j]], &points[v[k]]) {
                        return false;
                    }
                }
            }
        }
        true
    };
    let coverable: Vec<u64> = (1u64..1 << n).filter(|&m| fits(m)).collect();
    // Only maximal groups matter for covering.
    let maximal: Vec<u64> = coverable
        .iter()
        .copied()
        .filter(|&m| !coverable.iter().any(|&o| o != m && o & m == m))
        .collect();
    let full = (1u64 << n) - 1;
    let picks = min_union_cover(&maximal, full).expect("single points are coverable");
    // Make the groups disjoint so the witness partitions the points.
    let mut taken = 0u64;
    let mut witness = Vec::new();
    for i in picks {
        let m = maximal[i] & !taken;
        taken |= m;
        witness.push(VertexSet::from_sorted(mask_to_vec(m)));
    }
    Ok(Witnessed {
        size: witness.len(),
        witness,
    })
}

/// Minimum number of cliques partitioning the vertices (`n <= 12`).
pub fn brute_clique_cover(g: &Graph) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    check_size(n, 12)?;
    fn fill(g: &Graph, v: usize, k: usize, parts: &mut Vec<Vec<usize>>) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        for p in 0..parts.len() {
            if parts[p].iter().all(|&u| g.has_edge(u, v)) {
                parts[p].push(v);
                if fill(g, v + 1, k, parts) {
                    return true;
                }
                parts[p].pop();
            }
        }
        if parts.len() < k {
            parts.push(vec![v]);
            if fill(g, v + 1, k, parts) {
                return true;
            }
            parts.pop();
        }
        false
    }
    Ok((0..=n).find(|&k| fill(g, 0, k, &mut Vec::new())).unwrap_or(n))
}

/// A binary relation on `0..n`, intended to be a strict partial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictOrder {
    n: usize,
    less: Vec<Vec<bool>>,
}

impl StrictOrder {
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut less = vec![vec![false; n]; n];
        for (x, y) in pairs {
            less[x][y] = true;
        }
        Self { n, less }
    }

    pub fn chain(n: usize) -> Self {
        Self::from_pairs(n, (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))))
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_pairs(n, [])
    }

    /// `x_i < y_j` iff `i != j`, with `x_i = i` and `y_j = k + j`.
    pub fn standard_example(k: usize) -> Self {
        Self::from_pairs(
            2 * k,
            (0..k).flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, k + j))),
        )
    }

    /// The order of closed intervals: `x < y` iff `x` ends strictly before
    /// `y` starts.
    pub fn interval_order(intervals: &[(i64, i64)]) -> Self {
        let n = intervals.len();
        Self::from_pairs(
            n,
            (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| intervals[x].1 < intervals[y].0),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.less[x][y]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.less[x][y])
            .collect()
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less[x][y] || self.less[y][x]
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|x| !self.less[x][x])
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| !self.less[x][y] || (0..self.n).all(|z| !self.less[y][z] || self.less[x][z]))
        })
    }

    /// Distinct vertices are adjacent iff they are incomparable.
    pub fn incomparability_graph(&self) -> Graph {
        Graph::from_predicate(self.n, |x, y| !self.comparable(x, y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCheck {
    pub order: StrictOrder,
    pub irreflexive: bool,
    pub transitive: bool,
    pub incomparability_matches: bool,
}

impl OrderCheck {
    pub fn passed(&self) -> bool {
        self.irreflexive && self.transitive && self.incomparability_matches
    }
}

/// Orders non-adjacent vertices by part index and checks the result is a
/// strict order whose incomparability graph is `g`.
pub fn order_from_length1_cover(g: &Graph, cover: &OrderedCliqueCover) -> Result<OrderCheck, OracleError> {
    let len = cover_length(g, cover)?.value;
    if len > 1 {
        return Err(OracleError::LengthTooLarge(len));
    }
    let n = g.vertex_count();
    let order = StrictOrder::from_pairs(
        n,
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && cover.index_of(x) < cover.index_of(y) && !g.has_edge(x, y)),
    );
    let inc = order.incomparability_graph();
    let incomparability_matches = (0..n).all(|x| (x + 1..n).all(|y| inc.has_edge(x, y) == g.has_edge(x, y)));
    Ok(OrderCheck {
        irreflexive: order.is_irreflexive(),
        transitive: order.is_transitive(),
        incomparability_matches,
        order,
    })
}

/// Least number of linear extensions whose intersection is `ord`
/// (ground set at most 8).
pub fn poset_dimension(ord: &StrictOrder) -> Result<usize, OracleError> {
    let n = ord.size();
    check_size(n, 8)?;
    if n == 0 {
        return Ok(0);
    }
    // Index incomparable ordered pairs; an extension "reverses" (x, y)
    // when it puts y before x.
    let mut pair_index = vec![vec![usize::MAX; n]; n];
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            if x != y && !ord.comparable(x, y) {
                pair_index[x][y] = count;
                count += 1;
            }
        }
    }
    let mut masks = HashSet::new();
    let mut seq = Vec::with_capacity(n);
    fn extend(
        ord: &StrictOrder,
        placed: u32,
        seq: &mut Vec<usize>,
        pair_index: &[Vec<usize>],
        masks: &mut HashSet<u64>,
    ) {
        let n = ord.size();
        if seq.len() == n {
            let mut m = 0u64;
            for (i, &a) in seq.iter().enumerate() {
                for &b in &seq[i + 1..] {
                    // a comes before b, so the pair (b, a) is reversed.
                    let k = pair_index[b][a];
                    if k != usize::MAX {
                        m |= 1 << k;
                    }
                }
            }
            masks.insert(m);
            return;
        }
        for v in 0..n {
            if placed >> v & 1 == 0 && (0..n).all(|u| !ord.less(u, v) || placed >> u & 1 == 1) {
                seq.push(v);
                extend(ord, placed | 1 << v, seq, pair_index, masks);
                seq.pop();
            }
        }
    }
    extend(ord, 0, &mut seq, &pair_index, &mut masks);
    let mut masks: Vec<u64> = masks.into_iter().collect();
    masks.sort_unstable();
    let full = if count == 64 { u64::MAX } else { (1u64 << count) - 1 };
    let picks = min_union_cover(&masks, full).expect("the extensions realize the order");
    Ok(picks.len().max(1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthWitness {
    pub length: usize,
    pub cover: OrderedCliqueCover,
}

/// Minimum cover length over every ordered clique cover of `h`
/// (`n <= 9`).
pub fn brute_length(g: &Graph, h: &Graph) -> Result<LengthWitness, OracleError> {
    let n = h.vertex_count();
    check_size(n, 9)?;
    if g.vertex_count() != n {
        return Err(OracleError::Graph(crate::error::GraphError::VertexOutOfRange {
            vertex: g.vertex_count(),
            n,
        }));
    }
    let full: u32 = (1 << n) - 1;
    let gadj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let cliques: Vec<u32> = (1..=full)
        .filter(|&m| {
            let v: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
            h.is_clique(&v)
        })
        .collect();

    struct Search<'a> {
        limit: usize,
        full: u32,
        gadj: &'a [u32],
        cliques: &'a [u32],
        failed: HashSet<(u32, Vec<u32>)>,
    }

    impl Search<'_> {
        fn neighbours(&self, mask: u32) -> u32 {
            (0..32).filter(|&i| mask >> i & 1 == 1).fold(0, |m, i| m | self.gadj[i])
        }

        /// `parts` is the placed sequence; only the last `limit` parts may
        /// still receive neighbours.
        fn go(&mut self, placed: u32, parts: &mut Vec<u32>) -> bool {
            if placed == self.full {
                return true;
            }
            let window: Vec<u32> = parts[parts.len().saturating_sub(self.limit)..].to_vec();
            let key = (placed, window.clone());
            if self.failed.contains(&key) {
                return false;
            }
            let open = window.iter().fold(0, |m, p| m | p);
            let closed = placed & !open;
            let free = self.full & !placed;
            for &c in self.cliques {
                if c & placed != 0 {
                    continue;
                }
                let nb = self.neighbours(c);
                // Placed neighbours must lie in the window.
                if nb & closed != 0 {
                    continue;
                }
                // The part leaving the window must have no neighbours left
                // outside the new part.
                if self.limit > 0 && window.len() == self.limit && self.neighbours(window[0]) & free & !c != 0 {
                    continue;
                }
                if self.limit == 0 && nb & placed != 0 {
                    continue;
                }
                parts.push(c);
                if self.go(placed | c, parts) {
                    return true;
                }
                parts.pop();
            }
            self.failed.insert(key);
            false
        }
    }

    for limit in 0..n.max(1) {
        let mut s = Search {
            limit,
            full,
            gadj: &gadj,
            cliques: &cliques,
            failed: HashSet::new(),
        };
        let mut parts = Vec::new();
        if s.go(0, &mut parts) {
            let parts: Vec<VertexSet> = parts.iter().map(|&m| VertexSet::from_sorted(mask_to_vec(m as u64))).collect();
            let cover = OrderedCliqueCover::new(n, parts)?;
            let length = cover_length(g, &cover)?.value;
            return Ok(LengthWitness { length, cover });
        }
    }
    unreachable!("singleton parts give length below n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn mis_examples() {
        assert_eq!(brute_mis(&Graph::empty(5)).unwrap().size, 5);
        assert_eq!(brute_mis(&Graph::complete(5)).unwrap().size, 1);
        let c5 = brute_mis(&cycle(5)).unwrap();
        assert_eq!(c5.size, 2);
        assert!(cycle(5).is_independent(c5.witness.as_slice()));
        assert_eq!(brute_mis(&path(9)).unwrap().size, 5);
        assert!(matches!(brute_mis(&Graph::empty(25)), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn pierce_examples() {
        let one = [Rect::new(0, SCALE, 0).unwrap()];
        assert_eq!(brute_pierce(&one).unwrap().size, 1);
        let disjoint: Vec<Rect> = (0..4).map(|i| Rect::new(2 * i * SCALE, (2 * i + 1) * SCALE, 0).unwrap()).collect();
        let w = brute_pierce(&disjoint).unwrap();
        assert_eq!(w.size, 4);
        assert!(disjoint.iter().all(|r| w.witness.iter().any(|p| r.contains(p))));
        // Overlapping x-ranges chained on two lines: two points suffice.
        let rects = vec![
            Rect::new(0, SCALE, 0).unwrap(),
            Rect::new(SCALE / 2, 3 * SCALE / 2, SCALE / 2).unwrap(),
            Rect::new(SCALE, 2 * SCALE, 2 * SCALE).unwrap(),
        ];
        assert_eq!(brute_pierce(&rects).unwrap().size, 2);
    }

    #[test]
    fn disc_examples() {
        assert_eq!(brute_disccover(&[PointSite::new(0, 0)]).unwrap().size, 1);
        let pair = [PointSite::new(0, 0), PointSite::new(SCALE, 0)];
        assert_eq!(brute_disccover(&pair).unwrap().size, 1);
        let apart = [PointSite::new(0, 0), PointSite::new(SCALE + 1, 0)];
        assert_eq!(brute_disccover(&apart).unwrap().size, 2);
        // Equilateral triangle with side 0.9: circumradius 0.52 > 0.5.
        let h = 779_423; // 0.9 * sqrt(3) / 2, rounded down
        let tri = [PointSite::new(0, 0), PointSite::new(900_000, 0), PointSite::new(450_000, h)];
        assert_eq!(brute_disccover(&tri).unwrap().size, 2);
        // Side 0.8: circumradius 0.46.
        let tri = [PointSite::new(0, 0), PointSite::new(800_000, 0), PointSite::new(400_000, 692_820)];
        assert_eq!(brute_disccover(&tri).unwrap().size, 1);
    }

    #[test]
    fn clique_cover_examples() {
        assert_eq!(brute_clique_cover(&Graph::complete(4)).unwrap(), 1);
        assert_eq!(brute_clique_cover(&Graph::empty(4)).unwrap(), 4);
        assert_eq!(brute_clique_cover(&cycle(5)).unwrap(), 3);
        assert_eq!(brute_clique_cover(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn order_examples() {
        let k = Graph::complete(4);
        let cover = OrderedCliqueCover::new(4, vec![VertexSet::full(4)]).unwrap();
        let check = order_from_length1_cover(&k, &cover).unwrap();
        assert!(check.order.pairs().is_empty());
        assert!(check.passed());

        let p = path(3);
        let cover = OrderedCliqueCover::new(3, vec![VertexSet::from(vec![0, 1]), VertexSet::from(vec![2])]).unwrap();
        let check = order_from_length1_cover(&p, &cover).unwrap();
        assert_eq!(check.order.pairs(), vec![(0, 2)]);
        assert!(check.passed());

        let singles = OrderedCliqueCover::singletons(3);
        let p = Graph::from_edges(3, [(0, 2)]).unwrap();
        assert_eq!(order_from_length1_cover(&p, &singles), Err(OracleError::LengthTooLarge(2)));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(poset_dimension(&StrictOrder::chain(5)).unwrap(), 1);
        assert_eq!(poset_dimension(&StrictOrder::antichain(2)).unwrap(), 2);
        assert_eq!(poset_dimension(&StrictOrder::antichain(6)).unwrap(), 2);
        assert_eq!(poset_dimension(&StrictOrder::standard_example(3)).unwrap(), 3);
        assert_eq!(poset_dimension(&StrictOrder::standard_example(4)).unwrap(), 4);
        let s3 = StrictOrder::standard_example(3);
        assert!(s3.is_irreflexive() && s3.is_transitive());
    }

    #[test]
    fn interval_order_is_strict() {
        let ord = StrictOrder::interval_order(&[(0, 2), (1, 3), (4, 5), (2, 6)]);
        assert!(ord.is_irreflexive() && ord.is_transitive());
        assert!(ord.less(0, 2) && !ord.less(0, 1) && !ord.less(0, 3));
    }

    #[test]
    fn length_examples() {
        let k = Graph::complete(4);
        assert_eq!(brute_length(&k, &k).unwrap().length, 0);
        let p = path(4);
        assert_eq!(brute_length(&p, &p).unwrap().length, 1);
        let c = cycle(4);
        let w = brute_length(&c, &c).unwrap();
        assert_eq!(w.length, 1);
        assert_eq!(w.cover.part_count(), 2);
        let e = Graph::empty(3);
        assert_eq!(brute_length(&e, &e).unwrap().length, 0);
        // C5 needs length 2 against itself: it is not an incomparability graph.
        let c5 = cycle(5);
        assert_eq!(brute_length(&c5, &c5).unwrap().length, 2);
    }
}
