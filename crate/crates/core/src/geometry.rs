//! Geometric instances and the graphs, covers, and candidate sets built
//! from them.
//!
//! Coordinates are integers in units of `1 / SCALE`, so one geometric unit
//! is `SCALE`. Every predicate is an exact integer comparison; products are
//! taken in `i128`.

use std::collections::HashSet;
use std::fmt;

use crate::error::GeometryError;
use crate::graphcore::{Graph, OrderedCliqueCover, VertexSet};

/// Scaled coordinate.
pub type Coord = i64;

/// Number of coordinate units per geometric unit (six decimal digits).
pub const SCALE: Coord = 1_000_000;

const MAX_ABS: Coord = 1_000_000_000 * SCALE;

/// Parses a decimal string with at most six fractional digits.
pub fn parse_decimal(s: &str) -> Result<Coord, GeometryError> {
    let bad = || GeometryError::BadDecimal(s.to_string());
    let t = s.trim();
    let (neg, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if frac_part.len() > 6 {
        return Err(GeometryError::TooPrecise(s.to_string()));
    }
    let int_val: i128 = if int_part.is_empty() {
        0
    } else {
        int_part
            .parse::<i128>()
            .map_err(|_| GeometryError::OutOfRange(s.to_string()))?
    };
    let mut frac_val: i128 = 0;
    for (i, b) in frac_part.bytes().enumerate() {
        frac_val += (b - b'0') as i128 * 10i128.pow(5 - i as u32);
    }
    let mag = int_val
        .checked_mul(SCALE as i128)
        .and_then(|v| v.checked_add(frac_val))
        .ok_or_else(|| GeometryError::OutOfRange(s.to_string()))?;
    if mag > MAX_ABS as i128 {
        return Err(GeometryError::OutOfRange(s.to_string()));
    }
    let v = mag as Coord;
    Ok(if neg { -v } else { v })
}

/// Shortest decimal string that parses back to `v`.
pub fn format_decimal(v: Coord) -> String {
    let sign = if v < 0 { "-" } else { "" };
    let a = v.unsigned_abs();
    let int = a / SCALE as u64;
    let frac = a % SCALE as u64;
    if frac == 0 {
        format!("{sign}{int}")
    } else {
        let f = format!("{frac:06}");
        format!("{sign}{int}.{}", f.trim_end_matches('0'))
    }
}

fn floor_div(a: Coord, b: Coord) -> Coord {
    a.div_euclid(b)
}

fn ceil_div(a: Coord, b: Coord) -> Coord {
    -(-a).div_euclid(b)
}

/// Closed axis-parallel rectangle of height exactly one unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x_lo: Coord,
    pub x_hi: Coord,
    pub y_lo: Coord,
}

impl Rect {
    pub fn new(x_lo: Coord, x_hi: Coord, y_lo: Coord) -> Result<Self, GeometryError> {
        if x_lo >= x_hi {
            return Err(GeometryError::DegenerateRect { x_lo, x_hi });
        }
        Ok(Self { x_lo, x_hi, y_lo })
    }

    pub fn y_hi(&self) -> Coord {
        self.y_lo + SCALE
    }

    pub fn x_overlaps(&self, o: &Rect) -> bool {
        self.x_lo <= o.x_hi && o.x_lo <= self.x_hi
    }

    pub fn y_overlaps(&self, o: &Rect) -> bool {
        (self.y_lo - o.y_lo).abs() <= SCALE
    }

    pub fn intersects(&self, o: &Rect) -> bool {
        self.x_overlaps(o) && self.y_overlaps(o)
    }

    pub fn contains(&self, p: &PointSite) -> bool {
        self.x_lo <= p.x && p.x <= self.x_hi && self.y_lo <= p.y && p.y <= self.y_hi()
    }

    /// Index of the lowest integer horizontal line meeting the rectangle.
    pub fn stab_line(&self) -> Coord {
        ceil_div(self.y_lo, SCALE)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSite {
    pub x: Coord,
    pub y: Coord,
}

impl PointSite {
    pub fn new(x: Coord, y: Coord) -> Self {
        Self { x, y }
    }

    pub fn dist2(&self, o: &PointSite) -> i128 {
        let dx = (self.x - o.x) as i128;
        let dy = (self.y - o.y) as i128;
        dx * dx + dy * dy
    }

    /// Euclidean distance at most one unit.
    pub fn within_unit(&self, o: &PointSite) -> bool {
        self.dist2(o) <= (SCALE as i128) * (SCALE as i128)
    }
}

impl fmt::Display for PointSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_decimal(self.x), format_decimal(self.y))
    }
}

/// Which of the two unit-diameter circles through a pair of points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Closed disc of diameter one unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Disc {
    /// Center given in doubled coordinates, so midpoints stay integral.
    Centered { cx2: i128, cy2: i128 },
    /// Center on the given side of the directed segment `a -> b`, at unit
    /// diameter from both; requires `0 < |ab| < 1`.
    ThroughPair { a: PointSite, b: PointSite, side: Side },
}

impl Disc {
    pub fn centered_at(p: &PointSite) -> Self {
        Disc::Centered {
            cx2: 2 * p.x as i128,
            cy2: 2 * p.y as i128,
        }
    }

    pub fn contains(&self, p: &PointSite) -> bool {
        let s = SCALE as i128;
        match *self {
            Disc::Centered { cx2, cy2 } => {
                let dx = 2 * p.x as i128 - cx2;
                let dy = 2 * p.y as i128 - cy2;
                dx * dx + dy * dy <= s * s
            }
            Disc::ThroughPair { a, b, side } => {
                let (ux, uy) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
                let d = ux * ux + uy * uy;
                // q = 2p - (a + b), i.e. twice the offset from the midpoint.
                let qx = 2 * p.x as i128 - a.x as i128 - b.x as i128;
                let qy = 2 * p.y as i128 - a.y as i128 - b.y as i128;
                let q2 = qx * qx + qy * qy;
                if q2 > 4 * s * s {
                    return false;
                }
                // Inside iff |q|^2 - d <= k * sqrt((s^2 - d) / d), with
                // k = 2 * sigma * (q . rot90(u)).
                let sigma = if side == Side::Left { 1 } else { -1 };
                let lhs = q2 - d;
                let k = 2 * sigma * (-qx * uy + qy * ux);
                let rhs2 = k * k * (s * s - d);
                let lhs2 = lhs * lhs * d;
                if k >= 0 {
                    lhs <= 0 || lhs2 <= rhs2
                } else {
                    lhs <= 0 && lhs2 >= rhs2
                }
            }
        }
    }

    /// Center in geometric units, for display.
    pub fn center_approx(&self) -> (f64, f64) {
        let s = SCALE as f64;
        match *self {
            Disc::Centered { cx2, cy2 } => (cx2 as f64 / (2.0 * s), cy2 as f64 / (2.0 * s)),
            Disc::ThroughPair { a, b, side } => {
                let (ax, ay, bx, by) = (a.x as f64 / s, a.y as f64 / s, b.x as f64 / s, b.y as f64 / s);
                let (ux, uy) = (bx - ax, by - ay);
                let d = ux * ux + uy * uy;
                let t = ((1.0 - d) / (4.0 * d)).max(0.0).sqrt();
                let sigma = if side == Side::Left { 1.0 } else { -1.0 };
                (
                    (ax + bx) / 2.0 - sigma * t * uy,
                    (ay + by) / 2.0 + sigma * t * ux,
                )
            }
        }
    }
}

/// Unit grid `{(ox + i, oy + j)}` in scaled coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridFrame {
    pub ox: Coord,
    pub oy: Coord,
}

impl GridFrame {
    /// Scans offsets `k / (2 (n + 1))`, `k = 1, 2, ...`, independently on
    /// each axis until no point lies on a grid line.
    pub fn for_points(points: &[PointSite]) -> Self {
        let n = points.len() as Coord;
        let step = (SCALE / (2 * (n + 1))).max(1);
        let pick = |coord: &dyn Fn(&PointSite) -> Coord| -> Coord {
            let taken: HashSet<Coord> = points.iter().map(|p| coord(p).rem_euclid(SCALE)).collect();
            (1..)
                .map(|k| (k * step) % SCALE)
                .find(|o| !taken.contains(o))
                .expect("at most n residues are blocked")
        };
        Self {
            ox: pick(&|p| p.x),
            oy: pick(&|p| p.y),
        }
    }

    pub fn validate(&self, points: &[PointSite]) -> Result<(), GeometryError> {
        match points
            .iter()
            .position(|p| (p.x - self.ox).rem_euclid(SCALE) == 0 || (p.y - self.oy).rem_euclid(SCALE) == 0)
        {
            Some(i) => Err(GeometryError::OnGridBoundary(i)),
            None => Ok(()),
        }
    }

    pub fn strip(&self, p: &PointSite) -> Coord {
        floor_div(p.x - self.ox, SCALE)
    }

    pub fn row(&self, p: &PointSite) -> Coord {
        floor_div(p.y - self.oy, SCALE)
    }

    /// Half-unit cell index `(qx, qy)`; half-unit lines belong to the cell above/right.
    pub fn quarter_cell(&self, p: &PointSite) -> (Coord, Coord) {
        (
            floor_div(2 * (p.x - self.ox), SCALE),
            floor_div(2 * (p.y - self.oy), SCALE),
        )
    }

    /// Disc centered in the given half-unit cell.
    pub fn quarter_disc(&self, (qx, qy): (Coord, Coord)) -> Disc {
        let half = SCALE / 2;
        let quarter = SCALE / 4;
        Disc::Centered {
            cx2: 2 * (self.ox + qx * half + quarter) as i128,
            cy2: 2 * (self.oy + qy * half + quarter) as i128,
        }
    }
}

pub fn rect_intersection_graph(rects: &[Rect]) -> Graph {
    Graph::from_predicate(rects.len(), |a, b| rects[a].intersects(&rects[b]))
}

/// Rectangles whose vertical extents overlap.
pub fn y_overlap_graph(rects: &[Rect]) -> Graph {
    Graph::from_predicate(rects.len(), |a, b| rects[a].y_overlaps(&rects[b]))
}

/// Rectangles whose horizontal extents overlap; an interval graph.
pub fn x_chordal_graph(rects: &[Rect]) -> Graph {
    Graph::from_predicate(rects.len(), |a, b| rects[a].x_overlaps(&rects[b]))
}

/// Parts are the rectangles sharing their lowest stabbing line, ordered
/// bottom to top. Each part is a clique of [`y_overlap_graph`].
pub fn strip_cover_rects(rects: &[Rect]) -> OrderedCliqueCover {
    let labels: Vec<i64> = rects.iter().map(|r| r.stab_line()).collect();
    OrderedCliqueCover::from_labels(&labels)
}

/// Clique cover of the rectangle graph and an independent witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyRectCover {
    pub cover: OrderedCliqueCover,
    pub witness: VertexSet,
}

/// Per stabbing line, sweeps rectangles by `x_lo` and cuts a new clique
/// when the running common x-range empties; the rectangle with the
/// smallest `x_hi` of each clique is its witness. Witnesses of lines of one
/// parity are pairwise disjoint; the larger parity class is returned.
pub fn greedy_cover_and_is_rects(rects: &[Rect]) -> GreedyRectCover {
    let mut by_line: Vec<usize> = (0..rects.len()).collect();
    by_line.sort_by_key(|&i| (rects[i].stab_line(), rects[i].x_lo, rects[i].x_hi, i));
    let mut parts: Vec<VertexSet> = Vec::new();
    let mut witnesses: [Vec<usize>; 2] = Default::default();
    let mut i = 0;
    while i < by_line.len() {
        let line = rects[by_line[i]].stab_line();
        let mut j = i;
        while j < by_line.len() && rects[by_line[j]].stab_line() == line {
            j += 1;
        }
        let parity = line.rem_euclid(2) as usize;
        let mut current: Vec<usize> = Vec::new();
        let mut min_hi = Coord::MAX;
        let mut witness = usize::MAX;
        for &r in &by_line[i..j] {
            if !current.is_empty() && rects[r].x_lo > min_hi {
                parts.push(VertexSet::from(std::mem::take(&mut current)));
                witnesses[parity].push(witness);
                min_hi = Coord::MAX;
            }
            current.push(r);
            if rects[r].x_hi < min_hi {
                min_hi = rects[r].x_hi;
                witness = r;
            }
        }
        parts.push(VertexSet::from(current));
        witnesses[parity].push(witness);
        i = j;
    }
    let [even, odd] = witnesses;
    let witness = if odd.len() > even.len() { odd } else { even };
    GreedyRectCover {
        cover: OrderedCliqueCover::new(rects.len(), parts).expect("sweep assigns each rectangle once"),
        witness: VertexSet::from(witness),
    }
}

pub fn unit_distance_graph(points: &[PointSite]) -> Graph {
    // Bucket by unit cells so only neighboring cells are compared.
    let mut order: Vec<usize> = (0..points.len()).collect();
    let cell = |p: &PointSite| (floor_div(p.x, SCALE), floor_div(p.y, SCALE));
    order.sort_by_key(|&i| (cell(&points[i]), i));
    let mut buckets: std::collections::HashMap<(Coord, Coord), Vec<usize>> = Default::default();
    for &i in &order {
        buckets.entry(cell(&points[i])).or_default().push(i);
    }
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let (cx, cy) = cell(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(bucket) = buckets.get(&(cx + dx, cy + dy)) {
                    for &j in bucket {
                        if i < j && p.within_unit(&points[j]) {
                            edges.push((i, j));
                        }
                    }
                }
            }
        }
    }
    Graph::from_edges(points.len(), edges).expect("ids in range")
}

/// Parts are the points of each vertical grid strip, left to right.
pub fn vertical_strip_cover_points(points: &[PointSite], frame: &GridFrame) -> Result<OrderedCliqueCover, GeometryError> {
    frame.validate(points)?;
    let labels: Vec<i64> = points.iter().map(|p| frame.strip(p)).collect();
    Ok(OrderedCliqueCover::from_labels(&labels))
}

/// Points in the same or horizontally adjacent grid strips; host graph of
/// [`vertical_strip_cover_points`].
pub fn strip_adjacency_graph(points: &[PointSite], frame: &GridFrame) -> Graph {
    let strips: Vec<Coord> = points.iter().map(|p| frame.strip(p)).collect();
    Graph::from_predicate(points.len(), |a, b| (strips[a] - strips[b]).abs() <= 1)
}

/// Points whose y-coordinates differ by at most one unit; a unit interval graph.
pub fn y_chordal_graph_points(points: &[PointSite]) -> Graph {
    Graph::from_predicate(points.len(), |a, b| (points[a].y - points[b].y).abs() <= SCALE)
}

/// Points grouped by half-unit grid cell. Each cell has diagonal below one
/// unit, so every part is a clique of the unit distance graph.
pub fn quarter_cell_cover(points: &[PointSite], frame: &GridFrame) -> OrderedCliqueCover {
    let mut cells: Vec<(Coord, Coord)> = points.iter().map(|p| frame.quarter_cell(p)).collect();
    let mut distinct = cells.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let labels: Vec<i64> = cells
        .iter_mut()
        .map(|c| distinct.binary_search(c).unwrap() as i64)
        .collect();
    OrderedCliqueCover::from_labels(&labels)
}

/// One disc per nonempty half-unit cell, centered in it.
pub fn greedy_disc_cover(points: &[PointSite], frame: &GridFrame) -> Vec<Disc> {
    let mut cells: Vec<(Coord, Coord)> = points.iter().map(|p| frame.quarter_cell(p)).collect();
    cells.sort_unstable();
    cells.dedup();
    cells.into_iter().map(|c| frame.quarter_disc(c)).collect()
}

/// A candidate object with the subset of instance items it covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate<T> {
    pub object: T,
    pub covers: Vec<usize>,
}

/// Discs through each adjacent pair (one when the pair is at distance
/// exactly one) and the disc centered at each point, restricted to
/// `subset`. Discs covering the same points as an earlier one are dropped.
pub fn candidate_discs_within(points: &[PointSite], g: &Graph, subset: &[usize]) -> Vec<Candidate<Disc>> {
    let mut member = vec![false; points.len()];
    for &v in subset {
        member[v] = true;
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let one = (SCALE as i128) * (SCALE as i128);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    let mut push = |disc: Disc, anchor: usize, out: &mut Vec<Candidate<Disc>>| {
        let mut covers: Vec<usize> = std::iter::once(anchor)
            .chain(g.neighbors(anchor).iter().copied())
            .filter(|&w| member[w] && disc.contains(&points[w]))
            .collect();
        covers.sort_unstable();
        if !covers.is_empty() && seen.insert(covers.clone()) {
            out.push(Candidate { object: disc, covers });
        }
    };
    for &v in &sorted {
        push(Disc::centered_at(&points[v]), v, &mut out);
        for &w in g.neighbors(v) {
            if w <= v || !member[w] {
                continue;
            }
            let (a, b) = (points[v], points[w]);
            let d = a.dist2(&b);
            if d == 0 {
                continue;
            } else if d == one {
                let disc = Disc::Centered {
                    cx2: a.x as i128 + b.x as i128,
                    cy2: a.y as i128 + b.y as i128,
                };
                push(disc, v, &mut out);
            } else {
                push(Disc::ThroughPair { a, b, side: Side::Left }, v, &mut out);
                push(Disc::ThroughPair { a, b, side: Side::Right }, v, &mut out);
            }
        }
    }
    out
}

pub fn candidate_discs(points: &[PointSite], g: &Graph) -> Vec<Disc> {
    let all: Vec<usize> = (0..points.len()).collect();
    candidate_discs_within(points, g, &all)
        .into_iter()
        .map(|c| c.object)
        .collect()
}

/// A candidate disc covering every point of `group`, if one exists.
pub fn candidate_disc_covering(points: &[PointSite], group: &[usize]) -> Option<Disc> {
    let first = *group.first()?;
    let covers_all = |d: &Disc| group.iter().all(|&v| d.contains(&points[v]));
    let centered = Disc::centered_at(&points[first]);
    if covers_all(&centered) {
        return Some(centered);
    }
    let one = (SCALE as i128) * (SCALE as i128);
    for (i, &v) in group.iter().enumerate() {
        for &w in &group[i + 1..] {
            let (a, b) = (points[v], points[w]);
            let d = a.dist2(&b);
            if d == 0 || d > one {
                continue;
            }
            let options = if d == one {
                vec![Disc::Centered {
                    cx2: a.x as i128 + b.x as i128,
                    cy2: a.y as i128 + b.y as i128,
                }]
            } else {
                vec![
                    Disc::ThroughPair { a, b, side: Side::Left },
                    Disc::ThroughPair { a, b, side: Side::Right },
                ]
            };
            if let Some(d) = options.into_iter().find(|d| covers_all(d)) {
                return Some(d);
            }
        }
    }
    None
}

/// Points `(x_hi(i), y_hi(j))` lying in both rectangles `i` and `j`, for
/// `i, j` in `subset`, with the rectangles of `subset` each pierces.
///
/// Sliding a piercing point right to the smallest `x_hi` and then up to the
/// smallest top edge among the rectangles it pierces keeps every one of
/// them pierced, so some minimum piercing set lies in this family.
pub fn candidate_pierce_points_within(rects: &[Rect], g: &Graph, subset: &[usize]) -> Vec<Candidate<PointSite>> {
    let mut member = vec![false; rects.len()];
    for &v in subset {
        member[v] = true;
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let mut seen: HashSet<PointSite> = HashSet::new();
    let mut out = Vec::new();
    for &i in &sorted {
        let closed: Vec<usize> = std::iter::once(i)
            .chain(g.neighbors(i).iter().copied().filter(|&w| member[w]))
            .collect();
        for &j in &closed {
            let p = PointSite::new(rects[i].x_hi, rects[j].y_hi());
            if !rects[i].contains(&p) || !rects[j].contains(&p) || !seen.insert(p) {
                continue;
            }
            let mut covers: Vec<usize> = closed.iter().copied().filter(|&w| rects[w].contains(&p)).collect();
            covers.sort_unstable();
            out.push(Candidate { object: p, covers });
        }
    }
    out
}

pub fn candidate_pierce_points(rects: &[Rect]) -> Vec<PointSite> {
    let g = rect_intersection_graph(rects);
    let all: Vec<usize> = (0..rects.len()).collect();
    candidate_pierce_points_within(rects, &g, &all)
        .into_iter()
        .map(|c| c.object)
        .collect()
}

/// A point common to pairwise-intersecting rectangles: the maximum of the
/// lower-left corners.
pub fn helly_point(rects: &[Rect]) -> Result<PointSite, GeometryError> {
    if rects.is_empty() {
        return Err(GeometryError::Empty);
    }
    for (i, a) in rects.iter().enumerate() {
        for (j, b) in rects.iter().enumerate().skip(i + 1) {
            if !a.intersects(b) {
                return Err(GeometryError::NotPairwiseIntersecting(i, j));
            }
        }
    }
    Ok(PointSite::new(
        rects.iter().map(|r| r.x_lo).max().unwrap(),
        rects.iter().map(|r| r.y_lo).max().unwrap(),
    ))
}

/// Whether the points fit in a closed axis-parallel unit square.
pub fn fits_unit_box(points: &[PointSite], members: &[usize]) -> bool {
    let Some(&first) = members.first() else {
        return true;
    };
    let (mut x0, mut x1, mut y0, mut y1) = (points[first].x, points[first].x, points[first].y, points[first].y);
    for &v in members {
        x0 = x0.min(points[v].x);
        x1 = x1.max(points[v].x);
        y0 = y0.min(points[v].y);
        y1 = y1.max(points[v].y);
    }
    x1 - x0 <= SCALE && y1 - y0 <= SCALE
}

/// Up to four discs covering the unit square anchored at the members'
/// lower-left extremes; only discs covering some member are returned.
pub fn unit_box_discs(points: &[PointSite], members: &[usize]) -> Vec<Disc> {
    let Some(x0) = members.iter().map(|&v| points[v].x).min() else {
        return Vec::new();
    };
    let y0 = members.iter().map(|&v| points[v].y).min().unwrap();
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let c = Disc::Centered {
                cx2: 2 * (x0 + SCALE / 4 + i * SCALE / 2) as i128,
                cy2: 2 * (y0 + SCALE / 4 + j * SCALE / 2) as i128,
            };
            if members.iter().any(|&v| c.contains(&points[v])) {
                out.push(c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{cover_length, verify_clique_cover};

    fn d(s: &str) -> Coord {
        parse_decimal(s).unwrap()
    }

    fn rect(a: &str, b: &str, y: &str) -> Rect {
        Rect::new(d(a), d(b), d(y)).unwrap()
    }

    fn pt(x: &str, y: &str) -> PointSite {
        PointSite::new(d(x), d(y))
    }

    #[test]
    fn decimals() {
        assert_eq!(d("1"), SCALE);
        assert_eq!(d("-0.5"), -SCALE / 2);
        assert_eq!(d(".25"), SCALE / 4);
        assert_eq!(d("3.000001"), 3 * SCALE + 1);
        assert!(matches!(parse_decimal("0.1234567"), Err(GeometryError::TooPrecise(_))));
        assert!(parse_decimal("abc").is_err());
        assert!(parse_decimal("").is_err());
        assert!(parse_decimal("1e3").is_err());
        assert_eq!(format_decimal(d("-2.50")), "-2.5");
        assert_eq!(format_decimal(0), "0");
        assert_eq!(format_decimal(1), "0.000001");
    }

    #[test]
    fn rect_graph_boundaries() {
        let corner = [rect("0", "1", "0"), rect("1", "2", "1")];
        assert_eq!(rect_intersection_graph(&corner).edge_count(), 1);
        let apart = [rect("0", "2", "0"), rect("3", "4", "0")];
        assert_eq!(rect_intersection_graph(&apart).edge_count(), 0);
        let stabbed = [rect("0", "2", "0"), rect("1", "3", "0.5"), rect("0.5", "1.5", "0.2")];
        assert_eq!(rect_intersection_graph(&stabbed).edge_count(), 3);
        assert!(Rect::new(1, 1, 0).is_err());
    }

    #[test]
    fn unit_distance_boundaries() {
        assert_eq!(unit_distance_graph(&[pt("0", "0"), pt("1", "0")]).edge_count(), 1);
        assert_eq!(unit_distance_graph(&[pt("0", "0"), pt("0.8", "0.8")]).edge_count(), 0);
        let tri = [pt("0", "0"), pt("0.5", "0"), pt("0.25", "0.4")];
        assert_eq!(unit_distance_graph(&tri).edge_count(), 3);
    }

    #[test]
    fn strip_covers_for_rects() {
        let flat = [rect("0", "1", "0"), rect("2", "3", "0"), rect("0.5", "2.5", "0")];
        let c = strip_cover_rects(&flat);
        assert_eq!(c.part_count(), 1);
        assert_eq!(cover_length(&rect_intersection_graph(&flat), &c).unwrap().value, 0);

        let mixed = [rect("0", "1", "0"), rect("0.5", "2", "0.5"), rect("1.5", "3", "0")];
        let c = strip_cover_rects(&mixed);
        assert_eq!(c.part_count(), 2);
        assert!(cover_length(&rect_intersection_graph(&mixed), &c).unwrap().value <= 1);
        assert!(verify_clique_cover(&c, &y_overlap_graph(&mixed)).is_valid());
    }

    #[test]
    fn x_graph_cases() {
        let r = [rect("0", "1", "0"), rect("0.5", "1.5", "3")];
        assert_eq!(x_chordal_graph(&r).edge_count(), 1);
        assert_eq!(rect_intersection_graph(&r).edge_count(), 0);
        let r = [rect("0", "1", "0"), rect("2", "3", "0")];
        assert_eq!(x_chordal_graph(&r).edge_count(), 0);
    }

    #[test]
    fn greedy_rect_cover_cases() {
        let disjoint: Vec<Rect> = (0..5).map(|i| Rect::new(3 * i * SCALE, (3 * i + 1) * SCALE, 0).unwrap()).collect();
        let gc = greedy_cover_and_is_rects(&disjoint);
        assert_eq!(gc.cover.part_count(), 5);
        assert_eq!(gc.witness.len(), 5);

        let common: Vec<Rect> = (0..5)
            .map(|i| Rect::new(-i * SCALE / 10, SCALE + i * SCALE / 10, -i * SCALE / 10).unwrap())
            .collect();
        let gc = greedy_cover_and_is_rects(&common);
        assert_eq!((gc.cover.part_count(), gc.witness.len()), (1, 1));
    }

    #[test]
    fn point_strips_and_y_graph() {
        let pts = [pt("0.1", "0"), pt("0.3", "5"), pt("0.9", "2")];
        let frame = GridFrame::for_points(&pts);
        frame.validate(&pts).unwrap();
        assert_eq!(vertical_strip_cover_points(&pts, &frame).unwrap().part_count(), 2);
        let wide = GridFrame { ox: d("0.05"), oy: d("0.05") };
        assert_eq!(vertical_strip_cover_points(&pts, &wide).unwrap().part_count(), 1);

        let bad = GridFrame { ox: d("0.1"), oy: d("0.5") };
        assert_eq!(
            vertical_strip_cover_points(&pts, &bad),
            Err(GeometryError::OnGridBoundary(0))
        );

        let g2 = y_chordal_graph_points(&[pt("0", "0"), pt("5", "0.5")]);
        assert_eq!(g2.edge_count(), 1);
        assert_eq!(y_chordal_graph_points(&[pt("0", "0"), pt("0", "2")]).edge_count(), 0);
    }

    #[test]
    fn adjacent_strip_edge_has_gap_one() {
        let pts = [pt("0.5", "0"), pt("1.4", "0.2")];
        let frame = GridFrame { ox: 0, oy: d("0.5") };
        frame.validate(&pts).unwrap();
        let g = unit_distance_graph(&pts);
        assert_eq!(g.edge_count(), 1);
        let c = vertical_strip_cover_points(&pts, &frame).unwrap();
        assert_eq!(cover_length(&g, &c).unwrap().value, 1);
    }

    #[test]
    fn grid_offset_avoids_points() {
        let n = 9;
        let step = SCALE / (2 * (n + 1));
        // Block the first few candidate offsets on both axes.
        let pts: Vec<PointSite> = (1..=n).map(|k| PointSite::new(k * step, k * step + 3 * SCALE)).collect();
        let frame = GridFrame::for_points(&pts);
        frame.validate(&pts).unwrap();
        assert_eq!(frame.ox, 10 * step);
    }

    #[test]
    fn candidate_discs_at_unit_distance() {
        let pts = [pt("0", "0"), pt("1", "0")];
        let g = unit_distance_graph(&pts);
        let c = candidate_discs(&pts, &g);
        assert_eq!(c.len(), 3);
        assert!(c.contains(&Disc::Centered { cx2: SCALE as i128, cy2: 0 }));
        assert_eq!(candidate_discs(&[pt("3", "3")], &Graph::empty(1)).len(), 1);
    }

    #[test]
    fn pair_disc_passes_through_both_points() {
        let a = pt("0", "0");
        let b = pt("0.6", "0");
        // Centers at (0.3, +-0.4): radius^2 = 0.09 + 0.16 = 0.25.
        let left = Disc::ThroughPair { a, b, side: Side::Left };
        let right = Disc::ThroughPair { a, b, side: Side::Right };
        for disc in [left, right] {
            assert!(disc.contains(&a) && disc.contains(&b));
        }
        assert!(left.contains(&pt("0.3", "0.9")));
        assert!(!left.contains(&pt("0.3", "0.900001")));
        assert!(!left.contains(&pt("0.3", "-0.1")) || right.contains(&pt("0.3", "-0.1")));
        assert!(right.contains(&pt("0.3", "-0.9")));
        assert!(right.contains(&pt("0.3", "0.1")));
        assert!(!right.contains(&pt("0.3", "0.100001")));
        assert!(left.contains(&pt("0.3", "0.1")));
        let (cx, cy) = left.center_approx();
        assert!((cx - 0.3).abs() < 1e-12 && (cy - 0.4).abs() < 1e-12);
    }

    #[test]
    fn greedy_disc_cover_cases() {
        let pts = [pt("0.1", "0.1"), pt("0.2", "0.2")];
        let frame = GridFrame { ox: d("-0.01"), oy: d("-0.01") };
        let discs = greedy_disc_cover(&pts, &frame);
        assert_eq!(discs.len(), 1);
        assert!(pts.iter().all(|p| discs[0].contains(p)));

        let far: Vec<PointSite> = (0..4).map(|i| PointSite::new(3 * i * SCALE + SCALE / 3, SCALE / 3)).collect();
        let frame = GridFrame::for_points(&far);
        assert_eq!(greedy_disc_cover(&far, &frame).len(), 4);
    }

    #[test]
    fn quarter_discs_cover_their_cells() {
        let frame = GridFrame { ox: 7, oy: 11 };
        let half = SCALE / 2;
        for (qx, qy) in [(0, 0), (-3, 2), (5, -1)] {
            let disc = frame.quarter_disc((qx, qy));
            let x0 = frame.ox + qx * half;
            let y0 = frame.oy + qy * half;
            for (dx, dy) in [(0, 0), (half, 0), (0, half), (half, half), (half / 2, half / 3)] {
                assert!(disc.contains(&PointSite::new(x0 + dx, y0 + dy)));
            }
        }
    }

    #[test]
    fn pierce_candidates() {
        let one = [rect("0", "2", "0")];
        assert_eq!(candidate_pierce_points(&one), vec![pt("2", "1")]);
        let disjoint: Vec<Rect> = (0..3).map(|i| Rect::new(3 * i * SCALE, (3 * i + 1) * SCALE, 0).unwrap()).collect();
        assert_eq!(candidate_pierce_points(&disjoint).len(), 3);
    }

    #[test]
    fn helly_points() {
        let two = [rect("0", "2", "0"), rect("1", "3", "0.5")];
        assert_eq!(helly_point(&two).unwrap(), pt("1", "0.5"));
        assert_eq!(helly_point(&[rect("1", "2", "3")]).unwrap(), pt("1", "3"));
        let three = [rect("0", "1.5", "0.2"), rect("0.5", "2", "0.9"), rect("1", "1.1", "0")];
        let p = helly_point(&three).unwrap();
        assert!(three.iter().all(|r| r.contains(&p)));
        assert_eq!(
            helly_point(&[rect("0", "1", "0"), rect("2", "3", "0")]),
            Err(GeometryError::NotPairwiseIntersecting(0, 1))
        );
    }
}
