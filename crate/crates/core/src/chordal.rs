//! Chordal graph recognition by maximum cardinality search, maximal
//! cliques from a perfect elimination ordering, clique trees, and
//! measure-balanced maximal-clique separators.

use crate::error::GraphError;
use crate::graphcore::{Graph, RestrictionMeasure, VertexSet};

/// An elimination ordering and whether it is perfect.
///
/// `order[0]` is eliminated first. When `chordal` is true, the later
/// neighbors of each vertex form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
    pub chordal: bool,
}

impl EliminationOrder {
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Maximum cardinality search; the reverse visit order is returned as
/// the elimination order and checked for the perfect elimination property.
pub fn mcs_order(h: &Graph) -> EliminationOrder {
    let n = h.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    // Reverse push so that lower ids pop first among equal weights.
    buckets[0].extend((0..n).rev());
    let mut top = 0usize;
    let mut visit = Vec::with_capacity(n);
    while visit.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !visited[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        visited[v] = true;
        visit.push(v);
        for &w in h.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    visit.reverse();
    let chordal = is_perfect_elimination(h, &visit);
    EliminationOrder {
        order: visit,
        chordal,
    }
}

/// Tarjan and Yannakakis' test: every later neighbor of `v` other than its
/// earliest later neighbor `p` must be adjacent to `p`.
pub fn is_perfect_elimination(h: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let parent = h
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .min_by_key(|&w| pos[w]);
        if let Some(p) = parent {
            for &w in h.neighbors(v) {
                if pos[w] > pos[v] && w != p && !h.has_edge(p, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// All maximal cliques of a chordal graph, in elimination order of their
/// earliest vertex.
pub fn maximal_cliques_chordal(h: &Graph, ord: &EliminationOrder) -> Result<Vec<VertexSet>, GraphError> {
    if !ord.chordal {
        return Err(GraphError::NotChordal);
    }
    let n = h.vertex_count();
    let pos = ord.positions();
    let later: Vec<Vec<usize>> = (0..n)
        .map(|v| h.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect())
        .collect();
    let mut maximal = vec![true; n];
    for u in 0..n {
        if let Some(&p) = later[u].iter().min_by_key(|&&w| pos[w]) {
            if later[u].len() == later[p].len() + 1 {
                maximal[p] = false;
            }
        }
    }
    Ok(ord
        .order
        .iter()
        .filter(|&&v| maximal[v])
        .map(|&v| {
            let mut c = later[v].clone();
            c.push(v);
            VertexSet::from(c)
        })
        .collect())
}

/// Tree on the maximal cliques of a chordal graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub nodes: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    /// For each vertex, the nodes containing it induce a connected subtree.
    pub fn satisfies_running_intersection(&self, n: usize) -> bool {
        let k = self.nodes.len();
        if k > 0 && self.edges.len() != k - 1 {
            return false;
        }
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for v in 0..n {
            let holders: Vec<usize> = (0..k).filter(|&i| self.nodes[i].contains(v)).collect();
            let Some(&start) = holders.first() else {
                continue;
            };
            let mut seen = vec![false; k];
            let mut stack = vec![start];
            seen[start] = true;
            let mut reached = 0;
            while let Some(i) = stack.pop() {
                reached += 1;
                for &j in &adj[i] {
                    if !seen[j] && self.nodes[j].contains(v) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            if reached != holders.len() {
                return false;
            }
        }
        true
    }
}

fn intersection_size(a: &VertexSet, b: &VertexSet) -> usize {
    let (a, b) = (a.as_slice(), b.as_slice());
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Maximum-weight spanning tree over clique intersection sizes (Prim).
///
/// Zero-weight edges join the trees of different components so the
/// result is always a single tree.
pub fn clique_tree(h: &Graph, cliques: &[VertexSet]) -> Result<CliqueTree, GraphError> {
    if !mcs_order(h).chordal {
        return Err(GraphError::NotChordal);
    }
    let k = cliques.len();
    let mut in_tree = vec![false; k];
    let mut best: Vec<(usize, usize)> = vec![(0, usize::MAX); k];
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    if k > 0 {
        in_tree[0] = true;
        for j in 1..k {
            best[j] = (intersection_size(&cliques[0], &cliques[j]), 0);
        }
    }
    for _ in 1..k {
        let next = (0..k)
            .filter(|&j| !in_tree[j])
            .max_by(|&a, &b| best[a].0.cmp(&best[b].0).then(b.cmp(&a)))
            .unwrap();
        in_tree[next] = true;
        edges.push((best[next].1.min(next), best[next].1.max(next)));
        for j in 0..k {
            if !in_tree[j] {
                let w = intersection_size(&cliques[next], &cliques[j]);
                if w > best[j].0 {
                    best[j] = (w, next);
                }
            }
        }
    }
    Ok(CliqueTree {
        nodes: cliques.to_vec(),
        edges,
    })
}

/// A maximal clique of the chordal supergraph whose removal splits `G`
/// into two measure-balanced sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedClique {
    pub clique: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    /// `max(mu(side_a), mu(side_b))`.
    pub larger: usize,
}

/// `3 * side <= 2 * whole`, exact in integers.
pub fn within_two_thirds(side: usize, whole: usize) -> bool {
    3 * side <= 2 * whole
}

fn check_pair(h: &Graph, g: &Graph, mu: &RestrictionMeasure) -> Result<(), GraphError> {
    let n = h.vertex_count();
    if g.vertex_count() != n || mu.cover().vertex_count() != n {
        return Err(GraphError::Uncovered(n.min(g.vertex_count())));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !h.has_edge(u, v)) {
        return Err(GraphError::NotAClique(u, v));
    }
    Ok(())
}

/// Every maximal clique of `h` that yields a 2/3-balanced split of `g`,
/// with its side packing.
///
/// Sides are built from the components of `g` minus the clique. Each
/// measure part is a `g`-clique, so it lies inside a single component and
/// the measure is additive over components.
pub fn balanced_clique_candidates(
    h: &Graph,
    g: &Graph,
    mu: &RestrictionMeasure,
) -> Result<Vec<BalancedClique>, GraphError> {
    check_pair(h, g, mu)?;
    let ord = mcs_order(h);
    let cliques = maximal_cliques_chordal(h, &ord)?;
    let n = g.vertex_count();
    let whole = mu.total();
    let mut removed = vec![false; n];
    let mut seen = vec![false; n];
    let mut part_stamp = vec![usize::MAX; mu.total()];
    let mut out = Vec::new();
    let mut stack = Vec::new();

    for (ci, clique) in cliques.iter().enumerate() {
        for v in clique.iter() {
            removed[v] = true;
        }
        seen.iter_mut().for_each(|s| *s = false);
        // (measure, size, min id, members)
        let mut comps: Vec<(usize, usize, usize, Vec<usize>)> = Vec::new();
        for start in 0..n {
            if removed[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut members = Vec::new();
            let mut m = 0;
            let stamp = ci * n + start;
            while let Some(v) = stack.pop() {
                members.push(v);
                let p = mu.part_of(v);
                if part_stamp[p] != stamp {
                    part_stamp[p] = stamp;
                    m += 1;
                }
                for &w in g.neighbors(v) {
                    if !removed[w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comps.push((m, members.len(), start, members));
        }
        for v in clique.iter() {
            removed[v] = false;
        }

        comps.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        let mut sides: [(usize, usize, Vec<usize>); 2] = Default::default();
        for (m, size, _, members) in comps {
            let target = if (sides[0].0, sides[0].1) <= (sides[1].0, sides[1].1) { 0 } else { 1 };
            sides[target].0 += m;
            sides[target].1 += size;
            sides[target].2.extend(members);
        }
        let larger = sides[0].0.max(sides[1].0);
        if within_two_thirds(larger, whole) {
            let [a, b] = sides;
            out.push(BalancedClique {
                clique: clique.clone(),
                side_a: VertexSet::from(a.2),
                side_b: VertexSet::from(b.2),
                larger,
            });
        }
    }
    Ok(out)
}

/// The balanced maximal clique minimizing the larger side's measure;
/// `None` if no maximal clique balances.
pub fn balanced_clique_separator(
    h: &Graph,
    g: &Graph,
    mu: &RestrictionMeasure,
) -> Result<Option<BalancedClique>, GraphError> {
    let candidates = balanced_clique_candidates(h, g, mu)?;
    Ok(candidates.into_iter().min_by_key(|c| c.larger))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{measure, OrderedCliqueCover};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn interval_graph(iv: &[(i32, i32)]) -> Graph {
        Graph::from_predicate(iv.len(), |a, b| iv[a].0 <= iv[b].1 && iv[b].0 <= iv[a].1)
    }

    #[test]
    fn recognition() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!mcs_order(&c4).chordal);
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert!(mcs_order(&tree).chordal);
        assert!(mcs_order(&interval_graph(&[(0, 2), (1, 3), (2, 4)])).chordal);
        assert!(mcs_order(&Graph::empty(0)).chordal);
    }

    #[test]
    fn cliques_of_small_graphs() {
        let tri = Graph::complete(3);
        let ord = mcs_order(&tri);
        assert_eq!(maximal_cliques_chordal(&tri, &ord).unwrap(), vec![set(&[0, 1, 2])]);

        let p = path(3);
        let mut cl = maximal_cliques_chordal(&p, &mcs_order(&p)).unwrap();
        cl.sort();
        assert_eq!(cl, vec![set(&[0, 1]), set(&[1, 2])]);

        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let mut cl = maximal_cliques_chordal(&bowtie, &mcs_order(&bowtie)).unwrap();
        cl.sort();
        assert_eq!(cl, vec![set(&[0, 1, 2]), set(&[2, 3, 4])]);

        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            maximal_cliques_chordal(&c4, &mcs_order(&c4)),
            Err(GraphError::NotChordal)
        );
    }

    #[test]
    fn clique_trees() {
        let p = path(3);
        let cl = maximal_cliques_chordal(&p, &mcs_order(&p)).unwrap();
        let t = clique_tree(&p, &cl).unwrap();
        assert_eq!(t.nodes.len(), 2);
        assert_eq!(t.edges.len(), 1);
        assert_eq!(
            intersection_size(&t.nodes[t.edges[0].0], &t.nodes[t.edges[0].1]),
            1
        );

        let k = Graph::complete(4);
        let cl = maximal_cliques_chordal(&k, &mcs_order(&k)).unwrap();
        let t = clique_tree(&k, &cl).unwrap();
        assert_eq!((t.nodes.len(), t.edges.len()), (1, 0));

        // Caterpillar of five intervals: a long spine with short legs.
        let g = interval_graph(&[(0, 10), (1, 2), (3, 4), (5, 6), (7, 8)]);
        let cl = maximal_cliques_chordal(&g, &mcs_order(&g)).unwrap();
        let t = clique_tree(&g, &cl).unwrap();
        assert_eq!(t.nodes.len(), 4);
        assert!(t.satisfies_running_intersection(5));
    }

    #[test]
    fn running_intersection_detects_bad_tree() {
        let t = CliqueTree {
            nodes: vec![set(&[0, 1]), set(&[2, 3]), set(&[1, 2])],
            edges: vec![(0, 1), (1, 2)],
        };
        assert!(!t.satisfies_running_intersection(4));
    }

    #[test]
    fn path_of_nine_separator() {
        // Hand enumeration: removing edge-clique {i, i+1} leaves paths of
        // i and 7 - i vertices; both must be <= 6, best is {3,4} or {4,5}
        // with sides 3/4. The larger side is 4 in both cases; {3,4} comes
        // first in the elimination order so ties resolve by enumeration.
        let p = path(9);
        let mu = RestrictionMeasure::singletons(9);
        let all = balanced_clique_candidates(&p, &p, &mu).unwrap();
        assert_eq!(all.len(), 6, "cliques {{1,2}}..{{6,7}} balance");
        let best = balanced_clique_separator(&p, &p, &mu).unwrap().unwrap();
        assert_eq!(best.larger, 4);
        let mut sizes = [best.side_a.len(), best.side_b.len()];
        sizes.sort();
        assert_eq!(sizes, [3, 4]);
        assert!(best.clique == set(&[3, 4]) || best.clique == set(&[4, 5]));
        let clique45 = all.iter().find(|c| c.clique == set(&[4, 5])).unwrap();
        let mut sizes = [clique45.side_a.len(), clique45.side_b.len()];
        sizes.sort();
        assert_eq!(sizes, [3, 4]);
    }

    #[test]
    fn star_separator() {
        let star = Graph::from_edges(7, (1..7).map(|l| (0, l))).unwrap();
        let mu = RestrictionMeasure::singletons(7);
        let best = balanced_clique_separator(&star, &star, &mu).unwrap().unwrap();
        assert!(best.clique.contains(0));
        assert_eq!(best.clique.len(), 2);
        let mut sizes = [best.side_a.len(), best.side_b.len()];
        sizes.sort();
        assert_eq!(sizes, [2, 3]);
        assert!(within_two_thirds(3, 7));
    }

    #[test]
    fn complete_graph_separator_is_everything() {
        let k = Graph::complete(5);
        let mu = RestrictionMeasure::singletons(5);
        let best = balanced_clique_separator(&k, &k, &mu).unwrap().unwrap();
        assert_eq!(best.clique, VertexSet::full(5));
        assert!(best.side_a.is_empty() && best.side_b.is_empty());
    }

    #[test]
    fn sides_are_disconnected_and_balanced_with_clique_measure() {
        let g = interval_graph(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]);
        let cover = OrderedCliqueCover::new(
            8,
            vec![set(&[0, 1]), set(&[2, 3]), set(&[4, 5]), set(&[6, 7])],
        )
        .unwrap();
        let mu = RestrictionMeasure::new(&g, cover).unwrap();
        for c in balanced_clique_candidates(&g, &g, &mu).unwrap() {
            for u in c.side_a.iter() {
                for v in c.side_b.iter() {
                    assert!(!g.has_edge(u, v));
                }
            }
            assert!(within_two_thirds(measure(&mu, &c.side_a), 4));
            assert!(within_two_thirds(measure(&mu, &c.side_b), 4));
        }
    }

    #[test]
    fn rejects_non_chordal_host_or_non_subgraph() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mu = RestrictionMeasure::singletons(4);
        assert_eq!(
            balanced_clique_separator(&c4, &c4, &mu),
            Err(GraphError::NotChordal)
        );
        let p = path(4);
        assert!(balanced_clique_separator(&p, &c4, &mu).is_err());
    }
}
