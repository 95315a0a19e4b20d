//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest supported order. Every neighbourhood fits in one `u64`.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph with vertices labelled `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
fn bit(u: usize) -> u64 {
    1u64 << u
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from neighbourhood masks. The caller guarantees
    /// symmetry and the absence of loops.
    pub(crate) fn from_masks_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|u| {
            let nu = self.adj[u];
            nu & bit(u) == 0 && nu & !all == 0 && bits(nu).all(|w| self.adj[w] & bit(u) != 0)
        })
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds the edge `uv`. Loops and duplicate edges are rejected.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Neighbourhood of `u` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[u])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.adj[u] & !((bit(u) << 1).wrapping_sub(1))).map(move |v| (u, v))
        })
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) + 1 == self.n)
    }

    /// Vertices reachable from the lowest vertex of `alive` without leaving `alive`.
    pub(crate) fn reach_within(&self, alive: u64) -> u64 {
        if alive == 0 {
            return 0;
        }
        let start = alive & alive.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            next &= alive & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connectivity of the subgraph induced by `alive`. The empty set and a
    /// single vertex count as connected.
    pub(crate) fn is_connected_within(&self, alive: u64) -> bool {
        self.reach_within(alive) == alive
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    /// Vertex sets of the components of `G - removed`, ordered by smallest member.
    pub(crate) fn components_within(&self, mut alive: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while alive != 0 {
            let c = self.reach_within(alive);
            out.push(c);
            alive &= !c;
        }
        out
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(self.vertex_mask())
            .into_iter()
            .map(|c| bits(c).collect())
            .collect()
    }

    /// The graph with vertex `perm[u]` in place of `u`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal the order"
        );
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for w in bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[w]);
            }
        }
        Graph::from_masks_unchecked(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Minimum vertex degree; 0 for the graph with no vertices.
pub fn min_degree(g: &Graph) -> usize {
    (0..g.order()).map(|u| g.degree(u)).min().unwrap_or(0)
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.order()).map(|u| g.degree(u)).max().unwrap_or(0)
}

/// The two Zagreb indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Index {
    M1,
    M2,
}

impl Index {
    pub const ALL: [Index; 2] = [Index::M1, Index::M2];

    pub fn evaluate(self, g: &Graph) -> u64 {
        match self {
            Index::M1 => first_zagreb(g),
            Index::M2 => second_zagreb(g),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Index::M1 => "M1",
            Index::M2 => "M2",
        })
    }
}

impl std::str::FromStr for Index {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "M1" | "m1" => Ok(Index::M1),
            "M2" | "m2" => Ok(Index::M2),
            other => Err(format!("unknown index `{other}` (expected M1 or M2)")),
        }
    }
}

/// A Zagreb index value tagged with the index that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexValue {
    pub kind: Index,
    pub value: u64,
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.kind, self.value)
    }
}

fn first_zagreb(g: &Graph) -> u64 {
    (0..g.order()).map(|u| (g.degree(u) as u64).pow(2)).sum()
}

fn second_zagreb(g: &Graph) -> u64 {
    g.edges()
        .map(|(u, v)| (g.degree(u) * g.degree(v)) as u64)
        .sum()
}

/// First Zagreb index: the sum of squared degrees.
pub fn m1(g: &Graph) -> IndexValue {
    IndexValue {
        kind: Index::M1,
        value: first_zagreb(g),
    }
}

/// Second Zagreb index: the sum over edges of the product of end degrees.
pub fn m2(g: &Graph) -> IndexValue {
    IndexValue {
        kind: Index::M2,
        value: second_zagreb(g),
    }
}

/// A 2-colouring certificate. `x` and `y` are sorted and partition the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Bipartition {
    pub fn x_mask(&self) -> u64 {
        self.x.iter().fold(0, |m, &u| m | bit(u))
    }

    pub fn y_mask(&self) -> u64 {
        self.y.iter().fold(0, |m, &u| m | bit(u))
    }

    /// Checks that the parts cover `g` disjointly and every edge crosses them.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let (xm, ym) = (self.x_mask(), self.y_mask());
        self.x.len() + self.y.len() == g.order()
            && xm & ym == 0
            && xm | ym == g.vertex_mask()
            && g.edges()
                .all(|(u, v)| (xm & bit(u) != 0) != (xm & bit(v) != 0))
    }
}

/// Breadth-first 2-colouring. In every component the smallest vertex goes to
/// `x`; isolated vertices therefore land in `x`. `None` when an odd cycle exists.
pub fn bipartition_of(g: &Graph) -> Option<Bipartition> {
    let n = g.order();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (x, y): (Vec<usize>, Vec<usize>) = (0..n).partition(|&u| side[u] == Some(false));
    Some(Bipartition { x, y })
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition_of(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn k22() -> Graph {
        Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn zagreb_small_cases() {
        assert_eq!(m1(&Graph::empty(5).unwrap()).value, 0);
        assert_eq!(m1(&k22()).value, 16);
        assert_eq!(m2(&k22()).value, 16);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(m2(&star).value, 9);
        assert_eq!(m1(&path(4)).value, 10);
        assert_eq!(m2(&path(4)).value, 8);
        assert_eq!(m1(&k22()).to_string(), "M1=16");
    }

    #[test]
    fn bipartition_examples() {
        let b = bipartition_of(&path(4)).unwrap();
        assert_eq!(
            b,
            Bipartition {
                x: vec![0, 2],
                y: vec![1, 3]
            }
        );
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(bipartition_of(&tri).is_none());
        let mut k34 = Graph::empty(7).unwrap();
        for u in 0..3 {
            for v in 3..7 {
                k34.insert_edge(u, v).unwrap();
            }
        }
        let b = bipartition_of(&k34).unwrap();
        assert_eq!((b.x.len(), b.y.len()), (3, 4));
        assert!(b.is_valid_for(&k34));
    }

    #[test]
    fn isolated_vertices_go_to_x() {
        let g = Graph::from_edges(4, [(1, 2)]).unwrap();
        let b = bipartition_of(&g).unwrap();
        assert_eq!(b.x, vec![0, 1, 3]);
        assert_eq!(b.y, vec![2]);
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree(&k22()), 2);
        assert_eq!(
            min_degree(&Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()),
            1
        );
        assert_eq!(min_degree(&Graph::empty(3).unwrap()), 0);
    }

    #[test]
    fn edge_errors() {
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.insert_edge(1, 1), Err(GraphError::Loop(1)));
        g.insert_edge(0, 2).unwrap();
        assert_eq!(g.insert_edge(2, 0), Err(GraphError::DuplicateEdge(0, 2)));
        assert!(matches!(
            g.insert_edge(0, 3),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert_eq!(g.remove_edge(0, 1), Err(GraphError::MissingEdge(0, 1)));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn components_and_relabel() {
        let g = Graph::from_edges(5, [(0, 3), (1, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 4], vec![2]]);
        let h = g.relabel(&[4, 3, 2, 1, 0]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 4)]);
        assert!(!g.is_connected());
        assert!(path(6).is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }
}
