//! Exact vertex and edge connectivity through unit-capacity maximum flow.
//!
//! Vertex connectivity uses the split digraph (every vertex becomes an
//! `in -> out` arc of capacity one) and Even's observation that a minimum
//! separator misses one of the first `κ + 1` vertices, so only those need to
//! act as flow sources. Edge connectivity fixes vertex 0 as the source.

use std::fmt;

use crate::flow::FlowNetwork;
use crate::graph::{bits, min_degree, Graph};

const INF: u32 = u32::MAX / 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutKind {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutMembers {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

impl CutMembers {
    pub fn len(&self) -> usize {
        match self {
            CutMembers::Vertices(v) => v.len(),
            CutMembers::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A minimum cut realising the connectivity value.
///
/// `complete` marks graphs with no vertex cut at all (complete graphs); then
/// `members` is empty and `size` is `n - 1`. For disconnected graphs the
/// empty set already disconnects and `size` is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub members: CutMembers,
    pub size: usize,
    pub complete: bool,
}

impl CutWitness {
    pub fn kind(&self) -> CutKind {
        match self.members {
            CutMembers::Vertices(_) => CutKind::Vertex,
            CutMembers::Edges(_) => CutKind::Edge,
        }
    }
}

impl fmt::Display for CutWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complete {
            return write!(f, "complete");
        }
        f.write_str("cut={")?;
        match &self.members {
            CutMembers::Vertices(vs) => {
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
            }
            CutMembers::Edges(es) => {
                for (i, (u, v)) in es.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
            }
        }
        f.write_str("}")
    }
}

/// Number of internally vertex-disjoint `s`-`t` paths inside `alive`, capped at `limit`.
fn local_vertex_connectivity(g: &Graph, alive: u64, s: usize, t: usize, limit: u32) -> u32 {
    let n = g.order();
    let mut net = FlowNetwork::new(2 * n);
    for u in bits(alive) {
        let cap = if u == s || u == t { INF } else { 1 };
        net.add_arc(2 * u, 2 * u + 1, cap);
        for w in bits(g.neighbor_mask(u) & alive) {
            net.add_arc(2 * u + 1, 2 * w, INF);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Smallest vertex cut of the subgraph induced by `alive`, capped at `cap`.
/// `None` when that subgraph is complete (it has no vertex cut).
fn separator_size(g: &Graph, alive: u64, cap: usize) -> Option<usize> {
    let count = alive.count_ones() as usize;
    let complete =
        bits(alive).all(|u| (g.neighbor_mask(u) & alive).count_ones() as usize + 1 == count);
    if complete {
        return None;
    }
    if !g.is_connected_within(alive) {
        return Some(0);
    }
    let mut best = cap.min(count - 2);
    for (i, s) in bits(alive).enumerate() {
        if i > best {
            break;
        }
        let others = alive & !g.neighbor_mask(s) & !(1u64 << s);
        for t in bits(others) {
            if best == 0 {
                return Some(0);
            }
            let k = local_vertex_connectivity(g, alive, s, t, best as u32) as usize;
            best = best.min(k);
        }
    }
    Some(best)
}

/// `min(κ(g), cap)`. Cheaper than the exact value when only a threshold matters.
pub fn vertex_connectivity_capped(g: &Graph, cap: usize) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    separator_size(g, g.vertex_mask(), cap).unwrap_or((n - 1).min(cap))
}

/// κ(g) without a witness.
pub fn vertex_connectivity_value(g: &Graph) -> usize {
    vertex_connectivity_capped(g, usize::MAX)
}

/// κ(g) together with the lexicographically smallest minimum vertex cut.
pub fn vertex_connectivity(g: &Graph) -> (usize, CutWitness) {
    let n = g.order();
    if n <= 1 || g.is_complete() {
        let k = n.saturating_sub(1);
        return (
            k,
            CutWitness {
                members: CutMembers::Vertices(vec![]),
                size: k,
                complete: true,
            },
        );
    }
    let kappa = vertex_connectivity_value(g);
    let mut alive = g.vertex_mask();
    let mut chosen = Vec::with_capacity(kappa);
    let mut next = 0;
    while chosen.len() < kappa {
        let remaining = kappa - chosen.len();
        let v = (next..n)
            .find(|&v| separator_size(g, alive & !(1u64 << v), remaining) == Some(remaining - 1))
            .expect("a minimum cut through the remaining vertices exists");
        chosen.push(v);
        alive &= !(1u64 << v);
        next = v + 1;
    }
    (
        kappa,
        CutWitness {
            members: CutMembers::Vertices(chosen),
            size: kappa,
            complete: false,
        },
    )
}

/// `min(κ′(g), cap)`.
pub fn edge_connectivity_capped(g: &Graph, cap: usize) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = min_degree(g).min(cap);
    for t in 1..n {
        if best == 0 {
            break;
        }
        let mut net = FlowNetwork::new(n);
        for (u, v) in g.edges() {
            net.add_edge(u, v, 1);
        }
        best = best.min(net.max_flow(0, t, best as u32) as usize);
    }
    best
}

/// κ′(g) without a witness.
pub fn edge_connectivity_value(g: &Graph) -> usize {
    edge_connectivity_capped(g, usize::MAX)
}

/// κ′(g) together with the lexicographically smallest minimum edge cut
/// (edges written `(u, v)` with `u < v`).
pub fn edge_connectivity(g: &Graph) -> (usize, CutWitness) {
    let lambda = edge_connectivity_value(g);
    let mut h = g.clone();
    let mut chosen = Vec::with_capacity(lambda);
    let all_edges: Vec<_> = g.edges().collect();
    let mut next = 0;
    while chosen.len() < lambda {
        let remaining = lambda - chosen.len();
        let pos = (next..all_edges.len())
            .find(|&i| {
                let (u, v) = all_edges[i];
                let mut probe = h.clone();
                probe.remove_edge(u, v).expect("edge present");
                if remaining == 1 {
                    !probe.is_connected()
                } else {
                    edge_connectivity_capped(&probe, remaining) == remaining - 1
                }
            })
            .expect("a minimum edge cut through the remaining edges exists");
        let (u, v) = all_edges[pos];
        h.remove_edge(u, v).expect("edge present");
        chosen.push((u, v));
        next = pos + 1;
    }
    (
        lambda,
        CutWitness {
            members: CutMembers::Edges(chosen),
            size: lambda,
            complete: false,
        },
    )
}

/// Whether `g` is `k`-connected: more than `k` vertices and κ(g) ≥ k.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    g.order() > k && vertex_connectivity_capped(g, k) >= k
}

/// Removes the witness members and reports whether the result is disconnected.
pub fn witness_disconnects(g: &Graph, w: &CutWitness) -> bool {
    match &w.members {
        CutMembers::Vertices(vs) => {
            let removed = vs.iter().fold(0u64, |m, &v| m | 1 << v);
            !g.is_connected_within(g.vertex_mask() & !removed)
        }
        CutMembers::Edges(es) => {
            let mut h = g.clone();
            es.iter().all(|&(u, v)| h.remove_edge(u, v).is_ok()) && !h.is_connected()
        }
    }
}
