//! Test-only oracles, independent of the library's flow and search code.
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zagreb_core::Graph;

/// Seed for randomized suites: `ZEX_SEED`, default 0.
pub fn seed() -> u64 {
    std::env::var("ZEX_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Union-find connectivity over the vertices not in `removed`, using only
/// the edges not in `dropped`. Fewer than two vertices count as connected.
pub fn connected_after(n: usize, edges: &[(usize, usize)], removed: u32, dropped: u32) -> bool {
    let alive: Vec<usize> = (0..n).filter(|v| removed >> v & 1 == 0).collect();
    if alive.len() <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if dropped >> i & 1 == 1 || removed >> u & 1 == 1 || removed >> v & 1 == 1 {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let root = find(&mut parent, alive[0]);
    alive.iter().all(|&v| find(&mut parent, v) == root)
}

/// All `k`-subsets of `0..m` as bitmasks, generated recursively.
pub fn k_subsets(m: usize, k: usize) -> impl Iterator<Item = u32> {
    fn go(start: usize, m: usize, k: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..m {
            if m - i < k {
                break;
            }
            go(i + 1, m, k - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    go(0, m, k, 0, &mut out);
    out.into_iter()
}

/// κ by trying vertex subsets in increasing size.
pub fn brute_vertex_connectivity(n: usize, edges: &[(usize, usize)]) -> usize {
    if edges.len() == n * n.saturating_sub(1) / 2 {
        return n.saturating_sub(1);
    }
    for k in 0..n {
        if k_subsets(n, k).any(|s| !connected_after(n, edges, s, 0)) {
            return k;
        }
    }
    unreachable!("a non-complete graph has a vertex cut")
}

/// κ′ by trying edge subsets in increasing size.
pub fn brute_edge_connectivity(n: usize, edges: &[(usize, usize)]) -> usize {
    if n <= 1 {
        return 0;
    }
    let m = edges.len();
    for k in 0..=m {
        if k_subsets(m, k).any(|d| !connected_after(n, edges, 0, d)) {
            return k;
        }
    }
    unreachable!("removing every edge disconnects n >= 2 vertices")
}

/// All labelled graphs on `n` vertices, as edge lists.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let m = pairs.len();
    (0u32..(1 << m)).map(move |mask| {
        (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect()
    })
}

/// Σ d(u)² straight from an edge list.
pub fn m1_of_edges(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut d = vec![0u64; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d.iter().map(|x| x * x).sum()
}

/// Σ d(u)d(v) over the edges, straight from an edge list.
pub fn m2_of_edges(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut d = vec![0u64; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    edges.iter().map(|&(u, v)| d[u] * d[v]).sum()
}

/// Uniform random graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.insert_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random connected graph, resampled until connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.15..0.9);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected bipartite graph with parts `0..p` and `p..n`.
pub fn random_connected_bipartite(rng: &mut impl Rng, n: usize) -> (Graph, usize) {
    loop {
        let p = rng.gen_range(1..n);
        let density = rng.gen_range(0.2..0.95);
        let mut g = Graph::empty(n).unwrap();
        for u in 0..p {
            for v in p..n {
                if rng.gen_bool(density) {
                    g.insert_edge(u, v).unwrap();
                }
            }
        }
        if g.is_connected() {
            return (g, p);
        }
    }
}
