//! Dinic's blocking-flow algorithm on small integer-capacity networks.

use std::collections::VecDeque;

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    rev: usize,
    cap: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rf = self.arcs[to].len() + usize::from(from == to);
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc { to, rev: rf, cap });
        self.arcs[to].push(Arc {
            to: from,
            rev: rt,
            cap: 0,
        });
    }

    /// Undirected unit edge: one arc each way, each the other's residual.
    pub fn add_edge(&mut self, a: usize, b: usize, cap: u32) {
        let ra = self.arcs[b].len();
        let rb = self.arcs[a].len();
        self.arcs[a].push(Arc {
            to: b,
            rev: ra,
            cap,
        });
        self.arcs[b].push(Arc {
            to: a,
            rev: rb,
            cap,
        });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in &self.arcs[u] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32) -> u32 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.arcs[u].len() {
            let Arc { to, rev, cap } = self.arcs[u][self.iter[u]];
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.arcs[u][self.iter[u]].cap -= d;
                    self.arcs[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    /// Maximum `s`-`t` flow, stopping early once `limit` units are routed.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, limit - flow);
                if f == 0 {
                    break;
                }
                flow += f;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }
}
