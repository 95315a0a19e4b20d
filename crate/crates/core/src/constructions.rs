//! Complete bipartite graphs and the extremal family
//! `B(n, k, r) = O_k ∨₁ (K₁ ∪ K_{n-r-1, r-k})`.
//!
//! The family is the edgeless graph `O_k` on the set `C`, joined to a lone
//! vertex `v` and to the `(n-r-1)`-side of `K_{n-r-1, r-k}`. Its vertices are
//! labelled by a fixed [`VertexLayout`]:
//!
//! | label(s)                    | role                  | degree    |
//! |-----------------------------|-----------------------|-----------|
//! | `0`                         | `v`                   | `k`       |
//! | `1 ..= k`                   | `c_1 .. c_k`          | `n - r`   |
//! | `k+1 ..= k+n-r-2`           | `a_1 .. a_{n-r-2}`    | `r`       |
//! | `k+n-r-1`                   | `a_{n-r-1}`           | `r`       |
//! | `k+n-r ..= n-1`             | `b_1 .. b_{r-k}`      | `n - r - 1` |

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::ParamError;
use crate::graph::Graph;

/// Which connectivity notion a class is defined by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Vertex,
    Edge,
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::Vertex, Mode::Edge];
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Vertex => "vertex",
            Mode::Edge => "edge",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex" => Ok(Mode::Vertex),
            "edge" => Ok(Mode::Edge),
            other => Err(format!("unknown mode `{other}` (expected vertex or edge)")),
        }
    }
}

/// `K_{p,q}` with the `p`-side on labels `0..p`. `K_{p,0}` is `p` isolated vertices.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, ParamError> {
    if p + q == 0 {
        return Err(ParamError::new("p + q >= 1"));
    }
    let mut g = Graph::empty(p + q).map_err(|e| ParamError::new(e.to_string()))?;
    for u in 0..p {
        for w in p..p + q {
            g.insert_edge(u, w).expect("fresh edge");
        }
    }
    Ok(g)
}

/// Parameters `(n, k, r)` of `B(n, k, r)`, validated `1 <= k <= r <= n - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    n: usize,
    k: usize,
    r: usize,
}

impl FamilyParams {
    pub fn new(n: usize, k: usize, r: usize) -> Result<Self, ParamError> {
        if k < 1 {
            return Err(ParamError::new(format!("k >= 1 (got k = {k})")));
        }
        if r < k {
            return Err(ParamError::new(format!("r >= k (got r = {r}, k = {k})")));
        }
        if r + 2 > n {
            return Err(ParamError::new(format!(
                "r <= n - 2 (got r = {r}, n = {n})"
            )));
        }
        if n > crate::graph::MAX_ORDER {
            return Err(ParamError::new(format!(
                "n <= {} (got n = {n})",
                crate::graph::MAX_ORDER
            )));
        }
        Ok(FamilyParams { n, k, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Size of the joined side of `K_{n-r-1, r-k}`, i.e. `|A| + 1`.
    pub fn joined_side(&self) -> usize {
        self.n - self.r - 1
    }

    /// Size of the far side `B`.
    pub fn far_side(&self) -> usize {
        self.r - self.k
    }

    pub fn layout(&self) -> VertexLayout {
        VertexLayout::new(*self)
    }

    /// Every valid parameter triple of order `n`.
    pub fn all_of_order(n: usize) -> impl Iterator<Item = FamilyParams> {
        (1..=n.saturating_sub(2))
            .flat_map(move |k| (k..=n.saturating_sub(2)).map(move |r| FamilyParams { n, k, r }))
    }
}

impl std::fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "O_{} v1 (K_1 u K_{{{},{}}}) [n={}, k={}, r={}]",
            self.k,
            self.joined_side(),
            self.far_side(),
            self.n,
            self.k,
            self.r
        )
    }
}

/// Fixed labelling of the roles in `B(n, k, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLayout {
    pub v: usize,
    pub c: Range<usize>,
    /// `a_1 .. a_{n-r-2}`
    pub a: Range<usize>,
    /// `a_{n-r-1}`
    pub a_last: usize,
    pub b: Range<usize>,
}

impl VertexLayout {
    fn new(p: FamilyParams) -> Self {
        let c = 1..1 + p.k;
        let a = c.end..c.end + p.n - p.r - 2;
        let a_last = a.end;
        let b = a_last + 1..p.n;
        VertexLayout {
            v: 0,
            c,
            a,
            a_last,
            b,
        }
    }

    /// `a_1 .. a_{n-r-1}` including the last one.
    pub fn a_all(&self) -> Range<usize> {
        self.a.start..self.a_last + 1
    }

    /// The bipartition `(C ∪ B, {v} ∪ A ∪ {a_{n-r-1}})` as sorted label lists.
    pub fn parts(&self) -> (Vec<usize>, Vec<usize>) {
        let x = self.c.clone().chain(self.b.clone()).collect();
        let y = std::iter::once(self.v).chain(self.a_all()).collect();
        (x, y)
    }
}

/// Builds `B(n, k, r)` with the [`VertexLayout`] labelling.
pub fn build_family(p: FamilyParams) -> Graph {
    let l = p.layout();
    let mut g = Graph::empty(p.n).expect("order validated");
    for c in l.c.clone() {
        g.insert_edge(l.v, c).expect("fresh edge");
        for a in l.a_all() {
            g.insert_edge(c, a).expect("fresh edge");
        }
    }
    for a in l.a_all() {
        for b in l.b.clone() {
            g.insert_edge(a, b).expect("fresh edge");
        }
    }
    g
}

/// `M1(B(n, k, r))` read off the degree profile.
pub fn family_m1(p: FamilyParams) -> u64 {
    let (n, k, r) = (p.n as u64, p.k as u64, p.r as u64);
    k * k + k * (n - r).pow(2) + (n - r - 1) * r * r + (r - k) * (n - r - 1).pow(2)
}

/// `M2(B(n, k, r))`: the `v–C`, `C–A` and `A–B` edge blocks.
pub fn family_m2(p: FamilyParams) -> u64 {
    let (n, k, r) = (p.n as u64, p.k as u64, p.r as u64);
    k * k * (n - r) + k * r * (n - r) * (n - r - 1) + r * (r - k) * (n - r - 1).pow(2)
}

/// What the maximality theorems predict for order `n` and connectivity `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    /// `K_{n/2, n/2}` (even `n`, `c = n/2`).
    Balanced {
        half: usize,
    },
    Family(FamilyParams),
}

impl Prediction {
    pub fn graph(&self) -> Graph {
        match *self {
            Prediction::Balanced { half } => complete_bipartite(half, half).expect("half >= 3"),
            Prediction::Family(p) => build_family(p),
        }
    }

    pub fn value(&self, index: crate::graph::Index) -> u64 {
        use crate::graph::Index;
        match (*self, index) {
            (Prediction::Balanced { half }, Index::M1) => 2 * (half as u64).pow(3),
            (Prediction::Balanced { half }, Index::M2) => (half as u64).pow(4),
            (Prediction::Family(p), Index::M1) => family_m1(p),
            (Prediction::Family(p), Index::M2) => family_m2(p),
        }
    }
}

impl std::fmt::Display for Prediction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Prediction::Balanced { half } => write!(f, "K_{{{half},{half}}}"),
            Prediction::Family(p) => p.fmt(f),
        }
    }
}

/// The predicted maximiser of M1 and M2 among bipartite graphs of order `n`
/// with connectivity (or edge connectivity) exactly `c`. The rule is the same
/// for both modes.
pub fn predict(n: usize, c: usize, _mode: Mode) -> Result<Prediction, ParamError> {
    if n < 6 {
        return Err(ParamError::new(format!("n >= 6 (got n = {n})")));
    }
    if c < 1 {
        return Err(ParamError::new("c >= 1"));
    }
    if c > n / 2 {
        return Err(ParamError::new(format!(
            "c <= floor(n/2) = {} (got c = {c})",
            n / 2
        )));
    }
    if n.is_multiple_of(2) && c == n / 2 {
        return Ok(Prediction::Balanced { half: n / 2 });
    }
    // joined side (n-1)/2 for odd n, n/2 for even n
    let r = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    FamilyParams::new(n, c, r).map(Prediction::Family)
}

/// Graph form of [`predict`].
pub fn predicted_extremal(n: usize, c: usize, mode: Mode) -> Result<Graph, ParamError> {
    predict(n, c, mode).map(|p| p.graph())
}
