//! Graph rewrites that raise the Zagreb indices. Every rewrite returns a new
//! graph and leaves its input untouched, so callers can compare both sides.

use crate::constructions::{build_family, FamilyParams};
use crate::error::{ParamError, TransformError};
use crate::graph::Graph;

/// `G + uv` for a non-adjacent pair.
pub fn add_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, TransformError> {
    let mut h = g.clone();
    h.insert_edge(u, v)?;
    Ok(h)
}

/// Moves the edges `v–w` (`w` in `moved`) over to `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSpec {
    pub u: usize,
    pub v: usize,
    pub moved: Vec<usize>,
}

impl ShiftSpec {
    pub fn new(u: usize, v: usize, moved: impl IntoIterator<Item = usize>) -> Self {
        let mut moved: Vec<usize> = moved.into_iter().collect();
        moved.sort_unstable();
        ShiftSpec { u, v, moved }
    }

    /// Checks the spec against `g`, naming the first clause that fails.
    pub fn validate(&self, g: &Graph) -> Result<(), TransformError> {
        let n = g.order();
        if self.u >= n || self.v >= n || self.moved.iter().any(|&w| w >= n) {
            return Err(TransformError::Shift("vertices in range"));
        }
        if self.u == self.v {
            return Err(TransformError::Shift("u != v"));
        }
        if g.has_edge(self.u, self.v) {
            return Err(TransformError::Shift("u not adjacent to v"));
        }
        if self.moved.is_empty() {
            return Err(TransformError::Shift("moved nonempty"));
        }
        if self.moved.windows(2).any(|w| w[0] == w[1]) {
            return Err(TransformError::Shift("moved has no repeats"));
        }
        if self.moved.iter().any(|&w| !g.has_edge(self.v, w)) {
            return Err(TransformError::Shift("moved within N(v)"));
        }
        if self.moved.iter().any(|&w| g.has_edge(self.u, w)) {
            return Err(TransformError::Shift("moved disjoint from N(u)"));
        }
        if self.moved.contains(&self.u) {
            return Err(TransformError::Shift("u not in moved"));
        }
        Ok(())
    }
}

/// `G* = G - {v w : w ∈ moved} + {u w : w ∈ moved}`.
///
/// M1 strictly increases whenever `d(u) >= d(v)`. M2 does not follow from the
/// degree condition alone: it changes by
/// `s·(Σ_{N(u)} d - Σ_{N(v)∖moved} d) + (d(u) - d(v) + s)·Σ_{moved} d`
/// (degrees in `G`, `s = |moved|`), which is negative when `v` keeps
/// high-degree neighbours while `u`'s neighbours have low degree. See
/// [`shift_m2_delta`].
pub fn shift_neighbors(g: &Graph, spec: &ShiftSpec) -> Result<Graph, TransformError> {
    spec.validate(g)?;
    let mut h = g.clone();
    for &w in &spec.moved {
        h.remove_edge(spec.v, w)?;
        h.insert_edge(spec.u, w)?;
    }
    Ok(h)
}

/// Closed form of `M2(G*) - M2(G)` for a valid shift, from degrees in `G`.
pub fn shift_m2_delta(g: &Graph, spec: &ShiftSpec) -> i64 {
    let d = |x: usize| g.degree(x) as i64;
    let s = spec.moved.len() as i64;
    let kept: i64 = g
        .neighbors(spec.v)
        .filter(|w| !spec.moved.contains(w))
        .map(d)
        .sum();
    let at_u: i64 = g.neighbors(spec.u).map(d).sum();
    let moved: i64 = spec.moved.iter().map(|&w| d(w)).sum();
    s * (at_u - kept) + (d(spec.u) - d(spec.v) + s) * moved
}

/// Detaches `a_{n-r-1}` from `C ∪ B` and joins it to `a_1 .. a_{n-r-2}`.
///
/// Requires `n >= 6`, `2k <= n - 2` and `2r <= n - 4`.
pub fn case1_rewire(p: FamilyParams) -> Result<Graph, TransformError> {
    let (n, k, r) = (p.n(), p.k(), p.r());
    if n < 6 {
        return Err(ParamError::new(format!("n >= 6 (got n = {n})")).into());
    }
    if 2 * k + 2 > n {
        return Err(ParamError::new(format!("k <= n/2 - 1 (got k = {k}, n = {n})")).into());
    }
    if 2 * r + 4 > n {
        return Err(ParamError::new(format!("r <= n/2 - 2 (got r = {r}, n = {n})")).into());
    }
    let l = p.layout();
    let mut g = build_family(p);
    for x in l.c.clone().chain(l.b.clone()) {
        g.remove_edge(l.a_last, x)?;
    }
    for a in l.a.clone() {
        g.insert_edge(l.a_last, a)?;
    }
    Ok(g)
}

/// Moves `v` from `C` onto `a_1 .. a_k`.
///
/// Requires `n >= 6`, `2r > n` and `n - r - 1 >= k`.
pub fn case2_rewire(p: FamilyParams) -> Result<Graph, TransformError> {
    let (n, k, r) = (p.n(), p.k(), p.r());
    if n < 6 {
        return Err(ParamError::new(format!("n >= 6 (got n = {n})")).into());
    }
    if 2 * r <= n {
        return Err(ParamError::new(format!("r > n/2 (got r = {r}, n = {n})")).into());
    }
    if p.joined_side() < k {
        return Err(
            ParamError::new(format!("n - r - 1 >= k (got {} < {k})", p.joined_side())).into(),
        );
    }
    let l = p.layout();
    let mut g = build_family(p);
    for c in l.c.clone() {
        g.remove_edge(l.v, c)?;
    }
    for a in l.a_all().take(k) {
        g.insert_edge(l.v, a)?;
    }
    Ok(g)
}
