//! Canonical labelling for graphs of up to 16 vertices.
//!
//! Ordered-partition refinement (counting neighbours in each splitter cell)
//! followed by individualisation of the first non-singleton cell, exploring
//! every branch. Twins inside a cell (`N(u) ∖ {w} = N(w) ∖ {u}`) are swapped by
//! an automorphism that fixes the current partition, so only one twin per
//! class is branched on. The leaf with the largest adjacency code wins.

use crate::error::OracleError;
use crate::graph::Graph;
use crate::io::encode_graph6;

pub const MAX_CANON_ORDER: usize = 16;

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbor_mask(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                if keyed[0].0 == keyed[keyed.len() - 1].0 {
                    next.push(cell);
                    continue;
                }
                changed = true;
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            cells = next;
            si += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn leaf_code(g: &Graph, cells: &Cells) -> (u128, Vec<usize>) {
    let n = g.order();
    let mut perm = vec![0; n];
    for (pos, cell) in cells.iter().enumerate() {
        perm[cell[0]] = pos;
    }
    let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u128;
        }
    }
    (code, perm)
}

fn are_twins(g: &Graph, u: usize, w: usize) -> bool {
    let strip = !((1u64 << u) | (1u64 << w));
    g.neighbor_mask(u) & strip == g.neighbor_mask(w) & strip
}

fn search(g: &Graph, cells: Cells, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let (code, perm) = leaf_code(g, &cells);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, perm));
        }
        return;
    };
    let mut reps: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if reps.iter().any(|&r| are_twins(g, r, v)) {
            continue;
        }
        reps.push(v);
        let mut child = cells.clone();
        let rest: Vec<usize> = child[target].iter().copied().filter(|&x| x != v).collect();
        child[target] = vec![v];
        child.insert(target + 1, rest);
        search(g, refine(g, child), best);
    }
}

/// A permutation `perm` (vertex `u` goes to `perm[u]`) taking `g` to its
/// canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, OracleError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_CANON_ORDER,
        });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut best = None;
    search(g, refine(g, vec![(0..n).collect()]), &mut best);
    Ok(best.expect("at least one leaf").1)
}

/// graph6 bytes of the canonical representative: equal for two graphs
/// exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, OracleError> {
    let perm = canonical_labeling(g)?;
    Ok(encode_graph6(&g.relabel(&perm)).into_bytes())
}
