//! Structural predicates on minimum vertex cuts, by direct subset enumeration.
//! Intended for desk-scale graphs only.

use crate::connectivity::vertex_connectivity_value;
use crate::error::OracleError;
use crate::graph::{bits, Bipartition, Graph};

/// Successive `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let candidate = if r == 0 {
                None
            } else {
                Some((((r ^ cur) >> 2) / c) | r)
            };
            candidate.filter(|&m| m & !limit == 0)
        };
        Some(cur)
    })
}

/// Every vertex cut of size κ(g). Empty for complete and disconnected graphs.
pub fn minimum_vertex_cuts(g: &Graph) -> Vec<Vec<usize>> {
    if g.order() <= 1 || g.is_complete() || !g.is_connected() {
        return vec![];
    }
    let kappa = vertex_connectivity_value(g);
    let all = g.vertex_mask();
    subsets_of_size(g.order(), kappa)
        .filter(|&s| !g.is_connected_within(all & !s))
        .map(|s| bits(s).collect())
        .collect()
}

/// Whether some minimum vertex cut meets both parts of `b`.
pub fn has_straddling_min_cut(g: &Graph, b: &Bipartition) -> bool {
    let (xm, ym) = (b.x_mask(), b.y_mask());
    minimum_vertex_cuts(g).iter().any(|cut| {
        let m = cut.iter().fold(0u64, |m, &v| m | 1 << v);
        m & xm != 0 && m & ym != 0
    })
}

/// Sorted orders of the components of `g - s`. Errors unless `s` disconnects `g`.
pub fn cut_component_profile(g: &Graph, s: &[usize]) -> Result<Vec<usize>, OracleError> {
    let mut removed = 0u64;
    for &v in s {
        if v >= g.order() {
            return Err(crate::error::GraphError::VertexOutOfRange {
                vertex: v,
                n: g.order(),
            }
            .into());
        }
        removed |= 1 << v;
    }
    let comps = g.components_within(g.vertex_mask() & !removed);
    if comps.len() < 2 {
        return Err(OracleError::NotACut);
    }
    let mut sizes: Vec<usize> = comps.iter().map(|c| c.count_ones() as usize).collect();
    sizes.sort_unstable();
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_family, complete_bipartite, FamilyParams};
    use crate::graph::bipartition_of;

    #[test]
    fn gosper_counts() {
        assert_eq!(subsets_of_size(6, 2).count(), 15);
        assert_eq!(subsets_of_size(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(4, 4).collect::<Vec<_>>(), vec![0b1111]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(64, 1).count(), 64);
    }

    #[test]
    fn straddling_examples() {
        let b62 = build_family(FamilyParams::new(6, 1, 2).unwrap());
        let parts = bipartition_of(&b62).unwrap();
        assert!(!has_straddling_min_cut(&b62, &parts));

        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(has_straddling_min_cut(&c6, &bipartition_of(&c6).unwrap()));

        let k23 = complete_bipartite(2, 3).unwrap();
        assert!(!has_straddling_min_cut(
            &k23,
            &bipartition_of(&k23).unwrap()
        ));
        assert_eq!(minimum_vertex_cuts(&k23), vec![vec![0, 1]]);
    }

    #[test]
    fn profiles() {
        let p = FamilyParams::new(7, 1, 3).unwrap();
        let g = build_family(p);
        let c: Vec<usize> = p.layout().c.collect();
        assert_eq!(cut_component_profile(&g, &c).unwrap(), vec![1, 5]);

        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(cut_component_profile(&k23, &[0, 1]).unwrap(), vec![1, 1, 1]);

        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(cut_component_profile(&p4, &[1]).unwrap(), vec![1, 2]);
        assert_eq!(cut_component_profile(&p4, &[0]), Err(OracleError::NotACut));
    }
}
