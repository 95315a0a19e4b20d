//! Exhaustive search over small bipartite graphs.
//!
//! [`search_max`] sweeps every bipartite graph of a given order, keeps those
//! whose vertex or edge connectivity equals the requested value, and records
//! the largest Zagreb index together with every maximiser up to isomorphism.
//! The result is compared against [`crate::constructions::predict`].

mod canon;
mod structure;

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use canon::{canonical_form, canonical_labeling, MAX_CANON_ORDER};
pub use structure::{cut_component_profile, has_straddling_min_cut, minimum_vertex_cuts};

use crate::connectivity::{edge_connectivity_capped, vertex_connectivity_capped};
use crate::constructions::{predict, Mode, Prediction};
use crate::error::OracleError;
use crate::exec::{map_reduce, Strategy};
use crate::graph::{min_degree, Graph, Index};
use crate::io::encode_graph6;

/// Largest order a full sweep accepts.
pub const MAX_SEARCH_ORDER: usize = 10;

const CHUNK_BITS: u32 = 12;

/// One class `V^c_n` (vertex mode) or `E^c_n` (edge mode) plus the index to maximise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SearchSpec {
    pub n: usize,
    pub mode: Mode,
    pub c: usize,
    pub index: Index,
}

impl SearchSpec {
    pub fn new(n: usize, mode: Mode, c: usize, index: Index) -> Result<Self, OracleError> {
        if !(2..=MAX_SEARCH_ORDER).contains(&n) {
            return Err(OracleError::TooLarge {
                n,
                max: MAX_SEARCH_ORDER,
            });
        }
        if c < 1 {
            return Err(OracleError::ZeroConnectivity);
        }
        Ok(SearchSpec { n, mode, c, index })
    }
}

/// Whether `g` has vertex (or edge) connectivity exactly `c`.
pub fn has_connectivity(g: &Graph, mode: Mode, c: usize) -> bool {
    if min_degree(g) < c {
        return false;
    }
    match mode {
        Mode::Vertex => vertex_connectivity_capped(g, c + 1) == c,
        Mode::Edge => edge_connectivity_capped(g, c + 1) == c,
    }
}

/// The bipartite graph with parts `0..p` and `p..n` whose cross edges are
/// given by `mask`: bit `i * (n - p) + j` joins `i` and `p + j`.
pub fn graph_from_mask(n: usize, p: usize, mask: u64) -> Graph {
    let q = n - p;
    let row = (1u64 << q) - 1;
    let mut adj = vec![0u64; n];
    for i in 0..p {
        let r = (mask >> (i * q)) & row;
        adj[i] = r << p;
        let mut rest = r;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            adj[p + j] |= 1 << i;
            rest &= rest - 1;
        }
    }
    Graph::from_masks_unchecked(adj)
}

/// `(p, masks)` blocks covering every cross-adjacency pattern for `1 <= p <= n/2`.
fn sweep_blocks(n: usize) -> Vec<(usize, std::ops::Range<u64>)> {
    let mut blocks = Vec::new();
    for p in 1..=n / 2 {
        let bits = (p * (n - p)) as u32;
        let total = 1u64 << bits;
        let step = 1u64 << CHUNK_BITS.min(bits);
        let mut start = 0;
        while start < total {
            blocks.push((p, start..(start + step).min(total)));
            start += step;
        }
    }
    blocks
}

/// Every bipartite graph of order `spec.n` (with a bipartition `0..p`,
/// `p..n`) whose connectivity equals `spec.c`. Isomorphic copies repeat.
pub fn enumerate_class(spec: SearchSpec) -> impl Iterator<Item = Graph> {
    let n = spec.n;
    sweep_blocks(n)
        .into_iter()
        .flat_map(move |(p, masks)| masks.map(move |m| graph_from_mask(n, p, m)))
        .filter(move |g| has_connectivity(g, spec.mode, spec.c))
}

#[derive(Debug, Default)]
struct Partial {
    best: Option<u64>,
    forms: BTreeSet<Vec<u8>>,
    swept: u64,
}

impl Partial {
    fn offer(&mut self, value: u64, g: &Graph) {
        match self.best {
            Some(b) if value < b => return,
            Some(b) if value == b => {}
            _ => {
                self.best = Some(value);
                self.forms.clear();
            }
        }
        self.forms
            .insert(canonical_form(g).expect("search order within canonical limit"));
    }

    fn merge(mut self, mut other: Partial) -> Partial {
        let swept = self.swept + other.swept;
        let mut out = match self.best.cmp(&other.best) {
            std::cmp::Ordering::Less => other,
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Equal => {
                self.forms.append(&mut other.forms);
                self
            }
        };
        out.swept = swept;
        out
    }
}

/// Result of one exhaustive maximisation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub spec: SearchSpec,
    /// `None` when the class is empty.
    pub max_value: Option<u64>,
    /// Canonical graph6 strings, one per isomorphism class attaining the maximum.
    pub maximizers: Vec<String>,
    pub predicted_graph: Option<String>,
    pub predicted_value: Option<u64>,
    pub matches: bool,
    /// Candidate graphs swept (labelled, before the connectivity filter).
    pub graphs_enumerated: u64,
    /// Wall-clock seconds.
    pub elapsed: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SearchReport {
    pub fn is_empty_class(&self) -> bool {
        self.max_value.is_none()
    }
}

/// Sweeps the class described by `spec` and maximises its index.
pub fn search_max(spec: SearchSpec, strategy: Strategy) -> SearchReport {
    let started = Instant::now();
    let partial = sweep(spec, strategy, |g| has_connectivity(g, spec.mode, spec.c));
    let prediction = predict(spec.n, spec.c, spec.mode).ok();
    report(spec, partial, prediction, started)
}

/// Like [`search_max`], over the union of the classes `c..=n/2`: graphs whose
/// connectivity is at least `spec.c`. The prediction is the best of the
/// per-class predictions.
pub fn search_max_at_least(spec: SearchSpec, strategy: Strategy) -> SearchReport {
    let started = Instant::now();
    let cap = spec.n / 2;
    let partial = sweep(spec, strategy, |g| {
        (spec.c..=cap).any(|c| has_connectivity(g, spec.mode, c))
    });
    let prediction = (spec.c..=cap)
        .filter_map(|c| predict(spec.n, c, spec.mode).ok())
        .max_by_key(|p| p.value(spec.index));
    let mut out = report(spec, partial, prediction, started);
    let union = format!("union of classes c = {}..={cap}", spec.c);
    out.note = Some(match out.note {
        Some(n) => format!("{union}; {n}"),
        None => union,
    });
    out
}

fn sweep(
    spec: SearchSpec,
    strategy: Strategy,
    accept: impl Fn(&Graph) -> bool + Sync + Send,
) -> Partial {
    let n = spec.n;
    map_reduce(
        strategy,
        sweep_blocks(n),
        Partial::default,
        |(p, masks)| {
            let mut acc = Partial::default();
            for mask in masks {
                acc.swept += 1;
                let g = graph_from_mask(n, p, mask);
                let value = spec.index.evaluate(&g);
                if acc.best.is_some_and(|b| value < b) {
                    continue;
                }
                if accept(&g) {
                    acc.offer(value, &g);
                }
            }
            acc
        },
        Partial::merge,
    )
}

fn report(
    spec: SearchSpec,
    partial: Partial,
    prediction: Option<Prediction>,
    started: Instant,
) -> SearchReport {
    let maximizers: Vec<String> = partial
        .forms
        .iter()
        .map(|f| String::from_utf8(f.clone()).expect("graph6 is ASCII"))
        .collect();

    let predicted = prediction.map(|p| p.graph());
    let predicted_value = prediction.map(|p| p.value(spec.index));
    let predicted_form = predicted
        .as_ref()
        .map(|g| canonical_form(g).expect("n <= 10"));

    let matches = match (partial.best, predicted_value, &predicted_form) {
        (Some(max), Some(pv), Some(form)) => max == pv && partial.forms.contains(form),
        _ => false,
    };

    let note = if partial.best.is_none() {
        Some("empty class: no bipartite graph of this order has the requested connectivity".into())
    } else if prediction.is_none() {
        Some("no prediction for this order".into())
    } else if maximizers.len() > 1 {
        Some(format!("{} non-isomorphic maximizers", maximizers.len()))
    } else {
        None
    };

    SearchReport {
        spec,
        max_value: partial.best,
        maximizers,
        predicted_graph: predicted.as_ref().map(encode_graph6),
        predicted_value,
        matches,
        graphs_enumerated: partial.swept,
        elapsed: started.elapsed().as_secs_f64(),
        note,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_layout() {
        // n = 4, p = 2: bits (0,2) (0,3) (1,2) (1,3)
        let g = graph_from_mask(4, 2, 0b1001);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(graph_from_mask(4, 2, 0b1111).size(), 4);
    }

    #[test]
    fn order_four_two_connected() {
        let spec = SearchSpec::new(4, Mode::Vertex, 2, Index::M1).unwrap();
        let all: Vec<Graph> = enumerate_class(spec).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(
            all[0],
            crate::constructions::complete_bipartite(2, 2).unwrap()
        );
    }

    #[test]
    fn order_three_two_connected_is_empty() {
        let spec = SearchSpec::new(3, Mode::Vertex, 2, Index::M1).unwrap();
        assert_eq!(enumerate_class(spec).count(), 0);
        let report = search_max(spec, Strategy::Sequential);
        assert!(report.is_empty_class());
        assert!(!report.matches);
        assert!(report.note.is_some());
    }

    #[test]
    fn sweep_counts() {
        let total: u64 = sweep_blocks(6).iter().map(|(_, r)| r.end - r.start).sum();
        assert_eq!(total, (1 << 5) + (1 << 8) + (1 << 9));
    }

    #[test]
    fn spec_limits() {
        assert!(SearchSpec::new(11, Mode::Vertex, 1, Index::M1).is_err());
        assert!(SearchSpec::new(6, Mode::Vertex, 0, Index::M1).is_err());
    }
}
