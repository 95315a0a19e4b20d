//! Runs [`search_max`] over a grid of orders, modes, connectivity values and indices.

use crate::constructions::Mode;
use crate::error::ParamError;
use crate::exec::Strategy;
use crate::graph::Index;
use crate::oracle::{search_max, SearchReport, SearchSpec};

pub const MIN_VERIFY_ORDER: usize = 6;
pub const MAX_VERIFY_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyGrid {
    pub n_min: usize,
    pub n_max: usize,
    pub modes: Vec<Mode>,
    pub indices: Vec<Index>,
}

impl VerifyGrid {
    pub fn new(
        n_min: usize,
        n_max: usize,
        modes: Vec<Mode>,
        indices: Vec<Index>,
    ) -> Result<Self, ParamError> {
        if n_min < MIN_VERIFY_ORDER || n_max > MAX_VERIFY_ORDER || n_min > n_max {
            return Err(ParamError::new(format!(
                "{MIN_VERIFY_ORDER} <= n_min <= n_max <= {MAX_VERIFY_ORDER} (got {n_min}..={n_max})"
            )));
        }
        if modes.is_empty() || indices.is_empty() {
            return Err(ParamError::new("at least one mode and one index"));
        }
        Ok(VerifyGrid {
            n_min,
            n_max,
            modes,
            indices,
        })
    }

    /// Cells in `(n, mode, c, index)` order, with `1 <= c <= floor(n/2)`.
    pub fn cells(&self) -> Vec<SearchSpec> {
        let mut modes = self.modes.clone();
        modes.sort();
        modes.dedup();
        let mut indices = self.indices.clone();
        indices.sort();
        indices.dedup();
        let mut out = Vec::new();
        for n in self.n_min..=self.n_max {
            for &mode in &modes {
                for c in 1..=n / 2 {
                    for &index in &indices {
                        out.push(SearchSpec { n, mode, c, index });
                    }
                }
            }
        }
        out
    }

    pub fn run(&self, strategy: Strategy) -> Vec<SearchReport> {
        self.cells()
            .into_iter()
            .map(|spec| search_max(spec, strategy))
            .collect()
    }
}

/// True when every non-empty cell matches its prediction.
pub fn all_match(reports: &[SearchReport]) -> bool {
    reports.iter().all(|r| r.is_empty_class() || r.matches)
}
