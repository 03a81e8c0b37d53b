//! Classical limits of the q-families.
//!
//! Each pair names a q-family and the integer or rational family it becomes
//! at `q = 1`. Coherence means the specialized matrix equals the classical
//! matrix entry by entry, so the two determinants agree as well.

use super::families::build_matrix;
use super::{Grid, Params, SuiteError};
use crate::value::Value;

pub struct CoherencePair {
    pub q_family: &'static str,
    pub classical_family: &'static str,
    /// How the classical parameters are obtained from the q ones.
    pub note: &'static str,
    translate: fn(&Params) -> Params,
    grid: &'static [(&'static str, i64, i64)],
}

impl std::fmt::Debug for CoherencePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoherencePair")
            .field("q_family", &self.q_family)
            .field("classical_family", &self.classical_family)
            .finish()
    }
}

/// Outcome of one coherence comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coherence {
    pub entries_agree: bool,
    pub q_det_at_one: Value,
    pub classical_det: Value,
}

impl Coherence {
    pub fn holds(&self) -> bool {
        self.entries_agree && self.q_det_at_one == self.classical_det
    }
}

fn same(p: &Params) -> Params {
    p.clone()
}

fn drop_k(p: &Params) -> Params {
    Params::new().with("n", p.get("n").unwrap_or(0))
}

fn gfun_limit(p: &Params) -> Params {
    p.clone().with("k", 1)
}

fn negated_m(p: &Params) -> Params {
    Params::new().with("n", p.get("n").unwrap_or(0)).with("x", -p.get("m").unwrap_or(0))
}

const N_K: &[(&str, i64, i64)] = &[("n", 0, 7), ("k", 1, 4)];
const N_ONLY: &[(&str, i64, i64)] = &[("n", 0, 8)];
const N_M_K: &[(&str, i64, i64)] = &[("n", 0, 5), ("m", 0, 3), ("k", 0, 3)];
const N_M_X: &[(&str, i64, i64)] = &[("n", 0, 4), ("m", 0, 3), ("x", 1, 4)];
const N_M: &[(&str, i64, i64)] = &[("n", 1, 5), ("m", 1, 9)];

static PAIRS: &[CoherencePair] = &[
    CoherencePair { q_family: "eq7", classical_family: "eq54", note: "same n, k", translate: same, grid: N_K },
    CoherencePair { q_family: "eq86b", classical_family: "eq54", note: "same n, k", translate: same, grid: N_K },
    CoherencePair { q_family: "eq83", classical_family: "eq1", note: "same n", translate: same, grid: N_ONLY },
    CoherencePair { q_family: "eq84", classical_family: "eq1", note: "same n", translate: same, grid: N_ONLY },
    CoherencePair { q_family: "eq77", classical_family: "eq1", note: "same n", translate: same, grid: N_ONLY },
    CoherencePair { q_family: "eq78", classical_family: "eq1", note: "same n", translate: same, grid: N_ONLY },
    CoherencePair { q_family: "eq91", classical_family: "eq74", note: "same n, m, k", translate: same, grid: N_M_K },
    CoherencePair { q_family: "eq91c", classical_family: "eq74c", note: "same n, m, k", translate: same, grid: N_M_K },
    CoherencePair { q_family: "eq92", classical_family: "eq45", note: "same n, k", translate: same, grid: N_K },
    CoherencePair { q_family: "eq27", classical_family: "eq27c", note: "same n, k", translate: same, grid: N_K },
    CoherencePair { q_family: "eq88", classical_family: "eq34", note: "same n", translate: same, grid: N_ONLY },
    CoherencePair { q_family: "eq8", classical_family: "eq55", note: "same n, k", translate: same, grid: N_K },
    CoherencePair { q_family: "eq81", classical_family: "eq61", note: "same n, r; k = 1", translate: gfun_limit, grid: &[("n", 0, 6), ("r", 1, 4)] },
    CoherencePair { q_family: "eq96b", classical_family: "eq10", note: "same n, m, x", translate: same, grid: N_M_X },
    CoherencePair { q_family: "eq96h", classical_family: "eq10h", note: "same n, m, x", translate: same, grid: N_M_X },
    CoherencePair { q_family: "thm15a", classical_family: "eq35", note: "same n; x = -m", translate: negated_m, grid: N_M },
    CoherencePair { q_family: "thm15b", classical_family: "eq45x", note: "same n; x = -m", translate: negated_m, grid: N_M },
    CoherencePair { q_family: "eq83", classical_family: "eq54", note: "same n; k = 1", translate: |p| drop_k(p).with("k", 1), grid: N_ONLY },
];

pub fn pairs() -> &'static [CoherencePair] {
    PAIRS
}

impl CoherencePair {
    /// The comparison grid.
    pub fn grid(&self) -> Grid {
        self.grid.iter().fold(Grid::new(), |g, (name, lo, hi)| g.range(name, *lo, *hi))
    }

    /// Specializes the q-matrix at `q = 1` and compares it with the classical
    /// matrix at the translated parameters.
    pub fn compare(&self, params: &Params) -> Result<Coherence, SuiteError> {
        let at_one = build_matrix(self.q_family, params)?
            .specialize(1)
            .map_err(|e| SuiteError::OutOfDomain {
                id: self.q_family.to_string(),
                params: params.to_string(),
                reason: e.to_string(),
            })?;
        let classical = build_matrix(self.classical_family, &(self.translate)(params))?;
        let det_error = |id: &str, e: crate::linalg::LinalgError| SuiteError::OutOfDomain {
            id: id.to_string(),
            params: params.to_string(),
            reason: e.to_string(),
        };
        Ok(Coherence {
            entries_agree: at_one.to_value().normalize() == classical.to_value().normalize(),
            q_det_at_one: at_one.det().map_err(|e| det_error(self.q_family, e))?,
            classical_det: classical.det().map_err(|e| det_error(self.classical_family, e))?,
        })
    }

    /// Runs [`compare`](Self::compare) on the whole grid and returns the
    /// parameter points where coherence fails.
    pub fn failures(&self) -> Result<Vec<Params>, SuiteError> {
        let mut bad = Vec::new();
        for p in self.grid().points() {
            if !self.compare(&p)?.holds() {
                bad.push(p);
            }
        }
        Ok(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_pair_is_coherent_on_its_grid() {
        for pair in pairs() {
            let bad = pair.failures().unwrap();
            assert!(bad.is_empty(), "{} vs {}: {:?}", pair.q_family, pair.classical_family, bad);
        }
    }

    #[test]
    fn pairs_reference_registered_families() {
        for pair in pairs() {
            assert!(super::super::family(pair.q_family).is_ok());
            assert!(super::super::family(pair.classical_family).is_ok());
        }
    }
}
