//! Graded local cohomology `H^j_{R_+}(M)` via local duality, partial
//! regularity, depth.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::functors::ext_with;
use super::resolution::free_resolution;
use crate::algebra::{FreeModule, Presentation};
use crate::degree::{ExtInt, NEG_INFINITY};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_series, HilbertSeries};

/// A subset of `{0, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IndexSet {
    n: usize,
    indices: BTreeSet<usize>,
}

impl IndexSet {
    /// Indices above `n` are dropped.
    pub fn new(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        IndexSet { n, indices: indices.into_iter().filter(|&i| i <= n).collect() }
    }

    pub fn full(n: usize) -> Self {
        Self::new(n, 0..=n)
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, [])
    }

    /// `{i, i+1, ..., n}`.
    pub fn from(n: usize, start: usize) -> Self {
        Self::new(n, start..=n)
    }

    pub fn bound(&self) -> usize {
        self.n
    }

    /// `X + a = {i + a : i ∈ X} ∩ {0, ..., n}`.
    pub fn shift(&self, a: i64) -> Self {
        let n = self.n as i64;
        IndexSet {
            n: self.n,
            indices: self
                .indices
                .iter()
                .map(|&i| i as i64 + a)
                .filter(|&j| (0..=n).contains(&j))
                .map(|j| j as usize)
                .collect(),
        }
    }

    pub fn union(&self, other: &IndexSet) -> Self {
        IndexSet { n: self.n.max(other.n), indices: self.indices.union(&other.indices).copied().collect() }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.indices.first().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }
}

impl std::fmt::Display for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Top degrees and graded dimensions of `H^j_{R_+}(M)`, `0 ≤ j ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCohomologyProfile {
    /// `top_degree[j] = max { i : H^j(M)_i ≠ 0 }`, `-inf` when `H^j(M) = 0`.
    pub top_degree: Vec<ExtInt>,
    /// `dim_K H^j(M)_i` for `i` in the default window `[α-6, α+4]`.
    pub dims: BTreeMap<(usize, i64), u64>,
    duals: Vec<HilbertSeries>,
}

impl LocalCohomologyProfile {
    /// `dim_K H^j(M)_i` for any `i`.
    pub fn dim(&self, j: usize, i: i64) -> u64 {
        self.duals.get(j).map_or(0, |s| s.value(-i))
    }

    /// `max_j (top_degree[j] + j)`.
    pub fn regularity(&self) -> ExtInt {
        ExtInt::max_of(self.top_degree.iter().enumerate().map(|(j, &t)| t + j as i64))
    }

    /// `max_{j ∈ X} (top_degree[j] + j)`.
    pub fn partial_regularity(&self, x: &IndexSet) -> ExtInt {
        ExtInt::max_of(x.iter().filter_map(|j| self.top_degree.get(j).map(|&t| t + j as i64)))
    }

    /// `Σ_j (-1)^j dim H^j(M)_i`.
    pub fn euler_characteristic(&self, i: i64) -> i64 {
        (0..self.top_degree.len()).map(|j| if j % 2 == 0 { 1 } else { -1 } * self.dim(j, i) as i64).sum()
    }
}

/// By local duality, `H^j(M)_i ≅ Hom_K(Ext^{n-j}(M, R(-n))_{-i}, K)`. The top
/// degree of `H^j` is minus the initial degree of that Ext module.
pub fn local_cohomology_profile(m: &Presentation) -> Result<LocalCohomologyProfile> {
    let ring = m.ring();
    let n = ring.num_vars();
    let canonical = Presentation::free(FreeModule::new(ring.clone(), vec![n as i64]));
    let res = free_resolution(m, true)?;
    let mut top_degree = Vec::with_capacity(n + 1);
    let mut duals = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let e = ext_with(&res, &canonical, n - j)?;
        let hs = hilbert_series(&e)?;
        top_degree.push(match hs.initial_degree() {
            Some(d) => ExtInt::Finite(-d),
            None => NEG_INFINITY,
        });
        duals.push(hs);
    }
    let mut profile = LocalCohomologyProfile { top_degree, dims: BTreeMap::new(), duals };
    if let ExtInt::Finite(alpha) = hilbert_series(m)?.postulation_number() {
        for j in 0..=n {
            for i in alpha - 6..=alpha + 4 {
                let d = profile.dim(j, i);
                if d != 0 {
                    profile.dims.insert((j, i), d);
                }
            }
        }
    }
    Ok(profile)
}

/// `reg^X(M) = max_{i ∈ X} (top_degree[i] + i)`; `-inf` for empty `X`.
pub fn partial_regularity(m: &Presentation, x: &IndexSet) -> Result<ExtInt> {
    if x.is_empty() {
        return Ok(NEG_INFINITY);
    }
    Ok(local_cohomology_profile(m)?.partial_regularity(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DepthInfo {
    pub depth: i64,
    pub dim: i64,
    pub cohen_macaulay: bool,
}

/// Depth by Auslander–Buchsbaum and the Cohen–Macaulay test `depth = dim`.
pub fn depth_and_cm_test(m: &Presentation) -> Result<DepthInfo> {
    let res = free_resolution(m, true)?;
    let Some(pd) = res.length() else {
        return Err(Error::ZeroModule);
    };
    let depth = m.ring().num_vars() as i64 - pd as i64;
    let dim = hilbert_series(m)?.dim();
    Ok(DepthInfo { depth, dim, cohen_macaulay: depth == dim })
}
