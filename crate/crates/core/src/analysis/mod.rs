//! Position distributions and the statistics compared against reference runs.

use alloc::vec::Vec;

use crate::engine::{merge_sorted, SpinorField};
use crate::error::{Result, WalkError};
use crate::grover::GroverField;
use crate::lattice::{LatticeSpec, Position};

pub mod symmetry;

/// Probabilities below this are written as exact zeros.
pub const CLAMP_THRESHOLD: f64 = 1e-15;

/// Sparse position → probability map, sorted by position, zeros dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    dim: usize,
    entries: Vec<(Position, f64)>,
}

/// Anything whose sites can be measured in the position basis.
pub trait ProbabilitySource {
    fn dim(&self) -> usize;
    fn site_probabilities(&self) -> Vec<(Position, f64)>;
}

impl ProbabilitySource for SpinorField {
    fn dim(&self) -> usize {
        SpinorField::dim(self)
    }

    fn site_probabilities(&self) -> Vec<(Position, f64)> {
        self.entries().iter().map(|(p, s)| (*p, s.norm_sqr())).collect()
    }
}

impl ProbabilitySource for GroverField {
    fn dim(&self) -> usize {
        2
    }

    fn site_probabilities(&self) -> Vec<(Position, f64)> {
        self.entries().iter().map(|(p, s)| (*p, s.norm_sqr())).collect()
    }
}

impl Distribution {
    /// Sorts, sums repeated positions, clamps and drops zeros.
    pub fn new(dim: usize, mut entries: Vec<(Position, f64)>) -> Result<Self> {
        if let Some((p, _)) = entries.iter().find(|(p, _)| p.dim() != dim) {
            return Err(WalkError::DimensionMismatch { expected: dim, found: p.dim() });
        }
        entries.sort_by_key(|e| e.0);
        let mut merged: Vec<(Position, f64)> = Vec::with_capacity(entries.len());
        for (p, v) in entries {
            match merged.last_mut() {
                Some((q, acc)) if *q == p => *acc += v,
                _ => merged.push((p, v)),
            }
        }
        merged.retain_mut(|(_, v)| {
            if *v < CLAMP_THRESHOLD {
                *v = 0.0;
            }
            *v != 0.0
        });
        Ok(Distribution { dim, entries: merged })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(Position, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.entries.iter().map(|(_, v)| v).sum()
    }

    /// Probability at `p`, zero off the support.
    pub fn get(&self, p: &Position) -> f64 {
        self.entries.binary_search_by(|(q, _)| q.cmp(p)).map_or(0.0, |i| self.entries[i].1)
    }

    pub fn mean(&self, axis: usize) -> Result<f64> {
        self.check_axis(axis)?;
        Ok(self.entries.iter().map(|(p, v)| v * p.coords()[axis] as f64).sum())
    }

    /// Relabels every site through `f`; colliding images are summed.
    pub fn map_positions(&self, dim: usize, mut f: impl FnMut(&Position) -> Option<Position>) -> Option<Distribution> {
        let mut mapped = Vec::with_capacity(self.entries.len());
        for (p, v) in &self.entries {
            mapped.push((f(p)?, *v));
        }
        Distribution::new(dim, mapped).ok()
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis >= self.dim {
            return Err(WalkError::InvalidAxisIndex(axis));
        }
        Ok(())
    }
}

pub fn distribution<S: ProbabilitySource>(state: &S) -> Distribution {
    Distribution::new(state.dim(), state.site_probabilities()).expect("state positions share one dimension")
}

/// Sums out every coordinate except `axis`.
pub fn marginal(d: &Distribution, axis: usize) -> Result<Distribution> {
    d.check_axis(axis)?;
    Distribution::new(1, d.entries.iter().map(|(p, v)| (Position::line(p.coords()[axis]), *v)).collect())
}

/// `Σp·x² − (Σp·x)²` of a one-dimensional distribution.
pub fn variance(d: &Distribution) -> Result<f64> {
    if d.dim != 1 {
        return Err(WalkError::DimensionMismatch { expected: 1, found: d.dim });
    }
    Ok(moment_variance(d.entries.iter().map(|(p, v)| (p.coords()[0] as f64, *v))))
}

fn moment_variance(samples: impl Iterator<Item = (f64, f64)>) -> f64 {
    let (m1, m2) = samples.fold((0.0, 0.0), |(m1, m2), (x, p)| (m1 + p * x, m2 + p * x * x));
    m2 - m1 * m1
}

/// Largest pointwise difference over the union of both supports.
pub fn max_abs_diff(a: &Distribution, b: &Distribution) -> f64 {
    let neg: Vec<_> = b.entries.iter().map(|(p, v)| (*p, -v)).collect();
    merge_sorted(a.entries.clone(), neg).into_iter().map(|(_, v)| v.abs()).fold(0.0, f64::max)
}

/// Variances along the diagonal `u = (x+z)/√2` and anti-diagonal `v = (x−z)/√2`
/// of a square-lattice distribution.
pub fn diagonal_variances(d: &Distribution) -> Result<(f64, f64)> {
    if d.dim != 2 {
        return Err(WalkError::DimensionMismatch { expected: 2, found: d.dim });
    }
    let sums = |sign: i64| {
        moment_variance(d.entries.iter().map(|(p, v)| {
            let c = p.coords();
            ((c[0] + sign * c[1]) as f64, *v)
        }))
    };
    // Var((x±z)/√2) = Var(x±z)/2
    Ok((sums(1) / 2.0, sums(-1) / 2.0))
}

/// Re-expresses a three-axis lattice distribution in step counts: each site
/// becomes the number of `+` moves along X, Y and Z from `origin`.
pub fn to_step_counts(d: &Distribution, spec: &LatticeSpec, origin: &Position) -> Option<Distribution> {
    d.map_positions(3, |p| {
        let [a, b, c] = spec.step_counts(*p - *origin)?;
        Some(Position::new3(a, b, c))
    })
}

/// `|Σp − 1|`
pub fn normalization_error(d: &Distribution) -> f64 {
    (d.total() - 1.0).abs()
}
