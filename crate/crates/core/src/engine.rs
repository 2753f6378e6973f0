//! Sparse state vectors and the coin-then-shift evolution.

use alloc::vec::Vec;
use core::ops::Add;

use crate::error::{Result, WalkError};
use crate::lattice::{kagome_site_type, lattice_spec, LatticeKind, LatticeSpec, Position, Sign};
use crate::spinor::{coin_operator, pauli_eigenbasis, Complex, PauliAxis, Spinor2};

/// Tolerance on `|‖spin‖² − 1|` when accepting an initial coin state.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Walker state: spinor amplitudes on a finite set of sites.
///
/// Entries are kept sorted by position with no duplicates, which fixes the
/// order in which amplitudes are accumulated and makes evolution
/// bit-reproducible.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    dim: usize,
    entries: Vec<(Position, Spinor2)>,
}

impl SpinorField {
    pub fn point(position: Position, spin: Spinor2) -> Self {
        SpinorField { dim: position.dim(), entries: alloc::vec![(position, spin)] }
    }

    /// Builds a field from arbitrary entries, summing repeated positions.
    pub fn from_entries(dim: usize, mut entries: Vec<(Position, Spinor2)>) -> Result<Self> {
        if let Some((p, _)) = entries.iter().find(|(p, _)| p.dim() != dim) {
            return Err(WalkError::DimensionMismatch { expected: dim, found: p.dim() });
        }
        entries.sort_by_key(|e| e.0);
        let mut merged: Vec<(Position, Spinor2)> = Vec::with_capacity(entries.len());
        for (p, s) in entries {
            match merged.last_mut() {
                Some((q, acc)) if *q == p => *acc = *acc + s,
                _ => merged.push((p, s)),
            }
        }
        Ok(SpinorField { dim, entries: merged })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(Position, Spinor2)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: &Position) -> Option<&Spinor2> {
        self.entries.binary_search_by(|(q, _)| q.cmp(p)).ok().map(|i| &self.entries[i].1)
    }

    /// Σ‖spinor‖² over all sites.
    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|(_, s)| s.norm_sqr()).sum()
    }

    pub fn scaled(&self, c: Complex) -> SpinorField {
        SpinorField { dim: self.dim, entries: self.entries.iter().map(|(p, s)| (*p, s.scale(c))).collect() }
    }

    /// Amplitude-wise `self + other`.
    pub fn sum(&self, other: &SpinorField) -> Result<SpinorField> {
        if self.dim != other.dim {
            return Err(WalkError::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(SpinorField { dim: self.dim, entries: merge_sorted(self.entries.clone(), other.entries.clone()) })
    }
}

/// Merges two position-sorted lists, adding values that share a position
/// (left operand first).
pub(crate) fn merge_sorted<T: Copy + Add<Output = T>>(
    a: Vec<(Position, T)>,
    b: Vec<(Position, T)>,
) -> Vec<(Position, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let next = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                core::cmp::Ordering::Less => a.next(),
                core::cmp::Ordering::Greater => b.next(),
                core::cmp::Ordering::Equal => {
                    let (p, u) = a.next().expect("peeked");
                    let (_, v) = b.next().expect("peeked");
                    Some((p, u + v))
                }
            },
            (Some(_), None) => a.next(),
            (None, Some(_)) => b.next(),
            (None, None) => break,
        };
        out.extend(next);
    }
    out
}

/// Everything needed to reproduce one walk.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkConfig {
    pub lattice: LatticeSpec,
    pub steps: usize,
    /// Coin angle per axis, `[X, Y, Z]`-indexed. Ignored for inactive axes.
    pub thetas: [f64; 3],
    pub initial_spin: Spinor2,
    pub initial_position: Position,
}

impl WalkConfig {
    /// Walk starting at the origin of the default geometry for `kind`.
    pub fn new(kind: LatticeKind, steps: usize, thetas: [f64; 3], initial_spin: Spinor2) -> Result<Self> {
        WalkConfig::with_spec(lattice_spec(kind), steps, thetas, initial_spin, Position::origin(kind.dim()))
    }

    pub fn with_spec(
        lattice: LatticeSpec,
        steps: usize,
        thetas: [f64; 3],
        initial_spin: Spinor2,
        initial_position: Position,
    ) -> Result<Self> {
        let norm = initial_spin.norm_sqr();
        if !initial_spin.is_finite() || (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(WalkError::NotNormalized(norm));
        }
        if thetas.iter().any(|t| !t.is_finite()) {
            return Err(WalkError::NonFiniteAngle);
        }
        if initial_position.dim() != lattice.dim() {
            return Err(WalkError::DimensionMismatch { expected: lattice.dim(), found: initial_position.dim() });
        }
        Ok(WalkConfig { lattice, steps, thetas, initial_spin, initial_position })
    }

    pub fn theta(&self, axis: PauliAxis) -> f64 {
        self.thetas[axis.index()]
    }
}

pub fn initial_state(config: &WalkConfig) -> SpinorField {
    SpinorField::point(config.initial_position, config.initial_spin)
}

/// One coin-then-shift sub-step along `axis`.
///
/// Every spinor is rotated by the axis coin, split over the axis eigenbasis,
/// and its `+` and `−` parts are moved by the corresponding displacements.
pub fn apply_substep(state: &SpinorField, axis: PauliAxis, theta: f64, lattice: &LatticeSpec) -> Result<SpinorField> {
    let forward = lattice.displacement(axis, Sign::Plus)?;
    let backward = lattice.displacement(axis, Sign::Minus)?;
    if lattice.kind() == LatticeKind::Kagome {
        for (p, _) in &state.entries {
            let site = kagome_site_type(lattice, p)?;
            if !site.has(axis) {
                return Err(WalkError::AxisUnavailable { axis, site, position: *p });
            }
        }
    }
    let coin = coin_operator(axis, theta);
    let (plus, minus) = pauli_eigenbasis(axis);
    let mut forward_part = Vec::with_capacity(state.len());
    let mut backward_part = Vec::with_capacity(state.len());
    // Translation preserves lexicographic order, so both parts stay sorted.
    for (p, s) in &state.entries {
        let rotated = coin * *s;
        forward_part.push((p.translate(forward), plus.scale(plus.inner(&rotated))));
        backward_part.push((p.translate(backward), minus.scale(minus.inner(&rotated))));
    }
    Ok(SpinorField { dim: state.dim, entries: merge_sorted(forward_part, backward_part) })
}

/// One full step: the sub-steps of the lattice ordering, first listed acts first.
pub fn step(state: &SpinorField, config: &WalkConfig) -> Result<SpinorField> {
    let mut current = state.clone();
    for &axis in config.lattice.ordering() {
        current = apply_substep(&current, axis, config.theta(axis), &config.lattice)?;
    }
    Ok(current)
}

/// State after `config.steps` full steps from [`initial_state`].
pub fn evolve(config: &WalkConfig) -> Result<SpinorField> {
    let mut state = initial_state(config);
    for _ in 0..config.steps {
        state = step(&state, config)?;
    }
    Ok(state)
}
