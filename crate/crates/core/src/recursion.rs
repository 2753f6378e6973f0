//! Closed amplitude recursions for the coinless square walk and the Grover
//! walk, evaluated on dense `[−t, t]²` grids.
//!
//! These run independently of the operator engines and serve as oracles for
//! them. Each recursion writes amplitudes in its own `(a, b)` index order; a
//! [`CoordinateMap`] relates that order to the engine's `(x, z)`.

use alloc::vec::Vec;
use core::fmt;

use crate::analysis::Distribution;
use crate::lattice::Position;
use crate::spinor::{Complex, Spinor2, ZERO};

/// Per-time dense tables of `N` coin amplitudes on `[−t, t]²`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeTable<const N: usize> {
    layers: Vec<Vec<[Complex; N]>>,
}

pub type AmplitudeTable2 = AmplitudeTable<2>;
pub type AmplitudeTable4 = AmplitudeTable<4>;

impl<const N: usize> AmplitudeTable<N> {
    fn seeded(seed: [Complex; N]) -> Self {
        AmplitudeTable { layers: alloc::vec![alloc::vec![seed]] }
    }

    /// Largest time stored.
    pub fn steps(&self) -> usize {
        self.layers.len() - 1
    }

    /// Amplitudes at `(a, b)` and time `t`; zero outside `[−t, t]²`.
    pub fn get(&self, a: i64, b: i64, t: usize) -> [Complex; N] {
        let Some(layer) = self.layers.get(t) else {
            return [ZERO; N];
        };
        let r = t as i64;
        if a.abs() > r || b.abs() > r {
            return [ZERO; N];
        }
        let w = 2 * r + 1;
        layer[((a + r) * w + (b + r)) as usize]
    }

    /// Iterates `((a, b), amplitudes)` over the time-`t` grid.
    pub fn sites(&self, t: usize) -> impl Iterator<Item = ((i64, i64), [Complex; N])> + '_ {
        let r = t as i64;
        let w = 2 * r + 1;
        self.layers[t].iter().enumerate().map(move |(i, amps)| (((i as i64) / w - r, (i as i64) % w - r), *amps))
    }

    pub fn norm_sqr(&self, t: usize) -> f64 {
        self.sites(t).map(|(_, amps)| amps.iter().map(|a| a.norm_sqr()).sum::<f64>()).sum()
    }

    /// Position distribution at time `t`, relabelled into engine coordinates.
    pub fn distribution(&self, t: usize, map: CoordinateMap) -> Distribution {
        let entries =
            self.sites(t).map(|((a, b), amps)| (map.apply(a, b), amps.iter().map(|x| x.norm_sqr()).sum())).collect();
        Distribution::new(2, entries).expect("square positions")
    }

    fn push_layer(&mut self, rule: impl Fn(&Self, i64, i64, usize) -> [Complex; N]) {
        let t = self.layers.len();
        let r = t as i64;
        let mut layer = Vec::with_capacity(((2 * r + 1) * (2 * r + 1)) as usize);
        for a in -r..=r {
            for b in -r..=r {
                layer.push(rule(self, a, b, t - 1));
            }
        }
        self.layers.push(layer);
    }
}

/// Coinless two-state square walk:
///
/// ```text
/// α¹(a,b,t) = ½[α¹(a+1,b+1) + α¹(a+1,b−1) + α²(a−1,b+1) − α²(a−1,b−1)]
/// α²(a,b,t) = ½[α¹(a+1,b+1) − α¹(a+1,b−1) + α²(a−1,b+1) + α²(a−1,b−1)]
/// ```
/// with the right-hand sides taken at `t − 1`.
pub fn two_state_recursion(steps: usize, init: Spinor2) -> AmplitudeTable2 {
    let mut table = AmplitudeTable::seeded([init.down, init.up]);
    for _ in 0..steps {
        table.push_layer(|tab, a, b, prev| {
            let pp = tab.get(a + 1, b + 1, prev);
            let pm = tab.get(a + 1, b - 1, prev);
            let mp = tab.get(a - 1, b + 1, prev);
            let mm = tab.get(a - 1, b - 1, prev);
            [(pp[0] + pm[0] + mp[1] - mm[1]) * 0.5, (pp[0] - pm[0] + mp[1] + mm[1]) * 0.5]
        });
    }
    table
}

/// Which form of the second Grover relation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroverRecursionVariant {
    /// As printed: the β³ term of the β² relation is read at `(a−1, b−1)`
    /// while the other three are read at `(a+1, b−1)`.
    Verbatim,
    /// All four β² terms read at `(a+1, b−1)`.
    IndexConsistent,
}

impl fmt::Display for GroverRecursionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroverRecursionVariant::Verbatim => "verbatim",
            GroverRecursionVariant::IndexConsistent => "index-consistent",
        })
    }
}

/// Grover walk seeded with `½(1, −1, −1, 1)` at the origin. Each component
/// is the Grover-coined spinor read from one diagonal neighbour at `t − 1`:
/// β¹ from `(a+1,b+1)`, β² from `(a+1,b−1)`, β³ from `(a−1,b+1)`, β⁴ from
/// `(a−1,b−1)`.
pub fn grover_recursion(steps: usize, variant: GroverRecursionVariant) -> AmplitudeTable4 {
    let seed = [0.5, -0.5, -0.5, 0.5].map(Complex::from);
    let mut table = AmplitudeTable::seeded(seed);
    for _ in 0..steps {
        table.push_layer(|tab, a, b, prev| {
            let n1 = tab.get(a + 1, b + 1, prev);
            let n2 = tab.get(a + 1, b - 1, prev);
            let n3 = tab.get(a - 1, b + 1, prev);
            let n4 = tab.get(a - 1, b - 1, prev);
            let beta3_for_2 = match variant {
                GroverRecursionVariant::Verbatim => tab.get(a - 1, b - 1, prev)[2],
                GroverRecursionVariant::IndexConsistent => n2[2],
            };
            [
                (-n1[0] + n1[1] + n1[2] + n1[3]) * 0.5,
                (n2[0] - n2[1] + beta3_for_2 + n2[3]) * 0.5,
                (n3[0] + n3[1] - n3[2] + n3[3]) * 0.5,
                (n4[0] + n4[1] + n4[2] - n4[3]) * 0.5,
            ]
        });
    }
    table
}

/// Relabelling `(a, b) → (x, z)` by an optional swap followed by sign flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoordinateMap {
    pub swap: bool,
    pub negate_x: bool,
    pub negate_z: bool,
}

impl CoordinateMap {
    pub const IDENTITY: CoordinateMap = CoordinateMap { swap: false, negate_x: false, negate_z: false };

    /// The eight symmetries of the square.
    pub fn all() -> impl Iterator<Item = CoordinateMap> {
        (0..8u8).map(|bits| CoordinateMap { swap: bits & 1 != 0, negate_x: bits & 2 != 0, negate_z: bits & 4 != 0 })
    }

    pub fn apply(&self, a: i64, b: i64) -> Position {
        let (x, z) = if self.swap { (b, a) } else { (a, b) };
        Position::square(if self.negate_x { -x } else { x }, if self.negate_z { -z } else { z })
    }
}

impl fmt::Display for CoordinateMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (first, second) = if self.swap { ("z", "x") } else { ("x", "z") };
        let sign = |neg: bool| if neg { "-" } else { "" };
        let (sa, sb) = if self.swap {
            (sign(self.negate_z), sign(self.negate_x))
        } else {
            (sign(self.negate_x), sign(self.negate_z))
        };
        write!(f, "(a,b)=({sa}{first},{sb}{second})")
    }
}

/// Every coordinate map under which the table's time-`t` amplitudes equal
/// `lookup` at the mapped site within `tol` (sites off the table must carry
/// zero amplitude in `lookup` too).
pub fn matching_maps<const N: usize>(
    table: &AmplitudeTable<N>,
    t: usize,
    reference: &[(Position, [Complex; N])],
    tol: f64,
) -> Vec<CoordinateMap> {
    CoordinateMap::all()
        .filter(|map| {
            let mut matched = 0usize;
            let table_ok = table.sites(t).all(|((a, b), amps)| {
                let p = map.apply(a, b);
                let other = reference.binary_search_by(|(q, _)| q.cmp(&p)).map_or([ZERO; N], |i| reference[i].1);
                if other.iter().any(|x| x.norm_sqr() > 0.0) {
                    matched += 1;
                }
                amps.iter().zip(other.iter()).all(|(x, y)| (*x - *y).norm() < tol)
            });
            // Every non-negligible reference amplitude must have a table site.
            let nonzero = reference.iter().filter(|(_, amps)| amps.iter().any(|x| x.norm() >= tol)).count();
            table_ok && matched >= nonzero
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_steps_is_seed() {
        let init = Spinor2::plus_i();
        let t = two_state_recursion(0, init);
        assert_eq!(t.steps(), 0);
        assert_eq!(t.get(0, 0, 0), [init.down, init.up]);
        assert_eq!(t.get(1, 0, 0), [ZERO; 2]);
        let g = grover_recursion(0, GroverRecursionVariant::Verbatim);
        assert_eq!(g.get(0, 0, 0).map(|x| x.re), [0.5, -0.5, -0.5, 0.5]);
    }

    #[test]
    fn two_state_one_step_quarters() {
        let t = two_state_recursion(1, Spinor2::plus_i());
        let d = t.distribution(1, CoordinateMap::IDENTITY);
        assert_eq!(d.len(), 4);
        for (a, b) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
            let amps = t.get(a, b, 1);
            let p: f64 = amps.iter().map(|x| x.norm_sqr()).sum();
            assert!((p - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn grover_one_step_quarters() {
        let g = grover_recursion(1, GroverRecursionVariant::IndexConsistent);
        for (a, b) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
            let p: f64 = g.get(a, b, 1).iter().map(|x| x.norm_sqr()).sum();
            assert!((p - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn verbatim_grover_loses_norm() {
        let g = grover_recursion(1, GroverRecursionVariant::Verbatim);
        assert!((g.norm_sqr(1) - 1.0).abs() > 1e-3);
    }

    #[test]
    fn index_consistent_grover_is_normalized() {
        let g = grover_recursion(10, GroverRecursionVariant::IndexConsistent);
        for t in 0..=10 {
            assert!((g.norm_sqr(t) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn two_state_normalized() {
        let t = two_state_recursion(10, Spinor2::plus_i());
        for s in 0..=10 {
            assert!((t.norm_sqr(s) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn coordinate_maps_are_distinct() {
        let images: Vec<_> = CoordinateMap::all().map(|m| m.apply(1, 2)).collect();
        for (i, a) in images.iter().enumerate() {
            for b in &images[i + 1..] {
                assert_ne!(a, b);
            }
        }
        let swap = CoordinateMap { swap: true, negate_x: false, negate_z: false };
        assert_eq!(swap.apply(1, 2), Position::square(2, 1));
        assert_eq!(alloc::format!("{swap}"), "(a,b)=(z,x)");
    }
}
