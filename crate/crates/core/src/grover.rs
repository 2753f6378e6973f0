//! Four-state Grover walk on the square lattice, the reference that the
//! coinless two-state square walk reproduces.

use alloc::vec::Vec;
use core::ops::Add;

use crate::analysis::{distribution, Distribution};
use crate::engine::merge_sorted;
use crate::lattice::{Displacement, Position};
use crate::spinor::{Complex, ZERO};

/// Amplitudes on the coin basis `(|↓⟩, |↑⟩, |←⟩, |→⟩)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Spinor4(pub [Complex; 4]);

impl Spinor4 {
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum()
    }

    fn only(index: usize, amp: Complex) -> Spinor4 {
        let mut out = [ZERO; 4];
        out[index] = amp;
        Spinor4(out)
    }
}

impl Add for Spinor4 {
    type Output = Spinor4;
    fn add(self, rhs: Spinor4) -> Spinor4 {
        let mut out = self.0;
        for (a, b) in out.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Spinor4(out)
    }
}

/// Diagonal −½, off-diagonal +½.
pub fn grover_coin() -> [[f64; 4]; 4] {
    let mut g = [[0.5; 4]; 4];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -0.5;
    }
    g
}

/// Translation applied to each coin component, in `(x, z)`.
pub const GROVER_SHIFTS: [Displacement; 4] =
    [Displacement([-1, -1, 0]), Displacement([-1, 1, 0]), Displacement([1, -1, 0]), Displacement([1, 1, 0])];

#[derive(Debug, Clone, PartialEq)]
pub struct GroverField {
    entries: Vec<(Position, Spinor4)>,
}

impl GroverField {
    pub fn entries(&self) -> &[(Position, Spinor4)] {
        &self.entries
    }

    pub fn get(&self, p: &Position) -> Option<&Spinor4> {
        self.entries.binary_search_by(|(q, _)| q.cmp(p)).ok().map(|i| &self.entries[i].1)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|(_, s)| s.norm_sqr()).sum()
    }
}

/// ½(|↓⟩ − |↑⟩ − |←⟩ + |→⟩) at the origin.
pub fn grover_initial_state() -> GroverField {
    let amps = [0.5, -0.5, -0.5, 0.5].map(Complex::from);
    GroverField { entries: alloc::vec![(Position::square(0, 0), Spinor4(amps))] }
}

fn apply_coin(s: &Spinor4) -> Spinor4 {
    let g = grover_coin();
    let mut out = [ZERO; 4];
    for (o, row) in out.iter_mut().zip(g.iter()) {
        *o = row.iter().zip(s.0.iter()).map(|(gij, a)| *a * *gij).sum();
    }
    Spinor4(out)
}

/// Coin then conditional diagonal shift.
pub fn grover_step(state: &GroverField) -> GroverField {
    let mut parts: [Vec<(Position, Spinor4)>; 4] = Default::default();
    for (p, s) in &state.entries {
        let mixed = apply_coin(s);
        for (i, part) in parts.iter_mut().enumerate() {
            part.push((p.translate(GROVER_SHIFTS[i]), Spinor4::only(i, mixed.0[i])));
        }
    }
    let [a, b, c, d] = parts;
    GroverField { entries: merge_sorted(merge_sorted(a, b), merge_sorted(c, d)) }
}

pub fn grover_evolve_field(steps: usize) -> GroverField {
    (0..steps).fold(grover_initial_state(), |s, _| grover_step(&s))
}

/// Position distribution after `steps` Grover steps.
pub fn grover_evolve(steps: usize) -> Distribution {
    distribution(&grover_evolve_field(steps))
}
