//! Point-symmetry search over distributions.
//!
//! Candidate maps are involutions about a centre given in doubled integer
//! coordinates, so every map stays in exact integer arithmetic.

use alloc::vec::Vec;
use core::fmt;

use super::{max_abs_diff, Distribution};
use crate::lattice::Position;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    /// `v → c − v` in every coordinate.
    Inversion,
    /// `v_i → c_i − v_i`, other coordinates fixed.
    Reflection(usize),
    /// Swaps coordinates `i` and `j` (shifted so the centre is fixed).
    Exchange(usize, usize),
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Involution::Inversion => f.write_str("inversion"),
            Involution::Reflection(i) => write!(f, "reflection[{i}]"),
            Involution::Exchange(i, j) => write!(f, "exchange[{i},{j}]"),
        }
    }
}

impl Involution {
    /// Inversion, every single-axis reflection and every pairwise exchange.
    pub fn candidates(dim: usize) -> Vec<Involution> {
        let mut out = alloc::vec![Involution::Inversion];
        out.extend((0..dim).map(Involution::Reflection));
        for i in 0..dim {
            for j in i + 1..dim {
                out.push(Involution::Exchange(i, j));
            }
        }
        out
    }

    /// Image of `p` about the doubled centre `center2`, or `None` when the
    /// image is not a lattice point.
    pub fn apply(&self, p: &Position, center2: &[i64; 3]) -> Option<Position> {
        let mut v = [0i64; 3];
        let c = p.coords();
        v[..c.len()].copy_from_slice(c);
        match *self {
            Involution::Inversion => {
                for (x, c2) in v.iter_mut().zip(center2).take(c.len()) {
                    *x = c2 - *x;
                }
            }
            Involution::Reflection(i) => {
                if i >= c.len() {
                    return None;
                }
                v[i] = center2[i] - v[i];
            }
            Involution::Exchange(i, j) => {
                if i >= c.len() || j >= c.len() || (center2[i] - center2[j]) % 2 != 0 {
                    return None;
                }
                let shift = (center2[i] - center2[j]) / 2;
                let (vi, vj) = (v[i], v[j]);
                v[i] = vj + shift;
                v[j] = vi - shift;
            }
        }
        Position::from_slice(&v[..c.len()]).ok()
    }

    pub fn map(&self, d: &Distribution, center2: &[i64; 3]) -> Option<Distribution> {
        d.map_positions(d.dim(), |p| self.apply(p, center2))
    }
}

/// Doubled midpoint of the support's bounding box.
pub fn bounding_center2(d: &Distribution) -> [i64; 3] {
    let mut out = [0; 3];
    for (axis, slot) in out.iter_mut().enumerate().take(d.dim()) {
        let coords = d.entries().iter().map(|(p, _)| p.coords()[axis]);
        let lo = coords.clone().min().unwrap_or(0);
        let hi = coords.max().unwrap_or(0);
        *slot = lo + hi;
    }
    out
}

/// Every candidate `g` with `max |g(from) − to| < tol`, with its residual.
pub fn relating_involutions(
    from: &Distribution,
    to: &Distribution,
    center2: &[i64; 3],
    tol: f64,
) -> Vec<(Involution, f64)> {
    Involution::candidates(from.dim())
        .into_iter()
        .filter_map(|g| {
            let residual = max_abs_diff(&g.map(from, center2)?, to);
            (residual < tol).then_some((g, residual))
        })
        .collect()
}
