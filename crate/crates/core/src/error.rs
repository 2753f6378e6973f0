use core::fmt;

use crate::lattice::{LatticeKind, Position, SiteType};
use crate::spinor::PauliAxis;

pub type Result<T, E = WalkError> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum WalkError {
    /// The lattice has no translation rule for this axis.
    InactiveAxis {
        axis: PauliAxis,
        lattice: LatticeKind,
    },
    /// A kagome site does not carry the axis the sub-step wants to use.
    AxisUnavailable {
        axis: PauliAxis,
        site: SiteType,
        position: Position,
    },
    /// A kagome position cannot be reached from the configured origin.
    UnclassifiableSite(Position),
    UnknownLattice,
    UnknownAxis,
    UnknownSiteType,
    /// Sub-step ordering must list each active axis exactly once.
    InvalidOrdering,
    /// Initial spin norm² differs from 1.
    NotNormalized(f64),
    NonFiniteAngle,
    /// `cos²θ·cos²k` is too close to 1 for the closed-form eigensystem.
    Degenerate {
        theta: f64,
        k: f64,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    InvalidAxisIndex(usize),
}

impl fmt::Display for WalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkError::InactiveAxis { axis, lattice } => {
                write!(f, "axis {axis} is not active on the {lattice} lattice")
            }
            WalkError::AxisUnavailable { axis, site, position } => {
                write!(f, "axis {axis} does not exist at kagome site {position} of type {site}")
            }
            WalkError::UnclassifiableSite(p) => {
                write!(f, "kagome position {p} is not reachable from the origin")
            }
            WalkError::UnknownLattice => f.write_str("unknown lattice kind"),
            WalkError::UnknownAxis => f.write_str("unknown Pauli axis"),
            WalkError::UnknownSiteType => f.write_str("unknown kagome site type"),
            WalkError::InvalidOrdering => f.write_str("sub-step ordering must list every active axis exactly once"),
            WalkError::NotNormalized(n) => write!(f, "initial spin has norm² {n}, expected 1"),
            WalkError::NonFiniteAngle => f.write_str("coin angle must be finite"),
            WalkError::Degenerate { theta, k } => {
                write!(f, "degenerate eigensystem at theta={theta}, k={k}")
            }
            WalkError::DimensionMismatch { expected, found } => {
                write!(f, "expected {expected}-dimensional positions, found {found}")
            }
            WalkError::InvalidAxisIndex(i) => write!(f, "coordinate index {i} out of range"),
        }
    }
}

impl core::error::Error for WalkError {}
