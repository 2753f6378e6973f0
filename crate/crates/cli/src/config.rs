//! Flag parsing into a resolved run configuration.

use std::f64::consts::PI;
use std::fmt;

use pauliwalk_core::{lattice_spec, LatticeKind, PauliAxis, Position, SiteType, Spinor2, WalkConfig};
use serde::Serialize;

use crate::args::{LatticeChoice, RunArgs};
use crate::error::{CliError, Result};

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

/// Parses a float, optionally written with `pi`: `0.3`, `pi`, `-pi/4`, `3pi/4`, `3*pi/4`.
pub fn parse_angle(s: &str) -> Result<f64> {
    let s = s.trim();
    let bad = || config_err(format!("bad angle {s:?}"));
    let value = match s.find("pi") {
        None => s.parse::<f64>().map_err(|_| bad())?,
        Some(at) => {
            let head = s[..at].trim_end_matches('*').trim();
            let factor = match head {
                "" | "+" => 1.0,
                "-" => -1.0,
                h => h.parse::<f64>().map_err(|_| bad())?,
            };
            let tail = s[at + 2..].trim();
            let divisor = match tail.strip_prefix('/') {
                Some(d) => d.trim().parse::<f64>().map_err(|_| bad())?,
                None if tail.is_empty() => 1.0,
                None => return Err(bad()),
            };
            factor * PI / divisor
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// Folds `--theta` flags in order: bare values set every axis, `AXIS=` one.
pub fn parse_thetas(flags: &[String]) -> Result<[f64; 3]> {
    let mut thetas = [0.0; 3];
    for flag in flags {
        match flag.split_once('=') {
            Some((axis, value)) => {
                let axis: PauliAxis = axis.trim().parse().map_err(|_| config_err(format!("bad axis in {flag:?}")))?;
                thetas[axis.index()] = parse_angle(value)?;
            }
            None => thetas = [parse_angle(flag)?; 3],
        }
    }
    Ok(thetas)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialPreset {
    Down,
    Up,
    PlusI,
    DeltaEta(f64, f64),
}

impl InitialPreset {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "down" => InitialPreset::Down,
            "up" => InitialPreset::Up,
            "plus-i" => InitialPreset::PlusI,
            _ => {
                let rest =
                    s.strip_prefix("delta-eta:").ok_or_else(|| config_err(format!("unknown initial state {s:?}")))?;
                let (d, e) =
                    rest.split_once(':').ok_or_else(|| config_err(format!("expected delta-eta:<δ>:<η>, got {s:?}")))?;
                InitialPreset::DeltaEta(parse_angle(d)?, parse_angle(e)?)
            }
        })
    }

    pub fn spinor(&self) -> Spinor2 {
        match *self {
            InitialPreset::Down => Spinor2::spin_down(),
            InitialPreset::Up => Spinor2::spin_up(),
            InitialPreset::PlusI => Spinor2::plus_i(),
            InitialPreset::DeltaEta(d, e) => Spinor2::from_angles(d, e),
        }
    }
}

impl fmt::Display for InitialPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialPreset::Down => f.write_str("down"),
            InitialPreset::Up => f.write_str("up"),
            InitialPreset::PlusI => f.write_str("plus-i"),
            InitialPreset::DeltaEta(d, e) => write!(f, "delta-eta:{d}:{e}"),
        }
    }
}

pub fn parse_ordering(s: &str) -> Result<Vec<PauliAxis>> {
    s.chars()
        .filter(|c| !matches!(c, ',' | ' '))
        .map(|c| PauliAxis::from_char(c).ok_or_else(|| config_err(format!("bad axis {c:?} in ordering {s:?}"))))
        .collect()
}

fn lattice_kind(choice: LatticeChoice) -> Option<LatticeKind> {
    match choice {
        LatticeChoice::Line => Some(LatticeKind::Line),
        LatticeChoice::Square => Some(LatticeKind::Square),
        LatticeChoice::Cubic => Some(LatticeKind::Cubic),
        LatticeChoice::Triangular => Some(LatticeKind::Triangular),
        LatticeChoice::Kagome => Some(LatticeKind::Kagome),
        LatticeChoice::GroverSquare => None,
    }
}

#[derive(Debug, Clone)]
pub enum Walk {
    TwoState(Box<WalkConfig>),
    Grover { steps: usize },
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub lattice: LatticeChoice,
    pub initial: Option<InitialPreset>,
    pub walk: Walk,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaEcho {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Everything needed to repeat the run, as written to the manifest.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub lattice: LatticeChoice,
    pub steps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thetas: Option<ThetaEcho>,
    pub initial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin_type: Option<String>,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> Result<Self> {
        let steps =
            usize::try_from(args.steps).map_err(|_| config_err(format!("--steps must be >= 0, got {}", args.steps)))?;
        let Some(kind) = lattice_kind(args.lattice) else {
            if !args.thetas.is_empty()
                || args.initial.is_some()
                || args.ordering.is_some()
                || args.origin_type.is_some()
            {
                return Err(config_err("grover-square takes only --steps; its coin and initial state are fixed"));
            }
            return Ok(RunConfig { lattice: args.lattice, initial: None, walk: Walk::Grover { steps } });
        };
        let thetas = parse_thetas(&args.thetas)?;
        let initial = InitialPreset::parse(args.initial.as_deref().unwrap_or("down"))?;
        let mut spec = lattice_spec(kind);
        if let Some(t) = &args.origin_type {
            if kind != LatticeKind::Kagome {
                return Err(config_err("--origin-type applies to the kagome lattice only"));
            }
            let site: SiteType = t.parse()?;
            spec = spec.with_kagome_origin(Position::origin(3), site)?;
        }
        if let Some(o) = &args.ordering {
            spec = spec.with_ordering(parse_ordering(o)?)?;
        }
        let config = WalkConfig::with_spec(spec, steps, thetas, initial.spinor(), Position::origin(kind.dim()))?;
        Ok(RunConfig { lattice: args.lattice, initial: Some(initial), walk: Walk::TwoState(Box::new(config)) })
    }

    pub fn steps(&self) -> usize {
        match &self.walk {
            Walk::TwoState(c) => c.steps,
            Walk::Grover { steps } => *steps,
        }
    }

    pub fn echo(&self) -> ConfigEcho {
        match &self.walk {
            Walk::Grover { steps } => ConfigEcho {
                lattice: self.lattice,
                steps: *steps,
                thetas: None,
                initial: "grover".into(),
                ordering: None,
                origin_type: None,
            },
            Walk::TwoState(c) => ConfigEcho {
                lattice: self.lattice,
                steps: c.steps,
                thetas: Some(ThetaEcho { x: c.thetas[0], y: c.thetas[1], z: c.thetas[2] }),
                initial: self.initial.map(|i| i.to_string()).unwrap_or_default(),
                ordering: Some(c.lattice.ordering().iter().map(|a| a.as_char()).collect()),
                origin_type: c.lattice.kagome_origin().map(|(_, site)| site.to_string()),
            },
        }
    }
}
