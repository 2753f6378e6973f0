//! Lattice positions, per-axis displacements and kagome site types.
//!
//! Square positions are `(x, z)`, cubic positions `(x, y, z)`. Triangular and
//! kagome sites use three redundant integer labels in which a move along the
//! main axis shifts that label by two and the other two labels by one.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use crate::error::{Result, WalkError};
use crate::spinor::PauliAxis;

/// Integer lattice label with 1 to 3 coordinates. Unused trailing slots are 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    coords: [i64; 3],
    dim: u8,
}

impl Position {
    pub const fn line(z: i64) -> Self {
        Position { coords: [z, 0, 0], dim: 1 }
    }

    /// Square-lattice site `(x, z)`.
    pub const fn square(x: i64, z: i64) -> Self {
        Position { coords: [x, z, 0], dim: 2 }
    }

    pub const fn new3(x: i64, y: i64, z: i64) -> Self {
        Position { coords: [x, y, z], dim: 3 }
    }

    pub const fn origin(dim: usize) -> Self {
        Position { coords: [0; 3], dim: dim as u8 }
    }

    pub fn from_slice(coords: &[i64]) -> Result<Self> {
        match *coords {
            [z] => Ok(Position::line(z)),
            [x, z] => Ok(Position::square(x, z)),
            [x, y, z] => Ok(Position::new3(x, y, z)),
            _ => Err(WalkError::DimensionMismatch { expected: 3, found: coords.len() }),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.dim()]
    }

    /// Largest absolute coordinate.
    pub fn linf(&self) -> i64 {
        self.coords().iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn translate(&self, d: Displacement) -> Position {
        let mut coords = self.coords;
        for (c, dc) in coords.iter_mut().zip(d.0) {
            *c += dc;
        }
        Position { coords, dim: self.dim }
    }
}

impl Neg for Position {
    type Output = Position;
    fn neg(self) -> Position {
        let [a, b, c] = self.coords;
        Position { coords: [-a, -b, -c], dim: self.dim }
    }
}

impl Sub for Position {
    type Output = Displacement;
    fn sub(self, rhs: Position) -> Displacement {
        let (a, b) = (self.coords, rhs.coords);
        Displacement([a[0] - b[0], a[1] - b[1], a[2] - b[2]])
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Integer shift applied by a translation; same slot layout as [`Position`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Displacement(pub [i64; 3]);

impl Neg for Displacement {
    type Output = Displacement;
    fn neg(self) -> Displacement {
        let [a, b, c] = self.0;
        Displacement([-a, -b, -c])
    }
}

impl Add for Displacement {
    type Output = Displacement;
    fn add(self, rhs: Displacement) -> Displacement {
        let (a, b) = (self.0, rhs.0);
        Displacement([a[0] + b[0], a[1] + b[1], a[2] + b[2]])
    }
}

/// Which eigenstate of the axis Pauli operator is being translated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    Line,
    Square,
    Cubic,
    Triangular,
    Kagome,
}

impl LatticeKind {
    pub const ALL: [LatticeKind; 5] =
        [LatticeKind::Line, LatticeKind::Square, LatticeKind::Cubic, LatticeKind::Triangular, LatticeKind::Kagome];

    pub const fn dim(self) -> usize {
        match self {
            LatticeKind::Line => 1,
            LatticeKind::Square => 2,
            _ => 3,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            LatticeKind::Line => "line",
            LatticeKind::Square => "square",
            LatticeKind::Cubic => "cubic",
            LatticeKind::Triangular => "triangular",
            LatticeKind::Kagome => "kagome",
        }
    }

    /// Coordinate names in output order.
    pub const fn coordinate_names(self) -> &'static [&'static str] {
        match self {
            LatticeKind::Line => &["z"],
            LatticeKind::Square => &["x", "z"],
            _ => &["x", "y", "z"],
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LatticeKind {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self> {
        LatticeKind::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(s)).ok_or(WalkError::UnknownLattice)
    }
}

/// Kagome site classes by the pair of axes they carry:
/// `o` = {X, Z}, `p` = {X, Y}, `q` = {Y, Z}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SiteType {
    O,
    P,
    Q,
}

impl SiteType {
    pub const ALL: [SiteType; 3] = [SiteType::O, SiteType::P, SiteType::Q];

    pub const fn axes(self) -> [PauliAxis; 2] {
        match self {
            SiteType::O => [PauliAxis::X, PauliAxis::Z],
            SiteType::P => [PauliAxis::X, PauliAxis::Y],
            SiteType::Q => [PauliAxis::Y, PauliAxis::Z],
        }
    }

    pub const fn missing(self) -> PauliAxis {
        match self {
            SiteType::O => PauliAxis::Y,
            SiteType::P => PauliAxis::Z,
            SiteType::Q => PauliAxis::X,
        }
    }

    pub fn has(self, axis: PauliAxis) -> bool {
        self.missing() != axis
    }

    fn from_missing(axis: PauliAxis) -> SiteType {
        match axis {
            PauliAxis::X => SiteType::Q,
            PauliAxis::Y => SiteType::O,
            PauliAxis::Z => SiteType::P,
        }
    }

    /// Type of the neighbour reached by moving along `axis`.
    ///
    /// Sites along a line of one axis alternate between the two types that
    /// carry that axis. Returns `None` if `axis` is absent here.
    pub fn neighbour(self, axis: PauliAxis) -> Option<SiteType> {
        if !self.has(axis) {
            return None;
        }
        let third = PauliAxis::ALL.into_iter().find(|&a| a != axis && a != self.missing()).expect("three axes");
        Some(SiteType::from_missing(third))
    }

    /// Sub-step order for one full step starting on this site type.
    ///
    /// Starts on the axis cyclically preceding the missing one, so the missing
    /// axis is used second, once the walker has left the origin's class.
    pub fn default_ordering(self) -> [PauliAxis; 3] {
        match self {
            SiteType::P => [PauliAxis::Y, PauliAxis::Z, PauliAxis::X],
            SiteType::O => [PauliAxis::X, PauliAxis::Y, PauliAxis::Z],
            SiteType::Q => [PauliAxis::Z, PauliAxis::X, PauliAxis::Y],
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            SiteType::O => "o",
            SiteType::P => "p",
            SiteType::Q => "q",
        }
    }
}

impl fmt::Display for SiteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SiteType {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self> {
        SiteType::ALL.into_iter().find(|t| t.name().eq_ignore_ascii_case(s)).ok_or(WalkError::UnknownSiteType)
    }
}

/// Lattice geometry plus the sub-step order of one full walk step.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSpec {
    kind: LatticeKind,
    /// `+` displacement per axis, `[X, Y, Z]`-indexed; `None` for inactive axes.
    plus: [Option<Displacement>; 3],
    /// Application order (first element acts first).
    ordering: Vec<PauliAxis>,
    kagome_origin: Option<(Position, SiteType)>,
}

const fn d(x: i64, y: i64, z: i64) -> Option<Displacement> {
    Some(Displacement([x, y, z]))
}

/// Geometry of `kind` with its default sub-step ordering.
///
/// Kagome specs start from a type-`p` site at the origin; see
/// [`LatticeSpec::with_kagome_origin`].
pub fn lattice_spec(kind: LatticeKind) -> LatticeSpec {
    use PauliAxis::{X, Y, Z};
    let (plus, ordering): ([Option<Displacement>; 3], &[PauliAxis]) = match kind {
        LatticeKind::Line => ([None, None, d(-1, 0, 0)], &[Z]),
        LatticeKind::Square => ([d(-1, 0, 0), None, d(0, -1, 0)], &[Z, X]),
        LatticeKind::Cubic => ([d(-1, 0, 0), d(0, -1, 0), d(0, 0, -1)], &[Z, X, Y]),
        LatticeKind::Triangular | LatticeKind::Kagome => (
            [d(-2, -1, 1), d(1, -2, -1), d(1, -1, -2)],
            if kind == LatticeKind::Triangular { &[Z, Y, X] } else { &[Y, Z, X] },
        ),
    };
    LatticeSpec {
        kind,
        plus,
        ordering: ordering.to_vec(),
        kagome_origin: (kind == LatticeKind::Kagome).then_some((Position::origin(3), SiteType::P)),
    }
}

impl LatticeSpec {
    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn ordering(&self) -> &[PauliAxis] {
        &self.ordering
    }

    pub fn is_active(&self, axis: PauliAxis) -> bool {
        self.plus[axis.index()].is_some()
    }

    pub fn active_axes(&self) -> impl Iterator<Item = PauliAxis> + '_ {
        PauliAxis::ALL.into_iter().filter(|&a| self.is_active(a))
    }

    pub fn displacement(&self, axis: PauliAxis, sign: Sign) -> Result<Displacement> {
        let plus = self.plus[axis.index()].ok_or(WalkError::InactiveAxis { axis, lattice: self.kind })?;
        Ok(match sign {
            Sign::Plus => plus,
            Sign::Minus => -plus,
        })
    }

    pub fn kagome_origin(&self) -> Option<(Position, SiteType)> {
        self.kagome_origin
    }

    /// Replaces the sub-step order. Every active axis must appear exactly
    /// once; on kagome each axis must exist at the site class reached so far.
    pub fn with_ordering(mut self, ordering: Vec<PauliAxis>) -> Result<Self> {
        let active = self.active_axes().count();
        let mut seen = [false; 3];
        for &axis in &ordering {
            if !self.is_active(axis) || seen[axis.index()] {
                return Err(WalkError::InvalidOrdering);
            }
            seen[axis.index()] = true;
        }
        if ordering.len() != active {
            return Err(WalkError::InvalidOrdering);
        }
        if let Some((_, mut site)) = self.kagome_origin {
            for &axis in &ordering {
                site = site.neighbour(axis).ok_or(WalkError::InvalidOrdering)?;
            }
        }
        self.ordering = ordering;
        Ok(self)
    }

    /// Moves the kagome origin and resets the ordering to the default for
    /// `site` ([`SiteType::default_ordering`]).
    pub fn with_kagome_origin(mut self, origin: Position, site: SiteType) -> Result<Self> {
        if self.kind != LatticeKind::Kagome {
            return Err(WalkError::UnknownSiteType);
        }
        if origin.dim() != 3 {
            return Err(WalkError::DimensionMismatch { expected: 3, found: origin.dim() });
        }
        self.kagome_origin = Some((origin, site));
        self.ordering = site.default_ordering().to_vec();
        Ok(self)
    }

    /// Number of `+` moves along X, Y and Z whose sum is `offset`.
    ///
    /// Only defined for the three-axis lattices, where the displacements are
    /// linearly independent; `None` if `offset` is not an integer combination.
    pub fn step_counts(&self, offset: Displacement) -> Option<[i64; 3]> {
        let [u, v, w] = [self.plus[0]?.0, self.plus[1]?.0, self.plus[2]?.0];
        let r = offset.0;
        let det = dot(u, cross(v, w));
        debug_assert!(det != 0);
        let num = [dot(r, cross(v, w)), dot(r, cross(w, u)), dot(r, cross(u, v))];
        if num.iter().any(|n| n % det != 0) {
            return None;
        }
        Some(num.map(|n| n / det))
    }

    /// Inverse of [`LatticeSpec::step_counts`].
    pub fn from_step_counts(&self, counts: [i64; 3]) -> Option<Displacement> {
        let mut out = Displacement([0; 3]);
        for (axis, n) in PauliAxis::ALL.into_iter().zip(counts) {
            let Displacement(p) = self.plus[axis.index()]?;
            out = out + Displacement(p.map(|c| c * n));
        }
        Some(out)
    }
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Site class of `p` on a kagome spec.
///
/// Classes are propagated from the declared origin: each move along an axis
/// hops to the other class carrying that axis. Because the three
/// displacements are independent, a site is identified by its step counts
/// and the class depends only on their parities; the propagation table over
/// the eight parity classes is built once from the origin class.
pub fn kagome_site_type(spec: &LatticeSpec, p: &Position) -> Result<SiteType> {
    let (origin, origin_type) =
        spec.kagome_origin.ok_or(WalkError::InactiveAxis { axis: PauliAxis::Z, lattice: spec.kind })?;
    if p.dim() != 3 {
        return Err(WalkError::DimensionMismatch { expected: 3, found: p.dim() });
    }
    let counts = spec.step_counts(*p - origin).ok_or(WalkError::UnclassifiableSite(*p))?;
    let parity = counts.iter().enumerate().fold(0usize, |acc, (i, n)| acc | ((n.rem_euclid(2) as usize) << i));
    parity_table(origin_type)[parity].ok_or(WalkError::UnclassifiableSite(*p))
}

/// The two axes available at `p`.
pub fn kagome_site_axes(spec: &LatticeSpec, p: &Position) -> Result<[PauliAxis; 2]> {
    kagome_site_type(spec, p).map(SiteType::axes)
}

fn parity_table(origin: SiteType) -> [Option<SiteType>; 8] {
    let mut table = [None; 8];
    let mut queue = [(0usize, origin); 8];
    let (mut head, mut tail) = (0, 1);
    table[0] = Some(origin);
    while head < tail {
        let (parity, site) = queue[head];
        head += 1;
        for axis in site.axes() {
            let next = parity ^ (1 << axis.index());
            let next_site = site.neighbour(axis).expect("axis carried by site");
            match table[next] {
                None => {
                    table[next] = Some(next_site);
                    queue[tail] = (next, next_site);
                    tail += 1;
                }
                Some(existing) => debug_assert_eq!(existing, next_site),
            }
        }
    }
    table
}
