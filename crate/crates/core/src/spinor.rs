//! Complex 2×2 algebra in the σ3 basis: spinors, Pauli matrices, their
//! eigenbases and the one-parameter coin.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

// Unused whenever std ends up in the crate graph and its inherent f64 methods win.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::WalkError;

pub type Complex = num_complex::Complex64;

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);
pub(crate) const I: Complex = Complex::new(0.0, 1.0);

/// Lattice axis together with the Pauli operator that quantizes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliAxis {
    /// σ1
    X,
    /// σ2
    Y,
    /// σ3
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    /// Slot of the axis in `[X, Y, Z]`-indexed arrays.
    pub const fn index(self) -> usize {
        match self {
            PauliAxis::X => 0,
            PauliAxis::Y => 1,
            PauliAxis::Z => 2,
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            PauliAxis::X => 'X',
            PauliAxis::Y => 'Y',
            PauliAxis::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'X' => Some(PauliAxis::X),
            'Y' => Some(PauliAxis::Y),
            'Z' => Some(PauliAxis::Z),
            _ => None,
        }
    }
}

impl fmt::Display for PauliAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for PauliAxis {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => PauliAxis::from_char(c).ok_or(WalkError::UnknownAxis),
            _ => Err(WalkError::UnknownAxis),
        }
    }
}

/// Coin state: amplitudes on |↓⟩ = (1, 0) and |↑⟩ = (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Spinor2 {
    pub down: Complex,
    pub up: Complex,
}

impl Spinor2 {
    pub const fn new(down: Complex, up: Complex) -> Self {
        Spinor2 { down, up }
    }

    pub const fn zero() -> Self {
        Spinor2 { down: ZERO, up: ZERO }
    }

    pub const fn spin_down() -> Self {
        Spinor2 { down: ONE, up: ZERO }
    }

    pub const fn spin_up() -> Self {
        Spinor2 { down: ZERO, up: ONE }
    }

    /// (|↓⟩ + i|↑⟩)/√2
    pub fn plus_i() -> Self {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        Spinor2 { down: Complex::new(h, 0.0), up: Complex::new(0.0, h) }
    }

    /// cos(δ/2)|↓⟩ + e^{iη} sin(δ/2)|↑⟩
    pub fn from_angles(delta: f64, eta: f64) -> Self {
        let half = delta / 2.0;
        Spinor2 { down: Complex::new(half.cos(), 0.0), up: Complex::from_polar(half.sin(), eta) }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.down.norm_sqr() + self.up.norm_sqr()
    }

    /// ⟨self|other⟩
    pub fn inner(&self, other: &Spinor2) -> Complex {
        self.down.conj() * other.down + self.up.conj() * other.up
    }

    pub fn scale(&self, c: Complex) -> Spinor2 {
        Spinor2 { down: self.down * c, up: self.up * c }
    }

    pub fn is_finite(&self) -> bool {
        self.down.is_finite() && self.up.is_finite()
    }
}

impl Add for Spinor2 {
    type Output = Spinor2;
    fn add(self, rhs: Spinor2) -> Spinor2 {
        Spinor2 { down: self.down + rhs.down, up: self.up + rhs.up }
    }
}

impl Sub for Spinor2 {
    type Output = Spinor2;
    fn sub(self, rhs: Spinor2) -> Spinor2 {
        Spinor2 { down: self.down - rhs.down, up: self.up - rhs.up }
    }
}

impl Neg for Spinor2 {
    type Output = Spinor2;
    fn neg(self) -> Spinor2 {
        Spinor2 { down: -self.down, up: -self.up }
    }
}

/// Row-major complex 2×2 matrix acting on [`Spinor2`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub m: [[Complex; 2]; 2],
}

impl Matrix2 {
    pub const fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Self {
        Matrix2 { m: [[a, b], [c, d]] }
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Matrix2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub const fn identity() -> Self {
        Matrix2::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Matrix2::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn diag(a: Complex, d: Complex) -> Self {
        Matrix2::new(a, ZERO, ZERO, d)
    }

    /// |ket⟩⟨bra|
    pub fn outer(ket: &Spinor2, bra: &Spinor2) -> Self {
        Matrix2::new(
            ket.down * bra.down.conj(),
            ket.down * bra.up.conj(),
            ket.up * bra.down.conj(),
            ket.up * bra.up.conj(),
        )
    }

    pub fn scale(&self, c: Complex) -> Self {
        let m = &self.m;
        Matrix2::new(m[0][0] * c, m[0][1] * c, m[1][0] * c, m[1][1] * c)
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Matrix2::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn trace(&self) -> Complex {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> Complex {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// [self, other]
    pub fn commutator(&self, other: &Matrix2) -> Matrix2 {
        *self * *other - *other * *self
    }

    /// ‖M†M − I‖_F
    pub fn unitarity_residual(&self) -> f64 {
        (self.adjoint() * *self - Matrix2::identity()).frobenius_norm()
    }

    /// ‖M − M†‖_F
    pub fn hermiticity_residual(&self) -> f64 {
        (*self - self.adjoint()).frobenius_norm()
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|z| z.is_finite())
    }

    /// Both eigenvalues, `tr/2 ∓ √((tr/2)² − det)`.
    pub fn eigenvalues(&self) -> [Complex; 2] {
        let half = self.trace() * 0.5;
        let root = (half * half - self.det()).sqrt();
        [half - root, half + root]
    }

    /// Matrix exponential via Cayley–Hamilton: with `M = μ𝟙 + N`, `tr N = 0`,
    /// `N² = q𝟙` and `exp M = e^μ (cosh √q · 𝟙 + sinh √q / √q · N)`.
    pub fn exp(&self) -> Matrix2 {
        let mu = self.trace() * 0.5;
        let n = *self - Matrix2::identity().scale(mu);
        let q = n.m[0][0] * n.m[0][0] + n.m[0][1] * n.m[1][0];
        let (cosh, sinhc) = if q.norm() < 1e-8 {
            (ONE + q / 2.0 + q * q / 24.0, ONE + q / 6.0 + q * q / 120.0)
        } else {
            let s = q.sqrt();
            (s.cosh(), s.sinh() / s)
        };
        (Matrix2::identity().scale(cosh) + n.scale(sinhc)).scale(mu.exp())
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: Matrix2) -> Matrix2 {
        let (a, b) = (&self.m, &rhs.m);
        Matrix2::new(a[0][0] + b[0][0], a[0][1] + b[0][1], a[1][0] + b[1][0], a[1][1] + b[1][1])
    }
}

impl Sub for Matrix2 {
    type Output = Matrix2;
    fn sub(self, rhs: Matrix2) -> Matrix2 {
        let (a, b) = (&self.m, &rhs.m);
        Matrix2::new(a[0][0] - b[0][0], a[0][1] - b[0][1], a[1][0] - b[1][0], a[1][1] - b[1][1])
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let (a, b) = (&self.m, &rhs.m);
        Matrix2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Mul<Spinor2> for Matrix2 {
    type Output = Spinor2;
    fn mul(self, v: Spinor2) -> Spinor2 {
        let a = &self.m;
        Spinor2 { down: a[0][0] * v.down + a[0][1] * v.up, up: a[1][0] * v.down + a[1][1] * v.up }
    }
}

pub fn pauli_matrix(axis: PauliAxis) -> Matrix2 {
    match axis {
        PauliAxis::X => Matrix2::new(ZERO, ONE, ONE, ZERO),
        PauliAxis::Y => Matrix2::new(ZERO, -I, I, ZERO),
        PauliAxis::Z => Matrix2::new(ONE, ZERO, ZERO, -ONE),
    }
}

/// Normalized `(+1, −1)` eigenvectors of the Pauli operator for `axis`.
///
/// For `Z` these are |↓⟩ and |↑⟩ themselves.
pub fn pauli_eigenbasis(axis: PauliAxis) -> (Spinor2, Spinor2) {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let (hr, hi) = (Complex::new(h, 0.0), Complex::new(0.0, h));
    match axis {
        PauliAxis::X => (Spinor2::new(hr, hr), Spinor2::new(hr, -hr)),
        PauliAxis::Y => (Spinor2::new(hr, hi), Spinor2::new(hr, -hi)),
        PauliAxis::Z => (Spinor2::spin_down(), Spinor2::spin_up()),
    }
}

/// Coin rotation `cosθ(|+⟩⟨+| + |−⟩⟨−|) + sinθ(|+⟩⟨−| − |−⟩⟨+|)` over the
/// eigenbasis of `axis`, written out in the σ3 basis.
pub fn coin_operator(axis: PauliAxis, theta: f64) -> Matrix2 {
    let (c, s) = (theta.cos(), theta.sin());
    match axis {
        PauliAxis::Z => Matrix2::from_real(c, s, -s, c),
        PauliAxis::X => Matrix2::from_real(c, -s, s, c),
        PauliAxis::Y => Matrix2::new(c.into(), Complex::new(0.0, s), Complex::new(0.0, s), c.into()),
    }
}
