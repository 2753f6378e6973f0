//! Walk sub-steps in quasi-momentum space and their effective Hamiltonians.
//!
//! A sub-step along one axis is translation invariant, so for a fixed
//! quasi-momentum `k` it reduces to the 2×2 matrix
//! `W(θ, k) = e^{−ik}|+⟩⟨+|B(θ) + e^{+ik}|−⟩⟨−|B(θ)`. Its eigenvalues are
//! `λ∓ = cosθ·cos k ∓ √(cos²θ·cos²k − 1)` for every axis and the effective
//! Hamiltonian satisfies `W = exp(−iH)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

// Unused whenever std ends up in the crate graph and its inherent f64 methods win.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Result, WalkError};
use crate::spinor::{coin_operator, pauli_eigenbasis, pauli_matrix, Complex, Matrix2, PauliAxis, I, ONE, ZERO};

/// Points with `|cos²θ·cos²k − 1|` below this are treated as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

/// `|cos²θ·cos²k − 1|`; zero where the two eigenvalues coincide.
pub fn degeneracy_gap(theta: f64, k: f64) -> f64 {
    let ck = theta.cos() * k.cos();
    (ck * ck - 1.0).abs()
}

fn is_degenerate(theta: f64, k: f64, tol: f64) -> bool {
    let gap = degeneracy_gap(theta, k);
    gap < tol || gap == 0.0
}

/// Sub-step matrix along `axis` at quasi-momentum `k`.
pub fn walk_momentum_matrix(axis: PauliAxis, theta: f64, k: f64) -> Matrix2 {
    let coin = coin_operator(axis, theta);
    let (plus, minus) = pauli_eigenbasis(axis);
    let forward = Matrix2::outer(&plus, &plus) * coin;
    let backward = Matrix2::outer(&minus, &minus) * coin;
    forward.scale(Complex::from_polar(1.0, -k)) + backward.scale(Complex::from_polar(1.0, k))
}

/// Eigen-decomposition `W_Z(θ, k) = V · diag(λ−, λ+) · V⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem {
    pub lambda_minus: Complex,
    pub lambda_plus: Complex,
    pub v: Matrix2,
    pub v_inv: Matrix2,
}

impl EigenSystem {
    pub fn reconstruct(&self) -> Matrix2 {
        self.v * Matrix2::diag(self.lambda_minus, self.lambda_plus) * self.v_inv
    }
}

/// `(λ−, λ+, √(cos²θcos²k − 1))` with the root taken as `+i√|·|`.
fn eigenvalues(theta: f64, k: f64) -> (Complex, Complex, Complex) {
    let ck = theta.cos() * k.cos();
    let root = I * (1.0 - ck * ck).max(0.0).sqrt();
    (ck - root, ck + root, root)
}

pub fn eigensystem(theta: f64, k: f64) -> Result<EigenSystem> {
    if is_degenerate(theta, k, DEGENERACY_TOLERANCE) {
        return Err(WalkError::Degenerate { theta, k });
    }
    let (lm, lp, root) = eigenvalues(theta, k);
    let (c, s) = (theta.cos(), theta.sin());
    let phase = Complex::from_polar(1.0, k);
    let (v, v_inv) = if s.abs() > 1e-12 {
        let denom = phase * s;
        let v = Matrix2::new((phase * c - lm) / denom, (phase * c - lp) / denom, ONE, ONE);
        let two_root = root * 2.0;
        let v_inv =
            Matrix2::new(denom / two_root, (lp - phase * c) / two_root, -denom / two_root, (phase * c - lm) / two_root);
        (v, v_inv)
    } else {
        // W is diagonal: diag(c·e^{−ik}, c·e^{ik}). Order columns as (λ−, λ+).
        let first = phase.conj() * c;
        let v = if (first - lm).norm() <= (first - lp).norm() {
            Matrix2::identity()
        } else {
            Matrix2::new(ZERO, ONE, ONE, ZERO)
        };
        (v, v.adjoint())
    };
    Ok(EigenSystem { lambda_minus: lm, lambda_plus: lp, v, v_inv })
}

/// Effective Hamiltonian with `exp(−iH) = walk_momentum_matrix(axis, θ, k)`.
pub fn hamiltonian_matrix(axis: PauliAxis, theta: f64, k: f64) -> Result<Matrix2> {
    hamiltonian_matrix_with_tolerance(axis, theta, k, DEGENERACY_TOLERANCE)
}

/// Closed form
/// `H = ln(λ+/λ−) / (2√(cos²θcos²k − 1)) · M_axis(θ, k) · σ_axis`.
///
/// The logarithm is evaluated as `ln λ+ − ln λ−` (both principal). Taking the
/// principal log of the ratio instead shifts both eigenphases by π once
/// they exceed π/2, which makes `exp(−iH) = −W`.
pub fn hamiltonian_matrix_with_tolerance(axis: PauliAxis, theta: f64, k: f64, tol: f64) -> Result<Matrix2> {
    if is_degenerate(theta, k, tol) {
        return Err(WalkError::Degenerate { theta, k });
    }
    let (lm, lp, root) = eigenvalues(theta, k);
    let prefactor = (lp.ln() - lm.ln()) / (root * 2.0);
    let (c, s) = (theta.cos(), theta.sin());
    let (sk, ck) = (k.sin(), k.cos());
    let re = |x: f64| Complex::from(x);
    let diag_lo = Complex::new(c * sk, -ck * s);
    let diag_hi = Complex::new(c * sk, ck * s);
    let body = match axis {
        PauliAxis::Z => {
            Matrix2::new(re(c * sk), Complex::new(-s * sk, -s * ck), Complex::new(s * sk, -s * ck), re(c * sk))
        }
        PauliAxis::X => Matrix2::new(diag_lo, re(s * sk), re(-s * sk), diag_hi),
        PauliAxis::Y => Matrix2::new(diag_lo, Complex::new(0.0, -s * sk), Complex::new(0.0, -s * sk), diag_hi),
    };
    Ok((body * pauli_matrix(axis)).scale(prefactor))
}

/// Coinless limit `H(0) = k·σ_axis`, valid for every `k`.
pub fn theta0_hamiltonian(axis: PauliAxis, k: f64) -> Matrix2 {
    pauli_matrix(axis).scale(k.into())
}

/// Quasi-momentum on the triangular lattice labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularMomentum {
    pub kx: f64,
    pub ky: f64,
    pub kz: f64,
}

impl TriangularMomentum {
    /// Momenta conjugate to the X, Y and Z sub-step displacements:
    /// `k₁ = 2kx + ky − kz`, `k₂ = −kx + 2ky + kz`, `k₃ = −kx + ky + 2kz`.
    pub fn combined(&self) -> [f64; 3] {
        let TriangularMomentum { kx, ky, kz } = *self;
        [2.0 * kx + ky - kz, -kx + 2.0 * ky + kz, -kx + ky + 2.0 * kz]
    }
}

/// Full triangular step at momentum `q`: product of the sub-step matrices,
/// `ordering[0]` acting first.
pub fn triangular_walk_matrix(thetas: [f64; 3], ordering: &[PauliAxis], q: &TriangularMomentum) -> Matrix2 {
    let k = q.combined();
    ordering
        .iter()
        .fold(Matrix2::identity(), |acc, &axis| walk_momentum_matrix(axis, thetas[axis.index()], k[axis.index()]) * acc)
}

/// `[H′_X, H′_Y, H′_Z]` at `q`, or `None` if any sub-step is degenerate.
pub fn triangular_hamiltonians(thetas: [f64; 3], q: &TriangularMomentum, tol: f64) -> Option<[Matrix2; 3]> {
    let k = q.combined();
    let mut out = [Matrix2::zero(); 3];
    for axis in PauliAxis::ALL {
        let h = hamiltonian_matrix_with_tolerance(axis, thetas[axis.index()], k[axis.index()], tol).ok()?;
        if !h.is_finite() {
            return None;
        }
        out[axis.index()] = h;
    }
    Some(out)
}

/// Commutators of the three triangular sub-step Hamiltonians and the residual
/// of replacing the step by `exp(−i(H′_X + H′_Y + H′_Z))`, over a momentum grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub thetas: [f64; 3],
    pub grid_size: usize,
    pub evaluated: usize,
    pub skipped: usize,
    /// Pair order: (X,Y), (X,Z), (Y,Z).
    pub max_commutator: [f64; 3],
    pub mean_commutator: [f64; 3],
    pub max_residual: f64,
    pub mean_residual: f64,
}

pub const COMMUTATOR_PAIRS: [(PauliAxis, PauliAxis); 3] =
    [(PauliAxis::X, PauliAxis::Y), (PauliAxis::X, PauliAxis::Z), (PauliAxis::Y, PauliAxis::Z)];

/// Grid points `−π + 2πj/n`, `j = 0..n`, along each of kx, ky, kz.
pub fn momentum_grid(n: usize) -> Vec<TriangularMomentum> {
    let axis: Vec<f64> = (0..n).map(|j| -PI + 2.0 * PI * j as f64 / n as f64).collect();
    let mut out = Vec::with_capacity(n * n * n);
    for &kx in &axis {
        for &ky in &axis {
            for &kz in &axis {
                out.push(TriangularMomentum { kx, ky, kz });
            }
        }
    }
    out
}

/// Measures, without asserting, how far the triangular sub-step Hamiltonians
/// are from commuting. The step matrix uses the default Z, Y, X order.
pub fn triangular_commutator_report(thetas: [f64; 3], grid_size: usize, tol: f64) -> CommutatorReport {
    let ordering = [PauliAxis::Z, PauliAxis::Y, PauliAxis::X];
    let mut report = CommutatorReport {
        thetas,
        grid_size,
        evaluated: 0,
        skipped: 0,
        max_commutator: [0.0; 3],
        mean_commutator: [0.0; 3],
        max_residual: 0.0,
        mean_residual: 0.0,
    };
    for q in momentum_grid(grid_size) {
        let Some(h) = triangular_hamiltonians(thetas, &q, tol) else {
            report.skipped += 1;
            continue;
        };
        report.evaluated += 1;
        for (slot, (a, b)) in COMMUTATOR_PAIRS.iter().enumerate() {
            let norm = h[a.index()].commutator(&h[b.index()]).frobenius_norm();
            report.max_commutator[slot] = report.max_commutator[slot].max(norm);
            report.mean_commutator[slot] += norm;
        }
        let total = h[0] + h[1] + h[2];
        let residual = (total.scale(-I).exp() - triangular_walk_matrix(thetas, &ordering, &q)).frobenius_norm();
        report.max_residual = report.max_residual.max(residual);
        report.mean_residual += residual;
    }
    if report.evaluated > 0 {
        let n = report.evaluated as f64;
        report.mean_commutator = report.mean_commutator.map(|s| s / n);
        report.mean_residual /= n;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_2;

    fn residual(a: &Matrix2, b: &Matrix2) -> f64 {
        (*a - *b).frobenius_norm()
    }

    #[test]
    fn coinless_z_matrix_is_diagonal_phase() {
        let k = 0.7;
        let w = walk_momentum_matrix(PauliAxis::Z, 0.0, k);
        let want = Matrix2::diag(Complex::from_polar(1.0, -k), Complex::from_polar(1.0, k));
        assert!(residual(&w, &want) < 1e-15);
    }

    #[test]
    fn z_matrix_matches_expanded_form() {
        let (theta, k) = (0.4_f64, -1.3);
        let (c, s) = (theta.cos(), theta.sin());
        let (em, ep) = (Complex::from_polar(1.0, -k), Complex::from_polar(1.0, k));
        let want = Matrix2::new(em * c, em * s, ep * (-s), ep * c);
        assert!(residual(&walk_momentum_matrix(PauliAxis::Z, theta, k), &want) < 1e-15);
    }

    #[test]
    fn x_matrix_matches_expanded_form() {
        let (theta, k) = (0.4_f64, 2.2);
        let (c, s) = (theta.cos(), theta.sin());
        let half_em = Complex::from_polar(0.5, -k);
        let half_ep = Complex::from_polar(0.5, k);
        let want = Matrix2::from_real(c + s, c - s, c + s, c - s).scale(half_em)
            + Matrix2::from_real(c - s, -c - s, -c + s, c + s).scale(half_ep);
        assert!(residual(&walk_momentum_matrix(PauliAxis::X, theta, k), &want) < 1e-15);
    }

    #[test]
    fn y_matrix_matches_expanded_form() {
        // Lower-left entry of the e^{+ik} block is i(sinθ − cosθ).
        let (theta, k) = (0.4_f64, 2.2);
        let (c, s) = (theta.cos(), theta.sin());
        let i = I;
        let first = Matrix2::new((c + s).into(), i * (s - c), i * (c + s), (c - s).into());
        let second = Matrix2::new((c - s).into(), i * (c + s), i * (s - c), (c + s).into());
        let want = first.scale(Complex::from_polar(0.5, -k)) + second.scale(Complex::from_polar(0.5, k));
        assert!(residual(&walk_momentum_matrix(PauliAxis::Y, theta, k), &want) < 1e-15);
    }

    #[test]
    fn coinless_x_eigenvectors_are_sigma1_basis() {
        let k = 0.9;
        let w = walk_momentum_matrix(PauliAxis::X, 0.0, k);
        let (p, m) = pauli_eigenbasis(PauliAxis::X);
        assert!(((w * p) - p.scale(Complex::from_polar(1.0, -k))).norm_sqr() < 1e-30);
        assert!(((w * m) - m.scale(Complex::from_polar(1.0, k))).norm_sqr() < 1e-30);
    }

    #[test]
    fn eigenvalues_special_angles() {
        for k in [-2.5, -0.3, 0.4, 1.9] {
            let es = eigensystem(0.0, k).unwrap();
            // The +i√|·| branch labels λ− = e^{−i|k|}; for k < 0 the pair swaps.
            let (em, ep) = (Complex::from_polar(1.0, -k), Complex::from_polar(1.0, k));
            let (want_minus, want_plus) = if k > 0.0 { (em, ep) } else { (ep, em) };
            assert!((es.lambda_minus - want_minus).norm() < 1e-15);
            assert!((es.lambda_plus - want_plus).norm() < 1e-15);
            assert!(residual(&es.reconstruct(), &walk_momentum_matrix(PauliAxis::Z, 0.0, k)) < 1e-14);
            let es = eigensystem(FRAC_PI_2, k).unwrap();
            assert!((es.lambda_minus - Complex::new(0.0, -1.0)).norm() < 1e-15);
            assert!((es.lambda_plus - Complex::new(0.0, 1.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn eigensystem_reconstructs() {
        for (theta, k) in [(0.3, 0.5), (1.1, -2.0), (-0.7, 2.9), (0.2, -0.1)] {
            let es = eigensystem(theta, k).unwrap();
            assert!((es.lambda_minus * es.lambda_plus - ONE).norm() < 1e-12);
            assert!((es.v * es.v_inv - Matrix2::identity()).frobenius_norm() < 1e-12);
            assert!(residual(&es.reconstruct(), &walk_momentum_matrix(PauliAxis::Z, theta, k)) < 1e-10);
        }
    }

    #[test]
    fn degenerate_points_error() {
        assert_eq!(eigensystem(0.0, 0.0), Err(WalkError::Degenerate { theta: 0.0, k: 0.0 }));
        assert!(hamiltonian_matrix(PauliAxis::X, PI, 0.0).is_err());
        assert!(hamiltonian_matrix_with_tolerance(PauliAxis::Z, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn hamiltonian_round_trip_at_printed_momenta() {
        let theta = PI / 12.0;
        for k in [2.0, -2.0, 1.0, -1.0, 0.5] {
            for axis in PauliAxis::ALL {
                let h = hamiltonian_matrix(axis, theta, k).unwrap();
                assert!(h.hermiticity_residual() < 1e-10);
                let w = walk_momentum_matrix(axis, theta, k);
                assert!(residual(&h.scale(-I).exp(), &w) < 1e-8, "{axis} {k}");
            }
        }
    }

    #[test]
    fn coinless_reductions() {
        let k = 0.8;
        let hz = hamiltonian_matrix(PauliAxis::Z, 0.0, k).unwrap();
        assert!(residual(&hz, &Matrix2::diag(k.into(), (-k).into())) < 1e-12);
        let hx = hamiltonian_matrix(PauliAxis::X, 0.0, k).unwrap();
        assert!(residual(&hx, &pauli_matrix(PauliAxis::X).scale(k.into())) < 1e-12);
        for axis in PauliAxis::ALL {
            assert_eq!(theta0_hamiltonian(axis, 0.0), Matrix2::zero());
            let k = PI / 3.0;
            let w = walk_momentum_matrix(axis, 0.0, k);
            assert!(residual(&theta0_hamiltonian(axis, k).scale(-I).exp(), &w) < 1e-12);
        }
    }

    #[test]
    fn triangular_combined_momenta() {
        let q = TriangularMomentum { kx: 0.1, ky: 0.2, kz: 0.3 };
        let [k1, k2, k3] = q.combined();
        assert!((k1 - (0.2 + 0.2 - 0.3)).abs() < 1e-15);
        assert!((k2 - (-0.1 + 0.4 + 0.3)).abs() < 1e-15);
        assert!((k3 - (-0.1 + 0.2 + 0.6)).abs() < 1e-15);
    }

    #[test]
    fn commutator_report_counts_every_grid_point() {
        let report = triangular_commutator_report([0.0; 3], 5, DEGENERACY_TOLERANCE);
        assert_eq!(report.evaluated + report.skipped, 125);
        assert!(report.evaluated > 0);
        assert!(report.max_residual.is_finite());
    }

    #[test]
    fn coinless_single_point_commutator() {
        // With θ = 0, H′_X = k₁σ1 and H′_Z = k₃σ3, so [H′_X, H′_Z] = −2i k₁k₃ σ2.
        let q = TriangularMomentum { kx: 0.3, ky: -0.2, kz: 0.5 };
        let [k1, _, k3] = q.combined();
        let h = triangular_hamiltonians([0.0; 3], &q, DEGENERACY_TOLERANCE).unwrap();
        let got = h[0].commutator(&h[2]);
        let want = pauli_matrix(PauliAxis::Y).scale(Complex::new(0.0, -2.0 * k1 * k3));
        assert!(residual(&got, &want) < 1e-12);
    }
}
