//! Named verification checks behind `walk verify`.
//!
//! Every check returns its measured residuals as JSON whether or not it
//! passes. The commutator report is measured, not asserted: it passes when
//! every grid point was either evaluated or explicitly skipped as degenerate.

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_4, PI};
use std::time::{Duration, Instant};

use pauliwalk_core::analysis::symmetry::{bounding_center2, relating_involutions, Involution};
use pauliwalk_core::analysis::{diagonal_variances, distribution, max_abs_diff, to_step_counts, Distribution};
use pauliwalk_core::grover::{grover_evolve, grover_evolve_field};
use pauliwalk_core::lattice::Sign;
use pauliwalk_core::momentum::{
    degeneracy_gap, eigensystem, hamiltonian_matrix, theta0_hamiltonian, triangular_commutator_report,
    walk_momentum_matrix,
};
use pauliwalk_core::recursion::{
    grover_recursion, matching_maps, two_state_recursion, CoordinateMap, GroverRecursionVariant,
};
use pauliwalk_core::spinor::Complex;
use pauliwalk_core::{
    evolve, initial_state, step, LatticeKind, LatticeSpec, PauliAxis, Position, Spinor2, SpinorField, WalkConfig,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Distribution,
    Oracle,
    Hamiltonian,
}

pub const CHECKS: [(&str, Group); 10] = [
    ("normalization", Group::Distribution),
    ("unitarity", Group::Oracle),
    ("grover-equivalence", Group::Oracle),
    ("recursion", Group::Oracle),
    ("hamiltonian", Group::Hamiltonian),
    ("eigenvalues", Group::Hamiltonian),
    ("triangular-mirror", Group::Distribution),
    ("triangular-symmetric", Group::Distribution),
    ("squeezing", Group::Distribution),
    ("commutator-report", Group::Hamiltonian),
];

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(n, _)| *n)
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub details: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub degenerate_tolerance: f64,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn failed(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.to_string()).collect()
    }
}

pub fn run_checks(names: &[&'static str], degenerate_tolerance: f64) -> Report {
    let checks: Vec<CheckOutcome> = names
        .iter()
        .map(|&name| {
            let (passed, details) = match name {
                "normalization" => normalization(),
                "unitarity" => unitarity(),
                "grover-equivalence" => grover_equivalence(),
                "recursion" => recursion(),
                "hamiltonian" => hamiltonian(),
                "eigenvalues" => eigenvalues(),
                "triangular-mirror" => triangular_mirror(),
                "triangular-symmetric" => triangular_symmetric(),
                "squeezing" => squeezing(),
                "commutator-report" => commutator_report(degenerate_tolerance),
                other => unreachable!("unvalidated check name {other}"),
            };
            CheckOutcome { name, passed, details }
        })
        .collect();
    Report {
        tool: "walk",
        version: env!("CARGO_PKG_VERSION"),
        degenerate_tolerance,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn config(kind: LatticeKind, steps: usize, thetas: [f64; 3], spin: Spinor2) -> WalkConfig {
    WalkConfig::new(kind, steps, thetas, spin).expect("built-in configuration")
}

fn run(kind: LatticeKind, steps: usize, thetas: [f64; 3], spin: Spinor2) -> Distribution {
    distribution(&evolve(&config(kind, steps, thetas, spin)).expect("built-in configuration"))
}

/// Every lattice, θ ∈ {0, π/12, π/4}, every t ≤ 30.
fn normalization() -> (bool, Value) {
    let mut worst = 0.0f64;
    let mut runs = 0;
    for kind in LatticeKind::ALL {
        for theta in [0.0, PI / 12.0, FRAC_PI_4] {
            let cfg = config(kind, 0, [theta; 3], Spinor2::plus_i());
            let mut field = initial_state(&cfg);
            for _ in 0..30 {
                field = step(&field, &cfg).expect("built-in configuration");
                worst = worst.max((distribution(&field).total() - 1.0).abs());
            }
            runs += 1;
        }
    }
    (worst < 1e-12, json!({ "runs": runs, "max_steps": 30, "max_error": worst, "tolerance": 1e-12 }))
}

/// Sites reachable from the origin within `steps` full steps.
fn reachable(spec: &LatticeSpec, steps: usize) -> BTreeSet<Position> {
    let mut frontier: BTreeSet<Position> = [Position::origin(spec.dim())].into();
    let mut seen = frontier.clone();
    for _ in 0..steps {
        let mut next = BTreeSet::new();
        for p in &frontier {
            let mut sites = vec![*p];
            for &axis in spec.ordering() {
                sites = sites
                    .iter()
                    .flat_map(|q| [Sign::Plus, Sign::Minus].map(|s| q.translate(spec.displacement(axis, s).unwrap())))
                    .collect();
            }
            next.extend(sites);
        }
        seen.extend(next.iter().copied());
        frontier = next;
    }
    seen
}

fn field_inner(a: &SpinorField, b: &SpinorField) -> Complex {
    a.entries().iter().filter_map(|(p, s)| b.get(p).map(|t| s.inner(t))).sum()
}

/// One-step images of every basis state on the ≤5-step support, checked for
/// orthonormality.
fn unitarity() -> (bool, Value) {
    let mut results = Vec::new();
    let mut worst = 0.0f64;
    for kind in [LatticeKind::Line, LatticeKind::Square, LatticeKind::Triangular] {
        for thetas in [[PI / 12.0; 3], [0.3, 0.7, 1.1]] {
            let cfg = config(kind, 1, thetas, Spinor2::spin_down());
            let sites = reachable(&cfg.lattice, 5);
            let columns: Vec<SpinorField> = sites
                .iter()
                .flat_map(|&p| [Spinor2::spin_down(), Spinor2::spin_up()].map(|s| SpinorField::point(p, s)))
                .map(|f| step(&f, &cfg).expect("built-in configuration"))
                .collect();
            let mut residual = 0.0f64;
            for (i, a) in columns.iter().enumerate() {
                for (j, b) in columns.iter().enumerate().skip(i) {
                    let want = if i == j { 1.0 } else { 0.0 };
                    residual = residual.max((field_inner(a, b) - want).norm());
                }
            }
            worst = worst.max(residual);
            results.push(
                json!({ "lattice": kind.name(), "thetas": thetas, "columns": columns.len(), "residual": residual }),
            );
        }
    }
    (worst < 1e-12, json!({ "support_steps": 5, "max_residual": worst, "tolerance": 1e-12, "runs": results }))
}

fn grover_equivalence() -> (bool, Value) {
    let diff_at = |t: usize| {
        let two_state = run(LatticeKind::Square, t, [0.0; 3], Spinor2::plus_i());
        max_abs_diff(&two_state, &grover_evolve(t))
    };
    let d25 = diff_at(25);
    let start = Instant::now();
    let d50 = diff_at(50);
    let fast = start.elapsed() < Duration::from_secs(10);
    (
        d25 < 1e-10 && d50 < 1e-10 && fast,
        json!({ "max_abs_diff_t25": d25, "max_abs_diff_t50": d50, "t50_under_10s": fast, "tolerance": 1e-10 }),
    )
}

fn recursion() -> (bool, Value) {
    let init = Spinor2::plus_i();
    let table = two_state_recursion(10, init);
    let field = |t| evolve(&config(LatticeKind::Square, t, [0.0; 3], init)).expect("built-in configuration");
    let reference = |f: &SpinorField| f.entries().iter().map(|(p, s)| (*p, [s.down, s.up])).collect::<Vec<_>>();
    let maps = matching_maps(&table, 1, &reference(&field(1)), 1e-12);
    let two_state = maps.first().map(|&map| {
        (0..=10).map(|t| max_abs_diff(&table.distribution(t, map), &distribution(&field(t)))).fold(0.0, f64::max)
    });

    let grover = grover_recursion(10, GroverRecursionVariant::IndexConsistent);
    let gref = |t| grover_evolve_field(t).entries().iter().map(|(p, s)| (*p, s.0)).collect::<Vec<_>>();
    let gmaps = matching_maps(&grover, 1, &gref(1), 1e-12);
    let grover_diff = gmaps.first().map(|&map| {
        (0..=10).map(|t| max_abs_diff(&grover.distribution(t, map), &grover_evolve(t))).fold(0.0, f64::max)
    });
    let verbatim = grover_recursion(10, GroverRecursionVariant::Verbatim);
    let verbatim_diff = max_abs_diff(
        &verbatim.distribution(10, gmaps.first().copied().unwrap_or(CoordinateMap::IDENTITY)),
        &grover_evolve(10),
    );

    let ok = |d: Option<f64>| d.is_some_and(|d| d < 1e-10);
    (
        maps.len() == 1 && gmaps.len() == 1 && ok(two_state) && ok(grover_diff),
        json!({
            "max_steps": 10,
            "tolerance": 1e-10,
            "two_state": {
                "correspondence": maps.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "max_abs_diff": two_state,
            },
            "grover": {
                "variant": GroverRecursionVariant::IndexConsistent.to_string(),
                "correspondence": gmaps.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "max_abs_diff": grover_diff,
                "verbatim_max_abs_diff_t10": verbatim_diff,
            },
        }),
    )
}

/// Low-discrepancy points on `[−π, π)²`.
fn weyl(n: usize) -> (f64, f64) {
    const A1: f64 = 0.754_877_666_246_692_8;
    const A2: f64 = 0.569_840_290_998_053_2;
    let frac = |x: f64| x - x.floor();
    let n = n as f64;
    (2.0 * PI * frac(0.5 + n * A1) - PI, 2.0 * PI * frac(0.5 + n * A2) - PI)
}

/// 100 `(θ, k)` points with `|cos²θcos²k − 1| > 1e-6`.
fn samples() -> Vec<(f64, f64)> {
    (1..).map(weyl).filter(|&(t, k)| degeneracy_gap(t, k) > 1e-6).take(100).collect()
}

fn hamiltonian() -> (bool, Value) {
    let neg_i = Complex::new(0.0, -1.0);
    let mut per_axis = serde_json::Map::new();
    let (mut round_trip, mut hermiticity) = (0.0f64, 0.0f64);
    for axis in PauliAxis::ALL {
        let (mut rt, mut herm) = (0.0f64, 0.0f64);
        for &(theta, k) in &samples() {
            let h = hamiltonian_matrix(axis, theta, k).expect("sample is non-degenerate");
            rt = rt.max((h.scale(neg_i).exp() - walk_momentum_matrix(axis, theta, k)).frobenius_norm());
            herm = herm.max(h.hermiticity_residual());
        }
        per_axis.insert(axis.to_string(), json!({ "round_trip": rt, "hermiticity": herm }));
        round_trip = round_trip.max(rt);
        hermiticity = hermiticity.max(herm);
    }
    let reconstruction = samples()
        .iter()
        .map(|&(t, k)| {
            let sys = eigensystem(t, k).expect("sample is non-degenerate");
            (sys.reconstruct() - walk_momentum_matrix(PauliAxis::Z, t, k)).frobenius_norm()
        })
        .fold(0.0, f64::max);
    let (mut closed_form, mut closed_form_exp) = (0.0f64, 0.0f64);
    for axis in PauliAxis::ALL {
        for &(_, k) in &samples() {
            let h0 = theta0_hamiltonian(axis, k);
            closed_form_exp =
                closed_form_exp.max((h0.scale(neg_i).exp() - walk_momentum_matrix(axis, 0.0, k)).frobenius_norm());
            if let Ok(h) = hamiltonian_matrix(axis, 0.0, k) {
                closed_form = closed_form.max((h - h0).frobenius_norm());
            }
        }
    }
    let passed = round_trip < 1e-8
        && hermiticity < 1e-10
        && reconstruction < 1e-10
        && closed_form < 1e-12
        && closed_form_exp < 1e-12;
    (
        passed,
        json!({
            "samples": 100,
            "min_gap": 1e-6,
            "max_round_trip": round_trip,
            "max_hermiticity": hermiticity,
            "max_reconstruction": reconstruction,
            "theta0_closed_form": closed_form,
            "theta0_closed_form_exp": closed_form_exp,
            "axes": per_axis,
        }),
    )
}

fn pair_distance(a: [Complex; 2], b: [Complex; 2]) -> f64 {
    let straight = (a[0] - b[0]).norm().max((a[1] - b[1]).norm());
    let crossed = (a[0] - b[1]).norm().max((a[1] - b[0]).norm());
    straight.min(crossed)
}

fn eigenvalues() -> (bool, Value) {
    let (mut product, mut modulus, mut spectral) = (0.0f64, 0.0f64, 0.0f64);
    for &(theta, k) in &samples() {
        let sys = eigensystem(theta, k).expect("sample is non-degenerate");
        let (lm, lp) = (sys.lambda_minus, sys.lambda_plus);
        product = product.max((lm * lp - 1.0).norm());
        modulus = modulus.max((lm.norm() - 1.0).abs()).max((lp.norm() - 1.0).abs());
        for axis in PauliAxis::ALL {
            let ev = walk_momentum_matrix(axis, theta, k).eigenvalues();
            spectral = spectral.max(pair_distance(ev, [lm, lp]));
        }
    }
    let (mut theta0_pair, mut theta0_ordered) = (0.0f64, 0.0f64);
    for &(_, k) in &samples() {
        let Ok(sys) = eigensystem(0.0, k) else { continue };
        let want = [Complex::from_polar(1.0, -k), Complex::from_polar(1.0, k)];
        theta0_pair = theta0_pair.max(pair_distance([sys.lambda_minus, sys.lambda_plus], want));
        if k > 0.0 {
            theta0_ordered =
                theta0_ordered.max((sys.lambda_minus - want[0]).norm().max((sys.lambda_plus - want[1]).norm()));
        }
    }
    let passed =
        product < 1e-12 && modulus < 1e-12 && spectral < 1e-10 && theta0_pair < 1e-12 && theta0_ordered < 1e-12;
    (
        passed,
        json!({
            "samples": 100,
            "max_product_residual": product,
            "max_modulus_residual": modulus,
            "max_spectral_residual": spectral,
            "theta0_unordered_residual": theta0_pair,
            "theta0_ordered_residual_k_positive": theta0_ordered,
        }),
    )
}

fn names(found: &[(Involution, f64)]) -> Vec<String> {
    found.iter().map(|(g, _)| g.to_string()).collect()
}

/// Confirms at t = 20 every involution found at t = 3; returns the worst residual.
fn confirm(found: &[(Involution, f64)], from: &Distribution, to: &Distribution, center2: &[i64; 3]) -> Option<f64> {
    found
        .iter()
        .map(|(g, _)| g.map(from, center2).map(|m| max_abs_diff(&m, to)))
        .try_fold(0.0f64, |acc, r| r.map(|r| acc.max(r)))
}

fn triangular_mirror() -> (bool, Value) {
    let pair = |t| {
        (
            run(LatticeKind::Triangular, t, [0.0; 3], Spinor2::spin_down()),
            run(LatticeKind::Triangular, t, [0.0; 3], Spinor2::spin_up()),
        )
    };
    let (down3, up3) = pair(3);
    let found = relating_involutions(&down3, &up3, &[0; 3], 1e-10);
    let (down20, up20) = pair(20);
    let residual = confirm(&found, &down20, &up20, &[0; 3]);
    (
        !found.is_empty() && residual.is_some_and(|r| r < 1e-10),
        json!({ "centre": "origin", "found_at_t3": names(&found), "residual_t20": residual, "tolerance": 1e-10 }),
    )
}

fn triangular_symmetric() -> (bool, Value) {
    let thetas = [0.0, FRAC_PI_4, 0.0];
    let in_counts = |t| {
        let cfg = config(LatticeKind::Triangular, t, thetas, Spinor2::spin_down());
        let d = distribution(&evolve(&cfg).expect("built-in configuration"));
        let counts =
            to_step_counts(&d, &cfg.lattice, &cfg.initial_position).expect("triangular sites have step counts");
        (d, counts)
    };
    let (raw3, counts3) = in_counts(3);
    let raw_found = relating_involutions(&raw3, &raw3, &bounding_center2(&raw3), 1e-10);
    let center3 = bounding_center2(&counts3);
    let found = relating_involutions(&counts3, &counts3, &center3, 1e-10);
    let (_, counts20) = in_counts(20);
    let center20 = bounding_center2(&counts20);
    let residual = confirm(&found, &counts20, &counts20, &center20);
    (
        !found.is_empty() && residual.is_some_and(|r| r < 1e-10),
        json!({
            "thetas": thetas,
            "frame": "step counts (X, Y, Z) about the bounding-box centre",
            "found_at_t3": names(&found),
            "raw_label_symmetries_t3": names(&raw_found),
            "centre2_t20": center20,
            "residual_t20": residual,
            "tolerance": 1e-10,
        }),
    )
}

fn squeezing() -> (bool, Value) {
    let ratio = |theta: f64| {
        let d = run(LatticeKind::Square, 50, [theta; 3], Spinor2::plus_i());
        let (diag, anti) = diagonal_variances(&d).expect("square distribution");
        (diag.max(anti) / diag.min(anti), diag, anti)
    };
    let (squeezed, sd, sa) = ratio(PI / 12.0);
    let (plain, pd, pa) = ratio(0.0);
    (
        squeezed > 1.5 && plain < 1.05,
        json!({
            "steps": 50,
            "theta_pi_12": { "var_diag": sd, "var_antidiag": sa, "ratio": squeezed, "threshold": 1.5 },
            "theta_0": { "var_diag": pd, "var_antidiag": pa, "ratio": plain, "threshold": 1.05 },
        }),
    )
}

fn commutator_report(tol: f64) -> (bool, Value) {
    let mut complete = true;
    let reports: Vec<Value> = [0.0, PI / 12.0]
        .into_iter()
        .map(|theta| {
            let r = triangular_commutator_report([theta; 3], 5, tol);
            let finite = r.max_commutator.iter().chain(&r.mean_commutator).all(|x| x.is_finite())
                && r.max_residual.is_finite()
                && r.mean_residual.is_finite();
            complete &= r.evaluated + r.skipped == 125 && r.evaluated > 0 && finite;
            json!({
                "theta": theta,
                "grid": [5, 5, 5],
                "evaluated": r.evaluated,
                "skipped_degenerate": r.skipped,
                "max_commutator_xy_xz_yz": r.max_commutator,
                "mean_commutator_xy_xz_yz": r.mean_commutator,
                "max_exp_sum_residual": r.max_residual,
                "mean_exp_sum_residual": r.mean_residual,
            })
        })
        .collect();
    (complete, json!({ "asserted": "completeness", "reports": reports }))
}
