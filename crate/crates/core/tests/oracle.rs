//! Cross-checks of the engine against independently built operators: a dense
//! projector-form step, the closed amplitude recursions and the momentum-space
//! matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use pauliwalk_core::analysis::{distribution, max_abs_diff};
use pauliwalk_core::grover::grover_evolve_field;
use pauliwalk_core::lattice::Sign;
use pauliwalk_core::momentum::{triangular_walk_matrix, walk_momentum_matrix, TriangularMomentum};
use pauliwalk_core::recursion::{
    grover_recursion, matching_maps, two_state_recursion, CoordinateMap, GroverRecursionVariant,
};
use pauliwalk_core::{
    apply_substep, evolve, lattice_spec, step, Complex, LatticeKind, LatticeSpec, Matrix2, PauliAxis, Position,
    Spinor2, SpinorField, WalkConfig,
};

type Vector = BTreeMap<(Position, usize), Complex>;

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// `(+, −)` eigenvectors written out by hand.
fn eigenvectors(axis: PauliAxis) -> ([Complex; 2], [Complex; 2]) {
    let h = FRAC_1_SQRT_2;
    match axis {
        PauliAxis::Z => ([c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]),
        PauliAxis::X => ([c(h, 0.0), c(h, 0.0)], [c(h, 0.0), c(-h, 0.0)]),
        PauliAxis::Y => ([c(h, 0.0), c(0.0, h)], [c(h, 0.0), c(0.0, -h)]),
    }
}

fn outer(a: &[Complex; 2], b: &[Complex; 2]) -> [[Complex; 2]; 2] {
    let mut m = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = a[i] * b[j].conj();
        }
    }
    m
}

fn mat_mul(a: &[[Complex; 2]; 2], b: &[[Complex; 2]; 2]) -> [[Complex; 2]; 2] {
    let mut m = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

/// `P± · B(θ)` with `B = cosθ(P+ + P−) + sinθ(|+⟩⟨−| − |−⟩⟨+|)`.
fn projected_coins(axis: PauliAxis, theta: f64) -> [[[Complex; 2]; 2]; 2] {
    let (plus, minus) = eigenvectors(axis);
    let (pp, mm) = (outer(&plus, &plus), outer(&minus, &minus));
    let (pm, mp) = (outer(&plus, &minus), outer(&minus, &plus));
    let mut coin = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            coin[i][j] = (pp[i][j] + mm[i][j]) * theta.cos() + (pm[i][j] - mp[i][j]) * theta.sin();
        }
    }
    [mat_mul(&pp, &coin), mat_mul(&mm, &coin)]
}

fn oracle_substep(v: &Vector, axis: PauliAxis, theta: f64, spec: &LatticeSpec) -> Vector {
    let parts = projected_coins(axis, theta);
    let shifts = [spec.displacement(axis, Sign::Plus).unwrap(), spec.displacement(axis, Sign::Minus).unwrap()];
    let mut out = Vector::new();
    for (&(p, s), &a) in v {
        for (m, d) in parts.iter().zip(shifts) {
            for (row, coeffs) in m.iter().enumerate() {
                *out.entry((p.translate(d), row)).or_default() += coeffs[s] * a;
            }
        }
    }
    out.retain(|_, a| a.norm_sqr() > 0.0);
    out
}

fn oracle_step(v: &Vector, spec: &LatticeSpec, thetas: [f64; 3]) -> Vector {
    spec.ordering().iter().fold(v.clone(), |acc, &axis| oracle_substep(&acc, axis, thetas[axis.index()], spec))
}

fn to_vector(field: &SpinorField) -> Vector {
    let mut out = Vector::new();
    for (p, s) in field.entries() {
        for (i, a) in [s.down, s.up].into_iter().enumerate() {
            if a.norm_sqr() > 0.0 {
                out.insert((*p, i), a);
            }
        }
    }
    out
}

fn basis(spin: usize) -> Spinor2 {
    if spin == 0 {
        Spinor2::spin_down()
    } else {
        Spinor2::spin_up()
    }
}

fn vector_distance(a: &Vector, b: &Vector) -> f64 {
    let keys: BTreeSet<_> = a.keys().chain(b.keys()).collect();
    keys.into_iter()
        .map(|k| (a.get(k).copied().unwrap_or_default() - b.get(k).copied().unwrap_or_default()).norm())
        .fold(0.0, f64::max)
}

fn inner(a: &Vector, b: &Vector) -> Complex {
    let (small, large, conj_small) = if a.len() <= b.len() { (a, b, true) } else { (b, a, false) };
    let mut acc = Complex::default();
    for (k, x) in small {
        if let Some(y) = large.get(k) {
            acc += if conj_small { x.conj() * y } else { y.conj() * x };
        }
    }
    acc
}

/// Sites reachable from the origin in at most `steps` full steps.
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

#[test]
fn engine_matches_projector_oracle() {
    let thetas = [0.3, 0.7, 1.1];
    for kind in [LatticeKind::Line, LatticeKind::Square, LatticeKind::Cubic, LatticeKind::Triangular] {
        let spec = lattice_spec(kind);
        let init = Spinor2::from_angles(0.4, 1.3);
        let cfg = WalkConfig::new(kind, 0, thetas, init).unwrap();
        let mut field = SpinorField::point(Position::origin(kind.dim()), init);
        let mut oracle = to_vector(&field);
        for t in 1..=6 {
            field = step(&field, &cfg).unwrap();
            oracle = oracle_step(&oracle, &spec, thetas);
            let err = vector_distance(&to_vector(&field), &oracle);
            assert!(err < 1e-14, "{kind} t={t}: {err}");
        }
    }
}

#[test]
fn line_quarter_angle_two_steps() {
    let cfg = WalkConfig::new(LatticeKind::Line, 2, [FRAC_PI_4; 3], Spinor2::spin_down()).unwrap();
    let field = evolve(&cfg).unwrap();
    // Worked by hand: B|↓⟩ = (1, −1)/√2, then the ↓ part moves to −1 and ↑ to +1.
    let want = [
        (Position::line(-2), Spinor2::new(c(0.5, 0.0), c(0.0, 0.0))),
        (Position::line(0), Spinor2::new(c(-0.5, 0.0), c(-0.5, 0.0))),
        (Position::line(2), Spinor2::new(c(0.0, 0.0), c(-0.5, 0.0))),
    ];
    assert_eq!(field.len(), 3);
    for (p, s) in want {
        let got = field.get(&p).unwrap();
        assert!((got.down - s.down).norm() < 1e-15 && (got.up - s.up).norm() < 1e-15, "{p}");
    }
    let spec = lattice_spec(LatticeKind::Line);
    let start: Vector = [((Position::line(0), 0), c(1.0, 0.0))].into();
    let oracle = oracle_step(&oracle_step(&start, &spec, [FRAC_PI_4; 3]), &spec, [FRAC_PI_4; 3]);
    assert!(vector_distance(&to_vector(&field), &oracle) < 1e-15);
    let d = distribution(&field);
    assert!((d.get(&Position::line(0)) - 0.5).abs() < 1e-15);
}

#[test]
fn one_step_columns_are_orthonormal() {
    let thetas = [0.3, 0.7, 1.1];
    for kind in [LatticeKind::Line, LatticeKind::Square, LatticeKind::Triangular] {
        let spec = lattice_spec(kind);
        let cfg = WalkConfig::new(kind, 0, thetas, Spinor2::spin_down()).unwrap();
        let sites = reachable(&spec, 5);
        let mut columns = Vec::with_capacity(2 * sites.len());
        for &p in &sites {
            for spin in 0..2 {
                let start: Vector = [((p, spin), c(1.0, 0.0))].into();
                let oracle = oracle_step(&start, &spec, thetas);
                let engine = step(&SpinorField::point(p, basis(spin)), &cfg).unwrap();
                assert!(vector_distance(&to_vector(&engine), &oracle) < 1e-14);
                columns.push(oracle);
            }
        }
        let mut worst = 0.0f64;
        for (i, a) in columns.iter().enumerate() {
            for (j, b) in columns.iter().enumerate().skip(i) {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((inner(a, b) - want).norm());
            }
        }
        assert!(worst < 1e-12, "{kind}: {worst} over {} columns", columns.len());
    }
}

fn amplitude_reference(field: &SpinorField) -> Vec<(Position, [Complex; 2])> {
    field.entries().iter().map(|(p, s)| (*p, [s.down, s.up])).collect()
}

#[test]
fn two_state_recursion_matches_engine() {
    let init = Spinor2::plus_i();
    let table = two_state_recursion(10, init);
    let cfg = WalkConfig::new(LatticeKind::Square, 1, [0.0; 3], init).unwrap();
    let maps = matching_maps(&table, 1, &amplitude_reference(&evolve(&cfg).unwrap()), 1e-14);
    let swap = CoordinateMap { swap: true, negate_x: false, negate_z: false };
    assert_eq!(maps, [swap]);
    for t in 0..=10 {
        let cfg = WalkConfig::new(LatticeKind::Square, t, [0.0; 3], init).unwrap();
        let field = evolve(&cfg).unwrap();
        let diff = max_abs_diff(&table.distribution(t, swap), &distribution(&field));
        assert!(diff < 1e-10, "t={t}: {diff}");
        assert!(matching_maps(&table, t, &amplitude_reference(&field), 1e-12).contains(&swap), "t={t}");
    }
}

#[test]
fn grover_recursion_matches_engine() {
    let table = grover_recursion(10, GroverRecursionVariant::IndexConsistent);
    for t in 0..=10 {
        let field = grover_evolve_field(t);
        let reference: Vec<_> = field.entries().iter().map(|(p, s)| (*p, s.0)).collect();
        let maps = matching_maps(&table, t, &reference, 1e-12);
        assert!(maps.contains(&CoordinateMap::IDENTITY), "t={t}: {maps:?}");
        let diff = max_abs_diff(&table.distribution(t, CoordinateMap::IDENTITY), &distribution(&field));
        assert!(diff < 1e-10, "t={t}: {diff}");
    }
    let verbatim = grover_recursion(3, GroverRecursionVariant::Verbatim);
    let field = grover_evolve_field(3);
    assert!(max_abs_diff(&verbatim.distribution(3, CoordinateMap::IDENTITY), &distribution(&field)) > 1e-3);
}

fn fourier(field: &SpinorField, phase: impl Fn(&Position) -> f64) -> [Complex; 2] {
    field.entries().iter().fold([Complex::default(); 2], |acc, (p, s)| {
        let e = Complex::from_polar(1.0, phase(p));
        [acc[0] + s.down * e, acc[1] + s.up * e]
    })
}

fn momentum_columns(apply: impl Fn(Spinor2) -> SpinorField, phase: impl Fn(&Position) -> f64) -> Matrix2 {
    let a = fourier(&apply(Spinor2::spin_down()), &phase);
    let b = fourier(&apply(Spinor2::spin_up()), &phase);
    Matrix2::new(a[0], b[0], a[1], b[1])
}

#[test]
fn substep_fourier_transform_is_momentum_matrix() {
    let spec = lattice_spec(LatticeKind::Cubic);
    for axis in PauliAxis::ALL {
        let coord = axis.index();
        for (theta, k) in [(0.4, -1.3), (1.2, 0.7), (0.0, 2.9), (2.5, -3.0)] {
            let w = momentum_columns(
                |s| apply_substep(&SpinorField::point(Position::origin(3), s), axis, theta, &spec).unwrap(),
                |p| k * p.coords()[coord] as f64,
            );
            let err = (w - walk_momentum_matrix(axis, theta, k)).frobenius_norm();
            assert!(err < 1e-14, "{axis} θ={theta} k={k}: {err}");
        }
    }
}

#[test]
fn triangular_step_fourier_transform() {
    let thetas = [0.3, 0.9, 1.4];
    let cfg = WalkConfig::new(LatticeKind::Triangular, 1, thetas, Spinor2::spin_down()).unwrap();
    for q in [TriangularMomentum { kx: 0.3, ky: -1.1, kz: 2.0 }, TriangularMomentum { kx: -2.7, ky: 0.4, kz: 0.9 }] {
        let w = momentum_columns(
            |s| step(&SpinorField::point(Position::origin(3), s), &cfg).unwrap(),
            |p| {
                let c = p.coords();
                q.kx * c[0] as f64 + q.ky * c[1] as f64 + q.kz * c[2] as f64
            },
        );
        let want = triangular_walk_matrix(thetas, cfg.lattice.ordering(), &q);
        assert!((w - want).frobenius_norm() < 1e-13);
    }
}
