#![allow(dead_code)]

use num_complex::Complex64;
use schur_opuc::grid_fourier::UnitGrid;
use schur_opuc::rational_hardy::{RationalFn, Root};
use schur_opuc::triples::{schur_to_measure, Atom, CircleMeasure, SchurFn};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn r(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `(ζ − a)/(1 − āζ)` as a rational function.
pub fn blaschke_factor(a: Complex64) -> RationalFn {
    RationalFn::new(vec![-a, r(1.0)], vec![r(1.0), -a.conj()]).unwrap()
}

fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut p = vec![r(1.0)];
    for &a in roots {
        let mut next = vec![r(0.0); p.len() + 1];
        for (k, &v) in p.iter().enumerate() {
            next[k + 1] += v;
            next[k] -= a * v;
        }
        p = next;
    }
    p
}

fn rational(num: Vec<Complex64>, den: Vec<Complex64>) -> SchurFn {
    SchurFn::rational(RationalFn::new(num, den).unwrap()).unwrap()
}

/// Twelve rational non-inner Schur functions with a name for reporting.
pub fn positive_suite() -> Vec<(&'static str, SchurFn)> {
    let b05 = blaschke_factor(r(0.5));
    let b03i = blaschke_factor(c(0.0, 0.3));
    let bm04 = blaschke_factor(r(-0.4));
    let zeta = RationalFn::identity();
    let mut out = vec![
        ("0", SchurFn::Constant(r(0.0))),
        ("1/2", SchurFn::Constant(r(0.5))),
        ("0.3+0.4i", SchurFn::Constant(c(0.3, 0.4))),
        ("zeta/2", rational(vec![r(0.0), r(0.5)], vec![r(1.0)])),
        ("0.3*B(0.5)", SchurFn::rational(b05.scale(r(0.3))).unwrap()),
        (
            "0.5*B(0.3i)*B(-0.4)",
            SchurFn::rational(b03i.mul(&bm04).unwrap().scale(r(0.5))).unwrap(),
        ),
        ("0.6*zeta^2", rational(vec![r(0.0), r(0.0), r(0.6)], vec![r(1.0)])),
        (
            "(0.2+0.3z)/(1-0.4z)",
            rational(vec![r(0.2), r(0.3)], vec![r(1.0), r(-0.4)]),
        ),
        (
            "(0.1+0.2z+0.3z^2)/(1+0.2z)",
            rational(vec![r(0.1), r(0.2), r(0.3)], vec![r(1.0), r(0.2)]),
        ),
        (
            "0.4*zeta*B(0.5)",
            SchurFn::rational(zeta.mul(&b05).unwrap().scale(r(0.4))).unwrap(),
        ),
        (
            "0.25-0.25*zeta^3",
            rational(vec![r(0.25), r(0.0), r(0.0), r(-0.25)], vec![r(1.0)]),
        ),
        (
            "(0.3+0.2iz)/((1-0.3z)(1+0.2iz))",
            rational(
                vec![r(0.3), c(0.0, 0.2)],
                poly_from_roots(&[r(1.0 / 0.3), c(0.0, 5.0)])
                    .into_iter()
                    .map(|v| v * r(0.3) * c(0.0, -0.2))
                    .collect(),
            ),
        ),
    ];
    for (name, f) in &mut out {
        if let SchurFn::Rational(rf) = f {
            assert!(rf.den().len() <= 4, "{name}");
        }
    }
    out
}

pub const BS_GAMMAS: [(f64, f64); 4] = [(0.5, 0.0), (-0.3, 0.0), (0.2, 0.6), (0.0, 0.7)];

/// `exp(ζ − 1)` truncated to `len` Taylor coefficients.
pub fn exp_control(len: usize) -> SchurFn {
    let e = (-1.0f64).exp();
    let mut coeffs = Vec::with_capacity(len);
    let mut fact = 1.0;
    for k in 0..len {
        if k > 0 {
            fact *= k as f64;
        }
        coeffs.push(r(e / fact));
    }
    SchurFn::taylor(coeffs).unwrap()
}

pub fn mixture(grid: &UnitGrid) -> CircleMeasure {
    let n = grid.n();
    CircleMeasure::new(grid, vec![0.5; n], vec![Atom { index: 0, mass: 0.5 }]).unwrap()
}

/// Named measures used across tests: Lebesgue, the mixture `½m + ½δ₁`, the
/// Bernstein-Szegő family and the measure of `ζ/2`.
pub fn suite_measures(grid: &UnitGrid) -> Vec<(String, CircleMeasure)> {
    let mut out = vec![
        ("lebesgue".to_string(), CircleMeasure::lebesgue(grid)),
        ("mixture".to_string(), mixture(grid)),
    ];
    for (re, im) in BS_GAMMAS {
        out.push((
            format!("bernstein-szego({re}{im:+}i)"),
            CircleMeasure::bernstein_szego(grid, c(re, im)).unwrap(),
        ));
    }
    let half_zeta = SchurFn::rational(RationalFn::new(vec![r(0.0), r(0.5)], vec![r(1.0)]).unwrap()).unwrap();
    out.push(("zeta/2".to_string(), schur_to_measure(&half_zeta, grid).unwrap()));
    out
}

pub fn roots(values: &[Complex64]) -> Vec<Root> {
    values
        .iter()
        .map(|&value| Root {
            value,
            multiplicity: 1,
        })
        .collect()
}
